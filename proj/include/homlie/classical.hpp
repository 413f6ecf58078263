#ifndef HOMLIE_CLASSICAL_HPP
#define HOMLIE_CLASSICAL_HPP

#include "homlie/exterior.hpp"

namespace homlie::classical {

/// Schouten-Nijenhuis bracket of polynomial multivector fields on Q^n, with
/// e_i read as the odd coordinate dual to x_i.
Graded schouten(const Graded& p, const Graded& q);

/// phi_* of a bivector field under an affine map.
Graded pushforward(const AffineTwist& phi, const Graded& pi);

}  // namespace homlie::classical

#endif  // HOMLIE_CLASSICAL_HPP
