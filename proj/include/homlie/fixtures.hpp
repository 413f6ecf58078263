#ifndef HOMLIE_FIXTURES_HPP
#define HOMLIE_FIXTURES_HPP

#include "homlie/homalg.hpp"

namespace homlie::fixtures {

/// phi(x, y) = (2x, y/2).
AffineTwist s1_base();

/// Rank-1 trivial instance on Q^2: identity twists, zero bracket and anchor.
HomAlgebroid s0();
/// Pullback tangent algebroid of s1_base.
HomAlgebroid s1();
/// Pullback of TM + R along s1_base.
HomAlgebroid s2();
/// Classical tangent algebroid of Q^3.
HomAlgebroid s3();
/// s1 with [e1, e2] replaced by e1.
HomAlgebroid s1_perturbed();

}  // namespace homlie::fixtures

#endif  // HOMLIE_FIXTURES_HPP
