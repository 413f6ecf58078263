#include "homlie/homalg.hpp"

#include <stdexcept>

namespace homlie {

Poly PullbackVectorField::operator()(const Poly& f) const {
  Poly out;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    if (coeffs(i).is_zero()) continue;
    const Poly d = partial(f, static_cast<int>(i));
    if (d.is_zero()) continue;
    out += coeffs(i) * base.pullback(d);
  }
  return out;
}

PullbackVectorField pullback_section(const AffineTwist& phi, const PolyVector& classical) {
  if (classical.size() != phi.dimension()) throw std::invalid_argument("pullback_section: dimension mismatch");
  return {phi, pullback(phi, classical)};
}

namespace {

template <typename Op>
PolyVector coordinate_values(int n, Op&& op) {
  PolyVector c(n);
  for (int k = 0; k < n; ++k) c(k) = op(Poly::variable(k));
  return c;
}

}  // namespace

PullbackVectorField ad_twist(const AffineTwist& phi, const PullbackVectorField& x) {
  return {phi, coordinate_values(phi.dimension(),
                                 [&](const Poly& f) { return phi.pullback(x(phi.inverse_pullback(f))); })};
}

PullbackVectorField ad_twist_inverse(const AffineTwist& phi, const PullbackVectorField& x) {
  return {phi, coordinate_values(phi.dimension(),
                                 [&](const Poly& f) { return phi.inverse_pullback(x(phi.pullback(f))); })};
}

PullbackVectorField bracket_phistar(const AffineTwist& phi, const PullbackVectorField& x,
                                    const PullbackVectorField& y) {
  auto op = [&](const PullbackVectorField& a, const PullbackVectorField& b, const Poly& f) {
    return phi.pullback(a(phi.inverse_pullback(b(phi.inverse_pullback(f)))));
  };
  return {phi, coordinate_values(phi.dimension(), [&](const Poly& f) { return op(x, y, f) - op(y, x, f); })};
}

StructureTable zero_structure(int r) {
  return StructureTable(r, std::vector<PolyVector>(r, PolyVector::Zero(r)));
}

HomAlgebroid::HomAlgebroid(SectionTwist twist, PolyMatrix anchor, StructureTable structure,
                           std::vector<std::string> vars)
    : twist_(std::move(twist)), anchor_(std::move(anchor)), structure_(std::move(structure)), vars_(std::move(vars)) {
  const int n = dimension();
  const int r = rank();
  if (anchor_.rows() != n || anchor_.cols() != r) throw std::invalid_argument("anchor matrix must be n x r");
  if (static_cast<int>(structure_.size()) != r) throw std::invalid_argument("structure table must be r x r");
  for (const auto& row : structure_) {
    if (static_cast<int>(row.size()) != r) throw std::invalid_argument("structure table must be r x r");
    for (const auto& v : row) {
      if (v.size() != r) throw std::invalid_argument("structure vectors must have length r");
    }
  }
  if (vars_.empty()) vars_ = default_variable_names(n);
  if (static_cast<int>(vars_.size()) != n) throw std::invalid_argument("variable names must match dimension");
}

PolyVector HomAlgebroid::frame(int i) const {
  PolyVector v = PolyVector::Zero(rank());
  v(i) = Poly(1);
  return v;
}

PullbackVectorField HomAlgebroid::anchor_of(const PolyVector& x) const { return {base(), anchor_ * x}; }

Poly HomAlgebroid::act(const PolyVector& x, const Poly& f) const { return anchor_of(x)(f); }

PolyVector HomAlgebroid::bracket(const PolyVector& x, const PolyVector& y) const {
  const int r = rank();
  PolyVector out = PolyVector::Zero(r);
  const PolyVector px = pullback(base(), x);
  const PolyVector py = pullback(base(), y);
  for (int i = 0; i < r; ++i) {
    if (px(i).is_zero()) continue;
    for (int j = 0; j < r; ++j) {
      if (py(j).is_zero() || i == j) continue;
      const Poly c = px(i) * py(j);
      for (int k = 0; k < r; ++k) {
        if (!structure_[i][j](k).is_zero()) out(k) += c * structure_[i][j](k);
      }
    }
  }
  const PullbackVectorField ax = anchor_of(twist_.apply(x));
  const PullbackVectorField ay = anchor_of(twist_.apply(y));
  PolyVector diff(r);
  for (int j = 0; j < r; ++j) diff(j) = ax(y(j)) - ay(x(j));
  return out + twist_.matrix() * diff;
}

std::string HomAlgebroid::describe(const PolyVector& v) const { return to_string(section(v), vars_); }
std::string HomAlgebroid::describe(const Graded& g) const { return to_string(g, vars_); }
std::string HomAlgebroid::describe(const Poly& f) const { return to_string(f, vars_); }

std::vector<PolyVector> probe_sections(int r, const ProbeSet& probes) {
  std::vector<PolyVector> out;
  for (int i = 0; i < r; ++i) {
    PolyVector v = PolyVector::Zero(r);
    v(i) = Poly(1);
    out.push_back(v);
  }
  for (const Poly& f : probes.nonconstant()) {
    for (int i = 0; i < r; ++i) {
      PolyVector v = PolyVector::Zero(r);
      v(i) = f;
      out.push_back(v);
    }
  }
  return out;
}

namespace {

void require_antisymmetric(const HomAlgebroid& a) {
  const int r = a.rank();
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (!equal(a.structure()[i][j], PolyVector(-a.structure()[j][i]))) {
        throw std::invalid_argument("structure table is not antisymmetric at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
      }
    }
  }
}

}  // namespace

Report check_axioms(const HomAlgebroid& a, const ProbeSet& probes) {
  require_antisymmetric(a);
  const int n = a.dimension();
  const int r = a.rank();
  const SectionTwist& t = a.twist();
  const AffineTwist& phi = a.base();
  const std::vector<PolyVector> singles = probe_sections(r, probes);
  const std::vector<Poly> funcs = probes.nonconstant();
  std::vector<PolyVector> frame;
  for (int i = 0; i < r; ++i) frame.push_back(a.frame(i));

  ProbeRng rng(probes.seed);
  std::vector<PolyVector> randoms;
  for (int c = 0; c < probes.random_cases; ++c) randoms.push_back(rng.section(n, r, 2));

  // (X, Y) pairs: probe sections against the frame, both orders, plus random pairs.
  std::vector<std::pair<PolyVector, PolyVector>> pairs;
  for (const auto& x : singles) {
    for (const auto& e : frame) {
      pairs.emplace_back(x, e);
      pairs.emplace_back(e, x);
    }
  }
  for (std::size_t c = 0; c + 1 < randoms.size(); c += 2) pairs.emplace_back(randoms[c], randoms[c + 1]);

  auto d = [&](const PolyVector& v) { return a.describe(v); };
  Report report("Hom-Lie algebroid axioms");

  {
    CheckBuilder b("phiA function-linearity");
    for (const auto& e : frame) {
      for (const Poly& f : funcs) {
        const PolyVector expect = t.apply(e) * phi.pullback(f);
        const PolyVector diff = t.apply(PolyVector(e * f)) - expect;
        b.record(is_zero(diff), [&] { return std::vector<std::pair<std::string, std::string>>{{"X", d(e)}, {"f", a.describe(f)}}; },
                 [&] { return d(diff); });
      }
    }
    report.add(b.done());
  }
  {
    CheckBuilder b("phiA homomorphism");
    for (const auto& [x, y] : pairs) {
      const PolyVector diff = t.apply(a.bracket(x, y)) - a.bracket(t.apply(x), t.apply(y));
      b.record(is_zero(diff), [&] { return std::vector<std::pair<std::string, std::string>>{{"X", d(x)}, {"Y", d(y)}}; },
               [&] { return d(diff); });
    }
    report.add(b.done());
  }
  {
    CheckBuilder b("Hom-Jacobi");
    auto jac = [&](const PolyVector& x, const PolyVector& y, const PolyVector& z) {
      return PolyVector(a.bracket(t.apply(x), a.bracket(y, z)) + a.bracket(t.apply(y), a.bracket(z, x)) +
                        a.bracket(t.apply(z), a.bracket(x, y)));
    };
    auto run = [&](const PolyVector& x, const PolyVector& y, const PolyVector& z) {
      const PolyVector diff = jac(x, y, z);
      b.record(is_zero(diff),
               [&] { return std::vector<std::pair<std::string, std::string>>{{"X", d(x)}, {"Y", d(y)}, {"Z", d(z)}}; },
               [&] { return d(diff); });
    };
    for (const auto& x : singles) {
      for (int j = 0; j < r; ++j) {
        for (int k = j + 1; k < r; ++k) run(x, frame[j], frame[k]);
      }
    }
    for (std::size_t c = 0; c + 2 < randoms.size(); c += 3) run(randoms[c], randoms[c + 1], randoms[c + 2]);
    report.add(b.done());
  }
  {
    CheckBuilder b("Leibniz rule");
    for (const auto& x : singles) {
      for (const auto& y : frame) {
        for (const Poly& f : funcs) {
          const PolyVector lhs = a.bracket(x, PolyVector(y * f));
          const PolyVector rhs = a.bracket(x, y) * phi.pullback(f) + t.apply(y) * a.act(t.apply(x), f);
          const PolyVector diff = lhs - rhs;
          b.record(is_zero(diff),
                   [&] {
                     return std::vector<std::pair<std::string, std::string>>{{"X", d(x)}, {"Y", d(y)}, {"f", a.describe(f)}};
                   },
                   [&] { return d(diff); });
        }
      }
    }
    report.add(b.done());
  }
  {
    CheckBuilder b("anchor intertwines twist");
    std::vector<PolyVector> xs = singles;
    xs.insert(xs.end(), randoms.begin(), randoms.end());
    for (const auto& x : xs) {
      const PolyVector diff = a.anchor_of(t.apply(x)).coeffs - ad_twist(phi, a.anchor_of(x)).coeffs;
      b.record(is_zero(diff), [&] { return std::vector<std::pair<std::string, std::string>>{{"X", d(x)}}; },
               [&] { return to_string(Graded::section(Kind::Vector, diff), a.vars()); });
    }
    report.add(b.done());
  }
  {
    CheckBuilder b("anchor preserves brackets");
    for (const auto& [x, y] : pairs) {
      const PolyVector diff =
          a.anchor_of(a.bracket(x, y)).coeffs - bracket_phistar(phi, a.anchor_of(x), a.anchor_of(y)).coeffs;
      b.record(is_zero(diff), [&] { return std::vector<std::pair<std::string, std::string>>{{"X", d(x)}, {"Y", d(y)}}; },
               [&] { return to_string(Graded::section(Kind::Vector, diff), a.vars()); });
    }
    report.add(b.done());
  }
  return report;
}

HomAlgebroid make_pullback_tangent(const AffineTwist& phi, std::vector<std::string> vars) {
  const int n = phi.dimension();
  std::vector<PullbackVectorField> frame;
  for (int i = 0; i < n; ++i) {
    PolyVector v = PolyVector::Zero(n);
    v(i) = Poly(1);
    frame.push_back({phi, v});
  }
  PolyMatrix p(n, n);
  for (int i = 0; i < n; ++i) p.col(i) = ad_twist(phi, frame[i]).coeffs;
  StructureTable c = zero_structure(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) c[i][j] = bracket_phistar(phi, frame[i], frame[j]).coeffs;
    }
  }
  return HomAlgebroid(SectionTwist(phi, p), PolyMatrix::Identity(n, n), std::move(c), std::move(vars));
}

std::pair<PullbackVectorField, Poly> tm_r_formula_bracket(const AffineTwist& phi, const PullbackVectorField& x,
                                                          const Poly& h, const PullbackVectorField& y,
                                                          const Poly& k) {
  return {bracket_phistar(phi, x, y), x(k) - y(h)};
}

HomAlgebroid make_tm_r(const AffineTwist& phi, std::vector<std::string> vars) {
  const int n = phi.dimension();
  const int r = n + 1;
  // Frame element i < n is (e_i, 0); element n is (0, 1).
  auto field = [&](int i) {
    PolyVector v = PolyVector::Zero(n);
    if (i < n) v(i) = Poly(1);
    return PullbackVectorField{phi, v};
  };
  auto fn = [&](int i) { return i < n ? Poly() : Poly(1); };

  PolyMatrix p = PolyMatrix::Zero(r, r);
  for (int i = 0; i < n; ++i) p.block(0, i, n, 1) = ad_twist(phi, field(i)).coeffs;
  p(n, n) = Poly(1);

  PolyMatrix anchor = PolyMatrix::Zero(n, r);
  anchor.block(0, 0, n, n) = PolyMatrix::Identity(n, n);

  StructureTable c = zero_structure(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const auto [v, g] = tm_r_formula_bracket(phi, field(i), fn(i), field(j), fn(j));
      PolyVector col(r);
      col.head(n) = v.coeffs;
      col(n) = g;
      c[i][j] = col;
    }
  }
  return HomAlgebroid(SectionTwist(phi, p), anchor, std::move(c), std::move(vars));
}

}  // namespace homlie
