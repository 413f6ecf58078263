#include "homlie/calculus.hpp"

#include <stdexcept>

namespace homlie {

CartanContext::CartanContext(HomAlgebroid a)
    : a_(std::move(a)),
      inverse_(a_.twist().inverse()),
      dual_(a_.twist().dual()),
      dual_inverse_(dual_.inverse()) {}

namespace {

Graded wedge_sections(Kind kind, int r, const std::vector<PolyVector>& vs) {
  Graded w = Graded::scalar(kind, r, Poly(1));
  for (const auto& v : vs) w = wedge(w, Graded::section(kind, v));
  return w;
}

std::vector<PolyVector> without(const std::vector<PolyVector>& vs, std::size_t a, std::size_t b = SIZE_MAX) {
  std::vector<PolyVector> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i != a && i != b) out.push_back(vs[i]);
  }
  return out;
}

void require_form(const CartanContext& ctx, const Graded& omega) {
  if (omega.kind() != ctx.form_kind() || omega.rank() != ctx.rank()) {
    throw std::invalid_argument("expected a form of the algebroid");
  }
}

void require_multivector(const CartanContext& ctx, const Graded& d) {
  if (d.kind() != ctx.vector_kind() || d.rank() != ctx.rank()) {
    throw std::invalid_argument("expected a multivector of the algebroid");
  }
}

}  // namespace

Poly evaluate_differential(const CartanContext& ctx, const Graded& omega, const std::vector<PolyVector>& args) {
  require_form(ctx, omega);
  const HomAlgebroid& a = ctx.algebroid();
  const int k = omega.degree();
  if (static_cast<int>(args.size()) != k + 1) throw std::invalid_argument("differential: wrong argument count");
  const Kind vk = ctx.vector_kind();
  const int r = ctx.rank();
  std::vector<PolyVector> pre;
  for (const auto& x : args) pre.push_back(ctx.twist_inverse().apply(x));

  Poly out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const Poly val = pair(omega, wedge_sections(vk, r, without(pre, i)));
    const Poly term = a.act(args[i], val);
    if (i % 2 == 0) out += term; else out -= term;
  }
  if (k >= 1) {
    const Graded twisted = ctx.dual_twist().apply(omega);
    for (std::size_t i = 0; i < args.size(); ++i) {
      for (std::size_t j = i + 1; j < args.size(); ++j) {
        std::vector<PolyVector> slots{a.bracket(pre[i], pre[j])};
        for (auto& v : without(args, i, j)) slots.push_back(std::move(v));
        const Poly term = pair(twisted, wedge_sections(vk, r, slots));
        if ((i + j) % 2 == 0) out += term; else out -= term;
      }
    }
  }
  return out;
}

Graded differential(const CartanContext& ctx, const Graded& omega) {
  require_form(ctx, omega);
  const int k = omega.degree();
  const int r = ctx.rank();
  Graded out(ctx.form_kind(), r, k + 1);
  if (k + 1 > r || omega.is_zero()) return out;
  for (IndexSet s : subsets(r, k + 1)) {
    std::vector<PolyVector> args;
    for (int i : indices_of(s)) {
      PolyVector e = PolyVector::Zero(r);
      e(i) = Poly(1);
      args.push_back(e);
    }
    out.add(s, evaluate_differential(ctx, omega, args));
  }
  return out;
}

Report check_differential_props(const CartanContext& ctx, const ProbeSet& probes) {
  const HomAlgebroid& a = ctx.algebroid();
  const int r = ctx.rank();
  const int n = a.dimension();
  const Kind fk = ctx.form_kind();
  auto d = [&](const Graded& g) { return a.describe(g); };
  using Inputs = std::vector<std::pair<std::string, std::string>>;

  std::vector<Graded> forms;
  for (int k = 0; k <= r; ++k) {
    for (IndexSet s : subsets(r, k)) {
      for (const Poly& f : probes.functions) forms.push_back(Graded::basis(fk, r, s, f));
    }
  }
  ProbeRng rng(probes.seed);
  std::vector<Graded> randoms;
  for (int c = 0; c < probes.random_cases; ++c) randoms.push_back(rng.graded(fk, n, r, rng.integer(0, r), 2));
  std::vector<Graded> all = forms;
  all.insert(all.end(), randoms.begin(), randoms.end());

  Report report("differential");
  {
    CheckBuilder b("d squared zero");
    for (const auto& w : all) {
      if (w.degree() + 2 > r) continue;
      const Graded dd = differential(ctx, differential(ctx, w));
      b.record(dd.is_zero(), [&] { return Inputs{{"omega", d(w)}}; }, [&] { return d(dd); });
    }
    report.add(b.done());
  }
  {
    CheckBuilder b("d commutes with dual twist");
    for (const auto& w : all) {
      if (w.degree() + 1 > r) continue;
      const Graded diff =
          differential(ctx, ctx.dual_twist().apply(w)) - ctx.dual_twist().apply(differential(ctx, w));
      b.record(diff.is_zero(), [&] { return Inputs{{"omega", d(w)}}; }, [&] { return d(diff); });
    }
    report.add(b.done());
  }
  {
    CheckBuilder b("graded Leibniz rule");
    std::vector<Graded> rights;
    for (int k = 0; k <= r; ++k) {
      for (IndexSet s : subsets(r, k)) rights.push_back(Graded::basis(fk, r, s));
    }
    for (const auto& w : randoms) rights.push_back(w);
    auto run = [&](const Graded& w, const Graded& eta) {
      if (w.degree() + eta.degree() + 1 > r) return;
      const Graded lhs = differential(ctx, wedge(w, eta));
      Graded rhs = wedge(differential(ctx, w), ctx.dual_twist().apply(eta));
      const Graded second = wedge(ctx.dual_twist().apply(w), differential(ctx, eta));
      if (w.degree() % 2 == 0) rhs += second; else rhs -= second;
      const Graded diff = lhs - rhs;
      b.record(diff.is_zero(), [&] { return Inputs{{"omega", d(w)}, {"eta", d(eta)}}; }, [&] { return d(diff); });
    };
    for (const auto& w : forms) {
      for (const auto& eta : rights) run(w, eta);
    }
    for (std::size_t c = 0; c + 1 < randoms.size(); c += 2) run(randoms[c], randoms[c + 1]);
    report.add(b.done());
  }
  {
    CheckBuilder b("d tensorial");
    for (int k = 0; k < r; ++k) {
      for (IndexSet s : subsets(r, k)) {
        const Graded w = Graded::basis(fk, r, s);
        const Graded dw = differential(ctx, w);
        for (IndexSet t : subsets(r, k + 1)) {
          const std::vector<int> idx = indices_of(t);
          for (std::size_t slot = 0; slot < idx.size(); ++slot) {
            for (const Poly& f : probes.nonconstant()) {
              std::vector<PolyVector> args;
              for (int i : idx) {
                PolyVector e = PolyVector::Zero(r);
                e(i) = Poly(1);
                args.push_back(e);
              }
              args[slot] = args[slot] * f;
              const Poly diff = evaluate_differential(ctx, w, args) - f * dw.coefficient(t);
              b.record(diff.is_zero(),
                       [&] {
                         Inputs in{{"omega", d(w)}};
                         for (std::size_t i = 0; i < args.size(); ++i) {
                           in.emplace_back("X" + std::to_string(i), a.describe(args[i]));
                         }
                         return in;
                       },
                       [&] { return a.describe(diff); });
            }
          }
        }
      }
    }
    report.add(b.done());
  }
  return report;
}

Graded interior(const CartanContext& ctx, const Graded& d, const Graded& omega) {
  require_multivector(ctx, d);
  require_form(ctx, omega);
  if (d.degree() > omega.degree()) throw std::invalid_argument("interior: degree underflow");
  return contract(ctx.twist().apply(d), ctx.dual_twist().apply(omega));
}

Graded lie_derivative_form(const CartanContext& ctx, const Graded& x, const Graded& eta) {
  require_multivector(ctx, x);
  require_form(ctx, eta);
  if (x.degree() != 1) throw std::invalid_argument("lie derivative: X must be a section");
  const Graded pre = ctx.dual_twist_inverse().apply(eta);
  Graded out = interior(ctx, x, differential(ctx, pre));
  if (eta.degree() >= 1) out += differential(ctx, interior(ctx, ctx.twist_inverse().apply(x), pre));
  return out;
}

Graded lie_derivative_multivector(const CartanContext& ctx, const Graded& x, const Graded& d) {
  return schouten(ctx, x, d);
}

std::vector<Graded> monomial_terms(const Graded& g) {
  std::vector<Graded> out;
  for (const auto& [s, f] : g.terms()) out.push_back(Graded::basis(g.kind(), g.rank(), s, f));
  return out;
}

namespace {

class Schouten {
 public:
  explicit Schouten(const CartanContext& ctx) : ctx_(ctx), a_(ctx.algebroid()) {}

  Graded bracket(const Graded& d1, const Graded& d2) const {
    const int k = d1.degree();
    const int l = d2.degree();
    Graded out = zero(k + l - 1);
    for (const auto& [s, f] : d1.terms()) {
      for (const auto& [t, g] : d2.terms()) out += term(s, f, t, g);
    }
    return out;
  }

 private:
  Graded zero(int degree) const { return Graded(ctx_.vector_kind(), ctx_.rank(), degree < 0 ? 0 : degree); }
  Graded twisted_basis(IndexSet s) const {
    return ctx_.twist().apply(Graded::basis(ctx_.vector_kind(), ctx_.rank(), s));
  }
  PolyVector frame(int i) const { return a_.frame(i); }

  // [f e_I, g e_J]
  Graded term(IndexSet s, const Poly& f, IndexSet t, const Poly& g) const {
    const int k = size_of(s);
    const int l = size_of(t);
    if (k == 0 && l == 0) return zero(0);
    if (k == 1 && l == 1) {
      PolyVector x = PolyVector::Zero(ctx_.rank());
      PolyVector y = PolyVector::Zero(ctx_.rank());
      x(std::countr_zero(s)) = f;
      y(std::countr_zero(t)) = g;
      return a_.section(a_.bracket(x, y));
    }
    if (l == 0) {
      if (k == 1) {
        PolyVector x = PolyVector::Zero(ctx_.rank());
        x(std::countr_zero(s)) = f;
        return Graded::scalar(ctx_.vector_kind(), ctx_.rank(), a_.act(ctx_.twist().apply(x), g));
      }
      // [L, g] = -(-1)^{k-1} [g, L]
      Graded r = term(0, g, s, f);
      return (k - 1) % 2 == 0 ? -r : r;
    }
    // [L, g e_J] = [L, g] ^ phi(e_J) + phi^*g [L, e_J]
    Graded out = zero(k + l - 1);
    if (k > 0 && !g.is_constant()) {
      out += wedge(term(s, f, 0, g), twisted_basis(t));
    }
    const Poly pg = a_.base().pullback(g);
    if (!pg.is_zero()) out += frame_right(s, f, t) * pg;
    return out;
  }

  // [f e_I, e_J]
  Graded frame_right(IndexSet s, const Poly& f, IndexSet t) const {
    const int k = size_of(s);
    const int l = size_of(t);
    if (l == 1) {
      if (k == 0) {
        // [f, e_j] = -a(phi e_j)(f)
        return Graded::scalar(ctx_.vector_kind(), ctx_.rank(), -a_.act(ctx_.twist().apply(frame(std::countr_zero(t))), f));
      }
      if (k == 1) return term(s, f, t, Poly(1));
      // [L, e_j] = -[e_j, L]
      return -term(t, Poly(1), s, f);
    }
    const IndexSet head = t & (~t + 1);
    const IndexSet tail = t & ~head;
    Graded out = wedge(frame_right(s, f, head), twisted_basis(tail));
    const Graded second = wedge(twisted_basis(head), frame_right(s, f, tail));
    // sign (-1)^{(k+1) * 1}
    if ((k + 1) % 2 == 0) out += second; else out -= second;
    return out;
  }

  const CartanContext& ctx_;
  const HomAlgebroid& a_;
};

}  // namespace

Graded schouten(const CartanContext& ctx, const Graded& d1, const Graded& d2) {
  require_multivector(ctx, d1);
  require_multivector(ctx, d2);
  return Schouten(ctx).bracket(d1, d2);
}

Tensor lie_derivative_tensor(const CartanContext& ctx, const Graded& x, const Tensor& t) {
  require_multivector(ctx, x);
  if (t.kind() != ctx.vector_kind() || t.rank() != ctx.rank()) throw std::invalid_argument("tensor kind mismatch");
  const int r = ctx.rank();
  const int slots = t.upper() + t.lower();
  Tensor out(t.kind(), r, t.upper(), t.lower());
  if (slots == 0) {
    const Poly f = t.coefficient({});
    const Poly v = lie_derivative_form(ctx, x, Graded::scalar(ctx.form_kind(), r, f)).value();
    out.add({}, v);
    return out;
  }
  for (const auto& [key, f] : t.terms()) {
    // The coefficient rides in the first slot.
    std::vector<PolyVector> plain;
    for (int s = 0; s < slots; ++s) {
      PolyVector e = PolyVector::Zero(r);
      e(key[s]) = s == 0 ? f : Poly(1);
      plain.push_back(e);
    }
    std::vector<PolyVector> twisted;
    for (int s = 0; s < slots; ++s) {
      twisted.push_back(s < t.upper() ? ctx.twist().apply(plain[s]) : ctx.dual_twist().apply(plain[s]));
    }
    for (int s = 0; s < slots; ++s) {
      std::vector<PolyVector> parts = twisted;
      if (s < t.upper()) {
        parts[s] = schouten(ctx, x, Graded::section(ctx.vector_kind(), plain[s])).vector();
      } else {
        parts[s] = lie_derivative_form(ctx, x, Graded::section(ctx.form_kind(), plain[s])).vector();
      }
      std::vector<PolyVector> up(parts.begin(), parts.begin() + t.upper());
      std::vector<PolyVector> low(parts.begin() + t.upper(), parts.end());
      out += Tensor::product(up, low, t.kind());
    }
  }
  return out;
}

}  // namespace homlie
