#include "homlie/exterior.hpp"

#include <stdexcept>

namespace homlie {

std::vector<int> indices_of(IndexSet s) {
  std::vector<int> out;
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

IndexSet set_of(std::span<const int> indices) {
  IndexSet s = 0;
  for (int i : indices) s |= bit(i);
  return s;
}

std::vector<IndexSet> subsets(int r, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > r) return out;
  for (IndexSet s = 0; s < (IndexSet{1} << r); ++s) {
    if (size_of(s) == k) out.push_back(s);
  }
  return out;
}

Graded::Graded(Kind kind, int rank, int degree) : kind_(kind), rank_(rank), degree_(degree) {
  if (rank < 0 || rank > 16) throw std::invalid_argument("graded element: rank out of range");
  if (degree < 0) throw std::invalid_argument("graded element: negative degree");
}

Graded Graded::scalar(Kind kind, int rank, const Poly& f) {
  Graded g(kind, rank, 0);
  g.add(0, f);
  return g;
}

Graded Graded::basis(Kind kind, int rank, std::initializer_list<int> indices, const Poly& f) {
  Graded g = scalar(kind, rank, f);
  for (int i : indices) {
    if (i < 0 || i >= rank) throw std::out_of_range("frame index out of range");
    g = wedge(g, basis(kind, rank, bit(i)));
  }
  return g;
}

Graded Graded::basis(Kind kind, int rank, IndexSet set, const Poly& f) {
  if (rank < 32 && (set >> rank) != 0) throw std::out_of_range("frame index out of range");
  Graded g(kind, rank, size_of(set));
  g.add(set, f);
  return g;
}

Graded Graded::section(Kind kind, const PolyVector& coeffs) {
  const int r = static_cast<int>(coeffs.size());
  Graded g(kind, r, r == 0 ? 0 : 1);
  for (int i = 0; i < r; ++i) g.add(bit(i), coeffs(i));
  return g;
}

Poly Graded::coefficient(IndexSet i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Poly() : it->second;
}

Poly Graded::coefficient(std::initializer_list<int> indices) const {
  const Graded b = basis(kind_, rank_, indices);
  if (b.is_zero()) return Poly();
  const auto& [set, sign] = *b.terms().begin();
  return coefficient(set) * sign.constant_value();
}

void Graded::add(IndexSet i, const Poly& f) {
  if (size_of(i) != degree_) throw std::invalid_argument("graded element: index tuple has the wrong degree");
  if (f.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(i, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

PolyVector Graded::vector() const {
  if (degree_ != 1) throw std::invalid_argument("graded element: not of degree 1");
  PolyVector v = PolyVector::Zero(rank_);
  for (const auto& [i, f] : coeffs_) v(std::countr_zero(i)) = f;
  return v;
}

void Graded::require_compatible(const Graded& o) const {
  if (kind_ != o.kind_ || rank_ != o.rank_ || degree_ != o.degree_) {
    throw std::invalid_argument("graded elements differ in kind, rank or degree");
  }
}

Graded& Graded::operator+=(const Graded& o) {
  require_compatible(o);
  for (const auto& [i, f] : o.coeffs_) add(i, f);
  return *this;
}

Graded& Graded::operator-=(const Graded& o) {
  require_compatible(o);
  for (const auto& [i, f] : o.coeffs_) add(i, -f);
  return *this;
}

Graded& Graded::operator*=(const Poly& f) {
  if (f.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [i, g] : coeffs_) g *= f;
  return *this;
}

Graded Graded::operator-() const {
  Graded g = *this;
  for (auto& [i, f] : g.coeffs_) f = -f;
  return g;
}

bool operator==(const Graded& a, const Graded& b) {
  return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

Graded wedge(const Graded& a, const Graded& b) {
  if (a.kind() != b.kind() || a.rank() != b.rank()) throw std::invalid_argument("wedge: kind or rank mismatch");
  Graded out(a.kind(), a.rank(), a.degree() + b.degree());
  for (const auto& [i, f] : a.terms()) {
    for (const auto& [j, g] : b.terms()) {
      const int s = shuffle_sign(i, j);
      if (s == 0) continue;
      Poly c = f * g;
      if (s < 0) c = -c;
      out.add(i | j, c);
    }
  }
  return out;
}

Poly pair(const Graded& a, const Graded& b) {
  if (a.kind() == b.kind() || a.rank() != b.rank() || a.degree() != b.degree()) {
    throw std::invalid_argument("pair: needs opposite kinds and equal degree and rank");
  }
  Poly out;
  for (const auto& [i, f] : a.terms()) {
    auto it = b.terms().find(i);
    if (it != b.terms().end()) out += f * it->second;
  }
  return out;
}

Graded contract(const Graded& t, const Graded& w) {
  if (t.kind() == w.kind() || t.rank() != w.rank()) throw std::invalid_argument("contract: kind or rank mismatch");
  if (t.degree() > w.degree()) throw std::invalid_argument("contract: degree underflow");
  Graded out(w.kind(), w.rank(), w.degree() - t.degree());
  for (const auto& [k, g] : w.terms()) {
    for (const auto& [i, f] : t.terms()) {
      if ((i & k) != i) continue;
      const IndexSet j = k & ~i;
      Poly c = f * g;
      if (shuffle_sign(i, j) < 0) c = -c;
      out.add(j, c);
    }
  }
  return out;
}

Graded map_coefficients(const Graded& g, const std::function<Poly(const Poly&)>& f) {
  Graded out(g.kind(), g.rank(), g.degree());
  for (const auto& [i, c] : g.terms()) out.add(i, f(c));
  return out;
}

std::string to_string(const Graded& g, std::span<const std::string> vars) {
  if (g.is_zero()) return "0";
  const std::string label = g.kind() == Kind::Vector ? "e" : "eps";
  std::string out;
  bool first = true;
  for (const auto& [i, f] : g.terms()) {
    std::string basis;
    for (int k : indices_of(i)) {
      if (!basis.empty()) basis += "^";
      basis += label + std::to_string(k + 1);
    }
    std::string coeff = to_string(f, vars);
    const bool compound = f.terms().size() > 1;
    if (!first) out += " + ";
    first = false;
    if (basis.empty()) {
      out += compound ? "(" + coeff + ")" : coeff;
    } else if (f == Poly(1)) {
      out += basis;
    } else if (f == Poly(-1)) {
      out += "-" + basis;
    } else {
      out += (compound ? "(" + coeff + ")" : coeff) + "*" + basis;
    }
  }
  return out;
}

std::string to_string(const Graded& g) {
  const auto names = default_variable_names(3);
  int support = 0;
  for (const auto& [i, f] : g.terms()) support = std::max(support, f.support());
  if (support > 3) return to_string(g, default_variable_names(support));
  return to_string(g, names);
}

std::vector<IndexedCoefficient> coefficient_table(const Graded& g) {
  std::vector<IndexedCoefficient> out;
  for (const auto& [i, f] : g.terms()) {
    auto idx = indices_of(i);
    for (int& k : idx) ++k;
    out.push_back({std::move(idx), f});
  }
  return out;
}

SectionTwist::SectionTwist(AffineTwist base, PolyMatrix matrix, Kind kind)
    : base_(std::move(base)), matrix_(std::move(matrix)), kind_(kind) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("section twist: matrix is not square");
}

SectionTwist SectionTwist::identity(const AffineTwist& base, int rank, Kind kind) {
  return SectionTwist(base, PolyMatrix::Identity(rank, rank), kind);
}

PolyVector SectionTwist::apply(const PolyVector& v) const {
  if (v.size() != matrix_.rows()) throw std::invalid_argument("section twist: rank mismatch");
  return matrix_ * pullback(base_, v);
}

Graded SectionTwist::apply(const Graded& g) const {
  if (g.kind() != kind_ || g.rank() != rank()) throw std::invalid_argument("section twist: kind or rank mismatch");
  Graded out(g.kind(), g.rank(), g.degree());
  const int r = rank();
  for (const auto& [set, f] : g.terms()) {
    Graded image = Graded::scalar(kind_, r, base_.pullback(f));
    for (int i : indices_of(set)) {
      image = wedge(image, Graded::section(kind_, PolyVector(matrix_.col(i))));
    }
    out += image;
  }
  return out;
}

SectionTwist SectionTwist::inverse() const {
  const AffineTwist inv_base = base_.inverse();
  return SectionTwist(inv_base, inverse_pullback(base_, inverse_unimodular(matrix_)), kind_);
}

SectionTwist SectionTwist::dual() const {
  return SectionTwist(base_, PolyMatrix(inverse_unimodular(matrix_).transpose()), homlie::dual(kind_));
}

EndoMap twist_endomorphism(const SectionTwist& t, const EndoMap& n) {
  if (t.kind() != n.kind) return twist_endomorphism(t.dual(), n);
  return {t.matrix() * pullback(t.base(), n.matrix) * inverse_unimodular(t.matrix()), n.kind};
}

Tensor::Tensor(Kind kind, int rank, int upper, int lower) : kind_(kind), rank_(rank), upper_(upper), lower_(lower) {}

Tensor Tensor::from_endomorphism(const EndoMap& n) {
  Tensor t(n.kind, n.rank(), 1, 1);
  for (int a = 0; a < n.rank(); ++a) {
    for (int b = 0; b < n.rank(); ++b) t.add({a, b}, n.matrix(a, b));
  }
  return t;
}

Tensor Tensor::product(const std::vector<PolyVector>& upper, const std::vector<PolyVector>& lower, Kind kind) {
  const int r = upper.empty() ? (lower.empty() ? 0 : static_cast<int>(lower[0].size()))
                              : static_cast<int>(upper[0].size());
  Tensor out(kind, r, static_cast<int>(upper.size()), static_cast<int>(lower.size()));
  std::vector<const PolyVector*> slots;
  for (const auto& v : upper) slots.push_back(&v);
  for (const auto& v : lower) slots.push_back(&v);
  Key key(slots.size(), 0);
  std::function<void(std::size_t, const Poly&)> rec = [&](std::size_t pos, const Poly& acc) {
    if (pos == slots.size()) {
      out.add(key, acc);
      return;
    }
    for (int i = 0; i < r; ++i) {
      const Poly& c = (*slots[pos])(i);
      if (c.is_zero()) continue;
      key[pos] = i;
      rec(pos + 1, acc * c);
    }
  };
  rec(0, Poly(1));
  return out;
}

void Tensor::add(const Key& k, const Poly& f) {
  if (static_cast<int>(k.size()) != upper_ + lower_) throw std::invalid_argument("tensor: key has wrong length");
  if (f.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Poly Tensor::coefficient(const Key& k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Poly() : it->second;
}

EndoMap Tensor::endomorphism() const {
  if (upper_ != 1 || lower_ != 1) throw std::invalid_argument("tensor: not of type (1,1)");
  EndoMap n{PolyMatrix::Zero(rank_, rank_), kind_};
  for (const auto& [k, f] : coeffs_) n.matrix(k[0], k[1]) = f;
  return n;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  for (const auto& [k, f] : o.coeffs_) add(k, f);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  for (const auto& [k, f] : o.coeffs_) add(k, -f);
  return *this;
}

Tensor twist_tensor(const Tensor& tensor, const SectionTwist& t) {
  const SectionTwist contra = t.kind() == tensor.kind() ? t : t.dual();
  const SectionTwist co = contra.dual();
  Tensor out(tensor.kind(), tensor.rank(), tensor.upper(), tensor.lower());
  for (const auto& [key, f] : tensor.terms()) {
    std::vector<PolyVector> up;
    std::vector<PolyVector> low;
    for (int s = 0; s < tensor.upper(); ++s) up.emplace_back(contra.matrix().col(key[s]));
    for (int s = 0; s < tensor.lower(); ++s) low.emplace_back(co.matrix().col(key[tensor.upper() + s]));
    Tensor piece = Tensor::product(up, low, tensor.kind());
    const Poly c = t.base().pullback(f);
    for (const auto& [k, g] : piece.terms()) out.add(k, c * g);
  }
  return out;
}

}  // namespace homlie
