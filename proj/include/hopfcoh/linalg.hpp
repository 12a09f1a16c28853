#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfcoh/errors.hpp"
#include "hopfcoh/fp.hpp"

namespace hopfcoh {

// ---------------------------------------------------------------- spaces

/// A finite-dimensional vector space with a fixed ordered basis.
struct BasedSpace {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> labels;  // one per basis vector

  static BasedSpace make(std::string name, std::size_t dim,
                         std::vector<std::string> labels = {}) {
    if (labels.empty()) {
      labels.reserve(dim);
      for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    }
    require(labels.size() == dim, errc::shape_mismatch, "label count != dim");
    return BasedSpace{std::move(name), dim, std::move(labels)};
  }
};

/// Basis of a tensor product, leftmost factor most significant.
inline BasedSpace tensor_space(const BasedSpace& a, const BasedSpace& b) {
  std::vector<std::string> labels;
  labels.reserve(a.dim * b.dim);
  for (const auto& la : a.labels)
    for (const auto& lb : b.labels) labels.push_back(la + "*" + lb);
  return BasedSpace{a.name + "*" + b.name, a.dim * b.dim, std::move(labels)};
}

// ---------------------------------------------------------------- elements

/// Coordinates of a vector in the basis of its space (dense).
struct Element {
  std::vector<Scalar> coords;

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](Scalar v) { return v == 0; });
  }
  auto operator<=>(const Element&) const = default;

  static Element zero(std::size_t dim) { return Element{std::vector<Scalar>(dim, 0)}; }
  static Element basis(std::size_t dim, std::size_t idx) {
    Element e = zero(dim);
    e.coords.at(idx) = 1;
    return e;
  }

  std::string str(const std::vector<std::string>* labels = nullptr) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!coords[i]) continue;
      if (!first) os << " + ";
      first = false;
      os << coords[i];
      if (labels) os << "." << (*labels)[i];
      else os << ".e" << i;
    }
    if (first) os << "0";
    return os.str();
  }
};

/// x (x) y with the leftmost-most-significant linearization.
inline Element tensor(const Fp& k, const Element& x, const Element& y) {
  Element out = Element::zero(x.dim() * y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!x.coords[i]) continue;
    for (std::size_t j = 0; j < y.dim(); ++j)
      if (y.coords[j]) out.coords[i * y.dim() + j] = k.mul(x.coords[i], y.coords[j]);
  }
  return out;
}

inline Element add(const Fp& k, const Element& x, const Element& y) {
  require(x.dim() == y.dim(), errc::shape_mismatch, "element add");
  Element out = x;
  for (std::size_t i = 0; i < y.dim(); ++i)
    out.coords[i] = k.add(out.coords[i], y.coords[i]);
  return out;
}

inline Element scale(const Fp& k, Scalar c, const Element& x) {
  Element out = x;
  for (auto& v : out.coords) v = k.mul(c, v);
  return out;
}

// ---------------------------------------------------------------- linear maps

/// Sparse matrix over F_p between flattened tensor spaces.  Tensor-factor
/// bookkeeping stays outside; composition only compares flattened dims
/// (reassociating factors is the identity in this linearization).
class LinearMap {
 public:
  LinearMap(const Fp& k, std::size_t dom_dim, std::size_t cod_dim)
      : field_(k), dom_(dom_dim), cod_(cod_dim) {}

  /// Dimensions given as tensor factors: LinearMap(k, {d, d}, {d}) maps
  /// the flattened d*d-dimensional space to the d-dimensional one.
  LinearMap(const Fp& k, std::initializer_list<std::size_t> dom_factors,
            std::initializer_list<std::size_t> cod_factors)
      : field_(k), dom_(1), cod_(1) {
    for (auto d : dom_factors) dom_ *= d;
    for (auto d : cod_factors) cod_ *= d;
  }

  static LinearMap identity(const Fp& k, std::size_t dim) {
    LinearMap m(k, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
  }

  static LinearMap zero(const Fp& k, std::size_t dom, std::size_t cod) {
    return LinearMap(k, dom, cod);
  }

  /// A (x) B -> B (x) A.
  static LinearMap flip(const Fp& k, std::size_t dim_a, std::size_t dim_b) {
    LinearMap m(k, dim_a * dim_b, dim_a * dim_b);
    for (std::size_t a = 0; a < dim_a; ++a)
      for (std::size_t b = 0; b < dim_b; ++b)
        m.set(b * dim_a + a, a * dim_b + b, 1);
    return m;
  }

  const Fp& field() const { return field_; }
  std::size_t dom_dim() const { return dom_; }
  std::size_t cod_dim() const { return cod_; }

  void set(std::size_t row, std::size_t col, Scalar v) {
    require(row < cod_ && col < dom_, errc::shape_mismatch, "entry out of range");
    v %= field_.p();
    auto key = std::make_pair(static_cast<std::uint32_t>(row),
                              static_cast<std::uint32_t>(col));
    if (v == 0)
      entries_.erase(key);
    else
      entries_[key] = v;
  }

  void add_to(std::size_t row, std::size_t col, Scalar v) {
    set(row, col, field_.add(at(row, col), v));
  }

  Scalar at(std::size_t row, std::size_t col) const {
    auto it = entries_.find({static_cast<std::uint32_t>(row),
                             static_cast<std::uint32_t>(col)});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar>& entries() const {
    return entries_;
  }

  bool operator==(const LinearMap& o) const {
    return field_ == o.field_ && dom_ == o.dom_ && cod_ == o.cod_ &&
           entries_ == o.entries_;
  }

  Element apply(const Element& x) const {
    require(x.dim() == dom_, errc::shape_mismatch, "apply: wrong dimension");
    Element out = Element::zero(cod_);
    for (const auto& [rc, v] : entries_) {
      Scalar c = x.coords[rc.second];
      if (c) out.coords[rc.first] = field_.add(out.coords[rc.first], field_.mul(v, c));
    }
    return out;
  }

 private:
  Fp field_;
  std::size_t dom_, cod_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar> entries_;
};

/// g after f.
inline LinearMap compose(const LinearMap& g, const LinearMap& f) {
  require(g.field() == f.field(), errc::shape_mismatch, "compose: field mismatch");
  require(g.dom_dim() == f.cod_dim(), errc::shape_mismatch,
          "compose: " + std::to_string(g.dom_dim()) + " != " +
              std::to_string(f.cod_dim()));
  const Fp& k = g.field();
  // index f by row
  std::unordered_map<std::uint32_t, std::vector<std::pair<std::uint32_t, Scalar>>> rows;
  for (const auto& [rc, v] : f.entries()) rows[rc.first].push_back({rc.second, v});
  LinearMap out(k, f.dom_dim(), g.cod_dim());
  for (const auto& [rc, vg] : g.entries()) {
    auto it = rows.find(rc.second);
    if (it == rows.end()) continue;
    for (const auto& [cf, vf] : it->second)
      out.add_to(rc.first, cf, k.mul(vg, vf));
  }
  return out;
}

/// Right-to-left chain: compose_chain({a,b,c}) = a after b after c.
inline LinearMap compose_chain(std::vector<LinearMap> maps) {
  require(!maps.empty(), errc::shape_mismatch, "empty chain");
  LinearMap acc = maps.back();
  for (auto it = std::next(maps.rbegin()); it != maps.rend(); ++it)
    acc = compose(*it, acc);
  return acc;
}

inline LinearMap tensor(const LinearMap& a, const LinearMap& b) {
  require(a.field() == b.field(), errc::shape_mismatch, "tensor: field mismatch");
  const Fp& k = a.field();
  LinearMap out(k, a.dom_dim() * b.dom_dim(), a.cod_dim() * b.cod_dim());
  for (const auto& [rca, va] : a.entries())
    for (const auto& [rcb, vb] : b.entries())
      out.set(rca.first * b.cod_dim() + rcb.first,
              rca.second * b.dom_dim() + rcb.second, k.mul(va, vb));
  return out;
}

inline LinearMap tensor_chain(const std::vector<LinearMap>& maps) {
  require(!maps.empty(), errc::shape_mismatch, "empty tensor chain");
  LinearMap acc = maps.front();
  for (std::size_t i = 1; i < maps.size(); ++i) acc = tensor(acc, maps[i]);
  return acc;
}

inline LinearMap add(const LinearMap& a, const LinearMap& b) {
  require(a.dom_dim() == b.dom_dim() && a.cod_dim() == b.cod_dim(),
          errc::shape_mismatch, "map add");
  LinearMap out = a;
  for (const auto& [rc, v] : b.entries()) out.add_to(rc.first, rc.second, v);
  return out;
}

inline LinearMap sub(const LinearMap& a, const LinearMap& b) {
  LinearMap out = a;
  const Fp& k = a.field();
  for (const auto& [rc, v] : b.entries()) out.add_to(rc.first, rc.second, k.neg(v));
  return out;
}

/// First domain basis vector where two maps disagree, as a witness string.
inline std::optional<std::string> first_difference(const LinearMap& a,
                                                   const LinearMap& b,
                                                   const std::vector<std::string>* dom_labels = nullptr) {
  if (a.dom_dim() != b.dom_dim() || a.cod_dim() != b.cod_dim())
    return "shape mismatch: " + std::to_string(a.cod_dim()) + "x" +
           std::to_string(a.dom_dim()) + " vs " + std::to_string(b.cod_dim()) + "x" +
           std::to_string(b.dom_dim());
  if (a == b) return std::nullopt;
  for (std::size_t j = 0; j < a.dom_dim(); ++j) {
    Element x = Element::basis(a.dom_dim(), j);
    Element ya = a.apply(x), yb = b.apply(x);
    if (ya != yb) {
      std::string dom = dom_labels ? (*dom_labels)[j] : "e" + std::to_string(j);
      return "at " + dom + ": " + ya.str() + " != " + yb.str();
    }
  }
  return "maps differ (entry-level)";
}

// ---------------------------------------------------------------- enumeration

struct Budget {
  std::uint64_t limit = 10'000'000;
};

/// HOPFCOH_BUDGET env var overrides the default 10^7 element cap.
inline Budget default_budget() {
  Budget b;
  if (const char* env = std::getenv("HOPFCOH_BUDGET")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) b.limit = v;
  }
  return b;
}

/// base^exp, saturating at cap+1 (overflow-safe).
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp,
                                 std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

/// Calls fn for every coordinate vector in lexicographic order ([0,..,0],
/// [0,..,1], ...; last coordinate fastest).  Throws budget_exceeded up front
/// if p^dim > budget.
template <class Fn>
void for_each_element(const Fp& k, std::size_t dim, const Budget& budget, Fn&& fn) {
  std::uint64_t total = checked_pow(k.p(), dim, budget.limit);
  require(total <= budget.limit, errc::budget_exceeded,
          "p^dim = " + std::to_string(k.p()) + "^" + std::to_string(dim) +
              " exceeds budget " + std::to_string(budget.limit));
  std::vector<Scalar> coords(dim, 0);
  while (true) {
    fn(coords);
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (++coords[i] < k.p()) break;
      coords[i] = 0;
      if (i == 0) return;
    }
    if (dim == 0) return;
  }
}

// ---------------------------------------------------------------- dense solving

struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Scalar> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

inline Matrix to_matrix(const LinearMap& m) {
  Matrix M(m.cod_dim(), m.dom_dim());
  for (const auto& [rc, v] : m.entries()) M.at(rc.first, rc.second) = v;
  return M;
}

namespace detail {
/// In-place RREF; returns pivot columns.  aug (optional) receives the same
/// row operations (an extra column block, e.g. a RHS or identity block).
inline std::vector<std::size_t> rref(const Fp& k, Matrix& A, Matrix* aug) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t sel = r;
    while (sel < A.rows && A.at(sel, c) == 0) ++sel;
    if (sel == A.rows) continue;
    for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(r, j), A.at(sel, j));
    if (aug)
      for (std::size_t j = 0; j < aug->cols; ++j)
        std::swap(aug->at(r, j), aug->at(sel, j));
    Scalar iv = k.inv(A.at(r, c));
    for (std::size_t j = 0; j < A.cols; ++j) A.at(r, j) = k.mul(A.at(r, j), iv);
    if (aug)
      for (std::size_t j = 0; j < aug->cols; ++j)
        aug->at(r, j) = k.mul(aug->at(r, j), iv);
    for (std::size_t rr = 0; rr < A.rows; ++rr) {
      if (rr == r || A.at(rr, c) == 0) continue;
      Scalar f = A.at(rr, c);
      for (std::size_t j = 0; j < A.cols; ++j)
        A.at(rr, j) = k.sub(A.at(rr, j), k.mul(f, A.at(r, j)));
      if (aug)
        for (std::size_t j = 0; j < aug->cols; ++j)
          aug->at(rr, j) = k.sub(aug->at(rr, j), k.mul(f, aug->at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}
}  // namespace detail

inline std::size_t rank(const Fp& k, Matrix A) {
  return detail::rref(k, A, nullptr).size();
}

/// One solution of A x = b (free variables set to 0), or nullopt.
inline std::optional<std::vector<Scalar>> solve(const Fp& k, Matrix A,
                                                std::vector<Scalar> b) {
  require(A.rows == b.size(), errc::shape_mismatch, "solve: rhs size");
  Matrix rhs(A.rows, 1);
  for (std::size_t i = 0; i < A.rows; ++i) rhs.at(i, 0) = b[i] % k.p();
  auto pivots = detail::rref(k, A, &rhs);
  for (std::size_t r = pivots.size(); r < A.rows; ++r)
    if (rhs.at(r, 0) != 0) return std::nullopt;
  std::vector<Scalar> x(A.cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs.at(i, 0);
  return x;
}

/// Canonical (echelon-derived) basis of {x : A x = 0}, deterministic order.
inline std::vector<std::vector<Scalar>> nullspace(const Fp& k, Matrix A) {
  auto pivots = detail::rref(k, A, nullptr);
  std::vector<bool> is_pivot(A.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t fc = 0; fc < A.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Scalar> v(A.cols, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = k.neg(A.at(i, fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<Matrix> invert(const Fp& k, Matrix A) {
  require(A.rows == A.cols, errc::shape_mismatch, "invert: not square");
  Matrix aug(A.rows, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i) aug.at(i, i) = 1;
  auto pivots = detail::rref(k, A, &aug);
  if (pivots.size() != A.rows) return std::nullopt;
  return aug;
}

/// Inverse as a LinearMap, or nullopt if the map is singular.
inline std::optional<LinearMap> invert(const LinearMap& m) {
  if (m.dom_dim() != m.cod_dim()) return std::nullopt;
  auto inv = invert(m.field(), to_matrix(m));
  if (!inv) return std::nullopt;
  LinearMap out(m.field(), m.cod_dim(), m.dom_dim());
  for (std::size_t r = 0; r < inv->rows; ++r)
    for (std::size_t c = 0; c < inv->cols; ++c)
      if (inv->at(r, c)) out.set(r, c, inv->at(r, c));
  return out;
}

}  // namespace hopfcoh
