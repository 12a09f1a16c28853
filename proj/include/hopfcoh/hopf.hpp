#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcoh/linalg.hpp"

namespace hopfcoh {

// ---------------------------------------------------------------- data

/// Unital associative algebra by structure maps.  mult: A(x)A -> A,
/// unit: k -> A (the ground field is the 1-dimensional space).
struct AlgebraData {
  Fp field;
  BasedSpace space;
  LinearMap mult;
  LinearMap unit;
};

struct CoalgebraData {
  Fp field;
  BasedSpace space;
  LinearMap comult;
  LinearMap counit;
};

struct HopfData {
  Fp field;
  BasedSpace space;
  LinearMap mult, unit, comult, counit, antipode;

  AlgebraData algebra() const { return {field, space, mult, unit}; }
  CoalgebraData coalgebra() const { return {field, space, comult, counit}; }
};

// ---------------------------------------------------------------- reports

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  void add(const std::string& name, const std::optional<std::string>& diff) {
    items.push_back({name, !diff.has_value(), diff.value_or("")});
  }

  void add_flag(const std::string& name, bool pass, const std::string& witness = "") {
    items.push_back({name, pass, pass ? "" : witness});
  }

  void merge(const CheckReport& other, const std::string& prefix = "") {
    for (const auto& it : other.items)
      items.push_back({prefix + it.name, it.pass, it.witness});
  }

  std::string summary() const {
    std::size_t passed = 0;
    for (const auto& it : items) passed += it.pass;
    std::string s = std::to_string(passed) + "/" + std::to_string(items.size()) + " checks pass";
    for (const auto& it : items)
      if (!it.pass) {
        s += "; first failure: " + it.name;
        if (!it.witness.empty()) s += " (" + it.witness + ")";
        break;
      }
    return s;
  }
};

// ---------------------------------------------------------------- axiom suites

inline void require_algebra_shapes(const AlgebraData& a) {
  std::size_t d = a.space.dim;
  require(a.mult.dom_dim() == d * d && a.mult.cod_dim() == d, errc::shape_mismatch,
          "mult must map A(x)A -> A");
  require(a.unit.dom_dim() == 1 && a.unit.cod_dim() == d, errc::shape_mismatch,
          "unit must map k -> A");
}

inline void require_coalgebra_shapes(const CoalgebraData& c) {
  std::size_t d = c.space.dim;
  require(c.comult.dom_dim() == d && c.comult.cod_dim() == d * d, errc::shape_mismatch,
          "comult must map C -> C(x)C");
  require(c.counit.dom_dim() == d && c.counit.cod_dim() == 1, errc::shape_mismatch,
          "counit must map C -> k");
}

inline CheckReport check_algebra(const AlgebraData& a) {
  require_algebra_shapes(a);
  const Fp& k = a.field;
  std::size_t d = a.space.dim;
  auto id = LinearMap::identity(k, d);
  CheckReport rep;
  rep.add("associativity",
          first_difference(compose(a.mult, tensor(a.mult, id)),
                           compose(a.mult, tensor(id, a.mult))));
  rep.add("unit_left", first_difference(compose(a.mult, tensor(a.unit, id)), id));
  rep.add("unit_right", first_difference(compose(a.mult, tensor(id, a.unit)), id));
  return rep;
}

inline CheckReport check_coalgebra(const CoalgebraData& c) {
  require_coalgebra_shapes(c);
  const Fp& k = c.field;
  std::size_t d = c.space.dim;
  auto id = LinearMap::identity(k, d);
  CheckReport rep;
  rep.add("coassociativity",
          first_difference(compose(tensor(c.comult, id), c.comult),
                           compose(tensor(id, c.comult), c.comult),
                           &c.space.labels));
  rep.add("counit_left",
          first_difference(compose(tensor(c.counit, id), c.comult), id,
                           &c.space.labels));
  rep.add("counit_right",
          first_difference(compose(tensor(id, c.counit), c.comult), id,
                           &c.space.labels));
  return rep;
}

/// Bialgebra compatibility: comult and counit are algebra morphisms.
inline CheckReport check_bialgebra_compat(const Fp& k, const BasedSpace& space,
                                          const LinearMap& mult, const LinearMap& unit,
                                          const LinearMap& comult, const LinearMap& counit) {
  std::size_t d = space.dim;
  auto id = LinearMap::identity(k, d);
  CheckReport rep;
  // Delta(xy) = Delta(x) Delta(y) in A (x) A
  auto lhs = compose(comult, mult);
  auto rhs = compose_chain({tensor(mult, mult),
                            tensor(tensor(id, LinearMap::flip(k, d, d)), id),
                            tensor(comult, comult)});
  rep.add("comult_is_multiplicative", first_difference(lhs, rhs));
  rep.add("comult_preserves_unit",
          first_difference(compose(comult, unit), tensor(unit, unit)));
  rep.add("counit_is_multiplicative",
          first_difference(compose(counit, mult), tensor(counit, counit)));
  rep.add("counit_preserves_unit",
          first_difference(compose(counit, unit), LinearMap::identity(k, 1)));
  return rep;
}

inline CheckReport check_bialgebra_compat(const AlgebraData& a, const CoalgebraData& c) {
  require(a.space.dim == c.space.dim, errc::shape_mismatch,
          "bialgebra parts live on different spaces");
  return check_bialgebra_compat(a.field, a.space, a.mult, a.unit, c.comult, c.counit);
}

/// Full Hopf-algebra check.  With require_coop set, also demands an
/// invertible antipode (equivalently: the co-opposite is again Hopf).
inline CheckReport check_hopf(const HopfData& h, bool require_coop = false) {
  const Fp& k = h.field;
  std::size_t d = h.space.dim;
  auto id = LinearMap::identity(k, d);
  require(h.antipode.dom_dim() == d && h.antipode.cod_dim() == d,
          errc::shape_mismatch, "antipode must map H -> H");

  CheckReport rep;
  rep.merge(check_algebra(h.algebra()));
  rep.merge(check_coalgebra(h.coalgebra()));
  rep.merge(check_bialgebra_compat(k, h.space, h.mult, h.unit, h.comult, h.counit));

  auto unit_counit = compose(h.unit, h.counit);
  rep.add("antipode_left",
          first_difference(compose_chain({h.mult, tensor(h.antipode, id), h.comult}),
                           unit_counit, &h.space.labels));
  rep.add("antipode_right",
          first_difference(compose_chain({h.mult, tensor(id, h.antipode), h.comult}),
                           unit_counit, &h.space.labels));
  if (require_coop)
    rep.add_flag("antipode_invertible", invert(h.antipode).has_value(),
                 "antipode matrix is singular");
  return rep;
}

// ---------------------------------------------------------------- computation

/// Precomputed structure constants c[i][j] -> sparse row, for fast products.
class MultTable {
 public:
  MultTable(const Fp& k, const LinearMap& mult, std::size_t dim)
      : field_(k), dim_(dim), rows_(dim * dim) {
    require(mult.dom_dim() == dim * dim && mult.cod_dim() == dim,
            errc::shape_mismatch, "mult table shape");
    for (const auto& [rc, v] : mult.entries())
      rows_[rc.second].push_back({rc.first, v});
  }

  explicit MultTable(const AlgebraData& a) : MultTable(a.field, a.mult, a.space.dim) {}

  std::size_t dim() const { return dim_; }

  Element mul(const Element& x, const Element& y) const {
    require(x.dim() == dim_ && y.dim() == dim_, errc::shape_mismatch, "mul dims");
    Element out = Element::zero(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!x.coords[i]) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!y.coords[j]) continue;
        Scalar c = field_.mul(x.coords[i], y.coords[j]);
        for (const auto& [kk, v] : rows_[i * dim_ + j])
          out.coords[kk] = field_.add(out.coords[kk], field_.mul(c, v));
      }
    }
    return out;
  }

 private:
  Fp field_;
  std::size_t dim_;
  std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> rows_;
};

inline Element one(const AlgebraData& a) {
  return a.unit.apply(Element{{1}});
}

inline Element multiply(const AlgebraData& a, const Element& x, const Element& y) {
  return a.mult.apply(tensor(a.field, x, y));
}

inline Matrix left_mult_matrix(const AlgebraData& a, const Element& x) {
  std::size_t d = a.space.dim;
  Matrix M(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Element col = multiply(a, x, Element::basis(d, j));
    for (std::size_t r = 0; r < d; ++r) M.at(r, j) = col.coords[r];
  }
  return M;
}

/// Two-sided inverse of x, if it exists.
inline std::optional<Element> try_inverse(const AlgebraData& a, const Element& x) {
  Element e = one(a);
  auto sol = solve(a.field, left_mult_matrix(a, x), e.coords);
  if (!sol) return std::nullopt;
  Element inv{*sol};
  if (multiply(a, inv, x) != e || multiply(a, x, inv) != e) return std::nullopt;
  return inv;
}

inline bool is_invertible(const AlgebraData& a, const Element& x) {
  return try_inverse(a, x).has_value();
}

struct Unit {
  Element value;
  Element inverse;
};

/// All invertible elements with cached inverses, in lexicographic order.
inline std::vector<Unit> units(const AlgebraData& a, const Budget& budget) {
  std::vector<Unit> out;
  for_each_element(a.field, a.space.dim, budget, [&](const std::vector<Scalar>& c) {
    Element x{c};
    if (x.is_zero()) return;
    if (auto inv = try_inverse(a, x)) out.push_back({x, *inv});
  });
  return out;
}

/// Group-like elements: Delta(x) = x (x) x and eps(x) = 1 (brute force).
inline std::vector<Element> grouplikes(const HopfData& h, const Budget& budget) {
  std::vector<Element> out;
  const Fp& k = h.field;
  for_each_element(k, h.space.dim, budget, [&](const std::vector<Scalar>& c) {
    Element x{c};
    if (x.is_zero()) return;
    if (h.counit.apply(x).coords[0] != 1) return;
    if (h.comult.apply(x) == tensor(k, x, x)) out.push_back(x);
  });
  return out;
}

/// Tensor-product algebra on the flattened space (componentwise product).
inline AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b) {
  require(a.field == b.field, errc::shape_mismatch, "tensor_algebra field mismatch");
  const Fp& k = a.field;
  std::size_t da = a.space.dim, db = b.space.dim;
  auto ida = LinearMap::identity(k, da);
  auto idb = LinearMap::identity(k, db);
  // (a1 (x) b1)(a2 (x) b2) = a1 a2 (x) b1 b2
  auto mult = compose(tensor(a.mult, b.mult),
                      tensor(tensor(ida, LinearMap::flip(k, db, da)), idb));
  auto unit = tensor(a.unit, b.unit);
  return {k, tensor_space(a.space, b.space), mult, unit};
}

/// Solve g * f = unit . counit in the convolution algebra Hom(C, A);
/// the antipode is the convolution inverse of the identity.  Returns
/// nullopt when no left inverse exists.
inline std::optional<LinearMap> convolution_inverse(const CoalgebraData& c,
                                                    const AlgebraData& a,
                                                    const LinearMap& f) {
  require_coalgebra_shapes(c);
  require_algebra_shapes(a);
  std::size_t dc = c.space.dim, da = a.space.dim;
  require(f.dom_dim() == dc && f.cod_dim() == da, errc::shape_mismatch,
          "convolution_inverse: f must map C -> A");
  const Fp& k = a.field;

  // unknowns g[r][u] (r < da, u < dc), flattened as r * dc + u
  // equation (i, kk): sum_{(u,v)} Delta_i[u,v] sum_r g[r][u] (e_r f(e_v))[kk]
  //                   = eps(e_i) 1_A [kk]
  Matrix A(dc * da, da * dc);
  std::vector<Scalar> rhs(dc * da, 0);
  Element e1 = one(a);
  MultTable tab(a);
  for (std::size_t i = 0; i < dc; ++i) {
    Element di = c.comult.apply(Element::basis(dc, i));
    Scalar eps = c.counit.apply(Element::basis(dc, i)).coords[0];
    for (std::size_t kk = 0; kk < da; ++kk)
      rhs[i * da + kk] = k.mul(eps, e1.coords[kk]);
    for (std::size_t u = 0; u < dc; ++u) {
      for (std::size_t v = 0; v < dc; ++v) {
        Scalar cuv = di.coords[u * dc + v];
        if (!cuv) continue;
        Element fv = f.apply(Element::basis(dc, v));
        for (std::size_t r = 0; r < da; ++r) {
          Element prod = tab.mul(Element::basis(da, r), fv);
          for (std::size_t kk = 0; kk < da; ++kk)
            if (prod.coords[kk])
              A.at(i * da + kk, r * dc + u) =
                  k.add(A.at(i * da + kk, r * dc + u), k.mul(cuv, prod.coords[kk]));
        }
      }
    }
  }
  auto sol = solve(k, A, rhs);
  if (!sol) return std::nullopt;
  LinearMap g(k, dc, da);
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t u = 0; u < dc; ++u)
      if ((*sol)[r * dc + u]) g.set(r, u, (*sol)[r * dc + u]);
  return g;
}

}  // namespace hopfcoh
