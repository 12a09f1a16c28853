#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfcoh/radford.hpp"

namespace hopfcoh {

// Concrete model families: finite groups and their (co)ordinate Hopf
// algebras, the Taft algebras with their biproduct decomposition, and the
// diagonal (function-algebra) models attached to a group acting on a group.

// ---------------------------------------------------------------- groups

struct FiniteGroup {
  std::vector<std::string> elements;
  std::vector<std::vector<std::uint32_t>> table;  // table[i][j] = i*j
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> inverse;

  std::size_t order() const { return elements.size(); }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const { return table[i][j]; }
};

inline FiniteGroup make_group(std::vector<std::string> elements,
                              std::vector<std::vector<std::uint32_t>> table) {
  std::size_t n = elements.size();
  require(table.size() == n, errc::shape_mismatch, "group table has wrong size");
  for (const auto& row : table) {
    require(row.size() == n, errc::shape_mismatch, "group table row has wrong size");
    for (auto v : row)
      require(v < n, errc::shape_mismatch, "group table entry out of range");
  }
  // identity
  std::uint32_t id = n;
  for (std::uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) { id = e; break; }
  }
  require(id < n, errc::shape_mismatch, "group table has no identity");
  // associativity
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        require(table[table[a][b]][c] == table[a][table[b][c]],
                errc::shape_mismatch, "group table is not associative");
  // inverses
  std::vector<std::uint32_t> inv(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n; ++b)
      if (table[a][b] == id && table[b][a] == id) { inv[a] = b; found = true; break; }
    require(found, errc::shape_mismatch, "group table has a non-invertible element");
  }
  return {std::move(elements), std::move(table), id, std::move(inv)};
}

inline FiniteGroup cyclic_group(std::size_t n, const std::string& gen = "c") {
  std::vector<std::string> elements;
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back(gen + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = static_cast<std::uint32_t>((i + j) % n);
  }
  return make_group(std::move(elements), std::move(table));
}

/// A left action of D on a set of size m: act[d][x] = d.x.
struct GroupAction {
  std::vector<std::vector<std::uint32_t>> act;

  std::size_t set_size() const { return act.empty() ? 0 : act[0].size(); }
  std::uint32_t operator()(std::uint32_t d, std::uint32_t x) const { return act[d][x]; }
};

inline GroupAction make_action(const FiniteGroup& d,
                               std::vector<std::vector<std::uint32_t>> act) {
  std::size_t n = d.order();
  require(act.size() == n, errc::not_an_action, "action table has wrong number of rows");
  std::size_t m = act.empty() ? 0 : act[0].size();
  for (const auto& row : act) {
    require(row.size() == m, errc::not_an_action, "action table row has wrong size");
    std::vector<bool> seen(m, false);
    for (auto v : row) {
      require(v < m && !seen[v], errc::not_an_action, "action row is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t x = 0; x < m; ++x)
    require(act[d.identity][x] == x, errc::not_an_action,
            "identity does not act trivially");
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t x = 0; x < m; ++x)
        require(act[a][act[b][x]] == act[d.mul(a, b)][x], errc::not_an_action,
                "action is not compatible with the group law");
  return {std::move(act)};
}

inline GroupAction trivial_action(const FiniteGroup& d, std::size_t m) {
  std::vector<std::vector<std::uint32_t>> act(d.order(), std::vector<std::uint32_t>(m));
  for (auto& row : act)
    for (std::size_t x = 0; x < m; ++x) row[x] = static_cast<std::uint32_t>(x);
  return make_action(d, std::move(act));
}

/// Z/2 acting on an abelian group A by inversion.
inline GroupAction inversion_action(const FiniteGroup& z2, const FiniteGroup& a) {
  require(z2.order() == 2, errc::not_an_action, "inversion action needs Z/2");
  std::vector<std::vector<std::uint32_t>> act(2, std::vector<std::uint32_t>(a.order()));
  for (std::uint32_t x = 0; x < a.order(); ++x) {
    act[0][x] = x;
    act[1][x] = a.inverse[x];
  }
  return make_action(z2, std::move(act));
}

inline bool acts_by_automorphisms(const FiniteGroup& d, const FiniteGroup& a,
                                  const GroupAction& act) {
  if (act.set_size() != a.order()) return false;
  for (std::uint32_t g = 0; g < d.order(); ++g)
    for (std::uint32_t x = 0; x < a.order(); ++x)
      for (std::uint32_t y = 0; y < a.order(); ++y)
        if (act(g, a.mul(x, y)) != a.mul(act(g, x), act(g, y))) return false;
  return true;
}

/// Semidirect product G x| A for a left action of G on A by automorphisms,
/// with multiplication (g, a)(h, b) = (gh, (h^-1 . a) b).  Elements are
/// indexed g * |A| + a.
inline FiniteGroup semidirect_product(const FiniteGroup& g, const FiniteGroup& a,
                                      const GroupAction& act) {
  require(acts_by_automorphisms(g, a, act), errc::not_an_action,
          "semidirect product needs an action by automorphisms");
  std::size_t ng = g.order(), na = a.order(), n = ng * na;
  std::vector<std::string> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = 0; j < na; ++j)
      elements.push_back("(" + g.elements[i] + "|" + a.elements[j] + ")");
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t gi = 0; gi < ng; ++gi)
    for (std::uint32_t ai = 0; ai < na; ++ai)
      for (std::uint32_t hj = 0; hj < ng; ++hj)
        for (std::uint32_t bj = 0; bj < na; ++bj) {
          std::uint32_t gh = g.mul(gi, hj);
          std::uint32_t ab = a.mul(act(g.inverse[hj], ai), bj);
          table[gi * na + ai][hj * na + bj] = gh * na + ab;
        }
  return make_group(std::move(elements), std::move(table));
}

inline FiniteGroup symmetric_group_3() {
  FiniteGroup s = cyclic_group(2, "s");
  FiniteGroup r = cyclic_group(3, "r");
  return semidirect_product(s, r, inversion_action(s, r));
}

// ---------------------------------------------------------------- group Hopf algebras

/// Group algebra k[G]: basis g, products from the group law, Delta(g) = g(x)g.
inline HopfData group_algebra(const Fp& k, const FiniteGroup& g) {
  std::size_t n = g.order();
  BasedSpace space = BasedSpace::make("k[G]", n, g.elements);
  LinearMap mult(k, {n, n}, {n});
  LinearMap unit(k, {1}, {n});
  LinearMap comult(k, {n}, {n, n});
  LinearMap counit(k, {n}, {1});
  LinearMap antipode(k, {n}, {n});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult.set(g.table[i][j], i * n + j, 1);
    comult.set(i * n + i, i, 1);
    counit.set(0, i, 1);
    antipode.set(g.inverse[i], i, 1);
  }
  unit.set(g.identity, 0, 1);
  return {k, space, mult, unit, comult, counit, antipode};
}

/// Function algebra k^G: basis of delta functions d[g], pointwise product,
/// Delta(d[g]) = sum_{uv=g} d[u] (x) d[v].
inline HopfData function_algebra(const Fp& k, const FiniteGroup& g) {
  std::size_t n = g.order();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : g.elements) labels.push_back("d[" + e + "]");
  BasedSpace space = BasedSpace::make("k^G", n, labels);
  LinearMap mult(k, {n, n}, {n});
  LinearMap unit(k, {1}, {n});
  LinearMap comult(k, {n}, {n, n});
  LinearMap counit(k, {n}, {1});
  LinearMap antipode(k, {n}, {n});
  for (std::size_t u = 0; u < n; ++u) {
    mult.set(u, u * n + u, 1);
    unit.set(u, 0, 1);
    for (std::size_t v = 0; v < n; ++v) comult.set(u * n + v, g.table[u][v], 1);
    antipode.set(g.inverse[u], u, 1);
  }
  counit.set(0, g.identity, 1);
  return {k, space, mult, unit, comult, counit, antipode};
}

// ---------------------------------------------------------------- Taft algebras

inline std::string power_label(const std::string& gen, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return gen;
  return gen + std::to_string(e);
}

/// The Taft algebra of dimension n^2 over F_p (requires n | p - 1): generated
/// by a grouplike g and a skew-primitive h with g^n = 1, h^n = 0 and
/// h g = zeta g h for zeta a primitive n-th root of unity.  Basis g^a h^b,
/// indexed a * n + b.
inline HopfData taft_hopf(std::size_t n, std::uint64_t p) {
  Fp k(p);
  Scalar zeta = primitive_root_of_unity(k, n);
  std::size_t dim = n * n;
  auto idx = [n](std::size_t a, std::size_t b) { return a * n + b; };

  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::string l = power_label("g", a) + power_label("h", b);
      labels.push_back(l.empty() ? "1" : l);
    }
  BasedSpace space = BasedSpace::make("T", dim, labels);

  LinearMap mult(k, {dim, dim}, {dim});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (b + d >= n) continue;  // h^n = 0
          mult.set(idx((a + c) % n, b + d), idx(a, b) * dim + idx(c, d),
                   k.pow(zeta, b * c));
        }

  LinearMap unit(k, {1}, {dim});
  unit.set(idx(0, 0), 0, 1);

  LinearMap comult(k, {dim}, {dim, dim});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t s = 0; s <= b; ++s)
        comult.set(idx(a, s) * dim + idx((a + s) % n, b - s), idx(a, b),
                   zeta_binomial(k, b, s, zeta));

  LinearMap counit(k, {dim}, {1});
  for (std::size_t a = 0; a < n; ++a) counit.set(0, idx(a, 0), 1);

  // Antipode: extend sigma(g) = g^{n-1}, sigma(h) = -zeta^{-1} g^{n-1} h
  // anti-multiplicatively, so sigma(g^a h^b) = sigma(h)^b sigma(g)^a.
  AlgebraData alg{k, space, mult, unit};
  MultTable mt(alg);
  Element sg = Element::basis(dim, idx((n - 1) % n, 0));
  Element sh = Element::zero(dim);
  if (n >= 2) sh.coords[idx(n - 1, 1)] = k.neg(k.inv(zeta));
  std::vector<Element> sg_pow{Element::basis(dim, idx(0, 0))};
  std::vector<Element> sh_pow{Element::basis(dim, idx(0, 0))};
  for (std::size_t i = 1; i < n; ++i) {
    sg_pow.push_back(mt.mul(sg_pow.back(), sg));
    sh_pow.push_back(mt.mul(sh_pow.back(), sh));
  }
  LinearMap antipode(k, {dim}, {dim});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element v = mt.mul(sh_pow[b], sg_pow[a]);
      for (std::size_t r = 0; r < dim; ++r)
        if (v.coords[r] != 0) antipode.set(r, idx(a, b), v.coords[r]);
    }

  return {k, space, mult, unit, comult, counit, antipode};
}

/// The biproduct presentation of the Taft algebra: the group part k[Z/n]
/// (grouplike u) and the braided line E = k[y]/(y^n) with y . u = zeta y,
/// coaction y^i -> y^i (x) u^i, Delta(y^i) via zeta-binomials, and
/// sigma(y^i) = (-1)^i zeta^{i(i-1)/2} y^i.
struct TaftPair {
  HopfData group_part;        // k[Z/n]
  BraidedHopfData line_part;  // E in YD over k[Z/n]
  Scalar zeta;
};

inline TaftPair taft_pair(std::size_t n, std::uint64_t p) {
  Fp k(p);
  Scalar zeta = primitive_root_of_unity(k, n);
  HopfData h = group_algebra(k, cyclic_group(n, "u"));

  std::vector<std::string> labels;
  for (std::size_t b = 0; b < n; ++b) {
    std::string l = power_label("y", b);
    labels.push_back(l.empty() ? "1" : l);
  }
  BasedSpace space = BasedSpace::make("E", n, labels);

  LinearMap action(k, {n, n}, {n});
  LinearMap coaction(k, {n}, {n, n});
  LinearMap mult(k, {n, n}, {n});
  LinearMap unit(k, {1}, {n});
  LinearMap comult(k, {n}, {n, n});
  LinearMap counit(k, {n}, {1});
  LinearMap antipode(k, {n}, {n});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      action.set(i, i * n + j, k.pow(zeta, i * j));
      if (i + j < n) mult.set(i + j, i * n + j, 1);
    }
    coaction.set(i * n + i, i, 1);
    for (std::size_t s = 0; s <= i; ++s)
      comult.set(s * n + (i - s), i, zeta_binomial(k, i, s, zeta));
    Scalar sign = (i % 2 == 1) ? k.neg(1) : 1;
    antipode.set(i, i, k.mul(sign, k.pow(zeta, i * (i - 1) / 2)));
  }
  unit.set(0, 0, 1);
  counit.set(0, 0, 1);

  BraidedHopfData e{k, space, action, coaction, mult, unit, comult, counit, antipode};
  return {h, e, zeta};
}

/// The standard coefficient algebra for the Taft biproduct: F = E itself,
/// with H-coaction y^i -> y^i (x) u^i and E-coaction Delta_E.
inline BraidedComoduleAlgebra taft_coefficient(const TaftPair& t) {
  const BraidedHopfData& e = t.line_part;
  return {e.algebra(), e.coaction, e.comult};
}

/// E = k[y]/(y^n) as a comodule algebra directly over the Taft algebra,
/// with coaction y^b -> sum_s (b s)_zeta y^s (x) g^s h^{b-s}.
inline ComoduleAlgebra taft_line_over_taft(std::size_t n, std::uint64_t p) {
  Fp k(p);
  Scalar zeta = primitive_root_of_unity(k, n);
  std::size_t dim_h = n * n;

  std::vector<std::string> labels;
  for (std::size_t b = 0; b < n; ++b) {
    std::string l = power_label("y", b);
    labels.push_back(l.empty() ? "1" : l);
  }
  BasedSpace space = BasedSpace::make("E", n, labels);
  LinearMap mult(k, {n, n}, {n});
  LinearMap unit(k, {1}, {n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) mult.set(i + j, i * n + j, 1);
  unit.set(0, 0, 1);

  LinearMap coaction(k, {n}, {n, dim_h});
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t s = 0; s <= b; ++s)
      coaction.set(s * dim_h + (s * n + (b - s)), b, zeta_binomial(k, b, s, zeta));

  return {AlgebraData{k, space, mult, unit}, coaction};
}

// ---------------------------------------------------------------- diagonal models

/// k^A as a braided Hopf algebra over k^D, for a group D acting on a group A
/// by automorphisms: trivial action (via the counit), coaction
/// d[a] -> sum_d d[d.a] (x) d[d], and the Hopf structure of k^A.
inline BraidedHopfData function_braided(const Fp& k, const FiniteGroup& d,
                                        const FiniteGroup& a, const GroupAction& act) {
  require(acts_by_automorphisms(d, a, act), errc::not_an_action,
          "braided function algebra needs an action by automorphisms");
  std::size_t nd = d.order(), na = a.order();
  HopfData ka = function_algebra(k, a);

  LinearMap action(k, {na, nd}, {na});
  LinearMap coaction(k, {na}, {na, nd});
  for (std::uint32_t x = 0; x < na; ++x) {
    action.set(x, x * nd + d.identity, 1);
    for (std::uint32_t g = 0; g < nd; ++g) coaction.set(act(g, x) * nd + g, x, 1);
  }
  return {k, ka.space, action, coaction, ka.mult, ka.unit, ka.comult, ka.counit,
          ka.antipode};
}

/// k^X as a comodule algebra over k^D for a left D-action on a finite set X:
/// pointwise product, coaction d[x] -> sum_d d[d.x] (x) d[d].
inline ComoduleAlgebra function_comodule_algebra(const Fp& k, const FiniteGroup& d,
                                                 const std::vector<std::string>& x_labels,
                                                 const GroupAction& act) {
  std::size_t nd = d.order(), nx = x_labels.size();
  require(act.set_size() == nx, errc::shape_mismatch,
          "action table does not match the set");
  std::vector<std::string> labels;
  for (const auto& l : x_labels) labels.push_back("d[" + l + "]");
  BasedSpace space = BasedSpace::make("k^X", nx, labels);
  LinearMap mult(k, {nx, nx}, {nx});
  LinearMap unit(k, {1}, {nx});
  LinearMap coaction(k, {nx}, {nx, nd});
  for (std::uint32_t x = 0; x < nx; ++x) {
    mult.set(x, x * nx + x, 1);
    unit.set(x, 0, 1);
    for (std::uint32_t g = 0; g < nd; ++g) coaction.set(act(g, x) * nd + g, x, 1);
  }
  return {AlgebraData{k, space, mult, unit}, coaction};
}

/// The one-dimensional braided Hopf algebra E = k over any H (trivial action
/// and coaction); the degenerate value for which star products collapse to
/// plain tensor products.
inline BraidedHopfData trivial_braided(const HopfData& h) {
  const Fp& k = h.field;
  BasedSpace space = BasedSpace::make("k", 1, {"1"});
  LinearMap mult(k, {1, 1}, {1});
  mult.set(0, 0, 1);
  auto id1 = LinearMap::identity(k, 1);
  return {k, space, h.counit, h.unit, mult, id1, id1, id1, id1};
}

/// The one-dimensional comodule algebra F = k over H (coaction = unit of H);
/// its cocycles are the grouplike elements of H.
inline ComoduleAlgebra trivial_coefficient(const HopfData& h) {
  const Fp& k = h.field;
  BasedSpace space = BasedSpace::make("k", 1, {"1"});
  LinearMap mult(k, {1, 1}, {1});
  mult.set(0, 0, 1);
  LinearMap unit = LinearMap::identity(k, 1);
  return {AlgebraData{k, space, mult, unit}, h.unit};
}

/// The coefficient algebra k^A over (k^D, k^A-braided): H-coaction from the
/// D-action on A, E-coaction Delta_{k^A}.
inline BraidedComoduleAlgebra function_coefficient(const Fp& k, const FiniteGroup& d,
                                                   const FiniteGroup& a,
                                                   const GroupAction& act) {
  BraidedHopfData e = function_braided(k, d, a, act);
  return {e.algebra(), e.coaction, e.comult};
}

/// k^X as a braided comodule algebra over (k^G, k^A-braided) for a finite set
/// X carrying left actions of both G and A: the H-coaction comes from the
/// G-action and the E-coaction from the A-action,
///   d[x] -> sum_g d[g.x] (x) d[g]     and     d[x] -> sum_a d[a.x] (x) d[a].
/// Lawful when the actions satisfy g.(a.x) = (g.a).(g.x) for the G-action on A
/// that defines the braided structure.
inline BraidedComoduleAlgebra function_coefficient_on_set(
    const Fp& k, const FiniteGroup& g, const FiniteGroup& a,
    const std::vector<std::string>& x_labels, const GroupAction& g_on_x,
    const GroupAction& a_on_x) {
  ComoduleAlgebra over_g = function_comodule_algebra(k, g, x_labels, g_on_x);
  std::size_t na = a.order(), nx = x_labels.size();
  require(a_on_x.set_size() == nx, errc::shape_mismatch,
          "second action table does not match the set");
  LinearMap coaction_e(k, {nx}, {nx, na});
  for (std::uint32_t x = 0; x < nx; ++x)
    for (std::uint32_t b = 0; b < na; ++b) coaction_e.set(a_on_x(b, x) * na + b, x, 1);
  return {over_g.algebra, over_g.coaction, coaction_e};
}

}  // namespace hopfcoh
