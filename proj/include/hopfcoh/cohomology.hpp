#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hopfcoh/models.hpp"
#include "hopfcoh/radford.hpp"

namespace hopfcoh {

// Non-abelian cohomology of a two-step algebra diagram
//
//          d0                d0
//   A0 =======> A1 ========> A2          (d1 below d0, d2 below d1)
//          d1                d1, d2
//
// H0 = invertible equalizer of (d0, d1); Z1 = invertible X in A1 with
// d2(X) d0(X) = d1(X); H1 = Z1 / units of A0 acting by
// X -> d1(x)^-1 X d0(x).

struct Diagram {
  AlgebraData a0, a1, a2;
  LinearMap d0_1, d1_1;        // A0 -> A1
  LinearMap d0_2, d1_2, d2_2;  // A1 -> A2
  // Retraction A1 -> A0 (a counit slice); when present, Z1 enumeration is
  // restricted to the normalized affine subspace {X : normalizer(X) = 1}.
  std::optional<LinearMap> normalizer;
};

inline CheckReport check_diagram(const Diagram& d) {
  CheckReport rep;
  rep.add("coface_d1d0_eq_d0d0", first_difference(compose(d.d1_2, d.d0_1),
                                                  compose(d.d0_2, d.d0_1)));
  rep.add("coface_d2d0_eq_d0d1", first_difference(compose(d.d2_2, d.d0_1),
                                                  compose(d.d0_2, d.d1_1)));
  rep.add("coface_d2d1_eq_d1d1", first_difference(compose(d.d2_2, d.d1_1),
                                                  compose(d.d1_2, d.d1_1)));

  auto add_morphism_items = [&rep](const std::string& name, const LinearMap& f,
                                   const AlgebraData& dom, const AlgebraData& cod) {
    rep.add(name + "_multiplicative",
            first_difference(compose(f, dom.mult), compose(cod.mult, tensor(f, f))));
    rep.add(name + "_unital", first_difference(compose(f, dom.unit), cod.unit));
  };
  add_morphism_items("d0_1", d.d0_1, d.a0, d.a1);
  add_morphism_items("d1_1", d.d1_1, d.a0, d.a1);
  add_morphism_items("d0_2", d.d0_2, d.a1, d.a2);
  add_morphism_items("d1_2", d.d1_2, d.a1, d.a2);
  add_morphism_items("d2_2", d.d2_2, d.a1, d.a2);

  if (d.normalizer) {
    rep.add("normalizer_retracts_d0",
            first_difference(compose(*d.normalizer, d.d0_1),
                             LinearMap::identity(d.a0.field, d.a0.space.dim)));
    rep.add("normalizer_retracts_d1",
            first_difference(compose(*d.normalizer, d.d1_1),
                             LinearMap::identity(d.a0.field, d.a0.space.dim)));
  }
  return rep;
}

/// Diagram of a comodule algebra F over H: levels F, F(x)H, F(x)H(x)H with
/// faces coaction / insert-unit and coaction(x)id / id(x)comult / insert-unit.
inline Diagram build_diagram(const HopfData& h, const ComoduleAlgebra& f,
                             bool check_input = true) {
  if (check_input) {
    CheckReport rep = check_comodule_algebra(h, f);
    require(rep.ok(), errc::prerequisite_failed,
            "coefficient is not a comodule algebra: " + rep.summary());
  }
  const Fp& k = h.field;
  std::size_t df = f.algebra.space.dim, dh = h.space.dim;
  auto idf = LinearMap::identity(k, df);
  AlgebraData ha = h.algebra();
  AlgebraData a1 = tensor_algebra(f.algebra, ha);
  AlgebraData a2 = tensor_algebra(a1, ha);
  return {f.algebra,
          a1,
          a2,
          f.coaction,
          tensor(idf, h.unit),
          tensor(f.coaction, LinearMap::identity(k, dh)),
          tensor(idf, h.comult),
          tensor(LinearMap::identity(k, df * dh), h.unit),
          tensor(idf, h.counit)};
}

/// Star diagram of a coefficient algebra F over (H, E): levels F, F*E,
/// F*E*E with the braided multiplications and the E-coaction faces.
inline Diagram build_star_diagram(const HopfData& h, const BraidedHopfData& e,
                                  const BraidedComoduleAlgebra& f,
                                  bool check_input = true) {
  if (check_input) {
    CheckReport rep = check_braided_comodule_algebra(h, e, f);
    require(rep.ok(), errc::prerequisite_failed,
            "coefficient is not a braided comodule algebra: " + rep.summary());
  }
  const Fp& k = h.field;
  std::size_t df = f.algebra.space.dim, de = e.space.dim;
  auto idf = LinearMap::identity(k, df);
  BraidedComoduleAlgebra fe = star_extension(h, e, f);
  BraidedComoduleAlgebra fee = star_extension(h, e, fe);
  return {f.algebra,
          fe.algebra,
          fee.algebra,
          f.coaction_e,
          tensor(idf, e.unit),
          tensor(f.coaction_e, LinearMap::identity(k, de)),
          tensor(idf, e.comult),
          tensor(LinearMap::identity(k, df * de), e.unit),
          tensor(idf, e.counit)};
}

/// Levels tensored with an algebra A, faces extended by the identity.
/// (Used for coefficient extension along H; no normalizer is carried over.)
inline Diagram tensor_diagram(const Diagram& d, const AlgebraData& a) {
  auto ida = LinearMap::identity(a.field, a.space.dim);
  return {tensor_algebra(d.a0, a), tensor_algebra(d.a1, a), tensor_algebra(d.a2, a),
          tensor(d.d0_1, ida),     tensor(d.d1_1, ida),     tensor(d.d0_2, ida),
          tensor(d.d1_2, ida),     tensor(d.d2_2, ida),     std::nullopt};
}

// ---------------------------------------------------------------- cocycle ops

/// Cached multiplication tables and face maps for one diagram.
class CocycleOps {
 public:
  explicit CocycleOps(const Diagram& d)
      : diag_(d), mult1_(d.a1), mult2_(d.a2), one1_(one(d.a1)) {}

  const Diagram& diagram() const { return diag_; }
  const Element& one_a1() const { return one1_; }

  bool equation_holds(const Element& x) const {
    return mult2_.mul(diag_.d2_2.apply(x), diag_.d0_2.apply(x)) ==
           diag_.d1_2.apply(x);
  }

  bool is_cocycle(const Element& x) const {
    return equation_holds(x) && is_invertible(diag_.a1, x);
  }

  bool is_normalized(const Element& x) const {
    require(diag_.normalizer.has_value(), errc::shape_mismatch,
            "diagram has no normalizer");
    return diag_.normalizer->apply(x) == one(diag_.a0);
  }

  /// X -> d1(x)^-1 X d0(x) for a unit x of A0.
  Element act(const Element& x_cocycle, const Element& u, const Element& u_inv) const {
    return mult1_.mul(mult1_.mul(diag_.d1_1.apply(u_inv), x_cocycle),
                      diag_.d0_1.apply(u));
  }

  /// Same, computing the inverse; throws not_invertible for non-units.
  Element act(const Element& x_cocycle, const Element& u) const {
    auto inv = try_inverse(diag_.a0, u);
    require(inv.has_value(), errc::not_invertible,
            "the action is only defined for units of A0");
    return act(x_cocycle, u, *inv);
  }

  /// A unit x of A0 with X -> x = Y, if one exists.  The condition
  /// X d0(x) = d1(x) Y is linear in x, so we search the kernel of that map
  /// for an invertible element.
  std::optional<Element> connecting_unit(const Element& x_cocycle, const Element& y_cocycle,
                                         const Budget& budget) const {
    const Fp& k = diag_.a0.field;
    std::size_t d0 = diag_.a0.space.dim, d1 = diag_.a1.space.dim;
    Matrix m(d1, d0);
    for (std::size_t j = 0; j < d0; ++j) {
      Element ej = Element::basis(d0, j);
      Element lhs = mult1_.mul(x_cocycle, diag_.d0_1.apply(ej));
      Element rhs = mult1_.mul(diag_.d1_1.apply(ej), y_cocycle);
      for (std::size_t r = 0; r < d1; ++r)
        m.at(r, j) = k.sub(lhs.coords[r], rhs.coords[r]);
    }
    auto basis = nullspace(k, m);
    std::optional<Element> found;
    for_each_element(k, basis.size(), budget, [&](const std::vector<Scalar>& t) {
      if (found) return;
      Element x = Element::zero(d0);
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (t[i]) x = add(k, x, scale(k, t[i], Element{basis[i]}));
      if (x.is_zero()) return;
      if (is_invertible(diag_.a0, x)) found = x;
    });
    return found;
  }

 private:
  Diagram diag_;
  MultTable mult1_, mult2_;
  Element one1_;
};

// ---------------------------------------------------------------- H0 / Z1 / H1

/// Invertible elements of A0 equalizing d0 and d1, sorted.
inline std::vector<Element> compute_h0(const Diagram& d, const Budget& budget) {
  const Fp& k = d.a0.field;
  auto basis = nullspace(k, to_matrix(sub(d.d0_1, d.d1_1)));
  std::vector<Element> out;
  for_each_element(k, basis.size(), budget, [&](const std::vector<Scalar>& t) {
    Element x = Element::zero(d.a0.space.dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (t[i]) x = add(k, x, scale(k, t[i], Element{basis[i]}));
    if (x.is_zero()) return;
    if (is_invertible(d.a0, x)) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  // the result is a group: closed under products and inverses, with the unit
  // (verified here when small enough; a failure would mean a broken diagram)
  if (out.size() * out.size() <= budget.limit) {
    auto member = [&](const Element& x) {
      return std::binary_search(out.begin(), out.end(), x);
    };
    require(member(one(d.a0)), errc::prerequisite_failed,
            "degree-zero set is missing the unit");
    for (const auto& x : out) {
      require(member(*try_inverse(d.a0, x)), errc::prerequisite_failed,
              "degree-zero set is not closed under inverses");
      for (const auto& y : out)
        require(member(multiply(d.a0, x, y)), errc::prerequisite_failed,
                "degree-zero set is not closed under products");
    }
  }
  return out;
}

/// All cocycles, sorted.  With a normalizer present (and force_full unset)
/// only the normalized affine subspace is enumerated; by the normalization
/// lemma this is the whole cocycle set.
inline std::vector<Element> compute_z1(const Diagram& d, const Budget& budget,
                                       bool force_full = false) {
  const Fp& k = d.a1.field;
  std::size_t d1 = d.a1.space.dim;
  CocycleOps ops(d);
  std::vector<Element> out;

  if (d.normalizer && !force_full) {
    Matrix n = to_matrix(*d.normalizer);
    auto x0 = solve(k, n, one(d.a0).coords);
    require(x0.has_value(), errc::prerequisite_failed,
            "normalizer has no section");
    auto basis = nullspace(k, n);
    for_each_element(k, basis.size(), budget, [&](const std::vector<Scalar>& t) {
      Element x{*x0};
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (t[i]) x = add(k, x, scale(k, t[i], Element{basis[i]}));
      if (ops.equation_holds(x) && is_invertible(d.a1, x)) out.push_back(x);
    });
  } else {
    for_each_element(k, d1, budget, [&](const std::vector<Scalar>& c) {
      Element x{c};
      if (x.is_zero()) return;
      if (ops.equation_holds(x) && is_invertible(d.a1, x)) out.push_back(x);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct H1Class {
  Element rep;                       // lexicographically least cocycle in the orbit
  std::vector<std::size_t> members;  // indices into the Z1 vector, sorted
  bool distinguished = false;        // orbit of the unit cocycle
};

struct H1Result {
  std::vector<H1Class> classes;  // sorted by representative

  std::size_t class_index_of_member(std::size_t z1_index) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (auto m : classes[c].members)
        if (m == z1_index) return c;
    fail(errc::shape_mismatch, "cocycle index outside every class");
  }
};

namespace detail {
struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t i, std::size_t j) { parent[find(i)] = find(j); }
};

inline H1Result group_orbits(const std::vector<Element>& z1, UnionFind& uf,
                             const Element& distinguished_element) {
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < z1.size(); ++i) orbits[uf.find(i)].push_back(i);
  H1Result res;
  for (auto& [root, members] : orbits) {
    H1Class cls;
    cls.members = members;  // already sorted (ascending indices)
    cls.rep = z1[members.front()];  // z1 is sorted, so first member is lex-least
    for (auto m : members)
      if (z1[m] == distinguished_element) cls.distinguished = true;
    res.classes.push_back(std::move(cls));
  }
  std::sort(res.classes.begin(), res.classes.end(),
            [](const H1Class& a, const H1Class& b) { return a.rep < b.rep; });
  return res;
}
}  // namespace detail

/// Orbits of the unit group of A0 on Z1.  Throws prerequisite_failed if the
/// action ever leaves the cocycle set (it cannot, for a lawful diagram).
inline H1Result compute_h1(const Diagram& d, const std::vector<Element>& z1,
                           const Budget& budget) {
  CocycleOps ops(d);
  std::map<Element, std::size_t> index;
  for (std::size_t i = 0; i < z1.size(); ++i) index[z1[i]] = i;
  auto us = units(d.a0, budget);
  detail::UnionFind uf(z1.size());
  for (std::size_t i = 0; i < z1.size(); ++i)
    for (const auto& u : us) {
      Element y = ops.act(z1[i], u.value, u.inverse);
      auto it = index.find(y);
      require(it != index.end(), errc::prerequisite_failed,
              "unit action left the cocycle set");
      uf.unite(i, it->second);
    }
  return detail::group_orbits(z1, uf, ops.one_a1());
}

struct CohomologyResult {
  std::vector<Element> h0;
  std::vector<Element> z1;
  H1Result h1;
};

inline CohomologyResult compute_cohomology(const Diagram& d, const Budget& budget) {
  CohomologyResult res;
  res.h0 = compute_h0(d, budget);
  res.z1 = compute_z1(d, budget);
  res.h1 = compute_h1(d, res.z1, budget);
  return res;
}

// ---------------------------------------------------------------- box pairs

/// Compatibility of a pair (X^H, X^E) in Z1(H, F) x Z1*(E, F) and the glue
/// into a single cocycle over the biproduct.  The two sides of the
/// compatibility equation are bilinear, so they are precomposed into fixed
/// linear maps applied to X^E (x) X^H resp. X^H (x) X^E.
struct BoxContext {
  LinearMap lhs;       // F(x)E(x)F(x)H -> F(x)E(x)H, applied to xe (x) xh
  LinearMap rhs;       // F(x)H(x)F(x)E -> F(x)E(x)H, applied to xh (x) xe
  LinearMap assemble;  // F(x)H(x)F(x)E -> F(x)H(x)E, applied to xh (x) xe
  LinearMap split_h;   // F(x)H(x)E -> F(x)H
  LinearMap split_e;   // F(x)H(x)E -> F(x)E
  Fp field;
};

inline BoxContext make_box_context(const HopfData& h, const BraidedHopfData& e,
                                   const BraidedComoduleAlgebra& f) {
  const Fp& k = h.field;
  std::size_t df = f.algebra.space.dim, dh = h.space.dim, de = e.space.dim;
  auto idf = LinearMap::identity(k, df);
  auto idh = LinearMap::identity(k, dh);
  auto ide = LinearMap::identity(k, de);

  // sum over terms of xe = g (x) e and xh = f (x) h:
  //   g f0_0 (x) (e . f0_1) f1 (x) h, where rho_E(f) = f0 (x) f1 and
  //   rho_H(f0) = f0_0 (x) f0_1.
  auto lhs = compose_chain(
      {tensor_chain({idf, e.mult, idh}),
       tensor_chain({f.algebra.mult, e.action, ide, idh}),
       tensor_chain({idf, LinearMap::flip(k, de, df), idh, ide, idh}),
       tensor_chain({idf, ide, f.coaction_h, ide, idh}),
       tensor_chain({idf, ide, f.coaction_e, idh})});

  //   f g_0 (x) e_0 (x) h g_1 e_1, where rho_H(g) = g_0 (x) g_1 and
  //   rho_H(e) = e_0 (x) e_1 (the YD coaction of E).
  auto rhs = compose_chain(
      {tensor_chain({f.algebra.mult, ide, compose(h.mult, tensor(h.mult, idh))}),
       tensor_chain({idf, idf, LinearMap::flip(k, dh * dh, de), idh}),
       tensor_chain({idf, LinearMap::flip(k, dh, df), idh, ide, idh}),
       tensor_chain({idf, idh, idf, idh, e.coaction}),
       tensor_chain({idf, idh, f.coaction_h, ide})});

  //   f g_0 (x) h g_1 (x) e.
  auto assemble = compose_chain(
      {tensor_chain({f.algebra.mult, h.mult, ide}),
       tensor_chain({idf, LinearMap::flip(k, dh, df), idh, ide}),
       tensor_chain({idf, idh, f.coaction_h, ide})});

  auto split_h = tensor_chain({idf, idh, e.counit});
  auto split_e = tensor_chain({idf, h.counit, ide});
  return {lhs, rhs, assemble, split_h, split_e, k};
}

inline bool box_compatible(const BoxContext& ctx, const Element& xh, const Element& xe) {
  return ctx.lhs.apply(tensor(ctx.field, xe, xh)) ==
         ctx.rhs.apply(tensor(ctx.field, xh, xe));
}

inline Element assemble_pair(const BoxContext& ctx, const Element& xh, const Element& xe) {
  return ctx.assemble.apply(tensor(ctx.field, xh, xe));
}

inline std::pair<Element, Element> split_cocycle(const BoxContext& ctx, const Element& x) {
  return {ctx.split_h.apply(x), ctx.split_e.apply(x)};
}

/// assemble_pair with the compatibility precondition enforced.
inline Element assemble_pair_checked(const BoxContext& ctx, const Element& xh,
                                     const Element& xe) {
  require(box_compatible(ctx, xh, xe), errc::incompatible_pair,
          "pair fails the compatibility relation");
  return assemble_pair(ctx, xh, xe);
}

/// split_cocycle with cocycle membership enforced against the glued diagram.
inline std::pair<Element, Element> split_cocycle_checked(const BoxContext& ctx,
                                                         const CocycleOps& glued_ops,
                                                         const Element& x) {
  require(glued_ops.is_cocycle(x), errc::prerequisite_failed,
          "element is not a cocycle over the glued algebra");
  return split_cocycle(ctx, x);
}

struct BoxSet {
  std::vector<Element> z1_h;  // cocycles of the plain diagram over H
  std::vector<Element> z1_e;  // cocycles of the star diagram over E
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // compatible indices
};

inline BoxSet build_box_set(const HopfData& h, const BraidedHopfData& e,
                            const BraidedComoduleAlgebra& f, const Budget& budget,
                            bool check_input = true) {
  Diagram plain = build_diagram(h, f.over_h(), check_input);
  Diagram star = build_star_diagram(h, e, f, check_input);
  BoxSet box;
  box.z1_h = compute_z1(plain, budget);
  box.z1_e = compute_z1(star, budget);
  BoxContext ctx = make_box_context(h, e, f);
  for (std::uint32_t i = 0; i < box.z1_h.size(); ++i)
    for (std::uint32_t j = 0; j < box.z1_e.size(); ++j)
      if (box_compatible(ctx, box.z1_h[i], box.z1_e[j]))
        box.pairs.push_back({i, j});
  return box;
}

struct BoxOrbits {
  H1Result classes;                        // reps are assembled glued cocycles
  std::vector<std::size_t> class_of_pair;  // pairs index -> class index
};

/// Orbits of the units of F acting diagonally on the compatible pairs.
/// Class representatives are the assembled cocycles over the biproduct, so
/// the result is directly comparable with compute_h1 of the glued diagram.
inline BoxOrbits box_h1(const HopfData& h, const BraidedHopfData& e,
                        const BraidedComoduleAlgebra& f, const BoxSet& box,
                        const Budget& budget) {
  BoxContext ctx = make_box_context(h, e, f);
  CocycleOps ops_h(build_diagram(h, f.over_h(), false));
  CocycleOps ops_e(build_star_diagram(h, e, f, false));

  std::vector<Element> assembled;
  assembled.reserve(box.pairs.size());
  for (auto [i, j] : box.pairs)
    assembled.push_back(assemble_pair(ctx, box.z1_h[i], box.z1_e[j]));

  std::map<std::pair<Element, Element>, std::size_t> index;
  for (std::size_t t = 0; t < box.pairs.size(); ++t)
    index[{box.z1_h[box.pairs[t].first], box.z1_e[box.pairs[t].second]}] = t;

  auto us = units(f.algebra, budget);
  detail::UnionFind uf(box.pairs.size());
  for (std::size_t t = 0; t < box.pairs.size(); ++t) {
    const Element& xh = box.z1_h[box.pairs[t].first];
    const Element& xe = box.z1_e[box.pairs[t].second];
    for (const auto& u : us) {
      Element yh = ops_h.act(xh, u.value, u.inverse);
      Element ye = ops_e.act(xe, u.value, u.inverse);
      auto it = index.find({yh, ye});
      require(it != index.end(), errc::prerequisite_failed,
              "diagonal unit action left the compatible set");
      uf.unite(t, it->second);
    }
  }

  // Members are positions in the by-assembled-value ordering, so that the
  // class list matches compute_h1 of the glued diagram entry for entry.
  std::vector<std::size_t> order(box.pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return assembled[a] < assembled[b];
  });
  std::vector<std::size_t> pos(box.pairs.size());
  for (std::size_t r = 0; r < order.size(); ++r) pos[order[r]] = r;

  Element unit_cocycle = assemble_pair(ctx, ops_h.one_a1(), ops_e.one_a1());
  std::map<std::size_t, std::vector<std::size_t>> groups;  // root -> positions
  for (std::size_t t = 0; t < box.pairs.size(); ++t)
    groups[uf.find(t)].push_back(pos[t]);

  std::vector<std::pair<std::size_t, H1Class>> tagged;
  for (auto& [root, positions] : groups) {
    std::sort(positions.begin(), positions.end());
    H1Class cls;
    cls.members = positions;
    cls.rep = assembled[order[positions.front()]];
    for (auto r : positions)
      if (assembled[order[r]] == unit_cocycle) cls.distinguished = true;
    tagged.push_back({root, std::move(cls)});
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.second.rep < b.second.rep; });

  BoxOrbits out;
  std::map<std::size_t, std::size_t> root_to_class;
  for (std::size_t c = 0; c < tagged.size(); ++c) {
    root_to_class[tagged[c].first] = c;
    out.classes.classes.push_back(tagged[c].second);
  }
  out.class_of_pair.resize(box.pairs.size());
  for (std::size_t t = 0; t < box.pairs.size(); ++t)
    out.class_of_pair[t] = root_to_class[uf.find(t)];
  return out;
}

// ---------------------------------------------------------------- coinvariants

struct Subalgebra {
  AlgebraData algebra;  // induced structure on the coinvariant basis
  LinearMap embed;      // sub -> ambient
};

/// The subspace {x : coaction(x) = x (x) 1} with its induced algebra
/// structure; nullopt if the subspace is not closed under products (cannot
/// happen for a lawful comodule algebra).
inline std::optional<Subalgebra> coinvariant_subalgebra(const AlgebraData& amb,
                                                        const LinearMap& coaction,
                                                        const LinearMap& unit_c) {
  const Fp& k = amb.field;
  std::size_t df = amb.space.dim;
  auto trivial = tensor(LinearMap::identity(k, df), unit_c);
  auto basis = nullspace(k, to_matrix(sub(coaction, trivial)));
  std::size_t ds = basis.size();

  Matrix embed_mat(df, ds);
  for (std::size_t j = 0; j < ds; ++j)
    for (std::size_t r = 0; r < df; ++r) embed_mat.at(r, j) = basis[j][r];

  auto in_span = [&](const Element& v) -> std::optional<std::vector<Scalar>> {
    return solve(k, embed_mat, v.coords);
  };

  std::vector<std::string> labels;
  for (std::size_t j = 0; j < ds; ++j) labels.push_back("c" + std::to_string(j));
  BasedSpace space = BasedSpace::make("coinv", ds, labels);

  LinearMap mult(k, {ds, ds}, {ds});
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t j = 0; j < ds; ++j) {
      Element prod = multiply(amb, Element{basis[i]}, Element{basis[j]});
      auto c = in_span(prod);
      if (!c) return std::nullopt;
      for (std::size_t r = 0; r < ds; ++r)
        if ((*c)[r]) mult.set(r, i * ds + j, (*c)[r]);
    }
  LinearMap unit(k, {1}, {ds});
  auto c1 = in_span(one(amb));
  if (!c1) return std::nullopt;
  for (std::size_t r = 0; r < ds; ++r)
    if ((*c1)[r]) unit.set(r, 0, (*c1)[r]);

  LinearMap embed(k, ds, df);
  for (std::size_t j = 0; j < ds; ++j)
    for (std::size_t r = 0; r < df; ++r)
      if (basis[j][r]) embed.set(r, j, basis[j][r]);

  return Subalgebra{AlgebraData{k, space, mult, unit}, embed};
}

/// Factor a map amb -> amb (x) W through a subspace: the unique
/// restricted: sub -> sub (x) W with (embed (x) id) restricted = map embed,
/// or nullopt if the image leaves the subspace.
inline std::optional<LinearMap> restrict_coaction(const Subalgebra& sub,
                                                  const LinearMap& map_on_amb,
                                                  std::size_t dw) {
  const Fp& k = sub.algebra.field;
  std::size_t ds = sub.algebra.space.dim;
  std::size_t df = sub.embed.cod_dim();
  Matrix embed_mat(df, ds);
  for (const auto& [rc, v] : sub.embed.entries()) embed_mat.at(rc.first, rc.second) = v;

  LinearMap restricted(k, ds, ds * dw);
  for (std::size_t j = 0; j < ds; ++j) {
    Element v = map_on_amb.apply(sub.embed.apply(Element::basis(ds, j)));
    for (std::size_t w = 0; w < dw; ++w) {
      std::vector<Scalar> col(df);
      for (std::size_t r = 0; r < df; ++r) col[r] = v.coords[r * dw + w];
      auto c = solve(k, embed_mat, col);
      if (!c) return std::nullopt;
      // solve() leaves free variables 0 but the solution need not be unique
      // unless embed has full column rank (it does: basis vectors).
      for (std::size_t r = 0; r < ds; ++r)
        if ((*c)[r]) restricted.set(r * dw + w, j, (*c)[r]);
    }
  }
  return restricted;
}

}  // namespace hopfcoh
