#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopfcoh/models.hpp"
#include "hopfcoh/verify.hpp"

// Non-abelian cohomology of finite groups in degrees 0 and 1: invariants C^D,
// crossed homomorphisms beta(dd') = beta(d) * ^d beta(d'), and the pointed
// orbit set under (beta >> x)(d) = x^-1 beta(d) ^d x.  For a semidirect
// product G x| A acting compatibly on C, the cocycle set decomposes into
// compatible pairs over the two factors, mirroring the box decomposition of
// biproduct cocycles; and for a function algebra k^C the whole pipeline
// matches the Hopf-algebra cohomology of k^D with coefficients in k^C via the
// dictionary X = sum_d beta(d) (x) d[d].

namespace hopfcoh {

/// A finite group C with a left action of a finite group D by automorphisms.
struct DGroup {
  FiniteGroup d;
  FiniteGroup c;
  GroupAction action;  // of D on the elements of C
};

inline DGroup make_dgroup(FiniteGroup d, FiniteGroup c, GroupAction action) {
  require(action.act.size() == d.order(), errc::not_an_action,
          "coefficient action has wrong number of rows");
  require(acts_by_automorphisms(d, c, action), errc::not_an_action,
          "coefficient action must be by automorphisms");
  return {std::move(d), std::move(c), std::move(action)};
}

/// A degree-one cocycle: the table of values beta(d) as element indices of C,
/// indexed by the canonical element order of D.
using GroupCocycle = std::vector<std::uint32_t>;

namespace detail {

inline Element table_element(const GroupCocycle& t) {
  return Element{std::vector<Scalar>(t.begin(), t.end())};
}

}  // namespace detail

/// Invariants C^D: indices of the elements of C fixed by every d, ascending.
inline std::vector<std::uint32_t> group_h0(const DGroup& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.c.order(); ++x) {
    bool fixed = true;
    for (std::uint32_t d = 0; d < g.d.order() && fixed; ++d)
      fixed = g.action(d, x) == x;
    if (fixed) out.push_back(x);
  }
  return out;
}

inline bool is_group_cocycle(const DGroup& g, const GroupCocycle& beta) {
  if (beta.size() != g.d.order()) return false;
  for (auto v : beta)
    if (v >= g.c.order()) return false;
  for (std::uint32_t i = 0; i < g.d.order(); ++i)
    for (std::uint32_t j = 0; j < g.d.order(); ++j)
      if (beta[g.d.mul(i, j)] != g.c.mul(beta[i], g.action(i, beta[j])))
        return false;
  return true;
}

/// The constant table beta(d) = e, always a cocycle (the distinguished point).
inline GroupCocycle constant_cocycle(const DGroup& g) {
  return GroupCocycle(g.d.order(), g.c.identity);
}

/// All cocycle tables, lexicographically sorted.  The value at the identity
/// is forced (beta(1) = beta(1)^2), so only the other positions are swept.
inline std::vector<GroupCocycle> group_z1(const DGroup& g,
                                          const Budget& budget = default_budget()) {
  std::size_t nd = g.d.order(), nc = g.c.order();
  require(checked_pow(nc, nd, budget.limit) <= budget.limit, errc::budget_exceeded,
          "|C|^|D| = " + std::to_string(nc) + "^" + std::to_string(nd) +
              " exceeds budget " + std::to_string(budget.limit));
  std::vector<std::uint32_t> free_pos;
  for (std::uint32_t i = 0; i < nd; ++i)
    if (i != g.d.identity) free_pos.push_back(i);

  std::vector<GroupCocycle> out;
  GroupCocycle beta(nd, 0);
  beta[g.d.identity] = g.c.identity;
  while (true) {
    if (is_group_cocycle(g, beta)) out.push_back(beta);
    std::size_t i = free_pos.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++beta[free_pos[i]] < nc) {
        done = false;
        break;
      }
      beta[free_pos[i]] = 0;
    }
    if (done) break;
  }
  return out;
}

/// The right action (beta >> x)(d) = x^-1 beta(d) ^d x.
inline GroupCocycle group_act(const DGroup& g, const GroupCocycle& beta,
                              std::uint32_t x) {
  GroupCocycle out(beta.size());
  for (std::uint32_t d = 0; d < beta.size(); ++d)
    out[d] = g.c.mul(g.c.mul(g.c.inverse[x], beta[d]), g.action(d, x));
  return out;
}

/// Orbits of C on Z1 under >>, as a pointed set of classes with lex-least
/// representatives; the distinguished class is the orbit of the constant
/// cocycle.  Representatives are stored as coordinate vectors of C-indices.
inline H1Result group_h1(const DGroup& g, const std::vector<GroupCocycle>& z1) {
  std::vector<Element> z1e;
  z1e.reserve(z1.size());
  for (const auto& b : z1) z1e.push_back(detail::table_element(b));

  detail::UnionFind uf(z1.size());
  for (std::size_t i = 0; i < z1.size(); ++i)
    for (std::uint32_t x = 0; x < g.c.order(); ++x) {
      Element moved = detail::table_element(group_act(g, z1[i], x));
      auto it = std::lower_bound(z1e.begin(), z1e.end(), moved);
      require(it != z1e.end() && *it == moved, errc::prerequisite_failed,
              "the coefficient action left the cocycle set");
      uf.unite(i, static_cast<std::size_t>(it - z1e.begin()));
    }
  return detail::group_orbits(z1e, uf, detail::table_element(constant_cocycle(g)));
}

struct GroupCohomology {
  std::vector<std::uint32_t> h0;
  std::vector<GroupCocycle> z1;
  H1Result h1;
};

inline GroupCohomology compute_group_cohomology(const DGroup& g,
                                                const Budget& budget = default_budget()) {
  GroupCohomology res;
  res.h0 = group_h0(g);
  res.z1 = group_z1(g, budget);
  res.h1 = group_h1(g, res.z1);
  return res;
}

// ------------------------------------------------------- semidirect products

/// Coefficients for a semidirect product: a group C acted on by both factors
/// of G x| A, compatibly in the sense  ^g(^a x) = ^{^g a}(^g x).
struct SemidirectCoefficients {
  FiniteGroup g, a, c;
  GroupAction g_on_a;  // G on A by automorphisms (defines G x| A)
  GroupAction g_on_c;  // G on C by automorphisms
  GroupAction a_on_c;  // A on C by automorphisms
};

inline bool semidirect_actions_compatible(const SemidirectCoefficients& s) {
  for (std::uint32_t g = 0; g < s.g.order(); ++g)
    for (std::uint32_t a = 0; a < s.a.order(); ++a)
      for (std::uint32_t x = 0; x < s.c.order(); ++x)
        if (s.g_on_c(g, s.a_on_c(a, x)) !=
            s.a_on_c(s.g_on_a(g, a), s.g_on_c(g, x)))
          return false;
  return true;
}

inline SemidirectCoefficients make_semidirect_coefficients(
    FiniteGroup g, FiniteGroup a, FiniteGroup c, GroupAction g_on_a,
    GroupAction g_on_c, GroupAction a_on_c) {
  require(acts_by_automorphisms(g, a, g_on_a), errc::not_an_action,
          "G must act on A by automorphisms");
  require(acts_by_automorphisms(g, c, g_on_c), errc::not_an_action,
          "G must act on C by automorphisms");
  require(acts_by_automorphisms(a, c, a_on_c), errc::not_an_action,
          "A must act on C by automorphisms");
  SemidirectCoefficients s{std::move(g), std::move(a), std::move(c),
                           std::move(g_on_a), std::move(g_on_c), std::move(a_on_c)};
  require(semidirect_actions_compatible(s), errc::not_an_action,
          "the two coefficient actions are not semidirect-compatible");
  return s;
}

inline DGroup g_factor(const SemidirectCoefficients& s) {
  return make_dgroup(s.g, s.c, s.g_on_c);
}

inline DGroup a_factor(const SemidirectCoefficients& s) {
  return make_dgroup(s.a, s.c, s.a_on_c);
}

/// The semidirect product G x| A acting on C by ^{(g,a)}x = ^g(^a x); the
/// element (g,a) has index g*|A| + a, matching semidirect_product.
inline DGroup semidirect_dgroup(const SemidirectCoefficients& s) {
  FiniteGroup d = semidirect_product(s.g, s.a, s.g_on_a);
  std::size_t ng = s.g.order(), na = s.a.order(), nc = s.c.order();
  std::vector<std::vector<std::uint32_t>> act(ng * na,
                                              std::vector<std::uint32_t>(nc));
  for (std::uint32_t g = 0; g < ng; ++g)
    for (std::uint32_t a = 0; a < na; ++a)
      for (std::uint32_t x = 0; x < nc; ++x)
        act[g * na + a][x] = s.g_on_c(g, s.a_on_c(a, x));
  GroupAction action = make_action(d, std::move(act));
  return make_dgroup(std::move(d), s.c, std::move(action));
}

/// Compatibility of a pair of factor cocycles:
///   gamma(g) * ^g alpha(a)  =  alpha(^g a) * ^{^g a} gamma(g)  for all g, a.
inline bool group_pair_compatible(const SemidirectCoefficients& s,
                                  const GroupCocycle& gamma,
                                  const GroupCocycle& alpha) {
  for (std::uint32_t g = 0; g < s.g.order(); ++g)
    for (std::uint32_t a = 0; a < s.a.order(); ++a) {
      std::uint32_t ga = s.g_on_a(g, a);
      std::uint32_t lhs = s.c.mul(gamma[g], s.g_on_c(g, alpha[a]));
      std::uint32_t rhs = s.c.mul(alpha[ga], s.a_on_c(ga, gamma[g]));
      if (lhs != rhs) return false;
    }
  return true;
}

/// beta(g,a) = gamma(g) * ^g alpha(a), a cocycle of G x| A when the pair is
/// compatible.
inline GroupCocycle group_assemble(const SemidirectCoefficients& s,
                                   const GroupCocycle& gamma,
                                   const GroupCocycle& alpha) {
  std::size_t na = s.a.order();
  GroupCocycle beta(s.g.order() * na);
  for (std::uint32_t g = 0; g < s.g.order(); ++g)
    for (std::uint32_t a = 0; a < na; ++a)
      beta[g * na + a] = s.c.mul(gamma[g], s.g_on_c(g, alpha[a]));
  return beta;
}

/// gamma(g) = beta(g,1) and alpha(a) = beta(1,a).
inline std::pair<GroupCocycle, GroupCocycle> group_split(
    const SemidirectCoefficients& s, const GroupCocycle& beta) {
  std::size_t na = s.a.order();
  GroupCocycle gamma(s.g.order()), alpha(na);
  for (std::uint32_t g = 0; g < s.g.order(); ++g)
    gamma[g] = beta[g * na + s.a.identity];
  for (std::uint32_t a = 0; a < na; ++a)
    alpha[a] = beta[s.g.identity * na + a];
  return {std::move(gamma), std::move(alpha)};
}

/// All compatible pairs, as indices into the two factor cocycle lists.
struct GroupBoxSet {
  std::vector<GroupCocycle> z1_g, z1_a;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

inline GroupBoxSet group_box_set(const SemidirectCoefficients& s,
                                 const Budget& budget = default_budget()) {
  GroupBoxSet box;
  box.z1_g = group_z1(g_factor(s), budget);
  box.z1_a = group_z1(a_factor(s), budget);
  for (std::uint32_t i = 0; i < box.z1_g.size(); ++i)
    for (std::uint32_t j = 0; j < box.z1_a.size(); ++j)
      if (group_pair_compatible(s, box.z1_g[i], box.z1_a[j]))
        box.pairs.push_back({i, j});
  return box;
}

/// Orbits of the diagonal action [gamma, alpha] >> x = [gamma >> x, alpha >> x]
/// on the compatible pairs.  Class members are positions in the by-assembled-
/// table ordering, so the class list is comparable entry for entry with
/// group_h1 of the semidirect product.
struct GroupBoxOrbits {
  H1Result classes;
  std::vector<std::size_t> class_of_pair;  // indexed like GroupBoxSet::pairs
};

inline GroupBoxOrbits group_box_h1(const SemidirectCoefficients& s,
                                   const GroupBoxSet& box) {
  std::vector<Element> assembled;
  assembled.reserve(box.pairs.size());
  for (auto [i, j] : box.pairs)
    assembled.push_back(
        detail::table_element(group_assemble(s, box.z1_g[i], box.z1_a[j])));

  std::map<std::pair<GroupCocycle, GroupCocycle>, std::size_t> index;
  for (std::size_t t = 0; t < box.pairs.size(); ++t)
    index[{box.z1_g[box.pairs[t].first], box.z1_a[box.pairs[t].second]}] = t;

  DGroup gf = g_factor(s), af = a_factor(s);
  detail::UnionFind uf(box.pairs.size());
  for (std::size_t t = 0; t < box.pairs.size(); ++t) {
    const GroupCocycle& gamma = box.z1_g[box.pairs[t].first];
    const GroupCocycle& alpha = box.z1_a[box.pairs[t].second];
    for (std::uint32_t x = 0; x < s.c.order(); ++x) {
      auto it = index.find({group_act(gf, gamma, x), group_act(af, alpha, x)});
      require(it != index.end(), errc::prerequisite_failed,
              "diagonal action left the compatible set");
      uf.unite(t, it->second);
    }
  }

  std::vector<std::size_t> order(box.pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return assembled[a] < assembled[b];
  });
  std::vector<std::size_t> pos(box.pairs.size());
  for (std::size_t r = 0; r < order.size(); ++r) pos[order[r]] = r;

  Element unit = detail::table_element(
      GroupCocycle(s.g.order() * s.a.order(), s.c.identity));
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
      if (assembled[order[r]] == unit) cls.distinguished = true;
    tagged.push_back({root, std::move(cls)});
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.second.rep < b.second.rep; });

  GroupBoxOrbits out;
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

// ------------------------------------------------- decomposition certificate

namespace detail {

/// The subgroup of elements of C fixed by every row of the action, with the
/// ascending list of ambient indices.  Returns nullopt if the fixed points
/// fail to close under the product (impossible for automorphism actions).
struct FixedSubgroup {
  FiniteGroup group;
  std::vector<std::uint32_t> embed;  // subgroup index -> ambient C index
};

inline std::optional<FixedSubgroup> fixed_subgroup(const FiniteGroup& c,
                                                   const GroupAction& act) {
  std::vector<std::uint32_t> fixed;
  for (std::uint32_t x = 0; x < c.order(); ++x) {
    bool keep = true;
    for (std::size_t d = 0; d < act.act.size() && keep; ++d)
      keep = act(static_cast<std::uint32_t>(d), x) == x;
    if (keep) fixed.push_back(x);
  }
  std::map<std::uint32_t, std::uint32_t> pos;
  for (std::uint32_t i = 0; i < fixed.size(); ++i) pos[fixed[i]] = i;

  std::size_t n = fixed.size();
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    labels.push_back(c.elements[fixed[i]]);
    for (std::uint32_t j = 0; j < n; ++j) {
      auto it = pos.find(c.mul(fixed[i], fixed[j]));
      if (it == pos.end()) return std::nullopt;
      table[i][j] = it->second;
    }
  }
  try {
    return FixedSubgroup{make_group(std::move(labels), std::move(table)),
                         std::move(fixed)};
  } catch (const error&) {
    return std::nullopt;
  }
}

/// Restricts an ambient action of D on C to a subgroup given by an index
/// list; nullopt if some row does not preserve the subgroup.
inline std::optional<GroupAction> restrict_action(const FiniteGroup& d,
                                                  const GroupAction& act,
                                                  const std::vector<std::uint32_t>& embed) {
  std::map<std::uint32_t, std::uint32_t> pos;
  for (std::uint32_t i = 0; i < embed.size(); ++i) pos[embed[i]] = i;
  std::vector<std::vector<std::uint32_t>> rows(
      d.order(), std::vector<std::uint32_t>(embed.size()));
  for (std::uint32_t g = 0; g < d.order(); ++g)
    for (std::uint32_t i = 0; i < embed.size(); ++i) {
      auto it = pos.find(act(g, embed[i]));
      if (it == pos.end()) return std::nullopt;
      rows[g][i] = it->second;
    }
  try {
    return make_action(d, std::move(rows));
  } catch (const error&) {
    return std::nullopt;
  }
}

/// (g . alpha)(a) = ^g alpha(^{g^-1} a): the G-action on A-cocycles induced by
/// the two actions of G.
inline GroupCocycle g_dot_alpha(const SemidirectCoefficients& s, std::uint32_t g,
                                const GroupCocycle& alpha) {
  GroupCocycle out(alpha.size());
  std::uint32_t ginv = s.g.inverse[g];
  for (std::uint32_t a = 0; a < alpha.size(); ++a)
    out[a] = s.g_on_c(g, alpha[s.g_on_a(ginv, a)]);
  return out;
}

inline std::optional<std::size_t> find_table(const std::vector<GroupCocycle>& sorted,
                                             const GroupCocycle& t) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), t);
  if (it == sorted.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace detail

/// Verifies that degree-0/1 cohomology of G x| A with coefficients in C
/// decomposes over the factors:
///   - H0 of the product is the intersection of the factor invariants,
///   - splitting beta into (beta(-,1), beta(1,-)) and assembling
///     beta(g,a) = gamma(g) * ^g alpha(a) are mutually inverse bijections
///     between cocycles of G x| A and compatible pairs,
///   - the bijection is equivariant for >>, so the diagonal orbits match the
///     cocycle classes with distinguished points aligned,
///   - the class maps  iota: H1(G, C^A) -> classes of pairs  (extend by the
///     constant cocycle) and  pi: classes of pairs -> H1(A, C)  (forget the
///     first slot) have  im iota = pi^-1(distinguished)  with iota injective,
///     and pi lands in the classes fixed by the induced G-action.
inline CheckReport verify_semidirect_decomposition(const SemidirectCoefficients& s,
                                                   const Budget& budget = default_budget()) {
  CheckReport rep;
  rep.add_flag("g_acts_by_automorphisms", acts_by_automorphisms(s.g, s.c, s.g_on_c));
  rep.add_flag("a_acts_by_automorphisms", acts_by_automorphisms(s.a, s.c, s.a_on_c));
  rep.add_flag("actions_semidirect_compatible", semidirect_actions_compatible(s));
  if (!rep.ok()) return rep;

  DGroup prod = semidirect_dgroup(s);
  DGroup gf = g_factor(s), af = a_factor(s);

  // degree zero
  {
    auto h0g = group_h0(gf), h0a = group_h0(af);
    std::vector<std::uint32_t> both;
    std::set_intersection(h0g.begin(), h0g.end(), h0a.begin(), h0a.end(),
                          std::back_inserter(both));
    rep.add_flag("degree_zero_is_intersection", group_h0(prod) == both);
  }

  auto z1 = group_z1(prod, budget);
  GroupBoxSet box = group_box_set(s, budget);

  std::map<std::pair<GroupCocycle, GroupCocycle>, std::size_t> pair_index;
  for (std::size_t t = 0; t < box.pairs.size(); ++t)
    pair_index[{box.z1_g[box.pairs[t].first], box.z1_a[box.pairs[t].second]}] = t;

  bool split_ok = true;
  for (const auto& beta : z1) {
    auto [gamma, alpha] = group_split(s, beta);
    split_ok = split_ok && is_group_cocycle(gf, gamma) &&
               is_group_cocycle(af, alpha) && group_pair_compatible(s, gamma, alpha) &&
               group_assemble(s, gamma, alpha) == beta &&
               pair_index.count({gamma, alpha}) > 0;
    if (!split_ok) break;
  }
  rep.add_flag("splits_are_compatible_pairs", split_ok);

  bool assemble_ok = true;
  for (auto [i, j] : box.pairs) {
    GroupCocycle beta = group_assemble(s, box.z1_g[i], box.z1_a[j]);
    auto at = detail::find_table(z1, beta);
    assemble_ok = assemble_ok && at.has_value() &&
                  group_split(s, beta) == std::make_pair(box.z1_g[i], box.z1_a[j]);
    if (!assemble_ok) break;
  }
  rep.add_flag("assembled_pairs_are_cocycles", assemble_ok);
  rep.add_flag("pair_count_matches_cocycle_count", box.pairs.size() == z1.size());

  bool diag_ok = true, equiv_ok = true;
  for (auto [i, j] : box.pairs)
    for (std::uint32_t x = 0; x < s.c.order() && diag_ok && equiv_ok; ++x) {
      GroupCocycle gx = group_act(gf, box.z1_g[i], x);
      GroupCocycle ax = group_act(af, box.z1_a[j], x);
      diag_ok = diag_ok && pair_index.count({gx, ax}) > 0;
      equiv_ok = equiv_ok &&
                 group_assemble(s, gx, ax) ==
                     group_act(prod, group_assemble(s, box.z1_g[i], box.z1_a[j]), x);
    }
  rep.add_flag("diagonal_action_preserves_pairs", diag_ok);
  rep.add_flag("assemble_equivariant", equiv_ok);
  rep.add_flag("distinguished_pair_assembles_to_unit",
               group_assemble(s, constant_cocycle(gf), constant_cocycle(af)) ==
                   constant_cocycle(prod));

  GroupBoxOrbits orbits = group_box_h1(s, box);
  H1Result direct = group_h1(prod, z1);
  rep.add_flag("class_decomposition_matches",
               detail::same_classes(orbits.classes, direct));

  // ---- exact sequence through the A-invariants of C
  auto coinv = detail::fixed_subgroup(s.c, s.a_on_c);
  rep.add_flag("invariants_form_subgroup", coinv.has_value());
  if (!coinv) return rep;
  auto restricted = detail::restrict_action(s.g, s.g_on_c, coinv->embed);
  rep.add_flag("invariants_g_stable", restricted.has_value());
  if (!restricted) return rep;

  DGroup sub = make_dgroup(s.g, coinv->group, *restricted);
  auto z1_sub = group_z1(sub, budget);
  H1Result h1_sub = group_h1(sub, z1_sub);
  H1Result h1_a = group_h1(af, box.z1_a);

  // iota: extend an invariant-valued G-cocycle by the constant A-cocycle.
  bool iota_in_box = true;
  std::vector<std::optional<std::size_t>> orbit_of_sub(z1_sub.size());
  for (std::size_t i = 0; i < z1_sub.size(); ++i) {
    GroupCocycle gamma(z1_sub[i].size());
    for (std::size_t gg = 0; gg < gamma.size(); ++gg)
      gamma[gg] = coinv->embed[z1_sub[i][gg]];
    auto it = pair_index.find({gamma, constant_cocycle(af)});
    if (it == pair_index.end()) {
      iota_in_box = false;
      break;
    }
    orbit_of_sub[i] = orbits.class_of_pair[it->second];
  }
  rep.add_flag("iota_lands_in_compatible_pairs", iota_in_box);
  if (!iota_in_box) return rep;

  bool iota_ok = true;
  std::set<std::size_t> injected;
  for (std::size_t c = 0; c < h1_sub.classes.size(); ++c) {
    std::set<std::size_t> images;
    for (auto m : h1_sub.classes[c].members) images.insert(*orbit_of_sub[m]);
    iota_ok = iota_ok && images.size() == 1;
    if (!iota_ok) break;
    std::size_t o = *images.begin();
    iota_ok = iota_ok && injected.insert(o).second;
    if (h1_sub.classes[c].distinguished)
      iota_ok = iota_ok && orbits.classes.classes[o].distinguished;
  }
  rep.add_flag("iota_injective_on_classes", iota_ok);

  // pi: class of the A-slot; must be constant on orbits.
  std::vector<std::optional<std::size_t>> projected(orbits.classes.classes.size());
  bool pi_ok = true;
  for (std::size_t t = 0; t < box.pairs.size() && pi_ok; ++t) {
    std::size_t o = orbits.class_of_pair[t];
    std::size_t cls = h1_a.class_index_of_member(box.pairs[t].second);
    if (!projected[o]) projected[o] = cls;
    pi_ok = *projected[o] == cls;
  }
  rep.add_flag("projection_constant_on_orbits", pi_ok);
  if (!pi_ok) return rep;

  // pi lands in the classes fixed by (g . alpha)(a) = ^g alpha(^{g^-1} a).
  bool invariant_ok = true;
  for (std::size_t o = 0; o < projected.size() && invariant_ok; ++o) {
    const auto& cls = h1_a.classes[*projected[o]];
    const GroupCocycle& alpha = box.z1_a[cls.members.front()];
    for (std::uint32_t gg = 0; gg < s.g.order() && invariant_ok; ++gg) {
      GroupCocycle moved = detail::g_dot_alpha(s, gg, alpha);
      invariant_ok = is_group_cocycle(af, moved);
      bool related = false;
      for (std::uint32_t x = 0; x < s.c.order() && !related; ++x)
        related = group_act(af, alpha, x) == moved;
      invariant_ok = invariant_ok && related;
    }
  }
  rep.add_flag("projection_lands_in_invariant_classes", invariant_ok);

  std::size_t dist_a = h1_a.classes.size();
  for (std::size_t c = 0; c < h1_a.classes.size(); ++c)
    if (h1_a.classes[c].distinguished) dist_a = c;
  bool exact = dist_a < h1_a.classes.size();
  for (std::size_t o = 0; o < projected.size() && exact; ++o)
    exact = (*projected[o] == dist_a) == (injected.count(o) > 0);
  rep.add_flag("image_iota_is_fiber_over_distinguished", exact);
  return rep;
}

// ---------------------------------------------- units of function algebras

namespace detail {

/// Decode a unit tuple index: values in 1..p-1, first coordinate most
/// significant, so index order is lexicographic order of tuples.
inline std::vector<Scalar> unit_tuple(const Fp& k, std::size_t n, std::uint32_t idx) {
  Scalar base = k.p() - 1;
  std::vector<Scalar> v(n, 1);
  for (std::size_t t = 0; t < n; ++t) {
    v[n - 1 - t] = idx % base + 1;
    idx = static_cast<std::uint32_t>(idx / base);
  }
  return v;
}

inline std::uint32_t unit_index(const Fp& k, const std::vector<Scalar>& v) {
  Scalar base = k.p() - 1;
  std::uint64_t idx = 0;
  for (Scalar x : v) idx = idx * base + (x - 1);
  return static_cast<std::uint32_t>(idx);
}

}  // namespace detail

/// The unit group (k^C)^x of the function algebra on an n-element set:
/// tuples of nonzero scalars under the pointwise product.
inline FiniteGroup units_function_group(const Fp& k, std::size_t n,
                                        const Budget& budget = default_budget()) {
  std::uint64_t m = checked_pow(k.p() - 1, n, budget.limit);
  require(m <= budget.limit && checked_pow(m, 3, budget.limit) <= budget.limit,
          errc::budget_exceeded, "unit group too large for the table model");
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
  for (std::uint32_t i = 0; i < m; ++i) {
    auto vi = detail::unit_tuple(k, n, i);
    std::string l = "(";
    for (std::size_t t = 0; t < n; ++t)
      l += (t ? "," : "") + std::to_string(vi[t]);
    labels.push_back(l + ")");
    for (std::uint32_t j = 0; j < m; ++j) {
      auto vj = detail::unit_tuple(k, n, j);
      std::vector<Scalar> prod(n);
      for (std::size_t t = 0; t < n; ++t) prod[t] = k.mul(vi[t], vj[t]);
      table[i][j] = detail::unit_index(k, prod);
    }
  }
  return make_group(std::move(labels), std::move(table));
}

/// The action of D on (k^C)^x induced by a D-action on the set C:
/// (^d f)(x) = f(^{d^-1} x).
inline GroupAction induced_units_action(const Fp& k, const FiniteGroup& d,
                                        const GroupAction& on_set,
                                        std::size_t unit_count) {
  std::size_t n = on_set.set_size();
  std::vector<std::vector<std::uint32_t>> rows(d.order(),
                                               std::vector<std::uint32_t>(unit_count));
  for (std::uint32_t g = 0; g < d.order(); ++g) {
    std::uint32_t ginv = d.inverse[g];
    for (std::uint32_t i = 0; i < unit_count; ++i) {
      auto v = detail::unit_tuple(k, n, i);
      std::vector<Scalar> w(n);
      for (std::uint32_t x = 0; x < n; ++x) w[x] = v[on_set(ginv, x)];
      rows[g][i] = detail::unit_index(k, w);
    }
  }
  return make_action(d, std::move(rows));
}

/// (k^C)^x as a D-group, for the D-action induced from the action on C.
inline DGroup units_dgroup(const Fp& k, const DGroup& g,
                           const Budget& budget = default_budget()) {
  FiniteGroup u = units_function_group(k, g.c.order(), budget);
  GroupAction action = induced_units_action(k, g.d, g.action, u.order());
  return make_dgroup(g.d, std::move(u), std::move(action));
}

/// Lifts semidirect coefficients C to the unit group (k^C)^x with both
/// induced actions.
inline SemidirectCoefficients units_semidirect_coefficients(
    const Fp& k, const SemidirectCoefficients& s,
    const Budget& budget = default_budget()) {
  FiniteGroup u = units_function_group(k, s.c.order(), budget);
  GroupAction g_on_u = induced_units_action(k, s.g, s.g_on_c, u.order());
  GroupAction a_on_u = induced_units_action(k, s.a, s.a_on_c, u.order());
  return make_semidirect_coefficients(s.g, s.a, std::move(u), s.g_on_a,
                                      std::move(g_on_u), std::move(a_on_u));
}

// -------------------------------------------------- Hopf / group dictionary

namespace detail {

/// The cocycle table as an element of k^C (x) k^D: X = sum_d beta(d) (x) d[d].
inline Element dictionary_element(const Fp& k, std::size_t nc, std::size_t nd,
                                  const GroupCocycle& beta) {
  Element x = Element::zero(nc * nd);
  for (std::uint32_t d = 0; d < nd; ++d) {
    auto tuple = unit_tuple(k, nc, beta[d]);
    for (std::uint32_t c = 0; c < nc; ++c) x.coords[c * nd + d] = tuple[c];
  }
  return x;
}

/// A unit tuple as an element of k^C.
inline Element tuple_element(const Fp& k, std::size_t nc, std::uint32_t idx) {
  return Element{unit_tuple(k, nc, idx)};
}

inline bool sorted_member(const std::vector<Element>& sorted, const Element& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline std::optional<std::size_t> sorted_index(const std::vector<Element>& sorted,
                                               const Element& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

/// Checks that mapping members through `to_class` identifies the two class
/// partitions: constant per source class, injective across classes, equal
/// counts and sizes, distinguished points aligned.
template <class MemberMap>
bool partitions_correspond(const H1Result& src, const H1Result& dst,
                           MemberMap&& to_class) {
  if (src.classes.size() != dst.classes.size()) return false;
  std::set<std::size_t> used;
  for (const auto& cls : src.classes) {
    std::set<std::size_t> images;
    for (auto m : cls.members) {
      auto img = to_class(m);
      if (!img) return false;
      images.insert(*img);
    }
    if (images.size() != 1) return false;
    std::size_t o = *images.begin();
    if (!used.insert(o).second) return false;
    if (dst.classes[o].members.size() != cls.members.size()) return false;
    if (dst.classes[o].distinguished != cls.distinguished) return false;
  }
  return true;
}

}  // namespace detail

/// Cross-checks the two pipelines on a function-algebra instance: the
/// Hopf-algebra cohomology of H = k^D with coefficients in F = k^C equals the
/// group cohomology of D in (k^C)^x under X = sum_d beta(d) (x) d[d],
/// elementwise in degree zero and one, equivariantly for the unit action.
inline CheckReport cross_check_function_algebra(const Fp& k, const DGroup& g,
                                                const Budget& budget = default_budget()) {
  CheckReport rep;
  std::size_t nd = g.d.order(), nc = g.c.order();
  HopfData h = function_algebra(k, g.d);
  ComoduleAlgebra f = function_comodule_algebra(k, g.d, g.c.elements, g.action);
  rep.merge(check_comodule_algebra(h, f), "coefficient.");
  if (!rep.ok()) return rep;

  Diagram diag = build_diagram(h, f, false);
  CocycleOps ops(diag);

  DGroup u = units_dgroup(k, g, budget);
  auto uh0 = group_h0(u);
  auto uz1 = group_z1(u, budget);
  H1Result uh1 = group_h1(u, uz1);

  auto h0 = compute_h0(diag, budget);
  auto z1 = compute_z1(diag, budget);
  H1Result h1 = compute_h1(diag, z1, budget);

  {
    std::vector<Element> mapped;
    for (auto x : uh0) mapped.push_back(detail::tuple_element(k, nc, x));
    std::sort(mapped.begin(), mapped.end());
    rep.add_flag("degree_zero_matches", mapped == h0);
  }
  {
    std::vector<Element> tuples;
    for (std::uint32_t x = 0; x < u.c.order(); ++x)
      tuples.push_back(detail::tuple_element(k, nc, x));
    std::sort(tuples.begin(), tuples.end());
    std::vector<Element> unit_values;
    for (const auto& uu : units(f.algebra, budget)) unit_values.push_back(uu.value);
    rep.add_flag("unit_groups_match", tuples == unit_values);
  }

  bool corr = uz1.size() == z1.size();
  for (std::size_t i = 0; i < uz1.size() && corr; ++i)
    corr = detail::sorted_member(z1, detail::dictionary_element(k, nc, nd, uz1[i]));
  rep.add_flag("cocycles_correspond", corr);
  if (!corr) return rep;

  bool equiv = true;
  for (std::size_t i = 0; i < uz1.size() && equiv; ++i)
    for (std::uint32_t x = 0; x < u.c.order() && equiv; ++x) {
      Element moved =
          detail::dictionary_element(k, nc, nd, group_act(u, uz1[i], x));
      Element uval = detail::tuple_element(k, nc, x);
      Element uinv = detail::tuple_element(k, nc, u.c.inverse[x]);
      equiv = moved == ops.act(detail::dictionary_element(k, nc, nd, uz1[i]),
                               uval, uinv);
    }
  rep.add_flag("action_equivariant", equiv);

  rep.add_flag("classes_correspond",
               detail::partitions_correspond(
                   uh1, h1, [&](std::size_t m) -> std::optional<std::size_t> {
                     auto idx = detail::sorted_index(
                         z1, detail::dictionary_element(k, nc, nd, uz1[m]));
                     if (!idx) return std::nullopt;
                     return h1.class_index_of_member(*idx);
                   }));
  return rep;
}

/// The semidirect variant: additionally verifies the decomposition on both
/// sides of the dictionary and matches them box against box — the group-level
/// compatible pairs over ((k^C)^x; G, A) against the Hopf-level box set of
/// (k^G, k^A-braided) with coefficients k^C.
inline CheckReport cross_check_function_algebra(const Fp& k,
                                                const SemidirectCoefficients& s,
                                                const Budget& budget = default_budget()) {
  CheckReport rep;
  rep.merge(cross_check_function_algebra(k, semidirect_dgroup(s), budget), "direct.");

  SemidirectCoefficients su = units_semidirect_coefficients(k, s, budget);
  rep.merge(verify_semidirect_decomposition(su, budget), "units.");

  HopfData hg = function_algebra(k, s.g);
  BraidedHopfData e = function_braided(k, s.g, s.a, s.g_on_a);
  BraidedComoduleAlgebra f =
      function_coefficient_on_set(k, s.g, s.a, s.c.elements, s.g_on_c, s.a_on_c);
  rep.merge(verify_box_decomposition(hg, e, f, budget), "box.");
  if (!rep.ok()) return rep;

  // the glued Hopf model is literally the function algebra of G x| A
  {
    HopfData b = biproduct(hg, e);
    HopfData fd = function_algebra(k, semidirect_product(s.g, s.a, s.g_on_a));
    bool same = !first_difference(b.mult, fd.mult) &&
                !first_difference(b.unit, fd.unit) &&
                !first_difference(b.comult, fd.comult) &&
                !first_difference(b.counit, fd.counit) &&
                !first_difference(b.antipode, fd.antipode);
    rep.add_flag("glued_model_matches_function_algebra", same);
    ComoduleAlgebra fb = coaction_over_biproduct(hg, e, f);
    ComoduleAlgebra fdirect = function_comodule_algebra(
        k, semidirect_product(s.g, s.a, s.g_on_a), s.c.elements,
        semidirect_dgroup(s).action);
    rep.add_flag("glued_coaction_matches_group_model",
                 !first_difference(fb.coaction, fdirect.coaction));
  }

  // box against box through the dictionary
  std::size_t nc = s.c.order();
  GroupBoxSet gbox = group_box_set(su, budget);
  BoxSet hbox = build_box_set(hg, e, f, budget, false);

  bool factor_corr = gbox.z1_g.size() == hbox.z1_h.size() &&
                     gbox.z1_a.size() == hbox.z1_e.size();
  for (std::size_t i = 0; i < gbox.z1_g.size() && factor_corr; ++i)
    factor_corr = detail::sorted_member(
        hbox.z1_h, detail::dictionary_element(k, nc, s.g.order(), gbox.z1_g[i]));
  for (std::size_t j = 0; j < gbox.z1_a.size() && factor_corr; ++j)
    factor_corr = detail::sorted_member(
        hbox.z1_e, detail::dictionary_element(k, nc, s.a.order(), gbox.z1_a[j]));
  rep.add_flag("factor_cocycles_correspond", factor_corr);
  if (!factor_corr) return rep;

  auto translate = [&](std::size_t t) -> std::optional<std::pair<std::uint32_t, std::uint32_t>> {
    auto i = detail::sorted_index(
        hbox.z1_h,
        detail::dictionary_element(k, nc, s.g.order(), gbox.z1_g[gbox.pairs[t].first]));
    auto j = detail::sorted_index(
        hbox.z1_e,
        detail::dictionary_element(k, nc, s.a.order(), gbox.z1_a[gbox.pairs[t].second]));
    if (!i || !j) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(*i),
                          static_cast<std::uint32_t>(*j));
  };

  bool pairs_match = gbox.pairs.size() == hbox.pairs.size();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> translated;
  for (std::size_t t = 0; t < gbox.pairs.size() && pairs_match; ++t) {
    auto tr = translate(t);
    pairs_match = tr.has_value();
    if (pairs_match) translated.push_back(*tr);
  }
  if (pairs_match) {
    std::sort(translated.begin(), translated.end());
    pairs_match = translated == hbox.pairs;
  }
  rep.add_flag("box_pairs_correspond", pairs_match);
  if (!pairs_match) return rep;

  GroupBoxOrbits gorb = group_box_h1(su, gbox);
  BoxOrbits horb = box_h1(hg, e, f, hbox, budget);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> hpair_index;
  for (std::size_t t = 0; t < hbox.pairs.size(); ++t)
    hpair_index[hbox.pairs[t]] = t;

  bool orbits_match =
      gorb.classes.classes.size() == horb.classes.classes.size();
  std::map<std::size_t, std::size_t> induced;
  std::set<std::size_t> used;
  for (std::size_t t = 0; t < gbox.pairs.size() && orbits_match; ++t) {
    std::size_t go = gorb.class_of_pair[t];
    std::size_t ho = horb.class_of_pair[hpair_index.at(*translate(t))];
    auto [it, fresh] = induced.try_emplace(go, ho);
    orbits_match = it->second == ho && (!fresh || used.insert(ho).second);
  }
  if (orbits_match)
    for (const auto& [go, ho] : induced) {
      const auto& a = gorb.classes.classes[go];
      const auto& b = horb.classes.classes[ho];
      orbits_match = orbits_match && a.members.size() == b.members.size() &&
                     a.distinguished == b.distinguished;
    }
  rep.add_flag("box_classes_correspond", orbits_match);
  return rep;
}

}  // namespace hopfcoh
