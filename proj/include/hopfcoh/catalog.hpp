#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcoh/cohomology.hpp"
#include "hopfcoh/group_cohomology.hpp"
#include "hopfcoh/models.hpp"
#include "hopfcoh/radford.hpp"

namespace hopfcoh {

// Named instances addressable from the command line.  Identifiers are
// lowercase ':'-separated tokens:
//
//   taft:<n>:<p>       the glued pointed algebra of dimension n^2 over F_p,
//                      built from k[Z/n] and its braided quantum line
//   kG:cyclic:<n>:<p>  group algebra k[Z/n] over F_p
//   kD:s3:<p>          function algebra on the symmetric group S3 over F_p
//   kD:cyclic:<n>:<p>  function algebra on Z/n over F_p
//
// Coefficient-pair instances for the group-side verifications:
//
//   s3:inv | s3:triv           S3 = Z/2 |x Z/3 acting on C = Z/3 by
//                              conjugation (inv) or trivially (triv)
//   <d>:<c>:<action>:<p>       cross-check rows: d in {z2, s3}, c in {z2, z3},
//                              action in {triv, inv, conj}, coefficients in F_p

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& id) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = id.find(':', start);
    if (colon == std::string::npos) {
      out.push_back(id.substr(start));
      return out;
    }
    out.push_back(id.substr(start, colon - start));
    start = colon + 1;
  }
}

inline std::uint64_t parse_number(const std::string& token, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  require(ec == std::errc() && ptr == token.data() + token.size() && !token.empty(),
          errc::parse_error, std::string(what) + " is not a number: \"" + token + "\"");
  return value;
}

inline std::size_t parse_order(const std::string& token) {
  std::uint64_t n = parse_number(token, "group order");
  require(n >= 2 && n <= 64, errc::parse_error,
          "group order must lie in [2, 64], got " + token);
  return static_cast<std::size_t>(n);
}

}  // namespace detail

// ---------------------------------------------------------------- Hopf instances

/// A resolvable algebra instance.  For glued (taft) instances the two factors
/// and the standard coefficient are carried along; `hopf` is always the
/// algebra whose axioms and cohomology the identifier denotes.
struct HopfInstance {
  std::string id;
  HopfData hopf;
  std::optional<TaftPair> pair;
};

inline HopfInstance parse_hopf_instance(const std::string& id) {
  auto tok = detail::split_tokens(id);
  if (tok.empty()) fail(errc::parse_error, "empty instance identifier");

  if (tok[0] == "taft") {
    require(tok.size() == 3, errc::parse_error, "expected taft:<n>:<p>, got " + id);
    std::size_t n = detail::parse_order(tok[1]);
    std::uint64_t p = detail::parse_number(tok[2], "field size");
    TaftPair pair = taft_pair(n, p);
    HopfData glued = biproduct(pair.group_part, pair.line_part);
    return {id, std::move(glued), std::move(pair)};
  }
  if (tok[0] == "kG") {
    require(tok.size() == 4 && tok[1] == "cyclic", errc::parse_error,
            "expected kG:cyclic:<n>:<p>, got " + id);
    std::size_t n = detail::parse_order(tok[2]);
    Fp k(detail::parse_number(tok[3], "field size"));
    return {id, group_algebra(k, cyclic_group(n, "u")), std::nullopt};
  }
  if (tok[0] == "kD") {
    if (tok.size() == 3 && tok[1] == "s3") {
      Fp k(detail::parse_number(tok[2], "field size"));
      return {id, function_algebra(k, symmetric_group_3()), std::nullopt};
    }
    if (tok.size() == 4 && tok[1] == "cyclic") {
      std::size_t n = detail::parse_order(tok[2]);
      Fp k(detail::parse_number(tok[3], "field size"));
      return {id, function_algebra(k, cyclic_group(n, "u")), std::nullopt};
    }
    fail(errc::parse_error, "expected kD:s3:<p> or kD:cyclic:<n>:<p>, got " + id);
  }
  fail(errc::parse_error, "unknown instance \"" + id + "\"");
}

/// Full axiom suite for an instance: Hopf laws of the algebra itself, and for
/// glued instances also the braided-partner and coefficient laws.
inline CheckReport instance_check(const HopfInstance& inst) {
  CheckReport rep = check_hopf(inst.hopf);
  if (inst.pair) {
    rep.merge(check_hopf(inst.pair->group_part), "factor.");
    rep.merge(check_braided_hopf(inst.pair->group_part, inst.pair->line_part),
              "partner.");
    rep.merge(check_braided_comodule_algebra(inst.pair->group_part,
                                             inst.pair->line_part,
                                             taft_coefficient(*inst.pair)),
              "coefficient.");
  }
  return rep;
}

/// Cohomology of an instance with the requested coefficient:
///   "trivial"  F = k over the instance algebra (cocycles = grouplikes);
///   "E"        glued instances only: F = the braided line over the glued
///              algebra.  When the glued cocycle search exceeds the budget the
///              computation falls back to the factorwise route (two small
///              searches plus the compatible-pair decomposition), which yields
///              the same cocycle list and the same classes.
inline CohomologyResult instance_cohomology(const HopfInstance& inst,
                                            const std::string& coeff,
                                            const Budget& budget) {
  if (coeff == "trivial") {
    Diagram d = build_diagram(inst.hopf, trivial_coefficient(inst.hopf), false);
    return compute_cohomology(d, budget);
  }
  require(coeff == "E", errc::parse_error,
          "unknown coefficient \"" + coeff + "\" (expected E or trivial)");
  require(inst.pair.has_value(), errc::parse_error,
          "coefficient E needs a glued (taft) instance, got " + inst.id);
  const HopfData& h = inst.pair->group_part;
  const BraidedHopfData& e = inst.pair->line_part;
  BraidedComoduleAlgebra f = taft_coefficient(*inst.pair);
  Diagram glued = build_diagram(inst.hopf, coaction_over_biproduct(h, e, f), false);

  CohomologyResult res;
  res.h0 = compute_h0(glued, budget);
  try {
    res.z1 = compute_z1(glued, budget);
    res.h1 = compute_h1(glued, res.z1, budget);
    return res;
  } catch (const error& err) {
    if (err.code() != errc::budget_exceeded) throw;
  }
  BoxSet box = build_box_set(h, e, f, budget, false);
  BoxContext ctx = make_box_context(h, e, f);
  res.z1.reserve(box.pairs.size());
  for (auto [i, j] : box.pairs)
    res.z1.push_back(assemble_pair(ctx, box.z1_h[i], box.z1_e[j]));
  std::sort(res.z1.begin(), res.z1.end());
  res.h1 = box_h1(h, e, f, box, budget).classes;
  return res;
}

// ---------------------------------------------------------------- group instances

/// Coefficient pairs over the semidirect group S3 = Z/2 |x Z/3.
inline SemidirectCoefficients parse_semidirect_instance(const std::string& id) {
  require(id == "s3:inv" || id == "s3:triv", errc::parse_error,
          "expected s3:inv or s3:triv, got \"" + id + "\"");
  FiniteGroup g = cyclic_group(2, "s");
  FiniteGroup a = cyclic_group(3, "r");
  FiniteGroup c = cyclic_group(3, "t");
  GroupAction g_on_a = inversion_action(g, a);
  GroupAction a_on_c = trivial_action(a, c.order());
  GroupAction g_on_c = (id == "s3:inv") ? inversion_action(g, c)
                                        : trivial_action(g, c.order());
  return make_semidirect_coefficients(std::move(g), std::move(a), std::move(c),
                                      g_on_a, g_on_c, a_on_c);
}

/// A cross-check row: a group D acting on coefficients C, with the field the
/// function algebras live over.  Rows with d = s3 resolve to the semidirect
/// form so the factorwise verification applies; rows with d = z2 stay plain.
struct CrossCheckInstance {
  std::string id;
  Fp field;
  std::optional<DGroup> plain;
  std::optional<SemidirectCoefficients> semi;
};

inline CrossCheckInstance parse_cross_check_instance(const std::string& id) {
  auto tok = detail::split_tokens(id);
  require(tok.size() == 4, errc::parse_error,
          "expected <d>:<c>:<action>:<p>, got \"" + id + "\"");
  const std::string& dname = tok[0];
  const std::string& cname = tok[1];
  const std::string& action = tok[2];
  Fp k(detail::parse_number(tok[3], "field size"));

  FiniteGroup c;
  if (cname == "z2") c = cyclic_group(2, "t");
  else if (cname == "z3") c = cyclic_group(3, "t");
  else fail(errc::parse_error, "unknown coefficient group \"" + cname + "\"");

  if (dname == "z2") {
    FiniteGroup d = cyclic_group(2, "s");
    GroupAction act = [&] {
      if (action == "triv") return trivial_action(d, c.order());
      if (action == "inv") return inversion_action(d, c);
      fail(errc::parse_error, "z2 rows take action triv or inv, got " + action);
    }();
    return {id, k, make_dgroup(std::move(d), std::move(c), std::move(act)),
            std::nullopt};
  }
  if (dname == "s3") {
    FiniteGroup g = cyclic_group(2, "s");
    FiniteGroup a = cyclic_group(3, "r");
    GroupAction g_on_a = inversion_action(g, a);
    GroupAction a_on_c = trivial_action(a, c.order());
    GroupAction g_on_c = [&] {
      if (action == "triv") return trivial_action(g, c.order());
      if (action == "conj") {
        require(c.order() == 3, errc::parse_error,
                "conj rows need coefficient group z3");
        return inversion_action(g, c);
      }
      fail(errc::parse_error, "s3 rows take action triv or conj, got " + action);
    }();
    return {id, k, std::nullopt,
            make_semidirect_coefficients(std::move(g), std::move(a), std::move(c),
                                         g_on_a, g_on_c, a_on_c)};
  }
  fail(errc::parse_error, "unknown acting group \"" + dname + "\"");
}

/// Runs the function-algebra cross-check appropriate for the row shape.
inline CheckReport run_cross_check(const CrossCheckInstance& row, const Budget& budget) {
  if (row.semi) return cross_check_function_algebra(row.field, *row.semi, budget);
  return cross_check_function_algebra(row.field, *row.plain, budget);
}

}  // namespace hopfcoh
