#pragma once

#include "hopfcoh/yd.hpp"

namespace hopfcoh {

// Braided Hopf algebras E in the Yetter-Drinfeld category over H, comodule
// algebras, the biproduct H * E (a plain Hopf algebra), and star extensions
// F * E of a coefficient algebra F.

struct BraidedHopfData {
  Fp field;
  BasedSpace space;
  LinearMap action;    // E (x) H -> E
  LinearMap coaction;  // E -> E (x) H
  LinearMap mult, unit, comult, counit, antipode;

  YDData yd() const { return {space, action, coaction}; }
  AlgebraData algebra() const { return {field, space, mult, unit}; }
  CoalgebraData coalgebra() const { return {field, space, comult, counit}; }
};

/// An algebra F together with a coaction making it an H-comodule; the
/// coaction is required (by check_comodule_algebra) to be an algebra map
/// into the ordinary tensor algebra F (x) H.
struct ComoduleAlgebra {
  AlgebraData algebra;
  LinearMap coaction;  // F -> F (x) H

  ComoduleData comodule() const { return {algebra.space, coaction}; }
};

/// A coefficient algebra for the two-sided theory: an H-comodule algebra F
/// carrying in addition an E-coaction that is multiplicative only up to the
/// braiding (check_braided_comodule_algebra).
struct BraidedComoduleAlgebra {
  AlgebraData algebra;
  LinearMap coaction_h;  // F -> F (x) H   (ordinary comodule algebra)
  LinearMap coaction_e;  // F -> F (x) E   (braided comodule algebra)

  ComoduleAlgebra over_h() const { return {algebra, coaction_h}; }
};

// ---------------------------------------------------------------- checks

inline CheckReport check_comodule_algebra(const HopfData& h, const ComoduleAlgebra& f) {
  const Fp& k = h.field;
  std::size_t df = f.algebra.space.dim, dh = h.space.dim;
  auto idf = LinearMap::identity(k, df);
  auto idh = LinearMap::identity(k, dh);

  CheckReport rep;
  rep.merge(check_algebra(f.algebra), "algebra.");
  rep.merge(check_comodule(h, f.comodule()), "comodule.");
  auto mult_fh = compose(tensor(f.algebra.mult, h.mult),
                         tensor_chain({idf, LinearMap::flip(k, dh, df), idh}));
  rep.add("coaction_multiplicative",
          first_difference(compose(f.coaction, f.algebra.mult),
                           compose(mult_fh, tensor(f.coaction, f.coaction))));
  rep.add("coaction_unital",
          first_difference(compose(f.coaction, f.algebra.unit),
                           tensor(f.algebra.unit, h.unit)));
  return rep;
}

/// Braided Hopf algebra axioms for E in the YD category over H.
inline CheckReport check_braided_hopf(const HopfData& h, const BraidedHopfData& e) {
  const Fp& k = h.field;
  std::size_t de = e.space.dim;
  auto ide = LinearMap::identity(k, de);

  CheckReport rep;
  rep.merge(check_yd(h, e.yd()), "yd.");
  rep.merge(check_algebra(e.algebra()), "algebra.");
  rep.merge(check_coalgebra(e.coalgebra()), "coalgebra.");

  // Structure maps live in the YD category: each is a module morphism and a
  // comodule morphism for the tensor structures.
  ModuleData e_mod = e.yd().module();
  ComoduleData e_com = e.yd().comodule();
  ModuleData ee_mod = tensor_module(h, e_mod, e_mod);
  ComoduleData ee_com = tensor_comodule(h, e_com, e_com);
  ModuleData k_mod = trivial_module(h);
  ComoduleData k_com = trivial_comodule(h);

  rep.merge(check_module_morphism(h, ee_mod, e_mod, e.mult), "mult_h_linear.");
  rep.merge(check_comodule_morphism(h, ee_com, e_com, e.mult), "mult_h_colinear.");
  rep.merge(check_module_morphism(h, k_mod, e_mod, e.unit), "unit_h_linear.");
  rep.merge(check_comodule_morphism(h, k_com, e_com, e.unit), "unit_h_colinear.");
  rep.merge(check_module_morphism(h, e_mod, ee_mod, e.comult), "comult_h_linear.");
  rep.merge(check_comodule_morphism(h, e_com, ee_com, e.comult), "comult_h_colinear.");
  rep.merge(check_module_morphism(h, e_mod, k_mod, e.counit), "counit_h_linear.");
  rep.merge(check_comodule_morphism(h, e_com, k_com, e.counit), "counit_h_colinear.");

  // Braided bialgebra law: Delta is multiplicative for the braided product
  // on E (x) E, via tau_{E,E}.
  auto tau_ee = braiding_tau(h, e_mod, e_com);
  auto braided_mult_ee =
      compose(tensor(e.mult, e.mult), tensor_chain({ide, tau_ee, ide}));
  rep.add("comult_braided_multiplicative",
          first_difference(compose(e.comult, e.mult),
                           compose(braided_mult_ee, tensor(e.comult, e.comult))));
  rep.add("comult_unital", first_difference(compose(e.comult, e.unit),
                                            tensor(e.unit, e.unit)));
  rep.add("counit_multiplicative",
          first_difference(compose(e.counit, e.mult),
                           tensor(e.counit, e.counit)));
  rep.add_flag("counit_unital",
               compose(e.counit, e.unit) == LinearMap::identity(k, 1));

  // Antipode: convolution inverse of the identity.
  auto unit_counit = compose(e.unit, e.counit);
  rep.add("antipode_left",
          first_difference(compose_chain({e.mult, tensor(e.antipode, ide), e.comult}),
                           unit_counit, &e.space.labels));
  rep.add("antipode_right",
          first_difference(compose_chain({e.mult, tensor(ide, e.antipode), e.comult}),
                           unit_counit, &e.space.labels));
  return rep;
}

/// Braided comodule algebra conditions for the E-coaction of a coefficient
/// algebra F, together with the mixed condition tying the two coactions.
inline CheckReport check_braided_comodule_algebra(const HopfData& h,
                                                  const BraidedHopfData& e,
                                                  const BraidedComoduleAlgebra& f) {
  const Fp& k = h.field;
  std::size_t df = f.algebra.space.dim, de = e.space.dim, dh = h.space.dim;
  auto idf = LinearMap::identity(k, df);
  auto ide = LinearMap::identity(k, de);
  auto idh = LinearMap::identity(k, dh);

  CheckReport rep;
  rep.merge(check_comodule_algebra(h, f.over_h()), "over_h.");

  // E-comodule axioms (E is only a coalgebra here).
  rep.add("e_coaction_coassociative",
          first_difference(compose(tensor(f.coaction_e, ide), f.coaction_e),
                           compose(tensor(idf, e.comult), f.coaction_e),
                           &f.algebra.space.labels));
  rep.add("e_coaction_counital",
          first_difference(compose(tensor(idf, e.counit), f.coaction_e), idf,
                           &f.algebra.space.labels));

  // Multiplicative up to the braiding tau_{E,F} (E acts, F coacts via H).
  auto tau_ef = braiding_tau(h, e.yd().module(),
                             ComoduleData{f.algebra.space, f.coaction_h});
  auto braided_mult_fe =
      compose(tensor(f.algebra.mult, e.mult), tensor_chain({idf, tau_ef, ide}));
  rep.add("e_coaction_multiplicative",
          first_difference(compose(f.coaction_e, f.algebra.mult),
                           compose(braided_mult_fe,
                                   tensor(f.coaction_e, f.coaction_e))));
  rep.add("e_coaction_unital",
          first_difference(compose(f.coaction_e, f.algebra.unit),
                           tensor(f.algebra.unit, e.unit)));

  // The E-coaction is a morphism of H-comodules, where F (x) E carries the
  // tensor coaction built from coaction_h and the YD coaction of E.
  ComoduleData fe_com = tensor_comodule(h, ComoduleData{f.algebra.space, f.coaction_h},
                                        e.yd().comodule());
  rep.merge(check_comodule_morphism(h, ComoduleData{f.algebra.space, f.coaction_h},
                                    fe_com, f.coaction_e),
            "e_coaction_h_colinear.");
  return rep;
}

// ---------------------------------------------------------------- biproduct

/// The biproduct B = H * E on H (x) E:
///   (h * x)(h' * x') = h h'_(1) * (x . h'_(2)) x'
///   Delta(h * x)     = (h_(1) * (x_(1))_0) (x) (h_(2) (x_(1))_1 * x_(2))
///   sigma(h * x)     = (1 * sigma_E(x_0)) . (sigma_H(h x_1) * 1)
inline HopfData biproduct(const HopfData& h, const BraidedHopfData& e) {
  const Fp& k = h.field;
  std::size_t dh = h.space.dim, de = e.space.dim;
  auto idh = LinearMap::identity(k, dh);
  auto ide = LinearMap::identity(k, de);

  BasedSpace space = tensor_space(h.space, e.space);

  auto mult = compose_chain(
      {tensor(idh, e.mult),
       tensor_chain({h.mult, e.action, ide}),
       tensor_chain({idh, LinearMap::flip(k, de, dh), idh, ide}),
       tensor_chain({idh, ide, h.comult, ide})});

  auto unit = tensor(h.unit, e.unit);

  auto comult = compose_chain(
      {tensor_chain({idh, ide, h.mult, ide}),
       tensor_chain({idh, LinearMap::flip(k, dh, de), idh, ide}),
       tensor_chain({idh, idh, e.coaction, ide}),
       tensor(h.comult, e.comult)});

  auto counit = tensor(h.counit, e.counit);

  auto antipode = compose_chain(
      {mult,
       tensor_chain({h.unit, ide, idh, e.unit}),
       tensor(e.antipode, compose(h.antipode, h.mult)),
       tensor(LinearMap::flip(k, dh, de), idh),
       tensor(idh, e.coaction)});

  return {k, space, mult, unit, comult, counit, antipode};
}

// ---------------------------------------------------------------- star extension

/// F * E: the braided tensor algebra on F (x) E, with its H-coaction
/// (diagonal, via coaction_h of F and the YD coaction of E) and its
/// E-coaction id_F (x) Delta_E.  The result is again a coefficient algebra,
/// so iterated extensions (F * E) * E make sense.
inline BraidedComoduleAlgebra star_extension(const HopfData& h, const BraidedHopfData& e,
                                             const BraidedComoduleAlgebra& f) {
  const Fp& k = h.field;
  std::size_t df = f.algebra.space.dim, de = e.space.dim, dh = h.space.dim;
  auto idf = LinearMap::identity(k, df);
  auto ide = LinearMap::identity(k, de);
  auto idh = LinearMap::identity(k, dh);

  BasedSpace space = tensor_space(f.algebra.space, e.space);

  auto tau_ef = braiding_tau(h, e.yd().module(),
                             ComoduleData{f.algebra.space, f.coaction_h});
  auto mult = compose(tensor(f.algebra.mult, e.mult),
                      tensor_chain({idf, tau_ef, ide}));
  auto unit = tensor(f.algebra.unit, e.unit);

  auto coaction_h = compose_chain(
      {tensor(LinearMap::identity(k, df * de), h.mult),
       tensor_chain({idf, LinearMap::flip(k, dh, de), idh}),
       tensor(f.coaction_h, e.coaction)});

  auto coaction_e = tensor(idf, e.comult);

  AlgebraData algebra{k, space, mult, unit};
  return {algebra, coaction_h, coaction_e};
}

/// View the coefficient algebra F as a comodule algebra over the biproduct
/// B = H * E:  rho_B = (rho_H (x) id_E) o rho_E, landing in F (x) H (x) E.
inline ComoduleAlgebra coaction_over_biproduct(const HopfData& h, const BraidedHopfData& e,
                                               const BraidedComoduleAlgebra& f) {
  const Fp& k = h.field;
  auto rho = compose(tensor(f.coaction_h, LinearMap::identity(k, e.space.dim)),
                     f.coaction_e);
  return {f.algebra, rho};
}

/// Split a coaction over the biproduct back into its H- and E-components by
/// applying the respective counits.
inline std::pair<LinearMap, LinearMap> split_biproduct_coaction(
    const HopfData& h, const BraidedHopfData& e, std::size_t dim_f,
    const LinearMap& rho_b) {
  const Fp& k = h.field;
  auto idf = LinearMap::identity(k, dim_f);
  auto idh = LinearMap::identity(k, h.space.dim);
  auto ide = LinearMap::identity(k, e.space.dim);
  auto rho_h = compose(tensor_chain({idf, idh, e.counit}), rho_b);
  auto rho_e = compose(tensor_chain({idf, h.counit, ide}), rho_b);
  return {rho_h, rho_e};
}

}  // namespace hopfcoh
