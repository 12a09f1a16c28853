#pragma once

#include "hopfcoh/hopf.hpp"

namespace hopfcoh {

// Right modules and right comodules over a Hopf algebra H, plus the
// prebraiding tau on (module, comodule) pairs and the compatibility
// condition carving out the Yetter-Drinfeld objects.

struct ModuleData {
  BasedSpace space;
  LinearMap action;    // M (x) H -> M
};

struct ComoduleData {
  BasedSpace space;
  LinearMap coaction;  // N -> N (x) H
};

struct YDData {
  BasedSpace space;
  LinearMap action;
  LinearMap coaction;

  ModuleData module() const { return {space, action}; }
  ComoduleData comodule() const { return {space, coaction}; }
};

// ---------------------------------------------------------------- axioms

inline CheckReport check_module(const HopfData& h, const ModuleData& m) {
  const Fp& k = h.field;
  std::size_t dm = m.space.dim, dh = h.space.dim;
  require(m.action.dom_dim() == dm * dh && m.action.cod_dim() == dm,
          errc::shape_mismatch, "action must map M(x)H -> M");
  auto idm = LinearMap::identity(k, dm);
  auto idh = LinearMap::identity(k, dh);
  CheckReport rep;
  rep.add("action_associative",
          first_difference(compose(m.action, tensor(m.action, idh)),
                           compose(m.action, tensor(idm, h.mult))));
  rep.add("action_unital",
          first_difference(compose(m.action, tensor(idm, h.unit)), idm,
                           &m.space.labels));
  return rep;
}

inline CheckReport check_comodule(const HopfData& h, const ComoduleData& n) {
  const Fp& k = h.field;
  std::size_t dn = n.space.dim, dh = h.space.dim;
  require(n.coaction.dom_dim() == dn && n.coaction.cod_dim() == dn * dh,
          errc::shape_mismatch, "coaction must map N -> N(x)H");
  auto idn = LinearMap::identity(k, dn);
  auto idh = LinearMap::identity(k, dh);
  CheckReport rep;
  rep.add("coaction_coassociative",
          first_difference(compose(tensor(n.coaction, idh), n.coaction),
                           compose(tensor(idn, h.comult), n.coaction),
                           &n.space.labels));
  rep.add("coaction_counital",
          first_difference(compose(tensor(idn, h.counit), n.coaction), idn,
                           &n.space.labels));
  return rep;
}

inline CheckReport check_module_morphism(const HopfData& h, const ModuleData& m,
                                         const ModuleData& m2, const LinearMap& phi) {
  auto idh = LinearMap::identity(h.field, h.space.dim);
  CheckReport rep;
  rep.add("module_morphism",
          first_difference(compose(phi, m.action),
                           compose(m2.action, tensor(phi, idh))));
  return rep;
}

inline CheckReport check_comodule_morphism(const HopfData& h, const ComoduleData& n,
                                           const ComoduleData& n2, const LinearMap& psi) {
  auto idh = LinearMap::identity(h.field, h.space.dim);
  CheckReport rep;
  rep.add("comodule_morphism",
          first_difference(compose(n2.coaction, psi),
                           compose(tensor(psi, idh), n.coaction)));
  return rep;
}

// ---------------------------------------------------------------- tensor structures

/// (m (x) m') . h = m.h_(1) (x) m'.h_(2)
inline ModuleData tensor_module(const HopfData& h, const ModuleData& m,
                                const ModuleData& m2) {
  const Fp& k = h.field;
  std::size_t dm = m.space.dim, dm2 = m2.space.dim, dh = h.space.dim;
  auto action = compose_chain(
      {tensor(m.action, m2.action),
       tensor_chain({LinearMap::identity(k, dm), LinearMap::flip(k, dm2, dh),
                     LinearMap::identity(k, dh)}),
       tensor(LinearMap::identity(k, dm * dm2), h.comult)});
  return {tensor_space(m.space, m2.space), action};
}

/// rho(n (x) n') = n_0 (x) n'_0 (x) n_1 n'_1
inline ComoduleData tensor_comodule(const HopfData& h, const ComoduleData& n,
                                    const ComoduleData& n2) {
  const Fp& k = h.field;
  std::size_t dn = n.space.dim, dn2 = n2.space.dim, dh = h.space.dim;
  auto coaction = compose_chain(
      {tensor(LinearMap::identity(k, dn * dn2), h.mult),
       tensor_chain({LinearMap::identity(k, dn), LinearMap::flip(k, dh, dn2),
                     LinearMap::identity(k, dh)}),
       tensor(n.coaction, n2.coaction)});
  return {tensor_space(n.space, n2.space), coaction};
}

/// Trivial structures on the ground field k.
inline ModuleData trivial_module(const HopfData& h) {
  return {BasedSpace::make("k", 1, {"1"}), h.counit};
}

inline ComoduleData trivial_comodule(const HopfData& h) {
  return {BasedSpace::make("k", 1, {"1"}), h.unit};
}

/// H as a module over itself (right multiplication) and as a comodule over
/// itself (comultiplication).
inline ModuleData regular_module(const HopfData& h) { return {h.space, h.mult}; }
inline ComoduleData regular_comodule(const HopfData& h) { return {h.space, h.comult}; }

// ---------------------------------------------------------------- prebraiding

/// tau_{M,N}: M (x) N -> N (x) M, m (x) n -> n_0 (x) m . n_1.
inline LinearMap braiding_tau(const HopfData& h, const ModuleData& m,
                              const ComoduleData& n) {
  const Fp& k = h.field;
  std::size_t dm = m.space.dim, dn = n.space.dim;
  return compose_chain({tensor(LinearMap::identity(k, dn), m.action),
                        tensor(LinearMap::flip(k, dm, dn),
                               LinearMap::identity(k, h.space.dim)),
                        tensor(LinearMap::identity(k, dm), n.coaction)});
}

/// Yetter-Drinfeld compatibility:
/// m_0 . h_(1) (x) m_1 h_(2) = (m . h_(2))_0 (x) h_(1) (m . h_(2))_1.
inline CheckReport check_yd(const HopfData& h, const YDData& yd) {
  const Fp& k = h.field;
  std::size_t dm = yd.space.dim, dh = h.space.dim;
  auto idm = LinearMap::identity(k, dm);
  auto idh = LinearMap::identity(k, dh);

  CheckReport rep;
  rep.merge(check_module(h, yd.module()));
  rep.merge(check_comodule(h, yd.comodule()));

  auto lhs = compose_chain(
      {tensor(yd.action, h.mult),
       tensor_chain({idm, LinearMap::flip(k, dh, dh), idh}),
       tensor(yd.coaction, h.comult)});
  auto rhs = compose_chain(
      {tensor(idm, h.mult),
       tensor(LinearMap::flip(k, dh, dm), idh),
       tensor(idh, yd.coaction),
       tensor(idh, yd.action),
       tensor(LinearMap::flip(k, dm, dh), idh),
       tensor(idm, h.comult)});
  rep.add("yd_compatibility", first_difference(lhs, rhs));
  return rep;
}

// ---------------------------------------------------------------- universal tau laws

/// The four unit/counit laws satisfied by tau for every module M and
/// comodule N (H itself carries the regular structures).
inline CheckReport check_tau_unit_laws(const HopfData& h, const ModuleData& m,
                                       const ComoduleData& n) {
  const Fp& k = h.field;
  std::size_t dm = m.space.dim, dn = n.space.dim, dh = h.space.dim;
  auto idm = LinearMap::identity(k, dm);
  auto idn = LinearMap::identity(k, dn);
  auto tau_mh = braiding_tau(h, m, regular_comodule(h));
  auto tau_hn = braiding_tau(h, regular_module(h), n);

  CheckReport rep;
  rep.add("tau_unit_right",  // tau(m (x) 1) = 1 (x) m
          first_difference(compose(tau_mh, tensor(idm, h.unit)),
                           tensor(h.unit, idm), &m.space.labels));
  rep.add("tau_unit_left",   // tau(1 (x) n) = rho(n)
          first_difference(compose(tau_hn, tensor(h.unit, idn)), n.coaction,
                           &n.space.labels));
  rep.add("tau_counit_left",  // (id (x) eps) tau = eps (x) id on H (x) N
          first_difference(compose(tensor(idn, h.counit), tau_hn),
                           tensor(h.counit, idn)));
  rep.add("tau_counit_right",  // (eps (x) id) tau = action on M (x) H
          first_difference(compose(tensor(h.counit, idm), tau_mh), m.action));
  return rep;
}

/// Hexagon laws: tau on a tensor product decomposes one factor at a time.
inline CheckReport check_tau_hexagons(const HopfData& h, const ModuleData& m,
                                      const ModuleData& m2, const ComoduleData& n,
                                      const ComoduleData& n2) {
  const Fp& k = h.field;
  auto idm = LinearMap::identity(k, m.space.dim);
  auto idm2 = LinearMap::identity(k, m2.space.dim);
  auto idn = LinearMap::identity(k, n.space.dim);
  auto idn2 = LinearMap::identity(k, n2.space.dim);

  CheckReport rep;
  // tau_{M (x) M', N} = (tau_{M,N} (x) id) o (id (x) tau_{M',N})
  rep.add("tau_hexagon_module",
          first_difference(braiding_tau(h, tensor_module(h, m, m2), n),
                           compose(tensor(braiding_tau(h, m, n), idm2),
                                   tensor(idm, braiding_tau(h, m2, n)))));
  // tau_{M, N (x) N'} = (id (x) tau_{M,N'}) o (tau_{M,N} (x) id)
  rep.add("tau_hexagon_comodule",
          first_difference(braiding_tau(h, m, tensor_comodule(h, n, n2)),
                           compose(tensor(idn, braiding_tau(h, m, n2)),
                                   tensor(braiding_tau(h, m, n), idn2))));
  return rep;
}

/// Naturality of tau in each slot, for a module morphism phi: M -> M' and a
/// comodule morphism psi: N -> N'.
inline CheckReport check_tau_naturality(const HopfData& h, const ModuleData& m,
                                        const ModuleData& m2, const LinearMap& phi,
                                        const ComoduleData& n, const ComoduleData& n2,
                                        const LinearMap& psi) {
  const Fp& k = h.field;
  CheckReport rep;
  // (id_N (x) phi) o tau_{M,N} = tau_{M',N} o (phi (x) id_N)
  rep.add("tau_natural_module_slot",
          first_difference(
              compose(tensor(LinearMap::identity(k, n.space.dim), phi),
                      braiding_tau(h, m, n)),
              compose(braiding_tau(h, m2, n),
                      tensor(phi, LinearMap::identity(k, n.space.dim)))));
  // (psi (x) id_M) o tau_{M,N} = tau_{M,N'} o (id_M (x) psi)
  rep.add("tau_natural_comodule_slot",
          first_difference(
              compose(tensor(psi, LinearMap::identity(k, m.space.dim)),
                      braiding_tau(h, m, n)),
              compose(braiding_tau(h, m, n2),
                      tensor(LinearMap::identity(k, m.space.dim), psi))));
  return rep;
}

/// Coaction of a tensor product computed through tau (for a YD object M and
/// a comodule N); must agree with the standard tensor coaction.
inline LinearMap braided_tensor_coaction(const HopfData& h, const YDData& m,
                                         const ComoduleData& n) {
  const Fp& k = h.field;
  auto tau_hn = braiding_tau(h, regular_module(h), n);
  return compose(tensor(LinearMap::identity(k, m.space.dim), tau_hn),
                 tensor(m.coaction, LinearMap::identity(k, n.space.dim)));
}

}  // namespace hopfcoh
