#include <catch2/catch_amalgamated.hpp>

#include "hopfcoh/hopf.hpp"

using namespace hopfcoh;

namespace {

// Hand-rolled k[Z/2] over F_5: basis {1, u}, u^2 = 1, Delta(u) = u (x) u.
HopfData hand_kz2(std::uint64_t p = 5) {
  Fp k(p);
  BasedSpace space = BasedSpace::make("k[Z/2]", 2, {"1", "u"});
  LinearMap mult(k, {2, 2}, {2});
  mult.set(0, 0, 1);  // 1*1 = 1
  mult.set(1, 1, 1);  // 1*u = u
  mult.set(1, 2, 1);  // u*1 = u
  mult.set(0, 3, 1);  // u*u = 1
  LinearMap unit(k, {1}, {2});
  unit.set(0, 0, 1);
  LinearMap comult(k, {2}, {2, 2});
  comult.set(0, 0, 1);  // Delta(1) = 1 (x) 1
  comult.set(3, 1, 1);  // Delta(u) = u (x) u
  LinearMap counit(k, {2}, {1});
  counit.set(0, 0, 1);
  counit.set(0, 1, 1);
  LinearMap antipode = LinearMap::identity(k, 2);
  return {k, space, mult, unit, comult, counit, antipode};
}

// Monoid bialgebra on {1, z} with z^2 = z and Delta(z) = z (x) z: a bialgebra
// admitting no antipode.
std::pair<AlgebraData, CoalgebraData> idempotent_bialgebra(std::uint64_t p = 5) {
  Fp k(p);
  BasedSpace space = BasedSpace::make("M", 2, {"1", "z"});
  LinearMap mult(k, {2, 2}, {2});
  mult.set(0, 0, 1);
  mult.set(1, 1, 1);
  mult.set(1, 2, 1);
  mult.set(1, 3, 1);  // z*z = z
  LinearMap unit(k, {1}, {2});
  unit.set(0, 0, 1);
  LinearMap comult(k, {2}, {2, 2});
  comult.set(0, 0, 1);
  comult.set(3, 1, 1);
  LinearMap counit(k, {2}, {1});
  counit.set(0, 0, 1);
  counit.set(0, 1, 1);
  return {AlgebraData{k, space, mult, unit}, CoalgebraData{k, space, comult, counit}};
}

}  // namespace

TEST_CASE("group algebra of Z/2 satisfies all Hopf axioms", "[hopf]") {
  HopfData h = hand_kz2();
  CheckReport rep = check_hopf(h, /*require_coop=*/true);
  INFO(rep.summary());
  CHECK(rep.ok());
  CHECK(rep.items.size() >= 12);
  for (const auto& item : rep.items) CHECK(item.pass);
}

TEST_CASE("axiom failures are reported with a named witness", "[hopf]") {
  HopfData h = hand_kz2();
  // Corrupt the comultiplication: Delta(u) = u (x) 1 breaks the left counit law.
  h.comult = LinearMap(h.field, {2}, {2, 2});
  h.comult.set(0, 0, 1);
  h.comult.set(2, 1, 1);
  CheckReport rep = check_hopf(h);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& item : rep.items)
    if (item.name == "counit_left") {
      found = true;
      CHECK_FALSE(item.pass);
      CHECK_FALSE(item.witness.empty());
    }
  CHECK(found);

  // An unrelated corruption shows up under a different name: u*1 = 1 makes
  // (u*1)*u = u while u*(1*u) = 1.
  HopfData h2 = hand_kz2();
  h2.mult.set(1, 2, 0);
  h2.mult.set(0, 2, 1);
  CheckReport rep2 = check_hopf(h2);
  CHECK_FALSE(rep2.ok());
  bool assoc_failed = false;
  for (const auto& item : rep2.items)
    if (item.name == "associativity" && !item.pass) assoc_failed = true;
  CHECK(assoc_failed);
}

TEST_CASE("multiplication table, unit element and inverses", "[hopf]") {
  HopfData h = hand_kz2();
  AlgebraData a = h.algebra();
  MultTable mt(a);
  Element e1 = Element::basis(2, 0), eu = Element::basis(2, 1);
  CHECK(mt.mul(eu, eu) == e1);
  CHECK(one(a) == e1);

  // 2 + u has inverse: (2+u)(a+bu) = 1 => a = 2/3? solve: over F_5.
  Element x{{2, 1}};
  auto inv = try_inverse(a, x);
  REQUIRE(inv.has_value());
  CHECK(mt.mul(x, *inv) == e1);
  CHECK(mt.mul(*inv, x) == e1);

  // 1 + u is a zero divisor: no inverse.
  Element zd{{1, 1}};
  CHECK_FALSE(try_inverse(a, zd).has_value());
  CHECK_FALSE(is_invertible(a, zd));
}

TEST_CASE("unit group of k[Z/2] over F_5 has 16 elements", "[hopf]") {
  HopfData h = hand_kz2();
  auto us = units(h.algebra(), Budget{100000});
  // k[Z/2] = k x k over F_5 (5 is odd), so the unit group is (F_5^x)^2.
  CHECK(us.size() == 16);
  for (const auto& u : us) {
    CHECK(multiply(h.algebra(), u.value, u.inverse) == one(h.algebra()));
  }
  // Enumeration is ordered by coordinate vectors.
  CHECK(std::is_sorted(us.begin(), us.end(),
                       [](const Unit& a, const Unit& b) { return a.value < b.value; }));
}

TEST_CASE("grouplike elements of k[Z/2]", "[hopf]") {
  HopfData h = hand_kz2();
  auto gl = grouplikes(h, Budget{100000});
  REQUIRE(gl.size() == 2);
  // Lexicographic enumeration: u = (0,1) precedes 1 = (1,0).
  CHECK(gl[0] == Element::basis(2, 1));
  CHECK(gl[1] == Element::basis(2, 0));
}

TEST_CASE("tensor product algebra of two copies of k[Z/2]", "[hopf]") {
  HopfData h = hand_kz2();
  AlgebraData t = tensor_algebra(h.algebra(), h.algebra());
  CheckReport rep = check_algebra(t);
  INFO(rep.summary());
  CHECK(rep.ok());
  CHECK(t.space.dim == 4);
  CHECK(t.space.labels[3] == "u*u");
  // (u (x) 1)(1 (x) u) = u (x) u.
  MultTable mt(t);
  CHECK(mt.mul(Element::basis(4, 2), Element::basis(4, 1)) == Element::basis(4, 3));
}

TEST_CASE("convolution inverse recovers the antipode", "[hopf]") {
  HopfData h = hand_kz2();
  auto s = convolution_inverse(h.coalgebra(), h.algebra(),
                               LinearMap::identity(h.field, 2));
  REQUIRE(s.has_value());
  CHECK(*s == h.antipode);
}

TEST_CASE("bialgebras without antipode are detected", "[hopf]") {
  auto [alg, coalg] = idempotent_bialgebra();
  // The bialgebra axioms hold...
  CheckReport rep = check_bialgebra_compat(alg, coalg);
  INFO(rep.summary());
  CHECK(rep.ok());
  // ...but the identity has no convolution inverse.
  auto s = convolution_inverse(coalg, alg, LinearMap::identity(alg.field, 2));
  CHECK_FALSE(s.has_value());
}
