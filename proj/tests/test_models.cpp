#include <catch2/catch_amalgamated.hpp>

#include "hopfcoh/models.hpp"

using namespace hopfcoh;

TEST_CASE("cyclic group structure", "[models]") {
  FiniteGroup g = cyclic_group(4);
  CHECK(g.order() == 4);
  CHECK(g.identity == 0);
  CHECK(g.mul(3, 2) == 1);
  CHECK(g.inverse[1] == 3);
  CHECK(g.elements[2] == "c2");
}

TEST_CASE("group table validation rejects bad input", "[models]") {
  // Non-associative magma on 3 elements (subtraction mod 3).
  std::vector<std::vector<std::uint32_t>> bad(3, std::vector<std::uint32_t>(3));
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 3; ++j) bad[i][j] = (i + 3 - j) % 3;
  CHECK_THROWS_AS(make_group({"a", "b", "c"}, bad), error);

  // Row that is not a permutation is not an action.
  FiniteGroup z2 = cyclic_group(2);
  CHECK_THROWS_AS(make_action(z2, {{0, 1, 2}, {0, 0, 0}}), error);
  try {
    make_action(z2, {{0, 1, 2}, {0, 0, 0}});
  } catch (const error& e) {
    CHECK(e.code() == errc::not_an_action);
  }

  // Swapping two points is a permutation but breaks the identity axiom.
  CHECK_THROWS_AS(make_action(z2, {{1, 0}, {0, 1}}), error);
}

TEST_CASE("symmetric group on three letters via semidirect product", "[models]") {
  FiniteGroup s3 = symmetric_group_3();
  CHECK(s3.order() == 6);
  CHECK(s3.elements[0] == "(s0|r0)");
  CHECK(s3.elements[5] == "(s1|r2)");
  // (s,1)(1,r) = (s, r) but (1,r)(s,1) = (s, r^2): non-abelian.
  CHECK(s3.mul(3, 1) == 4);
  CHECK(s3.mul(1, 3) == 5);
  // Transpositions are involutions.
  for (std::uint32_t a = 3; a < 6; ++a) CHECK(s3.mul(a, a) == 0);
}

TEST_CASE("group algebra and function algebra are Hopf", "[models]") {
  Fp k5(5);
  FiniteGroup s3 = symmetric_group_3();

  HopfData kg = group_algebra(k5, cyclic_group(2));
  CheckReport r1 = check_hopf(kg, true);
  INFO(r1.summary());
  CHECK(r1.ok());

  HopfData ks3 = group_algebra(k5, s3);
  CheckReport r2 = check_hopf(ks3, true);
  INFO(r2.summary());
  CHECK(r2.ok());

  HopfData fs3 = function_algebra(k5, s3);
  CheckReport r3 = check_hopf(fs3, true);
  INFO(r3.summary());
  CHECK(r3.ok());
  CHECK(fs3.space.labels[0] == "d[(s0|r0)]");
}

TEST_CASE("grouplikes of a function algebra are the characters", "[models]") {
  FiniteGroup s3 = symmetric_group_3();
  FiniteGroup z3 = cyclic_group(3);
  Budget b{10'000'000};
  // |Hom(S3, F5^x)| = 2 (trivial and sign); |Hom(S3, F2^x)| = 1;
  // |Hom(Z/3, F7^x)| = 3; |Hom(Z/3, F5^x)| = 1.
  CHECK(grouplikes(function_algebra(Fp(5), s3), b).size() == 2);
  CHECK(grouplikes(function_algebra(Fp(2), s3), b).size() == 1);
  CHECK(grouplikes(function_algebra(Fp(7), z3), b).size() == 3);
  CHECK(grouplikes(function_algebra(Fp(5), z3), b).size() == 1);
}

TEST_CASE("Taft algebra at n=2, p=5", "[models]") {
  HopfData t = taft_hopf(2, 5);
  CHECK(t.space.dim == 4);
  CHECK(t.space.labels == std::vector<std::string>{"1", "h", "g", "gh"});

  CheckReport rep = check_hopf(t, true);
  INFO(rep.summary());
  CHECK(rep.ok());

  // Independently computed antipode matrix (rows = output, cols = input).
  std::vector<std::vector<Scalar>> expected = {
      {1, 0, 0, 0}, {0, 0, 0, 4}, {0, 0, 1, 0}, {0, 1, 0, 0}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(t.antipode.at(r, c) == expected[r][c]);

  // Antipode has order 4 here (sigma^2 = conjugation by g).
  auto s2 = compose(t.antipode, t.antipode);
  CHECK(s2 != LinearMap::identity(t.field, 4));
  CHECK(compose(s2, s2) == LinearMap::identity(t.field, 4));

  auto gl = grouplikes(t, Budget{10'000'000});
  REQUIRE(gl.size() == 2);
  CHECK(std::count(gl.begin(), gl.end(), Element::basis(4, 0)) == 1);
  CHECK(std::count(gl.begin(), gl.end(), Element::basis(4, 2)) == 1);
}

TEST_CASE("Taft algebra at n=3, p=7", "[models]") {
  HopfData t = taft_hopf(3, 7);
  CHECK(t.space.dim == 9);
  CHECK(t.space.labels[5] == "gh2");

  CheckReport rep = check_hopf(t, true);
  INFO(rep.summary());
  CHECK(rep.ok());

  // Independently computed antipode matrix over F_7 (zeta = 2).
  std::vector<std::vector<Scalar>> expected = {
      {1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 6, 0},
      {0, 0, 0, 0, 0, 2, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 5, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0, 0},
      {0, 3, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 4}};
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c) CHECK(t.antipode.at(r, c) == expected[r][c]);

  // The powers of g are grouplike; h-terms are not (exhaustive search over
  // 7^9 elements is deliberately out of unit-test budget).
  for (std::size_t a = 0; a < 3; ++a) {
    Element ga = Element::basis(9, a * 3);
    CHECK(t.comult.apply(ga) == tensor(t.field, ga, ga));
    CHECK(t.counit.apply(ga).coords[0] == 1);
  }
  Element h1 = Element::basis(9, 1);
  CHECK(t.comult.apply(h1) != tensor(t.field, h1, h1));
}

TEST_CASE("Taft algebra needs an n-th root of unity", "[models]") {
  CHECK_THROWS_AS(taft_hopf(3, 5), error);
  try {
    taft_hopf(3, 5);
  } catch (const error& e) {
    CHECK(e.code() == errc::no_such_root);
  }
  CHECK_THROWS_AS(taft_hopf(2, 4), error);  // 4 is not prime
}

TEST_CASE("braided line of the Taft pair", "[models]") {
  TaftPair t2 = taft_pair(2, 5);
  CHECK(t2.zeta == 4);
  CHECK(t2.line_part.space.labels == std::vector<std::string>{"1", "y"});
  // sigma_E = diag(1, 4) over F_5.
  CHECK(t2.line_part.antipode.at(0, 0) == 1);
  CHECK(t2.line_part.antipode.at(1, 1) == 4);

  TaftPair t3 = taft_pair(3, 7);
  CHECK(t3.zeta == 2);
  // sigma_E = diag(1, 6, 2) over F_7: (-1)^i zeta^{i(i-1)/2}.
  CHECK(t3.line_part.antipode.at(0, 0) == 1);
  CHECK(t3.line_part.antipode.at(1, 1) == 6);
  CHECK(t3.line_part.antipode.at(2, 2) == 2);

  // y . u = zeta y; y^2 . u = zeta^2 y^2 = 4 y^2 over F_7.
  CHECK(t3.line_part.action.at(1, 1 * 3 + 1) == 2);
  CHECK(t3.line_part.action.at(2, 2 * 3 + 1) == 4);
}

TEST_CASE("line as a comodule algebra directly over the Taft algebra", "[models]") {
  ComoduleAlgebra f = taft_line_over_taft(2, 5);
  // rho(y) = 1 (x) h + y (x) g.
  CHECK(f.coaction.at(0 * 4 + 1, 1) == 1);
  CHECK(f.coaction.at(1 * 4 + 2, 1) == 1);
  CHECK(f.coaction.entries().size() == 3);
}

TEST_CASE("diagonal braided model over a function algebra", "[models]") {
  Fp k(5);
  FiniteGroup s2 = cyclic_group(2, "s");
  FiniteGroup r3 = cyclic_group(3, "r");
  GroupAction inv = inversion_action(s2, r3);
  BraidedHopfData e = function_braided(k, s2, r3, inv);
  CHECK(e.space.dim == 3);
  // coaction(d[r1]) = d[r1] (x) d[s0] + d[r2] (x) d[s1].
  CHECK(e.coaction.at(1 * 2 + 0, 1) == 1);
  CHECK(e.coaction.at(2 * 2 + 1, 1) == 1);
  // action is trivial: d[a] . d[s0] = d[a], d[a] . d[s1] = 0.
  CHECK(e.action.at(1, 1 * 2 + 0) == 1);
  CHECK(e.action.at(1, 1 * 2 + 1) == 0);
}

TEST_CASE("actions that are not by automorphisms are rejected", "[models]") {
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z4 = cyclic_group(4);
  // x -> x + 2 on Z/4 is a permutation action of Z/2 but not an automorphism.
  GroupAction shift = make_action(z2, {{0, 1, 2, 3}, {2, 3, 0, 1}});
  CHECK_FALSE(acts_by_automorphisms(z2, z4, shift));
  CHECK_THROWS_AS(semidirect_product(z2, z4, shift), error);
  CHECK(acts_by_automorphisms(z2, z4, inversion_action(z2, z4)));
}
