#include <catch2/catch_amalgamated.hpp>

#include "hopfcoh/fp.hpp"

using namespace hopfcoh;

TEST_CASE("prime field construction rejects composites", "[fp]") {
  CHECK_THROWS_AS(Fp(1), error);
  CHECK_THROWS_AS(Fp(4), error);
  CHECK_THROWS_AS(Fp(9), error);
  CHECK_THROWS_AS(Fp(91), error);  // 7 * 13
  CHECK_NOTHROW(Fp(2));
  CHECK_NOTHROW(Fp(97));
  try {
    Fp(6);
    FAIL("expected throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_prime);
  }
}

TEST_CASE("field arithmetic basics", "[fp]") {
  Fp k(7);
  CHECK(k.add(5, 4) == 2);
  CHECK(k.sub(2, 5) == 4);
  CHECK(k.neg(3) == 4);
  CHECK(k.neg(0) == 0);
  CHECK(k.mul(5, 5) == 4);
  CHECK(k.pow(3, 6) == 1);   // Fermat
  CHECK(k.pow(3, 0) == 1);
  CHECK(k.reduce(-1) == 6);
  CHECK(k.reduce(-14) == 0);
  CHECK(k.reduce(15) == 1);
}

TEST_CASE("inverses mod 7 match the hand table", "[fp]") {
  Fp k(7);
  // 1.1=1, 2.4=8=1, 3.5=15=1, 6.6=36=1
  Scalar expected[] = {0, 1, 4, 5, 2, 3, 6};
  for (Scalar a = 1; a < 7; ++a) {
    CHECK(k.inv(a) == expected[a]);
    CHECK(k.mul(a, k.inv(a)) == 1);
  }
  CHECK_THROWS_AS(k.inv(0), error);
}

TEST_CASE("primitive roots of unity", "[fp]") {
  CHECK(primitive_root_of_unity(Fp(5), 2) == 4);
  CHECK(primitive_root_of_unity(Fp(7), 3) == 2);
  CHECK(primitive_root_of_unity(Fp(7), 6) == 3);
  CHECK(primitive_root_of_unity(Fp(13), 4) == 5);
  CHECK(primitive_root_of_unity(Fp(11), 1) == 1);
  CHECK_THROWS_AS(primitive_root_of_unity(Fp(5), 3), error);  // 3 does not divide 4
  try {
    primitive_root_of_unity(Fp(5), 3);
    FAIL("expected throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::no_such_root);
  }
}

TEST_CASE("zeta binomial triangles match the solved tables", "[fp]") {
  // frozen: triangle mod 5 at zeta = 4 (primitive square root of 1)
  Fp k5(5);
  Scalar t5[5][5] = {{1, 0, 0, 0, 0},
                     {1, 1, 0, 0, 0},
                     {1, 0, 1, 0, 0},
                     {1, 1, 1, 1, 0},
                     {1, 0, 2, 0, 1}};
  for (std::uint64_t i = 0; i < 5; ++i)
    for (std::uint64_t s = 0; s <= i; ++s)
      CHECK(zeta_binomial(k5, i, s, 4) == t5[i][s]);

  // frozen: triangle mod 7 at zeta = 2 (primitive cube root of 1)
  Fp k7(7);
  Scalar t7[7][7] = {{1, 0, 0, 0, 0, 0, 0},
                     {1, 1, 0, 0, 0, 0, 0},
                     {1, 3, 1, 0, 0, 0, 0},
                     {1, 0, 0, 1, 0, 0, 0},
                     {1, 1, 0, 1, 1, 0, 0},
                     {1, 3, 1, 1, 3, 1, 0},
                     {1, 0, 0, 2, 0, 0, 1}};
  for (std::uint64_t i = 0; i < 7; ++i)
    for (std::uint64_t s = 0; s <= i; ++s)
      CHECK(zeta_binomial(k7, i, s, 2) == t7[i][s]);

  // (2,1) = 1 + zeta in general
  CHECK(zeta_binomial(k5, 2, 1, 4) == 0);
  CHECK(zeta_binomial(k7, 2, 1, 2) == 3);
}

TEST_CASE("zeta binomial degenerates to Pascal at zeta = 1", "[fp]") {
  Fp k(13);
  Scalar pascal[11][11] = {};
  for (int i = 0; i <= 10; ++i) {
    pascal[i][0] = 1;
    for (int s = 1; s <= i; ++s)
      pascal[i][s] = k.add(pascal[i - 1][s - 1], s <= i - 1 ? pascal[i - 1][s] : 0);
  }
  for (std::uint64_t i = 0; i <= 10; ++i)
    for (std::uint64_t s = 0; s <= i; ++s)
      CHECK(zeta_binomial(k, i, s, 1) == pascal[i][s]);
}

TEST_CASE("row n of the zeta triangle vanishes at a primitive n-th root", "[fp]") {
  struct Case { Scalar p; std::uint64_t n; };
  for (auto [p, n] : {Case{5, 2}, Case{7, 3}, Case{13, 4}, Case{11, 5}}) {
    Fp k(p);
    Scalar zeta = primitive_root_of_unity(k, n);
    for (std::uint64_t s = 1; s < n; ++s)
      CHECK(zeta_binomial(k, n, s, zeta) == 0);
    CHECK(zeta_binomial(k, n, 0, zeta) == 1);
    CHECK(zeta_binomial(k, n, n, zeta) == 1);
  }
}

TEST_CASE("zeta binomial symmetry (i,s) = (i,i-s)", "[fp]") {
  Fp k(11);
  Scalar zeta = primitive_root_of_unity(k, 5);
  for (std::uint64_t i = 0; i <= 9; ++i)
    for (std::uint64_t s = 0; s <= i; ++s)
      CHECK(zeta_binomial(k, i, s, zeta) == zeta_binomial(k, i, i - s, zeta));
}
