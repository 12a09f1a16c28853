#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfcoh/errors.hpp"

namespace hopfcoh {

/// Canonical representative of a residue class, always kept in [0, p).
using Scalar = std::uint64_t;

/// Arithmetic in the prime field F_p.  Construction checks primality.
class Fp {
 public:
  explicit Fp(Scalar p) : p_(p) {
    require(p >= 2, errc::not_prime, "p = " + std::to_string(p));
    for (Scalar d = 2; d * d <= p; ++d)
      require(p % d != 0, errc::not_prime, "p = " + std::to_string(p));
    require(p <= (Scalar(1) << 31), errc::not_prime,
            "p too large for exact 64-bit products");
  }

  Scalar p() const { return p_; }

  Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b % p_) % p_; }
  Scalar neg(Scalar a) const { return (p_ - a % p_) % p_; }
  Scalar mul(Scalar a, Scalar b) const { return (a % p_) * (b % p_) % p_; }

  Scalar pow(Scalar a, std::uint64_t e) const {
    Scalar r = 1, base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse; rejects 0.
  Scalar inv(Scalar a) const {
    require(a % p_ != 0, errc::not_invertible, "0 has no inverse in F_p");
    return pow(a, p_ - 2);
  }

  /// Canonical representative of a signed integer.
  Scalar reduce(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(m);
  }

  bool operator==(const Fp& o) const = default;

 private:
  Scalar p_;
};

/// Smallest element of F_p^x of exact multiplicative order n.
inline Scalar primitive_root_of_unity(const Fp& k, std::uint64_t n) {
  require(n >= 1, errc::no_such_root, "order must be positive");
  if (n == 1) return 1;
  require((k.p() - 1) % n == 0, errc::no_such_root,
          "no element of order " + std::to_string(n) + " in F_" + std::to_string(k.p()));
  for (Scalar c = 2; c < k.p(); ++c) {
    if (k.pow(c, n) != 1) continue;
    bool exact = true;
    for (std::uint64_t m = 1; m < n; ++m)
      if (k.pow(c, m) == 1) { exact = false; break; }
    if (exact) return c;
  }
  fail(errc::no_such_root, "exhausted F_" + std::to_string(k.p()));
}

/// Gaussian binomial (i over s) at zeta, via the Pascal-style recursion
/// (i,s) = (i-1,s-1) + zeta^s (i-1,s) with (i,0) = (i,i) = 1.
inline Scalar zeta_binomial(const Fp& k, std::uint64_t i, std::uint64_t s, Scalar zeta) {
  require(s <= i && i <= 4096, errc::shape_mismatch,
          "zeta_binomial requires 0 <= s <= i (small)");
  std::vector<Scalar> row{1};
  for (std::uint64_t r = 1; r <= i; ++r) {
    std::vector<Scalar> next(r + 1, 1);
    for (std::uint64_t t = 1; t < r; ++t)
      next[t] = k.add(row[t - 1], k.mul(k.pow(zeta, t), row[t]));
    row = std::move(next);
  }
  return row[s];
}

}  // namespace hopfcoh
