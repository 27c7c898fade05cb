#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "campana/arith/primality.hpp"
#include "campana/arith/rational.hpp"

namespace campana {

/// sign * prod p^e over `factors`. Exponents are nonzero; negative ones
/// occur for non-integral rationals. The map keeps primes ascending.
struct PrimeFactorization {
  int sign = 1;
  std::map<BigInt, long> factors;

  Rational value() const {
    BigInt num = sign, den = 1;
    for (const auto& [p, e] : factors) {
      if (e > 0) num *= pow(p, static_cast<unsigned long>(e));
      else den *= pow(p, static_cast<unsigned long>(-e));
    }
    return Rational(std::move(num), std::move(den));
  }

  long exponent(const BigInt& p) const {
    auto it = factors.find(p);
    return it == factors.end() ? 0 : it->second;
  }

  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;
};

namespace detail {

/// Brent's cycle variant of Pollard rho with f(x) = x^2 + c. Returns a
/// nontrivial divisor of the odd composite n, trying c = 1, 2, ... in turn.
inline std::uint64_t rho_split(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    constexpr std::uint64_t block = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1u) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline BigInt rho_split(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    auto f = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    BigInt y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
    constexpr unsigned long block = 128;
    for (unsigned long r = 1; g == 1; r <<= 1u) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      for (unsigned long k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (unsigned long i = 0; i < std::min(block, r - k); ++i) {
          f(y);
          diff = abs(x - y);
          q *= diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd_of(q, n);
      }
    }
    if (g == n) {
      do {
        f(ys);
        g = gcd_of(BigInt(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void add_factor(std::map<BigInt, long>& out, const BigInt& p, long e) {
  if (e != 0) out[p] += e;
}

// n has no prime factor below the trial-division cutoff already applied.
inline void split_u64(std::uint64_t n, long mult, std::map<BigInt, long>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    add_factor(out, from_uint64(n), mult);
    return;
  }
  const std::uint64_t d = rho_split(n);
  split_u64(d, mult, out);
  split_u64(n / d, mult, out);
}

inline void split_big(const BigInt& n, long mult, std::map<BigInt, long>& out) {
  if (n == 1) return;
  if (fits_uint64(n)) {
    split_u64(to_uint64(n), mult, out);
    return;
  }
  if (is_prime(n)) {
    add_factor(out, n, mult);
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_big(root, 2 * mult, out);
    return;
  }
  const BigInt d = rho_split(n);
  split_big(d, mult, out);
  split_big(BigInt(n / d), mult, out);
}

// Trial division of word-sized values stops at this prime; Miller-Rabin
// and rho on machine words are far cheaper than dividing all the way to 10^6.
inline constexpr std::uint32_t kWordTrialLimit = 4096;

inline void factor_u64(std::uint64_t n, long mult, std::map<BigInt, long>& out) {
  for (std::uint32_t p : small_primes()) {
    if (p > kWordTrialLimit || std::uint64_t{p} * p > n) break;
    if (n % p != 0) continue;
    long e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    add_factor(out, BigInt(static_cast<unsigned long>(p)), e * mult);
  }
  split_u64(n, mult, out);
}

/// Factors n > 0 into `out`; exponents are scaled by `mult` (use -1 for a
/// denominator).
inline void factor_positive(BigInt n, long mult, std::map<BigInt, long>& out) {
  if (fits_uint64(n)) {
    factor_u64(to_uint64(n), mult, out);
    return;
  }
  const auto& primes = small_primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const unsigned long p = primes[i];
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      long e = 0;
      do {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
      add_factor(out, BigInt(p), e * mult);
      if (fits_uint64(n)) {
        factor_u64(to_uint64(n), mult, out);
        return;
      }
    }
    if ((i & 511u) == 511u && is_prime(n)) break;
  }
  split_big(n, mult, out);
}

}  // namespace detail

/// Complete factorization of a nonzero integer.
inline PrimeFactorization factor(const BigInt& n) {
  if (sgn(n) == 0) throw ZeroInputError("zero has no prime factorization");
  PrimeFactorization out;
  out.sign = sgn(n) < 0 ? -1 : 1;
  detail::factor_positive(abs(n), 1, out.factors);
  return out;
}

inline PrimeFactorization factor(const Rational& x) {
  if (x.is_zero()) throw ZeroInputError("zero has no prime factorization");
  PrimeFactorization out;
  out.sign = x.sign() < 0 ? -1 : 1;
  detail::factor_positive(abs(x.numerator()), 1, out.factors);
  detail::factor_positive(x.denominator(), -1, out.factors);
  return out;
}

/// p-adic valuation with a dedicated infinite state for v_p(0).
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation finite(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long value() const {
    if (infinite_) throw InvalidArgument("valuation is infinite");
    return value_;
  }
  /// True when the valuation is infinite or at least `bound`.
  bool at_least(long bound) const { return infinite_ || value_ >= bound; }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
  bool infinite_;
  long value_;
};

inline Valuation valuation(const Rational& x, const BigInt& p) {
  if (!is_prime(p)) throw InvalidArgument(p.get_str() + " is not prime");
  if (x.is_zero()) return Valuation::infinite();
  BigInt num = abs(x.numerator()), den = x.denominator();
  return Valuation::finite(remove_factor(num, p) - remove_factor(den, p));
}

}  // namespace campana
