#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <vector>

#include "campana/arith/factor.hpp"

namespace campana {

/// The ring Z_S of S-integers: rationals whose denominators only involve
/// primes from a finite set S.
class SIntegerContext {
 public:
  SIntegerContext() = default;
  explicit SIntegerContext(std::set<BigInt> primes) : primes_(std::move(primes)) {
    for (const auto& p : primes_)
      if (!is_prime(p)) throw InvalidArgument("S contains non-prime " + p.get_str());
  }
  template <typename Range>
  static SIntegerContext of(const Range& primes) {
    std::set<BigInt> s;
    for (const auto& p : primes) s.insert(BigInt(p));
    return SIntegerContext(std::move(s));
  }
  static SIntegerContext of(std::initializer_list<long> primes) {
    return of(std::vector<long>(primes));
  }

  const std::set<BigInt>& primes() const { return primes_; }
  bool excludes(const BigInt& p) const { return primes_.count(p) != 0; }

  /// |n| with every prime of S divided out.
  BigInt strip(const BigInt& n) const {
    BigInt out = abs(n);
    if (sgn(out) == 0) return out;
    for (const auto& p : primes_) remove_factor(out, p);
    return out;
  }

  friend bool operator==(const SIntegerContext&, const SIntegerContext&) = default;

 private:
  std::set<BigInt> primes_;
};

inline BigInt smallest_prime_factor(const BigInt& n) {
  return factor(n).factors.begin()->first;
}

inline bool is_s_integer(const Rational& x, const SIntegerContext& ctx) {
  return ctx.strip(x.denominator()) == 1;
}

inline void require_s_integer(const Rational& x, const SIntegerContext& ctx) {
  const BigInt rest = ctx.strip(x.denominator());
  if (rest == 1) return;
  const BigInt p = smallest_prime_factor(rest);
  throw NotSIntegerError(x.str() + " is not an S-integer: negative valuation at " + p.get_str(),
                         p.get_str());
}

inline bool is_s_unit(const Rational& x, const SIntegerContext& ctx) {
  if (x.is_zero()) throw ZeroInputError("zero is never an S-unit");
  return ctx.strip(x.numerator()) == 1 && ctx.strip(x.denominator()) == 1;
}

/// Smallest prime p outside S with 0 < v_p(x) < m, or nothing when x is
/// m-full. Sign and primes of S are ignored.
inline std::optional<BigInt> m_full_witness(const Rational& x, long m, const SIntegerContext& ctx) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  require_s_integer(x, ctx);
  if (x.is_zero()) return std::nullopt;
  const BigInt rest = ctx.strip(x.numerator());
  if (rest == 1 || m == 1) return std::nullopt;
  for (const auto& [p, e] : factor(rest).factors)
    if (e < m) return p;
  return std::nullopt;
}

inline bool is_m_full(const Rational& x, long m, const SIntegerContext& ctx) {
  return !m_full_witness(x, m, ctx).has_value();
}

/// All m-full integers in [1, N], ascending. Every exponent >= m is a sum
/// of the exponents m, ..., 2m-1, so the m-full numbers are exactly the
/// products a_m^m * ... * a_{2m-1}^{2m-1}; those products are generated
/// directly and deduplicated.
inline std::vector<std::uint64_t> enumerate_m_full(std::uint64_t bound, long m) {
  if (bound < 1) throw InvalidArgument("bound must be at least 1");
  if (m < 1) throw InvalidArgument("m must be at least 1");
  std::vector<std::uint64_t> out;
  // returns base^k, or 0 when it exceeds limit
  auto bounded_pow = [](std::uint64_t base, long k, std::uint64_t limit) -> std::uint64_t {
    std::uint64_t acc = 1;
    for (long i = 0; i < k; ++i) {
      if (acc > limit / base) return 0;
      acc *= base;
    }
    return acc;
  };
  auto recurse = [&](auto&& self, long k, std::uint64_t acc) -> void {
    if (k == 2 * m) {
      out.push_back(acc);
      return;
    }
    const std::uint64_t room = bound / acc;
    for (std::uint64_t a = 1;; ++a) {
      const std::uint64_t term = bounded_pow(a, k, room);
      if (term == 0) break;
      self(self, k + 1, acc * term);
    }
  };
  recurse(recurse, m, 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct SquareCube {
  Rational a;
  Rational b;
  friend bool operator==(const SquareCube&, const SquareCube&) = default;
};

namespace detail {

// e = 2 alpha + 3 beta with beta = e mod 2 in {0, 1}.
inline void split_square_cube(const BigInt& p, long e, Rational& a, Rational& b) {
  const long beta = ((e % 2) + 2) % 2;
  const long alpha = (e - 3 * beta) / 2;
  a *= pow(Rational(p), alpha);
  b *= pow(Rational(p), beta);
}

}  // namespace detail

/// (a, b) with a^2 b^3 = x for a 2-full S-integer x. Exponents split with the
/// smallest cube part; the sign goes into b. Zero maps to (0, 1).
inline SquareCube decompose_square_cube(const Rational& x, const SIntegerContext& ctx) {
  if (auto w = m_full_witness(x, 2, ctx))
    throw NotMFullError(x.str() + " is not 2-full: valuation 1 at " + w->get_str(), w->get_str());
  if (x.is_zero()) return {Rational(0), Rational(1)};
  Rational a(1), b(x.sign());
  for (const auto& [p, e] : factor(x).factors) detail::split_square_cube(p, e, a, b);
  return {a, b};
}

/// (a, b) with a^2 b^3 = x and gcd(a, b) an S-unit. Needs every exponent
/// outside S to be divisible by 2 or 3; primes with exponent in 2Z go to a
/// (including multiples of 6), primes with exponent in 3Z only go to b.
inline SquareCube decompose_coprime_square_cube(const Rational& x, const SIntegerContext& ctx) {
  require_s_integer(x, ctx);
  if (x.is_zero()) return {Rational(0), Rational(1)};
  Rational a(1), b(x.sign());
  for (const auto& [p, e] : factor(x).factors) {
    if (e % 2 == 0) {
      a *= pow(Rational(p), e / 2);
    } else if (e % 3 == 0) {
      b *= pow(Rational(p), e / 3);
    } else if (ctx.excludes(p)) {
      detail::split_square_cube(p, e, a, b);  // S-units never obstruct coprimality
    } else {
      throw WitnessError("valuation " + std::to_string(e) + " of " + x.str() + " at " + p.get_str() +
                             " is divisible by neither 2 nor 3",
                         p.get_str());
    }
  }
  return {a, b};
}

/// gcd of two S-integers with the primes of S removed; an S-unit iff 1.
/// gcd(0, 0) is 0.
inline BigInt gcd_away_from_s(const Rational& a, const Rational& b, const SIntegerContext& ctx) {
  require_s_integer(a, ctx);
  require_s_integer(b, ctx);
  return ctx.strip(gcd_of(a.numerator(), b.numerator()));
}

}  // namespace campana
