#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "campana/errors.hpp"

namespace campana {

using BigInt = mpz_class;

inline bool fits_int64(const BigInt& v) {
  return mpz_cmp_si(v.get_mpz_t(), INT64_MIN) >= 0 &&
         mpz_cmp_si(v.get_mpz_t(), INT64_MAX) <= 0;
}

inline bool fits_uint64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) throw InvalidArgument("integer does not fit in 64 bits: " + v.get_str());
  // mpz_get_si is exact for values in range on LP64
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

inline std::uint64_t to_uint64(const BigInt& v) {
  if (!fits_uint64(v)) throw InvalidArgument("integer does not fit in 64 unsigned bits: " + v.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline BigInt from_uint64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

inline BigInt from_int64(std::int64_t v) {
  if (v >= 0) return from_uint64(static_cast<std::uint64_t>(v));
  // avoid UB on INT64_MIN
  return -from_uint64(static_cast<std::uint64_t>(-(v + 1)) + 1u);
}

/// Strict decimal parse: optional sign then digits, nothing else.
inline BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

inline BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

/// Removes every factor p from n in place and returns the multiplicity.
inline long remove_factor(BigInt& n, const BigInt& p) {
  if (sgn(n) == 0) return 0;
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace campana
