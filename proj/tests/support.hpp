#pragma once

// Conversions between library values and oracle values.

#include <string>
#include <vector>

#include "campana/arith/rational.hpp"
#include "oracle/oracle.hpp"

namespace test {

inline oracle::Int to_oracle(const campana::BigInt& v) { return oracle::Int(v.get_str()); }
inline oracle::Rat to_oracle(const campana::Rational& r) {
  return oracle::Rat(to_oracle(r.numerator()), to_oracle(r.denominator()));
}
inline campana::BigInt from_oracle(const oracle::Int& v) { return campana::BigInt(v.str()); }
inline campana::Rational from_oracle(const oracle::Rat& r) {
  return campana::Rational(from_oracle(oracle::num(r)), from_oracle(oracle::den(r)));
}

inline std::vector<campana::BigInt> bigints(const std::vector<long>& v) {
  return {v.begin(), v.end()};
}

}  // namespace test
