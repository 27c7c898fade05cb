#pragma once

// Comparisons between library search output and the oracle sweeps.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "campana/search.hpp"
#include "support.hpp"

namespace test {

inline campana::SearchConfig config(const std::vector<long>& s, long bound) {
  campana::SearchConfig cfg;
  cfg.s = campana::SIntegerContext::of(s);
  cfg.exponent_bound = bound;
  return cfg;
}

/// Canonical text of a record: enough to compare with the oracle.
inline std::string describe(const campana::PointRecord& r) {
  std::ostringstream o;
  o << r.x.str() << (r.accepted ? " accept" : " reject");
  if (r.witness) o << " w=" << r.witness->get_str();
  if (r.lift) o << " (" << r.lift->a.str() << "," << r.lift->b.str() << ")";
  if (r.in_support) o << " support";
  return o.str();
}

inline std::string describe(const oracle::UnitResult& r) {
  std::ostringstream o;
  o << oracle::str(r.x) << (r.accepted ? " accept" : " reject");
  if (r.witness) o << " w=" << r.witness->str();
  if (r.lift) o << " (" << oracle::str(r.lift->first) << "," << oracle::str(r.lift->second) << ")";
  if (r.in_support) o << " support";
  return o.str();
}

inline std::vector<std::string> sorted_descriptions(const std::vector<campana::PointRecord>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(describe(r));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> sorted_descriptions(const std::vector<oracle::UnitResult>& rs,
                                                    long bound) {
  std::vector<std::string> out;
  for (const auto& r : rs) {
    if (std::any_of(r.exponents.begin(), r.exponents.end(), [&](long e) { return std::abs(e) > bound; }))
      continue;
    out.push_back(describe(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace test
