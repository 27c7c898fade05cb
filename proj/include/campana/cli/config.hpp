#pragma once

// Run configuration file: one `key = value` per line, `#` starts a
// comment. Values are integers, booleans, bare words, or integer lists
// `[2, 3]`. Unknown and repeated keys are errors.
//
//   s_primes = [2, 3]
//   bound = 4
//   format = json

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "campana/arith/primality.hpp"
#include "campana/errors.hpp"

namespace campana::cli {

enum class OutputFormat { Json, Csv, Table };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "table") return OutputFormat::Table;
  throw ParseError("format must be json, csv or table, got '" + s + "'");
}

/// Every setting is optional so that file values and flags can be layered.
struct RunConfig {
  std::optional<std::vector<BigInt>> s_primes;
  std::optional<long> bound;
  std::optional<long> height;
  std::optional<long> m;
  std::optional<OutputFormat> format;
  std::optional<bool> strict;
  std::optional<unsigned> jobs;
  std::optional<bool> include_negative_units;
  std::optional<bool> include_support_points;

  /// Fields set in `over` replace ours.
  RunConfig overridden_by(const RunConfig& over) const {
    RunConfig out = *this;
    auto take = [](auto& dst, const auto& src) {
      if (src) dst = src;
    };
    take(out.s_primes, over.s_primes);
    take(out.bound, over.bound);
    take(out.height, over.height);
    take(out.m, over.m);
    take(out.format, over.format);
    take(out.strict, over.strict);
    take(out.jobs, over.jobs);
    take(out.include_negative_units, over.include_negative_units);
    take(out.include_support_points, over.include_support_points);
    return out;
  }

  std::vector<BigInt> s_primes_or_default() const { return s_primes.value_or(std::vector<BigInt>{}); }
  long bound_or_default() const { return bound.value_or(4); }
  long height_or_default() const { return height.value_or(10); }
  long m_or_default() const { return m.value_or(2); }
  OutputFormat format_or_default() const { return format.value_or(OutputFormat::Json); }
  bool strict_or_default() const { return strict.value_or(false); }
  unsigned jobs_or_default() const { return jobs.value_or(1u); }
  bool negative_units_or_default() const { return include_negative_units.value_or(true); }
  bool support_points_or_default() const { return include_support_points.value_or(true); }
};

/// "2,3,5" (or "" for the empty set) into a list of primes.
inline std::vector<BigInt> parse_prime_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      if (text.find_first_not_of(" \t,") == std::string::npos) continue;
      throw ParseError("empty entry in prime list '" + text + "'");
    }
    BigInt p = parse_bigint(item.substr(b, e - b + 1));
    if (!is_prime(p)) throw ParseError(p.get_str() + " is not prime");
    out.push_back(p);
  }
  return out;
}

namespace detail {

class LineParser {
 public:
  LineParser(const std::string& line, int number) : line_(line), number_(number) {}

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == line_.size() || line_[pos_] == '#';
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, number_, column()); }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() &&
           (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_' || line_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected a word");
    return line_.substr(start, pos_ - start);
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    const int col = (skip_space(), column());
    const std::string w = word();
    try {
      std::size_t used = 0;
      const long v = std::stol(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      return v;
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + w + "'", number_, col);
    }
  }
  bool boolean() {
    const int col = (skip_space(), column());
    const std::string w = word();
    if (w == "true") return true;
    if (w == "false") return false;
    throw ParseError("expected true or false, got '" + w + "'", number_, col);
  }
  std::string string_value() {
    skip_space();
    if (accept('"')) {
      const std::size_t end = line_.find('"', pos_);
      if (end == std::string::npos) fail("unterminated string");
      std::string out = line_.substr(pos_, end - pos_);
      pos_ = end + 1;
      return out;
    }
    return word();
  }

 private:
  const std::string& line_;
  int number_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::vector<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    detail::LineParser lp(line, number);
    if (lp.at_end()) continue;
    const int key_col = lp.column();
    const std::string key = lp.word();
    for (const auto& k : seen)
      if (k == key) throw ParseError("duplicate key '" + key + "'", number, key_col);
    seen.push_back(key);
    lp.expect('=');
    const int value_col = (lp.skip_space(), lp.column());
    auto check_min = [&](long v, long lo) {
      if (v < lo) throw ParseError(key + " must be at least " + std::to_string(lo), number, value_col);
      return v;
    };
    if (key == "s_primes") {
      std::vector<BigInt> primes;
      lp.expect('[');
      if (!lp.accept(']')) {
        do {
          const int col = (lp.skip_space(), lp.column());
          const long p = lp.integer();
          if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
            throw ParseError(std::to_string(p) + " is not prime", number, col);
          primes.emplace_back(p);
        } while (lp.accept(','));
        lp.expect(']');
      }
      cfg.s_primes = std::move(primes);
    } else if (key == "bound") {
      cfg.bound = check_min(lp.integer(), 0);
    } else if (key == "height") {
      cfg.height = check_min(lp.integer(), 1);
    } else if (key == "m") {
      cfg.m = check_min(lp.integer(), 1);
    } else if (key == "jobs") {
      cfg.jobs = static_cast<unsigned>(check_min(lp.integer(), 1));
    } else if (key == "format") {
      try {
        cfg.format = parse_format(lp.string_value());
      } catch (const ParseError& e) {
        throw ParseError(e.what(), number, value_col);
      }
    } else if (key == "strict") {
      cfg.strict = lp.boolean();
    } else if (key == "include_negative_units") {
      cfg.include_negative_units = lp.boolean();
    } else if (key == "include_support_points") {
      cfg.include_support_points = lp.boolean();
    } else {
      throw ParseError("unknown key '" + key + "'", number, key_col);
    }
    if (!lp.at_end()) lp.fail("unexpected trailing input");
  }
  return cfg;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read configuration file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace campana::cli
