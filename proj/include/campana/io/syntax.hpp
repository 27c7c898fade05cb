#pragma once

// Mini-grammar shared by command-line arguments and configuration files.
//
//   semigroup  := "<" int ".."            Z>=m
//               | "<" int ("," int)* ">"  generated by the listed integers
//               | "{}"                    empty semigroup
//   union      := semigroup ("|" semigroup)*
//   condition  := ">=" int | "div" int | "inf" | "union" union
//   cpair      := entry ((";" | newline) entry)*,  entry := label ":" condition

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "campana/cpairs.hpp"
#include "campana/errors.hpp"

namespace campana::io {

namespace detail {

class Cursor {
 public:
  Cursor(std::string_view text, int column_offset = 0, int line = 1)
      : text_(text), offset_(column_offset), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }
  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stol(digits);
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + std::string(text_) + "'", line_,
                     offset_ + static_cast<int>(pos_) + 1);
  }

 private:
  std::string_view text_;
  int offset_;
  int line_;
  std::size_t pos_ = 0;
};

inline NumericalSemigroup semigroup(Cursor& c) {
  if (c.accept("{}")) return NumericalSemigroup();
  c.expect("<");
  const long first = c.integer();
  if (c.accept("..")) {
    if (first < 1) c.fail("lower bound must be at least 1");
    return NumericalSemigroup::from_lower_bound(first);
  }
  std::vector<long> gens{first};
  while (c.accept(",")) gens.push_back(c.integer());
  c.expect(">");
  for (long g : gens)
    if (g < 1) c.fail("generators must be positive");
  return NumericalSemigroup(std::move(gens));
}

inline SemigroupUnion semigroup_union(Cursor& c) {
  std::vector<NumericalSemigroup> blocks{semigroup(c)};
  while (c.accept("|")) blocks.push_back(semigroup(c));
  try {
    return SemigroupUnion(std::move(blocks));
  } catch (const InvalidArgument& e) {
    c.fail(e.what());
  }
}

inline MultCondition condition(Cursor& c) {
  if (c.accept(">=")) {
    const long m = c.integer();
    if (m < 1) c.fail("multiplicity bound must be at least 1");
    return AtLeast{m};
  }
  if (c.accept("div")) {
    const long m = c.integer();
    if (m < 1) c.fail("divisibility modulus must be at least 1");
    return DivisibleBy{m};
  }
  if (c.accept("inf")) return Log{};
  if (c.accept("union")) return semigroup_union(c);
  c.fail("expected '>=m', 'div m', 'inf' or 'union ...'");
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

inline NumericalSemigroup parse_semigroup(std::string_view text) {
  detail::Cursor c(text);
  auto s = detail::semigroup(c);
  if (!c.done()) c.fail("unexpected trailing input (use a union for '|')");
  return s;
}

inline SemigroupUnion parse_union(std::string_view text) {
  detail::Cursor c(text);
  auto u = detail::semigroup_union(c);
  if (!c.done()) c.fail("unexpected trailing input");
  return u;
}

inline MultCondition parse_condition(std::string_view text) {
  detail::Cursor c(text);
  auto m = detail::condition(c);
  if (!c.done()) c.fail("unexpected trailing input");
  return m;
}

inline CPairSpec parse_cpair(std::string_view text) {
  CPairSpec spec;
  int line = 1;
  std::size_t start = 0, line_start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";\n", start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view entry = text.substr(start, end - start);
    const std::string trimmed = detail::trim(entry);
    if (!trimmed.empty() && trimmed[0] != '#') {
      const auto colon = entry.find(':');
      if (colon == std::string_view::npos)
        throw ParseError("divisor entry '" + trimmed + "' lacks ':'", line,
                         static_cast<int>(start - line_start) + 1);
      std::string label = detail::trim(entry.substr(0, colon));
      const int column = static_cast<int>(start - line_start);
      if (label.empty()) throw ParseError("empty divisor label", line, column + 1);
      detail::Cursor c(entry.substr(colon + 1), column + static_cast<int>(colon + 1), line);
      MultCondition cond = detail::condition(c);
      if (!c.done()) c.fail("unexpected trailing input");
      if (spec.find(label))
        throw ParseError("duplicate divisor label '" + label + "'", line, column + 1);
      spec.add(std::move(label), std::move(cond));
    }
    if (end < text.size() && text[end] == '\n') {
      ++line;
      line_start = end + 1;
    }
    start = end + 1;
  }
  return spec;
}

inline std::string format_semigroup(const NumericalSemigroup& s) {
  if (s.empty()) return "{}";
  std::string out = "<";
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.generators()[i]);
  }
  return out + ">";
}

inline std::string format_union(const SemigroupUnion& u) {
  if (u.size() == 0) return "{}";
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out += "|";
    out += format_semigroup(u.blocks()[i]);
  }
  return out;
}

inline std::string format_condition(const MultCondition& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AtLeast>) return ">=" + std::to_string(v.m);
        else if constexpr (std::is_same_v<T, DivisibleBy>) return "div " + std::to_string(v.m);
        else if constexpr (std::is_same_v<T, SemigroupUnion>) return "union " + format_union(v);
        else return "inf";
      },
      c.value());
}

inline std::string format_cpair(const CPairSpec& spec) {
  std::string out;
  for (const auto& d : spec.divisors()) {
    if (!out.empty()) out += "; ";
    out += d.label + ": " + format_condition(d.condition);
  }
  return out;
}

}  // namespace campana::io
