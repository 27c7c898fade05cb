#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "campana/errors.hpp"

namespace campana {

/// Subsemigroup of Z>=1 generated by finitely many positive integers.
/// An empty generator list is the empty semigroup, standing for
/// multiplicity infinity.
///
/// Membership is answered from a table built at construction: with
/// g = gcd(generators), n is a member iff g | n and n / g lies in the
/// cofinite semigroup generated by generators / g, whose members are
/// tabulated up to its conductor.
class NumericalSemigroup {
 public:
  NumericalSemigroup() = default;

  explicit NumericalSemigroup(std::vector<long> generators) : generators_(std::move(generators)) {
    for (long g : generators_)
      if (g < 1) throw InvalidArgument("semigroup generators must be positive");
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    if (generators_.empty()) return;
    gcd_ = 0;
    for (long g : generators_) gcd_ = std::gcd(gcd_, g);
    build_table();
  }

  /// Z>=m, presented by its atoms m, ..., 2m-1.
  static NumericalSemigroup from_lower_bound(long m) {
    if (m < 1) throw InvalidArgument("lower bound must be at least 1");
    std::vector<long> gens;
    for (long k = m; k <= 2 * m - 1; ++k) gens.push_back(k);
    return NumericalSemigroup(std::move(gens));
  }

  const std::vector<long>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }
  /// gcd of the generators; 0 for the empty semigroup.
  long gcd() const { return gcd_; }
  /// Smallest element, or nothing for the empty semigroup.
  std::optional<long> min_element() const {
    if (empty()) return std::nullopt;
    return generators_.front();
  }

  bool contains(long n) const {
    if (n < 1) throw InvalidArgument("membership is only defined for n >= 1");
    if (empty() || n % gcd_ != 0) return false;
    const long reduced = n / gcd_;
    if (reduced > reduced_frobenius_) return true;
    return table_[static_cast<std::size_t>(reduced)];
  }

  /// Complement in Z>=1 is finite, i.e. the generators are coprime.
  bool is_cofinite() const { return !empty() && gcd_ == 1; }

  /// Largest positive integer outside the semigroup, -1 when it is all of Z>=1.
  long frobenius() const {
    if (!is_cofinite()) throw InvalidArgument("Frobenius number needs coprime generators");
    return reduced_frobenius_ >= 1 ? reduced_frobenius_ : -1;
  }

  std::vector<long> elements_up_to(long bound) const {
    if (bound < 1) throw InvalidArgument("bound must be at least 1");
    std::vector<long> out;
    if (empty()) return out;
    for (long n = gcd_; n <= bound; n += gcd_)
      if (contains(n)) out.push_back(n);
    return out;
  }

  /// Minimal generating set. Elements are sieved up to twice the largest
  /// generator; an atom is an element that is not a sum of two elements.
  std::vector<long> atoms() const {
    std::vector<long> out;
    if (empty()) return out;
    const long limit = 2 * generators_.back();
    std::vector<char> member(static_cast<std::size_t>(limit) + 1, 0);
    for (long n = 1; n <= limit; ++n) member[static_cast<std::size_t>(n)] = contains(n);
    for (long n = 1; n <= limit; ++n) {
      if (!member[static_cast<std::size_t>(n)]) continue;
      bool decomposable = false;
      for (long s = 1; 2 * s <= n && !decomposable; ++s)
        decomposable = member[static_cast<std::size_t>(s)] && member[static_cast<std::size_t>(n - s)];
      if (!decomposable) out.push_back(n);
    }
    return out;
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  void build_table() {
    std::vector<long> reduced;
    for (long g : generators_) reduced.push_back(g / gcd_);
    const long run_needed = reduced.front();
    table_.assign(1, 1);  // 0 is the empty sum, only used by the recurrence
    long run = 0;
    long last_gap = 0;
    for (long n = 1; run < run_needed; ++n) {
      bool in = false;
      for (long g : reduced) {
        if (g > n) break;
        if (table_[static_cast<std::size_t>(n - g)]) {
          in = true;
          break;
        }
      }
      table_.push_back(in);
      if (in) {
        ++run;
      } else {
        run = 0;
        last_gap = n;
      }
    }
    reduced_frobenius_ = last_gap;
  }

  std::vector<long> generators_;
  long gcd_ = 0;
  long reduced_frobenius_ = 0;
  std::vector<char> table_;
};

/// Ordered union M_1 u ... u M_r of numerical semigroups. The blocks are
/// part of the value: equal element sets with different blocks differ as
/// decompositions. Zero blocks (or a lone empty block) is the empty set.
class SemigroupUnion {
 public:
  SemigroupUnion() = default;
  explicit SemigroupUnion(std::vector<NumericalSemigroup> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.size() > 1) {
      for (const auto& b : blocks_)
        if (b.empty())
          throw InvalidArgument("the empty semigroup cannot be a block of a union with other blocks");
    }
  }
  SemigroupUnion(std::initializer_list<NumericalSemigroup> blocks)
      : SemigroupUnion(std::vector<NumericalSemigroup>(blocks)) {}

  const std::vector<NumericalSemigroup>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  bool is_empty_set() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.empty(); });
  }

  bool contains(long n) const {
    return std::any_of(blocks_.begin(), blocks_.end(), [n](const auto& b) { return b.contains(n); });
  }

  /// Index of the first block containing n.
  std::optional<std::size_t> block_of(long n) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i].contains(n)) return i;
    return std::nullopt;
  }

  std::optional<long> min_element() const {
    std::optional<long> best;
    for (const auto& b : blocks_) {
      auto m = b.min_element();
      if (m && (!best || *m < *best)) best = m;
    }
    return best;
  }

  /// The semigroup generated by the union has finite complement.
  bool is_cofinite() const {
    long g = 0;
    for (const auto& b : blocks_) g = std::gcd(g, b.gcd());
    return g == 1;
  }

  std::vector<long> elements_up_to(long bound) const {
    if (bound < 1) throw InvalidArgument("bound must be at least 1");
    std::vector<long> out;
    for (long n = 1; n <= bound; ++n)
      if (contains(n)) out.push_back(n);
    return out;
  }

  friend bool operator==(const SemigroupUnion&, const SemigroupUnion&) = default;

 private:
  std::vector<NumericalSemigroup> blocks_;
};

}  // namespace campana
