#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "campana/arith/rational.hpp"
#include "campana/semigroups.hpp"

namespace campana {

struct AtLeast {
  long m;
  friend bool operator==(const AtLeast&, const AtLeast&) = default;
};
struct DivisibleBy {
  long m;
  friend bool operator==(const DivisibleBy&, const DivisibleBy&) = default;
};
/// Multiplicity infinity: the divisor is part of the boundary.
struct Log {
  friend bool operator==(const Log&, const Log&) = default;
};

/// Allowed multiplicities along one divisor.
class MultCondition {
 public:
  using Variant = std::variant<AtLeast, DivisibleBy, SemigroupUnion, Log>;

  MultCondition(AtLeast c) : value_(c) { check_positive(c.m); }          // NOLINT
  MultCondition(DivisibleBy c) : value_(c) { check_positive(c.m); }      // NOLINT
  MultCondition(SemigroupUnion u) : value_(std::move(u)) {}              // NOLINT
  MultCondition(Log l) : value_(l) {}                                    // NOLINT

  const Variant& value() const { return value_; }
  bool is_log() const { return std::holds_alternative<Log>(value_); }
  template <typename T>
  bool holds() const { return std::holds_alternative<T>(value_); }

  bool admits(long multiplicity) const {
    return std::visit(
        [multiplicity](const auto& c) -> bool {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, AtLeast>) return multiplicity >= c.m;
          else if constexpr (std::is_same_v<T, DivisibleBy>) return multiplicity % c.m == 0;
          else if constexpr (std::is_same_v<T, SemigroupUnion>) return c.contains(multiplicity);
          else return false;
        },
        value_);
  }

  /// The element set as a union of semigroups: Z>=m, m Z>=1, the union
  /// itself, or no blocks at all for Log.
  SemigroupUnion as_union() const {
    return std::visit(
        [](const auto& c) -> SemigroupUnion {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, AtLeast>) return {NumericalSemigroup::from_lower_bound(c.m)};
          else if constexpr (std::is_same_v<T, DivisibleBy>) return {NumericalSemigroup({c.m})};
          else if constexpr (std::is_same_v<T, SemigroupUnion>) return c;
          else return SemigroupUnion{};
        },
        value_);
  }

  /// inf of the element set; nothing means infinity.
  std::optional<long> infimum() const {
    return std::visit(
        [](const auto& c) -> std::optional<long> {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, AtLeast> || std::is_same_v<T, DivisibleBy>) return c.m;
          else if constexpr (std::is_same_v<T, SemigroupUnion>) return c.min_element();
          else return std::nullopt;
        },
        value_);
  }

  /// Coefficient 1 - 1/inf in the associated Q-divisor.
  Rational coefficient() const {
    const auto inf = infimum();
    if (!inf) return Rational(1);
    return Rational(1) - Rational(BigInt(1), BigInt(*inf));
  }

  friend bool operator==(const MultCondition&, const MultCondition&) = default;

 private:
  static void check_positive(long m) {
    if (m < 1) throw InvalidArgument("multiplicity bound must be at least 1");
  }
  Variant value_;
};

struct LabelledDivisor {
  std::string label;
  MultCondition condition;
  friend bool operator==(const LabelledDivisor&, const LabelledDivisor&) = default;
};

/// A (generalized) C-pair: labelled divisors with multiplicity conditions.
class CPairSpec {
 public:
  CPairSpec() = default;
  explicit CPairSpec(std::vector<LabelledDivisor> divisors) {
    for (auto& d : divisors) add(std::move(d.label), std::move(d.condition));
  }

  void add(std::string label, MultCondition condition) {
    if (find(label)) throw InvalidArgument("duplicate divisor label '" + label + "'");
    divisors_.push_back({std::move(label), std::move(condition)});
  }

  const std::vector<LabelledDivisor>& divisors() const { return divisors_; }

  const MultCondition* find(const std::string& label) const {
    for (const auto& d : divisors_)
      if (d.label == label) return &d.condition;
    return nullptr;
  }

  /// Labels of the boundary (multiplicity infinity).
  std::vector<std::string> floor_labels() const {
    std::vector<std::string> out;
    for (const auto& d : divisors_)
      if (d.condition.is_log()) out.push_back(d.label);
    return out;
  }

  friend bool operator==(const CPairSpec&, const CPairSpec&) = default;

 private:
  std::vector<LabelledDivisor> divisors_;
};

/// How a point meets one divisor: either it lies inside it, or it meets
/// it with the listed multiplicity at each listed prime (others: 0).
struct DivisorIncidence {
  bool contained = false;
  std::map<BigInt, long> mults;
  friend bool operator==(const DivisorIncidence&, const DivisorIncidence&) = default;
};

struct ValuationVector {
  std::map<std::string, DivisorIncidence> entries;
  friend bool operator==(const ValuationVector&, const ValuationVector&) = default;
};

struct DivisorVerdict {
  std::string label;
  bool passed = true;
  bool in_support = false;
  std::optional<BigInt> witness_prime;
  std::optional<long> witness_multiplicity;
  friend bool operator==(const DivisorVerdict&, const DivisorVerdict&) = default;
};

struct Verdict {
  bool accepted = true;
  std::vector<DivisorVerdict> divisors;

  bool in_support() const {
    for (const auto& d : divisors)
      if (d.in_support) return true;
    return false;
  }
  /// First failing divisor, if any.
  const DivisorVerdict* failure() const {
    for (const auto& d : divisors)
      if (!d.passed) return &d;
    return nullptr;
  }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

namespace detail {

inline void validate_vector(const CPairSpec& spec, const ValuationVector& v) {
  for (const auto& [label, inc] : v.entries) {
    if (!spec.find(label)) throw InvalidArgument("valuation vector names unknown divisor '" + label + "'");
    for (const auto& [p, k] : inc.mults)
      if (k < 1) throw InvalidArgument("multiplicities must be positive (divisor '" + label + "')");
  }
}

template <typename... Allowed>
void require_kinds(const CPairSpec& spec, const char* what) {
  for (const auto& d : spec.divisors()) {
    if (!(d.condition.template holds<Allowed>() || ...))
      throw InvalidArgument(std::string(what) + ": divisor '" + d.label + "' has an unsupported condition");
  }
}

}  // namespace detail

/// Point condition for any mix of conditions. A point inside a
/// finite-multiplicity divisor passes with the in_support flag; a point
/// inside or meeting a Log divisor fails.
inline Verdict check_point(const CPairSpec& spec, const ValuationVector& v) {
  detail::validate_vector(spec, v);
  static const DivisorIncidence kMissing{};
  Verdict out;
  for (const auto& d : spec.divisors()) {
    auto it = v.entries.find(d.label);
    const DivisorIncidence& inc = it == v.entries.end() ? kMissing : it->second;
    DivisorVerdict dv;
    dv.label = d.label;
    if (inc.contained) {
      if (d.condition.is_log()) dv.passed = false;
      else dv.in_support = true;
    } else {
      for (const auto& [p, k] : inc.mults) {
        if (!d.condition.admits(k)) {
          dv.passed = false;
          dv.witness_prime = p;
          dv.witness_multiplicity = k;
          break;
        }
      }
    }
    out.accepted = out.accepted && dv.passed;
    out.divisors.push_back(std::move(dv));
  }
  return out;
}

inline Verdict check_campana_point(const CPairSpec& spec, const ValuationVector& v) {
  detail::require_kinds<AtLeast, Log>(spec, "Campana check");
  return check_point(spec, v);
}

inline Verdict check_darmon_point(const CPairSpec& spec, const ValuationVector& v) {
  detail::require_kinds<DivisibleBy, Log>(spec, "Darmon check");
  return check_point(spec, v);
}

/// Over a Dedekind source distinct primes have disjoint support, so only
/// membership in the union's element set matters, not the blocks.
inline Verdict check_generalized_point_dedekind(const CPairSpec& spec, const ValuationVector& v) {
  detail::require_kinds<SemigroupUnion, Log>(spec, "generalized check");
  return check_point(spec, v);
}

inline std::vector<std::pair<std::string, Rational>> cpair_divisor(const CPairSpec& spec) {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& d : spec.divisors()) out.emplace_back(d.label, d.condition.coefficient());
  return out;
}

/// Components of the pullback of one divisor to a higher-dimensional
/// source, with multiplicities and which components meet.
class DivisorConfiguration {
 public:
  struct Component {
    std::string id;
    long multiplicity;
    friend bool operator==(const Component&, const Component&) = default;
  };

  DivisorConfiguration() = default;
  DivisorConfiguration(std::vector<Component> components,
                       std::vector<std::pair<std::string, std::string>> edges)
      : components_(std::move(components)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (components_[i].multiplicity < 1)
        throw InvalidArgument("component '" + components_[i].id + "' needs multiplicity >= 1");
      for (std::size_t j = 0; j < i; ++j)
        if (components_[j].id == components_[i].id)
          throw InvalidArgument("duplicate component id '" + components_[i].id + "'");
    }
    for (const auto& [a, b] : edges_) {
      if (!index_of(a) || !index_of(b)) throw InvalidArgument("edge references unknown component");
      if (a == b) throw InvalidArgument("self-loop on component '" + a + "'");
    }
  }

  const std::vector<Component>& components() const { return components_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }

  std::optional<std::size_t> index_of(const std::string& id) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
      if (components_[i].id == id) return i;
    return std::nullopt;
  }

  /// Connected components of the intersection graph as index lists,
  /// ordered by first appearance.
  std::vector<std::vector<std::size_t>> connected_components() const {
    std::vector<std::size_t> parent(components_.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (const auto& [a, b] : edges_) {
      const std::size_t ra = root(*index_of(a)), rb = root(*index_of(b));
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::optional<std::size_t>> slot(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const std::size_t r = root(i);
      if (!slot[r]) {
        slot[r] = groups.size();
        groups.emplace_back();
      }
      groups[*slot[r]].push_back(i);
    }
    return groups;
  }

  friend bool operator==(const DivisorConfiguration&, const DivisorConfiguration&) = default;

 private:
  std::vector<Component> components_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

struct ConfigurationVerdict {
  struct Group {
    std::vector<std::string> components;
    std::vector<long> multiplicities;
    std::optional<std::size_t> block;  // 0-based; empty when no block fits
    friend bool operator==(const Group&, const Group&) = default;
  };
  bool accepted = true;
  std::vector<Group> groups;
  std::optional<std::size_t> failing_group;
  friend bool operator==(const ConfigurationVerdict&, const ConfigurationVerdict&) = default;
};

/// Components that meet must draw their multiplicities from one block,
/// since different blocks need disjoint support. Each connected component
/// of the intersection graph is assigned the first block holding all of
/// its multiplicities.
inline ConfigurationVerdict check_generalized_configuration(const SemigroupUnion& u,
                                                            const DivisorConfiguration& cfg) {
  ConfigurationVerdict out;
  for (const auto& idx : cfg.connected_components()) {
    ConfigurationVerdict::Group g;
    for (std::size_t i : idx) {
      g.components.push_back(cfg.components()[i].id);
      g.multiplicities.push_back(cfg.components()[i].multiplicity);
    }
    for (std::size_t b = 0; b < u.size() && !g.block; ++b) {
      const auto& block = u.blocks()[b];
      if (std::all_of(g.multiplicities.begin(), g.multiplicities.end(),
                      [&](long k) { return block.contains(k); }))
        g.block = b;
    }
    if (!g.block && out.accepted) {
      out.accepted = false;
      out.failing_group = out.groups.size();
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

}  // namespace campana
