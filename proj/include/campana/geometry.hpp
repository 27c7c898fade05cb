#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "campana/cpairs.hpp"
#include "campana/lattice.hpp"

namespace campana {

/// Integer multiplicity >= 1 or infinity.
class Multiplicity {
 public:
  static Multiplicity infinite() { return Multiplicity(); }
  static Multiplicity finite(long v) { return Multiplicity(v); }

  bool is_infinite() const { return !value_; }
  long value() const {
    if (!value_) throw InvalidArgument("multiplicity is infinite");
    return *value_;
  }
  /// In Z>=2 or infinite.
  bool at_least_two() const { return !value_ || *value_ >= 2; }
  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  Multiplicity() = default;
  explicit Multiplicity(long v) : value_(v) {}
  std::optional<long> value_;
};

/// Fibre over a codimension-one point: multiplicities of the components
/// dominating it, plus whether a non-dominating (exceptional) part exists.
/// The exceptional part never enters the multiplicities.
struct FibreDecomposition {
  std::vector<long> multiplicities;
  bool exceptional = false;

  bool empty() const { return multiplicities.empty() && !exceptional; }
  friend bool operator==(const FibreDecomposition&, const FibreDecomposition&) = default;
};

struct FibreMultiplicities {
  Multiplicity inf;  // m_s
  Multiplicity gcd;  // m_s^+
  friend bool operator==(const FibreMultiplicities&, const FibreMultiplicities&) = default;
};

struct FibreClass {
  bool inf_multiple = false;
  bool divisible = false;
  friend bool operator==(const FibreClass&, const FibreClass&) = default;
};

inline FibreMultiplicities multiplicities(const FibreDecomposition& f) {
  if (f.multiplicities.empty()) return {Multiplicity::infinite(), Multiplicity::infinite()};
  long lo = f.multiplicities.front(), g = 0;
  for (long a : f.multiplicities) {
    if (a < 1) throw InvalidArgument("fibre multiplicities must be positive");
    lo = std::min(lo, a);
    g = std::gcd(g, a);
  }
  return {Multiplicity::finite(lo), Multiplicity::finite(g)};
}

inline FibreClass classify_fibre(const FibreDecomposition& f) {
  const auto m = multiplicities(f);
  return {m.inf.at_least_two(), m.gcd.at_least_two()};
}

struct OrbifoldBaseEntry {
  std::string divisor;
  Multiplicity m_s;
  Multiplicity m_s_plus;
  Rational coefficient;
  bool inf_multiple;
  bool divisible;
  friend bool operator==(const OrbifoldBaseEntry&, const OrbifoldBaseEntry&) = default;
};

struct OrbifoldBaseReport {
  std::vector<OrbifoldBaseEntry> entries;
  friend bool operator==(const OrbifoldBaseReport&, const OrbifoldBaseReport&) = default;
};

/// Orbifold divisor sum (1 - 1/m_s) D_s over the listed base divisors, in
/// input order.
inline OrbifoldBaseReport orbifold_base(
    const std::vector<std::pair<std::string, FibreDecomposition>>& fibres) {
  OrbifoldBaseReport out;
  for (const auto& [label, fibre] : fibres) {
    for (const auto& e : out.entries)
      if (e.divisor == label) throw InvalidArgument("divisor '" + label + "' listed twice");
    const auto m = multiplicities(fibre);
    const auto c = classify_fibre(fibre);
    Rational coeff = m.inf.is_infinite() ? Rational(1)
                                         : Rational(1) - Rational(BigInt(1), BigInt(m.inf.value()));
    out.entries.push_back({label, m.inf, m.gcd, coeff, c.inf_multiple, c.divisible});
  }
  return out;
}

/// Outcome of the three-condition test for weak specialness of a total
/// space. Conditions 1 and 2 (base weakly special, general fibres weakly
/// special with dense image) are declared by the caller; condition 3 (no
/// divisible fibre in codimension one) is computed.
struct ChecklistVerdict {
  bool certified = false;
  std::optional<int> failing_condition;
  std::optional<std::size_t> witness_fibre;
  friend bool operator==(const ChecklistVerdict&, const ChecklistVerdict&) = default;
};

inline ChecklistVerdict weakly_special_checklist(bool base_weakly_special, bool fibres_weakly_special,
                                                 std::span<const FibreDecomposition> fibres) {
  if (!base_weakly_special) return {false, 1, std::nullopt};
  if (!fibres_weakly_special) return {false, 2, std::nullopt};
  for (std::size_t i = 0; i < fibres.size(); ++i)
    if (classify_fibre(fibres[i]).divisible) return {false, 3, i};
  return {true, std::nullopt, std::nullopt};
}

struct XaClassification {
  bool weakly_special = true;
  bool special = false;
  friend bool operator==(const XaClassification&, const XaClassification&) = default;
};

/// Complements of x_1^a_1 ... x_n^a_n = 1 (minus codimension >= 2) with
/// coprime exponents: always weakly special, special exactly when the
/// smallest exponent is 1.
inline XaClassification classify_xa_family(std::span<const long> a) {
  if (a.empty()) throw InvalidArgument("exponent tuple must be nonempty");
  long g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) throw InvalidArgument("exponents must be positive");
    if (i > 0 && a[i] < a[i - 1]) throw InvalidArgument("exponents must be sorted ascending");
    g = std::gcd(g, a[i]);
  }
  if (g != 1) throw InvalidArgument("exponents must have gcd 1, got gcd " + std::to_string(g));
  return {true, a.front() == 1};
}

enum class KodairaStarredType { II, III, IV };

inline std::string to_string(KodairaStarredType t) {
  switch (t) {
    case KodairaStarredType::II: return "II*";
    case KodairaStarredType::III: return "III*";
    case KodairaStarredType::IV: return "IV*";
  }
  return "?";
}

/// Accepts "II*", "III*", "IV*". Every other Kodaira symbol is refused:
/// among elliptic fibres only the multiple fibres mI_n are inf-multiple,
/// and those are already divisible.
inline KodairaStarredType parse_kodaira_type(std::string_view s) {
  if (s == "II*") return KodairaStarredType::II;
  if (s == "III*") return KodairaStarredType::III;
  if (s == "IV*") return KodairaStarredType::IV;
  throw InvalidArgument("Kodaira type '" + std::string(s) +
                        "' unsupported: removing reduced components is defined for II*, III*, IV*; "
                        "the only inf-multiple elliptic fibres are of type mI_n");
}

/// Component multiplicities of the starred fibres, i.e. the coefficients
/// of the highest root of the affine E8, E7, E6 diagrams. These come from
/// the standard Kodaira-Neron tables.
inline std::vector<long> kodaira_multiplicities(KodairaStarredType t) {
  switch (t) {
    case KodairaStarredType::II: return {1, 2, 3, 4, 5, 6, 4, 3, 2};
    case KodairaStarredType::III: return {1, 2, 3, 4, 3, 2, 1, 2};
    case KodairaStarredType::IV: return {1, 1, 1, 2, 2, 2, 3};
  }
  return {};
}

struct KodairaReduction {
  KodairaStarredType type;
  FibreDecomposition fibre;
  FibreMultiplicities mults;
  FibreClass classification;
};

/// Drops the reduced (multiplicity one) components of a starred fibre.
inline KodairaReduction kodaira_reduced_removal(KodairaStarredType t) {
  FibreDecomposition f;
  for (long a : kodaira_multiplicities(t))
    if (a != 1) f.multiplicities.push_back(a);
  return {t, f, multiplicities(f), classify_fibre(f)};
}

/// Weight and lattice data of the Campana space attached to a tuple a:
/// kernel K_a of v -> sum a_i v_i, a splitting sigma when gcd(a) = 1, and
/// the coordinate-pair strata removed between different blocks.
struct CampanaWeightData {
  std::vector<long> a;
  IntMatrix<BigInt> kernel_basis;
  std::optional<std::vector<BigInt>> splitting;
  std::vector<std::vector<std::size_t>> blocks;         // 0-based index sets
  std::vector<std::pair<std::size_t, std::size_t>> strata;  // 0-based, i < j
  long inf = 0;
  long gcd = 0;
  friend bool operator==(const CampanaWeightData&, const CampanaWeightData&) = default;
};

/// `blocks` partitions the indices 0..r-1; omitted means one block.
inline CampanaWeightData campana_weights(std::span<const long> a,
                                         std::optional<std::vector<std::vector<std::size_t>>> blocks = {}) {
  if (a.empty()) throw InvalidArgument("weight tuple must be nonempty");
  CampanaWeightData out;
  out.a.assign(a.begin(), a.end());
  for (long v : a)
    if (v < 1) throw InvalidArgument("weights must be positive");
  out.inf = *std::min_element(a.begin(), a.end());
  for (long v : a) out.gcd = std::gcd(out.gcd, v);

  std::vector<BigInt> big;
  for (long v : a) big.emplace_back(v);
  out.kernel_basis = weight_kernel_basis<BigInt>(big);
  if (out.gcd == 1) out.splitting = weight_splitting<BigInt>(big);

  if (!blocks) {
    std::vector<std::size_t> all(a.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    blocks = std::vector<std::vector<std::size_t>>{all};
  }
  std::vector<std::optional<std::size_t>> owner(a.size());
  for (std::size_t b = 0; b < blocks->size(); ++b) {
    for (std::size_t i : (*blocks)[b]) {
      if (i >= a.size()) throw InvalidArgument("block index out of range");
      if (owner[i]) throw InvalidArgument("blocks overlap at index " + std::to_string(i + 1));
      owner[i] = b;
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!owner[i]) throw InvalidArgument("blocks miss index " + std::to_string(i + 1));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (*owner[i] != *owner[j]) out.strata.emplace_back(i, j);
  out.blocks = std::move(*blocks);
  return out;
}

struct CampanaSpaceReport {
  std::vector<long> atoms;
  std::size_t torus_rank = 0;
  FibreDecomposition fibre;
  Rational coefficient;
  bool divisible = false;
  CampanaWeightData weights;
};

/// Numerical data of the Campana space over one divisor with condition
/// `cond`: coordinates are the atoms of each block, the generic fibre is a
/// torus of that rank, and the fibre over the divisor has the atoms as
/// multiplicities.
inline CampanaSpaceReport campana_space_report(const MultCondition& cond) {
  if (cond.is_log()) throw InvalidArgument("a Log divisor has no Campana space over it");
  const SemigroupUnion u = cond.as_union();
  CampanaSpaceReport out;
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& block : u.blocks()) {
    std::vector<std::size_t> idx;
    for (long atom : block.atoms()) {
      idx.push_back(out.atoms.size());
      out.atoms.push_back(atom);
    }
    blocks.push_back(std::move(idx));
  }
  out.torus_rank = out.atoms.size();
  out.fibre.multiplicities = out.atoms;
  const auto m = multiplicities(out.fibre);
  out.coefficient = Rational(1) - Rational(BigInt(1), BigInt(m.inf.value()));
  out.divisible = m.gcd.value() >= 2;
  out.weights = campana_weights(out.atoms, std::move(blocks));
  return out;
}

}  // namespace campana
