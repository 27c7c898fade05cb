#pragma once

#include <algorithm>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "campana/arith/s_integers.hpp"
#include "campana/cpairs.hpp"

namespace campana {

struct SearchConfig {
  SIntegerContext s;
  long exponent_bound = 0;
  bool include_negative_units = true;
  bool include_support_points = true;
  unsigned jobs = 1;
};

/// X = A^2 minus {x^2 y^3 = 1}; Y = X minus the origin.
enum class Target { X, Y };

inline std::string to_string(Target t) { return t == Target::X ? "X" : "Y"; }

struct PointCheck {
  bool on_x = false;
  bool on_y = false;
  friend bool operator==(const PointCheck&, const PointCheck&) = default;
};

/// For S-integers a, b: on X iff a^2 b^3 - 1 is an S-unit; on Y iff
/// additionally (a, b) != (0, 0) and gcd(a, b) is an S-unit, so the point
/// avoids the origin modulo every prime outside S.
inline PointCheck verify_point_on_X(const Rational& a, const Rational& b, const SIntegerContext& ctx) {
  require_s_integer(a, ctx);
  require_s_integer(b, ctx);
  const Rational value = a * a * b * b * b - Rational(1);
  PointCheck out;
  out.on_x = !value.is_zero() && is_s_unit(value, ctx);
  out.on_y = out.on_x && !(a.is_zero() && b.is_zero()) && gcd_away_from_s(a, b, ctx) == 1;
  return out;
}

/// One S-unit x from a shifted-unit sweep. `u` = 1 - x is the value lifted
/// to the surface: accepted records carry (a, b) with a^2 b^3 = u, so that
/// a^2 b^3 - 1 = -x is an S-unit.
struct PointRecord {
  Rational x;
  Rational u;
  std::optional<PrimeFactorization> shifted;  // of x - 1; absent when x = 1
  bool accepted = false;
  std::optional<BigInt> witness;
  std::optional<SquareCube> lift;
  Target target = Target::X;
  bool in_support = false;
  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

namespace detail {

/// Runs f(i) for i in [0, count) over `jobs` threads in contiguous chunks
/// and concatenates the per-chunk outputs in chunk order.
template <typename R, typename F>
std::vector<R> parallel_collect(std::size_t count, unsigned jobs, F f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::vector<R>> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned w) {
    try {
      const std::size_t lo = count * w / jobs, hi = count * (w + 1) / jobs;
      for (std::size_t i = lo; i < hi; ++i)
        if (auto r = f(i)) parts[w].push_back(std::move(*r));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

inline bool record_order(const PointRecord& l, const PointRecord& r) {
  const int c = cmp(BigInt(abs(l.x.numerator())), BigInt(abs(r.x.numerator())));
  if (c != 0) return c < 0;
  const int d = cmp(l.x.denominator(), r.x.denominator());
  if (d != 0) return d < 0;
  return l.x.sign() < r.x.sign();
}

enum class ShiftCondition { TwoFull, TwoOrThree };

inline std::optional<BigInt> shift_witness(const PrimeFactorization& f, ShiftCondition cond,
                                           const SIntegerContext& ctx) {
  for (const auto& [p, e] : f.factors) {
    if (ctx.excludes(p)) continue;
    const bool ok = cond == ShiftCondition::TwoFull ? e >= 2 : (e % 2 == 0 || e % 3 == 0);
    if (!ok) return p;
  }
  return std::nullopt;
}

inline std::vector<PointRecord> shifted_unit_search(const SearchConfig& cfg, ShiftCondition cond) {
  if (cfg.exponent_bound < 0) throw InvalidArgument("exponent bound must be nonnegative");
  const std::vector<BigInt> primes(cfg.s.primes().begin(), cfg.s.primes().end());
  const std::size_t width = static_cast<std::size_t>(2 * cfg.exponent_bound + 1);
  std::size_t vectors = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) vectors *= width;
  const std::size_t signs = cfg.include_negative_units ? 2 : 1;
  const Target target = cond == ShiftCondition::TwoFull ? Target::X : Target::Y;

  auto visit = [&](std::size_t index) -> std::optional<PointRecord> {
    const int sign = index % signs == 0 ? 1 : -1;
    std::size_t rest = index / signs;
    Rational x(sign);
    for (const auto& p : primes) {
      const long e = static_cast<long>(rest % width) - cfg.exponent_bound;
      rest /= width;
      x *= pow(Rational(p), e);
    }
    PointRecord rec;
    rec.x = x;
    rec.u = Rational(1) - x;
    rec.target = target;
    const Rational shift = x - Rational(1);
    if (shift.is_zero()) {
      if (!cfg.include_support_points) return std::nullopt;
      rec.in_support = true;  // v_p(0) is infinite for every p
    } else {
      rec.shifted = factor(shift);
      rec.witness = shift_witness(*rec.shifted, cond, cfg.s);
    }
    rec.accepted = !rec.witness;
    if (!rec.accepted) return rec;

    rec.lift = cond == ShiftCondition::TwoFull ? decompose_square_cube(rec.u, cfg.s)
                                               : decompose_coprime_square_cube(rec.u, cfg.s);
    const auto& [a, b] = *rec.lift;
    if (a * a * b * b * b != rec.u)
      throw InternalError("lift of u = " + rec.u.str() + " does not satisfy a^2 b^3 = u");
    const PointCheck check = verify_point_on_X(a, b, cfg.s);
    if (!check.on_x || (target == Target::Y && !check.on_y))
      throw InternalError("lift (" + a.str() + ", " + b.str() + ") is not an S-integral point of " +
                          to_string(target));
    return rec;
  };

  auto out = parallel_collect<PointRecord>(vectors * signs, cfg.jobs, visit);
  std::sort(out.begin(), out.end(), record_order);
  return out;
}

}  // namespace detail

/// Sweeps S-units x = +-prod p^e (|e| <= bound) and accepts those with
/// x - 1 2-full in Z_S, lifting each to an S-integral point of X.
inline std::vector<PointRecord> search_shifted_units_2full(const SearchConfig& cfg) {
  return detail::shifted_unit_search(cfg, detail::ShiftCondition::TwoFull);
}

/// Same sweep, accepting x when every v_p(x - 1), p outside S, is
/// divisible by 2 or 3; lifts are coprime and land on Y.
inline std::vector<PointRecord> search_shifted_units_2or3(const SearchConfig& cfg) {
  return detail::shifted_unit_search(cfg, detail::ShiftCondition::TwoOrThree);
}

/// Point (p : q) of P^1 in lowest terms with q > 0, or (1 : 0) for infinity.
struct P1Point {
  BigInt p;
  BigInt q;

  static P1Point infinity() { return {1, 0}; }
  static P1Point of(const Rational& r) { return {r.numerator(), r.denominator()}; }

  /// "inf", or the rational p/q.
  std::string str() const { return sgn(q) == 0 ? "inf" : Rational(p, q).str(); }
  friend bool operator==(const P1Point&, const P1Point&) = default;
};

inline P1Point parse_p1_point(std::string_view s) {
  if (s == "inf" || s == "infinity" || s == "oo") return P1Point::infinity();
  return P1Point::of(Rational::parse(s));
}

struct P1Record {
  P1Point point;
  ValuationVector valuations;
  Verdict verdict;
};

/// Every primitive (p : q) with max(|p|, q) <= height, with its valuation
/// vector and verdict. Divisor labels of `spec` name points of P^1. At a
/// prime l outside S the point meets the divisor (a : b) with
/// multiplicity v_l(p b - q a); p b - q a = 0 means the point lies on it.
inline std::vector<P1Record> sweep_p1(const CPairSpec& spec, const SIntegerContext& ctx, long height,
                                      unsigned jobs = 1) {
  if (height < 1) throw InvalidArgument("height bound must be at least 1");
  std::vector<P1Point> locations;
  for (const auto& d : spec.divisors()) {
    P1Point pt = parse_p1_point(d.label);
    if (std::find(locations.begin(), locations.end(), pt) != locations.end())
      throw InvalidArgument("divisor point " + pt.str() + " appears twice");
    locations.push_back(pt);
  }
  const std::size_t width = static_cast<std::size_t>(2 * height + 1);
  auto visit = [&](std::size_t index) -> std::optional<P1Record> {
    const long q = static_cast<long>(index / width);
    const long p = static_cast<long>(index % width) - height;
    if (std::gcd(p, q) != 1) return std::nullopt;
    if (q == 0 && p != 1) return std::nullopt;
    P1Record rec{{BigInt(p), BigInt(q)}, {}, {}};
    for (std::size_t i = 0; i < locations.size(); ++i) {
      const BigInt n = rec.point.p * locations[i].q - rec.point.q * locations[i].p;
      DivisorIncidence inc;
      if (sgn(n) == 0) {
        inc.contained = true;
      } else {
        for (const auto& [l, e] : factor(n).factors)
          if (!ctx.excludes(l)) inc.mults.emplace(l, e);
      }
      rec.valuations.entries.emplace(spec.divisors()[i].label, std::move(inc));
    }
    rec.verdict = check_point(spec, rec.valuations);
    return rec;
  };
  auto out = detail::parallel_collect<P1Record>(width * static_cast<std::size_t>(height + 1), jobs, visit);
  auto key = [](const P1Record& r) {
    BigInt h = abs(r.point.p);
    if (h < r.point.q) h = r.point.q;
    return std::make_tuple(h, r.point.q, r.point.p);
  };
  std::sort(out.begin(), out.end(), [&](const P1Record& l, const P1Record& r) { return key(l) < key(r); });
  return out;
}

/// The accepted points of `sweep_p1`, including in-support ones (flagged).
inline std::vector<P1Record> enumerate_campana_points_p1(const CPairSpec& spec, const SIntegerContext& ctx,
                                                         long height, unsigned jobs = 1) {
  auto all = sweep_p1(spec, ctx, height, jobs);
  std::erase_if(all, [](const P1Record& r) { return !r.verdict.accepted; });
  return all;
}

}  // namespace campana
