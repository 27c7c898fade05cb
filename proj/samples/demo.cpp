// Library tour: semigroup unions, a C-pair verdict and a small shifted-unit search.
#include <iostream>

#include "campana/campana.hpp"
#include "campana/io/syntax.hpp"

int main() {
  using namespace campana;

  const auto u = io::parse_union("<2,3> | <5..");
  std::cout << "union " << io::format_union(u) << " contains 7: " << std::boolalpha << u.contains(7)
            << ", cofinite: " << u.is_cofinite() << '\n';

  const auto spec = io::parse_cpair("D1: >=2; D2: div 3");
  ValuationVector v;
  v.entries["D1"] = {false, {{BigInt(2), 3}}};
  v.entries["D2"] = {false, {{BigInt(5), 2}}};
  const Verdict verdict = check_point(spec, v);
  std::cout << "verdict: " << (verdict.accepted ? "accept" : "reject");
  if (const auto* f = verdict.failure()) std::cout << " at " << f->label;
  std::cout << '\n';

  SearchConfig cfg;
  cfg.s = SIntegerContext::of({2, 3});
  cfg.exponent_bound = 3;
  for (const auto& r : search_shifted_units_2full(cfg)) {
    if (!r.accepted) continue;
    std::cout << "x = " << r.x.str() << "  lift (" << r.lift->a.str() << ", " << r.lift->b.str() << ")"
              << (r.in_support ? "  [support]" : "") << '\n';
  }
}
