#pragma once

// JSON schemas for every value the command line prints or reads. Integers
// that fit in 64 bits are JSON numbers, larger ones are decimal strings;
// rationals are always strings "p/q" (or "p"). Index-like data (blocks,
// strata, fibre positions) is 1-based.

#include <string>

#include <json.hpp>

#include "campana/geometry.hpp"
#include "campana/search.hpp"

namespace campana::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return from_int64(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return from_uint64(j.get<std::uint64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

inline long long_from_json(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<long>();
}

inline Json to_json(long v) { return v; }

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  return Rational(bigint_from_json(j));
}

inline Json optional_json(const auto& opt) {
  if (!opt) return nullptr;
  return to_json(*opt);
}

inline const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError(std::string("expected a JSON object with key '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

inline Json to_json(const PrimeFactorization& f) {
  Json factors = Json::array();
  for (const auto& [p, e] : f.factors) factors.push_back(Json::array({to_json(p), e}));
  return Json{{"sign", f.sign}, {"factors", factors}};
}

inline PrimeFactorization factorization_from_json(const Json& j) {
  PrimeFactorization f;
  f.sign = static_cast<int>(long_from_json(member(j, "sign")));
  if (f.sign != 1 && f.sign != -1) throw ParseError("sign must be 1 or -1");
  for (const auto& pe : member(j, "factors")) {
    if (!pe.is_array() || pe.size() != 2) throw ParseError("factor entries are [prime, exponent]");
    const BigInt p = bigint_from_json(pe[0]);
    const long e = long_from_json(pe[1]);
    if (!is_prime(p)) throw ParseError("'" + p.get_str() + "' in factorization is not prime");
    if (e == 0) throw ParseError("factorization exponents must be nonzero");
    if (!f.factors.empty() && f.factors.rbegin()->first >= p)
      throw ParseError("factorization primes must be strictly increasing");
    f.factors[p] = e;
  }
  return f;
}

inline Json to_json(const Multiplicity& m) {
  if (m.is_infinite()) return "inf";
  return m.value();
}

// ---- C-pairs ---------------------------------------------------------------

inline Json to_json(const ValuationVector& v) {
  Json out = Json::object();
  for (const auto& [label, inc] : v.entries) {
    Json mults = Json::array();
    for (const auto& [p, k] : inc.mults) mults.push_back(Json::array({to_json(p), k}));
    out[label] = Json{{"contained", inc.contained}, {"mults", mults}};
  }
  return out;
}

inline ValuationVector valuation_vector_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("valuation vector must be a JSON object");
  ValuationVector v;
  for (const auto& [label, entry] : j.items()) {
    DivisorIncidence inc;
    if (auto it = entry.find("contained"); it != entry.end()) inc.contained = it->get<bool>();
    if (auto it = entry.find("mults"); it != entry.end()) {
      for (const auto& pm : *it) {
        if (!pm.is_array() || pm.size() != 2) throw ParseError("mult entries are [prime, multiplicity]");
        const BigInt p = bigint_from_json(pm[0]);
        if (!is_prime(p)) throw ParseError("'" + p.get_str() + "' in valuation vector is not prime");
        const long k = long_from_json(pm[1]);
        if (k < 1) throw ParseError("multiplicities must be positive");
        if (!inc.mults.emplace(p, k).second) throw ParseError("prime " + p.get_str() + " listed twice");
      }
    }
    v.entries[label] = std::move(inc);
  }
  return v;
}

inline Json to_json(const Verdict& v) {
  Json divisors = Json::array();
  for (const auto& d : v.divisors) {
    divisors.push_back(Json{{"label", d.label},
                            {"passed", d.passed},
                            {"in_support", d.in_support},
                            {"witness_prime", optional_json(d.witness_prime)},
                            {"witness_multiplicity", optional_json(d.witness_multiplicity)}});
  }
  return Json{{"accepted", v.accepted}, {"in_support", v.in_support()}, {"divisors", divisors}};
}

inline Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.accepted = member(j, "accepted").get<bool>();
  for (const auto& d : member(j, "divisors")) {
    DivisorVerdict dv;
    dv.label = member(d, "label").get<std::string>();
    dv.passed = member(d, "passed").get<bool>();
    dv.in_support = member(d, "in_support").get<bool>();
    if (const auto& w = member(d, "witness_prime"); !w.is_null()) dv.witness_prime = bigint_from_json(w);
    if (const auto& w = member(d, "witness_multiplicity"); !w.is_null()) dv.witness_multiplicity = long_from_json(w);
    v.divisors.push_back(std::move(dv));
  }
  return v;
}

inline std::string id_from_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  throw ParseError("component ids are strings or integers, got " + j.dump());
}

inline DivisorConfiguration configuration_from_json(const Json& j) {
  std::vector<DivisorConfiguration::Component> comps;
  for (const auto& c : member(j, "components")) {
    if (!c.is_array() || c.size() != 2) throw ParseError("components are [id, multiplicity]");
    comps.push_back({id_from_json(c[0]), long_from_json(c[1])});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (auto it = j.find("edges"); it != j.end()) {
    for (const auto& e : *it) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edges are [id, id]");
      edges.emplace_back(id_from_json(e[0]), id_from_json(e[1]));
    }
  }
  return DivisorConfiguration(std::move(comps), std::move(edges));
}

inline Json to_json(const DivisorConfiguration& cfg) {
  Json comps = Json::array(), edges = Json::array();
  for (const auto& c : cfg.components()) comps.push_back(Json::array({c.id, c.multiplicity}));
  for (const auto& [a, b] : cfg.edges()) edges.push_back(Json::array({a, b}));
  return Json{{"components", comps}, {"edges", edges}};
}

inline Json to_json(const ConfigurationVerdict& v) {
  auto group = [](const ConfigurationVerdict::Group& g) {
    Json out{{"components", g.components}, {"multiplicities", g.multiplicities}};
    out["block"] = g.block ? Json(*g.block + 1) : Json(nullptr);
    return out;
  };
  Json assignment = Json::array();
  for (const auto& g : v.groups) assignment.push_back(group(g));
  Json failing = v.failing_group ? group(v.groups[*v.failing_group]) : Json(nullptr);
  return Json{{"accepted", v.accepted}, {"assignment", assignment}, {"failing_component", failing}};
}

// ---- geometry --------------------------------------------------------------

inline Json to_json(const FibreDecomposition& f) {
  return Json{{"mults", f.multiplicities}, {"exceptional", f.exceptional}, {"empty", f.empty()}};
}

/// {"divisor": ..., "mults": [...], "exceptional": bool, "empty": bool};
/// only "mults" or "empty" is required.
inline std::pair<std::string, FibreDecomposition> fibre_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("fibre must be a JSON object");
  std::pair<std::string, FibreDecomposition> out;
  if (auto it = j.find("divisor"); it != j.end()) out.first = id_from_json(*it);
  if (auto it = j.find("mults"); it != j.end()) {
    for (const auto& m : *it) {
      const long a = long_from_json(m);
      if (a < 1) throw ParseError("fibre multiplicities must be positive");
      out.second.multiplicities.push_back(a);
    }
  }
  if (auto it = j.find("exceptional"); it != j.end()) out.second.exceptional = it->get<bool>();
  if (auto it = j.find("empty"); it != j.end()) {
    if (it->get<bool>() != out.second.empty())
      throw ParseError("'empty' contradicts the listed components");
  } else if (j.find("mults") == j.end()) {
    throw ParseError("fibre needs 'mults' or 'empty'");
  }
  return out;
}

inline Json to_json(const FibreMultiplicities& m, const FibreClass& c) {
  return Json{{"m_s", to_json(m.inf)},
              {"m_s_plus", to_json(m.gcd)},
              {"inf_multiple", c.inf_multiple},
              {"divisible", c.divisible}};
}

inline Json to_json(const OrbifoldBaseReport& r) {
  Json divisors = Json::array();
  for (const auto& e : r.entries) {
    divisors.push_back(Json{{"divisor", e.divisor},
                            {"m_s", to_json(e.m_s)},
                            {"m_s_plus", to_json(e.m_s_plus)},
                            {"coefficient", to_json(e.coefficient)},
                            {"inf_multiple", e.inf_multiple},
                            {"divisible", e.divisible}});
  }
  return Json{{"divisors", divisors}};
}

inline Json to_json(const ChecklistVerdict& v) {
  Json out{{"certified", v.certified}};
  out["failing_condition"] = v.failing_condition ? Json(*v.failing_condition) : Json(nullptr);
  out["witness_fibre"] = v.witness_fibre ? Json(*v.witness_fibre + 1) : Json(nullptr);
  return out;
}

inline Json to_json(const XaClassification& x) {
  return Json{{"weakly_special", x.weakly_special}, {"special", x.special}};
}

inline Json to_json(const KodairaReduction& r) {
  Json out{{"type", to_string(r.type)}, {"mults", r.fibre.multiplicities}};
  const Json summary = to_json(r.mults, r.classification);
  for (const auto& [k, v] : summary.items()) out[k] = v;
  return out;
}

inline Json to_json(const CampanaWeightData& w) {
  Json kernel = Json::array();
  for (const auto& row : w.kernel_basis) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    kernel.push_back(r);
  }
  Json splitting = nullptr;
  if (w.splitting) {
    splitting = Json::array();
    for (const auto& v : *w.splitting) splitting.push_back(to_json(v));
  }
  Json blocks = Json::array(), strata = Json::array();
  for (const auto& b : w.blocks) {
    Json idx = Json::array();
    for (auto i : b) idx.push_back(i + 1);
    blocks.push_back(idx);
  }
  for (const auto& [i, j] : w.strata) strata.push_back(Json::array({i + 1, j + 1}));
  return Json{{"a", w.a},         {"kernel_basis", kernel}, {"splitting", splitting},
              {"blocks", blocks}, {"strata", strata},       {"inf", w.inf},
              {"gcd", w.gcd}};
}

inline Json to_json(const CampanaSpaceReport& r) {
  return Json{{"atoms", r.atoms},
              {"torus_rank", r.torus_rank},
              {"fibre", to_json(r.fibre)},
              {"orbifold_coefficient", to_json(r.coefficient)},
              {"divisible", r.divisible},
              {"weights", to_json(r.weights)}};
}

// ---- search ----------------------------------------------------------------

inline Json to_json(const PointRecord& r) {
  Json lift = nullptr;
  if (r.lift) lift = Json::array({r.lift->a.str(), r.lift->b.str()});
  Json flags = Json::array();
  if (r.in_support) flags.push_back("in_support");
  return Json{{"x", r.x.str()},
              {"u", r.u.str()},
              {"shift", r.shifted ? to_json(*r.shifted) : Json(nullptr)},
              {"verdict", r.accepted ? "accept" : "reject"},
              {"witness", optional_json(r.witness)},
              {"lift", lift},
              {"target", to_string(r.target)},
              {"flags", flags}};
}

inline PointRecord point_record_from_json(const Json& j) {
  PointRecord r;
  r.x = rational_from_json(member(j, "x"));
  r.u = rational_from_json(member(j, "u"));
  if (const auto& s = member(j, "shift"); !s.is_null()) r.shifted = factorization_from_json(s);
  const auto verdict = member(j, "verdict").get<std::string>();
  if (verdict != "accept" && verdict != "reject") throw ParseError("verdict must be accept or reject");
  r.accepted = verdict == "accept";
  if (const auto& w = member(j, "witness"); !w.is_null()) r.witness = bigint_from_json(w);
  if (const auto& l = member(j, "lift"); !l.is_null()) {
    if (!l.is_array() || l.size() != 2) throw ParseError("lift is [a, b]");
    r.lift = SquareCube{rational_from_json(l[0]), rational_from_json(l[1])};
  }
  const auto target = member(j, "target").get<std::string>();
  if (target != "X" && target != "Y") throw ParseError("target must be X or Y");
  r.target = target == "X" ? Target::X : Target::Y;
  for (const auto& f : member(j, "flags")) {
    if (f != "in_support") throw ParseError("unknown flag " + f.dump());
    r.in_support = true;
  }
  return r;
}

inline Json to_json(const P1Record& r) {
  Json flags = Json::array();
  for (const auto& d : r.verdict.divisors)
    if (d.in_support) flags.push_back("in_support:" + d.label);
  return Json{{"point", r.point.str()},
              {"p", to_json(r.point.p)},
              {"q", to_json(r.point.q)},
              {"verdict", r.verdict.accepted ? "accept" : "reject"},
              {"flags", flags},
              {"valuations", to_json(r.valuations)},
              {"divisors", to_json(r.verdict)["divisors"]}};
}

inline Json to_json(const PointCheck& c, const Rational& a, const Rational& b) {
  return Json{{"a", a.str()}, {"b", b.str()}, {"on_X", c.on_x}, {"on_Y", c.on_y}};
}

}  // namespace campana::io
