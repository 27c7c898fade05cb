#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "campana/cli/config.hpp"
#include "campana/io/json.hpp"
#include "campana/io/syntax.hpp"

namespace campana::cli {

enum ExitCode : int { kOk = 0, kRejected = 1, kUsage = 2, kInternal = 3 };

namespace detail {

using io::Json;

inline std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline std::pair<std::vector<std::string>, std::vector<std::vector<std::string>>> tabulate(
    const std::vector<Json>& records) {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  if (records.empty()) return {header, rows};
  if (records.front().is_object()) {
    for (const auto& [k, v] : records.front().items()) header.push_back(k);
    for (const auto& r : records) {
      std::vector<std::string> row;
      for (const auto& k : header) row.push_back(r.contains(k) ? cell(r.at(k)) : "");
      rows.push_back(std::move(row));
    }
  } else {
    header.push_back("value");
    for (const auto& r : records) rows.push_back({cell(r)});
  }
  return {header, rows};
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Writes records as JSON lines, CSV or an aligned table.
inline void emit_records(std::ostream& out, OutputFormat fmt, const std::vector<Json>& records) {
  if (fmt == OutputFormat::Json) {
    for (const auto& r : records) out << r.dump() << '\n';
    return;
  }
  const auto [header, rows] = tabulate(records);
  if (header.empty()) return;
  if (fmt == OutputFormat::Csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_quote(cells[i]);
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    width[i] = header[i].size();
    for (const auto& r : rows) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      text += cells[i];
      if (i + 1 < cells.size()) text += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

/// A single result: one JSON line, or a one-row (or one-column) table.
inline void emit_value(std::ostream& out, OutputFormat fmt, const Json& value) {
  if (fmt == OutputFormat::Json) {
    out << value.dump() << '\n';
    return;
  }
  if (value.is_array()) {
    emit_records(out, fmt, std::vector<Json>(value.begin(), value.end()));
  } else {
    emit_records(out, fmt, {value});
  }
}

/// Inline JSON, or "@path" to read it from a file.
inline Json json_argument(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot read '" + arg.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::vector<long> integer_list(const std::vector<std::string>& args) {
  std::vector<long> out;
  for (const auto& a : args) {
    std::stringstream ss(a);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      out.push_back(to_int64(parse_bigint(item)));
    }
  }
  return out;
}

inline bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError("expected true or false, got '" + s + "'");
}

/// "1,2|3" into 0-based index blocks.
inline std::vector<std::vector<std::size_t>> parse_blocks(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  std::stringstream ss(text);
  std::string block;
  while (std::getline(ss, block, '|')) {
    std::vector<std::size_t> idx;
    for (long i : integer_list({block})) {
      if (i < 1) throw ParseError("block indices are 1-based");
      idx.push_back(static_cast<std::size_t>(i - 1));
    }
    out.push_back(std::move(idx));
  }
  return out;
}

inline std::vector<FibreDecomposition> fibre_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array of fibres");
  std::vector<FibreDecomposition> out;
  for (const auto& f : j) out.push_back(io::fibre_from_json(f).second);
  return out;
}

}  // namespace detail

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and summaries to `err`.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Json;
  CLI::App app{"Executable C-pair calculus: semigroups, orbifold bases, Campana points, S-unit searches",
               "campana"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string s_flag, format_flag, config_path;
  long bound_flag = 0, height_flag = 0, m_flag = 0;
  unsigned jobs_flag = 1;
  bool strict_flag = false, no_negative = false, no_support = false;
  auto* s_opt = app.add_option("--s", s_flag, "comma-separated primes of S (empty for none)");
  auto* bound_opt = app.add_option("--bound", bound_flag, "exponent bound for S-unit sweeps")
                        ->check(CLI::NonNegativeNumber);
  auto* height_opt = app.add_option("--height", height_flag, "height bound for P^1 sweeps")
                         ->check(CLI::PositiveNumber);
  auto* m_opt = app.add_option("--m", m_flag, "fullness exponent for mfull")->check(CLI::PositiveNumber);
  auto* format_opt = app.add_option("--format", format_flag, "json, csv or table");
  auto* strict_opt = app.add_flag("--strict", strict_flag, "exit 1 when a check is rejected");
  auto* jobs_opt = app.add_option("--jobs", jobs_flag, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--config", config_path, "configuration file");
  auto* neg_opt = app.add_flag("--no-negative-units", no_negative, "sweep positive units only");
  auto* sup_opt = app.add_flag("--no-support-points", no_support, "skip the unit x = 1");

  std::function<int(const RunConfig&)> action;
  auto command = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto leaf = [&](CLI::App* sub, std::function<int(const RunConfig&)> fn) {
    sub->callback([&action, fn = std::move(fn)] { action = fn; });
  };

  std::vector<std::string> pos;  // positional arguments of the chosen leaf
  std::string json_text;         // JSON arrays would be split by the vector binding
  std::string mode = "auto", blocks_text, base_ws, fibres_ws;
  bool all_points = false;

  auto* factor_cmd = command(&app, "factor", "signed prime factorization of a rational");
  factor_cmd->add_option("value", pos, "rational p/q")->required()->expected(1);
  leaf(factor_cmd, [&](const RunConfig& cfg) {
    detail::emit_value(out, cfg.format_or_default(), io::to_json(factor(Rational::parse(pos.at(0)))));
    return kOk;
  });

  auto* mfull = command(&app, "mfull", "m-full elements of Z_S");
  mfull->require_subcommand(1);
  auto* mfull_check = command(mfull, "check", "is x m-full in Z_S");
  mfull_check->add_option("x", pos)->required()->expected(1);
  leaf(mfull_check, [&](const RunConfig& cfg) {
    const Rational x = Rational::parse(pos.at(0));
    const auto ctx = SIntegerContext::of(cfg.s_primes_or_default());
    const long m = cfg.m_or_default();
    const auto witness = m_full_witness(x, m, ctx);
    Json primes = Json::array();
    for (const auto& p : ctx.primes()) primes.push_back(io::to_json(p));
    detail::emit_value(out, cfg.format_or_default(),
                       Json{{"x", x.str()}, {"m", m}, {"s", primes}, {"m_full", !witness},
                            {"witness", io::optional_json(witness)}});
    return witness && cfg.strict_or_default() ? kRejected : kOk;
  });
  auto* mfull_list = command(mfull, "list", "m-full integers up to N");
  mfull_list->add_option("N", pos)->required()->expected(1);
  leaf(mfull_list, [&](const RunConfig& cfg) {
    const BigInt n = parse_bigint(pos.at(0));
    if (sgn(n) < 1) throw InvalidArgument("N must be at least 1");
    Json values = Json::array();
    for (auto v : enumerate_m_full(to_uint64(n), cfg.m_or_default())) values.push_back(v);
    detail::emit_value(out, cfg.format_or_default(), values);
    return kOk;
  });

  auto* semigroup = command(&app, "semigroup", "numerical semigroups and unions");
  semigroup->require_subcommand(1);
  auto* sg_atoms = command(semigroup, "atoms", "minimal generators");
  sg_atoms->add_option("semigroup", pos)->required()->expected(1);
  leaf(sg_atoms, [&](const RunConfig& cfg) {
    const auto u = io::parse_union(pos.at(0));
    Json result = Json::array();
    if (u.size() == 1) {
      result = u.blocks()[0].atoms();
    } else {
      for (const auto& b : u.blocks()) result.push_back(b.atoms());
    }
    detail::emit_value(out, cfg.format_or_default(), result);
    return kOk;
  });
  auto* sg_contains = command(semigroup, "contains", "membership of n");
  sg_contains->add_option("args", pos, "semigroup n")->required()->expected(2);
  leaf(sg_contains, [&](const RunConfig& cfg) {
    const auto u = io::parse_union(pos.at(0));
    const long n = to_int64(parse_bigint(pos.at(1)));
    if (n < 1) throw InvalidArgument("n must be at least 1");
    detail::emit_value(out, cfg.format_or_default(),
                       Json{{"semigroup", io::format_union(u)}, {"n", n}, {"contains", u.contains(n)}});
    return kOk;
  });
  auto* sg_elements = command(semigroup, "elements", "elements up to a bound");
  sg_elements->add_option("args", pos, "semigroup bound")->required()->expected(2);
  leaf(sg_elements, [&](const RunConfig& cfg) {
    const auto u = io::parse_union(pos.at(0));
    detail::emit_value(out, cfg.format_or_default(),
                       Json(u.elements_up_to(to_int64(parse_bigint(pos.at(1))))));
    return kOk;
  });
  auto* sg_frob = command(semigroup, "frobenius", "largest gap of a cofinite semigroup");
  sg_frob->add_option("semigroup", pos)->required()->expected(1);
  leaf(sg_frob, [&](const RunConfig& cfg) {
    detail::emit_value(out, cfg.format_or_default(), Json(io::parse_semigroup(pos.at(0)).frobenius()));
    return kOk;
  });

  auto* cpair = command(&app, "cpair", "C-pair point conditions");
  cpair->require_subcommand(1);
  auto* cp_check = command(cpair, "check", "verdict for a valuation vector");
  cp_check->add_option("args", pos, "pair vector-json")->required()->expected(2);
  cp_check->add_option("--mode", mode, "auto, campana, darmon or generalized")
      ->check(CLI::IsMember({"auto", "campana", "darmon", "generalized"}));
  leaf(cp_check, [&](const RunConfig& cfg) {
    const auto spec = io::parse_cpair(pos.at(0));
    const auto vec = io::valuation_vector_from_json(detail::json_argument(pos.at(1)));
    Verdict v;
    if (mode == "campana") v = check_campana_point(spec, vec);
    else if (mode == "darmon") v = check_darmon_point(spec, vec);
    else if (mode == "generalized") v = check_generalized_point_dedekind(spec, vec);
    else v = check_point(spec, vec);
    detail::emit_value(out, cfg.format_or_default(), io::to_json(v));
    return !v.accepted && cfg.strict_or_default() ? kRejected : kOk;
  });
  auto* cp_divisor = command(cpair, "divisor", "coefficients 1 - 1/inf(M)");
  cp_divisor->add_option("pair", pos)->required()->expected(1);
  leaf(cp_divisor, [&](const RunConfig& cfg) {
    Json rows = Json::array();
    for (const auto& [label, c] : cpair_divisor(io::parse_cpair(pos.at(0))))
      rows.push_back(Json{{"label", label}, {"coefficient", c.str()}});
    detail::emit_value(out, cfg.format_or_default(), rows);
    return kOk;
  });

  auto* config = command(&app, "config", "generalized C-pair configurations");
  config->require_subcommand(1);
  auto* cfg_check = command(config, "check", "assign connected components to blocks");
  cfg_check->add_option("args", pos, "union configuration-json")->required()->expected(2);
  leaf(cfg_check, [&](const RunConfig& cfg) {
    const auto u = io::parse_union(pos.at(0));
    const auto conf = io::configuration_from_json(detail::json_argument(pos.at(1)));
    const auto v = check_generalized_configuration(u, conf);
    detail::emit_value(out, cfg.format_or_default(), io::to_json(v));
    return !v.accepted && cfg.strict_or_default() ? kRejected : kOk;
  });

  auto* fibre = command(&app, "fibre", "fibre multiplicities and orbifold bases");
  fibre->require_subcommand(1);
  auto* fb_classify = command(fibre, "classify", "m_s, m_s^+ and classification");
  fb_classify->add_option("fibre", pos, "fibre JSON, 'empty', or multiplicities")->required();
  leaf(fb_classify, [&](const RunConfig& cfg) {
    FibreDecomposition f;
    if (pos.size() == 1 && !pos[0].empty() && (pos[0][0] == '{' || pos[0][0] == '@'))
      f = io::fibre_from_json(detail::json_argument(pos[0])).second;
    else if (!(pos.size() == 1 && pos[0] == "empty"))
      f.multiplicities = detail::integer_list(pos);
    for (long a : f.multiplicities)
      if (a < 1) throw InvalidArgument("fibre multiplicities must be positive");
    detail::emit_value(out, cfg.format_or_default(), io::to_json(multiplicities(f), classify_fibre(f)));
    return kOk;
  });
  auto* fb_base = command(fibre, "orbifold-base", "orbifold divisor of a fibration");
  fb_base->add_option("fibres", json_text, "JSON array of fibres with 'divisor'")->required();
  leaf(fb_base, [&](const RunConfig& cfg) {
    const Json j = detail::json_argument(json_text);
    if (!j.is_array()) throw ParseError("expected a JSON array of fibres");
    std::vector<std::pair<std::string, FibreDecomposition>> fibres;
    for (const auto& f : j) fibres.push_back(io::fibre_from_json(f));
    detail::emit_value(out, cfg.format_or_default(), io::to_json(orbifold_base(fibres)));
    return kOk;
  });
  auto* fb_check = command(fibre, "checklist", "weak-specialness checklist for a fibration");
  fb_check->add_option("fibres", json_text, "JSON array of fibres")->required();
  fb_check->add_option("--base-weakly-special", base_ws, "declared: base is weakly special")->required();
  fb_check->add_option("--fibres-weakly-special", fibres_ws,
                       "declared: general fibres weakly special with dense image")
      ->required();
  leaf(fb_check, [&](const RunConfig& cfg) {
    const auto fibres = detail::fibre_list(detail::json_argument(json_text));
    const auto v = weakly_special_checklist(detail::parse_bool(base_ws), detail::parse_bool(fibres_ws), fibres);
    detail::emit_value(out, cfg.format_or_default(), io::to_json(v));
    return !v.certified && cfg.strict_or_default() ? kRejected : kOk;
  });

  auto* xa = command(&app, "xa", "the family x_1^a_1 ... x_n^a_n = 1");
  xa->require_subcommand(1);
  auto* xa_classify = command(xa, "classify", "weakly special / special");
  xa_classify->add_option("a", pos, "sorted coprime exponents")->required();
  leaf(xa_classify, [&](const RunConfig& cfg) {
    detail::emit_value(out, cfg.format_or_default(), io::to_json(classify_xa_family(detail::integer_list(pos))));
    return kOk;
  });

  auto* kodaira = command(&app, "kodaira", "starred Kodaira fibres");
  kodaira->require_subcommand(1);
  auto* kd_reduce = command(kodaira, "reduce", "remove reduced components");
  kd_reduce->add_option("type", pos, "II*, III* or IV*")->required()->expected(1);
  leaf(kd_reduce, [&](const RunConfig& cfg) {
    detail::emit_value(out, cfg.format_or_default(),
                       io::to_json(kodaira_reduced_removal(parse_kodaira_type(pos.at(0)))));
    return kOk;
  });

  auto* weights = command(&app, "weights", "kernel lattice, splitting and strata of a weight tuple");
  weights->add_option("a", pos, "positive weights")->required();
  weights->add_option("--blocks", blocks_text, "1-based index blocks, e.g. 1,2|3");
  leaf(weights, [&](const RunConfig& cfg) {
    std::optional<std::vector<std::vector<std::size_t>>> blocks;
    if (!blocks_text.empty()) blocks = detail::parse_blocks(blocks_text);
    detail::emit_value(out, cfg.format_or_default(),
                       io::to_json(campana_weights(detail::integer_list(pos), blocks)));
    return kOk;
  });

  auto* space = command(&app, "space", "Campana space data");
  space->require_subcommand(1);
  auto* sp_report = command(space, "report", "atoms, torus rank, fibre and coefficient");
  sp_report->add_option("condition", pos, "'>=m', 'div m' or 'union ...'")->required()->expected(1);
  leaf(sp_report, [&](const RunConfig& cfg) {
    detail::emit_value(out, cfg.format_or_default(),
                       io::to_json(campana_space_report(io::parse_condition(pos.at(0)))));
    return kOk;
  });

  auto* search = command(&app, "search", "shifted S-unit searches");
  search->require_subcommand(1);
  auto run_search = [&](const RunConfig& cfg, bool two_full) {
    SearchConfig sc;
    sc.s = SIntegerContext::of(cfg.s_primes_or_default());
    sc.exponent_bound = cfg.bound_or_default();
    sc.include_negative_units = cfg.negative_units_or_default();
    sc.include_support_points = cfg.support_points_or_default();
    sc.jobs = cfg.jobs_or_default();
    const auto records = two_full ? search_shifted_units_2full(sc) : search_shifted_units_2or3(sc);
    std::vector<Json> rows;
    std::size_t accepted = 0, flagged = 0;
    for (const auto& r : records) {
      rows.push_back(io::to_json(r));
      accepted += r.accepted;
      flagged += r.accepted && r.in_support;
    }
    detail::emit_records(out, cfg.format_or_default(), rows);
    err << "swept " << records.size() << " units: " << accepted << " accepted (" << accepted - flagged
        << " without flagged points)\n";
    return kOk;
  };
  leaf(command(search, "2full", "x - 1 is 2-full; lifts to X"),
       [&](const RunConfig& cfg) { return run_search(cfg, true); });
  leaf(command(search, "2or3", "v_p(x - 1) divisible by 2 or 3; lifts to Y"),
       [&](const RunConfig& cfg) { return run_search(cfg, false); });

  auto* p1 = command(&app, "p1", "Campana points on orbifold P^1");
  p1->require_subcommand(1);
  auto* p1_enum = command(p1, "enumerate", "bounded-height sweep");
  p1_enum->add_option("pair", pos, "C-pair with point labels, e.g. '0: >=2; 1: >=2; inf: >=2'")
      ->required()
      ->expected(1);
  p1_enum->add_flag("--all", all_points, "also print rejected points");
  leaf(p1_enum, [&](const RunConfig& cfg) {
    const auto spec = io::parse_cpair(pos.at(0));
    const auto ctx = SIntegerContext::of(cfg.s_primes_or_default());
    const auto records = sweep_p1(spec, ctx, cfg.height_or_default(), cfg.jobs_or_default());
    std::vector<Json> rows;
    std::size_t accepted = 0, flagged = 0;
    for (const auto& r : records) {
      accepted += r.verdict.accepted;
      flagged += r.verdict.accepted && r.verdict.in_support();
      if (all_points || r.verdict.accepted) rows.push_back(io::to_json(r));
    }
    detail::emit_records(out, cfg.format_or_default(), rows);
    err << "swept " << records.size() << " points: " << accepted << " accepted (" << accepted - flagged
        << " without flagged points)\n";
    return kOk;
  });

  auto* point = command(&app, "point", "integral points of X and Y");
  point->require_subcommand(1);
  auto* pt_verify = command(point, "verify", "is (a, b) on X, on Y");
  pt_verify->add_option("args", pos, "a b")->required()->expected(2);
  leaf(pt_verify, [&](const RunConfig& cfg) {
    const Rational a = Rational::parse(pos.at(0)), b = Rational::parse(pos.at(1));
    const auto check = verify_point_on_X(a, b, SIntegerContext::of(cfg.s_primes_or_default()));
    detail::emit_value(out, cfg.format_or_default(), io::to_json(check, a, b));
    return !check.on_x && cfg.strict_or_default() ? kRejected : kOk;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    RunConfig file_cfg;
    if (!config_path.empty()) file_cfg = load_config(config_path);
    RunConfig flags;
    if (s_opt->count()) flags.s_primes = parse_prime_list(s_flag);
    if (bound_opt->count()) flags.bound = bound_flag;
    if (height_opt->count()) flags.height = height_flag;
    if (m_opt->count()) flags.m = m_flag;
    if (format_opt->count()) flags.format = parse_format(format_flag);
    if (strict_opt->count()) flags.strict = strict_flag;
    if (jobs_opt->count()) flags.jobs = jobs_flag;
    if (neg_opt->count()) flags.include_negative_units = !no_negative;
    if (sup_opt->count()) flags.include_support_points = !no_support;
    if (!action) throw ParseError("no command given");
    return action(file_cfg.overridden_by(flags));
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace campana::cli
