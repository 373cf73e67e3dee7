#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "centerbound/centerbound.hpp"

namespace centerbound::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kViolation = 2,
  kUncomputable = 3,
  kBuildError = 4,
  kIoError = 5,
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::pair<GroupSpec, Group> load(const std::string& text) {
  GroupSpec spec = parse_group_spec(text);
  return {spec, build_group(spec)};
}

inline std::string str(const BigInt& n) { return n.str(); }

// Z₂(C) = C for C = C_G(G'), i.e. C is nilpotent of class at most 2.
inline bool class_at_most_two(const Group& c, const Config& cfg) {
  const Group zc = center(c, cfg);
  const Group cd = derived_subgroup(c);
  for (const auto& x : cd.generators())
    if (!zc.contains(x)) return false;
  return true;
}

inline void print_kv(std::ostream& out, OutputFormat f, const Json& j) {
  if (f == OutputFormat::json) {
    out << j.dump(2) << '\n';
  } else if (f == OutputFormat::csv) {
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_structured()) continue;
      out << (first ? "" : ",") << it.key();
      first = false;
    }
    out << '\n';
    first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_structured()) continue;
      out << (first ? "" : ",") << csv_field(it->is_string() ? it->get<std::string>() : it->dump());
      first = false;
    }
    out << '\n';
  } else {
    for (auto it = j.begin(); it != j.end(); ++it)
      out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  }
}

}  // namespace detail

/// order and the cast of subgroups, with d(G') and rk(G').
inline int cmd_info(const std::string& spec_text, const Config& cfg, Streams io) {
  auto [spec, g] = detail::load(spec_text);
  Analysis an(g, cfg);
  const auto& s = an.structure();
  Json p_parts = Json::object();
  for (const auto& [p, n] : s.p_parts) p_parts[std::to_string(p)] = n.str();
  Json j{{"label", spec.label},
         {"degree", g.degree()},
         {"order", detail::str(g.order())},
         {"derived", detail::str(s.derived.order())},
         {"center", detail::str(s.center.order())},
         {"second_center", detail::str(s.second_center.order())},
         {"centralizer_of_derived", detail::str(s.centralizer_of_derived.order())},
         {"dee", detail::str(s.dee.order())},
         {"zed", detail::str(s.zed.order())},
         {"d_derived", an.gens_derived().describe()},
         {"rank_derived", an.rank_derived().describe()},
         {"centralizer_class_le_2", detail::class_at_most_two(s.centralizer_of_derived, cfg)},
         {"quotient_cross_checked", s.quotient_cross_checked},
         {"p_parts", p_parts}};
  detail::print_kv(io.out, cfg.output_format, j);
  return kOk;
}

inline void dump_counterexample(std::ostream& err, const std::string& label, const Group& g,
                                const std::vector<Record>& records) {
  err << "counterexample candidate: " << label << '\n' << format_group_text(g);
  for (const auto& r : records)
    if (r.verdict.violated()) err << to_json(r).dump() << '\n';
}

inline int cmd_check(const std::string& spec_text, const std::string& statements, const Config& cfg,
                     Streams io) {
  const auto ids = parse_statement_list(statements);
  auto [spec, g] = detail::load(spec_text);
  Analysis an(g, cfg);
  std::vector<Record> records;
  for (auto& v : evaluate_all(an, ids)) records.push_back({spec.label, std::move(v)});
  write_records(io.out, records, cfg.output_format);
  const Summary sum = summarize(records);
  if (sum.violations) dump_counterexample(io.err, spec.label, g, records);
  return sum.exit_code();
}

/// Specs, one per line; blank lines and '#' comments are skipped.
inline Corpus read_spec_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open spec list '" + path + "'");
  Corpus c;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = centerbound::detail::trim(line);
    if (!line.empty()) c.specs.push_back(parse_group_spec(line));
  }
  return c;
}

inline int cmd_corpus(const std::string& out_path, const std::string& specs_path, const Config& cfg,
                      Streams io) {
  Corpus corpus = specs_path.empty() ? default_corpus() : read_spec_list(specs_path);
  corpus.config = cfg;
  const CorpusResult result = run_corpus(corpus);
  for (const auto& e : result.build_errors) io.err << "build error: " << e << '\n';

  std::ostringstream body;
  write_records(body, result.records, cfg.output_format);
  if (out_path.empty() || out_path == "-") {
    io.out << body.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << body.str()) || !f.flush()) {
      io.err << "cannot write '" << out_path << "'\n";
      return kIoError;
    }
  }
  const Summary sum = summarize(result.records);
  io.err << "groups=" << corpus.specs.size() << " records=" << result.records.size() << ' ' << sum.line()
         << '\n';
  if (!result.build_errors.empty()) return kBuildError;
  for (const auto& r : result.records)
    if (r.verdict.violated()) io.err << "violation: " << to_json(r).dump() << '\n';
  return sum.exit_code();
}

namespace detail {

inline int witness_abel(const Group& a, const std::string& label, const Config& cfg, Streams io) {
  const auto family = cyclic_quotient_family(a, cfg);
  const auto sel = select_socle_chain(a, family, cfg);
  const unsigned rank = abelian_rank(a, cfg);
  Group meet = a;
  for (const auto& h : sel.chosen) meet = intersection(meet, h, cfg);
  const bool ok = sel.chosen.size() <= rank && meet.is_trivial();
  Json chosen = Json::array(), chain = Json::array();
  for (const auto& h : sel.chosen) {
    Json gens = Json::array();
    for (const auto& x : h.generators()) gens.push_back(to_cycle_string(x));
    chosen.push_back(Json{{"order", h.order().str()}, {"generators", gens}});
  }
  for (const auto& v : sel.chain) chain.push_back(v.order().str());
  Json j{{"lemma", "abel"},   {"label", label},   {"family_size", family.size()},
         {"rank", rank},      {"chosen", chosen}, {"chain_orders", chain},
         {"check", ok ? "ok" : "failed"}};
  if (cfg.output_format == OutputFormat::json) {
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "abel " << label << ": family of " << family.size() << " subgroups, rank " << rank << '\n';
    for (std::size_t i = 0; i < sel.chosen.size(); ++i)
      io.out << "  H" << i + 1 << " order " << sel.chosen[i].order() << ", chain " << sel.chain[i].order()
             << " -> " << sel.chain[i + 1].order() << '\n';
    io.out << "check " << (ok ? "ok" : "failed") << '\n';
  }
  return ok ? kOk : kViolation;
}

inline int witness_factorize(const Group& p, const std::string& label, const Config& cfg, Streams io) {
  const auto anchors = shrink_generating_set(p, p.generators());
  const CommutatorLayers layers(p, anchors, cfg);
  const Group pd = derived_subgroup(p);
  Json rows = Json::array();
  bool ok = true;
  std::ostringstream text;
  for (const auto& w : pd.elements(cfg.enumeration_cap)) {
    auto xs = layers.factorize(w);
    const bool good = xs && commutator_product(*xs, anchors) == w;
    ok = ok && good;
    Json xj = Json::array();
    if (xs)
      for (const auto& x : *xs) xj.push_back(to_cycle_string(x));
    rows.push_back(Json{{"w", to_cycle_string(w)}, {"xs", xj}, {"check", good ? "ok" : "failed"}});
    text << "  " << to_cycle_string(w) << " =";
    if (xs)
      for (std::size_t i = 0; i < xs->size(); ++i)
        text << " [" << to_cycle_string((*xs)[i]) << ", " << to_cycle_string(anchors[i]) << "]";
    text << "  " << (good ? "ok" : "failed") << '\n';
  }
  Json aj = Json::array();
  for (const auto& a : anchors) aj.push_back(to_cycle_string(a));
  if (cfg.output_format == OutputFormat::json) {
    io.out << Json{{"lemma", "factorize"},
                   {"label", label},
                   {"anchors", aj},
                   {"derived_order", pd.order().str()},
                   {"reach_size", layers.reach_size()},
                   {"factorizations", rows},
                   {"check", ok ? "ok" : "failed"}}
                  .dump(2)
           << '\n';
  } else {
    io.out << "factorize " << label << ": d = " << anchors.size() << ", |P'| = " << pd.order()
           << ", |L_d| = " << layers.reach_size() << '\n'
           << text.str() << "check " << (ok ? "ok" : "failed") << '\n';
  }
  return ok ? kOk : kViolation;
}

inline int witness_record(const WitnessRecord& w, const std::string& label, const Config& cfg, Streams io) {
  if (cfg.output_format == OutputFormat::json) {
    Json j = to_json(w);
    j["label"] = label;
    io.out << j.dump(2) << '\n';
  } else if (cfg.output_format == OutputFormat::csv) {
    io.out << "label,lemma,prime,index,index_m,base,n_p,exponent,inclusion_ok,holds\n";
    for (const auto& p : w.primes)
      io.out << csv_field(label) << ',' << w.lemma << ',' << p.prime << ',' << p.index << ',' << p.index_m
             << ',' << p.base << ',' << p.n_p << ',' << p.exponent << ',' << p.inclusion_ok << ','
             << p.holds << '\n';
  } else {
    io.out << w.lemma << ' ' << label << '\n';
    if (w.primes.empty()) io.out << "  (no primes: empty witness, all indices 1)\n";
    for (const auto& p : w.primes) {
      io.out << "  p=" << p.prime << "  |P|=" << p.sylow.order() << "  |T|=" << p.tee.order()
             << "  |M|=" << p.em.order() << "  index " << p.index << " <= " << p.index_m << " <= " << p.base
             << "^" << p.exponent << "  n_p=" << p.n_p << "  " << (p.holds ? "ok" : "failed") << '\n';
      for (std::size_t i = 0; i < p.xs.size(); ++i) {
        io.out << "    x" << i + 1 << " = " << to_cycle_string(p.xs[i]);
        if (i < p.ys.size()) io.out << ", y" << i + 1 << " = " << to_cycle_string(p.ys[i]);
        io.out << '\n';
      }
    }
    io.out << "check " << (w.holds() ? "ok" : "failed") << '\n';
  }
  return w.holds() ? kOk : kViolation;
}

}  // namespace detail

inline int cmd_witness(const std::string& lemma, const std::string& spec_text, const Config& cfg, Streams io) {
  if (lemma != "abel" && lemma != "factorize" && lemma != "also" && lemma != "szivas") {
    io.err << "unknown lemma '" << lemma << "' (abel, factorize, also, szivas)\n";
    return kUsage;
  }
  auto [spec, g] = detail::load(spec_text);
  try {
    if (lemma == "abel") return detail::witness_abel(g, spec.label, cfg, io);
    if (lemma == "factorize") return detail::witness_factorize(g, spec.label, cfg, io);
    const auto s = structure_report(g, cfg);
    return detail::witness_record(lemma == "also" ? also_witness(s, cfg) : szivas_witness(s, cfg), spec.label,
                                  cfg, io);
  } catch (const CapExceeded& e) {
    io.err << e.what() << '\n';
    return kUncomputable;
  } catch (const Error& e) {
    io.err << "hypothesis failed: " << e.what() << '\n';
    return kViolation;
  }
}

/// Parses arguments and dispatches. Configuration precedence: defaults,
/// then --config file, then CENTERBOUND_* variables, then flags.
inline int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Exact checks of derived-subgroup and center bounds on finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format;
  std::optional<std::uint64_t> enumeration_cap, subgroup_cap, coset_cap, sample_pairs, tuple_cap, seed;
  std::optional<unsigned> threads;
  std::optional<std::string> rank_bounds;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--format", format, "json, csv or table");
  app.add_option("--enumeration-cap", enumeration_cap, "largest element list built (default 200000)");
  app.add_option("--subgroup-cap", subgroup_cap, "largest order for subgroup lattices (default 512)");
  app.add_option("--coset-cap", coset_cap, "largest coset action (default 100000)");
  app.add_option("--sample-pairs", sample_pairs, "pairs sampled past the enumeration cap (default 1000)");
  app.add_option("--tuple-cap", tuple_cap, "generation tests in a tuple search (default 20000)");
  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_option("--threads", threads, "corpus worker threads (default 1)");
  app.add_option("--rank-bounds", rank_bounds, "true/false: settle inequalities from rank intervals (default false)");

  std::string spec_text, statements = "all", out_path, specs_path, lemma;
  auto* info = app.add_subcommand("info", "structure of one group");
  info->add_option("spec", spec_text, "family:NAME(ARGS) or file:PATH")->required();
  auto* check = app.add_subcommand("check", "evaluate statements on one group");
  check->add_option("spec", spec_text)->required();
  check->add_option("--statements", statements, "comma-separated tags or 'all'");
  auto* corpus = app.add_subcommand("corpus", "evaluate every statement over the corpus");
  corpus->add_option("--out", out_path, "report file (default stdout)");
  corpus->add_option("--specs", specs_path, "file with one spec per line instead of the built-in corpus");
  auto* witness = app.add_subcommand("witness", "constructive witnesses: abel, factorize, also, szivas");
  witness->add_option("lemma", lemma)->required();
  witness->add_option("spec", spec_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kOk : kUsage;
  }

  Config cfg;
  try {
    if (!config_path.empty()) load_config_file(cfg, config_path);
    apply_environment(cfg);
    if (!format.empty()) cfg.output_format = parse_output_format(format);
    if (enumeration_cap) cfg.enumeration_cap = *enumeration_cap;
    if (subgroup_cap) cfg.subgroup_cap = *subgroup_cap;
    if (coset_cap) cfg.coset_cap = *coset_cap;
    if (sample_pairs) cfg.sample_pairs = *sample_pairs;
    if (tuple_cap) cfg.tuple_cap = *tuple_cap;
    if (seed) cfg.seed = *seed;
    if (threads) cfg.threads = *threads;
    if (rank_bounds) apply_setting(cfg, "rank_bounds", *rank_bounds);
    cfg.validate();
    if (*check) parse_statement_list(statements);
  } catch (const Error& e) {
    io.err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*info) return cmd_info(spec_text, cfg, io);
    if (*check) return cmd_check(spec_text, statements, cfg, io);
    if (*corpus) return cmd_corpus(out_path, specs_path, cfg, io);
    return cmd_witness(lemma, spec_text, cfg, io);
  } catch (const CapExceeded& e) {
    io.err << e.what() << '\n';
    return kUncomputable;
  } catch (const Error& e) {
    io.err << e.what() << '\n';
    return kBuildError;
  }
}

}  // namespace centerbound::cli
