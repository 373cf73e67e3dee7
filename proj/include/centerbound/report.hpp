#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "centerbound/corpus.hpp"
#include "centerbound/proof_replay.hpp"
#include "centerbound/statements.hpp"

namespace centerbound {

using Json = nlohmann::ordered_json;

/// A verdict tagged with the group it was computed on.
struct Record {
  std::string label;
  Verdict verdict;
};

inline Json to_json(const PrimeWitness& w) {
  Json xs = Json::array(), ys = Json::array(), chain = Json::array();
  for (const auto& x : w.xs) xs.push_back(to_cycle_string(x));
  for (const auto& y : w.ys) ys.push_back(to_cycle_string(y));
  for (const auto& o : w.chain_orders) chain.push_back(o.str());
  return Json{{"prime", w.prime},
              {"xs", xs},
              {"ys", ys},
              {"sylow_order", w.sylow.order().str()},
              {"tee_order", w.tee.order().str()},
              {"em_order", w.em.order().str()},
              {"chain_orders", chain},
              {"index", w.index.str()},
              {"index_m", w.index_m.str()},
              {"base", w.base.str()},
              {"n_p", w.n_p.str()},
              {"exponent", w.exponent},
              {"rank_cap", w.rank_cap},
              {"inclusion_ok", w.inclusion_ok},
              {"p_quotient_ok", w.p_quotient_ok},
              {"holds", w.holds}};
}

inline Json to_json(const WitnessRecord& w) {
  Json primes = Json::array();
  for (const auto& p : w.primes) primes.push_back(to_json(p));
  return Json{{"lemma", w.lemma}, {"holds", w.holds()}, {"primes", primes}};
}

/// Notes with the facts appended as key=value.
inline std::string full_notes(const Verdict& v) {
  std::string out = v.notes;
  for (const auto& [k, val] : v.facts) {
    if (!out.empty()) out += "; ";
    out += k + "=" + val;
  }
  return out;
}

inline Json to_json(const Record& r) {
  const Verdict& v = r.verdict;
  Json j{{"label", r.label},
         {"statement", to_string(v.statement)},
         {"applicable", v.applicable},
         {"computable", v.computable},
         {"lhs", v.lhs.str()},
         {"rhs", v.rhs.str()},
         {"holds", v.holds},
         {"notes", full_notes(v)}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

/// One compact JSON object per line.
inline void write_json_lines(std::ostream& out, const std::vector<Record>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Witness data is flattened into one row per prime.
inline void write_csv(std::ostream& out, const std::vector<Record>& records) {
  out << "label,statement,applicable,computable,lhs,rhs,holds,notes,prime,index,index_m,base,n_p,exponent\n";
  auto b = [](bool x) { return x ? "true" : "false"; };
  for (const auto& r : records) {
    const Verdict& v = r.verdict;
    std::ostringstream head;
    head << csv_field(r.label) << ',' << to_string(v.statement) << ',' << b(v.applicable) << ','
         << b(v.computable) << ',' << v.lhs.str() << ',' << v.rhs.str() << ',' << b(v.holds) << ','
         << csv_field(full_notes(v));
    if (!v.witness || v.witness->primes.empty()) {
      out << head.str() << ",,,,,,\n";
      continue;
    }
    for (const auto& w : v.witness->primes)
      out << head.str() << ',' << w.prime << ',' << w.index.str() << ',' << w.index_m.str() << ','
          << w.base.str() << ',' << w.n_p.str() << ',' << w.exponent << '\n';
  }
}

inline void write_table(std::ostream& out, const std::vector<Record>& records) {
  std::size_t label_w = 5;
  for (const auto& r : records) label_w = std::max(label_w, r.label.size());
  out << std::left << std::setw(static_cast<int>(label_w)) << "label" << "  stmt  appl  comp  holds  lhs <= rhs\n";
  auto b = [](bool x) { return x ? "yes" : "no"; };
  for (const auto& r : records) {
    const Verdict& v = r.verdict;
    out << std::left << std::setw(static_cast<int>(label_w)) << r.label << "  " << std::setw(4)
        << to_string(v.statement) << "  " << std::setw(4) << b(v.applicable) << "  " << std::setw(4)
        << b(v.computable) << "  " << std::setw(5) << b(v.holds) << "  " << v.lhs.str() << " <= "
        << v.rhs.str() << '\n';
  }
}

inline void write_records(std::ostream& out, const std::vector<Record>& records, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: write_json_lines(out, records); break;
    case OutputFormat::csv: write_csv(out, records); break;
    case OutputFormat::table: write_table(out, records); break;
  }
}

struct Summary {
  std::uint64_t hold = 0;          // applicable, computable, holds
  std::uint64_t vacuous = 0;       // not applicable
  std::uint64_t uncomputable = 0;  // applicable, a cap fired
  std::uint64_t violations = 0;    // applicable, computable, fails

  void add(const Verdict& v) {
    if (!v.applicable) ++vacuous;
    else if (!v.computable) ++uncomputable;
    else if (v.holds) ++hold;
    else ++violations;
  }
  std::string line() const {
    return "hold=" + std::to_string(hold) + " vacuous=" + std::to_string(vacuous) +
           " uncomputable=" + std::to_string(uncomputable) + " violations=" + std::to_string(violations);
  }
  /// 0 clean, 2 violation, 3 uncomputable.
  int exit_code() const { return violations ? 2 : uncomputable ? 3 : 0; }
};

inline Summary summarize(const std::vector<Record>& records) {
  Summary s;
  for (const auto& r : records) s.add(r.verdict);
  return s;
}

struct CorpusResult {
  std::vector<Record> records;
  std::vector<std::string> build_errors;  // "label: message"
};

/// evaluate_all over every spec, fanned out to cfg.threads workers; records
/// come back sorted by (label, statement).
inline CorpusResult run_corpus(const Corpus& corpus, const std::vector<StatementId>& ids = {kAllStatements.begin(), kAllStatements.end()}) {
  const Config& cfg = corpus.config;
  const std::size_t n = corpus.specs.size();
  std::vector<std::vector<Record>> slots(n);
  std::vector<std::string> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const auto& spec = corpus.specs[i];
      try {
        Analysis an(build_group(spec), cfg);
        for (auto& v : evaluate_all(an, ids)) slots[i].push_back({spec.label, std::move(v)});
      } catch (const std::exception& e) {
        errors[i] = spec.label + ": " + e.what();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(cfg.threads, n));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CorpusResult out;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& r : slots[i]) out.records.push_back(std::move(r));
    if (!errors[i].empty()) out.build_errors.push_back(errors[i]);
  }
  std::stable_sort(out.records.begin(), out.records.end(), [](const Record& a, const Record& b) {
    if (a.label != b.label) return a.label < b.label;
    return a.verdict.statement < b.verdict.statement;
  });
  return out;
}

}  // namespace centerbound
