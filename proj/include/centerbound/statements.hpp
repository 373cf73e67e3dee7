#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "centerbound/bigint.hpp"
#include "centerbound/config.hpp"
#include "centerbound/error.hpp"
#include "centerbound/group.hpp"
#include "centerbound/proof_replay.hpp"
#include "centerbound/rank.hpp"
#include "centerbound/small_group.hpp"
#include "centerbound/structure.hpp"

namespace centerbound {

enum class StatementId { T1, T2, T3, C4, T5, T6, T7, L9, LK, CK, LA, LB, LS, P1, P2, AUT, FOC };

inline constexpr std::array<StatementId, 17> kAllStatements = {
    StatementId::T1, StatementId::T2, StatementId::T3, StatementId::C4, StatementId::T5,
    StatementId::T6, StatementId::T7, StatementId::L9, StatementId::LK, StatementId::CK,
    StatementId::LA, StatementId::LB, StatementId::LS, StatementId::P1, StatementId::P2,
    StatementId::AUT, StatementId::FOC};

inline const char* to_string(StatementId s) {
  static constexpr const char* names[] = {"T1", "T2", "T3", "C4", "T5", "T6", "T7", "L9", "LK",
                                          "CK", "LA", "LB", "LS", "P1", "P2", "AUT", "FOC"};
  return names[static_cast<int>(s)];
}

inline StatementId parse_statement(std::string_view text) {
  std::string up;
  for (char c : text) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (auto s : kAllStatements)
    if (up == to_string(s)) return s;
  throw Error(ErrorCode::ParseError, "unknown statement '" + std::string(text) + "'");
}

/// "all" or a comma-separated list of tags.
inline std::vector<StatementId> parse_statement_list(std::string_view text) {
  if (text == "all" || text == "ALL") return {kAllStatements.begin(), kAllStatements.end()};
  std::vector<StatementId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) {
      const auto s = parse_statement(item);
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty statement list");
  return out;
}

/// One statement instance. Inclusions are encoded as lhs = number of
/// violations, rhs = 0.
struct Verdict {
  StatementId statement = StatementId::T1;
  bool applicable = true;
  bool computable = true;
  bool holds = true;
  BigInt lhs = 0;
  BigInt rhs = 0;
  std::optional<WitnessRecord> witness;
  std::string notes;
  std::map<std::string, std::string> facts;

  bool violated() const { return applicable && computable && !holds; }

  void note(const std::string& text) {
    if (!notes.empty()) notes += "; ";
    notes += text;
  }
};

namespace detail {

inline double log2_big(const BigInt& x) {
  if (x <= 0) return 0.0;
  const auto bits = static_cast<long>(boost::multiprecision::msb(x));
  if (bits < 52) return std::log2(x.convert_to<double>());
  const BigInt top = x >> (bits - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

inline void note_tightness(Verdict& v) {
  if (v.lhs > 1 && v.rhs > 1) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "log(lhs)/log(rhs)=%.4f", log2_big(v.lhs) / log2_big(v.rhs));
    v.note(buf);
  }
}

// lhs ≤ f(r) for f nondecreasing in r, where r may only be known as an interval.
template <class F>
void decide_numeric(Verdict& v, const BigInt& lhs, const RankValue& r, F&& f, const Config& cfg,
                    const std::string& name) {
  v.lhs = lhs;
  v.note(name + "=" + r.describe());
  if (r.known()) {
    v.rhs = f(r.lo);
    v.holds = lhs <= v.rhs;
  } else if (cfg.rank_bounds && lhs <= f(r.lo)) {
    v.rhs = f(r.lo);
    v.holds = true;
    v.note("proved with the lower bound " + name + ">=" + std::to_string(r.lo));
  } else if (cfg.rank_bounds && lhs > f(r.hi)) {
    v.rhs = f(r.hi);
    v.holds = false;
    v.note("exceeds the bound even at " + name + "=" + std::to_string(r.hi));
  } else {
    v.rhs = f(r.lo);
    v.computable = false;
    v.holds = false;
    v.note(name + " unknown under caps");
  }
  note_tightness(v);
}

// rank lhs ≤ f(r) with both sides possibly intervals.
template <class F>
void decide_rank(Verdict& v, const RankValue& lhs, const RankValue& r, F&& f, const Config& cfg,
                 const std::string& lhs_name, const std::string& name) {
  v.note(lhs_name + "=" + lhs.describe());
  v.note(name + "=" + r.describe());
  if (lhs.known() && r.known()) {
    v.lhs = lhs.lo;
    v.rhs = f(r.lo);
    v.holds = v.lhs <= v.rhs;
  } else if (cfg.rank_bounds && BigInt(lhs.hi) <= f(r.lo)) {
    v.lhs = lhs.hi;
    v.rhs = f(r.lo);
    v.holds = true;
    v.note("proved with " + lhs_name + "<=" + std::to_string(lhs.hi) + " and " + name +
           ">=" + std::to_string(r.lo));
  } else if (cfg.rank_bounds && BigInt(lhs.lo) > f(r.hi)) {
    v.lhs = lhs.lo;
    v.rhs = f(r.hi);
    v.holds = false;
  } else {
    v.lhs = lhs.lo;
    v.rhs = f(r.lo);
    v.computable = false;
    v.holds = false;
    v.note("ranks unknown under caps");
  }
}

inline std::uint64_t group_fingerprint(const Group& g) {
  std::uint64_t h = 1469598103934665603ull ^ g.degree();
  for (const auto& s : g.generators()) h = (h ^ s.hash()) * 1099511628211ull;
  return h;
}

}  // namespace detail

/// Largest index |G:Z(G)| for which the central quotient is built as a
/// regular permutation action (its element list costs index² points).
inline constexpr std::uint64_t kQuotientActionLimit = 2048;

/// Lazily computed invariants of one group, shared by all statements.
class Analysis {
 public:
  explicit Analysis(Group g, Config cfg = {}) : g_(std::move(g)), cfg_(std::move(cfg)) {}

  const Group& group() const noexcept { return g_; }
  const Config& config() const noexcept { return cfg_; }

  /// G/Z(G) as a permutation group, when the index allows it.
  const QuotientPresentation* central_quotient() {
    if (!quotient_tried_) {
      quotient_tried_ = true;
      const Group z = center(g_, cfg_);
      const BigInt index = g_.order() / z.order();
      if (index <= kQuotientActionLimit && index <= cfg_.coset_cap)
        quotient_.emplace(quotient(g_, z, cfg_));
    }
    return quotient_ ? &*quotient_ : nullptr;
  }

  const StructureReport& structure() {
    if (!structure_) structure_.emplace(structure_report(g_, cfg_, central_quotient()));
    return *structure_;
  }

  /// p for a p-group, 0 for the trivial group, nullopt otherwise.
  std::optional<std::uint64_t> prime() {
    if (!prime_) prime_.emplace(p_group_prime(g_));
    return *prime_;
  }

  const RankValue& rank_mod_center() {  // rk(G/Z(G))
    if (!rank_gz_) rank_gz_ = section_rank(g_, structure().center, cfg_);
    return *rank_gz_;
  }
  const RankValue& rank_derived() {  // rk(G')
    if (!rank_gd_) rank_gd_ = section_rank(structure().derived, g_.subgroup_unchecked({}), cfg_);
    return *rank_gd_;
  }
  const RankValue& rank_derived_mod_zed() {  // rk(G'/Z)
    if (!rank_gdz_) rank_gdz_ = section_rank(structure().derived, structure().zed, cfg_);
    return *rank_gdz_;
  }
  const RankValue& gens_derived() {  // d(G')
    if (!gens_gd_)
      gens_gd_ = min_generators_bounds(structure().derived, g_.subgroup_unchecked({}), cfg_);
    return *gens_gd_;
  }
  const WitnessRecord& also() {
    if (!also_) also_ = also_witness(structure(), cfg_);
    return *also_;
  }
  const WitnessRecord& szivas() {
    if (!szivas_) szivas_ = szivas_witness(structure(), cfg_);
    return *szivas_;
  }

  std::mt19937_64 rng(std::uint64_t salt) const {
    return std::mt19937_64(cfg_.seed ^ detail::group_fingerprint(g_) ^ (salt * 0x9e3779b97f4a7c15ull));
  }

 private:
  Group g_;
  Config cfg_;
  bool quotient_tried_ = false;
  std::optional<QuotientPresentation> quotient_;
  std::optional<StructureReport> structure_;
  std::optional<std::optional<std::uint64_t>> prime_;
  std::optional<RankValue> rank_gz_, rank_gd_, rank_gdz_, gens_gd_;
  std::optional<WitnessRecord> also_, szivas_;
};

namespace detail {

inline BigInt index_of_sub(const Group& a, const Group& b) { return a.order() / b.order(); }

inline void inapplicable(Verdict& v, const std::string& why) {
  v.applicable = false;
  v.holds = true;
  v.lhs = 0;
  v.rhs = 0;
  v.note(why);
}

inline void eval_t1(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  const BigInt gz = index_of_sub(s.group, s.center);
  const RankValue& r = an.rank_mod_center();
  decide_numeric(v, s.derived.order(), r, [&](unsigned k) { return ipow(gz, k + 1); }, an.config(),
                 "rk(G/Z(G))");
  if (!v.computable || !v.holds) return;
  // Per-prime step at the rank value the main inequality was settled with.
  const unsigned k = r.lo;
  for (std::uint64_t p : prime_factors(s.derived.order())) {
    const BigInt lhs = p_part(s.derived.order(), p);
    const BigInt rhs = ipow(p_part(gz, p), k + 1);
    if (lhs <= rhs) continue;
    v.note("per-prime step fails at p=" + std::to_string(p) + ": " + lhs.str() + " > " + rhs.str());
    v.holds = false;
    if (!r.known()) v.computable = false;
    return;
  }
  v.facts["per_prime"] = "ok";
}

inline void eval_t2(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  decide_numeric(v, index_of_sub(s.group, s.second_center), an.rank_derived(),
                 [&](unsigned r) { return ipow(s.derived.order(), 2 * r); }, an.config(), "rk(G')");
}

inline void eval_t3(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  decide_numeric(v, index_of_sub(s.group, s.second_center), an.rank_derived_mod_zed(),
                 [&](unsigned r) { return ipow(s.derived_mod_zed(), 4 * r); }, an.config(), "rk(G'/Z)");
  // |G:Z₂| = |G:D|·|D:C_G(G')|·|C_G(G'):Z₂|
  const BigInt product = index_of_sub(s.group, s.dee) * index_of_sub(s.dee, s.centralizer_of_derived) *
                         index_of_sub(s.centralizer_of_derived, s.second_center);
  v.facts["decomposition"] = product == v.lhs ? "ok" : "mismatch";
  if (product != v.lhs) {
    v.holds = false;
    v.note("index decomposition mismatch: " + product.str());
  }
}

inline void eval_c4(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  const auto& cfg = an.config();
  const QuotientPresentation* q = an.central_quotient();
  if (!q) {
    // Z(G/Z(G)) = Z₂(G)/Z(G) and (G/Z(G))' ≅ G'/Z, so the sides follow from orders.
    v.note("H = G/Z(G) not built (index " + index_of_sub(s.group, s.center).str() +
           "); sides from orders in G");
    decide_numeric(v, index_of_sub(s.group, s.second_center), an.rank_derived_mod_zed(),
                   [&](unsigned r) { return ipow(s.derived_mod_zed(), 4 * r); }, cfg, "rk(H')");
    return;
  }
  const Group& h = q->quotient;
  const Group hz = center(h, cfg);
  const Group hd = derived_subgroup(h);
  const RankValue r = section_rank(hd, h.subgroup_unchecked({}), cfg);
  decide_numeric(v, index_of_sub(h, hz), r, [&](unsigned k) { return ipow(hd.order(), 4 * k); }, cfg,
                 "rk(H')");
  const bool agrees = v.lhs == index_of_sub(s.group, s.second_center) && hd.order() == s.derived_mod_zed();
  v.facts["agrees_with_T3"] = agrees ? "yes" : "no";
  if (!agrees) {
    v.holds = false;
    v.note("G/Z(G) disagrees with the T3 sides");
  }
}

inline void eval_t5(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  if (!s.center.is_trivial()) return inapplicable(v, "Z(G) != 1");
  std::uint64_t bad = 0;
  for (const auto& c : s.centralizer_of_derived.elements(an.config().enumeration_cap))
    if (!s.derived.contains(c)) ++bad;
  v.lhs = bad;
  v.rhs = 0;
  v.holds = bad == 0;
  v.note("|C_G(G')|=" + s.centralizer_of_derived.order().str() + " |G'|=" + s.derived.order().str());
}

inline void eval_t6(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  if (!s.center.is_trivial()) return inapplicable(v, "Z(G) != 1");
  decide_numeric(v, s.group.order(), an.gens_derived(),
                 [&](unsigned d) { return ipow(s.derived.order(), d + 1); }, an.config(), "d(G')");
}

inline BigInt half_quadratic(unsigned a, unsigned r) {
  return (BigInt(a) * r * r - r) / 2;
}

inline void eval_t7(Verdict& v, Analysis& an) {
  if (!an.prime()) return inapplicable(v, "not a p-group");
  const auto& s = an.structure();
  decide_rank(v, section_rank(s.group, s.second_center, an.config()), an.rank_derived_mod_zed(),
              [](unsigned r) { return half_quadratic(13, r); }, an.config(), "rk(G/Z2(G))", "rk(G'/Z)");
}

inline void eval_l9(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  const auto& cfg = an.config();
  std::uint64_t bad = 0;
  for (const auto& z : s.second_center.generators())
    if (!s.centralizer_of_derived.contains(z)) ++bad;
  const Group cc = derived_subgroup(s.centralizer_of_derived);
  for (const auto& c : cc.generators())
    if (!s.center.contains(c)) ++bad;
  for (std::uint64_t p : prime_factors(s.centralizer_of_derived.order()))
    if (!is_normal(sylow(s.centralizer_of_derived, p, cfg), s.group)) ++bad;
  v.lhs = bad;
  v.rhs = 0;
  v.holds = bad == 0;
}

inline void eval_ck(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  decide_numeric(v, index_of_sub(s.group, s.centralizer_of_derived), an.gens_derived(),
                 [&](unsigned d) { return ipow(s.derived.order(), d); }, an.config(), "d(G')");
}

inline void eval_la(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  decide_numeric(v, index_of_sub(s.centralizer_of_derived, s.second_center), an.rank_derived_mod_zed(),
                 [&](unsigned r) { return ipow(s.derived_mod_zed(), r); }, an.config(), "rk(G'/Z)");
  v.witness = an.also();
  if (!v.witness->holds()) {
    v.holds = false;
    v.note("witness check failed");
  }
}

inline void eval_lb(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  const auto& cfg = an.config();
  std::uint64_t bad = 0;
  for (std::uint64_t p : prime_factors(s.dee.order())) {
    const Group pp = sylow(s.dee, p, cfg);
    const BigInt idx = index_of_sub(s.derived, centralizer(s.derived, pp, cfg));
    v.note("p=" + std::to_string(p) + ": |G':C_G'(P)|=" + idx.str());
    if (!exact_log(idx, p)) ++bad;
  }
  v.lhs = bad;
  v.rhs = 0;
  v.holds = bad == 0;
}

inline void eval_ls(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  const RankValue& r = an.rank_derived_mod_zed();
  decide_numeric(v, index_of_sub(s.dee, s.centralizer_of_derived), r,
                 [&](unsigned k) { return ipow(s.derived_mod_zed(), 2 * k); }, an.config(), "rk(G'/Z)");
  if (r.known())
    v.facts["exponent_r_form"] = v.lhs <= ipow(s.derived_mod_zed(), r.lo) ? "holds" : "exceeds";
  else
    v.facts["exponent_r_form"] = "unknown";
  v.witness = an.szivas();
  if (!v.witness->holds()) {
    v.holds = false;
    v.note("witness check failed");
  }
}

inline void eval_pl(Verdict& v, Analysis& an, PlLemma which) {
  if (!an.prime()) return inapplicable(v, "not a p-group");
  const auto& s = an.structure();
  const auto& w = which == PlLemma::pl1 ? an.also() : an.szivas();
  const auto rep = rank_embedding_pl(s, which, w, an.config());
  const unsigned a = which == PlLemma::pl1 ? 1 : 2;
  decide_rank(v, rep.section, rep.r, [a](unsigned r) { return BigInt(a) * r * r; }, an.config(),
              which == PlLemma::pl1 ? "rk(C_G(G')/Z2(G))" : "rk(D/C_G(G'))", "rk(G'/Z)");
  v.note("maps=" + std::to_string(rep.maps));
  v.facts["homomorphisms"] = rep.homomorphisms_ok ? "ok" : "failed";
  v.facts["kernel_inside"] = rep.kernel_inside ? "ok" : "failed";
  if (!rep.homomorphisms_ok || !rep.kernel_inside) {
    v.holds = false;
    v.note("embedding check failed");
  }
  if (v.computable && v.holds && !rep.holds && rep.computable) {
    v.holds = false;
    v.note("rank exceeds maps*r");
  }
}

inline void eval_aut(Verdict& v, Analysis& an) {
  const auto p = an.prime();
  if (!p) return inapplicable(v, "not a p-group");
  const auto& s = an.structure();
  const unsigned a = *p == 2 ? 7 : 5;
  decide_rank(v, section_rank(s.group, s.dee, an.config()), an.rank_derived_mod_zed(),
              [a](unsigned r) { return half_quadratic(a, r); }, an.config(), "rk(G/D)", "rk(G'/Z)");
}

inline void eval_foc(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  const auto& cfg = an.config();
  BigInt bad = 0;
  for (std::uint64_t p : prime_factors(s.group.order())) {
    const Group pp = sylow(s.group, p, cfg);
    const Group x = intersection(intersection(s.derived, pp, cfg), s.center, cfg);
    const Group y = intersection(derived_subgroup(pp), s.center, cfg);
    const Group both = intersection(x, y, cfg);
    bad += x.order() + y.order() - 2 * both.order();
  }
  v.lhs = bad;
  v.rhs = 0;
  v.holds = bad == 0;
}

struct LkPair {
  BigInt lhs, rhs;
  std::string what;
};

inline void record_lk(std::optional<LkPair>& tightest, std::uint64_t& failures, LkPair pair) {
  if (pair.lhs > pair.rhs) ++failures;
  // Tightest: largest lhs/rhs, compared as cross products.
  if (!tightest || pair.lhs * tightest->rhs > tightest->lhs * pair.rhs) tightest = std::move(pair);
}

inline void eval_lk(Verdict& v, Analysis& an) {
  const auto& s = an.structure();
  const auto& cfg = an.config();
  const Group& g = s.group;
  std::optional<LkPair> tightest;
  std::uint64_t failures = 0, pairs = 0;

  if (g.order() <= cfg.subgroup_cap) {
    // Every normal K against every H, inside the multiplication table.
    const auto table = SmallGroup::from_group(g, cfg);
    const auto subs = table.subgroups();
    std::vector<char> in_derived(table.order(), 0);
    for (const auto& d : s.derived.elements(cfg.enumeration_cap)) in_derived[*g.index_of(d)] = 1;
    std::vector<std::size_t> normal;
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (table.is_normal(subs[i].elements)) normal.push_back(i);
    std::vector<std::size_t> hs(subs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) hs[i] = i;
    const std::uint64_t limit = cfg.enumeration_cap;
    if (normal.size() * hs.size() > limit) {
      auto rng = an.rng(0x4c4b);
      std::shuffle(hs.begin(), hs.end(), rng);
      hs.resize(std::max<std::size_t>(1, limit / normal.size()));
      std::sort(hs.begin(), hs.end());
      v.note("H sampled: " + std::to_string(hs.size()) + " of " + std::to_string(subs.size()));
    }
    for (std::size_t ki : normal) {
      const auto& k = subs[ki].elements;
      std::uint64_t meet = 0;
      for (auto e : k) meet += static_cast<std::uint64_t>(in_derived[e]);
      for (std::size_t hi : hs) {
        const auto& h = subs[hi];
        std::uint64_t cent = 0;
        for (auto e : k) {
          bool ok = true;
          for (auto x : h.generators)
            if (table.mul(e, x) != table.mul(x, e)) {
              ok = false;
              break;
            }
          cent += ok ? 1 : 0;
        }
        ++pairs;
        record_lk(tightest, failures,
                  {BigInt(k.size() / cent), ipow(BigInt(meet), h.min_generators),
                   "|K|=" + std::to_string(k.size()) + " |H|=" + std::to_string(h.elements.size()) +
                       " d=" + std::to_string(h.min_generators)});
      }
    }
    v.note("all normal K (" + std::to_string(normal.size()) + ")");
  } else {
    // A fixed library of normal K and sample H.
    std::vector<Group> ks;
    auto add_unique = [](std::vector<Group>& list, const Group& x) {
      for (const auto& y : list)
        if (same_group(x, y)) return;
      list.push_back(x);
    };
    for (const Group* x : {&s.group, &s.derived, &s.center, &s.second_center, &s.centralizer_of_derived,
                           &s.dee, &s.zed})
      add_unique(ks, *x);
    add_unique(ks, g.subgroup_unchecked({}));
    std::vector<Group> hs;
    for (const Group* x : {&s.group, &s.derived, &s.second_center, &s.centralizer_of_derived, &s.dee})
      add_unique(hs, *x);
    for (std::uint64_t p : prime_factors(g.order())) add_unique(hs, sylow(g, p, cfg));
    auto rng = an.rng(0x4c4b);
    for (int i = 0; i < 4; ++i) {
      add_unique(hs, g.subgroup_unchecked({g.random_element(rng), g.random_element(rng)}));
      add_unique(hs, g.subgroup_unchecked({g.random_element(rng)}));
    }
    for (const auto& k : ks) {
      const BigInt meet = intersection(s.derived, k, cfg).order();
      for (const auto& h : hs) {
        // Any generating set of H gives a valid d; bounds.hi is witnessed.
        const unsigned d = min_generators_bounds(h, h.subgroup_unchecked({}), cfg).hi;
        const Group ckh = centralizer(k, h.generators(), cfg);
        ++pairs;
        record_lk(tightest, failures,
                  {index_of_sub(k, ckh), ipow(meet, d),
                   "|K|=" + k.order().str() + " |H|=" + h.order().str() + " d=" + std::to_string(d)});
      }
    }
    v.note("library K (" + std::to_string(ks.size()) + ") x H (" + std::to_string(hs.size()) + ")");
  }
  v.note(std::to_string(pairs) + " pairs, " + std::to_string(failures) + " failing");
  v.lhs = tightest->lhs;
  v.rhs = tightest->rhs;
  v.note("tightest " + tightest->what);
  v.holds = failures == 0;
}

}  // namespace detail

/// Evaluates one statement. Caps never escape as exceptions: they turn into
/// computable = false. A failed internal cross-check is reported as a
/// violation so it cannot pass silently.
inline Verdict evaluate(StatementId id, Analysis& an) {
  Verdict v;
  v.statement = id;
  try {
    switch (id) {
      case StatementId::T1: detail::eval_t1(v, an); break;
      case StatementId::T2: detail::eval_t2(v, an); break;
      case StatementId::T3: detail::eval_t3(v, an); break;
      case StatementId::C4: detail::eval_c4(v, an); break;
      case StatementId::T5: detail::eval_t5(v, an); break;
      case StatementId::T6: detail::eval_t6(v, an); break;
      case StatementId::T7: detail::eval_t7(v, an); break;
      case StatementId::L9: detail::eval_l9(v, an); break;
      case StatementId::LK: detail::eval_lk(v, an); break;
      case StatementId::CK: detail::eval_ck(v, an); break;
      case StatementId::LA: detail::eval_la(v, an); break;
      case StatementId::LB: detail::eval_lb(v, an); break;
      case StatementId::LS: detail::eval_ls(v, an); break;
      case StatementId::P1: detail::eval_pl(v, an, PlLemma::pl1); break;
      case StatementId::P2: detail::eval_pl(v, an, PlLemma::pl2); break;
      case StatementId::AUT: detail::eval_aut(v, an); break;
      case StatementId::FOC: detail::eval_foc(v, an); break;
    }
  } catch (const Error& e) {
    // CapExceeded may also arrive as a plain Error (RankValue::value()).
    v.holds = false;
    if (e.code() == ErrorCode::CapExceeded) {
      v.computable = false;
      v.note(e.what());
    } else {
      v.computable = true;
      v.note(std::string("internal check failed: ") + e.what());
    }
  }
  return v;
}

inline Verdict evaluate(StatementId id, const Group& g, const Config& cfg = {}) {
  Analysis an(g, cfg);
  return evaluate(id, an);
}

inline std::vector<Verdict> evaluate_all(Analysis& an, const std::vector<StatementId>& ids) {
  std::vector<Verdict> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(evaluate(id, an));
  return out;
}

/// One verdict per statement, in catalog order.
inline std::vector<Verdict> evaluate_all(const Group& g, const Config& cfg = {}) {
  Analysis an(g, cfg);
  return evaluate_all(an, {kAllStatements.begin(), kAllStatements.end()});
}

}  // namespace centerbound
