#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "centerbound/bigint.hpp"
#include "centerbound/config.hpp"
#include "centerbound/error.hpp"
#include "centerbound/group.hpp"
#include "centerbound/small_group.hpp"
#include "centerbound/structure.hpp"

namespace centerbound {

enum class RankMethod { trivial, frattini, abelian_socle, subgroup_enumeration, exhaustive_tuples, bounds };

inline const char* to_string(RankMethod m) {
  switch (m) {
    case RankMethod::trivial: return "trivial";
    case RankMethod::frattini: return "frattini";
    case RankMethod::abelian_socle: return "abelian-socle";
    case RankMethod::subgroup_enumeration: return "subgroup-enumeration";
    case RankMethod::exhaustive_tuples: return "exhaustive-tuples";
    case RankMethod::bounds: return "bounds";
  }
  return "bounds";
}

/// An exact value (lo == hi) or an interval with the cap that stopped us.
/// `hi` of a generator count is always witnessed by an actual generating set.
struct RankValue {
  unsigned lo = 0;
  unsigned hi = 0;
  RankMethod method = RankMethod::trivial;
  std::string cap_note;

  static RankValue exact(unsigned v, RankMethod m) { return {v, v, m, {}}; }
  bool known() const noexcept { return lo == hi; }
  unsigned value() const {
    if (!known()) throw Error(ErrorCode::CapExceeded, "rank unknown: " + cap_note);
    return lo;
  }
  std::string describe() const {
    if (known()) return std::to_string(lo);
    return "Unknown[" + std::to_string(lo) + "," + std::to_string(hi) + "](" + cap_note + ")";
  }
};

struct RankReport {
  RankValue dee_gens;  // d(G)
  RankValue rank;      // rk(G)
};

/// top/bottom is abelian: every commutator of generators of top lies in bottom.
inline bool section_is_abelian(const Group& top, const Group& bottom) {
  const auto& gens = top.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!bottom.contains(commutator(gens[i], gens[j]))) return false;
  return true;
}

/// Rank of an abelian section: max over p of log_p |{t : t^p ∈ bottom}/bottom|.
inline unsigned section_abelian_rank(const Group& top, const Group& bottom, const Config& cfg = {}) {
  if (!section_is_abelian(top, bottom))
    throw Error(ErrorCode::NotAbelian, "abelian rank of a non-abelian section");
  unsigned best = 0;
  const auto& elems = top.elements(cfg.enumeration_cap);
  for (std::uint64_t p : prime_factors(top.order() / bottom.order())) {
    std::uint64_t count = 0;
    for (const auto& x : elems)
      if (bottom.contains(power(x, p))) ++count;
    best = std::max(best, *exact_log(BigInt(count) / bottom.order(), p));
  }
  return best;
}

inline unsigned abelian_rank(const Group& a, const Config& cfg = {}) {
  return section_abelian_rank(a, a.subgroup_unchecked({}), cfg);
}

/// Preimage of Φ(top/bottom) for a p-group section: the normal closure of
/// bottom, commutators and p-th powers of generators.
inline Group section_frattini(const Group& top, const Group& bottom, std::uint64_t p) {
  std::vector<Perm> seed = bottom.generators();
  const auto& gens = top.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seed.push_back(power(gens[i], p));
    for (std::size_t j = i + 1; j < gens.size(); ++j) seed.push_back(commutator(gens[i], gens[j]));
  }
  return normal_closure_of(top, std::move(seed));
}

inline Group frattini_p(const Group& g, std::uint64_t p) {
  if (!is_p_group(g, p))
    throw Error(ErrorCode::NotPGroup, "order " + g.order().str() + " is not a power of " +
                                          std::to_string(p));
  return section_frattini(g, g.subgroup_unchecked({}), p);
}

namespace detail {

inline bool generates_section(const Group& top, const Group& bottom, std::vector<Perm> gens) {
  gens.insert(gens.end(), bottom.generators().begin(), bottom.generators().end());
  return Group(top.degree(), std::move(gens)).order() == top.order();
}

// Drops generators of top (in order) that are redundant modulo bottom.
inline std::vector<Perm> irredundant_generators(const Group& top, const Group& bottom,
                                                std::vector<Perm> gens) {
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<Perm> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (generates_section(top, bottom, rest)) gens = std::move(rest);
    else ++i;
  }
  return gens;
}

}  // namespace detail

/// d(top/bottom), bottom normal in top. Exact when the strategy ladder
/// (trivial, abelian, p-group, small table, pair search) finishes under the
/// caps; otherwise an interval.
inline RankValue min_generators_bounds(const Group& top, const Group& bottom, const Config& cfg = {}) {
  const BigInt index = top.order() / bottom.order();
  if (index == 1) return RankValue::exact(0, RankMethod::trivial);
  if (section_is_abelian(top, bottom))
    return RankValue::exact(section_abelian_rank(top, bottom, cfg), RankMethod::abelian_socle);
  if (auto pp = as_prime_power(index)) {
    const Group phi = section_frattini(top, bottom, pp->prime);
    return RankValue::exact(*exact_log(top.order() / phi.order(), pp->prime), RankMethod::frattini);
  }
  std::string note;
  if (index <= cfg.subgroup_cap) {
    try {
      return RankValue::exact(SmallGroup::from_section(top, bottom, cfg).min_generators(cfg),
                              RankMethod::exhaustive_tuples);
    } catch (const CapExceeded& e) {
      note = e.what();
    }
  }
  // Non-abelian, so at least two generators; also at least d of the abelianization.
  const Group top_derived = derived_subgroup(top);
  const Group ab_bottom = join(top_derived, bottom);
  unsigned lo = std::max(2u, section_abelian_rank(top, ab_bottom, cfg));
  const auto known = detail::irredundant_generators(top, bottom, top.generators());
  unsigned hi = static_cast<unsigned>(known.size());
  if (lo == 2 && hi > 2) {
    const auto& elems = top.elements(cfg.enumeration_cap);
    std::uint64_t tests = 0;
    for (std::size_t i = 1; i < elems.size() && tests < cfg.tuple_cap; ++i)
      for (std::size_t j = i + 1; j < elems.size() && tests < cfg.tuple_cap; ++j) {
        ++tests;
        if (detail::generates_section(top, bottom, {elems[i], elems[j]}))
          return RankValue::exact(2, RankMethod::exhaustive_tuples);
      }
    if (tests >= cfg.tuple_cap) note = "tuple cap " + std::to_string(cfg.tuple_cap) + " at k=2";
    else lo = 3;
  }
  if (lo >= hi) return RankValue::exact(hi, RankMethod::exhaustive_tuples);
  if (note.empty()) note = "pair search only";
  return RankValue{lo, hi, RankMethod::bounds, note};
}

/// Exact d(G); throws CapExceeded when only bounds are available.
inline unsigned min_generators(const Group& g, const Config& cfg = {}) {
  const auto v = min_generators_bounds(g, g.subgroup_unchecked({}), cfg);
  if (!v.known()) throw CapExceeded("min_generators " + v.cap_note, v.describe(), cfg.tuple_cap);
  return v.lo;
}

/// rk(top/bottom) = max d(H/bottom) over bottom ≤ H ≤ top.
///
/// Abelian sections use socle ranks (no lattice). Other sections need the
/// full subgroup lattice and are limited by cfg.subgroup_cap; past it the
/// result is an interval whose lower end comes from d and from the Sylow
/// sections, and whose upper end is log2 of the index.
inline RankValue section_rank(const Group& top, const Group& bottom, const Config& cfg = {}) {
  const BigInt index = top.order() / bottom.order();
  if (index == 1) return RankValue::exact(0, RankMethod::trivial);
  if (section_is_abelian(top, bottom))
    return RankValue::exact(section_abelian_rank(top, bottom, cfg), RankMethod::abelian_socle);
  if (index <= cfg.subgroup_cap)
    return RankValue::exact(SmallGroup::from_section(top, bottom, cfg).rank(),
                            RankMethod::subgroup_enumeration);

  unsigned lo = min_generators_bounds(top, bottom, cfg).lo;
  const unsigned hi = floor_log2(index);
  if (!as_prime_power(index)) {
    for (std::uint64_t p : prime_factors(index)) {
      const Group sp = sylow(top, p, cfg);
      const Group lifted = join(sp, bottom);
      lo = std::max(lo, section_rank(lifted, bottom, cfg).lo);
    }
  }
  return RankValue{std::min(lo, hi), hi, RankMethod::bounds,
                   "subgroup cap " + std::to_string(cfg.subgroup_cap) + " < index " + index.str()};
}

inline RankValue group_rank(const Group& g, const Config& cfg = {}) {
  return section_rank(g, g.subgroup_unchecked({}), cfg);
}

inline RankReport rank_report(const Group& g, const Config& cfg = {}) {
  const Group one = g.subgroup_unchecked({});
  return {min_generators_bounds(g, one, cfg), section_rank(g, one, cfg)};
}

/// Every subgroup of g exactly once, in order of increasing size.
inline std::vector<Group> all_subgroups(const Group& g, const Config& cfg = {}) {
  const auto table = SmallGroup::from_group(g, cfg);
  const auto& elems = g.elements(cfg.enumeration_cap);
  std::vector<Group> out;
  for (const auto& s : table.subgroups()) {
    std::vector<Perm> members;
    for (auto i : s.elements) members.push_back(elems[i]);
    out.push_back(subgroup_from_elements(g, members));
  }
  return out;
}

/// A subset of gens of size d(top/bottom) that still generates modulo bottom.
///
/// For p-group sections any irredundant generating set has size d (the
/// images form a basis of the Frattini quotient), so greedy removal in input
/// order lands on exactly d elements.
inline std::vector<Perm> shrink_generating_set_in_section(const Group& top, const Group& bottom,
                                                          std::vector<Perm> gens) {
  const BigInt index = top.order() / bottom.order();
  const auto pp = as_prime_power(index);
  if (!pp) throw Error(ErrorCode::NotPGroup, "section of order " + index.str() + " is not a p-group");
  if (!detail::generates_section(top, bottom, gens))
    throw Error(ErrorCode::NotGenerating, "the given elements do not generate the group");
  if (index == 1) return {};
  auto kept = detail::irredundant_generators(top, bottom, std::move(gens));
  const Group phi = section_frattini(top, bottom, pp->prime);
  const unsigned d = *exact_log(top.order() / phi.order(), pp->prime);
  if (kept.size() != d)
    throw Error(ErrorCode::CrossCheckFailed, "irredundant generating set of size " +
                                                 std::to_string(kept.size()) + " but d = " +
                                                 std::to_string(d));
  return kept;
}

inline std::vector<Perm> shrink_generating_set(const Group& g, std::vector<Perm> gens) {
  return shrink_generating_set_in_section(g, g.subgroup_unchecked({}), std::move(gens));
}

}  // namespace centerbound
