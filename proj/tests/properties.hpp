#pragma once

// Property checks shared by the unit tests and the acceptance run.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "centerbound/centerbound.hpp"

namespace properties {

using namespace centerbound;

struct AbelInstance {
  Group a;
  std::vector<Group> family;
  std::string label;
};

/// A random abelian p-group of order at most 3^5 (product of cyclic factors)
/// with a random subgroup family whose intersection is trivial.
inline AbelInstance random_abel_instance(std::mt19937_64& rng) {
  static const std::uint64_t primes[] = {2, 3, 5};
  const std::uint64_t p = primes[rng() % 3];
  const unsigned budget = p == 2 ? 7 : p == 3 ? 5 : 3;  // log_p of the order bound
  unsigned used = 0;
  Group a = cyclic_group(1);
  std::string label;
  while (used < budget) {
    const unsigned e = 1 + static_cast<unsigned>(rng() % std::min(3u, budget - used));
    const auto factor = cyclic_group(static_cast<std::size_t>(ipow(BigInt(p), e)));
    a = a.degree() == 1 && a.is_trivial() ? factor : direct_product(a, factor);
    label += (label.empty() ? "C" : "xC") + ipow(BigInt(p), e).str();
    used += e;
    if (rng() % 3 == 0) break;
  }
  AbelInstance inst{a, {}, label};
  const int members = 2 + static_cast<int>(rng() % 5);
  for (int i = 0; i < members; ++i) {
    std::vector<Perm> gens{a.random_element(rng)};
    if (rng() % 2) gens.push_back(a.random_element(rng));
    inst.family.push_back(a.subgroup(gens));
  }
  Group meet = a;
  for (const auto& h : inst.family) meet = intersection(meet, h);
  if (!meet.is_trivial()) {
    auto extra = cyclic_quotient_family(a);
    std::shuffle(extra.begin(), extra.end(), rng);
    for (const auto& h : extra) {
      if (meet.is_trivial()) break;
      if (is_subgroup(meet, h)) continue;
      inst.family.push_back(h);
      meet = intersection(meet, h);
    }
  }
  std::shuffle(inst.family.begin(), inst.family.end(), rng);
  return inst;
}

/// The selection has at most rk(A) members, trivial intersection, and a
/// strictly descending chain of intersections with family members.
inline bool check_abel(const AbelInstance& inst, std::string* why) {
  const auto sel = select_socle_chain(inst.a, inst.family);
  const unsigned r = abelian_rank(inst.a);
  if (sel.chosen.size() > r) return *why = "chose " + std::to_string(sel.chosen.size()) + " > rank", false;
  Group meet = inst.a;
  for (const auto& h : sel.chosen) meet = intersection(meet, h);
  if (!meet.is_trivial()) return *why = "intersection of chosen has order " + meet.order().str(), false;
  if (sel.chain.size() != sel.chosen.size() + 1) return *why = "chain length", false;
  const auto p = *p_group_prime(inst.a);
  if (p && !same_group(sel.chain.front(), socle_p(inst.a, p))) return *why = "chain does not start at the socle", false;
  for (std::size_t i = 0; i < sel.chosen.size(); ++i) {
    if (sel.chain[i + 1].order() >= sel.chain[i].order()) return *why = "chain not strictly descending", false;
    if (!same_group(sel.chain[i + 1], intersection(sel.chain[i], sel.chosen[i])))
      return *why = "chain step is not an intersection", false;
    if (!same_group(sel.chosen[i], inst.family[sel.chosen_index[i]])) return *why = "chosen not from family", false;
  }
  if (!sel.chain.back().is_trivial()) return *why = "chain does not end at 1", false;
  return true;
}

/// With anchors from shrink_generating_set, every w ∈ P' is reached and its
/// factorization multiplies back to w.
inline bool check_factorize_completeness(const Group& p, std::string* why, const Config& cfg = {}) {
  const auto anchors = shrink_generating_set(p, p.generators());
  const CommutatorLayers layers(p, anchors, cfg);
  const Group pd = derived_subgroup(p);
  for (const auto& w : pd.elements(cfg.enumeration_cap)) {
    if (!layers.reaches(w)) return *why = "L_d misses " + to_cycle_string(w), false;
    const auto xs = factorize_commutator(p, anchors, w, cfg);
    if (xs.size() != anchors.size() || commutator_product(xs, anchors) != w)
      return *why = "bad factorization of " + to_cycle_string(w), false;
    for (const auto& x : xs)
      if (!p.contains(x)) return *why = "x_i outside P", false;
  }
  return true;
}

}  // namespace properties
