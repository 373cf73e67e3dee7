#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "centerbound/bigint.hpp"
#include "centerbound/config.hpp"
#include "centerbound/error.hpp"
#include "centerbound/perm.hpp"

namespace centerbound {

/// A permutation group given by generators, with a base and strong generating
/// set built eagerly by deterministic Schreier-Sims.
///
/// Groups are cheap to copy (shared immutable state). The only lazily filled
/// cache is the element list, which is guarded internally. A group created
/// through subgroup() or one of the structure operations remembers its parent.
class Group {
 public:
  Group() : Group(1) {}

  explicit Group(std::size_t degree, std::vector<Perm> generators = {})
      : state_(std::make_shared<State>()) {
    if (degree == 0) throw Error(ErrorCode::DegreeViolation, "group degree must be positive");
    state_->degree = degree;
    std::unordered_set<Perm, PermHash> seen;
    for (auto& g : generators) {
      if (g.degree() != degree)
        throw Error(ErrorCode::DegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                                   " in group of degree " + std::to_string(degree));
      if (g.is_identity() || !seen.insert(g).second) continue;
      state_->generators.push_back(std::move(g));
    }
    build_bsgs();
  }

  static Group trivial(std::size_t degree) { return Group(degree); }

  std::size_t degree() const noexcept { return state_->degree; }
  const std::vector<Perm>& generators() const noexcept { return state_->generators; }
  const BigInt& order() const noexcept { return state_->order; }
  bool is_trivial() const noexcept { return state_->order == 1; }
  Perm identity() const { return Perm::identity(degree()); }

  /// Base points (0-based) of the stabilizer chain.
  std::vector<std::size_t> base() const {
    std::vector<std::size_t> b;
    for (const auto& level : state_->levels) b.push_back(level.base);
    return b;
  }

  /// Orbit sizes of the stabilizer chain; their product is the order.
  std::vector<std::size_t> transversal_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& level : state_->levels) s.push_back(level.orbit.size());
    return s;
  }

  bool contains(const Perm& p) const {
    if (p.degree() != degree())
      throw Error(ErrorCode::DegreeMismatch, "membership test with degree " +
                                                 std::to_string(p.degree()) + " in degree " +
                                                 std::to_string(degree()));
    auto [residue, level] = strip(p, 0);
    return level == state_->levels.size() && residue.is_identity();
  }

  /// Every element exactly once, identity first, in stabilizer-chain order.
  const std::vector<Perm>& elements(std::uint64_t cap = Config{}.enumeration_cap) const {
    std::lock_guard lock(state_->cache_mutex);
    if (!state_->elements_built) {
      if (order() > cap) throw CapExceeded("enumeration cap", order().str(), cap);
      std::vector<Perm> list{identity()};
      for (auto level = state_->levels.rbegin(); level != state_->levels.rend(); ++level) {
        std::vector<Perm> next;
        next.reserve(list.size() * level->transversal.size());
        for (const auto& a : list)
          for (const auto& t : level->transversal) next.push_back(compose(a, t));
        list = std::move(next);
      }
      state_->index.reserve(list.size());
      for (std::size_t i = 0; i < list.size(); ++i) state_->index.emplace(list[i], i);
      state_->elements = std::move(list);
      state_->elements_built = true;
    }
    return state_->elements;
  }

  /// Position of p in elements(); enumerates the group on first use.
  std::optional<std::size_t> index_of(const Perm& p,
                                      std::uint64_t cap = Config{}.enumeration_cap) const {
    elements(cap);
    std::lock_guard lock(state_->cache_mutex);
    auto it = state_->index.find(p);
    if (it == state_->index.end()) return std::nullopt;
    return it->second;
  }

  /// Uniformly random element (product of random transversal entries).
  template <class Rng>
  Perm random_element(Rng& rng) const {
    Perm g = identity();
    for (auto level = state_->levels.rbegin(); level != state_->levels.rend(); ++level) {
      std::uniform_int_distribution<std::size_t> pick(0, level->transversal.size() - 1);
      g = compose(g, level->transversal[pick(rng)]);
    }
    return g;
  }

  bool is_abelian() const {
    const auto& gens = generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    return true;
  }

  std::optional<Group> parent() const {
    if (!state_->parent) return std::nullopt;
    Group g;
    g.state_ = state_->parent;
    return g;
  }

  /// Subgroup generated by gens; every generator must lie in this group.
  Group subgroup(std::vector<Perm> gens) const {
    for (const auto& g : gens)
      if (!contains(g))
        throw Error(ErrorCode::NotSubgroup, to_cycle_string(g) + " is not in the parent group");
    Group h(degree(), std::move(gens));
    h.state_->parent = state_;
    return h;
  }

  /// Same as subgroup() for generators already known to lie in this group.
  Group subgroup_unchecked(std::vector<Perm> gens) const {
    Group h(degree(), std::move(gens));
    h.state_->parent = state_;
    return h;
  }

  /// Sifts p through the chain starting at `from`. Returns the residue and the
  /// level at which sifting stopped (levels count when it passed every level).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const {
    return strip_levels(state_->levels, std::move(g), from);
  }

 private:
  struct Level {
    std::size_t base = 0;
    std::vector<Perm> gens;
    std::vector<std::int32_t> slot;  // point -> position in orbit, or -1
    std::vector<Perm::Point> orbit;
    std::vector<Perm> transversal;   // transversal[k] maps base to orbit[k]
    std::vector<Perm> inverse_transversal;
  };

  struct State {
    std::size_t degree = 1;
    std::vector<Perm> generators;
    std::vector<Level> levels;
    BigInt order = 1;
    std::shared_ptr<State> parent;
    std::mutex cache_mutex;
    bool elements_built = false;
    std::vector<Perm> elements;
    std::unordered_map<Perm, std::size_t, PermHash> index;
  };

  static std::pair<Perm, std::size_t> strip_levels(const std::vector<Level>& levels, Perm g,
                                                   std::size_t from) {
    for (std::size_t l = from; l < levels.size(); ++l) {
      const auto& level = levels[l];
      const std::int32_t s = level.slot[g[level.base]];
      if (s < 0) return {std::move(g), l};
      g = compose(g, level.inverse_transversal[static_cast<std::size_t>(s)]);
    }
    return {std::move(g), levels.size()};
  }

  void rebuild_orbit(Level& level) const {
    const std::size_t n = degree();
    level.slot.assign(n, -1);
    level.orbit.assign(1, static_cast<Perm::Point>(level.base));
    level.transversal.assign(1, identity());
    level.slot[level.base] = 0;
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      for (const auto& s : level.gens) {
        const auto pt = s[level.orbit[k]];
        if (level.slot[pt] >= 0) continue;
        level.slot[pt] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(pt);
        level.transversal.push_back(compose(level.transversal[k], s));
      }
    }
    level.inverse_transversal.clear();
    level.inverse_transversal.reserve(level.transversal.size());
    for (const auto& t : level.transversal) level.inverse_transversal.push_back(inverse(t));
  }

  // Deterministic Schreier-Sims: every Schreier generator of every level is
  // sifted through the deeper levels until all of them sift to the identity.
  void build_bsgs() {
    auto& levels = state_->levels;
    for (const auto& s : state_->generators) {
      bool moves_base = false;
      for (const auto& level : levels)
        if (s[level.base] != level.base) moves_base = true;
      if (!moves_base) {
        Level level;
        level.base = s.first_moved();
        levels.push_back(std::move(level));
      }
    }
    for (std::size_t l = 0; l < levels.size(); ++l) {
      for (const auto& s : state_->generators) {
        bool fixes_prefix = true;
        for (std::size_t k = 0; k < l; ++k)
          if (s[levels[k].base] != levels[k].base) fixes_prefix = false;
        if (fixes_prefix) levels[l].gens.push_back(s);
      }
      rebuild_orbit(levels[l]);
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
    while (i >= 0) {
      const auto li = static_cast<std::size_t>(i);
      bool extended = false;
      for (std::size_t k = 0; k < levels[li].orbit.size() && !extended; ++k) {
        for (std::size_t si = 0; si < levels[li].gens.size() && !extended; ++si) {
          const Level& level = levels[li];
          const Perm& s = level.gens[si];
          const auto image = s[level.orbit[k]];
          const auto slot = static_cast<std::size_t>(level.slot[image]);
          Perm h = compose(compose(level.transversal[k], s), level.inverse_transversal[slot]);
          if (h.is_identity()) continue;
          auto [residue, j] = strip_levels(levels, std::move(h), li + 1);
          if (residue.is_identity()) continue;
          if (j == levels.size()) {
            Level fresh;
            fresh.base = residue.first_moved();
            levels.push_back(std::move(fresh));
          }
          for (std::size_t l = li + 1; l <= j; ++l) {
            levels[l].gens.push_back(residue);
            rebuild_orbit(levels[l]);
          }
          i = static_cast<std::ptrdiff_t>(j);
          extended = true;
        }
      }
      if (!extended) --i;
    }

    BigInt order = 1;
    for (const auto& level : levels) order *= level.orbit.size();
    state_->order = order;
  }

  std::shared_ptr<State> state_;
};

/// Every generator of h lies in g.
inline bool is_subgroup(const Group& h, const Group& g) {
  if (h.degree() != g.degree()) return false;
  for (const auto& x : h.generators())
    if (!g.contains(x)) return false;
  return true;
}

inline bool same_group(const Group& a, const Group& b) {
  return a.order() == b.order() && is_subgroup(a, b);
}

/// Subgroup of `parent` whose element set is `elems` (which must be closed).
/// Generators are chosen greedily in input order, so at most log2|H| of them.
inline Group subgroup_from_elements(const Group& parent, std::span<const Perm> elems) {
  std::vector<Perm> gens;
  Group h(parent.degree());
  const BigInt target = elems.size();
  for (const auto& e : elems) {
    if (h.order() == target) break;
    if (h.contains(e)) continue;
    gens.push_back(e);
    h = Group(parent.degree(), gens);
  }
  return parent.subgroup_unchecked(std::move(gens));
}

/// ⟨a, b⟩ inside the parent of a (or a itself).
inline Group join(const Group& a, const Group& b) {
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  if (auto p = a.parent()) return p->subgroup_unchecked(std::move(gens));
  return Group(a.degree(), std::move(gens));
}

/// Smallest subgroup containing `seed` that is normalized by every generator
/// of `ambient`. Conjugating by generators suffices in a finite group.
inline Group normal_closure_of(const Group& ambient, std::vector<Perm> seed) {
  Group n(ambient.degree(), seed);
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Perm> current = n.generators();
    for (const auto& x : current) {
      for (const auto& g : ambient.generators()) {
        Perm c = conjugate(x, g);
        if (n.contains(c)) continue;
        seed.push_back(std::move(c));
        n = Group(ambient.degree(), seed);
        changed = true;
      }
    }
  }
  return ambient.subgroup_unchecked(n.generators());
}

inline Group normal_closure(const Group& ambient, const Group& h) {
  return normal_closure_of(ambient, h.generators());
}

/// n is normalized by every generator of g (and n ≤ g).
inline bool is_normal(const Group& n, const Group& g) {
  if (!is_subgroup(n, g)) return false;
  for (const auto& x : n.generators())
    for (const auto& s : g.generators())
      if (!n.contains(conjugate(x, s))) return false;
  return true;
}

}  // namespace centerbound
