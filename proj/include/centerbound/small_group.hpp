#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>
#include <vector>

#include "centerbound/bigint.hpp"
#include "centerbound/config.hpp"
#include "centerbound/error.hpp"
#include "centerbound/group.hpp"

namespace centerbound {

/// A group of at most `subgroup_cap` elements held as a multiplication table.
///
/// Element 0 is the identity. Built either from a permutation group or from a
/// section top/bottom (bottom normal in top), in which case the elements are
/// the right cosets of bottom.
class SmallGroup {
 public:
  using Index = std::uint32_t;
  using Bits = std::vector<std::uint64_t>;

  struct Subgroup {
    Bits bits;
    std::vector<Index> elements;    // sorted
    std::vector<Index> generators;  // a generating set of minimum size
    unsigned min_generators = 0;
  };

  static SmallGroup from_group(const Group& g, const Config& cfg) {
    if (g.order() > cfg.subgroup_cap)
      throw CapExceeded("subgroup cap", g.order().str(), cfg.subgroup_cap);
    const auto& elems = g.elements(cfg.enumeration_cap);
    SmallGroup s(elems.size());
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b)
        s.mul_[a * s.n_ + b] = static_cast<Index>(*g.index_of(compose(elems[a], elems[b])));
    s.finish();
    return s;
  }

  /// The quotient top/bottom; bottom must be normal in top.
  static SmallGroup from_section(const Group& top, const Group& bottom, const Config& cfg) {
    const BigInt index = top.order() / bottom.order();
    if (index > cfg.subgroup_cap)
      throw CapExceeded("subgroup cap", index.str(), cfg.subgroup_cap);
    const auto& elems = top.elements(cfg.enumeration_cap);
    const auto& sub = bottom.elements(cfg.enumeration_cap);
    std::vector<Index> label(elems.size(), kNone);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (label[i] != kNone) continue;
      const auto id = static_cast<Index>(reps.size());
      reps.push_back(i);
      for (const auto& b : sub) label[*top.index_of(compose(b, elems[i]))] = id;
    }
    SmallGroup s(reps.size());
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = 0; b < reps.size(); ++b)
        s.mul_[a * s.n_ + b] =
            label[*top.index_of(compose(elems[reps[a]], elems[reps[b]]))];
    s.finish();
    return s;
  }

  std::size_t order() const noexcept { return n_; }
  Index mul(Index a, Index b) const noexcept { return mul_[a * n_ + b]; }
  Index inv(Index a) const noexcept { return inv_[a]; }
  Index comm(Index a, Index b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Index pow(Index a, std::uint64_t e) const noexcept {
    Index r = 0;
    for (std::uint64_t k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }
  std::uint64_t element_order(Index a) const noexcept {
    std::uint64_t k = 1;
    for (Index x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (Index a = 0; a < n_; ++a)
      for (Index b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Subgroup generated by gens, as a sorted element list.
  std::vector<Index> closure(const std::vector<Index>& gens) const {
    std::vector<char> seen(n_, 0);
    std::vector<Index> list{0};
    seen[0] = 1;
    for (std::size_t k = 0; k < list.size(); ++k)
      for (Index g : gens) {
        const Index x = mul(list[k], g);
        if (!seen[x]) {
          seen[x] = 1;
          list.push_back(x);
        }
      }
    std::sort(list.begin(), list.end());
    return list;
  }

  /// Rank of an abelian group: max over p of log_p #{x : x^p = 1}.
  unsigned abelian_rank() const {
    if (!is_abelian()) throw Error(ErrorCode::NotAbelian, "abelian rank of a non-abelian group");
    unsigned best = 0;
    for (std::uint64_t p : prime_factors(BigInt(n_))) {
      std::uint64_t count = 0;
      for (Index a = 0; a < n_; ++a)
        if (pow(a, p) == 0) ++count;
      best = std::max(best, *exact_log(BigInt(count), p));
    }
    return best;
  }

  /// Exact minimal number of generators.
  ///
  /// Ladder: trivial, abelian (socle ranks), p-group (Frattini quotient),
  /// otherwise tuples of cyclic-subgroup representatives for increasing k,
  /// starting at d(G/G'). Throws CapExceeded past cfg.tuple_cap tests.
  unsigned min_generators(const Config& cfg) const {
    if (n_ == 1) return 0;
    if (is_abelian()) return abelian_rank();
    if (auto pp = as_prime_power(BigInt(n_))) {
      std::vector<Index> gens;
      for (Index a = 0; a < n_; ++a) {
        gens.push_back(pow(a, pp->prime));
        for (Index b = 0; b < a; ++b) gens.push_back(comm(a, b));
      }
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      const auto frattini = closure(gens);
      return *exact_log(BigInt(n_ / frattini.size()), pp->prime);
    }
    unsigned k = std::max(1u, abelianization_rank());
    const auto reps = cyclic_representatives();
    std::uint64_t tests = 0;
    for (;; ++k) {
      std::vector<std::size_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      if (k > reps.size()) break;
      for (;;) {
        std::vector<Index> gens;
        for (auto i : pick) gens.push_back(reps[i]);
        if (++tests > cfg.tuple_cap)
          throw CapExceeded("tuple cap (k=" + std::to_string(k) + ")", std::to_string(tests),
                            cfg.tuple_cap);
        if (closure(gens).size() == n_) return k;
        std::size_t pos = k;
        while (pos > 0 && pick[pos - 1] == reps.size() - k + pos - 1) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t i = pos; i < k; ++i) pick[i] = pick[i - 1] + 1;
      }
    }
    return static_cast<unsigned>(reps.size());
  }

  /// All subgroups, each with its minimal generator count.
  ///
  /// Cyclic extension from the trivial subgroup in order of increasing size:
  /// every subgroup H != 1 equals ⟨K, x⟩ for a proper K, and d(H) is the
  /// minimum of d(K) + 1 over all such pairs. Deduplicated by element set.
  std::vector<Subgroup> subgroups() const {
    std::vector<Subgroup> subs;
    std::unordered_map<Bits, std::size_t, BitsHash> lookup;
    using Entry = std::pair<std::size_t, std::size_t>;  // (order, id)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pending;

    auto add = [&](std::vector<Index> elems, std::vector<Index> gens) {
      Bits bits = to_bits(elems);
      auto it = lookup.find(bits);
      if (it != lookup.end()) {
        auto& s = subs[it->second];
        if (gens.size() < s.generators.size()) {
          s.generators = std::move(gens);
          s.min_generators = static_cast<unsigned>(s.generators.size());
        }
        return;
      }
      Subgroup s;
      s.bits = bits;
      s.elements = std::move(elems);
      s.min_generators = static_cast<unsigned>(gens.size());
      s.generators = std::move(gens);
      lookup.emplace(std::move(bits), subs.size());
      pending.emplace(s.elements.size(), subs.size());
      subs.push_back(std::move(s));
    };

    add({0}, {});
    while (!pending.empty()) {
      const std::size_t id = pending.top().second;
      pending.pop();
      const Bits kbits = subs[id].bits;
      const std::vector<Index> kelems = subs[id].elements;
      const std::vector<Index> kgens = subs[id].generators;
      std::vector<char> covered(n_, 0);
      for (Index k : kelems) covered[k] = 1;
      for (Index x = 0; x < n_; ++x) {
        if (covered[x]) continue;
        for (Index k : kelems) {
          covered[mul(k, x)] = 1;
          covered[mul(x, k)] = 1;
        }
        std::vector<Index> gens = kgens;
        gens.push_back(x);
        auto elems = closure(gens);
        add(std::move(elems), std::move(gens));
      }
    }
    std::stable_sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
      return a.elements.size() < b.elements.size();
    });
    return subs;
  }

  /// rk(G) = max d(H) over all subgroups; abelian groups use socle ranks.
  unsigned rank() const {
    if (n_ == 1) return 0;
    if (is_abelian()) return abelian_rank();
    unsigned best = 0;
    for (const auto& s : subgroups()) best = std::max(best, s.min_generators);
    return best;
  }

  bool is_normal(const std::vector<Index>& elems) const {
    std::vector<char> in(n_, 0);
    for (Index e : elems) in[e] = 1;
    for (Index e : elems)
      for (Index g = 0; g < n_; ++g)
        if (!in[mul(mul(inv(g), e), g)]) return false;
    return true;
  }

 private:
  static constexpr Index kNone = static_cast<Index>(-1);

  struct BitsHash {
    std::size_t operator()(const Bits& b) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (auto w : b) {
        h ^= w;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

  explicit SmallGroup(std::size_t n) : n_(n), mul_(n * n), inv_(n) {}

  void finish() {
    for (Index a = 0; a < n_; ++a)
      for (Index b = 0; b < n_; ++b)
        if (mul(a, b) == 0) {
          inv_[a] = b;
          break;
        }
  }

  Bits to_bits(const std::vector<Index>& elems) const {
    Bits b((n_ + 63) / 64, 0);
    for (Index e : elems) b[e / 64] |= std::uint64_t{1} << (e % 64);
    return b;
  }

  // d(G/G') from the abelianization, a lower bound for d(G).
  unsigned abelianization_rank() const {
    std::vector<Index> comms;
    for (Index a = 0; a < n_; ++a)
      for (Index b = 0; b < a; ++b) comms.push_back(comm(a, b));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    const auto derived = closure(comms);
    std::vector<char> in(n_, 0);
    for (Index e : derived) in[e] = 1;
    unsigned best = 0;
    const std::size_t index = n_ / derived.size();
    for (std::uint64_t p : prime_factors(BigInt(index))) {
      std::uint64_t count = 0;
      for (Index a = 0; a < n_; ++a)
        if (in[pow(a, p)]) ++count;
      best = std::max(best, *exact_log(BigInt(count / derived.size()), p));
    }
    return best;
  }

  // One generator per cyclic subgroup; replacing a tuple entry by another
  // generator of the same cyclic subgroup leaves the generated group unchanged.
  std::vector<Index> cyclic_representatives() const {
    std::vector<Index> reps;
    std::unordered_map<Bits, bool, BitsHash> seen;
    for (Index a = 1; a < n_; ++a)
      if (seen.emplace(to_bits(closure({a})), true).second) reps.push_back(a);
    return reps;
  }

  std::size_t n_;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
};

}  // namespace centerbound
