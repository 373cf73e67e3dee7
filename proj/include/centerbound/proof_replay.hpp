#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "centerbound/bigint.hpp"
#include "centerbound/config.hpp"
#include "centerbound/error.hpp"
#include "centerbound/group.hpp"
#include "centerbound/rank.hpp"
#include "centerbound/structure.hpp"

namespace centerbound {

// ---------------------------------------------------------------------------
// Socle chains
// ---------------------------------------------------------------------------

/// A descending chain S_0 = Ω₁(top/bottom) > S_1 > ... > S_l = bottom with
/// S_i = S_{i-1} ∩ H_i for chosen family members H_i.
struct SocleSelection {
  Group top;
  Group bottom;
  std::vector<Group> input_family;        // empty when the family was given implicitly
  std::vector<std::size_t> chosen_index;  // positions in the family
  std::vector<Group> chosen;
  std::vector<Group> chain;
};

/// Greedy socle-chain selection inside the abelian p-section top/bottom.
///
/// `cuts(i, V)` reports whether family member i strictly shrinks V (modulo
/// bottom); `member(i)` materializes it. The first member in index order that
/// shrinks V is taken. BadFamily when V is stuck above bottom.
template <class Cuts, class Member>
SocleSelection select_socle_chain_in_section(const Group& top, const Group& bottom, std::uint64_t p,
                                             std::size_t family_size, Cuts&& cuts,
                                             Member&& member, const Config& cfg = {}) {
  SocleSelection out{top, bottom, {}, {}, {}, {}};
  Group v = section_socle(top, bottom, p, cfg);
  out.chain.push_back(v);
  std::size_t next = 0;
  while (v.order() > bottom.order()) {
    std::size_t i = next;
    while (i < family_size && !cuts(i, v)) ++i;
    if (i == family_size)
      throw Error(ErrorCode::BadFamily, "the family does not intersect the socle down to the bottom");
    Group h = member(i);
    v = intersection(v, h, cfg);
    out.chosen_index.push_back(i);
    out.chosen.push_back(std::move(h));
    out.chain.push_back(v);
    // A member that has already been used cannot shrink the intersection again,
    // and earlier members contained the previous V, so they contain this one.
    next = i + 1;
  }
  return out;
}

/// For an abelian p-group A and subgroups of A with trivial intersection,
/// selects at most rk(A) of them whose intersection is already trivial.
inline SocleSelection select_socle_chain(const Group& a, const std::vector<Group>& family,
                                         const Config& cfg = {}) {
  if (!a.is_abelian()) throw Error(ErrorCode::NotAbelian, "socle chain in a non-abelian group");
  const auto prime = p_group_prime(a);
  if (!prime) throw Error(ErrorCode::NotPGroup, "order " + a.order().str() + " is not a prime power");
  const Group one = a.subgroup_unchecked({});
  if (*prime == 0) {
    SocleSelection out{a, one, family, {}, {}, {one}};
    return out;
  }
  for (const auto& h : family)
    if (!is_subgroup(h, a)) throw Error(ErrorCode::BadFamily, "family member is not a subgroup of A");
  Group meet = a;
  for (const auto& h : family) meet = intersection(meet, h, cfg);
  if (!meet.is_trivial())
    throw Error(ErrorCode::BadFamily, "family intersection has order " + meet.order().str());
  auto out = select_socle_chain_in_section(
      a, one, *prime, family.size(),
      [&](std::size_t i, const Group& v) { return !is_subgroup(v, family[i]); },
      [&](std::size_t i) { return family[i]; }, cfg);
  out.input_family = family;
  return out;
}

/// Subgroups H ≤ A with A/H cyclic, in lattice order. For abelian A their
/// intersection is trivial (characters separate points).
inline std::vector<Group> cyclic_quotient_family(const Group& a, const Config& cfg = {}) {
  if (!a.is_abelian()) throw Error(ErrorCode::NotAbelian, "cyclic quotient family of a non-abelian group");
  std::vector<Group> out;
  for (const auto& h : all_subgroups(a, cfg)) {
    const BigInt index = a.order() / h.order();
    BigInt exponent = 1;
    for (const auto& x : a.generators()) {
      // The order of xH: least k with x^k ∈ H, a divisor of the index.
      BigInt k = 1;
      Perm y = x;
      while (!h.contains(y)) {
        y = compose(y, x);
        ++k;
      }
      exponent = exponent / gcd(exponent, k) * k;
    }
    if (exponent == index) out.push_back(h);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commutator products [x_1,a_1]...[x_d,a_d]
// ---------------------------------------------------------------------------

/// Layered product sets L_0 = {1}, L_i = L_{i-1} · {[x, a_i] : x ∈ P} with one
/// predecessor per element (first writer wins).
class CommutatorLayers {
 public:
  CommutatorLayers(const Group& p, std::vector<Perm> anchors, const Config& cfg = {})
      : group_(p), anchors_(std::move(anchors)) {
    if (!p_group_prime(p)) throw Error(ErrorCode::NotPGroup, "order " + p.order().str());
    std::vector<Perm> gens = anchors_;
    const Group z = center(p, cfg);
    gens.insert(gens.end(), z.generators().begin(), z.generators().end());
    for (const auto& a : anchors_)
      if (!p.contains(a)) throw Error(ErrorCode::BadAnchors, to_cycle_string(a) + " is not in P");
    if (Group(p.degree(), gens).order() != p.order())
      throw Error(ErrorCode::BadAnchors, "anchors and Z(P) do not generate P");

    const auto& elems = p.elements(cfg.enumeration_cap);
    const std::size_t n = elems.size();
    std::vector<std::size_t> frontier{0};
    for (const auto& a : anchors_) {
      // Distinct values [x, a], each with the first x producing it.
      std::vector<std::int64_t> first_x(n, -1);
      std::vector<std::size_t> values;
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t c = *p.index_of(commutator(elems[x], a));
        if (first_x[c] < 0) {
          first_x[c] = static_cast<std::int64_t>(x);
          values.push_back(c);
        }
      }
      Layer layer{std::vector<std::int64_t>(n, -1), std::vector<std::int64_t>(n, -1)};
      std::vector<std::size_t> next;
      for (std::size_t e : frontier)
        for (std::size_t c : values) {
          const std::size_t f = *p.index_of(compose(elems[e], elems[c]));
          if (layer.prev[f] >= 0) continue;
          layer.prev[f] = static_cast<std::int64_t>(e);
          layer.via[f] = first_x[c];
          next.push_back(f);
        }
      layers_.push_back(std::move(layer));
      frontier = std::move(next);
    }
    last_.assign(n, false);
    for (std::size_t f : frontier) last_[f] = true;
  }

  std::size_t depth() const noexcept { return layers_.size(); }

  /// Size of L_d.
  std::size_t reach_size() const {
    return static_cast<std::size_t>(std::count(last_.begin(), last_.end(), true));
  }

  bool reaches(const Perm& w) const {
    auto i = group_.index_of(w);
    return i && last_[*i];
  }

  /// x_1..x_d with [x_1,a_1]···[x_d,a_d] = w, or nullopt when w ∉ L_d.
  std::optional<std::vector<Perm>> factorize(const Perm& w) const {
    auto idx = group_.index_of(w);
    if (!idx || !last_[*idx]) return std::nullopt;
    if (layers_.empty()) return std::vector<Perm>{};
    const auto& elems = group_.elements();
    std::vector<Perm> xs(layers_.size(), group_.identity());
    std::size_t cur = *idx;
    for (std::size_t i = layers_.size(); i-- > 0;) {
      xs[i] = elems[static_cast<std::size_t>(layers_[i].via[cur])];
      cur = static_cast<std::size_t>(layers_[i].prev[cur]);
    }
    return xs;
  }

  const std::vector<Perm>& anchors() const noexcept { return anchors_; }

 private:
  struct Layer {
    std::vector<std::int64_t> prev;
    std::vector<std::int64_t> via;
  };
  Group group_;
  std::vector<Perm> anchors_;
  std::vector<Layer> layers_;
  std::vector<bool> last_;
};

/// Product ∏ [x_i, a_i] in order.
inline Perm commutator_product(const std::vector<Perm>& xs, const std::vector<Perm>& anchors) {
  Perm acc = Perm::identity(anchors.empty() ? (xs.empty() ? 1 : xs[0].degree()) : anchors[0].degree());
  for (std::size_t i = 0; i < anchors.size(); ++i) acc = compose(acc, commutator(xs[i], anchors[i]));
  return acc;
}

/// Writes w ∈ P' as [x_1,a_1]···[x_d,a_d]. The result is verified by
/// multiplication before it is returned.
inline std::vector<Perm> factorize_commutator(const Group& p, const std::vector<Perm>& anchors,
                                              const Perm& w, const Config& cfg = {}) {
  CommutatorLayers layers(p, anchors, cfg);
  if (!derived_subgroup(p).contains(w))
    throw Error(ErrorCode::NotInDerived, to_cycle_string(w) + " is not in P'");
  auto xs = layers.factorize(w);
  if (!xs || commutator_product(*xs, anchors) != w)
    throw Error(ErrorCode::CrossCheckFailed,
                "layered product set misses " + to_cycle_string(w) + " although it lies in P'");
  return *xs;
}

// ---------------------------------------------------------------------------
// Witnesses for |C_G(G') : Z₂(G)| and |D : C_G(G')|
// ---------------------------------------------------------------------------

/// The constructive objects of one prime's step.
struct PrimeWitness {
  std::uint64_t prime = 0;
  std::vector<Perm> xs;
  std::vector<Perm> ys;  // only for the D-witness
  Group sylow;           // P
  Group tee;             // T = ⟨xs, ys⟩
  Group em;              // M with M/Z = C_{G/Z}(TZ/Z)
  std::vector<BigInt> chain_orders;  // socle chain (|S_i|), C_G(G')-witness only
  BigInt index = 1;      // |P : P∩Z₂(G)| resp. |P : P∩C_G(G')|
  BigInt index_m = 1;    // |P : P∩M|
  BigInt base = 1;       // |G'∩P : P∩Z|
  BigInt n_p = 1;        // p-part of |G' : Z|
  unsigned exponent = 0; // l resp. 2l: number of generators of T
  unsigned rank_cap = 0; // abelian rank bounding l (resp. d(G'/C_{G'}(P)))
  bool inclusion_ok = true;
  bool p_quotient_ok = true;  // G'/C_{G'}(P) is a p-group (D-witness)
  bool holds = true;
};

struct WitnessRecord {
  std::string lemma;  // "also" or "szivas"
  std::vector<PrimeWitness> primes;

  bool holds() const {
    return std::all_of(primes.begin(), primes.end(), [](const PrimeWitness& w) { return w.holds; });
  }
  BigInt total_index() const {
    BigInt t = 1;
    for (const auto& w : primes) t *= w.index;
    return t;
  }
};

namespace detail {
inline void finish_prime_witness(PrimeWitness& w) {
  w.holds = w.holds && w.inclusion_ok && w.p_quotient_ok && w.index <= w.index_m &&
            w.index_m <= ipow(w.base, w.exponent) && w.base <= w.n_p;
}
}  // namespace detail

/// For each prime p of |C_G(G')|: with P the Sylow p-subgroup of C_G(G'),
/// selects x_1..x_l ∈ G (l ≤ rk((P∩G')/(P∩Z))) whose centralizers in P∩G'
/// meet in P∩Z, forms T and M, and checks M∩P ≤ Z₂(G) together with
/// |P : P∩Z₂| ≤ |P : P∩M| ≤ |G'∩P : P∩Z|^l ≤ n_p^l.
inline WitnessRecord also_witness(const StructureReport& s, const Config& cfg = {}) {
  WitnessRecord rec{"also", {}};
  const Group& g = s.group;
  const Group& c = s.centralizer_of_derived;
  const auto& elems = g.elements(cfg.enumeration_cap);
  for (std::uint64_t p : prime_factors(c.order())) {
    PrimeWitness w;
    w.prime = p;
    w.sylow = sylow(c, p, cfg);
    const Group a = intersection(w.sylow, s.derived, cfg);
    const Group b = intersection(w.sylow, s.zed, cfg);
    w.base = a.order() / b.order();
    w.n_p = p_part(s.derived_mod_zed(), p);
    w.rank_cap = section_abelian_rank(a, b, cfg);
    auto sel = select_socle_chain_in_section(
        a, b, p, elems.size(),
        [&](std::size_t i, const Group& v) {
          for (const auto& y : v.generators())
            if (compose(y, elems[i]) != compose(elems[i], y)) return true;
          return false;
        },
        [&](std::size_t i) { return centralizer(a, std::span<const Perm>(&elems[i], 1), cfg); },
        cfg);
    for (auto i : sel.chosen_index) w.xs.push_back(elems[i]);
    for (const auto& sub : sel.chain) w.chain_orders.push_back(sub.order());
    w.exponent = static_cast<unsigned>(w.xs.size());
    w.tee = g.subgroup_unchecked(w.xs);
    w.em = relative_centralizer(g, w.tee.generators(), s.zed, cfg);
    const Group mp = intersection(w.em, w.sylow, cfg);
    w.inclusion_ok = is_subgroup(mp, s.second_center);
    w.index = w.sylow.order() / intersection(w.sylow, s.second_center, cfg).order();
    w.index_m = w.sylow.order() / mp.order();
    w.holds = w.exponent <= w.rank_cap;
    detail::finish_prime_witness(w);
    rec.primes.push_back(std::move(w));
  }
  return rec;
}

inline WitnessRecord also_witness(const Group& g, const Config& cfg = {}) {
  return also_witness(structure_report(g, cfg), cfg);
}

/// For each prime p of |D|: with P the Sylow p-subgroup of D, checks that
/// G'/C_{G'}(P) is a p-group, chooses commutators [x_i, y_i] generating it
/// (exactly d of them), forms T = ⟨x_i, y_i⟩ and M, and checks M∩P ≤ C_G(G')
/// together with |P : P∩C_G(G')| ≤ |P : P∩M| ≤ |G'∩P : P∩Z|^{2l} ≤ n_p^{2l}.
inline WitnessRecord szivas_witness(const StructureReport& s, const Config& cfg = {}) {
  WitnessRecord rec{"szivas", {}};
  const Group& g = s.group;
  const Group& gd = s.derived;
  for (std::uint64_t p : prime_factors(s.dee.order())) {
    PrimeWitness w;
    w.prime = p;
    w.sylow = sylow(s.dee, p, cfg);
    const Group cgp = centralizer(gd, w.sylow, cfg);
    const BigInt findex = gd.order() / cgp.order();
    w.p_quotient_ok = exact_log(findex, p).has_value();
    w.n_p = p_part(s.derived_mod_zed(), p);
    w.base = intersection(gd, w.sylow, cfg).order() / intersection(w.sylow, s.zed, cfg).order();

    // Commutator pairs whose values, with C_{G'}(P), generate G'.
    struct Pair {
      Perm x, y;
    };
    std::vector<Pair> pairs;
    std::vector<Perm> seed = cgp.generators();
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        pairs.push_back({gens[i], gens[j]});
        seed.push_back(commutator(gens[i], gens[j]));
      }
    Group span(g.degree(), seed);
    for (std::size_t k = 0; k < pairs.size() && span.order() < gd.order(); ++k)
      for (const auto& h : gens) {
        Pair q{conjugate(pairs[k].x, h), conjugate(pairs[k].y, h)};
        Perm c = commutator(q.x, q.y);
        if (span.contains(c)) continue;
        seed.push_back(c);
        span = Group(g.degree(), seed);
        pairs.push_back(std::move(q));
      }

    if (w.p_quotient_ok && findex > 1) {
      // Greedy removal modulo C_{G'}(P); irredundant sets of a p-group have size d.
      std::vector<std::size_t> keep(pairs.size());
      for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
      auto generates = [&](const std::vector<std::size_t>& idx) {
        std::vector<Perm> gs = cgp.generators();
        for (auto i : idx) gs.push_back(commutator(pairs[i].x, pairs[i].y));
        return Group(g.degree(), gs).order() == gd.order();
      };
      for (std::size_t i = 0; i < keep.size();) {
        auto rest = keep;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (generates(rest)) keep = std::move(rest);
        else ++i;
      }
      for (auto i : keep) {
        w.xs.push_back(pairs[i].x);
        w.ys.push_back(pairs[i].y);
      }
      w.rank_cap = min_generators_bounds(gd, cgp, cfg).value();
      if (w.xs.size() != w.rank_cap) w.holds = false;
    }
    std::vector<Perm> tgens = w.xs;
    tgens.insert(tgens.end(), w.ys.begin(), w.ys.end());
    w.exponent = static_cast<unsigned>(tgens.size());
    w.tee = g.subgroup_unchecked(tgens);
    w.em = relative_centralizer(g, w.tee.generators(), s.zed, cfg);
    const Group mp = intersection(w.em, w.sylow, cfg);
    w.inclusion_ok = is_subgroup(mp, s.centralizer_of_derived);
    w.index = w.sylow.order() / intersection(w.sylow, s.centralizer_of_derived, cfg).order();
    w.index_m = w.sylow.order() / mp.order();
    detail::finish_prime_witness(w);
    rec.primes.push_back(std::move(w));
  }
  return rec;
}

inline WitnessRecord szivas_witness(const Group& g, const Config& cfg = {}) {
  return szivas_witness(structure_report(g, cfg), cfg);
}

// ---------------------------------------------------------------------------
// Commutator maps
// ---------------------------------------------------------------------------

namespace detail {

// Calls f(a, b) on every pair of `elems` when the pair count fits the
// enumeration cap, otherwise on cfg.sample_pairs seeded random pairs.
template <class F>
bool for_pairs(const std::vector<Perm>& elems, const Config& cfg, F&& f) {
  const auto n = static_cast<std::uint64_t>(elems.size());
  if (n * n <= cfg.enumeration_cap) {
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (!f(a, b)) return false;
    return true;
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (std::uint64_t k = 0; k < cfg.sample_pairs; ++k)
    if (!f(elems[pick(rng)], elems[pick(rng)])) return false;
  return true;
}

}  // namespace detail

/// a ↦ [a, x] is a homomorphism C_G(G') → G'.
inline bool check_commutator_homomorphism(const Group& g, const Perm& x, const Config& cfg = {}) {
  if (!g.contains(x)) throw Error(ErrorCode::NotSubgroup, to_cycle_string(x) + " is not in G");
  const Group gd = derived_subgroup(g);
  const Group c = centralizer(g, gd, cfg);
  const auto& elems = c.elements(cfg.enumeration_cap);
  for (const auto& a : elems)
    if (!gd.contains(commutator(a, x))) return false;
  return detail::for_pairs(elems, cfg, [&](const Perm& a, const Perm& b) {
    return commutator(compose(a, b), x) == compose(commutator(a, x), commutator(b, x));
  });
}

enum class PlLemma { pl1, pl2 };

/// Embedding of C_G(G')/Z₂(G) (pl1) or D/C_G(G') (pl2) into a direct power
/// of G'/Z through the maps a ↦ [a, t]Z, for a p-group G.
struct PlEmbeddingReport {
  PlLemma which = PlLemma::pl1;
  std::uint64_t prime = 0;
  unsigned maps = 0;             // number of maps f_t
  RankValue r;                   // rk(G'/Z)
  RankValue section;             // rk(C/Z₂) resp. rk(D/C), computed directly
  bool homomorphisms_ok = true;  // every f_t is a homomorphism modulo Z
  bool kernel_inside = true;     // ∩ ker f_t ≤ Z₂ resp. ≤ C
  bool computable = true;
  bool holds = true;             // section ≤ maps·r and maps ≤ r (resp. 2·maps·r ≤ 2r²)
};

inline PlEmbeddingReport rank_embedding_pl(const StructureReport& s, PlLemma which,
                                           const WitnessRecord& witness, const Config& cfg = {}) {
  const auto prime = p_group_prime(s.group);
  if (!prime) throw Error(ErrorCode::NotPGroup, "order " + s.group.order().str());
  PlEmbeddingReport out;
  out.which = which;
  out.prime = *prime;
  out.r = section_rank(s.derived, s.zed, cfg);
  const Group& domain = which == PlLemma::pl1 ? s.centralizer_of_derived : s.dee;
  const Group& target = which == PlLemma::pl1 ? s.second_center : s.centralizer_of_derived;
  out.section = section_rank(domain, target, cfg);

  std::vector<Perm> ts;
  unsigned pairs_or_elems = 0;
  for (const auto& w : witness.primes) {
    ts.insert(ts.end(), w.xs.begin(), w.xs.end());
    ts.insert(ts.end(), w.ys.begin(), w.ys.end());
    pairs_or_elems += static_cast<unsigned>(w.xs.size());
  }
  out.maps = static_cast<unsigned>(ts.size());

  const auto& elems = domain.elements(cfg.enumeration_cap);
  for (const auto& t : ts) {
    out.homomorphisms_ok = out.homomorphisms_ok &&
        detail::for_pairs(elems, cfg, [&](const Perm& a, const Perm& b) {
          const Perm lhs = commutator(compose(a, b), t);
          const Perm rhs = compose(commutator(a, t), commutator(b, t));
          return s.zed.contains(compose(inverse(rhs), lhs));
        });
  }
  const Group kernel = relative_centralizer(domain, ts, s.zed, cfg);
  out.kernel_inside = is_subgroup(kernel, target);

  // pl1: rk ≤ l·r with l ≤ r; pl2: rk ≤ 2l·r with l ≤ r.
  if (out.section.hi <= out.maps * out.r.lo && pairs_or_elems <= out.r.lo) {
    out.holds = true;
  } else if (out.section.known() && out.r.known()) {
    out.holds = false;
  } else {
    out.computable = false;
    out.holds = false;
  }
  out.holds = out.holds && out.homomorphisms_ok && out.kernel_inside;
  return out;
}

inline PlEmbeddingReport rank_embedding_pl(const Group& g, PlLemma which, const Config& cfg = {}) {
  if (!p_group_prime(g)) throw Error(ErrorCode::NotPGroup, "order " + g.order().str());
  const auto s = structure_report(g, cfg);
  const auto w = which == PlLemma::pl1 ? also_witness(s, cfg) : szivas_witness(s, cfg);
  return rank_embedding_pl(s, which, w, cfg);
}

}  // namespace centerbound
