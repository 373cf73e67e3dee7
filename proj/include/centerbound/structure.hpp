#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "centerbound/bigint.hpp"
#include "centerbound/config.hpp"
#include "centerbound/error.hpp"
#include "centerbound/group.hpp"

namespace centerbound {

// Centralizers, normalizers and the centre-type subgroups are computed by
// filtering the element list under cfg.enumeration_cap.

/// Elements of g passing `keep`, as a subgroup of g. The predicate must
/// select a subgroup.
template <class Pred>
Group filter_subgroup(const Group& g, const Config& cfg, Pred&& keep) {
  std::vector<Perm> kept;
  for (const auto& x : g.elements(cfg.enumeration_cap))
    if (keep(x)) kept.push_back(x);
  return subgroup_from_elements(g, kept);
}

inline Group centralizer(const Group& g, std::span<const Perm> s, const Config& cfg = {}) {
  return filter_subgroup(g, cfg, [&](const Perm& x) {
    for (const auto& y : s)
      if (compose(x, y) != compose(y, x)) return false;
    return true;
  });
}

inline Group centralizer(const Group& g, const Group& h, const Config& cfg = {}) {
  return centralizer(g, std::span<const Perm>(h.generators()), cfg);
}

inline Group center(const Group& g, const Config& cfg = {}) { return centralizer(g, g, cfg); }

/// [A, B]: commutators of generators, closed under conjugation by ⟨A, B⟩.
inline Group mutual_commutator(const Group& a, const Group& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorCode::DegreeMismatch, "mutual commutator of groups of different degree");
  std::vector<Perm> seed;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      Perm c = commutator(x, y);
      if (!c.is_identity()) seed.push_back(std::move(c));
    }
  return normal_closure_of(join(a, b), std::move(seed));
}

inline Group derived_subgroup(const Group& g) {
  return normal_closure_of(g, [&] {
    std::vector<Perm> seed;
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) seed.push_back(commutator(gens[i], gens[j]));
    return seed;
  }());
}

/// {x ∈ g : [x, s] ∈ z for every s in tests}.
inline Group relative_centralizer(const Group& g, std::span<const Perm> tests, const Group& z,
                                  const Config& cfg = {}) {
  return filter_subgroup(g, cfg, [&](const Perm& x) {
    for (const auto& s : tests)
      if (!z.contains(commutator(x, s))) return false;
    return true;
  });
}

/// Z₂(G) = {g : [g, x] ∈ Z(G) for every generator x of G}.
inline Group second_center(const Group& g, const Config& cfg = {}) {
  const Group z = center(g, cfg);
  return relative_centralizer(g, g.generators(), z, cfg);
}

/// D = {g ∈ G : [g, G'] ⊆ Z(G)}, tested on generators of G'.
inline Group dee_subgroup(const Group& g, const Config& cfg = {}) {
  const Group z = center(g, cfg);
  const Group d = derived_subgroup(g);
  return relative_centralizer(g, d.generators(), z, cfg);
}

inline bool normalizes(const Perm& x, const Group& h) {
  for (const auto& y : h.generators())
    if (!h.contains(conjugate(y, x))) return false;
  return true;
}

inline Group normalizer(const Group& g, const Group& h, const Config& cfg = {}) {
  return filter_subgroup(g, cfg, [&](const Perm& x) { return normalizes(x, h); });
}

/// A ∩ B by filtering the smaller of the two.
inline Group intersection(const Group& a, const Group& b, const Config& cfg = {}) {
  const bool a_small = a.order() <= b.order();
  const Group& small = a_small ? a : b;
  const Group& other = a_small ? b : a;
  std::vector<Perm> kept;
  for (const auto& x : small.elements(cfg.enumeration_cap))
    if (other.contains(x)) kept.push_back(x);
  return subgroup_from_elements(a, kept);
}

/// The prime when |g| is a power of one prime; 0 for the trivial group;
/// nullopt otherwise.
inline std::optional<std::uint64_t> p_group_prime(const Group& g) {
  auto pp = as_prime_power(g.order());
  if (!pp) return std::nullopt;
  return pp->prime;
}

inline bool is_p_group(const Group& g, std::uint64_t p) {
  return exact_log(g.order(), p).has_value();
}

/// Sylow p-subgroup by normalizer ascent: extend P by an element of N_G(P)
/// whose image in N_G(P)/P has p-power order until |P| = |G|_p.
inline Group sylow(const Group& g, std::uint64_t p, const Config& cfg = {}) {
  if (!is_prime(p)) throw Error(ErrorCode::ArgOutOfRange, std::to_string(p) + " is not prime");
  const BigInt target = p_part(g.order(), p);
  std::vector<Perm> gens;
  Group current = g.subgroup_unchecked({});
  if (target == 1) return current;
  const auto& elems = g.elements(cfg.enumeration_cap);
  while (current.order() < target) {
    bool grown = false;
    for (const auto& x : elems) {
      if (current.contains(x)) continue;
      if (!current.contains(power(x, target))) continue;
      if (!normalizes(x, current)) continue;
      gens.push_back(x);
      current = g.subgroup_unchecked(gens);
      grown = true;
      break;
    }
    if (!grown)
      throw Error(ErrorCode::CrossCheckFailed,
                  "normalizer ascent stalled at order " + current.order().str());
  }
  return current;
}

/// G/N as the regular action of G on the right cosets of N.
struct QuotientPresentation {
  Group source;
  Group kernel;
  Group quotient;
  std::vector<std::uint32_t> coset_of;  // per index in source.elements()
  std::vector<Perm> representatives;     // one per coset; representatives[0] is the identity

  std::size_t index() const noexcept { return representatives.size(); }

  std::uint32_t coset(const Perm& g) const { return coset_of[*source.index_of(g)]; }

  /// Image of g in the quotient.
  Perm project(const Perm& g) const {
    std::vector<Perm::Point> img(index());
    for (std::size_t c = 0; c < index(); ++c)
      img[c] = static_cast<Perm::Point>(coset(compose(representatives[c], g)));
    if (img.size() == 1) return Perm::identity(1);
    return Perm::from_zero_based(std::move(img));
  }

  /// A coset representative in G of a quotient element.
  const Perm& lift(const Perm& q) const { return representatives[q[0]]; }

  /// Full preimage of a subgroup of the quotient.
  Group preimage(const Group& sub) const {
    std::vector<Perm> gens = kernel.generators();
    for (const auto& q : sub.generators()) gens.push_back(lift(q));
    return source.subgroup_unchecked(std::move(gens));
  }
};

inline QuotientPresentation quotient(const Group& g, const Group& n, const Config& cfg = {}) {
  if (!is_normal(n, g)) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  const BigInt index = g.order() / n.order();
  if (index > cfg.coset_cap) throw CapExceeded("coset cap", index.str(), cfg.coset_cap);
  if (index > Perm::kMaxDegree)
    throw CapExceeded("permutation degree", index.str(), Perm::kMaxDegree);
  const auto& elems = g.elements(cfg.enumeration_cap);
  const auto& sub = n.elements(cfg.enumeration_cap);
  constexpr auto none = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(elems.size(), none);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (label[i] != none) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(elems[i]);
    for (const auto& x : sub) label[*g.index_of(compose(x, elems[i]))] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Perm> qgens;
  for (const auto& s : g.generators()) {
    if (m == 1) break;
    std::vector<Perm::Point> img(m);
    for (std::size_t c = 0; c < m; ++c)
      img[c] = static_cast<Perm::Point>(label[*g.index_of(compose(reps[c], s))]);
    qgens.push_back(Perm::from_zero_based(std::move(img)));
  }
  Group q(m, std::move(qgens));
  return QuotientPresentation{g, n, std::move(q), std::move(label), std::move(reps)};
}

/// Ω₁ of an abelian p-group: {a : a^p = 1}.
inline Group socle_p(const Group& a, std::uint64_t p, const Config& cfg = {}) {
  if (!a.is_abelian()) throw Error(ErrorCode::NotAbelian, "socle of a non-abelian group");
  if (!is_p_group(a, p))
    throw Error(ErrorCode::NotPGroup, "order " + a.order().str() + " is not a power of " +
                                          std::to_string(p));
  return filter_subgroup(a, cfg, [&](const Perm& x) { return power(x, p).is_identity(); });
}

/// {a ∈ top : a^p ∈ bottom}: the socle of the abelian section top/bottom, pulled back.
inline Group section_socle(const Group& top, const Group& bottom, std::uint64_t p,
                           const Config& cfg = {}) {
  return filter_subgroup(top, cfg, [&](const Perm& x) { return bottom.contains(power(x, p)); });
}

struct FittingDecomposition {
  Group commutator_part;  // [P, Q]
  Group fixed_part;       // C_P(Q)
  bool direct = false;    // [P,Q] ∩ C_P(Q) = 1 and [P,Q]·C_P(Q) = P
};

/// P = [P,Q] × C_P(Q) for an abelian P normalized by a group Q of coprime order.
inline FittingDecomposition fitting_decomposition(const Group& p, const Group& q,
                                                  const Config& cfg = {}) {
  if (!p.is_abelian()) throw Error(ErrorCode::NotAbelian, "Fitting decomposition needs abelian P");
  if (gcd(p.order(), q.order()) != 1)
    throw Error(ErrorCode::NotCoprime,
                "|P| = " + p.order().str() + " and |Q| = " + q.order().str() + " are not coprime");
  for (const auto& x : q.generators())
    if (!normalizes(x, p)) throw Error(ErrorCode::NotNormal, "Q does not normalize P");
  FittingDecomposition out{mutual_commutator(p, q), centralizer(p, q, cfg), false};
  const Group meet = intersection(out.commutator_part, out.fixed_part, cfg);
  out.direct = meet.is_trivial() &&
               out.commutator_part.order() * out.fixed_part.order() == p.order();
  return out;
}

/// Weaker coprime-action check for non-abelian P: P = [P,Q]·C_P(Q).
inline bool fitting_product_holds(const Group& p, const Group& q, const Config& cfg = {}) {
  const Group a = mutual_commutator(p, q);
  const Group b = centralizer(p, q, cfg);
  const Group meet = intersection(a, b, cfg);
  return a.order() * b.order() / meet.order() == p.order();
}

/// The cast of subgroups the bounds are stated in, for one group G.
struct StructureReport {
  Group group;
  Group derived;                 // G'
  Group center;                  // Z(G)
  Group second_center;           // Z₂(G)
  Group centralizer_of_derived;  // C_G(G')
  Group dee;                     // D = {g : [g, G'] ⊆ Z(G)}
  Group zed;                     // G' ∩ Z(G)
  std::map<std::uint64_t, BigInt> p_parts;  // n_p of |G' : G'∩Z(G)|
  bool quotient_cross_checked = false;

  BigInt derived_mod_zed() const { return derived.order() / zed.order(); }
};

/// Builds the report. When the central quotient G/Z(G) is supplied, Z₂(G)
/// and D are recomputed inside it and compared; a mismatch throws
/// CrossCheckFailed.
inline StructureReport structure_report(const Group& g, const Config& cfg = {},
                                        const QuotientPresentation* central = nullptr) {
  StructureReport r{g,
                    derived_subgroup(g),
                    center(g, cfg),
                    g,
                    g,
                    g,
                    g,
                    {},
                    false};
  r.second_center = relative_centralizer(g, g.generators(), r.center, cfg);
  r.centralizer_of_derived = centralizer(g, r.derived, cfg);
  r.dee = relative_centralizer(g, r.derived.generators(), r.center, cfg);
  r.zed = intersection(r.derived, r.center, cfg);
  const BigInt n = r.derived_mod_zed();
  for (auto p : prime_factors(n)) r.p_parts[p] = p_part(n, p);

  if (central) {
    const auto& q = *central;
    if (!same_group(q.kernel, r.center))
      throw Error(ErrorCode::CrossCheckFailed, "supplied quotient is not by Z(G)");
    const Group zq = center(q.quotient, cfg);
    if (!same_group(q.preimage(zq), r.second_center))
      throw Error(ErrorCode::CrossCheckFailed, "Z2(G) differs from the preimage of Z(G/Z(G))");
    const Group cq = centralizer(q.quotient, derived_subgroup(q.quotient), cfg);
    if (!same_group(q.preimage(cq), r.dee))
      throw Error(ErrorCode::CrossCheckFailed, "D/Z(G) differs from C_{G/Z}((G/Z)')");
    r.quotient_cross_checked = true;
  }
  return r;
}

}  // namespace centerbound
