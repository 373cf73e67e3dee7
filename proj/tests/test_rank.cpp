#include <gtest/gtest.h>

#include "centerbound/corpus.hpp"
#include "centerbound/rank.hpp"
#include "centerbound/small_group.hpp"
#include "oracle.hpp"

using namespace centerbound;

namespace {

oracle::Set as_set(const Group& g) {
  const auto& e = g.elements();
  return {e.begin(), e.end()};
}

Group quaternion() { return dicyclic_group(2); }

}  // namespace

TEST(Rank, AbelianRank) {
  EXPECT_EQ(abelian_rank(cyclic_group(6)), 1u);
  EXPECT_EQ(abelian_rank(Group(4)), 0u);
  const Group a = direct_product(cyclic_group(2), direct_product(cyclic_group(4), cyclic_group(3)));
  EXPECT_EQ(abelian_rank(a), 2u);
  EXPECT_EQ(abelian_rank(elem_abelian_group(3, 3)), 3u);
  EXPECT_THROW(abelian_rank(symmetric_group(3)), Error);
}

TEST(Rank, AllSubgroups) {
  EXPECT_EQ(all_subgroups(cyclic_group(6)).size(), 4u);
  EXPECT_EQ(all_subgroups(Group(2)).size(), 1u);
  EXPECT_EQ(all_subgroups(symmetric_group(3)).size(), 6u);
  EXPECT_EQ(all_subgroups(symmetric_group(4)).size(), 30u);
  EXPECT_EQ(all_subgroups(quaternion()).size(), 6u);
  EXPECT_EQ(all_subgroups(dihedral_group(4)).size(), 10u);
  EXPECT_THROW(all_subgroups(symmetric_group(6)), CapExceeded);
}

TEST(Rank, AllSubgroupsMatchBruteForceLattice) {
  for (const char* text : {"symmetric(4)", "dihedral(6)", "elem_abelian(2,3)", "dicyclic(3)", "alternating(4)",
                           "direct_product(cyclic(2),dihedral(4))"}) {
    const Group g = build_group(family_spec(text));
    const auto ref = oracle::subgroups_up_to_three(g.degree(), as_set(g));
    std::set<std::vector<Perm>> got;
    for (const auto& h : all_subgroups(g)) got.insert(oracle::sorted(as_set(h)));
    EXPECT_EQ(got, ref) << text;
  }
}

TEST(Rank, GroupRank) {
  EXPECT_EQ(group_rank(quaternion()).value(), 2u);
  EXPECT_EQ(group_rank(elem_abelian_group(2, 3)).value(), 3u);
  EXPECT_EQ(group_rank(elem_abelian_group(5, 2)).value(), 2u);
  EXPECT_EQ(group_rank(symmetric_group(4)).value(), 2u);
  EXPECT_EQ(group_rank(Group(1)).value(), 0u);
  // S₄ × C₂ contains C₂³.
  EXPECT_EQ(group_rank(direct_product(symmetric_group(4), cyclic_group(2))).value(), 3u);
}

TEST(Rank, RankPastCapIsAnInterval) {
  Config cfg;
  cfg.subgroup_cap = 100;
  const auto r = group_rank(symmetric_group(6), cfg);
  EXPECT_FALSE(r.known());
  EXPECT_LE(r.lo, r.hi);
  EXPECT_GE(r.lo, 2u);
  EXPECT_THROW(r.value(), Error);
  EXPECT_NE(r.describe().find("Unknown"), std::string::npos);
}

TEST(Rank, RankAndGeneratorsMatchOracle) {
  for (const auto& spec : default_corpus().specs) {
    const Group g = build_group(spec);
    if (g.order() > 32) continue;
    const auto ref = as_set(g);
    EXPECT_EQ(min_generators(g), oracle::min_generators(g.degree(), ref)) << spec.label;
    const auto subs = oracle::subgroups_up_to_three(g.degree(), ref);
    EXPECT_EQ(group_rank(g).value(), oracle::rank(g.degree(), subs)) << spec.label;
  }
}

TEST(Rank, ChainDLeRankLeLog) {
  for (const auto& spec : default_corpus().specs) {
    const Group g = build_group(spec);
    if (g.order() > 512) continue;
    const auto rep = rank_report(g);
    ASSERT_TRUE(rep.rank.known()) << spec.label;
    EXPECT_LE(rep.dee_gens.hi, rep.rank.value()) << spec.label;
    EXPECT_LE(rep.rank.value(), floor_log2(g.order())) << spec.label;
  }
}

TEST(Rank, FrattiniAgreesWithSearch) {
  for (const auto& spec : default_corpus().specs) {
    const Group g = build_group(spec);
    if (g.order() > 256 || !p_group_prime(g)) continue;
    const auto by_frattini = min_generators_bounds(g, g.subgroup_unchecked({}));
    ASSERT_TRUE(by_frattini.known());
    // The lattice records d(H) from the cyclic-extension search.
    const auto table = SmallGroup::from_group(g, Config{});
    const auto subs = table.subgroups();
    EXPECT_EQ(subs.back().min_generators, by_frattini.value()) << spec.label;
    if (g.order() <= 64) {
      EXPECT_EQ(oracle::min_generators(g.degree(), as_set(g)), by_frattini.value()) << spec.label;
    }
  }
}

TEST(Rank, AbelianRankMatchesLattice) {
  for (const char* text : {"elem_abelian(2,3)", "direct_product(cyclic(4),cyclic(2))", "cyclic(12)",
                           "direct_product(cyclic(6),cyclic(6))", "elem_abelian(3,2)"}) {
    const Group g = build_group(family_spec(text));
    unsigned best = 0;
    for (const auto& h : all_subgroups(g)) best = std::max(best, min_generators(h));
    EXPECT_EQ(abelian_rank(g), best) << text;
  }
}

TEST(Rank, SectionRank) {
  const Group g = symmetric_group(4);
  const Group v4 = g.subgroup({parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  EXPECT_EQ(section_rank(g, v4).value(), 2u);  // S₃ itself needs two generators
  EXPECT_EQ(section_rank(alternating_group(4), v4).value(), 1u);  // C₃
  EXPECT_EQ(min_generators_bounds(g, v4).value(), 2u);
}

TEST(Rank, ShrinkGeneratingSet) {
  const Group d4 = dihedral_group(4);
  const Perm r = d4.generators()[0], s = d4.generators()[1];
  const auto kept = shrink_generating_set(d4, {r, s, compose(r, s)});
  EXPECT_EQ(kept.size(), 2u);
  EXPECT_EQ(Group(4, kept).order(), 8);

  const Group c8 = cyclic_group(8);
  const Perm x = c8.generators()[0];
  EXPECT_EQ(shrink_generating_set(c8, {power(x, 2), x, power(x, 3)}).size(), 1u);

  const Group v4 = elem_abelian_group(2, 2);
  const Perm a = v4.generators()[0], b = v4.generators()[1];
  EXPECT_EQ(shrink_generating_set(v4, {a, b, compose(a, b)}).size(), 2u);

  EXPECT_THROW(shrink_generating_set(symmetric_group(3), symmetric_group(3).generators()), Error);
  EXPECT_THROW(shrink_generating_set(c8, {power(x, 2)}), Error);
}

TEST(Rank, ShrinkOutputsGenerateWithMinimalSize) {
  for (const auto& spec : default_corpus().specs) {
    const Group g = build_group(spec);
    if (g.order() > 2000 || !p_group_prime(g)) continue;
    std::vector<Perm> gens = g.generators();
    for (const auto& x : g.generators()) gens.push_back(compose(x, x));
    const auto kept = shrink_generating_set(g, gens);
    EXPECT_EQ(Group(g.degree(), kept).order(), g.order()) << spec.label;
    EXPECT_EQ(kept.size(), min_generators(g)) << spec.label;
  }
}
