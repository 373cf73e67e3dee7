#include <gtest/gtest.h>

#include "centerbound/corpus.hpp"
#include "centerbound/structure.hpp"
#include "oracle.hpp"

using namespace centerbound;

namespace {

oracle::Set as_set(const Group& g) {
  const auto& e = g.elements();
  return {e.begin(), e.end()};
}

}  // namespace

TEST(Structure, CenterAndDerivedOfSmallGroups) {
  const Group s3 = symmetric_group(3);
  EXPECT_EQ(center(s3).order(), 1);
  EXPECT_EQ(derived_subgroup(s3).order(), 3);
  const Group d4 = dihedral_group(4);
  EXPECT_EQ(center(d4).order(), 2);
  EXPECT_EQ(derived_subgroup(d4).order(), 2);
  EXPECT_EQ(second_center(d4).order(), 8);
  const Group c6 = cyclic_group(6);
  EXPECT_EQ(center(c6).order(), 6);
  EXPECT_TRUE(derived_subgroup(c6).is_trivial());
  const Group h3 = heisenberg_group(3);
  EXPECT_EQ(center(h3).order(), 3);
  EXPECT_TRUE(same_group(center(h3), derived_subgroup(h3)));
}

TEST(Structure, ReportMatchesFilterOracles) {
  for (const auto& spec : default_corpus().specs) {
    const Group g = build_group(spec);
    if (g.order() > 1000) continue;
    const auto ref = as_set(g);
    const auto& gens = g.generators();
    const auto z = oracle::center(ref, gens);
    const auto gd = oracle::derived(g.degree(), ref, gens);
    const auto gd_list = oracle::sorted(gd);
    const auto z2 = oracle::relative_centralizer(ref, gens, z);
    const auto c = oracle::centralizer(ref, gd_list);
    const auto d = oracle::relative_centralizer(ref, gd_list, z);
    const auto zed = oracle::intersect(gd, z);

    const auto s = structure_report(g);
    EXPECT_EQ(as_set(s.center), z) << spec.label;
    EXPECT_EQ(as_set(s.derived), gd) << spec.label;
    EXPECT_EQ(as_set(s.second_center), z2) << spec.label;
    EXPECT_EQ(as_set(s.centralizer_of_derived), c) << spec.label;
    EXPECT_EQ(as_set(s.dee), d) << spec.label;
    EXPECT_EQ(as_set(s.zed), zed) << spec.label;
    // Z ≤ Z₂ ≤ C_G(G') ≤ D
    EXPECT_TRUE(oracle::subset(z, z2) && oracle::subset(z2, c) && oracle::subset(c, d)) << spec.label;
    for (const auto& [p, n] : s.p_parts) EXPECT_EQ(p_part(s.derived_mod_zed(), p), n);
  }
}

TEST(Structure, CentralQuotientCrossCheck) {
  for (const char* text : {"symmetric(4)", "dihedral(8)", "direct_product(symmetric(3),dihedral(4))",
                           "dicyclic(4)", "heisenberg(3)"}) {
    const Group g = build_group(family_spec(text));
    const Group z = center(g);
    const auto q = quotient(g, z);
    EXPECT_EQ(BigInt(q.index()), g.order() / z.order()) << text;
    EXPECT_EQ(q.quotient.order(), g.order() / z.order()) << text;
    const auto s = structure_report(g, {}, &q);
    EXPECT_TRUE(s.quotient_cross_checked) << text;
  }
}

TEST(Structure, QuotientProjectionIsAHomomorphism) {
  const Group g = symmetric_group(4);
  const Group v4 = g.subgroup({parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  const auto q = quotient(g, v4);
  EXPECT_EQ(q.quotient.order(), 6);
  for (const auto& a : g.elements())
    for (const auto& b : g.generators())
      EXPECT_EQ(q.project(compose(a, b)), compose(q.project(a), q.project(b)));
  EXPECT_TRUE(same_group(q.preimage(q.quotient.subgroup_unchecked({})), v4));
  const Group t = g.subgroup({parse_cycles("(1 2)", 4)});
  EXPECT_THROW(quotient(g, t), Error);
}

TEST(Structure, CentralizerNormalizerIntersection) {
  const Group s4 = symmetric_group(4);
  const Group t = s4.subgroup({parse_cycles("(1 2)", 4)});
  const auto ref = as_set(s4);
  EXPECT_EQ(as_set(centralizer(s4, t)), oracle::centralizer(ref, t.generators()));
  EXPECT_EQ(centralizer(s4, t).order(), 4);
  EXPECT_EQ(normalizer(s4, t).order(), 4);
  const Group c3 = s4.subgroup({parse_cycles("(1 2 3)", 4)});
  EXPECT_EQ(normalizer(s4, c3).order(), 6);
  const Group a4 = alternating_group(4);
  const Group d = s4.subgroup({parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)});
  EXPECT_EQ(as_set(intersection(a4, d)), oracle::intersect(as_set(a4), as_set(d)));
  EXPECT_EQ(intersection(a4, d).order(), 4);
}

TEST(Structure, MutualCommutator) {
  const Group s4 = symmetric_group(4);
  const Group a4 = alternating_group(4);
  EXPECT_EQ(mutual_commutator(s4, a4).order(), 12);
  EXPECT_EQ(mutual_commutator(a4, a4).order(), 4);
  EXPECT_TRUE(mutual_commutator(cyclic_group(5), cyclic_group(5)).is_trivial());
}

TEST(Structure, Sylow) {
  for (const char* text : {"symmetric(4)", "symmetric(5)", "alternating(5)", "dihedral(12)",
                           "direct_product(symmetric(3),dihedral(4))", "symmetric(6)"}) {
    const Group g = build_group(family_spec(text));
    for (auto p : prime_factors(g.order())) {
      const Group sp = sylow(g, p);
      EXPECT_EQ(sp.order(), p_part(g.order(), p)) << text << " p=" << p;
      EXPECT_TRUE(is_subgroup(sp, g));
      EXPECT_TRUE(is_p_group(sp, p));
    }
  }
  EXPECT_TRUE(sylow(cyclic_group(9), 2).is_trivial());
  EXPECT_THROW(sylow(cyclic_group(4), 4), Error);
}

TEST(Structure, PGroupPrime) {
  EXPECT_EQ(p_group_prime(dihedral_group(4)), 2u);
  EXPECT_EQ(p_group_prime(Group(3)), 0u);
  EXPECT_FALSE(p_group_prime(symmetric_group(3)).has_value());
}

TEST(Structure, Socle) {
  const Group a = direct_product(cyclic_group(4), cyclic_group(2));
  EXPECT_EQ(socle_p(a, 2).order(), 4);
  EXPECT_THROW(socle_p(symmetric_group(3), 3), Error);
  EXPECT_THROW(socle_p(cyclic_group(6), 2), Error);
  const Group c8 = cyclic_group(8);
  const Group c2 = c8.subgroup({power(c8.generators()[0], 4)});
  EXPECT_EQ(section_socle(c8, c2, 2).order(), 4);
}

TEST(Structure, FittingDecomposition) {
  const Group s3 = symmetric_group(3);
  const Group p = s3.subgroup({parse_cycles("(1 2 3)", 3)});
  const Group q = s3.subgroup({parse_cycles("(1 2)", 3)});
  const auto f = fitting_decomposition(p, q);
  EXPECT_EQ(f.commutator_part.order(), 3);
  EXPECT_TRUE(f.fixed_part.is_trivial());
  EXPECT_TRUE(f.direct);

  const Group c6 = cyclic_group(6);
  const Perm x = c6.generators()[0];
  const Group p3 = c6.subgroup({power(x, 2)});
  const Group q2 = c6.subgroup({power(x, 3)});
  const auto g = fitting_decomposition(p3, q2);
  EXPECT_TRUE(g.commutator_part.is_trivial());
  EXPECT_EQ(g.fixed_part.order(), 3);

  EXPECT_THROW(fitting_decomposition(p3, p3), Error);
  EXPECT_THROW(fitting_decomposition(s3, q), Error);
}

TEST(Structure, DecompositionIdentityOnSmallCorpus) {
  for (const auto& spec : default_corpus().specs) {
    const Group g = build_group(spec);
    if (g.order() > 1000) continue;
    const auto s = structure_report(g);
    EXPECT_EQ(g.order() / s.second_center.order(),
              (g.order() / s.dee.order()) * (s.dee.order() / s.centralizer_of_derived.order()) *
                  (s.centralizer_of_derived.order() / s.second_center.order()))
        << spec.label;
  }
}
