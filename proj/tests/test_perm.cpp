#include <gtest/gtest.h>

#include <random>

#include "centerbound/perm.hpp"
#include "oracle.hpp"

using namespace centerbound;

namespace {

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Perm::Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Perm::Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_zero_based(img);
}

// The permutation that sends every point i to f(i), built pointwise.
template <class F>
Perm pointwise(std::size_t n, F&& f) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 1; i <= n; ++i) img[i - 1] = f(i);
  return Perm::from_images(img);
}

}  // namespace

TEST(Perm, ComposeAppliesLeftFactorFirst) {
  const Perm a = parse_cycles("(1 2 3)", 3);
  const Perm b = parse_cycles("(1 2)", 3);
  const Perm expect = pointwise(3, [&](std::size_t i) { return oracle::apply_then(a, b, i); });
  EXPECT_EQ(compose(a, b), expect);
  // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
  EXPECT_EQ(to_cycle_string(compose(a, b)), "(2 3)");
  EXPECT_EQ(a * b, compose(a, b));
}

TEST(Perm, ComposeTrivialCases) {
  const Perm t = parse_cycles("(1 2)", 4);
  EXPECT_TRUE(compose(t, t).is_identity());
  const Perm p = parse_cycles("(1 4 2)", 4);
  EXPECT_EQ(compose(p, Perm::identity(4)), p);
  EXPECT_EQ(compose(Perm::identity(4), p), p);
}

TEST(Perm, DegreeMismatchThrows) {
  EXPECT_THROW(compose(Perm::identity(3), Perm::identity(4)), Error);
  try {
    commutator(Perm::identity(2), Perm::identity(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
}

TEST(Perm, CommutatorConvention) {
  const Perm x = parse_cycles("(1 2)", 3);
  const Perm y = parse_cycles("(1 3)", 3);
  // x⁻¹y⁻¹xy evaluated pointwise, left factor first.
  const Perm expect = pointwise(3, [&](std::size_t i) {
    return y.image(x.image(inverse(y).image(inverse(x).image(i))));
  });
  EXPECT_EQ(commutator(x, y), expect);
  EXPECT_EQ(to_cycle_string(commutator(x, y)), "(1 3 2)");
  EXPECT_TRUE(commutator(x, x).is_identity());
  EXPECT_TRUE(commutator(x, Perm::identity(3)).is_identity());
}

TEST(Perm, GroupLawsOnRandomPermutations) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 12;
    const Perm p = random_perm(n, rng), q = random_perm(n, rng), r = random_perm(n, rng);
    EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
    EXPECT_EQ(inverse(compose(p, q)), compose(inverse(q), inverse(p)));
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    // [ab, x] = [a, x]^b [b, x]
    EXPECT_EQ(commutator(compose(p, q), r), compose(conjugate(commutator(p, r), q), commutator(q, r)));
  }
}

TEST(Perm, PowerAndOrder) {
  const Perm p = parse_cycles("(1 2 3)(4 5)", 6);
  EXPECT_EQ(element_order(p), 6);
  EXPECT_TRUE(power(p, 6).is_identity());
  EXPECT_EQ(power(p, -1), inverse(p));
  EXPECT_EQ(power(p, 7), p);
  EXPECT_EQ(power(p, 2), compose(p, p));
}

TEST(Perm, CycleNotationRoundTrip) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng() % 20;
    const Perm p = random_perm(n, rng);
    EXPECT_EQ(parse_cycles(to_cycle_string(p), n), p);
  }
  EXPECT_EQ(to_cycle_string(Perm::identity(5)), "()");
  EXPECT_TRUE(parse_cycles("()", 5).is_identity());
  EXPECT_EQ(parse_cycles(" ( 1  2 3 ) (4 5) ", 5), parse_cycles("(1 2 3)(4 5)", 5));
}

TEST(Perm, ParseErrors) {
  try {
    parse_cycles("(1 7)", 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeViolation);
  }
  EXPECT_THROW(parse_cycles("(1 2", 5), Error);
  EXPECT_THROW(parse_cycles("1 2)", 5), Error);
  EXPECT_THROW(parse_cycles("(1 x)", 5), Error);
  EXPECT_THROW(Perm::from_images({1, 1, 2}), Error);
}

TEST(Perm, OneBasedImages) {
  const Perm p = Perm::from_images({2, 3, 1});
  EXPECT_EQ(p.degree(), 3u);
  EXPECT_EQ(p.image(1), 2u);
  EXPECT_EQ(p.image(3), 1u);
  EXPECT_EQ(to_cycle_string(p), "(1 2 3)");
  EXPECT_EQ(cycles(p).size(), 1u);
}
