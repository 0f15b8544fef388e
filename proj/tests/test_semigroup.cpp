#include <random>

#include "doctest.h"
#include "smalg/errors.hpp"
#include "smalg/semigroup.hpp"
#include "support.hpp"

using namespace smalg;
using Table = std::vector<std::vector<Index>>;

TEST_CASE("validate accepts the trivial semigroup and Z_2") {
  CHECK(check_semigroup_table(test::names(1, "s"), Table{{0}}).ok());
  CHECK(check_semigroup_table(test::names(2, "s"), Table{{0, 1}, {1, 0}}).ok());
}

TEST_CASE("validate reports witnesses") {
  using Kind = SemigroupViolation::Kind;
  auto r = check_semigroup_table(test::names(2, "s"), Table{{0, 1}, {0, 0}});
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().kind == Kind::NotCommutative);
  CHECK(r.violations.front().elements == std::vector<Index>{0, 1});

  r = check_semigroup_table(test::names(2, "s"), Table{{0, 99}, {99, 0}});
  CHECK(r.violations.front().kind == Kind::NotClosed);

  // Commutative but not associative: 0*0=1, 1*x=0.
  r = check_semigroup_table(test::names(2, "s"), Table{{1, 0}, {0, 0}});
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().kind == Kind::NotAssociative);

  r = check_semigroup_table(test::names(2, "s"), Table{{0, 1}});
  CHECK(r.violations.front().kind == Kind::NotSquare);

  CHECK_THROWS_AS(Semigroup::validate(test::names(2, "s"), Table{{0, 1}, {0, 0}}), InvalidSemigroup);
}

TEST_CASE("gen_se tables and products") {
  const Semigroup s1 = gen_se(1);
  CHECK(s1.order() == 3);
  CHECK(s1.table()[1] == std::vector<Index>{1, 2, 2});

  const Semigroup s2 = gen_se(2);
  CHECK(s2.product(1, 1) == 2);
  CHECK(s2.product(1, 2) == 3);
  for (Index a = 0; a < s2.order(); ++a) CHECK(s2.product(a, 3) == 3);
  CHECK_THROWS_AS((void)s2.product(0, 4), IndexError);

  const Semigroup s0 = gen_se(0);
  CHECK(s0.order() == 2);
  CHECK(s0.zero_element() == Index{1});
}

TEST_CASE("selector_n") {
  const Semigroup s2 = gen_se(2);
  CHECK(s2.selector(std::vector<Index>{1, 1, 1}, 3) == 1);
  CHECK(s2.selector(std::vector<Index>{0, 0}, 0) == 1);
  CHECK(s2.selector(std::vector<Index>{1, 1}, 3) == 0);
  CHECK_THROWS_AS((void)s2.selector(std::vector<Index>{1}, 1), ArityError);
  CHECK_THROWS_AS((void)s2.selector(std::vector<Index>{1, 7}, 1), IndexError);
}

TEST_CASE("zero_element") {
  for (unsigned n = 0; n <= 5; ++n) CHECK(gen_se(n).zero_element() == Index{n + 1});
  CHECK_FALSE(Semigroup::validate(test::names(2, "s"), Table{{0, 1}, {1, 0}}).zero_element());
  CHECK(Semigroup::validate(test::names(1, "s"), Table{{0}}).zero_element() == Index{0});
}

TEST_CASE("gen_se passes exhaustive validation for N <= 12") {
  for (unsigned n = 0; n <= 12; ++n) {
    const Semigroup s = gen_se(n);
    CHECK(check_semigroup_table(s.labels(), s.table()).ok());
  }
}

TEST_CASE("n-selector factorizes through the 2-selector") {
  std::mt19937_64 rng(3);
  std::vector<Semigroup> samples{gen_se(2), gen_se(3)};
  for (int i = 0; i < 6; ++i) samples.push_back(test::random_semigroup(rng, 5));
  for (const Semigroup& s : samples) {
    const auto m = static_cast<Index>(s.order());
    std::uniform_int_distribution<Index> pick(0, m - 1);
    for (std::size_t n = 3; n <= 6; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Index> args(n);
        for (auto& a : args) a = pick(rng);
        const std::vector<Index> head(args.begin(), args.end() - 1);
        for (Index gamma = 0; gamma < m; ++gamma) {
          int sum = 0;
          for (Index sigma = 0; sigma < m; ++sigma)
            sum += s.selector(head, sigma) * s.selector(std::vector<Index>{sigma, args.back()}, gamma);
          CHECK(s.selector(args, gamma) == sum);
        }
      }
  }
}

TEST_CASE("selectors touching the zero element of S_E^(N)") {
  for (unsigned n = 1; n <= 4; ++n) {
    const Semigroup s = gen_se(n);
    const Index z = n + 1;
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<Index> pick(0, z);
    for (std::size_t arity = 2; arity <= 5; ++arity)
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<Index> args(arity);
        for (auto& a : args) a = pick(rng);
        args[trial % arity] = z;
        for (Index j = 0; j < z; ++j) CHECK(s.selector(args, j) == 0);
        CHECK(s.selector(args, z) == 1);
      }
  }
}

TEST_CASE("zero_element is preserved by relabeling") {
  const Semigroup s = gen_se(3);
  const std::vector<Index> perm{2, 4, 0, 1, 3};
  Table t(5, std::vector<Index>(5));
  for (Index a = 0; a < 5; ++a)
    for (Index b = 0; b < 5; ++b) t[perm[a]][perm[b]] = perm[s.table()[a][b]];
  const Semigroup relabeled = Semigroup::validate(test::names(5, "s"), t);
  CHECK(relabeled.zero_element() == perm[*s.zero_element()]);
}
