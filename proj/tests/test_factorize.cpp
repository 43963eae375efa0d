#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"
#include "zerosum/detect.hpp"
#include "zerosum/factorize.hpp"

using namespace zerosum;
using testsupport::S;
using testsupport::check_beta_factorization_valid;
using testsupport::check_factorization_valid;
using testsupport::random_int_list;
using testsupport::random_zero_sum;

TEST_CASE("factorize_minimal on pinned sequences") {
  const auto pairs = factorize_minimal(S(1, "1^2,-1^2"));
  CHECK(pairs.parts.size() == 2);
  CHECK(pairs.parts[0] == S(1, "1,-1"));
  CHECK(pairs.parts[1] == S(1, "1,-1"));
  check_factorization_valid(pairs);

  // 65-term sequence: three 3-term parts and fourteen 4-term parts
  const auto big = factorize_minimal(S(3, "3^14,2^3,-1^48"));
  CHECK(big.parts.size() == 17);
  CHECK(std::count(big.parts.begin(), big.parts.end(), S(3, "2,-1^2")) == 3);
  CHECK(std::count(big.parts.begin(), big.parts.end(), S(3, "3,-1^3")) == 14);
  check_factorization_valid(big);

  const auto single = factorize_minimal(S(3, "3^2,-2^3"));
  CHECK(single.parts.size() == 1);
  CHECK(single.parts[0] == S(3, "3^2,-2^3"));

  CHECK(factorize_minimal(S(2, "")).parts.empty());
  CHECK_THROWS_AS(factorize_minimal(S(2, "2,-1")), std::invalid_argument);
}

TEST_CASE("profile summarises part lengths") {
  const auto big = profile(factorize_minimal(S(3, "3^14,2^3,-1^48")));
  CHECK(big.lengths == std::vector<std::uint64_t>{3, 4});
  CHECK(big.alpha == 4);
  CHECK(big.count.at(3) == 3);
  CHECK(big.count.at(4) == 14);

  const auto single = profile(factorize_minimal(S(3, "3^2,-2^3")));
  CHECK(single.lengths == std::vector<std::uint64_t>{5});
  CHECK(single.alpha == 5);
  CHECK(single.count.at(5) == 1);

  const auto pairs = profile(factorize_minimal(S(1, "1^2,-1^2")));
  CHECK(pairs.lengths == std::vector<std::uint64_t>{2});
  CHECK(pairs.alpha == 2);
  CHECK(pairs.count.at(2) == 2);
}

TEST_CASE("beta_factorize on pinned lists") {
  {
    const std::vector<std::int64_t> xs{1, 1, 1};
    const auto bf = beta_factorize(xs, 3);
    CHECK(bf.x0.empty());
    CHECK(bf.parts == std::vector<std::vector<std::int64_t>>{{1, 1, 1}});
    check_beta_factorization_valid(xs, bf);
  }
  {
    const std::vector<std::int64_t> xs{1, 2};
    const auto bf = beta_factorize(xs, 3);
    CHECK(bf.x0.empty());
    CHECK(bf.parts == std::vector<std::vector<std::int64_t>>{{1, 2}});
    check_beta_factorization_valid(xs, bf);
  }
  {
    const std::vector<std::int64_t> xs{5, 7, 11};
    const auto bf = beta_factorize(xs, 4);
    check_beta_factorization_valid(xs, bf);
    // earliest-index tie break picks {5, 7}
    CHECK(bf.parts == std::vector<std::vector<std::int64_t>>{{5, 7}});
    CHECK(bf.x0 == std::vector<std::int64_t>{11});
  }
  {
    // beta = 1 splits everything into singletons
    const std::vector<std::int64_t> xs{4, -2, 0};
    const auto bf = beta_factorize(xs, 1);
    CHECK(bf.x0.empty());
    CHECK(bf.parts.size() == 3);
    check_beta_factorization_valid(xs, bf);
  }
  CHECK_THROWS_AS(beta_factorize(std::vector<std::int64_t>{1}, 0), std::invalid_argument);
}

TEST_CASE("beta_factorize accepts lists shorter than beta") {
  const std::vector<std::int64_t> xs{1, 2};
  const auto bf = beta_factorize(xs, 7);
  CHECK(bf.parts.empty());
  CHECK(bf.x0 == xs);
  check_beta_factorization_valid(xs, bf);
}

TEST_CASE("factorization invariants on random zero-sum input") {
  std::mt19937 rng(777001);
  for (int iter = 0; iter < 300; ++iter) {
    const int k = 1 + static_cast<int>(rng() % 5);
    const Seq s = random_zero_sum(rng, k, 30);
    check_factorization_valid(factorize_minimal(s));
  }
}

TEST_CASE("beta factorization invariants on random lists") {
  std::mt19937 rng(777002);
  for (int iter = 0; iter < 300; ++iter) {
    const std::uint64_t beta = 1 + rng() % 10;
    const auto xs = random_int_list(rng, 20, 50);
    check_beta_factorization_valid(xs, beta_factorize(xs, beta));
  }
}

TEST_CASE("profile bound predictions on pinned sequences") {
  // forced true: length far above the bound
  CHECK(profile_bound_predict(S(2, "1^3,-1^3"), 6));
  CHECK(contains_length(S(2, "1^3,-1^3"), 6));

  // the 65-term avoider evades the bound at t = 60
  CHECK(!profile_bound_predict(S(3, "3^14,2^3,-1^48"), 60));

  // no qualifying part length
  CHECK(!profile_bound_predict(S(3, "3^2,-2^3"), 60));

  CHECK_THROWS_AS(profile_bound_predict(S(1, "1,-1"), 2), std::invalid_argument);
  CHECK_THROWS_AS(profile_bound_predict(S(2, "2,-1"), 6), std::invalid_argument);
  CHECK_THROWS_AS(profile_bound_predict(S(2, "1,-1"), 5), std::invalid_argument);
  // t = 4 violates the divisibility requirement for every admissible k
  CHECK_THROWS_AS(profile_bound_predict(S(2, "1^3,-1^3"), 4), std::invalid_argument);
}

TEST_CASE("a true prediction always comes with a detected subsequence") {
  std::mt19937 rng(777003);
  std::uint64_t predicted = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const int k = 2 + static_cast<int>(rng() % 4);
    std::uint64_t lcm = 1;
    for (std::uint64_t d = 2; d <= 2 * static_cast<std::uint64_t>(k) - 1; ++d)
      lcm = std::lcm(lcm, d);
    const std::uint64_t t = lcm * (1 + rng() % 2);
    const Seq s = random_zero_sum(rng, k, 36);
    if (profile_bound_predict(s, t)) {
      ++predicted;
      CHECK(contains_length(s, t));
    }
  }
  CHECK(predicted > 0);  // the corpus must actually exercise the implication
}

TEST_CASE("profile arithmetic bounds") {
  std::mt19937 rng(777004);
  for (int iter = 0; iter < 200; ++iter) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const Seq s = random_zero_sum(rng, k, 36);
    if (s.empty()) continue;
    const auto p = profile(factorize_minimal(s));

    // every part is at most 2k-1 long, so the part count is at least
    // |S| / (2k-1)
    std::uint64_t parts = 0, max_count = 0;
    for (const auto& [len, n] : p.count) {
      parts += n;
      max_count = std::max(max_count, n);
    }
    const std::uint64_t dk = 2 * static_cast<std::uint64_t>(k) - 1;
    CHECK(p.alpha <= std::max<std::uint64_t>(2, dk));
    CHECK(parts * dk >= s.length());

    // arithmetic chain: a dominant length above |S|/(2k-1) lies above
    // (2k-2)(2k-3) as soon as |S| >= t + k(k-1) with t a multiple of
    // (2k-1)(2k-2)(2k-3)
    const std::uint64_t t =
        dk * (dk - 1) * (dk - 2);  // smallest admissible multiple, p = 1
    if (max_count * dk >= s.length() &&
        s.length() >= t + static_cast<std::uint64_t>(k) * (k - 1)) {
      CHECK(max_count > (2 * static_cast<std::uint64_t>(k) - 2) *
                            (2 * static_cast<std::uint64_t>(k) - 3));
    }
  }
}
