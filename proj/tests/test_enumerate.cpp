#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "ordpat/ordpat.hpp"

using namespace ordpat;
using ordpat::testing::random_poset;

namespace {

// Brute-force oracle, self-contained on purpose: a relation on n points is a
// 64-bit mask with bit i*n+j set iff i < j. Only upper-triangular generating
// masks are tried; every finite poset has a linear extension, so each
// isomorphism class still appears at least once.

bool oracle_transitive(std::uint64_t rel, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(rel >> (i * n + j) & 1)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if ((rel >> (j * n + k) & 1) && !(rel >> (i * n + k) & 1)) return false;
    }
  return true;
}

std::uint64_t oracle_relabel(std::uint64_t rel, std::size_t n,
                             const std::vector<std::size_t>& perm) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel >> (i * n + j) & 1)
        out |= std::uint64_t{1} << (perm[i] * n + perm[j]);
  return out;
}

std::uint64_t oracle_canonical(std::uint64_t rel, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto best = ~std::uint64_t{0};
  do {
    best = std::min(best, oracle_relabel(rel, n, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// All strict partial orders on n points, as canonicalized masks.
std::set<std::uint64_t> oracle_classes(std::size_t n) {
  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) cells.push_back(i * n + j);
  std::set<std::uint64_t> out;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << cells.size()); ++sub) {
    std::uint64_t rel = 0;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (sub >> c & 1) rel |= std::uint64_t{1} << cells[c];
    if (oracle_transitive(rel, n)) out.insert(oracle_canonical(rel, n));
  }
  return out;
}

std::uint64_t pack(const Poset& p) {
  const std::size_t n = p.size();
  std::uint64_t rel = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.less(i, j)) rel |= std::uint64_t{1} << (i * n + j);
  return rel;
}

}  // namespace

TEST_CASE("enumerate_posets agrees with the brute-force oracle class by class") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const std::set<std::uint64_t> expected = oracle_classes(n);
    const std::vector<Poset> got = enumerate_posets(n);
    std::set<std::uint64_t> got_canon;
    for (const Poset& p : got) got_canon.insert(oracle_canonical(pack(p), n));
    INFO("n = " << n);
    CHECK(got.size() == expected.size());
    CHECK(got_canon == expected);
  }
}

TEST_CASE("enumerate_posets counts are frozen") {
  const std::size_t expected[] = {1, 1, 2, 5, 16, 63, 318};
  for (std::size_t n = 0; n <= 6; ++n) {
    INFO("n = " << n);
    CHECK(enumerate_posets(n).size() == expected[n]);
  }
}

TEST_CASE("enumerate_posets outputs are pairwise non-isomorphic") {
  const auto all = enumerate_posets(4);
  REQUIRE(all.size() == 16);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK_FALSE(is_isomorphic(all[i], all[j]));
}

TEST_CASE("enumerate_posets labels every output e0..e{n-1}") {
  for (const Poset& p : enumerate_posets(3))
    CHECK(p.elements() == std::vector<std::string>{"e0", "e1", "e2"});
}

TEST_CASE("every random poset is isomorphic to exactly one enumerated poset") {
  const auto all = enumerate_posets(5);
  std::mt19937 rng(20240905);
  for (int trial = 0; trial < 10; ++trial) {
    const Poset p = random_poset(rng, 5, 0.2 + 0.06 * trial);
    std::size_t matches = 0;
    for (const Poset& q : all) matches += is_isomorphic(p, q);
    CHECK(matches == 1);
  }
}

TEST_CASE("enumerate_posets enforces its bound") {
  CHECK_THROWS_AS(enumerate_posets(7), BoundExceeded);
  CHECK_THROWS_AS(enumerate_posets(4, 3), BoundExceeded);
  CHECK(enumerate_posets(3, 3).size() == 5);
  try {
    enumerate_posets(9, 2);
    FAIL("expected BoundExceeded");
  } catch (const BoundExceeded& e) {
    CHECK(e.requested == 9);
    CHECK(e.bound == 2);
  }
}
