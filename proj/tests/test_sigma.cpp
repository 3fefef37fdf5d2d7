#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ordpat/ordpat.hpp"

using namespace ordpat;

namespace {

std::vector<LabelPair> sorted(const std::set<LabelPair>& s) {
  return {s.begin(), s.end()};
}

// The generating relation, rebuilt from the pattern definition alone.
std::set<LabelPair> expected_r0(const SigmaPatternPoset& sp) {
  const ConsistencyPattern& p = sp.pattern;
  std::set<LabelPair> r0;
  for (std::size_t k = 0; k < p.consistent.size(); ++k)
    for (std::size_t j : p.consistent[k]) {
      r0.insert({sp.alpha(k), sp.beta(j)});
      r0.insert({sp.gamma(j), sp.delta(k)});
    }
  for (const auto& [i, j] : p.inconsistent) {
    r0.insert({sp.beta(i), sp.gamma(j)});
    r0.insert({sp.beta(j), sp.gamma(i)});
  }
  return r0;
}

// For maximal patterns one composition step adds exactly the alpha-gamma and
// beta-delta pairs across each consistent set, and a second step adds every
// alpha_C below every other delta_C'.
std::set<LabelPair> expected_r1(const SigmaPatternPoset& sp) {
  const ConsistencyPattern& p = sp.pattern;
  std::set<LabelPair> r1 = expected_r0(sp);
  for (std::size_t k = 0; k < p.consistent.size(); ++k)
    for (std::size_t j = 0; j < p.indices.size(); ++j) {
      if (p.consistent[k].count(j)) continue;
      r1.insert({sp.alpha(k), sp.gamma(j)});
      r1.insert({sp.beta(j), sp.delta(k)});
    }
  return r1;
}

std::set<LabelPair> expected_r2(const SigmaPatternPoset& sp) {
  std::set<LabelPair> r2 = expected_r1(sp);
  for (std::size_t k = 0; k < sp.pattern.consistent.size(); ++k)
    for (std::size_t l = 0; l < sp.pattern.consistent.size(); ++l)
      if (k != l) r2.insert({sp.alpha(k), sp.delta(l)});
  return r2;
}

CheckStatus status_of(const Report& r, const std::string& name) {
  const CheckResult* c = r.find(name);
  REQUIRE(c != nullptr);
  return c->status;
}

std::vector<ConsistencyPattern> generator_outputs() {
  return {gen_tp1(2),   gen_tp1(3), gen_tp2(2, 3), gen_tp2(3, 3),
          gen_atp(3),   gen_sop3(1), gen_sop3(2),  gen_sop3(3),
          gen_tp(2, 2), gen_tp(3, 3)};
}

}  // namespace

TEST_CASE("sigma_op has only the staircase relations") {
  SECTION("n=1 is a 2-antichain") {
    const Poset p = sigma_op(1);
    CHECK(p.size() == 2);
    CHECK(p.relation_size() == 0);
  }
  SECTION("n=3 relates alpha_i and beta_j exactly for i < j") {
    const Poset p = sigma_op(3);
    CHECK(p.pairs() == std::vector<LabelPair>{{"alpha_0", "beta_1"},
                                              {"alpha_0", "beta_2"},
                                              {"alpha_1", "beta_2"}});
  }
  SECTION("the relation count is n choose 2") {
    CHECK(sigma_op(4).relation_size() == 6);
    CHECK(sigma_op(5).relation_size() == 10);
  }
  CHECK_THROWS_AS(sigma_op(0), DegenerateParameter);
}

TEST_CASE("sigma_op truncations embed upward") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto e = find_embedding(sigma_op(n), sigma_op(n + 1));
    INFO("n = " << n);
    REQUIRE(e.has_value());
    CHECK(verify_embedding(*e));
  }
}

TEST_CASE("sigma_ip indexes one beta per subset") {
  SECTION("n=1 has a single relation") {
    const Poset p = sigma_ip(1);
    CHECK(p.elements() ==
          std::vector<std::string>{"alpha_0", "beta_{0}", "beta_{}"});
    CHECK(p.pairs() == std::vector<LabelPair>{{"alpha_0", "beta_{0}"}});
  }
  SECTION("n=3 has 11 elements and 12 relations") {
    const Poset p = sigma_ip(3);
    CHECK(p.size() == 11);
    CHECK(p.relation_size() == 12);  // sum of |W| over subsets = 3 * 2^2
  }
  SECTION("the empty subset stays at height 0") {
    const Poset p = sigma_ip(3);
    const auto h = heights(p);
    CHECK(h[p.index_of("beta_{}")] == 0);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(h[p.index_of("alpha_" + std::to_string(i))] == 0);
    CHECK(h[p.index_of("beta_{0,1,2}")] == 1);
  }
  SECTION("the bound guards the exponential size") {
    CHECK_THROWS_AS(sigma_ip(6), BoundExceeded);
    CHECK(sigma_ip(6, 6).size() == 6 + 64);
    CHECK_THROWS_AS(sigma_ip(0), DegenerateParameter);
  }
}

TEST_CASE("sigma_ip truncations embed upward") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto e = find_embedding(sigma_ip(n), sigma_ip(n + 1));
    INFO("n = " << n);
    REQUIRE(e.has_value());
    CHECK(verify_embedding(*e));
  }
}

TEST_CASE("sigma_pattern sizes and label families follow the pattern") {
  const auto sp = sigma_pattern(gen_sop3(1));
  CHECK(sp.poset.size() == 20);  // 2|J| + 2|C| = 12 + 8
  std::size_t alphas = 0, betas = 0, gammas = 0, deltas = 0;
  for (const auto& l : sp.poset.elements()) {
    alphas += l.rfind("alpha_", 0) == 0;
    betas += l.rfind("beta_", 0) == 0;
    gammas += l.rfind("gamma_", 0) == 0;
    deltas += l.rfind("delta_", 0) == 0;
  }
  CHECK(alphas == 4);
  CHECK(betas == 6);
  CHECK(gammas == 6);
  CHECK(deltas == 4);
  CHECK(sigma_pattern(gen_tp2(2, 3)).poset.size() == 30);
}

TEST_CASE("sigma_pattern generates exactly the defining relations") {
  for (const auto& p : {gen_tp2(2, 3), gen_sop3(1), gen_tp(2, 2)}) {
    const auto sp = sigma_pattern(p);
    CHECK(sp.r0 == sorted(expected_r0(sp)));
  }
}

TEST_CASE("the closure stages are nested and end at the poset relation") {
  for (const auto& p : generator_outputs()) {
    const auto sp = sigma_pattern(p);
    INFO("pattern with " << p.indices.size() << " indices, "
                         << p.consistent.size() << " consistent sets");
    CHECK(std::includes(sp.r1.begin(), sp.r1.end(), sp.r0.begin(), sp.r0.end()));
    CHECK(std::includes(sp.r2.begin(), sp.r2.end(), sp.r1.begin(), sp.r1.end()));
    CHECK(sp.r2 == sp.poset.pairs());
  }
}

TEST_CASE("maximal patterns reach the closed-form closure") {
  // gen_sop3 fails only the boundary partner-count axiom; the closed form
  // needs consistent-set maximality alone, so it participates here too.
  for (const auto& p :
       {gen_tp1(2), gen_tp2(2, 3), gen_atp(3), gen_sop3(1), gen_sop3(2)}) {
    const auto sp = sigma_pattern(p);
    INFO("pattern with " << p.indices.size() << " indices, "
                         << p.consistent.size() << " consistent sets");
    CHECK(sp.r1 == sorted(expected_r1(sp)));
    CHECK(sp.r2 == sorted(expected_r2(sp)));
  }
}

TEST_CASE("nothing sits below an alpha or above a delta") {
  for (const auto& p : generator_outputs()) {
    const auto sp = sigma_pattern(p);
    for (const auto& [a, b] : sp.r2) {
      CHECK(a.rfind("delta_", 0) != 0);
      CHECK(b.rfind("alpha_", 0) != 0);
    }
  }
}

TEST_CASE("verify_sigma_properties passes on maximal patterns") {
  for (const auto& p : {gen_tp2(2, 3), gen_tp1(3), gen_atp(3), gen_sop3(2)}) {
    const Report r = verify_sigma_properties(sigma_pattern(p));
    INFO("pattern with " << p.indices.size() << " indices, "
                         << p.consistent.size() << " consistent sets");
    for (const char* name : {"strict_order", "closure_audit", "heights",
                             "alpha_delta", "five_conditions", "closed_form"})
      CHECK(status_of(r, name) == CheckStatus::Pass);
    CHECK(r.ok());
  }
}

TEST_CASE("alpha_C never reaches its own delta_C") {
  const auto sp = sigma_pattern(gen_atp(3));
  const std::size_t m = sp.pattern.consistent.size();
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l)
      CHECK(sp.poset.less(sp.alpha(k), sp.delta(l)) == (k != l));
}

TEST_CASE("verify_sigma_properties flags a non-maximal pattern") {
  const Report r = verify_sigma_properties(sigma_pattern(gen_tp(3, 3)));
  CHECK(status_of(r, "strict_order") == CheckStatus::Pass);
  CHECK(status_of(r, "closure_audit") == CheckStatus::Pass);
  CHECK(status_of(r, "heights") == CheckStatus::Pass);
  CHECK(status_of(r, "alpha_delta") == CheckStatus::Pass);

  const CheckResult* five = r.find("five_conditions");
  REQUIRE(five != nullptr);
  CHECK(five->status == CheckStatus::Fail);
  REQUIRE_FALSE(five->witnesses.empty());
  // Each witness pins down one (j, C) pair with the five truth values.
  CHECK(five->witnesses.front().rfind("j=", 0) == 0);
  CHECK(five->witnesses.front().find(": in=") != std::string::npos);

  const CheckResult* cf = r.find("closed_form");
  REQUIRE(cf != nullptr);
  CHECK(cf->status == CheckStatus::Skip);
  CHECK(cf->note.find("maximality") != std::string::npos);
}

TEST_CASE("the height check is skipped when an index is uncovered") {
  const auto p =
      make_pattern({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}}, {{"2", "3"}});
  REQUIRE_FALSE(check_coverage(p).ok());
  const Report r = verify_sigma_properties(sigma_pattern(p));
  const CheckResult* h = r.find("heights");
  REQUIRE(h != nullptr);
  CHECK(h->status == CheckStatus::Skip);
  CHECK_FALSE(h->note.empty());
  CHECK(status_of(r, "strict_order") == CheckStatus::Pass);
}

TEST_CASE("sigma_pattern rejects patterns failing validation") {
  CHECK_THROWS_AS(sigma_pattern(make_pattern({"1"}, {}, {{"1"}})), Error);
  CHECK_THROWS_AS(
      sigma_pattern(make_pattern({"1", "2"}, {{"1", "2"}}, {{"1", "2"}})),
      Error);
}

TEST_CASE("pattern poset truncations embed upward") {
  const auto small_sop = sigma_pattern(gen_sop3(1));
  const auto big_sop = sigma_pattern(gen_sop3(2));
  const auto e1 = find_embedding(small_sop.poset, big_sop.poset);
  REQUIRE(e1.has_value());
  CHECK(verify_embedding(*e1));

  const auto small_tp1 = sigma_pattern(gen_tp1(2));
  const auto big_tp1 = sigma_pattern(gen_tp1(3));
  const auto e2 = find_embedding(small_tp1.poset, big_tp1.poset);
  REQUIRE(e2.has_value());
  CHECK(verify_embedding(*e2));
}
