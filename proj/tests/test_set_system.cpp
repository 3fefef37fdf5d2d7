#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ordpat/ordpat.hpp"

using namespace ordpat;
using ordpat::testing::random_poset;

namespace {

SetSystem random_system(std::mt19937& rng, std::size_t points,
                        std::size_t names) {
  std::vector<std::string> universe;
  for (std::size_t i = 0; i < points; ++i)
    universe.push_back("u" + std::to_string(i));
  std::bernoulli_distribution coin(0.5);
  std::map<std::string, std::set<std::string>> sets;
  for (std::size_t s = 0; s < names; ++s) {
    std::set<std::string> ext;
    for (const auto& u : universe)
      if (coin(rng)) ext.insert(u);
    sets["n" + std::to_string(s)] = std::move(ext);
  }
  return make_set_system(std::move(universe), std::move(sets));
}

}  // namespace

TEST_CASE("make_set_system validates its inputs") {
  CHECK_THROWS_AS(make_set_system({"u", "u"}, {}), Error);
  CHECK_THROWS_AS(make_set_system({"u"}, {{"A", {"v"}}}), Error);
  const SetSystem ok = make_set_system({"u", "v"}, {{"A", {"u"}}, {"B", {}}});
  CHECK(ok.sets.size() == 2);
}

TEST_CASE("inclusion_poset quotients by extension and orders by inclusion") {
  const SetSystem s = make_set_system(
      {"1", "2"}, {{"A", {"1"}}, {"B", {"1", "2"}}, {"C", {"1"}}});
  const InclusionPoset ip = inclusion_poset(s);
  CHECK(ip.poset.size() == 2);
  CHECK(ip.class_of.at("A") == "A");
  CHECK(ip.class_of.at("C") == "A");  // least name represents the class
  CHECK(ip.class_of.at("B") == "B");
  CHECK(ip.poset.less("A", "B"));
  CHECK_FALSE(ip.poset.less("B", "A"));
}

TEST_CASE("pairwise disjoint nonempty sets form an antichain") {
  const SetSystem s = make_set_system(
      {"1", "2", "3"}, {{"A", {"1"}}, {"B", {"2"}}, {"C", {"3"}}});
  const Poset p = inclusion_poset(s).poset;
  CHECK(p.size() == 3);
  CHECK(p.relation_size() == 0);
}

TEST_CASE("inclusion_poset matches set containment on random systems") {
  std::mt19937 rng(20240908);
  for (int trial = 0; trial < 12; ++trial) {
    const SetSystem s = random_system(rng, 5, 6);
    const InclusionPoset ip = inclusion_poset(s);

    // The quotient is faithful: every name maps to a representative with the
    // same extension, and representatives have pairwise distinct extensions.
    std::set<std::set<std::string>> rep_exts;
    for (const auto& l : ip.poset.elements())
      CHECK(rep_exts.insert(s.sets.at(l)).second);
    for (const auto& [name, rep] : ip.class_of)
      CHECK(s.sets.at(name) == s.sets.at(rep));

    // The order is exactly strict containment of extensions.
    for (const auto& a : ip.poset.elements())
      for (const auto& b : ip.poset.elements()) {
        const auto& ea = s.sets.at(a);
        const auto& eb = s.sets.at(b);
        const bool strict =
            ea.size() < eb.size() &&
            std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
        CHECK(ip.poset.less(a, b) == strict);
      }
  }
}

TEST_CASE("down_set_system collects principal ideals") {
  const SetSystem chain = down_set_system(gen_chain(2));
  CHECK(chain.sets.at("c0") == std::set<std::string>{"c0"});
  CHECK(chain.sets.at("c1") == std::set<std::string>{"c0", "c1"});

  const SetSystem flat = down_set_system(ordpat::testing::antichain(3));
  for (const auto& [name, ext] : flat.sets)
    CHECK(ext == std::set<std::string>{name});
}

TEST_CASE("inclusion_poset of down_set_system recovers every small poset") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const Poset back = inclusion_poset(down_set_system(p)).poset;
      CHECK(is_isomorphic(back, p));
    }
}

TEST_CASE("has_sop finds the structured systems and rejects the flat one") {
  SECTION("the order-property system contains its sigma") {
    const auto is = op_sigma_sets(4);
    const auto e = has_sop(is.system, sigma_op(4));
    REQUIRE(e.has_value());
    CHECK(verify_embedding(*e));
  }
  SECTION("three disjoint sets contain no 2-chain") {
    const SetSystem s = make_set_system(
        {"1", "2", "3"}, {{"A", {"1"}}, {"B", {"2"}}, {"C", {"3"}}});
    CHECK_FALSE(has_sop(s, gen_chain(2)).has_value());
  }
  SECTION("every poset occurs in its own ideal system") {
    for (const Poset& p : enumerate_posets(3)) {
      const auto e = has_sop(down_set_system(p), p);
      REQUIRE(e.has_value());
      CHECK(verify_embedding(*e));
    }
  }
}

TEST_CASE("has_sup accepts the disjoint sum of all 3-element posets") {
  const Poset realizer = disjoint_union(enumerate_posets(3));
  const Report r = has_sup(down_set_system(realizer), 3);
  for (const char* name : {"sup_size_1", "sup_size_2", "sup_size_3"}) {
    const CheckResult* c = r.find(name);
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::Pass);
  }
  CHECK(r.ok());
}

TEST_CASE("has_sup rejects a chain system at size 2") {
  const Report r = has_sup(down_set_system(gen_chain(3)), 2);
  const CheckResult* one = r.find("sup_size_1");
  REQUIRE(one != nullptr);
  CHECK(one->status == CheckStatus::Pass);
  const CheckResult* two = r.find("sup_size_2");
  REQUIRE(two != nullptr);
  CHECK(two->status == CheckStatus::Fail);
  REQUIRE(two->witnesses.size() == 1);  // only the 2-antichain is missing
  CHECK(two->witnesses.front().find("size 2 poset") != std::string::npos);
  CHECK_FALSE(r.ok());
}

TEST_CASE("has_sup passes trivially at size 1") {
  const SetSystem s = make_set_system({"u"}, {{"E", {}}});
  CHECK(has_sup(s, 1).ok());
}

TEST_CASE("has_sup enforces the enumeration bound") {
  const SetSystem s = make_set_system({"u"}, {{"E", {}}});
  CHECK_THROWS_AS(has_sup(s, 7), BoundExceeded);
  CHECK_THROWS_AS(has_sup(s, 5, 4), BoundExceeded);
}
