#include <doctest.h>

#include <fstream>
#include <sstream>

#include "stronglie/asym.hpp"
#include "stronglie/error.hpp"
#include "support.hpp"

using namespace stronglie;
using testing::w;

namespace {

const DerivationStep *find_step(const DerivationLog &log, const std::string &name) {
  for (const auto &s : log.steps)
    if (s.step == name)
      return &s;
  return nullptr;
}

} // namespace

TEST_SUITE("asym") {
  TEST_CASE("replay at p=3") {
    const auto log = replay_appendix(3);
    CHECK(log.failures == 0);
    CHECK(log.derived_equations == 16);
    CHECK(log.targets.size() == 10);
    CHECK(log.axioms_used == std::set<std::string>{"L1", "S1", "S2", "S3", "S4", "S5", "S6"});
    for (const auto &s : log.steps)
      CHECK_MESSAGE(s.verified, s.step);

    // targets are exactly the swap-orbit representatives of (3,3)
    std::set<Word> targets;
    for (const auto &[m, fact] : log.targets)
      targets.insert(m);
    std::set<Word> reps;
    for (const Word &x : words_of(Multiweight{3, 3}))
      reps.insert(std::min(x, swap_ab(x)));
    CHECK(targets == reps);
  }

  TEST_CASE("printed steps") {
    const auto log = replay_appendix(5);
    const Alphabet ab(2);
    const auto *s9 = find_step(log, "S9");
    REQUIRE(s9);
    CHECK(s9->kind == "mult");
    REQUIRE(s9->certificate.has_value());
    REQUIRE(s9->certificate->size() == 1);
    CHECK((*s9->certificate)[0].left == w("bb"));
    CHECK((*s9->certificate)[0].rel == "S1");

    const auto *st2a = find_step(log, "⋆2a");
    REQUIRE(st2a);
    CHECK(st2a->kind == "rule2");
    CHECK(st2a->inputs == std::vector<std::string>{"⋆1", "S8"});
    CHECK(format_poly(st2a->output, ab) == "a*b*a*b*a*b + b*a^2*b*a*b");
    const auto *st2 = find_step(log, "⋆2");
    REQUIRE(st2);
    CHECK(format_poly(st2->output, ab) == "a*b*a*b*a*b + a*b^2*a*b*a");
    const auto *p1 = find_step(log, "🎃1");
    REQUIRE(p1);
    CHECK(format_poly(p1->output, ab) == "a^2*b^2*a*b");
  }

  TEST_CASE("every fact is confirmed by the full ideal") {
    const auto log = replay_appendix(7);
    const auto rs = paper_relation_set(4, 7, Which::all);
    for (const auto &s : log.steps) {
      if (s.kind == "mult" || s.kind == "combine")
        CHECK(is_member(s.output, rs).member);
      else
        CHECK(is_member(s.output + swap_ab(s.output), rs).member);
    }
  }

  TEST_CASE("products match the data file") {
    std::ifstream in(std::string(STRONGLIE_DATA_DIR) + "/k4_appendix.rel");
    std::stringstream text;
    text << in.rdbuf();
    const auto file = parse_relation_set(text.str(), 3);
    const auto prods = appendix_products(3);
    REQUIRE(file.size() == prods.size());
    for (std::size_t i = 0; i < prods.size(); ++i) {
      CHECK(file.relations()[i].label == prods[i].first);
      CHECK(file.relations()[i].poly == prods[i].second);
    }
  }

  TEST_CASE("p=2 is rejected") { CHECK_THROWS_AS(replay_appendix(2), Error); }

  TEST_CASE("rules") {
    const PrimeField F(3);
    const Alphabet ab(2);
    auto P = [&](const char *t) { return parse_poly(t, ab, F); };
    AsymEngine E(paper_relation_set(4, 3, Which::all));
    // L1 = p + swap(p)
    E.from_equation("F", P("a^2*b^2 + a*b^2*a + a*b*a*b"), {{1, "L1"}});
    E.rule1("G", "F", P("a*b^2*a"));
    E.expect(P("a^2*b^2 + b*a^2*b + a*b*a*b"));
    E.rule1("H", "G", P("b*a^2*b"));
    CHECK(E.fact("H").poly == E.fact("F").poly);
    CHECK_THROWS_AS(E.rule1("X", "F", P("b^2*a^2")), Error);
    CHECK_THROWS_AS(E.rule1("F", "F", P("a^2*b^2")), Error);
    CHECK_THROWS_AS(E.from_equation("Y", P("a^2*b^2"), {{1, "L1"}}), Error);
    CHECK_THROWS_AS(E.resolve("nope"), Error);
    CHECK(E.resolve("F") == E.fact("F").poly + swap_ab(E.fact("F").poly));
    CHECK(E.resolve("S1'") == swap_ab(E.resolve("S1")));
    CHECK_THROWS_AS(E.expect(P("a")), Error);
  }

  TEST_CASE("cross-check against a smaller ideal refuses unsupported steps") {
    const PrimeField F(3);
    const Alphabet ab(2);
    const auto all = paper_relation_set(4, 3, Which::all);
    AsymEngine E(all, all.subset({"S1", "S1'"}));
    CHECK_THROWS_WITH_AS(E.from_equation("F", parse_poly("a^2*b^2 + a*b^2*a + a*b*a*b", ab, F),
                                         {{1, "L1"}}),
                         doctest::Contains("cross-check"), Error);
    CHECK_THROWS_AS(E.multiply("M", w("a"), "L1", Word{}), Error);
    CHECK_NOTHROW(E.multiply("N", w("b"), "S1", Word{}));
    CHECK_THROWS_AS(E.sum("Z", {}), Error);
  }

  TEST_CASE("log json") {
    const auto j = replay_appendix(3).to_json();
    CHECK(j["steps"].size() == 39);
    CHECK(j["steps"][0]["kind"] == "mult");
    CHECK(j["steps"][0]["verified"] == true);
    CHECK(j["targets"].size() == 10);
    CHECK(j["axioms_used"].size() == 7);
  }
}
