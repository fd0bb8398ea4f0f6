#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "stackgame/instance_io.hpp"
#include "support/fixtures.hpp"

using namespace stackgame;
using namespace stackgame::testing;

TEST_CASE("the embedded document parses to the example instance") {
  GameInstance parsed = paper_example_instance();
  CHECK(parsed == example_instance());

  // the shipped file carries the same document
  if (const char* path = std::getenv("STACKGAME_EXAMPLE")) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    CHECK(parse_instance(text.str()) == parsed);
  }
}

TEST_CASE("documents round-trip through serialization") {
  GameInstance instance = example_instance();
  CHECK(parse_instance(instance_to_json(instance)) == instance);

  AttackVector attack = AttackVector::unit(4, 8);
  InstanceDocument doc = parse_instance_document(instance_to_json(instance, attack));
  CHECK(doc.instance == instance);
  REQUIRE(doc.attack.has_value());
  CHECK(*doc.attack == attack);

  RandomGen gen(83);
  for (int i = 0; i < 10; ++i) {
    GameInstance random_instance = gen.game_instance();
    CHECK(parse_instance(instance_to_json(random_instance)) == random_instance);
  }
}

TEST_CASE("integers may appear unquoted, floats may not") {
  const char* text = R"({"assets": [
    {"name": "a", "reward_defender": 3, "cost_defender": "1", "reward_attacker": 2, "cost_attacker": "-1"},
    {"name": "b", "reward_defender": "1", "cost_defender": "0", "reward_attacker": "1", "cost_attacker": "-2"}
  ]})";
  GameInstance instance = parse_instance(text);
  CHECK(instance.asset(0).reward_defender == 3);

  const char* with_float = R"({"assets": [
    {"name": "a", "reward_defender": 0.5, "cost_defender": "1", "reward_attacker": "2", "cost_attacker": "-1"},
    {"name": "b", "reward_defender": "1", "cost_defender": "0", "reward_attacker": "1", "cost_attacker": "-2"}
  ]})";
  CHECK_THROWS_AS(parse_instance(with_float), ParseError);
}

TEST_CASE("malformed documents fail with located errors") {
  auto parse_fails_with = [](const std::string& text, const std::string& needle) {
    try {
      parse_instance(text);
      FAIL(("expected a parse error mentioning: " + needle));
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  parse_fails_with("{not json", "invalid JSON");
  parse_fails_with(R"({"assets": []})", "at least two");
  parse_fails_with(R"({"assets": [{"name": "a", "reward_defender": "1", "cost_defender": "1",
                     "reward_attacker": "1", "cost_attacker": "1"}]})",
                   "at least two");

  // zero denominator, named field
  std::string zero_den = R"({"assets": [
    {"name": "a", "reward_defender": "1/0", "cost_defender": "1", "reward_attacker": "1", "cost_attacker": "1"},
    {"name": "b", "reward_defender": "1", "cost_defender": "0", "reward_attacker": "1", "cost_attacker": "-2"}
  ]})";
  parse_fails_with(zero_den, "assets[0].reward_defender");

  // duplicate names surface through instance validation
  std::string dup = R"({"assets": [
    {"name": "a", "reward_defender": "1", "cost_defender": "1", "reward_attacker": "1", "cost_attacker": "1"},
    {"name": "a", "reward_defender": "1", "cost_defender": "0", "reward_attacker": "1", "cost_attacker": "-2"}
  ]})";
  parse_fails_with(dup, "duplicate");

  std::string unknown_field = R"({"assets": [
    {"name": "a", "reward_defender": "1", "cost_defender": "1", "reward_attacker": "1", "cost_attacker": "1", "typo": "1"},
    {"name": "b", "reward_defender": "1", "cost_defender": "0", "reward_attacker": "1", "cost_attacker": "-2"}
  ]})";
  parse_fails_with(unknown_field, "typo");

  std::string missing_field = R"({"assets": [
    {"name": "a", "reward_defender": "1", "cost_defender": "1", "reward_attacker": "1"},
    {"name": "b", "reward_defender": "1", "cost_defender": "0", "reward_attacker": "1", "cost_attacker": "-2"}
  ]})";
  parse_fails_with(missing_field, "cost_attacker");

  std::string bad_attack = R"({"assets": [
    {"name": "a", "reward_defender": "1", "cost_defender": "1", "reward_attacker": "1", "cost_attacker": "1"},
    {"name": "b", "reward_defender": "1", "cost_defender": "0", "reward_attacker": "1", "cost_attacker": "-2"}
  ], "attack": ["1"]})";
  parse_fails_with(bad_attack, "attack");
}

TEST_CASE("anchor rotation moves the chosen asset to the back") {
  GameInstance instance = example_instance();
  GameInstance rotated = rotate_anchor(instance, "T3");
  CHECK(rotated.anchor().name == "T3");
  CHECK(rotated.asset(0).name == "T1");
  CHECK(rotated.asset(1).name == "T2");
  CHECK(rotated.asset(2).name == "T4");
  CHECK(rotated.size() == 8);

  CHECK(rotate_anchor(instance, "5").anchor().name == "T5");
  CHECK(rotate_anchor(instance, "T8") == instance);
  CHECK_THROWS_AS(rotate_anchor(instance, "nope"), ValidationError);
  CHECK_THROWS_AS(rotate_anchor(instance, "9"), ValidationError);

  // a bundled attack vector follows its asset
  InstanceDocument doc{instance, AttackVector::unit(2, 8)};
  InstanceDocument rotated_doc = rotate_anchor(doc, "T3");
  REQUIRE(rotated_doc.attack.has_value());
  CHECK((*rotated_doc.attack)[7] == 1);
}

TEST_CASE("inline attack specs cover vertices, uniform and literals") {
  CHECK(parse_attack_spec("e5", 8) == AttackVector::unit(4, 8));
  CHECK(parse_attack_spec("uniform", 4) == AttackVector::uniform(4));
  CHECK(parse_attack_spec("1/2,0,1/2", 3) ==
        AttackVector(rats({"1/2", "0", "1/2"})));
  CHECK(parse_attack_spec("0.25,0.75", 2) == AttackVector(rats({"1/4", "3/4"})));

  CHECK_THROWS_AS(parse_attack_spec("e9", 8), ParseError);
  CHECK_THROWS_AS(parse_attack_spec("e0", 8), ParseError);
  CHECK_THROWS_AS(parse_attack_spec("", 8), ParseError);
  CHECK_THROWS_AS(parse_attack_spec("1/2,1/2", 3), ParseError);
  CHECK_THROWS_AS(parse_attack_spec("1/2,x", 2), ParseError);
  // entries must form a probability vector
  CHECK_THROWS_AS(parse_attack_spec("1/2,1/4", 2), ValidationError);
}
