#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "phm/driver.hpp"

using namespace phm;

TEST_CASE("every fixture passes full validation") {
  for (const auto& name : fixture_names()) {
    const Bundle b = fixture(name);
    const Outcome o = validate_bundle(b);
    CHECK(o.pass());
  }
}

TEST_CASE("every expected entry equals the recomputed value") {
  for (const auto& name : fixture_names()) {
    const Outcome o = check_expected(fixture(name));
    CHECK(o.pass());
  }
}

TEST_CASE("bundles round-trip through serialization bit-exactly") {
  for (const auto& name : fixture_names()) {
    const Bundle b = fixture(name);
    const std::string text = serialize_bundle(b);
    const Bundle back = parse_bundle_text(text);
    CHECK(serialize_bundle(back) == text);
    CHECK(back.hopf.comult == b.hopf.comult);
    CHECK(back.algebra->bracket == b.algebra->bracket);
    CHECK(back.module->coaction.rho == b.module->coaction.rho);
    CHECK(back.phi->maps == b.phi->maps);
  }
}

TEST_CASE("validation reports are identical after a round trip") {
  for (const auto& name : fixture_names()) {
    const Bundle b = fixture(name);
    const Bundle back = parse_bundle_text(serialize_bundle(b));
    CHECK(render_outcome_jsonl(validate_bundle(b)) == render_outcome_jsonl(validate_bundle(back)));
  }
}

TEST_CASE("malformed rationals are rejected with a path") {
  const Bundle b = fixture("F1");
  std::string text = serialize_bundle(b);
  const auto pos = text.find("\"1\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 3, "\"1/0\"");
  CHECK_THROWS_AS(parse_bundle_text(text), SchemaError);
  try {
    parse_bundle_text(text);
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
  }
}

TEST_CASE("rationals not in lowest terms are rejected") {
  const Bundle b = fixture("F1");
  std::string text = serialize_bundle(b);
  const auto pos = text.find("\"1\"");
  text.replace(pos, 3, "\"2/4\"");
  CHECK_THROWS_AS(parse_bundle_text(text), SchemaError);
}

TEST_CASE("a bundle missing the antipode block names it") {
  const Bundle b = fixture("F1");
  std::string text = serialize_bundle(b);
  const auto pos = text.find("\"antipode\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 10, "\"antipodes\"");
  try {
    parse_bundle_text(text);
    CHECK(false);
  } catch (const SchemaError& e) {
    CHECK(e.path == "$.hopf.antipode");
  }
}

TEST_CASE("out-of-range indices are rejected") {
  const Bundle b = fixture("F2");
  std::string text = serialize_bundle(b);
  // The bracket block of F2 holds [3, 6, "1"]; corrupt the row index.
  const auto pos = text.find("[3,6,\"1\"]");
  std::string compact = text;
  if (pos == std::string::npos) {
    // serialized with spaces; rebuild via a direct corruption below
    nlohmann::json j = nlohmann::json::parse(text);
    j["algebra"]["bracket"]["0"][0][0] = 99;
    CHECK_THROWS_AS(parse_bundle_text(j.dump()), SchemaError);
    return;
  }
  compact.replace(pos, 9, "[9,6,\"1\"]");
  CHECK_THROWS_AS(parse_bundle_text(compact), SchemaError);
}

TEST_CASE("unknown fixture names are rejected") {
  CHECK_THROWS_AS(fixture("F9"), UnknownFixtureError);
}

TEST_CASE("bundle files are written and parsed from disk") {
  const Bundle b = fixture("F1");
  const std::string path = "test_f1_roundtrip.bundle.json";
  write_bundle(b, path);
  const Bundle back = parse_bundle(path);
  CHECK(serialize_bundle(back) == serialize_bundle(b));
  std::remove(path.c_str());
}

TEST_CASE("the lemma suite passes on every fixture") {
  for (const auto& name : fixture_names()) {
    const Outcome o = lemma_suite(fixture(name));
    CHECK(o.pass());
  }
}

TEST_CASE("the fundamental outcome reports hypotheses per fixture") {
  const Outcome o1 = fundamental_outcome(fixture("F1"));
  CHECK(o1.pass());
  bool saw = false;
  for (const auto& [k, v] : o1.notes) {
    if (k == "hypotheses") {
      saw = true;
      CHECK(v == "satisfied");
    }
  }
  CHECK(saw);

  const Outcome o2 = fundamental_outcome(fixture("F2"));
  CHECK(o2.pass());
  for (const auto& [k, v] : o2.notes) {
    if (k == "hypotheses") CHECK(v == "not satisfied");
    if (k == "isomorphism") CHECK(v == "verified");
  }
}

TEST_CASE("coinvariants listing is deterministic and carries dimensions") {
  const Bundle b = fixture("F1");
  const std::string listing = coinvariants_listing(b);
  CHECK(listing == coinvariants_listing(b));
  CHECK(listing.find("\"object\":\"McoH\"") != std::string::npos);
  CHECK(listing.find("\"object\":\"B\"") != std::string::npos);
  CHECK(listing.find("\"dim\":1") != std::string::npos);
}
