#include <gtest/gtest.h>

#include <filesystem>

#include "gcl/model_io.hpp"
#include "gcl/random_model.hpp"

namespace gcl {
namespace {

TEST(ModelIo, MinimalFileHasEmptyTable) {
  const ModelFile f = parse_model(R"({"agents": 1, "actions": ["a"], "states": ["s0"]})");
  EXPECT_EQ(f.model.agents(), 1);
  EXPECT_EQ(f.model.num_states(), 1);
  EXPECT_EQ(f.model.num_entries(), 0u);
  EXPECT_FALSE(f.pointed.has_value());
}

TEST(ModelIo, DuplicateOutcomeKey) {
  const std::string text = R"({"agents": 1, "actions": ["a"], "states": ["s0"],
    "outcomes": [{"state": "s0", "profile": ["a"], "to": ["s0"]},
                 {"state": "s0", "profile": ["a"], "to": ["s0"]}]})";
  try {
    parse_model(text);
    FAIL() << "expected a duplicate key error";
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate outcome key"), std::string::npos);
  }
}

TEST(ModelIo, DanglingReferences) {
  EXPECT_THROW(parse_model(R"({"agents": 1, "actions": ["a"], "states": ["s0"],
      "outcomes": [{"state": "s1", "profile": ["a"], "to": []}]})"), ModelError);
  EXPECT_THROW(parse_model(R"({"agents": 1, "actions": ["a"], "states": ["s0"],
      "outcomes": [{"state": "s0", "profile": ["b"], "to": []}]})"), ModelError);
  EXPECT_THROW(parse_model(R"({"agents": 1, "actions": ["a"], "states": ["s0"],
      "outcomes": [{"state": "s0", "profile": ["a"], "to": ["s9"]}]})"), ModelError);
  EXPECT_THROW(parse_model(R"({"agents": 2, "actions": ["a"], "states": ["s0"],
      "outcomes": [{"state": "s0", "profile": ["a"], "to": []}]})"), ModelError);
  EXPECT_THROW(parse_model(R"({"agents": 1, "actions": ["a"], "states": ["s0"],
      "labels": {"s7": ["p"]}})"), ModelError);
  EXPECT_THROW(parse_model(R"({"agents": 1, "actions": ["a"], "states": ["s0"], "pointed": "x"})"), ModelError);
}

TEST(ModelIo, MalformedFiles) {
  EXPECT_THROW(parse_model("{"), ModelError);
  EXPECT_THROW(parse_model("[]"), ModelError);
  EXPECT_THROW(parse_model(R"({"actions": ["a"], "states": ["s0"]})"), ModelError);
  EXPECT_THROW(parse_model(R"({"agents": "two", "actions": ["a"], "states": ["s0"]})"), ModelError);
  EXPECT_THROW(parse_model(R"({"agents": 1, "actions": [1], "states": ["s0"]})"), ModelError);
}

TEST(ModelIo, EmptyTargetEqualsOmission) {
  const ModelFile f = parse_model(R"({"agents": 1, "actions": ["a"], "states": ["s0"],
      "outcomes": [{"state": "s0", "profile": ["a"], "to": []}]})");
  EXPECT_EQ(f.model.num_entries(), 0u);
}

TEST(ModelIo, ReadsTheDocumentedExample) {
  const ModelFile f = parse_model(R"({ "agents": 2, "actions": ["x","y"], "states": ["s0","s1"],
      "atoms": ["p","q"], "labels": {"s0": ["p"], "s1": []},
      "outcomes": [ {"state":"s0", "profile":["x","y"], "to":["s1"]} ] })");
  EXPECT_TRUE(f.model.has_label(0, "p"));
  EXPECT_EQ(f.model.atoms(), (std::set<std::string>{"p", "q"}));
  EXPECT_EQ(f.model.profile_outcome(0, {0, 1}), std::vector<StateId>{1});
}

TEST(ModelIo, RoundTripOnGeneratedModels) {
  RandomModelConfig cfg;
  cfg.states = 4;
  cfg.actions = 3;
  for (const LogicId& x : LogicId::all()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Model m = random_model(cfg, x, seed);
      const ModelFile back = parse_model(format_model(m, 1));
      EXPECT_EQ(back.model, m);
      EXPECT_EQ(back.pointed, std::optional<StateId>(1));
    }
  }
}

TEST(ModelIo, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "gcl_model_io_test.json";
  const Model m = random_model(RandomModelConfig{}, LogicId::parse("SI"), 5);
  save_model(m, path, 0);
  const ModelFile back = load_model(path);
  EXPECT_EQ(back.model, m);
  EXPECT_EQ(back.pointed, std::optional<StateId>(0));
  std::filesystem::remove(path);
  EXPECT_THROW(load_model(path), ModelError);
}

}  // namespace
}  // namespace gcl
