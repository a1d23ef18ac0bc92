#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gcl/formula.hpp"
#include "gcl/logic_id.hpp"
#include "gcl/model.hpp"
#include "gcl/random_model.hpp"

namespace gcl {

struct FormulaGenConfig {
  int agents = 2;
  std::vector<std::string> atoms = {"p", "q"};
  int max_depth = 2;
  /// Rough bound on the number of connectives.
  int max_size = 10;
};

Coalition random_coalition(std::mt19937_64& rng, int agents);

/// A random formula of modal depth at most `cfg.max_depth`.
Formula random_formula(std::mt19937_64& rng, const FormulaGenConfig& cfg);

enum class Schema {
  Tau,   // propositional tautology over modal subformulas
  NAAA,  // ~<C>false
  MG,    // <>(a -> b) -> (<C>a -> <C>b)
  MC,    // <C>a -> <D>a, C within D
  Ser,   // <C>true
  IA,    // <C>a & <D>b -> <C u D>(a & b), C and D disjoint
  Det,   // <C>(a | b) -> (<C>a | <AG>b)
  CEA,   // <C>a -> <>true
  SIA,   // <>a & <C>b -> <C>(a & b)
  Mon,   // <C>a -> <D>(a | b), C within D: the Mon rule on a valid premise
};

std::vector<Schema> all_schemas();
std::string to_string(Schema s);
/// The least logic in which every instance of `s` is valid.
LogicId schema_logic(Schema s);
/// A random instance with bodies drawn from `cfg` (depth at most
/// `cfg.max_depth` below the outer modality).
Formula schema_instance(Schema s, std::mt19937_64& rng, const FormulaGenConfig& cfg);

struct FuzzConfig {
  LogicId logic;
  int agents = 2;
  int iterations = 100;
  std::uint64_t seed = 0;
  int max_depth = 2;
  int max_size = 8;
  std::vector<std::string> atoms = {"p", "q"};
  /// Random X-models each verdict is cross-checked against.
  int models_per_formula = 3;
  /// Upper bounds; each random model draws its state and action counts.
  RandomModelConfig model{4, 3};
  std::optional<std::filesystem::path> bundle_dir;
};

struct Discrepancy {
  std::string kind;
  std::uint64_t iteration = 0;
  std::string formula;
  std::string detail;
  std::optional<PointedModel> model;
};

struct FuzzReport {
  int iterations = 0;
  int satisfiable = 0;
  int valid = 0;
  int models_synthesized = 0;
  int model_checks = 0;
  std::vector<Discrepancy> discrepancies;

  bool ok() const noexcept { return discrepancies.empty(); }
};

/// Differential testing of the decision procedure against synthesis and
/// random models. Each iteration draws a formula and a sound schema instance:
///  - satisfiable formulas must yield a verified synthesized model;
///  - a random X-model state satisfying the formula contradicts unsatisfiability;
///  - a random X-model state refuting the formula contradicts validity;
///  - schema instances sound for X must be decided valid.
/// With `bundle_dir` set, each discrepancy is written there as JSON.
FuzzReport run_fuzz(const FuzzConfig& cfg);

/// JSON text for a discrepancy: logic, agents, seed, formula, detail and model.
std::string format_bundle(const Discrepancy& d, const FuzzConfig& cfg);

}  // namespace gcl
