#include "gcl/fuzz.hpp"

#include <fstream>

#include "gcl/decide.hpp"
#include "gcl/mcheck.hpp"
#include "gcl/model_io.hpp"
#include "gcl/synth.hpp"
#include "json.hpp"

namespace gcl {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Formula gen(std::mt19937_64& rng, const FormulaGenConfig& cfg, int depth, int budget) {
  if (budget <= 0 || uniform(rng, 0, 5) == 0) {
    if (uniform(rng, 0, 9) == 0) return uniform(rng, 0, 1) ? Formula::top() : Formula::bottom();
    return Formula::atom(cfg.atoms[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cfg.atoms.size()) - 1))]);
  }
  const int pick = uniform(rng, 0, depth > 0 ? 5 : 2);
  switch (pick) {
    case 0: return Formula::negation(gen(rng, cfg, depth, budget - 1));
    case 1: {
      const int left = uniform(rng, 0, budget - 1);
      return Formula::conjunction(gen(rng, cfg, depth, left), gen(rng, cfg, depth, budget - 1 - left));
    }
    case 2: {
      const int left = uniform(rng, 0, budget - 1);
      return Formula::disjunction(gen(rng, cfg, depth, left), gen(rng, cfg, depth, budget - 1 - left));
    }
    case 3:
      return Formula::dual(random_coalition(rng, cfg.agents), gen(rng, cfg, depth - 1, budget - 1));
    default:
      return Formula::coalition(random_coalition(rng, cfg.agents), gen(rng, cfg, depth - 1, budget - 1));
  }
}

Coalition random_subset_of(std::mt19937_64& rng, Coalition c) {
  Coalition out;
  for (Agent a : c.members()) {
    if (uniform(rng, 0, 1)) out = out.with(a);
  }
  return out;
}

Coalition random_superset_of(std::mt19937_64& rng, Coalition c, int agents) {
  Coalition out = c;
  for (Agent a = 0; a < agents; ++a) {
    if (uniform(rng, 0, 1)) out = out.with(a);
  }
  return out;
}

}  // namespace

Coalition random_coalition(std::mt19937_64& rng, int agents) {
  const std::uint32_t mask = std::uniform_int_distribution<std::uint32_t>(0, (1u << agents) - 1u)(rng);
  return Coalition::from_mask(mask);
}

Formula random_formula(std::mt19937_64& rng, const FormulaGenConfig& cfg) {
  return gen(rng, cfg, cfg.max_depth, cfg.max_size);
}

std::vector<Schema> all_schemas() {
  return {Schema::Tau, Schema::NAAA, Schema::MG, Schema::MC, Schema::Ser,
          Schema::IA,  Schema::Det,  Schema::CEA, Schema::SIA, Schema::Mon};
}

std::string to_string(Schema s) {
  switch (s) {
    case Schema::Tau: return "A-Tau";
    case Schema::NAAA: return "A-NAAA";
    case Schema::MG: return "A-MG";
    case Schema::MC: return "A-MC";
    case Schema::Ser: return "A-Ser";
    case Schema::IA: return "A-IA";
    case Schema::Det: return "A-Det";
    case Schema::CEA: return "A-CEA";
    case Schema::SIA: return "A-SIA";
    case Schema::Mon: return "Mon";
  }
  return "?";
}

LogicId schema_logic(Schema s) {
  switch (s) {
    case Schema::Ser: return LogicId{true, false, false};
    case Schema::IA: return LogicId{false, true, false};
    case Schema::Det: return LogicId{false, false, true};
    default: return LogicId{};
  }
}

Formula schema_instance(Schema s, std::mt19937_64& rng, const FormulaGenConfig& cfg) {
  auto body = [&] { return random_formula(rng, cfg); };
  const int n = cfg.agents;
  const Coalition c = random_coalition(rng, n);
  switch (s) {
    case Schema::Tau: {
      const Formula a = Formula::coalition(c, body());
      const Formula b = uniform(rng, 0, 1) ? body() : Formula::dual(random_coalition(rng, n), body());
      switch (uniform(rng, 0, 2)) {
        case 0: return Formula::disjunction(a, Formula::negation(a));
        case 1: return Formula::implication(a, Formula::implication(b, a));
        default: return Formula::implication(Formula::conjunction(a, b), Formula::disjunction(b, a));
      }
    }
    case Schema::NAAA:
      return Formula::negation(Formula::coalition(c, Formula::bottom()));
    case Schema::MG: {
      const Formula a = body(), b = body();
      return Formula::implication(Formula::coalition(Coalition::empty(), Formula::implication(a, b)),
                                  Formula::implication(Formula::coalition(c, a), Formula::coalition(c, b)));
    }
    case Schema::MC: {
      const Formula a = body();
      return Formula::implication(Formula::coalition(c, a), Formula::coalition(random_superset_of(rng, c, n), a));
    }
    case Schema::Ser:
      return Formula::coalition(c, Formula::top());
    case Schema::IA: {
      const Coalition d = random_subset_of(rng, Coalition::full(n).minus(c));
      const Formula a = body(), b = body();
      return Formula::implication(Formula::conjunction(Formula::coalition(c, a), Formula::coalition(d, b)),
                                  Formula::coalition(c | d, Formula::conjunction(a, b)));
    }
    case Schema::Det: {
      const Formula a = body(), b = body();
      return Formula::implication(
          Formula::coalition(c, Formula::disjunction(a, b)),
          Formula::disjunction(Formula::coalition(c, a), Formula::coalition(Coalition::full(n), b)));
    }
    case Schema::CEA:
      return Formula::implication(Formula::coalition(c, body()), Formula::coalition(Coalition::empty(), Formula::top()));
    case Schema::SIA: {
      const Formula a = body(), b = body();
      return Formula::implication(
          Formula::conjunction(Formula::coalition(Coalition::empty(), a), Formula::coalition(c, b)),
          Formula::coalition(c, Formula::conjunction(a, b)));
    }
    case Schema::Mon: {
      const Formula a = body(), b = body();
      return Formula::implication(Formula::coalition(c, a),
                                  Formula::coalition(random_superset_of(rng, c, n), Formula::disjunction(a, b)));
    }
  }
  throw std::invalid_argument("unknown schema");
}

FuzzReport run_fuzz(const FuzzConfig& cfg) {
  FuzzReport report;
  std::mt19937_64 rng(cfg.seed);
  const FormulaGenConfig fcfg{cfg.agents, cfg.atoms, cfg.max_depth, cfg.max_size};
  RandomModelConfig mcfg = cfg.model;
  mcfg.agents = cfg.agents;
  mcfg.atoms = cfg.atoms;
  Synthesizer synth(cfg.logic, AgentCount(cfg.agents));
  Decider& decider = synth.decider();

  std::vector<Schema> sound;
  for (Schema s : all_schemas()) {
    if (schema_logic(s).subset_of(cfg.logic)) sound.push_back(s);
  }

  auto record = [&](Discrepancy d) {
    if (cfg.bundle_dir) {
      std::filesystem::create_directories(*cfg.bundle_dir);
      const auto path = *cfg.bundle_dir / ("discrepancy-" + std::to_string(cfg.seed) + "-" +
                                           std::to_string(d.iteration) + "-" + d.kind + ".json");
      std::ofstream(path) << format_bundle(d, cfg) << "\n";
    }
    report.discrepancies.push_back(std::move(d));
  };

  for (int it = 0; it < cfg.iterations; ++it) {
    ++report.iterations;
    const auto iter = static_cast<std::uint64_t>(it);
    const Formula f = random_formula(rng, fcfg);
    const bool sat = decider.is_satisfiable(f);
    const bool valid = decider.is_valid(f);
    report.satisfiable += sat;
    report.valid += valid;
    if (valid && !sat) record({"valid-but-unsatisfiable", iter, render(f), "", std::nullopt});

    if (sat) {
      try {
        auto pm = synth.synthesize(f);
        if (!pm) {
          record({"synthesis-missing", iter, render(f), "satisfiable but no model", std::nullopt});
        } else {
          ++report.models_synthesized;
        }
      } catch (const SynthesisError& e) {
        record({"synthesis", iter, render(f), e.what(), std::nullopt});
      }
    }

    for (int k = 0; k < cfg.models_per_formula; ++k) {
      RandomModelConfig drawn = mcfg;
      drawn.states = uniform(rng, 1, std::max(1, mcfg.states));
      drawn.actions = uniform(rng, 1, std::max(1, mcfg.actions));
      const Model m = random_model(drawn, cfg.logic, rng());
      Evaluator ev(m);
      for (StateId s = 0; s < m.num_states(); ++s) {
        ++report.model_checks;
        const bool holds = ev.satisfies(s, f);
        if (holds && !sat) {
          record({"model-of-unsatisfiable", iter, render(f), "state " + m.state_name(s), PointedModel{m, s}});
        }
        if (!holds && valid) {
          record({"countermodel-of-valid", iter, render(f), "state " + m.state_name(s), PointedModel{m, s}});
        }
      }
    }

    if (!sound.empty()) {
      const Schema s = sound[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(sound.size()) - 1))];
      FormulaGenConfig body_cfg = fcfg;
      body_cfg.max_depth = std::max(0, cfg.max_depth - 1);
      body_cfg.max_size = std::max(1, cfg.max_size / 2);
      const Formula inst = schema_instance(s, rng, body_cfg);
      if (!decider.is_valid(inst)) record({"schema-" + to_string(s), iter, render(inst), "instance not valid", std::nullopt});
    }
  }
  return report;
}

std::string format_bundle(const Discrepancy& d, const FuzzConfig& cfg) {
  nlohmann::json j;
  j["kind"] = d.kind;
  j["logic"] = cfg.logic.name();
  j["agents"] = cfg.agents;
  j["seed"] = cfg.seed;
  j["iteration"] = d.iteration;
  j["formula"] = d.formula;
  j["detail"] = d.detail;
  if (d.model) j["model"] = nlohmann::json::parse(format_model(d.model->model, d.model->state));
  return j.dump(2);
}

}  // namespace gcl
