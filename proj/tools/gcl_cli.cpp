// gcl: decide, synthesize and model-check coalition logic formulas.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gcl/decide.hpp"
#include "gcl/fuzz.hpp"
#include "gcl/mcheck.hpp"
#include "gcl/model_io.hpp"
#include "gcl/random_model.hpp"
#include "gcl/synth.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kDiscrepancy = 1, kUsage = 2, kCap = 3 };

constexpr const char* kLimits =
    "Models are explored exhaustively over all joint actions. Desk-scale limits:\n"
    "agents <= 3, actions <= 4, states <= 8 for hand-written or generated models.\n"
    "Exit codes: 0 success, 1 discrepancy, 2 usage or parse error, 3 resource cap.";

struct Common {
  std::string logic = "SID";
  int agents = 2;
  std::size_t cap = 100000;
  bool json = false;
};

gcl::DecideOptions decide_options(const Common& c) {
  gcl::DecideOptions opts;
  opts.normal_form.clause_cap = c.cap;
  return opts;
}

void emit(const Common& c, const json& record, const std::string& text) {
  if (c.json) {
    std::cout << record.dump() << "\n";
  } else {
    std::cout << text;
  }
}

std::string summary(const gcl::PointedModel& pm) {
  std::ostringstream out;
  out << pm.model.num_states() << " states, " << pm.model.num_actions() << " actions, pointed at "
      << pm.model.state_name(pm.state);
  return out.str();
}

int cmd_check(const Common& c, const std::string& text, bool trace, const std::string& model_out) {
  const gcl::LogicId x = gcl::LogicId::parse(c.logic);
  const gcl::AgentCount n(c.agents);
  const gcl::Formula f = gcl::parse(text, n);
  gcl::SynthOptions so;
  so.decide = decide_options(c);
  gcl::Synthesizer synth(x, n, so);
  const bool valid = synth.decider().is_valid(f);

  json rec{{"query", text}, {"logic", x.name()}, {"agents", c.agents}, {"result", valid ? "valid" : "invalid"}};
  std::ostringstream out;
  out << (valid ? "valid" : "invalid") << "\n";

  if (trace) {
    json clauses = json::array();
    if (f.modal_depth() == 0) {
      out << "propositional: " << (valid ? "tautology" : "not a tautology") << "\n";
    } else {
      int k = 0;
      for (const auto& report : synth.decider().explain(f)) {
        const std::string w = report.witness ? gcl::describe(*report.witness) : "none";
        out << "clause " << k++ << ": " << gcl::describe(report.clause) << "\n  witness: " << w << "\n";
        clauses.push_back({{"clause", gcl::describe(report.clause)}, {"witness", w}});
      }
    }
    rec["witness"] = clauses;
  }
  if (!valid) {
    auto cm = synth.synthesize(gcl::Formula::negation(f));
    if (!cm) throw gcl::SynthesisError("invalid formula has no countermodel");
    out << "countermodel: " << summary(*cm) << "\n";
    if (!model_out.empty()) {
      gcl::save_model(cm->model, model_out, cm->state);
      out << "model written to " << model_out << "\n";
      rec["witness_model"] = model_out;
    }
  }
  emit(c, rec, out.str());
  return kOk;
}

int cmd_sat(const Common& c, const std::string& text, const std::string& model_out) {
  const gcl::LogicId x = gcl::LogicId::parse(c.logic);
  const gcl::AgentCount n(c.agents);
  const gcl::Formula f = gcl::parse(text, n);
  gcl::SynthOptions so;
  so.decide = decide_options(c);
  gcl::Synthesizer synth(x, n, so);
  auto pm = synth.synthesize(f);

  json rec{{"query", text}, {"logic", x.name()}, {"agents", c.agents},
           {"result", pm ? "satisfiable" : "unsatisfiable"}};
  std::ostringstream out;
  out << (pm ? "satisfiable" : "unsatisfiable") << "\n";
  if (pm) {
    out << "model: " << summary(*pm) << "\n";
    if (!model_out.empty()) {
      gcl::save_model(pm->model, model_out, pm->state);
      out << "model written to " << model_out << "\n";
      rec["witness_model"] = model_out;
    }
  }
  emit(c, rec, out.str());
  return kOk;
}

int cmd_mc(const Common& c, const std::string& path, const std::string& state, const std::string& text) {
  const gcl::ModelFile file = gcl::load_model(path);
  const gcl::Model& m = file.model;
  gcl::StateId s = 0;
  if (!state.empty()) {
    s = m.state_id(state);
  } else if (file.pointed) {
    s = *file.pointed;
  }
  const gcl::Formula f = gcl::parse(text, gcl::AgentCount(m.agents()));
  const bool holds = gcl::satisfies(m, s, f);
  emit(c, json{{"query", text}, {"state", m.state_name(s)}, {"result", holds}},
       std::string(holds ? "true" : "false") + "\n");
  return kOk;
}

int cmd_props(const Common& c, const std::string& path) {
  const gcl::Model m = gcl::load_model(path).model;
  const gcl::FrameProperties p = gcl::frame_properties(m);
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream out;
  out << "serial=" << b(p.serial) << " independent=" << b(p.independent) << " deterministic=" << b(p.deterministic)
      << "\n";
  for (auto prop : {gcl::FrameProperty::Serial, gcl::FrameProperty::Independent, gcl::FrameProperty::Deterministic}) {
    if (auto v = gcl::find_violation(m, prop)) out << "  " << v->describe(m) << "\n";
  }
  emit(c, json{{"serial", p.serial}, {"independent", p.independent}, {"deterministic", p.deterministic}}, out.str());
  return kOk;
}

int cmd_gen(const Common& c, const gcl::RandomModelConfig& cfg, std::uint64_t seed, const std::string& out) {
  const gcl::LogicId x = gcl::LogicId::parse(c.logic);
  gcl::RandomModelConfig rc = cfg;
  rc.agents = gcl::AgentCount(c.agents);
  const gcl::Model m = gcl::random_model(rc, x, seed);
  if (out.empty()) {
    std::cout << gcl::format_model(m, 0) << "\n";
  } else {
    gcl::save_model(m, out, 0);
    std::cout << "model written to " << out << "\n";
  }
  return kOk;
}

int cmd_fuzz(const Common& c, int iters, std::uint64_t seed, int depth, int size, const std::string& bundle_dir) {
  gcl::FuzzConfig cfg;
  cfg.logic = gcl::LogicId::parse(c.logic);
  cfg.agents = gcl::AgentCount(c.agents);
  cfg.iterations = iters;
  cfg.seed = seed;
  cfg.max_depth = depth;
  cfg.max_size = size;
  cfg.bundle_dir = bundle_dir;
  const gcl::FuzzReport r = gcl::run_fuzz(cfg);
  json rec{{"logic", cfg.logic.name()},       {"iterations", r.iterations},
           {"satisfiable", r.satisfiable},    {"valid", r.valid},
           {"models_synthesized", r.models_synthesized},
           {"model_checks", r.model_checks},  {"discrepancies", r.discrepancies.size()}};
  std::ostringstream out;
  out << "iterations=" << r.iterations << " satisfiable=" << r.satisfiable << " valid=" << r.valid
      << " synthesized=" << r.models_synthesized << " model_checks=" << r.model_checks
      << " discrepancies=" << r.discrepancies.size() << "\n";
  for (const auto& d : r.discrepancies) {
    out << d.kind << " at iteration " << d.iteration << ": " << d.formula << " " << d.detail << "\n";
  }
  if (!r.ok()) {
    out << "bundles written to " << bundle_dir << "\n";
    rec["bundle_dir"] = bundle_dir;
  }
  emit(c, rec, out.str());
  return r.ok() ? kOk : kDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coalition logic workbench over general concurrent game models"};
  app.footer(kLimits);
  app.require_subcommand(1);

  Common common;
  auto add_logic = [&](CLI::App* sub) {
    sub->add_option("--logic", common.logic, "Logic: any of S, I, D in any order, E (or MCL), CL = SID")
        ->capture_default_str();
    sub->add_option("--agents", common.agents, "Number of agents (1..16), named 0..n-1")->capture_default_str();
  };
  auto add_flags = [&](CLI::App* sub) {
    sub->add_option("--cap", common.cap, "Clause cap for normal-form conversion")->capture_default_str();
    sub->add_flag("--json", common.json, "Machine-readable output");
  };

  std::string formula, model_out, model_path, state, out_path;
  bool trace = false;

  auto* check = app.add_subcommand("check", "Decide validity; print a countermodel summary when invalid");
  add_logic(check);
  add_flags(check);
  check->add_flag("--trace", trace, "Print each clause with its reduction witness");
  check->add_option("--model", model_out, "Write the countermodel here");
  check->add_option("formula", formula, "Formula")->required();

  auto* sat = app.add_subcommand("sat", "Decide satisfiability and synthesize a model");
  add_logic(sat);
  add_flags(sat);
  sat->add_option("--model", model_out, "Write the synthesized model here");
  sat->add_option("formula", formula, "Formula")->required();

  auto* mc = app.add_subcommand("mc", "Model-check a formula at a state of a model file");
  mc->add_flag("--json", common.json, "Machine-readable output");
  mc->add_option("model", model_path, "Model file")->required();
  mc->add_option("--state", state, "State name (default: pointed state, else the first state)");
  mc->add_option("formula", formula, "Formula")->required();

  auto* props = app.add_subcommand("props", "Report the frame properties of a model file");
  props->add_flag("--json", common.json, "Machine-readable output");
  props->add_option("model", model_path, "Model file")->required();

  gcl::RandomModelConfig gen_cfg;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a random model with the properties of a logic");
  add_logic(gen);
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--states", gen_cfg.states, "Number of states")->capture_default_str();
  gen->add_option("--actions", gen_cfg.actions, "Number of actions")->capture_default_str();
  gen->add_option("--branching", gen_cfg.branching, "Maximum outcome set size")->capture_default_str();
  gen->add_option("--out", out_path, "Write the model here instead of stdout");

  int iters = 100, depth = 2, size = 8;
  std::string bundle_dir = "gcl-fuzz-bundles";
  auto* fuzz = app.add_subcommand("fuzz", "Cross-check decision, synthesis and model checking");
  add_logic(fuzz);
  fuzz->add_flag("--json", common.json, "Machine-readable output");
  fuzz->add_option("--iters", iters, "Iterations")->capture_default_str();
  fuzz->add_option("--seed", seed, "Random seed")->capture_default_str();
  fuzz->add_option("--depth", depth, "Maximum modal depth of random formulas")->capture_default_str();
  fuzz->add_option("--size", size, "Maximum connective count of random formulas")->capture_default_str();
  fuzz->add_option("--bundle-dir", bundle_dir, "Where discrepancy bundles are written")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(common, formula, trace, model_out);
    if (*sat) return cmd_sat(common, formula, model_out);
    if (*mc) return cmd_mc(common, model_path, state, formula);
    if (*props) return cmd_props(common, model_path);
    if (*gen) return cmd_gen(common, gen_cfg, seed, out_path);
    if (*fuzz) return cmd_fuzz(common, iters, seed, depth, size, bundle_dir);
  } catch (const gcl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const gcl::CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kCap;
  } catch (const gcl::SynthesisError& e) {
    std::cerr << "internal discrepancy: " << e.what() << "\n";
    return kDiscrepancy;
  } catch (const gcl::ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
