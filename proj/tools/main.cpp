/* subres: exact determinant polynomials, indexed subresultants, and the
 * scaled product identities that connect them. All arithmetic is exact. */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subres/detpoly.hpp"
#include "subres/habicht.hpp"
#include "subres/json_io.hpp"
#include "subres/reduction.hpp"
#include "subres/rng.hpp"

using nlohmann::json;
using namespace subres;

namespace {

/* Reports go to stdout or --json-out; stderr carries diagnostics only. */
void emit(const json& doc, const std::string& json_out) {
  std::string text = doc.dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(json_out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + json_out);
  out << text;
}

json index_to_json(const DeltaIndex& d) {
  json a = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) a.push_back(d[i]);
  return a;
}

DeltaIndex index_from_flag(const std::vector<int>& v) { return DeltaIndex(v); }

json params_to_json(const HabichtParams& p) {
  return json{{"w0", index_to_json(p.w0)}, {"k", p.k},       {"i", p.i},
              {"v", index_to_json(p.v)},   {"u", index_to_json(p.u)},
              {"epsilon", p.epsilon}};
}

json report_result_json(const VerificationReport& rep) {
  json r;
  if (rep.applicable()) {
    r["status"] = rep.equal ? "verified" : "failed";
  } else {
    r["status"] = "degenerate";
    r["degree_drops"] = rep.degree_drops;
  }
  return r;
}

struct Tally {
  long verified = 0, failed = 0, degenerate = 0;

  void add(const VerificationReport& rep) {
    if (!rep.applicable())
      ++degenerate;
    else if (rep.equal)
      ++verified;
    else
      ++failed;
  }

  json to_json() const {
    return json{{"verified", verified}, {"failed", failed}, {"degenerate", degenerate}};
  }
};

int cmd_dp(const std::string& path, const std::string& json_out) {
  Instance inst = load_instance(path);
  emit(poly_to_json(dp_list(inst.polys)), json_out);
  return 0;
}

int cmd_subres(const std::string& path, const std::vector<int>& delta_flag,
               const std::string& json_out) {
  PolySystem f = PolySystem::standard(load_instance(path).polys);
  DeltaIndex delta = index_from_flag(delta_flag);
  SubresultantValue v = subresultant(f, delta);
  emit(json{{"delta", index_to_json(delta)},
            {"delta0", v.d0_block},
            {"R", poly_to_json(v.r_poly)},
            {"r", int_to_json(v.principal)}},
       json_out);
  return 0;
}

struct VerifyOptions {
  std::string path;
  std::vector<std::size_t> random_degrees;
  std::uint64_t seed = 0;
  long trials = 20;
  std::vector<int> w0;
  std::size_t k = 1;
  std::size_t i = 0;
  bool sweep = false;
  std::size_t k_max = 3;
  bool epsilon_off_by_one = false;
  std::string json_out;
};

int cmd_verify(const VerifyOptions& opt) {
  const bool random = !opt.random_degrees.empty();
  if (random == !opt.path.empty())
    throw std::runtime_error("give exactly one input: an instance file or --random");
  if (opt.sweep == !opt.w0.empty())
    throw std::runtime_error("give exactly one of --w0 and --sweep");
  if (opt.trials < 1) throw std::runtime_error("--trials must be >= 1");

  std::vector<PolySystem> systems;
  std::vector<std::uint64_t> seeds;
  if (random) {
    for (long t = 0; t < opt.trials; ++t) {
      seeds.push_back(opt.seed + static_cast<std::uint64_t>(t));
      systems.push_back(random_system(opt.random_degrees, seeds.back()));
    }
  } else {
    systems.push_back(PolySystem::standard(load_instance(opt.path).polys));
  }
  const std::vector<std::size_t>& d = systems.front().degrees();
  for (const PolySystem& f : systems)
    if (f.degrees() != d) throw std::runtime_error("instances disagree on degrees");

  std::vector<HabichtParams> cases;
  if (opt.sweep) {
    for (std::size_t k = 1; k <= opt.k_max; ++k)
      for (std::size_t i = 0; i <= d.size() - 1; ++i)
        for (const DeltaIndex& w0 : enumerate_index_set(d[0], d.size() - 1)) {
          std::size_t weight = w0.sum() + (d.size() - 1) * k + (i == 0 ? 0 : 1);
          if (weight <= d[0]) cases.push_back(derive_params(d, w0, k, i));
        }
  } else {
    cases.push_back(derive_params(d, index_from_flag(opt.w0), opt.k, opt.i));
  }

  Tally total;
  json cases_json = json::array();
  for (HabichtParams p : cases) {
    if (opt.epsilon_off_by_one) ++p.epsilon;
    json c = params_to_json(p);
    Tally per_case;
    json results = json::array();
    for (std::size_t s = 0; s < systems.size(); ++s) {
      VerificationReport rep = verify_identity(systems[s], p);
      json r = report_result_json(rep);
      if (random) r["seed"] = seeds[s];
      results.push_back(std::move(r));
      per_case.add(rep);
      total.add(rep);
    }
    c["results"] = std::move(results);
    c["counts"] = per_case.to_json();
    cases_json.push_back(std::move(c));
  }

  json doc{{"command", "verify"},
           {"degrees", d},
           {"source", random ? "random" : "file"},
           {"epsilon_offset", opt.epsilon_off_by_one ? 1 : 0},
           {"cases", std::move(cases_json)},
           {"summary", total.to_json()}};
  if (random) {
    doc["seed"] = opt.seed;
    doc["trials"] = opt.trials;
  } else {
    doc["file"] = opt.path;
  }
  emit(doc, opt.json_out);
  return total.failed > 0 ? 1 : 0;
}

int cmd_reduce(const std::string& path, const std::vector<int>& target_flag,
               const std::string& strategy_flag, const std::string& json_out) {
  PolySystem f = PolySystem::standard(load_instance(path).polys);
  Strategy strategy = strategy_flag == "B" ? Strategy::B : Strategy::A;
  ReductionPlan plan = plan_reduction(f.degrees(), index_from_flag(target_flag), strategy);

  json steps = json::array();
  json base = json::array();
  for (const DeltaIndex& b : plan.base) base.push_back(index_to_json(b));

  Tally tally;
  json doc{{"command", "reduce"},
           {"target", index_to_json(plan.target)},
           {"strategy", strategy == Strategy::B ? "B" : "A"},
           {"base", std::move(base)},
           {"schematic", render_plan(plan)}};
  try {
    auto reports = execute_plan(f, plan);
    for (const ReductionStep& s : plan.steps) {
      const VerificationReport& rep = reports.at(s.produces);
      json sj = params_to_json(s.params);
      sj["produces"] = index_to_json(s.produces);
      json consumes = json::array();
      for (const DeltaIndex& c : s.consumes) consumes.push_back(index_to_json(c));
      sj["consumes"] = std::move(consumes);
      sj.update(report_result_json(rep));
      tally.add(rep);
      steps.push_back(std::move(sj));
    }
    doc["steps"] = std::move(steps);
    doc["summary"] = tally.to_json();
    emit(doc, json_out);
    return tally.failed > 0 ? 1 : 0;
  } catch (const PlanExecutionError& e) {
    doc["aborted_at_step"] = e.step_index;
    doc["produces"] = index_to_json(e.produces);
    doc["error"] = e.what();
    emit(doc, json_out);
    return 1;
  }
}

int cmd_gen(const std::vector<std::size_t>& degrees, std::uint64_t seed, long bound,
            const std::string& json_out) {
  PolySystem f = random_system(degrees, seed, bound);
  json polys = json::array();
  for (const Poly& p : f.polys()) polys.push_back(poly_to_json(p));
  emit(json{{"degrees", degrees}, {"seed", seed}, {"polys", std::move(polys)}}, json_out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact determinant polynomials and indexed subresultants"};
  app.require_subcommand(1);

  std::string dp_path, dp_out;
  CLI::App* dp_cmd = app.add_subcommand("dp", "determinant polynomial of a family");
  dp_cmd->add_option("instance", dp_path, "instance JSON file")->required();
  dp_cmd->add_option("--json-out", dp_out, "write the report here instead of stdout");

  std::string sub_path, sub_out;
  std::vector<int> sub_delta;
  CLI::App* sub_cmd = app.add_subcommand("subres", "indexed subresultant of a system");
  sub_cmd->add_option("instance", sub_path, "instance JSON file")->required();
  sub_cmd->add_option("--delta", sub_delta, "multi-index, e.g. 1,1")
      ->required()
      ->delimiter(',');
  sub_cmd->add_option("--json-out", sub_out, "write the report here instead of stdout");

  VerifyOptions vo;
  CLI::App* ver_cmd = app.add_subcommand("verify", "check the scaled product identity");
  ver_cmd->add_option("instance", vo.path, "instance JSON file");
  ver_cmd->add_option("--random", vo.random_degrees, "degrees d0,d1,... for seeded instances")
      ->delimiter(',');
  ver_cmd->add_option("--seed", vo.seed, "first seed for --random");
  ver_cmd->add_option("--trials", vo.trials, "seeds per parameter case")->capture_default_str();
  ver_cmd->add_option("--w0", vo.w0, "base index w0, e.g. 1,1")->delimiter(',');
  ver_cmd->add_option("--k", vo.k, "step width (with --w0)")->capture_default_str();
  ver_cmd->add_option("--i", vo.i, "unit direction 0..n (with --w0)")->capture_default_str();
  ver_cmd->add_flag("--sweep", vo.sweep, "all valid (w0,k,i) up to --k-max");
  ver_cmd->add_option("--k-max", vo.k_max, "largest step width in a sweep")->capture_default_str();
  ver_cmd->add_flag("--epsilon-off-by-one", vo.epsilon_off_by_one,
                    "negative control: misscale the left side");
  ver_cmd->add_option("--json-out", vo.json_out, "write the report here instead of stdout");

  std::string red_path, red_strategy = "A", red_out;
  std::vector<int> red_target;
  CLI::App* red_cmd = app.add_subcommand("reduce", "plan and verify a reduction to base indices");
  red_cmd->add_option("instance", red_path, "instance JSON file")->required();
  red_cmd->add_option("--target", red_target, "target index, e.g. 3,2")
      ->required()
      ->delimiter(',');
  red_cmd->add_option("--strategy", red_strategy, "A (unit steps) or B (greedy)")
      ->capture_default_str()
      ->check(CLI::IsMember({"A", "B"}));
  red_cmd->add_option("--json-out", red_out, "write the report here instead of stdout");

  std::vector<std::size_t> gen_degrees;
  std::uint64_t gen_seed = 0;
  long gen_bound = 99;
  std::string gen_out;
  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a seeded random instance");
  gen_cmd->add_option("--degrees", gen_degrees, "degrees d0,d1,...")
      ->required()
      ->delimiter(',');
  gen_cmd->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen_cmd->add_option("--coeff-bound", gen_bound, "coefficients drawn from [-b, b]")->capture_default_str();
  gen_cmd->add_option("--json-out", gen_out, "write the instance here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dp_cmd->parsed()) return cmd_dp(dp_path, dp_out);
    if (sub_cmd->parsed()) return cmd_subres(sub_path, sub_delta, sub_out);
    if (ver_cmd->parsed()) return cmd_verify(vo);
    if (red_cmd->parsed()) return cmd_reduce(red_path, red_target, red_strategy, red_out);
    if (gen_cmd->parsed()) return cmd_gen(gen_degrees, gen_seed, gen_bound, gen_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  /* unreachable with require_subcommand */
}
