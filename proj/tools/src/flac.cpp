// flac: check, run, observe and security-check programs of the
// flow-limited authorization calculus.

#include <CLI11.hpp>
#include <iostream>

#include "flac/generate.hpp"
#include "flac/parser.hpp"
#include "flac/security.hpp"
#include "flac/suite.hpp"

using namespace flac;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

Projection parse_proj(const std::string& s) {
  if (s == "conf") return Projection::conf;
  if (s == "integ") return Projection::integ;
  throw CLI::ValidationError("--proj must be conf or integ");
}

struct CheckOpts {
  std::string file;
  std::string config = "flac.toml";
  std::string pc, context, gamma, pcmost;
  std::vector<std::string> harness;  // H, proj
};

int cmd_check(const CheckOpts& opt) {
  HarnessConfig defaults = load_config(opt.config);
  // --harness and --pcmost both signal intermediate (non-source) input
  bool extended = !opt.harness.empty() || !opt.pcmost.empty();
  ProgramFile prog = parse_program_file(opt.file, extended);
  if (!opt.context.empty()) prog.context = parse_delegation_context(opt.context);
  if (!opt.gamma.empty()) prog.gamma = parse_gamma(opt.gamma);
  Principal pc = opt.pc.empty()
                     ? prog.pc.value_or(Principal::top().project(Projection::integ))
                     : parse_principal(opt.pc);
  CheckerConfig cfg;
  cfg.pc_most = opt.pcmost.empty() ? defaults.pc_most : parse_principal(opt.pcmost);
  if (!opt.harness.empty()) {
    if (opt.harness.size() != 2)
      throw CLI::ValidationError("--harness needs a principal and conf|integ");
    cfg.harness = HarnessParams{parse_principal(opt.harness[0]), parse_proj(opt.harness[1])};
  }
  try {
    Type t = typecheck(prog.context, TypingContext::of(prog.gamma), pc, prog.term, cfg);
    std::cout << pretty(t) << "\n";
    return kExitPass;
  } catch (const TypeCheckError& e) {
    std::cout << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int cmd_run(const std::string& file, bool trace, std::size_t fuel) {
  ProgramFile prog = parse_program_file(file);
  std::set<std::string> fv;
  free_vars(prog.term, fv);
  if (!fv.empty()) {
    std::cout << "program has free variables; provide a closed term to run\n";
    return kExitUsage;
  }
  RunResult rr = run(prog.term, fuel);
  if (trace) {
    for (std::size_t i = 0; i < rr.trace.size(); ++i) {
      std::cout << "#" << i << " ";
      if (i > 0) std::cout << "[" << rr.rules[i - 1] << "] ";
      std::cout << pretty(rr.trace[i]) << "\n";
    }
  }
  switch (rr.status) {
    case RunResult::Status::value:
      std::cout << pretty(rr.result()) << "\n";
      return kExitPass;
    case RunResult::Status::stuck:
      std::cout << "stuck: " << rr.reason << "\n";
      return kExitCheckFailed;
    case RunResult::Status::out_of_fuel:
      std::cout << "out of fuel after " << fuel << " steps\n";
      return kExitCheckFailed;
  }
  return kExitCheckFailed;
}

int cmd_observe(const std::string& file, const std::string& who, const std::string& projname,
                std::size_t fuel) {
  ProgramFile prog = parse_program_file(file);
  Principal observer = parse_principal(who);
  Projection pi = parse_proj(projname);
  RunResult rr = run(prog.term, fuel);
  auto observed = observe_trace(rr.trace, prog.context, observer, pi);
  for (std::size_t i = 0; i < observed.size(); ++i)
    std::cout << "#" << i << " " << pretty(observed[i]) << "\n";
  return rr.status == RunResult::Status::value ? kExitPass : kExitCheckFailed;
}

int cmd_suite(const std::string& path, SuiteEntry::Kind kind, const std::string& config) {
  HarnessConfig cfg = load_config(config);
  Suite all = load_suite(path);
  Suite filtered;
  filtered.dir = all.dir;
  for (auto& e : all.entries)
    if (e.kind == kind) filtered.entries.push_back(e);
  if (filtered.entries.empty()) {
    std::cout << "suite has no " << (kind == SuiteEntry::Kind::ni ? "ni" : "rd")
              << " entries\n";
    return kExitUsage;
  }
  auto outcomes = run_suite(filtered, cfg, &std::cout);
  bool ok = true;
  for (const auto& o : outcomes) ok = ok && o.ok;
  std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok ? kExitPass : kExitCheckFailed;
}

int fuzz_algebra(std::uint64_t seed, int count, const std::vector<std::string>& names) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    Principal x = random_principal(rng, names, 4);
    Principal y = random_principal(rng, names, 4);
    Principal z = random_principal(rng, names, 4);
    if (!static_acts_for(x, x)) return i;
    if (static_acts_for(x, y) && static_acts_for(y, z) && !static_acts_for(x, z)) return i;
    if (!static_equiv(join(x, y), join(y, x))) return i;
    if (!static_equiv(meet(x, join(x, y)), x)) return i;
    if (!static_equiv(join(x, meet(x, y)), x)) return i;
    bool af = static_acts_for(x, y) && static_acts_for(y, x);
    if (af != (normalize(x) == normalize(y))) return i;
    if (af != (flows_to(x, y) && flows_to(y, x))) return i;
    if (!flows_to(x, join(x, y))) return i;
  }
  return -1;
}

int fuzz_terms(std::uint64_t seed, int count, const std::vector<std::string>& names,
               std::size_t fuel) {
  TermGenerator gen(seed, names);
  DelegationContext empty;
  TypingContext none;
  Principal pc = Principal::name(names.front()).project(Projection::integ);
  for (int i = 0; i < count; ++i) {
    GeneratedTerm g = gen.closed_term(empty, pc, 4);
    Term cur = g.term;
    for (std::size_t s = 0; s < fuel; ++s) {
      if (is_where_value(cur)) break;
      StepResult r = step(cur);
      if (r.status != StepResult::Status::stepped) return i;  // progress
      StepResult again = step(cur);
      if (!(again.term == r.term)) return i;  // determinism
      try {
        Type t = typecheck(empty, none, pc, r.term);
        if (!type_equal(t, g.type)) return i;  // preservation
      } catch (const TypeCheckError&) {
        return i;
      }
      cur = r.term;
    }
  }
  return -1;
}

int fuzz_brackets(std::uint64_t seed, int count, const std::vector<std::string>& names,
                  std::size_t fuel) {
  TermGenerator gen(seed, names);
  DelegationContext empty;
  Principal pc = Principal::name(names.front()).project(Projection::integ);
  for (int i = 0; i < count; ++i) {
    Type ty = gen.random_type(pc, 2);
    GeneratedTerm open = gen.open_term(empty, "hole", ty, pc, 3);
    auto w1 = gen.term_at(empty, TypingContext{}, pc, ty, 2);
    auto w2 = gen.term_at(empty, TypingContext{}, pc, ty, 2);
    if (!w1 || !w2) continue;
    RunResult r1 = run(*w1, fuel), r2 = run(*w2, fuel);
    if (r1.status != RunResult::Status::value || r2.status != RunResult::Status::value)
      continue;
    Term paired = substitute(open.term, "hole", Term::bracket(r1.result(), r2.result()));
    RunResult rr = run(paired, fuel);
    if (rr.status != RunResult::Status::value) return i;  // completeness
    for (std::size_t k = 0; k + 1 < rr.trace.size(); ++k) {
      for (int side : {1, 2}) {
        Term before = project(rr.trace[k], side);
        Term after = project(rr.trace[k + 1], side);
        if (canonical(before) == canonical(after)) continue;
        StepResult s = step(before);
        if (s.status != StepResult::Status::stepped || !(canonical(s.term) == canonical(after)))
          return i;  // soundness
      }
    }
  }
  return -1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flow-limited authorization calculus toolchain"};
  app.require_subcommand(1);

  CheckOpts check_opts;
  auto* check = app.add_subcommand("check", "typecheck a program");
  check->add_option("file", check_opts.file)->required();
  check->add_option("--pc", check_opts.pc, "program-counter label");
  check->add_option("--context", check_opts.context, "delegation context");
  check->add_option("--gamma", check_opts.gamma, "typing context");
  check->add_option("--pcmost", check_opts.pcmost, "label bound for where terms");
  check->add_option("--harness", check_opts.harness,
                    "harness principal and projection (enables brackets/holes)")
      ->expected(2);
  check->add_option("--config", check_opts.config, "defaults file");

  std::string run_file;
  bool run_trace = false;
  std::size_t fuel = 100000;
  std::string run_config = "flac.toml";
  auto* runc = app.add_subcommand("run", "evaluate a closed program");
  runc->add_option("file", run_file)->required();
  runc->add_flag("--trace", run_trace, "print one line per step");
  runc->add_option("--fuel", fuel, "step budget");
  runc->add_option("--config", run_config, "defaults file");

  std::string obs_file, obs_as, obs_proj = "conf";
  auto* obsc = app.add_subcommand("observe", "run and print the observed trace");
  obsc->add_option("file", obs_file)->required();
  obsc->add_option("--as", obs_as, "observer principal")->required();
  obsc->add_option("--proj", obs_proj, "conf or integ");
  obsc->add_option("--fuel", fuel, "step budget");

  std::string ni_file, ni_config = "flac.toml";
  auto* nic = app.add_subcommand("ni", "run the noninterference entries of a suite");
  nic->add_option("suite", ni_file)->required();
  nic->add_option("--config", ni_config, "defaults file");

  std::string rd_file, rd_config = "flac.toml";
  auto* rdc = app.add_subcommand("rd", "run the robust-declassification entries of a suite");
  rdc->add_option("suite", rd_file)->required();
  rdc->add_option("--config", rd_config, "defaults file");

  std::string fuzz_kind = "terms";
  std::uint64_t seed = 0xf1ac;
  int count = 200;
  std::vector<std::string> fuzz_names{"p", "q"};
  std::string fuzz_config = "flac.toml";
  auto* fz = app.add_subcommand("fuzz", "property-check the kernel with random inputs");
  fz->add_option("--kind", fuzz_kind, "algebra, terms or brackets");
  fz->add_option("--seed", seed, "rng seed");
  fz->add_option("--count", count, "number of cases");
  fz->add_option("--names", fuzz_names, "principal name pool");
  fz->add_option("--config", fuzz_config, "defaults file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitPass;
  }

  try {
    if (*check) return cmd_check(check_opts);
    if (*runc) {
      HarnessConfig cfg = load_config(run_config);
      if (!runc->count("--fuel")) fuel = cfg.fuel;
      return cmd_run(run_file, run_trace, fuel);
    }
    if (*obsc) return cmd_observe(obs_file, obs_as, obs_proj, fuel);
    if (*nic) return cmd_suite(ni_file, SuiteEntry::Kind::ni, ni_config);
    if (*rdc) return cmd_suite(rd_file, SuiteEntry::Kind::rd, rd_config);
    if (*fz) {
      HarnessConfig cfg = load_config(fuzz_config);
      if (!fz->count("--seed")) seed = cfg.seed;
      int bad = -1;
      if (fuzz_kind == "algebra") bad = fuzz_algebra(seed, count, fuzz_names);
      else if (fuzz_kind == "terms") bad = fuzz_terms(seed, count, fuzz_names, cfg.fuel);
      else if (fuzz_kind == "brackets") bad = fuzz_brackets(seed, count, fuzz_names, cfg.fuel);
      else {
        std::cout << "unknown fuzz kind '" << fuzz_kind << "'\n";
        return kExitUsage;
      }
      if (bad >= 0) {
        std::cout << "property failed on case " << bad << " (seed " << seed << ")\n";
        return kExitCheckFailed;
      }
      std::cout << "ok: " << count << " " << fuzz_kind << " cases\n";
      return kExitPass;
    }
  } catch (const ParseError& e) {
    std::cout << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
