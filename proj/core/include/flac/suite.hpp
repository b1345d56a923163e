#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flac/security.hpp"

namespace flac {

// Defaults read from a flac.toml-style key = value file.
struct HarnessConfig {
  Principal pc_most = Principal::top().project(Projection::integ);
  std::size_t fuel = 100000;
  std::uint64_t seed = 0xf1ac;
  std::size_t factorization_bound = 6;
};

HarnessConfig load_config(const std::string& path);

// One .flactest entry. Program path is relative to the suite file.
struct SuiteEntry {
  enum class Kind { ni, rd };
  Kind kind;
  std::string name;
  std::string program_path;
  std::string secret;
  Term input1, input2;
  std::vector<std::pair<std::string, std::string>> subst_sources;  // name -> term text or file:
  std::optional<Principal> pc_override;
  Principal H;
  Principal observer;  // ni only
  Projection pi = Projection::conf;
  std::vector<Term> attacks1, attacks2;  // rd only
  std::optional<std::string> attacker_context_text;
  bool full_runs = false;
  std::string expect;  // pass | fail | inapplicable | error
  std::string reason;  // optional substring of the verdict description
};

struct Suite {
  std::string dir;
  std::vector<SuiteEntry> entries;
};

Suite load_suite(const std::string& path);

struct SuiteOutcome {
  std::string name;
  std::string expected;
  std::string got;       // verdict description
  bool ok = false;
};

std::vector<SuiteOutcome> run_suite(const Suite& suite, const HarnessConfig& cfg,
                                    std::ostream* log);

}  // namespace flac
