#pragma once

#include <string>
#include <vector>

#include "flac/syntax.hpp"

namespace flac {

struct StepResult {
  enum class Status { stepped, value, stuck };
  Status status;
  Term term;          // the reduct when stepped
  std::string rule;   // rule that fired
  std::string reason; // stuckness explanation
};

// One deterministic small step: leftmost-innermost per the evaluation
// contexts; beta-like rules wrap their redex result in a protection
// context; bracket expansion projects so brackets never nest.
StepResult step(const Term& e);

using Trace = std::vector<Term>;

struct RunResult {
  enum class Status { value, stuck, out_of_fuel };
  Status status;
  Trace trace;                     // trace[0] is the initial term
  std::vector<std::string> rules;  // rules[i] produced trace[i+1]
  std::string reason;

  const Term& result() const { return trace.back(); }
};

RunResult run(const Term& e, std::size_t fuel = 100000);

// Removes every bracket by keeping side i (1 or 2); homomorphic on
// all other forms.
Term project(const Term& e, int i);
Trace project_trace(const Trace& t, int i);

}  // namespace flac
