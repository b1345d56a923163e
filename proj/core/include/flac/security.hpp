#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flac/delegations.hpp"
#include "flac/eval.hpp"
#include "flac/syntax.hpp"
#include "flac/typecheck.hpp"

namespace flac {

// What principal p can see of e at projection pi; hidden parts become
// the opaque marker, compound terms collapse when their required
// children are opaque.
Term observe(const Term& e, const DelegationContext& ctx, const Principal& p, Projection pi);

// Elementwise observation with adjacent duplicates removed.
std::vector<Term> observe_trace(const Trace& t, const DelegationContext& ctx,
                                const Principal& p, Projection pi);

bool trace_equiv(const Trace& a, const Trace& b, const DelegationContext& ctx,
                 const Principal& p, Projection pi);

struct NiSpec {
  Term program;                 // source-level, free vars from gamma
  TypingContext gamma;          // includes the varied variable
  DelegationContext context;
  Principal pc;
  std::string secret;           // the varied variable x
  Type secret_type;             // tau'
  Term input1, input2;          // the two values substituted for x
  std::vector<std::pair<std::string, Term>> subst;  // the rest of S
  Principal H;
  Principal observer;           // l
  Projection pi;
  std::size_t fuel = 100000;
  std::size_t factor_bound = 6;
};

struct NIVerdict {
  enum class Status { pass, fail, inapplicable, error };
  Status status = Status::error;
  std::string condition;          // failed side condition / error note
  std::optional<std::size_t> witness_index;
  std::string witness_left, witness_right;  // observed elements at the first mismatch

  bool passed() const { return status == Status::pass; }
  std::string describe() const;
};

NIVerdict ni_check(const NiSpec& spec);

struct FairAttackResult {
  bool ok = false;
  std::string reason;  // names the failing attack and premise
};

// Fairness of each attack against the bindings in scope at its
// hole: typed at the attacker's label over the observable entries;
// attacks that mention protected variables are rejected by name.
FairAttackResult fair_attack_check(const Term& program_with_holes,
                                   const TypingContext& gamma,
                                   const std::vector<Term>& attacks,
                                   const DelegationContext& attacker_ctx, const Principal& H);

struct RdSpec {
  Term program;                 // with holes
  TypingContext gamma;
  DelegationContext context;    // Pi, used for typing and observation
  DelegationContext attacker_context;  // Pi_H
  Principal pc;
  std::string secret;
  Type secret_type;
  Term input1, input2;
  std::vector<std::pair<std::string, Term>> subst;
  std::vector<Term> attacks1, attacks2;
  Principal H;
  bool full_runs = false;  // beyond the stated single-step traces
  std::size_t fuel = 100000;
};

struct RDVerdict {
  enum class Status { pass, fail, inapplicable, error };
  Status status = Status::error;
  std::string condition;
  std::string detail;  // failing quadrant pair on failure

  bool passed() const { return status == Status::pass; }
  std::string describe() const;
};

RDVerdict rd_check(const RdSpec& spec);

// Replaces holes, in traversal order, with the attack terms.
Term fill_holes(const Term& e, const std::vector<Term>& attacks);
std::size_t count_holes(const Term& e);

}  // namespace flac
