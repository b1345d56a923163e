#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "flac/delegations.hpp"
#include "flac/syntax.hpp"
#include "flac/typecheck.hpp"

namespace flac {

// Random principal tree over a name pool; depth counts constructors.
Principal random_principal(std::mt19937_64& rng, const std::vector<std::string>& names,
                           int depth);

struct GeneratedTerm {
  Term term;
  Type type;
};

// Produces closed, well-typed, source-level terms by construction;
// every result is re-verified against the checker.
class TermGenerator {
 public:
  TermGenerator(std::uint64_t seed, std::vector<std::string> names);

  // Closed term typed under ctx at pc.
  GeneratedTerm closed_term(const DelegationContext& ctx, const Principal& pc, int depth);

  // Term with exactly one free variable `var : ty`, typed at pc.
  GeneratedTerm open_term(const DelegationContext& ctx, const std::string& var, const Type& ty,
                          const Principal& pc, int depth);

  // Type-directed generation; nullopt when tau is not inhabitable here.
  std::optional<Term> term_at(const DelegationContext& ctx, const TypingContext& gamma,
                              const Principal& pc, const Type& tau, int depth);

  std::mt19937_64& rng() { return rng_; }
  Principal principal(int depth);
  Type random_type(const Principal& pc, int depth);

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> names_;
  GeneratedTerm gen(const DelegationContext& ctx, const TypingContext& gamma,
                    const Principal& pc, int depth);
  int below(int n);
};

}  // namespace flac
