#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flac/principals.hpp"

namespace flac {

// <p |> q>: q delegates to p (the superior acts for the inferior).
struct Delegation {
  Principal superior;
  Principal inferior;

  std::string to_string() const;
};

struct Factorization {
  Principal base;  // greatest part of q already covered by p
  Principal gap;   // remaining authority, q - p
};

class CandidateSpaceExceeded : public std::runtime_error {
 public:
  explicit CandidateSpaceExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Immutable, ordered, duplicate-free set of delegations. Extension
// returns a new context. The usable subset (delegations whose
// well-formedness premise is derivable) is computed once per context
// by a least fixed point that starts from no usable delegations.
class DelegationContext {
 public:
  DelegationContext() = default;
  static DelegationContext of(std::vector<Delegation> items);

  DelegationContext extend(const Delegation& d) const;

  const std::vector<Delegation>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

  // Indices into items() of the usable delegations.
  const std::vector<std::size_t>& usable() const { return usable_; }

  std::string to_string() const;

 private:
  std::vector<Delegation> items_;
  std::vector<std::size_t> usable_;
  void recompute_usable();
};

bool robust_acts_for(const DelegationContext& ctx, const Principal& p, const Principal& q);
bool robust_flows_to(const DelegationContext& ctx, const Principal& p, const Principal& q);
bool robust_equiv(const DelegationContext& ctx, const Principal& p, const Principal& q);

// Minimal factorization of (p, q): base = p \/ q, gap = the
// disjunction of every candidate r (a normal form over the occurring
// atoms) with q == base /\ r in ctx. Throws CandidateSpaceExceeded
// when the atom universe is larger than `max_atoms`.
Factorization minimal_factorization(const DelegationContext& ctx, const Principal& p,
                                    const Principal& q, std::size_t max_atoms = 6);

// q - p in ctx.
Principal subtract(const DelegationContext& ctx, const Principal& q, const Principal& p,
                   std::size_t max_atoms = 6);

}  // namespace flac
