#include "flac/delegations.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace flac {

std::string Delegation::to_string() const {
  return superior.to_string() + " |> " + inferior.to_string();
}

namespace {

struct DelegationNf {
  NormalForm sup;
  NormalForm inf;
};

// A single-sided two-valued lattice assignment: the chosen projection
// carries the name bits and the top bit, the other side is all zero.
struct Assignment {
  Projection side;
  std::set<std::string> true_names;
  bool top_value;

  bool eval(const NormalForm& nf) const {
    const Component& c = side == Projection::conf ? nf.conf : nf.integ;
    return c.eval(true_names, top_value);
  }
};

// Enumerates every admissible assignment over `names` and calls fn;
// stops early when fn returns false.
template <typename Fn>
bool for_each_assignment(const std::vector<std::string>& names, Fn&& fn) {
  if (names.size() > 24)
    throw std::runtime_error("robust judgment universe has " +
                             std::to_string(names.size()) + " names; refusing to sweep");
  for (Projection side : {Projection::conf, Projection::integ}) {
    const std::size_t k = names.size();
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
      Assignment a;
      a.side = side;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1ull << i)) a.true_names.insert(names[i]);
      for (bool top_value : {false, true}) {
        if (!top_value && mask != 0) continue;  // top dominates every name
        a.top_value = top_value;
        if (!fn(a)) return false;
      }
    }
  }
  return true;
}

bool holds_under(const std::vector<DelegationNf>& usable, const NormalForm& p,
                 const NormalForm& q, const std::vector<std::string>& names) {
  return for_each_assignment(names, [&](const Assignment& a) {
    for (const auto& d : usable)
      if (a.eval(d.sup) < a.eval(d.inf)) return true;  // inadmissible, skip
    return a.eval(p) >= a.eval(q);
  });
}

std::vector<std::string> universe(const std::vector<DelegationNf>& dels,
                                  const NormalForm& p, const NormalForm& q) {
  std::set<std::string> names;
  for (const auto& d : dels) {
    d.sup.collect_names(names);
    d.inf.collect_names(names);
  }
  p.collect_names(names);
  q.collect_names(names);
  return {names.begin(), names.end()};
}

bool robust_nf(const DelegationContext& ctx, const NormalForm& p, const NormalForm& q) {
  std::vector<DelegationNf> usable;
  usable.reserve(ctx.usable().size());
  for (std::size_t i : ctx.usable()) {
    const Delegation& d = ctx.items()[i];
    usable.push_back({normalize(d.superior), normalize(d.inferior)});
  }
  return holds_under(usable, p, q, universe(usable, p, q));
}

}  // namespace

void DelegationContext::recompute_usable() {
  std::vector<DelegationNf> nfs;
  nfs.reserve(items_.size());
  for (const auto& d : items_) nfs.push_back({normalize(d.superior), normalize(d.inferior)});

  // voice premises of each delegation
  std::vector<DelegationNf> voices;
  voices.reserve(items_.size());
  for (const auto& nf : nfs)
    voices.push_back({nf_voice(nf_proj(nf.sup, Projection::conf)),
                      nf_voice(nf_proj(nf.inf, Projection::conf))});

  std::vector<bool> usable(items_.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<DelegationNf> current;
    for (std::size_t i = 0; i < items_.size(); ++i)
      if (usable[i]) current.push_back(nfs[i]);
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (usable[i]) continue;
      auto names = universe(current, voices[i].sup, voices[i].inf);
      if (holds_under(current, voices[i].sup, voices[i].inf, names)) {
        usable[i] = true;
        changed = true;
      }
    }
  }

  usable_.clear();
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (usable[i]) usable_.push_back(i);
}

DelegationContext DelegationContext::of(std::vector<Delegation> items) {
  DelegationContext ctx;
  for (auto& d : items) ctx = ctx.extend(d);
  return ctx;
}

DelegationContext DelegationContext::extend(const Delegation& d) const {
  NormalForm sup = normalize(d.superior), inf = normalize(d.inferior);
  for (const auto& e : items_)
    if (normalize(e.superior) == sup && normalize(e.inferior) == inf) return *this;
  DelegationContext next;
  next.items_ = items_;
  next.items_.push_back(d);
  next.recompute_usable();
  return next;
}

std::string DelegationContext::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out << ", ";
    out << items_[i].to_string();
  }
  out << "]";
  return out.str();
}

bool robust_acts_for(const DelegationContext& ctx, const Principal& p, const Principal& q) {
  return robust_nf(ctx, normalize(p), normalize(q));
}

bool robust_flows_to(const DelegationContext& ctx, const Principal& p, const Principal& q) {
  NormalForm np = normalize(p), nq = normalize(q);
  NormalForm lhs = nf_conj(nf_proj(np, Projection::integ), nf_proj(nq, Projection::conf));
  NormalForm rhs = nf_conj(nf_proj(nq, Projection::integ), nf_proj(np, Projection::conf));
  return robust_nf(ctx, lhs, rhs);
}

bool robust_equiv(const DelegationContext& ctx, const Principal& p, const Principal& q) {
  NormalForm np = normalize(p), nq = normalize(q);
  return robust_nf(ctx, np, nq) && robust_nf(ctx, nq, np);
}

namespace {

// All elements of the free bounded distributive lattice over `names`,
// as canonical components.
std::vector<Component> enumerate_components(const std::vector<std::string>& names) {
  std::vector<std::vector<std::string>> subsets;
  const std::size_t k = names.size();
  for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ull << i)) s.push_back(names[i]);
    subsets.push_back(std::move(s));
  }
  std::vector<Component> out;
  out.push_back(Component::bottom());
  out.push_back(Component::top());
  const std::size_t m = subsets.size();
  for (std::uint64_t fam = 1; fam < (1ull << m); ++fam) {
    // keep antichains only
    bool anti = true;
    for (std::size_t i = 0; i < m && anti; ++i) {
      if (!(fam & (1ull << i))) continue;
      for (std::size_t j = 0; j < m && anti; ++j) {
        if (i == j || !(fam & (1ull << j))) continue;
        if (std::includes(subsets[j].begin(), subsets[j].end(), subsets[i].begin(),
                          subsets[i].end()) &&
            subsets[i] != subsets[j])
          anti = false;
        if (subsets[i] == subsets[j]) anti = false;
      }
    }
    if (!anti) continue;
    Component c = Component::bottom();
    for (std::size_t i = 0; i < m; ++i)
      if (fam & (1ull << i)) {
        Component clause = Component::atom(subsets[i].front());
        for (std::size_t j = 1; j < subsets[i].size(); ++j)
          clause = Component::meet(clause, Component::atom(subsets[i][j]));
        c = Component::join(c, clause);
      }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Factorization minimal_factorization(const DelegationContext& ctx, const Principal& p,
                                    const Principal& q, std::size_t max_atoms) {
  NormalForm np = normalize(p), nq = normalize(q);
  std::set<std::string> names;
  np.collect_names(names);
  nq.collect_names(names);
  for (const auto& d : ctx.items()) {
    normalize(d.superior).collect_names(names);
    normalize(d.inferior).collect_names(names);
  }
  if (2 * names.size() > max_atoms)
    throw CandidateSpaceExceeded("factorization universe has " +
                                 std::to_string(2 * names.size()) + " atoms (bound " +
                                 std::to_string(max_atoms) + ")");

  NormalForm base = nf_disj(np, nq);  // q_s = p \/ q
  std::vector<std::string> name_list(names.begin(), names.end());
  std::vector<Component> values = enumerate_components(name_list);

  std::optional<NormalForm> gap;
  for (const Component& conf : values) {
    for (const Component& integ : values) {
      NormalForm r{conf, integ};
      NormalForm combined = nf_conj(base, r);
      if (robust_nf(ctx, nq, combined) && robust_nf(ctx, combined, nq))
        gap = gap ? nf_disj(*gap, r) : r;
    }
  }
  // q itself is always a candidate, so the set is never empty
  return {base.to_principal(), gap->to_principal()};
}

Principal subtract(const DelegationContext& ctx, const Principal& q, const Principal& p,
                   std::size_t max_atoms) {
  return minimal_factorization(ctx, p, q, max_atoms).gap;
}

}  // namespace flac
