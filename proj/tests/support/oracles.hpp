#pragma once

// Independent decision routes used only by tests. The static oracle
// evaluates raw principal trees as monotone functions over every
// two-valued assignment; the robust oracle saturates the inference
// rules over the finite universe of normal forms for a small name set.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "flac/delegations.hpp"
#include "flac/principals.hpp"

namespace flac::test {

struct BitPair {
  bool conf = false;
  bool integ = false;
};

struct OracleAssignment {
  std::map<std::string, BitPair> names;
  BitPair top;
};

inline BitPair oracle_eval(const Principal& p, const OracleAssignment& a) {
  switch (p.kind()) {
    case Principal::Kind::name: {
      auto it = a.names.find(p.name_id());
      return it == a.names.end() ? BitPair{} : it->second;
    }
    case Principal::Kind::top: return a.top;
    case Principal::Kind::bot: return {false, false};
    case Principal::Kind::proj: {
      BitPair b = oracle_eval(p.base(), a);
      if (p.projection() == Projection::conf) return {b.conf, false};
      return {false, b.integ};
    }
    case Principal::Kind::conj: {
      BitPair l = oracle_eval(p.left(), a), r = oracle_eval(p.right(), a);
      return {l.conf || r.conf, l.integ || r.integ};
    }
    case Principal::Kind::disj: {
      BitPair l = oracle_eval(p.left(), a), r = oracle_eval(p.right(), a);
      return {l.conf && r.conf, l.integ && r.integ};
    }
  }
  return {};
}

// All assignments over the combined name set; the top principal's bits
// dominate every name bit.
template <typename Fn>
void for_each_oracle_assignment(const std::set<std::string>& names, Fn&& fn) {
  std::vector<std::string> list(names.begin(), names.end());
  const std::size_t k = list.size();
  for (std::uint64_t cm = 0; cm < (1ull << k); ++cm) {
    for (std::uint64_t im = 0; im < (1ull << k); ++im) {
      for (int tc = 0; tc < 2; ++tc) {
        if (!tc && cm) continue;
        for (int ti = 0; ti < 2; ++ti) {
          if (!ti && im) continue;
          OracleAssignment a;
          a.top = {tc != 0, ti != 0};
          for (std::size_t i = 0; i < k; ++i)
            a.names[list[i]] = {(cm >> i) & 1ull ? true : false,
                                (im >> i) & 1ull ? true : false};
          fn(a);
        }
      }
    }
  }
}

inline bool oracle_static_acts_for(const Principal& p, const Principal& q) {
  std::set<std::string> names;
  p.collect_names(names);
  q.collect_names(names);
  bool ok = true;
  for_each_oracle_assignment(names, [&](const OracleAssignment& a) {
    BitPair bp = oracle_eval(p, a), bq = oracle_eval(q, a);
    if ((bq.conf && !bp.conf) || (bq.integ && !bp.integ)) ok = false;
  });
  return ok;
}

// ---------------------------------------------------------------------------
// Exact robust oracle over a fixed small name universe: enumerate all
// normal forms, seed the relation with the static order and the usable
// delegations, then close under transitivity and the conjunction and
// disjunction introduction rules until a fixed point.

class RobustOracle {
 public:
  explicit RobustOracle(const std::vector<std::string>& names) {
    std::vector<Component> comps = all_components(names);
    for (const auto& c : comps)
      for (const auto& i : comps) universe_.push_back(NormalForm{c, i});
    const std::size_t n = universe_.size();
    rel_.assign(n * n, false);
    join_.assign(n * n, 0);
    meet_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        join_[i * n + j] = index_of(nf_conj(universe_[i], universe_[j]));
        meet_[i * n + j] = index_of(nf_disj(universe_[i], universe_[j]));
      }
  }

  // Delegations must already be filtered for usability.
  void seed(const std::vector<std::pair<NormalForm, NormalForm>>& usable) {
    const std::size_t n = universe_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rel_[i * n + j] = universe_[i].acts_for(universe_[j]);
    for (const auto& [sup, inf] : usable) rel_[index_of(sup) * n + index_of(inf)] = true;
    saturate();
  }

  bool acts_for(const NormalForm& p, const NormalForm& q) const {
    return rel_[index_of(p) * universe_.size() + index_of(q)];
  }

  const std::vector<NormalForm>& universe() const { return universe_; }

 private:
  std::vector<NormalForm> universe_;
  std::vector<bool> rel_;
  std::vector<std::size_t> join_, meet_;

  std::size_t index_of(const NormalForm& nf) const {
    for (std::size_t i = 0; i < universe_.size(); ++i)
      if (universe_[i] == nf) return i;
    throw std::logic_error("normal form outside oracle universe");
  }

  static std::vector<Component> all_components(const std::vector<std::string>& names) {
    std::vector<std::vector<std::string>> subsets;
    for (std::uint64_t m = 1; m < (1ull << names.size()); ++m) {
      std::vector<std::string> s;
      for (std::size_t i = 0; i < names.size(); ++i)
        if (m & (1ull << i)) s.push_back(names[i]);
      subsets.push_back(std::move(s));
    }
    std::vector<Component> out{Component::bottom(), Component::top()};
    const std::size_t m = subsets.size();
    for (std::uint64_t fam = 1; fam < (1ull << m); ++fam) {
      bool anti = true;
      for (std::size_t i = 0; i < m && anti; ++i) {
        if (!(fam & (1ull << i))) continue;
        for (std::size_t j = 0; j < m && anti; ++j) {
          if (i == j || !(fam & (1ull << j))) continue;
          if (std::includes(subsets[j].begin(), subsets[j].end(), subsets[i].begin(),
                            subsets[i].end()))
            anti = false;
        }
      }
      if (!anti) continue;
      Component c = Component::bottom();
      for (std::size_t i = 0; i < m; ++i) {
        if (!(fam & (1ull << i))) continue;
        Component clause = Component::atom(subsets[i].front());
        for (std::size_t j = 1; j < subsets[i].size(); ++j)
          clause = Component::meet(clause, Component::atom(subsets[i][j]));
        c = Component::join(c, clause);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  void saturate() {
    const std::size_t n = universe_.size();
    bool changed = true;
    while (changed) {
      changed = false;
      auto set = [&](std::size_t i, std::size_t j) {
        if (!rel_[i * n + j]) {
          rel_[i * n + j] = true;
          changed = true;
        }
      };
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (!rel_[i * n + j]) continue;
          for (std::size_t k = 0; k < n; ++k) {
            if (rel_[j * n + k]) set(i, k);              // transitivity
            set(join_[i * n + k], j);                    // conj introduction, left
            if (rel_[i * n + k]) set(i, join_[j * n + k]);  // conj introduction, right
            if (rel_[k * n + j]) set(meet_[i * n + k], j);  // disj introduction, left
            set(i, meet_[j * n + k]);                    // disj introduction, right
          }
        }
    }
  }
};

// Robust-judgment oracle: computes the usable subset by the same
// least fixed point discipline, but decides every judgment by rule
// saturation over the finite universe rather than assignments.
class RobustJudgmentOracle {
 public:
  RobustJudgmentOracle(const std::vector<std::string>& names, const DelegationContext& ctx)
      : oracle_(names) {
    std::vector<std::pair<NormalForm, NormalForm>> all;
    for (const auto& d : ctx.items()) all.emplace_back(normalize(d.superior), normalize(d.inferior));

    std::vector<bool> usable(all.size(), false);
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::pair<NormalForm, NormalForm>> current;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (usable[i]) current.push_back(all[i]);
      oracle_.seed(current);
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (usable[i]) continue;
        NormalForm vs = nf_voice(nf_proj(all[i].first, Projection::conf));
        NormalForm vi = nf_voice(nf_proj(all[i].second, Projection::conf));
        if (oracle_.acts_for(vs, vi)) {
          usable[i] = true;
          changed = true;
        }
      }
    }
    std::vector<std::pair<NormalForm, NormalForm>> current;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (usable[i]) current.push_back(all[i]);
    oracle_.seed(current);
  }

  bool acts_for(const Principal& p, const Principal& q) const {
    return oracle_.acts_for(normalize(p), normalize(q));
  }

 private:
  RobustOracle oracle_;
};

}  // namespace flac::test
