#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace flac {

enum class Projection { conf, integ };

inline Projection other(Projection p) {
  return p == Projection::conf ? Projection::integ : Projection::conf;
}

// Immutable principal expression: names, top, bot, projections,
// conjunction and disjunction. Equality here is structural; algebraic
// equivalence is decided through normal forms.
class Principal {
 public:
  enum class Kind { name, top, bot, proj, conj, disj };

  Principal() : Principal(bot()) {}

  static Principal name(std::string id);
  static Principal top();
  static Principal bot();
  static Principal conj(Principal l, Principal r);
  static Principal disj(Principal l, Principal r);
  Principal project(Projection pi) const;

  Kind kind() const;
  const std::string& name_id() const;  // kind() == name
  Projection projection() const;       // kind() == proj
  Principal base() const;              // kind() == proj
  Principal left() const;              // conj/disj
  Principal right() const;             // conj/disj

  bool same_tree(const Principal& o) const;
  std::size_t tree_hash() const;
  std::string to_string() const;

  void collect_names(std::set<std::string>& out) const;

  struct Node;  // exposed for the implementation's helpers only

 private:
  explicit Principal(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// One component of a normal form: an element of the free bounded
// distributive lattice over name atoms, kept as a canonical
// join-of-meets (authority order: conjunction is the lattice join).
// Each clause is a sorted set of names, the clause set is a
// subset-minimal antichain in sorted order.
class Component {
 public:
  static Component bottom();
  static Component top();
  static Component atom(const std::string& n);

  bool is_bottom() const { return !top_ && clauses_.empty(); }
  bool is_top() const { return top_; }
  const std::vector<std::vector<std::string>>& clauses() const { return clauses_; }

  static Component join(const Component& a, const Component& b);
  static Component meet(const Component& a, const Component& b);

  // Free-lattice order: this >= other.
  bool geq(const Component& other) const;
  bool operator==(const Component& other) const;
  bool operator!=(const Component& other) const { return !(*this == other); }

  void collect_names(std::set<std::string>& out) const;

  // Evaluate as a monotone 0/1 function of the atoms. `top_value`
  // interprets the side's top atom and must dominate every name bit.
  bool eval(const std::set<std::string>& true_names, bool top_value) const;

 private:
  bool top_ = false;
  std::vector<std::vector<std::string>> clauses_;
  void minimize();
};

// Canonical normal form conf-> /\ integ<-.
struct NormalForm {
  Component conf;
  Component integ;

  bool acts_for(const NormalForm& q) const;
  bool equiv(const NormalForm& q) const;
  bool operator==(const NormalForm& o) const { return conf == o.conf && integ == o.integ; }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }

  Principal to_principal() const;
  std::string to_string() const;
  void collect_names(std::set<std::string>& out) const;
};

NormalForm normalize(const Principal& p);

NormalForm nf_conj(const NormalForm& a, const NormalForm& b);
NormalForm nf_disj(const NormalForm& a, const NormalForm& b);
NormalForm nf_proj(const NormalForm& a, Projection pi);
NormalForm nf_join(const NormalForm& a, const NormalForm& b);
NormalForm nf_meet(const NormalForm& a, const NormalForm& b);
NormalForm nf_voice(const NormalForm& a);
NormalForm nf_view(const NormalForm& a);

bool static_acts_for(const Principal& p, const Principal& q);
bool static_equiv(const Principal& p, const Principal& q);
bool flows_to(const Principal& p, const Principal& q);

Principal join(const Principal& p, const Principal& q);
Principal meet(const Principal& p, const Principal& q);
Principal voice(const Principal& p);
Principal view(const Principal& p);
Principal proj(const Principal& p, Projection pi);

}  // namespace flac
