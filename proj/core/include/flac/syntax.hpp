#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flac/principals.hpp"

namespace flac {

struct Span {
  int line = 0;
  int col = 0;
};

class Type {
 public:
  enum class Kind { acts_for, unit, sum, prod, fun, says, tyvar, forall };

  Type() : Type(unit()) {}

  static Type acts_for(Principal sup, Principal inf);
  static Type unit();
  static Type sum(Type l, Type r);
  static Type prod(Type l, Type r);
  static Type fun(Type arg, Principal pc, Type res);
  static Type says(Principal label, Type body);
  static Type tyvar(std::string name);
  static Type forall(std::string var, Principal pc, Type body);

  Kind kind() const;
  const Principal& label() const;     // says
  const Principal& pc() const;        // fun/forall
  const Principal& superior() const;  // acts_for
  const Principal& inferior() const;  // acts_for
  const std::string& var() const;     // tyvar/forall
  Type left() const;                  // sum/prod; fun arg; says/forall body
  Type right() const;                 // sum/prod; fun result

  std::string to_string() const;
  void free_tyvars(std::set<std::string>& out) const;

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Structural type equality with principals compared by normal form.
bool type_equal(const Type& a, const Type& b);

// tau[X -> replacement], capture-avoiding.
Type type_subst(const Type& tau, const std::string& x, const Type& replacement);

class Term {
 public:
  enum class Kind {
    var, unit_val, pair, proj, inj, case_, lam, app, tlam, tapp, del,
    unit_m, sealed, bind, assume, where, prot_ctx, bracket, hole, opaque
  };

  Term() : Term(unit_val()) {}

  static Term var(std::string name, Span s = {});
  static Term unit_val(Span s = {});
  static Term pair(Term l, Term r, Span s = {});
  static Term proj(int i, Term e, Span s = {});
  static Term inj(int i, Type sum_type, Term e, Span s = {});
  static Term case_of(Term scrut, std::string lvar, Term l, std::string rvar, Term r, Span s = {});
  static Term lam(std::string var, Type ty, Principal pc, Term body, Span s = {});
  static Term app(Term f, Term a, Span s = {});
  static Term tlam(std::string var, Principal pc, Term body, Span s = {});
  static Term tapp(Term f, Type a, Span s = {});
  static Term del(Principal sup, Principal inf, Span s = {});
  static Term unit_m(Principal label, Term e, Span s = {});   // eta[l] e
  static Term sealed(Principal label, Term e, Span s = {});   // sealed value
  static Term bind(std::string var, Term e, Term body, Span s = {});
  static Term assume(Term e, Term body, Span s = {});
  static Term where(Term e, Term v, Span s = {});
  static Term prot_ctx(Principal label, Term e, Span s = {});
  static Term bracket(Term l, Term r, Span s = {});
  static Term hole(Type ty, Span s = {});
  static Term opaque(Span s = {});  // the erasure marker

  Kind kind() const;
  Span span() const;
  const std::string& var_name() const;  // var/lam/tlam/bind/case vars
  const std::string& case_lvar() const;
  const std::string& case_rvar() const;
  int index() const;                   // proj/inj
  const Principal& label() const;      // unit_m/sealed/prot_ctx; lam/tlam pc
  const Principal& superior() const;   // del
  const Principal& inferior() const;   // del
  const Type& type_ann() const;        // lam arg type, inj sum type, tapp arg, hole
  Term child(int i) const;             // structured children, 0-based

  bool operator==(const Term& o) const { return term_equal(*this, o); }
  static bool term_equal(const Term& a, const Term& b);
  std::size_t tree_hash() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// No sealed, where, protection-context, bracket, hole or opaque nodes.
bool is_source_level(const Term& e);
// Plain value: unit, pair of where-values, delegation, sealed, inj of
// where-value, closed-enough lambda or type lambda.
bool is_value(const Term& e);
// A value under zero or more where wrappers.
bool is_where_value(const Term& e);

void free_vars(const Term& e, std::set<std::string>& out);
void free_tyvars(const Term& e, std::set<std::string>& out);

// e[x -> w], capture-avoiding.
Term substitute(const Term& e, const std::string& x, const Term& w);
// e[X -> tau], capture-avoiding.
Term substitute_type(const Term& e, const std::string& x, const Type& tau);

// Renames every binder to a canonical sequence so alpha-equivalent
// terms become structurally equal.
Term canonical(const Term& e);

// Session-unique variable name derived from base.
std::string fresh_name(const std::string& base);

}  // namespace flac
