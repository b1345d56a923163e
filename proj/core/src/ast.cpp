#include "flac/syntax.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>

namespace flac {

namespace {
std::atomic<std::uint64_t> fresh_counter{0};
}

std::string fresh_name(const std::string& base) {
  std::string stem = base.substr(0, base.find('#'));
  return stem + "#" + std::to_string(++fresh_counter);
}

// ---------------------------------------------------------------------------
// Types

struct Type::Node {
  Kind kind;
  Principal pr;   // says label / fun pc / forall pc / acts_for superior
  Principal pr2;  // acts_for inferior
  std::string str;
  std::shared_ptr<const Node> a, b;
};

Type Type::acts_for(Principal sup, Principal inf) {
  Node n;
  n.kind = Kind::acts_for;
  n.pr = std::move(sup);
  n.pr2 = std::move(inf);
  return Type(std::make_shared<const Node>(std::move(n)));
}

Type Type::unit() {
  Node n;
  n.kind = Kind::unit;
  return Type(std::make_shared<const Node>(std::move(n)));
}

Type Type::sum(Type l, Type r) {
  Node n;
  n.kind = Kind::sum;
  n.a = l.node_;
  n.b = r.node_;
  return Type(std::make_shared<const Node>(std::move(n)));
}

Type Type::prod(Type l, Type r) {
  Node n;
  n.kind = Kind::prod;
  n.a = l.node_;
  n.b = r.node_;
  return Type(std::make_shared<const Node>(std::move(n)));
}

Type Type::fun(Type arg, Principal pc, Type res) {
  Node n;
  n.kind = Kind::fun;
  n.pr = std::move(pc);
  n.a = arg.node_;
  n.b = res.node_;
  return Type(std::make_shared<const Node>(std::move(n)));
}

Type Type::says(Principal label, Type body) {
  Node n;
  n.kind = Kind::says;
  n.pr = std::move(label);
  n.a = body.node_;
  return Type(std::make_shared<const Node>(std::move(n)));
}

Type Type::tyvar(std::string name) {
  Node n;
  n.kind = Kind::tyvar;
  n.str = std::move(name);
  return Type(std::make_shared<const Node>(std::move(n)));
}

Type Type::forall(std::string var, Principal pc, Type body) {
  Node n;
  n.kind = Kind::forall;
  n.str = std::move(var);
  n.pr = std::move(pc);
  n.a = body.node_;
  return Type(std::make_shared<const Node>(std::move(n)));
}

Type::Kind Type::kind() const { return node_->kind; }
const Principal& Type::label() const { return node_->pr; }
const Principal& Type::pc() const { return node_->pr; }
const Principal& Type::superior() const { return node_->pr; }
const Principal& Type::inferior() const { return node_->pr2; }
const std::string& Type::var() const { return node_->str; }
Type Type::left() const { return Type(node_->a); }
Type Type::right() const { return Type(node_->b); }

void Type::free_tyvars(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::tyvar: out.insert(node_->str); return;
    case Kind::unit:
    case Kind::acts_for: return;
    case Kind::says: left().free_tyvars(out); return;
    case Kind::sum:
    case Kind::prod:
    case Kind::fun:
      left().free_tyvars(out);
      right().free_tyvars(out);
      return;
    case Kind::forall: {
      std::set<std::string> inner;
      left().free_tyvars(inner);
      inner.erase(node_->str);
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

bool type_equal(const Type& a, const Type& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Type::Kind::unit: return true;
    case Type::Kind::tyvar: return a.var() == b.var();
    case Type::Kind::acts_for:
      return static_equiv(a.superior(), b.superior()) && static_equiv(a.inferior(), b.inferior());
    case Type::Kind::says:
      return static_equiv(a.label(), b.label()) && type_equal(a.left(), b.left());
    case Type::Kind::sum:
    case Type::Kind::prod:
      return type_equal(a.left(), b.left()) && type_equal(a.right(), b.right());
    case Type::Kind::fun:
      return static_equiv(a.pc(), b.pc()) && type_equal(a.left(), b.left()) &&
             type_equal(a.right(), b.right());
    case Type::Kind::forall: {
      if (!static_equiv(a.pc(), b.pc())) return false;
      if (a.var() == b.var()) return type_equal(a.left(), b.left());
      Type fresh = Type::tyvar(fresh_name(a.var()));
      return type_equal(type_subst(a.left(), a.var(), fresh),
                        type_subst(b.left(), b.var(), fresh));
    }
  }
  return false;
}

Type type_subst(const Type& tau, const std::string& x, const Type& replacement) {
  switch (tau.kind()) {
    case Type::Kind::tyvar: return tau.var() == x ? replacement : tau;
    case Type::Kind::unit:
    case Type::Kind::acts_for: return tau;
    case Type::Kind::says:
      return Type::says(tau.label(), type_subst(tau.left(), x, replacement));
    case Type::Kind::sum:
      return Type::sum(type_subst(tau.left(), x, replacement),
                       type_subst(tau.right(), x, replacement));
    case Type::Kind::prod:
      return Type::prod(type_subst(tau.left(), x, replacement),
                        type_subst(tau.right(), x, replacement));
    case Type::Kind::fun:
      return Type::fun(type_subst(tau.left(), x, replacement), tau.pc(),
                       type_subst(tau.right(), x, replacement));
    case Type::Kind::forall: {
      if (tau.var() == x) return tau;
      std::set<std::string> fv;
      replacement.free_tyvars(fv);
      if (fv.count(tau.var())) {
        std::string nv = fresh_name(tau.var());
        Type renamed = type_subst(tau.left(), tau.var(), Type::tyvar(nv));
        return Type::forall(nv, tau.pc(), type_subst(renamed, x, replacement));
      }
      return Type::forall(tau.var(), tau.pc(), type_subst(tau.left(), x, replacement));
    }
  }
  throw std::logic_error("unreachable type kind");
}

// ---------------------------------------------------------------------------
// Terms

struct Term::Node {
  Kind kind;
  Span span;
  std::string str;   // var name / binder
  std::string str2;  // case right binder
  int idx = 0;       // proj/inj index
  Principal pr;      // label / pc / del superior
  Principal pr2;     // del inferior
  std::optional<Type> ty;
  std::shared_ptr<const Node> a, b, c;
};

Term Term::var(std::string name, Span s) {
  Node n;
  n.kind = Kind::var;
  n.str = std::move(name);
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::unit_val(Span s) {
  Node n;
  n.kind = Kind::unit_val;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::pair(Term l, Term r, Span s) {
  Node n;
  n.kind = Kind::pair;
  n.a = l.node_;
  n.b = r.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::proj(int i, Term e, Span s) {
  Node n;
  n.kind = Kind::proj;
  n.idx = i;
  n.a = e.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::inj(int i, Type sum_type, Term e, Span s) {
  Node n;
  n.kind = Kind::inj;
  n.idx = i;
  n.ty = std::move(sum_type);
  n.a = e.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::case_of(Term scrut, std::string lvar, Term l, std::string rvar, Term r, Span s) {
  Node n;
  n.kind = Kind::case_;
  n.str = std::move(lvar);
  n.str2 = std::move(rvar);
  n.a = scrut.node_;
  n.b = l.node_;
  n.c = r.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::lam(std::string var, Type ty, Principal pc, Term body, Span s) {
  Node n;
  n.kind = Kind::lam;
  n.str = std::move(var);
  n.ty = std::move(ty);
  n.pr = std::move(pc);
  n.a = body.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::app(Term f, Term a, Span s) {
  Node n;
  n.kind = Kind::app;
  n.a = f.node_;
  n.b = a.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::tlam(std::string var, Principal pc, Term body, Span s) {
  Node n;
  n.kind = Kind::tlam;
  n.str = std::move(var);
  n.pr = std::move(pc);
  n.a = body.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::tapp(Term f, Type a, Span s) {
  Node n;
  n.kind = Kind::tapp;
  n.ty = std::move(a);
  n.a = f.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::del(Principal sup, Principal inf, Span s) {
  Node n;
  n.kind = Kind::del;
  n.pr = std::move(sup);
  n.pr2 = std::move(inf);
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::unit_m(Principal label, Term e, Span s) {
  Node n;
  n.kind = Kind::unit_m;
  n.pr = std::move(label);
  n.a = e.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::sealed(Principal label, Term e, Span s) {
  Node n;
  n.kind = Kind::sealed;
  n.pr = std::move(label);
  n.a = e.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::bind(std::string var, Term e, Term body, Span s) {
  Node n;
  n.kind = Kind::bind;
  n.str = std::move(var);
  n.a = e.node_;
  n.b = body.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::assume(Term e, Term body, Span s) {
  Node n;
  n.kind = Kind::assume;
  n.a = e.node_;
  n.b = body.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::where(Term e, Term v, Span s) {
  Node n;
  n.kind = Kind::where;
  n.a = e.node_;
  n.b = v.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::prot_ctx(Principal label, Term e, Span s) {
  Node n;
  n.kind = Kind::prot_ctx;
  n.pr = std::move(label);
  n.a = e.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::bracket(Term l, Term r, Span s) {
  Node n;
  n.kind = Kind::bracket;
  n.a = l.node_;
  n.b = r.node_;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::hole(Type ty, Span s) {
  Node n;
  n.kind = Kind::hole;
  n.ty = std::move(ty);
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::opaque(Span s) {
  Node n;
  n.kind = Kind::opaque;
  n.span = s;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term::Kind Term::kind() const { return node_->kind; }
Span Term::span() const { return node_->span; }
const std::string& Term::var_name() const { return node_->str; }
const std::string& Term::case_lvar() const { return node_->str; }
const std::string& Term::case_rvar() const { return node_->str2; }
int Term::index() const { return node_->idx; }
const Principal& Term::label() const { return node_->pr; }
const Principal& Term::superior() const { return node_->pr; }
const Principal& Term::inferior() const { return node_->pr2; }
const Type& Term::type_ann() const { return *node_->ty; }

Term Term::child(int i) const {
  switch (i) {
    case 0: return Term(node_->a);
    case 1: return Term(node_->b);
    case 2: return Term(node_->c);
  }
  throw std::out_of_range("term child index");
}

namespace {

int child_count(Term::Kind k) {
  switch (k) {
    case Term::Kind::var:
    case Term::Kind::unit_val:
    case Term::Kind::del:
    case Term::Kind::hole:
    case Term::Kind::opaque: return 0;
    case Term::Kind::proj:
    case Term::Kind::inj:
    case Term::Kind::unit_m:
    case Term::Kind::sealed:
    case Term::Kind::prot_ctx:
    case Term::Kind::tapp:
    case Term::Kind::lam:
    case Term::Kind::tlam: return 1;
    case Term::Kind::pair:
    case Term::Kind::app:
    case Term::Kind::bind:
    case Term::Kind::assume:
    case Term::Kind::where:
    case Term::Kind::bracket: return 2;
    case Term::Kind::case_: return 3;
  }
  return 0;
}

}  // namespace

bool Term::term_equal(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::var: return a.var_name() == b.var_name();
    case Kind::unit_val:
    case Kind::opaque: return true;
    case Kind::del:
      return static_equiv(a.superior(), b.superior()) && static_equiv(a.inferior(), b.inferior());
    case Kind::hole: return type_equal(a.type_ann(), b.type_ann());
    case Kind::proj:
      if (a.index() != b.index()) return false;
      break;
    case Kind::inj:
      if (a.index() != b.index() || !type_equal(a.type_ann(), b.type_ann())) return false;
      break;
    case Kind::unit_m:
    case Kind::sealed:
    case Kind::prot_ctx:
      if (!static_equiv(a.label(), b.label())) return false;
      break;
    case Kind::lam:
      if (a.var_name() != b.var_name() || !static_equiv(a.label(), b.label()) ||
          !type_equal(a.type_ann(), b.type_ann()))
        return false;
      break;
    case Kind::tlam:
      if (a.var_name() != b.var_name() || !static_equiv(a.label(), b.label())) return false;
      break;
    case Kind::bind:
      if (a.var_name() != b.var_name()) return false;
      break;
    case Kind::case_:
      if (a.case_lvar() != b.case_lvar() || a.case_rvar() != b.case_rvar()) return false;
      break;
    case Kind::tapp:
      if (!type_equal(a.type_ann(), b.type_ann())) return false;
      break;
    default: break;
  }
  int nc = child_count(a.kind());
  for (int i = 0; i < nc; ++i)
    if (!term_equal(a.child(i), b.child(i))) return false;
  return true;
}

std::size_t Term::tree_hash() const {
  std::size_t h = static_cast<std::size_t>(kind()) * 1099511628211ull;
  auto mixin = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  switch (kind()) {
    case Kind::var:
    case Kind::lam:
    case Kind::tlam:
    case Kind::bind: mixin(std::hash<std::string>{}(node_->str)); break;
    default: break;
  }
  int nc = child_count(kind());
  for (int i = 0; i < nc; ++i) mixin(child(i).tree_hash());
  return h;
}

bool is_source_level(const Term& e) {
  switch (e.kind()) {
    case Term::Kind::sealed:
    case Term::Kind::where:
    case Term::Kind::prot_ctx:
    case Term::Kind::bracket:
    case Term::Kind::hole:
    case Term::Kind::opaque: return false;
    default: break;
  }
  int nc = child_count(e.kind());
  for (int i = 0; i < nc; ++i)
    if (!is_source_level(e.child(i))) return false;
  return true;
}

bool is_value(const Term& e) {
  switch (e.kind()) {
    case Term::Kind::unit_val:
    case Term::Kind::del:
    case Term::Kind::lam:
    case Term::Kind::tlam: return true;
    case Term::Kind::pair:
      return is_where_value(e.child(0)) && is_where_value(e.child(1));
    case Term::Kind::inj: return is_where_value(e.child(0));
    case Term::Kind::sealed: return is_where_value(e.child(0));
    default: return false;
  }
}

bool is_where_value(const Term& e) {
  if (e.kind() == Term::Kind::where)
    return is_where_value(e.child(0)) && is_value(e.child(1));
  if (e.kind() == Term::Kind::bracket)
    return is_where_value(e.child(0)) && is_where_value(e.child(1));
  return is_value(e);
}

void free_vars(const Term& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case Term::Kind::var: out.insert(e.var_name()); return;
    case Term::Kind::lam: {
      std::set<std::string> inner;
      free_vars(e.child(0), inner);
      inner.erase(e.var_name());
      out.insert(inner.begin(), inner.end());
      return;
    }
    case Term::Kind::bind: {
      free_vars(e.child(0), out);
      std::set<std::string> inner;
      free_vars(e.child(1), inner);
      inner.erase(e.var_name());
      out.insert(inner.begin(), inner.end());
      return;
    }
    case Term::Kind::case_: {
      free_vars(e.child(0), out);
      std::set<std::string> l, r;
      free_vars(e.child(1), l);
      l.erase(e.case_lvar());
      free_vars(e.child(2), r);
      r.erase(e.case_rvar());
      out.insert(l.begin(), l.end());
      out.insert(r.begin(), r.end());
      return;
    }
    default: {
      int nc = child_count(e.kind());
      for (int i = 0; i < nc; ++i) free_vars(e.child(i), out);
      return;
    }
  }
}

void free_tyvars(const Term& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case Term::Kind::lam: {
      e.type_ann().free_tyvars(out);
      free_tyvars(e.child(0), out);
      return;
    }
    case Term::Kind::tlam: {
      std::set<std::string> inner;
      free_tyvars(e.child(0), inner);
      inner.erase(e.var_name());
      out.insert(inner.begin(), inner.end());
      return;
    }
    case Term::Kind::inj:
    case Term::Kind::tapp:
    case Term::Kind::hole: {
      e.type_ann().free_tyvars(out);
      int nc = child_count(e.kind());
      for (int i = 0; i < nc; ++i) free_tyvars(e.child(i), out);
      return;
    }
    default: {
      int nc = child_count(e.kind());
      for (int i = 0; i < nc; ++i) free_tyvars(e.child(i), out);
      return;
    }
  }
}

namespace {

Term rebuild(const Term& e, const std::vector<Term>& kids) {
  switch (e.kind()) {
    case Term::Kind::pair: return Term::pair(kids[0], kids[1], e.span());
    case Term::Kind::proj: return Term::proj(e.index(), kids[0], e.span());
    case Term::Kind::inj: return Term::inj(e.index(), e.type_ann(), kids[0], e.span());
    case Term::Kind::case_:
      return Term::case_of(kids[0], e.case_lvar(), kids[1], e.case_rvar(), kids[2], e.span());
    case Term::Kind::lam:
      return Term::lam(e.var_name(), e.type_ann(), e.label(), kids[0], e.span());
    case Term::Kind::app: return Term::app(kids[0], kids[1], e.span());
    case Term::Kind::tlam: return Term::tlam(e.var_name(), e.label(), kids[0], e.span());
    case Term::Kind::tapp: return Term::tapp(kids[0], e.type_ann(), e.span());
    case Term::Kind::unit_m: return Term::unit_m(e.label(), kids[0], e.span());
    case Term::Kind::sealed: return Term::sealed(e.label(), kids[0], e.span());
    case Term::Kind::bind: return Term::bind(e.var_name(), kids[0], kids[1], e.span());
    case Term::Kind::assume: return Term::assume(kids[0], kids[1], e.span());
    case Term::Kind::where: return Term::where(kids[0], kids[1], e.span());
    case Term::Kind::prot_ctx: return Term::prot_ctx(e.label(), kids[0], e.span());
    case Term::Kind::bracket: return Term::bracket(kids[0], kids[1], e.span());
    default: return e;
  }
}

// One binder + body, renamed if the binder would capture.
struct BinderResult {
  std::string binder;
  Term body;
};

BinderResult subst_under_binder(const std::string& binder, const Term& body,
                                const std::string& x, const Term& w,
                                const std::set<std::string>& fvw) {
  if (binder == x) return {binder, body};
  if (fvw.count(binder)) {
    std::string nb = fresh_name(binder);
    Term renamed = substitute(body, binder, Term::var(nb));
    return {nb, substitute(renamed, x, w)};
  }
  return {binder, substitute(body, x, w)};
}

}  // namespace

Term substitute(const Term& e, const std::string& x, const Term& w) {
  switch (e.kind()) {
    case Term::Kind::var: return e.var_name() == x ? w : e;
    case Term::Kind::lam: {
      std::set<std::string> fvw;
      free_vars(w, fvw);
      BinderResult r = subst_under_binder(e.var_name(), e.child(0), x, w, fvw);
      return Term::lam(r.binder, e.type_ann(), e.label(), r.body, e.span());
    }
    case Term::Kind::bind: {
      std::set<std::string> fvw;
      free_vars(w, fvw);
      Term scrut = substitute(e.child(0), x, w);
      BinderResult r = subst_under_binder(e.var_name(), e.child(1), x, w, fvw);
      return Term::bind(r.binder, scrut, r.body, e.span());
    }
    case Term::Kind::case_: {
      std::set<std::string> fvw;
      free_vars(w, fvw);
      Term scrut = substitute(e.child(0), x, w);
      BinderResult l = subst_under_binder(e.case_lvar(), e.child(1), x, w, fvw);
      BinderResult r = subst_under_binder(e.case_rvar(), e.child(2), x, w, fvw);
      return Term::case_of(scrut, l.binder, l.body, r.binder, r.body, e.span());
    }
    default: {
      int nc = child_count(e.kind());
      if (nc == 0) return e;
      std::vector<Term> kids;
      kids.reserve(nc);
      for (int i = 0; i < nc; ++i) kids.push_back(substitute(e.child(i), x, w));
      return rebuild(e, kids);
    }
  }
}

Term substitute_type(const Term& e, const std::string& x, const Type& tau) {
  switch (e.kind()) {
    case Term::Kind::lam:
      return Term::lam(e.var_name(), type_subst(e.type_ann(), x, tau), e.label(),
                       substitute_type(e.child(0), x, tau), e.span());
    case Term::Kind::tlam: {
      if (e.var_name() == x) return e;
      std::set<std::string> fv;
      tau.free_tyvars(fv);
      if (fv.count(e.var_name())) {
        std::string nb = fresh_name(e.var_name());
        Term renamed = substitute_type(e.child(0), e.var_name(), Type::tyvar(nb));
        return Term::tlam(nb, e.label(), substitute_type(renamed, x, tau), e.span());
      }
      return Term::tlam(e.var_name(), e.label(), substitute_type(e.child(0), x, tau), e.span());
    }
    case Term::Kind::inj:
      return Term::inj(e.index(), type_subst(e.type_ann(), x, tau),
                       substitute_type(e.child(0), x, tau), e.span());
    case Term::Kind::tapp:
      return Term::tapp(substitute_type(e.child(0), x, tau), type_subst(e.type_ann(), x, tau),
                        e.span());
    case Term::Kind::hole: return Term::hole(type_subst(e.type_ann(), x, tau), e.span());
    default: {
      int nc = child_count(e.kind());
      if (nc == 0) return e;
      std::vector<Term> kids;
      kids.reserve(nc);
      for (int i = 0; i < nc; ++i) kids.push_back(substitute_type(e.child(i), x, tau));
      return rebuild(e, kids);
    }
  }
}

namespace {

Type canonical_type(const Type& t, std::map<std::string, std::string>& tmap, int& tnext) {
  switch (t.kind()) {
    case Type::Kind::tyvar: {
      auto it = tmap.find(t.var());
      return Type::tyvar(it == tmap.end() ? t.var() : it->second);
    }
    case Type::Kind::unit:
    case Type::Kind::acts_for: return t;
    case Type::Kind::says: return Type::says(t.label(), canonical_type(t.left(), tmap, tnext));
    case Type::Kind::sum:
      return Type::sum(canonical_type(t.left(), tmap, tnext),
                       canonical_type(t.right(), tmap, tnext));
    case Type::Kind::prod:
      return Type::prod(canonical_type(t.left(), tmap, tnext),
                        canonical_type(t.right(), tmap, tnext));
    case Type::Kind::fun:
      return Type::fun(canonical_type(t.left(), tmap, tnext), t.pc(),
                       canonical_type(t.right(), tmap, tnext));
    case Type::Kind::forall: {
      std::string nv = "%T" + std::to_string(tnext++);
      auto saved = tmap;
      tmap[t.var()] = nv;
      Type body = canonical_type(t.left(), tmap, tnext);
      tmap = saved;
      return Type::forall(nv, t.pc(), body);
    }
  }
  throw std::logic_error("unreachable type kind");
}

Term canonical_rec(const Term& e, std::map<std::string, std::string>& vmap,
                   std::map<std::string, std::string>& tmap, int& vnext, int& tnext) {
  switch (e.kind()) {
    case Term::Kind::var: {
      auto it = vmap.find(e.var_name());
      return Term::var(it == vmap.end() ? e.var_name() : it->second);
    }
    case Term::Kind::lam: {
      Type ty = canonical_type(e.type_ann(), tmap, tnext);
      std::string nv = "%v" + std::to_string(vnext++);
      auto saved = vmap;
      vmap[e.var_name()] = nv;
      Term body = canonical_rec(e.child(0), vmap, tmap, vnext, tnext);
      vmap = saved;
      return Term::lam(nv, ty, e.label(), body);
    }
    case Term::Kind::tlam: {
      std::string nv = "%T" + std::to_string(tnext++);
      auto saved = tmap;
      tmap[e.var_name()] = nv;
      Term body = canonical_rec(e.child(0), vmap, tmap, vnext, tnext);
      tmap = saved;
      return Term::tlam(nv, e.label(), body);
    }
    case Term::Kind::bind: {
      Term scrut = canonical_rec(e.child(0), vmap, tmap, vnext, tnext);
      std::string nv = "%v" + std::to_string(vnext++);
      auto saved = vmap;
      vmap[e.var_name()] = nv;
      Term body = canonical_rec(e.child(1), vmap, tmap, vnext, tnext);
      vmap = saved;
      return Term::bind(nv, scrut, body);
    }
    case Term::Kind::case_: {
      Term scrut = canonical_rec(e.child(0), vmap, tmap, vnext, tnext);
      auto saved = vmap;
      std::string lv = "%v" + std::to_string(vnext++);
      vmap[e.case_lvar()] = lv;
      Term lbody = canonical_rec(e.child(1), vmap, tmap, vnext, tnext);
      vmap = saved;
      std::string rv = "%v" + std::to_string(vnext++);
      vmap[e.case_rvar()] = rv;
      Term rbody = canonical_rec(e.child(2), vmap, tmap, vnext, tnext);
      vmap = saved;
      return Term::case_of(scrut, lv, lbody, rv, rbody);
    }
    case Term::Kind::inj: {
      Type ty = canonical_type(e.type_ann(), tmap, tnext);
      return Term::inj(e.index(), ty, canonical_rec(e.child(0), vmap, tmap, vnext, tnext));
    }
    case Term::Kind::tapp: {
      Term f = canonical_rec(e.child(0), vmap, tmap, vnext, tnext);
      return Term::tapp(f, canonical_type(e.type_ann(), tmap, tnext));
    }
    case Term::Kind::hole: return Term::hole(canonical_type(e.type_ann(), tmap, tnext));
    default: {
      int nc = child_count(e.kind());
      if (nc == 0) return e;
      std::vector<Term> kids;
      kids.reserve(nc);
      for (int i = 0; i < nc; ++i)
        kids.push_back(canonical_rec(e.child(i), vmap, tmap, vnext, tnext));
      return rebuild(e, kids);
    }
  }
}

}  // namespace

Term canonical(const Term& e) {
  std::map<std::string, std::string> vmap, tmap;
  int vnext = 0, tnext = 0;
  return canonical_rec(e, vmap, tmap, vnext, tnext);
}

}  // namespace flac
