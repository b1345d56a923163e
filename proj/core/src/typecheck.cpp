#include "flac/typecheck.hpp"

#include "flac/parser.hpp"

namespace flac {

TypingContext TypingContext::of(const std::vector<std::pair<std::string, Type>>& vars) {
  TypingContext g;
  for (const auto& [n, t] : vars) g.entries_.push_back({n, t});
  return g;
}

TypingContext TypingContext::with_var(std::string name, Type ty) const {
  TypingContext g = *this;
  g.entries_.push_back({std::move(name), std::move(ty)});
  return g;
}

TypingContext TypingContext::with_tyvar(std::string name) const {
  TypingContext g = *this;
  g.entries_.push_back({std::move(name), std::nullopt});
  return g;
}

const Type* TypingContext::lookup(const std::string& name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->name == name && it->type) return &*it->type;
  return nullptr;
}

bool TypingContext::has_tyvar(const std::string& name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->name == name && !it->type) return true;
  return false;
}

bool TypingContext::type_well_formed(const Type& ty) const {
  std::set<std::string> fv;
  ty.free_tyvars(fv);
  for (const auto& v : fv)
    if (!has_tyvar(v)) return false;
  return true;
}

std::string TypeErrorInfo::message() const {
  std::string out = rule + "." + premise;
  out += " at " + std::to_string(span.line) + ":" + std::to_string(span.col);
  if (!detail.empty()) out += " — " + detail;
  return out;
}

bool protects(const DelegationContext& ctx, const Principal& l, const Type& tau) {
  switch (tau.kind()) {
    case Type::Kind::unit: return true;
    case Type::Kind::prod:
      return protects(ctx, l, tau.left()) && protects(ctx, l, tau.right());
    case Type::Kind::fun:
      return protects(ctx, l, tau.right()) && robust_flows_to(ctx, l, tau.pc());
    case Type::Kind::forall:
      return protects(ctx, l, tau.left()) && robust_flows_to(ctx, l, tau.pc());
    case Type::Kind::says: return robust_flows_to(ctx, l, tau.label());
    case Type::Kind::sum:
    case Type::Kind::tyvar:
    case Type::Kind::acts_for: return false;
  }
  return false;
}

Type project_type(const Type& tau, Projection pi) {
  switch (tau.kind()) {
    case Type::Kind::fun:
      return Type::fun(tau.left(), tau.pc().project(pi), project_type(tau.right(), pi));
    case Type::Kind::says: return Type::says(tau.label().project(pi), tau.left());
    case Type::Kind::prod:
      return Type::prod(project_type(tau.left(), pi), project_type(tau.right(), pi));
    case Type::Kind::forall:
      return Type::forall(tau.var(), tau.pc().project(pi), project_type(tau.left(), pi));
    default: return tau;
  }
}

namespace {

[[noreturn]] void fail(const Term& e, std::string rule, std::string premise,
                       std::string detail = "") {
  throw TypeCheckError({std::move(rule), std::move(premise), std::move(detail), e.span()});
}

void require_acts_for(const DelegationContext& ctx, const Principal& a, const Principal& b,
                      const Term& e, const char* rule, const char* premise) {
  if (!robust_acts_for(ctx, a, b))
    fail(e, rule, premise,
         "expected Π ⊩ " + a.to_string() + " ≽ " + b.to_string());
}

void require_flows(const DelegationContext& ctx, const Principal& a, const Principal& b,
                   const Term& e, const char* rule, const char* premise) {
  if (!robust_flows_to(ctx, a, b))
    fail(e, rule, premise,
         "expected Π ⊩ " + a.to_string() + " ⊑ " + b.to_string());
}

void require_protects(const DelegationContext& ctx, const Principal& l, const Type& tau,
                      const Term& e, const char* rule, const char* premise) {
  if (!protects(ctx, l, tau))
    fail(e, rule, premise,
         "expected Π ⊢ " + l.to_string() + " protects " + pretty(tau));
}

struct Checker {
  const CheckerConfig& cfg;

  Type check(const DelegationContext& ctx, const TypingContext& gamma, const Principal& pc,
             const Term& e) {
    switch (e.kind()) {
      case Term::Kind::var: {
        const Type* t = gamma.lookup(e.var_name());
        if (!t) fail(e, "Var", "bound", "variable '" + e.var_name() + "' is not in Γ");
        return *t;
      }
      case Term::Kind::unit_val: return Type::unit();
      case Term::Kind::del: return Type::acts_for(e.superior(), e.inferior());
      case Term::Kind::lam: {
        if (!gamma.type_well_formed(e.type_ann()))
          fail(e, "Lam", "wf", "argument type has unbound type variables");
        Type body =
            check(ctx, gamma.with_var(e.var_name(), e.type_ann()), e.label(), e.child(0));
        return Type::fun(e.type_ann(), e.label(), body);
      }
      case Term::Kind::tlam: {
        Type body = check(ctx, gamma.with_tyvar(e.var_name()), e.label(), e.child(0));
        return Type::forall(e.var_name(), e.label(), body);
      }
      case Term::Kind::app: {
        Type f = check(ctx, gamma, pc, e.child(0));
        if (f.kind() != Type::Kind::fun)
          fail(e, "App", "fun", "applied term has type " + pretty(f));
        Type a = check(ctx, gamma, pc, e.child(1));
        if (!type_equal(a, f.left()))
          fail(e, "App", "arg",
               "expected argument of type " + pretty(f.left()) + ", got " + pretty(a));
        require_flows(ctx, pc, f.pc(), e, "App", "pc⊑pc'");
        return f.right();
      }
      case Term::Kind::tapp: {
        Type f = check(ctx, gamma, pc, e.child(0));
        if (f.kind() != Type::Kind::forall)
          fail(e, "TApp", "forall", "applied term has type " + pretty(f));
        if (!gamma.type_well_formed(e.type_ann()))
          fail(e, "TApp", "wf", "type argument has unbound type variables");
        require_flows(ctx, pc, f.pc(), e, "TApp", "pc⊑pc'");
        return type_subst(f.left(), f.var(), e.type_ann());
      }
      case Term::Kind::pair:
        return Type::prod(check(ctx, gamma, pc, e.child(0)), check(ctx, gamma, pc, e.child(1)));
      case Term::Kind::proj: {
        Type t = check(ctx, gamma, pc, e.child(0));
        if (t.kind() != Type::Kind::prod)
          fail(e, "Unpair", "prod", "projected term has type " + pretty(t));
        return e.index() == 1 ? t.left() : t.right();
      }
      case Term::Kind::inj: {
        const Type& ann = e.type_ann();
        Type t = check(ctx, gamma, pc, e.child(0));
        const Type arm = e.index() == 1 ? ann.left() : ann.right();
        if (!type_equal(t, arm))
          fail(e, "Inj", "arm", "expected " + pretty(arm) + ", got " + pretty(t));
        return ann;
      }
      case Term::Kind::case_: {
        Type t = check(ctx, gamma, pc, e.child(0));
        if (t.kind() != Type::Kind::sum)
          fail(e, "Case", "sum", "scrutinee has type " + pretty(t));
        Type l = check(ctx, gamma.with_var(e.case_lvar(), t.left()), pc, e.child(1));
        Type r = check(ctx, gamma.with_var(e.case_rvar(), t.right()), pc, e.child(2));
        if (!type_equal(l, r))
          fail(e, "Case", "branches",
               "branch types differ: " + pretty(l) + " vs " + pretty(r));
        require_protects(ctx, pc, l, e, "Case", "pc protects τ");
        return l;
      }
      case Term::Kind::unit_m: {
        Type t = check(ctx, gamma, pc, e.child(0));
        require_flows(ctx, pc, e.label(), e, "UnitM", "pc⊑ℓ");
        return Type::says(e.label(), t);
      }
      case Term::Kind::sealed: {
        Type t = check(ctx, gamma, pc, e.child(0));
        return Type::says(e.label(), t);
      }
      case Term::Kind::bind: {
        Type t = check(ctx, gamma, pc, e.child(0));
        if (t.kind() != Type::Kind::says)
          fail(e, "BindM", "says", "bound term has type " + pretty(t));
        Principal raised = join(pc, t.label());
        Type body = check(ctx, gamma.with_var(e.var_name(), t.left()), raised, e.child(1));
        require_protects(ctx, raised, body, e, "BindM", "protects");
        return body;
      }
      case Term::Kind::assume: {
        Type t = check(ctx, gamma, pc, e.child(0));
        if (t.kind() != Type::Kind::acts_for)
          fail(e, "Assume", "acts-for", "assumed term has type " + pretty(t));
        require_acts_for(ctx, pc, voice(t.inferior()), e, "Assume", "pc≽∇(q)");
        require_acts_for(ctx, voice(proj(t.superior(), Projection::conf)),
                         voice(proj(t.inferior(), Projection::conf)), e, "Assume",
                         "∇(p→)≽∇(q→)");
        DelegationContext extended = ctx.extend({t.superior(), t.inferior()});
        return check(extended, gamma, pc, e.child(1));
      }
      case Term::Kind::where: {
        Type t = check(ctx, gamma, pc, e.child(1));
        if (t.kind() != Type::Kind::acts_for)
          fail(e, "Where", "acts-for", "where justification has type " + pretty(t));
        require_acts_for(ctx, cfg.pc_most, voice(t.inferior()), e, "Where",
                         "pc⌄≽∇(q)");
        require_acts_for(ctx, voice(proj(t.superior(), Projection::conf)),
                         voice(proj(t.inferior(), Projection::conf)), e, "Where",
                         "∇(p→)≽∇(q→)");
        DelegationContext extended = ctx.extend({t.superior(), t.inferior()});
        return check(extended, gamma, pc, e.child(0));
      }
      case Term::Kind::prot_ctx: {
        require_flows(ctx, pc, e.label(), e, "Ctx", "pc⊑pc'");
        return check(ctx, gamma, e.label(), e.child(0));
      }
      case Term::Kind::bracket: {
        if (!cfg.harness)
          fail(e, "Bracket", "harness", "bracketed terms require harness mode");
        const Principal hp = proj(cfg.harness->H, cfg.harness->pi);
        if (is_where_value(e.child(0)) && is_where_value(e.child(1))) {
          Type l = check(ctx, gamma, pc, e.child(0));
          Type r = check(ctx, gamma, pc, e.child(1));
          if (!type_equal(l, r))
            fail(e, "Bracket-Values", "sides",
                 "sides have different types: " + pretty(l) + " vs " + pretty(r));
          require_protects(ctx, hp, project_type(l, cfg.harness->pi), e, "Bracket-Values",
                           "H^π protects τ^π");
          return l;
        }
        // pc' must satisfy H^pi |_| pc^pi [= pc'^pi; joining H^pi onto
        // the ambient pc keeps the other component available to the sides
        Principal raised = join(pc, hp);
        Type l = check(ctx, gamma, raised, e.child(0));
        Type r = check(ctx, gamma, raised, e.child(1));
        if (!type_equal(l, r))
          fail(e, "Bracket", "sides",
               "sides have different types: " + pretty(l) + " vs " + pretty(r));
        require_protects(ctx, hp, project_type(l, cfg.harness->pi), e, "Bracket",
                         "H^π protects τ^π");
        return l;
      }
      case Term::Kind::hole: {
        if (!cfg.harness) fail(e, "Hole", "harness", "holes require harness mode");
        const Principal& H = cfg.harness->H;
        require_acts_for(ctx, proj(H, Projection::integ), proj(pc, Projection::integ), e,
                         "Hole", "H←≽pc←");
        require_flows(ctx, proj(pc, Projection::conf), view(proj(H, Projection::integ)), e,
                      "Hole", "pc→⊑Δ(H←)");
        if (!gamma.type_well_formed(e.type_ann()))
          fail(e, "Hole", "wf", "hole type has unbound type variables");
        return e.type_ann();
      }
      case Term::Kind::opaque:
        fail(e, "Opaque", "typable", "the erasure marker has no type");
    }
    fail(e, "Check", "kind", "unhandled term form");
  }
};

}  // namespace

Type typecheck(const DelegationContext& ctx, const TypingContext& gamma, const Principal& pc,
               const Term& e, const CheckerConfig& cfg) {
  Checker checker{cfg};
  return checker.check(ctx, gamma, pc, e);
}

}  // namespace flac
