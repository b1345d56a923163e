#include "flac/generate.hpp"

#include <stdexcept>

#include "flac/parser.hpp"

namespace flac {

Principal random_principal(std::mt19937_64& rng, const std::vector<std::string>& names,
                           int depth) {
  auto below = [&rng](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  if (depth <= 0) {
    int k = below(static_cast<int>(names.size()) + 2);
    if (k == 0) return Principal::top();
    if (k == 1) return Principal::bot();
    return Principal::name(names[static_cast<std::size_t>(k - 2)]);
  }
  switch (below(5)) {
    case 0:
      return Principal::conj(random_principal(rng, names, depth - 1),
                             random_principal(rng, names, depth - 1));
    case 1:
      return Principal::disj(random_principal(rng, names, depth - 1),
                             random_principal(rng, names, depth - 1));
    case 2:
      return random_principal(rng, names, depth - 1).project(Projection::conf);
    case 3:
      return random_principal(rng, names, depth - 1).project(Projection::integ);
    default: return random_principal(rng, names, 0);
  }
}

TermGenerator::TermGenerator(std::uint64_t seed, std::vector<std::string> names)
    : rng_(seed), names_(std::move(names)) {
  if (names_.empty()) names_ = {"a", "b"};
}

int TermGenerator::below(int n) { return static_cast<int>(rng_() % static_cast<unsigned>(n)); }

Principal TermGenerator::principal(int depth) { return random_principal(rng_, names_, depth); }

Type TermGenerator::random_type(const Principal& pc, int depth) {
  if (depth <= 0) return Type::unit();
  switch (below(6)) {
    case 0: return Type::prod(random_type(pc, depth - 1), random_type(pc, depth - 1));
    case 1: return Type::sum(random_type(pc, depth - 1), random_type(pc, depth - 1));
    case 2: return Type::says(join(pc, principal(1)), random_type(pc, depth - 1));
    case 3: {
      Principal fpc = join(pc, principal(1));
      return Type::fun(random_type(pc, depth - 1), fpc, random_type(fpc, depth - 1));
    }
    case 4: return Type::acts_for(principal(1), principal(1));
    default: return Type::unit();
  }
}

std::optional<Term> TermGenerator::term_at(const DelegationContext& ctx,
                                           const TypingContext& gamma, const Principal& pc,
                                           const Type& tau, int depth) {
  // an in-scope variable of the right type is always fair game
  if (depth <= 0 || below(4) == 0) {
    std::vector<const std::string*> hits;
    for (const auto& e : gamma.entries())
      if (e.type && type_equal(*e.type, tau)) hits.push_back(&e.name);
    if (!hits.empty() && below(2) == 0)
      return Term::var(*hits[static_cast<std::size_t>(below(static_cast<int>(hits.size())))]);
  }
  switch (tau.kind()) {
    case Type::Kind::unit: return Term::unit_val();
    case Type::Kind::acts_for: return Term::del(tau.superior(), tau.inferior());
    case Type::Kind::prod: {
      auto l = term_at(ctx, gamma, pc, tau.left(), depth - 1);
      auto r = term_at(ctx, gamma, pc, tau.right(), depth - 1);
      if (!l || !r) return std::nullopt;
      return Term::pair(*l, *r);
    }
    case Type::Kind::sum: {
      int i = below(2) + 1;
      auto arm = term_at(ctx, gamma, pc, i == 1 ? tau.left() : tau.right(), depth - 1);
      if (!arm) {
        i = 3 - i;
        arm = term_at(ctx, gamma, pc, i == 1 ? tau.left() : tau.right(), depth - 1);
      }
      if (!arm) return std::nullopt;
      return Term::inj(i, tau, *arm);
    }
    case Type::Kind::says: {
      if (!robust_flows_to(ctx, pc, tau.label())) return std::nullopt;
      auto body = term_at(ctx, gamma, pc, tau.left(), depth - 1);
      if (!body) return std::nullopt;
      return Term::unit_m(tau.label(), *body);
    }
    case Type::Kind::fun: {
      std::string x = "x" + std::to_string(below(1000));
      auto body = term_at(ctx, gamma.with_var(x, tau.left()), tau.pc(), tau.right(), depth - 1);
      if (!body) return std::nullopt;
      return Term::lam(x, tau.left(), tau.pc(), *body);
    }
    case Type::Kind::forall: {
      auto body = term_at(ctx, gamma.with_tyvar(tau.var()), tau.pc(), tau.left(), depth - 1);
      if (!body) return std::nullopt;
      return Term::tlam(tau.var(), tau.pc(), *body);
    }
    case Type::Kind::tyvar: return std::nullopt;
  }
  return std::nullopt;
}

GeneratedTerm TermGenerator::gen(const DelegationContext& ctx, const TypingContext& gamma,
                                 const Principal& pc, int depth) {
  if (depth <= 0) {
    switch (below(3)) {
      case 0: return {Term::unit_val(), Type::unit()};
      case 1: {
        Principal p = principal(1), q = principal(1);
        return {Term::del(p, q), Type::acts_for(p, q)};
      }
      default: {
        std::vector<const TypingContext::Entry*> vars;
        for (const auto& e : gamma.entries())
          if (e.type) vars.push_back(&e);
        if (vars.empty()) return {Term::unit_val(), Type::unit()};
        const auto* v = vars[static_cast<std::size_t>(below(static_cast<int>(vars.size())))];
        return {Term::var(v->name), *v->type};
      }
    }
  }
  switch (below(12)) {
    case 0: {  // pair
      GeneratedTerm l = gen(ctx, gamma, pc, depth - 1);
      GeneratedTerm r = gen(ctx, gamma, pc, depth - 1);
      return {Term::pair(l.term, r.term), Type::prod(l.type, r.type)};
    }
    case 1: {  // projection of a fresh pair
      GeneratedTerm l = gen(ctx, gamma, pc, depth - 1);
      GeneratedTerm r = gen(ctx, gamma, pc, depth - 1);
      int i = below(2) + 1;
      return {Term::proj(i, Term::pair(l.term, r.term)), i == 1 ? l.type : r.type};
    }
    case 2: {  // injection
      GeneratedTerm g = gen(ctx, gamma, pc, depth - 1);
      Type other = random_type(pc, depth - 1);
      int i = below(2) + 1;
      Type sum = i == 1 ? Type::sum(g.type, other) : Type::sum(other, g.type);
      return {Term::inj(i, sum, g.term), sum};
    }
    case 3: {  // case on a fresh injection
      GeneratedTerm scrut_arm = gen(ctx, gamma, pc, depth - 1);
      Type other = random_type(pc, depth - 2);
      int i = below(2) + 1;
      Type sum = i == 1 ? Type::sum(scrut_arm.type, other) : Type::sum(other, scrut_arm.type);
      Term scrut = Term::inj(i, sum, scrut_arm.term);
      Principal lbl = join(pc, principal(1));
      Type res = Type::says(lbl, Type::unit());
      std::string xl = "c" + std::to_string(below(1000));
      std::string xr = "c" + std::to_string(below(1000));
      auto lb = term_at(ctx, gamma.with_var(xl, sum.left()), pc, res, depth - 1);
      auto rb = term_at(ctx, gamma.with_var(xr, sum.right()), pc, res, depth - 1);
      if (!lb || !rb) break;
      return {Term::case_of(scrut, xl, *lb, xr, *rb), res};
    }
    case 4: {  // lambda
      Type arg = random_type(pc, depth - 1);
      Principal fpc = join(pc, principal(1));
      std::string x = "x" + std::to_string(below(1000));
      GeneratedTerm body = gen(ctx, gamma.with_var(x, arg), fpc, depth - 1);
      return {Term::lam(x, arg, fpc, body.term), Type::fun(arg, fpc, body.type)};
    }
    case 5: {  // beta redex
      GeneratedTerm arg = gen(ctx, gamma, pc, depth - 1);
      Principal fpc = join(pc, principal(1));
      std::string x = "x" + std::to_string(below(1000));
      GeneratedTerm body = gen(ctx, gamma.with_var(x, arg.type), fpc, depth - 1);
      return {Term::app(Term::lam(x, arg.type, fpc, body.term), arg.term), body.type};
    }
    case 6: {  // type abstraction
      Principal fpc = join(pc, principal(1));
      std::string X = "X" + std::to_string(below(1000));
      GeneratedTerm body = gen(ctx, gamma.with_tyvar(X), fpc, depth - 1);
      return {Term::tlam(X, fpc, body.term), Type::forall(X, fpc, body.type)};
    }
    case 7: {  // type application redex
      Principal fpc = join(pc, principal(1));
      std::string X = "X" + std::to_string(below(1000));
      GeneratedTerm body = gen(ctx, gamma.with_tyvar(X), fpc, depth - 1);
      Type targ = random_type(pc, 1);
      std::set<std::string> fv;
      body.type.free_tyvars(fv);
      if (fv.count(X)) break;  // keep the instantiated type simple
      return {Term::tapp(Term::tlam(X, fpc, body.term), targ), body.type};
    }
    case 8: {  // protect a value
      Principal lbl = join(pc, principal(1));
      GeneratedTerm g = gen(ctx, gamma, pc, depth - 1);
      return {Term::unit_m(lbl, g.term), Type::says(lbl, g.type)};
    }
    case 9: {  // bind of a freshly sealed value
      Principal lbl = join(pc, principal(1));
      GeneratedTerm inner = gen(ctx, gamma, pc, depth - 2 < 0 ? 0 : depth - 2);
      Term scrut = Term::unit_m(lbl, inner.term);
      Principal raised = join(pc, lbl);
      std::string x = "b" + std::to_string(below(1000));
      TypingContext g2 = gamma.with_var(x, inner.type);
      GeneratedTerm body = gen(ctx, g2, raised, depth - 2 < 0 ? 0 : depth - 2);
      if (!protects(ctx, raised, body.type)) {
        Principal out = join(raised, principal(1));
        body = {Term::unit_m(out, body.term), Type::says(out, body.type)};
      }
      return {Term::bind(x, scrut, body.term), body.type};
    }
    case 10: {  // assume a safe delegation
      Principal sup = principal(depth >= 2 ? 2 : 1);
      Principal inf = Principal::bot();
      if (below(3) == 0) {
        Principal cand = principal(1).project(Projection::integ);
        if (robust_acts_for(ctx, pc, voice(cand)) &&
            robust_acts_for(ctx, voice(proj(sup, Projection::conf)),
                            voice(proj(cand, Projection::conf))))
          inf = cand;
      }
      DelegationContext ext = ctx.extend({sup, inf});
      GeneratedTerm body = gen(ext, gamma, pc, depth - 1);
      return {Term::assume(Term::del(sup, inf), body.term), body.type};
    }
    default: break;
  }
  return gen(ctx, gamma, pc, depth - 1);
}

GeneratedTerm TermGenerator::closed_term(const DelegationContext& ctx, const Principal& pc,
                                         int depth) {
  GeneratedTerm g = gen(ctx, TypingContext{}, pc, depth);
  Type t = typecheck(ctx, TypingContext{}, pc, g.term);  // throws on generator bugs
  if (!type_equal(t, g.type))
    throw std::logic_error("generator type disagrees with checker: " + pretty(g.type) +
                           " vs " + pretty(t));
  return g;
}

GeneratedTerm TermGenerator::open_term(const DelegationContext& ctx, const std::string& var,
                                       const Type& ty, const Principal& pc, int depth) {
  TypingContext gamma = TypingContext{}.with_var(var, ty);
  GeneratedTerm g = gen(ctx, gamma, pc, depth);
  Type t = typecheck(ctx, gamma, pc, g.term);
  if (!type_equal(t, g.type))
    throw std::logic_error("generator type disagrees with checker: " + pretty(g.type) +
                           " vs " + pretty(t));
  return g;
}

}  // namespace flac
