#include "flac/security.hpp"

#include <functional>
#include <sstream>

#include "flac/parser.hpp"

namespace flac {

namespace {

bool visible(const DelegationContext& ctx, const Principal& l, const Principal& p,
             Projection pi) {
  return robust_flows_to(ctx, proj(l, pi), proj(p, pi));
}

bool is_opaque(const Term& e) { return e.kind() == Term::Kind::opaque; }

}  // namespace

Term observe(const Term& e, const DelegationContext& ctx, const Principal& p, Projection pi) {
  auto rec = [&](const Term& c) { return observe(c, ctx, p, pi); };
  switch (e.kind()) {
    case Term::Kind::var:
    case Term::Kind::del:
    case Term::Kind::unit_val:
    case Term::Kind::hole:
    case Term::Kind::opaque: return e;
    case Term::Kind::unit_m: return Term::unit_m(e.label(), rec(e.child(0)));
    case Term::Kind::sealed: {
      if (!visible(ctx, e.label(), p, pi)) return Term::opaque();
      return Term::sealed(e.label(), rec(e.child(0)));
    }
    case Term::Kind::lam: {
      if (!visible(ctx, e.label(), p, pi)) return Term::opaque();
      return Term::lam(e.var_name(), e.type_ann(), e.label(), rec(e.child(0)));
    }
    case Term::Kind::tlam: {
      if (!visible(ctx, e.label(), p, pi)) return Term::opaque();
      return Term::tlam(e.var_name(), e.label(), rec(e.child(0)));
    }
    case Term::Kind::prot_ctx: {
      if (!visible(ctx, e.label(), p, pi)) return Term::opaque();
      return Term::prot_ctx(e.label(), rec(e.child(0)));
    }
    case Term::Kind::app: {
      Term l = rec(e.child(0)), r = rec(e.child(1));
      if (is_opaque(l) || is_opaque(r)) return Term::opaque();
      return Term::app(l, r);
    }
    case Term::Kind::pair: {
      Term l = rec(e.child(0)), r = rec(e.child(1));
      if (is_opaque(l) || is_opaque(r)) return Term::opaque();
      return Term::pair(l, r);
    }
    case Term::Kind::proj: return Term::proj(e.index(), rec(e.child(0)));
    case Term::Kind::inj: {
      Term c = rec(e.child(0));
      if (is_opaque(c)) return Term::opaque();
      return Term::inj(e.index(), e.type_ann(), c);
    }
    case Term::Kind::case_:
      return Term::case_of(rec(e.child(0)), e.case_lvar(), rec(e.child(1)), e.case_rvar(),
                           rec(e.child(2)));
    case Term::Kind::bind:
      return Term::bind(e.var_name(), rec(e.child(0)), rec(e.child(1)));
    case Term::Kind::assume: {
      Term l = rec(e.child(0)), r = rec(e.child(1));
      if (is_opaque(l) && is_opaque(r)) return Term::opaque();
      return Term::assume(l, r);
    }
    case Term::Kind::where: return rec(e.child(0));
    case Term::Kind::tapp: return Term::tapp(rec(e.child(0)), e.type_ann());
    case Term::Kind::bracket: {
      Term l = rec(e.child(0)), r = rec(e.child(1));
      if (is_opaque(l) || is_opaque(r)) return Term::opaque();
      return Term::bracket(l, r);
    }
  }
  return e;
}

std::vector<Term> observe_trace(const Trace& t, const DelegationContext& ctx,
                                const Principal& p, Projection pi) {
  // duplicates are judged up to canonical renaming, but the emitted
  // elements keep their original names for readability
  std::vector<Term> out;
  Term last;
  for (const auto& e : t) {
    Term o = observe(e, ctx, p, pi);
    Term c = canonical(o);
    if (out.empty() || !(last == c)) {
      out.push_back(std::move(o));
      last = std::move(c);
    }
  }
  return out;
}

bool trace_equiv(const Trace& a, const Trace& b, const DelegationContext& ctx,
                 const Principal& p, Projection pi) {
  std::vector<Term> oa = observe_trace(a, ctx, p, pi);
  std::vector<Term> ob = observe_trace(b, ctx, p, pi);
  if (oa.size() != ob.size()) return false;
  for (std::size_t i = 0; i < oa.size(); ++i)
    if (!(canonical(oa[i]) == canonical(ob[i]))) return false;
  return true;
}

std::string NIVerdict::describe() const {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: {
      std::ostringstream out;
      out << "fail at trace index " << (witness_index ? std::to_string(*witness_index) : "?")
          << ": " << witness_left << " vs " << witness_right;
      return out.str();
    }
    case Status::inapplicable: return "inapplicable (" + condition + ")";
    case Status::error: return "error (" + condition + ")";
  }
  return "error";
}

namespace {

NIVerdict ni_inapplicable(const std::string& cond) {
  NIVerdict v;
  v.status = NIVerdict::Status::inapplicable;
  v.condition = cond;
  return v;
}

NIVerdict ni_error(const std::string& cond) {
  NIVerdict v;
  v.status = NIVerdict::Status::error;
  v.condition = cond;
  return v;
}

// The substitution side condition: source-level, or protected at H^pi.
bool substitution_entry_ok(const DelegationContext& ctx, const Principal& H, Projection pi,
                           const Term& w, const Type& ty) {
  if (is_source_level(w)) return true;
  return protects(ctx, proj(H, pi), project_type(ty, pi));
}

}  // namespace

NIVerdict ni_check(const NiSpec& spec) {
  const DelegationContext& ctx = spec.context;

  if (!is_source_level(spec.program)) return ni_error("program is not source-level");

  // program must typecheck as given
  try {
    typecheck(ctx, spec.gamma, spec.pc, spec.program);
  } catch (const TypeCheckError& e) {
    return ni_error(std::string("program does not typecheck: ") + e.what());
  }

  // side conditions of the noninterference theorems
  Principal Hp = proj(spec.H, spec.pi);
  if (!protects(ctx, Hp, project_type(spec.secret_type, spec.pi)))
    return ni_inapplicable("condition 1: H^pi protects tau'^pi");
  if (robust_flows_to(ctx, Hp, proj(spec.observer, spec.pi)))
    return ni_inapplicable("condition 2: H^pi does not flow to l^pi");
  try {
    if (spec.pi == Projection::conf) {
      Principal gap = subtract(ctx, Hp, proj(spec.observer, spec.pi), spec.factor_bound);
      if (robust_acts_for(ctx, spec.pc, voice(gap)))
        return ni_inapplicable("condition 3: pc does not speak for voice(H-> - l->)");
    } else {
      Principal gap = subtract(ctx, proj(spec.observer, spec.pi), Hp, spec.factor_bound);
      if (robust_acts_for(ctx, spec.pc, gap))
        return ni_inapplicable("condition 3: pc does not speak for l<- - H<-");
    }
  } catch (const CandidateSpaceExceeded& e) {
    return ni_inapplicable(std::string("condition 3 undecided: ") + e.what());
  }

  // substitution entries must be source-level or protected
  for (const auto& [name, w] : spec.subst) {
    const Type* ty = spec.gamma.lookup(name);
    if (!ty) return ni_error("substitution for unknown variable " + name);
    if (!substitution_entry_ok(ctx, spec.H, spec.pi, w, *ty))
      return ni_inapplicable("substitution entry " + name +
                             " is neither source-level nor H-protected");
  }

  // the two inputs must inhabit tau'
  CheckerConfig plain;
  try {
    Type t1 = typecheck(ctx, spec.gamma, spec.pc, spec.input1, plain);
    Type t2 = typecheck(ctx, spec.gamma, spec.pc, spec.input2, plain);
    if (!type_equal(t1, spec.secret_type) || !type_equal(t2, spec.secret_type))
      return ni_error("inputs do not have the declared secret type");
  } catch (const TypeCheckError& e) {
    return ni_error(std::string("input does not typecheck: ") + e.what());
  }

  // build the paired program
  Term body = spec.program;
  for (const auto& [name, w] : spec.subst) body = substitute(body, name, w);
  Term paired = substitute(body, spec.secret, Term::bracket(spec.input1, spec.input2));

  std::set<std::string> fv;
  free_vars(paired, fv);
  if (!fv.empty()) return ni_error("program is not closed after substitution");

  CheckerConfig harness;
  harness.harness = HarnessParams{spec.H, spec.pi};
  Type paired_type;
  try {
    paired_type = typecheck(ctx, TypingContext{}, spec.pc, paired, harness);
  } catch (const TypeCheckError& e) {
    return ni_error(std::string("paired program does not typecheck: ") + e.what());
  }

  RunResult rr = run(paired, spec.fuel);
  if (rr.status == RunResult::Status::out_of_fuel) return ni_error("out of fuel");
  if (rr.status == RunResult::Status::stuck)
    return ni_error("paired run is stuck: " + rr.reason);

  // Per-step checks. Projection soundness: every bracketed step is a
  // stall or the same single step on each side. Erasure conservation:
  // the observed, deduplicated projections never diverge; a side may
  // run ahead inside a bracket, so the invariant is that one observed
  // sequence is a prefix of the other at every step, with equality at
  // the end.
  Principal obs = proj(spec.observer, spec.pi);
  std::vector<Term> seen[2];
  auto push_observed = [&](int side, const Term& t) {
    Term o = canonical(observe(project(t, side + 1), ctx, obs, spec.pi));
    if (seen[side].empty() || !(seen[side].back() == o)) seen[side].push_back(std::move(o));
  };
  auto prefix_ok = [&]() {
    std::size_t n = std::min(seen[0].size(), seen[1].size());
    for (std::size_t i = 0; i < n; ++i)
      if (!(seen[0][i] == seen[1][i])) return i + 1;
    return std::size_t{0};
  };
  push_observed(0, rr.trace.front());
  push_observed(1, rr.trace.front());
  if (std::size_t bad = prefix_ok()) {
    NIVerdict v;
    v.status = NIVerdict::Status::fail;
    v.witness_index = bad - 1;
    v.witness_left = pretty(seen[0][bad - 1]);
    v.witness_right = pretty(seen[1][bad - 1]);
    return v;
  }
  for (std::size_t i = 0; i + 1 < rr.trace.size(); ++i) {
    const Term& before = rr.trace[i];
    const Term& after = rr.trace[i + 1];
    for (int side : {1, 2}) {
      Term pb = project(before, side);
      Term pa = project(after, side);
      if (canonical(pb) == canonical(pa)) continue;
      StepResult s = step(pb);
      if (s.status != StepResult::Status::stepped || !(canonical(s.term) == canonical(pa)))
        return ni_error("projection soundness violated at step " + std::to_string(i));
    }
    push_observed(0, after);
    push_observed(1, after);
    if (std::size_t bad = prefix_ok()) {
      NIVerdict v;
      v.status = NIVerdict::Status::fail;
      v.witness_index = bad - 1;
      v.witness_left = pretty(seen[0][bad - 1]);
      v.witness_right = pretty(seen[1][bad - 1]);
      return v;
    }
  }
  if (seen[0].size() != seen[1].size() ||
      !(seen[0].back() == seen[1].back())) {
    NIVerdict v;
    v.status = NIVerdict::Status::fail;
    v.condition = "observed projections end unequal";
    return v;
  }

  // compartmentalization of delegations: every where-justification on
  // the result is either pc-authorized or the result itself is
  // H-protected
  {
    std::vector<Term> frontier{rr.trace.back()};
    while (!frontier.empty()) {
      Term t = frontier.back();
      frontier.pop_back();
      if (t.kind() == Term::Kind::bracket) {
        frontier.push_back(t.child(0));
        frontier.push_back(t.child(1));
        continue;
      }
      if (t.kind() != Term::Kind::where) continue;
      frontier.push_back(t.child(0));
      Term just = t.child(1);
      if (just.kind() != Term::Kind::del) continue;
      bool authorized = robust_acts_for(ctx, spec.pc, voice(just.inferior()));
      bool protected_result =
          protects(ctx, proj(spec.H, spec.pi), project_type(paired_type, spec.pi));
      if (!authorized && !protected_result)
        return ni_error("delegation compartmentalization violated by " +
                        pretty(just));
    }
  }

  // the stated conclusion: projected traces indistinguishable at l^pi
  Trace t1 = project_trace(rr.trace, 1);
  Trace t2 = project_trace(rr.trace, 2);
  if (!trace_equiv(t1, t2, ctx, obs, spec.pi)) {
    NIVerdict v;
    v.status = NIVerdict::Status::fail;
    v.condition = "projected traces distinguishable";
    return v;
  }

  NIVerdict v;
  v.status = NIVerdict::Status::pass;
  return v;
}

// ---------------------------------------------------------------------------
// Holes, fairness and robust declassification

std::size_t count_holes(const Term& e) {
  if (e.kind() == Term::Kind::hole) return 1;
  std::size_t n = 0;
  switch (e.kind()) {
    case Term::Kind::case_:
      n = count_holes(e.child(0)) + count_holes(e.child(1)) + count_holes(e.child(2));
      break;
    case Term::Kind::pair:
    case Term::Kind::app:
    case Term::Kind::bind:
    case Term::Kind::assume:
    case Term::Kind::where:
    case Term::Kind::bracket:
      n = count_holes(e.child(0)) + count_holes(e.child(1));
      break;
    case Term::Kind::proj:
    case Term::Kind::inj:
    case Term::Kind::unit_m:
    case Term::Kind::sealed:
    case Term::Kind::prot_ctx:
    case Term::Kind::tapp:
    case Term::Kind::lam:
    case Term::Kind::tlam:
      n = count_holes(e.child(0));
      break;
    default: break;
  }
  return n;
}

namespace {

Term fill_holes_rec(const Term& e, const std::vector<Term>& attacks, std::size_t& next) {
  if (e.kind() == Term::Kind::hole) {
    if (next >= attacks.size()) throw std::runtime_error("not enough attack terms for holes");
    return attacks[next++];
  }
  // children must be rebuilt left to right so holes fill in traversal order
  auto rec = [&](const Term& c) { return fill_holes_rec(c, attacks, next); };
  switch (e.kind()) {
    case Term::Kind::pair: {
      Term l = rec(e.child(0));
      Term r = rec(e.child(1));
      return Term::pair(l, r);
    }
    case Term::Kind::proj: return Term::proj(e.index(), rec(e.child(0)));
    case Term::Kind::inj: return Term::inj(e.index(), e.type_ann(), rec(e.child(0)));
    case Term::Kind::case_: {
      Term s = rec(e.child(0));
      Term l = rec(e.child(1));
      Term r = rec(e.child(2));
      return Term::case_of(s, e.case_lvar(), l, e.case_rvar(), r);
    }
    case Term::Kind::lam:
      return Term::lam(e.var_name(), e.type_ann(), e.label(), rec(e.child(0)));
    case Term::Kind::app: {
      Term f = rec(e.child(0));
      Term a = rec(e.child(1));
      return Term::app(f, a);
    }
    case Term::Kind::tlam: return Term::tlam(e.var_name(), e.label(), rec(e.child(0)));
    case Term::Kind::tapp: return Term::tapp(rec(e.child(0)), e.type_ann());
    case Term::Kind::unit_m: return Term::unit_m(e.label(), rec(e.child(0)));
    case Term::Kind::sealed: return Term::sealed(e.label(), rec(e.child(0)));
    case Term::Kind::bind: {
      Term s = rec(e.child(0));
      Term b = rec(e.child(1));
      return Term::bind(e.var_name(), s, b);
    }
    case Term::Kind::assume: {
      Term l = rec(e.child(0));
      Term r = rec(e.child(1));
      return Term::assume(l, r);
    }
    case Term::Kind::where: {
      Term l = rec(e.child(0));
      Term r = rec(e.child(1));
      return Term::where(l, r);
    }
    case Term::Kind::prot_ctx: return Term::prot_ctx(e.label(), rec(e.child(0)));
    case Term::Kind::bracket: {
      Term l = rec(e.child(0));
      Term r = rec(e.child(1));
      return Term::bracket(l, r);
    }
    default: return e;
  }
}

// Bindings lexically in scope at each hole, in traversal order.
void hole_scopes_rec(const Term& e, std::vector<TypingContext>& out, TypingContext scope,
                     const Type* scrut_hint) {
  (void)scrut_hint;
  switch (e.kind()) {
    case Term::Kind::hole: out.push_back(scope); return;
    case Term::Kind::lam:
      hole_scopes_rec(e.child(0), out, scope.with_var(e.var_name(), e.type_ann()), nullptr);
      return;
    case Term::Kind::tlam:
      hole_scopes_rec(e.child(0), out, scope.with_tyvar(e.var_name()), nullptr);
      return;
    case Term::Kind::bind:
      hole_scopes_rec(e.child(0), out, scope, nullptr);
      // the bound variable's type is not tracked here; attacks under a
      // bind would need it, the shipped suites place holes under lambdas
      hole_scopes_rec(e.child(1), out, scope, nullptr);
      return;
    case Term::Kind::case_:
      hole_scopes_rec(e.child(0), out, scope, nullptr);
      hole_scopes_rec(e.child(1), out, scope, nullptr);
      hole_scopes_rec(e.child(2), out, scope, nullptr);
      return;
    default: {
      int nc = 0;
      switch (e.kind()) {
        case Term::Kind::pair:
        case Term::Kind::app:
        case Term::Kind::assume:
        case Term::Kind::where:
        case Term::Kind::bracket: nc = 2; break;
        case Term::Kind::proj:
        case Term::Kind::inj:
        case Term::Kind::unit_m:
        case Term::Kind::sealed:
        case Term::Kind::prot_ctx:
        case Term::Kind::tapp: nc = 1; break;
        default: nc = 0; break;
      }
      for (int i = 0; i < nc; ++i) hole_scopes_rec(e.child(i), out, scope, nullptr);
      return;
    }
  }
}

std::vector<Type> hole_types(const Term& e) {
  std::vector<Type> out;
  std::function<void(const Term&)> rec = [&](const Term& t) {
    if (t.kind() == Term::Kind::hole) {
      out.push_back(t.type_ann());
      return;
    }
    int nc = 0;
    switch (t.kind()) {
      case Term::Kind::case_: nc = 3; break;
      case Term::Kind::pair:
      case Term::Kind::app:
      case Term::Kind::bind:
      case Term::Kind::assume:
      case Term::Kind::where:
      case Term::Kind::bracket: nc = 2; break;
      case Term::Kind::proj:
      case Term::Kind::inj:
      case Term::Kind::unit_m:
      case Term::Kind::sealed:
      case Term::Kind::prot_ctx:
      case Term::Kind::tapp:
      case Term::Kind::lam:
      case Term::Kind::tlam: nc = 1; break;
      default: nc = 0; break;
    }
    for (int i = 0; i < nc; ++i) rec(t.child(i));
  };
  rec(e);
  return out;
}

}  // namespace

Term fill_holes(const Term& e, const std::vector<Term>& attacks) {
  std::size_t next = 0;
  Term out = fill_holes_rec(e, attacks, next);
  if (next != attacks.size())
    throw std::runtime_error("attack vector length does not match hole count");
  return out;
}

FairAttackResult fair_attack_check(const Term& program_with_holes, const TypingContext& gamma,
                                   const std::vector<Term>& attacks,
                                   const DelegationContext& attacker_ctx, const Principal& H) {
  std::size_t holes = count_holes(program_with_holes);
  if (holes != attacks.size())
    return {false, "attack vector has " + std::to_string(attacks.size()) + " entries for " +
                       std::to_string(holes) + " holes"};

  Principal Hi = proj(H, Projection::integ);
  Principal delta = view(Hi);
  Principal attack_pc = Principal::conj(Hi, delta);

  std::vector<TypingContext> scopes;
  hole_scopes_rec(program_with_holes, scopes, gamma, nullptr);
  std::vector<Type> types = hole_types(program_with_holes);

  bool h_secret_hidden = !robust_flows_to(attacker_ctx, proj(H, Projection::conf), delta);

  for (std::size_t i = 0; i < attacks.size(); ++i) {
    // the attacker's view of the scope: says-typed entries whose
    // confidentiality is observable at Delta(H<-); type variables are
    // kept for well-formedness
    TypingContext star;
    for (const auto& entry : scopes[i].entries()) {
      if (!entry.type) {
        star = star.with_tyvar(entry.name);
        continue;
      }
      if (entry.type->kind() == Type::Kind::says &&
          robust_flows_to(attacker_ctx, proj(entry.type->label(), Projection::conf), delta))
        star = star.with_var(entry.name, *entry.type);
    }

    // no free secrets
    if (h_secret_hidden) {
      std::set<std::string> fv;
      free_vars(attacks[i], fv);
      for (const auto& v : fv) {
        const Type* ty = scopes[i].lookup(v);
        if (ty && protects(attacker_ctx, proj(H, Projection::conf),
                           project_type(*ty, Projection::conf)))
          return {false, "attack " + std::to_string(i + 1) + " mentions protected variable '" +
                             v + "'"};
      }
    }

    try {
      Type got = typecheck(attacker_ctx, star, attack_pc, attacks[i]);
      if (!type_equal(got, types[i]))
        return {false, "attack " + std::to_string(i + 1) + " has type " + pretty(got) +
                           ", hole expects " + pretty(types[i])};
    } catch (const TypeCheckError& e) {
      return {false,
              "attack " + std::to_string(i + 1) + " is not fair: " + std::string(e.what())};
    }
  }
  return {true, ""};
}

std::string RDVerdict::describe() const {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail (" + detail + ")";
    case Status::inapplicable: return "inapplicable (" + condition + ")";
    case Status::error: return "error (" + condition + ")";
  }
  return "error";
}

namespace {

RDVerdict rd_inapplicable(const std::string& cond) {
  RDVerdict v;
  v.status = RDVerdict::Status::inapplicable;
  v.condition = cond;
  return v;
}

RDVerdict rd_error(const std::string& cond) {
  RDVerdict v;
  v.status = RDVerdict::Status::error;
  v.condition = cond;
  return v;
}

}  // namespace

RDVerdict rd_check(const RdSpec& spec) {
  const DelegationContext& ctx = spec.context;
  const DelegationContext& actx = spec.attacker_context;

  Principal Hc = proj(spec.H, Projection::conf);
  Principal Hi = proj(spec.H, Projection::integ);
  Principal delta = view(Hi);

  // side conditions
  if (!protects(actx, Hc, spec.secret_type))
    return rd_inapplicable("condition 1: H-> protects tau'");
  if (robust_flows_to(actx, Hc, delta))
    return rd_inapplicable("condition 2: H-> does not flow to Delta(H<-)");
  if (robust_acts_for(actx, Hi, voice(Hc)))
    return rd_inapplicable("condition 3: H<- does not speak for voice(H->)");

  // both attack vectors must be fair
  FairAttackResult f1 = fair_attack_check(spec.program, spec.gamma, spec.attacks1, actx, spec.H);
  if (!f1.ok) return rd_error("attack vector 1 rejected: " + f1.reason);
  FairAttackResult f2 = fair_attack_check(spec.program, spec.gamma, spec.attacks2, actx, spec.H);
  if (!f2.ok) return rd_error("attack vector 2 rejected: " + f2.reason);

  const std::vector<Term>* avs[2] = {&spec.attacks1, &spec.attacks2};
  const Term* inputs[2] = {&spec.input1, &spec.input2};

  Trace traces[2][2];
  for (int vi = 0; vi < 2; ++vi) {
    for (int aj = 0; aj < 2; ++aj) {
      Term filled = fill_holes(spec.program, *avs[aj]);
      Term prog = filled;
      for (const auto& [name, w] : spec.subst) prog = substitute(prog, name, w);
      prog = substitute(prog, spec.secret, *inputs[vi]);
      std::set<std::string> fv;
      free_vars(prog, fv);
      if (!fv.empty()) return rd_error("substituted program is not closed");
      try {
        typecheck(ctx, TypingContext{}, spec.pc, prog);
      } catch (const TypeCheckError& e) {
        return rd_error("substituted program (input " + std::to_string(vi + 1) + ", attacks " +
                        std::to_string(aj + 1) + ") does not typecheck: " + e.what());
      }
      if (spec.full_runs) {
        RunResult rr = run(prog, spec.fuel);
        if (rr.status == RunResult::Status::out_of_fuel) return rd_error("out of fuel");
        traces[vi][aj] = rr.trace;
      } else {
        Trace t;
        t.push_back(prog);
        StepResult s = step(prog);
        if (s.status == StepResult::Status::stepped) t.push_back(s.term);
        traces[vi][aj] = std::move(t);
      }
    }
  }

  bool eq_a1 = trace_equiv(traces[0][0], traces[1][0], ctx, delta, Projection::conf);
  bool eq_a2 = trace_equiv(traces[0][1], traces[1][1], ctx, delta, Projection::conf);
  if (eq_a1 != eq_a2) {
    RDVerdict v;
    v.status = RDVerdict::Status::fail;
    v.detail = std::string("t11~t21 is ") + (eq_a1 ? "true" : "false") + " but t12~t22 is " +
               (eq_a2 ? "true" : "false");
    return v;
  }
  RDVerdict v;
  v.status = RDVerdict::Status::pass;
  return v;
}

}  // namespace flac
