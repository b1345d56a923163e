#include "flac/eval.hpp"

namespace flac {

namespace {

StepResult stepped(Term t, std::string rule) {
  return {StepResult::Status::stepped, std::move(t), std::move(rule), ""};
}

StepResult value() { return {StepResult::Status::value, Term::unit_val(), "", ""}; }

StepResult stuck(std::string reason) {
  return {StepResult::Status::stuck, Term::unit_val(), "", std::move(reason)};
}

// Steps child `i`, rebuilding with `make`; nullopt when the child is a
// where-value.
template <typename Make>
std::optional<StepResult> step_child(const Term& e, int i, Make&& make) {
  Term c = e.child(i);
  if (is_where_value(c)) return std::nullopt;
  StepResult r = step(c);
  if (r.status == StepResult::Status::stepped)
    return stepped(make(r.term), std::move(r.rule));
  if (r.status == StepResult::Status::stuck) return r;
  return stuck("non-value cannot step");
}

}  // namespace

Term project(const Term& e, int i) {
  switch (e.kind()) {
    case Term::Kind::bracket: return project(e.child(i - 1), i);
    case Term::Kind::var:
    case Term::Kind::unit_val:
    case Term::Kind::del:
    case Term::Kind::hole:
    case Term::Kind::opaque: return e;
    case Term::Kind::pair: return Term::pair(project(e.child(0), i), project(e.child(1), i));
    case Term::Kind::proj: return Term::proj(e.index(), project(e.child(0), i));
    case Term::Kind::inj: return Term::inj(e.index(), e.type_ann(), project(e.child(0), i));
    case Term::Kind::case_:
      return Term::case_of(project(e.child(0), i), e.case_lvar(), project(e.child(1), i),
                           e.case_rvar(), project(e.child(2), i));
    case Term::Kind::lam:
      return Term::lam(e.var_name(), e.type_ann(), e.label(), project(e.child(0), i));
    case Term::Kind::app: return Term::app(project(e.child(0), i), project(e.child(1), i));
    case Term::Kind::tlam: return Term::tlam(e.var_name(), e.label(), project(e.child(0), i));
    case Term::Kind::tapp: return Term::tapp(project(e.child(0), i), e.type_ann());
    case Term::Kind::unit_m: return Term::unit_m(e.label(), project(e.child(0), i));
    case Term::Kind::sealed: return Term::sealed(e.label(), project(e.child(0), i));
    case Term::Kind::bind:
      return Term::bind(e.var_name(), project(e.child(0), i), project(e.child(1), i));
    case Term::Kind::assume:
      return Term::assume(project(e.child(0), i), project(e.child(1), i));
    case Term::Kind::where:
      return Term::where(project(e.child(0), i), project(e.child(1), i));
    case Term::Kind::prot_ctx: return Term::prot_ctx(e.label(), project(e.child(0), i));
  }
  return e;
}

Trace project_trace(const Trace& t, int i) {
  Trace out;
  out.reserve(t.size());
  for (const auto& e : t) out.push_back(project(e, i));
  return out;
}

StepResult step(const Term& e) {
  switch (e.kind()) {
    case Term::Kind::var: return stuck("free variable " + e.var_name());
    case Term::Kind::unit_val:
    case Term::Kind::del:
    case Term::Kind::lam:
    case Term::Kind::tlam: return value();

    case Term::Kind::pair: {
      if (auto r = step_child(e, 0, [&](Term c) { return Term::pair(c, e.child(1)); })) return *r;
      if (auto r = step_child(e, 1, [&](Term c) { return Term::pair(e.child(0), c); })) return *r;
      return value();
    }

    case Term::Kind::inj: {
      if (auto r = step_child(e, 0, [&](Term c) { return Term::inj(e.index(), e.type_ann(), c); }))
        return *r;
      return value();
    }

    case Term::Kind::sealed:
      return is_where_value(e.child(0)) ? value() : stuck("sealed body is not a value");

    case Term::Kind::app: {
      if (auto r = step_child(e, 0, [&](Term c) { return Term::app(c, e.child(1)); })) return *r;
      if (auto r = step_child(e, 1, [&](Term c) { return Term::app(e.child(0), c); })) return *r;
      Term f = e.child(0), a = e.child(1);
      switch (f.kind()) {
        case Term::Kind::bracket:
          return stepped(Term::bracket(Term::app(f.child(0), project(a, 1)),
                                       Term::app(f.child(1), project(a, 2))),
                         "B-App");
        case Term::Kind::where:
          return stepped(Term::where(Term::app(f.child(0), a), f.child(1)), "W-App");
        case Term::Kind::lam:
          return stepped(Term::prot_ctx(f.label(), substitute(f.child(0), f.var_name(), a)),
                         "E-App*");
        default: return stuck("application of a non-function");
      }
    }

    case Term::Kind::tapp: {
      if (auto r = step_child(e, 0, [&](Term c) { return Term::tapp(c, e.type_ann()); }))
        return *r;
      Term f = e.child(0);
      switch (f.kind()) {
        case Term::Kind::bracket:
          return stepped(Term::bracket(Term::tapp(f.child(0), e.type_ann()),
                                       Term::tapp(f.child(1), e.type_ann())),
                         "B-TApp");
        case Term::Kind::where:
          return stepped(Term::where(Term::tapp(f.child(0), e.type_ann()), f.child(1)),
                         "W-TApp");
        case Term::Kind::tlam:
          return stepped(
              Term::prot_ctx(f.label(), substitute_type(f.child(0), f.var_name(), e.type_ann())),
              "E-TApp*");
        default: return stuck("type application of a non-type-function");
      }
    }

    case Term::Kind::proj: {
      if (auto r = step_child(e, 0, [&](Term c) { return Term::proj(e.index(), c); })) return *r;
      Term t = e.child(0);
      switch (t.kind()) {
        case Term::Kind::pair: return stepped(t.child(e.index() - 1), "E-Unpair");
        case Term::Kind::where:
          return stepped(Term::where(Term::proj(e.index(), t.child(0)), t.child(1)), "W-UnPair");
        case Term::Kind::bracket: {
          Term l = t.child(0), r = t.child(1);
          if (l.kind() == Term::Kind::pair && r.kind() == Term::Kind::pair)
            return stepped(Term::bracket(l.child(e.index() - 1), r.child(e.index() - 1)),
                           "B-UnPair");
          return stuck("bracketed projection of non-pairs");
        }
        default: return stuck("projection of a non-pair");
      }
    }

    case Term::Kind::case_: {
      if (auto r = step_child(e, 0, [&](Term c) {
            return Term::case_of(c, e.case_lvar(), e.child(1), e.case_rvar(), e.child(2));
          }))
        return *r;
      Term t = e.child(0);
      switch (t.kind()) {
        case Term::Kind::inj: {
          const std::string& v = t.index() == 1 ? e.case_lvar() : e.case_rvar();
          return stepped(substitute(e.child(t.index()), v, t.child(0)), "E-Case");
        }
        case Term::Kind::where:
          return stepped(Term::where(Term::case_of(t.child(0), e.case_lvar(), e.child(1),
                                                   e.case_rvar(), e.child(2)),
                                     t.child(1)),
                         "W-Case");
        case Term::Kind::bracket:
          return stepped(
              Term::bracket(Term::case_of(t.child(0), e.case_lvar(), project(e.child(1), 1),
                                          e.case_rvar(), project(e.child(2), 1)),
                            Term::case_of(t.child(1), e.case_lvar(), project(e.child(1), 2),
                                          e.case_rvar(), project(e.child(2), 2))),
              "B-Case");
        default: return stuck("case scrutinee is not an injection");
      }
    }

    case Term::Kind::unit_m: {
      if (auto r = step_child(e, 0, [&](Term c) { return Term::unit_m(e.label(), c); }))
        return *r;
      return stepped(Term::sealed(e.label(), e.child(0)), "E-UnitM");
    }

    case Term::Kind::bind: {
      if (auto r = step_child(e, 0, [&](Term c) {
            return Term::bind(e.var_name(), c, e.child(1));
          }))
        return *r;
      Term t = e.child(0);
      switch (t.kind()) {
        case Term::Kind::sealed:
          return stepped(
              Term::prot_ctx(t.label(), substitute(e.child(1), e.var_name(), t.child(0))),
              "E-BindM*");
        case Term::Kind::where:
          return stepped(
              Term::where(Term::bind(e.var_name(), t.child(0), e.child(1)), t.child(1)),
              "W-BindM");
        case Term::Kind::bracket:
          return stepped(
              Term::bracket(Term::bind(e.var_name(), t.child(0), project(e.child(1), 1)),
                            Term::bind(e.var_name(), t.child(1), project(e.child(1), 2))),
              "B-BindM");
        default: return stuck("bind of a non-sealed value");
      }
    }

    case Term::Kind::assume: {
      if (auto r = step_child(e, 0, [&](Term c) { return Term::assume(c, e.child(1)); }))
        return *r;
      Term t = e.child(0);
      switch (t.kind()) {
        case Term::Kind::del: return stepped(Term::where(e.child(1), t), "E-Assume");
        case Term::Kind::where:
          return stepped(Term::where(Term::assume(t.child(0), e.child(1)), t.child(1)),
                         "W-Assume");
        case Term::Kind::bracket:
          return stepped(
              Term::bracket(Term::assume(t.child(0), project(e.child(1), 1)),
                            Term::assume(t.child(1), project(e.child(1), 2))),
              "B-Assume");
        default: return stuck("assume of a non-delegation");
      }
    }

    case Term::Kind::where: {
      if (auto r = step_child(e, 0, [&](Term c) { return Term::where(c, e.child(1)); }))
        return *r;
      if (!is_value(e.child(1))) return stuck("where justification is not a value");
      return value();
    }

    case Term::Kind::prot_ctx: {
      if (is_where_value(e.child(0))) return stepped(e.child(0), "O-Ctx");
      if (auto r = step_child(e, 0, [&](Term c) { return Term::prot_ctx(e.label(), c); }))
        return *r;
      return stuck("protected context is stuck");
    }

    case Term::Kind::bracket: {
      bool lv = is_where_value(e.child(0)), rv = is_where_value(e.child(1));
      if (lv && rv) return value();
      if (!lv) {
        StepResult r = step(e.child(0));
        if (r.status == StepResult::Status::stepped)
          return stepped(Term::bracket(r.term, e.child(1)), "B-Step/" + r.rule);
      }
      if (!rv) {
        StepResult r = step(e.child(1));
        if (r.status == StepResult::Status::stepped)
          return stepped(Term::bracket(e.child(0), r.term), "B-Step/" + r.rule);
      }
      return stuck("both bracket sides are stuck");
    }

    case Term::Kind::hole: return stuck("hole was not filled");
    case Term::Kind::opaque: return stuck("opaque marker");
  }
  return stuck("unhandled term form");
}

RunResult run(const Term& e, std::size_t fuel) {
  RunResult out;
  out.trace.push_back(e);
  for (std::size_t i = 0; i < fuel; ++i) {
    const Term& cur = out.trace.back();
    if (is_where_value(cur)) {
      out.status = RunResult::Status::value;
      return out;
    }
    StepResult r = step(cur);
    switch (r.status) {
      case StepResult::Status::stepped:
        out.trace.push_back(std::move(r.term));
        out.rules.push_back(std::move(r.rule));
        break;
      case StepResult::Status::value:
        out.status = RunResult::Status::value;
        return out;
      case StepResult::Status::stuck:
        out.status = RunResult::Status::stuck;
        out.reason = std::move(r.reason);
        return out;
    }
  }
  out.status = RunResult::Status::out_of_fuel;
  out.reason = "out of fuel";
  return out;
}

}  // namespace flac
