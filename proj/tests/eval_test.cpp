#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flac/eval.hpp"
#include "flac/generate.hpp"
#include "flac/parser.hpp"
#include "flac/typecheck.hpp"
#include "support/corpus_expect.hpp"

using namespace flac;

namespace {

Term E(const std::string& s) { return parse_term(s, true); }

Term strip_wheres(Term t) {
  while (t.kind() == Term::Kind::where) t = t.child(0);
  return t;
}

}  // namespace

TEST_CASE("single step rules fire as stated") {
  StepResult r = step(E("assume <p |> q> in eta[q] ()"));
  REQUIRE(r.status == StepResult::Status::stepped);
  CHECK(r.rule == "E-Assume");
  CHECK(r.term == E("(eta[q] ()) where <p |> q>"));

  r = step(E("eta[l] ()"));
  CHECK(r.rule == "E-UnitM");
  CHECK(r.term == E("sealed[l] ()"));

  r = step(E("((\\x: unit [p]. x) where <p |> q>) ()"));
  CHECK(r.rule == "W-App");
  CHECK(r.term == E("((\\x: unit [p]. x) ()) where <p |> q>"));

  r = step(E("bind x = sealed[l] () in eta[l] x"));
  CHECK(r.rule == "E-BindM*");
  CHECK(r.term == E("{l | eta[l] ()}"));

  r = step(E("{l | ()}"));
  CHECK(r.rule == "O-Ctx");
  CHECK(r.term == E("()"));

  r = step(E("((\\x: unit [p]. x) | (\\y: unit [p]. y)) ()"));
  CHECK(r.rule == "B-App");
  CHECK(r.term == E("((\\x: unit [p]. x) () | (\\y: unit [p]. y) ())"));
}

TEST_CASE("beta steps enter a protection context at the annotation") {
  StepResult r = step(E("(\\x: unit [p-> /\\ q<-]. x) ()"));
  CHECK(r.rule == "E-App*");
  CHECK(r.term == E("{p-> /\\ q<- | ()}"));
  r = step(E("(/\\X [q<-]. ()) unit"));
  CHECK(r.rule == "E-TApp*");
  CHECK(r.term == E("{q<- | ()}"));
}

TEST_CASE("case and unpair") {
  StepResult r = step(E("proj1 <(), <p |> q>>"));
  CHECK(r.rule == "E-Unpair");
  CHECK(r.term == E("()"));
  r = step(E("case inj2 @ (unit + unit) () of a. eta[p] a | b. eta[q] b"));
  CHECK(r.rule == "E-Case");
  CHECK(r.term == E("eta[q] ()"));
}

TEST_CASE("runs terminate with the expected values") {
  RunResult rr = run(E("proj1 <(), ()>"));
  CHECK(rr.status == RunResult::Status::value);
  CHECK(rr.trace.size() == 2);
  CHECK(rr.result() == E("()"));

  // the assume program with x substituted by a sealed value ends in a
  // where-wrapped resealed value
  Term prog = parse_program_file(std::string(FLAC_CORPUS_DIR) + "/programs/s4_assume_bind.flac")
                  .term;
  Term closed = substitute(prog, "x", E("sealed[p<-] ()"));
  rr = run(closed);
  REQUIRE(rr.status == RunResult::Status::value);
  CHECK(rr.result().kind() == Term::Kind::where);
  CHECK(strip_wheres(rr.result()) == E("sealed[q<-] ()"));
}

TEST_CASE("the committed pair evaluates to a p-sealed pair") {
  Term commit =
      parse_program_file(std::string(FLAC_CORPUS_DIR) + "/programs/commit.flac").term;
  Term applied = Term::app(
      Term::app(Term::tapp(Term::tapp(commit, Type::unit()), parse_type("unit + unit")),
                E("()")),
      E("sealed[p->] inj1 @ (unit + unit) ()"));
  // the application itself typechecks at p's integrity
  Type t = typecheck(DelegationContext{}, TypingContext{}, parse_principal("p<-"), applied);
  CHECK(type_equal(t, parse_type("p says (unit, unit + unit)")));
  RunResult rr = run(applied);
  REQUIRE(rr.status == RunResult::Status::value);
  Term core = strip_wheres(rr.result());
  REQUIRE(core.kind() == Term::Kind::sealed);
  CHECK(static_equiv(core.label(), parse_principal("p")));
  CHECK(strip_wheres(core.child(0)).kind() == Term::Kind::pair);
}

TEST_CASE("the applied hand-off relabels a sealed value") {
  ProgramFile prog = parse_program_file(std::string(FLAC_CORPUS_DIR) +
                                        "/programs/handoff_run.flac");
  Type t = typecheck(prog.context, TypingContext::of(prog.gamma), *prog.pc, prog.term);
  CHECK(type_equal(t, parse_type("q says unit")));
  RunResult rr = run(prog.term);
  REQUIRE(rr.status == RunResult::Status::value);
  CHECK(strip_wheres(rr.result()) == E("sealed[q] ()"));
}

TEST_CASE("projection is homomorphic and removes brackets") {
  CHECK(project(E("(x | y)"), 1) == Term::var("x"));
  CHECK(project(E("(x | y)"), 2) == Term::var("y"));
  CHECK(project(E("\\x: unit [p]. (a | b)"), 2) == E("\\x: unit [p]. b"));
}

TEST_CASE("determinism") {
  TermGenerator gen(0xdef, {"p", "q"});
  DelegationContext empty;
  for (int i = 0; i < 120; ++i) {
    Term t = gen.closed_term(empty, parse_principal("p<-"), 4).term;
    for (int s = 0; s < 100; ++s) {
      StepResult a = step(t);
      StepResult b = step(t);
      CHECK(a.status == b.status);
      if (a.status != StepResult::Status::stepped) break;
      CHECK(a.term == b.term);
      CHECK(a.rule == b.rule);
      t = a.term;
    }
  }
}

TEST_CASE("bracketed runs are sound and complete for the projections") {
  TermGenerator gen(0xb1ac, {"p", "q"});
  DelegationContext empty;
  Principal pc = parse_principal("p<-");
  for (int i = 0; i < 60; ++i) {
    Type ty = gen.random_type(pc, 2);
    GeneratedTerm open = gen.open_term(empty, "hole", ty, pc, 3);
    auto w1 = gen.term_at(empty, TypingContext{}, pc, ty, 2);
    auto w2 = gen.term_at(empty, TypingContext{}, pc, ty, 2);
    if (!w1 || !w2) continue;
    RunResult r1 = run(*w1, 2000);
    RunResult r2 = run(*w2, 2000);
    if (r1.status != RunResult::Status::value || r2.status != RunResult::Status::value)
      continue;
    Term paired = substitute(open.term, "hole", Term::bracket(r1.result(), r2.result()));
    RunResult rr = run(paired, 5000);
    // per-step soundness: each projection either stalls or takes the
    // same single step
    for (std::size_t k = 0; k + 1 < rr.trace.size(); ++k) {
      for (int side : {1, 2}) {
        Term before = project(rr.trace[k], side);
        Term after = project(rr.trace[k + 1], side);
        if (canonical(before) == canonical(after)) continue;
        StepResult s = step(before);
        REQUIRE(s.status == StepResult::Status::stepped);
        CHECK(canonical(s.term) == canonical(after));
      }
    }
    // completeness: both standalone runs terminate, so the paired run
    // must terminate with matching projections
    RunResult s1 = run(substitute(open.term, "hole", r1.result()), 5000);
    RunResult s2 = run(substitute(open.term, "hole", r2.result()), 5000);
    REQUIRE(rr.status == RunResult::Status::value);
    REQUIRE(s1.status == RunResult::Status::value);
    REQUIRE(s2.status == RunResult::Status::value);
    CHECK(canonical(project(rr.result(), 1)) == canonical(s1.result()));
    CHECK(canonical(project(rr.result(), 2)) == canonical(s2.result()));
  }
}

TEST_CASE("stuck bracketed terms have a stuck projection") {
  // fuzz ill-typed terms: stuckness must transfer to a projection
  TermGenerator gen(0xbad, {"p", "q"});
  std::mt19937_64& rng = gen.rng();
  DelegationContext empty;
  int stuck_seen = 0;
  for (int i = 0; i < 400; ++i) {
    // deliberately ill-formed applications and projections
    Term junk;
    switch (rng() % 4) {
      case 0: junk = Term::app(E("()"), E("()")); break;
      case 1: junk = Term::proj(1, E("<p |> q>")); break;
      case 2: junk = Term::bind("z", E("()"), Term::var("z")); break;
      default: junk = Term::case_of(E("()"), "a", E("()"), "b", E("()")); break;
    }
    Term other = gen.closed_term(empty, parse_principal("p<-"), 3).term;
    Term br = (rng() % 2) ? Term::bracket(junk, other) : Term::bracket(other, junk);
    Term host = Term::proj(1, Term::pair(br, E("()")));
    RunResult rr = run(host, 2000);
    if (rr.status != RunResult::Status::stuck) continue;
    ++stuck_seen;
    RunResult p1 = run(project(host, 1), 2000);
    RunResult p2 = run(project(host, 2), 2000);
    CHECK((p1.status == RunResult::Status::stuck || p2.status == RunResult::Status::stuck));
  }
  CHECK(stuck_seen > 100);
}

TEST_CASE("no generated well-typed term gets stuck") {
  TermGenerator gen(0x90a1, {"p", "q"});
  DelegationContext empty;
  for (int i = 0; i < 150; ++i) {
    Term t = gen.closed_term(empty, parse_principal("q<-"), 4).term;
    RunResult rr = run(t, 5000);
    CHECK(rr.status == RunResult::Status::value);
    CHECK(rr.trace.size() < 300);
  }
}
