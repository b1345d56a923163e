#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "flac/generate.hpp"
#include "flac/parser.hpp"
#include "flac/security.hpp"
#include "flac/suite.hpp"

using namespace flac;

namespace {

Term E(const std::string& s) { return parse_term(s, true); }
Principal P(const std::string& s) { return parse_principal(s); }

const DelegationContext kEmpty;

Term obs(const std::string& term, const std::string& who,
         Projection pi = Projection::conf, const std::string& ctx = "") {
  return observe(E(term), parse_delegation_context(ctx), P(who), pi);
}

}  // namespace

TEST_CASE("observation of sealed values is gated on the observer") {
  CHECK(obs("sealed[Alice->] ()", "Bob") == Term::opaque());
  CHECK(obs("sealed[Alice->] ()", "Alice") == E("sealed[Alice->] ()"));
  CHECK(obs("()", "anyone") == E("()"));
  // a delegation context can open it up
  CHECK(obs("sealed[Alice->] ()", "Bob", Projection::conf,
            "Bob<- |> Alice<-, Bob-> |> Alice->") == E("sealed[Alice->] ()"));
}

TEST_CASE("compound terms collapse when a required child is hidden") {
  CHECK(obs("<sealed[Alice->] (), ()>", "Bob") == Term::opaque());
  CHECK(obs("f (sealed[Alice->] ())", "Bob") == Term::opaque());
  CHECK(obs("inj1 @ (unit + unit) (sealed[Alice->] ())", "Bob") == Term::opaque());
  // projections and binds keep their shape
  CHECK(obs("proj1 (sealed[Alice->] ())", "Bob") == Term::proj(1, Term::opaque()));
  CHECK(obs("bind x = sealed[Alice->] () in x", "Bob") ==
        Term::bind("x", Term::opaque(), Term::var("x")));
}

TEST_CASE("where justifications are erased") {
  CHECK(obs("() where <p |> q>", "r") == E("()"));
  CHECK(obs("(sealed[p->] ()) where <p |> q>", "r") == Term::opaque());
}

TEST_CASE("assume keeps the marker unless both children hide") {
  // a visible body keeps the node
  Term one = observe(Term::assume(Term::sealed(P("p->"), Term::unit_val()), Term::unit_val()),
                     kEmpty, P("r"), Projection::conf);
  CHECK(one == Term::assume(Term::opaque(), Term::unit_val()));
  Term none = observe(Term::assume(Term::sealed(P("p->"), Term::unit_val()),
                                   Term::sealed(P("p->"), Term::unit_val())),
                      kEmpty, P("r"), Projection::conf);
  CHECK(none == Term::opaque());
}

TEST_CASE("lambdas and contexts are gated on their label") {
  CHECK(obs("\\x: unit [p->]. x", "q") == Term::opaque());
  CHECK(obs("\\x: unit [p<-]. x", "q", Projection::conf) == E("\\x: unit [p<-]. x"));
  CHECK(obs("{p-> | ()}", "q") == Term::opaque());
  CHECK(obs("{q<- | ()}", "q") == E("{q<- | ()}"));
  // integrity mode gates on the integrity projection
  CHECK(obs("sealed[p<-] ()", "q", Projection::integ) == Term::opaque());
  CHECK(obs("sealed[top<-] ()", "q", Projection::integ) == E("sealed[top<-] ()"));
}

TEST_CASE("observation is idempotent") {
  TermGenerator gen(0x0b5, {"p", "q"});
  for (int i = 0; i < 150; ++i) {
    Term t = gen.closed_term(kEmpty, P("p<-"), 4).term;
    Term o = observe(t, kEmpty, P("q"), Projection::conf);
    CHECK(observe(o, kEmpty, P("q"), Projection::conf) == o);
  }
}

TEST_CASE("observation is monotone in the observer") {
  TermGenerator gen(0x0b6, {"p", "q"});
  for (int i = 0; i < 150; ++i) {
    Term t = gen.closed_term(kEmpty, P("p<-"), 4).term;
    // top sees at least what q sees: where q saw content, top agrees
    Term weak = observe(t, kEmpty, P("q"), Projection::conf);
    Term strong = observe(t, kEmpty, P("top"), Projection::conf);
    // the strong observer of the raw trace sees the term unchanged
    // except for erased where-justifications
    (void)weak;
    CHECK(observe(strong, kEmpty, P("q"), Projection::conf) == weak);
  }
}

TEST_CASE("trace observation removes adjacent duplicates") {
  Trace t;
  t.push_back(E("proj1 <sealed[p->] (), sealed[p->] ()>"));
  t.push_back(E("sealed[p->] ()"));
  auto o = observe_trace(t, kEmpty, P("q"), Projection::conf);
  // both elements erase to shapes that differ (proj1 * vs *)
  CHECK(o.size() == 2);
  // a hidden two-step run collapses
  Trace h;
  h.push_back(E("{p-> | eta[p->] ()}"));
  h.push_back(E("{p-> | sealed[p->] ()}"));
  h.push_back(E("sealed[p->] ()"));
  auto oh = observe_trace(h, kEmpty, P("q"), Projection::conf);
  CHECK(oh.size() == 1);
  CHECK(oh[0] == Term::opaque());
}

TEST_CASE("trace equivalence is an equivalence relation") {
  TermGenerator gen(0x0b7, {"p", "q"});
  std::vector<Trace> traces;
  for (int i = 0; i < 12; ++i)
    traces.push_back(run(gen.closed_term(kEmpty, P("p<-"), 4).term, 1000).trace);
  Principal who = P("q->");
  for (const auto& a : traces) {
    CHECK(trace_equiv(a, a, kEmpty, who, Projection::conf));
    for (const auto& b : traces) {
      bool ab = trace_equiv(a, b, kEmpty, who, Projection::conf);
      CHECK(ab == trace_equiv(b, a, kEmpty, who, Projection::conf));
      for (const auto& c : traces)
        if (ab && trace_equiv(b, c, kEmpty, who, Projection::conf))
          CHECK(trace_equiv(a, c, kEmpty, who, Projection::conf));
    }
  }
}

TEST_CASE("traces differing only in protected values are indistinguishable") {
  Term prog = E("proj2 <x, eta[q->] ()>");
  Term t1 = substitute(prog, "x", E("sealed[p] inj1 @ (unit + unit) ()"));
  Term t2 = substitute(prog, "x", E("sealed[p] inj2 @ (unit + unit) ()"));
  Trace a = run(t1).trace, b = run(t2).trace;
  CHECK(trace_equiv(a, b, kEmpty, P("q->"), Projection::conf));
  // a public difference is visible
  Term u1 = substitute(prog, "x", E("sealed[bot->] inj1 @ (unit + unit) ()"));
  Term u2 = substitute(prog, "x", E("sealed[bot->] inj2 @ (unit + unit) ()"));
  CHECK_FALSE(trace_equiv(run(u1).trace, run(u2).trace, kEmpty, P("q->"), Projection::conf));
}

TEST_CASE("holes are counted and filled in traversal order") {
  Term two = E("<[* unit], [* unit + unit]>");
  CHECK(count_holes(two) == 2);
  Term filled = fill_holes(two, {E("()"), E("inj1 @ (unit + unit) ()")});
  CHECK(filled == E("<(), inj1 @ (unit + unit) ()>"));
  CHECK_THROWS(fill_holes(two, {E("()")}));
}

TEST_CASE("fair attacks typecheck at the attacker's label over the visible scope") {
  Term prog = E("\\y: (bob says unit) [bob<-]. [* bob says unit]");
  TypingContext gamma;
  Principal H = P("bob<- /\\ alice->");
  FairAttackResult ok = fair_attack_check(prog, gamma, {Term::var("y")}, kEmpty, H);
  CHECK(ok.ok);
  FairAttackResult ok2 = fair_attack_check(
      prog, gamma, {E("bind y' = y in eta[bob] y'")}, kEmpty, H);
  CHECK(ok2.ok);
  // an attack of the wrong type is rejected
  FairAttackResult bad = fair_attack_check(prog, gamma, {E("()")}, kEmpty, H);
  CHECK_FALSE(bad.ok);
  // an attack reading a protected variable is rejected by name
  Term prog2 = E("\\s: (alice-> says unit) [bob<-]. [* alice-> says unit]");
  FairAttackResult leak = fair_attack_check(prog2, gamma, {Term::var("s")}, kEmpty, H);
  CHECK_FALSE(leak.ok);
  CHECK(leak.reason.find("'s'") != std::string::npos);
  // the empty attack vector on a hole-free program is fair
  FairAttackResult none = fair_attack_check(E("()"), gamma, {}, kEmpty, H);
  CHECK(none.ok);
}

TEST_CASE("ni suite: commitment") {
  Suite suite = load_suite(std::string(FLAC_CORPUS_DIR) + "/suites/ni_commitment.flactest");
  std::ostringstream log;
  auto outcomes = run_suite(suite, HarnessConfig{}, &log);
  REQUIRE(outcomes.size() == 4);
  for (const auto& o : outcomes) {
    CAPTURE(o.name);
    CAPTURE(o.got);
    CHECK(o.ok);
  }
}

TEST_CASE("ni suite: bearer credentials") {
  Suite suite = load_suite(std::string(FLAC_CORPUS_DIR) + "/suites/ni_bearer.flactest");
  std::ostringstream log;
  auto outcomes = run_suite(suite, HarnessConfig{}, &log);
  REQUIRE(outcomes.size() == 2);
  for (const auto& o : outcomes) {
    CAPTURE(o.name);
    CAPTURE(o.got);
    CHECK(o.ok);
  }
}

TEST_CASE("rd suite: declassify and endorse") {
  Suite suite = load_suite(std::string(FLAC_CORPUS_DIR) + "/suites/rd_declass.flactest");
  std::ostringstream log;
  auto outcomes = run_suite(suite, HarnessConfig{}, &log);
  REQUIRE(outcomes.size() == 3);
  for (const auto& o : outcomes) {
    CAPTURE(o.name);
    CAPTURE(o.got);
    CHECK(o.ok);
  }
}

TEST_CASE("ni_check refuses a fail-prone setup via its side conditions") {
  NiSpec spec;
  spec.program = parse_term("bind x' = x in eta[p] x'");
  spec.gamma = TypingContext::of(parse_gamma("x : p says (unit, unit + unit)"));
  spec.pc = P("p<-");
  spec.secret = "x";
  spec.secret_type = parse_type("p says (unit, unit + unit)");
  spec.input1 = E("sealed[p] <(), inj1 @ (unit + unit) ()>");
  spec.input2 = E("sealed[p] <(), inj2 @ (unit + unit) ()>");
  spec.H = P("p-> /\\ q<-");
  spec.observer = P("q-> /\\ p<-");
  spec.pi = Projection::conf;
  NIVerdict v = ni_check(spec);
  CHECK(v.status == NIVerdict::Status::inapplicable);
  CHECK(v.condition.find("condition 3") != std::string::npos);
  // with a weak pc the same program passes
  spec.pc = P("q<-");
  spec.program = parse_term("proj2 <x, eta[q->] ()>");
  NIVerdict v2 = ni_check(spec);
  CHECK(v2.status == NIVerdict::Status::pass);
}

TEST_CASE("rd biconditional in full-run mode") {
  Suite suite = load_suite(std::string(FLAC_CORPUS_DIR) + "/suites/rd_declass.flactest");
  REQUIRE(!suite.entries.empty());
  SuiteEntry entry = suite.entries.front();
  ProgramFile prog = parse_program_file(suite.dir + "/" + entry.program_path, true);
  RdSpec spec;
  spec.program = prog.term;
  spec.gamma = TypingContext::of(prog.gamma);
  spec.context = prog.context;
  spec.attacker_context = prog.context;
  spec.pc = *prog.pc;
  spec.secret = entry.secret;
  spec.secret_type = *spec.gamma.lookup(entry.secret);
  spec.input1 = entry.input1;
  spec.input2 = entry.input2;
  spec.attacks1 = entry.attacks1;
  spec.attacks2 = entry.attacks2;
  spec.H = entry.H;
  spec.full_runs = true;
  RDVerdict v = rd_check(spec);
  CHECK(v.status == RDVerdict::Status::pass);
}

TEST_CASE("delegation compartmentalization dichotomy on corpus runs") {
  // runs ending in where-wrapped values: each justification is either
  // authorized by the pc or the output type is protected
  ProgramFile a = parse_program_file(std::string(FLAC_CORPUS_DIR) +
                                     "/programs/s4_assume_bind.flac");
  Term closed = substitute(a.term, "x", E("sealed[p<-] ()"));
  Type ty = typecheck(a.context, TypingContext{}, *a.pc, closed);
  RunResult rr = run(closed);
  REQUIRE(rr.status == RunResult::Status::value);
  int seen = 0;
  Term t = rr.result();
  while (t.kind() == Term::Kind::where) {
    Term just = t.child(1);
    REQUIRE(just.kind() == Term::Kind::del);
    bool authorized = robust_acts_for(a.context, *a.pc, voice(just.inferior()));
    bool protected_out =
        protects(a.context, P("p->"), project_type(ty, Projection::conf));
    CHECK((authorized || protected_out));
    t = t.child(0);
    ++seen;
  }
  CHECK(seen >= 1);

  ProgramFile h = parse_program_file(std::string(FLAC_CORPUS_DIR) +
                                     "/programs/handoff_run.flac");
  RunResult hr = run(h.term);
  REQUIRE(hr.status == RunResult::Status::value);
  t = hr.result();
  seen = 0;
  while (t.kind() == Term::Kind::where) {
    Term just = t.child(1);
    CHECK(robust_acts_for(h.context, *h.pc, voice(just.inferior())));
    t = t.child(0);
    ++seen;
  }
  CHECK(seen >= 1);
}
