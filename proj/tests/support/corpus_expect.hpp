#pragma once

// Expected outcomes for the shipped corpus programs, shared by the
// module tests and the acceptance suite.

#include <optional>
#include <string>
#include <vector>

namespace flac::test {

struct CorpusExpectation {
  std::string file;                 // under corpus/programs
  std::string expected_type;        // empty when a rejection is expected
  std::string expected_rule;        // rule of the expected type error
  std::string expected_premise;     // premise of the expected type error
  std::string harness_H;            // enables harness mode when nonempty
  std::string harness_pi;           // "conf" or "integ"
};

inline const std::vector<CorpusExpectation>& corpus_expectations() {
  static const std::vector<CorpusExpectation> table = {
      {"s4_bind_reject.flac", "", "UnitM", "pc⊑ℓ", "", ""},
      {"s4_assume_bind.flac", "q<- says unit", "", "", "", ""},
      {"declassify.flac", "(Alice-> says unit) [Alice<-]-> (Bob-> says unit)", "", "", "", ""},
      {"declassify_lowpc.flac", "", "Assume", "pc≽∇(q)", "", ""},
      {"says_lift.flac", "(unit [l]-> unit) [l]-> ((l says unit) [l]-> (l says unit))", "", "",
       "", ""},
      {"says_unit_intro.flac", "unit [l]-> (l says unit)", "", "", "", ""},
      {"says_app.flac",
       "(l says (unit [l]-> unit)) [l]-> ((l says unit) [l]-> (l says unit))", "", "", "", ""},
      {"says_commute_reject.flac", "", "UnitM", "pc⊑ℓ", "", ""},
      {"commit.flac",
       "forall N [p<-]. forall X [p<-]. N [p<-]-> ((p-> says X) [p<-]-> (p says (N, X)))", "",
       "", "", ""},
      {"reveal.flac",
       "forall N [p<-]. forall X [q<-]. (p says (N, X)) [q<-]-> ((q-> /\\ p<-) says (N, X))",
       "", "", "", ""},
      {"open.flac",
       "forall N [q<-]. forall X [q<-]. (forall Y [q<-]. (p says (N, Y)) [q<-]-> ((q-> /\\ "
       "p<-) says (N, Y))) [q<-]-> ((p says (N, X)) [q<-]-> (q<- says ((q-> /\\ p<-) says (N, "
       "X))))",
       "", "", "", ""},
      {"wrapper_reject.flac", "", "Assume", "pc≽∇(q)", "", ""},
      {"handoff.flac",
       "(q<- |> p<-) [p<- /\\ q<-]-> ((p<- /\\ q-> |> q<- /\\ p->) [p<- /\\ q<-]-> ((q<- /\\ "
       "q-> |> q<-) [p<- /\\ q<-]-> (forall X [q<-]. (p says X) [q<-]-> (q says X))))",
       "", "", "", ""},
      {"handoff_run.flac", "q says unit", "", "", "", ""},
      {"assume_demo.flac", "q<- says unit", "", "", "", ""},
      {"proj1_pair.flac", "unit", "", "", "", ""},
      {"bearer_issue.flac",
       "(forall X [bot<-]. (k1-> says X) [bot<-]-> (k1<- says X)) [Alice<-]-> ((k1 says (unit "
       "+ unit)) [Bob<-]-> (k1<- says (unit + unit)))",
       "", "", "", ""},
      {"bearer_share.flac",
       "((k1 says (unit + unit)) [Bob<-]-> (k1<- says (unit + unit))) [Bob<-]-> ((k1 says "
       "(unit + unit)) [Carol<-]-> (k1<- says (unit + unit)))",
       "", "", "", ""},
      {"cro_passthrough.flac", "q-> says unit", "", "", "", ""},
      {"cro_apply.flac", "q-> says unit", "", "", "", ""},
      {"cro_integrity.flac", "p says (unit, unit + unit)", "", "", "", ""},
      {"leaky.flac", "p says (unit, unit + unit)", "", "", "", ""},
      {"bearer_access.flac", "p-> says unit", "", "", "", ""},
      {"bearer_control.flac", "p-> says unit", "", "", "", ""},
      {"rd_declass.flac", "bob says (unit + unit)", "", "", "bob<- /\\ alice->", "conf"},
  };
  return table;
}

}  // namespace flac::test
