#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flac/generate.hpp"
#include "flac/parser.hpp"
#include "flac/principals.hpp"
#include "support/oracles.hpp"

using namespace flac;

namespace {

Principal P(const std::string& s) { return parse_principal(s); }

bool equiv(const Principal& a, const Principal& b) { return static_equiv(a, b); }

}  // namespace

TEST_CASE("normal forms of the worked identities") {
  NormalForm nf = normalize(P("Alice-> /\\ Bob"));
  CHECK(nf.to_principal().to_string() == "(Alice /\\ Bob)-> /\\ Bob<-");
  CHECK(equiv(nf.to_principal(), P("(Alice /\\ Bob)-> /\\ Bob<-")));

  NormalForm bot = normalize(P("bot"));
  CHECK(bot.conf.is_bottom());
  CHECK(bot.integ.is_bottom());

  CHECK(equiv(P("(p<-)->"), P("bot")));
  CHECK(equiv(P("(p->)<-"), P("bot")));
}

TEST_CASE("normalization is canonical for equivalence") {
  std::mt19937_64 rng(7);
  std::vector<std::string> names{"a", "b", "c"};
  for (int i = 0; i < 400; ++i) {
    Principal p = random_principal(rng, names, 4);
    Principal q = random_principal(rng, names, 4);
    bool eq = static_acts_for(p, q) && static_acts_for(q, p);
    CHECK(eq == (normalize(p) == normalize(q)));
    // denormalization round-trips up to equivalence
    CHECK(equiv(p, normalize(p).to_principal()));
  }
}

TEST_CASE("static acts-for basics") {
  CHECK(static_acts_for(P("top"), P("p")));
  CHECK(static_acts_for(P("p-> /\\ p<-"), P("p")));
  CHECK(static_acts_for(P("p"), P("p-> /\\ p<-")));
  CHECK_FALSE(static_acts_for(P("Alice-> /\\ Bob<-"), P("Alice<- /\\ Bob<-")));
}

TEST_CASE("static acts-for agrees with the free-lattice oracle") {
  std::mt19937_64 rng(11);
  std::vector<std::string> names{"a", "b", "c"};
  for (int i = 0; i < 1500; ++i) {
    Principal p = random_principal(rng, names, 4);
    Principal q = random_principal(rng, names, 4);
    CHECK(static_acts_for(p, q) == test::oracle_static_acts_for(p, q));
  }
}

TEST_CASE("acts-for is a preorder") {
  std::mt19937_64 rng(13);
  std::vector<std::string> names{"a", "b", "c"};
  for (int i = 0; i < 300; ++i) {
    Principal p = random_principal(rng, names, 3);
    Principal q = random_principal(rng, names, 3);
    Principal r = random_principal(rng, names, 3);
    CHECK(static_acts_for(p, p));
    if (static_acts_for(p, q) && static_acts_for(q, r)) CHECK(static_acts_for(p, r));
  }
}

TEST_CASE("flows-to") {
  CHECK(flows_to(P("p"), P("p")));
  CHECK(flows_to(P("bot-> /\\ top<-"), P("top-> /\\ bot<-")));
  CHECK_FALSE(flows_to(P("Alice->"), P("Bob->")));
  // secret-untrusted is the top of the information lattice
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    Principal p = random_principal(rng, {"a", "b"}, 3);
    CHECK(flows_to(p, P("top-> /\\ bot<-")));
    CHECK(flows_to(P("bot-> /\\ top<-"), p));
  }
}

TEST_CASE("equivalence classes of acts-for and flows-to coincide") {
  std::mt19937_64 rng(19);
  std::vector<std::string> names{"a", "b"};
  for (int i = 0; i < 300; ++i) {
    Principal p = random_principal(rng, names, 3);
    Principal q = random_principal(rng, names, 3);
    bool af = static_acts_for(p, q) && static_acts_for(q, p);
    bool fl = flows_to(p, q) && flows_to(q, p);
    CHECK(af == fl);
  }
}

TEST_CASE("join and meet") {
  CHECK(equiv(join(P("p"), P("p")), P("p")));
  CHECK(equiv(join(P("Alice"), P("Bob")), P("(Alice /\\ Bob)-> /\\ (Alice \\/ Bob)<-")));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    Principal x = random_principal(rng, {"a", "b"}, 3);
    CHECK(equiv(meet(P("top-> /\\ bot<-"), x), x));
    CHECK(flows_to(x, join(x, P("a"))));
    CHECK(flows_to(P("a"), join(x, P("a"))));
    CHECK(flows_to(meet(x, P("a")), x));
  }
}

TEST_CASE("lattice laws for join and meet") {
  std::mt19937_64 rng(29);
  std::vector<std::string> names{"a", "b", "c"};
  for (int i = 0; i < 300; ++i) {
    Principal x = random_principal(rng, names, 3);
    Principal y = random_principal(rng, names, 3);
    Principal z = random_principal(rng, names, 3);
    CHECK(equiv(join(x, x), x));
    CHECK(equiv(meet(x, x), x));
    CHECK(equiv(join(x, y), join(y, x)));
    CHECK(equiv(meet(x, y), meet(y, x)));
    CHECK(equiv(join(x, join(y, z)), join(join(x, y), z)));
    CHECK(equiv(meet(x, meet(y, z)), meet(meet(x, y), z)));
    CHECK(equiv(join(x, meet(x, y)), x));
    CHECK(equiv(meet(x, join(x, y)), x));
    // least upper bound / greatest lower bound
    if (flows_to(x, z) && flows_to(y, z)) CHECK(flows_to(join(x, y), z));
    if (flows_to(z, x) && flows_to(z, y)) CHECK(flows_to(z, meet(x, y)));
  }
}

TEST_CASE("voice") {
  CHECK(equiv(voice(P("Alice")), P("Alice<-")));
  CHECK(equiv(voice(P("Alice->")), P("Alice<-")));
  CHECK(equiv(voice(P("bot")), P("bot")));
  CHECK(normalize(voice(P("q-> /\\ r<-"))) == normalize(P("q<- /\\ r<-")));
}

TEST_CASE("view") {
  CHECK(equiv(view(P("Bob<-")), P("Bob->")));
  CHECK(equiv(view(P("top")), P("top->")));
  CHECK(equiv(view(P("Alice-> /\\ Bob<-")), P("(Alice /\\ Bob)->")));
}

TEST_CASE("voice and view are monotone") {
  std::mt19937_64 rng(31);
  std::vector<std::string> names{"a", "b"};
  for (int i = 0; i < 300; ++i) {
    Principal p = random_principal(rng, names, 3);
    Principal q = random_principal(rng, names, 3);
    if (static_acts_for(p, q)) {
      CHECK(static_acts_for(voice(p), voice(q)));
      CHECK(static_acts_for(view(p), view(q)));
    }
  }
}

TEST_CASE("projections") {
  CHECK(equiv(proj(P("p /\\ q"), Projection::integ), P("p<- /\\ q<-")));
  CHECK(equiv(proj(proj(P("p"), Projection::conf), Projection::conf), P("p->")));
  CHECK(equiv(proj(proj(P("p"), Projection::integ), Projection::conf), P("bot")));
  CHECK(equiv(P("(p \\/ q)->"), P("p-> \\/ q->")));
  // a projected principal is the conjunction of itself with the
  // missing projection's bottom
  CHECK(equiv(P("p->"), P("p-> /\\ bot<-")));
}

TEST_CASE("principal parsing and printing round-trip") {
  for (const char* text :
       {"Alice", "top", "bot", "p->", "p<-", "p /\\ q", "p \\/ q", "(p /\\ q)->",
        "(p<-)->", "Alice-> /\\ Bob<-", "((a \\/ b) /\\ c)<-"}) {
    Principal p = parse_principal(text);
    CHECK(parse_principal(p.to_string()).same_tree(p));
  }
  std::mt19937_64 rng(37);
  for (int i = 0; i < 300; ++i) {
    Principal p = random_principal(rng, {"a", "b", "c"}, 4);
    CHECK(parse_principal(p.to_string()).same_tree(p));
  }
}
