#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sylog/syllogistics.hpp"

using namespace sylog;

TEST_CASE("terms and propositions round-trip") {
  CHECK(render_term(parse_term("S")) == "S");
  CHECK(render_term(parse_term("s")) == "s");
  CHECK(parse_term("s") == SignedTerm{"S", true});
  for (const std::string p :
       {"A(S,P)", "A(s,p)", "I(M,P)", "I(m,p)", "A(S,p)", "I(s,P)"})
    CHECK(render_prop(parse_prop(p)) == p);
  CHECK_THROWS_AS(parse_prop("E(S,P)"), ParseError);
  CHECK_THROWS_AS(parse_prop("A(S)"), ParseError);
}

TEST_CASE("syllogism round-trip, figure, mood") {
  const std::string b = "A(M,P); A(S,M) / A(S,P)";
  CHECK(render_syllogism(parse_syllogism(b)) == b);
  CHECK(figure_of(parse_syllogism(b)) == 1);
  CHECK(mood_of(parse_syllogism(b)) == "AAA");
  CHECK(figure_of(parse_syllogism("A(P,M); I(M,S) / I(S,P)")) == 4);
  const std::string st = "A(M,P); A(S,M); S / I(S,P)";
  CHECK(render_syllogism(parse_syllogism(st)) == st);
  CHECK(mood_of(parse_syllogism(st)) == "AAII");
  CHECK(figure_of(parse_syllogism("A(P,M); A(S,M) / A(S,P)")) == 2);
  CHECK(figure_of(parse_syllogism("A(M,P); A(M,S) / A(S,P)")) == 3);
}

TEST_CASE("diagram readings of the eight proposition shapes") {
  auto d = [](const std::string& p) {
    return render_diagram(to_diagram(parse_prop(p)));
  };
  CHECK(d("A(A,B)") == "A -> B");
  CHECK(d("A(A,b)") == "A -> * <- B");
  CHECK(d("I(A,B)") == "A <- * -> B");
  CHECK(d("I(A,b)") == "A <- * -> * <- B");
  CHECK(d("A(a,B)") == "A -> * -> B");
  CHECK(d("A(a,b)") == "A -> * -> * <- B");
  CHECK(d("I(a,B)") == "A -> * <- * -> B");
  CHECK(d("I(a,b)") == "A -> * <- * -> * <- B");
}

TEST_CASE("formula readings") {
  auto f = [](const std::string& p) {
    return render_rll(to_formula(parse_prop(p)));
  };
  CHECK(f("A(S,P)") == "S -o P");
  CHECK(f("A(s,p)") == "S^ -o P^");
  CHECK(f("I(S,p)") == "S * P^");
  CHECK(f("I(m,P)") == "M^ * P");
}

TEST_CASE("particular readings are symmetric up to reversal") {
  for (bool cs : {false, true})
    for (bool cp : {false, true}) {
      CategoricalProp xy{Quantity::Particular, {"A", cs}, {"B", cp}};
      CategoricalProp yx{Quantity::Particular, {"B", cp}, {"A", cs}};
      CHECK(reversal(to_diagram(xy)) == to_diagram(yx));
    }
}

TEST_CASE("complementation-consistency predicate") {
  CHECK(consistent_complementation(
      parse_syllogism("A(M,P); A(S,M) / A(S,P)")));
  CHECK(consistent_complementation(
      parse_syllogism("A(m,p); A(s,m) / A(s,p)")));
  // Baroco mixes M's flag across its premises, so it sits outside the
  // uniform-flag format (the traditional tables are asserted literally,
  // without this filter).
  CHECK_FALSE(consistent_complementation(
      parse_syllogism("A(P,M); I(S,m) / I(S,p)")));
  CHECK_FALSE(consistent_complementation(
      parse_syllogism("A(m,P); A(S,M) / A(s,P)")));
  // The import slot is exempt.
  CHECK(consistent_complementation(
      parse_syllogism("A(M,P); A(S,M); s / I(S,P)")));
}

TEST_CASE("candidate spaces have the advertised sizes and no duplicates") {
  auto sized = [](SyllogismKind k, bool st) {
    auto v = enumerate_candidates(k, st);
    std::set<std::string> seen;
    for (const auto& s : v) seen.insert(render_syllogism(s));
    CHECK(seen.size() == v.size());
    return v.size();
  };
  CHECK(sized(SyllogismKind::Traditional, false) == 256);
  CHECK(sized(SyllogismKind::Traditional, true) == 768);
  CHECK(sized(SyllogismKind::DeMorgan, false) == 2048);
  CHECK(sized(SyllogismKind::DeMorgan, true) == 12288);
}

TEST_CASE("embedded tables parse and have the advertised sizes") {
  auto ok = [](const std::vector<std::string>& t, size_t n) {
    CHECK(t.size() == n);
    for (const auto& line : t) {
      const Syllogism s = parse_syllogism(line);
      CHECK(render_syllogism(s) == line);
    }
  };
  ok(table_traditional_plain(), 15);
  ok(table_traditional_strengthened(), 9);
  ok(table_demorgan_plain(), 24);
  ok(table_demorgan_strengthened(), 8);
}

TEST_CASE("canonicalization identifies converted premises") {
  auto canon = [](const std::string& s) {
    return render_syllogism(canonical_syllogism(parse_syllogism(s)));
  };
  // I-conversion in a premise.
  CHECK(canon("I(P,M); A(S,M) / I(S,P)") == canon("I(M,P); A(S,M) / I(S,P)"));
  // A-contraposition in a premise.
  CHECK(canon("A(M,P); A(S,M) / A(S,P)") == canon("A(p,m); A(S,M) / A(S,P)"));
  // The conclusion is left alone.
  CHECK(canon("A(M,P); A(S,M) / I(S,P)") != canon("A(M,P); A(S,M) / I(P,S)"));
  // Idempotent.
  for (const auto& line : table_demorgan_plain())
    CHECK(canon(line) == render_syllogism(canonical_syllogism(
                             canonical_syllogism(parse_syllogism(line)))));
}

TEST_CASE("classification of landmark candidates") {
  auto v = [](const std::string& s) {
    return classify(parse_syllogism(s));
  };
  Verdict barbara = v("A(M,P); A(S,M) / A(S,P)");
  CHECK(barbara.syll);
  CHECK(barbara.rll);
  Verdict celarent = v("A(M,p); A(S,M) / A(S,p)");
  CHECK(celarent.syll);
  CHECK(celarent.rll);
  // Barbari without its import fails in both calculi (no free import at
  // classification budget).
  Verdict barbari = v("A(M,P); A(S,M) / I(S,P)");
  CHECK_FALSE(barbari.syll);
  CHECK_FALSE(barbari.rll);
  // ...and succeeds once the import premise is explicit.
  Verdict barbari_imp = v("A(M,P); A(S,M); S / I(S,P)");
  CHECK(barbari_imp.syll);
  CHECK(barbari_imp.rll);
  // An invalid mood.
  Verdict bad = v("A(P,M); A(S,M) / A(S,P)");
  CHECK_FALSE(bad.syll);
  CHECK_FALSE(bad.rll);
}

TEST_CASE("sequent readings of a candidate") {
  const Syllogism s = parse_syllogism("A(M,P); A(S,M); S / I(S,P)");
  CHECK(render_syll_sequent(to_syll_sequent(s)) ==
        "M -> P, S -> M, S <- * -> S |= S <- * -> P");
  CHECK(render_rll_sequent(to_rll_sequent(s)) ==
        "M -o P, S -o M, S * S |- S * P");
}

TEST_CASE("default systems") {
  CHECK(default_system(SyllogismKind::Traditional) == SystemLevel::SyllPlus);
  CHECK(default_system(SyllogismKind::DeMorgan) == SystemLevel::SyllStar);
}
