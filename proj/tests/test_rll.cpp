#include <doctest.h>

#include <string>
#include <vector>

#include "sylog/rll.hpp"

using namespace sylog;

namespace {

bool provable(const std::string& s) {
  return rll_provable(parse_rll_sequent(s));
}

}  // namespace

TEST_CASE("formula parser precedence and sugar") {
  CHECK(render_rll(parse_rll_formula("A -o B -o C")) == "A -o B -o C");
  CHECK(rll_equal(parse_rll_formula("A -o B -o C"),
                  rll_lolli(rll_atom("A"),
                            rll_lolli(rll_atom("B"), rll_atom("C")))));
  CHECK(rll_equal(parse_rll_formula("A * B * C"),
                  rll_tensor(rll_tensor(rll_atom("A"), rll_atom("B")),
                             rll_atom("C"))));
  CHECK(rll_equal(parse_rll_formula("A^"), parse_rll_formula("A -o bot")));
  CHECK(render_rll(parse_rll_formula("A -o bot")) == "A^");
  CHECK(render_rll(parse_rll_formula("(A -o B) -o C")) == "(A -o B) -o C");
  CHECK(render_rll(parse_rll_formula("A * (B * C)")) == "A * (B * C)");
  CHECK(rll_is_neg(parse_rll_formula("(A * B)^")));
  CHECK_THROWS_AS(parse_rll_formula("A -o"), ParseError);
  CHECK_THROWS_AS(parse_rll_formula("* A"), ParseError);
  CHECK_THROWS_AS(parse_rll_sequent("A |- "), ParseError);
}

TEST_CASE("sequent parse/render round trip") {
  for (const char* s : {"A |- A", "M -o P, S -o M |- S -o P", "|- A -o A",
                        "A, B |- A * B", "S * M^ |- M^ * S"}) {
    CHECK(render_rll_sequent(parse_rll_sequent(s)) == s);
  }
}

TEST_CASE("prover: basic provabilities") {
  CHECK(provable("A |- A"));
  CHECK(provable("A, A -o B |- B"));
  CHECK(provable("M -o P, S -o M |- S -o P"));
  CHECK(provable("A, B |- A * B"));
  CHECK(provable("A * B |- B * A"));
  CHECK(provable("A * (B * C) |- (A * B) * C"));
  CHECK(provable("|- A -o A"));
  CHECK(provable("A -o B -o C |- A * B -o C"));
  CHECK(provable("A * B -o C |- A -o B -o C"));
}

TEST_CASE("prover: linearity is enforced") {
  CHECK_FALSE(provable("A, A -o B |- A * B"));  // premise consumed
  CHECK_FALSE(provable("A |- A * A"));          // no contraction
  CHECK_FALSE(provable("A, B |- A"));           // no weakening
  CHECK_FALSE(provable("A |- B"));
  CHECK_FALSE(provable("A * A |- A"));
}

TEST_CASE("complement behaves intuitionistically, not involutively") {
  CHECK(provable("A |- A^^"));
  CHECK_FALSE(provable("A^^ |- A"));
  CHECK(provable("A -o B |- B^ -o A^"));       // contraposition
  CHECK_FALSE(provable("B^ -o A^ |- A -o B")); // not its converse
  CHECK(provable("A^ |- A^^^"));
  CHECK(provable("A^^^ |- A^"));
  CHECK_FALSE(provable("A^ -o B |- B^ -o A")); // no symmetric disjunction
  CHECK(provable("A * A^ |- bot"));
}

TEST_CASE("provable equivalences") {
  CHECK(rll_equivalent(parse_rll_formula("A -o B^"),
                       parse_rll_formula("B -o A^")));
  CHECK(rll_equivalent(parse_rll_formula("A * B"),
                       parse_rll_formula("B * A")));
  CHECK(rll_equivalent(parse_rll_formula("A^"), parse_rll_formula("A^^^")));
  CHECK_FALSE(rll_equivalent(parse_rll_formula("A"),
                             parse_rll_formula("A^^")));
}

TEST_CASE("context order does not matter") {
  CHECK(provable("S -o M, M -o P |- S -o P"));
  CHECK(provable("M -o P, S -o M |- S -o P"));
  CHECK(provable("B, A |- A * B"));
}

TEST_CASE("returned proofs replay through the independent checker") {
  for (const char* s :
       {"A |- A", "M -o P, S -o M |- S -o P", "A * B |- B * A",
        "A -o B |- B^ -o A^", "A * A^ |- bot",
        "M -o P^, S * M |- S * P^"}) {
    const RllSequent seq = parse_rll_sequent(s);
    auto p = prove_rll(seq);
    REQUIRE(p.has_value());
    CHECK(check_rll_proof(*p, seq));
  }
}

TEST_CASE("checker rejects a tampered proof") {
  const RllSequent seq = parse_rll_sequent("A, B |- A * B");
  auto p = prove_rll(seq);
  REQUIRE(p.has_value());
  // Wrong root: the proof does not prove this sequent.
  CHECK_FALSE(check_rll_proof(*p, parse_rll_sequent("A, B |- B * A")));
  // Mangled rule tag at the root.
  auto broken = std::make_shared<RllProof>(**p);
  broken->rule = RllRule::Id;
  CHECK_FALSE(check_rll_proof(broken, seq));
}

TEST_CASE("checker accepts the root up to context permutation") {
  const RllSequent given = parse_rll_sequent("S -o M, M -o P |- S -o P");
  auto p = prove_rll(given);
  REQUIRE(p.has_value());
  CHECK(check_rll_proof(*p, parse_rll_sequent("M -o P, S -o M |- S -o P")));
}
