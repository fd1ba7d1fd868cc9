#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sylog/diagram.hpp"
#include "sylog/syllogistics.hpp"

using namespace sylog;

namespace {

// All sixteen 2-variable building blocks: the eight proposition shapes and
// their mirror images, over fresh variable names.
std::vector<Diagram> building_blocks(const std::string& a,
                                     const std::string& b) {
  std::vector<Diagram> out;
  for (char q : {'A', 'I'})
    for (bool cs : {false, true})
      for (bool cp : {false, true}) {
        CategoricalProp p;
        p.q = q == 'A' ? Quantity::Universal : Quantity::Particular;
        p.subject = {a, cs};
        p.predicate = {b, cp};
        out.push_back(to_diagram(p));
        out.push_back(reversal(to_diagram(p)));
      }
  return out;
}

// Random well-formed diagram: a chain of random blocks glued at shared end
// variables, exactly the inductive generation of the class.
Diagram random_well_formed(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(1, 5), pick(0, 15);
  const int n = len(rng);
  Diagram d;
  for (int i = 0; i < n; ++i) {
    const std::string va = "V" + std::to_string(i);
    const std::string vb = "V" + std::to_string(i + 1);
    Diagram block = building_blocks(va, vb)[pick(rng)];
    if (i == 0) {
      d = block;
    } else {
      // Glue: d ends with variable va, block starts with va.
      d.toks.insert(d.toks.end(), block.toks.begin() + 1, block.toks.end());
    }
  }
  return d;
}

}  // namespace

TEST_CASE("diagram parse/render on fixed forms") {
  for (const char* text : {"A -> B", "A -> * <- B", "A <- * -> B",
                           "A <- * -> * <- B", "A -> * -> B",
                           "A -> * <- * -> * <- B", "S -> M -> * <- P",
                           "A <- A", "X -> Y -> * <- X"}) {
    const Diagram d = parse_diagram(text);
    CHECK(render_diagram(d) == text);
    CHECK(is_alternating(d));
  }
}

TEST_CASE("diagram parser rejects malformed input") {
  for (const char* text :
       {"", "->", "A ->", "-> A", "A * B", "A -> <-", "A -> * * <- B",
        "A B", "*", "A -> * ", "A -, B"}) {
    CHECK_THROWS_AS(parse_diagram(text), ParseError);
  }
}

TEST_CASE("reversal is a mirror image and an involution") {
  CHECK(render_diagram(reversal(parse_diagram("A -> B"))) == "B <- A");
  CHECK(render_diagram(reversal(parse_diagram("A -> * -> B"))) ==
        "B <- * <- A");
  CHECK(render_diagram(reversal(parse_diagram("X -> Y -> * <- X"))) ==
        "X -> * <- Y <- X");
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Diagram d = random_well_formed(rng);
    CHECK(reversal(reversal(d)) == d);
    CHECK(bullet_count(reversal(d)) == bullet_count(d));
    CHECK(is_well_formed(reversal(d)));
  }
}

TEST_CASE("parse/render round-trips on generated corpus") {
  std::mt19937 rng(20240817);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const Diagram d = random_well_formed(rng);
    const std::string text = render_diagram(d);
    CHECK(parse_diagram(text) == d);
    ++checked;
  }
  CHECK(checked == 10000);
}

TEST_CASE("bullet_count and variables") {
  CHECK(bullet_count(parse_diagram("A -> B")) == 0);
  CHECK(bullet_count(parse_diagram("A -> * <- * -> * <- B")) == 3);
  CHECK(variables(parse_diagram("S -> M -> * <- P")) ==
        std::vector<std::string>{"S", "M", "P"});
  CHECK(variables(parse_diagram("X -> Y -> * <- X")) ==
        std::vector<std::string>{"X", "Y"});
}

TEST_CASE("complemented occurrence counting") {
  auto occ = complemented_occurrences(parse_diagram("A <- * <- M -> * -> B"));
  CHECK(occ["M"] == 2);
  CHECK(occ["A"] == 0);
  CHECK(occ["B"] == 0);

  occ = complemented_occurrences(parse_diagram("A -> * -> * <- B"));
  CHECK(occ["A"] == 1);
  CHECK(occ["B"] == 1);

  occ = complemented_occurrences(parse_diagram("A -> B"));
  CHECK(occ["A"] == 0);
  CHECK(occ["B"] == 0);

  // A variable occurring twice accumulates over its occurrences.
  occ = complemented_occurrences(parse_diagram("B -> * <- * <- A -> * -> B"));
  CHECK(occ["A"] == 2);
  CHECK(occ["B"] == 1);
}

TEST_CASE("complemented occurrences are reversal-invariant") {
  std::mt19937 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const Diagram d = random_well_formed(rng);
    CHECK(complemented_occurrences(reversal(d)) ==
          complemented_occurrences(d));
  }
}

TEST_CASE("admissible segments re-derived from the building blocks") {
  std::set<std::string> derived;
  for (const Diagram& block : building_blocks("A", "B")) {
    std::string seg;
    for (std::size_t i = 1; i + 1 < block.toks.size(); ++i) {
      if (!seg.empty()) seg += ' ';
      const auto& t = block.toks[i];
      seg += t.kind == Tok::Bullet ? "*" : (t.kind == Tok::ArrowR ? "->" : "<-");
    }
    derived.insert(seg);
  }
  const auto& listed = admissible_segments();
  CHECK(std::set<std::string>(listed.begin(), listed.end()) == derived);
  CHECK(listed.size() == 11);
}

TEST_CASE("well-formedness") {
  CHECK(is_well_formed(parse_diagram("A -> B")));
  CHECK(is_well_formed(parse_diagram("S -> M -> * <- P")));
  CHECK(is_well_formed(parse_diagram("A -> * <- B -> C <- * <- D")));
  CHECK(is_well_formed(parse_diagram("S <- * -> * <- M -> * -> P")));
  CHECK_FALSE(is_well_formed(parse_diagram("A -> * -> * -> B")));
  CHECK_FALSE(is_well_formed(parse_diagram("A <- * <- * <- B")));
  CHECK_FALSE(is_well_formed(parse_diagram("A -> * -> * <- * -> B")));
  std::mt19937 rng(3);
  for (int i = 0; i < 2000; ++i)
    CHECK(is_well_formed(random_well_formed(rng)));
}
