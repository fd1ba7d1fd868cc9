// The diagrammatic sequent calculi over linear diagrams:
//   base      — reversal of the four classic 2-variable shapes,
//               concatenation at a shared end variable, and deletion of an
//               interior variable traversed left-to-right or right-to-left
//               (ineligible when the exit side continues into a complement
//               marker "* ->" / "<- *", and only if the result is still a
//               well-formed diagram);
//   "+"       — adds the existential axiom  |= X <- * -> X;
//   "++"      — additionally adds the identity axiom  |= X -> X;
//   "+*"      — "+" extended with reversal for the four complemented
//               2-variable shapes and the bullet-elimination rule that
//               rewrites  * <- X -> *  to  X.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sylog/diagram.hpp"

namespace sylog {

enum class SystemLevel { Syll, SyllPlus, SyllPlusPlus, SyllStar };

std::string system_name(SystemLevel s);                 // "syll", "syll+", ...
std::optional<SystemLevel> system_from_name(const std::string& name);

// Feature gates per system.
bool has_existential_axiom(SystemLevel s);  // +, ++, +*
bool has_identity_axiom(SystemLevel s);     // ++ only
bool has_new_diagram_rules(SystemLevel s);  // +* only

struct SyllSequent {
  std::vector<Diagram> premises;
  Diagram goal;
};

// "G1, G2 |= A" over rendered diagrams; premises may be empty.
SyllSequent parse_syll_sequent(const std::string& text);
std::string render_syll_sequent(const SyllSequent& s);

enum class SyllRuleKind {
  Premise,      // leaf: premise #index
  ExistAxiom,   // leaf: X <- * -> X
  IdentAxiom,   // leaf: X -> X
  Reverse,      // classic 2-variable shape or its mirror
  ReverseNew,   // complemented 2-variable shape or its mirror
  Concat,       // glue two diagrams at a shared end variable
  DeleteRight,  // drop an interior "-> X ->" variable
  DeleteLeft,   // drop an interior "<- X <-" variable
  Star,         // rewrite "* <- X -> *" to "X"
};

struct SyllRule {
  SyllRuleKind kind;
  int index = -1;     // Premise: premise number
  std::string var;    // axiom variable / deleted or starred variable
  int pos = -1;       // token position of the rewritten variable occurrence
};

struct SyllProof;
using SyllProofPtr = std::shared_ptr<const SyllProof>;

struct SyllProof {
  SyllRule rule;
  Diagram conclusion;
  std::vector<SyllProofPtr> children;
};

// How many times each axiom may be injected per variable occurring in the
// sequent.  Classification sweeps run with {0, 0}: existential import must
// be an explicit premise there, so that plain moods never borrow it.
struct AxiomBudget {
  int exist_per_var = 1;
  int ident_per_var = 1;
};

// True iff d is one of the four classic 2-variable shapes or a mirror
// image of one (these are reversible in every system).
bool reversible_classic(const Diagram& d);
// Same for the four complemented shapes (reversible only with the "+*"
// rules).
bool reversible_new(const Diagram& d);

// Applies one rule instance; std::nullopt if the rule does not apply or is
// not available in `system`.  Unary rules take one input diagram, Concat
// takes two (first's last variable must equal second's first variable),
// leaves take none.
std::optional<Diagram> apply_rule(const SyllRule& rule,
                                  const std::vector<Diagram>& inputs,
                                  SystemLevel system,
                                  const SyllSequent& seq);

// Bullet-count screen: every rule preserves bullet counts except the
// existential axiom (+1 per use) and Star (-2 per use, "+*" only).
// Returns true iff the sequent can be rejected outright.
bool reject_precheck(const SyllSequent& s, SystemLevel system,
                     const AxiomBudget& budget);

// Breadth-first proof search over multisets of diagrams.  Moves: reverse a
// reversible diagram, concatenate two diagrams, delete an interior
// variable, apply Star, inject an axiom within budget.  The goal matches
// as itself or (for reversible goals) as its mirror image, in which case a
// final reversal step is appended so the returned proof's root is the goal
// verbatim.  Returns std::nullopt when no proof exists (the state space is
// finite, so search always terminates).
std::optional<SyllProofPtr> prove(const SyllSequent& s, SystemLevel system,
                                  const AxiomBudget& budget = {});
bool syll_provable(const SyllSequent& s, SystemLevel system,
                   const AxiomBudget& budget = {});

// Independent replay: every leaf is a premise (each premise used exactly
// once) or an axiom available in `system`, every inner node re-derives via
// apply_rule, and the root equals the goal.
bool check_proof(const SyllProofPtr& p, const SyllSequent& s,
                 SystemLevel system);

}  // namespace sylog
