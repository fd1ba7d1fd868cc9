// Categorical propositions A(x,y) / I(x,y) over possibly complemented
// terms, their readings as linear-logic formulas and as linear diagrams,
// syllogism candidate spaces, the embedded validity tables, the square of
// opposition laws, and the one/two-term law + reduction catalog.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sylog/diagram.hpp"
#include "sylog/rll.hpp"
#include "sylog/syll.hpp"

namespace sylog {

struct SignedTerm {
  std::string var;           // canonical (uppercase) variable name
  bool complemented = false;

  bool operator==(const SignedTerm&) const = default;
};

// "S" / "s" — a lowercase first letter marks complementation.
SignedTerm parse_term(const std::string& text);
std::string render_term(const SignedTerm& t);

enum class Quantity { Universal, Particular };  // A / I

struct CategoricalProp {
  Quantity q;
  SignedTerm subject, predicate;

  bool operator==(const CategoricalProp&) const = default;
};

// "A(S,p)", "I(m,P)", ...
CategoricalProp parse_prop(const std::string& text);
std::string render_prop(const CategoricalProp& p);

// Universal:  subj -o pred;  Particular:  subj * pred;  a complemented
// term x contributes X^.
RllPtr term_formula(const SignedTerm& t);
RllPtr to_formula(const CategoricalProp& p);

// The eight 2-variable diagram shapes, chosen by quantity and the two
// complementation flags.
Diagram to_diagram(const CategoricalProp& p);

struct Syllogism {
  CategoricalProp p1, p2;
  std::optional<SignedTerm> import;  // existential import, as I(x,x)
  CategoricalProp concl;

  bool operator==(const Syllogism&) const = default;
};

// "A(M,P); A(S,M) / A(S,P)"  or  "A(M,P); A(S,M); S / I(S,P)".
Syllogism parse_syllogism(const std::string& text);
std::string render_syllogism(const Syllogism& s);

// 1..4, by the position of the middle letter in the premises.
int figure_of(const Syllogism& s);
// "AAA", "AII", "AAII" (the extra I marks a strengthening import), ...
std::string mood_of(const Syllogism& s);

// True when each of the three term letters keeps a single complementation
// flag across both premises and the conclusion (the import, if any, is
// exempt).  Complement-aware candidate grids also contain mixed-flag
// fillings such as "A(m,P); A(S,M) / A(s,P)"; those fall outside the
// standard argument format and are reported separately by the sweeps.
bool consistent_complementation(const Syllogism& s);

enum class SyllogismKind { Traditional, DeMorgan };

// Diagram-calculus and formula-calculus sequents of a candidate.
SyllSequent to_syll_sequent(const Syllogism& s);
RllSequent to_rll_sequent(const Syllogism& s);

// Candidate spaces.  Traditional: both premise term orders, quantity and
// predicate complementation free, subjects plain (8 x 8 x 4 = 256; with
// imports over {S,M,P}: 768).  De Morgan: subject complementation also
// free (16 x 16 x 8 = 2048; with imports over all six signed terms:
// 12288).  Deterministic order.
std::vector<Syllogism> enumerate_candidates(SyllogismKind kind,
                                            bool strengthened);

// Default diagram system for a kind: "+" for Traditional, "+*" for
// De Morgan.
SystemLevel default_system(SyllogismKind kind);

struct Verdict {
  bool syll = false;
  bool rll = false;
};

// Runs both provers on the candidate's sequents.  Classification uses
// axiom-injection budget 0: imports enter as premises only.
Verdict classify(const Syllogism& s, SystemLevel system);
Verdict classify(const Syllogism& s);  // default_system of the kind

// Embedded validity tables, as parseable shorthand.
const std::vector<std::string>& table_traditional_plain();         // 15
const std::vector<std::string>& table_traditional_strengthened();  // 9
const std::vector<std::string>& table_demorgan_plain();            // 24
const std::vector<std::string>& table_demorgan_strengthened();     // 8

// Canonical representative of a candidate modulo the classical
// proposition dualities used by the De Morgan table's counting:
//   I(x,y) ~ I(y,x);  A(x,y) ~ A(y',x')  (conversion/contraposition).
// Premises are canonicalized; the conclusion is left alone (its subject
// position is fixed by the syllogism format).
Syllogism canonical_syllogism(const Syllogism& s);

// ---------------------------------------------------------------- catalogs

struct SquareLaw {
  std::string name;
  RllSequent rll;
  // Diagrammatic counterpart; absent for the complement-entailment laws,
  // whose conclusions are not categorical propositions.
  std::optional<SyllSequent> syll;
  SystemLevel system;  // system for the diagrammatic side
};

enum class SquareMode { Traditional, New };

// Eight laws per mode: two contradiction laws, two subalternation/
// contrariety/subcontrariety laws (with diagram counterparts), and four
// complement-entailment laws (formula-only).
std::vector<SquareLaw> square_laws(SquareMode mode);

struct CatalogEntry {
  std::string name;
  // The sequents to establish, all in the "++" diagram system with the
  // default axiom budget.
  std::vector<SyllSequent> obligations;
  // For reductions: human-readable source/target and the rule used.
  std::string source, rule, target;
};

// Two identity laws, ten two-term syllogisms, three worked reductions
// (15 entries).
std::vector<CatalogEntry> reduction_catalog();

}  // namespace sylog
