// Linear diagrams: alternating sequences of term variables, arrows and
// bullets, written in ASCII as e.g. "A -> * <- B".  A diagram starts and
// ends with a variable; arrows connect variables and bullets.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sylog {

// Raised by all parsers in the library on malformed input.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class Tok {
  Var,     // term variable (carries a name)
  ArrowR,  // ->
  ArrowL,  // <-
  Bullet,  // *
};

struct DiagramToken {
  Tok kind;
  std::string name;  // non-empty only for Tok::Var

  bool operator==(const DiagramToken&) const = default;
};

struct Diagram {
  std::vector<DiagramToken> toks;

  bool operator==(const Diagram&) const = default;
  // Lexicographic order on the rendered form; used for canonical state keys.
  bool operator<(const Diagram& other) const;
};

// Convenience constructors.
DiagramToken var_tok(const std::string& name);
DiagramToken arrow_tok(bool right);
DiagramToken bullet_tok();

// "A -> * <- B"  ->  Diagram.  Throws ParseError.
Diagram parse_diagram(const std::string& text);

// Inverse of parse_diagram; tokens joined by single spaces.
std::string render_diagram(const Diagram& d);

// Structural sanity: alternates nodes (variables/bullets) and arrows, and
// begins/ends with a variable.  Weaker than is_well_formed.
bool is_alternating(const Diagram& d);

// Mirror image: sequence reversed, arrow directions swapped.  An involution.
Diagram reversal(const Diagram& d);

// Number of bullet tokens.
int bullet_count(const Diagram& d);

// Distinct variable names in order of first occurrence.
std::vector<std::string> variables(const Diagram& d);

// Per-variable count of complemented occurrences: +1 for each adjacent
// pattern "v -> *" or "* <- v"; an occurrence inside "* <- v -> *"
// counts twice.
std::map<std::string, int> complemented_occurrences(const Diagram& d);

// Membership in the inductively generated class: concatenations of the
// eight 2-variable diagram shapes and their mirror images, glued at shared
// end variables.  Equivalently: alternating, and every segment between
// consecutive variables is one of the eleven admissible arrow/bullet
// patterns.
bool is_well_formed(const Diagram& d);

// The admissible variable-to-variable segment patterns (rendered without
// the flanking variables, e.g. "-> * <-").  Exposed for tests, which
// re-derive the set from the inductive definition.
const std::vector<std::string>& admissible_segments();

}  // namespace sylog
