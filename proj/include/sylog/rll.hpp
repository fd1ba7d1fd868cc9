// Rudimentary intuitionistic linear logic over {atoms, tensor, lollipop}
// with a distinguished atom "bot".  A^ abbreviates A -o bot.  Sequents have
// a multiset context and a single conclusion; there is no cut rule (cut is
// admissible and never needed by the backward prover).
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sylog/diagram.hpp"  // for ParseError

namespace sylog {

struct RllFormula;
using RllPtr = std::shared_ptr<const RllFormula>;

enum class RllKind { Atom, Tensor, Lolli };

struct RllFormula {
  RllKind kind;
  std::string name;  // Atom only
  RllPtr left, right;
};

RllPtr rll_atom(const std::string& name);
RllPtr rll_bot();
RllPtr rll_tensor(RllPtr a, RllPtr b);
RllPtr rll_lolli(RllPtr a, RllPtr b);
// A^ = A -o bot.
RllPtr rll_neg(RllPtr a);

bool rll_equal(const RllPtr& a, const RllPtr& b);
// True iff f is of the shape X -o bot.
bool rll_is_neg(const RllPtr& f);

// Grammar: atoms are identifiers ("bot" is the false constant), "^" is a
// tightest-binding postfix complement, "*" is left-associative tensor,
// "-o" is right-associative implication with lowest precedence.
RllPtr parse_rll_formula(const std::string& text);
std::string render_rll(const RllPtr& f);

struct RllSequent {
  std::vector<RllPtr> ctx;  // multiset, stored in given order
  RllPtr concl;
};

// "F1, F2 |- C"; the context may be empty ("|- C").
RllSequent parse_rll_sequent(const std::string& text);
std::string render_rll_sequent(const RllSequent& s);

enum class RllRule { Id, TensorL, TensorR, LolliL, LolliR };

struct RllProof;
using RllProofPtr = std::shared_ptr<const RllProof>;

struct RllProof {
  RllRule rule;
  RllSequent seq;
  // Index of the principal context formula (TensorL / LolliL), else -1.
  // Children carry their own full sequents; context splits are recovered
  // from those by multiset matching.
  int principal = -1;
  std::vector<RllProofPtr> children;
};

// Exhaustive backward search (rule order: Id, TensorL, LolliR, TensorR,
// LolliL) with memoization on canonicalized sequents.  Complete for this
// cut-free calculus; always terminates (every premise is smaller).
std::optional<RllProofPtr> prove_rll(const RllSequent& s);
bool rll_provable(const RllSequent& s);

// Independent replay: checks each node against the rule schemas using
// multiset bookkeeping only (ignores the stored assignments).
bool check_rll_proof(const RllProofPtr& p, const RllSequent& s);

// Mutual derivability.
bool rll_equivalent(const RllPtr& a, const RllPtr& b);

}  // namespace sylog
