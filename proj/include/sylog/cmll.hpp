// Classical multiplicative linear logic with units, in negation normal
// form: 1, bot, literals, tensor, par.  One-sided sequents "=> Gamma".
// CMLL proofs arise here only by translating RLL proofs; an independent
// replay checker validates them, and proof nets with a planarity test are
// read off the translated proofs.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sylog/rll.hpp"

namespace sylog {

struct CmllFormula;
using CmllPtr = std::shared_ptr<const CmllFormula>;

enum class CmllKind { One, Bot, PosAtom, NegAtom, Tensor, Par };

struct CmllFormula {
  CmllKind kind;
  std::string name;  // atoms only
  // Position of this atom occurrence among the left-to-right leaves of the
  // root sequent of a translated proof; -1 when not tracked.
  int occ = -1;
  CmllPtr left, right;
};

CmllPtr cmll_one();
CmllPtr cmll_bot();
CmllPtr cmll_pos(const std::string& name, int occ = -1);
CmllPtr cmll_neg_atom(const std::string& name, int occ = -1);
CmllPtr cmll_tensor(CmllPtr a, CmllPtr b);
CmllPtr cmll_par(CmllPtr a, CmllPtr b);

// Structural equality, ignoring occurrence tags.
bool cmll_equal(const CmllPtr& a, const CmllPtr& b);

// Linear negation via the De Morgan laws (an involution).
CmllPtr cmll_lneg(const CmllPtr& f);

// Rendering: "1", "bot", "S", "S^", "A * B", "A | B"; nested binary
// subformulas are parenthesized.
std::string render_cmll(const CmllPtr& f);
std::string render_cmll_sequent(const std::vector<CmllPtr>& concls);

// Raw polarized translations of RLL formulas (the component orders match
// the source they implement; see src/cmll.cpp).  `translate_formula`
// additionally unit-normalizes: 1 (x) X, X (x) 1, bot | X, X | bot all
// reduce to X.
CmllPtr raw_positive(const RllPtr& f);
CmllPtr raw_negative(const RllPtr& f);
CmllPtr unit_normalize(const CmllPtr& f);
CmllPtr translate_formula(const RllPtr& f, bool positive);

// "Gamma |- C" becomes "=> Gamma^-, C^+", in order, unit-normalized.
std::vector<CmllPtr> translate_sequent(const RllSequent& s);

enum class CmllRule { Identity, OneR, FalseR, Times, Parr };

struct CmllProof;
using CmllProofPtr = std::shared_ptr<const CmllProof>;

struct CmllProof {
  CmllRule rule;
  std::vector<CmllPtr> concls;  // ordered; provability reads it as a multiset
  std::vector<CmllProofPtr> children;
};

// Translates an RLL proof of Gamma |- C into a CMLL proof of
// => Gamma^-, C^+ (raw, un-normalized forms; unit-normalizing the root
// recovers translate_sequent).  Identities are eta-expanded down to
// atoms, so every Identity leaf links exactly two dual literals; atom
// occurrences are tagged with their root positions for net building.
CmllProofPtr translate_proof(const RllProofPtr& p);
// Same, but the root conclusions (and hence atom positions) follow the
// context order of `display`, which must be the proved sequent up to
// context permutation.  Search may reorder contexts; this restores the
// order the caller wrote.
CmllProofPtr translate_proof(const RllProofPtr& p, const RllSequent& display);

// Independent replay of the five rules, multiset-based.
bool check_cmll_proof(const CmllProofPtr& p);
// Replay against an expected conclusion sequent (multiset comparison).
bool check_cmll_proof(const CmllProofPtr& p,
                      const std::vector<CmllPtr>& concls);

struct AxiomLink {
  int a = -1, b = -1;  // atom positions, a < b
};

struct ProofNet {
  std::vector<CmllPtr> conclusions;       // raw, ordered
  std::vector<CmllPtr> atoms;             // literal occurrences, by position
  std::vector<AxiomLink> links;
  std::vector<std::pair<int, int>> crossings;  // link index pairs
  bool planar = true;
};

// Thrown by build_net on an Identity leaf whose conclusions are not dual
// literals.
struct NonAtomicIdentity : std::runtime_error {
  NonAtomicIdentity() : std::runtime_error(
      "proof net: identity leaf with non-atomic conclusions") {}
};

// Reads the net off a translated proof: conclusions and atom order come
// from the root sequent, axiom links from the Identity leaves.  Planarity
// = no two links interleave in the cyclic conclusion order.
ProofNet build_net(const CmllProofPtr& p);

// Convenience: prove in RLL, translate, build.  std::nullopt if the RLL
// sequent is unprovable.
std::optional<ProofNet> net_for(const RllSequent& s);

// Graphviz rendering of a net (formula trees + axiom arcs).
std::string net_to_dot(const ProofNet& net);

}  // namespace sylog
