#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

#include "sylog/cmll.hpp"
#include "sylog/serialize.hpp"
#include "sylog/syllogistics.hpp"

using namespace sylog;

namespace {

std::string links_str(const ProofNet& n) {
  std::string out;
  for (const auto& l : n.links)
    out += "(" + std::to_string(l.a) + "," + std::to_string(l.b) + ")";
  return out;
}

ProofNet net_of(const std::string& syllogism) {
  const RllSequent s = to_rll_sequent(parse_syllogism(syllogism));
  auto n = net_for(s);
  REQUIRE(n.has_value());
  return *n;
}

}  // namespace

TEST_CASE("linear negation is an involution and rendering nests") {
  const CmllPtr f = cmll_par(cmll_tensor(cmll_pos("A"), cmll_neg_atom("B")),
                             cmll_one());
  CHECK(render_cmll(f) == "(A * B^) | 1");
  CHECK(render_cmll(cmll_lneg(f)) == "(A^ | B) * bot");
  CHECK(cmll_equal(cmll_lneg(cmll_lneg(f)), f));
  CHECK(cmll_equal(cmll_lneg(cmll_one()), cmll_bot()));
}

TEST_CASE("unit normalization strips translated units") {
  // bot = bot -o bot translates with units that normalize away.
  const RllPtr b = rll_lolli(rll_atom("bot"), rll_atom("bot"));
  (void)b;
  const CmllPtr raw = cmll_par(cmll_bot(), cmll_tensor(cmll_one(),
                                                       cmll_pos("A")));
  CHECK(render_cmll(unit_normalize(raw)) == "A");
}

TEST_CASE("sequent translation of the first-figure premises") {
  const RllSequent s =
      to_rll_sequent(parse_syllogism("A(M,P); A(S,M) / A(S,P)"));
  CHECK(render_cmll_sequent(translate_sequent(s)) ==
        "=> P^ * M, M^ * S, S^ | P");
}

TEST_CASE("the universal-universal net is planar") {
  const ProofNet n = net_of("A(M,P); A(S,M) / A(S,P)");
  CHECK(render_cmll_sequent(n.conclusions) == "=> P^ * M, M^ * S, S^ | P");
  CHECK(n.atoms.size() == 6);
  CHECK(links_str(n) == "(0,5)(1,2)(3,4)");
  CHECK(n.planar);
  CHECK(n.crossings.empty());
}

TEST_CASE("a fourth-figure particular net has a crossing") {
  const ProofNet n = net_of("A(P,m); I(M,S) / I(S,p)");
  // Net conclusions are the raw translations; the normalized display
  // string is what the reports print.
  const RllSequent rs =
      to_rll_sequent(parse_syllogism("A(P,m); I(M,S) / I(S,p)"));
  CHECK(render_cmll_sequent(translate_sequent(rs)) ==
        "=> M * P, S^ | M^, S * P^");
  CHECK(links_str(n) == "(0,3)(1,5)(2,4)");
  CHECK_FALSE(n.planar);
  CHECK(n.crossings.size() == 2);
}

TEST_CASE("contradiction nets are the two-literal link") {
  const RllSequent s = parse_rll_sequent("A * A^ |- bot");
  auto n = net_for(s);
  REQUIRE(n.has_value());
  CHECK(n->atoms.size() == 2);
  CHECK(links_str(*n) == "(0,1)");
  CHECK(n->planar);
}

TEST_CASE("translated proofs replay and match the display order") {
  const RllSequent s =
      to_rll_sequent(parse_syllogism("A(M,p); A(S,M) / A(S,p)"));
  auto p = prove_rll(s);
  REQUIRE(p.has_value());
  const CmllProofPtr c = translate_proof(*p, s);
  CHECK(check_cmll_proof(c));
  // The root is the raw translation of the display sequent.
  std::vector<CmllPtr> raw;
  for (const auto& g : s.ctx) raw.push_back(raw_negative(g));
  raw.push_back(raw_positive(s.concl));
  CHECK(check_cmll_proof(c, raw));
  // Normalizing the root recovers translate_sequent.
  std::vector<CmllPtr> norm;
  for (const auto& f : c->concls) norm.push_back(unit_normalize(f));
  const auto expect = translate_sequent(s);
  REQUIRE(norm.size() == expect.size());
  for (size_t i = 0; i < norm.size(); ++i)
    CHECK(cmll_equal(norm[i], expect[i]));
}

TEST_CASE("the replay checker rejects tampered proofs") {
  auto p = prove_rll(parse_rll_sequent("A, A -o B |- B"));
  REQUIRE(p.has_value());
  const CmllProofPtr c = translate_proof(*p);
  CHECK(check_cmll_proof(c));
  auto broken = std::make_shared<CmllProof>(*c);
  broken->concls.push_back(cmll_pos("Z"));
  CHECK_FALSE(check_cmll_proof(broken));
}

TEST_CASE("net building insists on literal identity leaves") {
  const CmllPtr big = cmll_tensor(cmll_pos("A", 0), cmll_pos("B", 1));
  auto leaf = std::make_shared<CmllProof>(
      CmllProof{CmllRule::Identity, {cmll_lneg(big), big}, {}});
  CHECK_THROWS_AS(build_net(leaf), NonAtomicIdentity);
}

TEST_CASE("dot output names every link") {
  const ProofNet n = net_of("A(M,P); A(S,M) / A(S,P)");
  const std::string dot = net_to_dot(n);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("proof and net serialization round-trips") {
  const SyllSequent ss = parse_syll_sequent("M -> P, S -> M |= S -> P");
  auto sp = prove(ss, SystemLevel::Syll);
  REQUIRE(sp.has_value());
  auto sp2 = syll_proof_from_json(syll_proof_to_json(*sp));
  CHECK(check_proof(sp2, ss, SystemLevel::Syll));

  const RllSequent rs = parse_rll_sequent("M -o P, S -o M |- S -o P");
  auto rp = prove_rll(rs);
  REQUIRE(rp.has_value());
  auto rp2 = rll_proof_from_json(rll_proof_to_json(*rp));
  CHECK(check_rll_proof(rp2, rs));

  const CmllProofPtr c = translate_proof(*rp, rs);
  auto c2 = cmll_proof_from_json(cmll_proof_to_json(c));
  CHECK(check_cmll_proof(c2, c->concls));
  const ProofNet n1 = build_net(c);
  const ProofNet n2 = build_net(c2);
  CHECK(net_to_json(n1) == net_to_json(n2));
  CHECK(net_to_json(n1)["planar"] == true);
}
