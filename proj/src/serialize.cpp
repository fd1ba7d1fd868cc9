#include "sylog/serialize.hpp"

#include <stdexcept>

namespace sylog {

using nlohmann::json;

namespace {

const char* syll_rule_name(SyllRuleKind k) {
  switch (k) {
    case SyllRuleKind::Premise: return "premise";
    case SyllRuleKind::ExistAxiom: return "exist_axiom";
    case SyllRuleKind::IdentAxiom: return "ident_axiom";
    case SyllRuleKind::Reverse: return "reverse";
    case SyllRuleKind::ReverseNew: return "reverse_new";
    case SyllRuleKind::Concat: return "concat";
    case SyllRuleKind::DeleteRight: return "delete_right";
    case SyllRuleKind::DeleteLeft: return "delete_left";
    case SyllRuleKind::Star: return "star";
  }
  return "?";
}

SyllRuleKind syll_rule_from_name(const std::string& s) {
  for (SyllRuleKind k :
       {SyllRuleKind::Premise, SyllRuleKind::ExistAxiom,
        SyllRuleKind::IdentAxiom, SyllRuleKind::Reverse,
        SyllRuleKind::ReverseNew, SyllRuleKind::Concat,
        SyllRuleKind::DeleteRight, SyllRuleKind::DeleteLeft,
        SyllRuleKind::Star})
    if (s == syll_rule_name(k)) return k;
  throw std::runtime_error("unknown diagram rule: " + s);
}

const char* rll_rule_name(RllRule r) {
  switch (r) {
    case RllRule::Id: return "id";
    case RllRule::TensorL: return "tensor_l";
    case RllRule::TensorR: return "tensor_r";
    case RllRule::LolliL: return "lolli_l";
    case RllRule::LolliR: return "lolli_r";
  }
  return "?";
}

RllRule rll_rule_from_name(const std::string& s) {
  for (RllRule r : {RllRule::Id, RllRule::TensorL, RllRule::TensorR,
                    RllRule::LolliL, RllRule::LolliR})
    if (s == rll_rule_name(r)) return r;
  throw std::runtime_error("unknown sequent rule: " + s);
}

const char* cmll_rule_name(CmllRule r) {
  switch (r) {
    case CmllRule::Identity: return "identity";
    case CmllRule::OneR: return "one";
    case CmllRule::FalseR: return "false";
    case CmllRule::Times: return "times";
    case CmllRule::Parr: return "par";
  }
  return "?";
}

CmllRule cmll_rule_from_name(const std::string& s) {
  for (CmllRule r : {CmllRule::Identity, CmllRule::OneR, CmllRule::FalseR,
                     CmllRule::Times, CmllRule::Parr})
    if (s == cmll_rule_name(r)) return r;
  throw std::runtime_error("unknown one-sided rule: " + s);
}

}  // namespace

json syll_proof_to_json(const SyllProofPtr& p) {
  json j;
  j["rule"] = syll_rule_name(p->rule.kind);
  if (p->rule.index >= 0) j["index"] = p->rule.index;
  if (!p->rule.var.empty()) j["var"] = p->rule.var;
  if (p->rule.pos >= 0) j["pos"] = p->rule.pos;
  j["conclusion"] = render_diagram(p->conclusion);
  json kids = json::array();
  for (const auto& c : p->children) kids.push_back(syll_proof_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

SyllProofPtr syll_proof_from_json(const json& j) {
  auto p = std::make_shared<SyllProof>();
  p->rule.kind = syll_rule_from_name(j.at("rule").get<std::string>());
  p->rule.index = j.value("index", -1);
  p->rule.var = j.value("var", std::string());
  p->rule.pos = j.value("pos", -1);
  p->conclusion = parse_diagram(j.at("conclusion").get<std::string>());
  for (const auto& c : j.at("children"))
    p->children.push_back(syll_proof_from_json(c));
  return p;
}

json rll_proof_to_json(const RllProofPtr& p) {
  json j;
  j["rule"] = rll_rule_name(p->rule);
  j["sequent"] = render_rll_sequent(p->seq);
  if (p->principal >= 0) j["principal"] = p->principal;
  json kids = json::array();
  for (const auto& c : p->children) kids.push_back(rll_proof_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

RllProofPtr rll_proof_from_json(const json& j) {
  auto p = std::make_shared<RllProof>();
  p->rule = rll_rule_from_name(j.at("rule").get<std::string>());
  p->seq = parse_rll_sequent(j.at("sequent").get<std::string>());
  p->principal = j.value("principal", -1);
  for (const auto& c : j.at("children"))
    p->children.push_back(rll_proof_from_json(c));
  return p;
}

json cmll_formula_to_json(const CmllPtr& f) {
  json j;
  switch (f->kind) {
    case CmllKind::One: j["kind"] = "one"; break;
    case CmllKind::Bot: j["kind"] = "bot"; break;
    case CmllKind::PosAtom:
    case CmllKind::NegAtom:
      j["kind"] = f->kind == CmllKind::PosAtom ? "pos" : "neg";
      j["name"] = f->name;
      if (f->occ >= 0) j["occ"] = f->occ;
      break;
    case CmllKind::Tensor:
    case CmllKind::Par:
      j["kind"] = f->kind == CmllKind::Tensor ? "tensor" : "par";
      j["left"] = cmll_formula_to_json(f->left);
      j["right"] = cmll_formula_to_json(f->right);
      break;
  }
  return j;
}

CmllPtr cmll_formula_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "one") return cmll_one();
  if (kind == "bot") return cmll_bot();
  if (kind == "pos")
    return cmll_pos(j.at("name").get<std::string>(), j.value("occ", -1));
  if (kind == "neg")
    return cmll_neg_atom(j.at("name").get<std::string>(), j.value("occ", -1));
  if (kind == "tensor")
    return cmll_tensor(cmll_formula_from_json(j.at("left")),
                       cmll_formula_from_json(j.at("right")));
  if (kind == "par")
    return cmll_par(cmll_formula_from_json(j.at("left")),
                    cmll_formula_from_json(j.at("right")));
  throw std::runtime_error("unknown formula kind: " + kind);
}

json cmll_proof_to_json(const CmllProofPtr& p) {
  json j;
  j["rule"] = cmll_rule_name(p->rule);
  json concls = json::array();
  for (const auto& f : p->concls) concls.push_back(cmll_formula_to_json(f));
  j["conclusions"] = std::move(concls);
  json kids = json::array();
  for (const auto& c : p->children) kids.push_back(cmll_proof_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

CmllProofPtr cmll_proof_from_json(const json& j) {
  auto p = std::make_shared<CmllProof>();
  p->rule = cmll_rule_from_name(j.at("rule").get<std::string>());
  for (const auto& f : j.at("conclusions"))
    p->concls.push_back(cmll_formula_from_json(f));
  for (const auto& c : j.at("children"))
    p->children.push_back(cmll_proof_from_json(c));
  return p;
}

json net_to_json(const ProofNet& net) {
  json j;
  json concls = json::array();
  for (const auto& f : net.conclusions)
    concls.push_back(render_cmll(unit_normalize(f)));
  j["sequent"] = std::move(concls);
  json atoms = json::array();
  for (const auto& a : net.atoms) atoms.push_back(render_cmll(a));
  j["atoms"] = std::move(atoms);
  json links = json::array();
  for (const auto& l : net.links) links.push_back({l.a, l.b});
  j["links"] = std::move(links);
  json crossings = json::array();
  for (const auto& c : net.crossings) crossings.push_back({c.first, c.second});
  j["crossings"] = std::move(crossings);
  j["planar"] = net.planar;
  return j;
}

}  // namespace sylog
