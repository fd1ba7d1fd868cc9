#include "sylog/syll.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace sylog {

std::string system_name(SystemLevel s) {
  switch (s) {
    case SystemLevel::Syll: return "syll";
    case SystemLevel::SyllPlus: return "syll+";
    case SystemLevel::SyllPlusPlus: return "syll++";
    case SystemLevel::SyllStar: return "syll+*";
  }
  return "?";
}

std::optional<SystemLevel> system_from_name(const std::string& name) {
  if (name == "syll") return SystemLevel::Syll;
  if (name == "syll+") return SystemLevel::SyllPlus;
  if (name == "syll++") return SystemLevel::SyllPlusPlus;
  if (name == "syll+*") return SystemLevel::SyllStar;
  return std::nullopt;
}

bool has_existential_axiom(SystemLevel s) { return s != SystemLevel::Syll; }
bool has_identity_axiom(SystemLevel s) {
  return s == SystemLevel::SyllPlusPlus;
}
bool has_new_diagram_rules(SystemLevel s) { return s == SystemLevel::SyllStar; }

SyllSequent parse_syll_sequent(const std::string& text) {
  const size_t t = text.find("|=");
  if (t == std::string::npos)
    throw ParseError("diagram sequent: missing |= in \"" + text + "\"");
  SyllSequent s;
  std::string lhs = text.substr(0, t);
  size_t start = 0;
  auto flush = [&](size_t end) {
    std::string part = lhs.substr(start, end - start);
    if (part.find_first_not_of(" \t") != std::string::npos)
      s.premises.push_back(parse_diagram(part));
  };
  for (size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] == ',') {
      flush(i);
      start = i + 1;
    }
  flush(lhs.size());
  s.goal = parse_diagram(text.substr(t + 2));
  return s;
}

std::string render_syll_sequent(const SyllSequent& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.premises.size(); ++i) {
    if (i) out << ", ";
    out << render_diagram(s.premises[i]);
  }
  if (!s.premises.empty()) out << ' ';
  out << "|= " << render_diagram(s.goal);
  return out.str();
}

// --------------------------------------------------------- shape detection

namespace {

// Interior segment string of a diagram with exactly two variable
// occurrences, or "" otherwise.
std::string two_var_interior(const Diagram& d) {
  int vars = 0;
  for (const auto& t : d.toks)
    if (t.kind == Tok::Var) ++vars;
  if (vars != 2) return "";
  Diagram seg;
  seg.toks.assign(d.toks.begin() + 1, d.toks.end() - 1);
  return render_diagram(seg);
}

std::vector<std::string> seq_variables(const SyllSequent& s) {
  std::vector<std::string> vars;
  auto add = [&](const Diagram& d) {
    for (const auto& v : variables(d))
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        vars.push_back(v);
  };
  for (const auto& p : s.premises) add(p);
  add(s.goal);
  std::sort(vars.begin(), vars.end());
  return vars;
}

Diagram exist_axiom_diagram(const std::string& v) {
  return Diagram{{var_tok(v), arrow_tok(false), bullet_tok(), arrow_tok(true),
                  var_tok(v)}};
}
Diagram ident_axiom_diagram(const std::string& v) {
  return Diagram{{var_tok(v), arrow_tok(true), var_tok(v)}};
}

}  // namespace

bool reversible_classic(const Diagram& d) {
  static const std::set<std::string> shapes = {
      "->", "<-",                              // X -> Y and mirror
      "-> * <-",                               // self-mirrored
      "<- * ->",                               // self-mirrored
      "<- * -> * <-", "-> * <- * ->",          // X <- * -> * <- Y and mirror
  };
  return shapes.count(two_var_interior(d)) > 0;
}

bool reversible_new(const Diagram& d) {
  static const std::set<std::string> shapes = {
      "-> * ->", "<- * <-",                    // X -> * -> Y and mirror
      "-> * -> * <-", "-> * <- * <-",          // X -> * -> * <- Y and mirror
      "-> * <- * ->", "<- * -> * <-",          // X -> * <- * -> Y and mirror
      "-> * <- * -> * <-",                     // self-mirrored
  };
  return shapes.count(two_var_interior(d)) > 0;
}

// ------------------------------------------------------------- apply_rule

namespace {

bool occurs_in_sequent(const std::string& v, const SyllSequent& s) {
  const auto vars = seq_variables(s);
  return std::find(vars.begin(), vars.end(), v) != vars.end();
}

// Locates the occurrence of `var` usable by the given rewrite, starting at
// `pos` if pos >= 0, otherwise at the first usable occurrence.
int find_occurrence(const Diagram& d, const SyllRule& r) {
  const auto& ts = d.toks;
  const int n = static_cast<int>(ts.size());
  for (int i = 0; i < n; ++i) {
    if (ts[i].kind != Tok::Var || ts[i].name != r.var) continue;
    if (r.pos >= 0 && r.pos != i) continue;
    switch (r.kind) {
      case SyllRuleKind::DeleteRight:
        if (i > 0 && i + 1 < n && ts[i - 1].kind == Tok::ArrowR &&
            ts[i + 1].kind == Tok::ArrowR) {
          // Composing through a variable whose outgoing side continues as
          // "-> * ->" would silently negate the far end (it reads "every
          // non-X is ..."), which the target calculus cannot justify; such
          // eliminations are unsound, so the occurrence is not eligible.
          if (i + 3 < n && ts[i + 2].kind == Tok::Bullet &&
              ts[i + 3].kind == Tok::ArrowR)
            break;
          return i;
        }
        break;
      case SyllRuleKind::DeleteLeft:
        if (i > 0 && i + 1 < n && ts[i - 1].kind == Tok::ArrowL &&
            ts[i + 1].kind == Tok::ArrowL) {
          if (i >= 3 && ts[i - 2].kind == Tok::Bullet &&
              ts[i - 3].kind == Tok::ArrowL)
            break;
          return i;
        }
        break;
      case SyllRuleKind::Star:
        if (i >= 2 && i + 2 < n && ts[i - 2].kind == Tok::Bullet &&
            ts[i - 1].kind == Tok::ArrowL && ts[i + 1].kind == Tok::ArrowR &&
            ts[i + 2].kind == Tok::Bullet)
          return i;
        break;
      default: break;
    }
  }
  return -1;
}

}  // namespace

std::optional<Diagram> apply_rule(const SyllRule& rule,
                                  const std::vector<Diagram>& inputs,
                                  SystemLevel system, const SyllSequent& seq) {
  switch (rule.kind) {
    case SyllRuleKind::Premise: {
      if (!inputs.empty() || rule.index < 0 ||
          rule.index >= static_cast<int>(seq.premises.size()))
        return std::nullopt;
      return seq.premises[rule.index];
    }
    case SyllRuleKind::ExistAxiom: {
      if (!inputs.empty() || !has_existential_axiom(system) ||
          !occurs_in_sequent(rule.var, seq))
        return std::nullopt;
      return exist_axiom_diagram(rule.var);
    }
    case SyllRuleKind::IdentAxiom: {
      if (!inputs.empty() || !has_identity_axiom(system) ||
          !occurs_in_sequent(rule.var, seq))
        return std::nullopt;
      return ident_axiom_diagram(rule.var);
    }
    case SyllRuleKind::Reverse: {
      if (inputs.size() != 1 || !reversible_classic(inputs[0]))
        return std::nullopt;
      return reversal(inputs[0]);
    }
    case SyllRuleKind::ReverseNew: {
      if (inputs.size() != 1 || !has_new_diagram_rules(system) ||
          !reversible_new(inputs[0]))
        return std::nullopt;
      return reversal(inputs[0]);
    }
    case SyllRuleKind::Concat: {
      if (inputs.size() != 2) return std::nullopt;
      const auto& a = inputs[0].toks;
      const auto& b = inputs[1].toks;
      if (a.empty() || b.empty() || a.back() != b.front())
        return std::nullopt;
      Diagram out{a};
      out.toks.insert(out.toks.end(), b.begin() + 1, b.end());
      return out;
    }
    case SyllRuleKind::DeleteRight:
    case SyllRuleKind::DeleteLeft: {
      if (inputs.size() != 1) return std::nullopt;
      const int i = find_occurrence(inputs[0], rule);
      if (i < 0) return std::nullopt;
      Diagram out = inputs[0];
      // Drop the variable and one of its two like-directed arrows.
      out.toks.erase(out.toks.begin() + i, out.toks.begin() + i + 2);
      // Merging the two flanking interiors can exceed the two-bullet
      // maximum a variable-to-variable stretch may carry; every proof
      // step must stay inside the inductively generated diagrams.
      if (!is_well_formed(out)) return std::nullopt;
      return out;
    }
    case SyllRuleKind::Star: {
      if (inputs.size() != 1 || !has_new_diagram_rules(system))
        return std::nullopt;
      const int i = find_occurrence(inputs[0], rule);
      if (i < 0) return std::nullopt;
      Diagram out = inputs[0];
      // "* <- X -> *"  becomes  "X".
      out.toks.erase(out.toks.begin() + i + 1, out.toks.begin() + i + 3);
      out.toks.erase(out.toks.begin() + i - 2, out.toks.begin() + i);
      return out;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- precheck

namespace {

int premise_bullets(const SyllSequent& s) {
  int b = 0;
  for (const auto& p : s.premises) b += bullet_count(p);
  return b;
}

// Can goal_bullets be reached from cur_bullets with at most max_exist
// existential injections (+1 each) and, when star holds, any number of
// Star steps (-2 each)?
bool bullets_reachable(int cur_bullets, int goal_bullets, int max_exist,
                       bool star) {
  for (int m = 0; m <= max_exist; ++m) {
    const int diff = cur_bullets + m - goal_bullets;
    if (diff == 0) return true;
    if (star && diff > 0 && diff % 2 == 0) return true;
  }
  return false;
}

}  // namespace

bool reject_precheck(const SyllSequent& s, SystemLevel system,
                     const AxiomBudget& budget) {
  const int nvars = static_cast<int>(seq_variables(s).size());
  const int max_exist =
      has_existential_axiom(system) ? budget.exist_per_var * nvars : 0;
  return !bullets_reachable(premise_bullets(s), bullet_count(s.goal),
                            max_exist, has_new_diagram_rules(system));
}

// ------------------------------------------------------------------ search

namespace {

struct SearchState {
  std::vector<SyllProofPtr> items;
  // Remaining injections per variable, aligned with the sequent's sorted
  // variable list.
  std::vector<int> exist_left;
  std::vector<int> ident_left;
};

std::string state_key(const SearchState& st) {
  std::vector<std::string> renders;
  renders.reserve(st.items.size());
  for (const auto& it : st.items) renders.push_back(render_diagram(it->conclusion));
  std::sort(renders.begin(), renders.end());
  std::ostringstream out;
  for (const auto& r : renders) out << r << ';';
  out << '|';
  for (int e : st.exist_left) out << e;
  out << '|';
  for (int e : st.ident_left) out << e;
  return out.str();
}

SyllProofPtr leaf(SyllRule rule, Diagram d) {
  auto p = std::make_shared<SyllProof>();
  p->rule = std::move(rule);
  p->conclusion = std::move(d);
  return p;
}

SyllProofPtr node(SyllRule rule, Diagram d, std::vector<SyllProofPtr> kids) {
  auto p = std::make_shared<SyllProof>();
  p->rule = std::move(rule);
  p->conclusion = std::move(d);
  p->children = std::move(kids);
  return p;
}

}  // namespace

std::optional<SyllProofPtr> prove(const SyllSequent& s, SystemLevel system,
                                  const AxiomBudget& budget) {
  if (reject_precheck(s, system, budget)) return std::nullopt;

  const std::vector<std::string> vars = seq_variables(s);
  const bool star = has_new_diagram_rules(system);
  const int goal_bullets = bullet_count(s.goal);
  const std::string goal_render = render_diagram(s.goal);
  const Diagram goal_rev = reversal(s.goal);
  const std::string goal_rev_render = render_diagram(goal_rev);

  // Is the final state a proof of the goal?  Accepts the mirror image when
  // a reversal rule can bring it back to the goal.
  auto match_goal = [&](const SyllProofPtr& item) -> std::optional<SyllProofPtr> {
    const std::string r = render_diagram(item->conclusion);
    if (r == goal_render) return item;
    if (r == goal_rev_render) {
      if (reversible_classic(item->conclusion))
        return node({SyllRuleKind::Reverse}, s.goal, {item});
      if (star && reversible_new(item->conclusion))
        return node({SyllRuleKind::ReverseNew}, s.goal, {item});
    }
    return std::nullopt;
  };

  SearchState init;
  for (size_t i = 0; i < s.premises.size(); ++i)
    init.items.push_back(leaf({SyllRuleKind::Premise, static_cast<int>(i)},
                              s.premises[i]));
  init.exist_left.assign(
      vars.size(), has_existential_axiom(system) ? budget.exist_per_var : 0);
  init.ident_left.assign(
      vars.size(), has_identity_axiom(system) ? budget.ident_per_var : 0);

  std::deque<SearchState> queue;
  std::set<std::string> visited;
  auto push = [&](SearchState st) {
    // Bullet-count pruning, as in reject_precheck but per state.
    int cur = 0;
    for (const auto& it : st.items) cur += bullet_count(it->conclusion);
    int rem = 0;
    for (int e : st.exist_left) rem += e;
    if (!bullets_reachable(cur, goal_bullets, rem, star)) return;
    std::string key = state_key(st);
    if (visited.insert(std::move(key)).second) queue.push_back(std::move(st));
  };
  push(std::move(init));

  while (!queue.empty()) {
    SearchState st = std::move(queue.front());
    queue.pop_front();

    if (st.items.size() == 1)
      if (auto done = match_goal(st.items[0])) return done;

    const size_t n = st.items.size();

    // Reversal moves.
    for (size_t i = 0; i < n; ++i) {
      const Diagram& d = st.items[i]->conclusion;
      SyllRuleKind kind;
      if (reversible_classic(d))
        kind = SyllRuleKind::Reverse;
      else if (star && reversible_new(d))
        kind = SyllRuleKind::ReverseNew;
      else
        continue;
      Diagram rd = reversal(d);
      if (rd == d) continue;
      SearchState next = st;
      next.items[i] = node({kind}, rd, {st.items[i]});
      push(std::move(next));
    }

    // Interior rewrites: deletions and Star.
    for (size_t i = 0; i < n; ++i) {
      const Diagram& d = st.items[i]->conclusion;
      const auto& ts = d.toks;
      for (int p = 1; p + 1 < static_cast<int>(ts.size()); ++p) {
        if (ts[p].kind != Tok::Var) continue;
        std::vector<SyllRuleKind> kinds;
        if (ts[p - 1].kind == Tok::ArrowR && ts[p + 1].kind == Tok::ArrowR)
          kinds.push_back(SyllRuleKind::DeleteRight);
        if (ts[p - 1].kind == Tok::ArrowL && ts[p + 1].kind == Tok::ArrowL)
          kinds.push_back(SyllRuleKind::DeleteLeft);
        if (star && p >= 2 && p + 2 < static_cast<int>(ts.size()) &&
            ts[p - 2].kind == Tok::Bullet && ts[p - 1].kind == Tok::ArrowL &&
            ts[p + 1].kind == Tok::ArrowR && ts[p + 2].kind == Tok::Bullet)
          kinds.push_back(SyllRuleKind::Star);
        for (SyllRuleKind kind : kinds) {
          SyllRule rule{kind, -1, ts[p].name, p};
          auto out = apply_rule(rule, {d}, system, s);
          if (!out) continue;
          SearchState next = st;
          next.items[i] = node(rule, *out, {st.items[i]});
          push(std::move(next));
        }
      }
    }

    // Concatenations.
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        auto out = apply_rule({SyllRuleKind::Concat},
                              {st.items[i]->conclusion,
                               st.items[j]->conclusion},
                              system, s);
        if (!out) continue;
        SearchState next;
        next.exist_left = st.exist_left;
        next.ident_left = st.ident_left;
        for (size_t k = 0; k < n; ++k)
          if (k != i && k != j) next.items.push_back(st.items[k]);
        next.items.push_back(node({SyllRuleKind::Concat}, *out,
                                  {st.items[i], st.items[j]}));
        push(std::move(next));
      }

    // Axiom injections.
    for (size_t v = 0; v < vars.size(); ++v) {
      if (st.exist_left[v] > 0) {
        SearchState next = st;
        --next.exist_left[v];
        next.items.push_back(leaf({SyllRuleKind::ExistAxiom, -1, vars[v]},
                                  exist_axiom_diagram(vars[v])));
        push(std::move(next));
      }
      if (st.ident_left[v] > 0) {
        SearchState next = st;
        --next.ident_left[v];
        next.items.push_back(leaf({SyllRuleKind::IdentAxiom, -1, vars[v]},
                                  ident_axiom_diagram(vars[v])));
        push(std::move(next));
      }
    }
  }
  return std::nullopt;
}

bool syll_provable(const SyllSequent& s, SystemLevel system,
                   const AxiomBudget& budget) {
  return prove(s, system, budget).has_value();
}

// ------------------------------------------------------------------ checker

namespace {

bool check_node_syll(const SyllProofPtr& p, const SyllSequent& s,
                     SystemLevel system, std::vector<int>& premises_used) {
  if (!p) return false;
  if (p->rule.kind == SyllRuleKind::Premise) {
    if (!p->children.empty()) return false;
    premises_used.push_back(p->rule.index);
  }
  std::vector<Diagram> inputs;
  for (const auto& c : p->children) {
    if (!check_node_syll(c, s, system, premises_used)) return false;
    inputs.push_back(c->conclusion);
  }
  auto out = apply_rule(p->rule, inputs, system, s);
  return out && *out == p->conclusion;
}

}  // namespace

bool check_proof(const SyllProofPtr& p, const SyllSequent& s,
                 SystemLevel system) {
  std::vector<int> used;
  if (!check_node_syll(p, s, system, used)) return false;
  if (!(p->conclusion == s.goal)) return false;
  // Linearity: each premise is a leaf exactly once.
  std::sort(used.begin(), used.end());
  std::vector<int> want(s.premises.size());
  for (size_t i = 0; i < want.size(); ++i) want[i] = static_cast<int>(i);
  return used == want;
}

}  // namespace sylog
