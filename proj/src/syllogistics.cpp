#include "sylog/syllogistics.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sylog {

SignedTerm parse_term(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("term: empty");
  SignedTerm out;
  out.complemented = std::islower(static_cast<unsigned char>(t[0])) != 0;
  out.var = t;
  out.var[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  return out;
}

std::string render_term(const SignedTerm& t) {
  std::string s = t.var;
  if (t.complemented && !s.empty())
    s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return s;
}

CategoricalProp parse_prop(const std::string& text) {
  // Shape: Q(subject,predicate) with Q in {A,I}.
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip();
  if (i >= text.size() || (text[i] != 'A' && text[i] != 'I'))
    throw ParseError("proposition: expected A(...) or I(...) in \"" + text +
                     "\"");
  CategoricalProp p;
  p.q = text[i] == 'A' ? Quantity::Universal : Quantity::Particular;
  ++i;
  skip();
  if (i >= text.size() || text[i] != '(')
    throw ParseError("proposition: missing '(' in \"" + text + "\"");
  const size_t comma = text.find(',', i);
  const size_t close = text.find(')', i);
  if (comma == std::string::npos || close == std::string::npos || comma > close)
    throw ParseError("proposition: malformed argument list in \"" + text +
                     "\"");
  p.subject = parse_term(text.substr(i + 1, comma - i - 1));
  p.predicate = parse_term(text.substr(comma + 1, close - comma - 1));
  if (text.find_first_not_of(" \t", close + 1) != std::string::npos)
    throw ParseError("proposition: trailing input in \"" + text + "\"");
  return p;
}

std::string render_prop(const CategoricalProp& p) {
  return std::string(p.q == Quantity::Universal ? "A" : "I") + "(" +
         render_term(p.subject) + "," + render_term(p.predicate) + ")";
}

RllPtr term_formula(const SignedTerm& t) {
  RllPtr a = rll_atom(t.var);
  return t.complemented ? rll_neg(a) : a;
}

RllPtr to_formula(const CategoricalProp& p) {
  RllPtr s = term_formula(p.subject);
  RllPtr o = term_formula(p.predicate);
  return p.q == Quantity::Universal ? rll_lolli(s, o) : rll_tensor(s, o);
}

Diagram to_diagram(const CategoricalProp& p) {
  // Complementing the subject prefixes "X -> *" for "X", complementing the
  // predicate suffixes "* <- Y" for "Y"; universals point the subject at
  // the predicate, particulars share a bullet witness.
  Diagram d;
  d.toks.push_back(var_tok(p.subject.var));
  if (p.q == Quantity::Universal) {
    d.toks.push_back(arrow_tok(true));
    if (p.subject.complemented) {
      d.toks.push_back(bullet_tok());
      d.toks.push_back(arrow_tok(true));
    }
  } else {
    if (p.subject.complemented) {
      d.toks.push_back(arrow_tok(true));
      d.toks.push_back(bullet_tok());
    }
    d.toks.push_back(arrow_tok(false));
    d.toks.push_back(bullet_tok());
    d.toks.push_back(arrow_tok(true));
  }
  if (p.predicate.complemented) {
    d.toks.push_back(bullet_tok());
    d.toks.push_back(arrow_tok(false));
  }
  d.toks.push_back(var_tok(p.predicate.var));
  return d;
}

Syllogism parse_syllogism(const std::string& text) {
  const size_t slash = text.find('/');
  if (slash == std::string::npos)
    throw ParseError("syllogism: missing '/' before the conclusion in \"" +
                     text + "\"");
  std::vector<std::string> parts;
  size_t start = 0;
  const std::string lhs = text.substr(0, slash);
  for (size_t i = 0; i <= lhs.size(); ++i)
    if (i == lhs.size() || lhs[i] == ';') {
      parts.push_back(lhs.substr(start, i - start));
      start = i + 1;
    }
  if (parts.size() != 2 && parts.size() != 3)
    throw ParseError("syllogism: expected two premises and an optional "
                     "import in \"" + text + "\"");
  Syllogism s;
  s.p1 = parse_prop(parts[0]);
  s.p2 = parse_prop(parts[1]);
  if (parts.size() == 3) s.import = parse_term(parts[2]);
  s.concl = parse_prop(text.substr(slash + 1));
  return s;
}

std::string render_syllogism(const Syllogism& s) {
  std::ostringstream out;
  out << render_prop(s.p1) << "; " << render_prop(s.p2);
  if (s.import) out << "; " << render_term(*s.import);
  out << " / " << render_prop(s.concl);
  return out.str();
}

bool consistent_complementation(const Syllogism& s) {
  std::map<std::string, bool> flag;
  for (const auto* p : {&s.p1, &s.p2, &s.concl})
    for (const auto* t : {&p->subject, &p->predicate}) {
      auto [it, fresh] = flag.try_emplace(t->var, t->complemented);
      if (!fresh && it->second != t->complemented) return false;
    }
  return true;
}

int figure_of(const Syllogism& s) {
  const bool m1_subject = s.p1.subject.var == "M";
  const bool m2_subject = s.p2.subject.var == "M";
  if (m1_subject && !m2_subject) return 1;
  if (!m1_subject && !m2_subject) return 2;
  if (m1_subject && m2_subject) return 3;
  return 4;
}

std::string mood_of(const Syllogism& s) {
  auto q = [](Quantity x) { return x == Quantity::Universal ? 'A' : 'I'; };
  std::string m;
  m += q(s.p1.q);
  m += q(s.p2.q);
  if (s.import) m += 'I';
  m += q(s.concl.q);
  return m;
}

SyllSequent to_syll_sequent(const Syllogism& s) {
  SyllSequent out;
  out.premises.push_back(to_diagram(s.p1));
  out.premises.push_back(to_diagram(s.p2));
  if (s.import)
    out.premises.push_back(
        to_diagram({Quantity::Particular, *s.import, *s.import}));
  out.goal = to_diagram(s.concl);
  return out;
}

RllSequent to_rll_sequent(const Syllogism& s) {
  RllSequent out;
  out.ctx.push_back(to_formula(s.p1));
  out.ctx.push_back(to_formula(s.p2));
  if (s.import)
    out.ctx.push_back(
        to_formula({Quantity::Particular, *s.import, *s.import}));
  out.concl = to_formula(s.concl);
  return out;
}

std::vector<Syllogism> enumerate_candidates(SyllogismKind kind,
                                            bool strengthened) {
  const bool dm = kind == SyllogismKind::DeMorgan;
  auto premise_forms = [&](const std::string& x, const std::string& y) {
    std::vector<CategoricalProp> out;
    for (int order = 0; order < 2; ++order)
      for (Quantity q : {Quantity::Universal, Quantity::Particular})
        for (int sc = 0; sc < (dm ? 2 : 1); ++sc)
          for (int pc = 0; pc < 2; ++pc) {
            const std::string& subj = order == 0 ? x : y;
            const std::string& pred = order == 0 ? y : x;
            out.push_back({q, {subj, sc != 0}, {pred, pc != 0}});
          }
    return out;
  };
  std::vector<CategoricalProp> concls;
  for (Quantity q : {Quantity::Universal, Quantity::Particular})
    for (int sc = 0; sc < (dm ? 2 : 1); ++sc)
      for (int pc = 0; pc < 2; ++pc)
        concls.push_back({q, {"S", sc != 0}, {"P", pc != 0}});
  std::vector<std::optional<SignedTerm>> imports;
  if (!strengthened) {
    imports.push_back(std::nullopt);
  } else {
    for (const std::string v : {"S", "M", "P"}) {
      imports.push_back(SignedTerm{v, false});
      if (dm) imports.push_back(SignedTerm{v, true});
    }
  }

  std::vector<Syllogism> out;
  for (const auto& p1 : premise_forms("M", "P"))
    for (const auto& p2 : premise_forms("S", "M"))
      for (const auto& c : concls)
        for (const auto& imp : imports) out.push_back({p1, p2, imp, c});
  return out;
}

SystemLevel default_system(SyllogismKind kind) {
  return kind == SyllogismKind::Traditional ? SystemLevel::SyllPlus
                                            : SystemLevel::SyllStar;
}

Verdict classify(const Syllogism& s, SystemLevel system) {
  // Imports must be used as premises here; no axiom injections.
  const AxiomBudget budget{0, 0};
  Verdict v;
  v.syll = syll_provable(to_syll_sequent(s), system, budget);
  v.rll = rll_provable(to_rll_sequent(s));
  return v;
}

Verdict classify(const Syllogism& s) {
  const bool traditional = !s.p1.subject.complemented &&
                           !s.p2.subject.complemented &&
                           !s.concl.subject.complemented &&
                           (!s.import || !s.import->complemented);
  return classify(s, default_system(traditional ? SyllogismKind::Traditional
                                                : SyllogismKind::DeMorgan));
}

// ------------------------------------------------------------- table data

const std::vector<std::string>& table_traditional_plain() {
  static const std::vector<std::string> t = {
      // figure 1
      "A(M,P); A(S,M) / A(S,P)",
      "A(M,p); A(S,M) / A(S,p)",
      "A(M,P); I(S,M) / I(S,P)",
      "A(M,p); I(S,M) / I(S,p)",
      // figure 2
      "A(P,m); A(S,M) / A(S,p)",
      "A(P,M); A(S,m) / A(S,p)",
      "A(P,m); I(S,M) / I(S,p)",
      "A(P,M); I(S,m) / I(S,p)",
      // figure 3
      "I(M,P); A(M,S) / I(S,P)",
      "A(M,P); I(M,S) / I(S,P)",
      "I(M,p); A(M,S) / I(S,p)",
      "A(M,p); I(M,S) / I(S,p)",
      // figure 4
      "A(P,M); A(M,s) / A(S,p)",
      "I(P,M); A(M,S) / I(S,P)",
      "A(P,m); I(M,S) / I(S,p)",
  };
  return t;
}

const std::vector<std::string>& table_traditional_strengthened() {
  static const std::vector<std::string> t = {
      "A(M,P); A(S,M); S / I(S,P)",
      "A(M,p); A(S,M); S / I(S,p)",
      "A(P,M); A(S,m); S / I(S,p)",
      "A(P,m); A(S,M); S / I(S,p)",
      "A(M,P); A(M,S); M / I(S,P)",
      "A(M,p); A(M,S); M / I(S,p)",
      "A(P,M); A(M,s); S / I(S,p)",
      "A(P,m); A(M,S); M / I(S,p)",
      "A(P,M); A(M,S); P / I(S,P)",
  };
  return t;
}

const std::vector<std::string>& table_demorgan_plain() {
  static const std::vector<std::string> t = {
      // mood AAA
      "A(M,P); A(S,M) / A(S,P)",
      "A(m,P); A(S,m) / A(S,P)",
      "A(M,p); A(S,M) / A(S,p)",
      "A(m,p); A(S,m) / A(S,p)",
      "A(M,P); A(s,M) / A(s,P)",
      "A(m,P); A(s,m) / A(s,P)",
      "A(M,p); A(s,M) / A(s,p)",
      "A(m,p); A(s,m) / A(s,p)",
      // mood AII
      "A(M,P); I(S,M) / I(S,P)",
      "A(m,P); I(S,m) / I(S,P)",
      "A(M,p); I(S,M) / I(S,p)",
      "A(m,p); I(S,m) / I(S,p)",
      "A(M,P); I(s,M) / I(s,P)",
      "A(m,P); I(s,m) / I(s,P)",
      "A(M,p); I(s,M) / I(s,p)",
      "A(m,p); I(s,m) / I(s,p)",
      // mood IAI
      "I(M,P); A(M,S) / I(S,P)",
      "I(m,P); A(m,S) / I(S,P)",
      "I(M,P); A(M,s) / I(s,P)",
      "I(m,P); A(m,s) / I(s,P)",
      "I(M,p); A(M,S) / I(S,p)",
      "I(m,p); A(m,S) / I(S,p)",
      "I(M,p); A(M,s) / I(s,p)",
      "I(m,p); A(m,s) / I(s,p)",
  };
  return t;
}

const std::vector<std::string>& table_demorgan_strengthened() {
  static const std::vector<std::string> t = {
      // mood AAII
      "A(M,P); A(S,M); S / I(S,P)",
      "A(m,P); A(S,m); S / I(S,P)",
      "A(M,p); A(S,M); S / I(S,p)",
      "A(m,p); A(S,m); S / I(S,p)",
      "A(M,P); A(s,M); s / I(s,P)",
      "A(m,P); A(s,m); s / I(s,P)",
      "A(M,p); A(s,M); s / I(s,p)",
      "A(m,p); A(s,m); s / I(s,p)",
  };
  return t;
}

// -------------------------------------------------------- canonical forms

namespace {

SignedTerm flip(const SignedTerm& t) { return {t.var, !t.complemented}; }

// The classically equivalent co-presentation of a proposition:
// I(x,y) ~ I(y,x), A(x,y) ~ A(y',x').
CategoricalProp dual_prop(const CategoricalProp& p) {
  if (p.q == Quantity::Particular)
    return {p.q, p.predicate, p.subject};
  return {p.q, flip(p.predicate), flip(p.subject)};
}

CategoricalProp canonical_prop(const CategoricalProp& p) {
  CategoricalProp d = dual_prop(p);
  return render_prop(d) < render_prop(p) ? d : p;
}

}  // namespace

Syllogism canonical_syllogism(const Syllogism& s) {
  Syllogism out = s;
  out.p1 = canonical_prop(s.p1);
  out.p2 = canonical_prop(s.p2);
  return out;
}

// ---------------------------------------------------------------- catalogs

std::vector<SquareLaw> square_laws(SquareMode mode) {
  const bool tr = mode == SquareMode::Traditional;
  const SystemLevel sys = tr ? SystemLevel::SyllPlus : SystemLevel::SyllStar;
  auto law = [&](const std::string& name, const std::string& rll,
                 const std::string& syll) {
    SquareLaw l{name, parse_rll_sequent(rll), std::nullopt, sys};
    if (!syll.empty()) l.syll = parse_syll_sequent(syll);
    return l;
  };
  if (tr) {
    return {
        law("contradiction A/O",
            "A -o B, A * B^ |- A * A^",
            "A -> B, A <- * -> * <- B |= A <- * -> * <- A"),
        law("contradiction E/I",
            "A -o B^, A * B |- A * A^",
            "A -> * <- B, A <- * -> B |= A <- * -> * <- A"),
        law("subalternation/contrariety A->I",
            "A -o B, A * A |- A * B",
            "A -> B, A <- * -> A |= A <- * -> B"),
        law("subalternation/subcontrariety E->O",
            "A -o B^, A * A |- A * B^",
            "A -> * <- B, A <- * -> A |= A <- * -> * <- B"),
        law("complement entailment A", "A -o B |- (A * B^)^", ""),
        law("complement entailment I", "A * B |- (A -o B^)^", ""),
        law("complement entailment E", "A -o B^ |- (A * B)^", ""),
        law("complement entailment O", "A * B^ |- (A -o B)^", ""),
    };
  }
  return {
      law("new contradiction A/O",
          "A^ -o B, A^ * B^ |- B * B^",
          "A -> * -> B, A -> * <- * -> * <- B |= B <- * -> * <- B"),
      law("new contradiction E/I",
          "A^ -o B^, A^ * B |- B * B^",
          "A -> * -> * <- B, A -> * <- * -> B |= B <- * -> * <- B"),
      law("new subalternation A->I",
          "A^ -o B, A^ * A^ |- A^ * B",
          "A -> * -> B, A -> * <- * -> * <- A |= A -> * <- * -> B"),
      law("new subalternation E->O",
          "A^ -o B^, A^ * A^ |- A^ * B^",
          "A -> * -> * <- B, A -> * <- * -> * <- A |= A -> * <- * -> * <- B"),
      law("new complement entailment A", "A^ -o B |- (A^ * B^)^", ""),
      law("new complement entailment I", "A^ * B |- (A^ -o B^)^", ""),
      law("new complement entailment E", "A^ -o B^ |- (A^ * B)^", ""),
      law("new complement entailment O", "A^ * B^ |- (A^ -o B)^", ""),
  };
}

std::vector<CatalogEntry> reduction_catalog() {
  auto entry = [](std::string name, std::vector<std::string> obligations,
                  std::string source = "", std::string rule = "",
                  std::string target = "") {
    CatalogEntry e{std::move(name), {}, std::move(source), std::move(rule),
                   std::move(target)};
    for (const auto& o : obligations)
      e.obligations.push_back(parse_syll_sequent(o));
    return e;
  };
  return {
      entry("law of identity (universal)", {"|= A -> A"}),
      entry("law of identity (particular)", {"|= A <- * -> A"}),
      entry("two-term identity A", {"A -> B |= A -> B"}),
      entry("two-term identity E", {"A -> * <- B |= A -> * <- B"}),
      entry("two-term identity I", {"A <- * -> B |= A <- * -> B"}),
      entry("two-term identity O", {"A <- * -> * <- B |= A <- * -> * <- B"}),
      entry("two-term subalternation A->I",
            {"A -> B, A <- * -> A |= A <- * -> B"}),
      entry("two-term subalternation E->O",
            {"A -> * <- B, A <- * -> A |= A <- * -> * <- B"}),
      entry("simple conversion E", {"A -> * <- B |= B -> * <- A"}),
      entry("simple conversion I", {"A <- * -> B |= B <- * -> A"}),
      entry("conversion per accidens A",
            {"B -> A, B <- * -> B |= A <- * -> B"}),
      entry("conversion per accidens E",
            {"B -> * <- A, A <- * -> A |= A <- * -> * <- B"}),
      entry("reduction by contradiction",
            {"S -> P, P -> * <- M |= M -> * <- S",
             "S -> P, P -> M |= S -> M"},
            "A(P,m); I(M,S) / I(S,p)", "contradiction + simple conversion",
            "A(M,p); A(S,M) / A(S,p)"),
      entry("reduction by premise exchange",
            {"M -> * <- P, S -> M, S <- * -> S |= S <- * -> * <- P"},
            "A(P,M); A(M,s); S / I(S,p)", "exchange of premises + renaming",
            "A(M,p); A(S,M); S / I(S,p)"),
      entry("reduction by subalternation",
            {"M -> P, S -> M, S <- * -> S |= S <- * -> P"},
            "A(M,P); A(S,M); S / I(S,P)", "subalternation",
            "A(M,P); A(S,M) / A(S,P)"),
  };
}

}  // namespace sylog
