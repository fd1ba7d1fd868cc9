#include "sylog/rll.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace sylog {

RllPtr rll_atom(const std::string& name) {
  auto f = std::make_shared<RllFormula>();
  f->kind = RllKind::Atom;
  f->name = name;
  return f;
}
RllPtr rll_bot() { return rll_atom("bot"); }
RllPtr rll_tensor(RllPtr a, RllPtr b) {
  auto f = std::make_shared<RllFormula>();
  f->kind = RllKind::Tensor;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}
RllPtr rll_lolli(RllPtr a, RllPtr b) {
  auto f = std::make_shared<RllFormula>();
  f->kind = RllKind::Lolli;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}
RllPtr rll_neg(RllPtr a) { return rll_lolli(std::move(a), rll_bot()); }

bool rll_equal(const RllPtr& a, const RllPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case RllKind::Atom: return a->name == b->name;
    default:
      return rll_equal(a->left, b->left) && rll_equal(a->right, b->right);
  }
}

bool rll_is_neg(const RllPtr& f) {
  return f && f->kind == RllKind::Lolli && f->right->kind == RllKind::Atom &&
         f->right->name == "bot";
}

// ---------------------------------------------------------------- rendering

// Precedence: -o = 0 (right assoc), * = 1 (left assoc), atoms/^ = 2.
static void render_rll_rec(std::ostringstream& out, const RllPtr& f,
                           int min_prec) {
  if (rll_is_neg(f)) {
    // Postfix complement; operand must be atomic-looking or parenthesized.
    const bool parens = !(f->left->kind == RllKind::Atom || rll_is_neg(f->left));
    if (parens) out << '(';
    render_rll_rec(out, f->left, 2);
    if (parens) out << ')';
    out << '^';
    return;
  }
  switch (f->kind) {
    case RllKind::Atom:
      out << f->name;
      return;
    case RllKind::Tensor: {
      const bool parens = min_prec > 1;
      if (parens) out << '(';
      render_rll_rec(out, f->left, 1);
      out << " * ";
      render_rll_rec(out, f->right, 2);
      if (parens) out << ')';
      return;
    }
    case RllKind::Lolli: {
      const bool parens = min_prec > 0;
      if (parens) out << '(';
      render_rll_rec(out, f->left, 1);
      out << " -o ";
      render_rll_rec(out, f->right, 0);
      if (parens) out << ')';
      return;
    }
  }
}

std::string render_rll(const RllPtr& f) {
  std::ostringstream out;
  render_rll_rec(out, f, 0);
  return out.str();
}

// ------------------------------------------------------------------ parsing

namespace {

struct RllLexer {
  std::string src;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() &&
           std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (src.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  std::string ident() {
    skip_ws();
    size_t j = pos;
    while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                              src[j] == '_'))
      ++j;
    if (j == pos)
      throw ParseError("formula: expected identifier at position " +
                       std::to_string(pos) + " in \"" + src + "\"");
    std::string s = src.substr(pos, j - pos);
    pos = j;
    return s;
  }
};

RllPtr parse_lolli(RllLexer& lx);

RllPtr parse_primary(RllLexer& lx) {
  RllPtr f;
  if (lx.eat("(")) {
    f = parse_lolli(lx);
    if (!lx.eat(")"))
      throw ParseError("formula: missing ')' in \"" + lx.src + "\"");
  } else {
    f = rll_atom(lx.ident());
  }
  while (lx.eat("^")) f = rll_neg(f);
  return f;
}

RllPtr parse_tensor(RllLexer& lx) {
  RllPtr f = parse_primary(lx);
  for (;;) {
    lx.skip_ws();
    // "*" is tensor; make sure not to confuse with nothing else.
    if (lx.eat("*"))
      f = rll_tensor(f, parse_primary(lx));
    else
      return f;
  }
}

RllPtr parse_lolli(RllLexer& lx) {
  RllPtr f = parse_tensor(lx);
  if (lx.eat("-o")) return rll_lolli(f, parse_lolli(lx));
  return f;
}

}  // namespace

RllPtr parse_rll_formula(const std::string& text) {
  RllLexer lx{text};
  RllPtr f = parse_lolli(lx);
  lx.skip_ws();
  if (lx.pos != text.size())
    throw ParseError("formula: trailing input in \"" + text + "\"");
  return f;
}

RllSequent parse_rll_sequent(const std::string& text) {
  const size_t t = text.find("|-");
  if (t == std::string::npos)
    throw ParseError("sequent: missing |- in \"" + text + "\"");
  RllSequent s;
  std::string lhs = text.substr(0, t);
  // Split the context on top-level commas (no commas occur inside formulas).
  size_t start = 0;
  auto flush = [&](size_t end) {
    std::string part = lhs.substr(start, end - start);
    if (part.find_first_not_of(" \t") != std::string::npos)
      s.ctx.push_back(parse_rll_formula(part));
  };
  for (size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] == ',') {
      flush(i);
      start = i + 1;
    }
  flush(lhs.size());
  s.concl = parse_rll_formula(text.substr(t + 2));
  return s;
}

std::string render_rll_sequent(const RllSequent& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.ctx.size(); ++i) {
    if (i) out << ", ";
    out << render_rll(s.ctx[i]);
  }
  if (!s.ctx.empty()) out << ' ';
  out << "|- " << render_rll(s.concl);
  return out.str();
}

// ------------------------------------------------------------------- prover

namespace {

std::vector<RllPtr> sorted_ctx(std::vector<RllPtr> ctx) {
  std::sort(ctx.begin(), ctx.end(), [](const RllPtr& a, const RllPtr& b) {
    return render_rll(a) < render_rll(b);
  });
  return ctx;
}

std::string seq_key(const std::vector<RllPtr>& ctx, const RllPtr& concl) {
  std::ostringstream out;
  for (const auto& f : ctx) out << render_rll(f) << ';';
  out << "|-" << render_rll(concl);
  return out.str();
}

RllProofPtr mk_node(RllRule rule, std::vector<RllPtr> ctx, RllPtr concl,
                    int principal, std::vector<RllProofPtr> children) {
  auto p = std::make_shared<RllProof>();
  p->rule = rule;
  p->seq = RllSequent{std::move(ctx), std::move(concl)};
  p->principal = principal;
  p->children = std::move(children);
  return p;
}

// Memo is thread-local so the parallel sweep needs no locking.
thread_local std::unordered_map<std::string, std::optional<RllProofPtr>> g_memo;

std::optional<RllProofPtr> search(const std::vector<RllPtr>& ctx,
                                  const RllPtr& concl) {
  const std::string key = seq_key(ctx, concl);
  if (auto it = g_memo.find(key); it != g_memo.end()) return it->second;

  std::optional<RllProofPtr> result;

  // Id
  if (ctx.size() == 1 && rll_equal(ctx[0], concl))
    result = mk_node(RllRule::Id, ctx, concl, -1, {});

  // TensorL
  if (!result) {
    for (size_t i = 0; i < ctx.size() && !result; ++i) {
      if (ctx[i]->kind != RllKind::Tensor) continue;
      std::vector<RllPtr> child;
      for (size_t j = 0; j < ctx.size(); ++j)
        if (j != i) child.push_back(ctx[j]);
      child.push_back(ctx[i]->left);
      child.push_back(ctx[i]->right);
      if (auto sub = search(sorted_ctx(child), concl))
        result = mk_node(RllRule::TensorL, ctx, concl, static_cast<int>(i),
                         {*sub});
    }
  }

  // LolliR
  if (!result && concl->kind == RllKind::Lolli) {
    std::vector<RllPtr> child = ctx;
    child.push_back(concl->left);
    if (auto sub = search(sorted_ctx(child), concl->right))
      result = mk_node(RllRule::LolliR, ctx, concl, -1, {*sub});
  }

  // TensorR: try every context split.
  if (!result && concl->kind == RllKind::Tensor) {
    const size_t n = ctx.size();
    for (size_t mask = 0; mask < (size_t{1} << n) && !result; ++mask) {
      std::vector<RllPtr> g, d;
      for (size_t j = 0; j < n; ++j)
        ((mask >> j) & 1 ? g : d).push_back(ctx[j]);
      auto left = search(sorted_ctx(g), concl->left);
      if (!left) continue;
      if (auto right = search(sorted_ctx(d), concl->right))
        result = mk_node(RllRule::TensorR, ctx, concl, -1, {*left, *right});
    }
  }

  // LolliL: pick a principal implication, then split the remainder.
  if (!result) {
    for (size_t i = 0; i < ctx.size() && !result; ++i) {
      if (ctx[i]->kind != RllKind::Lolli) continue;
      std::vector<RllPtr> rest;
      for (size_t j = 0; j < ctx.size(); ++j)
        if (j != i) rest.push_back(ctx[j]);
      const size_t n = rest.size();
      for (size_t mask = 0; mask < (size_t{1} << n) && !result; ++mask) {
        std::vector<RllPtr> g, d;
        for (size_t j = 0; j < n; ++j)
          ((mask >> j) & 1 ? g : d).push_back(rest[j]);
        auto left = search(sorted_ctx(g), ctx[i]->left);
        if (!left) continue;
        d.push_back(ctx[i]->right);
        if (auto right = search(sorted_ctx(d), concl))
          result =
              mk_node(RllRule::LolliL, ctx, concl, static_cast<int>(i),
                      {*left, *right});
      }
    }
  }

  g_memo.emplace(key, result);
  return result;
}

}  // namespace

std::optional<RllProofPtr> prove_rll(const RllSequent& s) {
  return search(sorted_ctx(s.ctx), s.concl);
}

bool rll_provable(const RllSequent& s) { return prove_rll(s).has_value(); }

// ------------------------------------------------------------------ checker

namespace {

std::vector<std::string> multiset_key(const std::vector<RllPtr>& ctx) {
  std::vector<std::string> v;
  v.reserve(ctx.size());
  for (const auto& f : ctx) v.push_back(render_rll(f));
  std::sort(v.begin(), v.end());
  return v;
}

// multiset a == multiset b?
bool same_multiset(const std::vector<RllPtr>& a, const std::vector<RllPtr>& b) {
  return multiset_key(a) == multiset_key(b);
}

// a minus one occurrence of f (by value); false if absent.
bool remove_one(std::vector<RllPtr>& v, const RllPtr& f) {
  for (size_t i = 0; i < v.size(); ++i)
    if (rll_equal(v[i], f)) {
      v.erase(v.begin() + i);
      return true;
    }
  return false;
}

bool check_node(const RllProofPtr& p) {
  if (!p) return false;
  const auto& ctx = p->seq.ctx;
  const auto& concl = p->seq.concl;
  switch (p->rule) {
    case RllRule::Id:
      return p->children.empty() && ctx.size() == 1 &&
             rll_equal(ctx[0], concl);
    case RllRule::TensorL: {
      if (p->children.size() != 1) return false;
      const auto& c = p->children[0];
      if (!rll_equal(c->seq.concl, concl)) return false;
      for (const auto& f : ctx) {
        if (f->kind != RllKind::Tensor) continue;
        std::vector<RllPtr> want = ctx;
        remove_one(want, f);
        want.push_back(f->left);
        want.push_back(f->right);
        if (same_multiset(want, c->seq.ctx)) return check_node(c);
      }
      return false;
    }
    case RllRule::TensorR: {
      if (p->children.size() != 2 || concl->kind != RllKind::Tensor)
        return false;
      const auto& l = p->children[0];
      const auto& r = p->children[1];
      if (!rll_equal(l->seq.concl, concl->left) ||
          !rll_equal(r->seq.concl, concl->right))
        return false;
      std::vector<RllPtr> sum = l->seq.ctx;
      sum.insert(sum.end(), r->seq.ctx.begin(), r->seq.ctx.end());
      return same_multiset(sum, ctx) && check_node(l) && check_node(r);
    }
    case RllRule::LolliR: {
      if (p->children.size() != 1 || concl->kind != RllKind::Lolli)
        return false;
      const auto& c = p->children[0];
      if (!rll_equal(c->seq.concl, concl->right)) return false;
      std::vector<RllPtr> want = ctx;
      want.push_back(concl->left);
      return same_multiset(want, c->seq.ctx) && check_node(c);
    }
    case RllRule::LolliL: {
      if (p->children.size() != 2) return false;
      const auto& l = p->children[0];
      const auto& r = p->children[1];
      if (!rll_equal(r->seq.concl, concl)) return false;
      for (const auto& f : ctx) {
        if (f->kind != RllKind::Lolli) continue;
        if (!rll_equal(l->seq.concl, f->left)) continue;
        std::vector<RllPtr> rctx = r->seq.ctx;
        if (!remove_one(rctx, f->right)) continue;
        std::vector<RllPtr> sum = l->seq.ctx;
        sum.insert(sum.end(), rctx.begin(), rctx.end());
        std::vector<RllPtr> want = ctx;
        remove_one(want, f);
        if (same_multiset(sum, want)) return check_node(l) && check_node(r);
      }
      return false;
    }
  }
  return false;
}

}  // namespace

bool check_rll_proof(const RllProofPtr& p, const RllSequent& s) {
  if (!p) return false;
  if (!rll_equal(p->seq.concl, s.concl)) return false;
  if (!same_multiset(p->seq.ctx, s.ctx)) return false;
  return check_node(p);
}

bool rll_equivalent(const RllPtr& a, const RllPtr& b) {
  return rll_provable(RllSequent{{a}, b}) && rll_provable(RllSequent{{b}, a});
}

}  // namespace sylog
