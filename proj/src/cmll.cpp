#include "sylog/cmll.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <tuple>

namespace sylog {

namespace {

CmllPtr mk(CmllKind kind, std::string name, int occ, CmllPtr l, CmllPtr r) {
  auto f = std::make_shared<CmllFormula>();
  f->kind = kind;
  f->name = std::move(name);
  f->occ = occ;
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}

}  // namespace

CmllPtr cmll_one() { return mk(CmllKind::One, "", -1, nullptr, nullptr); }
CmllPtr cmll_bot() { return mk(CmllKind::Bot, "", -1, nullptr, nullptr); }
CmllPtr cmll_pos(const std::string& name, int occ) {
  return mk(CmllKind::PosAtom, name, occ, nullptr, nullptr);
}
CmllPtr cmll_neg_atom(const std::string& name, int occ) {
  return mk(CmllKind::NegAtom, name, occ, nullptr, nullptr);
}
CmllPtr cmll_tensor(CmllPtr a, CmllPtr b) {
  return mk(CmllKind::Tensor, "", -1, std::move(a), std::move(b));
}
CmllPtr cmll_par(CmllPtr a, CmllPtr b) {
  return mk(CmllKind::Par, "", -1, std::move(a), std::move(b));
}

bool cmll_equal(const CmllPtr& a, const CmllPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case CmllKind::One:
    case CmllKind::Bot: return true;
    case CmllKind::PosAtom:
    case CmllKind::NegAtom: return a->name == b->name;
    default:
      return cmll_equal(a->left, b->left) && cmll_equal(a->right, b->right);
  }
}

CmllPtr cmll_lneg(const CmllPtr& f) {
  switch (f->kind) {
    case CmllKind::One: return cmll_bot();
    case CmllKind::Bot: return cmll_one();
    case CmllKind::PosAtom: return cmll_neg_atom(f->name);
    case CmllKind::NegAtom: return cmll_pos(f->name);
    case CmllKind::Tensor:
      return cmll_par(cmll_lneg(f->left), cmll_lneg(f->right));
    case CmllKind::Par:
      return cmll_tensor(cmll_lneg(f->left), cmll_lneg(f->right));
  }
  return nullptr;
}

static void render_cmll_rec(std::ostringstream& out, const CmllPtr& f,
                            bool parens) {
  switch (f->kind) {
    case CmllKind::One: out << '1'; return;
    case CmllKind::Bot: out << "bot"; return;
    case CmllKind::PosAtom: out << f->name; return;
    case CmllKind::NegAtom: out << f->name << '^'; return;
    case CmllKind::Tensor:
    case CmllKind::Par: {
      if (parens) out << '(';
      render_cmll_rec(out, f->left, true);
      out << (f->kind == CmllKind::Tensor ? " * " : " | ");
      render_cmll_rec(out, f->right, true);
      if (parens) out << ')';
      return;
    }
  }
}

std::string render_cmll(const CmllPtr& f) {
  std::ostringstream out;
  render_cmll_rec(out, f, false);
  return out.str();
}

std::string render_cmll_sequent(const std::vector<CmllPtr>& concls) {
  std::ostringstream out;
  out << "=>";
  for (size_t i = 0; i < concls.size(); ++i)
    out << (i ? ", " : " ") << render_cmll(concls[i]);
  return out.str();
}

// ------------------------------------------------------------ translation

// Raw component orders (unit-normalizing these reproduces the displayed
// two-sided translations):
//   pos(bot) = bot          neg(bot) = 1
//   pos(a)   = a            neg(a)   = a^
//   pos(A*B) = A+ * B+      neg(A*B) = B- | A-      ("B -o A^")
//   pos(A-oB)= A- | B+      neg(A-oB)= B- * A+      ("B^ * A")
CmllPtr raw_positive(const RllPtr& f) {
  switch (f->kind) {
    case RllKind::Atom:
      return f->name == "bot" ? cmll_bot() : cmll_pos(f->name);
    case RllKind::Tensor:
      return cmll_tensor(raw_positive(f->left), raw_positive(f->right));
    case RllKind::Lolli:
      return cmll_par(raw_negative(f->left), raw_positive(f->right));
  }
  return nullptr;
}

CmllPtr raw_negative(const RllPtr& f) {
  switch (f->kind) {
    case RllKind::Atom:
      return f->name == "bot" ? cmll_one() : cmll_neg_atom(f->name);
    case RllKind::Tensor:
      return cmll_par(raw_negative(f->right), raw_negative(f->left));
    case RllKind::Lolli:
      return cmll_tensor(raw_negative(f->right), raw_positive(f->left));
  }
  return nullptr;
}

CmllPtr unit_normalize(const CmllPtr& f) {
  switch (f->kind) {
    case CmllKind::Tensor: {
      CmllPtr l = unit_normalize(f->left);
      CmllPtr r = unit_normalize(f->right);
      if (l->kind == CmllKind::One) return r;
      if (r->kind == CmllKind::One) return l;
      return cmll_tensor(l, r);
    }
    case CmllKind::Par: {
      CmllPtr l = unit_normalize(f->left);
      CmllPtr r = unit_normalize(f->right);
      if (l->kind == CmllKind::Bot) return r;
      if (r->kind == CmllKind::Bot) return l;
      return cmll_par(l, r);
    }
    default: return f;
  }
}

CmllPtr translate_formula(const RllPtr& f, bool positive) {
  return unit_normalize(positive ? raw_positive(f) : raw_negative(f));
}

std::vector<CmllPtr> translate_sequent(const RllSequent& s) {
  std::vector<CmllPtr> out;
  for (const auto& f : s.ctx) out.push_back(translate_formula(f, false));
  out.push_back(translate_formula(s.concl, true));
  return out;
}

// ------------------------------------------------------ proof translation

namespace {

// Tag atom occurrences left-to-right with consecutive positions.
CmllPtr annotate(const CmllPtr& f, int& counter) {
  switch (f->kind) {
    case CmllKind::PosAtom: return cmll_pos(f->name, counter++);
    case CmllKind::NegAtom: return cmll_neg_atom(f->name, counter++);
    case CmllKind::Tensor:
    case CmllKind::Par: {
      CmllPtr l = annotate(f->left, counter);
      CmllPtr r = annotate(f->right, counter);
      return mk(f->kind, "", -1, l, r);
    }
    default: return f;
  }
}

CmllProofPtr cnode(CmllRule rule, std::vector<CmllPtr> concls,
                   std::vector<CmllProofPtr> children) {
  auto p = std::make_shared<CmllProof>();
  p->rule = rule;
  p->concls = std::move(concls);
  p->children = std::move(children);
  return p;
}

// Proof of  => neg, pos  where neg/pos are the annotated raw translations
// of the same RLL formula (the eta-expanded identity).
CmllProofPtr bridge(const RllPtr& f, const CmllPtr& neg, const CmllPtr& pos) {
  switch (f->kind) {
    case RllKind::Atom: {
      if (f->name == "bot") {
        // neg = 1, pos = bot
        auto one = cnode(CmllRule::OneR, {neg}, {});
        return cnode(CmllRule::FalseR, {neg, pos}, {one});
      }
      return cnode(CmllRule::Identity, {neg, pos}, {});
    }
    case RllKind::Tensor: {
      // neg = negB | negA,  pos = posA * posB
      auto pa = bridge(f->left, neg->right, pos->left);
      auto pb = bridge(f->right, neg->left, pos->right);
      auto times =
          cnode(CmllRule::Times, {neg->right, neg->left, pos}, {pa, pb});
      return cnode(CmllRule::Parr, {neg, pos}, {times});
    }
    case RllKind::Lolli: {
      // neg = negB * posA,  pos = negA | posB
      auto pb = bridge(f->right, neg->left, pos->right);
      auto pa = bridge(f->left, pos->left, neg->right);
      auto times =
          cnode(CmllRule::Times, {pos->right, pos->left, neg}, {pb, pa});
      return cnode(CmllRule::Parr, {neg, pos}, {times});
    }
  }
  return nullptr;
}

// Annotated formulas available for a child context, consumed by formula
// equality (any assignment among equal formulas is sound).
struct Pool {
  std::vector<std::pair<std::string, CmllPtr>> items;

  void add(const RllPtr& f, const CmllPtr& ann) {
    items.emplace_back(render_rll(f), ann);
  }
  CmllPtr take(const RllPtr& f) {
    const std::string key = render_rll(f);
    for (size_t i = 0; i < items.size(); ++i)
      if (items[i].first == key) {
        CmllPtr ann = items[i].second;
        items.erase(items.begin() + i);
        return ann;
      }
    return nullptr;
  }
};

CmllProofPtr build(const RllProofPtr& p, const std::vector<CmllPtr>& ctx_ann,
                   const CmllPtr& concl_ann);

std::vector<CmllPtr> align(const std::vector<RllPtr>& child_ctx, Pool& pool) {
  std::vector<CmllPtr> out;
  for (const auto& f : child_ctx) {
    CmllPtr ann = pool.take(f);
    assert(ann && "context alignment failed");
    out.push_back(ann);
  }
  return out;
}

std::vector<CmllPtr> with_concl(const std::vector<CmllPtr>& ctx_ann,
                                const CmllPtr& concl_ann) {
  std::vector<CmllPtr> out = ctx_ann;
  out.push_back(concl_ann);
  return out;
}

CmllProofPtr build(const RllProofPtr& p, const std::vector<CmllPtr>& ctx_ann,
                   const CmllPtr& concl_ann) {
  const auto& ctx = p->seq.ctx;
  switch (p->rule) {
    case RllRule::Id:
      return bridge(p->seq.concl, ctx_ann[0], concl_ann);
    case RllRule::TensorL: {
      // neg(A*B) = negB | negA;  one Parr step on the child.
      const int pr = p->principal;
      const CmllPtr& negF = ctx_ann[pr];
      Pool pool;
      for (size_t i = 0; i < ctx.size(); ++i)
        if (static_cast<int>(i) != pr) pool.add(ctx[i], ctx_ann[i]);
      pool.add(ctx[pr]->left, negF->right);
      pool.add(ctx[pr]->right, negF->left);
      auto child_ann = align(p->children[0]->seq.ctx, pool);
      auto sub = build(p->children[0], child_ann, concl_ann);
      return cnode(CmllRule::Parr, with_concl(ctx_ann, concl_ann), {sub});
    }
    case RllRule::TensorR: {
      // pos(A*B) = posA * posB;  one Times step.
      Pool pool;
      for (size_t i = 0; i < ctx.size(); ++i) pool.add(ctx[i], ctx_ann[i]);
      auto left_ann = align(p->children[0]->seq.ctx, pool);
      auto right_ann = align(p->children[1]->seq.ctx, pool);
      assert(pool.items.empty());
      auto l = build(p->children[0], left_ann, concl_ann->left);
      auto r = build(p->children[1], right_ann, concl_ann->right);
      return cnode(CmllRule::Times, with_concl(ctx_ann, concl_ann), {l, r});
    }
    case RllRule::LolliR: {
      // pos(A -o B) = negA | posB;  one Parr step.
      Pool pool;
      for (size_t i = 0; i < ctx.size(); ++i) pool.add(ctx[i], ctx_ann[i]);
      pool.add(p->seq.concl->left, concl_ann->left);
      auto child_ann = align(p->children[0]->seq.ctx, pool);
      auto sub = build(p->children[0], child_ann, concl_ann->right);
      return cnode(CmllRule::Parr, with_concl(ctx_ann, concl_ann), {sub});
    }
    case RllRule::LolliL: {
      // neg(A -o B) = negB * posA;  one Times step.
      const int pr = p->principal;
      const CmllPtr& negF = ctx_ann[pr];
      const RllPtr& f = ctx[pr];
      Pool pool;
      for (size_t i = 0; i < ctx.size(); ++i)
        if (static_cast<int>(i) != pr) pool.add(ctx[i], ctx_ann[i]);
      auto left_ann = align(p->children[0]->seq.ctx, pool);
      pool.add(f->right, negF->left);
      auto right_ann = align(p->children[1]->seq.ctx, pool);
      assert(pool.items.empty());
      // RLL child 0 proves |- A (annotated posA = negF->right); child 1
      // carries B.  The Times node's first child must prove the tensor's
      // left component negB, so the B-side proof comes first.
      auto l = build(p->children[0], left_ann, negF->right);
      auto r = build(p->children[1], right_ann, concl_ann);
      return cnode(CmllRule::Times, with_concl(ctx_ann, concl_ann), {r, l});
    }
  }
  return nullptr;
}

}  // namespace

CmllProofPtr translate_proof(const RllProofPtr& p) {
  return p ? translate_proof(p, p->seq) : nullptr;
}

CmllProofPtr translate_proof(const RllProofPtr& p,
                             const RllSequent& display) {
  if (!p) return nullptr;
  int counter = 0;
  std::vector<CmllPtr> disp_ann;
  for (const auto& f : display.ctx)
    disp_ann.push_back(annotate(raw_negative(f), counter));
  CmllPtr concl_ann = annotate(raw_positive(display.concl), counter);

  Pool pool;
  for (std::size_t i = 0; i < display.ctx.size(); ++i)
    pool.add(display.ctx[i], disp_ann[i]);
  auto ctx_ann = align(p->seq.ctx, pool);
  assert(pool.items.empty());

  auto proof = build(p, ctx_ann, concl_ann);
  // Re-root in the caller's order (a permutation; replay is multiset-based).
  auto rooted = std::make_shared<CmllProof>(*proof);
  rooted->concls = with_concl(disp_ann, concl_ann);
  return rooted;
}

// ------------------------------------------------------------------ replay

namespace {

std::vector<std::string> cmll_multiset(const std::vector<CmllPtr>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(render_cmll(f));
  std::sort(out.begin(), out.end());
  return out;
}

bool remove_one_cmll(std::vector<CmllPtr>& v, const CmllPtr& f) {
  for (size_t i = 0; i < v.size(); ++i)
    if (cmll_equal(v[i], f)) {
      v.erase(v.begin() + i);
      return true;
    }
  return false;
}

bool same_cmll_multiset(const std::vector<CmllPtr>& a,
                        const std::vector<CmllPtr>& b) {
  return cmll_multiset(a) == cmll_multiset(b);
}

}  // namespace

bool check_cmll_proof(const CmllProofPtr& p) {
  if (!p) return false;
  switch (p->rule) {
    case CmllRule::Identity:
      return p->children.empty() && p->concls.size() == 2 &&
             cmll_equal(p->concls[0], cmll_lneg(p->concls[1]));
    case CmllRule::OneR:
      return p->children.empty() && p->concls.size() == 1 &&
             p->concls[0]->kind == CmllKind::One;
    case CmllRule::FalseR: {
      if (p->children.size() != 1) return false;
      std::vector<CmllPtr> rest = p->concls;
      if (!remove_one_cmll(rest, cmll_bot())) return false;
      return same_cmll_multiset(rest, p->children[0]->concls) &&
             check_cmll_proof(p->children[0]);
    }
    case CmllRule::Times: {
      if (p->children.size() != 2) return false;
      const auto& c1 = p->children[0]->concls;
      const auto& c2 = p->children[1]->concls;
      for (const auto& t : p->concls) {
        if (t->kind != CmllKind::Tensor) continue;
        std::vector<CmllPtr> r1 = c1, r2 = c2, parent = p->concls;
        if (!remove_one_cmll(r1, t->left) || !remove_one_cmll(r2, t->right))
          continue;
        remove_one_cmll(parent, t);
        std::vector<CmllPtr> sum = r1;
        sum.insert(sum.end(), r2.begin(), r2.end());
        if (same_cmll_multiset(sum, parent))
          return check_cmll_proof(p->children[0]) &&
                 check_cmll_proof(p->children[1]);
      }
      return false;
    }
    case CmllRule::Parr: {
      if (p->children.size() != 1) return false;
      const auto& c = p->children[0]->concls;
      for (const auto& f : p->concls) {
        if (f->kind != CmllKind::Par) continue;
        std::vector<CmllPtr> child = c, parent = p->concls;
        if (!remove_one_cmll(child, f->left) ||
            !remove_one_cmll(child, f->right))
          continue;
        remove_one_cmll(parent, f);
        if (same_cmll_multiset(child, parent))
          return check_cmll_proof(p->children[0]);
      }
      return false;
    }
  }
  return false;
}

bool check_cmll_proof(const CmllProofPtr& p,
                      const std::vector<CmllPtr>& concls) {
  return p && same_cmll_multiset(p->concls, concls) && check_cmll_proof(p);
}

// -------------------------------------------------------------- proof nets

namespace {

void collect_atoms(const CmllPtr& f, std::vector<CmllPtr>& out) {
  switch (f->kind) {
    case CmllKind::PosAtom:
    case CmllKind::NegAtom: out.push_back(f); return;
    case CmllKind::Tensor:
    case CmllKind::Par:
      collect_atoms(f->left, out);
      collect_atoms(f->right, out);
      return;
    default: return;
  }
}

void collect_links(const CmllProofPtr& p, std::vector<AxiomLink>& out) {
  if (p->rule == CmllRule::Identity) {
    const CmllPtr& x = p->concls[0];
    const CmllPtr& y = p->concls[1];
    const bool atoms = (x->kind == CmllKind::PosAtom ||
                        x->kind == CmllKind::NegAtom) &&
                       (y->kind == CmllKind::PosAtom ||
                        y->kind == CmllKind::NegAtom);
    if (!atoms) throw NonAtomicIdentity();
    AxiomLink l{std::min(x->occ, y->occ), std::max(x->occ, y->occ)};
    out.push_back(l);
  }
  for (const auto& c : p->children) collect_links(c, out);
}

}  // namespace

ProofNet build_net(const CmllProofPtr& p) {
  ProofNet net;
  net.conclusions = p->concls;
  for (const auto& f : p->concls) collect_atoms(f, net.atoms);
  collect_links(p, net.links);
  std::sort(net.links.begin(), net.links.end(),
            [](const AxiomLink& a, const AxiomLink& b) {
              return std::tie(a.a, a.b) < std::tie(b.a, b.b);
            });
  for (size_t i = 0; i < net.links.size(); ++i)
    for (size_t j = i + 1; j < net.links.size(); ++j) {
      const auto& x = net.links[i];
      const auto& y = net.links[j];
      const bool crossed = (x.a < y.a && y.a < x.b && x.b < y.b) ||
                           (y.a < x.a && x.a < y.b && y.b < x.b);
      if (crossed)
        net.crossings.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  net.planar = net.crossings.empty();
  return net;
}

std::optional<ProofNet> net_for(const RllSequent& s) {
  auto proof = prove_rll(s);
  if (!proof) return std::nullopt;
  return build_net(translate_proof(*proof, s));
}

std::string net_to_dot(const ProofNet& net) {
  std::ostringstream out;
  out << "graph proofnet {\n  rankdir=TB;\n  node [fontname=\"monospace\"];\n";
  for (size_t i = 0; i < net.conclusions.size(); ++i)
    out << "  c" << i << " [shape=box, label=\""
        << render_cmll(unit_normalize(net.conclusions[i])) << "\"];\n";
  // Atom leaves, in cyclic order, attached to their conclusions.
  size_t pos = 0;
  for (size_t i = 0; i < net.conclusions.size(); ++i) {
    std::vector<CmllPtr> atoms;
    collect_atoms(net.conclusions[i], atoms);
    for (const auto& a : atoms) {
      out << "  a" << pos << " [shape=circle, label=\"" << render_cmll(a)
          << "\"];\n";
      out << "  c" << i << " -- a" << pos << " [style=dotted];\n";
      ++pos;
    }
  }
  for (const auto& l : net.links)
    out << "  a" << l.a << " -- a" << l.b
        << " [constraint=false, color=blue];\n";
  out << "}\n";
  return out.str();
}

}  // namespace sylog
