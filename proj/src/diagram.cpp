#include "sylog/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sylog {

bool Diagram::operator<(const Diagram& other) const {
  return render_diagram(*this) < render_diagram(other);
}

DiagramToken var_tok(const std::string& name) { return {Tok::Var, name}; }
DiagramToken arrow_tok(bool right) {
  return {right ? Tok::ArrowR : Tok::ArrowL, ""};
}
DiagramToken bullet_tok() { return {Tok::Bullet, ""}; }

Diagram parse_diagram(const std::string& text) {
  Diagram d;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text.compare(i, 2, "->") == 0) {
      d.toks.push_back(arrow_tok(true));
      i += 2;
    } else if (text.compare(i, 2, "<-") == 0) {
      d.toks.push_back(arrow_tok(false));
      i += 2;
    } else if (text[i] == '*') {
      d.toks.push_back(bullet_tok());
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(text[i])) ||
               text[i] == '_') {
      size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                       text[j] == '_'))
        ++j;
      d.toks.push_back(var_tok(text.substr(i, j - i)));
      i = j;
    } else {
      throw ParseError("diagram: unexpected character '" +
                       std::string(1, text[i]) + "' in \"" + text + "\"");
    }
  }
  if (d.toks.empty()) throw ParseError("diagram: empty input");
  if (!is_alternating(d))
    throw ParseError("diagram: not an alternating variable/arrow/bullet "
                     "sequence: \"" + text + "\"");
  return d;
}

std::string render_diagram(const Diagram& d) {
  std::ostringstream out;
  for (size_t i = 0; i < d.toks.size(); ++i) {
    if (i) out << ' ';
    switch (d.toks[i].kind) {
      case Tok::Var: out << d.toks[i].name; break;
      case Tok::ArrowR: out << "->"; break;
      case Tok::ArrowL: out << "<-"; break;
      case Tok::Bullet: out << '*'; break;
    }
  }
  return out.str();
}

static bool is_node(const DiagramToken& t) {
  return t.kind == Tok::Var || t.kind == Tok::Bullet;
}
static bool is_arrow(const DiagramToken& t) {
  return t.kind == Tok::ArrowR || t.kind == Tok::ArrowL;
}

bool is_alternating(const Diagram& d) {
  const auto& ts = d.toks;
  if (ts.empty()) return false;
  if (ts.front().kind != Tok::Var || ts.back().kind != Tok::Var) return false;
  for (size_t i = 0; i < ts.size(); ++i) {
    const bool want_node = (i % 2 == 0);
    if (want_node != is_node(ts[i])) return false;
    if (!want_node && !is_arrow(ts[i])) return false;
  }
  return true;
}

Diagram reversal(const Diagram& d) {
  Diagram r;
  r.toks.reserve(d.toks.size());
  for (auto it = d.toks.rbegin(); it != d.toks.rend(); ++it) {
    DiagramToken t = *it;
    if (t.kind == Tok::ArrowR)
      t.kind = Tok::ArrowL;
    else if (t.kind == Tok::ArrowL)
      t.kind = Tok::ArrowR;
    r.toks.push_back(t);
  }
  return r;
}

int bullet_count(const Diagram& d) {
  return static_cast<int>(std::count_if(
      d.toks.begin(), d.toks.end(),
      [](const DiagramToken& t) { return t.kind == Tok::Bullet; }));
}

std::vector<std::string> variables(const Diagram& d) {
  std::vector<std::string> out;
  for (const auto& t : d.toks)
    if (t.kind == Tok::Var &&
        std::find(out.begin(), out.end(), t.name) == out.end())
      out.push_back(t.name);
  return out;
}

std::map<std::string, int> complemented_occurrences(const Diagram& d) {
  std::map<std::string, int> out;
  const auto& ts = d.toks;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].kind != Tok::Var) continue;
    out.try_emplace(ts[i].name, 0);
    // An occurrence is complemented once for each adjacent bullet whose
    // arrow points from the variable into the bullet: the patterns
    // "X -> *" and "* <- X".  An occurrence inside "* <- X -> *" counts 2.
    if (i + 2 < ts.size() && ts[i + 1].kind == Tok::ArrowR &&
        ts[i + 2].kind == Tok::Bullet)
      ++out[ts[i].name];
    if (i >= 2 && ts[i - 1].kind == Tok::ArrowL &&
        ts[i - 2].kind == Tok::Bullet)
      ++out[ts[i].name];
  }
  return out;
}

const std::vector<std::string>& admissible_segments() {
  // The segments of the eight 2-variable shapes plus mirror images.
  static const std::vector<std::string> segs = {
      "->",                    // A(X,Y)
      "<-",                    // mirror of A(X,Y)
      "-> * <-",               // A(X,y); self-mirrored
      "<- * ->",               // I(X,Y); self-mirrored
      "<- * -> * <-",          // I(X,y)
      "-> * <- * ->",          // mirror of I(X,y) / I(x,Y)
      "-> * ->",               // A(x,Y)
      "<- * <-",               // mirror of A(x,Y)
      "-> * -> * <-",          // A(x,y)
      "-> * <- * <-",          // mirror of A(x,y)
      "-> * <- * -> * <-",     // I(x,y); self-mirrored
  };
  return segs;
}

bool is_well_formed(const Diagram& d) {
  if (!is_alternating(d)) return false;
  const auto& ts = d.toks;
  size_t prev_var = 0;
  bool seen_var = false;
  size_t var_count = 0;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].kind != Tok::Var) continue;
    ++var_count;
    if (seen_var) {
      Diagram seg;
      seg.toks.assign(ts.begin() + prev_var + 1, ts.begin() + i);
      const std::string s = render_diagram(seg);
      const auto& ok = admissible_segments();
      if (std::find(ok.begin(), ok.end(), s) == ok.end()) return false;
    }
    prev_var = i;
    seen_var = true;
  }
  return var_count >= 1;
}

}  // namespace sylog
