#include "sylog/sweep.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sylog {

std::vector<Verdict> sweep_serial(const std::vector<Syllogism>& cands,
                                  SystemLevel system) {
  std::vector<Verdict> out(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i)
    out[i] = classify(cands[i], system);
  return out;
}

std::vector<Verdict> sweep_parallel(const std::vector<Syllogism>& cands,
                                    SystemLevel system) {
  std::vector<Verdict> out(cands.size());
  const long n = static_cast<long>(cands.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long i = 0; i < n; ++i) out[i] = classify(cands[i], system);
  return out;
}

namespace {

std::set<std::string> canonical_set(const std::vector<std::string>& rendered) {
  std::set<std::string> out;
  for (const auto& s : rendered)
    out.insert(render_syllogism(canonical_syllogism(parse_syllogism(s))));
  return out;
}

}  // namespace

SweepReport run_sweep(SyllogismKind kind, bool strengthened, bool parallel) {
  SweepReport r;
  r.kind = kind;
  r.strengthened = strengthened;

  const auto cands = enumerate_candidates(kind, strengthened);
  r.total = cands.size();
  const SystemLevel system = default_system(kind);
  const auto verdicts = parallel ? sweep_parallel(cands, system)
                                 : sweep_serial(cands, system);

  std::vector<std::string> scoped_provable;
  r.verdicts_agree_in_format = true;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const std::string text = render_syllogism(cands[i]);
    const bool in_format = consistent_complementation(cands[i]);
    if (verdicts[i].syll && verdicts[i].rll) {
      r.provable_both.push_back(text);
      // Table columns for strengthened De Morgan runs carry imports on the
      // conclusion's subject letter only; keep the same scope here.
      const bool import_in_scope =
          kind == SyllogismKind::Traditional || !strengthened ||
          (cands[i].import && cands[i].import->var == "S");
      if ((kind == SyllogismKind::Traditional || in_format) &&
          import_in_scope)
        scoped_provable.push_back(text);
    } else if (verdicts[i].syll) {
      r.syll_only.push_back(text);
      if (in_format) r.verdicts_agree_in_format = false;
    } else if (verdicts[i].rll) {
      r.rll_only.push_back(text);
      if (in_format) r.verdicts_agree_in_format = false;
    }
  }
  r.verdicts_agree = r.syll_only.empty() && r.rll_only.empty();

  const std::vector<std::string>* raw_table = nullptr;
  if (kind == SyllogismKind::Traditional)
    raw_table = strengthened ? &table_traditional_strengthened()
                             : &table_traditional_plain();
  else
    raw_table = strengthened ? &table_demorgan_strengthened()
                             : &table_demorgan_plain();
  for (const auto& entry : *raw_table)
    r.table.push_back(render_syllogism(parse_syllogism(entry)));

  const std::set<std::string> provable(scoped_provable.begin(),
                                       scoped_provable.end());
  const std::set<std::string> expected(r.table.begin(), r.table.end());
  for (const auto& e : expected)
    if (!provable.count(e)) r.missing_literal.push_back(e);
  for (const auto& p : provable)
    if (!expected.count(p)) r.extra_literal.push_back(p);
  r.table_literal_match =
      r.missing_literal.empty() && r.extra_literal.empty();
  r.table_canonical_match =
      canonical_set(scoped_provable) == canonical_set(r.table);
  return r;
}

std::string report_text(const SweepReport& r) {
  std::ostringstream out;
  out << "kind: "
      << (r.kind == SyllogismKind::Traditional ? "traditional" : "demorgan")
      << (r.strengthened ? " (strengthened)" : " (plain)") << "\n";
  out << "candidates: " << r.total << "\n";
  out << "provable in both calculi: " << r.provable_both.size() << "\n";
  out << "calculi agree everywhere: " << (r.verdicts_agree ? "yes" : "no")
      << "\n";
  out << "calculi agree on format-conforming candidates: "
      << (r.verdicts_agree_in_format ? "yes" : "no") << "\n";
  for (const auto& s : r.syll_only)
    out << "  diagram-only"
        << (consistent_complementation(parse_syllogism(s))
                ? ""
                : " (mixed complementation)")
        << ": " << s << "\n";
  for (const auto& s : r.rll_only)
    out << "  formula-only"
        << (consistent_complementation(parse_syllogism(s))
                ? ""
                : " (mixed complementation)")
        << ": " << s << "\n";
  out << "table entries: " << r.table.size() << "\n";
  out << "table match (literal, asserted scope): "
      << (r.table_literal_match ? "yes" : "no") << "\n";
  out << "table match (modulo conversion/contraposition): "
      << (r.table_canonical_match ? "yes" : "no") << "\n";
  if (!r.missing_literal.empty()) {
    out << "listed but not provable:\n";
    for (const auto& s : r.missing_literal) out << "  " << s << "\n";
  }
  if (!r.extra_literal.empty()) {
    out << "provable in the asserted scope but not literally listed:\n";
    for (const auto& s : r.extra_literal) out << "  " << s << "\n";
  }
  return out.str();
}

}  // namespace sylog
