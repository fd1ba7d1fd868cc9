#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "sylog/sweep.hpp"

using namespace sylog;

TEST_CASE("serial and parallel sweeps agree verdict-for-verdict") {
  const auto cands = enumerate_candidates(SyllogismKind::Traditional, false);
  const auto a = sweep_serial(cands, SystemLevel::SyllPlus);
  const auto b = sweep_parallel(cands, SystemLevel::SyllPlus);
  REQUIRE(a.size() == cands.size());
  REQUIRE(b.size() == cands.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].syll == b[i].syll);
    CHECK(a[i].rll == b[i].rll);
  }
}

TEST_CASE("the plain traditional sweep recovers the fifteen moods") {
  const SweepReport r = run_sweep(SyllogismKind::Traditional, false);
  CHECK(r.total == 256);
  CHECK(r.provable_both.size() == 15);
  CHECK(r.syll_only.empty());
  CHECK(r.rll_only.empty());
  CHECK(r.verdicts_agree);
  CHECK(r.verdicts_agree_in_format);
  CHECK(r.table_literal_match);
  CHECK(r.table_canonical_match);
  CHECK(r.missing_literal.empty());
  CHECK(r.extra_literal.empty());
  // Landmarks.
  auto has = [&](const std::string& s) {
    return std::find(r.provable_both.begin(), r.provable_both.end(), s) !=
           r.provable_both.end();
  };
  CHECK(has("A(M,P); A(S,M) / A(S,P)"));
  CHECK(has("A(M,p); A(S,M) / A(S,p)"));
  CHECK_FALSE(has("A(M,P); A(S,M) / I(S,P)"));
}

TEST_CASE("the strengthened traditional sweep recovers the nine moods") {
  const SweepReport r = run_sweep(SyllogismKind::Traditional, true);
  CHECK(r.total == 768);
  CHECK(r.provable_both.size() == 9);
  CHECK(r.verdicts_agree);
  CHECK(r.table_literal_match);
  const std::string text = report_text(r);
  CHECK(text.find("9") != std::string::npos);
}
