// sylog: prove, enumerate, and visualize.
//
// Inputs are dispatched by their turnstile: "|-" marks a formula sequent,
// "|=" a diagram sequent, and "/" a syllogism in shorthand, e.g.
// "A(M,P); A(S,M) / A(S,P)".  Exit codes: 0 provable / verified / match,
// 1 not provable / mismatch, 2 bad input or usage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "sylog/cmll.hpp"
#include "sylog/serialize.hpp"
#include "sylog/sweep.hpp"
#include "sylog/syllogistics.hpp"

using nlohmann::json;
using namespace sylog;

namespace {

enum class InputKind { RllSeq, SyllSeq, Syllogistic };

InputKind dispatch(const std::string& text) {
  if (text.find("|-") != std::string::npos) return InputKind::RllSeq;
  if (text.find("|=") != std::string::npos) return InputKind::SyllSeq;
  if (text.find('/') != std::string::npos) return InputKind::Syllogistic;
  throw ParseError("cannot tell what '" + text +
                   "' is: expected '|-', '|=' or '/'");
}

SystemLevel system_or_throw(const std::string& name) {
  auto s = system_from_name(name);
  if (!s) throw ParseError("unknown system: " + name);
  return *s;
}

// A syllogism is in the wider De Morgan space iff a subject or import term
// is complemented.
SyllogismKind kind_of(const Syllogism& s) {
  const bool demorgan = s.p1.subject.complemented ||
                        s.p2.subject.complemented ||
                        s.concl.subject.complemented ||
                        (s.import && s.import->complemented);
  return demorgan ? SyllogismKind::DeMorgan : SyllogismKind::Traditional;
}

struct ProveOutcome {
  std::string calculus;
  std::string sequent;
  bool provable = false;
  json proof;  // null when absent
};

ProveOutcome prove_rll_input(const RllSequent& seq) {
  ProveOutcome out;
  out.calculus = "rll";
  out.sequent = render_rll_sequent(seq);
  auto proof = prove_rll(seq);
  out.provable = proof.has_value();
  out.proof = proof ? rll_proof_to_json(*proof) : json(nullptr);
  return out;
}

ProveOutcome prove_syll_input(const SyllSequent& seq, SystemLevel system,
                              const AxiomBudget& budget) {
  ProveOutcome out;
  out.calculus = system_name(system);
  out.sequent = render_syll_sequent(seq);
  auto proof = prove(seq, system, budget);
  out.provable = proof.has_value();
  out.proof = proof ? syll_proof_to_json(*proof) : json(nullptr);
  return out;
}

json outcome_json(const ProveOutcome& o) {
  return json{{"calculus", o.calculus},
              {"sequent", o.sequent},
              {"provable", o.provable},
              {"proof", o.proof}};
}

void emit(const json& report, const std::string& format,
          const std::string& report_file) {
  if (!report_file.empty()) {
    std::ofstream f(report_file);
    f << report.dump(2) << "\n";
  }
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    if (report.contains("results")) {
      for (const auto& r : report["results"])
        std::cout << r["calculus"].get<std::string>() << ": "
                  << r["sequent"].get<std::string>() << "  =>  "
                  << (r["provable"].get<bool>() ? "provable"
                                                : "not provable")
                  << "\n";
    } else {
      std::cout << report["calculus"].get<std::string>() << ": "
                << report["sequent"].get<std::string>() << "  =>  "
                << (report["provable"].get<bool>() ? "provable"
                                                   : "not provable")
                << "\n";
    }
  }
}

int cmd_prove(const std::string& input, const std::string& system_flag,
              int budget_flag, const std::string& format,
              const std::string& report_file) {
  AxiomBudget budget;
  if (budget_flag >= 0) {
    budget.exist_per_var = budget_flag;
    budget.ident_per_var = budget_flag;
  }

  const InputKind kind = dispatch(input);
  std::vector<ProveOutcome> outcomes;

  if (kind == InputKind::RllSeq) {
    if (!system_flag.empty() && system_flag != "rll")
      throw ParseError("a '|-' sequent is proved in rll, not " + system_flag);
    outcomes.push_back(prove_rll_input(parse_rll_sequent(input)));
  } else if (kind == InputKind::SyllSeq) {
    SystemLevel system = SystemLevel::SyllStar;
    if (!system_flag.empty()) {
      if (system_flag == "rll")
        throw ParseError("a '|=' sequent is diagrammatic; pick a syll system");
      system = system_or_throw(system_flag);
    }
    outcomes.push_back(
        prove_syll_input(parse_syll_sequent(input), system, budget));
  } else {
    const Syllogism s = parse_syllogism(input);
    if (system_flag == "rll") {
      outcomes.push_back(prove_rll_input(to_rll_sequent(s)));
    } else if (!system_flag.empty()) {
      outcomes.push_back(prove_syll_input(to_syll_sequent(s),
                                          system_or_throw(system_flag),
                                          budget));
    } else {  // no system given: run both calculi side by side
      outcomes.push_back(prove_syll_input(
          to_syll_sequent(s), default_system(kind_of(s)), budget));
      outcomes.push_back(prove_rll_input(to_rll_sequent(s)));
    }
  }

  json report;
  report["input"] = input;
  if (outcomes.size() == 1) {
    report.update(outcome_json(outcomes[0]));
  } else {
    json rs = json::array();
    for (const auto& o : outcomes) rs.push_back(outcome_json(o));
    report["results"] = std::move(rs);
  }
  emit(report, format, report_file);

  for (const auto& o : outcomes)
    if (!o.provable) return 1;
  return 0;
}

int cmd_enumerate(const std::string& kind_flag, bool strengthened,
                  const std::string& only, const std::string& format,
                  const std::string& report_file, bool serial) {
  const SyllogismKind kind = kind_flag == "demorgan"
                                 ? SyllogismKind::DeMorgan
                                 : SyllogismKind::Traditional;
  const SweepReport r = run_sweep(kind, strengthened, !serial);

  json j;
  j["kind"] = kind_flag;
  j["strengthened"] = r.strengthened;
  j["candidates"] = r.total;
  j["provable"] = r.provable_both;
  j["diagram_only"] = r.syll_only;
  j["formula_only"] = r.rll_only;
  j["table"] = r.table;
  j["missing_literal"] = r.missing_literal;
  j["extra_literal"] = r.extra_literal;
  j["calculi_agree"] = r.verdicts_agree;
  j["calculi_agree_in_format"] = r.verdicts_agree_in_format;
  j["table_literal_match"] = r.table_literal_match;
  j["table_canonical_match"] = r.table_canonical_match;
  if (!report_file.empty()) {
    std::ofstream f(report_file);
    f << j.dump(2) << "\n";
  }

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (only == "provable") {
    for (const auto& s : r.provable_both) std::cout << s << "\n";
  } else if (only == "disagreements") {
    for (const auto& s : r.syll_only) std::cout << "diagram-only: " << s << "\n";
    for (const auto& s : r.rll_only) std::cout << "formula-only: " << s << "\n";
  } else if (only == "findings") {
    for (const auto& s : r.missing_literal)
      std::cout << "listed-not-provable: " << s << "\n";
    for (const auto& s : r.extra_literal)
      std::cout << "provable-not-listed: " << s << "\n";
  } else {
    std::cout << report_text(r);
  }

  return (r.verdicts_agree_in_format &&
          (r.table_literal_match || r.table_canonical_match))
             ? 0
             : 1;
}

int cmd_net(const std::string& input, const std::string& format) {
  const InputKind kind = dispatch(input);
  RllSequent seq;
  if (kind == InputKind::RllSeq)
    seq = parse_rll_sequent(input);
  else if (kind == InputKind::Syllogistic)
    seq = to_rll_sequent(parse_syllogism(input));
  else
    throw ParseError("nets are built from '|-' sequents or syllogisms");

  auto net = net_for(seq);
  if (!net) {
    std::cout << "not provable: " << render_rll_sequent(seq) << "\n";
    return 1;
  }
  if (format == "dot") {
    std::cout << net_to_dot(*net);
  } else if (format == "json") {
    std::cout << net_to_json(*net).dump(2) << "\n";
  } else {
    std::vector<CmllPtr> display;
    for (const auto& f : net->conclusions)
      display.push_back(unit_normalize(f));
    std::cout << render_cmll_sequent(display) << "\n";
    std::cout << "links:";
    for (const auto& l : net->links)
      std::cout << " (" << l.a << "," << l.b << ")";
    std::cout << "\n";
    std::cout << "planar: " << (net->planar ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_tables(const std::string& kind_flag, bool strengthened) {
  const std::vector<std::string>* table = nullptr;
  if (kind_flag == "demorgan")
    table = strengthened ? &table_demorgan_strengthened()
                         : &table_demorgan_plain();
  else
    table = strengthened ? &table_traditional_strengthened()
                         : &table_traditional_plain();
  for (const auto& e : *table) {
    const Syllogism s = parse_syllogism(e);
    std::cout << mood_of(s) << "-" << figure_of(s) << "  "
              << render_syllogism(s) << "\n";
  }
  return 0;
}

int verify_one(const json& r) {
  const std::string calculus = r.at("calculus").get<std::string>();
  const std::string sequent = r.at("sequent").get<std::string>();
  const bool provable = r.at("provable").get<bool>();
  if (calculus == "rll") {
    const RllSequent seq = parse_rll_sequent(sequent);
    if (provable)
      return check_rll_proof(rll_proof_from_json(r.at("proof")), seq) ? 0 : 1;
    return prove_rll(seq) ? 1 : 0;
  }
  const SystemLevel system = system_or_throw(calculus);
  const SyllSequent seq = parse_syll_sequent(sequent);
  if (provable)
    return check_proof(syll_proof_from_json(r.at("proof")), seq, system)
               ? 0
               : 1;
  return syll_provable(seq, system) ? 1 : 0;
}

int cmd_verify(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file);
  json report = json::parse(in);
  int rc = 0;
  if (report.contains("results")) {
    for (const auto& r : report["results"]) rc |= verify_one(r);
  } else {
    rc = verify_one(report);
  }
  std::cout << (rc == 0 ? "verified" : "mismatch") << "\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification workbench for diagrammatic and linear-logic "
               "syllogistics"};
  app.require_subcommand(1);

  std::string input, system_flag, format = "text", report_file;
  std::string kind_flag = "traditional", only;
  int budget_flag = -1;
  bool strengthened = false, serial = false;

  auto* prove_cmd = app.add_subcommand("prove", "prove a sequent or syllogism");
  prove_cmd->add_option("input", input, "sequent or syllogism")->required();
  prove_cmd->add_option("--system", system_flag,
                        "syll | syll+ | syll++ | syll+* | rll");
  prove_cmd->add_option("--budget", budget_flag,
                        "axiom injections allowed per variable");
  prove_cmd->add_option("--format", format, "text | json");
  prove_cmd->add_option("--report", report_file, "write a JSON report");

  auto* enum_cmd =
      app.add_subcommand("enumerate", "sweep a candidate space");
  enum_cmd->add_option("--kind", kind_flag, "traditional | demorgan");
  enum_cmd->add_flag("--strengthened", strengthened,
                     "include an existential-import premise");
  enum_cmd->add_option("--only", only,
                       "provable | disagreements | findings");
  enum_cmd->add_option("--format", format, "text | json");
  enum_cmd->add_option("--report", report_file, "write a JSON report");
  enum_cmd->add_flag("--serial", serial, "force the serial reference sweep");

  auto* net_cmd = app.add_subcommand("net", "translate and build a proof net");
  net_cmd->add_option("input", input, "'|-' sequent or syllogism")->required();
  net_cmd->add_option("--format", format, "text | json | dot");

  auto* tables_cmd = app.add_subcommand("tables", "print an embedded table");
  tables_cmd->add_option("--kind", kind_flag, "traditional | demorgan");
  tables_cmd->add_flag("--strengthened", strengthened,
                       "strengthened moods");

  auto* verify_cmd =
      app.add_subcommand("verify", "replay a JSON report's proofs");
  verify_cmd->add_option("file", input, "report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (prove_cmd->parsed())
      return cmd_prove(input, system_flag, budget_flag, format, report_file);
    if (enum_cmd->parsed())
      return cmd_enumerate(kind_flag, strengthened, only, format, report_file,
                           serial);
    if (net_cmd->parsed()) return cmd_net(input, format);
    if (tables_cmd->parsed()) return cmd_tables(kind_flag, strengthened);
    if (verify_cmd->parsed()) return cmd_verify(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
