#pragma once

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordpat/dot.hpp"
#include "ordpat/enumerate.hpp"
#include "ordpat/errors.hpp"
#include "ordpat/json_io.hpp"
#include "ordpat/pattern.hpp"
#include "ordpat/poset.hpp"
#include "ordpat/report.hpp"
#include "ordpat/set_system.hpp"
#include "ordpat/sigma.hpp"
#include "ordpat/witness.hpp"

namespace ordpat {

namespace detail {

inline std::size_t env_bound(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0')
    throw Error(std::string(name) + ": not a number: " + v);
  return static_cast<std::size_t>(x);
}

inline void emit(const std::string& text, const std::string& path,
                 std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

// A concrete reason when the backtracking search comes up empty, so failed
// reports still carry something checkable by hand.
inline std::vector<std::string> no_embedding_witness(const Poset& sub,
                                                     const Poset& sup) {
  if (sub.size() > sup.size())
    return {"source has " + std::to_string(sub.size()) +
            " elements, target only " + std::to_string(sup.size())};
  const auto ss = element_stats(sub);
  const auto ts = element_stats(sup);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < sup.size() && !any; ++j)
      any = stats_compatible(ss[i], ts[j]);
    if (!any)
      return {"no target element can host " + sub.label(i) +
              " (degree/height profile)"};
  }
  return {"exhaustive search exhausted all assignments"};
}

}  // namespace detail

/// Runs the command line given args (without the program name), writing to
/// the provided streams. Returns the process exit code: 0 all good, 1 a
/// check failed (report still written), 2 usage or input error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"dividing-line posets: consistency patterns, their Sigma "
               "posets, and set-system realizations"};
  app.name("ordpat");
  app.require_subcommand(1);

  std::string opath;
  bool human = false;

  // pattern gen / pattern check
  auto* pattern = app.add_subcommand("pattern", "consistency patterns");
  pattern->require_subcommand(1);
  auto* pgen = pattern->add_subcommand("gen", "generate a pattern");
  std::string kind;
  std::size_t depth = 3, rows = 3, cols = 3, npar = 3, branching = 3;
  pgen->add_option("--kind", kind, "tp1|tp2|atp|sop3|tp")
      ->required()
      ->check(CLI::IsMember({"tp1", "tp2", "atp", "sop3", "tp"}));
  pgen->add_option("--depth", depth, "tree depth (tp1, atp, tp)");
  pgen->add_option("--rows", rows, "grid rows (tp2)");
  pgen->add_option("--cols", cols, "grid columns (tp2)");
  pgen->add_option("--n", npar, "truncation radius (sop3)");
  pgen->add_option("--branching", branching, "tree branching (tp)");
  pgen->add_option("-o,--output", opath, "write to file instead of stdout");

  auto* pcheck = pattern->add_subcommand("check", "check pattern axioms");
  std::string pcheck_file, axiom;
  pcheck->add_option("file", pcheck_file, "pattern JSON")->required();
  pcheck->add_option("--axiom", axiom, "restrict to c|m|weak|coverage")
      ->check(CLI::IsMember({"c", "m", "weak", "coverage"}));
  pcheck->add_flag("--human", human, "tabular text instead of JSON");
  pcheck->add_option("-o,--output", opath, "write to file instead of stdout");

  // sigma build / sigma verify
  auto* sigma = app.add_subcommand("sigma", "Sigma posets");
  sigma->require_subcommand(1);
  auto* sbuild = sigma->add_subcommand("build", "build a Sigma poset");
  std::size_t op_n = 0, ip_n = 0, bound = 0;
  std::string sigma_pattern_file;
  bool audit = false;
  auto* op_opt = sbuild->add_option("--op", op_n, "Sigma_OP of size n");
  auto* ip_opt = sbuild->add_option("--ip", ip_n, "Sigma_IP of size n");
  auto* pat_opt =
      sbuild->add_option("--pattern", sigma_pattern_file, "Sigma_P of a pattern");
  sbuild->add_flag("--audit", audit, "emit r0/r1/r2 alongside (with --pattern)");
  sbuild->add_option("--bound", bound, "override the Sigma_IP size bound");
  sbuild->add_option("-o,--output", opath, "write to file instead of stdout");

  auto* sverify = sigma->add_subcommand("verify", "verify Sigma_P properties");
  std::string sverify_file;
  sverify->add_option("--pattern", sverify_file, "pattern JSON")->required();
  sverify->add_flag("--human", human, "tabular text instead of JSON");
  sverify->add_option("-o,--output", opath, "write to file instead of stdout");

  // witness verbs
  auto* witness = app.add_subcommand("witness", "set-system realizations");
  witness->require_subcommand(1);
  auto* wop = witness->add_subcommand("op", "realize sigma_op(n) by sets");
  std::size_t wn = 1;
  wop->add_option("--n", wn, "size")->required();
  wop->add_option("-o,--output", opath, "write to file instead of stdout");
  auto* wip = witness->add_subcommand("ip", "realize sigma_ip(n) by sets");
  wip->add_option("--n", wn, "size")->required();
  wip->add_option("--bound", bound, "override the size bound");
  wip->add_option("-o,--output", opath, "write to file instead of stdout");
  auto* wpat = witness->add_subcommand("pattern", "realize Sigma_P by sets");
  std::string wpat_file;
  bool no_padding = false;
  wpat->add_option("file", wpat_file, "pattern JSON")->required();
  wpat->add_flag("--no-padding", no_padding, "drop the two padding points");
  wpat->add_option("-o,--output", opath, "write to file instead of stdout");
  auto* wcheck = witness->add_subcommand("check", "embed a poset into a system");
  std::string wsys_file, wsigma_file;
  wcheck->add_option("--system", wsys_file, "set system JSON")->required();
  wcheck->add_option("--sigma", wsigma_file, "poset JSON")->required();
  wcheck->add_flag("--human", human, "tabular text instead of JSON");
  wcheck->add_option("-o,--output", opath, "write to file instead of stdout");
  auto* wround = witness->add_subcommand(
      "roundtrip", "pattern -> Sigma_P -> sets -> pattern witness");
  std::string wround_file;
  wround->add_option("--pattern", wround_file, "pattern JSON")->required();
  wround->add_flag("--human", human, "tabular text instead of JSON");
  wround->add_option("-o,--output", opath, "write to file instead of stdout");

  // embed / enumerate / export dot
  auto* embed = app.add_subcommand("embed", "search for an order embedding");
  std::string sub_file, sup_file;
  embed->add_option("--sub", sub_file, "source poset JSON")->required();
  embed->add_option("--sup", sup_file, "target poset JSON")->required();
  embed->add_option("-o,--output", opath, "write to file instead of stdout");

  auto* enumerate = app.add_subcommand("enumerate", "posets up to isomorphism");
  enumerate->add_option("--n", wn, "element count")->required();
  enumerate->add_option("--bound", bound, "override the enumeration bound");
  enumerate->add_option("-o,--output", opath, "write to file instead of stdout");

  auto* exportc = app.add_subcommand("export", "export formats");
  exportc->require_subcommand(1);
  auto* edot = exportc->add_subcommand("dot", "Hasse diagram as DOT");
  std::string edot_file;
  edot->add_option("file", edot_file, "poset JSON")->required();
  edot->add_option("-o,--output", opath, "write to file instead of stdout");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto report_out = [&](const Report& r) {
    detail::emit(human ? to_text(r) : dump_json(report_to_json(r)), opath, out);
    return r.ok() ? 0 : 1;
  };

  try {
    if (pgen->parsed()) {
      ConsistencyPattern p;
      if (kind == "tp1") p = gen_tp1(depth);
      else if (kind == "tp2") p = gen_tp2(rows, cols);
      else if (kind == "atp") p = gen_atp(depth);
      else if (kind == "sop3") p = gen_sop3(npar);
      else p = gen_tp(depth, branching);
      detail::emit(dump_json(pattern_to_json(p)), opath, out);
      return 0;
    }
    if (pcheck->parsed()) {
      const ConsistencyPattern p = pattern_from_json(load_json(pcheck_file));
      Report r;
      if (axiom.empty() || axiom == "c") r.merge(validate_pattern(p));
      if (axiom.empty() || axiom == "m") r.merge(check_maximality(p));
      if (axiom.empty() || axiom == "weak") r.merge(check_weak_maximality(p));
      if (axiom.empty() || axiom == "coverage") r.merge(check_coverage(p));
      return report_out(r);
    }
    if (sbuild->parsed()) {
      const int given = (*op_opt ? 1 : 0) + (*ip_opt ? 1 : 0) + (*pat_opt ? 1 : 0);
      if (given != 1) {
        err << "error: sigma build needs exactly one of --op, --ip, --pattern\n";
        return 2;
      }
      if (*op_opt) {
        detail::emit(dump_json(poset_to_json(sigma_op(op_n))), opath, out);
        return 0;
      }
      if (*ip_opt) {
        const std::size_t b =
            bound ? bound : detail::env_bound("ORDPAT_IP_BOUND", kDefaultIpBound);
        detail::emit(dump_json(poset_to_json(sigma_ip(ip_n, b))), opath, out);
        return 0;
      }
      const ConsistencyPattern p =
          pattern_from_json(load_json(sigma_pattern_file));
      const SigmaPatternPoset sp = sigma_pattern(p);
      detail::emit(dump_json(audit ? sigma_audit_to_json(sp)
                                   : poset_to_json(sp.poset)),
                   opath, out);
      return 0;
    }
    if (sverify->parsed()) {
      const ConsistencyPattern p = pattern_from_json(load_json(sverify_file));
      return report_out(verify_sigma_properties(sigma_pattern(p)));
    }
    if (wop->parsed()) {
      detail::emit(dump_json(intended_system_to_json(op_sigma_sets(wn))), opath,
                   out);
      return 0;
    }
    if (wip->parsed()) {
      const std::size_t b =
          bound ? bound
                : detail::env_bound("ORDPAT_IP_BOUND", kDefaultIpWitnessBound);
      detail::emit(dump_json(intended_system_to_json(ip_sigma_sets(wn, b))),
                   opath, out);
      return 0;
    }
    if (wpat->parsed()) {
      const ConsistencyPattern p = pattern_from_json(load_json(wpat_file));
      detail::emit(
          dump_json(intended_system_to_json(pattern_sigma_sets(p, !no_padding))),
          opath, out);
      return 0;
    }
    if (wcheck->parsed()) {
      const IntendedSystem is = intended_system_from_json(load_json(wsys_file));
      const Poset sigma = poset_from_json(load_json(wsigma_file));
      Report r;
      if (!is.intended.empty()) r.merge(check_intended_embedding(is, sigma));
      const auto found = has_sop(is.system, sigma);
      r.add(found ? CheckResult::pass("embedding_search")
                  : CheckResult::fail(
                        "embedding_search",
                        detail::no_embedding_witness(
                            sigma, inclusion_poset(is.system).poset),
                        "no embedding into the inclusion order"));
      return report_out(r);
    }
    if (wround->parsed()) {
      const ConsistencyPattern p = pattern_from_json(load_json(wround_file));
      const SigmaPatternPoset sp = sigma_pattern(p);
      const IntendedSystem is = pattern_sigma_sets(p);
      Report r = check_intended_embedding(is, sp.poset);
      if (r.ok()) {
        const auto e = intended_embedding(is, sp.poset);
        if (!e) throw Error("intended map passed checks but failed packaging");
        r.merge(verify_pattern_witness(
            extract_pattern_witness(is.system, *e, p)));
      } else {
        r.add(CheckResult::skip("disjoint", "intended map is not an embedding"));
        r.add(CheckResult::skip("consistent", "intended map is not an embedding"));
      }
      return report_out(r);
    }
    if (embed->parsed()) {
      const Poset sub = poset_from_json(load_json(sub_file));
      const Poset sup = poset_from_json(load_json(sup_file));
      const auto e = find_embedding(sub, sup);
      json j{{"found", e.has_value()}};
      if (e) j["map"] = embedding_to_json(*e)["map"];
      detail::emit(dump_json(j), opath, out);
      return e ? 0 : 1;
    }
    if (enumerate->parsed()) {
      const std::size_t b =
          bound ? bound : detail::env_bound("ORDPAT_ENUM_BOUND", kDefaultEnumBound);
      const auto all = enumerate_posets(wn, b);
      json posets = json::array();
      for (const auto& p : all) posets.push_back(poset_to_json(p));
      detail::emit(dump_json(json{{"n", wn},
                                  {"count", all.size()},
                                  {"posets", std::move(posets)}}),
                   opath, out);
      return 0;
    }
    if (edot->parsed()) {
      detail::emit(export_dot(poset_from_json(load_json(edot_file))), opath, out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace ordpat
