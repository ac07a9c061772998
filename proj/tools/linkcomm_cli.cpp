// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: deterministic text/JSON reports over the exact
// verification suites, cusp-parameter formulas, regulator vectors, the
// mutant classification, the canonicity checks and the integrality scans.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "linkcomm/bloch.hpp"
#include "linkcomm/cusp_moduli.hpp"
#include "linkcomm/kleinian.hpp"
#include "linkcomm/moebius.hpp"
#include "linkcomm/polyhedra.hpp"
#include "linkcomm/tiling.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace linkcomm;

constexpr const char* kVersion = "linkcomm 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

// Floats are always rendered through this 12-significant-digit formatter so
// that output is byte-identical across runs and platforms.
std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::string(buf);
}

json rational_json(const Rational& q) { return to_string(q); }

json cusp_json(const CuspParameter& z) {
  json j;
  j["q1"] = rational_json(z.q1);
  j["q2"] = rational_json(z.q2);
  j["str"] = z.str();
  j["imag"] = fmt12(z.imag().embed(1));
  return j;
}

json nfe_json(const NumberFieldElement& z) {
  return json::array({to_string(z.a), to_string(z.b), to_string(z.c), to_string(z.d)});
}

json report_json(const CheckReport& r) {
  json j;
  j["title"] = r.title;
  j["ok"] = r.ok();
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  return j;
}

void print_report_text(const CheckReport& r) {
  std::cout << "== " << r.title << " ==\n";
  for (const auto& c : r.checks) {
    std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) std::cout << " -- " << c.detail;
    std::cout << "\n";
  }
}

std::string word_string(const MutationWord& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

// The envelope shared by every subcommand; key order is fixed.
json envelope(const std::string& command, json inputs, json results, bool ok) {
  json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["ok"] = ok;
  j["version"] = kVersion;
  return j;
}

void emit(const json& env) { std::cout << env.dump(2) << "\n"; }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MutationWord parse_word_checked(const std::string& text, bool zero_two_only) {
  MutationWord w;
  try {
    w = parse_mutation_word(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --mutation word '") + text + "': " + e.what());
  }
  if (zero_two_only) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 0 && w[i] != 2) {
        throw UsageError("bad --mutation word '" + text + "': entry " + std::to_string(w[i]) +
                         " at position " + std::to_string(i) +
                         " (this subcommand allows only 0 and 2)");
      }
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(int n, bool break_injection, bool use_json) {
  std::vector<CheckReport> reports;
  reports.push_back(identity_suite());

  CheckReport oct = verify_internal_face_pairing(regular_ideal_octahedron(), octahedron_pairing());
  oct.title = "octahedron face pairing";
  reports.push_back(oct);

  CheckReport cub = verify_internal_face_pairing(ideal_cuboctahedron(), cuboctahedron_pairing());
  cub.title = "cuboctahedron face pairing";
  reports.push_back(cub);

  reports.push_back(commensurator_suite(n));
  reports.push_back(tiling_report());

  if (break_injection) {
    // Negative-control hook: perturb the stored matrix of p3 and re-test its
    // defining expression, which must now fail.
    CheckReport broken;
    broken.title = "injected break";
    const ExtendedMoebius p3 = builtin_generators().at("p3");
    ExtendedMoebius perturbed = p3;
    perturbed.a = perturbed.a + NumberFieldElement(1);
    broken.add("perturbed p3 expression", perturbed == p3,
               "p3 with its (1,1) entry shifted by 1 against the stored p3");
    reports.push_back(broken);
  }

  bool all_ok = true;
  std::string first_fail;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      if (!c.pass && all_ok) {
        all_ok = false;
        first_fail = r.title + ": " + c.name;
      }
    }
  }

  json inputs = {{"n", n}, {"break_injection", break_injection}};
  if (use_json) {
    json results;
    json suites = json::array();
    for (const auto& r : reports) suites.push_back(report_json(r));
    results["suites"] = suites;
    if (!all_ok) results["first_failure"] = first_fail;
    emit(envelope("verify", inputs, results, all_ok));
  } else {
    for (const auto& r : reports) print_report_text(r);
    if (all_ok) {
      std::cout << "verify: all checks passed\n";
    } else {
      std::cout << "verify: FAILED at " << first_fail << "\n";
    }
  }
  return all_ok ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// moduli
// ---------------------------------------------------------------------------

int cmd_moduli(int n, const std::string& mutation, bool use_json) {
  json inputs;
  std::pair<CuspParameter, CuspParameter> T;
  bool assembly_matches = true;
  if (!mutation.empty()) {
    const MutationWord I = parse_word_checked(mutation, /*zero_two_only=*/true);
    if (n > 0 && static_cast<size_t>(n) + 1 != I.size()) {
      throw UsageError("--n " + std::to_string(n) + " disagrees with --mutation length " +
                       std::to_string(I.size()) + " (need n+1 entries)");
    }
    T = mutant_moduli(I);
    assembly_matches = assemble_mutant_moduli(I) == T;
    inputs["n"] = static_cast<int>(I.size()) - 1;
    inputs["mutation"] = word_string(I);
  } else {
    if (n < 1) throw UsageError("moduli needs --n >= 1 or --mutation");
    T = mn_moduli(n);
    inputs["n"] = n;
  }

  if (use_json) {
    json results;
    results["T1"] = cusp_json(T.first);
    results["T2"] = cusp_json(T.second);
    results["assembly_matches"] = assembly_matches;
    emit(envelope("moduli", inputs, results, assembly_matches));
  } else {
    std::cout << "T1 = " << T.first.str() << "  (" << fmt12(T.first.imag().embed(1)) << "i)\n";
    std::cout << "T2 = " << T.second.str() << "  (" << fmt12(T.second.imag().embed(1)) << "i)\n";
    std::cout << "assembly cross-check: " << (assembly_matches ? "match" : "MISMATCH") << "\n";
  }
  return assembly_matches ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// regulator
// ---------------------------------------------------------------------------

int cmd_regulator(int n, bool use_json) {
  if (n < 1) throw UsageError("regulator needs --n >= 1");
  const PreBlochElement beta = bloch_invariant_Mn(n);
  const RegulatorVector r = borel_regulator(beta);

  json inputs = {{"n", n}};
  if (use_json) {
    json results;
    json terms = json::array();
    for (const auto& [z, c] : beta.terms) {
      terms.push_back({{"z", nfe_json(z)}, {"coefficient", c}});
    }
    results["invariant"] = terms;
    results["regulator"] = {{"r1", fmt12(r.r1)}, {"r2", fmt12(r.r2)}};
    emit(envelope("regulator", inputs, results, true));
  } else {
    std::cout << "invariant: " << beta.str() << "\n";
    std::cout << "regulator = (" << fmt12(r.r1) << ", " << fmt12(r.r2) << ")\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

int cmd_classify(int n, long bound, bool use_json) {
  if (n < 1 || n > 12) throw UsageError("classify needs 1 <= --n <= 12");
  const FamilyClassification fam = classify_family(n);

  // Optional spot-check of the fast criterion against the integer-matrix
  // oracle on the first few decided pairs.
  int oracle_checked = 0, oracle_agreed = 0;
  if (bound > 0) {
    const size_t limit = std::min<size_t>(fam.entries.size(), 6);
    for (size_t i = 0; i < limit; ++i) {
      for (size_t j = i; j < limit; ++j) {
        const auto fast = pgl2q_equivalent(fam.entries[i].T1, fam.entries[j].T1);
        if (!fast) continue;
        const bool oracle =
            brute_force_pgl2q(fam.entries[i].T1, fam.entries[j].T1, bound).has_value();
        ++oracle_checked;
        if (*fast == oracle) ++oracle_agreed;
      }
    }
  }
  const bool ok = oracle_checked == oracle_agreed;

  json inputs = {{"n", n}, {"bound", bound}};
  if (use_json) {
    json results;
    json entries = json::array();
    for (const auto& e : fam.entries) {
      json je;
      je["word"] = word_string(e.word);
      je["T1"] = {{"q1", rational_json(e.T1.q1)}, {"q2", rational_json(e.T1.q2)}};
      je["T2"] = {{"q1", rational_json(e.T2.q1)}, {"q2", rational_json(e.T2.q2)}};
      je["class_id"] = e.class_id;
      entries.push_back(je);
    }
    results["entries"] = entries;
    results["num_classes"] = fam.num_classes;
    if (bound > 0) {
      results["oracle"] = {{"checked", oracle_checked}, {"agreed", oracle_agreed}};
    }
    emit(envelope("classify", inputs, results, ok));
  } else {
    for (const auto& e : fam.entries) {
      std::cout << e.word.size() << "-word " << word_string(e.word) << "  T1=" << e.T1.str()
                << "  T2=" << e.T2.str() << "  class " << e.class_id << "\n";
    }
    std::cout << "num_classes = " << fam.num_classes << "\n";
    if (bound > 0) {
      std::cout << "oracle agreement: " << oracle_agreed << "/" << oracle_checked << "\n";
    }
  }
  return ok ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// tiling-check
// ---------------------------------------------------------------------------

int cmd_tiling_check(bool use_json) {
  const CheckReport r = tiling_report();
  if (use_json) {
    json results;
    results["report"] = report_json(r);
    json witnesses = json::array();
    for (const auto& w : convexity_witnesses()) {
      witnesses.push_back({{"description", w.description},
                           {"value", w.value.str()},
                           {"expected", w.expected.str()}});
    }
    results["witnesses"] = witnesses;
    emit(envelope("tiling-check", json::object(), results, r.ok()));
  } else {
    print_report_text(r);
  }
  return r.ok() ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// integrality
// ---------------------------------------------------------------------------

int cmd_integrality(int n, const std::string& mutation, int max_word_length, bool use_json) {
  GroupSpec group;
  json inputs;
  if (!mutation.empty()) {
    const MutationWord I = parse_word_checked(mutation, /*zero_two_only=*/false);
    if (n > 0 && static_cast<size_t>(n) + 1 != I.size()) {
      throw UsageError("--n " + std::to_string(n) + " disagrees with --mutation length " +
                       std::to_string(I.size()) + " (need n+1 entries)");
    }
    group = gamma_I(I);
    inputs["n"] = static_cast<int>(I.size()) - 1;
    inputs["mutation"] = word_string(I);
  } else {
    if (n < 1) throw UsageError("integrality needs --n >= 1 or --mutation");
    group = gamma_n(n);
    inputs["n"] = n;
  }
  inputs["max_word_length"] = max_word_length;

  const IntegralityScanResult res = integrality_scan(group, max_word_length);
  if (use_json) {
    json results;
    results["group"] = group.name;
    results["all_integral"] = res.all_integral;
    results["words_checked"] = res.words_checked;
    if (!res.all_integral) {
      results["witness_word"] = res.witness_word;
      results["witness_trace"] = nfe_json(res.witness_trace);
    }
    emit(envelope("integrality", inputs, results, true));
  } else {
    std::cout << "group " << group.name << ": scanned " << res.words_checked << " words up to length "
              << max_word_length << "\n";
    if (res.all_integral) {
      std::cout << "all traces are algebraic integers\n";
    } else {
      std::cout << "nonintegral trace at word " << res.witness_word << ": "
                << res.witness_trace.str() << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

int cmd_report(int n, const std::string& mutation, bool use_json) {
  if (n < 1) throw UsageError("report needs --n >= 1");

  const CheckReport ids = identity_suite();
  const CheckReport tiles = tiling_report();
  const std::pair<CuspParameter, CuspParameter> T =
      mutation.empty() ? mn_moduli(n)
                       : mutant_moduli(parse_word_checked(mutation, /*zero_two_only=*/true));
  const RegulatorVector r = borel_regulator(bloch_invariant_Mn(n));
  const bool ok = ids.ok() && tiles.ok();

  json inputs = {{"n", n}};
  if (!mutation.empty()) inputs["mutation"] = mutation;
  if (use_json) {
    json results;
    results["identity_suite_ok"] = ids.ok();
    results["tiling_ok"] = tiles.ok();
    results["T1"] = cusp_json(T.first);
    results["T2"] = cusp_json(T.second);
    results["regulator"] = {{"r1", fmt12(r.r1)}, {"r2", fmt12(r.r2)}};
    emit(envelope("report", inputs, results, ok));
  } else {
    std::cout << "identity suite: " << (ids.ok() ? "pass" : "FAIL") << "\n";
    std::cout << "canonicity report: " << (tiles.ok() ? "pass" : "FAIL") << "\n";
    std::cout << "T1 = " << T.first.str() << "\n";
    std::cout << "T2 = " << T.second.str() << "\n";
    std::cout << "regulator = (" << fmt12(r.r1) << ", " << fmt12(r.r2) << ")\n";
  }
  return ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for chained-manifold commensurability data"};
  app.require_subcommand(1);

  int n = 0;
  std::string mutation;
  bool use_json = false;
  bool break_injection = false;
  int max_word_length = 3;
  long bound = 0;

  auto add_common = [&](CLI::App* sub, bool with_n, bool with_mutation) {
    if (with_n) sub->add_option("--n", n, "chain length");
    if (with_mutation) sub->add_option("--mutation", mutation, "comma-separated mutation word");
    sub->add_flag("--json", use_json, "emit a JSON envelope");
  };

  CLI::App* verify = app.add_subcommand("verify", "run every exact verification suite");
  add_common(verify, true, false);
  verify->add_flag("--break-injection", break_injection, "negative-control hook");

  CLI::App* moduli = app.add_subcommand("moduli", "cusp parameters of a chain or mutant");
  add_common(moduli, true, true);

  CLI::App* regulator = app.add_subcommand("regulator", "regulator vector of the chain invariant");
  add_common(regulator, true, false);

  CLI::App* classify = app.add_subcommand("classify", "classify the mutant family of length n");
  add_common(classify, true, false);
  classify->add_option("--bound", bound, "entry bound for the integer-matrix oracle spot-check");

  CLI::App* tiling = app.add_subcommand("tiling-check", "exact canonicity report");
  add_common(tiling, false, false);

  CLI::App* integrality = app.add_subcommand("integrality", "trace-integrality scan");
  add_common(integrality, true, true);
  integrality->add_option("--max-word-length", max_word_length, "maximum scanned word length");

  CLI::App* report = app.add_subcommand("report", "aggregate report for one chain");
  add_common(report, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(n >= 1 ? n : 1, break_injection, use_json);
    if (moduli->parsed()) return cmd_moduli(n, mutation, use_json);
    if (regulator->parsed()) return cmd_regulator(n, use_json);
    if (classify->parsed()) return cmd_classify(n, bound, use_json);
    if (tiling->parsed()) return cmd_tiling_check(use_json);
    if (integrality->parsed()) return cmd_integrality(n, mutation, max_word_length, use_json);
    if (report->parsed()) return cmd_report(n, mutation, use_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
