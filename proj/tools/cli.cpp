// Command-line front end. Talks to the library exclusively through the
// C API; reports arrive as JSON and are either echoed (--json) or
// rendered as plain text tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitalg/splitalg.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

// Exit code for a failed C API call.
int exit_code_of(int status) {
  switch (status) {
    case SA_EPARSE:
    case SA_EINVALID: return kExitData;
    case SA_EARG: return kExitUsage;
    default: return kExitInternal;
  }
}

[[noreturn]] void die(int status) {
  std::cerr << "error: " << sa_last_error() << "\n";
  std::exit(exit_code_of(status));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(kExitData);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GraphHandle {
  sa_graph* g = nullptr;
  ~GraphHandle() { sa_graph_free(g); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { sa_string_free(s); }
};

json take_json(const OwnedString& owned) { return json::parse(owned.s); }

std::string coeff_str(const json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

void print_series(const json& series) {
  std::cout << "series (order " << series["order"].get<int>() << "):";
  for (const auto& c : series["coeffs"]) std::cout << " " << coeff_str(c);
  std::cout << "\n";
  if (!series["negative_at"].is_null())
    std::cout << "  warning: negative coefficient at degree "
              << series["negative_at"].get<int>() << "\n";
}

void print_s_table(const json& table) {
  std::cout << "s-table:\n";
  for (const auto& row : table)
    std::cout << "  s_{" << row["a"].get<int>() << "," << row["b"].get<int>()
              << "} = " << coeff_str(row["s"]) << "\n";
}

void print_koszul(const json& doc) {
  std::cout << "H(A,z)^-1     : "
            << doc["hilbert_inverse"]["string"].get<std::string>() << "\n";
  std::cout << "H(A^!,z)      : "
            << doc["dual_hilbert"]["string"].get<std::string>() << "\n";
  const json& residual = doc["residual"];
  std::cout << "residual      : "
            << (residual["coeffs"].empty() ? "0"
                                           : residual["string"].get<std::string>())
            << "\n";
  std::cout << "b-coefficients:";
  for (const auto& c : doc["b_coeffs"]) std::cout << " " << coeff_str(c);
  std::cout << "\n";
  const json& screen = doc["screen"];
  std::cout << "positivity    : " << (screen["pass"].get<bool>() ? "pass" : "fail");
  if (!screen["fail_degree"].is_null())
    std::cout << " (degree " << screen["fail_degree"].get<int>() << ", coefficient "
              << coeff_str(screen["fail_coeff"]) << ")";
  std::cout << "\n";
  if (!doc["uniform"].get<bool>())
    std::cout << "warning: graph is not uniform; the quadratic presentation "
                 "is not justified\n";
  const json& suff = doc["sufficient_condition"];
  if (suff.is_null()) {
    std::cout << "sufficient condition: not evaluated\n";
  } else {
    std::cout << "sufficient condition: " << suff["checked"].get<int>()
              << " instance(s) checked, "
              << (suff["all_hold"].get<bool>() ? "all hold" : "failed");
    if (!suff["first_failure"].is_null()) {
      const json& f = suff["first_failure"];
      std::cout << " first at (v=" << f["v"].get<std::string>()
                << ", j=" << f["j"].get<int>() << ", l=" << f["l"].get<int>()
                << ")";
    }
    std::cout << "\n";
  }
  std::cout << "verdict       : " << doc["verdict"].get<std::string>() << "\n";
}

int verdict_exit(const json& doc) {
  std::string verdict = doc["verdict"].get<std::string>();
  if (verdict == "NotNumericallyKoszul") return 1;
  if (verdict == "Inconclusive") return 2;
  return 0;
}

void print_polynomial_pair(const char* label, const json& pair) {
  std::cout << label << "\n";
  std::cout << "  H(A,z)^-1: "
            << pair["hilbert_inverse"]["string"].get<std::string>() << "\n";
  std::cout << "  H(A^!,z) : "
            << pair["dual_hilbert"]["string"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series and Koszulity analysis of splitting algebras "
               "of layered graphs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the raw JSON report");

  std::string path;
  int order = 6;
  bool modular = false, add_top = false, strict = false;

  CLI::App* validate = app.add_subcommand("validate", "check graph invariants");
  validate->add_option("file", path)->required();

  CLI::App* hilbert =
      app.add_subcommand("hilbert", "inverse Hilbert polynomial and series");
  hilbert->add_option("file", path)->required();
  hilbert->add_option("--order", order, "series expansion depth")
      ->default_val(6);

  CLI::App* dual = app.add_subcommand("dual", "dual Hilbert series");
  dual->add_option("file", path)->required();
  dual->add_flag("--modular", modular, "modular fast path for kernel ranks");

  CLI::App* koszul = app.add_subcommand("koszul", "full Koszulity report");
  koszul->add_option("file", path)->required();
  koszul->add_flag("--modular", modular);

  CLI::App* surface =
      app.add_subcommand("surface", "closed forms and Euler report");
  surface->add_option("file", path)->required();
  surface->add_flag("--modular", modular);

  CLI::App* simplicial =
      app.add_subcommand("simplicial", "simplicial-complex analysis");
  simplicial->add_option("file", path)->required();
  simplicial->add_flag("--add-top", add_top, "append a unique maximal vertex");
  simplicial->add_flag("--strict", strict,
                       "reject faces that are not downward closed");
  simplicial->add_flag("--modular", modular);

  CLI::App* orbits =
      app.add_subcommand("orbits", "conjugation orbits on a surface graph");
  orbits->add_option("file", path)->required();

  CLI::App* demo = app.add_subcommand("demo", "worked examples");
  std::string demo_name;
  demo->add_option("name", demo_name, "example name (cassidy-shelton)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (demo->parsed()) {
    if (demo_name != "cassidy-shelton") {
      std::cerr << "error: unknown demo \"" << demo_name << "\"\n";
      return kExitUsage;
    }
    OwnedString report;
    if (int rc = sa_demo_cassidy_shelton(&report.s)) die(rc);
    json doc = take_json(report);
    if (as_json) {
      std::cout << report.s;
      return 0;
    }
    print_s_table(doc["s_table"]);
    print_koszul(doc);
    return verdict_exit(doc);
  }

  std::string text = read_file(path);

  if (validate->parsed()) {
    OwnedString report;
    if (int rc = sa_validate_json(text.c_str(), &report.s)) die(rc);
    json doc = take_json(report);
    if (as_json) {
      std::cout << report.s;
    } else if (doc["ok"].get<bool>()) {
      const json& g = doc["graph"];
      std::cout << "ok: " << g["vertices"].get<int>() << " vertices, "
                << g["edges"].get<int>() << " edges, height "
                << g["height"].get<int>() << ", "
                << (g["uniform"].get<bool>() ? "uniform" : "not uniform")
                << "\n";
    } else {
      for (const auto& issue : doc["issues"])
        std::cout << issue["kind"].get<std::string>() << ": "
                  << issue["detail"].get<std::string>() << "\n";
    }
    return doc["ok"].get<bool>() ? 0 : kExitData;
  }

  GraphHandle handle;
  if (simplicial->parsed()) {
    if (int rc = sa_graph_from_simplicial_json(text.c_str(), add_top, strict,
                                               &handle.g))
      die(rc);
  } else if (surface->parsed() || orbits->parsed()) {
    if (int rc = sa_graph_from_surface_json(text.c_str(), &handle.g)) die(rc);
  } else {
    if (int rc = sa_graph_load_json(text.c_str(), &handle.g)) die(rc);
  }

  OwnedString report;
  if (hilbert->parsed()) {
    if (int rc = sa_hilbert_report(handle.g, order, &report.s)) die(rc);
    json doc = take_json(report);
    if (as_json) {
      std::cout << report.s;
      return 0;
    }
    std::cout << "H(A,z)^-1: "
              << doc["hilbert_inverse"]["string"].get<std::string>() << "\n";
    std::cout << "alternative chain-sum form matches: "
              << (doc["grw_inverse_matches"].get<bool>() ? "yes" : "no") << "\n";
    print_series(doc["series"]);
    print_s_table(doc["s_table"]);
    if (!doc["euler_mu"].is_null()) {
      const json& mu = doc["euler_mu"];
      std::cout << "mu(*, top) = " << coeff_str(mu["mu"])
                << ", top coefficient = " << coeff_str(mu["top_coeff"]) << "\n";
    }
    return 0;
  }

  if (dual->parsed()) {
    if (int rc = sa_dual_report(handle.g, modular, &report.s)) die(rc);
    json doc = take_json(report);
    if (as_json) {
      std::cout << report.s;
      return 0;
    }
    std::cout << "H(A^!,z): " << doc["polynomial"]["string"].get<std::string>()
              << "\n";
    for (int k = 0;; ++k) {
      std::string key = std::to_string(k);
      if (!doc["dims"].contains(key)) break;
      std::cout << "  dim R^(" << k << ") = " << coeff_str(doc["dims"][key])
                << "\n";
    }
    if (!doc["uniform"].get<bool>())
      std::cout << "warning: graph is not uniform\n";
    return 0;
  }

  if (koszul->parsed()) {
    if (int rc = sa_koszul_report(handle.g, modular, &report.s)) die(rc);
    json doc = take_json(report);
    if (as_json)
      std::cout << report.s;
    else
      print_koszul(doc);
    return verdict_exit(doc);
  }

  if (surface->parsed()) {
    if (int rc = sa_surface_report(handle.g, modular, &report.s)) die(rc);
    json doc = take_json(report);
    if (as_json) {
      std::cout << report.s;
      return 0;
    }
    const json& counts = doc["counts"];
    std::cout << "g=" << counts["g"].get<int>() << " h=" << counts["h"].get<int>()
              << " f=" << counts["f"].get<int>()
              << " chi=" << counts["chi"].get<int>() << "\n";
    print_polynomial_pair("closed forms:", doc["closed_forms"]);
    print_polynomial_pair("pipeline:", doc["pipeline"]);
    std::cout << "closed forms match pipeline: "
              << (doc["closed_forms_match"].get<bool>() ? "yes" : "no") << "\n";
    const json& mu = doc["euler_mu"];
    std::cout << "mu(*, M) = " << coeff_str(mu["mu"]) << " (chi - 1 = "
              << counts["chi"].get<int>() - 1 << ")\n";
    std::cout << "numerically Koszul: "
              << (doc["numerically_koszul"].get<bool>() ? "yes" : "no")
              << " (chi = 2: " << (doc["chi_equals_2"].get<bool>() ? "yes" : "no")
              << ")\n";
    return 0;
  }

  if (simplicial->parsed()) {
    if (int rc = sa_simplicial_report(handle.g, modular, &report.s)) die(rc);
    json doc = take_json(report);
    if (as_json) {
      std::cout << report.s;
      return 0;
    }
    std::cout << "H(A^!,z): " << doc["dual_hilbert"]["string"].get<std::string>()
              << "\n";
    std::cout << "H(A,z)^-1: "
              << doc["hilbert_inverse"]["string"].get<std::string>() << "\n";
    std::cout << "numerically Koszul: "
              << (doc["numerically_koszul"].get<bool>() ? "yes" : "no") << "\n";
    if (doc.contains("binomial_dims_match"))
      std::cout << "binomial dimension formula: "
                << (doc["binomial_dims_match"].get<bool>() ? "match" : "mismatch")
                << "\n";
    if (doc.contains("sab_checks"))
      std::cout << "S(A:B) membership: " << doc["sab_checks"]["checked"].get<int>()
                << " checked, "
                << (doc["sab_checks"]["all_member"].get<bool>() ? "all pass"
                                                                : "failures")
                << "\n";
    if (doc.contains("sufficient_condition"))
      std::cout << "sufficient condition: "
                << (doc["sufficient_condition"]["all_hold"].get<bool>()
                        ? "holds"
                        : "fails")
                << "\n";
    return 0;
  }

  if (orbits->parsed()) {
    if (int rc = sa_orbits_report(handle.g, &report.s)) die(rc);
    json doc = take_json(report);
    if (as_json) {
      std::cout << report.s;
      return 0;
    }
    std::printf("%-8s %-8s %10s %8s %10s %6s\n", "v", "w", "admissible",
                "orbits", "kernel", "match");
    for (const auto& row : doc["contexts"])
      std::printf("%-8s %-8s %10d %8d %10d %6s\n",
                  row["v"].get<std::string>().c_str(),
                  row["w"].get<std::string>().c_str(),
                  row["admissible"].get<int>(), row["orbits"].get<int>(),
                  row["kernel_dim"].get<int>(),
                  row["match"].get<bool>() ? "yes" : "no");
    return 0;
  }

  return kExitUsage;
}
