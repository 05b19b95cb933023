#include "splitalg/reports.hpp"

#include <algorithm>

#include "splitalg/dual.hpp"
#include "splitalg/error.hpp"
#include "splitalg/hilbert.hpp"
#include "splitalg/orient.hpp"

namespace splitalg {

using nlohmann::json;

json json_int(const mpz_class& value) {
  if (value.fits_slong_p()) return json(value.get_si());
  return json(value.get_str());
}

json polynomial_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const mpz_class& c : p.coeffs()) coeffs.push_back(json_int(c));
  return json{{"string", p.to_string()}, {"coeffs", coeffs}};
}

json graph_summary_json(const LayeredGraph& g) {
  json by_level = json::array();
  for (int lev = 0; lev <= g.height(); ++lev)
    by_level.push_back(static_cast<int>(g.level_vertices(lev).size()));
  json out{{"vertices", g.vertex_count()},
           {"edges", g.edge_count()},
           {"height", g.height()},
           {"level_sizes", by_level},
           {"uniform", is_uniform(g)}};
  if (auto top = g.unique_top())
    out["unique_top"] = g.id(*top);
  else
    out["unique_top"] = nullptr;
  return out;
}

namespace {

const char* issue_kind_name(ValidationIssue::Kind kind) {
  switch (kind) {
    case ValidationIssue::Kind::NonLayeredEdge: return "NonLayeredEdge";
    case ValidationIssue::Kind::MultipleMinima: return "MultipleMinima";
    case ValidationIssue::Kind::NoMinimum: return "NoMinimum";
    case ValidationIssue::Kind::DanglingVertex: return "DanglingVertex";
    case ValidationIssue::Kind::DuplicateEdge: return "DuplicateEdge";
    case ValidationIssue::Kind::DuplicateVertex: return "DuplicateVertex";
    case ValidationIssue::Kind::UnknownEndpoint: return "UnknownEndpoint";
    case ValidationIssue::Kind::NegativeLevel: return "NegativeLevel";
    case ValidationIssue::Kind::EmptyLevel: return "EmptyLevel";
  }
  return "Unknown";
}

json sufficient_sweep_json(const LayeredGraph& g,
                           const SufficientConditionSweep& sweep) {
  json out{{"checked", sweep.checked}, {"all_hold", sweep.all_hold}};
  if (sweep.first_failure) {
    auto [v, j, l] = *sweep.first_failure;
    out["first_failure"] = json{{"v", g.id(v)}, {"j", j}, {"l", l}};
  } else {
    out["first_failure"] = nullptr;
  }
  return out;
}

json euler_mu_json(const LayeredGraph& g, const EulerMuReport& rep) {
  (void)g;
  json out{{"height", rep.height},
           {"mu", json_int(rep.mu)},
           {"top_coeff", json_int(rep.top_coeff)},
           {"mu_equals_top", rep.mu_equals_top}};
  if (rep.chi) {
    out["chi"] = *rep.chi;
    out["mu_equals_chi_minus_one"] = rep.mu_equals_chi_minus_one;
  } else {
    out["chi"] = nullptr;
  }
  return out;
}

}  // namespace

json validation_json(const RawGraph& raw) {
  ValidationReport rep = LayeredGraph::validate(raw);
  json issues = json::array();
  for (const auto& issue : rep.issues)
    issues.push_back(
        json{{"kind", issue_kind_name(issue.kind)}, {"detail", issue.detail}});
  json out{{"ok", rep.ok()}, {"issues", issues}};
  if (rep.ok()) out["graph"] = graph_summary_json(LayeredGraph::build(raw));
  return out;
}

json hilbert_json(const LayeredGraph& g, const CoverClosure& cl, int order) {
  IntPolynomial hinv = hilbert_inverse(g, cl);
  json out{{"graph", graph_summary_json(g)},
           {"hilbert_inverse", polynomial_json(hinv)},
           {"grw_inverse_matches", grw_inverse(g, cl) == hinv}};

  ChainSumTable table = chain_sums(g, cl);
  json s_table = json::array();
  for (int a = 1; a <= g.height(); ++a)
    for (int b = a; b >= 1; --b)
      s_table.push_back(
          json{{"a", a}, {"b", b}, {"s", json_int(table.at(a, b))}});
  out["s_table"] = s_table;

  std::optional<int> negative_at;
  std::vector<mpz_class> series = expand_series(hinv, order, &negative_at);
  json series_coeffs = json::array();
  for (const mpz_class& c : series) series_coeffs.push_back(json_int(c));
  out["series"] = json{
      {"order", order},
      {"coeffs", series_coeffs},
      {"negative_at", negative_at ? json(*negative_at) : json(nullptr)}};

  if (g.unique_top())
    out["euler_mu"] = euler_mu_json(g, euler_mu_report(g, cl));
  else
    out["euler_mu"] = nullptr;
  return out;
}

json dual_json(const LayeredGraph& g, EliminationMode mode) {
  bool warn = false;
  IntPolynomial dual = dual_hilbert(g, mode, &warn);
  json dims = json::object();
  for (int k = 0; k <= dual.degree(); ++k)
    dims[std::to_string(k)] = json_int(dual.coeff(k));
  return json{{"graph", graph_summary_json(g)},
              {"dims", dims},
              {"polynomial", polynomial_json(dual)},
              {"uniform", !warn}};
}

json koszul_json(const LayeredGraph& g, const CoverClosure& cl,
                 EliminationMode mode) {
  KoszulReport rep = koszul_verdict(g, cl, mode);
  json b = json::array();
  for (const mpz_class& c : rep.b_coeffs) b.push_back(json_int(c));

  json screen{{"pass", rep.screen.pass}};
  if (rep.screen.fail_degree) {
    screen["fail_degree"] = *rep.screen.fail_degree;
    screen["fail_coeff"] = json_int(rep.screen.fail_coeff);
  } else {
    screen["fail_degree"] = nullptr;
  }

  json suff;
  if (rep.sufficient_evaluated) {
    SufficientConditionSweep sweep;
    sweep.all_hold = rep.sufficient_all;
    sweep.checked = rep.sufficient_checked;
    sweep.first_failure = rep.sufficient_failure;
    suff = sufficient_sweep_json(g, sweep);
  }

  return json{{"graph", graph_summary_json(g)},
              {"hilbert_inverse", polynomial_json(rep.hilbert_inv)},
              {"dual_hilbert", polynomial_json(rep.dual)},
              {"residual", polynomial_json(rep.residual)},
              {"b_coeffs", b},
              {"screen", screen},
              {"uniform", rep.uniform},
              {"numerically_koszul", rep.numerically_koszul},
              {"distributive", rep.distributive},
              {"sufficient_condition", suff},
              {"verdict", verdict_name(rep.verdict)}};
}

json surface_json(const SurfaceModel& model, EliminationMode mode) {
  const LayeredGraph& g = model.graph;
  CoverClosure cl(g);
  auto [closed_inv, closed_dual] =
      surface_closed_forms(model.g_count, model.h_count, model.f_count);
  IntPolynomial hinv = hilbert_inverse(g, cl);
  IntPolynomial dual = dual_hilbert(g, mode);
  bool numerical = hinv == dual.negate_variable();

  FunctionalSpanReport span = functional_span_check(model);
  return json{
      {"counts", json{{"g", model.g_count},
                      {"h", model.h_count},
                      {"f", model.f_count},
                      {"u", model.u_count()},
                      {"chi", model.chi()}}},
      {"closed_forms", json{{"hilbert_inverse", polynomial_json(closed_inv)},
                            {"dual_hilbert", polynomial_json(closed_dual)}}},
      {"pipeline", json{{"hilbert_inverse", polynomial_json(hinv)},
                        {"dual_hilbert", polynomial_json(dual)}}},
      {"closed_forms_match", closed_inv == hinv && closed_dual == dual},
      {"euler_mu", euler_mu_json(g, euler_mu_report(g, cl, model.chi()))},
      {"numerically_koszul", numerical},
      {"chi_equals_2", model.chi() == 2},
      {"cor55_consistent", numerical == (model.chi() == 2)},
      {"transitive", transitivity_check(model)},
      {"functional_span", json{{"dim_g", span.dim_g},
                               {"g_count", span.g_count},
                               {"dim_is_g_minus_1", span.dim_is_g_minus_1},
                               {"q_vectors_in_g", span.q_vectors_in_g},
                               {"g_in_span_q", span.g_in_span_q}}}};
}

json simplicial_report_json(const SimplicialModel& model,
                            EliminationMode mode) {
  const LayeredGraph& g = model.graph;
  CoverClosure cl(g);

  // |V_{Delta,i}| by cardinality.
  std::vector<int> counts;
  for (const auto& face : model.complex.faces) {
    size_t card = face.size();
    if (counts.size() <= card) counts.resize(card + 1, 0);
    ++counts[card];
  }
  json counts_json = json::array();
  for (int c : counts) counts_json.push_back(c);

  IntPolynomial dual = dual_hilbert(g, mode);
  IntPolynomial hinv = hilbert_inverse(g, cl);
  IntPolynomial residual = hinv - dual.negate_variable();

  json out{{"graph", graph_summary_json(g)},
           {"has_top", model.has_top},
           {"faces_by_cardinality", counts_json},
           {"dual_hilbert", polynomial_json(dual)},
           {"hilbert_inverse", polynomial_json(hinv)},
           {"residual", polynomial_json(residual)},
           {"numerically_koszul", residual.is_zero()}};

  // dim R^{(k)} = sum_i |V_{Delta,i}| C(i-1, k-1); only meaningful for
  // the bare simplicial graph (an appended top changes the dimensions).
  if (!model.has_top) {
    json binom = json::array();
    bool all_match = true;
    for (int k = 1; k <= dual.degree(); ++k) {
      mpz_class expected(0);
      for (size_t i = static_cast<size_t>(k); i < counts.size(); ++i) {
        mpz_class term;
        mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(i - 1),
                     static_cast<unsigned long>(k - 1));
        expected += counts[i] * term;
      }
      bool match = expected == dual.coeff(k);
      all_match = all_match && match;
      binom.push_back(json{{"k", k},
                           {"expected", json_int(expected)},
                           {"actual", json_int(dual.coeff(k))},
                           {"match", match}});
    }
    out["binomial_dims"] = binom;
    out["binomial_dims_match"] = all_match;

    // S(A:B) membership for all faces with 2 <= |A| <= 4 and nonempty
    // B subset of A not containing min(A).
    int checked = 0;
    bool all_member = true;
    for (const auto& face : model.complex.faces) {
      if (face.size() < 2 || face.size() > 4) continue;
      std::vector<int> rest(face.begin() + 1, face.end());
      for (unsigned mask = 1; mask < (1u << rest.size()); ++mask) {
        std::vector<int> b;
        for (size_t i = 0; i < rest.size(); ++i)
          if (mask & (1u << i)) b.push_back(rest[i]);
        ChainVector sab = simplicial_sab(model, face, b);
        ++checked;
        if (!membership(g, sab, static_cast<int>(b.size())))
          all_member = false;
      }
    }
    out["sab_checks"] = json{{"checked", checked}, {"all_member", all_member}};

    SufficientConditionSweep sweep = sufficient_condition_all(g, cl);
    out["sufficient_condition"] = sufficient_sweep_json(g, sweep);
  }
  return out;
}

json orbits_json(const SurfaceModel& model) {
  const LayeredGraph& g = model.graph;
  Orientation orientation(model);
  int star = g.min_vertex();

  json rows = json::array();
  auto add_row = [&](int v, int w) {
    OrbitDecomposition dec = orbit_decomposition(g, v, w, &orientation);
    bool sums_member = true;
    int gap = g.level(v) - g.level(w);
    for (const ChainVector& sum : dec.signed_sums)
      if (!membership(g, sum, gap)) sums_member = false;
    rows.push_back(json{{"v", g.id(v)},
                        {"w", g.id(w)},
                        {"admissible", dec.admissible_count},
                        {"orbits", static_cast<int>(dec.orbits.size())},
                        {"kernel_dim", dec.kernel_dimension},
                        {"match", dec.matches_kernel},
                        {"signed_sums_member", sums_member}});
  };
  for (int f : g.level_vertices(3)) add_row(f, star);
  for (int w : g.level_vertices(1)) add_row(model.top, w);
  add_row(model.top, star);
  return json{{"counts", json{{"g", model.g_count},
                              {"h", model.h_count},
                              {"f", model.f_count}}},
              {"contexts", rows}};
}

json demo_cassidy_shelton_json() {
  LayeredGraph g = build_cassidy_shelton();
  CoverClosure cl(g);
  json out = koszul_json(g, cl, EliminationMode::Rational);
  ChainSumTable table = chain_sums(g, cl);
  json s_table = json::array();
  for (int a = g.height(); a >= 1; --a)
    for (int b = a; b >= 1; --b)
      s_table.push_back(
          json{{"a", a}, {"b", b}, {"s", json_int(table.at(a, b))}});
  out["s_table"] = s_table;
  return out;
}

}  // namespace splitalg
