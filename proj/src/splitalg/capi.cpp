#include "splitalg/splitalg.h"

#include <cstring>
#include <optional>
#include <string>

#include <json.hpp>

#include "splitalg/builders.hpp"
#include "splitalg/error.hpp"
#include "splitalg/reports.hpp"

struct sa_graph {
  splitalg::LayeredGraph graph;
  std::optional<splitalg::SurfaceModel> surface;
  std::optional<splitalg::SimplicialModel> simplicial;
  std::optional<int> chi;  // cell-poset metadata
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

int fail_current_exception() {
  try {
    throw;
  } catch (const splitalg::Error& e) {
    switch (e.kind()) {
      case splitalg::ErrorKind::Parse: return fail(SA_EPARSE, e.what());
      case splitalg::ErrorKind::Invalid: return fail(SA_EINVALID, e.what());
      case splitalg::ErrorKind::Argument: return fail(SA_EARG, e.what());
      case splitalg::ErrorKind::Internal: return fail(SA_EINTERNAL, e.what());
    }
    return fail(SA_EINTERNAL, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(SA_EPARSE, e.what());
  } catch (const std::exception& e) {
    return fail(SA_EINTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SA_OK;
  } catch (...) {
    return fail_current_exception();
  }
}

int require(const void* p, const char* what) {
  if (p) return SA_OK;
  return fail(SA_EARG, std::string("null ") + what);
}

splitalg::EliminationMode mode_of(int modular) {
  return modular ? splitalg::EliminationMode::Modular
                 : splitalg::EliminationMode::Rational;
}

int emit(const nlohmann::json& doc, char** out) {
  *out = dup_string(doc.dump(2) + "\n");
  return SA_OK;
}

}  // namespace

extern "C" {

const char* sa_last_error(void) { return g_last_error.c_str(); }

void sa_graph_free(sa_graph* g) { delete g; }

void sa_string_free(char* s) { delete[] s; }

int sa_graph_from_graph_json(const char* text, sa_graph** out) {
  if (int rc = require(text, "text")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    *out = new sa_graph{splitalg::load_graph_json(text), {}, {}, {}};
  });
}

int sa_graph_from_surface_json(const char* text, sa_graph** out) {
  if (int rc = require(text, "text")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    splitalg::SurfaceModel model = splitalg::load_surface_json(text);
    auto* handle = new sa_graph{model.graph, std::move(model), {}, {}};
    handle->chi = handle->surface->chi();
    *out = handle;
  });
}

int sa_graph_from_simplicial_json(const char* text, int add_top, int strict,
                                  sa_graph** out) {
  if (int rc = require(text, "text")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    splitalg::SimplicialModel model =
        splitalg::load_simplicial_json(text, add_top != 0, strict != 0);
    *out = new sa_graph{model.graph, {}, std::move(model), {}};
  });
}

int sa_graph_from_cell_poset_json(const char* text, sa_graph** out) {
  if (int rc = require(text, "text")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    splitalg::CellPosetModel model = splitalg::load_cell_poset_json(text);
    auto* handle = new sa_graph{std::move(model.graph), {}, {}, {}};
    handle->chi = model.chi;
    *out = handle;
  });
}

int sa_graph_load_json(const char* text, sa_graph** out) {
  if (int rc = require(text, "text")) return rc;
  if (int rc = require(out, "out")) return rc;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    return fail(SA_EPARSE, e.what());
  }
  if (doc.contains("vertices")) return sa_graph_from_graph_json(text, out);
  if (doc.contains("ground"))
    return sa_graph_from_simplicial_json(text, 0, 0, out);
  if (doc.contains("cells")) return sa_graph_from_cell_poset_json(text, out);
  if (doc.contains("faces")) return sa_graph_from_surface_json(text, out);
  return fail(SA_EPARSE, "unrecognized JSON schema: expected one of the keys "
                         "\"vertices\", \"ground\", \"cells\", \"faces\"");
}

int sa_graph_complete(const int* sizes, int count, sa_graph** out) {
  if (int rc = require(sizes, "sizes")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    std::vector<int> v(sizes, sizes + count);
    *out = new sa_graph{splitalg::build_complete(v), {}, {}, {}};
  });
}

int sa_graph_cassidy_shelton(sa_graph** out) {
  if (int rc = require(out, "out")) return rc;
  return guarded(
      [&] { *out = new sa_graph{splitalg::build_cassidy_shelton(), {}, {}, {}}; });
}

int sa_graph_to_json(const sa_graph* g, char** out) {
  if (int rc = require(g, "graph")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] { *out = dup_string(splitalg::graph_to_json(g->graph)); });
}

int sa_validate_json(const char* text, char** out_report) {
  if (int rc = require(text, "text")) return rc;
  if (int rc = require(out_report, "out")) return rc;
  return guarded([&] {
    splitalg::RawGraph raw = splitalg::graph_from_json(text);
    emit(splitalg::validation_json(raw), out_report);
  });
}

int sa_hilbert_report(const sa_graph* g, int order, char** out) {
  if (int rc = require(g, "graph")) return rc;
  if (int rc = require(out, "out")) return rc;
  if (order < 0) return fail(SA_EARG, "order must be non-negative");
  return guarded([&] {
    splitalg::CoverClosure cl(g->graph);
    emit(splitalg::hilbert_json(g->graph, cl, order), out);
  });
}

int sa_dual_report(const sa_graph* g, int modular, char** out) {
  if (int rc = require(g, "graph")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded(
      [&] { emit(splitalg::dual_json(g->graph, mode_of(modular)), out); });
}

int sa_koszul_report(const sa_graph* g, int modular, char** out) {
  if (int rc = require(g, "graph")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    splitalg::CoverClosure cl(g->graph);
    emit(splitalg::koszul_json(g->graph, cl, mode_of(modular)), out);
  });
}

int sa_surface_report(const sa_graph* g, int modular, char** out) {
  if (int rc = require(g, "graph")) return rc;
  if (int rc = require(out, "out")) return rc;
  if (!g->surface) return fail(SA_EARG, "handle carries no surface data");
  return guarded(
      [&] { emit(splitalg::surface_json(*g->surface, mode_of(modular)), out); });
}

int sa_orbits_report(const sa_graph* g, char** out) {
  if (int rc = require(g, "graph")) return rc;
  if (int rc = require(out, "out")) return rc;
  if (!g->surface) return fail(SA_EARG, "handle carries no surface data");
  return guarded([&] { emit(splitalg::orbits_json(*g->surface), out); });
}

int sa_simplicial_report(const sa_graph* g, int modular, char** out) {
  if (int rc = require(g, "graph")) return rc;
  if (int rc = require(out, "out")) return rc;
  if (!g->simplicial) return fail(SA_EARG, "handle carries no simplicial data");
  return guarded([&] {
    emit(splitalg::simplicial_report_json(*g->simplicial, mode_of(modular)),
         out);
  });
}

int sa_demo_cassidy_shelton(char** out) {
  if (int rc = require(out, "out")) return rc;
  return guarded([&] { emit(splitalg::demo_cassidy_shelton_json(), out); });
}

}  // extern "C"
