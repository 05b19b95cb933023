#pragma once

#include <string>

#include <json.hpp>

#include "splitalg/builders.hpp"
#include "splitalg/graph.hpp"
#include "splitalg/koszul.hpp"
#include "splitalg/linalg.hpp"
#include "splitalg/polynomial.hpp"

namespace splitalg {

// Integers are emitted as JSON numbers when they fit in long, otherwise
// as decimal strings.
nlohmann::json json_int(const mpz_class& value);

// { "string": "1 - 10z + ...", "coeffs": [1, -10, ...] }.
nlohmann::json polynomial_json(const IntPolynomial& p);

nlohmann::json graph_summary_json(const LayeredGraph& g);

// Validation outcome for raw vertex/edge lists; never throws.
nlohmann::json validation_json(const RawGraph& raw);

nlohmann::json hilbert_json(const LayeredGraph& g, const CoverClosure& cl,
                            int order);

nlohmann::json dual_json(const LayeredGraph& g, EliminationMode mode);

nlohmann::json koszul_json(const LayeredGraph& g, const CoverClosure& cl,
                           EliminationMode mode);

nlohmann::json surface_json(const SurfaceModel& model, EliminationMode mode);

nlohmann::json simplicial_report_json(const SimplicialModel& model,
                                      EliminationMode mode);

nlohmann::json orbits_json(const SurfaceModel& model);

nlohmann::json demo_cassidy_shelton_json();

}  // namespace splitalg
