#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "splitalg/graph.hpp"

namespace splitalg {

// Abstract simplicial complex over an ordered ground set. Faces are kept
// as sorted index vectors into `ground`; the empty face is always present.
struct SimplicialComplex {
  std::vector<std::string> ground;
  std::set<std::vector<int>> faces;

  // Builds from ground element names and face lists. In strict mode a
  // face set that is not downward closed is rejected; otherwise the
  // closure is completed (and `completed` reports how many faces were
  // added).
  static SimplicialComplex make(const std::vector<std::string>& ground,
                                const std::vector<std::vector<std::string>>& faces,
                                bool strict, int* completed = nullptr);

  std::string face_id(const std::vector<int>& face) const;
};

// A layered graph together with the simplicial data it was built from.
struct SimplicialModel {
  LayeredGraph graph;
  SimplicialComplex complex;
  std::map<std::vector<int>, int> face_vertex;  // face -> graph vertex
  bool has_top = false;
};

// A layered graph built from a 2-manifold subdivision, with the
// orientation data needed downstream.
struct SurfaceModel {
  LayeredGraph graph;
  int top = -1;
  int g_count = 0, h_count = 0, f_count = 0;  // |V1|, |V2|, |V3|
  int u_count() const { return g_count + f_count; }
  int chi() const { return u_count() - h_count; }

  // Edge graph-vertex -> (tail, head) endpoint graph-vertices. The tail
  // is the lexicographically smaller endpoint id, fixed at build time.
  std::map<int, std::pair<int, int>> edge_ends;
  // (face graph-vertex, edge graph-vertex) -> +1 if the face's induced
  // direction on the edge runs tail -> head, else -1.
  std::map<std::pair<int, int>, int> face_edge_dir;
};

// Cell-poset input: ranked cells plus cover relations; rank = dim + 1.
struct CellPosetInput {
  int dim = 0;
  std::vector<std::pair<std::string, int>> cells;  // (id, cell dimension)
  std::vector<std::pair<std::string, std::string>> covers;  // (upper, lower)
};

struct CellPosetModel {
  LayeredGraph graph;
  int chi = 0;  // alternating sum of cell counts
};

// Complete layered graph with |V_i| = sizes[i]; sizes[0] must be 1.
LayeredGraph build_complete(const std::vector<int>& sizes);

// Graph of a simplicial complex: faces as vertices (empty face = *),
// edges S -> S \ {s}. With `add_top`, a unique maximal vertex over all
// maximal faces is appended.
SimplicialModel build_simplicial(const SimplicialComplex& complex,
                                 bool add_top = false);

// Graph of a 2-manifold subdivision given as cyclic face lists.
SurfaceModel build_surface(const std::vector<std::vector<std::string>>& faces);

// Graph of a ranked cell poset with appended top M and bottom *.
CellPosetModel build_cell_poset(const CellPosetInput& input);

// The Cassidy-Shelton graph: 11 vertices, levels (1,3,3,3,1), 18 edges.
LayeredGraph build_cassidy_shelton();

// JSON round trip for the graph schema
//   { "vertices": [{"id": ..., "level": ...}], "edges": [[tail, head]] }.
RawGraph graph_from_json(const std::string& text);
LayeredGraph load_graph_json(const std::string& text);
std::string graph_to_json(const LayeredGraph& g);

// Surface schema { "faces": [[v, ...], ...] }.
SurfaceModel load_surface_json(const std::string& text);

// Simplicial schema { "ground": [...], "faces": [[...], ...] }.
SimplicialModel load_simplicial_json(const std::string& text,
                                     bool add_top = false, bool strict = false);

// Cell-poset schema { "dim": d, "cells": [{"id", "dim"}], "covers": [[u, l]] }.
CellPosetModel load_cell_poset_json(const std::string& text);

}  // namespace splitalg
