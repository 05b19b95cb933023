#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splitalg/builders.hpp"
#include "splitalg/dual.hpp"
#include "splitalg/error.hpp"
#include "splitalg/orient.hpp"
#include "test_util.hpp"

using namespace splitalg;

namespace {

// All (top, bottom) contexts with level gap >= 2: (F,*), (M,w), (M,*).
std::vector<std::pair<int, int>> contexts(const SurfaceModel& model) {
  std::vector<std::pair<int, int>> out;
  int star = model.graph.min_vertex();
  for (int f : model.graph.level_vertices(3)) out.emplace_back(f, star);
  for (int w : model.graph.level_vertices(1)) out.emplace_back(model.top, w);
  out.emplace_back(model.top, star);
  return out;
}

}  // namespace

TEST_CASE("conjugation flips the orientation sign exhaustively") {
  for (const char* file : {"tetrahedron.json", "torus3x3.json"}) {
    CAPTURE(file);
    SurfaceModel model = load_surface_json(read_fixture(file));
    const LayeredGraph& g = model.graph;
    Orientation o(model);
    for (auto [v, w] : contexts(model)) {
      int len = g.level(v) - g.level(w);
      for (const Chain& m : enumerate_admissible(g, v, len, w)) {
        for (size_t k = 1; k < m.size(); ++k) {
          Chain c = conjugate(g, m, k, w);
          CHECK(c != m);
          CHECK(o.sign(m, w) + o.sign(c, w) == 0);
          // Conjugation is an involution.
          CHECK(conjugate(g, c, k, w) == m);
        }
      }
    }
  }
}

TEST_CASE("conjugate rejects inadmissible positions") {
  LayeredGraph g = build_complete({1, 1, 1});
  int top = *g.unique_top();
  Chain m = enumerate_linked(g, top, 2)[0];
  CHECK_THROWS_AS(conjugate(g, m, 1, g.min_vertex()), Error);
}

TEST_CASE("orbit counts equal kernel dimensions on surface fixtures") {
  for (const char* file : {"tetrahedron.json", "cube.json",
                           "octahedron.json", "torus3x3.json"}) {
    CAPTURE(file);
    SurfaceModel model = load_surface_json(read_fixture(file));
    const LayeredGraph& g = model.graph;
    Orientation o(model);
    for (auto [v, w] : contexts(model)) {
      OrbitDecomposition dec = orbit_decomposition(g, v, w, &o);
      CHECK(dec.matches_kernel);
      CHECK(dec.orbits.size() == 1);
      CHECK(dec.kernel_dimension == 1);
      int len = g.level(v) - g.level(w);
      CHECK(dec.admissible_count ==
            static_cast<int>(enumerate_admissible(g, v, len, w).size()));
      // Every signed orbit sum is a genuine relation.
      REQUIRE(dec.signed_sums.size() == 1);
      CHECK(membership(g, dec.signed_sums[0], len));
    }
  }
}

TEST_CASE("tetrahedron (M,*) orbit covers all 24 admissible monomials") {
  SurfaceModel model = load_surface_json(read_fixture("tetrahedron.json"));
  Orientation o(model);
  OrbitDecomposition dec = orbit_decomposition(
      model.graph, model.top, model.graph.min_vertex(), &o);
  CHECK(dec.admissible_count == 24);
  REQUIRE(dec.orbits.size() == 1);
  CHECK(dec.orbits[0].size() == 24);
  CHECK(dec.signed_sums[0].size() == 24);
}

TEST_CASE("transitivity holds on every surface fixture") {
  for (const char* file : {"tetrahedron.json", "cube.json",
                           "octahedron.json", "torus3x3.json"}) {
    CAPTURE(file);
    CHECK(transitivity_check(load_surface_json(read_fixture(file))));
  }
}

TEST_CASE("functional span of face constraints") {
  SUBCASE("spheres: nullity g-1, spanned by the q_w") {
    struct Expect {
      const char* file;
      int dim;
    };
    const Expect cases[] = {{"tetrahedron.json", 3},
                            {"cube.json", 7},
                            {"octahedron.json", 5}};
    for (const Expect& e : cases) {
      CAPTURE(e.file);
      SurfaceModel model = load_surface_json(read_fixture(e.file));
      FunctionalSpanReport rep = functional_span_check(model);
      CHECK(rep.dim_g == e.dim);
      CHECK(rep.g_count == model.g_count);
      CHECK(rep.dim_is_g_minus_1);
      CHECK(rep.q_vectors_in_g);
      CHECK(rep.g_in_span_q);
    }
  }
  SUBCASE("torus: nullity h-f+1 exceeds g-1 by the first Betti number") {
    SurfaceModel model = load_surface_json(read_fixture("torus3x3.json"));
    FunctionalSpanReport rep = functional_span_check(model);
    CHECK(rep.dim_g == model.h_count - model.f_count + 1);  // 10
    CHECK(rep.dim_g == model.g_count - 1 + 2);
    CHECK_FALSE(rep.dim_is_g_minus_1);
    CHECK(rep.q_vectors_in_g);
    CHECK_FALSE(rep.g_in_span_q);
  }
}
