#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "splitalg/builders.hpp"
#include "splitalg/dual.hpp"
#include "splitalg/error.hpp"
#include "splitalg/hilbert.hpp"
#include "test_util.hpp"

using namespace splitalg;

namespace {

IntPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> v;
  for (long c : coeffs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

// Expands products v (w_{a1} - w_{b1}) ... into chain coordinates and
// returns the rank of all such products (the spanning set used in the
// complete-graph argument).
int difference_product_rank(const LayeredGraph& g, int v, int j) {
  std::vector<Chain> chains = enumerate_linked(g, v, j);
  std::map<Chain, int> col;
  for (size_t i = 0; i < chains.size(); ++i)
    col.emplace(chains[i], static_cast<int>(i));

  std::vector<std::vector<mpq_class>> products;
  std::vector<std::pair<Chain, int>> frontier{{Chain{v}, 1}};
  std::vector<std::vector<std::pair<Chain, int>>> levels{frontier};
  // Depth-first over pair choices per level.
  std::vector<std::vector<std::pair<int, int>>> choices;
  for (int step = 1; step < j; ++step) {
    const std::vector<int>& verts = g.level_vertices(g.level(v) - step);
    std::vector<std::pair<int, int>> pairs;
    for (size_t a = 0; a < verts.size(); ++a)
      for (size_t b = 0; b < verts.size(); ++b)
        if (a != b) pairs.emplace_back(verts[a], verts[b]);
    choices.push_back(pairs);
  }
  std::vector<size_t> pick(choices.size(), 0);
  auto emit = [&]() {
    std::map<Chain, mpq_class> acc{{Chain{v}, mpq_class(1)}};
    for (size_t step = 0; step < choices.size(); ++step) {
      auto [a, b] = choices[step][pick[step]];
      std::map<Chain, mpq_class> next;
      for (const auto& [chain, coeff] : acc) {
        Chain ca = chain, cb = chain;
        ca.push_back(a);
        cb.push_back(b);
        next[ca] += coeff;
        next[cb] -= coeff;
      }
      acc = std::move(next);
    }
    std::vector<mpq_class> dense(chains.size(), mpq_class(0));
    for (const auto& [chain, coeff] : acc)
      dense[static_cast<size_t>(col.at(chain))] = coeff;
    products.push_back(std::move(dense));
  };
  size_t total = 1;
  for (const auto& c : choices) total *= c.size();
  for (size_t n = 0; n < total; ++n) {
    size_t rem = n;
    for (size_t step = 0; step < choices.size(); ++step) {
      pick[step] = rem % choices[step].size();
      rem /= choices[step].size();
    }
    emit();
  }
  return rank_of_vectors(products, static_cast<int>(chains.size()));
}

}  // namespace

TEST_CASE("linked monomial enumeration") {
  LayeredGraph cs = build_cassidy_shelton();
  int u = *cs.find("u");
  CHECK(enumerate_linked(cs, u, 3).size() == 6);
  CHECK(enumerate_linked(cs, u, 1) == std::vector<Chain>{{u}});
  CHECK_THROWS_AS(enumerate_linked(cs, u, 5), Error);

  SurfaceModel tetra = load_surface_json(read_fixture("tetrahedron.json"));
  int m = tetra.top;
  CHECK(enumerate_linked(tetra.graph, m, 4, tetra.graph.min_vertex()).size() ==
        24);
  // Bottom at a specific point: level consistency is enforced.
  int point = tetra.graph.level_vertices(1)[0];
  CHECK_THROWS_AS(enumerate_linked(tetra.graph, m, 2, point), Error);
  CHECK(enumerate_linked(tetra.graph, m, 3, point).size() == 6);
}

TEST_CASE("admissible monomial enumeration") {
  LayeredGraph cs = build_cassidy_shelton();
  int u = *cs.find("u");
  CHECK(enumerate_admissible(cs, u, 3).size() == 6);

  // Chain graph: no interior alternatives exist.
  LayeredGraph chain = build_complete({1, 1, 1});
  int top = *chain.unique_top();
  CHECK(enumerate_admissible(chain, top, 1).size() == 1);
  CHECK(enumerate_admissible(chain, top, 2).empty());

  SurfaceModel tetra = load_surface_json(read_fixture("tetrahedron.json"));
  for (int f : tetra.graph.level_vertices(3)) {
    std::vector<Chain> adm =
        enumerate_admissible(tetra.graph, f, 3, tetra.graph.min_vertex());
    CHECK(adm.size() == 6);
  }
}

TEST_CASE("deletion systems") {
  SUBCASE("two covers") {
    LayeredGraph g = build_complete({1, 2, 1});
    int top = *g.unique_top();
    std::vector<Chain> monomials = enumerate_linked(g, top, 2);
    REQUIRE(monomials.size() == 2);
    ExactMatrix m = deletion_system(g, monomials, 2);
    CHECK(m.rows() == 1);
    CHECK(kernel_dim(m) == 1);
  }
  SUBCASE("single cover") {
    LayeredGraph g = build_complete({1, 1, 1});
    int top = *g.unique_top();
    ExactMatrix m = deletion_system(g, enumerate_linked(g, top, 2), 2);
    CHECK(kernel_dim(m) == 0);
  }
  SUBCASE("Cassidy-Shelton u-system sign pattern") {
    LayeredGraph g = build_cassidy_shelton();
    int u = *g.find("u");
    std::vector<Chain> adm = enumerate_admissible(g, u, 3);
    REQUIRE(adm.size() == 6);
    ExactMatrix m = deletion_system(g, adm, 3);
    CHECK(kernel_dim(m) == 1);
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    // Order: (w1,x2),(w1,x3),(w2,x1),(w2,x3),(w3,x1),(w3,x2).
    const auto& v = basis[0];
    mpq_class a = v[0];
    CHECK(a != 0);
    CHECK(v[1] == -a);
    CHECK(v[2] == -a);
    CHECK(v[3] == a);
    CHECK(v[4] == a);
    CHECK(v[5] == -a);
  }
  SUBCASE("mixed lengths rejected") {
    LayeredGraph g = build_cassidy_shelton();
    int u = *g.find("u");
    std::vector<Chain> mixed = enumerate_linked(g, u, 2);
    mixed.push_back(enumerate_linked(g, u, 3)[0]);
    CHECK_THROWS_AS(deletion_system(g, mixed, 2), Error);
  }
}

TEST_CASE("dual component dimensions") {
  LayeredGraph cs = build_cassidy_shelton();
  for (const char* w : {"w1", "w2", "w3"})
    CHECK(dual_component_dim(cs, *cs.find(w), 3) == 0);
  CHECK(dual_component_dim(cs, *cs.find("u"), 3) == 1);
  CHECK(dual_component_dim(cs, *cs.find("u"), 4) == 0);

  SurfaceModel tetra = load_surface_json(read_fixture("tetrahedron.json"));
  CHECK(dual_component_dim(tetra.graph, tetra.top, 4) == 1);
}

TEST_CASE("dual Hilbert series") {
  LayeredGraph cs = build_cassidy_shelton();
  CHECK(dual_hilbert(cs) == poly({1, 10, 8, 1}));

  SurfaceModel tetra = load_surface_json(read_fixture("tetrahedron.json"));
  CHECK(dual_hilbert(tetra.graph) == poly({1, 15, 17, 7, 1}));

  CHECK(dual_hilbert(build_complete({1, 1})) == poly({1, 1}));

  bool warn = true;
  dual_hilbert(cs, EliminationMode::Rational, &warn);
  CHECK_FALSE(warn);
}

TEST_CASE("dim R^(2) equals the cover-count formula") {
  std::vector<LayeredGraph> graphs;
  graphs.push_back(build_cassidy_shelton());
  graphs.push_back(load_surface_json(read_fixture("cube.json")).graph);
  graphs.push_back(load_simplicial_json(read_fixture("delta4.json")).graph);
  graphs.push_back(build_complete({1, 3, 2, 2}));
  for (const LayeredGraph& g : graphs) {
    mpz_class expected(0);
    for (int v = 0; v < g.vertex_count(); ++v)
      expected += std::max<long>(
          0, static_cast<long>(g.children(v).size()) - 1);
    CHECK(dual_hilbert(g).coeff(2) == expected);
  }
}

TEST_CASE("admissible count bounds the kernel dimension") {
  LayeredGraph g = load_surface_json(read_fixture("octahedron.json")).graph;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int k = 2; k <= g.level(v); ++k)
      CHECK(dual_component_dim(g, v, k) <=
            static_cast<int>(enumerate_admissible(g, v, k).size()));
}

TEST_CASE("modular fast path agrees with rational elimination") {
  std::vector<LayeredGraph> graphs;
  graphs.push_back(build_cassidy_shelton());
  graphs.push_back(load_surface_json(read_fixture("torus3x3.json")).graph);
  graphs.push_back(load_simplicial_json(read_fixture("delta4.json")).graph);
  for (const LayeredGraph& g : graphs)
    CHECK(dual_hilbert(g, EliminationMode::Modular) ==
          dual_hilbert(g, EliminationMode::Rational));
}

TEST_CASE("membership") {
  LayeredGraph g = build_complete({1, 2, 1});
  int top = *g.unique_top();
  std::vector<Chain> chains = enumerate_linked(g, top, 2);
  REQUIRE(chains.size() == 2);
  CHECK(membership(g, {{chains[0], 1}, {chains[1], -1}}, 2));
  CHECK_FALSE(membership(g, {{chains[0], 1}}, 2));
  CHECK(membership(g, {}, 2));
  CHECK(membership(g, {{Chain{top}, 1}}, 1));

  LayeredGraph cs = build_cassidy_shelton();
  std::vector<Chain> w1 = enumerate_linked(cs, *cs.find("w1"), 2);
  std::vector<Chain> w2 = enumerate_linked(cs, *cs.find("w2"), 2);
  CHECK_THROWS_AS(membership(cs, {{w1[0], 1}, {w2[0], -1}}, 2), Error);
}

TEST_CASE("complete-graph kernels match the difference-product span") {
  for (const std::vector<int>& sizes :
       {std::vector<int>{1, 2, 2}, {1, 3, 2, 2}, {1, 3, 3, 3}}) {
    LayeredGraph g = build_complete(sizes);
    CAPTURE(sizes.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.level(v) < 2) continue;
      for (int j = 2; j <= g.level(v); ++j) {
        CHECK(dual_component_dim(g, v, j) == difference_product_rank(g, v, j));
        // Closed form: product of (n_i - 1) over the interior levels.
        int expected = 1;
        for (int i = g.level(v) - j + 1; i <= g.level(v) - 1; ++i)
          expected *= sizes[static_cast<size_t>(i)] - 1;
        CHECK(dual_component_dim(g, v, j) == expected);
      }
    }
  }
}

TEST_CASE("simplicial S(A:B)") {
  SimplicialModel delta3 = load_simplicial_json(read_fixture("delta3.json"));
  const LayeredGraph& g = delta3.graph;

  SUBCASE("two-element B expands to a signed pair") {
    std::vector<int> a{0, 1, 2};  // ground indices of {1,2,3}
    ChainVector sab = simplicial_sab(delta3, a, {1, 2});
    CHECK(sab.size() == 2);
    CHECK(membership(g, sab, 2));
  }
  SUBCASE("singleton B is one chain") {
    ChainVector sab = simplicial_sab(delta3, {0, 1, 2}, {2});
    REQUIRE(sab.size() == 1);
    CHECK(sab[0].first.size() == 1);
    CHECK(membership(g, sab, 1));
  }
  SUBCASE("all valid (A,B) give relations") {
    for (const auto& face : delta3.complex.faces) {
      if (face.size() < 2) continue;
      std::vector<int> rest(face.begin() + 1, face.end());
      for (unsigned mask = 1; mask < (1u << rest.size()); ++mask) {
        std::vector<int> b;
        for (size_t i = 0; i < rest.size(); ++i)
          if (mask & (1u << i)) b.push_back(rest[i]);
        ChainVector sab = simplicial_sab(delta3, face, b);
        CHECK(membership(g, sab, static_cast<int>(b.size())));
      }
    }
  }
  SUBCASE("B containing min(A) is rejected") {
    CHECK_THROWS_AS(simplicial_sab(delta3, {0, 1, 2}, {0, 1}), Error);
  }
  SUBCASE("B not inside A is rejected") {
    CHECK_THROWS_AS(simplicial_sab(delta3, {0, 1}, {2}), Error);
  }
}

TEST_CASE("binomial dual dimensions for simplicial graphs") {
  for (const char* file :
       {"delta3.json", "delta4.json", "boundary_delta4.json"}) {
    CAPTURE(file);
    SimplicialModel model = load_simplicial_json(read_fixture(file));
    std::vector<long> counts(16, 0);
    for (const auto& face : model.complex.faces) ++counts[face.size()];
    IntPolynomial dual = dual_hilbert(model.graph);
    for (int k = 1; k <= model.graph.height(); ++k) {
      mpz_class expected(0);
      for (size_t i = static_cast<size_t>(k); i < counts.size(); ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i - 1),
                     static_cast<unsigned long>(k - 1));
        expected += counts[i] * binom;
      }
      CHECK(dual.coeff(k) == expected);
    }
  }
}
