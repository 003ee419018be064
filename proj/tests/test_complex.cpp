#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace circuitsmith;
using fixtures::ball;
using fixtures::sphere;

TEST_CASE("simplex canonical form") {
  Simplex s{3, 1, 2};
  CHECK(s.vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(s.dimension() == 2);
  CHECK_THROWS_AS(Simplex({1, 1}), MalformedInput);
  CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), MalformedInput);
  CHECK(Simplex{0} < Simplex{0, 1});
  CHECK(Simplex{0, 2} < Simplex{1, 2});
  CHECK(s.facets() == std::vector<Simplex>{{2, 3}, {1, 3}, {1, 2}});
}

TEST_CASE("build_complex") {
  CHECK(build_complex({{0, 1, 2}}).size() == 7);
  const auto circle = build_complex({{0, 1}, {1, 2}, {0, 2}});
  CHECK(circle.size() == 6);
  CHECK(circle.dimension() == 1);
  CHECK(build_complex({}).dimension() == -1);
  CHECK_THROWS_AS(build_complex({{0, 0, 1}}), MalformedInput);
  CHECK_THROWS_AS(SimplicialComplex(SimplexSet{Simplex{0, 1}}), MalformedInput);
}

TEST_CASE("skeleton") {
  const auto s2 = sphere(2);
  CHECK(skeleton(s2, 0).size() == 4);
  const auto k4 = skeleton(s2, 1);
  CHECK(k4.f_vector() == std::vector<std::size_t>{4, 6});
  CHECK(skeleton(s2, 2) == s2);
  CHECK(skeleton(s2, -1).empty());
}

TEST_CASE("star") {
  const auto circle = sphere(1);
  const auto st = star(OpenSimplexSet(circle, {Simplex{0}}), circle);
  CHECK(st.members() == SimplexSet{{0}, {0, 1}, {0, 2}});
  CHECK(st.is_open());
  CHECK(star(OpenSimplexSet(circle, {}), circle).empty());
  SimplexSet verts;
  for (Vertex v : circle.vertices()) verts.insert(Simplex{v});
  CHECK(star(OpenSimplexSet(circle, verts), circle).members() == circle.simplices());
}

TEST_CASE("link") {
  const auto s2 = sphere(2);
  CHECK(link(Simplex{0}, s2) == build_complex({{1, 2}, {2, 3}, {1, 3}}));
  CHECK(link(Simplex{0, 1}, s2) == build_complex({{2}, {3}}));
  CHECK(link(Simplex{0, 1, 2}, s2).empty());
  CHECK_THROWS_AS(link(Simplex{0, 9}, s2), NotFound);
}

TEST_CASE("barycentric subdivision") {
  const auto edge = barycentric_subdivision(ball(1));
  CHECK(edge.complex.f_vector() == std::vector<std::size_t>{3, 2});

  const auto hex = barycentric_subdivision(sphere(1));
  CHECK(hex.complex.f_vector() == std::vector<std::size_t>{6, 6});

  const auto s2 = sphere(2);
  const auto sd = barycentric_subdivision(s2);
  CHECK(sd.complex.euler_characteristic() == 2);
  CHECK(sd.complex.dimension() == 2);

  for (const auto& s : sd.complex) {
    const auto chain = sd.chain_of(s);
    CHECK(sd.simplex_of(chain) == s);
    for (std::size_t i = 1; i < chain.size(); ++i) CHECK(chain[i - 1].is_proper_face_of(chain[i]));
  }
}

TEST_CASE("product complex") {
  const auto point = build_complex({{0}});
  const auto s1 = sphere(1);
  CHECK(find_isomorphism(product_complex(point, s1).complex, s1).has_value());

  const auto square = product_complex(ball(1), ball(1));
  CHECK(square.complex.f_vector() == std::vector<std::size_t>{4, 5, 2});

  const auto annulus = product_complex(s1, ball(1));
  CHECK(annulus.complex.euler_characteristic() == s1.euler_characteristic() * ball(1).euler_characteristic());
  CHECK(annulus.first_projection.source() == annulus.complex);
}

TEST_CASE("cell product") {
  const auto c = cell_product(ball(1), ball(1));
  CHECK(c.complex.dimension() == 2);
  CHECK(c.complex.euler_characteristic() == 1);
  CHECK(c.cells.size() == 9);
}

TEST_CASE("join decomposition") {
  const std::vector<Simplex> chain{{0}, {0, 1}, {0, 1, 2}};
  auto jd = join_decompose(chain, 0);
  CHECK(jd.lambda == std::vector<Simplex>{{0}});
  CHECK(jd.mu == std::vector<Simplex>{{0, 1}, {0, 1, 2}});

  jd = join_decompose({{0, 1}, {0, 1, 2}}, 0);
  CHECK(jd.lambda.empty());
  CHECK(jd.mu.size() == 2);

  jd = join_decompose(chain, 2);
  CHECK(jd.mu.empty());
  CHECK(jd.lambda == chain);

  CHECK_THROWS_AS(join_decompose({{0, 1}, {0}}, 0), MalformedInput);
}

TEST_CASE("maps") {
  const auto s1 = sphere(1);
  const auto m = fixtures::double_wrap();
  CHECK(m.image(Simplex{0, 1}) == Simplex{0, 1});
  CHECK(m.image(Simplex{2, 3}) == Simplex{0, 2});
  CHECK_FALSE(m.injective_on_vertices());
  CHECK_THROWS_AS(SimplicialMap(fixtures::hexagon(), s1, {{0, 0}, {1, 0}}), MalformedInput);
  CHECK_THROWS_AS(SimplicialMap(ball(2), s1, {{0, 0}, {1, 1}, {2, 2}}), MalformedInput);

  const auto id = SimplicialMap::identity(s1);
  CHECK(compose(m, id) == m);
  CHECK(m.preimage({Simplex{0}}) == SimplexSet{{0}, {3}});
}

TEST_CASE("randomized face closure and star openness") {
  randomized::Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = build_complex(randomized::random_complex(rng, 200));
    CHECK(is_face_closed(k.simplices()));
    for (const auto& s : k) CHECK(is_face_closed(link(s, k).simplices()));
    const auto sub = randomized::random_subcomplex(rng, k, 0.1);
    SimplexSet members(sub.begin(), sub.end());
    CHECK(star(OpenSimplexSet(k, members), k).is_open());
    const auto sd = barycentric_subdivision(k);
    CHECK(sd.complex.euler_characteristic() == k.euler_characteristic());
    CHECK(sd.complex.dimension() == k.dimension());
  }
}

TEST_CASE("union, intersection, disjoint union") {
  const auto a = build_complex({{0, 1}});
  const auto b = build_complex({{1, 2}});
  CHECK(complex_union(a, b).size() == 5);
  CHECK(complex_intersection(a, b) == build_complex({{1}}));
  const auto du = disjoint_union(a, a);
  CHECK(du.complex.size() == 6);
  CHECK(connected_components(du.complex).size() == 2);
}
