#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "peridraw/exact_geometry.hpp"
#include "peridraw/fpp.hpp"

using namespace peridraw;

namespace {

QuasiTriangulation quasi_from_faces(int n, std::vector<std::vector<int>> faces,
                                    int bu, int bv) {
  // faces listed ccw including the outer one; the outer face is the one
  // containing the directed side bv -> bu (the underside of the base)
  SurfaceMap m = SurfaceMap::from_faces(n, faces);
  int under = -1;
  for (int h = 0; h < m.half_edge_count(); ++h)
    if (m.origin(h) == bv && m.destination(h) == bu) under = h;
  REQUIRE(under >= 0);
  return validate_quasi(m, m.face(under), under);
}

QuasiTriangulation apex_triangle() {
  return quasi_from_faces(3, {{0, 1, 2}, {2, 1, 0}}, 0, 1);
}

QuasiTriangulation square_with_diagonal() {
  return quasi_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {1, 0, 3, 2}}, 0, 1);
}

QuasiTriangulation k4_based(int bu, int bv) {
  return quasi_from_faces(4, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {2, 1, 0}}, bu, bv);
}

QuasiTriangulation fan(int k) {
  // base (0,1); fan vertices w_i = i+1 for i = 1..k, all adjacent to 0;
  // triangles (0,1,w_1), (0,w_1,w_2), ..., outer (1, 0, w_k, ..., w_1)
  std::vector<std::vector<int>> faces;
  faces.push_back({0, 1, 2});
  for (int i = 1; i < k; ++i) faces.push_back({0, 1 + i, 2 + i});
  std::vector<int> outer{1, 0};
  for (int i = k; i >= 1; --i) outer.push_back(1 + i);
  faces.push_back(outer);
  return quasi_from_faces(k + 2, faces, 0, 1);
}

bool layout_crossing_free(const QuasiTriangulation& q, const PlanarLayout& lay) {
  std::vector<Segment> segs;
  const SurfaceMap& m = q.map;
  for (int e = 0; e < m.edge_count(); ++e) {
    int u = m.origin(2 * e), v = m.destination(2 * e);
    segs.push_back({{lay.x[u], lay.y[u]}, {lay.x[v], lay.y[v]}});
  }
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j)
      if (segments_conflict(segs[i], segs[j])) return false;
  for (int a = 0; a < m.vertex_count(); ++a)
    for (int b = a + 1; b < m.vertex_count(); ++b)
      if (lay.x[a] == lay.x[b] && lay.y[a] == lay.y[b]) return false;
  return true;
}

void require_outer_slopes(const QuasiTriangulation& q, const PlanarLayout& lay) {
  for (int h : q.outer_cycle) {
    if (SurfaceMap::edge_of(h) == SurfaceMap::edge_of(q.base)) continue;
    int u = q.map.origin(h), v = q.map.destination(h);
    long dx = lay.x[v] - lay.x[u], dy = lay.y[v] - lay.y[u];
    REQUIRE(std::abs(dx) == std::abs(dy));
  }
}

}  // namespace

TEST_CASE("single apex: width 2, apex at (1,1)") {
  QuasiTriangulation q = apex_triangle();
  CanonicalOrdering ord = planar_canonical_order(q);
  REQUIRE(ord.pi == std::vector<int>{2});
  PlanarLayout lay = fpp_draw(q);
  REQUIRE(lay.width == 2);
  REQUIRE(lay.x[2] == 1);
  REQUIRE(lay.y[2] == 1);
}

TEST_CASE("four vertices: width 4") {
  QuasiTriangulation q = square_with_diagonal();
  PlanarLayout lay = fpp_draw(q);
  REQUIRE(lay.width == 4);
  REQUIRE(layout_crossing_free(q, lay));
  require_outer_slopes(q, lay);
}

TEST_CASE("K4 drawn from every base edge is crossing-free") {
  for (auto [bu, bv] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}}) {
    QuasiTriangulation q = k4_based(bu, bv);
    PlanarLayout lay = fpp_draw(q);
    REQUIRE(lay.width == 4);
    REQUIRE(layout_crossing_free(q, lay));
    require_outer_slopes(q, lay);
    // all mass above the base
    for (long y : lay.y) REQUIRE(y >= 0);
  }
}

TEST_CASE("fans of every size pass the planar Def. 1 checker") {
  for (int k = 1; k <= 5; ++k) {
    QuasiTriangulation q = fan(k);
    CanonicalOrdering ord = planar_canonical_order(q);
    REQUIRE(static_cast<int>(ord.pi.size()) == k);
    CanonicalCheckReport rep = check_planar_canonical(q, ord.pi);
    INFO("k=" << k << ": " << rep.reason);
    REQUIRE(rep.ok);
    PlanarLayout lay = fpp_draw(q);
    REQUIRE(lay.width == 2 * (k + 2) - 4);
    REQUIRE(layout_crossing_free(q, lay));
    require_outer_slopes(q, lay);
  }
}

TEST_CASE("chord endpoints are never chosen while the chord is exposed") {
  // outer 4-cycle (0,1,2,3) with chord 0-2: shelling from the outer cycle
  // must start with 1 or 3 (the pocket vertices), never a chord endpoint.
  QuasiTriangulation q = square_with_diagonal();
  CanonicalOrdering ord = planar_canonical_order(q);
  // base is (0,1): removable vertices are 2 and 3; vertex 2 is a chord
  // endpoint only if 0-2 is a chord of the CURRENT cycle, which holds at the
  // start.  The last removed (= first inserted) must be adjacent to both 0
  // and 1: that is vertex 2.
  REQUIRE(ord.pi.front() == 2);
  REQUIRE(ord.steps.front().a == 0);
  REQUIRE(ord.steps.front().b == 1);
}

TEST_CASE("widen_base") {
  QuasiTriangulation q = k4_based(0, 1);
  PlanarLayout lay = fpp_draw(q);

  SECTION("identity when target equals the width") {
    PlanarLayout same = widen_base(lay, lay.width);
    REQUIRE(same.x == lay.x);
    REQUIRE(same.y == lay.y);
  }
  SECTION("apex keeps its offset from the right endpoint") {
    PlanarLayout wide = widen_base(lay, lay.width + 2);
    REQUIRE(wide.width == lay.width + 2);
    REQUIRE(wide.x[wide.base_u] == 0);
    REQUIRE(wide.x[wide.base_v] == wide.width);
    for (int v = 0; v < q.map.vertex_count(); ++v) {
      if (v == lay.base_u) continue;
      REQUIRE(wide.x[v] - lay.x[v] == 2);
    }
    REQUIRE(layout_crossing_free(q, wide));
  }
  SECTION("widening preserves the multiset of y-coordinates") {
    PlanarLayout wide = widen_base(lay, lay.width + 7);
    std::multiset<long> a(lay.y.begin(), lay.y.end());
    std::multiset<long> b(wide.y.begin(), wide.y.end());
    REQUIRE(a == b);
  }
  SECTION("shrinking is rejected") {
    REQUIRE_THROWS_AS(widen_base(lay, lay.width - 2), map_error);
  }
  SECTION("fuzz: random targets preserve crossing-freeness") {
    for (long extra : {1, 2, 3, 4, 5, 8, 12, 17, 20}) {
      PlanarLayout wide = widen_base(lay, lay.width + extra);
      REQUIRE(layout_crossing_free(q, wide));
    }
  }
}

TEST_CASE("strip accounting: first vertex adds no width, later ones add 2") {
  for (int k = 2; k <= 6; ++k) {
    QuasiTriangulation q = fan(k);
    PlanarLayout lay = fpp_draw(q);
    REQUIRE(lay.width == 2 + 2 * (q.size() - 3));
  }
}
