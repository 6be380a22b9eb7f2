#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "peridraw/canonical_order.hpp"

using namespace peridraw;

namespace {

// K4 over C(B1)=(0,1,2) with apex 3, a doubled 3-0 spoke and a loop at 3;
// B2 is the degree-1 face above the loop.  Smallest weakly simple cylinder
// exercising both the 2-cycle and the loop shelling rules.
struct LoopFixture {
  SurfaceMap map;
  int b1, b2;
};

LoopFixture loop_cylinder() {
  // edges: e0=01 (h0,h1), e1=12 (h2,h3), e2=20 (h4,h5), e3=3-0 left (h6,h7),
  // e4=3-1 (h8,h9), e5=3-2 (h10,h11), e6=3-0 right (h12,h13), e7=loop (h14,h15)
  std::vector<std::vector<int>> rot = {
      {0, 7, 13, 5},            // vertex 0
      {2, 9, 1},                // vertex 1
      {4, 11, 3},               // vertex 2
      {14, 15, 6, 8, 10, 12},   // vertex 3
  };
  LoopFixture fx{SurfaceMap::from_rotations(rot), -1, -1};
  fx.b1 = fx.map.face(1);
  fx.b2 = fx.map.face(14);
  return fx;
}

CylindricTriangulation octa() {
  auto mm = fixtures::octahedron_marked();
  return validate_cylindric(mm.map, mm.b1, mm.b2);
}

}  // namespace

TEST_CASE("loop fixture validates as weakly simple cylindric") {
  LoopFixture fx = loop_cylinder();
  REQUIRE(fx.map.genus() == 0);
  CylindricTriangulation t = validate_cylindric(fx.map, fx.b1, fx.b2);
  REQUIRE(t.n == 4);
  REQUIRE(t.has_noncontractible_loop);
  REQUIRE(t.has_noncontractible_two_cycle);
  REQUIRE(t.contour2.size() == 1);
  REQUIRE(t.b1_chordless());
}

TEST_CASE("shell on the octahedron satisfies Def. 1") {
  CylindricTriangulation t = octa();
  CanonicalOrdering ord = shell(t);
  REQUIRE(ord.pi.size() == 3);
  std::set<int> shelled(ord.pi.begin(), ord.pi.end());
  REQUIRE(shelled == std::set<int>{3, 4, 5});

  CanonicalCheckReport rep = check_canonical(t, ord.pi);
  INFO(rep.reason);
  REQUIRE(rep.ok);

  SECTION("every permutation of {3,4,5} is checked honestly") {
    // All orderings of the octahedron top are canonical (no chords appear),
    // so the checker should accept each; this pins the checker against
    // false negatives.
    std::vector<int> pi{3, 4, 5};
    std::sort(pi.begin(), pi.end());
    do {
      CanonicalCheckReport r = check_canonical(t, pi);
      INFO("pi = " << pi[0] << pi[1] << pi[2] << ": " << r.reason);
      REQUIRE(r.ok);
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
  SECTION("wrong length fails") {
    REQUIRE_FALSE(check_canonical(t, {3, 4}).ok);
    REQUIRE_FALSE(check_canonical(t, {3, 4, 4}).ok);
    REQUIRE_FALSE(check_canonical(t, {0, 4, 5}).ok);
  }
}

TEST_CASE("shell rejects chords at C(B1)") {
  // C(B1) square (0,1,2,3), chord 0-2 with one vertex 4 in the pocket
  // (0,1,2), apex 5 above everything.
  std::vector<std::vector<int>> faces = {
      {3, 2, 1, 0},     // B1 (other faces ccw)
      {0, 1, 4},
      {1, 2, 4},
      {0, 4, 2},
      {0, 2, 5},
      {2, 3, 5},
      {3, 0, 5},
  };
  SurfaceMap m = SurfaceMap::from_faces(6, faces);
  REQUIRE(m.genus() == 0);
  int b1 = -1, b2 = -1;
  for (int f = 0; f < m.face_count(); ++f)
    if (m.face_degree(f) == 4) b1 = f;
  for (int h = 0; h < m.half_edge_count() && b2 == -1; ++h) {
    if (m.face(h) == b1) continue;
    std::set<int> vs;
    for (int x : m.face_cycle(m.face(h))) vs.insert(m.origin(x));
    if (vs == std::set<int>{0, 2, 5}) b2 = m.face(h);
  }
  REQUIRE(b1 >= 0);
  REQUIRE(b2 >= 0);
  CylindricTriangulation t = validate_cylindric(m, b1, b2);
  REQUIRE_FALSE(t.b1_chordless());
  try {
    shell(t);
    FAIL("expected ChordAtB1");
  } catch (const map_error& err) {
    REQUIRE(err.code() == errc::chord_at_b1);
  }
}

TEST_CASE("shelling the loop fixture deletes the loop then takes its vertex") {
  LoopFixture fx = loop_cylinder();
  CylindricTriangulation t = validate_cylindric(fx.map, fx.b1, fx.b2);
  CanonicalOrdering ord = shell(t);
  REQUIRE(ord.pi == std::vector<int>{3});
  REQUIRE(ord.steps[0].loop);
  REQUIRE(ord.steps[0].a == 0);
  REQUIRE(ord.steps[0].b == 0);
  REQUIRE(ord.steps[0].up_halfedges.size() == 4);
  // forest spans G minus C(B2) = {0,1,2}
  int forest_edges = 0;
  for (char f : ord.in_f) forest_edges += f;
  REQUIRE(forest_edges == 3);
  CanonicalCheckReport rep = check_canonical(t, ord.pi);
  INFO(rep.reason);
  REQUIRE(rep.ok);
}

TEST_CASE("forests on the octahedron") {
  CylindricTriangulation t = octa();
  CanonicalOrdering ord = shell(t);
  DualForest df = build_forests(t, ord);

  SECTION("counting: |F| = n - |C(B2)|, trees = |C(B1)|") {
    int f_edges = 0;
    for (char c : ord.in_f) f_edges += c;
    REQUIRE(f_edges == t.n - static_cast<int>(t.contour2.size()));
    REQUIRE(df.tree_count == static_cast<int>(t.contour1.size()));
  }
  SECTION("F* is a spanning forest (union-find over nodes)") {
    detail::UnionFind uf(df.node_count);
    int nontree_hits = 0;
    for (int e = 0; e < t.map.edge_count(); ++e) {
      if (ord.in_f[e]) continue;
      if (!uf.unite(df.node_of_half[2 * e], df.node_of_half[2 * e + 1]))
        ++nontree_hits;
    }
    REQUIRE(nontree_hits == 0);
    std::set<int> comps;
    for (int i = 0; i < df.node_count; ++i) comps.insert(uf.find(i));
    REQUIRE(static_cast<int>(comps.size()) == df.tree_count);
  }
  SECTION("s_e matches brute-force subtree enumeration") {
    for (int e = 0; e < t.map.edge_count(); ++e) {
      if (ord.in_f[e]) {
        REQUIRE(df.s[e] == 0);
        continue;
      }
      long count = 0;
      for (int f = 0; f < t.map.edge_count(); ++f) {
        if (ord.in_f[f] || f == e) continue;
        auto path = df.root_path_edges(f);
        for (size_t i = 1; i < path.size(); ++i)
          if (path[i] == e) ++count;
      }
      REQUIRE(df.s[e] == count);
    }
  }
  SECTION("sum of B1-edge subtree sizes accounts for all strips") {
    long total = 0;
    for (int h : t.contour1) total += df.s[SurfaceMap::edge_of(h)];
    REQUIRE(total == 2l * static_cast<long>(ord.pi.size()));
  }
}

TEST_CASE("replaying the shelling reconstructs the edge multiset") {
  LoopFixture fx = loop_cylinder();
  CylindricTriangulation cases[] = {octa(),
                                    validate_cylindric(fx.map, fx.b1, fx.b2)};
  for (const CylindricTriangulation& t : cases) {
    CanonicalOrdering ord = shell(t);
    std::multiset<int> edges;
    for (int h : t.contour1) edges.insert(SurfaceMap::edge_of(h));
    for (const ShellStep& st : ord.steps) {
      for (int h : st.up_halfedges) edges.insert(SurfaceMap::edge_of(h));
      if (st.loop) edges.insert(st.loop_edge);
    }
    std::multiset<int> all;
    for (int e = 0; e < t.map.edge_count(); ++e) all.insert(e);
    REQUIRE(edges == all);
  }
}

TEST_CASE("every non-B2 vertex points to its largest-labelled neighbour") {
  CylindricTriangulation t = octa();
  CanonicalOrdering ord = shell(t);
  for (int v = 0; v < t.map.vertex_count(); ++v) {
    if (t.on_c2[v]) {
      REQUIRE(ord.parent_half[v] == -1);
      continue;
    }
    REQUIRE(ord.parent_half[v] != -1);
    REQUIRE(t.map.origin(ord.parent_half[v]) == v);
    int p = t.map.destination(ord.parent_half[v]);
    for (int h : t.map.rotation_of(v))
      REQUIRE(ord.label[t.map.destination(h)] <= ord.label[p]);
  }
}
