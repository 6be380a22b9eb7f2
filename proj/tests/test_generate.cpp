#include <catch2/catch_amalgamated.hpp>

#include "naive_sim.hpp"
#include "peridraw/cylinder_layout.hpp"
#include "peridraw/generate.hpp"
#include "peridraw/verify.hpp"

using namespace peridraw;

TEST_CASE("same seed, same instance") {
  GenCylParams p;
  p.seed = 42;
  p.n = 30;
  p.b1 = 4;
  p.b2 = 5;
  CylindricTriangulation a = gen_cylindric(p);
  CylindricTriangulation b = gen_cylindric(p);
  REQUIRE(a.map.half_edge_count() == b.map.half_edge_count());
  for (int h = 0; h < a.map.half_edge_count(); ++h) {
    REQUIRE(a.map.vertex_next(h) == b.map.vertex_next(h));
    REQUIRE(a.map.origin(h) == b.map.origin(h));
  }
}

TEST_CASE("random cylinders validate and have the requested shape") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    GenCylParams p;
    p.seed = seed;
    p.n = 6 + static_cast<int>(seed % 37);
    p.b1 = 3 + static_cast<int>(seed % 4);
    p.b2 = 3 + static_cast<int>((seed / 2) % 4);
    if (p.n < p.b1 + 2) p.n = p.b1 + 2;
    CylindricTriangulation t = gen_cylindric(p);
    REQUIRE(t.n == p.n);
    REQUIRE(static_cast<int>(t.contour1.size()) == p.b1);
    REQUIRE(static_cast<int>(t.contour2.size()) == p.b2);
    REQUIRE(t.b1_chordless());
  }
}

TEST_CASE("loop instances carry exactly one loop and shell cleanly") {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    GenCylParams p;
    p.seed = seed;
    p.n = 12 + static_cast<int>(seed % 20);
    p.b1 = 3;
    p.b2 = 3;
    p.with_loop = true;
    CylindricTriangulation t = gen_cylindric(p);
    REQUIRE(t.has_noncontractible_loop);
    int loops = 0;
    for (int e = 0; e < t.map.edge_count(); ++e) loops += t.map.is_loop(2 * e);
    REQUIRE(loops == 1);
    CanonicalOrdering ord = shell(t);
    CanonicalCheckReport rep = check_canonical(t, ord.pi);
    INFO("seed " << seed << ": " << rep.reason);
    REQUIRE(rep.ok);
  }
}

TEST_CASE("chord instances have chords at C(B1) and draw correctly") {
  int with_chords = 0;
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    GenCylParams p;
    p.seed = seed;
    p.n = 18 + static_cast<int>(seed % 12);
    p.b1 = 4 + static_cast<int>(seed % 3);
    p.b2 = 3;
    p.chord_bias = 0.8;
    CylindricTriangulation t = gen_cylindric(p);
    REQUIRE(t.n == p.n);
    if (!t.b1_chordless()) ++with_chords;
    CylinderLayout lay = draw_with_chords(t);
    VerificationReport rep = check_cylinder_contract(t, lay);
    INFO("seed " << seed << ": " << rep.first_failure());
    REQUIRE(rep.ok());
  }
  REQUIRE(with_chords >= 12);  // the bias must actually produce chords
}

TEST_CASE("generated instances agree with the naive oracle") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    GenCylParams p;
    p.seed = seed * 977;
    p.n = 8 + static_cast<int>(seed * 3 % 30);
    p.b1 = 3 + static_cast<int>(seed % 3);
    p.b2 = 3;
    p.with_loop = (seed % 3 == 0);
    CylindricTriangulation t = gen_cylindric(p);
    CanonicalOrdering ord = shell(t);
    DualForest df = build_forests(t, ord);
    TwoPassResult tp = two_pass_spans(t, ord, df);
    naive::NaiveResult nv = naive::simulate(t, ord);
    REQUIRE(nv.width == tp.width);
    REQUIRE(tp.y == nv.y);
    for (int e = 0; e < t.map.edge_count(); ++e) {
      INFO("seed " << seed << " edge " << e);
      REQUIRE(tp.ledger.final_dx_even[e] == nv.signed_dx_even[e]);
    }
    REQUIRE(x_from_spans(t, tp.ledger, tp.width) == nv.x);
  }
}

TEST_CASE("chordless drawings over the generator pass the full contract") {
  for (uint64_t seed = 100; seed < 115; ++seed) {
    GenCylParams p;
    p.seed = seed;
    p.n = 10 + static_cast<int>(seed % 25);
    p.b1 = 3 + static_cast<int>(seed % 5);
    p.b2 = 3 + static_cast<int>(seed % 3);
    p.with_loop = (seed % 4 == 0);
    CylindricTriangulation t = gen_cylindric(p);
    CylinderLayout lay = draw_chordless(t);
    VerificationReport rep = check_cylinder_contract(t, lay);
    INFO("seed " << seed << ": " << rep.first_failure());
    REQUIRE(rep.ok());
  }
}

TEST_CASE("quasi generator: valid, deterministic, drawable") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    int mm = 3 + static_cast<int>(seed % 17);
    QuasiTriangulation q = gen_quasi(seed, mm);
    REQUIRE(q.size() == mm);
    PlanarLayout lay = fpp_draw(q);
    REQUIRE(lay.width == 2 * mm - 4);
  }
}

TEST_CASE("toroidal generator: fixed corpus and flips validate") {
  SECTION("one-vertex map") {
    ToroidalTriangulation t = gen_toroidal({1, 1, 0});
    REQUIRE(t.n == 1);
    REQUIRE(t.weakly_simple);
  }
  SECTION("K7") {
    ToroidalTriangulation t = gen_toroidal({1, 7, 0});
    REQUIRE(t.n == 7);
    REQUIRE(!t.weakly_simple);
  }
  SECTION("grids with flips stay simple toroidal") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      int n = 9 + 3 * static_cast<int>(seed % 5);
      ToroidalTriangulation t = gen_toroidal({seed, n, 25});
      REQUIRE(t.n == n);
      REQUIRE(!t.weakly_simple);
    }
  }
  SECTION("flips actually change the map") {
    ToroidalTriangulation a = gen_toroidal({5, 16, 0});
    ToroidalTriangulation b = gen_toroidal({5, 16, 30});
    bool same = a.map.half_edge_count() == b.map.half_edge_count();
    if (same) {
      bool identical = true;
      for (int h = 0; h < a.map.half_edge_count(); ++h)
        identical &= a.map.vertex_next(h) == b.map.vertex_next(h);
      same = identical;
    }
    REQUIRE_FALSE(same);
  }
}
