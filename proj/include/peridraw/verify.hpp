/*
 * Copyright 2026 The peridraw Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PERIDRAW_VERIFY_HPP
#define PERIDRAW_VERIFY_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "peridraw/cylinder_layout.hpp"
#include "peridraw/exact_geometry.hpp"

namespace peridraw {

// Every check appends one entry; a failing entry carries a concrete witness
// (segment pair, edge or vertex ids).  No floating point, no tolerances.
struct VerificationReport {
  struct Entry {
    std::string name;
    bool pass = true;
    std::string witness;
  };
  std::vector<Entry> entries;

  bool ok() const {
    for (const Entry& e : entries)
      if (!e.pass) return false;
    return true;
  }
  void add(const std::string& name, bool pass, const std::string& witness = "") {
    entries.push_back({name, pass, witness});
  }
  std::string first_failure() const {
    for (const Entry& e : entries)
      if (!e.pass) return e.name + ": " + e.witness;
    return "";
  }
};

// Geometric view of a periodic drawing: one lifted segment per edge plus the
// vertex points.  period_y == 0 means the surface is a cylinder (or the
// plane when period_x == 0 too).
struct DrawingGeometry {
  long period_x = 0, period_y = 0;
  std::vector<Pt> vertex;             // fundamental-domain representatives
  std::vector<Segment> segment;       // lifted edge segments, one per edge
  std::vector<int> seg_org, seg_dst;  // vertex ids per segment end
};

inline DrawingGeometry geometry_of(const SurfaceMap& m, const std::vector<long>& x,
                                   const std::vector<long>& y,
                                   const std::vector<long>& dx_even,
                                   const std::vector<long>& dy_even, long period_x,
                                   long period_y) {
  DrawingGeometry g;
  g.period_x = period_x;
  g.period_y = period_y;
  g.vertex.resize(m.vertex_count());
  for (int v = 0; v < m.vertex_count(); ++v) g.vertex[v] = {x[v], y[v]};
  g.segment.resize(m.edge_count());
  g.seg_org.resize(m.edge_count());
  g.seg_dst.resize(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    int u = m.origin(2 * e);
    g.segment[e] = {{x[u], y[u]}, {x[u] + dx_even[e], y[u] + dy_even[e]}};
    g.seg_org[e] = u;
    g.seg_dst[e] = m.destination(2 * e);
  }
  return g;
}

inline DrawingGeometry geometry_of(const SurfaceMap& m, const CylinderLayout& lay) {
  return geometry_of(m, lay.x, lay.y, lay.lift_dx_even, lay.lift_dy_even,
                     lay.width, 0);
}

// Exact crossing-freeness over the periodic cover.  All pairs of segments
// are tested with the fundamental copy against every copy within the lift
// range; lifts within one period need the 3-copy (3x3) window, larger
// vertical lifts widen the window accordingly.
inline void check_crossing_free(const DrawingGeometry& g, VerificationReport& rep) {
  long max_dy = 0;
  for (const Segment& s : g.segment)
    max_dy = std::max(max_dy, std::labs(s.b.y - s.a.y));
  int ry = 1;
  if (g.period_y > 0) ry = std::max<long>(1, (max_dy + g.period_y - 1) / g.period_y);
  int rx = g.period_x > 0 ? 1 : 0;
  if (g.period_x > 0) {
    for (const Segment& s : g.segment)
      rep.add("lift-within-width", std::labs(s.b.x - s.a.x) <= g.period_x,
              "edge lift exceeds the width");
  }

  auto shifted = [&](const Segment& s, long ix, long iy) {
    Segment t = s;
    t.a.x += ix * g.period_x;
    t.b.x += ix * g.period_x;
    t.a.y += iy * g.period_y;
    t.b.y += iy * g.period_y;
    return t;
  };

  bool all_ok = true;
  std::string witness;
  int n = static_cast<int>(g.segment.size());
  for (int i = 0; i < n && all_ok; ++i) {
    for (int j = i; j < n && all_ok; ++j) {
      for (int ix = -rx; ix <= rx && all_ok; ++ix) {
        for (int iy = (g.period_y > 0 ? -ry : 0); iy <= (g.period_y > 0 ? ry : 0);
             ++iy) {
          if (i == j && ix == 0 && iy == 0) continue;
          if (segments_conflict(g.segment[i], shifted(g.segment[j], ix, iy))) {
            all_ok = false;
            std::ostringstream os;
            os << "edges " << i << " and " << j << " (copy " << ix << "," << iy
               << ")";
            witness = os.str();
            break;
          }
        }
      }
    }
  }
  rep.add("crossing-free", all_ok, witness);

  // vertices: pairwise distinct and never inside another edge
  bool verts_ok = true;
  std::string vw;
  for (size_t a = 0; a < g.vertex.size() && verts_ok; ++a)
    for (size_t b = a + 1; b < g.vertex.size(); ++b) {
      long dx = g.vertex[a].x - g.vertex[b].x;
      long dy = g.vertex[a].y - g.vertex[b].y;
      bool same_x = g.period_x > 0 ? (dx % g.period_x == 0) : dx == 0;
      bool same_y = g.period_y > 0 ? (dy % g.period_y == 0) : dy == 0;
      if (same_x && same_y) {
        verts_ok = false;
        vw = "vertices " + std::to_string(a) + " and " + std::to_string(b) +
             " coincide";
        break;
      }
    }
  rep.add("vertices-distinct", verts_ok, vw);

  bool on_edge_ok = true;
  std::string ow;
  for (size_t v = 0; v < g.vertex.size() && on_edge_ok; ++v) {
    for (int e = 0; e < n && on_edge_ok; ++e) {
      for (int ix = -rx; ix <= rx && on_edge_ok; ++ix) {
        for (int iy = (g.period_y > 0 ? -ry : 0); iy <= (g.period_y > 0 ? ry : 0);
             ++iy) {
          Segment s = shifted(g.segment[e], ix, iy);
          Pt p = g.vertex[v];
          if (!point_on_segment(p, s)) continue;
          bool endpoint = (p == s.a && g.seg_org[e] == static_cast<int>(v)) ||
                          (p == s.b && g.seg_dst[e] == static_cast<int>(v));
          if (!endpoint) {
            on_edge_ok = false;
            ow = "vertex " + std::to_string(v) + " lies on edge " + std::to_string(e);
          }
        }
      }
    }
  }
  rep.add("vertex-clear-of-edges", on_edge_ok, ow);
}

// Angular order of the drawn edges around every vertex must equal the map's
// rotation.  Exact comparison: half-plane class then cross product; distinct
// edges leaving a vertex in the same direction are reported as failures.
inline void check_rotation_consistency(const SurfaceMap& m, const DrawingGeometry& g,
                                       VerificationReport& rep) {
  auto lift_vec = [&](int h) -> Pt {
    int e = h >> 1;
    long dx = g.segment[e].b.x - g.segment[e].a.x;
    long dy = g.segment[e].b.y - g.segment[e].a.y;
    if (h & 1) return {-dx, -dy};
    return {dx, dy};
  };
  auto half_class = [](const Pt& d) {
    // 0: positive x-axis, 1: upper, 2: negative x-axis, 3: lower
    if (d.y == 0) return d.x > 0 ? 0 : 2;
    return d.y > 0 ? 1 : 3;
  };
  bool ok = true;
  std::string witness;
  for (int v = 0; v < m.vertex_count() && ok; ++v) {
    std::vector<int> rot = m.rotation_of(v);
    int deg = static_cast<int>(rot.size());
    if (deg <= 2) continue;
    // find the ccw-least direction as a start, then require strict ccw order
    auto less_ccw = [&](int ha, int hb) {
      Pt a = lift_vec(ha), b = lift_vec(hb);
      int ca = half_class(a), cb = half_class(b);
      if (ca != cb) return ca < cb;
      return cross({0, 0}, a, b) > 0;
    };
    int start = 0;
    for (int i = 1; i < deg; ++i)
      if (less_ccw(rot[i], rot[start])) start = i;
    for (int i = 0; i + 1 < deg && ok; ++i) {
      int ha = rot[(start + i) % deg], hb = rot[(start + i + 1) % deg];
      Pt a = lift_vec(ha), b = lift_vec(hb);
      if (half_class(a) == half_class(b) && cross({0, 0}, a, b) == 0) {
        ok = false;
        witness = "collinear edges at vertex " + std::to_string(v);
      } else if (!less_ccw(ha, hb)) {
        ok = false;
        witness = "rotation mismatch at vertex " + std::to_string(v);
      }
    }
  }
  rep.add("rotation-consistency", ok, witness);
}

namespace detail {

// Exact rational with a positive denominator; magnitudes in this library
// keep the cross products far inside int64.
struct Frac {
  int64_t num = 0, den = 1;
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Frac& o) const { return num * o.den <= o.num * den; }
};

}  // namespace detail

// x-monotonicity of the drawn annulus: the union of the (filled) inner
// faces meets every vertical line in one interval.  Doubling the x-scale
// makes integer columns cover the integer and half-integer lines, which
// decides all lines because the pattern only changes at vertex abscissas.
inline void check_x_monotone(const SurfaceMap& m, const DrawingGeometry& g,
                             const std::vector<int>& skip_faces,
                             VerificationReport& rep) {
  long w2 = 2 * g.period_x;
  auto dx_of = [&](int h) {
    long d = g.segment[h >> 1].b.x - g.segment[h >> 1].a.x;
    return (h & 1) ? -d : d;
  };
  auto dy_of = [&](int h) {
    long d = g.segment[h >> 1].b.y - g.segment[h >> 1].a.y;
    return (h & 1) ? -d : d;
  };
  // per column: list of y-intervals covered by faces
  std::vector<std::vector<std::pair<detail::Frac, detail::Frac>>> cols(w2);
  for (int f = 0; f < m.face_count(); ++f) {
    if (std::find(skip_faces.begin(), skip_faces.end(), f) != skip_faces.end())
      continue;
    // lifted corner coordinates (doubled x), anchored at the face's first
    // half-edge; faces are disks so the walk closes exactly
    std::vector<std::pair<long, long>> corner;  // (2x, y)
    {
      int h0 = m.half_of_face(f), h = h0;
      long cx = 2 * g.vertex[m.origin(h0)].x;
      long cy = g.vertex[m.origin(h0)].y;
      do {
        corner.push_back({cx, cy});
        cx += 2 * dx_of(h);
        cy += dy_of(h);
        h = m.face_next(h);
      } while (h != h0);
    }
    long lo_x = corner[0].first, hi_x = corner[0].first;
    for (auto& [cx, cy] : corner) {
      lo_x = std::min(lo_x, cx);
      hi_x = std::max(hi_x, cx);
    }
    int deg = static_cast<int>(corner.size());
    for (long base = -w2; base <= w2; base += w2) {
      long from = std::max(0l, lo_x + base), to = std::min(w2 - 1, hi_x + base);
      for (long c = from; c <= to; ++c) {
        // crossings of the face boundary with the line, as fractions
        detail::Frac lo{0, 1}, hi{0, 1};
        bool first = true;
        for (int i = 0; i < deg; ++i) {
          long ax = corner[i].first + base, ay = corner[i].second;
          long bx = corner[(i + 1) % deg].first + base, by = corner[(i + 1) % deg].second;
          if (ax > bx) {
            std::swap(ax, bx);
            std::swap(ay, by);
          }
          if (c < ax || c > bx) continue;
          detail::Frac ylo, yhi;
          if (ax == bx) {
            ylo = {std::min(ay, by), 1};
            yhi = {std::max(ay, by), 1};
          } else {
            detail::Frac y{ay * (bx - ax) + (by - ay) * (c - ax), bx - ax};
            ylo = yhi = y;
          }
          if (first) {
            lo = ylo;
            hi = yhi;
            first = false;
          } else {
            if (ylo < lo) lo = ylo;
            if (hi < yhi) hi = yhi;
          }
        }
        if (!first) cols[c].push_back({lo, hi});
      }
    }
  }
  bool ok = true;
  std::string witness;
  for (long c = 0; c < w2 && ok; ++c) {
    auto& iv = cols[c];
    if (iv.empty()) {
      ok = false;
      witness = "vertical line " + std::to_string(c) + "/2 misses the drawing";
      break;
    }
    std::sort(iv.begin(), iv.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    detail::Frac reach = iv.front().second;
    for (const auto& seg : iv) {
      if (reach < seg.first) {
        ok = false;
        witness = "gap on vertical line " + std::to_string(c) + "/2";
        break;
      }
      if (reach < seg.second) reach = seg.second;
    }
  }
  rep.add("x-monotone", ok, witness);
}

// Prop. 1 / Thm. 2 contract: bottom contour at y = 0 and exact +-1 slopes on
// the top contour in the chordless regime; width, height and slope bounds,
// x-monotonicity, crossing-freeness and rotation consistency always.
inline VerificationReport check_cylinder_contract(const CylindricTriangulation& G,
                                                  const CylinderLayout& lay) {
  VerificationReport rep;
  const SurfaceMap& m = G.map;
  DrawingGeometry g = geometry_of(m, lay);
  check_crossing_free(g, rep);
  check_rotation_consistency(m, g, rep);
  check_x_monotone(m, g, {G.b1, G.b2}, rep);

  long n = m.vertex_count();
  if (lay.chordless_contract) {
    rep.add("width-exact", lay.width == 2 * n,
            "w = " + std::to_string(lay.width) + ", 2n = " + std::to_string(2 * n));
    bool y0 = true;
    std::string w1;
    for (int h : G.contour1)
      if (lay.y[m.origin(h)] != 0) {
        y0 = false;
        w1 = "vertex " + std::to_string(m.origin(h));
      }
    rep.add("bottom-at-zero", y0, w1);
    bool slopes = true;
    std::string w2;
    for (int h : G.contour2) {
      int e = SurfaceMap::edge_of(h);
      if (m.is_loop(h)) continue;  // loops are horizontal circles
      bool shared = m.face(h) == G.b1 || m.face(SurfaceMap::twin(h)) == G.b1;
      if (shared) continue;  // C(B2) \ C(B1) only
      if (std::labs(lay.lift_dx_even[e]) != std::labs(lay.lift_dy_even[e])) {
        slopes = false;
        w2 = "edge " + std::to_string(e);
      }
    }
    rep.add("top-slopes-unit", slopes, w2);
  } else {
    rep.add("width-bound", lay.width <= 2 * n,
            "w = " + std::to_string(lay.width) + ", 2n = " + std::to_string(2 * n));
  }

  long d = G.boundary_distance();
  rep.add("height-bound", lay.height <= n * (2 * d + 1),
          "h = " + std::to_string(lay.height) + ", n(2d+1) = " +
              std::to_string(n * (2 * d + 1)));

  bool bslopes = true;
  std::string w3;
  for (int e = 0; e < m.edge_count(); ++e) {
    if (!G.is_boundary_edge(e) || m.is_loop(2 * e)) continue;
    if (std::labs(lay.lift_dy_even[e]) > std::labs(lay.lift_dx_even[e])) {
      bslopes = false;
      w3 = "edge " + std::to_string(e);
    }
  }
  rep.add("boundary-slopes", bslopes, w3);

  bool yr = true;
  for (long y : lay.y) yr &= (y >= 0 && y <= lay.height);
  rep.add("y-range", yr);
  return rep;
}

// Property Pl: increasing the x-span of all edges along dual root paths of
// upper-boundary edges by arbitrary nonnegative amounts keeps the drawing
// crossing-free.  Batches are applied to the finished drawing and the
// geometry re-verified from scratch.
template <typename Rng>
VerificationReport fuzz_pl_property(const CylindricTriangulation& G,
                                    const DualForest& df, const TwoPassResult& tp,
                                    int trials, Rng& rng) {
  VerificationReport rep;
  const SurfaceMap& m = G.map;
  for (int trial = 0; trial < trials; ++trial) {
    SpanLedger led = tp.ledger;
    long width = tp.width;
    for (int h : G.contour2) {
      long delta = static_cast<long>(rng() % 4);
      if (delta == 0) continue;
      for (int e : df.root_path_edges(SurfaceMap::edge_of(h))) {
        if (led.final_dx_even[e] > 0)
          led.final_dx_even[e] += delta;
        else if (led.final_dx_even[e] < 0)
          led.final_dx_even[e] -= delta;
        else
          check_internal(false, "strip path crossed a vertical edge");
      }
      width += delta;
    }
    std::vector<long> x = detail::propagate_x(m, led, m.origin(G.contour1.front()), width);
    std::vector<long> dx(m.edge_count()), dy(m.edge_count());
    for (int e = 0; e < m.edge_count(); ++e) {
      dx[e] = led.final_dx_even[e];
      dy[e] = tp.y[m.destination(2 * e)] - tp.y[m.origin(2 * e)];
    }
    DrawingGeometry g = geometry_of(m, x, tp.y, dx, dy, width, 0);
    VerificationReport sub;
    check_crossing_free(g, sub);
    if (!sub.ok()) {
      rep.add("pl-batch-" + std::to_string(trial), false, sub.first_failure());
      return rep;
    }
  }
  rep.add("pl-fuzz", true, std::to_string(trials) + " batches");
  return rep;
}

}  // namespace peridraw

#endif  // PERIDRAW_VERIFY_HPP
