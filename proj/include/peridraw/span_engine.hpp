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

#ifndef PERIDRAW_SPAN_ENGINE_HPP
#define PERIDRAW_SPAN_ENGINE_HPP

#include <cstdlib>
#include <queue>
#include <vector>

#include "peridraw/canonical_order.hpp"

namespace peridraw {

// Per-edge span bookkeeping of the incremental drawing.  The first pass
// records the x-span r_e of every edge at the moment it appears, together
// with its sign (which endpoint is the left end); the second pass adds the
// dual-forest stretch s_e.  final span(e) = r_e + s_e.
struct SpanLedger {
  std::vector<long> r;                 // span at creation
  std::vector<long> creation_dx_even;  // signed creation span of half-edge 2e
  std::vector<long> s;                 // stretches; 0 on F edges
  std::vector<long> final_dx_even;

  explicit SpanLedger(int edge_count)
      : r(edge_count, 0),
        creation_dx_even(edge_count, 0),
        s(edge_count, 0),
        final_dx_even(edge_count, 0) {}

  long final_span(int e) const { return std::abs(final_dx_even[e]); }
  long dx(int h) const {
    return (h & 1) ? -final_dx_even[h >> 1] : final_dx_even[h >> 1];
  }
};

namespace detail {

// Upper-boundary state of the incremental drawing.  Boundary contours are
// vertex-simple at all times, so positions are keyed by their left vertex.
struct BoundarySim {
  const SurfaceMap& m;
  std::vector<int> bnext, bedge;
  std::vector<long> bspan;
  std::vector<long> y;
  long width = 0;

  explicit BoundarySim(const SurfaceMap& map)
      : m(map),
        bnext(map.vertex_count(), -1),
        bedge(map.vertex_count(), -1),
        bspan(map.vertex_count(), 0),
        y(map.vertex_count(), 0) {}

  // +1 on the boundary edge holding gamma half g (strip insertion seen from
  // the boundary).
  void bump(int g) {
    int org = m.origin(g);
    check_internal(bedge[org] == SurfaceMap::edge_of(g), "boundary desync at bump");
    bspan[org] += 1;
    width += 1;
  }

  // Executes one insertion: strips (unless suppressed), placement of st.v at
  // the ray crossing, creation spans of the new edges, boundary splice.
  void insert(const ShellStep& st, SpanLedger& led, bool with_strips) {
    const auto& gam = st.gamma_halfedges;
    if (with_strips) {
      bump(gam.front());
      bump(gam.back());
    }
    long dist = 0;
    std::vector<long> prefix(gam.size() + 1, 0);
    for (size_t i = 0; i < gam.size(); ++i) {
      int org = m.origin(gam[i]);
      check_internal(bedge[org] == SurfaceMap::edge_of(gam[i]),
                     "gamma does not match the simulated boundary");
      dist += bspan[org];
      prefix[i + 1] = dist;
    }
    long ya = y[st.a], yb = y[st.b];
    check_internal((dist + yb - ya) % 2 == 0, "odd Manhattan distance on the boundary");
    long t = (dist + yb - ya) / 2;
    long srem = dist - t;
    check_internal(t >= 1 && srem >= 1, "ray crossing degenerates onto the boundary");
    y[st.v] = ya + t;

    const auto& up = st.up_halfedges;
    for (size_t i = 0; i < up.size(); ++i) {
      int h = up[i];  // v -> w_i
      long dxv = prefix[i] - t;
      led.creation_dx_even[h >> 1] = (h & 1) ? -dxv : dxv;
      led.r[h >> 1] = std::abs(dxv);
    }

    bnext[st.a] = st.v;
    bedge[st.a] = SurfaceMap::edge_of(up.front());
    bspan[st.a] = t;
    bnext[st.v] = st.b;
    bedge[st.v] = SurfaceMap::edge_of(up.back());
    bspan[st.v] = srem;

    if (st.loop) {
      // The loop spreads over the whole current width at the new vertex's
      // height and becomes the upper boundary on its own; no strips.
      led.r[st.loop_edge] = width;
      int even = 2 * st.loop_edge;
      led.creation_dx_even[st.loop_edge] =
          (st.loop_half == even) ? width : -width;
      bnext[st.v] = st.v;
      bedge[st.v] = st.loop_edge;
      bspan[st.v] = width;
    }
  }
};

// Pass 2: stretches from the dual forest; signs follow the creation
// direction (vertical edges are exactly the F edges and never stretch).
// Loop steps' left strips were deferred: their root paths are walked here.
inline void finalize_spans(SpanLedger& led, const DualForest& df) {
  std::vector<long> stretch(led.r.size(), 0);
  for (size_t e = 0; e < led.r.size(); ++e) stretch[e] = df.s[e];
  for (int c : df.deferred_left_strips)
    for (int e : df.root_path_edges(c)) stretch[e] += 1;
  for (size_t e = 0; e < led.r.size(); ++e) {
    led.s[e] = stretch[e];
    long c = led.creation_dx_even[e];
    if (c > 0)
      led.final_dx_even[e] = c + led.s[e];
    else if (c < 0)
      led.final_dx_even[e] = c - led.s[e];
    else {
      check_internal(led.s[e] == 0, "vertical edge stretched (must be an F edge)");
      led.final_dx_even[e] = 0;
    }
  }
}

// Anchor one vertex and walk the final signed spans over the graph.
// modulus > 0 wraps x-coordinates (cylinder); modulus == 0 is the plane.
// Every edge must telescope consistently (mod the width), including the
// non-tree ones; a mismatch indicates a span bug upstream.
inline std::vector<long> propagate_x(const SurfaceMap& m, const SpanLedger& led,
                                     int anchor, long modulus) {
  auto norm = [&](long v) {
    if (modulus <= 0) return v;
    v %= modulus;
    return v < 0 ? v + modulus : v;
  };
  std::vector<long> x(m.vertex_count(), -1);
  std::vector<char> seen(m.vertex_count(), 0);
  std::queue<int> q;
  x[anchor] = 0;
  seen[anchor] = 1;
  q.push(anchor);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int h : m.rotation_of(v)) {
      int w = m.destination(h);
      if (seen[w]) continue;
      seen[w] = 1;
      x[w] = norm(x[v] + led.dx(h));
      q.push(w);
    }
  }
  for (int h = 0; h < m.half_edge_count(); h += 2) {
    long diff = x[m.destination(h)] - x[m.origin(h)] - led.dx(h);
    bool ok = modulus > 0 ? (diff % modulus == 0) : (diff == 0);
    check_internal(ok, "spans are inconsistent around a cycle",
                   errc::inconsistent_spans);
  }
  return x;
}

}  // namespace detail

}  // namespace peridraw

#endif  // PERIDRAW_SPAN_ENGINE_HPP
