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

#ifndef PERIDRAW_GENERATE_HPP
#define PERIDRAW_GENERATE_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "peridraw/fpp.hpp"
#include "peridraw/triangulations.hpp"

namespace peridraw {

// Deterministic RNG for instance generation: mt19937_64 (bit-exact on every
// platform) with plain modulo draws.  The standard distributions are
// implementation-defined and would break cross-platform reproducibility.
class SplitRng {
 public:
  explicit SplitRng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  uint64_t below(uint64_t n) {
    check_internal(n > 0, "empty draw range");
    return raw() % n;
  }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

// Rotation system under construction: ccw successor/predecessor per half-edge
// with O(1) insertion, twins paired as 2i / 2i+1.
struct RotBuilder {
  std::vector<int> nxt, prv, org;

  int new_pair(int org_even, int org_odd) {
    int h = static_cast<int>(nxt.size());
    nxt.insert(nxt.end(), {-1, -1});
    prv.insert(prv.end(), {-1, -1});
    org.insert(org.end(), {org_even, org_odd});
    return h;
  }

  void make_singleton(int h) {  // h alone in its vertex's rotation
    nxt[h] = h;
    prv[h] = h;
  }

  // insert h immediately after p (sigma(p) = h)
  void insert_after(int p, int h) {
    int q = nxt[p];
    nxt[p] = h;
    prv[h] = p;
    nxt[h] = q;
    prv[q] = h;
  }
  // insert h immediately before q (sigma(h) = q)
  void insert_before(int q, int h) { insert_after(prv[q], h); }

  std::vector<std::vector<int>> rotations(int nv) const {
    std::vector<std::vector<int>> rot(nv);
    std::vector<char> seen(nxt.size(), 0);
    for (int h = 0; h < static_cast<int>(nxt.size()); ++h) {
      if (seen[h]) continue;
      int x = h;
      do {
        seen[x] = 1;
        rot[org[x]].push_back(x);
        x = nxt[x];
      } while (x != h);
    }
    return rot;
  }
};

// Insert a new vertex over a run of j boundary edges r_0 -> .. -> r_j given
// by their boundary half-edges bh_i = (r_i -> r_{i+1}); the boundary travels
// with the growing face on its left.  Returns the up half-edges
// to_run[i] = (vnew -> r_i).
inline std::vector<int> insert_over_run(RotBuilder& rb, int vnew,
                                        const std::vector<int>& run_half) {
  int j = static_cast<int>(run_half.size());
  std::vector<int> to_run(j + 1), from_run(j + 1);
  for (int i = 0; i <= j; ++i) {
    int r_i = i < j ? rb.org[run_half[i]] : rb.org[run_half[j - 1] ^ 1];
    int h = rb.new_pair(vnew, r_i);
    to_run[i] = h;
    from_run[i] = h ^ 1;
  }
  // vnew's rotation: to_run ascending (ccw)
  for (int i = 0; i <= j; ++i) {
    rb.nxt[to_run[i]] = to_run[(i + 1) % (j + 1)];
    rb.prv[to_run[(i + 1) % (j + 1)]] = to_run[i];
  }
  // sigma(bh_i) = from_run[i] for i < j; sigma(from_run[j]) = twin(bh_{j-1})
  for (int i = 0; i < j; ++i) rb.insert_after(run_half[i], from_run[i]);
  rb.insert_before(run_half[j - 1] ^ 1, from_run[j]);
  return to_run;
}

}  // namespace detail

struct GeneratedCylinder {
  SurfaceMap map;
  int b1_face = -1, b2_face = -1;
};

struct GenCylParams {
  uint64_t seed = 1;
  int n = 12;        // total vertices
  int b1 = 3;        // |C(B1)|, >= 3
  int b2 = 3;        // |C(B2)|, >= 3 (>= 2 when with_loop)
  double chord_bias = 0.0;  // fraction of the spare budget spent on pockets
  bool with_loop = false;   // inject one non-contractible loop
};

namespace detail {

struct Grower {
  RotBuilder rb;
  std::vector<int> bnd_next_v;  // boundary vertex -> next boundary vertex
  std::vector<int> bnd_half;    // boundary vertex -> half (v -> next)
  int boundary_len = 0;
  int cursor = 0;  // some boundary vertex

  void init_cycle(int b1, int n_total) {
    bnd_next_v.assign(n_total, -1);
    bnd_half.assign(n_total, -1);
    for (int i = 0; i < b1; ++i) {
      int h = rb.new_pair(i, (i + 1) % b1);
      bnd_half[i] = h;
      bnd_next_v[i] = (i + 1) % b1;
    }
    for (int i = 0; i < b1; ++i) {
      // degree-2 vertices: rotation (out, in)
      int out = bnd_half[i];
      int in = bnd_half[(i + b1 - 1) % b1] ^ 1;
      rb.nxt[out] = in;
      rb.prv[in] = out;
      rb.nxt[in] = out;
      rb.prv[out] = in;
    }
    boundary_len = b1;
    cursor = 0;
  }

  // covers run_len boundary edges starting at 'start' with vertex vnew
  void insert_vertex(int vnew, int start, int run_len) {
    std::vector<int> run_half(run_len);
    int v = start;
    for (int i = 0; i < run_len; ++i) {
      run_half[i] = bnd_half[v];
      v = bnd_next_v[v];
    }
    int endv = v;
    std::vector<int> to_run = insert_over_run(rb, vnew, run_half);
    if (static_cast<int>(bnd_next_v.size()) <= vnew) {
      bnd_next_v.resize(vnew + 1, -1);
      bnd_half.resize(vnew + 1, -1);
    }
    bnd_next_v[start] = vnew;
    bnd_half[start] = to_run.front() ^ 1;  // (start -> vnew)
    bnd_next_v[vnew] = endv;
    bnd_half[vnew] = to_run.back();        // (vnew -> endv)
    boundary_len += 2 - run_len;
    cursor = vnew;
  }

  // closes a 2-gon boundary at vertex v with a loop; boundary becomes the
  // loop alone
  void add_loop(int v) {
    check_internal(boundary_len == 2 && rb.org[bnd_half[v]] == v,
                   "loop insertion expects a 2-gon boundary");
    int out = bnd_half[v];  // (v -> other)
    int l = rb.new_pair(v, v);
    int upper = l, lower = l ^ 1;
    rb.insert_after(out, upper);
    rb.insert_after(upper, lower);
    bnd_next_v[v] = v;
    bnd_half[v] = upper;
    boundary_len = 1;
    cursor = v;
  }

  int random_boundary_vertex(SplitRng& rng) {
    int v = cursor;
    for (int hop = static_cast<int>(rng.below(boundary_len)); hop > 0; --hop)
      v = bnd_next_v[v];
    return v;
  }
};

}  // namespace detail

// Reverse shelling: instances are valid by construction.  The boundary walk
// keeps lengths feasible so the final contour has exactly b2 edges.
inline GeneratedCylinder gen_cylindric_core(SplitRng& rng, int n_total, int b1,
                                            int b2, bool with_loop) {
  check_input(b1 >= 3 && b2 >= 2 && n_total >= b1 + 1,
              errc::infeasible_parameters, "cylinder parameters out of range");
  int steps = n_total - b1;
  check_input(b2 <= b1 + steps, errc::infeasible_parameters,
              "target boundary unreachable");
  check_input(b2 >= 3 || with_loop, errc::infeasible_parameters,
              "a 2-edge top boundary needs the weakly simple regime");
  int loop_step = -1;
  if (with_loop) {
    // after the loop the boundary restarts at length 1 and grows by at most
    // 1 per step, so the loop needs b2 - 1 steps of headroom
    int latest = steps - b2;
    check_input(latest >= 1 || (latest == 0 && b2 == 2),
                errc::infeasible_parameters,
                "not enough vertices after the loop to reach b2");
    loop_step = b2 == 2 ? steps - 2 : 1 + static_cast<int>(rng.below(latest));
  }

  detail::Grower g;
  g.init_cycle(b1, n_total);
  int next_vertex = b1;
  for (int k = 0; k < steps; ++k) {
    int len = g.boundary_len;
    int remaining = steps - k - 1;
    int j;
    if (k == loop_step) {
      j = len;  // wrap the whole boundary, then close with the loop
    } else if (len == 1) {
      j = 1;    // only move on a loop boundary
    } else {
      long jmax, jmin = 1;
      if (loop_step > k) {
        jmax = len - 1;  // the loop resets reachability later
      } else {
        jmax = std::min<long>(len - 1, len + 2 + remaining - b2);
        if (remaining == 0) jmin = jmax = len + 2 - b2;
      }
      check_internal(jmin >= 1 && jmin <= jmax, "generator infeasibility");
      j = static_cast<int>(rng.range(jmin, jmax));
    }
    int start = g.random_boundary_vertex(rng);
    int vnew = next_vertex++;
    g.insert_vertex(vnew, start, j);
    if (k == loop_step) g.add_loop(vnew);
  }
  check_internal(g.boundary_len == b2, "generator missed the target boundary");

  GeneratedCylinder out;
  out.map = SurfaceMap::from_rotations(g.rb.rotations(n_total));
  out.b1_face = out.map.face(1);  // half 1 = (1 -> 0), B1 on its left
  out.b2_face = out.map.face(g.bnd_half[g.cursor]);
  return out;
}

// Opens a fan pocket of s interior vertices under the C(B1) edge carried by
// half-edge hb1 (B1 on its left).  The edge itself becomes a chord; the new
// bottom contour dips through the pocket path.
namespace detail {

// Returns the half-edge (a -> q_1), which keeps B1 on its left.
inline int open_pocket(std::vector<std::vector<int>>& rot, int& next_half,
                       int& next_vertex, int a, int b, int hb1, int s) {
  // pocket path a - q_1 - .. - q_s - b, spokes q_i - b, fan apex b
  std::vector<int> q(s);
  for (int i = 0; i < s; ++i) q[i] = next_vertex++;
  auto pair_ids = [&](int& h1, int& h2) {
    h1 = next_half++;
    h2 = next_half++;
  };
  std::vector<int> pt(s + 1), pf(s + 1);  // path edge i: p_i -> p_{i+1}
  for (int i = 0; i <= s; ++i) pair_ids(pt[i], pf[i]);
  std::vector<int> st_(s), sf(s);          // spokes q_i - b for i < s-1 unused tail
  for (int i = 0; i + 1 < s; ++i) pair_ids(st_[i], sf[i]);

  // a: (a -> q_1) right after hb1
  {
    std::vector<int>& ra = rot[a];
    std::vector<int> na;
    for (int h : ra) {
      na.push_back(h);
      if (h == hb1) na.push_back(pt[0]);
    }
    ra = std::move(na);
  }
  // b: descending (b -> q_s), .., (b -> q_1) right before twin(hb1)
  {
    std::vector<int>& rb_ = rot[b];
    std::vector<int> nb;
    for (int h : rb_) {
      if (h == (hb1 ^ 1)) {
        nb.push_back(pf[s]);                      // b -> q_s
        for (int i = s - 2; i >= 0; --i) nb.push_back(sf[i]);  // b -> q_{i+1}
        nb.push_back(h);
      } else {
        nb.push_back(h);
      }
    }
    rb_ = std::move(nb);
  }
  // q_i rotations
  rot.resize(next_vertex);
  for (int i = 0; i < s; ++i) {
    int fwd = pt[i + 1];   // q_i -> next
    int back = pf[i];      // q_i -> prev
    if (i + 1 < s)
      rot[q[i]] = {fwd, back, st_[i]};
    else
      rot[q[i]] = {fwd, back};
  }
  return pt[0];
}

}  // namespace detail

inline CylindricTriangulation gen_cylindric(const GenCylParams& p) {
  SplitRng rng(p.seed);
  int budget = 0;
  if (p.chord_bias > 0) {
    // the core must stay feasible: steps >= max(1, b2 - b1), and a loop
    // needs b2 + 1 extra steps of headroom
    int min_core = p.b1 + std::max({1, p.b2 - p.b1, p.with_loop ? p.b2 + 2 : 1});
    int spare = p.n - min_core;
    if (spare > 0)
      budget = std::min(spare,
                        static_cast<int>(spare * std::min(1.0, p.chord_bias)));
  }
  GeneratedCylinder core =
      gen_cylindric_core(rng, p.n - budget, p.b1, p.b2, p.with_loop);
  if (budget == 0)
    return validate_cylindric(core.map, core.b1_face, core.b2_face);

  // Components hang below C(B1) and add height; with chords present the
  // height bound n(2d+1) needs the two boundaries vertex-disjoint (d >= 1),
  // so redraw cores that left an initial vertex on the top boundary.
  for (int attempt = 0; attempt < 256; ++attempt) {
    CylindricTriangulation probe =
        validate_cylindric(core.map, core.b1_face, core.b2_face);
    if (probe.boundary_distance() >= 1) break;
    core = gen_cylindric_core(rng, p.n - budget, p.b1, p.b2, p.with_loop);
    check_input(attempt < 255, errc::infeasible_parameters,
                "could not separate the boundaries for a chord instance");
  }

  const SurfaceMap& m = core.map;
  std::vector<int> b1_cycle = m.face_cycle(core.b1_face);
  std::vector<std::vector<int>> rot(m.vertex_count());
  for (int v = 0; v < m.vertex_count(); ++v) rot[v] = m.rotation_of(v);
  int next_half = m.half_edge_count();
  int next_vertex = m.vertex_count();

  int max_pockets =
      std::min<int>(static_cast<int>(b1_cycle.size()) - 1, budget);
  int pockets = 1 + static_cast<int>(rng.below(max_pockets));
  std::vector<int> sizes(pockets, 0);
  for (int i = 0; i < budget; ++i) sizes[rng.below(pockets)] += 1;

  std::vector<int> idx(b1_cycle.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  int b1_track = -1;  // a half-edge that keeps B1 on its left
  for (int pi = 0; pi < pockets; ++pi) {
    int pick = static_cast<int>(rng.below(idx.size()));
    int hb1 = b1_cycle[idx[pick]];
    idx.erase(idx.begin() + pick);
    if (sizes[pi] == 0) continue;
    b1_track = detail::open_pocket(rot, next_half, next_vertex, m.origin(hb1),
                                   m.destination(hb1), hb1, sizes[pi]);
  }
  check_internal(b1_track != -1, "chord budget must open at least one pocket");
  SurfaceMap grown = SurfaceMap::from_rotations(rot);
  int b1f = grown.face(b1_track);
  int b2f = grown.face(m.half_of_face(core.b2_face));
  return validate_cylindric(grown, b1f, b2f);
}

// Quasi-triangulation grown over a base edge; used by the FPP fuzz corpus.
inline QuasiTriangulation gen_quasi(uint64_t seed, int m_total) {
  check_input(m_total >= 3, errc::infeasible_parameters, "need >= 3 vertices");
  SplitRng rng(seed);
  detail::RotBuilder rb;
  // base u=0, v=1; apex 2; path u - 2 - v
  int base = rb.new_pair(0, 1);
  int ul = rb.new_pair(0, 2);  // u - w
  int wv = rb.new_pair(2, 1);  // w - v
  auto ring = [&](std::vector<int> hs) {
    for (size_t i = 0; i < hs.size(); ++i) {
      rb.nxt[hs[i]] = hs[(i + 1) % hs.size()];
      rb.prv[hs[(i + 1) % hs.size()]] = hs[i];
    }
  };
  ring({base, ul});          // at u: u->v, u->w
  ring({wv ^ 1, base ^ 1});  // at v: v->w, v->u
  ring({ul ^ 1, wv});        // at w: w->u, w->v
  // outer path from u to v over the top: positions and their halves
  std::vector<int> path_v{0, 2, 1};
  std::vector<int> path_h{ul, wv};  // (u->w), (w->v)

  int next_vertex = 3;
  while (next_vertex < m_total) {
    int edges = static_cast<int>(path_h.size());
    int start = static_cast<int>(rng.below(edges));
    int maxj = edges - start;
    int j = 1 + static_cast<int>(rng.below(maxj));
    std::vector<int> run(path_h.begin() + start, path_h.begin() + start + j);
    int vnew = next_vertex++;
    std::vector<int> to_run = detail::insert_over_run(rb, vnew, run);
    std::vector<int> nv(path_v.begin(), path_v.begin() + start + 1);
    nv.push_back(vnew);
    nv.insert(nv.end(), path_v.begin() + start + j, path_v.end());
    std::vector<int> nh(path_h.begin(), path_h.begin() + start);
    nh.push_back(to_run.front() ^ 1);  // start -> vnew
    nh.push_back(to_run.back());       // vnew -> end
    nh.insert(nh.end(), path_h.begin() + start + j, path_h.end());
    path_v = std::move(nv);
    path_h = std::move(nh);
  }
  SurfaceMap map = SurfaceMap::from_rotations(rb.rotations(m_total));
  int outer = map.face(base ^ 1);
  return validate_quasi(map, outer, base);
}

// Toroidal triangulations: the fixed corpus (one-vertex map, K7, grid tori)
// plus random diagonal flips that keep the map simple.
inline SurfaceMap one_vertex_torus_map() {
  return SurfaceMap::from_rotations({{0, 2, 4, 1, 3, 5}});
}

inline SurfaceMap k7_torus_map() {
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 7; ++i) faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
  for (int i = 0; i < 7; ++i) faces.push_back({i, (i + 3) % 7, (i + 2) % 7});
  return SurfaceMap::from_faces(7, faces);
}

inline SurfaceMap grid_torus_map(int k, int m) {
  check_input(k >= 3 && m >= 3, errc::infeasible_parameters,
              "grid torus needs both sides >= 3");
  auto id = [&](int i, int j) { return ((i % k + k) % k) * m + ((j % m + m) % m); };
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return SurfaceMap::from_faces(k * m, faces);
}

// One diagonal flip; returns false (leaving rotations untouched) when the
// flip would break simplicity.
namespace detail {

inline bool try_flip(std::vector<std::vector<int>>& rot, const SurfaceMap& m, int e) {
  int h = 2 * e, ht = h ^ 1;
  int a = m.origin(h), b = m.origin(ht);
  if (a == b) return false;
  if (m.face(h) == m.face(ht)) return false;
  // triangles (a,b,c) left of h and (b,a,d) left of twin
  int c = m.destination(m.face_next(h));
  int d = m.destination(m.face_next(ht));
  if (c == d) return false;
  for (int x : rot[c])
    if (m.destination(x) == d) return false;
  // remove h from a's rotation, ht from b's
  auto remove_half = [&](int v, int x) {
    auto& r = rot[v];
    r.erase(std::find(r.begin(), r.end(), x));
  };
  remove_half(a, h);
  remove_half(b, ht);
  // reuse ids h (now c -> d) and ht (d -> c): sigma(c->d) = (c->b) and
  // sigma(d->c) = (d->a), with those halves read off the old triangles
  int cb = SurfaceMap::twin(m.face_next(h));    // twin of (b -> c) on T1
  int da = SurfaceMap::twin(m.face_next(ht));   // twin of (a -> d) on T2
  auto insert_before_half = [&](int v, int target, int x) {
    auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), target);
    check_internal(it != r.end(), "flip target half missing");
    r.insert(it, x);
  };
  insert_before_half(c, cb, h);
  insert_before_half(d, da, ht);
  return true;
}

}  // namespace detail

struct GenTorusParams {
  uint64_t seed = 1;
  int n = 9;       // 1, 7, or k*m with k,m >= 3
  int flips = 0;   // attempted diagonal flips
};

inline ToroidalTriangulation gen_toroidal(const GenTorusParams& p) {
  SurfaceMap m;
  if (p.n == 1) {
    m = one_vertex_torus_map();
  } else if (p.n == 7 && p.flips == 0) {
    m = k7_torus_map();
  } else {
    int k = -1;
    for (int cand = static_cast<int>(std::max(3.0, std::floor(std::sqrt(double(p.n)))));
         cand >= 3; --cand) {
      if (p.n % cand == 0 && p.n / cand >= 3) {
        k = cand;
        break;
      }
    }
    check_input(k != -1, errc::infeasible_parameters,
                "n must be 1, 7, or a product k*m with k,m >= 3");
    m = grid_torus_map(k, p.n / k);
  }
  SplitRng rng(p.seed);
  for (int i = 0; i < p.flips; ++i) {
    std::vector<std::vector<int>> rot(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) rot[v] = m.rotation_of(v);
    int e = static_cast<int>(rng.below(m.edge_count()));
    if (detail::try_flip(rot, m, e)) m = SurfaceMap::from_rotations(rot);
  }
  return validate_toroidal(m);
}

}  // namespace peridraw

#endif  // PERIDRAW_GENERATE_HPP
