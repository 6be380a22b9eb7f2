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

#ifndef PERIDRAW_CANONICAL_ORDER_HPP
#define PERIDRAW_CANONICAL_ORDER_HPP

#include <queue>
#include <string>
#include <vector>

#include "peridraw/triangulations.hpp"

namespace peridraw {

// One insertion step, recorded in forward orientation: vertex v is placed
// above the path gamma = (w_0 = a, w_1, ..., w_{m-1} = b) on the previous
// upper boundary, connected to every w_i.  If the step carries a loop, the
// loop is added after v and becomes the new upper boundary on its own.
struct ShellStep {
  int v = -1;
  int a = -1, b = -1;
  std::vector<int> up_halfedges;     // (v -> w_i), in gamma order
  std::vector<int> gamma_halfedges;  // (w_i -> w_{i+1}) on the old boundary
  bool loop = false;
  int loop_edge = -1;
  int loop_half = -1;  // the loop half-edge that carried the upper face

  int e_left() const { return SurfaceMap::edge_of(gamma_halfedges.front()); }
  int e_right() const { return SurfaceMap::edge_of(gamma_halfedges.back()); }
};

struct CanonicalOrdering {
  std::vector<int> pi;       // pi[k] = vertex of forward step k (0-based)
  std::vector<ShellStep> steps;
  std::vector<int> label;    // per vertex: k+1 for pi[k], 0 for C(B1)-only vertices
  std::vector<int> parent_half;  // underlying forest F: half-edge v -> parent(v),
                                 // -1 for roots (vertices of C(B2))
  std::vector<char> in_f;    // per edge: belongs to F
};

namespace detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

// Mutable rotation system used by the shelling; half-edge ids are stable,
// deletion is doubly-linked-list surgery on sigma.
//
// A vertex is free when it carries no chord of the current contour and no
// "pinch": two parallel edges to a common off-contour vertex.  Removing a
// pinched vertex would expose a contour visiting the partner twice, which
// is not a simple cycle.  The single exception is a contour that has
// degenerated to one loop: its vertex wraps onto the pre-loop partner,
// which joins the contour the moment the loop is deleted.
struct ShellScaffold {
  const SurfaceMap& m;
  std::vector<int> vnext, vprev;
  std::vector<char> half_alive;
  std::vector<char> vertex_alive;
  std::vector<char> on_contour;   // per half-edge, upper face on its left
  std::vector<char> on_boundary;  // per vertex
  std::vector<int> contour_in;    // per vertex: contour half-edge pointing into it
  std::vector<int> chord_count;   // per vertex
  std::vector<char> is_chord;     // per edge
  std::vector<char> protected_v;  // C(B1) vertices, never free
  std::vector<int> pinch_count;   // per vertex: off-contour parallel partners
  std::vector<std::vector<int>> parallel_partner;  // per vertex
  std::priority_queue<int, std::vector<int>, std::greater<int>> heap;

  ShellScaffold(const SurfaceMap& map, const std::vector<int>& start_contour,
                const std::vector<char>& protected_vertices)
      : m(map),
        half_alive(m.half_edge_count(), 1),
        vertex_alive(m.vertex_count(), 1),
        on_contour(m.half_edge_count(), 0),
        on_boundary(m.vertex_count(), 0),
        contour_in(m.vertex_count(), -1),
        chord_count(m.vertex_count(), 0),
        is_chord(m.edge_count(), 0),
        protected_v(protected_vertices),
        pinch_count(m.vertex_count(), 0),
        parallel_partner(m.vertex_count()) {
    vnext.resize(m.half_edge_count());
    vprev.resize(m.half_edge_count());
    for (int h = 0; h < m.half_edge_count(); ++h) {
      vnext[h] = m.vertex_next(h);
      vprev[h] = m.vertex_prev(h);
    }
    for (int h : start_contour) {
      on_contour[h] = 1;
      on_boundary[m.origin(h)] = 1;
      contour_in[m.destination(h)] = h;
    }
    for (auto& [key, group] : parallel_groups(m)) {
      (void)key;
      if (group.size() < 2) continue;
      int u = m.origin(2 * group[0]), v = m.destination(2 * group[0]);
      parallel_partner[u].push_back(v);
      parallel_partner[v].push_back(u);
      if (!on_boundary[v]) pinch_count[u] += 1;
      if (!on_boundary[u]) pinch_count[v] += 1;
    }
    for (int h : start_contour) scan_vertex_for_chords(m.origin(h));
    for (int h : start_contour) push_if_free(m.origin(h));
  }

  int fnext(int h) const { return vprev[h ^ 1]; }

  bool edge_on_contour(int e) const {
    return on_contour[2 * e] || on_contour[2 * e + 1];
  }

  void unlink(int h) {
    int p = vprev[h], nx = vnext[h];
    vnext[p] = nx;
    vprev[nx] = p;
    half_alive[h] = 0;
  }

  bool is_free(int v) const {
    if (!vertex_alive[v] || !on_boundary[v] || protected_v[v] || chord_count[v] != 0)
      return false;
    if (pinch_count[v] == 0) return true;
    // loop contour: the wrap partner is exposed by the loop deletion first
    return contour_in[v] >= 0 && m.is_loop(contour_in[v]) && on_contour[contour_in[v]];
  }

  // call when v joins the contour, before chord scanning
  void joined_boundary(int v) {
    on_boundary[v] = 1;
    for (int p : parallel_partner[v]) {
      pinch_count[p] -= 1;
      push_if_free(p);
    }
  }

  void push_if_free(int v) {
    if (is_free(v)) heap.push(v);
  }

  // Called once when v joins the contour: flag edges to other boundary
  // vertices that are not contour edges.
  void scan_vertex_for_chords(int v) {
    int h0 = first_half(v);
    int h = h0;
    do {
      int e = SurfaceMap::edge_of(h);
      int u = m.origin(h ^ 1);
      if (on_boundary[u] && !edge_on_contour(e) && !is_chord[e]) {
        is_chord[e] = 1;
        chord_count[v] += 1;
        if (u != v) chord_count[u] += 1;
      }
      h = vnext[h];
    } while (h != h0);
  }

  int first_half(int v) const {
    // any live half-edge at v; contour_in's twin is live when v is on the
    // boundary, which is the only time we scan
    check_internal(contour_in[v] >= 0, "scanning a vertex not on the contour");
    return contour_in[v] ^ 1;
  }

  // Pop the lowest-id free vertex; -1 when none remain.
  int pop_free() {
    while (!heap.empty()) {
      int cand = heap.top();
      heap.pop();
      if (is_free(cand)) return cand;
    }
    return -1;
  }

  // Removes free vertex v from the structure, updating contour and chord
  // bookkeeping, and records the step (forward orientation).  allow_loop
  // enables the weakly-simple rule for a boundary that degenerated to a
  // single loop.
  void remove_free_vertex(int v, ShellStep& step, bool allow_loop) {
    step.v = v;
    int h_in = contour_in[v];
    check_internal(h_in >= 0 && on_contour[h_in], "contour bookkeeping broken");

    if (m.is_loop(h_in)) {
      check_internal(allow_loop, "loop boundary in a loop-free shelling");
      // Upper boundary is a single loop at v: delete the loop, then take v.
      step.loop = true;
      step.loop_edge = SurfaceMap::edge_of(h_in);
      step.loop_half = h_in;
      int hl = h_in;
      int x = vprev[hl];  // sigma^{-1}(h_loop) = (v -> w)
      check_internal(x != hl && x != (hl ^ 1), "loop face structure broken");
      int y = fnext(x);   // (w -> v)
      on_contour[hl] = 0;
      unlink(hl);
      unlink(hl ^ 1);
      on_contour[x] = 1;
      on_contour[y] = 1;
      int w = m.destination(x);
      contour_in[w] = x;
      contour_in[v] = y;
      check_internal(!on_boundary[w], "loop triangle vertex already on boundary");
      joined_boundary(w);
      scan_vertex_for_chords(w);
      push_if_free(w);
      check_internal(chord_count[v] == 0 && pinch_count[v] == 0,
                     "loop vertex must be free after the loop deletion");
      h_in = y;
    }

    int h_out = fnext(h_in);
    check_internal(on_contour[h_out] && m.origin(h_out) == v,
                   "contour does not pass through the chosen vertex");

    // Rotation at v from (v -> a); ends at (v -> b) by the contour identity.
    std::vector<int>& up = step.up_halfedges;
    for (int s = h_in ^ 1;; s = vnext[s]) {
      check_internal(!m.is_loop(s), "free vertex cannot carry a loop");
      up.push_back(s);
      if (s == h_out) break;
      check_internal(vnext[s] != (h_in ^ 1), "rotation closed before reaching exit");
    }
    int deg = static_cast<int>(up.size());
    check_internal(deg >= 2, "boundary vertex of degree < 2");

    step.a = m.destination(up.front());
    step.b = m.destination(up.back());
    step.gamma_halfedges.reserve(deg - 1);
    for (int i = 0; i + 1 < deg; ++i) {
      int g = fnext(up[i]);
      check_internal(m.origin(g) == m.destination(up[i]) &&
                         m.destination(g) == m.destination(up[i + 1]),
                     "face below the removed vertex is not the expected triangle");
      step.gamma_halfedges.push_back(g);
    }

    // Contour update: gamma edges join, the two edges at v leave.
    on_contour[h_in] = 0;
    on_contour[h_out] = 0;
    for (int g : step.gamma_halfedges) {
      int e = SurfaceMap::edge_of(g);
      if (is_chord[e]) {
        is_chord[e] = 0;
        chord_count[m.origin(g)] -= 1;
        if (!m.is_loop(g)) chord_count[m.destination(g)] -= 1;
      }
      on_contour[g] = 1;
      contour_in[m.destination(g)] = g;
    }

    // Delete v and its star.
    for (int s : up) unlink(s ^ 1);
    for (int s : up) half_alive[s] = 0;
    vertex_alive[v] = 0;
    on_boundary[v] = 0;
    contour_in[v] = -1;

    // New boundary vertices: mark all first, then scan for chords.
    for (int i = 1; i + 1 < deg; ++i) {
      int w = m.destination(up[i]);
      check_internal(!on_boundary[w], "interior gamma vertex was on the contour");
      joined_boundary(w);
    }
    for (int i = 1; i + 1 < deg; ++i) scan_vertex_for_chords(m.destination(up[i]));
    for (int i = 1; i + 1 < deg; ++i) push_if_free(m.destination(up[i]));
    push_if_free(step.a);
    push_if_free(step.b);
    for (int g : step.gamma_halfedges) {
      push_if_free(m.origin(g));
      push_if_free(m.destination(g));
    }
  }
};

}  // namespace detail

// Shelling procedure (Def. 1).  Requires C(B1) chordless; weakly simple
// inputs are handled, including boundaries degenerating to a single loop.
inline CanonicalOrdering shell(const CylindricTriangulation& G) {
  const SurfaceMap& m = G.map;
  check_input(G.b1_chordless(), errc::chord_at_b1,
              "C(B1) has a chord; reduce components first");

  std::vector<char> prot(m.vertex_count(), 0);
  for (int h : G.contour1) prot[m.origin(h)] = 1;
  detail::ShellScaffold st(m, G.contour2, prot);
  int n_steps = 0;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (!st.protected_v[v]) ++n_steps;

  CanonicalOrdering ord;
  ord.pi.assign(n_steps, -1);
  ord.steps.assign(n_steps, ShellStep{});
  ord.label.assign(m.vertex_count(), 0);
  ord.parent_half.assign(m.vertex_count(), -1);
  ord.in_f.assign(m.edge_count(), 0);

  for (int k = n_steps - 1; k >= 0; --k) {
    int v = st.pop_free();
    check_internal(v != -1, "no free vertex; invalid input slipped validation");

    ShellStep& step = ord.steps[k];
    st.remove_free_vertex(v, step, /*allow_loop=*/true);

    // Underlying forest: neighbours of v not on C_k point to v.  In a loop
    // step C_k is the loop itself, so the wrap vertex a == b is off C_k too
    // and gets its parent through the first of the two parallel edges.
    const auto& up = step.up_halfedges;
    for (size_t i = 1; i + 1 < up.size(); ++i) {
      int w = m.destination(up[i]);
      check_internal(ord.parent_half[w] == -1, "vertex exposed twice");
      ord.parent_half[w] = up[i] ^ 1;  // (w -> v)
      ord.in_f[SurfaceMap::edge_of(up[i])] = 1;
    }
    if (step.loop) {
      check_internal(step.a == step.b, "loop step must wrap the 2-gon contour");
      int w = step.a;
      check_internal(ord.parent_half[w] == -1, "vertex exposed twice");
      ord.parent_half[w] = up.front() ^ 1;
      ord.in_f[SurfaceMap::edge_of(up.front())] = 1;
    }

    ord.pi[k] = v;
    ord.label[v] = k + 1;
  }

  // Only C(B1) remains, and the contour is C(B1) seen from above.
  for (int h : G.contour1)
    check_internal(st.on_contour[SurfaceMap::twin(h)],
                   "shelling did not terminate on C(B1)");
  for (int v2 = 0; v2 < m.vertex_count(); ++v2)
    check_internal(st.vertex_alive[v2] == st.protected_v[v2],
                   "unshelled vertex left behind");
  for (int v2 = 0; v2 < m.vertex_count(); ++v2)
    check_internal((ord.parent_half[v2] == -1) == static_cast<bool>(G.on_c2[v2]),
                   "underlying forest must span G minus C(B2) with roots on C(B2)");
  return ord;
}

// Dual forest F* of the augmented map, with rooted orientation and subtree
// edge counts s_e.  Node layout: inner faces of G (b1 and b2 excluded), then
// one node per B1 contour edge (the roots), then one per B2 contour edge.
struct DualForest {
  int node_count = 0;
  std::vector<int> node_of_half;     // per half-edge: node of the face on its left
  std::vector<int> parent_node;     // -1 for roots
  std::vector<int> parent_via_edge;  // G-edge crossed toward the parent
  std::vector<int> depth;
  std::vector<long> subtree_edges;   // plain edge counts (diagnostics)
  std::vector<long> s;               // per edge: s_e (0 for F edges)
  std::vector<int> roots;
  int tree_count = 0;
  // Strips of loop steps whose left new edge landed in F; they are applied
  // by walking the root path of the recorded boundary edge explicitly.
  std::vector<int> deferred_left_strips;

  // Edges dual to the F* path from e's dual edge to its tree root, e first.
  std::vector<int> root_path_edges(int e) const {
    int na = node_of_half[2 * e], nb = node_of_half[2 * e + 1];
    int child = (parent_node[na] == nb && parent_via_edge[na] == e) ? na : nb;
    std::vector<int> path;
    for (int x = child; parent_via_edge[x] != -1; x = parent_node[x])
      path.push_back(parent_via_edge[x]);
    return path;
  }
};

inline DualForest build_forests(const CylindricTriangulation& G,
                                const CanonicalOrdering& ord) {
  const SurfaceMap& m = G.map;
  DualForest df;

  // Dense node ids for the faces of the augmented map.
  std::vector<int> inner_node(m.face_count(), -1);
  int nn = 0;
  for (int f = 0; f < m.face_count(); ++f)
    if (f != G.b1 && f != G.b2) inner_node[f] = nn++;
  int b1_base = nn;
  nn += static_cast<int>(G.contour1.size());
  int b2_base = nn;
  nn += static_cast<int>(G.contour2.size());
  df.node_count = nn;

  df.node_of_half.assign(m.half_edge_count(), -1);
  for (int h = 0; h < m.half_edge_count(); ++h) {
    int f = m.face(h);
    if (f != G.b1 && f != G.b2) df.node_of_half[h] = inner_node[f];
  }
  for (size_t i = 0; i < G.contour1.size(); ++i)
    df.node_of_half[G.contour1[i]] = b1_base + static_cast<int>(i);
  for (size_t i = 0; i < G.contour2.size(); ++i)
    df.node_of_half[G.contour2[i]] = b2_base + static_cast<int>(i);

  // Adjacency: duals of edges not in F (apex edges of the augmentation are
  // all in F-hat and contribute nothing).
  std::vector<std::vector<std::pair<int, int>>> adj(nn);  // (neighbor, via edge)
  for (int e = 0; e < m.edge_count(); ++e) {
    if (ord.in_f[e]) continue;
    int na = df.node_of_half[2 * e], nb = df.node_of_half[2 * e + 1];
    adj[na].push_back({nb, e});
    adj[nb].push_back({na, e});
  }

  df.parent_node.assign(nn, -2);
  df.parent_via_edge.assign(nn, -1);
  df.depth.assign(nn, 0);
  df.roots.clear();
  std::queue<int> q;
  for (size_t i = 0; i < G.contour1.size(); ++i) {
    int r = b1_base + static_cast<int>(i);
    df.roots.push_back(r);
    df.parent_node[r] = -1;
    q.push(r);
  }
  df.tree_count = static_cast<int>(df.roots.size());
  std::vector<int> bfs_order;
  bfs_order.reserve(nn);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    bfs_order.push_back(u);
    for (auto [w, e] : adj[u]) {
      if (df.parent_node[w] != -2) continue;
      df.parent_node[w] = u;
      df.parent_via_edge[w] = e;
      df.depth[w] = df.depth[u] + 1;
      q.push(w);
    }
  }
  check_internal(static_cast<int>(bfs_order.size()) == nn,
                 "dual forest must span the augmented dual");
  // Forest check: every non-F dual edge is a tree edge.
  for (int e = 0; e < m.edge_count(); ++e) {
    if (ord.in_f[e]) continue;
    int na = df.node_of_half[2 * e], nb = df.node_of_half[2 * e + 1];
    bool a_child = df.parent_node[na] == nb && df.parent_via_edge[na] == e;
    bool b_child = df.parent_node[nb] == na && df.parent_via_edge[nb] == e;
    check_internal(a_child != b_child, "dual forest has a cycle");
  }

  // Stretch accounting.  A step's strip along P_l (resp. P_r) stretches
  // exactly the edges whose dual subtree contains the dual of the step's
  // left (right) new edge, so each such dual carries weight 1.  Duals of
  // initial contour edges and of loops carry no strips; a loop step's left
  // new edge is the wrap vertex's forest edge and its strip is deferred to
  // an explicit root-path walk.
  std::vector<long> weight(m.edge_count(), 0);
  for (const ShellStep& st : ord.steps) {
    int el = SurfaceMap::edge_of(st.up_halfedges.front());
    int er = SurfaceMap::edge_of(st.up_halfedges.back());
    if (st.loop) {
      check_internal(ord.in_f[el], "loop step's left edge must carry the wrap parent");
      df.deferred_left_strips.push_back(st.e_left());
    } else {
      check_internal(!ord.in_f[el], "new boundary edge cannot be a forest edge");
      weight[el] += 1;
    }
    check_internal(!ord.in_f[er], "new boundary edge cannot be a forest edge");
    weight[er] += 1;
  }

  df.subtree_edges.assign(nn, 0);
  std::vector<long> subtree_weight(nn, 0);
  for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
    int u = *it;
    if (df.parent_node[u] >= 0) {
      df.subtree_edges[df.parent_node[u]] += df.subtree_edges[u] + 1;
      subtree_weight[df.parent_node[u]] +=
          subtree_weight[u] + weight[df.parent_via_edge[u]];
    }
  }

  df.s.assign(m.edge_count(), 0);
  for (int e = 0; e < m.edge_count(); ++e) {
    if (ord.in_f[e]) continue;
    int na = df.node_of_half[2 * e], nb = df.node_of_half[2 * e + 1];
    int child = (df.parent_node[na] == nb && df.parent_via_edge[na] == e) ? na : nb;
    df.s[e] = subtree_weight[child];
  }
  return df;
}

// Def. 1 checker, used as the oracle for shell().  Fully independent of the
// shelling: every prefix is rebuilt as an induced submap and validated, the
// containment of B2 in the growing second boundary face is tracked with a
// union-find over the faces of G, and consecutiveness is read off the
// prefix contour.
struct CanonicalCheckReport {
  bool ok = true;
  int step = -1;       // first violating forward step (1-based), 0 = global
  std::string reason;
};

inline CanonicalCheckReport check_canonical(const CylindricTriangulation& G,
                                            const std::vector<int>& pi) {
  const SurfaceMap& m = G.map;
  CanonicalCheckReport rep;
  auto fail = [&](int step, const std::string& why) {
    rep.ok = false;
    rep.step = step;
    rep.reason = why;
    return rep;
  };

  std::vector<char> present(m.vertex_count(), 0);
  int expected = 0;
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (G.on_c1[v]) present[v] = 1;
    else ++expected;
  }
  if (static_cast<int>(pi.size()) != expected)
    return fail(0, "ordering length differs from n - |C(B1)|");
  {
    std::vector<char> seen(m.vertex_count(), 0);
    for (int v : pi) {
      if (v < 0 || v >= m.vertex_count() || G.on_c1[v] || seen[v])
        return fail(0, "ordering is not a permutation of G \\ C(B1)");
      seen[v] = 1;
    }
  }

  std::vector<int> prev_contour;  // vertex sequence of C_{k-1}
  for (int k = 0; k <= static_cast<int>(pi.size()); ++k) {
    if (k > 0) present[pi[k - 1]] = 1;

    std::vector<char> keep(m.edge_count(), 0);
    for (int e = 0; e < m.edge_count(); ++e)
      keep[e] = present[m.origin(2 * e)] && present[m.destination(2 * e)];
    Submap sub;
    try {
      sub = make_submap(m, keep);
    } catch (const map_error& err) {
      return fail(k, std::string("prefix is not a connected map: ") + err.what());
    }
    for (int v = 0; v < m.vertex_count(); ++v)
      if (present[v] && sub.vertex_from_old[v] < 0)
        return fail(k, "prefix leaves vertex " + std::to_string(v) + " isolated");

    // Faces of the prefix correspond to classes of G-faces merged across
    // missing edges.
    detail::UnionFind uf(m.face_count());
    for (int e = 0; e < m.edge_count(); ++e)
      if (!keep[e]) {
        uf.unite(m.face(2 * e), m.face(2 * e + 1));
      }

    int b1_new = -1;
    for (int h : G.contour1) {
      int hn = sub.half_from_old(h);
      if (hn < 0) return fail(k, "a C(B1) edge is missing from the prefix");
      int f = sub.map.face(hn);
      if (b1_new == -1) b1_new = f;
      else if (b1_new != f) return fail(k, "B1 is not a face of the prefix");
    }
    int b2_class = uf.find(G.b2);
    int bprime = -1;
    for (int hn = 0; hn < sub.map.half_edge_count(); ++hn) {
      int h_old = sub.half_to_old(hn);
      if (uf.find(m.face(h_old)) == b2_class) {
        int f = sub.map.face(hn);
        if (bprime == -1) bprime = f;
        else if (bprime != f)
          return fail(k, "faces of the B2 class do not merge into one prefix face");
      }
    }
    if (bprime == -1) return fail(k, "no prefix face contains B2");
    if (bprime == b1_new) return fail(k, "second boundary face collapsed onto B1");

    try {
      CylindricTriangulation tk = validate_cylindric(sub.map, b1_new, bprime);
      (void)tk;
    } catch (const map_error& err) {
      return fail(k, std::string("prefix is not a cylindric triangulation: ") + err.what());
    }

    std::vector<int> contour;  // vertices of C_k in cyclic order
    for (int hn : sub.map.face_cycle(bprime))
      contour.push_back(sub.vertex_to_old[sub.map.origin(hn)]);

    if (k > 0) {
      int v = pi[k - 1];
      bool on_ck = false;
      for (int u : contour) on_ck |= (u == v);
      if (!on_ck) return fail(k, "v_k is not on the new upper boundary");

      // Neighbours of v_k among previously present vertices must be
      // consecutive on C_{k-1}.
      std::vector<char> nb(m.vertex_count(), 0);
      for (int h : m.rotation_of(v)) {
        int u = m.destination(h);
        if (u != v && present[u]) nb[u] = 1;
      }
      int blocks = 0, count_in = 0;
      int L = static_cast<int>(prev_contour.size());
      for (int i = 0; i < L; ++i) {
        bool cur = nb[prev_contour[i]];
        bool prv = nb[prev_contour[(i + L - 1) % L]];
        if (cur) ++count_in;
        if (cur && !prv) ++blocks;
      }
      if (count_in == 0) return fail(k, "v_k has no neighbour on C_{k-1}");
      if (blocks > 1 && count_in != L)
        return fail(k, "neighbours of v_k are not consecutive on C_{k-1}");
    }
    prev_contour = contour;
  }
  return rep;
}

}  // namespace peridraw

#endif  // PERIDRAW_CANONICAL_ORDER_HPP
