#pragma once

#include <numeric>
#include <vector>

#include "planarflow/embedding.hpp"
#include "planarflow/graph.hpp"

namespace planarflow {

// A flow network together with its plane embedding; net.edges[i] is the
// embedding's arc i.
struct EmbeddedNetwork {
  FlowNetwork net;
  PlanarEmbedding emb;
};

// Directed edge list without reverse partners.
struct RawNetwork {
  struct Edge {
    VertexId tail, head;
    i64 capacity;
    i64 cost;
  };
  int n = 0;
  std::vector<Edge> edges;
};

// Gives every listed edge its capacity-0, cost-negated reverse partner.
inline FlowNetwork add_reverse_edges(const RawNetwork& raw) {
  FlowNetwork net;
  net.n = raw.n;
  for (const auto& e : raw.edges)
    net.add_pair(e.tail, e.head, e.capacity, e.cost);
  return net;
}

// Idempotent on the paired representation.
inline FlowNetwork add_reverse_edges(const FlowNetwork& net) {
  net.validate();
  return net;
}

struct TriangulateResult {
  PlanarEmbedding emb;
  EdgeId first_new_arc = 0;  // arcs >= this were added
};

// Adds chords until every face cycle has length 3. Ear-style: within a face
// walk w0,w1,... a chord w_j -> w_{j+2} is added whenever those vertices
// differ, splitting off a triangle. Requires faces of length >= 3.
inline TriangulateResult triangulate(const PlanarEmbedding& input) {
  EmbeddingEditor ed(input);
  TriangulateResult out;
  out.first_new_arc = input.arc_count();
  for (const auto& cycle : input.faces) {
    if (cycle.size() <= 3) continue;  // digons and loops stay as they are
    std::vector<EdgeId> face = cycle;
    while (face.size() > 3) {
      int k = int(face.size());
      int j = -1;
      for (int i = 0; i < k; ++i) {
        VertexId a = ed.tail(face[i]);
        VertexId b = ed.head(face[(i + 1) % k]);
        if (a != b) {
          j = i;
          break;
        }
      }
      check(j >= 0, "no ear in face walk");
      // Chord from tail(face[j]) to head(face[j+1]).
      EdgeId a_prev = face[(j + k - 1) % k];
      EdgeId a_j = face[j];
      EdgeId a_j1 = face[(j + 1) % k];
      VertexId u = ed.tail(a_j);
      VertexId x = ed.head(a_j1);
      EdgeId c = ed.add_pair_after(u, rev(a_prev), x, rev(a_j1));
      // Remainder face: replace a_j, a_j1 with the chord.
      std::vector<EdgeId> rest;
      rest.push_back(c);
      for (int i = 2; i < k; ++i) rest.push_back(face[(j + i) % k]);
      face = std::move(rest);
    }
  }
  out.emb = ed.finish();
  for (const auto& f : out.emb.faces)
    check(f.size() <= 3, "triangulation left a long face");
  return out;
}

// Triangulates an embedded digraph, giving added arcs weight big_w in both
// directions.
inline void triangulate_weighted(PlanarEmbedding& emb, std::vector<i64>& w,
                                 i64 big_w) {
  TriangulateResult r = triangulate(emb);
  emb = std::move(r.emb);
  w.resize(emb.arc_count(), big_w);
}

struct Degree3Result {
  EmbeddedNetwork g;
  // orig vertex -> copies (first entry is the designated copy). Vertices
  // that were not expanded map to themselves.
  std::vector<std::vector<VertexId>> copies;
  EdgeId first_new_arc = 0;
};

// Embedding-respecting degree-3 reduction: vertices of degree < 3 get
// parallel zero-capacity edges, vertices of degree > 3 become a directed
// ring of copies whose link capacity exceeds the total capacity.
inline Degree3Result degree3_expand(const EmbeddedNetwork& input) {
  Degree3Result out;
  const PlanarEmbedding& emb0 = input.emb;
  FlowNetwork net = input.net;
  out.first_new_arc = emb0.arc_count();

  // Step 1: pad low-degree vertices with parallel zero-capacity pairs.
  // The parallel pair nests against arc a: after a at v, before rev(a) at w,
  // which closes a digon face between the two.
  EmbeddingEditor ed(emb0);
  for (VertexId v = 0; v < emb0.n; ++v) {
    check(emb0.degree(v) >= 1, "degree3_expand requires no isolated vertices");
    EdgeId a = emb0.rot[v][0];
    while (ed.degree(v) < 3) {
      VertexId w = ed.head(a);
      ed.add_pair_after(v, a, w, ed.cw_prev(rev(a)));
      net.add_pair(v, w, 0, 0);
    }
  }
  PlanarEmbedding padded = ed.finish();
  check(padded.arc_count() == net.edge_count(), "pad arc/net mismatch");

  // Step 2: ring-expand vertices of degree > 3.
  i64 big = 1;
  for (const auto& e : net.edges)
    if (e.capacity != kInfCap) big += e.capacity;

  int n_new = 0;
  out.copies.assign(padded.n, {});
  std::vector<std::vector<VertexId>> slot_owner(padded.n);
  for (VertexId v = 0; v < padded.n; ++v) {
    int deg = padded.degree(v);
    int parts = deg <= 3 ? 1 : deg;
    for (int j = 0; j < parts; ++j) out.copies[v].push_back(n_new + j);
    slot_owner[v].assign(deg, 0);
    for (int j = 0; j < deg; ++j)
      slot_owner[v][j] = out.copies[v][parts == 1 ? 0 : j];
    n_new += parts;
  }

  FlowNetwork net2;
  net2.n = n_new;
  net2.edges = net.edges;
  PlanarEmbedding emb2;
  emb2.n = n_new;
  emb2.tail.assign(padded.tail.begin(), padded.tail.end());
  emb2.head.assign(padded.head.begin(), padded.head.end());
  emb2.rot.assign(n_new, {});
  for (EdgeId a = 0; a < padded.arc_count(); ++a) {
    VertexId t = padded.tail[a];
    VertexId c = slot_owner[t][padded.pos_in_rot[a]];
    emb2.tail[a] = c;
    net2.edges[a].tail = c;
    net2.edges[rev(a)].head = c;
    emb2.head[rev(a)] = c;
  }
  for (VertexId v = 0; v < padded.n; ++v) {
    int deg = padded.degree(v);
    if (deg <= 3) {
      VertexId c = out.copies[v][0];
      emb2.rot[c] = padded.rot[v];
      continue;
    }
    // Ring arcs: R_j runs copy j -> copy j+1 with capacity `big`.
    std::vector<EdgeId> ring(deg);
    for (int j = 0; j < deg; ++j) {
      VertexId cj = out.copies[v][j];
      VertexId cj1 = out.copies[v][(j + 1) % deg];
      ring[j] = net2.add_pair(cj, cj1, big, 0);
      emb2.tail.push_back(cj);
      emb2.head.push_back(cj1);
      emb2.tail.push_back(cj1);
      emb2.head.push_back(cj);
    }
    for (int j = 0; j < deg; ++j) {
      VertexId cj = out.copies[v][j];
      int jp = (j + deg - 1) % deg;
      // Clockwise at a copy: original slot, link toward the rotation
      // successor copy, link from the predecessor copy.
      emb2.rot[cj] = {padded.rot[v][j], ring[j], rev(ring[jp])};
    }
  }
  emb2.index_rotations();
  emb2.trace_faces();
  emb2.check_planar();
  out.g.net = std::move(net2);
  out.g.emb = std::move(emb2);
  return out;
}

// Signed crossing count: |{e in A : e* in B}| - |{e in A : (rev e)* in B}|.
// Dual arc ids coincide with primal ids, so membership is by id.
inline i64 crossing_number(const std::vector<EdgeId>& primal_arcs,
                           const std::vector<char>& dual_in_B) {
  i64 c = 0;
  for (EdgeId e : primal_arcs) {
    if (dual_in_B[e]) ++c;
    if (dual_in_B[rev(e)]) --c;
  }
  return c;
}

}  // namespace planarflow
