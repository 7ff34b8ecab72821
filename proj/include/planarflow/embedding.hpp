#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "planarflow/error.hpp"
#include "planarflow/graph.hpp"

namespace planarflow {

// Combinatorial plane embedding of a directed multigraph with paired arcs
// (rev(a) = a^1). rot[v] lists, in clockwise order, the arcs whose tail is v;
// a loop contributes both of its arcs to the list. Faces are traced with
// next(a) = rotation successor of rev(a) at head(a).
struct PlanarEmbedding {
  int n = 0;
  std::vector<VertexId> tail, head;        // per arc
  std::vector<std::vector<EdgeId>> rot;    // clockwise arc lists
  std::vector<int> pos_in_rot;             // arc -> index within rot[tail]
  std::vector<EdgeId> next_in_face;        // face-cycle successor per arc
  std::vector<int> face_of;                // arc -> face id
  std::vector<std::vector<EdgeId>> faces;  // face id -> arc cycle

  int arc_count() const { return int(tail.size()); }
  int face_count() const { return int(faces.size()); }
  int degree(VertexId v) const { return int(rot[v].size()); }

  EdgeId rot_next(EdgeId a) const {
    const auto& r = rot[tail[a]];
    return r[(pos_in_rot[a] + 1) % r.size()];
  }
  EdgeId rot_prev(EdgeId a) const {
    const auto& r = rot[tail[a]];
    return r[(pos_in_rot[a] + r.size() - 1) % r.size()];
  }
  EdgeId face_next(EdgeId a) const { return next_in_face[a]; }

  void index_rotations() {
    pos_in_rot.assign(arc_count(), -1);
    for (VertexId v = 0; v < n; ++v) {
      for (int i = 0; i < int(rot[v].size()); ++i) {
        EdgeId a = rot[v][i];
        if (a < 0 || a >= arc_count() || tail[a] != v || pos_in_rot[a] != -1)
          throw MalformedRotation("rotation list of vertex " +
                                  std::to_string(v));
        pos_in_rot[a] = i;
      }
    }
    for (EdgeId a = 0; a < arc_count(); ++a)
      if (pos_in_rot[a] < 0)
        throw MalformedRotation("arc " + std::to_string(a) +
                                " missing from rotations");
  }

  void trace_faces() {
    int m = arc_count();
    next_in_face.assign(m, -1);
    for (EdgeId a = 0; a < m; ++a) {
      EdgeId r = rev(a);
      const auto& list = rot[head[a]];
      next_in_face[a] = list[(pos_in_rot[r] + 1) % list.size()];
    }
    face_of.assign(m, -1);
    faces.clear();
    for (EdgeId a = 0; a < m; ++a) {
      if (face_of[a] != -1) continue;
      int f = face_count();
      faces.emplace_back();
      EdgeId cur = a;
      do {
        face_of[cur] = f;
        faces[f].push_back(cur);
        cur = next_in_face[cur];
      } while (cur != a);
    }
  }

  // Euler genus-0 check, per connected component with at least one edge.
  void check_planar() const {
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
      if (comp[s] != -1) continue;
      comp[s] = ncomp;
      stack.push_back(s);
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId a : rot[v]) {
          VertexId w = head[a];
          if (comp[w] == -1) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
        }
      }
      ++ncomp;
    }
    std::vector<i64> vcnt(ncomp, 0), acnt(ncomp, 0), fcnt(ncomp, 0);
    for (VertexId v = 0; v < n; ++v) ++vcnt[comp[v]];
    for (EdgeId a = 0; a < arc_count(); ++a) ++acnt[comp[tail[a]]];
    for (const auto& f : faces) ++fcnt[comp[tail[f[0]]]];
    for (int c = 0; c < ncomp; ++c) {
      if (acnt[c] == 0) continue;  // isolated vertex
      if (vcnt[c] - acnt[c] / 2 + fcnt[c] != 2)
        throw NonPlanar("Euler check failed for component " +
                        std::to_string(c));
    }
  }
};

// Builds an embedding from per-vertex clockwise rotation lists. Arcs are
// paired 2k/2k+1; the rotation lists must mention every arc at its tail
// exactly once.
inline PlanarEmbedding build_embedding(int n,
                                       const std::vector<VertexId>& tails,
                                       const std::vector<VertexId>& heads,
                                       std::vector<std::vector<EdgeId>> rot) {
  if (tails.size() != heads.size() || tails.size() % 2 != 0)
    throw MalformedRotation("arc arrays must be paired");
  PlanarEmbedding emb;
  emb.n = n;
  emb.tail = tails;
  emb.head = heads;
  emb.rot = std::move(rot);
  if (int(emb.rot.size()) != n) throw MalformedRotation("rotation list count");
  for (EdgeId a = 0; a < emb.arc_count(); ++a) {
    if (emb.tail[a] != emb.head[rev(a)] || emb.head[a] != emb.tail[rev(a)])
      throw MalformedRotation("arc pairing endpoints");
  }
  emb.index_rotations();
  emb.trace_faces();
  emb.check_planar();
  return emb;
}

// The dual embedding. Dual arc ids coincide with primal arc ids: a* runs
// from the face containing a to the face containing rev(a), so
// (rev a)* = rev(a*) holds by construction. The rotation around a dual
// vertex is its face cycle.
inline PlanarEmbedding dual(const PlanarEmbedding& emb) {
  PlanarEmbedding d;
  d.n = emb.face_count();
  int m = emb.arc_count();
  d.tail.resize(m);
  d.head.resize(m);
  for (EdgeId a = 0; a < m; ++a) {
    d.tail[a] = emb.face_of[a];
    d.head[a] = emb.face_of[rev(a)];
  }
  d.rot.assign(d.n, {});
  for (int f = 0; f < emb.face_count(); ++f) d.rot[f] = emb.faces[f];
  d.index_rotations();
  d.trace_faces();
  d.check_planar();
  return d;
}

// Editable rotation structure for embedding surgery (chord insertion,
// vertex splitting, vertex expansion). Collects edits in doubly linked
// circular lists and emits a fresh embedding.
class EmbeddingEditor {
 public:
  explicit EmbeddingEditor(const PlanarEmbedding& emb) : n_(emb.n) {
    tail_ = emb.tail;
    head_ = emb.head;
    int m = emb.arc_count();
    cw_next_.assign(m, -1);
    cw_prev_.assign(m, -1);
    some_arc_.assign(n_, -1);
    for (VertexId v = 0; v < n_; ++v) {
      const auto& r = emb.rot[v];
      if (r.empty()) continue;
      some_arc_[v] = r[0];
      for (int i = 0; i < int(r.size()); ++i) {
        EdgeId a = r[i], b = r[(i + 1) % r.size()];
        cw_next_[a] = b;
        cw_prev_[b] = a;
      }
    }
  }

  int arc_count() const { return int(tail_.size()); }
  VertexId tail(EdgeId a) const { return tail_[a]; }
  VertexId head(EdgeId a) const { return head_[a]; }
  EdgeId cw_next(EdgeId a) const { return cw_next_[a]; }
  EdgeId cw_prev(EdgeId a) const { return cw_prev_[a]; }

  int degree(VertexId v) const {
    EdgeId s = some_arc_[v];
    if (s < 0) return 0;
    int d = 0;
    EdgeId cur = s;
    do {
      ++d;
      cur = cw_next_[cur];
    } while (cur != s);
    return d;
  }

  VertexId new_vertex() {
    some_arc_.push_back(-1);
    return n_++;
  }

  // Inserts the arc pair (u -> v, v -> u): the forward arc goes right after
  // `after_u` in rot[u] and the reverse right after `after_v` in rot[v].
  // An `after` of -1 is allowed only for vertices with no arcs yet.
  EdgeId add_pair_after(VertexId u, EdgeId after_u, VertexId v,
                        EdgeId after_v) {
    EdgeId a = arc_count();
    tail_.push_back(u);
    head_.push_back(v);
    tail_.push_back(v);
    head_.push_back(u);
    cw_next_.resize(arc_count(), -1);
    cw_prev_.resize(arc_count(), -1);
    splice_after(u, a, after_u);
    splice_after(v, a + 1, after_v);
    return a;
  }

  // Detaches arc a from its tail's rotation (used while moving arcs between
  // vertex copies). The arc keeps its id; re-attach with attach_after.
  void detach(EdgeId a) {
    VertexId v = tail_[a];
    if (cw_next_[a] == a) {
      some_arc_[v] = -1;
    } else {
      cw_next_[cw_prev_[a]] = cw_next_[a];
      cw_prev_[cw_next_[a]] = cw_prev_[a];
      if (some_arc_[v] == a) some_arc_[v] = cw_next_[a];
    }
    cw_next_[a] = cw_prev_[a] = -1;
  }

  void attach_after(VertexId v, EdgeId a, EdgeId after) {
    tail_[a] = v;
    head_[rev(a)] = v;
    splice_after(v, a, after);
  }

  PlanarEmbedding finish() const {
    PlanarEmbedding emb;
    emb.n = n_;
    emb.tail = tail_;
    emb.head = head_;
    emb.rot.assign(n_, {});
    for (VertexId v = 0; v < n_; ++v) {
      EdgeId s = some_arc_[v];
      if (s < 0) continue;
      EdgeId cur = s;
      do {
        emb.rot[v].push_back(cur);
        cur = cw_next_[cur];
      } while (cur != s);
    }
    emb.index_rotations();
    emb.trace_faces();
    emb.check_planar();
    return emb;
  }

 private:
  void splice_after(VertexId v, EdgeId a, EdgeId after) {
    if (some_arc_[v] < 0) {
      check(after < 0, "attach point for empty rotation");
      some_arc_[v] = a;
      cw_next_[a] = cw_prev_[a] = a;
      return;
    }
    check(after >= 0 && tail_[after] == v, "attach point tail mismatch");
    EdgeId nxt = cw_next_[after];
    cw_next_[after] = a;
    cw_prev_[a] = after;
    cw_next_[a] = nxt;
    cw_prev_[nxt] = a;
  }

  int n_;
  std::vector<VertexId> tail_, head_;
  std::vector<EdgeId> cw_next_, cw_prev_;
  std::vector<EdgeId> some_arc_;
};

}  // namespace planarflow
