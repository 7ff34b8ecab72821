#pragma once

#include <vector>

#include "planarflow/gen.hpp"
#include "planarflow/graph.hpp"
#include "planarflow/transform.hpp"

namespace planarflow::testutil {

// Triangle on vertices 0,1,2 with one bidirected pair per side.
inline EmbeddedNetwork triangle(i64 c01 = 1, i64 c12 = 1, i64 c20 = 1,
                                i64 cap = 1) {
  FlowNetwork net;
  net.n = 3;
  net.add_pair(0, 1, cap, c01);  // arcs 0,1
  net.add_pair(1, 2, cap, c12);  // arcs 2,3
  net.add_pair(2, 0, cap, c20);  // arcs 4,5
  std::vector<std::vector<EdgeId>> rot = {{0, 5}, {1, 2}, {3, 4}};
  EmbeddedNetwork g;
  g.emb = build_embedding(3, {0, 1, 1, 2, 2, 0}, {1, 0, 2, 1, 0, 2},
                          std::move(rot));
  g.net = std::move(net);
  return g;
}

inline EmbeddedNetwork single_edge(i64 cap = 3, i64 cost = 0) {
  FlowNetwork net;
  net.n = 2;
  net.add_pair(0, 1, cap, cost);
  EmbeddedNetwork g;
  g.emb = build_embedding(2, {0, 1}, {1, 0}, {{0}, {1}});
  g.net = std::move(net);
  return g;
}

inline EmbeddedNetwork square_cycle() {
  FlowNetwork net;
  net.n = 4;
  net.add_pair(0, 1, 1, 1);  // 0,1
  net.add_pair(1, 2, 1, 1);  // 2,3
  net.add_pair(2, 3, 1, 1);  // 4,5
  net.add_pair(3, 0, 1, 1);  // 6,7
  EmbeddedNetwork g;
  g.emb = build_embedding(4, {0, 1, 1, 2, 2, 3, 3, 0}, {1, 0, 2, 1, 3, 2, 0, 3},
                          {{0, 7}, {2, 1}, {4, 3}, {6, 5}});
  g.net = std::move(net);
  return g;
}

// Star with the given number of leaves; center is vertex 0.
inline EmbeddedNetwork star(int leaves, i64 cap = 2) {
  FlowNetwork net;
  net.n = leaves + 1;
  std::vector<std::vector<EdgeId>> rot(net.n);
  for (int i = 1; i <= leaves; ++i) {
    EdgeId p = net.add_pair(0, i, cap, 0);
    rot[0].push_back(p);
    rot[i].push_back(rev(p));
  }
  std::vector<VertexId> t(net.edge_count()), h(net.edge_count());
  for (EdgeId a = 0; a < net.edge_count(); ++a) {
    t[a] = net.edges[a].tail;
    h[a] = net.edges[a].head;
  }
  EmbeddedNetwork g;
  g.emb = build_embedding(net.n, t, h, std::move(rot));
  g.net = std::move(net);
  return g;
}

// Wheel with 4 rim vertices: center 0 has degree 4, rim vertices degree 3.
inline EmbeddedNetwork wheel4(i64 cap = 2) {
  FlowNetwork net;
  net.n = 5;
  for (int i = 1; i <= 4; ++i) net.add_pair(0, i, cap, 0);  // spokes 0..7
  for (int i = 1; i <= 4; ++i)
    net.add_pair(i, i % 4 + 1, cap, 0);  // rim 8..15
  std::vector<std::vector<EdgeId>> rot(5);
  rot[0] = {0, 2, 4, 6};
  rot[1] = {1, 15, 8};
  rot[2] = {3, 9, 10};
  rot[3] = {5, 11, 12};
  rot[4] = {7, 13, 14};
  std::vector<VertexId> t(net.edge_count()), h(net.edge_count());
  for (EdgeId a = 0; a < net.edge_count(); ++a) {
    t[a] = net.edges[a].tail;
    h[a] = net.edges[a].head;
  }
  EmbeddedNetwork g;
  g.emb = build_embedding(5, t, h, std::move(rot));
  g.net = std::move(net);
  return g;
}

// Digraph of the original arcs' costs (for Bellman-Ford style oracles).
inline Digraph cost_digraph(const FlowNetwork& net) {
  Digraph d;
  d.n = net.n;
  for (const auto& e : net.edges)
    if (e.original) d.add_arc(e.tail, e.head, e.cost);
  return d;
}

inline Digraph arc_weight_digraph(const PlanarEmbedding& emb,
                                  const std::vector<i64>& w) {
  Digraph d;
  d.n = emb.n;
  for (EdgeId a = 0; a < emb.arc_count(); ++a)
    d.add_arc(emb.tail[a], emb.head[a], w[a]);
  return d;
}

}  // namespace planarflow::testutil
