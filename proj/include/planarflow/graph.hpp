#pragma once

#include <cstdint>
#include <vector>

#include "planarflow/error.hpp"
#include "planarflow/weight.hpp"

namespace planarflow {

using VertexId = int;
using EdgeId = int;

constexpr i64 kInfCap = -1;  // capacity sentinel, never used in arithmetic

inline EdgeId rev(EdgeId e) { return e ^ 1; }

// Flow network over paired directed edges: ids 2k and 2k+1 are mutual
// reverses. Original edges E0 may sit at either parity; what matters is the
// involution and the sign conventions below.
struct FlowNetwork {
  struct Edge {
    VertexId tail = 0, head = 0;
    i64 capacity = 0;  // kInfCap for unbounded
    i64 cost = 0;
    bool original = true;  // false for the reverse partner of an E0 edge
  };

  int n = 0;
  std::vector<Edge> edges;

  int edge_count() const { return int(edges.size()); }

  // Adds e and rev(e) as a pair; returns the id of the forward edge.
  EdgeId add_pair(VertexId u, VertexId v, i64 cap, i64 cost) {
    EdgeId id = edge_count();
    edges.push_back({u, v, cap, cost, true});
    edges.push_back({v, u, 0, -cost, false});
    return id;
  }

  bool is_infinite(EdgeId e) const { return edges[e].capacity == kInfCap; }

  void validate() const {
    for (EdgeId e = 0; e < edge_count(); ++e) {
      const Edge& fe = edges[e];
      const Edge& be = edges[rev(e)];
      check(be.tail == fe.head && be.head == fe.tail, "rev pairing endpoints");
      check(fe.original != be.original, "exactly one of e, rev(e) original");
      if (fe.original) {
        check(be.capacity == 0, "reverse capacity must be 0");
        check(be.cost == -fe.cost, "reverse cost must be negated");
      }
    }
  }
};

struct LambdaStats {
  std::vector<i64> lambda;          // per-vertex min(in caps, out caps)
  std::vector<i64> lambda_in, lambda_out;  // kInfCap when unbounded
  i64 total = 0;                    // Lambda
};

// Per-vertex capacity statistics. lambda_v = min over the two incident
// capacity sums; InfiniteLambda when a vertex is unbounded on both sides.
inline LambdaStats lambda_stats(const FlowNetwork& net) {
  LambdaStats st;
  st.lambda_in.assign(net.n, 0);
  st.lambda_out.assign(net.n, 0);
  auto add = [](i64& acc, i64 cap) {
    if (acc == kInfCap || cap == kInfCap) {
      acc = kInfCap;
    } else {
      acc += cap;
    }
  };
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const auto& ed = net.edges[e];
    add(st.lambda_out[ed.tail], ed.capacity);
    add(st.lambda_in[ed.head], ed.capacity);
  }
  st.lambda.assign(net.n, 0);
  for (VertexId v = 0; v < net.n; ++v) {
    i64 in = st.lambda_in[v], out = st.lambda_out[v];
    i64 lam;
    if (in == kInfCap && out == kInfCap) {
      throw InfiniteLambda("vertex " + std::to_string(v) +
                           " unbounded on both sides");
    } else if (in == kInfCap) {
      lam = out;
    } else if (out == kInfCap) {
      lam = in;
    } else {
      lam = in < out ? in : out;
    }
    st.lambda[v] = lam;
    st.total += lam;
  }
  return st;
}

// C = max(2, max -c(e)) over original edges.
inline i64 cost_bound(const FlowNetwork& net) {
  i64 c = 2;
  for (const auto& ed : net.edges) {
    if (ed.original && -ed.cost > c) c = -ed.cost;
  }
  return c;
}

// Plain weighted digraph used by the shortest-path and negative-cycle
// entry points.
struct Digraph {
  struct Arc {
    VertexId tail = 0, head = 0;
    i64 w = 0;
  };
  int n = 0;
  std::vector<Arc> arcs;

  EdgeId add_arc(VertexId u, VertexId v, i64 w) {
    arcs.push_back({u, v, w});
    return EdgeId(arcs.size()) - 1;
  }
};

}  // namespace planarflow
