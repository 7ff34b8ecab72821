#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "planarflow/graph.hpp"

namespace planarflow {

constexpr i64 kDistInf = i64(4) * 1000 * 1000 * 1000 * 1000 * 1000;

inline i64 sat_add(i64 a, i64 b) {
  if (a >= kDistInf || b >= kDistInf) return kDistInf;
  return a + b;
}

// Reference answers for the fast algorithms. Everything here is O(nm) or
// worse and capped, by design.
namespace brute {

constexpr int kSizeCap = 20000;

struct BellmanFordResult {
  bool has_negative_cycle = false;
  std::vector<EdgeId> cycle;   // arc ids into Digraph::arcs, when negative
  std::vector<i64> dist;       // from the virtual super source when clean
};

// Bellman-Ford from a virtual super source connected to every vertex with a
// zero-weight edge. Returns either exact distances (a feasible price is
// -dist) or a simple negative cycle.
inline BellmanFordResult bellman_ford(const Digraph& g) {
  if (g.n > kSizeCap) throw SizeCap("bellman_ford");
  BellmanFordResult out;
  std::vector<i64> dist(g.n, 0);
  std::vector<EdgeId> parent_arc(g.n, -1);
  int last_changed = -1;
  for (int round = 0; round < g.n; ++round) {
    last_changed = -1;
    for (EdgeId i = 0; i < EdgeId(g.arcs.size()); ++i) {
      const auto& a = g.arcs[i];
      if (dist[a.tail] + a.w < dist[a.head]) {
        dist[a.head] = dist[a.tail] + a.w;
        parent_arc[a.head] = i;
        last_changed = a.head;
      }
    }
    if (last_changed < 0) break;
  }
  if (last_changed < 0) {
    out.dist = std::move(dist);
    return out;
  }
  // Walk parents n steps to land on the cycle, then collect it.
  VertexId v = last_changed;
  for (int i = 0; i < g.n; ++i) v = g.arcs[parent_arc[v]].tail;
  std::vector<EdgeId> cyc;
  VertexId cur = v;
  do {
    EdgeId pa = parent_arc[cur];
    cyc.push_back(pa);
    cur = g.arcs[pa].tail;
  } while (cur != v);
  std::reverse(cyc.begin(), cyc.end());
  out.has_negative_cycle = true;
  out.cycle = std::move(cyc);
  return out;
}

// Single-source distances; kDistInf marks unreachable. Requires no negative
// cycle reachable from s (checked).
inline std::vector<i64> sssp(const Digraph& g, VertexId s) {
  if (g.n > kSizeCap) throw SizeCap("brute sssp");
  std::vector<i64> dist(g.n, kDistInf);
  dist[s] = 0;
  for (int round = 0; round <= g.n; ++round) {
    bool changed = false;
    for (const auto& a : g.arcs) {
      if (dist[a.tail] < kDistInf && dist[a.tail] + a.w < dist[a.head]) {
        dist[a.head] = dist[a.tail] + a.w;
        changed = true;
      }
    }
    if (!changed) return dist;
  }
  throw Error("NegativeCycle", "brute sssp on graph with negative cycle");
}

// Dinic max-flow. Capacities kInfCap are treated as a huge finite value.
class Dinic {
 public:
  explicit Dinic(int n) : n_(n), head_(n, -1) {}

  int add_edge(VertexId u, VertexId v, i64 cap) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = int(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], 0});
    head_[v] = int(arcs_.size()) - 1;
    return int(arcs_.size()) - 2;
  }

  i64 max_flow(VertexId s, VertexId t) {
    i64 total = 0;
    while (bfs(s, t)) {
      cur_ = head_;
      while (i64 pushed = dfs(s, t, kDistInf)) total = sat_add(total, pushed);
    }
    return total;
  }

  i64 flow_on(int arc) const { return arcs_[arc ^ 1].cap; }

 private:
  struct Arc {
    VertexId to;
    int next;
    i64 cap;
  };
  bool bfs(VertexId s, VertexId t) {
    level_.assign(n_, -1);
    std::queue<VertexId> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (int i = head_[v]; i >= 0; i = arcs_[i].next) {
        if (arcs_[i].cap > 0 && level_[arcs_[i].to] < 0) {
          level_[arcs_[i].to] = level_[v] + 1;
          q.push(arcs_[i].to);
        }
      }
    }
    return level_[t] >= 0;
  }
  i64 dfs(VertexId v, VertexId t, i64 limit) {
    if (v == t || limit == 0) return limit;
    for (int& i = cur_[v]; i >= 0; i = arcs_[i].next) {
      Arc& a = arcs_[i];
      if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
        i64 got = dfs(a.to, t, std::min(limit, a.cap));
        if (got > 0) {
          a.cap -= got;
          arcs_[i ^ 1].cap += got;
          return got;
        }
      }
    }
    level_[v] = -1;
    return 0;
  }

  int n_;
  std::vector<int> head_, cur_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
};

// Max s,t-flow value of a FlowNetwork (original edges only; kInfCap becomes
// a huge finite capacity).
inline i64 max_flow_value(const FlowNetwork& net, VertexId s, VertexId t) {
  Dinic d(net.n);
  for (const auto& e : net.edges) {
    if (!e.original) continue;
    i64 cap = e.capacity == kInfCap ? kDistInf / 4 : e.capacity;
    d.add_edge(e.tail, e.head, cap);
  }
  return d.max_flow(s, t);
}

// Exact min-cost circulation by saturating negative edges and routing the
// excess back along successive shortest paths (Bellman-Ford distances, so
// negative residual costs are fine). Exact for integral capacities.
struct CirculationResult {
  i64 cost = 0;
  std::vector<i64> flow;  // per FlowNetwork edge id, original edges only
};

inline CirculationResult min_cost_circulation(const FlowNetwork& net) {
  if (net.n > 2000) throw SizeCap("brute circulation");
  struct Arc {
    VertexId to;
    i64 cap, cost;
  };
  std::vector<Arc> arcs;                  // paired i, i^1
  std::vector<std::vector<int>> adj(net.n + 2);
  std::vector<EdgeId> net_edge_of;        // arc pair -> FlowNetwork edge
  auto add = [&](VertexId u, VertexId v, i64 cap, i64 cost, EdgeId orig) {
    adj[u].push_back(int(arcs.size()));
    arcs.push_back({v, cap, cost});
    adj[v].push_back(int(arcs.size()));
    arcs.push_back({u, 0, -cost});
    net_edge_of.push_back(orig);
  };
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const auto& ed = net.edges[e];
    if (!ed.original) continue;
    i64 cap = ed.capacity == kInfCap ? kDistInf / 4 : ed.capacity;
    add(ed.tail, ed.head, cap, ed.cost, e);
  }
  int base_arcs = int(arcs.size());
  // Saturate negative arcs, collect excess.
  std::vector<i64> exc(net.n + 2, 0);
  i64 cost = 0;
  for (int i = 0; i < base_arcs; i += 2) {
    if (arcs[i].cost < 0 && arcs[i].cap > 0) {
      i64 f = arcs[i].cap;
      VertexId u = arcs[i ^ 1].to, v = arcs[i].to;
      arcs[i ^ 1].cap += f;
      arcs[i].cap = 0;
      cost += f * arcs[i].cost;
      exc[u] -= f;
      exc[v] += f;
    }
  }
  int S = net.n, T = net.n + 1;
  for (VertexId v = 0; v < net.n; ++v) {
    if (exc[v] > 0) add(S, v, exc[v], 0, -1);
    if (exc[v] < 0) add(v, T, -exc[v], 0, -1);
  }
  // Successive shortest augmenting paths S -> T.
  while (true) {
    int nn = net.n + 2;
    std::vector<i64> dist(nn, kDistInf);
    std::vector<int> par(nn, -1);
    dist[S] = 0;
    for (int round = 0; round < nn; ++round) {
      bool changed = false;
      for (VertexId v = 0; v < nn; ++v) {
        if (dist[v] >= kDistInf) continue;
        for (int i : adj[v]) {
          if (arcs[i].cap > 0 && dist[v] + arcs[i].cost < dist[arcs[i].to]) {
            dist[arcs[i].to] = dist[v] + arcs[i].cost;
            par[arcs[i].to] = i;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[T] >= kDistInf) break;
    i64 bottleneck = kDistInf;
    for (VertexId v = T; v != S;) {
      int i = par[v];
      bottleneck = std::min(bottleneck, arcs[i].cap);
      v = arcs[i ^ 1].to;
    }
    for (VertexId v = T; v != S;) {
      int i = par[v];
      arcs[i].cap -= bottleneck;
      arcs[i ^ 1].cap += bottleneck;
      cost += bottleneck * arcs[i].cost;
      v = arcs[i ^ 1].to;
    }
  }
  CirculationResult out;
  out.cost = cost;
  out.flow.assign(net.edge_count(), 0);
  // Reverse arcs start at capacity 0, so their final capacity is the flow.
  for (int i = 0; i < base_arcs; i += 2)
    out.flow[net_edge_of[i / 2]] = arcs[i ^ 1].cap;
  return out;
}

}  // namespace brute
}  // namespace planarflow
