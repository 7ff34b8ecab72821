#pragma once

#include <algorithm>
#include <cmath>

#include "planarflow/rng.hpp"
#include "planarflow/transform.hpp"

namespace planarflow {

struct GenOptions {
  i64 cap_lo = 1, cap_hi = 8;
  i64 cost_lo = -8, cost_hi = 8;
  bool bidirected = true;  // emit an original edge in both directions
};

// Deterministic planar network generator: a k x k grid (k = ceil(sqrt(n)))
// with one randomly oriented diagonal per cell. Every undirected slot
// becomes one or two original edge pairs with uniform capacities and costs.
inline EmbeddedNetwork gen_planar(u64 seed, int n, GenOptions opt = {}) {
  check(n >= 3, "gen_planar needs n >= 3");
  int k = 1;
  while (k * k < n) ++k;
  if (k < 2) k = 2;
  Rng rng = Rng(seed).split(0x67656e);
  auto vid = [&](int r, int c) { return r * k + c; };

  FlowNetwork net;
  net.n = k * k;
  // Geometric slots per vertex in clockwise order (screen coordinates,
  // y growing downward): N, NE, E, SE, S, SW, W, NW.
  std::vector<std::vector<std::pair<int, EdgeId>>> slots(net.n);
  enum Dir { N, NE, E, SE, S, SW, W, NW };

  auto connect = [&](int ru, int cu, int du, int rv, int cv, int dv) {
    VertexId u = vid(ru, cu), v = vid(rv, cv);
    Rng er = rng.split((u64(u) << 20) ^ v);
    auto mk = [&](VertexId a, VertexId b) {
      i64 cap = er.uniform(opt.cap_lo, opt.cap_hi);
      i64 cost = er.uniform(opt.cost_lo, opt.cost_hi);
      return net.add_pair(a, b, cap, cost);
    };
    EdgeId p = mk(u, v);
    if (opt.bidirected) {
      // Two parallel pairs; clockwise orders at the endpoints mirror.
      EdgeId q = mk(v, u);
      slots[u].push_back({du, p});
      slots[u].push_back({du, rev(q)});
      slots[v].push_back({dv, q});
      slots[v].push_back({dv, rev(p)});
    } else {
      slots[u].push_back({du, p});
      slots[v].push_back({dv, rev(p)});
    }
  };

  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      if (c + 1 < k) connect(r, c, E, r, c + 1, W);
      if (r + 1 < k) connect(r, c, S, r + 1, c, N);
    }
  for (int r = 0; r + 1 < k; ++r)
    for (int c = 0; c + 1 < k; ++c) {
      if (rng.coin())
        connect(r, c, SE, r + 1, c + 1, NW);
      else
        connect(r, c + 1, SW, r + 1, c, NE);
    }

  std::vector<std::vector<EdgeId>> rot(net.n);
  for (VertexId v = 0; v < net.n; ++v) {
    std::stable_sort(slots[v].begin(), slots[v].end(),
                     [](const auto& a, const auto& b) {
                       return a.first < b.first;
                     });
    for (auto& [dir, arc] : slots[v]) rot[v].push_back(arc);
  }

  std::vector<VertexId> tails(net.edge_count()), heads(net.edge_count());
  for (EdgeId a = 0; a < net.edge_count(); ++a) {
    tails[a] = net.edges[a].tail;
    heads[a] = net.edges[a].head;
  }
  EmbeddedNetwork g;
  g.emb = build_embedding(net.n, tails, heads, std::move(rot));
  g.net = std::move(net);
  return g;
}

}  // namespace planarflow
