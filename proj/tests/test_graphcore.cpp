#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "planarflow/gen.hpp"
#include "planarflow/io.hpp"
#include "planarflow/oracles_bruteforce.hpp"
#include "planarflow/transform.hpp"

using namespace planarflow;
using namespace planarflow::testutil;

TEST_CASE("build_embedding: triangle has two faces") {
  auto g = triangle();
  CHECK(g.emb.face_count() == 2);
  for (const auto& f : g.emb.faces) CHECK(f.size() == 3);
}

TEST_CASE("build_embedding: single bidirected edge has one face of length 2") {
  auto g = single_edge();
  REQUIRE(g.emb.face_count() == 1);
  CHECK(g.emb.faces[0].size() == 2);
}

TEST_CASE("build_embedding: grid with diagonals satisfies Euler") {
  auto g = gen_planar(7, 16);
  int V = g.emb.n, E = g.emb.arc_count() / 2, F = g.emb.face_count();
  CHECK(F == E - V + 2);
  // Face lengths sum to the number of directed arcs.
  size_t total = 0;
  for (const auto& f : g.emb.faces) total += f.size();
  CHECK(total == size_t(g.emb.arc_count()));
}

TEST_CASE("build_embedding: malformed rotation rejected") {
  // Arc 0 listed twice, arc 1 missing.
  CHECK_THROWS_AS(build_embedding(2, {0, 1}, {1, 0}, {{0, 0}, {}}),
                  MalformedRotation);
}

TEST_CASE("dual: triangle dual is two vertices with three parallel pairs") {
  auto g = triangle();
  auto d = dual(g.emb);
  REQUIRE(d.n == 2);
  CHECK(d.arc_count() == 6);
  for (EdgeId a = 0; a < d.arc_count(); ++a) CHECK(d.tail[a] != d.head[a]);
}

TEST_CASE("dual: single edge dual is a loop pair on one vertex") {
  auto g = single_edge();
  auto d = dual(g.emb);
  REQUIRE(d.n == 1);
  CHECK(d.arc_count() == 2);
  CHECK(d.tail[0] == d.head[0]);
}

TEST_CASE("dual: dual of dual is isomorphic to the primal") {
  auto g = gen_planar(3, 16);
  auto d = dual(g.emb);
  auto dd = dual(d);
  REQUIRE(dd.n == g.emb.n);
  REQUIRE(dd.arc_count() == g.emb.arc_count());
  // Faces of the dual correspond to primal vertices: all arcs of one dual
  // face share a primal endpoint, consistently tail or consistently head.
  bool all_tail = true, all_head = true;
  for (const auto& f : d.faces) {
    std::set<VertexId> tails, heads;
    for (EdgeId a : f) {
      tails.insert(g.emb.tail[a]);
      heads.insert(g.emb.head[a]);
    }
    if (tails.size() != 1) all_tail = false;
    if (heads.size() != 1) all_head = false;
  }
  CHECK((all_tail || all_head));
}

TEST_CASE("add_reverse_edges: single edge gains its zero-capacity partner") {
  RawNetwork raw;
  raw.n = 2;
  raw.edges.push_back({0, 1, 3, 5});
  FlowNetwork net = add_reverse_edges(raw);
  REQUIRE(net.edge_count() == 2);
  CHECK(net.edges[1].tail == 1);
  CHECK(net.edges[1].capacity == 0);
  CHECK(net.edges[1].cost == -5);
  // Idempotent on the paired representation.
  FlowNetwork again = add_reverse_edges(net);
  CHECK(again.edge_count() == net.edge_count());
}

TEST_CASE("add_reverse_edges: max-flow values unchanged") {
  auto g = gen_planar(11, 9);
  FlowNetwork net2 = add_reverse_edges(g.net);
  for (VertexId s = 0; s < g.net.n; ++s)
    for (VertexId t = 0; t < g.net.n; ++t) {
      if (s == t) continue;
      CHECK(brute::max_flow_value(g.net, s, t) ==
            brute::max_flow_value(net2, s, t));
    }
}

TEST_CASE("triangulate: square face gains one diagonal per face") {
  auto g = square_cycle();
  auto r = triangulate(g.emb);
  CHECK(r.emb.arc_count() == g.emb.arc_count() + 4);  // one chord per face
  for (const auto& f : r.emb.faces) CHECK(f.size() == 3);
}

TEST_CASE("triangulate: already triangulated is the identity") {
  auto g = triangle();
  auto r = triangulate(g.emb);
  CHECK(r.emb.arc_count() == g.emb.arc_count());
}

TEST_CASE("triangulate: negative-cycle answer unchanged") {
  for (u64 seed : {1, 2, 3, 4, 5}) {
    auto g = gen_planar(seed, 25, {.cap_lo = 1, .cap_hi = 4, .cost_lo = -4,
                                   .cost_hi = 6});
    std::vector<i64> w(g.emb.arc_count());
    for (EdgeId a = 0; a < g.emb.arc_count(); ++a) w[a] = g.net.edges[a].cost;
    bool before =
        brute::bellman_ford(arc_weight_digraph(g.emb, w)).has_negative_cycle;
    i64 c = 2;
    for (i64 x : w) c = std::max(c, -x);
    PlanarEmbedding emb = g.emb;
    triangulate_weighted(emb, w, i64(emb.n) * c);
    bool after =
        brute::bellman_ford(arc_weight_digraph(emb, w)).has_negative_cycle;
    CHECK(before == after);
  }
}

TEST_CASE("degree3_expand: degree-4 vertex becomes a ring of 4 copies") {
  auto g = wheel4();
  auto r = degree3_expand(g);
  CHECK(r.copies[0].size() == 4);
  for (VertexId v = 0; v < r.g.emb.n; ++v) CHECK(r.g.emb.degree(v) == 3);
  for (VertexId s = 0; s < g.net.n; ++s)
    for (VertexId t = 0; t < g.net.n; ++t) {
      if (s == t) continue;
      CHECK(brute::max_flow_value(g.net, s, t) ==
            brute::max_flow_value(r.g.net, r.copies[s][0], r.copies[t][0]));
    }
}

TEST_CASE("degree3_expand: star max-flow preserved") {
  auto g = star(5, 2);
  auto r = degree3_expand(g);
  for (int leaf = 1; leaf <= 5; ++leaf) {
    i64 want = brute::max_flow_value(g.net, 0, leaf);
    i64 got = brute::max_flow_value(r.g.net, r.copies[0][0],
                                    r.copies[leaf][0]);
    CHECK(want == got);
  }
}

TEST_CASE("degree3_expand: all-pairs max-flow preserved on generated nets") {
  auto g = gen_planar(21, 9);
  auto r = degree3_expand(g);
  for (VertexId s = 0; s < g.net.n; ++s)
    for (VertexId t = 0; t < g.net.n; ++t) {
      if (s == t) continue;
      CHECK(brute::max_flow_value(g.net, s, t) ==
            brute::max_flow_value(r.g.net, r.copies[s][0], r.copies[t][0]));
    }
}

TEST_CASE("crossing_number: definition cases") {
  auto g = triangle();
  std::vector<char> B(g.emb.arc_count(), 0);
  B[0] = 1;  // dual arc of primal arc 0
  CHECK(crossing_number({0}, B) == 1);
  CHECK(crossing_number({1}, B) == -1);  // crosses right-to-left
  CHECK(crossing_number({2}, B) == 0);   // disjoint
}

namespace {
// Enumerate all simple directed paths/cycles by DFS (tiny graphs only).
void all_simple_paths(const PlanarEmbedding& emb,
                      std::vector<std::vector<EdgeId>>& out) {
  std::vector<std::vector<EdgeId>> outarcs(emb.n);
  for (EdgeId a = 0; a < emb.arc_count(); ++a)
    outarcs[emb.tail[a]].push_back(a);
  std::vector<char> used(emb.n, 0);
  std::vector<EdgeId> path;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (!path.empty()) out.push_back(path);
    for (EdgeId a : outarcs[v]) {
      VertexId w = emb.head[a];
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(a);
      self(self, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (VertexId s = 0; s < emb.n; ++s) {
    used[s] = 1;
    dfs(dfs, s);
    used[s] = 0;
  }
}

void all_simple_cycles(const PlanarEmbedding& emb,
                       std::vector<std::vector<EdgeId>>& out) {
  std::vector<std::vector<EdgeId>> outarcs(emb.n);
  for (EdgeId a = 0; a < emb.arc_count(); ++a)
    outarcs[emb.tail[a]].push_back(a);
  std::vector<char> used(emb.n, 0);
  std::vector<EdgeId> path;
  VertexId root = 0;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    for (EdgeId a : outarcs[v]) {
      VertexId w = emb.head[a];
      if (w == root && !path.empty()) {
        path.push_back(a);
        out.push_back(path);
        path.pop_back();
        continue;
      }
      if (used[w] || w < root) continue;  // canonical: min vertex = root
      used[w] = 1;
      path.push_back(a);
      self(self, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (root = 0; root < emb.n; ++root) {
    used[root] = 1;
    dfs(dfs, root);
    used[root] = 0;
  }
}
}  // namespace

TEST_CASE("crossing_number: simple path vs simple dual cycle is in {-1,0,1}") {
  // 2x2 grid, one diagonal, single-direction pairs: small enough to
  // enumerate everything (5 faces including the outer one).
  auto g = gen_planar(5, 4, {.bidirected = false});
  auto d = dual(g.emb);
  REQUIRE(g.emb.face_count() <= 8);
  std::vector<std::vector<EdgeId>> paths, dcycles;
  all_simple_paths(g.emb, paths);
  all_simple_cycles(d, dcycles);
  REQUIRE(!paths.empty());
  REQUIRE(!dcycles.empty());
  for (const auto& cyc : dcycles) {
    std::vector<char> B(g.emb.arc_count(), 0);
    for (EdgeId a : cyc) B[a] = 1;
    for (const auto& p : paths) {
      i64 x = crossing_number(p, B);
      CHECK((x >= -1 && x <= 1));
    }
  }
}

TEST_CASE("gen_planar: deterministic per seed") {
  auto a = gen_planar(1, 16);
  auto b = gen_planar(1, 16);
  REQUIRE(a.net.edge_count() == b.net.edge_count());
  for (EdgeId e = 0; e < a.net.edge_count(); ++e) {
    CHECK(a.net.edges[e].tail == b.net.edges[e].tail);
    CHECK(a.net.edges[e].capacity == b.net.edges[e].capacity);
    CHECK(a.net.edges[e].cost == b.net.edges[e].cost);
  }
  CHECK(a.emb.rot == b.emb.rot);
  auto c = gen_planar(2, 16);
  bool same = true;
  for (EdgeId e = 0; e < a.net.edge_count() && same; ++e)
    same = a.net.edges[e].cost == c.net.edges[e].cost;
  CHECK(!same);
}

TEST_CASE("gen_planar: weights within requested ranges") {
  GenOptions opt{.cap_lo = 2, .cap_hi = 5, .cost_lo = -3, .cost_hi = 4};
  auto g = gen_planar(9, 25, opt);
  for (const auto& e : g.net.edges) {
    if (!e.original) continue;
    CHECK((e.capacity >= 2 && e.capacity <= 5));
    CHECK((e.cost >= -3 && e.cost <= 4));
  }
}

TEST_CASE("io: write then read is the identity") {
  auto g = gen_planar(4, 16);
  std::ostringstream os;
  write_graph(os, g);
  std::istringstream is(os.str());
  auto h = read_graph(is);
  REQUIRE(h.net.n == g.net.n);
  REQUIRE(h.net.edge_count() == g.net.edge_count());
  for (EdgeId e = 0; e < g.net.edge_count(); ++e) {
    CHECK(h.net.edges[e].tail == g.net.edges[e].tail);
    CHECK(h.net.edges[e].head == g.net.edges[e].head);
    CHECK(h.net.edges[e].capacity == g.net.edges[e].capacity);
    CHECK(h.net.edges[e].cost == g.net.edges[e].cost);
  }
  CHECK(h.emb.rot == g.emb.rot);
}

TEST_CASE("io: inf capacity round-trips") {
  auto g = single_edge();
  g.net.edges[0].capacity = kInfCap;
  std::ostringstream os;
  write_graph(os, g);
  CHECK(os.str().find("inf") != std::string::npos);
  std::istringstream is(os.str());
  auto h = read_graph(is);
  CHECK(h.net.edges[0].capacity == kInfCap);
}

TEST_CASE("io: malformed rotation line raises ParseError with a line number") {
  std::string text =
      "planarflow-graph v1\n2 2\n0 0\n1 99\n0 0 1 3 0\n1 1 0 0 0\n";
  std::istringstream is(text);
  try {
    read_graph(is);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("lambda_stats: unit-capacity 3-cycle") {
  FlowNetwork net;
  net.n = 3;
  net.add_pair(0, 1, 1, 0);
  net.add_pair(1, 2, 1, 0);
  net.add_pair(2, 0, 1, 0);
  auto st = lambda_stats(net);
  CHECK(st.total == 3);
  for (i64 l : st.lambda) CHECK(l == 1);
}

TEST_CASE("lambda_stats: infinite side uses the finite one") {
  FlowNetwork net;
  net.n = 2;
  net.add_pair(0, 1, kInfCap, 0);
  net.add_pair(1, 0, 2, 0);
  auto st = lambda_stats(net);
  // Vertex 0: in-caps {2}, out-caps {inf} -> 2. Same for vertex 1.
  CHECK(st.lambda[0] == 2);
  CHECK(st.lambda[1] == 2);
}

TEST_CASE("lambda_stats: unbounded both sides raises InfiniteLambda") {
  FlowNetwork net;
  net.n = 2;
  net.add_pair(0, 1, kInfCap, 0);
  net.add_pair(1, 0, kInfCap, 0);
  CHECK_THROWS_AS(lambda_stats(net), InfiniteLambda);
}
