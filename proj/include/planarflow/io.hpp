#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "planarflow/transform.hpp"

namespace planarflow {

// Text format:
//   planarflow-graph v1
//   n m
//   <n rotation lines:  vertex_id arc arc ...>
//   <m arc lines:       edge_id tail head capacity cost>
// Arc ids 2k and 2k+1 are mutual reverses; capacity `inf` marks an
// uncapacitated edge.
inline void write_graph(std::ostream& os, const EmbeddedNetwork& g) {
  os << "planarflow-graph v1\n";
  os << g.emb.n << ' ' << g.emb.arc_count() << '\n';
  for (VertexId v = 0; v < g.emb.n; ++v) {
    os << v;
    for (EdgeId a : g.emb.rot[v]) os << ' ' << a;
    os << '\n';
  }
  for (EdgeId a = 0; a < g.emb.arc_count(); ++a) {
    const auto& e = g.net.edges[a];
    os << a << ' ' << e.tail << ' ' << e.head << ' ';
    if (e.capacity == kInfCap)
      os << "inf";
    else
      os << e.capacity;
    os << ' ' << e.cost << '\n';
  }
}

inline void write_graph(const std::string& path, const EmbeddedNetwork& g) {
  std::ofstream fs(path);
  if (!fs) throw ParseError("cannot open " + path + " for writing");
  write_graph(fs, g);
}

inline EmbeddedNetwork read_graph(std::istream& is) {
  auto fail = [](int line, const std::string& what) -> void {
    throw ParseError("line " + std::to_string(line) + ": " + what);
  };
  int lineno = 1;
  std::string line;
  if (!std::getline(is, line) || line != "planarflow-graph v1")
    fail(lineno, "missing header");
  ++lineno;
  if (!std::getline(is, line)) fail(lineno, "missing sizes");
  int n = 0, m = 0;
  {
    std::istringstream ss(line);
    if (!(ss >> n >> m) || n < 0 || m < 0 || m % 2 != 0)
      fail(lineno, "bad sizes");
  }
  std::vector<std::vector<EdgeId>> rot(n);
  for (int i = 0; i < n; ++i) {
    ++lineno;
    if (!std::getline(is, line)) fail(lineno, "missing rotation line");
    std::istringstream ss(line);
    int v;
    if (!(ss >> v) || v != i) fail(lineno, "rotation line vertex id");
    EdgeId a;
    while (ss >> a) {
      if (a < 0 || a >= m) fail(lineno, "arc id out of range");
      rot[i].push_back(a);
    }
    if (!ss.eof()) fail(lineno, "trailing tokens");
  }
  FlowNetwork net;
  net.n = n;
  net.edges.resize(m);
  std::vector<char> seen(m, 0);
  for (int i = 0; i < m; ++i) {
    ++lineno;
    if (!std::getline(is, line)) fail(lineno, "missing edge line");
    std::istringstream ss(line);
    int id, t, h;
    std::string cap;
    i64 cost;
    if (!(ss >> id >> t >> h >> cap >> cost)) fail(lineno, "bad edge line");
    if (id < 0 || id >= m || seen[id]) fail(lineno, "bad edge id");
    if (t < 0 || t >= n || h < 0 || h >= n) fail(lineno, "endpoint range");
    seen[id] = 1;
    FlowNetwork::Edge e;
    e.tail = t;
    e.head = h;
    e.cost = cost;
    if (cap == "inf") {
      e.capacity = kInfCap;
    } else {
      try {
        size_t pos = 0;
        e.capacity = std::stoll(cap, &pos);
        if (pos != cap.size() || e.capacity < 0) throw std::exception();
      } catch (...) {
        fail(lineno, "bad capacity token");
        return {};  // unreachable
      }
    }
    net.edges[id] = e;
  }
  // Original flags: within a pair, the edge with positive capacity (or, for
  // a 0/0 pair, the even id) is original.
  for (int a = 0; a < m; a += 2) {
    auto& fe = net.edges[a];
    auto& be = net.edges[a + 1];
    bool fwd_orig = !(fe.capacity == 0 && be.capacity != 0);
    fe.original = fwd_orig;
    be.original = !fwd_orig;
  }
  net.validate();
  EmbeddedNetwork g;
  g.emb = build_embedding(n, [&] {
    std::vector<VertexId> t(m);
    for (int a = 0; a < m; ++a) t[a] = net.edges[a].tail;
    return t;
  }(), [&] {
    std::vector<VertexId> h(m);
    for (int a = 0; a < m; ++a) h[a] = net.edges[a].head;
    return h;
  }(), std::move(rot));
  g.net = std::move(net);
  return g;
}

inline EmbeddedNetwork read_graph(const std::string& path) {
  std::ifstream fs(path);
  if (!fs) throw ParseError("cannot open " + path);
  return read_graph(fs);
}

}  // namespace planarflow
