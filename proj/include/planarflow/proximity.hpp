#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "planarflow/graph.hpp"
#include "planarflow/weight.hpp"

namespace planarflow {

// An edge handle produced by a proximity view. `id` identifies the edge
// within one composed graph handle (builders keep ids disjoint across the
// views they union) and drives deterministic tie-breaking.
struct EdgeRef {
  VertexId tail = -1, head = -1;
  Weight w;
  u64 id = 0;
};

struct CpMin {
  EdgeRef e;
  Weight d;  // w(e) + alpha(tail) + beta(head)
};

using PriceFn = std::function<Weight(VertexId)>;

struct NnParams {
  std::vector<VertexId> targets;  // initial T
  PriceFn price;                  // p on T
  PriceFn threshold;              // tau on queried vertices
  int scale_exp = 0;              // stored weights are shifted by this
};

struct CpParams {
  std::vector<VertexId> sources;  // initial S
  std::vector<VertexId> targets;  // initial T
  PriceFn alpha;                  // on initial S
  PriceFn beta;                   // on T
  int scale_exp = 0;
};

// Mutable per-phase view. A view is single-use: algorithms re-instantiate
// from the shared factory when they need fresh prices or thresholds.
class NearNeighborView {
 public:
  virtual ~NearNeighborView() = default;
  // An edge e = v->t with t active and w(e) + p(t) < tau(v), or nothing.
  virtual std::optional<EdgeRef> query(VertexId v) = 0;
  virtual void deactivate(VertexId t) = 0;
  // Instrumentation: number of backend probes issued so far.
  virtual u64 probes() const { return 0; }
};

class ClosestPairView {
 public:
  virtual ~ClosestPairView() = default;
  virtual std::optional<CpMin> minimum() = 0;
  virtual void activate(VertexId s, Weight alpha) = 0;
  virtual void extract(VertexId t) = 0;
};

// Immutable, shareable preprocessing. Views instantiated from one factory
// may run concurrently on separate threads.
class NearNeighborFactory {
 public:
  virtual ~NearNeighborFactory() = default;
  virtual std::unique_ptr<NearNeighborView> make_nn(NnParams params) const = 0;
  virtual const std::vector<VertexId>& universe() const = 0;
  virtual bool has_loops() const { return false; }
};

class ClosestPairFactory {
 public:
  virtual ~ClosestPairFactory() = default;
  virtual std::unique_ptr<ClosestPairView> make_cp(CpParams params) const = 0;
  virtual const std::vector<VertexId>& universe() const = 0;
  virtual bool has_loops() const { return false; }
};

namespace detail {

inline bool edge_less(const EdgeRef& a, const EdgeRef& b) {
  if (a.id != b.id) return a.id < b.id;
  if (a.tail != b.tail) return a.tail < b.tail;
  return a.head < b.head;
}

// deterministic comparison of candidate minima: value, then edge id.
inline bool min_less(const CpMin& a, const CpMin& b) {
  if (a.d != b.d) return a.d < b.d;
  return edge_less(a.e, b.e);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Explicit adjacency backend: O(m+n) total near-neighbor update time via
// forward-only cursors, and a lazy-heap closest pair view.
// ---------------------------------------------------------------------------

class ExplicitGraph : public NearNeighborFactory, public ClosestPairFactory {
 public:
  ExplicitGraph(int n, u64 id_base = 0) : n_(n), id_base_(id_base) {
    adj_.assign(n, {});
    for (VertexId v = 0; v < n; ++v) universe_.push_back(v);
  }

  static ExplicitGraph from_digraph(const Digraph& g, u64 id_base = 0) {
    ExplicitGraph eg(g.n, id_base);
    for (EdgeId i = 0; i < EdgeId(g.arcs.size()); ++i)
      eg.add_edge(g.arcs[i].tail, g.arcs[i].head, g.arcs[i].w);
    return eg;
  }

  void add_edge(VertexId u, VertexId v, i64 w) {
    if (u == v) loops_ = true;
    adj_[u].push_back({v, w, id_base_ + edges_++});
  }

  int n() const { return n_; }
  const std::vector<VertexId>& universe() const override { return universe_; }
  bool has_loops() const override { return loops_; }

  std::unique_ptr<NearNeighborView> make_nn(NnParams p) const override;
  std::unique_ptr<ClosestPairView> make_cp(CpParams p) const override;

  struct Arc {
    VertexId head;
    i64 w;
    u64 id;
  };
  const std::vector<std::vector<Arc>>& adjacency() const { return adj_; }

 private:
  int n_;
  u64 id_base_;
  u64 edges_ = 0;
  bool loops_ = false;
  std::vector<std::vector<Arc>> adj_;
  std::vector<VertexId> universe_;
};

class ExplicitNnView final : public NearNeighborView {
 public:
  ExplicitNnView(const ExplicitGraph& g, NnParams params)
      : g_(g), params_(std::move(params)) {
    active_.assign(g.n(), 0);
    price_.assign(g.n(), Weight(0));
    for (VertexId t : params_.targets) {
      active_[t] = 1;
      price_[t] = params_.price(t);
    }
    cursor_.assign(g.n(), 0);
  }

  std::optional<EdgeRef> query(VertexId v) override {
    const auto& out = g_.adjacency()[v];
    Weight tau = params_.threshold(v);
    ++probes_;
    while (cursor_[v] < out.size()) {
      const auto& a = out[cursor_[v]];
      if (active_[a.head]) {
        Weight w = Weight(shift_left(a.w, params_.scale_exp));
        if (w + price_[a.head] < tau)
          return EdgeRef{v, a.head, w, a.id};
      }
      // Disqualified permanently: either the target is gone or the
      // threshold test failed with fixed p and tau.
      ++cursor_[v];
    }
    return std::nullopt;
  }

  void deactivate(VertexId t) override { active_[t] = 0; }
  u64 probes() const override { return probes_; }

 private:
  const ExplicitGraph& g_;
  NnParams params_;
  std::vector<char> active_;
  std::vector<Weight> price_;
  std::vector<size_t> cursor_;
  u64 probes_ = 0;
};

class ExplicitCpView final : public ClosestPairView {
 public:
  ExplicitCpView(const ExplicitGraph& g, CpParams params)
      : g_(g), params_(std::move(params)) {
    in_t_.assign(g.n(), 0);
    beta_.assign(g.n(), Weight(0));
    in_s_.assign(g.n(), 0);
    for (VertexId t : params_.targets) {
      in_t_[t] = 1;
      beta_[t] = params_.beta(t);
    }
    for (VertexId s : params_.sources) push_source(s, params_.alpha(s));
  }

  std::optional<CpMin> minimum() override {
    while (!heap_.empty()) {
      const CpMin& top = heap_.top();
      if (in_t_[top.e.head]) return top;
      heap_.pop();
    }
    return std::nullopt;
  }

  void activate(VertexId s, Weight alpha) override {
    check(!in_s_[s], "cp activation of an active source");
    push_source(s, alpha);
  }

  void extract(VertexId t) override { in_t_[t] = 0; }

 private:
  struct Cmp {
    bool operator()(const CpMin& a, const CpMin& b) const {
      return detail::min_less(b, a);  // min-heap
    }
  };

  void push_source(VertexId s, Weight alpha) {
    in_s_[s] = 1;
    for (const auto& a : g_.adjacency()[s]) {
      if (!in_t_[a.head]) continue;
      Weight w = Weight(shift_left(a.w, params_.scale_exp));
      heap_.push(CpMin{EdgeRef{s, a.head, w, a.id}, w + alpha + beta_[a.head]});
    }
  }

  const ExplicitGraph& g_;
  CpParams params_;
  std::vector<char> in_t_, in_s_;
  std::vector<Weight> beta_;
  std::priority_queue<CpMin, std::vector<CpMin>, Cmp> heap_;
};

inline std::unique_ptr<NearNeighborView> ExplicitGraph::make_nn(
    NnParams p) const {
  return std::make_unique<ExplicitNnView>(*this, std::move(p));
}
inline std::unique_ptr<ClosestPairView> ExplicitGraph::make_cp(
    CpParams p) const {
  return std::make_unique<ExplicitCpView>(*this, std::move(p));
}

// ---------------------------------------------------------------------------
// Single-edge closest pair view: O(1) total update time.
// ---------------------------------------------------------------------------

class SingleEdgeCpView final : public ClosestPairView {
 public:
  SingleEdgeCpView(EdgeRef e, const CpParams& params) : e_(e) {
    for (VertexId s : params.sources)
      if (s == e_.tail) {
        s_active_ = true;
        alpha_ = params.alpha(s);
      }
    for (VertexId t : params.targets)
      if (t == e_.head) {
        t_active_ = true;
        beta_ = params.beta(t);
      }
  }

  std::optional<CpMin> minimum() override {
    if (!s_active_ || !t_active_) return std::nullopt;
    return CpMin{e_, e_.w + alpha_ + beta_};
  }
  void activate(VertexId s, Weight alpha) override {
    if (s == e_.tail) {
      s_active_ = true;
      alpha_ = alpha;
    }
  }
  void extract(VertexId t) override {
    if (t == e_.head) t_active_ = false;
  }

 private:
  EdgeRef e_;
  bool s_active_ = false, t_active_ = false;
  Weight alpha_, beta_;
};

inline std::unique_ptr<ClosestPairView> cp_single_edge(EdgeRef e,
                                                       const CpParams& p) {
  return std::make_unique<SingleEdgeCpView>(e, p);
}

// ---------------------------------------------------------------------------
// Unions. Children own disjoint edge sets over a shared vertex universe;
// state-changing calls are broadcast to the children whose universe contains
// the vertex. Near-neighbor queries advance a per-vertex cursor over the
// owning children, moving on only after a failed sub-query.
// ---------------------------------------------------------------------------

struct NnUnionPart {
  std::unique_ptr<NearNeighborView> view;
  std::vector<VertexId> universe;
};

class NnUnionView final : public NearNeighborView {
 public:
  explicit NnUnionView(std::vector<NnUnionPart> parts)
      : parts_(std::move(parts)) {
    for (int i = 0; i < int(parts_.size()); ++i)
      for (VertexId v : parts_[i].universe) owners_[v].push_back(i);
  }

  std::optional<EdgeRef> query(VertexId v) override {
    auto it = owners_.find(v);
    if (it == owners_.end()) return std::nullopt;
    size_t& z = cursor_[v];
    while (z < it->second.size()) {
      auto r = parts_[it->second[z]].view->query(v);
      ++probes_;
      if (r) return r;
      ++z;  // this child is exhausted for v, permanently
    }
    return std::nullopt;
  }

  void deactivate(VertexId t) override {
    auto it = owners_.find(t);
    if (it == owners_.end()) return;
    for (int i : it->second) parts_[i].view->deactivate(t);
  }

  u64 probes() const override { return probes_; }

 private:
  std::vector<NnUnionPart> parts_;
  std::unordered_map<VertexId, std::vector<int>> owners_;
  std::unordered_map<VertexId, size_t> cursor_;
  u64 probes_ = 0;
};

inline std::unique_ptr<NearNeighborView> nn_union(
    std::vector<NnUnionPart> parts) {
  return std::make_unique<NnUnionView>(std::move(parts));
}

struct CpUnionPart {
  std::unique_ptr<ClosestPairView> view;
  std::vector<VertexId> universe;
};

class CpUnionView final : public ClosestPairView {
 public:
  explicit CpUnionView(std::vector<CpUnionPart> parts)
      : parts_(std::move(parts)) {
    version_.assign(parts_.size(), 0);
    for (int i = 0; i < int(parts_.size()); ++i) {
      for (VertexId v : parts_[i].universe) owners_[v].push_back(i);
      push_current(i);
    }
  }

  std::optional<CpMin> minimum() override {
    while (!heap_.empty()) {
      const Entry& top = heap_.top();
      if (top.version == version_[top.child]) return top.m;
      heap_.pop();
    }
    return std::nullopt;
  }

  void activate(VertexId s, Weight alpha) override {
    auto it = owners_.find(s);
    if (it == owners_.end()) return;
    for (int i : it->second) {
      parts_[i].view->activate(s, alpha);
      ++version_[i];
      push_current(i);
    }
  }

  void extract(VertexId t) override {
    auto it = owners_.find(t);
    if (it == owners_.end()) return;
    for (int i : it->second) {
      parts_[i].view->extract(t);
      ++version_[i];
      push_current(i);
    }
  }

 private:
  struct Entry {
    CpMin m;
    int child;
    u64 version;
  };
  struct Cmp {
    bool operator()(const Entry& a, const Entry& b) const {
      return detail::min_less(b.m, a.m);
    }
  };

  void push_current(int i) {
    if (auto m = parts_[i].view->minimum())
      heap_.push(Entry{*m, i, version_[i]});
  }

  std::vector<CpUnionPart> parts_;
  std::unordered_map<VertexId, std::vector<int>> owners_;
  std::vector<u64> version_;
  std::priority_queue<Entry, std::vector<Entry>, Cmp> heap_;
};

inline std::unique_ptr<ClosestPairView> cp_union(std::vector<CpUnionPart> parts) {
  return std::make_unique<CpUnionView>(std::move(parts));
}

// ---------------------------------------------------------------------------
// Vertex splitting. The split graph has in(v) = 2v, out(v) = 2v+1 and an
// edge out(u) -> in(v) for every non-loop edge uv of the base graph.
// ---------------------------------------------------------------------------

inline VertexId split_in(VertexId v) { return 2 * v; }
inline VertexId split_out(VertexId v) { return 2 * v + 1; }

class SplitNnView final : public NearNeighborView {
 public:
  explicit SplitNnView(std::unique_ptr<NearNeighborView> base)
      : base_(std::move(base)) {}

  std::optional<EdgeRef> query(VertexId v) override {
    if (v % 2 == 0) return std::nullopt;  // in-vertices have no out-edges
    auto r = base_->query(v / 2);
    if (!r) return std::nullopt;
    return EdgeRef{v, split_in(r->head), r->w, r->id};
  }
  void deactivate(VertexId t) override {
    if (t % 2 == 0) base_->deactivate(t / 2);
  }
  u64 probes() const override { return base_->probes(); }

 private:
  std::unique_ptr<NearNeighborView> base_;
};

class SplitNnFactory final : public NearNeighborFactory {
 public:
  explicit SplitNnFactory(const NearNeighborFactory& base) : base_(base) {
    if (base.has_loops())
      throw LoopEdge("vertex splitting drops self-loops; refusing");
    for (VertexId v : base.universe()) {
      universe_.push_back(split_in(v));
      universe_.push_back(split_out(v));
    }
  }

  std::unique_ptr<NearNeighborView> make_nn(NnParams p) const override {
    NnParams q;
    q.scale_exp = p.scale_exp;
    for (VertexId t : p.targets)
      if (t % 2 == 0) q.targets.push_back(t / 2);
    PriceFn price = p.price;
    q.price = [price](VertexId v) { return price(split_in(v)); };
    PriceFn tau = p.threshold;
    q.threshold = [tau](VertexId v) { return tau(split_out(v)); };
    return std::make_unique<SplitNnView>(base_.make_nn(std::move(q)));
  }

  const std::vector<VertexId>& universe() const override { return universe_; }

 private:
  const NearNeighborFactory& base_;
  std::vector<VertexId> universe_;
};

inline std::unique_ptr<NearNeighborFactory> nn_split(
    const NearNeighborFactory& base) {
  return std::make_unique<SplitNnFactory>(base);
}

// Closest pair under splitting: one sub-view per (bit, value) class of the
// base vertex numbering; every non-loop pair lands in some class where the
// two endpoints differ. Sub-views share the base preprocessing.
class SplitCpView final : public ClosestPairView {
 public:
  SplitCpView(const ClosestPairFactory& base, int n_base, CpParams p) {
    int bits = 1;
    while ((1 << bits) < n_base) ++bits;
    for (int b = 0; b < bits; ++b)
      for (int i = 0; i < 2; ++i) {
        CpParams q;
        q.scale_exp = p.scale_exp;
        for (VertexId s : p.sources)
          if (s % 2 == 1 && ((s / 2) >> b & 1) == i)
            q.sources.push_back(s / 2);
        for (VertexId t : p.targets)
          if (t % 2 == 0 && ((t / 2) >> b & 1) == (1 - i))
            q.targets.push_back(t / 2);
        PriceFn alpha = p.alpha;
        q.alpha = [alpha](VertexId v) { return alpha(split_out(v)); };
        PriceFn beta = p.beta;
        q.beta = [beta](VertexId v) { return beta(split_in(v)); };
        children_.push_back({base.make_cp(std::move(q)), b, i});
      }
  }

  std::optional<CpMin> minimum() override {
    std::optional<CpMin> best;
    for (auto& c : children_) {
      auto m = c.view->minimum();
      if (!m) continue;
      CpMin lifted{EdgeRef{split_out(m->e.tail), split_in(m->e.head), m->e.w,
                           m->e.id},
                   m->d};
      if (!best || detail::min_less(lifted, *best)) best = lifted;
    }
    return best;
  }

  void activate(VertexId s, Weight alpha) override {
    check(s % 2 == 1, "split cp activation must be an out-vertex");
    VertexId u = s / 2;
    for (auto& c : children_)
      if ((u >> c.bit & 1) == c.val) c.view->activate(u, alpha);
  }

  void extract(VertexId t) override {
    check(t % 2 == 0, "split cp extraction must be an in-vertex");
    VertexId v = t / 2;
    for (auto& c : children_)
      if ((v >> c.bit & 1) == (1 - c.val)) c.view->extract(v);
  }

 private:
  struct Child {
    std::unique_ptr<ClosestPairView> view;
    int bit, val;
  };
  std::vector<Child> children_;
};

class SplitCpFactory final : public ClosestPairFactory {
 public:
  SplitCpFactory(const ClosestPairFactory& base, int n_base)
      : base_(base), n_base_(n_base) {
    if (base.has_loops())
      throw LoopEdge("vertex splitting drops self-loops; refusing");
    for (VertexId v : base.universe()) {
      universe_.push_back(split_in(v));
      universe_.push_back(split_out(v));
    }
  }

  std::unique_ptr<ClosestPairView> make_cp(CpParams p) const override {
    return std::make_unique<SplitCpView>(base_, n_base_, std::move(p));
  }
  const std::vector<VertexId>& universe() const override { return universe_; }

 private:
  const ClosestPairFactory& base_;
  int n_base_;
  std::vector<VertexId> universe_;
};

inline std::unique_ptr<ClosestPairFactory> cp_split(
    const ClosestPairFactory& base, int n_base) {
  return std::make_unique<SplitCpFactory>(base, n_base);
}

// ---------------------------------------------------------------------------
// Dijkstra on a closest pair view (needs a feasible price function).
// ---------------------------------------------------------------------------

struct DijkstraResult {
  std::vector<Weight> dist;      // true distances; infinite when unreachable
  std::vector<EdgeRef> parent;   // defined where reached and v != source
  std::vector<char> reached;
};

// Computes delta(source, .) over the view's universe. `q` must be feasible
// for the effective edge weights; `edge_shift` is added to every edge's
// reduced weight (the recover-price rounding trick relies on it).
inline DijkstraResult dijkstra_cp(const ClosestPairFactory& f, int n_ids,
                                  VertexId source, const PriceFn& q,
                                  Weight edge_shift = Weight(0),
                                  int scale_exp = 0) {
  DijkstraResult out;
  out.dist.assign(n_ids, Weight::infinity());
  out.parent.assign(n_ids, EdgeRef{});
  out.reached.assign(n_ids, 0);

  CpParams params;
  params.scale_exp = scale_exp;
  params.sources = {source};
  for (VertexId v : f.universe())
    if (v != source) params.targets.push_back(v);
  Weight qs = q(source);
  params.alpha = [&q, qs, source](VertexId v) {
    return v == source ? -qs : Weight(0);
  };
  params.beta = q;
  auto view = f.make_cp(params);

  out.reached[source] = 1;
  out.dist[source] = Weight(0);
  Weight last_red(0);
  std::vector<std::pair<VertexId, Weight>> settled_red;
  while (auto m = view->minimum()) {
    VertexId z = m->e.head;
    Weight red = m->d + edge_shift;
    if (red < last_red)
      throw InfeasiblePrice("negative reduced weight during dijkstra_cp");
    last_red = red;
    out.reached[z] = 1;
    out.dist[z] = red + qs - q(z);  // true distance
    out.parent[z] = m->e;
    view->extract(z);
    view->activate(z, red - q(z));
  }
  return out;
}

}  // namespace planarflow
