#include "triplepoint/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "triplepoint/error.hpp"

namespace triplepoint {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidGraph, "invalid graph: " + what);
}

std::string describe(VertexRef v) {
  return "vertex " + std::to_string(v.index) + " at depth " + std::to_string(v.depth);
}

}  // namespace

GradedBigraph GradedBigraph::create(std::vector<int> vertex_counts, std::vector<Edge> edges) {
  if (vertex_counts.empty()) invalid("at least one depth is required");
  if (vertex_counts.front() != 1) invalid("exactly one vertex at depth 0 is required");
  for (std::size_t d = 0; d < vertex_counts.size(); ++d) {
    if (vertex_counts[d] < 1) {
      invalid("depth " + std::to_string(d) + " has no vertices");
    }
  }
  const int depth_count = static_cast<int>(vertex_counts.size());
  for (const Edge& e : edges) {
    if (e.depth < 0 || e.depth + 1 >= depth_count || e.lower < 0 ||
        e.lower >= vertex_counts[e.depth] || e.upper < 0 ||
        e.upper >= vertex_counts[e.depth + 1]) {
      invalid("edge " + std::to_string(e.depth) + ":" + std::to_string(e.lower) + "-" +
              std::to_string(e.upper) + " does not join valid vertices at consecutive depths");
    }
  }
  std::sort(edges.begin(), edges.end());

  GradedBigraph g;
  g.counts_ = std::move(vertex_counts);
  g.edges_ = std::move(edges);
  g.offsets_.assign(g.counts_.size() + 1, 0);
  std::partial_sum(g.counts_.begin(), g.counts_.end(), g.offsets_.begin() + 1);
  g.adjacency_.resize(static_cast<std::size_t>(g.vertex_count()));

  auto add = [&g](VertexRef from, VertexRef to) {
    auto& list = g.adjacency_[static_cast<std::size_t>(g.flat_index(from))];
    auto it = std::find_if(list.begin(), list.end(),
                           [&](const Neighbor& nb) { return nb.vertex == to; });
    if (it == list.end()) {
      list.push_back({to, 1});
    } else {
      ++it->multiplicity;
    }
  };
  for (const Edge& e : g.edges_) {
    add({e.depth, e.lower}, {e.depth + 1, e.upper});
    add({e.depth + 1, e.upper}, {e.depth, e.lower});
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }

  for (int d = 1; d < g.depth_count(); ++d) {
    for (int i = 0; i < g.counts_[d]; ++i) {
      const auto nbrs = g.neighbors({d, i});
      const bool has_down = std::any_of(nbrs.begin(), nbrs.end(),
                                        [d](const Neighbor& nb) { return nb.vertex.depth == d - 1; });
      if (!has_down) invalid(describe({d, i}) + " has no edge to depth " + std::to_string(d - 1));
    }
  }

  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const Neighbor& nb : g.adjacency_[static_cast<std::size_t>(v)]) {
      const int w = g.flat_index(nb.vertex);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != g.vertex_count()) invalid("graph is not connected");
  return g;
}

int GradedBigraph::flat_index(VertexRef v) const {
  if (v.depth < 0 || v.depth >= depth_count() || v.index < 0 || v.index >= counts_[v.depth]) {
    throw Error(ErrorCode::InvalidArgument, "no " + describe(v));
  }
  return offsets_[static_cast<std::size_t>(v.depth)] + v.index;
}

VertexRef GradedBigraph::vertex_at(int flat) const {
  if (flat < 0 || flat >= vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "flat vertex index out of range");
  }
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), flat);
  const int depth = static_cast<int>(it - offsets_.begin()) - 1;
  return {depth, flat - offsets_[static_cast<std::size_t>(depth)]};
}

std::span<const Neighbor> GradedBigraph::neighbors(VertexRef v) const {
  return adjacency_[static_cast<std::size_t>(flat_index(v))];
}

int GradedBigraph::valence(VertexRef v) const {
  int total = 0;
  for (const Neighbor& nb : neighbors(v)) total += nb.multiplicity;
  return total;
}

GradedBigraph graph_from_undirected(int vertex_count,
                                    std::span<const std::pair<int, int>> edges, int root) {
  if (vertex_count < 1 || root < 0 || root >= vertex_count) {
    throw Error(ErrorCode::InvalidArgument, "root must be one of the vertices");
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count || a == b) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoints must be distinct vertices");
    }
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }

  std::vector<int> depth(static_cast<std::size_t>(vertex_count), -1);
  std::vector<int> index(static_cast<std::size_t>(vertex_count), -1);
  std::vector<int> counts;
  std::deque<int> queue{root};
  depth[static_cast<std::size_t>(root)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int d = depth[static_cast<std::size_t>(v)];
    if (static_cast<int>(counts.size()) <= d) counts.push_back(0);
    index[static_cast<std::size_t>(v)] = counts[static_cast<std::size_t>(d)]++;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (depth[static_cast<std::size_t>(w)] < 0) {
        depth[static_cast<std::size_t>(w)] = d + 1;
        queue.push_back(w);
      }
    }
  }
  if (std::any_of(depth.begin(), depth.end(), [](int d) { return d < 0; })) {
    throw Error(ErrorCode::InvalidGraph, "invalid graph: graph is not connected");
  }

  std::vector<Edge> graded;
  graded.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    int lo = a;
    int hi = b;
    if (depth[static_cast<std::size_t>(lo)] > depth[static_cast<std::size_t>(hi)]) std::swap(lo, hi);
    if (depth[static_cast<std::size_t>(hi)] != depth[static_cast<std::size_t>(lo)] + 1) {
      throw Error(ErrorCode::InvalidGraph,
                  "invalid graph: edge " + std::to_string(a) + "-" + std::to_string(b) +
                      " does not join consecutive depths");
    }
    graded.push_back({depth[static_cast<std::size_t>(lo)], index[static_cast<std::size_t>(lo)],
                      index[static_cast<std::size_t>(hi)]});
  }
  return GradedBigraph::create(std::move(counts), std::move(graded));
}

Eigenpair perron_frobenius(const GradedBigraph& g) {
  const int size = g.vertex_count();
  std::vector<std::vector<std::pair<int, double>>> rows(static_cast<std::size_t>(size));
  for (int v = 0; v < size; ++v) {
    for (const Neighbor& nb : g.neighbors(g.vertex_at(v))) {
      rows[static_cast<std::size_t>(v)].emplace_back(g.flat_index(nb.vertex),
                                                     static_cast<double>(nb.multiplicity));
    }
  }
  auto multiply = [&rows](const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double sum = 0.0;
      for (const auto& [j, w] : rows[i]) sum += w * x[static_cast<std::size_t>(j)];
      y[i] = sum;
    }
  };
  auto norm2 = [](const std::vector<double>& x) {
    return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
  };

  // Power iteration on A + I: the bipartite spectrum is symmetric about 0,
  // so the unshifted iteration would oscillate between +delta and -delta.
  Eigenpair out;
  std::vector<double> x(static_cast<std::size_t>(size), 1.0 / std::sqrt(static_cast<double>(size)));
  std::vector<double> y(x.size());
  for (int it = 1; it <= kMaxPowerIterations; ++it) {
    multiply(x, y);
    const double mu = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double res2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - mu * x[i];
      res2 += r * r;
    }
    out.value = mu;
    out.residual = std::sqrt(res2);
    out.iterations = it;
    if (out.residual <= kEigenResidual) {
      out.vector = x;
      return out;
    }
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += x[i];
    const double scale = norm2(y);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[i] / scale;
  }
  throw Error(ErrorCode::NoConvergence, "power iteration did not reach the residual bound");
}

double graph_norm(const GradedBigraph& g) { return perron_frobenius(g).value; }

DimensionAssignment dimension_vector(const GradedBigraph& g, double delta) {
  const Eigenpair top = perron_frobenius(g);
  if (!(std::abs(delta - top.value) <= 1e-9 * std::max(1.0, top.value))) {
    throw Error(ErrorCode::EigenvalueMismatch,
                "delta = " + std::to_string(delta) + " is not the graph norm " +
                    std::to_string(top.value));
  }
  const double root = top.vector.front();
  std::vector<std::vector<double>> dims(static_cast<std::size_t>(g.depth_count()));
  int flat = 0;
  for (int d = 0; d < g.depth_count(); ++d) {
    auto& level = dims[static_cast<std::size_t>(d)];
    level.resize(static_cast<std::size_t>(g.count_at(d)));
    for (double& value : level) value = top.vector[static_cast<std::size_t>(flat++)] / root;
  }
  dims.front().front() = 1.0;
  return DimensionAssignment(delta, std::move(dims));
}

Supertransitivity supertransitivity(const GradedBigraph& g) {
  int s = 0;
  while (s + 1 < g.depth_count() && g.count_at(s + 1) == 1) {
    const auto nbrs = g.neighbors({s + 1, 0});
    if (nbrs.front().vertex.depth != s || nbrs.front().multiplicity != 1) break;
    ++s;
  }
  bool has_branch = false;
  if (s + 1 < g.depth_count()) {
    const auto nbrs = g.neighbors({s, 0});
    const auto up = std::count_if(nbrs.begin(), nbrs.end(),
                                  [s](const Neighbor& nb) { return nb.vertex.depth == s + 1; });
    has_branch = up >= 2;
  }
  return {s, has_branch};
}

namespace {

void require_simple_triple_point(const GradedBigraph& g, const Supertransitivity& st,
                                 const char* which) {
  auto reject = [which](const std::string& why) {
    throw Error(ErrorCode::NotATriplePoint, std::string(which) + " graph: " + why);
  };
  if (!st.has_branch) reject("the initial string never branches");
  if (st.depth == 0) reject("the branch vertex is the root");
  const VertexRef branch{st.depth, 0};
  if (g.valence(branch) != 3) {
    reject("branch vertex has valence " + std::to_string(g.valence(branch)) + ", expected 3");
  }
  for (const Neighbor& nb : g.neighbors(branch)) {
    if (nb.multiplicity != 1) reject("branch vertex has a multiple edge");
  }
  if (g.count_at(st.depth + 1) != 2) {
    reject("expected exactly 2 vertices at depth " + std::to_string(st.depth + 1));
  }
}

struct OrderedPair {
  int larger = 0;
  int smaller = 1;
  bool tie = false;
};

OrderedPair order_by_dimension(std::span<const double> dims, double tol) {
  const double a = dims[0];
  const double b = dims[1];
  OrderedPair out;
  out.tie = std::abs(a - b) <= tol * std::max({1.0, a, b});
  if (!out.tie && b > a) {
    out.larger = 1;
    out.smaller = 0;
  }
  return out;
}

}  // namespace

TriplePointData extract_triple_point(const QuantumContext& ctx, const GradedBigraph& principal,
                                     const GradedBigraph& dual) {
  const Supertransitivity sp = supertransitivity(principal);
  const Supertransitivity sd = supertransitivity(dual);
  if (sp.has_branch && sd.has_branch && sp.depth != sd.depth) {
    throw Error(ErrorCode::SupertransitivityMismatch,
                "principal branches at depth " + std::to_string(sp.depth) +
                    " but dual branches at depth " + std::to_string(sd.depth));
  }
  require_simple_triple_point(principal, sp, "principal");
  require_simple_triple_point(dual, sd, "dual");

  const double tol = ctx.tol();
  const double norm_p = graph_norm(principal);
  const double norm_d = graph_norm(dual);
  const double scale = std::max(1.0, norm_p);
  if (std::abs(norm_p - norm_d) > tol * scale) {
    throw Error(ErrorCode::NormMismatch, "principal norm " + std::to_string(norm_p) +
                                             " differs from dual norm " + std::to_string(norm_d));
  }
  if (std::abs(ctx.delta() - norm_p) > tol * scale) {
    throw Error(ErrorCode::NormMismatch, "context delta " + std::to_string(ctx.delta()) +
                                             " differs from graph norm " + std::to_string(norm_p));
  }

  const DimensionAssignment dims_p = dimension_vector(principal, norm_p);
  const DimensionAssignment dims_d = dimension_vector(dual, norm_d);

  TriplePointData tp;
  tp.n = sp.depth + 1;
  tp.delta = ctx.delta();

  const OrderedPair alpha = order_by_dimension(dims_p.at_depth(tp.n), tol);
  tp.alpha2_index = alpha.larger;
  tp.alpha3_index = alpha.smaller;
  tp.alpha_tie = alpha.tie;
  // On a tie the vertex labels follow input order but p >= q still holds.
  tp.p = std::max(dims_p.dim({tp.n, 0}), dims_p.dim({tp.n, 1}));
  tp.q = std::min(dims_p.dim({tp.n, 0}), dims_p.dim({tp.n, 1}));

  const OrderedPair gamma = order_by_dimension(dims_d.at_depth(tp.n), tol);
  tp.gamma2_index = gamma.larger;
  tp.gamma3_index = gamma.smaller;
  tp.gamma_tie = gamma.tie;
  tp.gamma2_dim = std::max(dims_d.dim({tp.n, 0}), dims_d.dim({tp.n, 1}));
  tp.gamma3_dim = std::min(dims_d.dim({tp.n, 0}), dims_d.dim({tp.n, 1}));
  tp.gamma2_valence = dual.valence({tp.n, gamma.larger});
  tp.gamma3_valence = dual.valence({tp.n, gamma.smaller});
  tp.gamma3_univalent = tp.gamma3_valence == 1;
  tp.gamma2_trivalent = tp.gamma2_valence == 3;
  tp.branch_depth_odd = tp.branch_depth() % 2 == 1;
  return tp;
}

}  // namespace triplepoint
