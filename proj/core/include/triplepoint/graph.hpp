#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triplepoint/qnum.hpp"

namespace triplepoint {

struct VertexRef {
  int depth = 0;
  int index = 0;

  auto operator<=>(const VertexRef&) const = default;
};

/// One edge between vertex `lower` at `depth` and vertex `upper` at depth + 1.
struct Edge {
  int depth = 0;
  int lower = 0;
  int upper = 0;

  auto operator<=>(const Edge&) const = default;
};

struct Neighbor {
  VertexRef vertex;
  int multiplicity = 0;
};

/// Depth-graded bipartite graph rooted at the unique depth-0 vertex: a
/// candidate principal or dual principal graph. Edges form a multiset and are
/// kept in sorted order.
class GradedBigraph {
 public:
  /// Validates and builds; throws InvalidGraph naming the violated invariant.
  static GradedBigraph create(std::vector<int> vertex_counts, std::vector<Edge> edges);

  int depth_count() const noexcept { return static_cast<int>(counts_.size()); }
  int max_depth() const noexcept { return depth_count() - 1; }
  std::span<const int> vertex_counts() const noexcept { return counts_; }
  int count_at(int depth) const { return counts_.at(static_cast<std::size_t>(depth)); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  int vertex_count() const noexcept { return offsets_.back(); }

  int flat_index(VertexRef v) const;
  VertexRef vertex_at(int flat) const;

  /// Distinct neighbours with edge multiplicities, lower depth first.
  std::span<const Neighbor> neighbors(VertexRef v) const;
  /// Number of incident edges counted with multiplicity.
  int valence(VertexRef v) const;

  bool operator==(const GradedBigraph& other) const {
    return counts_ == other.counts_ && edges_ == other.edges_;
  }

 private:
  GradedBigraph() = default;

  std::vector<int> counts_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Roots an undirected multigraph at `root` and grades it by distance. Every
/// edge must join vertices at consecutive distances. Vertices at each depth
/// are numbered in breadth-first order, visiting neighbours in edge order.
GradedBigraph graph_from_undirected(int vertex_count,
                                    std::span<const std::pair<int, int>> edges,
                                    int root = 0);

struct GraphPair {
  GradedBigraph principal;
  GradedBigraph dual;
};

/// Parses a bare `depths/counts/edges` block.
GradedBigraph parse_graph(std::string_view text);
/// Parses a `[principal]` + `[dual]` graph pair file.
GraphPair parse_graph_pair(std::string_view text);

std::string serialize(const GradedBigraph& g);
std::string serialize(const GraphPair& pair);

/// Top eigenpair of the adjacency matrix by shifted power iteration.
/// `vector` is indexed by flat vertex index, has unit 2-norm and positive
/// entries.
struct Eigenpair {
  double value = 0.0;
  std::vector<double> vector;
  double residual = 0.0;
  int iterations = 0;
};

inline constexpr double kEigenResidual = 1e-12;
inline constexpr int kMaxPowerIterations = 1'000'000;

Eigenpair perron_frobenius(const GradedBigraph& g);

/// Largest adjacency eigenvalue.
double graph_norm(const GradedBigraph& g);

/// Perron-Frobenius dimensions normalised so the root has dimension 1.
class DimensionAssignment {
 public:
  DimensionAssignment(double delta, std::vector<std::vector<double>> dims)
      : delta_(delta), dims_(std::move(dims)) {}

  double delta() const noexcept { return delta_; }
  double dim(VertexRef v) const {
    return dims_.at(static_cast<std::size_t>(v.depth)).at(static_cast<std::size_t>(v.index));
  }
  std::span<const double> at_depth(int depth) const {
    return dims_.at(static_cast<std::size_t>(depth));
  }

 private:
  double delta_;
  std::vector<std::vector<double>> dims_;
};

/// Throws EigenvalueMismatch unless `delta` is the graph norm within 1e-9.
DimensionAssignment dimension_vector(const GradedBigraph& g, double delta);

struct Supertransitivity {
  int depth = 0;
  bool has_branch = false;

  bool operator==(const Supertransitivity&) const = default;
};

/// Length of the initial simple string, and whether it ends in a branch.
Supertransitivity supertransitivity(const GradedBigraph& g);

/// Data at the initial triple point consumed by the obstructions. The
/// branch vertices sit at depth n - 1; alpha_2, alpha_3 are the principal
/// vertices at depth n and gamma_2, gamma_3 the dual ones.
struct TriplePointData {
  int n = 0;
  double delta = 0.0;
  double p = 0.0;  // dim alpha_2
  double q = 0.0;  // dim alpha_3, q <= p
  double gamma2_dim = 0.0;
  double gamma3_dim = 0.0;
  int alpha2_index = 0;
  int alpha3_index = 1;
  int gamma2_index = 0;
  int gamma3_index = 1;
  int gamma2_valence = 0;
  int gamma3_valence = 0;
  bool gamma3_univalent = false;
  bool gamma2_trivalent = false;
  bool branch_depth_odd = false;
  // p == q (resp. the dual dimensions) within tolerance; order fell back to
  // vertex index.
  bool alpha_tie = false;
  bool gamma_tie = false;

  int branch_depth() const noexcept { return n - 1; }
  double r() const noexcept { return p / q; }
  double dual_ratio() const noexcept { return gamma2_dim / gamma3_dim; }
};

TriplePointData extract_triple_point(const QuantumContext& ctx,
                                     const GradedBigraph& principal,
                                     const GradedBigraph& dual);

}  // namespace triplepoint
