#pragma once

// Straight-line reference evaluation of the obstructions. Shares nothing with
// the library beyond the Verdict enum: dimensions come from a dense Eigen
// eigensolve, depths from a local BFS, quantum integers from the closed form,
// and the verdicts from the two formulas written out directly.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <vector>

#include "corpus.hpp"
#include "triplepoint/obstruct.hpp"

namespace triplepoint::testing {

/// (nu^k - nu^-k) / (nu - nu^-1), with the nu = 1 limit k.
inline double closed_form_qint(double delta, int k) {
  if (delta <= 2.0 + 1e-9) return k;
  const double nu = (delta + std::sqrt(delta * delta - 4.0)) / 2.0;
  return (std::pow(nu, k) - std::pow(nu, -k)) / (nu - 1.0 / nu);
}

struct OracleTree {
  double norm = 0.0;
  std::vector<double> dims;  // root-normalised PF vector, by vertex id
  std::vector<int> depth;
  std::vector<int> valence;
  std::vector<std::vector<int>> by_depth;  // BFS order
};

inline OracleTree oracle_tree(const RootedTree& t) {
  const int size = t.vertex_count;
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(size, size);
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(size));
  OracleTree out;
  out.valence.assign(static_cast<std::size_t>(size), 0);
  for (const auto& [a, b] : t.edges) {
    adj(a, b) += 1.0;
    adj(b, a) += 1.0;
    nbrs[static_cast<std::size_t>(a)].push_back(b);
    nbrs[static_cast<std::size_t>(b)].push_back(a);
    ++out.valence[static_cast<std::size_t>(a)];
    ++out.valence[static_cast<std::size_t>(b)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj);
  out.norm = solver.eigenvalues()(size - 1);
  Eigen::VectorXd v = solver.eigenvectors().col(size - 1);
  v /= v(t.root);
  out.dims.assign(v.data(), v.data() + size);

  out.depth.assign(static_cast<std::size_t>(size), -1);
  out.depth[static_cast<std::size_t>(t.root)] = 0;
  std::deque<int> queue{t.root};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const int d = out.depth[static_cast<std::size_t>(u)];
    if (static_cast<int>(out.by_depth.size()) <= d) out.by_depth.emplace_back();
    out.by_depth[static_cast<std::size_t>(d)].push_back(u);
    for (int w : nbrs[static_cast<std::size_t>(u)]) {
      if (out.depth[static_cast<std::size_t>(w)] < 0) {
        out.depth[static_cast<std::size_t>(w)] = d + 1;
        queue.push_back(w);
      }
    }
  }
  return out;
}

/// Depth of the first vertex with more than one child; -1 for a path.
inline int oracle_branch_depth(const OracleTree& t) {
  for (std::size_t d = 0; d + 1 < t.by_depth.size(); ++d) {
    if (t.by_depth[d + 1].size() > 1) return static_cast<int>(d);
  }
  return -1;
}

struct OracleVerdicts {
  bool applicable_pair = false;  // equal norms, delta >= 2, simple triple point
  int n = 0;
  double p = 0.0;
  double q = 0.0;
  Verdict ocneanu = Verdict::Inapplicable;
  Verdict triple_single = Verdict::Inapplicable;
  Verdict quadratic_tangles = Verdict::Inapplicable;
  Verdict rotational = Verdict::Inapplicable;
};

inline OracleVerdicts oracle_verdicts(const PairSpec& spec, double tol) {
  OracleVerdicts out;
  const OracleTree pr = oracle_tree(spec.principal);
  const OracleTree du = oracle_tree(spec.dual);
  const int s = oracle_branch_depth(pr);
  if (s < 1 || s != oracle_branch_depth(du)) return out;
  if (std::abs(pr.norm - du.norm) > 1e-9 || pr.norm < 2.0 - 1e-9) return out;
  for (const OracleTree* t : {&pr, &du}) {
    if (t->by_depth[static_cast<std::size_t>(s) + 1].size() != 2) return out;
    if (t->valence[static_cast<std::size_t>(t->by_depth[static_cast<std::size_t>(s)][0])] != 3) {
      return out;
    }
  }
  out.applicable_pair = true;
  const double delta = std::max(2.0, pr.norm);
  out.n = s + 1;

  const auto& alphas = pr.by_depth[static_cast<std::size_t>(out.n)];
  const double a0 = pr.dims[static_cast<std::size_t>(alphas[0])];
  const double a1 = pr.dims[static_cast<std::size_t>(alphas[1])];
  out.p = std::max(a0, a1);
  out.q = std::min(a0, a1);

  const auto& gammas = du.by_depth[static_cast<std::size_t>(out.n)];
  const double g0 = du.dims[static_cast<std::size_t>(gammas[0])];
  const double g1 = du.dims[static_cast<std::size_t>(gammas[1])];
  const bool tie = std::abs(g0 - g1) <= 1e-9 * std::max({1.0, g0, g1});
  const int gamma3 = (tie || g0 >= g1) ? gammas[1] : gammas[0];
  const int gamma2 = gamma3 == gammas[0] ? gammas[1] : gammas[0];
  const bool univalent = du.valence[static_cast<std::size_t>(gamma3)] == 1;
  const bool trivalent = du.valence[static_cast<std::size_t>(gamma2)] == 3;
  const bool odd = s % 2 == 1;

  out.ocneanu = odd ? Verdict::Pass : Verdict::Fail;
  if (univalent) {
    out.triple_single = out.p - out.q <= 1.0 + tol ? Verdict::Pass : Verdict::Fail;
  }
  if (univalent && odd) {
    const double qn = closed_form_qint(delta, out.n);
    const double qn2 = closed_form_qint(delta, out.n + 2);
    // r + 1/r = (trace + 2) / ([n][n+2]) + 2, using r + 1/r - 2 = (r - 1)^2 / r.
    const double r_minus_one = (out.p - out.q) / out.q;
    const double trace = r_minus_one * r_minus_one / (1.0 + r_minus_one) * qn * qn2 - 2.0;
    bool hit = false;
    for (int k = 0; k <= out.n; ++k) {
      hit = hit || std::abs(trace - 2.0 * std::cos(2.0 * std::numbers::pi * k / out.n)) <= tol;
    }
    out.rotational = hit ? Verdict::Pass : Verdict::Fail;
    if (trivalent) out.quadratic_tangles = out.rotational;
  }
  return out;
}

}  // namespace triplepoint::testing
