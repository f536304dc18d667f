#pragma once

#include <vector>

namespace triplepoint {

inline constexpr double kDefaultTolerance = 1e-9;

/// Index parameter of a subfactor: delta = [2], index = delta^2, and the
/// number nu >= 1 with nu + 1/nu = delta.
class QuantumContext {
 public:
  double delta() const noexcept { return delta_; }
  double nu() const noexcept { return nu_; }
  double tol() const noexcept { return tol_; }
  double index() const noexcept { return delta_ * delta_; }

  QuantumContext with_tol(double tol) const;

 private:
  friend QuantumContext nu_from_delta(double delta, double tol);
  QuantumContext(double delta, double nu, double tol) : delta_(delta), nu_(nu), tol_(tol) {}

  double delta_;
  double nu_;
  double tol_;
};

/// Builds a context from delta. Throws UnsupportedIndex for delta < 2;
/// values in [2 - tol, 2) are treated as 2 so that numerically computed
/// graph norms of index-4 graphs are accepted.
QuantumContext nu_from_delta(double delta, double tol = kDefaultTolerance);

/// Context from the index delta^2 (>= 4).
QuantumContext from_index(double index, double tol = kDefaultTolerance);

/// Quantum integer [k] via [k+1] = [2][k] - [k-1], [0] = 0, [1] = 1.
double qint(const QuantumContext& ctx, int k);

/// [0], [1], ..., [max_k].
std::vector<double> qints(const QuantumContext& ctx, int max_k);

}  // namespace triplepoint
