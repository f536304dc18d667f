#include "triplepoint/qnum.hpp"

#include <cmath>
#include <string>

#include "triplepoint/error.hpp"

namespace triplepoint {

QuantumContext QuantumContext::with_tol(double tol) const {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  return QuantumContext(delta_, nu_, tol);
}

QuantumContext nu_from_delta(double delta, double tol) {
  if (!std::isfinite(delta)) throw Error(ErrorCode::InvalidArgument, "delta must be finite");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (delta < 2.0 - tol) {
    throw Error(ErrorCode::UnsupportedIndex,
                "delta = " + std::to_string(delta) + " is below 2 (index < 4)");
  }
  if (delta < 2.0) delta = 2.0;
  const double nu = (delta + std::sqrt(delta * delta - 4.0)) / 2.0;
  return QuantumContext(delta, nu, tol);
}

QuantumContext from_index(double index, double tol) {
  if (!std::isfinite(index) || index < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "index must be finite and non-negative");
  }
  return nu_from_delta(std::sqrt(index), tol);
}

double qint(const QuantumContext& ctx, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "quantum integer index must be >= 0");
  if (k == 0) return 0.0;
  double prev = 0.0;
  double cur = 1.0;
  for (int i = 1; i < k; ++i) {
    const double next = ctx.delta() * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> qints(const QuantumContext& ctx, int max_k) {
  if (max_k < 0) throw Error(ErrorCode::InvalidArgument, "max_k must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(max_k) + 1, 0.0);
  if (max_k >= 1) out[1] = 1.0;
  for (int k = 2; k <= max_k; ++k) {
    out[k] = ctx.delta() * out[k - 1] - out[k - 2];
  }
  return out;
}

}  // namespace triplepoint
