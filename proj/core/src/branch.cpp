#include "triplepoint/branch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "triplepoint/error.hpp"

namespace triplepoint {

Phases solve_phases(const QuantumContext& ctx, int n, double p, double q, ImSign im_sign) {
  if (!(q > 0.0) || !(p >= q) || !std::isfinite(p)) {
    throw Error(ErrorCode::InvalidArgument, "phases need p >= q > 0");
  }
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");

  double re_tau = ((p - q) * (p + q) - 1.0) / (2.0 * q);
  if (std::abs(re_tau) > 1.0 + ctx.tol()) {
    throw Error(ErrorCode::NoUnitaryPhase,
                "no unitary phase: p - q > 1 (Re tau = " + std::to_string(re_tau) + ")");
  }
  if (std::abs(re_tau) >= 1.0 - ctx.tol()) re_tau = std::copysign(1.0, re_tau);

  const double im_tau = static_cast<double>(static_cast<int>(im_sign)) *
                        std::sqrt(std::max(0.0, (1.0 - re_tau) * (1.0 + re_tau)));
  const Complex tau(re_tau, im_tau);
  const Complex sigma = -(1.0 + tau * q) / p;
  return {sigma, tau};
}

BranchMatrix build_branch_matrix(const QuantumContext& ctx, int n, double p, double q,
                                 ImSign im_sign) {
  BranchMatrix u(ctx);
  u.n_ = n;
  u.p_ = p;
  u.q_ = q;
  u.im_sign_ = im_sign;
  u.phases_ = solve_phases(ctx, n, p, q, im_sign);

  const double qn_minus = qint(ctx, n - 1);
  const double qn = qint(ctx, n);
  const double qn_plus2 = qint(ctx, n + 2);
  const double q2 = qint(ctx, 2);
  if (!(qn_minus > 0.0 && qn > 0.0 && qn_plus2 > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "quantum integers up to [n+2] must be positive");
  }

  auto& e = u.entries_;
  e[0] = Complex(1.0 / qn);
  e[1] = Complex(std::sqrt(qn_minus * p));
  e[2] = Complex(std::sqrt(qn_minus * q));
  e[3] = Complex(std::sqrt(qn_minus / (q2 * qn)));
  e[4] = u.phases_.sigma * std::sqrt(p / (q2 * qn));
  e[5] = u.phases_.tau * std::sqrt(q / (q2 * qn));
  e[6] = Complex(std::sqrt(qn_minus * qn_plus2 / (q2 * qn * qn)));
  return u;
}

std::optional<Complex> BranchMatrix::entry(int row, int col) const {
  if (row < 1 || row > 3 || col < 1 || col > 3) {
    throw Error(ErrorCode::InvalidArgument, "branch matrix entries are 1-based within 3x3");
  }
  return entries_[static_cast<std::size_t>((row - 1) * 3 + (col - 1))];
}

bool BranchMatrix::is_diagrammatic_gauge() const {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& z : {entry(1, k), entry(k, 1)}) {
      if (!z || z->imag() != 0.0 || !(z->real() > 0.0)) return false;
    }
  }
  return true;
}

PerpImage apply_to_perp_vector(const BranchMatrix& u) {
  const double sq = std::sqrt(u.q());
  const double sp = std::sqrt(u.p());
  PerpImage out;
  out.c1 = *u.entry(1, 2) * sq - *u.entry(1, 3) * sp;
  out.c2 = *u.entry(2, 2) * sq - *u.entry(2, 3) * sp;
  return out;
}

Complex extract_lambda(const BranchMatrix& u) {
  const QuantumContext& ctx = u.context();
  const double expected = qint(ctx, u.n() + 1);
  if (std::abs(u.p() + u.q() - expected) > ctx.tol() * std::max(1.0, expected)) {
    throw Error(ErrorCode::DimensionSumMismatch,
                "p + q = " + std::to_string(u.p() + u.q()) + " but [n+1] = " +
                    std::to_string(expected));
  }
  const Complex c2 = apply_to_perp_vector(u).c2;
  return c2 * c2 * (qint(ctx, 2) / qint(ctx, u.n() + 2));
}

}  // namespace triplepoint
