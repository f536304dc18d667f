#include "triplepoint/obstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "triplepoint/error.hpp"

namespace triplepoint {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Inapplicable: return "Inapplicable";
  }
  return "Unknown";
}

std::optional<Verdict> verdict_from_string(std::string_view s) noexcept {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::Inapplicable}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

Verdict ocneanu_parity(int branch_depth) {
  if (branch_depth < 1) throw Error(ErrorCode::InvalidArgument, "branch depth must be >= 1");
  return branch_depth % 2 == 1 ? Verdict::Pass : Verdict::Fail;
}

Verdict triple_single(const TriplePointData& tp, double tol) {
  if (!tp.gamma3_univalent) return Verdict::Inapplicable;
  return tp.p - tp.q <= 1.0 + tol ? Verdict::Pass : Verdict::Fail;
}

double rotational_trace(const QuantumContext& ctx, int n, double p, double q) {
  const double d = p - q;
  return d * d * qint(ctx, n) * qint(ctx, n + 2) / (p * q) - 2.0;
}

std::vector<RootCandidate> root_candidates(int n, double lambda_trace) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  std::vector<RootCandidate> out;
  for (int k = 0; k <= n / 2; ++k) {
    const double root_trace = 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
    out.push_back({k, std::abs(lambda_trace - root_trace)});
  }
  std::stable_sort(out.begin(), out.end(), [](const RootCandidate& a, const RootCandidate& b) {
    return a.distance < b.distance;
  });
  return out;
}

namespace {

Verdict trace_verdict(double trace, const std::vector<RootCandidate>& candidates, double tol) {
  if (trace < -2.0 - tol || trace > 2.0 + tol) return Verdict::Fail;
  return candidates.front().distance <= tol ? Verdict::Pass : Verdict::Fail;
}

}  // namespace

RotationalResult rotational_test(const QuantumContext& ctx, const TriplePointData& tp,
                                 double tol) {
  RotationalResult out;
  out.lambda_trace = rotational_trace(ctx, tp.n, tp.p, tp.q);
  out.root_candidates = root_candidates(tp.n, out.lambda_trace);
  if (!tp.gamma3_univalent || !tp.branch_depth_odd) {
    out.verdict = Verdict::Inapplicable;
    return out;
  }
  out.verdict = trace_verdict(out.lambda_trace, out.root_candidates, tol);
  return out;
}

Verdict qt_test(const QuantumContext& ctx, const TriplePointData& tp, double tol) {
  if (!tp.gamma3_univalent || !tp.gamma2_trivalent) return Verdict::Inapplicable;
  return rotational_test(ctx, tp, tol).verdict;
}

std::vector<RatioRow> allowed_ratios(const QuantumContext& ctx, int n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "n must be even and at least 2");
  }
  const double sum = qint(ctx, n + 1);
  const double product = qint(ctx, n) * qint(ctx, n + 2);
  std::vector<RatioRow> rows;
  for (int k = 0; k <= n / 2; ++k) {
    RatioRow row;
    row.k = k;
    row.lambda_trace = 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
    // r + 1/r = 2 + x; r - 1 is formed directly to keep precision when x is tiny.
    const double x = std::max(0.0, row.lambda_trace + 2.0) / product;
    const double r_minus_one = x / 2.0 + std::sqrt(x * (x + 4.0)) / 2.0;
    row.r = 1.0 + r_minus_one;
    row.q = sum / (2.0 + r_minus_one);
    row.p = sum - row.q;
    rows.push_back(row);
  }
  return rows;
}

Verdict ObstructionReport::verdict(std::string_view test) const {
  for (const auto& [name, v] : verdicts) {
    if (name == test) return v;
  }
  throw Error(ErrorCode::InvalidArgument, "no verdict for test " + std::string(test));
}

bool ObstructionReport::excluded() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const auto& entry) { return entry.second == Verdict::Fail; });
}

ObstructionReport run_battery(const QuantumContext& ctx, const GradedBigraph& principal,
                              const GradedBigraph& dual, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const TriplePointData tp = extract_triple_point(ctx, principal, dual);

  ObstructionReport report;
  report.n = tp.n;
  report.delta = ctx.delta();
  report.p = tp.p;
  report.q = tp.q;
  report.r = tp.r();
  report.tol = tol;
  report.alpha_tie = tp.alpha_tie;
  report.gamma_tie = tp.gamma_tie;

  Verdict ts = triple_single(tp, tol);
  const RotationalResult rot = rotational_test(ctx, tp, tol);
  report.lambda_trace = rot.lambda_trace;
  report.root_candidates = rot.root_candidates;

  if (tp.gamma3_univalent) {
    double p = tp.p;
    double q = tp.q;
    if (p - q > 1.0 && p - q <= 1.0 + tol) {
      // Within the triple-single tolerance of the boundary: evaluate the
      // branch matrix on the boundary pair with the same sum.
      const double sum = p + q;
      p = (sum + 1.0) / 2.0;
      q = (sum - 1.0) / 2.0;
    }
    try {
      const BranchMatrix u = build_branch_matrix(ctx, tp.n, p, q);
      const Complex lambda = extract_lambda(u);
      report.branch_lambda = lambda;
      const double clamped = std::clamp(rot.lambda_trace, -2.0, 2.0);
      report.branch_consistent = std::abs(2.0 * lambda.real() - clamped) <= tol;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoUnitaryPhase) {
        ts = Verdict::Fail;
      } else if (e.code() == ErrorCode::DimensionSumMismatch) {
        report.branch_consistent = false;
      } else {
        throw;
      }
    }
  }

  report.verdicts = {
      {std::string(test_names::kOcneanuParity), ocneanu_parity(tp.branch_depth())},
      {std::string(test_names::kTripleSingle), ts},
      {std::string(test_names::kQuadraticTangles), qt_test(ctx, tp, tol)},
      {std::string(test_names::kRotational), rot.verdict},
  };
  return report;
}

ObstructionReport run_battery(const GradedBigraph& principal, const GradedBigraph& dual,
                              double tol) {
  const QuantumContext ctx = nu_from_delta(graph_norm(principal));
  return run_battery(ctx, principal, dual, tol);
}

}  // namespace triplepoint
