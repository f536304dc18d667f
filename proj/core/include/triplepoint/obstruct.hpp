#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triplepoint/branch.hpp"
#include "triplepoint/graph.hpp"
#include "triplepoint/qnum.hpp"

namespace triplepoint {

enum class Verdict { Pass, Fail, Inapplicable };

std::string_view to_string(Verdict v) noexcept;
std::optional<Verdict> verdict_from_string(std::string_view s) noexcept;

/// Root-of-unity distance tolerance on the lambda + 1/lambda scale.
inline constexpr double kDefaultTraceTolerance = 1e-6;

namespace test_names {
inline constexpr std::string_view kOcneanuParity = "ocneanu_parity";
inline constexpr std::string_view kTripleSingle = "triple_single";
inline constexpr std::string_view kQuadraticTangles = "quadratic_tangles";
inline constexpr std::string_view kRotational = "rotational";
}  // namespace test_names

/// Distance from lambda + 1/lambda to 2cos(2 pi k / n).
struct RootCandidate {
  int k = 0;
  double distance = 0.0;

  bool operator==(const RootCandidate&) const = default;
};

/// Index >= 4 forces the initial triple point to odd depth.
Verdict ocneanu_parity(int branch_depth);

/// dim alpha_2 - dim alpha_3 <= 1 whenever gamma_3 is univalent.
Verdict triple_single(const TriplePointData& tp, double tol);

/// lambda + 1/lambda = (p - q)^2 [n][n+2] / (pq) - 2, i.e. the identity
/// r + 1/r = (lambda + 1/lambda + 2) / ([n][n+2]) + 2 solved for the trace.
double rotational_trace(const QuantumContext& ctx, int n, double p, double q);

/// Distances to 2cos(2 pi k / n) for k = 0 .. n/2, nearest first.
std::vector<RootCandidate> root_candidates(int n, double lambda_trace);

struct RotationalResult {
  Verdict verdict = Verdict::Inapplicable;
  double lambda_trace = 0.0;
  std::vector<RootCandidate> root_candidates;
};

/// Needs gamma_3 univalent and odd branch depth; the trace and candidates are
/// filled in even when the test is inapplicable.
RotationalResult rotational_test(const QuantumContext& ctx, const TriplePointData& tp, double tol);

/// Same identity under the older hypotheses (gamma_3 univalent and gamma_2
/// trivalent).
Verdict qt_test(const QuantumContext& ctx, const TriplePointData& tp, double tol);

struct RatioRow {
  int k = 0;
  double lambda_trace = 0.0;
  double r = 1.0;
  double p = 0.0;
  double q = 0.0;
};

/// For each k in 0..n/2, the dimensions (p, q) with p + q = [n+1] whose
/// ratio is admissible for lambda = exp(2 pi i k / n). n must be even.
std::vector<RatioRow> allowed_ratios(const QuantumContext& ctx, int n);

struct ObstructionReport {
  int n = 0;
  double delta = 0.0;
  double p = 0.0;
  double q = 0.0;
  double r = 1.0;
  std::vector<std::pair<std::string, Verdict>> verdicts;
  double lambda_trace = 0.0;
  std::vector<RootCandidate> root_candidates;
  double tol = kDefaultTraceTolerance;
  bool alpha_tie = false;
  bool gamma_tie = false;
  // Eigenvalue read off the branch matrix; empty unless gamma_3 is univalent
  // and the phases exist.
  std::optional<Complex> branch_lambda;
  bool branch_consistent = true;

  Verdict verdict(std::string_view test) const;
  bool excluded() const;
};

/// Runs every test; nothing short-circuits. ctx.delta() must match the graph
/// norm.
ObstructionReport run_battery(const QuantumContext& ctx, const GradedBigraph& principal,
                              const GradedBigraph& dual, double tol = kDefaultTraceTolerance);

/// Builds the context from the principal graph norm.
ObstructionReport run_battery(const GradedBigraph& principal, const GradedBigraph& dual,
                              double tol = kDefaultTraceTolerance);

}  // namespace triplepoint
