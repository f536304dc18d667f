// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "cli/report_json.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"
#include "triplepoint/triplepoint.hpp"

namespace tp = triplepoint;
namespace tt = triplepoint::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

constexpr double kIdentityTol = 1e-9;
constexpr double kIdentityBudget = 0.1;
constexpr double kLambdaTol = 1e-8;
constexpr double kLambdaBudget = 1.0;
constexpr double kAnchorTol = 1e-9;
constexpr int kEquivalenceSamples = 10'000;
constexpr double kBoundaryBand = 1e-6;
constexpr double kEquivalenceBudget = 2.0;
constexpr double kC1Tol = 1e-12;
constexpr double kGapTol = 1e-9;
constexpr double kTraceTol = 1e-8;
constexpr double kNormTol = 1e-10;
constexpr double kDimTol = 1e-9;
constexpr double kDimSumTol = 1e-8;
constexpr int kMinCorpus = 20;
constexpr double kBatteryBudget = 1.0;

const std::vector<int> kEvenN = {4, 6, 8, 10, 12, 14, 16};
const std::vector<double> kGridDelta = {2.05, std::sqrt(5.0), 2.3};

Outcome quantum_identities(double& budget_used) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 50; ++i) {
    const auto ctx = tp::nu_from_delta(2.0 + 0.5 * i / 49.0);
    const auto q = tp::qints(ctx, 22);
    for (int n = 2; n <= 20; ++n) {
      const double square = q[n + 1] * q[n + 1] - q[n] * q[n + 2] - 1.0;
      if (std::abs(square) > kIdentityTol * q[n + 2] * q[n + 2]) {
        out.fail("square identity at delta=" + num(ctx.delta()) + " n=" + std::to_string(n));
      }
      const double rec = q[2] * q[n] - q[n - 1] - q[n + 1];
      if (std::abs(rec) > kIdentityTol * q[n + 1]) {
        out.fail("recurrence at delta=" + num(ctx.delta()) + " n=" + std::to_string(n));
      }
    }
  }
  budget_used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_used >= kIdentityBudget) out.fail("took " + num(budget_used) + " s");
  return out;
}

Outcome lambda_recovery(double& budget_used) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double delta : kGridDelta) {
    const auto ctx = tp::nu_from_delta(delta);
    for (int n : kEvenN) {
      for (const auto& row : tp::allowed_ratios(ctx, n)) {
        const auto u = tp::build_branch_matrix(ctx, n, row.p, row.q);
        const tp::Complex lambda = tp::extract_lambda(u);
        const tp::Complex root = std::polar(1.0, 2.0 * std::numbers::pi * row.k / n);
        const double err = std::min(std::abs(lambda - root), std::abs(lambda - std::conj(root)));
        worst = std::max(worst, err);
        if (err > kLambdaTol) {
          out.fail("n=" + std::to_string(n) + " k=" + std::to_string(row.k) + " err " + num(err));
        }
      }
    }
  }
  budget_used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_used >= kLambdaBudget) out.fail("took " + num(budget_used) + " s");
  if (out.ok) out.detail = "worst " + num(worst);
  return out;
}

Outcome boundary_anchors() {
  Outcome out;
  for (double delta : kGridDelta) {
    const auto ctx = tp::nu_from_delta(delta);
    for (int n : kEvenN) {
      const double sum = tp::qint(ctx, n + 1);
      const tp::Complex one = tp::extract_lambda(
          tp::build_branch_matrix(ctx, n, (sum + 1.0) / 2.0, (sum - 1.0) / 2.0));
      const tp::Complex minus_one =
          tp::extract_lambda(tp::build_branch_matrix(ctx, n, sum / 2.0, sum / 2.0));
      if (std::abs(one - 1.0) > kAnchorTol) out.fail("p-q=1 at n=" + std::to_string(n));
      if (std::abs(minus_one + 1.0) > kAnchorTol) out.fail("p=q at n=" + std::to_string(n));
    }
  }
  return out;
}

struct Sample {
  int n;
  double delta;
  double p;
  double q;
};

std::vector<Sample> equivalence_samples() {
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> half_n(1, 10);
  std::uniform_real_distribution<double> delta_dist(2.0, 2.5);
  std::uniform_real_distribution<double> gap_dist(0.0, 2.0);
  std::vector<Sample> out;
  while (static_cast<int>(out.size()) < kEquivalenceSamples) {
    const int n = 2 * half_n(rng);
    const double delta = delta_dist(rng);
    const double gap = gap_dist(rng);
    if (std::abs(gap - 1.0) < kBoundaryBand) continue;
    const double sum = tp::qint(tp::nu_from_delta(delta), n + 1);
    out.push_back({n, delta, (sum + gap) / 2.0, (sum - gap) / 2.0});
  }
  return out;
}

Outcome triple_single_equivalence(const std::vector<Sample>& samples, double& budget_used) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  int disagreements = 0;
  for (const auto& s : samples) {
    const auto ctx = tp::nu_from_delta(s.delta);
    bool solvable = true;
    try {
      tp::solve_phases(ctx, s.n, s.p, s.q);
    } catch (const tp::Error& e) {
      if (e.code() != tp::ErrorCode::NoUnitaryPhase) throw;
      solvable = false;
    }
    const bool single = s.p - s.q <= 1.0;
    const double trace = tp::rotational_trace(ctx, s.n, s.p, s.q);
    const bool in_range = trace >= -2.0 && trace <= 2.0;
    if (solvable != single || single != in_range) ++disagreements;
  }
  budget_used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (disagreements != 0) out.fail(std::to_string(disagreements) + " disagreements");
  if (budget_used >= kEquivalenceBudget) out.fail("took " + num(budget_used) + " s");
  return out;
}

Outcome branch_invariants(const std::vector<Sample>& samples) {
  Outcome out;
  int checked = 0;
  for (const auto& s : samples) {
    if (s.p - s.q > 1.0) continue;
    const auto ctx = tp::nu_from_delta(s.delta);
    const auto u = tp::build_branch_matrix(ctx, s.n, s.p, s.q);
    const auto image = tp::apply_to_perp_vector(u);
    const double qn1 = tp::qint(ctx, s.n - 1);
    const double qn = tp::qint(ctx, s.n);
    const double qn2 = tp::qint(ctx, s.n + 2);
    if (std::abs(image.c1) > kC1Tol * std::sqrt(qn1 * s.p * s.q)) {
      out.fail("|c1| = " + num(std::abs(image.c1)));
    }
    const double gap = std::norm(u.sigma() - u.tau());
    const double expected = qn * qn2 / (s.p * s.q);
    if (std::abs(gap - expected) > kGapTol * expected) out.fail("|sigma-tau|^2 off");
    const tp::Complex lambda = tp::extract_lambda(u);
    const double trace = tp::rotational_trace(ctx, s.n, s.p, s.q);
    if (std::abs(trace - 2.0 * lambda.real()) > kTraceTol) {
      out.fail("trace " + num(trace) + " vs " + num(2.0 * lambda.real()));
    }
    ++checked;
  }
  if (out.ok) out.detail = std::to_string(checked) + " samples";
  return out;
}

tt::RootedTree path(int m) {
  tt::TreeBuilder b;
  const int root = b.add_vertex();
  b.add_path(root, m - 1);
  return b.rooted_at(root);
}

Outcome pf_oracle() {
  Outcome out;
  for (int m = 2; m <= 12; ++m) {
    const auto g = path(m).graded();
    const double expected = 2.0 * std::cos(std::numbers::pi / (m + 1));
    const double norm = tp::graph_norm(g);
    if (std::abs(norm - expected) > kNormTol) out.fail("norm of path " + std::to_string(m));
    const auto dims = tp::dimension_vector(g, norm);
    for (int d = 0; d < m; ++d) {
      const double want =
          std::sin((d + 1) * std::numbers::pi / (m + 1)) / std::sin(std::numbers::pi / (m + 1));
      if (std::abs(dims.dim({d, 0}) - want) > kDimTol) {
        out.fail("dim at depth " + std::to_string(d) + " of path " + std::to_string(m));
      }
    }
  }
  for (const auto& spec : {tt::h_shape(3, 2, 1, 2), tt::self_dual("E7~long", tt::spoke(3, 1, 3))}) {
    const auto pr = spec.principal.graded();
    const auto du = spec.dual.graded();
    const auto ctx = tp::nu_from_delta(tp::graph_norm(pr));
    const auto data = tp::extract_triple_point(ctx, pr, du);
    const double sum = tp::qint(ctx, data.n + 1);
    if (std::abs(data.p + data.q - sum) > kDimSumTol) out.fail("p+q off for " + spec.name);
  }
  return out;
}

Outcome battery_vs_oracle(double& budget_used) {
  Outcome out;
  const double tol = tp::kDefaultTraceTolerance;
  std::vector<tt::PairSpec> corpus;
  for (auto& spec : tt::candidate_corpus()) {
    if (tt::oracle_verdicts(spec, tol).applicable_pair) corpus.push_back(std::move(spec));
  }
  if (static_cast<int>(corpus.size()) < kMinCorpus) {
    out.fail("corpus has " + std::to_string(corpus.size()) + " pairs");
  }
  const auto start = std::chrono::steady_clock::now();
  for (const auto& spec : corpus) {
    const auto want = tt::oracle_verdicts(spec, tol);
    const auto got = tp::run_battery(spec.principal.graded(), spec.dual.graded(), tol);
    namespace names = tp::test_names;
    if (got.verdict(names::kOcneanuParity) != want.ocneanu ||
        got.verdict(names::kTripleSingle) != want.triple_single ||
        got.verdict(names::kQuadraticTangles) != want.quadratic_tangles ||
        got.verdict(names::kRotational) != want.rotational) {
      out.fail("verdicts differ on " + spec.name);
    }
  }
  budget_used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_used >= kBatteryBudget) out.fail("took " + num(budget_used) + " s");
  if (out.ok) out.detail = std::to_string(corpus.size()) + " pairs";
  return out;
}

int cli(std::vector<std::string> args, std::string& stdout_text) {
  args.insert(args.begin(), "triplepoint");
  std::ostringstream o;
  std::ostringstream e;
  const int code = tp::cli::run(args, o, e);
  stdout_text = o.str();
  return code;
}

Outcome cli_contract() {
  Outcome out;
  const std::string dir = TRIPLEPOINT_FIXTURE_DIR;
  std::string text;
  if (cli({"check", dir + "/pq_equal.tpg"}, text) != 0) out.fail("passing fixture");
  if (cli({"check", dir + "/even_branch.tpg"}, text) != 1) out.fail("even branch fixture");
  if (cli({"check", dir + "/malformed.tpg"}, text) != 2) out.fail("malformed fixture");

  for (const char* name : {"pq_equal.tpg", "even_branch.tpg", "spoke_3_1_4.tpg"}) {
    const std::string file = dir + "/" + name;
    cli({"--format", "json", "check", file}, text);
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto pair = tp::parse_graph_pair(buf.str());
    const auto direct = tp::run_battery(pair.principal, pair.dual);
    const auto parsed = tp::cli::file_report_from_json(nlohmann::ordered_json::parse(text));
    if (!tp::cli::field_identical(parsed.report, tp::cli::rounded(direct))) {
      out.fail(std::string("json round trip on ") + name);
    }
    if (tp::cli::to_json(parsed).dump() + "\n" != text) out.fail(std::string("re-dump of ") + name);
  }

  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"ratios", "--n", "4", "--delta", "2.05"},
        std::vector<std::string>{"ratios", "--n", "4", "--delta", "2.3"},
        std::vector<std::string>{"ratios", "--n", "4", "--index", "5"}}) {
    if (cli(args, text) != 0) {
      out.fail("ratios exit code");
      continue;
    }
    std::istringstream is(text);
    std::vector<double> gaps;
    for (std::string line; std::getline(is, line);) {
      if (line.empty() || line.front() == '#') continue;
      std::istringstream row(line);
      int k;
      double trace, r, p, q;
      row >> k >> trace >> r >> p >> q;
      gaps.push_back(p - q);
    }
    if (gaps.size() != 3) out.fail("ratios printed " + std::to_string(gaps.size()) + " rows");
    for (std::size_t i = 1; i < gaps.size(); ++i) {
      if (!(gaps[i] < gaps[i - 1])) out.fail("p - q not decreasing");
    }
  }
  return out;
}

void report(bool& all, const char* id, const std::string& what, const Outcome& o) {
  std::printf("[%s] %s %s%s%s\n", o.ok ? "PASS" : "FAIL", id, what.c_str(),
              o.detail.empty() ? "" : " : ", o.detail.c_str());
  all = all && o.ok;
}

}  // namespace

int main() {
  bool all = true;
  double secs = 0.0;

  auto r1 = quantum_identities(secs);
  report(all, "AC1", "quantum identities (" + num(secs) + " s)", r1);
  auto r2 = lambda_recovery(secs);
  report(all, "AC2", "lambda round trip (" + num(secs) + " s)", r2);
  report(all, "AC3", "boundary anchors", boundary_anchors());
  const auto samples = equivalence_samples();
  auto r4 = triple_single_equivalence(samples, secs);
  report(all, "AC4", "triple-single equivalence (" + num(secs) + " s)", r4);
  report(all, "AC5", "branch matrix invariants", branch_invariants(samples));
  report(all, "AC6", "Perron-Frobenius oracle", pf_oracle());
  auto r7 = battery_vs_oracle(secs);
  report(all, "AC7", "battery vs oracle (" + num(secs) + " s)", r7);
  report(all, "AC8", "command line contract", cli_contract());
  return all ? 0 : 1;
}
