#include "cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/report_json.hpp"
#include "triplepoint/triplepoint.hpp"

namespace triplepoint::cli {
namespace {

struct CheckOutcome {
  std::string out;
  std::string err;
  int status = kExitPass;
};

void print_text(std::ostream& os, const FileReport& fr) {
  const ObstructionReport& r = fr.report;
  os << "== " << fr.file << '\n';
  os << "n: " << r.n << "  branch depth: " << r.n - 1 << "  delta: " << format_number(r.delta)
     << "  index: " << format_number(r.delta * r.delta) << '\n';
  os << "p: " << format_number(r.p) << "  q: " << format_number(r.q)
     << "  r: " << format_number(r.r) << '\n';
  if (r.alpha_tie) os << "note: dim alpha_2 = dim alpha_3, order taken from input\n";
  if (r.gamma_tie) os << "note: dim gamma_2 = dim gamma_3, order taken from input\n";
  os << "lambda_trace: " << format_number(r.lambda_trace) << '\n';
  if (r.branch_lambda) {
    os << "branch lambda: " << format_complex(*r.branch_lambda)
       << (r.branch_consistent ? "" : "  (INCONSISTENT with lambda_trace)") << '\n';
  }
  os << "verdicts:\n";
  for (const auto& [name, v] : r.verdicts) {
    os << "  " << std::left << std::setw(20) << name << to_string(v) << '\n';
  }
  os << std::right << "root candidates (k: distance):\n";
  for (const auto& c : r.root_candidates) {
    os << "  k=" << c.k << "  " << format_number(c.distance) << '\n';
  }
  os << "result: " << (r.excluded() ? "excluded" : "not excluded") << '\n';
}

CheckOutcome check_one(const std::string& path, const CliConfig& config) {
  CheckOutcome outcome;
  std::ifstream file(path);
  if (!file) {
    outcome.err = path + ": cannot read file\n";
    outcome.status = kExitUsage;
    return outcome;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  try {
    const GraphPair pair = parse_graph_pair(buffer.str());
    FileReport fr{path, run_battery(pair.principal, pair.dual, config.tol)};
    std::ostringstream os;
    if (config.format == OutputFormat::Json) {
      os << to_json(fr).dump() << '\n';
    } else {
      print_text(os, fr);
    }
    outcome.out = os.str();
    outcome.status = fr.report.excluded() ? kExitObstructed : kExitPass;
  } catch (const Error& e) {
    outcome.err = path + ": " + to_string(e.code()).data() + ": " + e.what() + "\n";
    outcome.status = kExitUsage;
  }
  return outcome;
}

}  // namespace

int cmd_check(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<CheckOutcome> outcomes;
  if (config.parallel) {
    std::vector<std::future<CheckOutcome>> pending;
    for (const auto& path : config.inputs) {
      pending.push_back(std::async(std::launch::async, check_one, path, std::cref(config)));
    }
    for (auto& f : pending) outcomes.push_back(f.get());
  } else {
    for (const auto& path : config.inputs) outcomes.push_back(check_one(path, config));
  }
  int status = kExitPass;
  for (const auto& o : outcomes) {
    out << o.out;
    err << o.err;
    status = std::max(status, o.status);
  }
  return status;
}

int cmd_ratios(int n, double delta, const CliConfig& config, std::ostream& out,
               std::ostream& err) {
  try {
    const QuantumContext ctx = nu_from_delta(delta);
    const auto rows = allowed_ratios(ctx, n);
    if (config.format == OutputFormat::Json) {
      nlohmann::ordered_json j;
      j["n"] = n;
      j["delta"] = round_printed(ctx.delta());
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        j["rows"].push_back({{"k", row.k},
                             {"lambda_trace", round_printed(row.lambda_trace)},
                             {"r", round_printed(row.r)},
                             {"p", round_printed(row.p)},
                             {"q", round_printed(row.q)}});
      }
      out << j.dump() << '\n';
    } else {
      out << "# n = " << n << ", delta = " << format_number(ctx.delta())
          << ", index = " << format_number(ctx.index()) << '\n';
      out << "# " << std::left << std::setw(4) << "k" << std::setw(20) << "lambda_trace"
          << std::setw(20) << "r" << std::setw(20) << "p" << std::setw(20) << "q" << "p-q"
          << '\n';
      for (const auto& row : rows) {
        out << "  " << std::setw(4) << row.k << std::setw(20) << format_number(row.lambda_trace)
            << std::setw(20) << format_number(row.r) << std::setw(20) << format_number(row.p)
            << std::setw(20) << format_number(row.q) << format_number(row.p - row.q) << '\n';
      }
      out << std::right;
    }
    return kExitPass;
  } catch (const Error& e) {
    err << "ratios: " << e.what() << '\n';
    return kExitUsage;
  }
}

namespace {

nlohmann::ordered_json complex_json(Complex z) {
  return {{"re", round_printed(z.real())}, {"im", round_printed(z.imag())}};
}

}  // namespace

int cmd_matrix(int n, double delta, double p, double q, int im_sign, const CliConfig& config,
               std::ostream& out, std::ostream& err) {
  std::optional<BranchMatrix> u;
  QuantumContext ctx = nu_from_delta(2.0);
  try {
    ctx = nu_from_delta(delta);
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
    if (!(q > 0.0) || !(p >= q)) throw Error(ErrorCode::InvalidArgument, "need p >= q > 0");
    u = build_branch_matrix(ctx, n, p, q, im_sign < 0 ? ImSign::Negative : ImSign::Positive);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoUnitaryPhase) {
      err << "no unitary phase: p - q > 1\n";
      return kExitObstructed;
    }
    err << "matrix: " << e.what() << '\n';
    return kExitUsage;
  }

  std::optional<Complex> lambda;
  std::string lambda_error;
  try {
    lambda = extract_lambda(*u);
  } catch (const Error& e) {
    lambda_error = e.what();
  }

  if (config.format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["delta"] = round_printed(ctx.delta());
    j["p"] = round_printed(p);
    j["q"] = round_printed(q);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 1; i <= 3; ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int k = 1; k <= 3; ++k) {
        const auto z = u->entry(i, k);
        row.push_back(z ? complex_json(*z) : nlohmann::ordered_json(nullptr));
      }
      rows.push_back(row);
    }
    j["entries"] = rows;
    j["sigma"] = complex_json(u->sigma());
    j["tau"] = complex_json(u->tau());
    if (lambda) {
      j["lambda"] = complex_json(*lambda);
      j["lambda_trace"] = round_printed(2.0 * lambda->real());
    } else {
      j["lambda"] = nullptr;
      j["lambda_trace"] = nullptr;
    }
    out << j.dump() << '\n';
  } else {
    out << "n: " << n << "  delta: " << format_number(ctx.delta()) << "  p: " << format_number(p)
        << "  q: " << format_number(q) << '\n';
    out << "U =\n";
    for (int i = 1; i <= 3; ++i) {
      out << "  [ ";
      for (int k = 1; k <= 3; ++k) {
        const auto z = u->entry(i, k);
        std::string cell = !z ? "?" : z->imag() == 0.0 ? format_number(z->real()) : format_complex(*z);
        out << std::left << std::setw(34) << cell;
      }
      out << std::right << "]\n";
    }
    out << "sigma: " << format_complex(u->sigma()) << '\n';
    out << "tau: " << format_complex(u->tau()) << '\n';
    if (lambda) {
      const double trace = 2.0 * lambda->real();
      const auto nearest = root_candidates(n, trace).front();
      out << "lambda: " << format_complex(*lambda) << '\n';
      out << "lambda + 1/lambda: " << format_number(trace) << '\n';
      out << "nearest root: k = " << nearest.k << " (distance " << format_number(nearest.distance)
          << (nearest.distance <= config.tol ? ", within tolerance" : ", outside tolerance")
          << ")\n";
    }
  }
  if (!lambda) {
    err << "matrix: " << lambda_error << '\n';
    return kExitUsage;
  }
  return kExitPass;
}

int cmd_qnum(double delta, int max_k, const CliConfig& config, std::ostream& out,
             std::ostream& err) {
  try {
    const QuantumContext ctx = nu_from_delta(delta);
    const auto values = qints(ctx, max_k);
    if (config.format == OutputFormat::Json) {
      nlohmann::ordered_json j;
      j["delta"] = round_printed(ctx.delta());
      j["values"] = nlohmann::ordered_json::array();
      for (double v : values) j["values"].push_back(round_printed(v));
      out << j.dump() << '\n';
    } else {
      for (std::size_t k = 0; k < values.size(); ++k) {
        out << (k ? " " : "") << format_number(values[k]);
      }
      out << '\n';
    }
    return kExitPass;
  } catch (const Error& e) {
    err << "qnum: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triple point obstruction checker for subfactor principal graph pairs"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string format = "text";
  app.add_option("--tol", config.tol, "root-of-unity tolerance on the lambda + 1/lambda scale")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "run the obstruction battery on graph pair files");
  check->add_option("files", config.inputs, "graph pair files")->required();
  check->add_flag("--parallel", config.parallel, "process files concurrently");

  int n = 0;
  double delta = 0.0;
  double index = 0.0;
  auto* ratios = app.add_subcommand("ratios", "tabulate admissible dimension ratios");
  ratios->add_option("--n", n, "depth n (branch at depth n - 1)")->required();
  auto* ratios_delta = ratios->add_option("--delta", delta, "square root of the index");
  auto* ratios_index = ratios->add_option("--index", index, "index (delta squared)");
  ratios_delta->excludes(ratios_index);
  ratios_index->excludes(ratios_delta);

  double p = 0.0;
  double q = 0.0;
  int im_sign = 1;
  auto* matrix = app.add_subcommand("matrix", "print the branch matrix and rotational eigenvalue");
  matrix->add_option("--n", n, "depth n")->required();
  matrix->add_option("--delta", delta, "square root of the index")->required();
  matrix->add_option("--p", p, "dim alpha_2")->required();
  matrix->add_option("--q", q, "dim alpha_3")->required();
  matrix->add_option("--im-sign", im_sign, "sign of Im tau")->check(CLI::IsMember({1, -1}));

  int max_k = 0;
  auto* qnum = app.add_subcommand("qnum", "print quantum integers [0..K]");
  qnum->add_option("--delta", delta, "square root of the index")->required();
  qnum->add_option("--max", max_k, "largest k")->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

  if (check->parsed()) return cmd_check(config, out, err);
  if (ratios->parsed()) {
    if (ratios_delta->count() + ratios_index->count() != 1) {
      err << "ratios: exactly one of --delta or --index is required\n";
      return kExitUsage;
    }
    if (ratios_index->count() != 0) {
      if (!(index >= 4.0)) {
        err << "ratios: index must be at least 4\n";
        return kExitUsage;
      }
      delta = std::sqrt(index);
    }
    return cmd_ratios(n, delta, config, out, err);
  }
  if (matrix->parsed()) return cmd_matrix(n, delta, p, q, im_sign, config, out, err);
  if (qnum->parsed()) return cmd_qnum(delta, max_k, config, out, err);
  return kExitUsage;
}

}  // namespace triplepoint::cli
