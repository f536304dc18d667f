#include "cli/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace triplepoint::cli {

double round_printed(double value) {
  if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kPrintedDigits, value);
  return std::strtod(buf, nullptr);
}

std::string format_number(double value) {
  char buf[64];
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  std::snprintf(buf, sizeof buf, "%.*g", kPrintedDigits, value);
  return buf;
}

std::string format_complex(Complex z) {
  // Components below the printed precision of |z| show as 0.
  const double floor = std::abs(z) * std::pow(10.0, -kPrintedDigits);
  const double re = std::abs(z.real()) <= floor ? 0.0 : z.real();
  const double im = std::abs(z.imag()) <= floor ? 0.0 : z.imag();
  const std::string sign = im < 0.0 ? " - " : " + ";
  return format_number(re) + sign + format_number(std::abs(im)) + "i";
}

namespace {

nlohmann::ordered_json number(double v) { return round_printed(v); }

}  // namespace

nlohmann::ordered_json to_json(const FileReport& fr) {
  const ObstructionReport& r = fr.report;
  nlohmann::ordered_json j;
  j["file"] = fr.file;
  j["n"] = r.n;
  j["delta"] = number(r.delta);
  j["p"] = number(r.p);
  j["q"] = number(r.q);
  j["r"] = number(r.r);
  j["lambda_trace"] = number(r.lambda_trace);
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
  for (const auto& [name, v] : r.verdicts) verdicts[name] = std::string(to_string(v));
  j["verdicts"] = verdicts;
  nlohmann::ordered_json roots = nlohmann::ordered_json::array();
  for (const auto& c : r.root_candidates) roots.push_back({{"k", c.k}, {"distance", number(c.distance)}});
  j["root_candidates"] = roots;
  j["tol"] = number(r.tol);
  j["alpha_tie"] = r.alpha_tie;
  j["gamma_tie"] = r.gamma_tie;
  if (r.branch_lambda) {
    j["branch_lambda"] = {{"re", number(r.branch_lambda->real())},
                          {"im", number(r.branch_lambda->imag())}};
  } else {
    j["branch_lambda"] = nullptr;
  }
  j["branch_consistent"] = r.branch_consistent;
  return j;
}

FileReport file_report_from_json(const nlohmann::ordered_json& j) {
  FileReport fr;
  fr.file = j.at("file").get<std::string>();
  ObstructionReport& r = fr.report;
  r.n = j.at("n").get<int>();
  r.delta = j.at("delta").get<double>();
  r.p = j.at("p").get<double>();
  r.q = j.at("q").get<double>();
  r.r = j.at("r").get<double>();
  r.lambda_trace = j.at("lambda_trace").get<double>();
  // nlohmann::ordered_json objects iterate in key order; restore battery order.
  const auto& verdicts = j.at("verdicts");
  for (const auto name : {test_names::kOcneanuParity, test_names::kTripleSingle,
                          test_names::kQuadraticTangles, test_names::kRotational}) {
    const std::string key(name);
    if (!verdicts.contains(key)) continue;
    const auto v = verdict_from_string(verdicts.at(key).get<std::string>());
    if (!v) throw std::invalid_argument("unknown verdict for " + key);
    r.verdicts.emplace_back(key, *v);
  }
  if (r.verdicts.size() != verdicts.size()) throw std::invalid_argument("unknown test in verdicts");
  for (const auto& c : j.at("root_candidates")) {
    r.root_candidates.push_back({c.at("k").get<int>(), c.at("distance").get<double>()});
  }
  r.tol = j.at("tol").get<double>();
  r.alpha_tie = j.at("alpha_tie").get<bool>();
  r.gamma_tie = j.at("gamma_tie").get<bool>();
  const auto& lambda = j.at("branch_lambda");
  if (!lambda.is_null()) {
    r.branch_lambda = Complex(lambda.at("re").get<double>(), lambda.at("im").get<double>());
  }
  r.branch_consistent = j.at("branch_consistent").get<bool>();
  return fr;
}

ObstructionReport rounded(const ObstructionReport& report) {
  ObstructionReport out = report;
  out.delta = round_printed(out.delta);
  out.p = round_printed(out.p);
  out.q = round_printed(out.q);
  out.r = round_printed(out.r);
  out.lambda_trace = round_printed(out.lambda_trace);
  out.tol = round_printed(out.tol);
  for (auto& c : out.root_candidates) c.distance = round_printed(c.distance);
  if (out.branch_lambda) {
    out.branch_lambda = Complex(round_printed(out.branch_lambda->real()),
                                round_printed(out.branch_lambda->imag()));
  }
  return out;
}

bool field_identical(const ObstructionReport& a, const ObstructionReport& b) {
  return a.n == b.n && a.delta == b.delta && a.p == b.p && a.q == b.q && a.r == b.r &&
         a.verdicts == b.verdicts && a.lambda_trace == b.lambda_trace &&
         a.root_candidates == b.root_candidates && a.tol == b.tol &&
         a.alpha_tie == b.alpha_tie && a.gamma_tie == b.gamma_tie &&
         a.branch_lambda == b.branch_lambda && a.branch_consistent == b.branch_consistent;
}

}  // namespace triplepoint::cli
