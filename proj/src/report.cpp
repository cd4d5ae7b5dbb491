#include "cyclofun/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cyclofun {

namespace {

bool evaluate_pass(double residual, double tolerance, Expectation expect) {
  if (!std::isfinite(residual)) return false;
  return expect == Expectation::holds ? residual <= tolerance : residual > tolerance;
}

bool worse(const IdentityReport& candidate, const IdentityReport& current) {
  if (!std::isfinite(candidate.residual)) return true;
  if (!std::isfinite(current.residual)) return false;
  return candidate.expect == Expectation::holds ? candidate.residual > current.residual
                                                : candidate.residual < current.residual;
}

}  // namespace

IdentityReport make_report(std::string identity, OrderedJson params, double residual, double tolerance,
                           Expectation expect) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = tolerance;
  r.expect = expect;
  if (expect == Expectation::violated) r.params["expect"] = "violation";
  r.pass = evaluate_pass(residual, tolerance, expect);
  return r;
}

void override_tolerance(std::vector<IdentityReport>& reports, double tolerance) {
  for (auto& r : reports) {
    if (r.expect != Expectation::holds) continue;
    r.tolerance = tolerance;
    r.pass = evaluate_pass(r.residual, r.tolerance, r.expect);
  }
}

std::vector<IdentityReport> merge_worst(const std::vector<std::vector<IdentityReport>>& runs) {
  std::vector<IdentityReport> merged;
  std::map<std::string, std::size_t> index;
  std::map<std::string, int> samples;
  for (const auto& run : runs) {
    for (const auto& r : run) {
      ++samples[r.identity];
      auto [it, inserted] = index.emplace(r.identity, merged.size());
      if (inserted) {
        merged.push_back(r);
      } else if (worse(r, merged[it->second])) {
        merged[it->second] = r;
      }
    }
  }
  for (auto& r : merged) r.params["samples"] = samples[r.identity];
  return merged;
}

bool all_pass(const std::vector<IdentityReport>& reports) noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
}

OrderedJson to_json(const IdentityReport& r) {
  OrderedJson j = OrderedJson::object();
  j["identity"] = r.identity;
  j["params"] = r.params;
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

}  // namespace cyclofun
