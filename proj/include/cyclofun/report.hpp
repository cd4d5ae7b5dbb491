#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cyclofun/types.hpp"

namespace cyclofun {

using OrderedJson = nlohmann::ordered_json;

/// [re, im]
inline OrderedJson complex_json(Complex z) { return OrderedJson::array({z.real(), z.imag()}); }

/// Whether a report confirms an identity (residual small) or confirms that an
/// identity breaks (residual large, as for the non-exp circulant group law).
enum class Expectation { holds, violated };

struct IdentityReport {
  std::string identity;
  OrderedJson params = OrderedJson::object();
  double residual = 0.0;
  double tolerance = 0.0;
  Expectation expect = Expectation::holds;
  bool pass = false;
};

/// Builds a report and sets pass: residual <= tolerance for `holds`,
/// residual > tolerance for `violated`. Non-finite residuals never pass.
IdentityReport make_report(std::string identity, OrderedJson params, double residual, double tolerance,
                           Expectation expect = Expectation::holds);

/// Replaces the tolerance of every `holds` report and recomputes pass.
void override_tolerance(std::vector<IdentityReport>& reports, double tolerance);

/// Merges repeated runs of the same suite, keeping the worst residual per
/// identity (largest for `holds`, smallest for `violated`) in first-seen order.
std::vector<IdentityReport> merge_worst(const std::vector<std::vector<IdentityReport>>& runs);

bool all_pass(const std::vector<IdentityReport>& reports) noexcept;

OrderedJson to_json(const IdentityReport& r);

}  // namespace cyclofun
