#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cyclofun/hyperbolic.hpp"
#include "cyclofun/psi.hpp"
#include "cyclofun/report.hpp"
#include "cyclofun/series.hpp"

namespace cyclofun {

/// Thrown for malformed JSON documents or schema violations.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Doubles as "%.17g"; non-finite values become null. Object keys keep
/// insertion order. indent < 0 gives a single line.
std::string dump_json(const OrderedJson& j, int indent = -1);

/// "%.17g"
std::string format_double(double v);

Complex complex_from_json(const OrderedJson& j);

/// {"min_deg": int, "coeffs": [[re, im], ...], "label": string?}
OrderedJson series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const OrderedJson& j);

/// {"coeffs": [[re, im], ...]} ascending degree.
OrderedJson polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const OrderedJson& j);

/// {"kind": "q", "q": [re, im]} or {"kind": "explicit", "weights": [[re, im], ...]}.
/// Explicit weights are the psi-numbers 1_psi, 2_psi, ...
OrderedJson psi_to_json(const PsiSequence& ps);
PsiSequence psi_from_json(const OrderedJson& j);

/// {"n": int, "alpha": [re, im], "branch": int, "components": [series, ...]}
OrderedJson family_to_json(const HyperbolicFamily& fam);

/// JSON array of IdentityReport objects.
OrderedJson reports_to_json(const std::vector<IdentityReport>& reports);

/// identity,n,alpha_re,alpha_im,residual,pass
std::string reports_to_csv(const std::vector<IdentityReport>& reports);

/// Parses text into JSON, rethrowing parser failures as FormatError.
OrderedJson parse_json(const std::string& text);

}  // namespace cyclofun
