#include "cyclofun/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cyclofun {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void emit(std::ostringstream& os, const OrderedJson& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case OrderedJson::value_t::object: {
      if (j.empty()) { os << "{}"; return; }
      os << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',';
        first = false;
        newline(depth + 1);
        os << OrderedJson(key).dump() << (pretty ? ": " : ":");
        emit(os, value, indent, depth + 1);
      }
      newline(depth);
      os << '}';
      return;
    }
    case OrderedJson::value_t::array: {
      if (j.empty()) { os << "[]"; return; }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const OrderedJson& e) { return e.is_primitive(); });
      os << '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) os << (flat && pretty ? ", " : ",");
        first = false;
        if (!flat) newline(depth + 1);
        emit(os, value, indent, depth + 1);
      }
      if (!flat) newline(depth);
      os << ']';
      return;
    }
    case OrderedJson::value_t::number_float: {
      const double v = j.get<double>();
      os << (std::isfinite(v) ? format_double(v) : "null");
      return;
    }
    default:
      os << j.dump();
      return;
  }
}

const OrderedJson& require(const OrderedJson& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<Complex> complex_array(const OrderedJson& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

}  // namespace

std::string dump_json(const OrderedJson& j, int indent) {
  std::ostringstream os;
  emit(os, j, indent, 0);
  return os.str();
}

Complex complex_from_json(const OrderedJson& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("complex value must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

OrderedJson series_to_json(const TruncatedSeries& s) {
  OrderedJson j = OrderedJson::object();
  j["min_deg"] = s.min_deg();
  OrderedJson coeffs = OrderedJson::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(complex_json(c));
  j["coeffs"] = std::move(coeffs);
  if (!s.label().empty()) j["label"] = s.label();
  return j;
}

TruncatedSeries series_from_json(const OrderedJson& j) {
  const auto& min_deg = require(j, "min_deg");
  if (!min_deg.is_number_integer()) throw FormatError("min_deg must be an integer");
  auto coeffs = complex_array(require(j, "coeffs"), "coeffs");
  std::string label;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw FormatError("label must be a string");
    label = j.at("label").get<std::string>();
  }
  try {
    return TruncatedSeries(min_deg.get<int>(), std::move(coeffs), EvalDomain{}, std::move(label));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

OrderedJson polynomial_to_json(const Polynomial& p) {
  OrderedJson coeffs = OrderedJson::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(complex_json(c));
  OrderedJson j = OrderedJson::object();
  j["coeffs"] = std::move(coeffs);
  return j;
}

Polynomial polynomial_from_json(const OrderedJson& j) {
  auto coeffs = complex_array(require(j, "coeffs"), "coeffs");
  if (coeffs.empty()) throw FormatError("polynomial needs at least one coefficient");
  try {
    return Polynomial(std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

OrderedJson psi_to_json(const PsiSequence& ps) {
  OrderedJson j = OrderedJson::object();
  if (ps.kind() == PsiSequence::Kind::q_deformed) {
    j["kind"] = "q";
    j["q"] = complex_json(*ps.q());
    return j;
  }
  j["kind"] = "explicit";
  OrderedJson weights = OrderedJson::array();
  for (int n = 1; n <= ps.cap(); ++n) weights.push_back(complex_json(ps.number(n)));
  j["weights"] = std::move(weights);
  return j;
}

PsiSequence psi_from_json(const OrderedJson& j) {
  const auto& kind = require(j, "kind");
  if (!kind.is_string()) throw FormatError("kind must be a string");
  try {
    if (kind == "q") return PsiSequence::q_deformed(complex_from_json(require(j, "q")));
    if (kind == "explicit") return PsiSequence::explicit_numbers(complex_array(require(j, "weights"), "weights"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown psi kind \"" + kind.get<std::string>() + "\"");
}

OrderedJson family_to_json(const HyperbolicFamily& fam) {
  OrderedJson j = OrderedJson::object();
  j["n"] = fam.order();
  j["alpha"] = complex_json(fam.root().alpha);
  j["branch"] = fam.root().branch;
  OrderedJson comps = OrderedJson::array();
  for (const auto& c : fam.components()) comps.push_back(series_to_json(c));
  j["components"] = std::move(comps);
  return j;
}

OrderedJson reports_to_json(const std::vector<IdentityReport>& reports) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::string reports_to_csv(const std::vector<IdentityReport>& reports) {
  std::ostringstream os;
  os << "identity,n,alpha_re,alpha_im,residual,pass\n";
  for (const auto& r : reports) {
    const auto n = r.params.contains("n") ? r.params.at("n").dump() : std::string{};
    std::string re, im;
    if (r.params.contains("alpha")) {
      const Complex a = complex_from_json(r.params.at("alpha"));
      re = format_double(a.real());
      im = format_double(a.imag());
    }
    os << r.identity << ',' << n << ',' << re << ',' << im << ','
       << (std::isfinite(r.residual) ? format_double(r.residual) : "nan") << ',' << (r.pass ? "true" : "false")
       << '\n';
  }
  return os.str();
}

OrderedJson parse_json(const std::string& text) {
  try {
    return OrderedJson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace cyclofun
