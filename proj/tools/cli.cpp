#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cyclofun/circulant.hpp"
#include "cyclofun/cyclic.hpp"
#include "cyclofun/hyperbolic.hpp"
#include "cyclofun/json_io.hpp"
#include "cyclofun/psi.hpp"
#include "cyclofun/suites.hpp"

namespace cyclofun::cli {

namespace {

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) throw std::invalid_argument("not a number: \"" + text + "\"");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(trim(item));
  return parts;
}

struct Options {
  int n = 3;
  std::string alpha = "1";
  int branch = 0;
  std::string q = "0.5";
  int truncation = kDefaultTruncation;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  int samples = 8;
  std::string format;
  std::string builtin;
  std::string suite = "all";
  std::string input;
  std::string out;
  // eval
  int s = 0;
  std::string z = "0";
  std::string method = "series";
  // det
  std::string components;
};

void add_common(CLI::App* cmd, Options& o, const std::string& default_format) {
  cmd->add_option("--n", o.n, "cyclic order n >= 2")->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "alpha as re, re+imi or re,im")->capture_default_str();
  cmd->add_option("--branch", o.branch, "branch of the n-th root of alpha")->capture_default_str();
  cmd->add_option("--q", o.q, "deformation parameter q != 1")->capture_default_str();
  cmd->add_option("--trunc", o.truncation, "truncation order N >= n")->capture_default_str();
  cmd->add_option("--tol", o.tol, "tolerance override")->envname("CYCLOFUN_TOL")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "json | csv | text (default " + default_format + ")")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out, "write output to this file instead of stdout");
}

struct Resolved {
  CyclicContext ctx;
  AlphaRoot root;
};

Resolved resolve(const Options& o) {
  if (o.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (o.truncation < o.n) throw std::invalid_argument("--trunc must be at least n");
  return {CyclicContext(o.n), alpha_root(parse_complex(o.alpha), o.n, o.branch)};
}

Complex resolve_q(const Options& o) {
  const Complex q = parse_complex(o.q);
  if (q == Complex{1.0, 0.0}) throw std::invalid_argument("--q must differ from 1");
  return q;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string pair_text(Complex z) { return format_double(z.real()) + " " + format_double(z.imag()); }

TruncatedSeries builtin_series(const std::string& name, const Options& o) {
  if (name == "exp") return series_exp(o.truncation);
  if (name == "geometric") return series_geometric(o.truncation);
  if (name == "expq") return series_exp_psi(PsiSequence::q_deformed(resolve_q(o)), o.truncation);
  throw std::invalid_argument("unknown builtin \"" + name + "\"");
}

std::string cmd_decompose(const Options& o) {
  const auto [ctx, root] = resolve(o);
  if (o.builtin.empty() == o.input.empty()) throw std::invalid_argument("decompose needs exactly one of --builtin, --input");
  const TruncatedSeries s = o.builtin.empty() ? series_from_json(parse_json(read_file(o.input))) : builtin_series(o.builtin, o);

  std::vector<TruncatedSeries> comps;
  for (int k = 0; k < o.n; ++k) comps.push_back(project_series(s, ctx, k, root).with_label("component_" + std::to_string(k)));

  // sum_k r^k Pi_k s = s(r z); at alpha = 1 this is plain reconstruction.
  TruncatedSeries sum = series_scalar_mul(comps[0], 0.0);
  for (int k = 0; k < o.n; ++k) sum = series_add(sum, series_scalar_mul(comps[static_cast<std::size_t>(k)], ipow(root.root, k)));
  const double tol = o.tol.value_or(1e-12);
  const double residual = max_coeff_residual(sum, scale_argument(s, root.root));
  if (!(residual <= tol)) {
    throw VerificationFailure("reconstruction residual " + format_double(residual) + " exceeds " + format_double(tol));
  }

  if (o.format == "csv") {
    std::ostringstream os;
    os << "component,degree,re,im\n";
    for (int k = 0; k < o.n; ++k) {
      const auto& c = comps[static_cast<std::size_t>(k)];
      for (int d = c.min_deg(); d <= c.max_deg(); ++d) {
        os << k << ',' << d << ',' << format_double(c.coeff(d).real()) << ',' << format_double(c.coeff(d).imag()) << '\n';
      }
    }
    return os.str();
  }
  OrderedJson j = OrderedJson::object();
  j["n"] = o.n;
  j["alpha"] = complex_json(root.alpha);
  j["branch"] = root.branch;
  j["reconstruction_residual"] = residual;
  OrderedJson arr = OrderedJson::array();
  for (const auto& c : comps) arr.push_back(series_to_json(c));
  j["components"] = std::move(arr);
  return dump_json(j, 2) + "\n";
}

std::string cmd_eval(const Options& o, std::ostream& err) {
  const auto [ctx, root] = resolve(o);
  const std::string base = o.builtin.empty() ? "exp" : o.builtin;
  std::optional<HyperbolicFamily> fam;
  if (base == "exp") {
    fam.emplace(build_family(o.n, root, o.truncation));
  } else if (base == "expq") {
    fam.emplace(build_psi_hyperbolic(PsiSequence::q_deformed(resolve_q(o)), ctx, root, o.truncation));
  } else {
    throw std::invalid_argument("eval supports --builtin exp or expq");
  }
  const Complex z = parse_complex(o.z);
  if (o.method != "series" && o.method != "closed") throw std::invalid_argument("--method must be series or closed");
  const EvalMethod method = o.method == "series" ? EvalMethod::series : EvalMethod::closed;
  const Complex value = h_eval(*fam, o.s, z, method);

  std::optional<double> cross;
  if (root.alpha != Complex{}) {
    const Complex other = h_eval(*fam, o.s, z, method == EvalMethod::series ? EvalMethod::closed : EvalMethod::series);
    cross = mixed_residual(value, other);
    const double tol = o.tol.value_or(1e-10);
    if (*cross > tol) err << "warning: series and closed paths differ by " << format_double(*cross) << "\n";
  }

  if (o.format == "text") return pair_text(value) + "\n";
  if (o.format == "csv") {
    return "s,z_re,z_im,re,im\n" + std::to_string(zmod(o.s, o.n)) + "," + format_double(z.real()) + "," +
           format_double(z.imag()) + "," + format_double(value.real()) + "," + format_double(value.imag()) + "\n";
  }
  OrderedJson j = OrderedJson::object();
  j["n"] = o.n;
  j["alpha"] = complex_json(root.alpha);
  j["s"] = zmod(o.s, o.n);
  j["z"] = complex_json(z);
  j["method"] = o.method;
  j["value"] = complex_json(value);
  if (cross) j["cross_check_residual"] = *cross;
  return dump_json(j) + "\n";
}

std::string render_reports(const std::vector<IdentityReport>& reports, const std::string& format) {
  if (format == "csv") return reports_to_csv(reports);
  if (format == "json") return dump_json(reports_to_json(reports), 2) + "\n";
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass ? "PASS " : "FAIL ") << r.identity << " residual=" << format_double(r.residual)
       << " tol=" << format_double(r.tolerance) << '\n';
  }
  return os.str();
}

std::vector<IdentityReport> cmd_verify(const Options& o) {
  const auto [ctx, root] = resolve(o);
  if (o.samples < 1) throw std::invalid_argument("--samples must be positive");
  SuiteConfig cfg;
  cfg.n = o.n;
  cfg.alpha = root.alpha;
  cfg.branch = o.branch;
  cfg.q = resolve_q(o);
  cfg.truncation = o.truncation;
  cfg.seed = o.seed;
  cfg.samples = o.samples;

  using Suite = std::vector<IdentityReport> (*)(const SuiteConfig&);
  std::vector<Suite> suites;
  if (o.suite == "demoivre" || o.suite == "all") suites.push_back(&demoivre_suite);
  if (o.suite == "circulant" || o.suite == "all") suites.push_back(&circulant_suite);
  if (o.suite == "qpsi" || o.suite == "all") suites.push_back(&qpsi_suite);
  if (suites.empty()) throw std::invalid_argument("unknown suite \"" + o.suite + "\"");

  std::vector<std::future<std::vector<IdentityReport>>> jobs;
  for (auto* suite : suites) jobs.push_back(std::async(std::launch::async, suite, cfg));
  std::vector<IdentityReport> reports;
  for (auto& job : jobs) {
    auto part = job.get();
    reports.insert(reports.end(), part.begin(), part.end());
  }
  if (o.tol) override_tolerance(reports, *o.tol);
  return reports;
}

std::vector<Complex> parse_component_list(const std::string& text) {
  std::vector<Complex> out;
  for (const auto& part : split(text, ';')) out.push_back(parse_complex(part));
  return out;
}

std::string cmd_det(const Options& o) {
  Complex alpha = parse_complex(o.alpha);
  std::vector<Complex> comps;
  const int sources = int(!o.components.empty()) + int(!o.input.empty()) + int(!o.builtin.empty());
  if (sources != 1) throw std::invalid_argument("det needs exactly one of --components, --input, --builtin");
  if (!o.components.empty()) {
    comps = parse_component_list(o.components);
  } else if (!o.input.empty()) {
    const auto j = parse_json(read_file(o.input));
    if (!j.is_object() || !j.contains("components") || !j.at("components").is_array()) {
      throw FormatError("expected {\"components\": [[re, im], ...]}");
    }
    for (const auto& c : j.at("components")) comps.push_back(complex_from_json(c));
    if (j.contains("alpha")) alpha = complex_from_json(j.at("alpha"));
  } else {
    const auto [ctx, root] = resolve(o);
    const auto base = builtin_series(o.builtin, o);
    const Complex z = parse_complex(o.z);
    for (int k = 0; k < o.n; ++k) comps.push_back(evaluate(project_series(base, ctx, k, root), z));
  }
  const int n = static_cast<int>(comps.size());
  if (n < 2) throw std::invalid_argument("det needs at least two components");
  const CyclicContext ctx(n);
  const AlphaRoot root = alpha_root(alpha, n, o.branch);
  const Complex spectral = circulant_det_spectral(comps, ctx, root);
  const Complex direct = circulant_det_direct(circulant_from_components(comps, alpha));
  const double discrepancy = mixed_residual(spectral, direct);

  if (o.format == "text") {
    return "spectral " + pair_text(spectral) + "\ndirect " + pair_text(direct) + "\ndiscrepancy " +
           format_double(discrepancy) + "\n";
  }
  if (o.format == "csv") {
    return "quantity,re,im\nspectral," + format_double(spectral.real()) + "," + format_double(spectral.imag()) +
           "\ndirect," + format_double(direct.real()) + "," + format_double(direct.imag()) + "\ndiscrepancy," +
           format_double(discrepancy) + ",0\n";
  }
  OrderedJson j = OrderedJson::object();
  j["n"] = n;
  j["alpha"] = complex_json(alpha);
  j["spectral"] = complex_json(spectral);
  j["direct"] = complex_json(direct);
  j["discrepancy"] = discrepancy;
  return dump_json(j) + "\n";
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw std::invalid_argument("empty complex value");
  if (const auto comma = text.find(','); comma != std::string::npos) {
    return {parse_real(trim(text.substr(0, comma))), parse_real(trim(text.substr(comma + 1)))};
  }
  if (text.back() != 'i') return {parse_real(text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one or part of an exponent.
  std::size_t cut = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  const std::string re = cut == std::string::npos ? "" : body.substr(0, cut);
  std::string im = cut == std::string::npos ? body : body.substr(cut);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cyclofun: alpha-hyperbolic functions, circulants and q-deformations"};
  app.require_subcommand(1);
  app.footer("Complex values: \"re\", \"re+imi\" or \"re,im\".\n"
             "Exit codes: 0 pass, 1 identity failure, 2 input error, 3 internal verification failure, "
             "4 domain violation.");

  Options o;
  auto* decompose = app.add_subcommand("decompose", "split a series into its n alpha-projected components");
  add_common(decompose, o, "json");
  decompose->add_option("--builtin", o.builtin, "exp | geometric | expq");
  decompose->add_option("--input", o.input, "series JSON file");

  auto* eval = app.add_subcommand("eval", "evaluate h_s at z");
  add_common(eval, o, "text");
  eval->add_option("--builtin", o.builtin, "exp (default) | expq");
  eval->add_option("--s", o.s, "component index")->capture_default_str();
  eval->add_option("--z", o.z, "argument")->capture_default_str();
  eval->add_option("--method", o.method, "series | closed")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run identity suites");
  add_common(verify, o, "json");
  verify->add_option("--suite", o.suite, "demoivre | circulant | qpsi | all")->capture_default_str();
  verify->add_option("--seed", o.seed, "seed for randomized sweeps")->capture_default_str();
  verify->add_option("--samples", o.samples, "random points per sweep")->capture_default_str();

  auto* det = app.add_subcommand("det", "alpha-circulant determinant, spectral and direct");
  add_common(det, o, "text");
  det->add_option("--components", o.components, "components c_0;c_1;...");
  det->add_option("--input", o.input, "JSON file {\"components\": [...], \"alpha\"?: [re, im]}");
  det->add_option("--builtin", o.builtin, "exp | geometric | expq, evaluated at --z");
  det->add_option("--z", o.z, "argument for --builtin")->capture_default_str();

  std::vector<const char*> argv{"cyclofun"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  if (o.format.empty()) o.format = (eval->parsed() || det->parsed()) ? "text" : "json";

  int status = kPass;
  std::string text;
  try {
    if (decompose->parsed()) {
      text = cmd_decompose(o);
    } else if (eval->parsed()) {
      text = cmd_eval(o, err);
    } else if (verify->parsed()) {
      const auto reports = cmd_verify(o);
      text = render_reports(reports, o.format);
      if (!all_pass(reports)) status = kIdentityFailure;
    } else {
      text = cmd_det(o);
    }
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!(file << text)) {
      err << "error: cannot write " << o.out << '\n';
      return kInputError;
    }
  }
  return status;
}

}  // namespace cyclofun::cli
