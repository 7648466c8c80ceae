#include "eulerian/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/fractions.hpp"
#include "eulerian/quadrature.hpp"
#include "eulerian/stirling.hpp"
#include "eulerian/stirling_perm.hpp"
#include "eulerian/triangle.hpp"
#include "eulerian/verify.hpp"

namespace eulerian::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormatEnv = "EULERIAN_FORGE_FORMAT";

/// Result of one command in every output shape it supports.
struct Output {
  std::string method;
  std::vector<std::pair<std::string, std::string>> parameters;
  Json payload;
  std::string text;
  std::optional<std::vector<BigInt>> sequence;
  std::string bfile_header;
  int exit_code = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json decimal_array(std::span<const BigInt> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_decimal(v));
  return arr;
}

std::string csv_line(std::span<const BigInt> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_decimal(values[i]);
  }
  return out;
}

std::string fmt_double(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

Output scalar_output(const BigInt& value) {
  Output o;
  o.payload = to_decimal(value);
  o.text = to_decimal(value) + "\n";
  o.sequence = std::vector<BigInt>{value};
  return o;
}

Output sequence_output(std::vector<BigInt> values) {
  Output o;
  o.payload = decimal_array(values);
  o.text = csv_line(values) + "\n";
  o.sequence = std::move(values);
  return o;
}

std::vector<std::vector<BigInt>> triangle_rows(unsigned m, unsigned rows, const std::string& method) {
  if (method == "recurrence") return build_triangle(m, rows).rows();
  std::vector<std::vector<BigInt>> out;
  if (method == "oracle" && !within_enumeration_guard(m, rows)) {
    throw GuardError("oracle refuses m=" + std::to_string(m) + " n=" + std::to_string(rows) +
                     ": more than " + std::to_string(kEnumerationGuard) + " multiset permutations");
  }
  for (unsigned n = 1; n <= rows; ++n) {
    if (method == "oracle") {
      out.push_back(enumerate_triangle(m, n));
    } else {
      std::vector<BigInt> row;
      for (unsigned k = 0; k < n; ++k) row.push_back(value_explicit(m, n, k));
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::string render_verify_text(const VerifyOptions& opt, const VerifyReport& report, bool corrupted) {
  struct Tally {
    std::string suite;
    std::size_t cases = 0;
    std::size_t failed = 0;
    std::string first_failure;
  };
  std::vector<std::pair<std::string, Tally>> by_identity;
  for (const auto& c : report.checks) {
    auto it = std::find_if(by_identity.begin(), by_identity.end(), [&](const auto& p) { return p.first == c.identity; });
    if (it == by_identity.end()) {
      by_identity.push_back({c.identity, Tally{c.suite, 0, 0, {}}});
      it = std::prev(by_identity.end());
    }
    ++it->second.cases;
    if (!c.passed) {
      if (it->second.failed == 0) it->second.first_failure = c.case_label + ": " + c.detail;
      ++it->second.failed;
    }
  }
  std::ostringstream s;
  s << "verify suite=" << opt.suite << " m<=" << opt.m_max << " n<=" << opt.n_max;
  if (opt.suite == "integral") s << " tol=" << opt.tol;
  if (corrupted) s << " (corrupted entry injected)";
  s << "\n";
  std::size_t failed_identities = 0;
  for (const auto& [name, t] : by_identity) {
    s << (t.failed == 0 ? "PASS " : "FAIL ") << t.suite << ": " << name << " [" << (t.cases - t.failed) << "/"
      << t.cases << "]\n";
    if (t.failed) {
      ++failed_identities;
      s << "     first failure " << t.first_failure << "\n";
    }
  }
  s << (report.all_passed() ? "OK" : "FAILED") << ": " << (by_identity.size() - failed_identities) << "/"
    << by_identity.size() << " identities passed, " << report.checks.size() << " cases checked\n";
  return s.str();
}

Json verify_json(const VerifyOptions& opt, const VerifyReport& report, bool corrupted) {
  Json identities = Json::array();
  std::map<std::string, std::size_t> index;
  for (const auto& c : report.checks) {
    auto [it, inserted] = index.try_emplace(c.identity, identities.size());
    if (inserted) {
      identities.push_back(Json{{"suite", c.suite}, {"identity", c.identity}, {"cases", 0}, {"failed", 0}, {"failures", Json::array()}});
    }
    auto& entry = identities[it->second];
    entry["cases"] = entry["cases"].get<int>() + 1;
    if (!c.passed) {
      entry["failed"] = entry["failed"].get<int>() + 1;
      entry["failures"].push_back(Json{{"case", c.case_label}, {"detail", c.detail}});
    }
  }
  return Json{{"suite", opt.suite},
              {"corrupted", corrupted},
              {"passed", report.all_passed()},
              {"failed_identities", report.failed_identities()},
              {"identities", identities}};
}

std::string resolve_format(const std::string& flag) {
  std::string format = flag;
  if (format.empty()) {
    const char* env = std::getenv(kFormatEnv);
    format = env != nullptr && *env != '\0' ? env : "csv";
  }
  if (format != "csv" && format != "json" && format != "bfile") {
    throw UsageError("unknown output format '" + format + "' (expected csv, json or bfile)");
  }
  return format;
}

void emit(const std::string& command, const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json params = Json::object();
    for (const auto& [k, v] : o.parameters) params[k] = v;
    Json record{{"command", command}, {"parameters", params}, {"method", o.method}, {"payload", o.payload}};
    out << record.dump(2) << "\n";
  } else if (format == "bfile") {
    if (!o.sequence) throw UsageError("command '" + command + "' has no sequence payload for bfile output");
    std::string header = o.bfile_header;
    if (header.empty()) {
      header = command;
      for (const auto& [k, v] : o.parameters) header += " " + k + "=" + v;
    }
    out << "# " << header << "\n";
    for (std::size_t i = 0; i < o.sequence->size(); ++i) out << i << " " << to_decimal((*o.sequence)[i]) << "\n";
  } else {
    out << o.text;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact mth-order Eulerian numbers, fractions and Stirling conversions", "eulerian-forge"};
  app.require_subcommand(1);

  std::string format_flag;
  unsigned m = 0;
  unsigned n = 0;
  long k = 0;
  unsigned rows = 0;
  std::size_t terms = 0;
  long a = 0;
  long b = 0;
  long x = 0;
  unsigned i_arg = 0;
  unsigned ell = 0;
  double tol = 1e-9;
  std::string method = "recurrence";
  std::string kind;
  std::string direction;
  std::string suite = "all";
  bool corrupt = false;

  const std::vector<std::string> formats{"csv", "json", "bfile"};
  const std::vector<std::string> methods{"recurrence", "explicit", "oracle"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_flag, "Output format")->check(CLI::IsMember(formats));
  };

  auto* triangle = app.add_subcommand("triangle", "Rows 1..N of the mth-order Eulerian triangle");
  triangle->add_option("--m", m, "Order m")->required()->check(CLI::PositiveNumber);
  triangle->add_option("--rows", rows, "Number of rows")->required()->check(CLI::PositiveNumber);
  triangle->add_option("--method", method, "recurrence | explicit | oracle")->check(CLI::IsMember(methods));
  add_format(triangle);

  auto* value = app.add_subcommand("value", "A single entry T(m; n, k)");
  value->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  value->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  value->add_option("--k", k)->required();
  value->add_option("--method", method, "recurrence | explicit | oracle")->check(CLI::IsMember(methods));
  add_format(value);

  auto* polynomial = app.add_subcommand("polynomial", "Coefficients of the Eulerian polynomial S_{m;n}");
  polynomial->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  polynomial->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  add_format(polynomial);

  auto* series = app.add_subcommand("series", "Taylor coefficients f_{m;n}(l) of the alternative fraction");
  series->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  series->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  series->add_option("--terms", terms)->required()->check(CLI::PositiveNumber);
  add_format(series);

  auto* stirling = app.add_subcommand("stirling", "Stirling numbers of either kind");
  stirling->add_option("--kind", kind)->required()->check(CLI::IsMember({"second", "first-signed", "first-unsigned"}));
  stirling->add_option("--n", n)->required();
  stirling->add_option("--k", k)->required();
  add_format(stirling);

  auto* convert = app.add_subcommand("convert", "Conversions between second-order Eulerian and Stirling numbers");
  convert->add_option("--direction", direction)
      ->required()
      ->check(CLI::IsMember({"s2-from-eulerian2", "eulerian2-from-s2", "c1-from-eulerian2", "eulerian2-from-c1"}));
  convert->add_option("--n", n);
  convert->add_option("--k", k);
  convert->add_option("--i", i_arg);
  convert->add_option("--ell", ell);
  add_format(convert);

  auto* phi_cmd = app.add_subcommand("phi", "Worpitzky-type sum phi_{m;n}(x) at an integer x");
  phi_cmd->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  phi_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  phi_cmd->add_option("--x", x)->required();
  add_format(phi_cmd);

  auto* integral = app.add_subcommand("integral-check", "Quadrature check of the integral identity");
  integral->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  integral->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  integral->add_option("--a", a)->required()->check(CLI::NonNegativeNumber);
  integral->add_option("--b", b)->required();
  integral->add_option("--tol", tol)->check(CLI::PositiveNumber);
  add_format(integral);

  unsigned m_max = 4;
  unsigned n_max = 6;
  auto* verify = app.add_subcommand("verify", "Cross-check every computation path; exit 1 on any failure");
  verify->add_option("--m", m_max, "Largest order checked")->check(CLI::Range(1U, 8U));
  verify->add_option("--n", n_max, "Largest row checked")->check(CLI::Range(1U, 12U));
  verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "core", "oracle", "fractions", "stirling", "integral"}));
  verify->add_option("--tol", tol)->check(CLI::PositiveNumber);
  verify->add_flag("--corrupt-entry", corrupt, "Negative control: perturb T(2; 3, 1) before checking");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    const std::string format = resolve_format(format_flag);
    Output o;
    if (sub == triangle) {
      auto data = triangle_rows(m, rows, method);
      Json payload = Json::array();
      std::vector<BigInt> flat;
      for (const auto& r : data) {
        payload.push_back(decimal_array(r));
        o.text += csv_line(r) + "\n";
        flat.insert(flat.end(), r.begin(), r.end());
      }
      o.payload = std::move(payload);
      o.sequence = std::move(flat);
      o.bfile_header = "T(m;n,k) for m=" + std::to_string(m) + ", rows n=1.." + std::to_string(rows) +
                       ", row-major by n, 0<=k<=n-1, offset 0";
      o.parameters = {{"m", std::to_string(m)}, {"rows", std::to_string(rows)}};
      o.method = method;
    } else if (sub == value) {
      BigInt v;
      if (method == "recurrence") {
        v = build_triangle(m, n).at(n, k);
      } else if (method == "explicit") {
        v = value_explicit(m, n, k);
      } else {
        if (!within_enumeration_guard(m, n)) {
          throw GuardError("oracle refuses m=" + std::to_string(m) + " n=" + std::to_string(n) + ": more than " +
                           std::to_string(kEnumerationGuard) + " multiset permutations");
        }
        auto counts = enumerate_triangle(m, n);
        v = k >= 0 && k < static_cast<long>(n) ? counts[static_cast<std::size_t>(k)] : BigInt(0);
      }
      o = scalar_output(v);
      o.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
      o.method = method;
    } else if (sub == polynomial) {
      const auto s = eulerian_poly(m, n);
      o = sequence_output(s.poly.coeffs());
      o.payload = Json{{"coefficients", decimal_array(s.poly.coeffs())}, {"display", s.poly.to_string()}};
      o.bfile_header = "coefficients of S_{" + std::to_string(m) + ";" + std::to_string(n) + "}(t), offset 0";
      o.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
      o.method = "recurrence";
    } else if (sub == series) {
      o = sequence_output(series_coeffs(m, n, terms).coeffs);
      o.bfile_header = "f_{" + std::to_string(m) + ";" + std::to_string(n) + "}(l), offset 0";
      o.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"terms", std::to_string(terms)}};
      o.method = "identity";
    } else if (sub == stirling) {
      const long nn = static_cast<long>(n);
      BigInt v = kind == "second"         ? stirling2(nn, k)
                 : kind == "first-signed" ? stirling1_signed(nn, k)
                                          : stirling1_unsigned(nn, k);
      o = scalar_output(v);
      o.parameters = {{"kind", kind}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
      o.method = "recurrence";
    } else if (sub == convert) {
      auto need = [&](const char* flag) {
        if (sub->count(flag) == 0) throw UsageError("convert --direction " + direction + " requires " + flag);
      };
      BigInt v;
      if (direction == "s2-from-eulerian2") {
        need("--n");
        need("--ell");
        v = s2_from_eulerian2(n, ell);
        o.parameters = {{"direction", direction}, {"n", std::to_string(n)}, {"ell", std::to_string(ell)}};
      } else if (direction == "eulerian2-from-s2") {
        need("--n");
        need("--k");
        v = eulerian2_from_s2(n, k);
        o.parameters = {{"direction", direction}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
      } else if (direction == "c1-from-eulerian2") {
        need("--n");
        need("--k");
        if (k < 0) throw std::invalid_argument("k must be nonnegative");
        v = c1_from_eulerian2(n, static_cast<unsigned>(k));
        o.parameters = {{"direction", direction}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
      } else {
        need("--k");
        need("--i");
        if (k < 1) throw std::invalid_argument("k must be positive");
        v = eulerian2_from_c1(static_cast<unsigned>(k), i_arg);
        o.parameters = {{"direction", direction}, {"k", std::to_string(k)}, {"i", std::to_string(i_arg)}};
      }
      const auto params = std::move(o.parameters);
      o = scalar_output(v);
      o.parameters = params;
      o.method = "identity";
    } else if (sub == phi_cmd) {
      o = scalar_output(phi(m, n, BigInt(x)));
      o.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"x", std::to_string(x)}};
      o.method = "identity";
    } else if (sub == integral) {
      const auto rep = integral_check(m, n, a, b, tol);
      o.payload = Json{{"rhs_exact", to_decimal(rep.rhs_exact)},
                       {"rhs_decimal", rep.rhs_exact.get_d()},
                       {"lhs_numeric", rep.lhs_numeric},
                       {"lhs_hat_numeric", rep.lhs_hat_numeric},
                       {"residual", rep.residual},
                       {"residual_hat", rep.residual_hat},
                       {"lhs_closed_form", to_decimal(rep.lhs_exact)},
                       {"intervals", rep.intervals},
                       {"passed", rep.passed}};
      o.text = "m,n,a,b,rhs_exact,rhs_decimal,lhs_numeric,lhs_hat_numeric,residual,residual_hat,lhs_closed_form,passed\n" +
               std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + "," +
               to_decimal(rep.rhs_exact) + "," + fmt_double(rep.rhs_exact.get_d()) + "," + fmt_double(rep.lhs_numeric) +
               "," + fmt_double(rep.lhs_hat_numeric) + "," + fmt_double(rep.residual) + "," +
               fmt_double(rep.residual_hat) + "," + to_decimal(rep.lhs_exact) + "," + (rep.passed ? "true" : "false") +
               "\n";
      o.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"a", std::to_string(a)},
                      {"b", std::to_string(b)}, {"tol", fmt_double(tol)}};
      o.method = "identity";
      o.exit_code = rep.passed ? kOk : kVerificationFailed;
    } else if (sub == verify) {
      VerifyOptions opt{m_max, n_max, suite, tol};
      const auto source = corrupt ? corrupted_source(2, 3, 1) : recurrence_source();
      const auto report = run_verify(opt, source);
      o.payload = verify_json(opt, report, corrupt);
      o.text = render_verify_text(opt, report, corrupt);
      o.parameters = {{"m_max", std::to_string(m_max)}, {"n_max", std::to_string(n_max)}, {"suite", suite}};
      if (suite == "integral") o.parameters.emplace_back("tol", fmt_double(tol));
      o.method = "identity";
      o.exit_code = report.all_passed() ? kOk : kVerificationFailed;
    }
    emit(command, o, format, out);
    return o.exit_code;
  } catch (const UsageError& e) {
    err << "eulerian-forge: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardError& e) {
    err << "eulerian-forge: " << e.what() << "\n";
    return kRefused;
  } catch (const std::exception& e) {
    err << "eulerian-forge: " << command << ": " << e.what() << "\n";
    return kRefused;
  }
}

}  // namespace eulerian::cli
