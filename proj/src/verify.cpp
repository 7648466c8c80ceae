#include "eulerian/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "eulerian/fractions.hpp"
#include "eulerian/stirling.hpp"
#include "eulerian/stirling_perm.hpp"

namespace eulerian {

TriangleSource recurrence_source() {
  return [](unsigned m, unsigned n_max) { return build_triangle(m, n_max); };
}

TriangleSource corrupted_source(unsigned m, unsigned n, unsigned k) {
  return [m, n, k](unsigned order, unsigned n_max) {
    auto tri = build_triangle(order, n_max);
    if (order != m || n > n_max || k >= n) return tri;
    return tri.with_entry(n, k, tri.at(n, k) + 1);
  };
}

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::vector<std::string> VerifyReport::failed_identities() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed && std::find(out.begin(), out.end(), c.identity) == out.end()) out.push_back(c.identity);
  }
  return out;
}

const std::vector<std::string>& default_suites() {
  static const std::vector<std::string> suites{"core", "oracle", "fractions", "stirling"};
  return suites;
}

bool is_known_suite(const std::string& name) {
  if (name == "all" || name == "integral") return true;
  const auto& d = default_suites();
  return std::find(d.begin(), d.end(), name) != d.end();
}

namespace {

std::string join(std::span<const BigInt> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += to_decimal(values[i]);
  }
  return out + "]";
}

std::string mn_label(unsigned m, unsigned n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

class Battery {
 public:
  Battery(const VerifyOptions& opt, const TriangleSource& source, std::vector<CheckResult>& out)
      : opt_(opt), source_(source), out_(out) {}

  void check(const std::string& identity, const std::string& label, bool passed, std::string detail = {}) {
    out_.push_back({suite_, identity, label, passed, passed ? std::string{} : std::move(detail)});
  }

  void equal(const std::string& identity, const std::string& label, const BigInt& got, const BigInt& want) {
    check(identity, label, got == want, "got " + to_decimal(got) + ", expected " + to_decimal(want));
  }

  void run(const std::string& suite) {
    suite_ = suite;
    if (suite == "core") core();
    else if (suite == "oracle") oracle();
    else if (suite == "fractions") fractions();
    else if (suite == "stirling") stirling();
    else if (suite == "integral") integral();
  }

 private:
  void core() {
    for (unsigned m = 1; m <= opt_.m_max; ++m) {
      const auto tri = source_(m, opt_.n_max);
      equal("seed T(1,0) = 1", mn_label(m, 1), tri.at(1, 0), 1);
      for (unsigned n = 1; n <= opt_.n_max; ++n) {
        const auto label = mn_label(m, n);
        const auto row = tri.row(n);
        std::vector<BigInt> explicit_row;
        for (unsigned k = 0; k < n; ++k) explicit_row.push_back(value_explicit(m, n, k));
        check("recurrence = explicit composition sum", label, std::equal(row.begin(), row.end(), explicit_row.begin()),
              "triangle " + join(row) + " vs explicit " + join(explicit_row));

        BigInt sum = 0;
        for (const auto& v : row) sum += v;
        equal("row sum = prod(jm+1)", label, sum, row_sum_closed(m, n));
        equal("first column = 1", label, row.front(), 1);
        equal("last entry = prod(j(m-1)+1)", label, row.back(), last_entry_closed(m, n));
        if (n >= 2) equal("T(n,1) = m(2^n-n-1)", label, tri.at(n, 1), k1_closed(m, n));
        if (m == 1) {
          check("first-order symmetry T(n,k) = T(n,n-1-k)", label, std::equal(row.begin(), row.end(), row.rbegin()),
                "row " + join(row) + " is not palindromic");
        }
        if (n <= 5) symbolic_row(tri, n);
      }
      if (m >= 2) {
        const auto lower = source_(m - 1, opt_.n_max);
        for (unsigned n = 1; n <= opt_.n_max; ++n) {
          BigInt sum = 0;
          for (const auto& v : lower.row(n)) sum += v;
          equal("order lift sum_k T(m-1;n,k) = T(m;n,n-1)", mn_label(m, n), sum, tri.at(n, static_cast<long>(n) - 1));
        }
      }
    }
  }

  // Rows 1..5 of the general-m table, with m substituted.
  void symbolic_row(const EulerianTriangle& tri, unsigned n) {
    const BigInt m = tri.m();
    std::vector<BigInt> want;
    switch (n) {
      case 1: want = {1}; break;
      case 2: want = {1, m}; break;
      case 3: want = {1, 4 * m, m * (2 * m - 1)}; break;
      case 4: want = {1, 11 * m, m * (18 * m - 7), m * (6 * m * m - 7 * m + 2)}; break;
      default:
        want = {1, 26 * m, 2 * m * (49 * m - 16), 2 * m * (48 * m * m - 46 * m + 11),
                m * (4 * m - 3) * (6 * m * m - 7 * m + 2)};
    }
    const auto row = tri.row(n);
    check("symbolic general-m rows", mn_label(tri.m(), n), std::equal(row.begin(), row.end(), want.begin()),
          "triangle " + join(row) + " vs pattern " + join(want));
  }

  void oracle() {
    for (unsigned m = 1; m <= opt_.m_max; ++m) {
      const auto tri = source_(m, opt_.n_max);
      for (unsigned n = 1; n <= opt_.n_max; ++n) {
        if (!within_enumeration_guard(m, n)) break;
        const auto counts = enumerate_triangle(m, n);
        const auto row = tri.row(n);
        const auto label = mn_label(m, n);
        check("descent tally of m-Stirling permutations = triangle row", label,
              std::equal(row.begin(), row.end(), counts.begin()), "oracle " + join(counts) + " vs triangle " + join(row));
        BigInt total = 0;
        for (const auto& c : counts) total += c;
        equal("valid word count = prod(jm+1)", label, total, row_sum_closed(m, n));
      }
    }
  }

  void fractions() {
    for (unsigned m = 1; m <= opt_.m_max; ++m) {
      const auto tri = source_(m, opt_.n_max + 1);
      EulerianPolynomial iterated{m, 1, Poly::constant(1)};
      for (unsigned n = 1; n <= opt_.n_max; ++n) {
        const auto label = mn_label(m, n);
        const auto s = eulerian_poly(tri, n);
        check("polynomial recurrence from S_1 = 1", label, iterated.poly == s.poly,
              "iterated " + iterated.poly.to_string() + " vs triangle " + s.poly.to_string());
        iterated = poly_recurrence_step(iterated);

        equal("S(1) = prod(jm+1)", label, s.poly.at_one(), row_sum_closed(m, n));

        constexpr std::size_t kTerms = 12;
        const auto by_sum = series_coeffs(tri, n, kTerms);
        const auto by_expansion = fraction_hat(s).series(kTerms);
        check("series coefficients by sum = expansion of F^", label, by_sum.coeffs == by_expansion,
              "sum " + join(by_sum.coeffs) + " vs expansion " + join(by_expansion));

        const auto recovered = eulerian_from_series(series_coeffs(tri, n, n + 1));
        const auto row = tri.row(n);
        check("series inversion recovers row", label, std::equal(row.begin(), row.end(), recovered.begin()),
              "recovered " + join(recovered) + " vs triangle " + join(row));

        for (const auto& r : verify_identities(tri, n).results) check(r.name, label, r.passed, "fractions differ");

        if (m == 2) {
          const auto f = series_coeffs(tri, n, 9);
          for (unsigned ell = 0; ell <= 8; ++ell) {
            equal("f_{2;n}(l) = S(n+l,l)", label + " l=" + std::to_string(ell), f.coeffs[ell], stirling2(n + ell, ell));
          }
        }
        if (m == 3 && n >= 2) {
          equal("f_{3;n}(2) = 3*2^n-2", label, series_coeffs(tri, n, 3).coeffs[2], 3 * pow(BigInt(2), n) - 2);
        }
      }
    }
  }

  void stirling() {
    const unsigned wide = std::max(10U, opt_.n_max);
    const auto tri2 = source_(2, wide + 1);
    for (unsigned n = 1; n <= opt_.n_max; ++n) {
      for (unsigned ell = 1; ell <= 8; ++ell) {
        const auto label = "n=" + std::to_string(n) + " l=" + std::to_string(ell);
        equal("S(n+l,l) from second-order Eulerian numbers", label, s2_from_eulerian2(tri2, n, ell),
              stirling2(n + ell, ell));
      }
    }
    for (unsigned n = 1; n <= opt_.n_max + 1; ++n) {
      for (unsigned k = 0; k < n; ++k) {
        equal("second-order Eulerian from S(n+l,l)", "n=" + std::to_string(n) + " k=" + std::to_string(k),
              eulerian2_from_s2(n, k), tri2.at(n, k));
      }
    }
    for (unsigned n = 2; n <= wide; ++n) {
      for (unsigned k = 1; k < n; ++k) {
        equal("[n;n-k] from second-order Eulerian numbers", "n=" + std::to_string(n) + " k=" + std::to_string(k),
              c1_from_eulerian2(tri2, n, k), stirling1_unsigned(n, n - k));
      }
    }
    for (unsigned k = 1; k <= opt_.n_max; ++k) {
      for (unsigned i = k + 1; i <= 2 * k; ++i) {
        equal("second-order Eulerian from [n;n-k]", "k=" + std::to_string(k) + " i=" + std::to_string(i),
              eulerian2_from_c1(k, i), tri2.at(k, 2L * k - i));
      }
    }
    for (long n = 0; n <= static_cast<long>(wide); ++n) {
      for (long k = 0; k <= n; ++k) {
        const BigInt sign = (n - k) % 2 == 0 ? 1 : -1;
        equal("s(n,k) = (-1)^(n-k)[n;k]", "n=" + std::to_string(n) + " k=" + std::to_string(k), stirling1_signed(n, k),
              sign * stirling1_unsigned(n, k));
      }
    }

    const auto tri1 = source_(1, opt_.n_max);
    for (unsigned n = 1; n <= opt_.n_max; ++n) {
      for (long x = 0; x <= 30; ++x) {
        equal("Worpitzky phi_{1;n}(x) = x^n", "n=" + std::to_string(n) + " x=" + std::to_string(x),
              phi(tri1, n, BigInt(x)), pow(BigInt(x), n));
      }
      for (long x = n; x <= 20; ++x) {
        equal("phi_{2;n}(x) = [x;x-n]", "n=" + std::to_string(n) + " x=" + std::to_string(x), phi(tri2, n, BigInt(x)),
              stirling1_unsigned(x, x - static_cast<long>(n)));
      }
    }
    for (unsigned m = 1; m <= opt_.m_max; ++m) {
      const auto tri = source_(m, std::min(opt_.n_max, 4U));
      for (unsigned n = 1; n <= tri.n_max(); ++n) {
        const auto poly = phi_poly(m, n);
        bool ok = true;
        std::string detail;
        for (long x = -5; x <= 12 && ok; ++x) {
          const Rational at = poly.evaluate(Rational(x));
          const BigInt point = phi(tri, n, BigInt(x));
          if (at != Rational(point)) {
            ok = false;
            detail = "x=" + std::to_string(x) + ": polynomial " + to_decimal(at) + " vs sum " + to_decimal(point);
          }
        }
        check("phi polynomial = phi pointwise", mn_label(m, n), ok, detail);
      }
    }
  }

  void integral() {
    struct Case {
      unsigned m, n;
      long a, b;
    };
    static constexpr Case kCases[] = {{1, 1, 0, 0}, {1, 2, 1, 0}, {2, 2, 0, 0}, {2, 3, 0, 1}, {3, 2, 1, 1}};
    for (const auto& c : kCases) {
      const auto rep = integral_check(c.m, c.n, c.a, c.b, opt_.tol);
      std::ostringstream label;
      label << "m=" << c.m << " n=" << c.n << " a=" << c.a << " b=" << c.b;
      std::ostringstream detail;
      detail.precision(17);
      detail << "quadrature " << rep.lhs_numeric << " / " << rep.lhs_hat_numeric << " vs right side "
             << to_decimal(rep.rhs_exact) << " (" << rep.rhs_exact.get_d() << "), residual " << rep.residual
             << "; left side in closed form " << to_decimal(rep.lhs_exact);
      check("integral of transformed left side = printed right side", label.str(), rep.passed, detail.str());
    }
  }

  const VerifyOptions& opt_;
  const TriangleSource& source_;
  std::vector<CheckResult>& out_;
  std::string suite_;
};

}  // namespace

VerifyReport run_verify(const VerifyOptions& options, const TriangleSource& source) {
  if (!is_known_suite(options.suite)) throw std::invalid_argument("unknown suite '" + options.suite + "'");
  if (options.m_max == 0 || options.n_max == 0) throw std::invalid_argument("verify bounds must be positive");
  VerifyReport report;
  Battery battery(options, source, report.checks);
  if (options.suite == "all") {
    for (const auto& s : default_suites()) battery.run(s);
  } else {
    battery.run(options.suite);
  }
  return report;
}

}  // namespace eulerian
