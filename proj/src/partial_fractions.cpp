#include "legortho/partial_fractions.hpp"

#include <stdexcept>
#include <string>

namespace legortho {

namespace {

ExactPoly mono(const Rational &c, int e) { return ExactPoly::monomial(c, e); }

void require_valid(int n, const char *what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + ": requires n >= 1");
  }
}

ExactPoly target(int n, int m) {
  return shift(legendre_on_circle(m), 2 * n - 1) * Rational(2 * (n + 1));
}

// Numerator pair (over F, over G) of the split of 2(n+1)z^{2n-1}P_m(J(z)).
std::pair<const ExactPoly &, const ExactPoly &>
split_for(const AbcdFamily &family, int m) {
  const int n = family.n;
  if (m >= n) {
    const auto k = static_cast<std::size_t>(m - n);
    return {family.a.at(k), family.b.at(k)};
  }
  const auto k = static_cast<std::size_t>(n - m);
  return {family.c.at(k), family.d.at(k)};
}

std::string range(int lo, int hi) {
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

} // namespace

AbcdFamily build_abcd(int n, int k_max) {
  require_valid(n, "build_abcd");
  if (k_max < 1) {
    throw std::invalid_argument("build_abcd: requires k_max >= 1");
  }
  const ExactPoly j = joukowski<Rational>();
  AbcdFamily fam;
  fam.n = n;
  fam.a = {mono(1, n - 1), mono(1, n - 2)};
  fam.b = {mono(1, n - 1), mono(1, n)};
  for (int k = 1; k < k_max; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const Rational lead(2 * (n + k) + 1, n + k + 1);
    const Rational back(n + k, n + k + 1);
    fam.a.push_back(j * fam.a[uk] * lead - fam.a[uk - 1] * back);
    fam.b.push_back(j * fam.b[uk] * lead - fam.b[uk - 1] * back);
  }

  const Rational inv_2n(1, 2 * n);
  fam.c = {mono(1, n - 1),
           (mono(2 * n + 1, n) - mono(1, n - 2)) * inv_2n};
  fam.d = {mono(1, n - 1),
           (mono(2 * n + 1, n - 2) - mono(1, n)) * inv_2n};
  for (int k = 1; k <= n - 1; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const Rational lead(2 * (n - k) + 1, n - k);
    const Rational back(n - k + 1, n - k);
    fam.c.push_back(j * fam.c[uk] * lead - fam.c[uk - 1] * back);
    fam.d.push_back(j * fam.d[uk] * lead - fam.d[uk - 1] * back);
  }
  return fam;
}

Certificate check_pfd_plus(const AbcdFamily &family, const FactorPair &pair,
                           int k) {
  if (k < 0 || k > family.k_max()) {
    throw std::out_of_range("check_pfd_plus: k outside the built family");
  }
  const auto uk = static_cast<std::size_t>(k);
  const ExactPoly residual = target(family.n, family.n + k) -
                             (family.a[uk] * pair.g + family.b[uk] * pair.f);
  return residual_certificate("pfd_plus", family.n, k, residual);
}

Certificate check_pfd_minus(const AbcdFamily &family, const FactorPair &pair,
                            int k) {
  if (k < 0 || k > family.n) {
    throw std::out_of_range("check_pfd_minus: k outside 0..n");
  }
  const auto uk = static_cast<std::size_t>(k);
  const ExactPoly residual = target(family.n, family.n - k) -
                             (family.c[uk] * pair.g + family.d[uk] * pair.f);
  return residual_certificate("pfd_minus", family.n, k, residual);
}

Certificate check_pfd_plus(int n, int k) {
  return check_pfd_plus(build_abcd(n, std::max(k, 1)), factor_pair(n), k);
}

Certificate check_pfd_minus(int n, int k) {
  return check_pfd_minus(build_abcd(n, 1), factor_pair(n), k);
}

SupportReport laurent_support_report(int n) {
  require_valid(n, "laurent_support_report");
  const auto fam = build_abcd(n, n);
  SupportReport report;
  report.n = n;

  bool ok = true;
  std::string failures;
  const auto fail = [&](const std::string &what) {
    ok = false;
    failures += (failures.empty() ? "" : "; ") + what;
  };

  const auto add = [&](char name, const std::vector<ExactPoly> &members) {
    for (int k = 0; k < static_cast<int>(members.size()); ++k) {
      const auto &p = members[static_cast<std::size_t>(k)];
      SupportEntry e;
      e.family = name;
      e.k = k;
      e.min_exponent = p.min_exponent();
      e.max_exponent = p.degree();
      if (k >= 1) {
        int lo = n - (k + 1), hi = n + (k - 1);
        if (name == 'A') {
          hi = n + (k - 3);
        } else if (name == 'B') {
          lo = n - (k - 1);
        }
        e.within_displayed_bounds = lo <= e.min_exponent && e.max_exponent <= hi;
      }
      report.entries.push_back(e);

      if (name == 'B' && !p.is_polynomial()) {
        fail("B_" + std::to_string(k) + " has negative powers");
      }
      if (k <= n - 1 && name != 'D' &&
          (!p.is_polynomial() || p.degree() > 2 * n - 2)) {
        fail(std::string(1, name) + "_" + std::to_string(k) + " support " +
             range(e.min_exponent, e.max_exponent));
      }
    }
  };
  add('A', fam.a);
  add('B', fam.b);
  add('C', fam.c);
  add('D', fam.d);

  const auto un = static_cast<std::size_t>(n);
  if (fam.a[un].coeff(-1) == 0) {
    fail("A_n lacks a z^-1 term");
  }
  for (const auto *p : {&fam.c[un], &fam.d[un]}) {
    if (p->min_exponent() != -1 || p->degree() != 2 * n - 1) {
      fail("C_n/D_n support " + range(p->min_exponent(), p->degree()));
    }
  }

  report.certificate.identity = "laurent_support";
  report.certificate.n = n;
  report.certificate.passed = ok;
  report.certificate.residual_terms = 0;
  report.certificate.detail =
      ok ? "A_n " + range(fam.a[un].min_exponent(), fam.a[un].degree()) +
               ", B_n " + range(fam.b[un].min_exponent(), fam.b[un].degree()) +
               ", C_n " + range(fam.c[un].min_exponent(), fam.c[un].degree()) +
               ", D_n " + range(fam.d[un].min_exponent(), fam.d[un].degree())
         : failures;
  return report;
}

Rational contour_reduce_inside(const ExactPoly &numerator, const ExactPoly &f) {
  if (numerator.min_exponent() < -1) {
    throw std::invalid_argument(
        "contour_reduce_inside: numerator below z^-1");
  }
  const int d = f.degree();
  const Rational lead = f.leading_coefficient();
  const ExactPoly poly_part = truncate(numerator, 0, numerator.degree());
  const auto [quotient, remainder] = divide(poly_part, f);
  Rational value = remainder.coeff(d - 1) / lead;

  const Rational c = numerator.coeff(-1);
  if (c != 0) {
    const Rational f0 = f.coeff(0);
    if (f0 == 0) {
      throw std::domain_error("contour_reduce_inside: F(0) = 0");
    }
    const ExactPoly tail = shift(f - ExactPoly::constant(f0), -1);
    value += c / f0 * (Rational(1) - tail.coeff(d - 1) / lead);
  }
  return value;
}

Rational contour_reduce_outside(const ExactPoly &numerator,
                                const ExactPoly &g) {
  if (numerator.min_exponent() < -1) {
    throw std::invalid_argument(
        "contour_reduce_outside: numerator below z^-1");
  }
  const Rational d = numerator.coeff(-1);
  if (d == 0) {
    return 0;
  }
  const Rational g0 = g.coeff(0);
  if (g0 == 0) {
    throw std::domain_error("contour_reduce_outside: G(0) = 0");
  }
  return d / g0;
}

std::vector<Rational> moments_exact(int n) {
  require_valid(n, "moments_exact");
  const auto fam = build_abcd(n, n);
  const auto pair = factor_pair(n);
  std::vector<Rational> out;
  for (int k = 0; k <= 2 * n; ++k) {
    const auto [over_f, over_g] = split_for(fam, k);
    out.push_back(contour_reduce_inside(over_f, pair.f) +
                  contour_reduce_outside(over_g, pair.g));
  }
  return out;
}

Rational moment_exact(int n, int k) {
  require_valid(n, "moment_exact");
  if (k < 0 || k > 2 * n) {
    throw std::out_of_range("moment_exact: k outside 0..2n");
  }
  return moments_exact(n)[static_cast<std::size_t>(k)];
}

ScaledRoot orthogonality_exact(const std::vector<Rational> &moments, int i,
                               int j) {
  const int n = (static_cast<int>(moments.size()) - 1) / 2;
  if (i < 0 || j < 0 || i > n || j > n) {
    throw std::out_of_range("orthogonality_exact: index outside 0..n");
  }
  const auto expansion = legendre_product_expand(i, j);
  Rational acc(0);
  for (int k = 0; k <= expansion.max_degree(); ++k) {
    acc += expansion.coefficients[static_cast<std::size_t>(k)] *
           moments[static_cast<std::size_t>(k)];
  }
  return expansion.normalization * acc;
}

ScaledRoot orthogonality_exact(int n, int i, int j) {
  return orthogonality_exact(moments_exact(n), i, j);
}

std::array<Certificate, 2> leading_coefficient_checks(int n) {
  require_valid(n, "leading_coefficient_checks");
  const auto fam = build_abcd(n, n);
  const auto pair = factor_pair(n);
  const auto un = static_cast<std::size_t>(n);
  const Rational lc_closed =
      power_of_two(-2 * n) * Rational(2 * n + 1) *
      Rational(binomial(2 * un, un));

  const ExactPoly &cn = fam.c[un];
  Certificate top;
  top.identity = "c_n_top_coefficient";
  top.n = n;
  top.passed = cn.degree() == 2 * n - 1 &&
               cn.coeff(2 * n - 1) == pair.f.leading_coefficient() &&
               pair.f.leading_coefficient() == lc_closed;
  top.detail = "coeff z^" + std::to_string(2 * n - 1) + " = " +
               cn.coeff(2 * n - 1).str() + ", coeff z^" +
               std::to_string(2 * n) + " = " + cn.coeff(2 * n).str() +
               ", lc(F) = " + pair.f.leading_coefficient().str();

  const ExactPoly &dn = fam.d[un];
  Certificate inverse;
  inverse.identity = "d_n_inverse_coefficient";
  inverse.n = n;
  inverse.passed = dn.coeff(-1) == pair.g.coeff(0);
  inverse.detail = "D_n z^-1 = " + dn.coeff(-1).str() + ", G(0) = " +
                   pair.g.coeff(0).str() + ", B_n z^-1 = " +
                   fam.b[un].coeff(-1).str();
  return {top, inverse};
}

std::vector<Certificate> moment_certificates(int n) {
  const auto moments = moments_exact(n);
  std::vector<Certificate> out;
  for (int k = 0; k <= 2 * n; ++k) {
    const Rational &m = moments[static_cast<std::size_t>(k)];
    Certificate c;
    c.identity = "moment_exact";
    c.n = n;
    c.k = k;
    c.passed = m == Rational(k == 0 ? 2 : 0);
    c.detail = m.str();
    out.push_back(c);
  }
  return out;
}

Certificate theorem_certificate(int n) {
  const auto moments = moments_exact(n);
  Certificate c;
  c.identity = "theorem_exact";
  c.n = n;
  c.passed = true;
  std::size_t bad = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const ScaledRoot value = orthogonality_exact(moments, i, j);
      const ScaledRoot expected(Rational(i == j ? 1 : 0), Integer(1));
      if (!(value == expected)) {
        c.passed = false;
        ++bad;
      }
    }
  }
  c.residual_terms = bad;
  c.detail = std::to_string((n + 1) * (n + 2) / 2) + " pairs, " +
             std::to_string(bad) + " mismatches";
  return c;
}

} // namespace legortho
