#include "legortho/ledger.hpp"

#include <stdexcept>

#include "legortho/christoffel.hpp"
#include "legortho/factorization.hpp"
#include "legortho/legendre.hpp"
#include "legortho/partial_fractions.hpp"

namespace legortho {

std::vector<Certificate> identity_ledger(int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("identity_ledger: n_max must be >= 1");
  }
  std::vector<Certificate> out;
  const auto append = [&out](auto &&certs) {
    for (auto &c : certs) {
      out.push_back(std::move(c));
    }
  };

  const auto legendre = check_legendre_identities(n_max);
  for (const char *name :
       {"legendre_christoffel_darboux", "legendre_three_term",
        "legendre_differentiated_three_term", "legendre_christoffel",
        "legendre_integrated"}) {
    for (const auto &c : legendre) {
      if (c.identity == name) {
        out.push_back(c);
      }
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(check_kn_identity(n));
  }
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(check_fejer_riesz(n));
  }
  for (int n = 1; n <= n_max; ++n) {
    append(check_fn_gn_alt(n));
  }
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(check_ode(n));
  }
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(check_fn_closed_form(n));
    out.push_back(hypergeometric_check(n));
  }
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(check_coefficient_reversal(n));
  }

  std::vector<Certificate> minus;
  for (int n = 1; n <= n_max; ++n) {
    const auto family = build_abcd(n, n);
    const auto pair = factor_pair(n);
    for (int k = 0; k <= n; ++k) {
      out.push_back(check_pfd_plus(family, pair, k));
      minus.push_back(check_pfd_minus(family, pair, k));
    }
  }
  append(minus);

  for (int n = 1; n <= n_max; ++n) {
    out.push_back(laurent_support_report(n).certificate);
  }
  for (int n = 1; n <= n_max; ++n) {
    append(leading_coefficient_checks(n));
  }
  for (int n = 1; n <= n_max; ++n) {
    append(moment_certificates(n));
  }
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(theorem_certificate(n));
  }
  return out;
}

} // namespace legortho
