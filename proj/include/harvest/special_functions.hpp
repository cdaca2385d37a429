#pragma once

namespace harvest {

/// Truncation control for series evaluation.
struct SeriesControl {
    double abs_tol = 1e-12;
    int max_terms = 200;
};

/// Gamma function on (0, inf). Relative error below 1e-12 across the
/// domain; overflows to +inf past x ~ 171.6 like the true function.
/// Throws std::domain_error for x <= 0 or non-finite x.
double gamma(double x);

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) for real z,
/// summed term by term as sum_k z^k / Gamma(alpha*k + beta). The sum
/// stops once a term drops below ctl.abs_tol in magnitude; if max_terms
/// is exhausted first, throws std::runtime_error.
double mittag_leffler(double alpha, double beta, double z,
                      SeriesControl ctl = {});

}  // namespace harvest
