#pragma once

#include "qlab/counting.hpp"

namespace qlab {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail; // "ok", or the first differing coefficient
};

// Exact comparison with a located first difference in the detail string.
CheckResult compare_series(const std::string& id, const SeriesQ& lhs, const SeriesQ& rhs);

// Empirical nilpotent-fiber series against the evaluated Kac-series
// prediction, one result per field.
std::vector<CheckResult> verify_lambda_identity(const std::string& name, const Quiver& q,
                                                const DimVector& box, const std::vector<int>& fields,
                                                const CountOptions& opts = {});

// Empirical full moment-fiber series against Exp(t/(t-1) sum A_d z^d).
std::vector<CheckResult> verify_mu_identity(const std::string& name, const Quiver& q,
                                            const DimVector& box, const std::vector<int>& fields,
                                            const CountOptions& opts = {});

// Commuting-pair counts against the one-loop closed forms, both kinds.
std::vector<CheckResult> verify_commuting_identity(int d_max, const std::vector<int>& fields,
                                                   const CountOptions& opts = {});

// Brute framed-fiber counts against the Hua-series ratio, for every framing
// vector with |w| <= w_cap and every listed field; coefficients compared for
// all v with |v| <= v_cap.
std::vector<CheckResult> verify_nakajima_identity(const std::string& name, const Quiver& q, int v_cap,
                                                  int w_cap, const std::vector<int>& fields,
                                                  const CountOptions& opts = {});

// Grassmannian inversion of brute framed counts against the direct nilpotent
// count, for every v with |v| <= v_cap.
std::vector<CheckResult> verify_inversion_identity(const std::string& name, const Quiver& q, int v_cap,
                                                   const std::vector<int>& fields,
                                                   const CountOptions& opts = {});

// Alternating q-binomial sums: zero below the diagonal, the closed product at
// a = w, for all w <= w_max.
std::vector<CheckResult> verify_qbinom_identity(int w_max);

// Leading-stratum series against its Exp form, plus per-dimension
// completeness of the stratification.
std::vector<CheckResult> verify_strata_identity(const std::string& name, const Quiver& q,
                                                const std::vector<int>& j, const DimVector& box,
                                                const std::vector<int>& fields,
                                                const CountOptions& opts = {});

// Counts over the fit fields interpolate a single integer polynomial that
// exactly predicts the held-out fields.
std::vector<CheckResult> verify_polynomial_count(const std::string& name, const Quiver& q,
                                                 const DimVector& d, const std::vector<int>& fit_fields,
                                                 const std::vector<int>& holdout_fields,
                                                 const CountOptions& opts = {});

// The canonical sweep used by the command-line verify with no arguments.
std::vector<CheckResult> verify_default_suite(const CountOptions& opts = {});

bool all_pass(const std::vector<CheckResult>& results);

} // namespace qlab
