#pragma once

#include <functional>
#include <map>

#include "qlab/hua.hpp"

namespace qlab {

// Generating series P(t, z) = Exp( 1/(t-1) * sum_d Abar_d(t) t^<d,d> z^d ),
// built from the Kac table of the quiver.
SeriesRF p_series(const Quiver& q, const DimVector& box);
SeriesRF p_series(const KacTable& table);

// The same series computed as the Euler product over positive roots d and
// coefficients a_{d,m} of A_d: prod_{d,m,l>=0} (1 - t^{-m-l} z^d)^{-a_{d,m}}.
// Each infinite product over l is summed in closed form per z-power, so the
// result is exact (see the geometric_factor_family helper).
SeriesRF p_series_product_form(const Quiver& q, const DimVector& box);
SeriesRF p_series_product_form(const KacTable& table);

// P evaluated at an integer t = q >= 2.
SeriesQ lambda_prediction(const Quiver& q, const BigRational& t, const DimVector& box);

// Exp( t/(t-1) * sum_d A_d(t) z^d ): the moment-map zero-fiber series.
SeriesRF mu_fiber_series(const Quiver& q, const DimVector& box);

// Ratio r(w, 1/q, z) / r(0, 1/q, z) of framed Hua series: its coefficient at
// z^v is q^{-d(v,w)} |L(v,w)(F_q)| with 2 d(v,w) = 2 v.w - (v,v).
SeriesQ nakajima_l_series(const Quiver& q, const DimVector& w, const BigRational& t, const DimVector& box);
// d(v, w) as above; integral for loop-free quivers.
long nakajima_half_dim(const Quiver& q, const DimVector& v, const DimVector& w);

// Gaussian binomial [w choose w']_q as a polynomial in q (Pascal recurrence;
// zero when w' < 0 or w' > w).
LaurentPoly gaussian_binomial(int w, int wp);
BigRational gaussian_binomial_at(int w, int wp, const BigRational& q);
// Graded version: product over components.
BigRational graded_gaussian_at(const DimVector& w, const DimVector& wp, const BigRational& q);

// u(w, w') = sum_i (w_i - w'_i)(w_i - w'_i - 1)/2
long inversion_exponent(const DimVector& w, const DimVector& wp);

// Alternating Grassmannian inversion: recovers |Lambda_v| from the counts
// |L(v, w')| for all w' <= v.  The result must be a nonnegative integer.
BigInt grassmannian_inversion(const std::map<DimVector, BigInt>& lcounts, const DimVector& v,
                              const BigRational& q);

// Symbolic alternating sum  sum_{w'=0..w} (-1)^{w'} q^{w'(w'-1)/2 - a w'} [w choose w']_q.
// Vanishes for 0 <= a < w; at a = w it equals prod_{k=1..w} (1 - q^{-k}).
struct QBinomIdentity {
    bool vanishes;
    RationalFunction value;
};
QBinomIdentity qbinom_alternating_sum(int w, int a);

// Exp over the Kac terms whose support is not contained in J: the leading
// stratum series of the J-stratification.
SeriesRF strata_series(const Quiver& q, const std::vector<int>& j, const DimVector& box);

// Commuting-variety series on one vertex: Exp(t z / ((t-1)(1-z))) for pairs
// (A, B) with B nilpotent, Exp(z / ((t-1)(1-z))) for both nilpotent.
enum class CommutingKind { second_nilpotent, both_nilpotent };
SeriesRF commuting_series(CommutingKind kind, int box);

} // namespace qlab
