#pragma once

#include <map>

#include "qlab/partitions.hpp"
#include "qlab/series.hpp"

namespace qlab {

// prod_{k=1..n} 1/(1 - t^k); equals 1 for n = 0.
RationalFunction inverse_pochhammer(int n);
// Componentwise product over a vector of naturals.
RationalFunction inverse_pochhammer(const DimVector& n);

// Weight X(tau, t) of a multipartition: the product over rows k >= 1 of
// t^<tau_k, tau_k> / prod (1 - t^j) taken over the row differences
// tau_k - tau_{k+1} (componentwise, always nonnegative).
RationalFunction multipartition_weight(const MultiPartition& tau, const Quiver& q);

// Hua's series r(w, t, z): the sum over multipartitions tau with sizes <= box
// of t^(w . tau_1) X(tau, 1/t) z^sizes(tau).
SeriesRF hua_series(const Quiver& q, const DimVector& w, const DimVector& box);

// Kac polynomials A_d(t) for every 0 != d <= box, extracted from the w = 0
// Hua series: (t-1) * pleth_log(r) must have polynomial coefficients.  Only
// nonzero polynomials are stored.
struct KacTable {
    Quiver quiver;
    DimVector box;
    std::map<DimVector, LaurentPoly> polys;

    const LaurentPoly& at(const DimVector& d) const; // zero polynomial if absent
};

KacTable kac_polynomials(const Quiver& q, const DimVector& box);

// Reciprocal polynomials A_d(1/t) t^(1 - <d,d>).
std::map<DimVector, LaurentPoly> reciprocal_kac(const KacTable& table);

// Structural facts every Kac table must satisfy.
struct KacEntryCheck {
    DimVector dim;
    bool monic;
    bool degree_matches; // degree == 1 - <d,d>
    bool nonneg_integer_coeffs;
    bool ok() const { return monic && degree_matches && nonneg_integer_coeffs; }
};

std::vector<KacEntryCheck> kac_table_checks(const KacTable& table);

} // namespace qlab
