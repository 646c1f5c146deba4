#include "qlab/hua.hpp"

#include <algorithm>

#include "qlab/error.hpp"

namespace qlab {

RationalFunction inverse_pochhammer(int n) {
    if (n < 0) throw UsageError("inverse_pochhammer: negative n");
    RationalFunction r(1);
    for (int k = 1; k <= n; ++k) r *= RationalFunction::one_minus_t_power_inverse(k);
    return r;
}

RationalFunction inverse_pochhammer(const DimVector& n) {
    RationalFunction r(1);
    for (int ni : n) r *= inverse_pochhammer(ni);
    return r;
}

RationalFunction multipartition_weight(const MultiPartition& tau, const Quiver& q) {
    if (static_cast<int>(tau.parts.size()) != q.num_vertices())
        throw UsageError("multipartition does not match the quiver's vertex set");
    RationalFunction x(1);
    const int rows = tau.rows();
    for (int k = 1; k <= rows; ++k) {
        const DimVector rk = tau.row(k);
        const DimVector rk1 = tau.row(k + 1);
        const DimVector diff = rk - rk1;
        if (std::any_of(diff.begin(), diff.end(), [](int v) { return v < 0; }))
            throw CheckError("multipartition rows are not weakly decreasing");
        x *= RationalFunction::t_power(euler_form(q, rk, rk)) * inverse_pochhammer(diff);
    }
    return x;
}

SeriesRF hua_series(const Quiver& q, const DimVector& w, const DimVector& box) {
    q.check_dim(box);
    if (static_cast<int>(w.size()) != q.num_vertices()) throw UsageError("framing vector length mismatch");
    SeriesRF r(box);
    for (const MultiPartition& tau : enumerate_multipartitions(box)) {
        RationalFunction term = multipartition_weight(tau, q).reverse_t();
        const long w_dot = tau.empty() ? 0 : dot(w, tau.row(1));
        if (w_dot != 0) term *= RationalFunction::t_power(w_dot);
        r.add_to(tau.sizes(), term);
    }
    return r;
}

const LaurentPoly& KacTable::at(const DimVector& d) const {
    static const LaurentPoly zero;
    const auto it = polys.find(d);
    return it == polys.end() ? zero : it->second;
}

KacTable kac_polynomials(const Quiver& q, const DimVector& box) {
    const SeriesRF r = hua_series(q, DimVector(box.size(), 0), box);
    const SeriesRF g = pleth_log(r);
    const RationalFunction t_minus_1(LaurentPoly::t_power(1) - LaurentPoly(1));
    KacTable table{q, box, {}};
    for (const auto& [d, c] : g.coeffs()) {
        if (is_zero(d)) continue;
        const RationalFunction a = c * t_minus_1;
        if (!a.is_polynomial())
            throw CheckError("Kac coefficient at z^" + [&] {
                std::string s;
                for (int x : d) s += (s.empty() ? "" : ",") + std::to_string(x);
                return "[" + s + "]";
            }() + " is not a polynomial: " + a.str());
        if (!a.is_zero()) table.polys.emplace(d, a.as_polynomial());
    }
    return table;
}

std::map<DimVector, LaurentPoly> reciprocal_kac(const KacTable& table) {
    std::map<DimVector, LaurentPoly> out;
    for (const auto& [d, a] : table.polys) {
        const long e = euler_form(table.quiver, d, d);
        out.emplace(d, a.reverse_t().shifted(1 - e));
    }
    return out;
}

std::vector<KacEntryCheck> kac_table_checks(const KacTable& table) {
    std::vector<KacEntryCheck> out;
    for (const auto& [d, a] : table.polys) {
        KacEntryCheck c{d, false, false, false};
        c.monic = !a.is_zero() && a.leading_coeff().is_one();
        c.degree_matches = a.degree() == 1 - euler_form(table.quiver, d, d) && a.valuation() >= 0;
        c.nonneg_integer_coeffs =
            a.is_integral() && std::all_of(a.coeffs().begin(), a.coeffs().end(),
                                           [](const BigRational& x) { return x.sign() >= 0; });
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace qlab
