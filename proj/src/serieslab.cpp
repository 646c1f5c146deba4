#include "qlab/serieslab.hpp"

#include <algorithm>

#include "qlab/error.hpp"

namespace qlab {

namespace {

// sum_d Abar_d(t) t^<d,d> / (t-1) z^d restricted by a support filter.
SeriesRF exp_argument(const KacTable& table, const std::function<bool(const DimVector&)>& keep) {
    SeriesRF arg(table.box);
    const RationalFunction inv_t_minus_1(LaurentPoly(1), LaurentPoly::t_power(1) - LaurentPoly(1));
    const auto rec = reciprocal_kac(table);
    for (const auto& [d, abar] : rec) {
        if (!keep(d)) continue;
        const long e = euler_form(table.quiver, d, d);
        arg.add_to(d, RationalFunction(abar.shifted(e)) * inv_t_minus_1);
    }
    return arg;
}

// The z-expansion of prod_{l >= 0} (1 - t^m s^l z^d)^(-1) with s = 1/t:
// by Euler's identity the coefficient of z^(kd) is t^(mk) / prod_{j=1..k}(1 - t^(-j)).
// Raising to a positive integer power a multiplies a copies of the series.
SeriesRF geometric_factor_family(const DimVector& box, const DimVector& d, long m, long a) {
    SeriesRF one_copy(box);
    RationalFunction coeff(1);
    const RationalFunction tm = RationalFunction::t_power(m);
    for (int k = 0;; ++k) {
        const DimVector kd = scaled(d, k);
        if (!leq(kd, box)) break;
        one_copy.set(kd, coeff);
        // next term: multiply by t^m / (1 - t^-(k+1))
        coeff *= tm * RationalFunction(LaurentPoly(1),
                                       LaurentPoly(1) - LaurentPoly::t_power(-(k + 1)));
    }
    SeriesRF acc = SeriesRF::one(box);
    for (long i = 0; i < a; ++i) acc = acc * one_copy;
    return acc;
}

} // namespace

SeriesRF p_series(const KacTable& table) {
    return pleth_exp(exp_argument(table, [](const DimVector&) { return true; }));
}

SeriesRF p_series(const Quiver& q, const DimVector& box) { return p_series(kac_polynomials(q, box)); }

SeriesRF p_series_product_form(const KacTable& table) {
    SeriesRF acc = SeriesRF::one(table.box);
    for (const auto& [d, a] : table.polys) {
        for (long m = a.valuation(); m <= a.degree(); ++m) {
            const BigRational& am = a.coeff(m);
            if (am.is_zero()) continue;
            if (!am.is_integer() || am.sign() < 0)
                throw CheckError("product form needs nonnegative integer Kac coefficients");
            acc = acc * geometric_factor_family(table.box, d, -m, am.numerator().to_long());
        }
    }
    return acc;
}

SeriesRF p_series_product_form(const Quiver& q, const DimVector& box) {
    return p_series_product_form(kac_polynomials(q, box));
}

SeriesQ lambda_prediction(const Quiver& q, const BigRational& t, const DimVector& box) {
    if (!t.is_integer() || t < BigRational(2)) throw UsageError("lambda_prediction needs integer t >= 2");
    return evaluate_t(p_series(q, box), t);
}

SeriesRF mu_fiber_series(const Quiver& q, const DimVector& box) {
    const KacTable table = kac_polynomials(q, box);
    SeriesRF arg(box);
    const RationalFunction factor(LaurentPoly::t_power(1),
                                  LaurentPoly::t_power(1) - LaurentPoly(1)); // t/(t-1)
    for (const auto& [d, a] : table.polys) arg.add_to(d, RationalFunction(a) * factor);
    return pleth_exp(arg);
}

long nakajima_half_dim(const Quiver& q, const DimVector& v, const DimVector& w) {
    const long twice = 2 * dot(v, w) - symmetrized_form(q, v, v);
    if (twice % 2 != 0) throw CheckError("half-integral Nakajima dimension");
    return twice / 2;
}

SeriesQ nakajima_l_series(const Quiver& q, const DimVector& w, const BigRational& t, const DimVector& box) {
    if (q.has_loops()) throw UsageError("nakajima_l_series requires a loop-free quiver");
    if (!t.is_integer() || t < BigRational(2)) throw UsageError("nakajima_l_series needs integer t >= 2");
    const BigRational t_inv = t.inverse();
    const SeriesQ num = evaluate_t(hua_series(q, w, box), t_inv);
    const SeriesQ den = evaluate_t(hua_series(q, DimVector(box.size(), 0), box), t_inv);
    return num * series_inverse(den);
}

LaurentPoly gaussian_binomial(int w, int wp) {
    if (wp < 0 || wp > w) return {};
    // Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]
    std::vector<LaurentPoly> row{LaurentPoly(1)}; // [0 0]
    for (int n = 1; n <= w; ++n) {
        std::vector<LaurentPoly> next(static_cast<size_t>(n) + 1);
        next[0] = LaurentPoly(1);
        for (int k = 1; k < n; ++k)
            next[static_cast<size_t>(k)] =
                row[static_cast<size_t>(k - 1)] + row[static_cast<size_t>(k)].shifted(k);
        next[static_cast<size_t>(n)] = LaurentPoly(1);
        row = std::move(next);
    }
    return row[static_cast<size_t>(wp)];
}

BigRational gaussian_binomial_at(int w, int wp, const BigRational& q) {
    if (wp < 0 || wp > w) return BigRational(0);
    // product formula, exact over the rationals
    BigRational r(1);
    for (int k = 1; k <= wp; ++k)
        r *= (q.pow(w - wp + k) - BigRational(1)) / (q.pow(k) - BigRational(1));
    return r;
}

BigRational graded_gaussian_at(const DimVector& w, const DimVector& wp, const BigRational& q) {
    if (w.size() != wp.size()) throw UsageError("graded gaussian binomial: length mismatch");
    BigRational r(1);
    for (size_t i = 0; i < w.size(); ++i) r *= gaussian_binomial_at(w[i], wp[i], q);
    return r;
}

long inversion_exponent(const DimVector& w, const DimVector& wp) {
    if (w.size() != wp.size()) throw UsageError("inversion exponent: length mismatch");
    long u = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        const long diff = w[i] - wp[i];
        u += diff * (diff - 1) / 2;
    }
    return u;
}

BigInt grassmannian_inversion(const std::map<DimVector, BigInt>& lcounts, const DimVector& v,
                              const BigRational& q) {
    BigRational acc(0);
    DimVector wp(v.size(), 0);
    for (;;) {
        const auto it = lcounts.find(wp);
        if (it == lcounts.end()) {
            std::string s;
            for (int x : wp) s += (s.empty() ? "" : ",") + std::to_string(x);
            throw UsageError("grassmannian_inversion: missing L count at w' = [" + s + "]");
        }
        const long sign_exp = total(v) - total(wp);
        BigRational term = q.pow(inversion_exponent(v, wp)) * graded_gaussian_at(v, wp, q) *
                           BigRational(it->second);
        acc += (sign_exp % 2 == 0) ? term : -term;
        // next w' <= v in mixed-radix order
        size_t i = 0;
        while (i < v.size()) {
            if (wp[i] < v[i]) {
                ++wp[i];
                break;
            }
            wp[i] = 0;
            ++i;
        }
        if (i == v.size()) break;
    }
    if (!acc.is_integer() || acc.sign() < 0)
        throw CheckError("grassmannian_inversion produced a non-natural value: " + acc.str());
    return acc.numerator();
}

QBinomIdentity qbinom_alternating_sum(int w, int a) {
    if (w < 0 || a < 0) throw UsageError("qbinom_alternating_sum needs w, a >= 0");
    RationalFunction acc(0);
    for (int wp = 0; wp <= w; ++wp) {
        const long e = static_cast<long>(wp) * (wp - 1) / 2 - static_cast<long>(a) * wp;
        RationalFunction term(gaussian_binomial(w, wp).shifted(e));
        acc += (wp % 2 == 0) ? term : -term;
    }
    return {acc.is_zero(), acc};
}

SeriesRF strata_series(const Quiver& q, const std::vector<int>& j, const DimVector& box) {
    for (int v : j)
        if (v < 0 || v >= q.num_vertices()) throw UsageError("strata_series: vertex out of range");
    const KacTable table = kac_polynomials(q, box);
    return pleth_exp(exp_argument(table, [&](const DimVector& d) { return !subset_of(support(d), j); }));
}

SeriesRF commuting_series(CommutingKind kind, int box) {
    if (box < 0) throw UsageError("commuting_series: negative box");
    const DimVector b{box};
    SeriesRF arg(b);
    // t/(t-1) resp. 1/(t-1), times z/(1-z) = z + z^2 + ...
    const RationalFunction c(kind == CommutingKind::second_nilpotent ? LaurentPoly::t_power(1)
                                                                     : LaurentPoly(1),
                             LaurentPoly::t_power(1) - LaurentPoly(1));
    for (int m = 1; m <= box; ++m) arg.set({m}, c);
    return pleth_exp(arg);
}

} // namespace qlab
