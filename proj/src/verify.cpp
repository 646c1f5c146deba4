#include "qlab/verify.hpp"

#include <algorithm>
#include <sstream>

#include "qlab/error.hpp"

namespace qlab {

namespace {

std::string dim_str(const DimVector& d) {
    std::string s;
    for (int x : d) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

std::vector<DimVector> keys_with_total_at_most(int n_vertices, int cap) {
    DimVector box(static_cast<size_t>(n_vertices), cap);
    std::vector<DimVector> keys;
    for (const DimVector& k : detail::box_keys_graded(box))
        if (total(k) <= cap) keys.push_back(k);
    return keys;
}

} // namespace

CheckResult compare_series(const std::string& id, const SeriesQ& lhs, const SeriesQ& rhs) {
    if (lhs.box() != rhs.box()) return {id, false, "box mismatch"};
    const auto diff = first_difference(lhs, rhs);
    if (!diff) return {id, true, "ok"};
    std::ostringstream os;
    os << "first difference at z^[" << dim_str(*diff) << "]: " << lhs.coeff(*diff).str()
       << " != " << rhs.coeff(*diff).str();
    return {id, false, os.str()};
}

std::vector<CheckResult> verify_lambda_identity(const std::string& name, const Quiver& q,
                                                const DimVector& box, const std::vector<int>& fields,
                                                const CountOptions& opts) {
    const SeriesRF prediction = p_series(q, box);
    std::vector<CheckResult> out;
    for (int qv : fields) {
        const FiniteField f = field_of_order(qv);
        const SeriesQ lhs = lambda_series_empirical(q, f, box, opts);
        const SeriesQ rhs = evaluate_t(prediction, BigRational(qv));
        out.push_back(compare_series("lambda-series/" + name + "/q=" + std::to_string(qv), lhs, rhs));
    }
    return out;
}

std::vector<CheckResult> verify_mu_identity(const std::string& name, const Quiver& q,
                                            const DimVector& box, const std::vector<int>& fields,
                                            const CountOptions& opts) {
    const SeriesRF prediction = mu_fiber_series(q, box);
    std::vector<CheckResult> out;
    for (int qv : fields) {
        const FiniteField f = field_of_order(qv);
        const SeriesQ lhs = mu_fiber_series_empirical(q, f, box, opts);
        const SeriesQ rhs = evaluate_t(prediction, BigRational(qv));
        out.push_back(compare_series("mu-fiber-series/" + name + "/q=" + std::to_string(qv), lhs, rhs));
    }
    return out;
}

std::vector<CheckResult> verify_commuting_identity(int d_max, const std::vector<int>& fields,
                                                   const CountOptions& opts) {
    std::vector<CheckResult> out;
    for (const CommutingKind kind : {CommutingKind::second_nilpotent, CommutingKind::both_nilpotent}) {
        const std::string kind_name =
            kind == CommutingKind::second_nilpotent ? "second-nilpotent" : "both-nilpotent";
        const SeriesRF prediction = commuting_series(kind, d_max);
        for (int qv : fields) {
            const FiniteField f = field_of_order(qv);
            const SeriesQ expect = evaluate_t(prediction, BigRational(qv));
            SeriesQ got(DimVector{d_max});
            for (int d = 0; d <= d_max; ++d) {
                const unsigned long long pairs = count_commuting(kind, d, f, opts);
                got.set({d}, BigRational(BigInt(static_cast<long>(pairs))) /
                                 BigRational(gl_order({d}, f.q())));
            }
            out.push_back(compare_series(
                "commuting/" + kind_name + "/dmax=" + std::to_string(d_max) + "/q=" + std::to_string(qv),
                got, expect));
        }
    }
    return out;
}

std::vector<CheckResult> verify_nakajima_identity(const std::string& name, const Quiver& q, int v_cap,
                                                  int w_cap, const std::vector<int>& fields,
                                                  const CountOptions& opts) {
    std::vector<CheckResult> out;
    const DimVector box(static_cast<size_t>(q.num_vertices()), v_cap);
    for (int qv : fields) {
        const FiniteField f = field_of_order(qv);
        for (const DimVector& w : keys_with_total_at_most(q.num_vertices(), w_cap)) {
            const SeriesQ ratio = nakajima_l_series(q, w, BigRational(qv), box);
            SeriesQ lhs(box), rhs(box);
            for (const DimVector& v : keys_with_total_at_most(q.num_vertices(), v_cap)) {
                const NakajimaCount c = count_nakajima_l(q, v, w, f, opts);
                lhs.set(v, BigRational(BigInt(static_cast<long>(c.count))) *
                               BigRational(qv).pow(-nakajima_half_dim(q, v, w)));
                rhs.set(v, ratio.coeff(v));
            }
            out.push_back(compare_series(
                "nakajima-ratio/" + name + "/w=" + dim_str(w) + "/q=" + std::to_string(qv), lhs, rhs));
        }
    }
    return out;
}

std::vector<CheckResult> verify_inversion_identity(const std::string& name, const Quiver& q, int v_cap,
                                                   const std::vector<int>& fields,
                                                   const CountOptions& opts) {
    std::vector<CheckResult> out;
    for (int qv : fields) {
        const FiniteField f = field_of_order(qv);
        for (const DimVector& v : keys_with_total_at_most(q.num_vertices(), v_cap)) {
            std::map<DimVector, BigInt> lcounts;
            for (const DimVector& wp : detail::box_keys_graded(v))
                lcounts.emplace(wp, BigInt(static_cast<long>(count_nakajima_l(q, v, wp, f, opts).count)));
            const BigInt inverted = grassmannian_inversion(lcounts, v, BigRational(qv));
            const BigInt direct(static_cast<long>(count_lambda(q, v, f, opts)));
            CheckResult r{"grassmannian-inversion/" + name + "/v=" + dim_str(v) + "/q=" + std::to_string(qv),
                          inverted == direct, "ok"};
            if (!r.pass) r.detail = "inverted " + inverted.str() + " != direct " + direct.str();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckResult> verify_qbinom_identity(int w_max) {
    std::vector<CheckResult> out;
    for (int w = 0; w <= w_max; ++w) {
        for (int a = 0; a < w; ++a) {
            const QBinomIdentity r = qbinom_alternating_sum(w, a);
            CheckResult c{"qbinom-alternating/w=" + std::to_string(w) + "/a=" + std::to_string(a),
                          r.vanishes, "ok"};
            if (!c.pass) c.detail = "expected 0, got " + r.value.str();
            out.push_back(std::move(c));
        }
        RationalFunction closed(1);
        for (int k = 1; k <= w; ++k)
            closed *= RationalFunction(LaurentPoly(1) - LaurentPoly::t_power(-k));
        const QBinomIdentity r = qbinom_alternating_sum(w, w);
        CheckResult c{"qbinom-alternating/w=" + std::to_string(w) + "/a=w", r.value == closed, "ok"};
        if (!c.pass) c.detail = "expected " + closed.str() + ", got " + r.value.str();
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CheckResult> verify_strata_identity(const std::string& name, const Quiver& q,
                                                const std::vector<int>& j, const DimVector& box,
                                                const std::vector<int>& fields,
                                                const CountOptions& opts) {
    std::vector<CheckResult> out;
    std::string j_names;
    for (int v : j) j_names += (j_names.empty() ? "" : ",") + q.vertex_ids()[static_cast<size_t>(v)];
    const SeriesRF prediction = strata_series(q, j, box);
    for (int qv : fields) {
        const FiniteField f = field_of_order(qv);
        const SeriesQ lhs = strata_zero_series_empirical(q, j, f, box, opts);
        const SeriesQ rhs = evaluate_t(prediction, BigRational(qv));
        out.push_back(compare_series("strata-leading-series/" + name + "/J=" + j_names + "/q=" + std::to_string(qv),
                                     lhs, rhs));
        for (const DimVector& d : detail::box_keys_graded(box)) {
            const auto buckets = strata_counts(q, j, d, f, opts);
            unsigned long long sum = 0;
            for (const auto& [n, c] : buckets) sum += c;
            const unsigned long long direct = count_lambda(q, d, f, opts);
            CheckResult c{"strata-completeness/" + name + "/J=" + j_names + "/d=" + dim_str(d) +
                              "/q=" + std::to_string(qv),
                          sum == direct, "ok"};
            if (!c.pass)
                c.detail = "strata sum " + std::to_string(sum) + " != " + std::to_string(direct);
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<CheckResult> verify_polynomial_count(const std::string& name, const Quiver& q,
                                                 const DimVector& d, const std::vector<int>& fit_fields,
                                                 const std::vector<int>& holdout_fields,
                                                 const CountOptions& opts) {
    std::vector<CheckResult> out;
    std::vector<std::pair<BigRational, BigRational>> points;
    for (int qv : fit_fields) {
        const FiniteField f = field_of_order(qv);
        points.emplace_back(BigRational(qv), BigRational(BigInt(static_cast<long>(count_lambda(q, d, f, opts)))));
    }
    // solve the Vandermonde system exactly for the monomial coefficients
    const size_t n = points.size();
    std::vector<std::vector<BigRational>> aug(n, std::vector<BigRational>(n + 1, BigRational(0)));
    for (size_t i = 0; i < n; ++i) {
        BigRational xp(1);
        for (size_t k = 0; k < n; ++k) {
            aug[i][k] = xp;
            xp *= points[i].first;
        }
        aug[i][n] = points[i].second;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && aug[pivot][col].is_zero()) ++pivot;
        std::swap(aug[pivot], aug[col]);
        const BigRational inv = aug[col][col].inverse();
        for (size_t k = col; k <= n; ++k) aug[col][k] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || aug[row][col].is_zero()) continue;
            const BigRational factor = aug[row][col];
            for (size_t k = col; k <= n; ++k) aug[row][k] -= factor * aug[col][k];
        }
    }
    std::vector<BigRational> coeffs(n);
    for (size_t i = 0; i < n; ++i) coeffs[i] = aug[i][n];
    const auto evaluate = [&coeffs](const BigRational& x) {
        BigRational acc(0);
        for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    };
    const bool integer_poly =
        std::all_of(coeffs.begin(), coeffs.end(), [](const BigRational& c) { return c.is_integer(); });
    CheckResult fit_ok{"polynomial-count/" + name + "/d=" + dim_str(d) + "/integer-fit", integer_poly, "ok"};
    if (!integer_poly) fit_ok.detail = "interpolant has non-integer coefficients";
    out.push_back(std::move(fit_ok));
    for (int qv : holdout_fields) {
        const FiniteField f = field_of_order(qv);
        const BigRational predicted = evaluate(BigRational(qv));
        const BigRational actual(BigInt(static_cast<long>(count_lambda(q, d, f, opts))));
        CheckResult c{"polynomial-count/" + name + "/d=" + dim_str(d) + "/q=" + std::to_string(qv),
                      predicted == actual, "ok"};
        if (!c.pass) c.detail = "fit predicts " + predicted.str() + ", counted " + actual.str();
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CheckResult> verify_default_suite(const CountOptions& opts) {
    std::vector<CheckResult> out;
    const auto append = [&out](std::vector<CheckResult> r) {
        out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    };
    const std::vector<int> q234{2, 3, 4};
    const std::vector<int> q23{2, 3};
    append(verify_lambda_identity("a1", zoo::point(), {3}, q234, opts));
    append(verify_lambda_identity("a2", zoo::a(2), {2, 2}, q234, opts));
    append(verify_lambda_identity("a2-reversed", zoo::a2_reversed(), {2, 2}, q234, opts));
    append(verify_lambda_identity("a3", zoo::a(3), {1, 1, 1}, q234, opts));
    append(verify_lambda_identity("kronecker", zoo::kronecker(), {2, 2}, {2}, opts));
    append(verify_lambda_identity("kronecker", zoo::kronecker(), {1, 1}, {3, 4}, opts));
    append(verify_mu_identity("a1", zoo::point(), {3}, q234, opts));
    append(verify_mu_identity("a2", zoo::a(2), {2, 2}, q234, opts));
    append(verify_mu_identity("kronecker", zoo::kronecker(), {1, 1}, q234, opts));
    append(verify_mu_identity("jordan", zoo::jordan(), {3}, q23, opts));
    append(verify_commuting_identity(3, q23, opts));
    append(verify_nakajima_identity("a1", zoo::point(), 2, 2, q23, opts));
    append(verify_nakajima_identity("a2", zoo::a(2), 2, 2, q23, opts));
    append(verify_inversion_identity("a1", zoo::point(), 2, q23, opts));
    append(verify_inversion_identity("a2", zoo::a(2), 2, q23, opts));
    append(verify_qbinom_identity(6));
    append(verify_strata_identity("a2", zoo::a(2), {0}, {2, 2}, q23, opts));
    append(verify_strata_identity("a2", zoo::a(2), {1}, {2, 2}, q23, opts));
    append(verify_polynomial_count("a2", zoo::a(2), {1, 1}, {2, 3, 4}, {5, 9}, opts));
    append(verify_polynomial_count("kronecker", zoo::kronecker(), {1, 1}, {2, 3, 4}, {5, 9}, opts));
    return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

} // namespace qlab
