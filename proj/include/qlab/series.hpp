#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qlab/error.hpp"
#include "qlab/poly.hpp"
#include "qlab/quiver.hpp"

namespace qlab {

// Coefficient-domain hooks shared by BigRational and RationalFunction.
inline bool coeff_is_zero(const BigRational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const RationalFunction& c) { return c.is_zero(); }
inline BigRational coeff_scale(const BigRational& c, const BigRational& s) { return c * s; }
inline RationalFunction coeff_scale(const RationalFunction& c, const BigRational& s) { return c.scaled(s); }
inline BigRational coeff_inverse(const BigRational& c) { return c.inverse(); }
inline RationalFunction coeff_inverse(const RationalFunction& c) { return c.inverse(); }
// Adams operator on coefficients: t^l -> t^(kl); constants are fixed.
inline BigRational coeff_adams(const BigRational& c, long /*k*/) { return c; }
inline RationalFunction coeff_adams(const RationalFunction& c, long k) { return c.substitute_power(k); }

// Multivariate power series in z_i truncated to a componentwise box: only
// exponents d <= box are represented, everything beyond is dropped.  Zero
// coefficients are never stored, so equality is structural.
template <class D>
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(DimVector box) : box_(std::move(box)) {
        for (int b : box_)
            if (b < 0) throw UsageError("negative truncation box entry");
    }

    static TruncatedSeries one(const DimVector& box) {
        TruncatedSeries s(box);
        s.set(DimVector(box.size(), 0), D(1));
        return s;
    }

    const DimVector& box() const { return box_; }
    const std::map<DimVector, D>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    const D& coeff(const DimVector& d) const {
        static const D zero{};
        const auto it = c_.find(d);
        return it == c_.end() ? zero : it->second;
    }

    void set(const DimVector& d, D v) {
        check_key(d);
        if (!leq(d, box_)) return; // outside the box: dropped by definition
        if (coeff_is_zero(v))
            c_.erase(d);
        else
            c_[d] = std::move(v);
    }

    void add_to(const DimVector& d, const D& v) {
        check_key(d);
        if (!leq(d, box_)) return;
        auto [it, fresh] = c_.try_emplace(d, v);
        if (!fresh) {
            it->second = it->second + v;
            if (coeff_is_zero(it->second)) c_.erase(it);
        }
    }

    D constant_term() const { return coeff(DimVector(box_.size(), 0)); }

    bool operator==(const TruncatedSeries& o) const { return box_ == o.box_ && c_ == o.c_; }

    TruncatedSeries scaled(const D& s) const {
        TruncatedSeries r(box_);
        for (const auto& [d, c] : c_) r.set(d, c * s);
        return r;
    }

    TruncatedSeries scaled_q(const BigRational& s) const {
        TruncatedSeries r(box_);
        for (const auto& [d, c] : c_) r.set(d, coeff_scale(c, s));
        return r;
    }

    // Restriction to a smaller box.
    TruncatedSeries truncated(const DimVector& new_box) const {
        if (!leq(new_box, box_)) throw UsageError("truncated() cannot grow the box");
        TruncatedSeries r(new_box);
        for (const auto& [d, c] : c_)
            if (leq(d, new_box)) r.set(d, c);
        return r;
    }

  private:
    void check_key(const DimVector& d) const {
        if (d.size() != box_.size()) throw UsageError("series key length mismatch");
        for (int x : d)
            if (x < 0) throw UsageError("negative series exponent");
    }
    DimVector box_;
    std::map<DimVector, D> c_;
};

using SeriesQ = TruncatedSeries<BigRational>;
using SeriesRF = TruncatedSeries<RationalFunction>;

namespace detail {
// All lattice points <= box in graded-lex order (total degree, then lex), so
// every proper componentwise predecessor of a key comes before it.
std::vector<DimVector> box_keys_graded(const DimVector& box);
int moebius(int n);
} // namespace detail

template <class D>
void require_same_box(const TruncatedSeries<D>& f, const TruncatedSeries<D>& g) {
    if (f.box() != g.box()) throw UsageError("series box mismatch");
}

template <class D>
TruncatedSeries<D> operator+(const TruncatedSeries<D>& f, const TruncatedSeries<D>& g) {
    require_same_box(f, g);
    TruncatedSeries<D> r = f;
    for (const auto& [d, c] : g.coeffs()) r.add_to(d, c);
    return r;
}

template <class D>
TruncatedSeries<D> operator-(const TruncatedSeries<D>& f, const TruncatedSeries<D>& g) {
    require_same_box(f, g);
    TruncatedSeries<D> r = f;
    for (const auto& [d, c] : g.coeffs()) r.add_to(d, D(0) - c);
    return r;
}

// Cauchy product, truncated to the common box.
template <class D>
TruncatedSeries<D> operator*(const TruncatedSeries<D>& f, const TruncatedSeries<D>& g) {
    require_same_box(f, g);
    TruncatedSeries<D> r(f.box());
    for (const auto& [d, cf] : f.coeffs()) {
        for (const auto& [e, cg] : g.coeffs()) {
            if (!leq(d + e, f.box())) continue;
            r.add_to(d + e, cf * cg);
        }
    }
    return r;
}

// Multiplicative inverse; requires an invertible constant term.
template <class D>
TruncatedSeries<D> series_inverse(const TruncatedSeries<D>& f) {
    const D c0 = f.constant_term();
    if (coeff_is_zero(c0)) throw UsageError("series_inverse: zero constant term");
    const D c0_inv = coeff_inverse(c0);
    TruncatedSeries<D> g(f.box());
    for (const DimVector& k : detail::box_keys_graded(f.box())) {
        if (is_zero(k)) {
            g.set(k, c0_inv);
            continue;
        }
        D acc{};
        for (const auto& [j, cf] : f.coeffs()) {
            if (is_zero(j) || !leq(j, k)) continue;
            acc = acc + cf * g.coeff(k - j);
        }
        g.set(k, D(0) - c0_inv * acc);
    }
    return g;
}

// psi_k: z^d -> z^(kd) together with the coefficient-level rescaling
// t^l -> t^(kl); terms pushed past the box are dropped.
template <class D>
TruncatedSeries<D> adams(long k, const TruncatedSeries<D>& f) {
    if (k < 1) throw UsageError("adams operator needs k >= 1");
    if (k == 1) return f;
    TruncatedSeries<D> r(f.box());
    for (const auto& [d, c] : f.coeffs()) r.set(scaled(d, static_cast<int>(k)), coeff_adams(c, k));
    return r;
}

// Ordinary exp of a series with zero constant term: sum of f^n / n!.  The
// augmentation ideal is nilpotent modulo the truncation, so n <= |box|.
template <class D>
TruncatedSeries<D> series_exp(const TruncatedSeries<D>& f) {
    if (!coeff_is_zero(f.constant_term())) throw UsageError("series_exp: nonzero constant term");
    const long n_max = total(f.box());
    TruncatedSeries<D> acc = TruncatedSeries<D>::one(f.box());
    TruncatedSeries<D> term = acc;
    for (long n = 1; n <= n_max; ++n) {
        term = (term * f).scaled_q(BigRational(1, n));
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc;
}

// Ordinary log of a series with constant term 1.
template <class D>
TruncatedSeries<D> series_log(const TruncatedSeries<D>& f) {
    const D c0 = f.constant_term();
    if (coeff_is_zero(c0 - D(1))) {
        // fallthrough: constant term is exactly 1
    } else {
        throw UsageError("series_log: constant term is not 1");
    }
    TruncatedSeries<D> u = f;
    u.add_to(DimVector(f.box().size(), 0), D(0) - D(1));
    const long n_max = total(f.box());
    TruncatedSeries<D> acc(f.box());
    TruncatedSeries<D> pow = TruncatedSeries<D>::one(f.box());
    for (long n = 1; n <= n_max; ++n) {
        pow = pow * u;
        if (pow.is_zero()) break;
        acc = acc + pow.scaled_q(BigRational(n % 2 == 1 ? 1 : -1, n));
    }
    return acc;
}

// Plethystic exponential Exp(f) = exp(sum_k psi_k(f)/k); f(0) must vanish.
template <class D>
TruncatedSeries<D> pleth_exp(const TruncatedSeries<D>& f) {
    if (!coeff_is_zero(f.constant_term())) throw UsageError("pleth_exp: nonzero constant term");
    const long k_max = total(f.box());
    TruncatedSeries<D> g(f.box());
    for (long k = 1; k <= k_max; ++k) {
        const TruncatedSeries<D> fk = adams(k, f);
        if (fk.is_zero()) continue;
        g = g + fk.scaled_q(BigRational(1, k));
    }
    return series_exp(g);
}

// Plethystic logarithm, the inverse of pleth_exp: Moebius inversion of the
// Adams averaging applied to the ordinary log.  f(0) must equal 1.
template <class D>
TruncatedSeries<D> pleth_log(const TruncatedSeries<D>& f) {
    const TruncatedSeries<D> h = series_log(f);
    const long k_max = total(f.box());
    TruncatedSeries<D> g(f.box());
    for (long k = 1; k <= k_max; ++k) {
        const int mu = detail::moebius(static_cast<int>(k));
        if (mu == 0) continue;
        const TruncatedSeries<D> hk = adams(k, h);
        if (hk.is_zero()) continue;
        g = g + hk.scaled_q(BigRational(mu, k));
    }
    return g;
}

// Drop every coefficient with |d| > cap (derived utility on top of the
// componentwise box).
template <class D>
TruncatedSeries<D> truncate_total_degree(const TruncatedSeries<D>& f, long cap) {
    TruncatedSeries<D> r(f.box());
    for (const auto& [d, c] : f.coeffs())
        if (total(d) <= cap) r.set(d, c);
    return r;
}

// Exact substitution t = x into every coefficient.  Reports the offending
// monomial if some denominator vanishes at x.
SeriesQ evaluate_t(const SeriesRF& f, const BigRational& x);

// First key (in graded-lex order) where the two series differ, if any.
template <class D>
std::optional<DimVector> first_difference(const TruncatedSeries<D>& f, const TruncatedSeries<D>& g) {
    require_same_box(f, g);
    for (const DimVector& k : detail::box_keys_graded(f.box()))
        if (!coeff_is_zero(f.coeff(k) - g.coeff(k))) return k;
    return std::nullopt;
}

} // namespace qlab
