#include "qlab/poly.hpp"

#include <algorithm>
#include <utility>

#include "qlab/error.hpp"

namespace qlab {

LaurentPoly::LaurentPoly(const BigRational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

LaurentPoly::LaurentPoly(long valuation, std::vector<BigRational> coeffs) : val_(valuation), c_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(const BigRational& c, long k) {
    if (c.is_zero()) return {};
    return {k, {c}};
}

void LaurentPoly::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    size_t tail = c_.size();
    while (tail > lead && c_[tail - 1].is_zero()) --tail;
    if (lead == tail) {
        c_.clear();
        val_ = 0;
        return;
    }
    if (lead > 0 || tail < c_.size()) {
        c_ = std::vector<BigRational>(c_.begin() + static_cast<long>(lead), c_.begin() + static_cast<long>(tail));
        val_ += static_cast<long>(lead);
    }
}

bool LaurentPoly::is_one() const { return val_ == 0 && c_.size() == 1 && c_[0].is_one(); }

bool LaurentPoly::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& c) { return c.is_integer(); });
}

const BigRational& LaurentPoly::coeff(long k) const {
    static const BigRational zero(0);
    if (is_zero() || k < val_ || k > degree()) return zero;
    return c_[static_cast<size_t>(k - val_)];
}

const BigRational& LaurentPoly::leading_coeff() const {
    if (is_zero()) throw UsageError("leading coefficient of zero polynomial");
    return c_.back();
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long lo = std::min(a.val_, b.val_);
    const long hi = std::max(a.degree(), b.degree());
    std::vector<BigRational> c(static_cast<size_t>(hi - lo + 1), BigRational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[static_cast<size_t>(a.val_ - lo) + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[static_cast<size_t>(b.val_ - lo) + i] += b.c_[i];
    return {lo, std::move(c)};
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return {a.val_ + b.val_, std::move(c)};
}

LaurentPoly LaurentPoly::scaled(const BigRational& c) const {
    if (c.is_zero()) return {};
    LaurentPoly r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    if (is_zero()) return {};
    LaurentPoly r(*this);
    r.val_ += k;
    return r;
}

LaurentPoly LaurentPoly::substitute_power(long k) const {
    if (k < 1) throw UsageError("substitute_power requires k >= 1");
    if (is_zero() || k == 1) return *this;
    std::vector<BigRational> c(static_cast<size_t>(k) * (c_.size() - 1) + 1, BigRational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i * static_cast<size_t>(k)] = c_[i];
    return {val_ * k, std::move(c)};
}

LaurentPoly LaurentPoly::reverse_t() const {
    if (is_zero()) return {};
    std::vector<BigRational> c(c_.rbegin(), c_.rend());
    return {-degree(), std::move(c)};
}

BigRational LaurentPoly::evaluate(const BigRational& x) const {
    if (is_zero()) return BigRational(0);
    if (x.is_zero() && val_ < 0) throw UsageError("Laurent polynomial evaluated at 0");
    BigRational acc(0); // Horner on the stored window
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return val_ == 0 ? acc : acc * x.pow(val_);
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const BigRational& c = c_[i];
        if (c.is_zero()) continue;
        const long k = val_ + static_cast<long>(i);
        const bool neg = c.sign() < 0;
        const BigRational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        std::string coeff;
        if (!mag.is_one() || k == 0) coeff = mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
        out += coeff;
        if (k != 0) {
            out += "t";
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
    if (b.is_zero()) throw UsageError("polynomial division by zero");
    if (!a.is_polynomial() || !b.is_polynomial()) throw UsageError("divmod requires honest polynomials");
    q = LaurentPoly();
    r = a;
    const BigRational lead_inv = b.leading_coeff().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const BigRational c = r.leading_coeff() * lead_inv;
        const long k = r.degree() - b.degree();
        const LaurentPoly term = LaurentPoly::monomial(c, k);
        q += term;
        r -= term * b;
    }
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        LaurentPoly q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading_coeff().inverse()); // monic
}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw UsageError("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::one_minus_t_power_inverse(long k) {
    return RationalFunction(LaurentPoly(1), LaurentPoly(1) - LaurentPoly::t_power(k));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Move all powers of t into the numerator's valuation.
    num_ = num_.shifted(-den_.valuation());
    den_ = den_.shifted(-den_.valuation());
    const long num_val = num_.valuation();
    LaurentPoly num_poly = num_.shifted(-num_val);
    const LaurentPoly g = poly_gcd(num_poly, den_);
    if (g.degree() > 0) {
        LaurentPoly q, r;
        poly_divmod(num_poly, g, q, r);
        num_poly = q;
        poly_divmod(den_, g, q, r);
        den_ = q;
    }
    const BigRational lead = den_.leading_coeff();
    if (!lead.is_one()) {
        const BigRational inv = lead.inverse();
        num_poly = num_poly.scaled(inv);
        den_ = den_.scaled(inv);
    }
    num_ = num_poly.shifted(num_val);
}

const LaurentPoly& RationalFunction::as_polynomial() const {
    if (!is_polynomial()) throw CheckError("rational function is not a polynomial: " + str());
    return num_;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw UsageError("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw UsageError("inverse of zero rational function");
    return {den_, num_};
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return RationalFunction(1);
    RationalFunction base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    RationalFunction acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

RationalFunction RationalFunction::scaled(const BigRational& c) const { return {num_.scaled(c), den_}; }

RationalFunction RationalFunction::substitute_power(long k) const {
    return {num_.substitute_power(k), den_.substitute_power(k)};
}

RationalFunction RationalFunction::reverse_t() const { return {num_.reverse_t(), den_.reverse_t()}; }

BigRational RationalFunction::evaluate(const BigRational& x) const {
    const BigRational d = den_.evaluate(x);
    if (d.is_zero()) throw CheckError("denominator vanishes at t = " + x.str() + " in " + str());
    return num_.evaluate(x) / d;
}

namespace {
std::string wrap_operand(const LaurentPoly& p) {
    const std::string s = p.str();
    const bool multi = s.find_first_of("+-", 1) != std::string::npos || s[0] == '-';
    return multi ? "(" + s + ")" : s;
}
} // namespace

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return wrap_operand(num_) + "/" + wrap_operand(den_);
}

} // namespace qlab
