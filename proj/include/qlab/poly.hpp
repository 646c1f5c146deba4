#pragma once

#include <string>
#include <vector>

#include "qlab/bigint.hpp"

namespace qlab {

// Laurent polynomial in one variable t over the rationals.  Coefficients are
// stored lowest degree first starting at `valuation()`; the first and last
// stored coefficients are nonzero unless the polynomial is zero (empty).
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(const BigRational& c); // NOLINT: constant polynomial
    LaurentPoly(long c) : LaurentPoly(BigRational(c)) {}
    LaurentPoly(long valuation, std::vector<BigRational> coeffs);

    static LaurentPoly t_power(long k) { return {k, {BigRational(1)}}; }
    static LaurentPoly monomial(const BigRational& c, long k);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    // Honest polynomial: no negative powers of t.
    bool is_polynomial() const { return is_zero() || val_ >= 0; }
    bool is_integral() const;

    long valuation() const { return val_; }
    long degree() const { return is_zero() ? 0 : val_ + static_cast<long>(c_.size()) - 1; }
    const BigRational& coeff(long k) const; // coefficient of t^k
    const BigRational& leading_coeff() const;
    const std::vector<BigRational>& coeffs() const { return c_; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const BigRational& c) const;
    LaurentPoly shifted(long k) const; // multiply by t^k

    // t -> t^k for k >= 1 (Adams rescaling of exponents).
    LaurentPoly substitute_power(long k) const;
    // t -> 1/t (reverses the coefficient list, negates the degree window).
    LaurentPoly reverse_t() const;

    // Evaluation at a nonzero rational point (nonzero required only when the
    // valuation is negative).
    BigRational evaluate(const BigRational& x) const;

    bool operator==(const LaurentPoly& o) const { return val_ == o.val_ && c_ == o.c_; }

    // Canonical display, highest power first: "t^2+1", "2t^-1", "-t+3".
    std::string str() const;

  private:
    void normalize();
    long val_ = 0;
    std::vector<BigRational> c_;
};

// Division with remainder for honest polynomials (nonnegative valuations,
// b nonzero): a = q*b + r with deg r < deg b.
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);
// Monic gcd of honest polynomials; gcd(0,0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

// Rational function in t, canonical form: denominator is an honest monic
// polynomial with nonzero constant term and gcd(num, den) = 1 (any power of t
// is carried by the numerator's valuation).  Equality is structural.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const BigRational& c) : num_(c), den_(1) {} // NOLINT
    RationalFunction(long c) : num_(c), den_(1) {}               // NOLINT
    RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {} // NOLINT
    RationalFunction(LaurentPoly num, LaurentPoly den);

    static RationalFunction t_power(long k) { return RationalFunction(LaurentPoly::t_power(k)); }
    // 1/(1 - t^k)
    static RationalFunction one_minus_t_power_inverse(long k);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one() && num_.is_polynomial(); }
    const LaurentPoly& as_polynomial() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const;
    RationalFunction pow(long e) const;
    RationalFunction scaled(const BigRational& c) const;

    RationalFunction substitute_power(long k) const;
    RationalFunction reverse_t() const;

    // Exact evaluation at t = x; throws CheckError if the denominator
    // vanishes there (x = 0 additionally requires num valuation >= 0).
    BigRational evaluate(const BigRational& x) const;

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    // "num" or "num/den" with multi-term operands parenthesized,
    // e.g. "(t^2+1)/(t-1)".
    std::string str() const;

  private:
    void normalize();
    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace qlab
