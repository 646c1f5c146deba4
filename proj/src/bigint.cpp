#include "qlab/bigint.hpp"

#include <ostream>

#include "qlab/error.hpp"

namespace qlab {

void BigInt::throw_parse(const std::string& s) {
    throw UsageError("not an integer literal: '" + s + "'");
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

BigRational::BigRational(const BigInt& num, const BigInt& den) : BigRational() {
    if (den.is_zero()) throw UsageError("rational with zero denominator");
    mpq_set_num(q_, num.raw());
    mpq_set_den(q_, den.raw());
    mpq_canonicalize(q_);
}

BigRational::BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

BigRational::BigRational(const std::string& s) : BigRational() {
    if (mpq_set_str(q_, s.c_str(), 10) != 0) throw UsageError("not a rational literal: '" + s + "'");
    if (mpz_sgn(mpq_denref(q_)) == 0) throw UsageError("rational with zero denominator");
    mpq_canonicalize(q_);
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw UsageError("division by zero");
    BigRational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw UsageError("inverse of zero");
    BigRational r;
    mpq_inv(r.q_, q_);
    return r;
}

BigRational BigRational::pow(long e) const {
    if (e == 0) return BigRational(1);
    const BigRational base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    BigRational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
    return r; // powers of a canonical fraction stay canonical
}

std::string BigRational::str() const {
    std::string out = numerator().str();
    if (!is_integer()) out += "/" + denominator().str();
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.str(); }

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.raw(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.raw(), n, k);
    return r;
}

} // namespace qlab
