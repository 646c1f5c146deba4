#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace qlab {

// Value-semantic wrapper around mpz_t.
class BigInt {
  public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); } // NOLINT: implicit by design
    explicit BigInt(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw_parse(s);
        }
    }
    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) { return apply(mpz_add, a, b); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return apply(mpz_sub, a, b); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return apply(mpz_mul, a, b); }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.z_, z_);
        return r;
    }
    BigInt& operator+=(const BigInt& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    // Truncated toward zero, like C integer division.
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return apply(mpz_tdiv_q, a, b); }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return apply(mpz_tdiv_r, a, b); }

    bool divisible_by(const BigInt& d) const { return mpz_divisible_p(z_, d.z_) != 0; }
    BigInt divexact(const BigInt& d) const { return apply(mpz_divexact, *this, d); }

    friend BigInt gcd(const BigInt& a, const BigInt& b) { return apply(mpz_gcd, a, b); }

    BigInt pow(unsigned long e) const {
        BigInt r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return sign() == 0; }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend auto operator<=>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) <=> 0; }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, out.size() + 1);
        return out;
    }

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

  private:
    static void throw_parse(const std::string& s);
    template <class F>
    static BigInt apply(F f, const BigInt& a, const BigInt& b) {
        BigInt r;
        f(r.z_, a.z_, b.z_);
        return r;
    }
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

// Exact rational number, always stored canonicalized (den > 0, gcd = 1).
class BigRational {
  public:
    BigRational() { mpq_init(q_); }
    BigRational(long v) : BigRational() { mpq_set_si(q_, v, 1); } // NOLINT: implicit by design
    BigRational(const BigInt& v) : BigRational() { mpq_set_z(q_, v.raw()); } // NOLINT
    BigRational(const BigInt& num, const BigInt& den);
    BigRational(long num, long den);
    explicit BigRational(const std::string& s);
    BigRational(const BigRational& o) : BigRational() { mpq_set(q_, o.q_); }
    BigRational(BigRational&& o) noexcept : BigRational() { mpq_swap(q_, o.q_); }
    BigRational& operator=(const BigRational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    BigRational& operator=(BigRational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~BigRational() { mpq_clear(q_); }

    friend BigRational operator+(const BigRational& a, const BigRational& b) { return apply(mpq_add, a, b); }
    friend BigRational operator-(const BigRational& a, const BigRational& b) { return apply(mpq_sub, a, b); }
    friend BigRational operator*(const BigRational& a, const BigRational& b) { return apply(mpq_mul, a, b); }
    friend BigRational operator/(const BigRational& a, const BigRational& b);
    BigRational operator-() const {
        BigRational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    BigRational& operator+=(const BigRational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    BigRational& operator-=(const BigRational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    BigRational& operator*=(const BigRational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    BigRational inverse() const;
    // Integer exponent, negative allowed (then *this must be nonzero).
    BigRational pow(long e) const;

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }

    BigInt numerator() const {
        BigInt n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    BigInt denominator() const {
        BigInt d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend auto operator<=>(const BigRational& a, const BigRational& b) { return mpq_cmp(a.q_, b.q_) <=> 0; }

    // "7/3", or just "7" for integers.
    std::string str() const;

  private:
    template <class F>
    static BigRational apply(F f, const BigRational& a, const BigRational& b) {
        BigRational r;
        f(r.q_, a.q_, b.q_);
        return r;
    }
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& v);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

} // namespace qlab
