#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qlab {

// Small finite field F_{p^r}, p^r <= 16, with full lookup tables.  Extension
// fields use a fixed modulus per size so counts are reproducible bit for bit:
// F4: x^2+x+1, F8: x^3+x+1, F9: x^2+1, F16: x^4+x+1.  Elements are integers
// 0..q-1 whose base-p digits are the residue polynomial's coefficients.
class FiniteField {
  public:
    static FiniteField make(int p, int r);
    // Parse "p" or "p^r".
    static FiniteField parse(const std::string& spec);

    int p() const { return p_; }
    int r() const { return r_; }
    int q() const { return q_; }
    std::string name() const;

    uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const; // throws on 0

  private:
    FiniteField() = default;
    size_t idx(uint8_t a, uint8_t b) const { return static_cast<size_t>(a) * q_ + b; }
    void build_tables(const std::vector<int>& modulus);
    void self_check() const;

    int p_ = 0, r_ = 0, q_ = 0;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

// Factor q = p^r and build the field; rejects non prime powers.
FiniteField field_of_order(int q);

// Dense matrix over a small finite field; entries are field codes.
struct FqMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> a;

    FqMatrix() = default;
    FqMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    bool is_zero() const;
    static FqMatrix identity(int n);

    bool operator==(const FqMatrix&) const = default;
};

FqMatrix fq_add(const FiniteField& f, const FqMatrix& x, const FqMatrix& y);
FqMatrix fq_sub(const FiniteField& f, const FqMatrix& x, const FqMatrix& y);
FqMatrix fq_mul(const FiniteField& f, const FqMatrix& x, const FqMatrix& y);
FqMatrix fq_transpose(const FqMatrix& x);
FqMatrix fq_hstack(const FqMatrix& x, const FqMatrix& y);
FqMatrix fq_vstack(const FqMatrix& x, const FqMatrix& y);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> fq_rref(const FiniteField& f, FqMatrix& m);
int fq_rank(const FiniteField& f, FqMatrix m);
// Columns form a basis of { v : m v = 0 }.
FqMatrix fq_kernel_basis(const FiniteField& f, const FqMatrix& m);
// Columns form a basis of the column space.
FqMatrix fq_column_space(const FiniteField& f, const FqMatrix& m);
// Rows C with C v = 0 iff v lies in the column space of m.
FqMatrix fq_column_space_constraints(const FiniteField& f, const FqMatrix& m);

// Matrix power and nilpotency test (x^n = 0 for an n x n matrix).
bool fq_is_nilpotent(const FiniteField& f, const FqMatrix& m);

} // namespace qlab
