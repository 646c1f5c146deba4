#include "qlab/gf.hpp"

#include <algorithm>

#include "qlab/error.hpp"

namespace qlab {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// residue polynomials as digit vectors, little-endian, length r
std::vector<int> decode(int e, int p, int r) {
    std::vector<int> c(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i, e /= p) c[static_cast<size_t>(i)] = e % p;
    return c;
}

int encode(const std::vector<int>& c, int p) {
    int e = 0;
    for (size_t i = c.size(); i-- > 0;) e = e * p + c[i];
    return e;
}

// multiply two residues mod (modulus, p); modulus is monic of degree r
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& modulus,
                             int p, int r) {
    std::vector<int> prod(static_cast<size_t>(2 * r - 1), 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) prod[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] % p;
    for (int k = 2 * r - 2; k >= r; --k) {
        const int c = prod[static_cast<size_t>(k)] % p;
        if (c == 0) continue;
        // subtract c * x^(k-r) * modulus
        for (int i = 0; i <= r; ++i)
            prod[static_cast<size_t>(k - r + i)] =
                ((prod[static_cast<size_t>(k - r + i)] - c * modulus[static_cast<size_t>(i)]) % p + p * p) % p;
    }
    std::vector<int> out(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i) out[static_cast<size_t>(i)] = prod[static_cast<size_t>(i)] % p;
    return out;
}

std::vector<int> fixed_modulus(int p, int r) {
    if (p == 2 && r == 2) return {1, 1, 1};       // x^2+x+1
    if (p == 2 && r == 3) return {1, 1, 0, 1};    // x^3+x+1
    if (p == 3 && r == 2) return {1, 0, 1};       // x^2+1
    if (p == 2 && r == 4) return {1, 1, 0, 0, 1}; // x^4+x+1
    throw UsageError("no modulus on file for p=" + std::to_string(p) + ", r=" + std::to_string(r));
}

// irreducibility over F_p by trial division with all monic polys of degree <= r/2
bool modulus_irreducible(const std::vector<int>& modulus, int p) {
    const int r = static_cast<int>(modulus.size()) - 1;
    for (int deg = 1; 2 * deg <= r; ++deg) {
        int combos = 1;
        for (int i = 0; i < deg; ++i) combos *= p;
        for (int code = 0; code < combos; ++code) {
            std::vector<int> div = decode(code, p, deg);
            div.push_back(1); // monic
            // long division remainder of modulus by div
            std::vector<int> rem = modulus;
            for (int k = r; k >= deg; --k) {
                const int c = rem[static_cast<size_t>(k)];
                if (c == 0) continue;
                for (int i = 0; i <= deg; ++i)
                    rem[static_cast<size_t>(k - deg + i)] =
                        ((rem[static_cast<size_t>(k - deg + i)] - c * div[static_cast<size_t>(i)]) % p + p * p) % p;
            }
            if (std::all_of(rem.begin(), rem.begin() + deg, [](int x) { return x == 0; })) return false;
        }
    }
    return true;
}

} // namespace

FiniteField FiniteField::make(int p, int r) {
    if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
    if (r < 1) throw UsageError("field degree must be >= 1");
    long q = 1;
    for (int i = 0; i < r; ++i) q *= p;
    if (q > 16) throw UsageError("field size " + std::to_string(q) + " exceeds the supported bound 16");
    FiniteField f;
    f.p_ = p;
    f.r_ = r;
    f.q_ = static_cast<int>(q);
    std::vector<int> modulus;
    if (r > 1) {
        modulus = fixed_modulus(p, r);
        if (!modulus_irreducible(modulus, p)) throw CheckError("modulus table entry is reducible");
    }
    f.build_tables(modulus);
    f.self_check();
    return f;
}

FiniteField FiniteField::parse(const std::string& spec) {
    const auto caret = spec.find('^');
    try {
        if (caret == std::string::npos) return make(std::stoi(spec), 1);
        return make(std::stoi(spec.substr(0, caret)), std::stoi(spec.substr(caret + 1)));
    } catch (const std::invalid_argument&) {
        throw UsageError("bad field spec '" + spec + "' (expected p or p^r)");
    } catch (const std::out_of_range&) {
        throw UsageError("bad field spec '" + spec + "'");
    }
}

std::string FiniteField::name() const {
    return r_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(r_);
}

FiniteField field_of_order(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        int power = p, r = 1;
        while (power < q) {
            power *= p;
            ++r;
        }
        if (power == q) return FiniteField::make(p, r);
        break; // q's smallest prime factor does not generate it
    }
    throw UsageError("not a prime power: " + std::to_string(q));
}

void FiniteField::build_tables(const std::vector<int>& modulus) {
    const size_t q = static_cast<size_t>(q_);
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    for (int a = 0; a < q_; ++a) {
        const auto ca = decode(a, p_, r_);
        {
            std::vector<int> cn(ca.size());
            for (size_t i = 0; i < ca.size(); ++i) cn[i] = (p_ - ca[i]) % p_;
            neg_[static_cast<size_t>(a)] = static_cast<uint8_t>(encode(cn, p_));
        }
        for (int b = 0; b < q_; ++b) {
            const auto cb = decode(b, p_, r_);
            std::vector<int> cs(ca.size());
            for (size_t i = 0; i < ca.size(); ++i) cs[i] = (ca[i] + cb[i]) % p_;
            add_[idx(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] = static_cast<uint8_t>(encode(cs, p_));
            std::vector<int> cm = r_ == 1 ? std::vector<int>{ca[0] * cb[0] % p_}
                                          : poly_mulmod(ca, cb, modulus, p_, r_);
            mul_[idx(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] = static_cast<uint8_t>(encode(cm, p_));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] == 1) inv_[static_cast<size_t>(a)] = static_cast<uint8_t>(b);
}

void FiniteField::self_check() const {
    for (int a = 0; a < q_; ++a) {
        if (a != 0 && (inv_[static_cast<size_t>(a)] == 0 || mul(static_cast<uint8_t>(a), inv_[static_cast<size_t>(a)]) != 1))
            throw CheckError("field element without inverse");
        for (int b = 0; b < q_; ++b) {
            if (add(static_cast<uint8_t>(a), static_cast<uint8_t>(b)) != add(static_cast<uint8_t>(b), static_cast<uint8_t>(a)) ||
                mul(static_cast<uint8_t>(a), static_cast<uint8_t>(b)) != mul(static_cast<uint8_t>(b), static_cast<uint8_t>(a)))
                throw CheckError("field tables are not commutative");
            for (int c = 0; c < q_; ++c) {
                const auto A = static_cast<uint8_t>(a), B = static_cast<uint8_t>(b), C = static_cast<uint8_t>(c);
                if (mul(mul(A, B), C) != mul(A, mul(B, C))) throw CheckError("field multiplication not associative");
                if (add(add(A, B), C) != add(A, add(B, C))) throw CheckError("field addition not associative");
                if (mul(A, add(B, C)) != add(mul(A, B), mul(A, C))) throw CheckError("field not distributive");
            }
        }
    }
}

uint8_t FiniteField::inv(uint8_t a) const {
    if (a == 0) throw UsageError("inverse of zero field element");
    return inv_[a];
}

bool FqMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](uint8_t x) { return x == 0; });
}

FqMatrix FqMatrix::identity(int n) {
    FqMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FqMatrix fq_add(const FiniteField& f, const FqMatrix& x, const FqMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw UsageError("matrix shape mismatch");
    FqMatrix r(x.rows, x.cols);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(x.a[i], y.a[i]);
    return r;
}

FqMatrix fq_sub(const FiniteField& f, const FqMatrix& x, const FqMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw UsageError("matrix shape mismatch");
    FqMatrix r(x.rows, x.cols);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.sub(x.a[i], y.a[i]);
    return r;
}

FqMatrix fq_mul(const FiniteField& f, const FqMatrix& x, const FqMatrix& y) {
    if (x.cols != y.rows) throw UsageError("matrix shape mismatch");
    FqMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const uint8_t v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(v, y.at(k, j)));
        }
    return r;
}

FqMatrix fq_transpose(const FqMatrix& x) {
    FqMatrix r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

FqMatrix fq_hstack(const FqMatrix& x, const FqMatrix& y) {
    if (x.rows != y.rows) throw UsageError("hstack row mismatch");
    FqMatrix r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

FqMatrix fq_vstack(const FqMatrix& x, const FqMatrix& y) {
    if (x.cols != y.cols) throw UsageError("vstack column mismatch");
    FqMatrix r(x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

std::vector<int> fq_rref(const FiniteField& f, FqMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        const uint8_t inv = f.inv(m.at(row, col));
        for (int j = 0; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const uint8_t c = m.at(i, col);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int fq_rank(const FiniteField& f, FqMatrix m) { return static_cast<int>(fq_rref(f, m).size()); }

FqMatrix fq_kernel_basis(const FiniteField& f, const FqMatrix& m) {
    FqMatrix r = m;
    const std::vector<int> pivots = fq_rref(f, r);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    FqMatrix kernel(m.cols, m.cols - static_cast<int>(pivots.size()));
    int out = 0;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        kernel.at(free_col, out) = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            kernel.at(pivots[pr], out) = f.neg(r.at(static_cast<int>(pr), free_col));
        ++out;
    }
    return kernel;
}

FqMatrix fq_column_space(const FiniteField& f, const FqMatrix& m) {
    FqMatrix r = m;
    const std::vector<int> pivots = fq_rref(f, r);
    FqMatrix basis(m.rows, static_cast<int>(pivots.size()));
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < m.rows; ++i) basis.at(i, static_cast<int>(k)) = m.at(i, pivots[k]);
    return basis;
}

FqMatrix fq_column_space_constraints(const FiniteField& f, const FqMatrix& m) {
    return fq_transpose(fq_kernel_basis(f, fq_transpose(m)));
}

bool fq_is_nilpotent(const FiniteField& f, const FqMatrix& m) {
    if (m.rows != m.cols) throw UsageError("nilpotency needs a square matrix");
    FqMatrix acc = FqMatrix::identity(m.rows);
    for (int i = 0; i < m.rows; ++i) acc = fq_mul(f, acc, m);
    return acc.is_zero();
}

} // namespace qlab
