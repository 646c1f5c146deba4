#include "qlab/counting.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "qlab/error.hpp"

namespace qlab {

namespace {

using u64 = unsigned long long;

// q^e, clamped so budget comparisons never overflow.
u64 clamped_power(long q, long e) {
    u64 r = 1;
    for (long i = 0; i < e; ++i) {
        if (r > (1ULL << 62) / static_cast<u64>(q)) return 1ULL << 63;
        r *= static_cast<u64>(q);
    }
    return r;
}

struct BudgetMeter {
    u64 budget;
    std::atomic<u64> used{0};
    void charge(u64 n) {
        if (used.fetch_add(n, std::memory_order_relaxed) + n > budget)
            throw BudgetError(used.load(), budget);
    }
};

// Layout of the entry vector for the original-arrow half of a representation.
struct HalfLayout {
    struct Shape {
        int rows, cols, offset;
    };
    std::vector<Shape> shapes;
    int entries = 0;

    HalfLayout() = default;
    HalfLayout(const Quiver& q, const DimVector& d) {
        for (const Arrow& a : q.arrows()) {
            shapes.push_back({d[a.target], d[a.source], entries});
            entries += d[a.target] * d[a.source];
        }
    }

    std::vector<FqMatrix> decode(u64 index, long q) const {
        std::vector<FqMatrix> ms;
        ms.reserve(shapes.size());
        for (const Shape& s : shapes) {
            FqMatrix m(s.rows, s.cols);
            for (auto& e : m.a) {
                e = static_cast<uint8_t>(index % static_cast<u64>(q));
                index /= static_cast<u64>(q);
            }
            ms.push_back(std::move(m));
        }
        return ms;
    }
};

// Linear system over F whose kernel is the space of reversed-arrow halves
// x* with moment map zero, for a fixed original half x.  Unknowns are the
// entries of the x*_h (same layout as HalfLayout for the reversed shapes).
FqMatrix mu_system(const FiniteField& f, const Quiver& q, const DimVector& d,
                   const std::vector<FqMatrix>& xs) {
    std::vector<int> vtx_offset(d.size() + 1, 0);
    for (size_t i = 0; i < d.size(); ++i) vtx_offset[i + 1] = vtx_offset[i] + d[i] * d[i];
    int star_entries = 0;
    std::vector<int> star_offset;
    for (const Arrow& a : q.arrows()) {
        star_offset.push_back(star_entries);
        star_entries += d[a.source] * d[a.target]; // x*_h is d[source] x d[target]
    }
    FqMatrix sys(vtx_offset.back(), star_entries);
    for (int h = 0; h < q.num_arrows(); ++h) {
        const Arrow& ar = q.arrows()[static_cast<size_t>(h)];
        const FqMatrix& x = xs[static_cast<size_t>(h)];
        const int ds = d[ar.source], dt = d[ar.target];
        // +(x_h x*_h)[r,c] lands at vertex target: coeff of x*_h[a,c] is x_h[r,a]
        for (int r = 0; r < dt; ++r)
            for (int c = 0; c < dt; ++c)
                for (int a = 0; a < ds; ++a) {
                    const int row = vtx_offset[static_cast<size_t>(ar.target)] + r * dt + c;
                    const int col = star_offset[static_cast<size_t>(h)] + a * dt + c;
                    sys.at(row, col) = f.add(sys.at(row, col), x.at(r, a));
                }
        // -(x*_h x_h)[r,c] lands at vertex source: coeff of x*_h[r,b] is -x_h[b,c]
        for (int r = 0; r < ds; ++r)
            for (int c = 0; c < ds; ++c)
                for (int b = 0; b < dt; ++b) {
                    const int row = vtx_offset[static_cast<size_t>(ar.source)] + r * ds + c;
                    const int col = star_offset[static_cast<size_t>(h)] + r * dt + b;
                    sys.at(row, col) = f.sub(sys.at(row, col), x.at(b, c));
                }
    }
    return sys;
}

std::vector<FqMatrix> star_from_entries(const Quiver& q, const DimVector& d,
                                        const std::vector<uint8_t>& entries) {
    std::vector<FqMatrix> stars;
    size_t pos = 0;
    for (const Arrow& a : q.arrows()) {
        FqMatrix m(d[a.source], d[a.target]);
        for (auto& e : m.a) e = entries[pos++];
        stars.push_back(std::move(m));
    }
    return stars;
}

// Runs fn(worker, lo, hi) over a partition of [0, total) and rethrows the
// first worker exception.
void run_partitioned(u64 total, int workers, const std::function<void(int, u64, u64)>& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || total < 2) {
        fn(0, 0, total);
        return;
    }
    const u64 chunk = (total + static_cast<u64>(workers) - 1) / static_cast<u64>(workers);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const u64 lo = std::min(total, chunk * static_cast<u64>(w));
        const u64 hi = std::min(total, lo + chunk);
        threads.emplace_back([&, w, lo, hi] {
            try {
                fn(w, lo, hi);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Shared scan over the moment fiber: for every original half x in [lo,hi) of
// the lexicographic enumeration, solve the linear system for the reversed
// half and hand every solution to visit (or just its cardinality to
// visit_count when only the number of solutions matters).
struct MomentFiberScan {
    const Quiver& quiver;
    DimVector d;
    const FiniteField& field;
    HalfLayout half;

    MomentFiberScan(const Quiver& q, const DimVector& dims, const FiniteField& f)
        : quiver(q), d(dims), field(f), half(q, dims) {
        q.check_dim(dims);
    }

    u64 outer_total() const { return clamped_power(field.q(), half.entries); }

    template <class Visit>
    void scan_range(u64 lo, u64 hi, BudgetMeter& meter, u64& enumerated, bool materialize,
                    const std::function<void(u64)>& visit_count, Visit&& visit) const {
        const long q = field.q();
        for (u64 idx = lo; idx < hi; ++idx) {
            meter.charge(1);
            ++enumerated;
            std::vector<FqMatrix> xs = half.decode(idx, q);
            const FqMatrix kernel = fq_kernel_basis(field, mu_system(field, quiver, d, xs));
            const int nullity = kernel.cols;
            if (!materialize) {
                visit_count(clamped_power(q, nullity));
                continue;
            }
            const u64 solutions = clamped_power(q, nullity);
            meter.charge(solutions);
            enumerated += solutions;
            std::vector<uint8_t> combo(static_cast<size_t>(nullity), 0);
            std::vector<uint8_t> entries(static_cast<size_t>(kernel.rows), 0);
            for (u64 s = 0; s < solutions; ++s) {
                u64 code = s;
                for (auto& c : combo) {
                    c = static_cast<uint8_t>(code % static_cast<u64>(q));
                    code /= static_cast<u64>(q);
                }
                std::fill(entries.begin(), entries.end(), 0);
                for (int col = 0; col < nullity; ++col) {
                    if (combo[static_cast<size_t>(col)] == 0) continue;
                    for (int row = 0; row < kernel.rows; ++row)
                        entries[static_cast<size_t>(row)] =
                            field.add(entries[static_cast<size_t>(row)],
                                      field.mul(combo[static_cast<size_t>(col)], kernel.at(row, col)));
                }
                Rep rep{xs};
                auto stars = star_from_entries(quiver, d, entries);
                rep.x.insert(rep.x.end(), stars.begin(), stars.end());
                visit(rep);
            }
        }
    }
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void finish_stats(CountStats* stats, const Timer& timer, u64 enumerated) {
    if (!stats) return;
    stats->enumerated = enumerated;
    stats->seconds = timer.seconds();
}

// Generic moment-fiber reduction with per-worker accumulators.
template <class Acc>
std::vector<Acc> scan_moment_fiber(const Quiver& q, const DimVector& d, const FiniteField& f,
                                   const CountOptions& opts, CountStats* stats, bool materialize,
                                   const std::function<void(Acc&, u64)>& on_count,
                                   const std::function<void(Acc&, const Rep&)>& on_rep) {
    const MomentFiberScan scan(q, d, f);
    const u64 outer = scan.outer_total();
    if (outer > opts.budget) throw BudgetError(outer, opts.budget);
    BudgetMeter meter{opts.budget};
    const int workers = std::max(1, opts.workers);
    std::vector<Acc> accs(static_cast<size_t>(workers));
    std::vector<u64> enumerated(static_cast<size_t>(workers), 0);
    Timer timer;
    run_partitioned(outer, workers, [&](int w, u64 lo, u64 hi) {
        Acc& acc = accs[static_cast<size_t>(w)];
        scan.scan_range(
            lo, hi, meter, enumerated[static_cast<size_t>(w)], materialize,
            [&](u64 n) { on_count(acc, n); }, [&](const Rep& rep) { on_rep(acc, rep); });
    });
    u64 total_enum = 0;
    for (u64 e : enumerated) total_enum += e;
    finish_stats(stats, timer, total_enum);
    return accs;
}

bool rep_is_nilpotent(const FiniteField& f, const DoubledQuiver& dq, const DimVector& d, const Rep& rep) {
    return dq.base.has_loops() ? has_lusztig_flag(f, dq, d, rep) : is_standard_nilpotent(f, dq, d, rep);
}

} // namespace

std::vector<FqMatrix> moment_map(const FiniteField& f, const DoubledQuiver& dq, const DimVector& d,
                                 const Rep& rep) {
    dq.base.check_dim(d);
    const int m = dq.base.num_arrows();
    if (static_cast<int>(rep.x.size()) != 2 * m) throw UsageError("representation arrow count mismatch");
    std::vector<FqMatrix> mu;
    mu.reserve(d.size());
    for (size_t i = 0; i < d.size(); ++i) mu.emplace_back(d[i], d[i]);
    for (int h = 0; h < m; ++h) {
        const Arrow& a = dq.base.arrows()[static_cast<size_t>(h)];
        const FqMatrix& x = rep.x[static_cast<size_t>(h)];
        const FqMatrix& xstar = rep.x[static_cast<size_t>(h + m)];
        mu[static_cast<size_t>(a.target)] =
            fq_add(f, mu[static_cast<size_t>(a.target)], fq_mul(f, x, xstar));
        mu[static_cast<size_t>(a.source)] =
            fq_sub(f, mu[static_cast<size_t>(a.source)], fq_mul(f, xstar, x));
    }
    return mu;
}

std::vector<FqMatrix> framed_moment_map(const FiniteField& f, const DoubledQuiver& dq, const DimVector& v,
                                        const DimVector& w, const FramedRep& fr) {
    if (v.size() != w.size()) throw UsageError("framing dimension mismatch");
    std::vector<FqMatrix> mu = moment_map(f, dq, v, fr.rep);
    for (size_t i = 0; i < v.size(); ++i)
        mu[i] = fq_sub(f, mu[i], fq_mul(f, fr.in[i], fr.out[i]));
    return mu;
}

bool is_standard_nilpotent(const FiniteField& f, const DoubledQuiver& dq, const DimVector& d,
                           const Rep& rep) {
    std::vector<FqMatrix> basis;
    basis.reserve(d.size());
    long dim = 0;
    for (int di : d) {
        basis.push_back(FqMatrix::identity(di));
        dim += di;
    }
    while (dim > 0) {
        std::vector<FqMatrix> next;
        long next_dim = 0;
        for (size_t j = 0; j < d.size(); ++j) {
            FqMatrix stacked(d[j], 0);
            for (size_t k = 0; k < dq.arrows.size(); ++k) {
                const Arrow& a = dq.arrows[k];
                if (a.target != static_cast<int>(j)) continue;
                stacked = fq_hstack(stacked, fq_mul(f, rep.x[k], basis[static_cast<size_t>(a.source)]));
            }
            FqMatrix image = fq_column_space(f, stacked);
            next_dim += image.cols;
            next.push_back(std::move(image));
        }
        if (next_dim == dim) return false; // chain stalled above zero
        basis = std::move(next);
        dim = next_dim;
    }
    return true;
}

namespace {

struct FlagSearch {
    const FiniteField& f;
    const DoubledQuiver& dq;
    int m; // original arrow count

    bool search(const DimVector& d, const std::vector<FqMatrix>& x) const {
        if (total(d) == 0) return true;
        const int q = f.q();
        for (size_t i = 0; i < d.size(); ++i) {
            const int di = d[i];
            if (di == 0) continue;
            // candidate lines: pivot position j, unit pivot, free tail
            for (int j = 0; j < di; ++j) {
                const long tail = di - 1 - j;
                const u64 combos = clamped_power(q, tail);
                for (u64 code = 0; code < combos; ++code) {
                    std::vector<uint8_t> v(static_cast<size_t>(di), 0);
                    v[static_cast<size_t>(j)] = 1;
                    u64 c = code;
                    for (int t = j + 1; t < di; ++t) {
                        v[static_cast<size_t>(t)] = static_cast<uint8_t>(c % static_cast<u64>(q));
                        c /= static_cast<u64>(q);
                    }
                    if (line_admissible(x, static_cast<int>(i), v) &&
                        search_quotient(d, x, static_cast<int>(i), j, v))
                        return true;
                }
            }
        }
        return false;
    }

  private:
    std::vector<uint8_t> apply(const FqMatrix& mat, const std::vector<uint8_t>& v) const {
        std::vector<uint8_t> out(static_cast<size_t>(mat.rows), 0);
        for (int r = 0; r < mat.rows; ++r)
            for (int c = 0; c < mat.cols; ++c)
                out[static_cast<size_t>(r)] =
                    f.add(out[static_cast<size_t>(r)], f.mul(mat.at(r, c), v[static_cast<size_t>(c)]));
        return out;
    }

    bool line_admissible(const std::vector<FqMatrix>& x, int i, const std::vector<uint8_t>& v) const {
        for (size_t k = 0; k < dq.arrows.size(); ++k) {
            const Arrow& a = dq.arrows[k];
            if (a.source != i) continue;
            const std::vector<uint8_t> img = apply(x[k], v);
            const bool reversed_loop = static_cast<int>(k) >= m && a.target == i;
            if (reversed_loop) {
                // image must be proportional to v
                int pivot = 0;
                while (v[static_cast<size_t>(pivot)] == 0) ++pivot;
                const uint8_t c = img[static_cast<size_t>(pivot)]; // v[pivot] == 1
                for (size_t t = 0; t < v.size(); ++t)
                    if (img[t] != f.mul(c, v[t])) return false;
            } else {
                // original arrows (strict drop) and reversed non-loops (graded
                // line has no component at the target) must kill the line
                if (std::any_of(img.begin(), img.end(), [](uint8_t e) { return e != 0; })) return false;
            }
        }
        return true;
    }

    bool search_quotient(const DimVector& d, const std::vector<FqMatrix>& x, int i, int pivot,
                         const std::vector<uint8_t>& v) const {
        const int di = d[static_cast<size_t>(i)];
        // quotient map Q: coordinates m != pivot of u - u_pivot * v
        FqMatrix qm(di - 1, di);
        int row = 0;
        for (int t = 0; t < di; ++t) {
            if (t == pivot) continue;
            qm.at(row, t) = 1;
            qm.at(row, pivot) = f.neg(v[static_cast<size_t>(t)]);
            ++row;
        }
        std::vector<FqMatrix> xq;
        xq.reserve(x.size());
        for (size_t k = 0; k < dq.arrows.size(); ++k) {
            const Arrow& a = dq.arrows[k];
            FqMatrix mkc = x[k];
            if (a.target == i) mkc = fq_mul(f, qm, mkc);
            if (a.source == i) {
                FqMatrix dropped(mkc.rows, mkc.cols - 1);
                for (int r = 0; r < mkc.rows; ++r) {
                    int out = 0;
                    for (int c = 0; c < mkc.cols; ++c) {
                        if (c == pivot) continue;
                        dropped.at(r, out++) = mkc.at(r, c);
                    }
                }
                mkc = std::move(dropped);
            }
            xq.push_back(std::move(mkc));
        }
        DimVector dq2 = d;
        --dq2[static_cast<size_t>(i)];
        return search(dq2, xq);
    }
};

} // namespace

bool has_lusztig_flag(const FiniteField& f, const DoubledQuiver& dq, const DimVector& d, const Rep& rep) {
    dq.base.check_dim(d);
    return FlagSearch{f, dq, dq.base.num_arrows()}.search(d, rep.x);
}

bool is_semistable(const FiniteField& f, const DoubledQuiver& dq, const DimVector& v, const Rep& rep,
                   const std::vector<FqMatrix>& out) {
    // start from ker(out) and shrink to the largest x-invariant graded subspace
    std::vector<FqMatrix> basis;
    basis.reserve(v.size());
    long dim = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        basis.push_back(fq_kernel_basis(f, out[i]));
        dim += basis.back().cols;
    }
    for (;;) {
        if (dim == 0) return true;
        std::vector<FqMatrix> constraints;
        constraints.reserve(v.size());
        for (size_t i = 0; i < v.size(); ++i) constraints.push_back(fq_column_space_constraints(f, basis[i]));
        long next_dim = 0;
        std::vector<FqMatrix> next;
        next.reserve(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            FqMatrix sys(0, basis[i].cols);
            for (size_t k = 0; k < dq.arrows.size(); ++k) {
                const Arrow& a = dq.arrows[k];
                if (a.source != static_cast<int>(i)) continue;
                const FqMatrix block = fq_mul(f, constraints[static_cast<size_t>(a.target)],
                                              fq_mul(f, rep.x[k], basis[i]));
                sys = fq_vstack(sys, block);
            }
            const FqMatrix coords = fq_kernel_basis(f, sys);
            FqMatrix refined = fq_mul(f, basis[i], coords);
            next_dim += refined.cols;
            next.push_back(std::move(refined));
        }
        if (next_dim == dim) return false; // nonzero invariant subspace survives
        basis = std::move(next);
        dim = next_dim;
    }
}

BigInt gl_order(const DimVector& d, long q) {
    BigInt order(1);
    const BigInt bq(q);
    for (int n : d) {
        if (n < 0) throw UsageError("negative dimension");
        const BigInt qn = bq.pow(static_cast<unsigned long>(n));
        for (int k = 1; k <= n; ++k) order *= qn - bq.pow(static_cast<unsigned long>(k - 1));
    }
    return order;
}

unsigned long long count_lambda(const Quiver& q, const DimVector& d, const FiniteField& f,
                                const CountOptions& opts, CountStats* stats) {
    const DoubledQuiver dq = double_quiver(q);
    auto accs = scan_moment_fiber<u64>(
        q, d, f, opts, stats, true, [](u64&, u64) {},
        [&](u64& acc, const Rep& rep) {
            if (rep_is_nilpotent(f, dq, d, rep)) ++acc;
        });
    u64 count = 0;
    for (u64 a : accs) count += a;
    return count;
}

unsigned long long count_mu_fiber(const Quiver& q, const DimVector& d, const FiniteField& f,
                                  const CountOptions& opts, CountStats* stats) {
    auto accs = scan_moment_fiber<u64>(
        q, d, f, opts, stats, false, [](u64& acc, u64 n) { acc += n; }, [](u64&, const Rep&) {});
    u64 count = 0;
    for (u64 a : accs) count += a;
    return count;
}

std::map<DimVector, unsigned long long> strata_counts(const Quiver& q, const std::vector<int>& j,
                                                      const DimVector& d, const FiniteField& f,
                                                      const CountOptions& opts, CountStats* stats) {
    for (int v : j)
        if (v < 0 || v >= q.num_vertices()) throw UsageError("strata vertex out of range");
    std::vector<int> js(j);
    std::sort(js.begin(), js.end());
    const DoubledQuiver dq = double_quiver(q);
    // doubled arrows entering J from outside
    std::vector<size_t> cut;
    for (size_t k = 0; k < dq.arrows.size(); ++k) {
        const Arrow& a = dq.arrows[k];
        const bool src_in = std::binary_search(js.begin(), js.end(), a.source);
        const bool tgt_in = std::binary_search(js.begin(), js.end(), a.target);
        if (!src_in && tgt_in) cut.push_back(k);
    }
    using Buckets = std::map<DimVector, u64>;
    auto accs = scan_moment_fiber<Buckets>(
        q, d, f, opts, stats, true, [](Buckets&, u64) {},
        [&](Buckets& acc, const Rep& rep) {
            if (!rep_is_nilpotent(f, dq, d, rep)) return;
            DimVector n(js.size(), 0);
            for (size_t t = 0; t < js.size(); ++t) {
                const int vtx = js[t];
                FqMatrix stacked(d[static_cast<size_t>(vtx)], 0);
                for (size_t k : cut)
                    if (dq.arrows[k].target == vtx) stacked = fq_hstack(stacked, rep.x[k]);
                n[t] = d[static_cast<size_t>(vtx)] - fq_rank(f, stacked);
            }
            ++acc[n];
        });
    Buckets merged;
    for (const Buckets& b : accs)
        for (const auto& [n, c] : b) merged[n] += c;
    return merged;
}

unsigned long long count_strata(const Quiver& q, const std::vector<int>& j, const DimVector& d,
                                const DimVector& n, const FiniteField& f, const CountOptions& opts,
                                CountStats* stats) {
    if (n.size() != j.size()) throw UsageError("stratum codimension vector must be indexed by J");
    const auto buckets = strata_counts(q, j, d, f, opts, stats);
    const auto it = buckets.find(n);
    return it == buckets.end() ? 0 : it->second;
}

unsigned long long count_commuting(CommutingKind kind, int n, const FiniteField& f,
                                   const CountOptions& opts, CountStats* stats) {
    if (n < 0) throw UsageError("count_commuting: negative size");
    const long q = f.q();
    const u64 outer = clamped_power(q, static_cast<long>(n) * n);
    if (outer > opts.budget) throw BudgetError(outer, opts.budget);
    BudgetMeter meter{opts.budget};
    const int workers = std::max(1, opts.workers);
    std::vector<u64> counts(static_cast<size_t>(workers), 0);
    std::vector<u64> enumerated(static_cast<size_t>(workers), 0);
    Timer timer;
    run_partitioned(outer, workers, [&](int w, u64 lo, u64 hi) {
        u64& count = counts[static_cast<size_t>(w)];
        u64& enu = enumerated[static_cast<size_t>(w)];
        for (u64 idx = lo; idx < hi; ++idx) {
            meter.charge(1);
            ++enu;
            FqMatrix b(n, n);
            u64 code = idx;
            for (auto& e : b.a) {
                e = static_cast<uint8_t>(code % static_cast<u64>(q));
                code /= static_cast<u64>(q);
            }
            if (!fq_is_nilpotent(f, b)) continue;
            // commutant of b: kernel of A -> AB - BA
            FqMatrix sys(n * n, n * n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    for (int k = 0; k < n; ++k) {
                        const int row = r * n + c;
                        sys.at(row, r * n + k) = f.add(sys.at(row, r * n + k), b.at(k, c));
                        sys.at(row, k * n + c) = f.sub(sys.at(row, k * n + c), b.at(r, k));
                    }
            const FqMatrix kernel = fq_kernel_basis(f, sys);
            if (kind == CommutingKind::second_nilpotent) {
                count += clamped_power(q, kernel.cols);
                continue;
            }
            // both nilpotent: walk the commutant and keep nilpotent members
            const u64 inner = clamped_power(q, kernel.cols);
            meter.charge(inner);
            enu += inner;
            std::vector<uint8_t> combo(static_cast<size_t>(kernel.cols), 0);
            for (u64 s = 0; s < inner; ++s) {
                u64 cc = s;
                for (auto& e : combo) {
                    e = static_cast<uint8_t>(cc % static_cast<u64>(q));
                    cc /= static_cast<u64>(q);
                }
                FqMatrix a(n, n);
                for (int col = 0; col < kernel.cols; ++col) {
                    if (combo[static_cast<size_t>(col)] == 0) continue;
                    for (int row = 0; row < kernel.rows; ++row)
                        a.a[static_cast<size_t>(row)] =
                            f.add(a.a[static_cast<size_t>(row)],
                                  f.mul(combo[static_cast<size_t>(col)], kernel.at(row, col)));
                }
                if (fq_is_nilpotent(f, a)) ++count;
            }
        }
    });
    u64 total_count = 0, total_enum = 0;
    for (int w = 0; w < workers; ++w) {
        total_count += counts[static_cast<size_t>(w)];
        total_enum += enumerated[static_cast<size_t>(w)];
    }
    finish_stats(stats, timer, total_enum);
    return total_count;
}

unsigned long long count_grassmannian_brute(int w, int wp, const FiniteField& f,
                                            const CountOptions& opts, CountStats* stats) {
    if (wp < 0 || w < 0) throw UsageError("count_grassmannian_brute: negative dimensions");
    if (wp > w) return 0;
    Timer timer;
    u64 count = 0, enumerated = 0;
    // choose pivot columns, then fill every unforced cell in all ways
    std::vector<int> pivots(static_cast<size_t>(wp));
    const std::function<void(int, int)> choose = [&](int from, int row) {
        if (row == wp) {
            // free cells: right of each pivot, excluding pivot columns
            std::vector<std::pair<int, int>> free_cells;
            for (int r = 0; r < wp; ++r)
                for (int c = pivots[static_cast<size_t>(r)] + 1; c < w; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                        free_cells.emplace_back(r, c);
            const u64 fills = clamped_power(f.q(), static_cast<long>(free_cells.size()));
            if (enumerated + fills > opts.budget) throw BudgetError(enumerated + fills, opts.budget);
            for (u64 code = 0; code < fills; ++code) {
                ++enumerated;
                FqMatrix m(wp, w);
                for (int r = 0; r < wp; ++r) m.at(r, pivots[static_cast<size_t>(r)]) = 1;
                u64 cc = code;
                for (const auto& [r, c] : free_cells) {
                    m.at(r, c) = static_cast<uint8_t>(cc % static_cast<u64>(f.q()));
                    cc /= static_cast<u64>(f.q());
                }
                if (fq_rank(f, m) == wp) ++count; // echelon bases are independent by construction
            }
            return;
        }
        for (int c = from; c <= w - (wp - row); ++c) {
            pivots[static_cast<size_t>(row)] = c;
            choose(c + 1, row + 1);
        }
    };
    choose(0, 0);
    finish_stats(stats, timer, enumerated);
    return count;
}

NakajimaCount count_nakajima_l(const Quiver& q, const DimVector& v, const DimVector& w,
                               const FiniteField& f, const CountOptions& opts, CountStats* stats) {
    if (q.has_loops()) throw UsageError("count_nakajima_l requires a loop-free quiver");
    q.check_dim(v);
    q.check_dim(w);
    const DoubledQuiver dq = double_quiver(q);
    long framing_entries = 0;
    for (size_t i = 0; i < v.size(); ++i) framing_entries += static_cast<long>(v[i]) * w[i];
    const u64 inner_total = clamped_power(f.q(), framing_entries);

    struct Acc {
        u64 raw = 0;
        u64 inner_enumerated = 0;
        std::map<DimVector, u64> by_rank;
    };
    BudgetMeter framing_meter{opts.budget};
    auto accs = scan_moment_fiber<Acc>(
        q, v, f, opts, stats, true, [](Acc&, u64) {},
        [&](Acc& acc, const Rep& rep) {
            if (!is_standard_nilpotent(f, dq, v, rep)) return;
            framing_meter.charge(inner_total);
            acc.inner_enumerated += inner_total;
            for (u64 code = 0; code < inner_total; ++code) {
                std::vector<FqMatrix> out;
                out.reserve(v.size());
                u64 cc = code;
                for (size_t i = 0; i < v.size(); ++i) {
                    FqMatrix m(w[i], v[i]);
                    for (auto& e : m.a) {
                        e = static_cast<uint8_t>(cc % static_cast<u64>(f.q()));
                        cc /= static_cast<u64>(f.q());
                    }
                    out.push_back(std::move(m));
                }
                if (!is_semistable(f, dq, v, rep, out)) continue;
                ++acc.raw;
                DimVector rank(v.size());
                for (size_t i = 0; i < v.size(); ++i) rank[i] = fq_rank(f, out[i]);
                ++acc.by_rank[rank];
            }
        });

    NakajimaCount result;
    std::map<DimVector, u64> raw_by_rank;
    for (const Acc& a : accs) {
        result.raw += a.raw;
        if (stats) stats->enumerated += a.inner_enumerated;
        for (const auto& [r, c] : a.by_rank) raw_by_rank[r] += c;
    }
    const BigInt order = gl_order(v, f.q());
    const BigInt raw_big(static_cast<long>(result.raw));
    if (!raw_big.divisible_by(order))
        throw CheckError("framed point count " + raw_big.str() + " is not divisible by |G_v| = " + order.str());
    result.count = static_cast<u64>(raw_big.divexact(order).to_long());
    for (const auto& [r, c] : raw_by_rank) {
        const BigInt cb(static_cast<long>(c));
        if (!cb.divisible_by(order))
            throw CheckError("framed stratum count not divisible by |G_v|");
        result.by_rank[r] = static_cast<u64>(cb.divexact(order).to_long());
    }
    return result;
}

namespace {
SeriesQ assemble_series(const Quiver& q, const FiniteField& f, const DimVector& box,
                        const std::function<u64(const DimVector&)>& counter) {
    SeriesQ s(box);
    const BigRational qq(f.q());
    for (const DimVector& d : detail::box_keys_graded(box)) {
        const BigRational coeff = BigRational(BigInt(static_cast<long>(counter(d)))) /
                                  BigRational(gl_order(d, f.q())) * qq.pow(euler_form(q, d, d));
        s.set(d, coeff);
    }
    return s;
}
} // namespace

SeriesQ lambda_series_empirical(const Quiver& q, const FiniteField& f, const DimVector& box,
                                const CountOptions& opts) {
    return assemble_series(q, f, box, [&](const DimVector& d) { return count_lambda(q, d, f, opts); });
}

SeriesQ mu_fiber_series_empirical(const Quiver& q, const FiniteField& f, const DimVector& box,
                                  const CountOptions& opts) {
    return assemble_series(q, f, box, [&](const DimVector& d) { return count_mu_fiber(q, d, f, opts); });
}

SeriesQ strata_zero_series_empirical(const Quiver& q, const std::vector<int>& j, const FiniteField& f,
                                     const DimVector& box, const CountOptions& opts) {
    const DimVector zero(j.size(), 0);
    return assemble_series(q, f, box,
                           [&](const DimVector& d) { return count_strata(q, j, d, zero, f, opts); });
}

SeriesQ nakajima_series_empirical(const Quiver& q, const DimVector& w, const FiniteField& f,
                                  const DimVector& box, const CountOptions& opts) {
    SeriesQ s(box);
    const BigRational qq(f.q());
    for (const DimVector& v : detail::box_keys_graded(box)) {
        const NakajimaCount c = count_nakajima_l(q, v, w, f, opts);
        s.set(v, BigRational(BigInt(static_cast<long>(c.count))) * qq.pow(-nakajima_half_dim(q, v, w)));
    }
    return s;
}

} // namespace qlab
