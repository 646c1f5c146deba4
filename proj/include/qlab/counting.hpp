#pragma once

#include <map>

#include "qlab/gf.hpp"
#include "qlab/serieslab.hpp"

namespace qlab {

struct CountOptions {
    // Cap on candidate tuples an operation may materialize.
    unsigned long long budget = 100'000'000;
    int workers = 1;
};

struct CountStats {
    unsigned long long enumerated = 0; // candidates actually visited
    double seconds = 0;
};

// Point of the doubled representation space: one matrix per doubled arrow
// (originals first, reversals after, matching DoubledQuiver::arrows), where
// the matrix of arrow k has shape d[target] x d[source].
struct Rep {
    std::vector<FqMatrix> x;
};

// Framed point: doubled-quiver matrices plus framing maps out of V
// (out[i]: V_i -> W_i, shape w_i x v_i) and into V (in[i]: W_i -> V_i,
// shape v_i x w_i).
struct FramedRep {
    Rep rep;
    std::vector<FqMatrix> out;
    std::vector<FqMatrix> in;
};

// Per-vertex commutator sum: component at vertex i is
// sum_{h''=i} x_h x_{h*} - sum_{h'=i} x_{h*} x_h  (h runs over original arrows).
std::vector<FqMatrix> moment_map(const FiniteField& f, const DoubledQuiver& dq, const DimVector& d,
                                 const Rep& rep);

// Framed version: subtracts in_i * out_i at each vertex, so its zero locus is
// the framed moment fiber.
std::vector<FqMatrix> framed_moment_map(const FiniteField& f, const DoubledQuiver& dq, const DimVector& v,
                                        const DimVector& w, const FramedRep& fr);

// All long enough arrow compositions vanish: the chain U_0 = V,
// U_{l+1} = sum_k x_k(U_l) reaches zero.
bool is_standard_nilpotent(const FiniteField& f, const DoubledQuiver& dq, const DimVector& d, const Rep& rep);

// A complete graded flag exists along which original arrows strictly lower
// the flag and reversed arrows preserve it.  Decided recursively by searching
// for an admissible line and passing to the quotient.
bool has_lusztig_flag(const FiniteField& f, const DoubledQuiver& dq, const DimVector& d, const Rep& rep);

// No nonzero x-invariant graded subspace inside ker(out).
bool is_semistable(const FiniteField& f, const DoubledQuiver& dq, const DimVector& v, const Rep& rep,
                   const std::vector<FqMatrix>& out);

// |GL_{d_1}(F_q)| * |GL_{d_2}(F_q)| * ...
BigInt gl_order(const DimVector& d, long q);

// Exact count of the moment-fiber points that satisfy the nilpotency cut
// (standard nilpotency for loop-free quivers, flag nilpotency otherwise).
unsigned long long count_lambda(const Quiver& q, const DimVector& d, const FiniteField& f,
                                const CountOptions& opts = {}, CountStats* stats = nullptr);

// Exact count of the full moment fiber (no nilpotency cut).
unsigned long long count_mu_fiber(const Quiver& q, const DimVector& d, const FiniteField& f,
                                  const CountOptions& opts = {}, CountStats* stats = nullptr);

// Nilpotent moment-fiber points bucketed by the codimension vector of
// sum of images of arrows entering J from outside, per J-vertex.
std::map<DimVector, unsigned long long> strata_counts(const Quiver& q, const std::vector<int>& j,
                                                      const DimVector& d, const FiniteField& f,
                                                      const CountOptions& opts = {},
                                                      CountStats* stats = nullptr);
unsigned long long count_strata(const Quiver& q, const std::vector<int>& j, const DimVector& d,
                                const DimVector& n, const FiniteField& f, const CountOptions& opts = {},
                                CountStats* stats = nullptr);

// Pairs of n x n matrices (A, B) with AB = BA and B nilpotent
// (second_nilpotent) or both nilpotent (both_nilpotent).
unsigned long long count_commuting(CommutingKind kind, int n, const FiniteField& f,
                                   const CountOptions& opts = {}, CountStats* stats = nullptr);

// Row-echelon enumeration of w'-dimensional subspaces of F^w.
unsigned long long count_grassmannian_brute(int w, int wp, const FiniteField& f,
                                            const CountOptions& opts = {}, CountStats* stats = nullptr);

// Orbit count of the framed Lagrangian fiber: framing into V vanishes, x is
// standard-nilpotent, the pair is semistable; the raw point count is divided
// by |G_v| (free action; divisibility is asserted at runtime).  by_rank
// buckets the orbit count by the rank vector of the framing out of V.
struct NakajimaCount {
    unsigned long long count = 0;
    unsigned long long raw = 0;
    std::map<DimVector, unsigned long long> by_rank;
};
NakajimaCount count_nakajima_l(const Quiver& q, const DimVector& v, const DimVector& w,
                               const FiniteField& f, const CountOptions& opts = {},
                               CountStats* stats = nullptr);

// Empirical generating series assembled from the counters.
SeriesQ lambda_series_empirical(const Quiver& q, const FiniteField& f, const DimVector& box,
                                const CountOptions& opts = {});
SeriesQ mu_fiber_series_empirical(const Quiver& q, const FiniteField& f, const DimVector& box,
                                  const CountOptions& opts = {});
SeriesQ strata_zero_series_empirical(const Quiver& q, const std::vector<int>& j, const FiniteField& f,
                                     const DimVector& box, const CountOptions& opts = {});
// sum_v q^{-d(v,w)} |L(v,w)| z^v
SeriesQ nakajima_series_empirical(const Quiver& q, const DimVector& w, const FiniteField& f,
                                  const DimVector& box, const CountOptions& opts = {});

} // namespace qlab
