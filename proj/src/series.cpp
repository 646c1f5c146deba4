#include "qlab/series.hpp"

#include <algorithm>
#include <sstream>

namespace qlab {
namespace detail {

std::vector<DimVector> box_keys_graded(const DimVector& box) {
    std::vector<DimVector> keys;
    DimVector cur(box.size(), 0);
    for (;;) {
        keys.push_back(cur);
        size_t i = 0;
        while (i < box.size()) {
            if (cur[i] < box[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
            ++i;
        }
        if (i == box.size()) break;
    }
    std::stable_sort(keys.begin(), keys.end(), [](const DimVector& a, const DimVector& b) {
        const long ta = total(a), tb = total(b);
        return ta != tb ? ta < tb : a < b;
    });
    return keys;
}

int moebius(int n) {
    if (n < 1) throw UsageError("moebius needs n >= 1");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

} // namespace detail

SeriesQ evaluate_t(const SeriesRF& f, const BigRational& x) {
    if (x == BigRational(1)) throw UsageError("evaluate_t: t = 1 is excluded");
    SeriesQ r(f.box());
    for (const auto& [d, c] : f.coeffs()) {
        try {
            r.set(d, c.evaluate(x));
        } catch (const CheckError& e) {
            std::ostringstream os;
            os << "evaluate_t failed at monomial z^[";
            for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
            os << "]: " << e.what();
            throw CheckError(os.str());
        }
    }
    return r;
}

} // namespace qlab
