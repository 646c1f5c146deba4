#include "qlab/partitions.hpp"

#include <algorithm>

#include "qlab/error.hpp"

namespace qlab {

long partition_size(const Partition& p) {
    long s = 0;
    for (int x : p) s += x;
    return s;
}

namespace {
void emit_partitions(int n, int max_part, Partition& stack, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(stack);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        stack.push_back(part);
        emit_partitions(n - part, part, stack, out);
        stack.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw UsageError("partitions_of: negative n");
    std::vector<Partition> out;
    Partition stack;
    emit_partitions(n, n, stack, out);
    if (n == 0) out = {Partition{}};
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m) {
        auto pm = partitions_of(m);
        out.insert(out.end(), pm.begin(), pm.end());
    }
    return out;
}

DimVector MultiPartition::sizes() const {
    DimVector d(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) d[i] = static_cast<int>(partition_size(parts[i]));
    return d;
}

DimVector MultiPartition::row(int l) const {
    if (l < 1) throw UsageError("multipartition row index is 1-based");
    DimVector d(parts.size(), 0);
    for (size_t i = 0; i < parts.size(); ++i)
        if (static_cast<size_t>(l) <= parts[i].size()) d[i] = parts[i][static_cast<size_t>(l - 1)];
    return d;
}

int MultiPartition::rows() const {
    size_t r = 0;
    for (const Partition& p : parts) r = std::max(r, p.size());
    return static_cast<int>(r);
}

bool MultiPartition::empty() const {
    return std::all_of(parts.begin(), parts.end(), [](const Partition& p) { return p.empty(); });
}

std::vector<MultiPartition> enumerate_multipartitions(const DimVector& box) {
    std::vector<std::vector<Partition>> per_vertex;
    per_vertex.reserve(box.size());
    for (int b : box) {
        if (b < 0) throw UsageError("negative multipartition box entry");
        per_vertex.push_back(partitions_up_to(b));
    }
    std::vector<MultiPartition> out;
    MultiPartition cur;
    cur.parts.resize(box.size());
    // iterative mixed-radix product, vertex 0 slowest
    std::vector<size_t> idx(box.size(), 0);
    for (;;) {
        for (size_t i = 0; i < box.size(); ++i) cur.parts[i] = per_vertex[i][idx[i]];
        out.push_back(cur);
        size_t i = box.size();
        while (i > 0) {
            --i;
            if (++idx[i] < per_vertex[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (box.empty()) return out;
    }
}

} // namespace qlab
