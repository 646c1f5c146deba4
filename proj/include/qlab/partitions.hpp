#pragma once

#include <vector>

#include "qlab/quiver.hpp"

namespace qlab {

// Weakly decreasing list of positive parts; the empty partition is {}.
using Partition = std::vector<int>;

long partition_size(const Partition& p);

// All partitions of n, largest part first within each partition, listed in
// descending lexicographic order: (n), (n-1,1), ..., (1,...,1).
std::vector<Partition> partitions_of(int n);

// All partitions of 0..n, ordered by size then descending lex.
std::vector<Partition> partitions_up_to(int n);

// One partition per vertex of a quiver.
struct MultiPartition {
    std::vector<Partition> parts;

    bool operator==(const MultiPartition&) const = default;

    // |tau| per vertex: the z-exponent this multipartition contributes.
    DimVector sizes() const;
    // l-th parts across vertices (1-indexed), zero-padded.
    DimVector row(int l) const;
    // Number of rows = longest partition length.
    int rows() const;
    bool empty() const;
};

// Every multipartition with |tau^i| <= box_i for each vertex, each exactly
// once: the cartesian product of partitions_up_to(box_i), first vertex
// varying slowest.
std::vector<MultiPartition> enumerate_multipartitions(const DimVector& box);

} // namespace qlab
