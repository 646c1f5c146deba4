#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qlab {

// Dimension vector: one natural number per vertex, in declaration order.
using DimVector = std::vector<int>;

long dot(const DimVector& d, const DimVector& e);
// |d| = sum of entries.
long total(const DimVector& d);
bool leq(const DimVector& d, const DimVector& e); // componentwise
DimVector operator+(const DimVector& d, const DimVector& e);
DimVector operator-(const DimVector& d, const DimVector& e);
DimVector scaled(const DimVector& d, int k);
bool is_zero(const DimVector& d);

struct Arrow {
    int source;
    int target;
    bool operator==(const Arrow&) const = default;
};

// Finite quiver: named vertices plus an ordered list of arrows.  Loops and
// parallel arrows are allowed and kept as distinct entries (representation
// matrices are indexed by arrow position).
class Quiver {
  public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertex_ids, std::vector<std::pair<std::string, std::string>> arrows);

    int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int vertex_index(const std::string& id) const; // throws UsageError if unknown

    bool has_loops() const;
    void check_dim(const DimVector& d) const; // length + nonnegativity

    bool operator==(const Quiver&) const = default;

  private:
    std::vector<std::string> vertex_ids_;
    std::vector<Arrow> arrows_;
};

// <d,e> = sum_i d_i e_i - sum_arrows d_source e_target
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
// (d,e) = <d,e> + <e,d>
long symmetrized_form(const Quiver& q, const DimVector& d, const DimVector& e);

// The doubled quiver: each arrow h followed (in matching order) by its
// reversal h*, so arrow j + num_arrows is the reversal of arrow j.
struct DoubledQuiver {
    Quiver base;
    std::vector<Arrow> arrows; // size 2 * base.num_arrows()
};

DoubledQuiver double_quiver(const Quiver& q);

// Full subquiver on the vertex subset J (given as indices into `q`): keeps
// J's vertices in declaration order and every arrow with both ends in J.
Quiver full_subquiver(const Quiver& q, const std::vector<int>& j);

// Support of a dimension vector as a sorted list of vertex indices.
std::vector<int> support(const DimVector& d);
bool subset_of(const std::vector<int>& a, const std::vector<int>& b);

namespace zoo {
// Single vertex, no arrows.
Quiver point();
// Linear A_n quiver 1 -> 2 -> ... -> n.
Quiver a(int n);
Quiver a2_reversed();
// Two parallel arrows 1 -> 2.
Quiver kronecker();
// One vertex with one loop.
Quiver jordan();
} // namespace zoo

} // namespace qlab
