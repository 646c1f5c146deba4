#include "qlab/quiver.hpp"

#include <algorithm>
#include <set>

#include "qlab/error.hpp"

namespace qlab {

long dot(const DimVector& d, const DimVector& e) {
    if (d.size() != e.size()) throw UsageError("dimension vector length mismatch");
    long s = 0;
    for (size_t i = 0; i < d.size(); ++i) s += static_cast<long>(d[i]) * e[i];
    return s;
}

long total(const DimVector& d) {
    long s = 0;
    for (int x : d) s += x;
    return s;
}

bool leq(const DimVector& d, const DimVector& e) {
    if (d.size() != e.size()) throw UsageError("dimension vector length mismatch");
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i]) return false;
    return true;
}

DimVector operator+(const DimVector& d, const DimVector& e) {
    if (d.size() != e.size()) throw UsageError("dimension vector length mismatch");
    DimVector r(d);
    for (size_t i = 0; i < d.size(); ++i) r[i] += e[i];
    return r;
}

DimVector operator-(const DimVector& d, const DimVector& e) {
    if (d.size() != e.size()) throw UsageError("dimension vector length mismatch");
    DimVector r(d);
    for (size_t i = 0; i < d.size(); ++i) r[i] -= e[i];
    return r;
}

DimVector scaled(const DimVector& d, int k) {
    DimVector r(d);
    for (auto& x : r) x *= k;
    return r;
}

bool is_zero(const DimVector& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

Quiver::Quiver(std::vector<std::string> vertex_ids, std::vector<std::pair<std::string, std::string>> arrows)
    : vertex_ids_(std::move(vertex_ids)) {
    std::set<std::string> seen(vertex_ids_.begin(), vertex_ids_.end());
    if (seen.size() != vertex_ids_.size()) throw UsageError("duplicate vertex id");
    arrows_.reserve(arrows.size());
    for (const auto& [s, t] : arrows) arrows_.push_back({vertex_index(s), vertex_index(t)});
}

int Quiver::vertex_index(const std::string& id) const {
    const auto it = std::find(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end()) throw UsageError("unknown vertex id '" + id + "'");
    return static_cast<int>(it - vertex_ids_.begin());
}

bool Quiver::has_loops() const {
    return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.source == a.target; });
}

void Quiver::check_dim(const DimVector& d) const {
    if (static_cast<int>(d.size()) != num_vertices()) throw UsageError("dimension vector length mismatch");
    for (int x : d)
        if (x < 0) throw UsageError("negative dimension vector entry");
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    q.check_dim(d);
    q.check_dim(e);
    long s = dot(d, e);
    for (const Arrow& a : q.arrows()) s -= static_cast<long>(d[a.source]) * e[a.target];
    return s;
}

long symmetrized_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    return euler_form(q, d, e) + euler_form(q, e, d);
}

DoubledQuiver double_quiver(const Quiver& q) {
    DoubledQuiver dq{q, q.arrows()};
    for (const Arrow& a : q.arrows()) dq.arrows.push_back({a.target, a.source});
    return dq;
}

Quiver full_subquiver(const Quiver& q, const std::vector<int>& j) {
    std::set<int> keep;
    for (int v : j) {
        if (v < 0 || v >= q.num_vertices()) throw UsageError("subquiver vertex out of range");
        keep.insert(v);
    }
    std::vector<std::string> ids;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (keep.count(v)) ids.push_back(q.vertex_ids()[v]);
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const Arrow& a : q.arrows())
        if (keep.count(a.source) && keep.count(a.target))
            arrows.emplace_back(q.vertex_ids()[a.source], q.vertex_ids()[a.target]);
    return {std::move(ids), std::move(arrows)};
}

std::vector<int> support(const DimVector& d) {
    std::vector<int> s;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > 0) s.push_back(static_cast<int>(i));
    return s;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::all_of(a.begin(), a.end(),
                       [&](int x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

namespace zoo {

Quiver point() { return {{"1"}, {}}; }

Quiver a(int n) {
    if (n < 1) throw UsageError("a(n) needs n >= 1");
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> arrows;
    for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i) arrows.emplace_back(std::to_string(i), std::to_string(i + 1));
    return {std::move(ids), std::move(arrows)};
}

Quiver a2_reversed() { return {{"1", "2"}, {{"2", "1"}}}; }

Quiver kronecker() { return {{"1", "2"}, {{"1", "2"}, {"1", "2"}}}; }

Quiver jordan() { return {{"1"}, {{"1", "1"}}}; }

} // namespace zoo

} // namespace qlab
