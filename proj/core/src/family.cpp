#include "dsrpm/family.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dsrpm/errors.hpp"

namespace dsrpm {

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int offset = g.order();
    Graph out(offset + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(u + offset, v + offset);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    const int offset = g.order();
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, v + offset);
    return out;
}

Graph copies(const Graph& g, int count) {
    if (count < 0) throw InvalidParameter("negative copy count");
    Graph out(0);
    for (int i = 0; i < count; ++i) out = disjoint_union(out, g);
    return out;
}

void FamilySpec::validate() const {
    if (s < 0) throw InvalidParameter("cut size s must be nonnegative");
    if (parts.empty()) throw InvalidParameter("family needs at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1 || parts[i] % 2 == 0)
            throw InvalidParameter("part " + std::to_string(parts[i]) + " is not a positive odd order");
        if (i > 0 && parts[i] < parts[i - 1]) throw InvalidParameter("parts must be nondecreasing");
    }
    const int total = s + std::accumulate(parts.begin(), parts.end(), 0);
    if (total != n)
        throw InvalidParameter("s + sum(parts) = " + std::to_string(total) + " does not equal n = " +
                               std::to_string(n));
    if (n > kMaxVertices) throw CapacityError("family order exceeds vertex cap");
}

bool FamilySpec::valid_for_ordering() const {
    try {
        validate();
    } catch (const Error&) {
        return false;
    }
    if (s < 1 || q() < s + 2) return false;
    if (parts[static_cast<std::size_t>(s)] < 3) return false;  // n_{s+1}, 1-based
    return parts.back() < n - 3 * q() + s + 3;
}

Graph proof_family(const FamilySpec& spec) {
    spec.validate();
    Graph rest(0);
    for (int part : spec.parts) rest = disjoint_union(rest, complete_graph(part));
    return join(complete_graph(spec.s), rest);
}

Graph cut_family(int n, int s) {
    if (s < 1) throw InvalidParameter("cut size must be positive");
    if (n % 2 != 0) throw InvalidParameter("order must be even");
    if (n < 2 * s + 6) throw InvalidParameter("order must satisfy n >= 2s + 6");
    FamilySpec spec{n, s, std::vector<int>(static_cast<std::size_t>(s), 1)};
    spec.parts.push_back(3);
    spec.parts.push_back(n - 2 * s - 3);
    return proof_family(spec);
}

Graph extremal_family(int n, int k) { return cut_family(n, k); }

std::vector<VertexSet> cut_family_partition(int n, int s) {
    return {VertexSet::range(0, s), VertexSet::range(s, s), VertexSet::range(2 * s, 3),
            VertexSet::range(2 * s + 3, n - 2 * s - 3)};
}

FamilySpec ordering_baseline(int n, int s, int q) {
    FamilySpec spec{n, s, std::vector<int>(static_cast<std::size_t>(s), 1)};
    for (int i = 0; i < q - s - 1; ++i) spec.parts.push_back(3);
    spec.parts.push_back(n - 3 * q + s + 3);
    std::sort(spec.parts.begin(), spec.parts.end());
    spec.validate();
    return spec;
}

Graph small_order_extremal(int n) {
    if (n < 4 || n % 2 != 0) throw InvalidParameter("small-order comparison graph needs even n >= 4");
    return join(complete_graph(n / 2 - 1), empty_graph(n / 2 + 1));
}

Graph large_order_extremal(int n) {
    if (n < 4 || n % 2 != 0) throw InvalidParameter("large-order comparison graph needs even n >= 4");
    return join(complete_graph(1), disjoint_union(complete_graph(n - 3), empty_graph(2)));
}

}  // namespace dsrpm
