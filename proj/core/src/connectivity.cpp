#include "dsrpm/connectivity.hpp"

#include <bit>

#include "dsrpm/errors.hpp"

namespace dsrpm {

namespace {

// Closure of `seed` under adjacency, staying inside `allowed`.
std::uint64_t reach(const Graph& g, std::uint64_t seed, std::uint64_t allowed) {
    std::uint64_t seen = seed;
    std::uint64_t frontier = seed;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.row(std::countr_zero(f));
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
    std::vector<VertexSet> out;
    std::uint64_t left = g.vertices().mask() & ~removed.mask();
    while (left != 0) {
        std::uint64_t comp = reach(g, left & (~left + 1), left);
        out.emplace_back(comp);
        left &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g, VertexSet removed) {
    std::uint64_t left = g.vertices().mask() & ~removed.mask();
    if (left == 0) return true;
    return reach(g, left & (~left + 1), left) == left;
}

int odd_components(const Graph& g, VertexSet s) {
    int odd = 0;
    for (VertexSet c : components(g, s)) odd += c.size() % 2;
    return odd;
}

int isolated_count(const Graph& g, VertexSet s) {
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!s.contains(v) && (g.row(v) & ~s.mask()) == 0) ++count;
    return count;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) throw InvalidParameter("connectivity parameter must be positive");
    const int n = g.order();
    if (n <= k) return false;
    // Every subset of size < k, by Gosper's hack per size.
    for (int size = 0; size < k; ++size) {
        if (size == 0) {
            if (!is_connected(g)) return false;
            continue;
        }
        std::uint64_t m = (std::uint64_t{1} << size) - 1;
        const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
        while (limit == 0 || m < limit) {
            if (!is_connected(g, VertexSet{m})) return false;
            const std::uint64_t c = m & (~m + 1);
            const std::uint64_t r = m + c;
            if (r == 0) break;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return true;
}

int vertex_connectivity(const Graph& g) {
    int k = 0;
    while (k + 1 < g.order() && is_k_connected(g, k + 1)) ++k;
    return k;
}

}  // namespace dsrpm
