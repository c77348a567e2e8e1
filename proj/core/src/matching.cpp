#include "dsrpm/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "dsrpm/connectivity.hpp"
#include "dsrpm/errors.hpp"

namespace dsrpm {

bool Matching::is_valid_in(const Graph& g) const {
    std::uint64_t covered = 0;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) return false;
        const std::uint64_t ends = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        if (covered & ends) return false;
        covered |= ends;
    }
    return true;
}

namespace {

// Edmonds' blossom algorithm: BFS for augmenting paths from each free vertex, contracting
// odd cycles through the `base` array.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

    std::vector<int> run() {
        // Greedy start.
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (std::uint64_t r = g_.row(v); r != 0; r &= r - 1) {
                const int u = std::countr_zero(r);
                if (match_[u] == -1) {
                    match_[u] = v;
                    match_[v] = u;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int end = find_path(v);
            while (end != -1) {
                const int pv = parent_[end];
                const int ppv = match_[pv];
                match_[end] = pv;
                match_[pv] = end;
                end = ppv;
            }
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (std::uint64_t r = g_.row(v); r != 0; r &= r - 1) {
                const int to = std::countr_zero(r);
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    const int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<bool> used_;
    std::vector<bool> in_blossom_;
};

bool violates_tutte(const Graph& g, VertexSet s, int& odd) {
    odd = odd_components(g, s);
    return odd > s.size();
}

// Calls visit(mask) for every n-bit mask, by popcount then numeric order, until it returns true.
template <class Visit>
bool for_each_subset_by_size(int n, Visit&& visit) {
    for (int size = 0; size <= n; ++size) {
        if (size == 0) {
            if (visit(std::uint64_t{0})) return true;
            continue;
        }
        std::uint64_t m = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (m < limit) {
            if (visit(m)) return true;
            const std::uint64_t c = m & (~m + 1);
            const std::uint64_t r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return false;
}

std::optional<TutteCertificate> heuristic_tutte(const Graph& g) {
    const int n = g.order();
    auto try_set = [&](VertexSet s) -> std::optional<TutteCertificate> {
        int odd = 0;
        if (violates_tutte(g, s, odd)) return TutteCertificate{s, odd};
        return std::nullopt;
    };
    if (auto c = try_set(VertexSet{})) return c;
    for (int u = 0; u < n; ++u)
        if (auto c = try_set(VertexSet{std::uint64_t{1} << u})) return c;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (auto c = try_set(VertexSet{(std::uint64_t{1} << u) | (std::uint64_t{1} << v)})) return c;
    // Neighbourhoods of low-degree vertices separate them (and whatever else hangs off them).
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (int v : order)
        if (auto c = try_set(g.neighbors(v))) return c;
    // Prefixes of the vertices by decreasing degree.
    std::reverse(order.begin(), order.end());
    VertexSet prefix;
    for (int i = 0; i < n / 2; ++i) {
        prefix.insert(order[i]);
        if (auto c = try_set(prefix)) return c;
    }
    return std::nullopt;
}

}  // namespace

Matching max_matching(const Graph& g) {
    const std::vector<int> mate = Blossom(g).run();
    Matching m;
    for (int v = 0; v < g.order(); ++v)
        if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
    return m;
}

bool has_perfect_matching(const Graph& g) {
    if (g.order() % 2 != 0) return false;
    return 2 * max_matching(g).size() == g.order();
}

bool TutteCertificate::verifies(const Graph& g) const {
    if ((s.mask() & ~g.vertices().mask()) != 0) return false;
    const int odd = odd_components(g, s);
    return odd == odd_comp_count && odd > s.size();
}

TutteSearch tutte_certificate(const Graph& g) {
    const int n = g.order();
    TutteSearch out;
    if (n <= kExhaustiveSubsetOrder) {
        for_each_subset_by_size(n, [&](std::uint64_t m) {
            int odd = 0;
            if (violates_tutte(g, VertexSet{m}, odd)) {
                out.certificate = TutteCertificate{VertexSet{m}, odd};
                return true;
            }
            return false;
        });
        out.verdict = out.certificate ? TutteVerdict::certificate : TutteVerdict::none;
        return out;
    }
    if (has_perfect_matching(g)) {
        out.verdict = TutteVerdict::none;
        return out;
    }
    out.certificate = heuristic_tutte(g);
    out.verdict = out.certificate ? TutteVerdict::certificate : TutteVerdict::unknown;
    return out;
}

int max_tutte_deficiency(const Graph& g) {
    const int n = g.order();
    if (n > kExhaustiveSubsetOrder) throw InvalidParameter("exhaustive subset scan limited to 16 vertices");
    int best = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < limit; ++m) {
        VertexSet s{m};
        best = std::max(best, odd_components(g, s) - s.size());
    }
    return best;
}

const char* to_string(HalfWeight w) {
    switch (w.halves) {
        case 0: return "0";
        case 1: return "1/2";
        case 2: return "1";
        default: return "?";
    }
}

bool FractionalWitness::verifies(const Graph& g) const {
    if (edges.size() != weights.size()) return false;
    std::vector<int> halves(g.order(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) return false;
        if (weights[i].halves < 0 || weights[i].halves > 2) return false;
        halves[u] += weights[i].halves;
        halves[v] += weights[i].halves;
    }
    return std::all_of(halves.begin(), halves.end(), [](int h) { return h == 2; });
}

bool IsolatedViolation::verifies(const Graph& g) const {
    if ((s.mask() & ~g.vertices().mask()) != 0) return false;
    const int iso = isolated_count(g, s);
    return iso == isolated && iso > s.size();
}

namespace {

// Kuhn's augmenting paths on the double cover; left u is adjacent to right v' iff uv ∈ E.
class DoubleCover {
public:
    explicit DoubleCover(const Graph& g) : g_(g), n_(g.order()), left_(n_, -1), right_(n_, -1) {}

    // Index of a left vertex that cannot be matched, or -1 for a perfect matching.
    int run() {
        int unmatched = -1;
        for (int u = 0; u < n_; ++u) {
            visited_right_ = 0;
            if (!augment(u) && unmatched < 0) unmatched = u;
        }
        return unmatched;
    }

    int left_mate(int u) const { return left_[u]; }

    // Left and right vertices reachable from `root` along alternating paths.
    std::pair<std::uint64_t, std::uint64_t> alternating_reach(int root) const {
        std::uint64_t left = std::uint64_t{1} << root;
        std::uint64_t right = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (std::uint64_t r = g_.row(u) & ~right; r != 0; r &= r - 1) {
                const int v = std::countr_zero(r);
                right |= std::uint64_t{1} << v;
                const int w = right_[v];
                if (w >= 0 && !((left >> w) & 1U)) {
                    left |= std::uint64_t{1} << w;
                    stack.push_back(w);
                }
            }
        }
        return {left, right};
    }

private:
    bool augment(int u) {
        for (std::uint64_t r = g_.row(u); r != 0; r &= r - 1) {
            const int v = std::countr_zero(r);
            if ((visited_right_ >> v) & 1U) continue;
            visited_right_ |= std::uint64_t{1} << v;
            if (right_[v] == -1 || augment(right_[v])) {
                left_[u] = v;
                right_[v] = u;
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<int> left_;
    std::vector<int> right_;
    std::uint64_t visited_right_ = 0;
};

}  // namespace

FractionalResult fractional_pm(const Graph& g) {
    DoubleCover cover(g);
    const int unmatched = cover.run();
    FractionalResult out;
    if (unmatched < 0) {
        FractionalWitness w;
        w.edges = g.edges();
        for (auto [u, v] : w.edges)
            w.weights.push_back(HalfWeight{(cover.left_mate(u) == v ? 1 : 0) + (cover.left_mate(v) == u ? 1 : 0)});
        out.witness = std::move(w);
        return out;
    }
    // Hall violator X with |N(X)| = |X| − 1. Inside G − (N(X) \ X), X is a union of components
    // and its vertices without a neighbour in X are isolated.
    auto [x, nx] = cover.alternating_reach(unmatched);
    const VertexSet s{nx & ~x};
    out.violation = IsolatedViolation{s, isolated_count(g, s)};
    return out;
}

bool has_fractional_pm(const Graph& g) { return fractional_pm(g).has_fractional_pm(); }

std::optional<FractionalWitness> fractional_pm_witness(const Graph& g) { return fractional_pm(g).witness; }

std::optional<IsolatedViolation> exhaustive_isolated_violation(const Graph& g) {
    const int n = g.order();
    if (n > kExhaustiveSubsetOrder) throw InvalidParameter("exhaustive subset scan limited to 16 vertices");
    std::optional<IsolatedViolation> out;
    for_each_subset_by_size(n, [&](std::uint64_t m) {
        const VertexSet s{m};
        const int iso = isolated_count(g, s);
        if (iso > s.size()) {
            out = IsolatedViolation{s, iso};
            return true;
        }
        return false;
    });
    return out;
}

}  // namespace dsrpm
