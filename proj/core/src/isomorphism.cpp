#include "dsrpm/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace dsrpm {

namespace {

// Colour refinement runs on G and H side by side (indices [0, n) and [n, 2n)) so the colour ids
// are comparable across the two graphs.
class Search {
public:
    Search(const Graph& g, const Graph& h, std::uint64_t budget, bool bounded)
        : g_(g), h_(h), n_(g.order()), budget_(budget), bounded_(bounded) {}

    Isomorphism run() {
        std::vector<int> colours(2 * static_cast<std::size_t>(n_), 0);
        const bool found = descend(colours);
        if (exhausted_) return Isomorphism::indeterminate;
        return found ? Isomorphism::isomorphic : Isomorphism::not_isomorphic;
    }

private:
    std::uint64_t row(int x) const {
        return x < n_ ? g_.row(x) : h_.row(x - n_);
    }

    // Returns false when the two sides' colour histograms diverge.
    bool refine(std::vector<int>& colours) const {
        int classes = count_classes(colours);
        for (;;) {
            std::map<std::vector<int>, int> ids;
            std::vector<std::vector<int>> sig(colours.size());
            for (int x = 0; x < 2 * n_; ++x) {
                auto& s = sig[x];
                s.push_back(colours[x]);
                const int base = x < n_ ? 0 : n_;
                std::vector<int> nb;
                for (std::uint64_t r = row(x); r != 0; r &= r - 1) nb.push_back(colours[base + std::countr_zero(r)]);
                std::sort(nb.begin(), nb.end());
                s.insert(s.end(), nb.begin(), nb.end());
                ids.emplace(s, 0);
            }
            int next = 0;
            for (auto& [key, id] : ids) id = next++;
            for (int x = 0; x < 2 * n_; ++x) colours[x] = ids[sig[x]];
            if (!balanced(colours)) return false;
            if (next == classes) return true;
            classes = next;
        }
    }

    static int count_classes(const std::vector<int>& colours) {
        std::vector<int> c = colours;
        std::sort(c.begin(), c.end());
        return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
    }

    bool balanced(const std::vector<int>& colours) const {
        std::map<int, int> diff;
        for (int x = 0; x < n_; ++x) ++diff[colours[x]];
        for (int x = n_; x < 2 * n_; ++x) --diff[colours[x]];
        return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second == 0; });
    }

    bool descend(std::vector<int>& colours) {
        if (bounded_ && nodes_++ >= budget_) {
            exhausted_ = true;
            return false;
        }
        if (!refine(colours)) return false;

        std::map<int, std::vector<int>> g_class;
        for (int x = 0; x < n_; ++x) g_class[colours[x]].push_back(x);
        int target = -1;
        std::size_t best = 0;
        for (auto& [c, members] : g_class) {
            if (members.size() > 1 && (target < 0 || members.size() < best)) {
                target = c;
                best = members.size();
            }
        }
        if (target < 0) return verify_bijection(colours);

        const int v = g_class[target].front();
        const int fresh = 2 * n_ + 1;
        for (int w = n_; w < 2 * n_; ++w) {
            if (colours[w] != target) continue;
            std::vector<int> trial = colours;
            trial[v] = fresh;
            trial[w] = fresh;
            if (descend(trial)) return true;
            if (exhausted_) return false;
        }
        return false;
    }

    bool verify_bijection(const std::vector<int>& colours) const {
        std::vector<int> image(n_, -1);
        std::map<int, int> h_of;
        for (int y = n_; y < 2 * n_; ++y) h_of[colours[y]] = y - n_;
        for (int x = 0; x < n_; ++x) image[x] = h_of.at(colours[x]);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (g_.has_edge(u, v) != h_.has_edge(image[u], image[v])) return false;
        return true;
    }

    const Graph& g_;
    const Graph& h_;
    int n_;
    std::uint64_t budget_;
    bool bounded_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

Isomorphism isomorphic(const Graph& g, const Graph& h, std::uint64_t node_budget) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return Isomorphism::not_isomorphic;
    std::vector<int> dg;
    std::vector<int> dh;
    for (int v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return Isomorphism::not_isomorphic;
    return Search(g, h, node_budget, g.order() > kIsomorphismExactOrder).run();
}

}  // namespace dsrpm
