#include "evoalg/digraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "evoalg/error.hpp"

namespace evoalg {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v]) throw DomainError("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> im(n);
    std::iota(im.begin(), im.end(), 0U);
    return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
    std::vector<std::uint32_t> im;
    im.reserve(images.size());
    for (int v : images) {
        if (v < 1) throw DomainError("permutation images are 1-based");
        im.push_back(static_cast<std::uint32_t>(v - 1));
    }
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    std::vector<std::uint32_t> im(n);
    std::iota(im.begin(), im.end(), 0U);
    for (const auto& c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            const int from = c[k];
            const int to = c[(k + 1) % c.size()];
            if (from < 1 || to < 1 || static_cast<std::size_t>(from) > n || static_cast<std::size_t>(to) > n) {
                throw DomainError("cycle entry out of range");
            }
            im[from - 1] = static_cast<std::uint32_t>(to - 1);
        }
    }
    return Permutation(std::move(im));
}

std::vector<int> Permutation::one_based() const {
    std::vector<int> out;
    out.reserve(images_.size());
    for (auto v : images_) out.push_back(static_cast<int>(v) + 1);
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
    std::uint64_t o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
    return o;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t s = 0; s < images_.size(); ++s) {
        if (seen[s]) continue;
        auto& c = out.emplace_back();
        for (std::uint32_t v = s; !seen[v]; v = images_[v]) {
            seen[v] = true;
            c.push_back(v);
        }
    }
    return out;
}

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    for (const auto& c : cycles()) {
        if (c.size() < 2) continue;
        os << '(';
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k] + 1;
        os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size()) throw MismatchError("permutation size mismatch");
    std::vector<std::uint32_t> im(inner.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = outer.images_[inner.images_[i]];
    Permutation r;
    r.images_ = std::move(im);
    return r;
}

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(std::size_t n) : n_(n), rows_(n, 0) {
    if (n > 64) throw CapExceeded("digraphs are limited to 64 vertices");
}

Digraph Digraph::from_adjacency(const std::vector<std::vector<int>>& adj) {
    Digraph g(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
        if (adj[i].size() != adj.size()) throw MismatchError("adjacency matrix must be square");
        for (std::size_t j = 0; j < adj.size(); ++j) {
            if (adj[i][j] != 0 && adj[i][j] != 1) throw DomainError("adjacency entries must be 0 or 1");
            g.set_edge(i, j, adj[i][j] == 1);
        }
    }
    return g;
}

void Digraph::set_edge(std::size_t i, std::size_t j, bool on) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    rows_[i] = on ? (rows_[i] | bit) : (rows_[i] & ~bit);
}

std::uint64_t Digraph::column_mask(std::size_t j) const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (has_edge(i, j)) m |= std::uint64_t{1} << i;
    }
    return m;
}

std::size_t Digraph::out_degree(std::size_t i) const { return static_cast<std::size_t>(std::popcount(rows_[i])); }

std::size_t Digraph::in_degree(std::size_t j) const {
    return static_cast<std::size_t>(std::popcount(column_mask(j)));
}

bool Digraph::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (has_edge(i, j) != has_edge(j, i)) return false;
    return true;
}

Digraph graph_of(const Matrix& a) {
    if (!a.is_square()) throw MismatchError("graph_of needs a square matrix");
    Digraph g(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) g.set_edge(i, j);
    return g;
}

// ---------------------------------------------------------------------------
// Automorphisms and isomorphisms

namespace {

using Invariant = std::tuple<std::size_t, std::size_t, bool>;

std::vector<Invariant> invariants(const Digraph& g) {
    std::vector<Invariant> out;
    for (std::size_t v = 0; v < g.size(); ++v) out.emplace_back(g.in_degree(v), g.out_degree(v), g.has_loop(v));
    return out;
}

struct IsoSearch {
    const Digraph& g;
    const Digraph& h;
    std::vector<Invariant> inv_g;
    std::vector<Invariant> inv_h;
    const std::function<bool(const Permutation&)>& visit;
    std::vector<std::uint32_t> image;
    std::uint64_t used = 0;
    std::size_t visited = 0;
    bool stop = false;

    bool consistent(std::size_t v, std::uint32_t w) const {
        if (inv_g[v] != inv_h[w]) return false;
        if (g.has_edge(v, v) != h.has_edge(w, w)) return false;
        for (std::size_t u = 0; u < v; ++u) {
            if (g.has_edge(u, v) != h.has_edge(image[u], w)) return false;
            if (g.has_edge(v, u) != h.has_edge(w, image[u])) return false;
        }
        return true;
    }

    void run(std::size_t v) {
        if (stop) return;
        if (v == g.size()) {
            ++visited;
            if (!visit(Permutation(image))) stop = true;
            return;
        }
        for (std::uint32_t w = 0; w < h.size() && !stop; ++w) {
            if ((used >> w) & 1U) continue;
            if (!consistent(v, w)) continue;
            image[v] = w;
            used |= std::uint64_t{1} << w;
            run(v + 1);
            used &= ~(std::uint64_t{1} << w);
        }
    }
};

}  // namespace

std::size_t for_each_graph_isomorphism(const Digraph& g, const Digraph& h,
                                       const std::function<bool(const Permutation&)>& visit) {
    if (g.size() != h.size()) return 0;
    if (g.size() > kMaxSearchDimension) {
        throw CapExceeded("graph isomorphism search is capped at " + std::to_string(kMaxSearchDimension) +
                          " vertices");
    }
    IsoSearch s{g, h, invariants(g), invariants(h), visit, std::vector<std::uint32_t>(g.size()), 0, 0, false};
    auto sorted_g = s.inv_g;
    auto sorted_h = s.inv_h;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) return 0;
    s.run(0);
    return s.visited;
}

std::vector<Permutation> graph_automorphisms(const Digraph& g) {
    std::vector<Permutation> out;
    for_each_graph_isomorphism(g, g, [&](const Permutation& p) {
        if (out.size() >= kMaxPermutationList) {
            throw CapExceeded("more than " + std::to_string(kMaxPermutationList) + " graph automorphisms");
        }
        out.push_back(p);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Transversals

namespace {

// Perfect matching of the given columns into the given rows (bitmask Kuhn).
bool has_perfect_matching(const std::vector<std::uint64_t>& column_rows, std::uint64_t columns, std::uint64_t rows) {
    if (std::popcount(columns) != std::popcount(rows)) return false;
    std::vector<int> row_match(64, -1);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < column_rows.size(); ++j)
        if ((columns >> j) & 1U) cols.push_back(j);

    std::function<bool(std::size_t, std::uint64_t&)> augment = [&](std::size_t j, std::uint64_t& visited) {
        std::uint64_t cand = column_rows[j] & rows & ~visited;
        while (cand) {
            const auto i = static_cast<std::size_t>(std::countr_zero(cand));
            cand &= cand - 1;
            visited |= std::uint64_t{1} << i;
            if (row_match[i] < 0 || augment(static_cast<std::size_t>(row_match[i]), visited)) {
                row_match[i] = static_cast<int>(j);
                return true;
            }
        }
        return false;
    };
    for (auto j : cols) {
        std::uint64_t visited = 0;
        if (!augment(j, visited)) return false;
    }
    return true;
}

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

TransversalEnumerator::TransversalEnumerator(const Digraph& pattern) : n_(pattern.size()), choice_(pattern.size(), -1) {
    for (std::size_t j = 0; j < n_; ++j) column_rows_.push_back(pattern.column_mask(j));
}

bool TransversalEnumerator::completable(std::size_t from_column, std::uint64_t used_rows) const {
    const std::uint64_t columns = low_mask(n_) & ~low_mask(from_column);
    return has_perfect_matching(column_rows_, columns, low_mask(n_) & ~used_rows);
}

std::optional<Permutation> TransversalEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (n_ == 0) {
            done_ = true;
            return Permutation::identity(0);
        }
        if (!completable(0, 0)) {
            done_ = true;
            return std::nullopt;
        }
        depth_ = 0;
        choice_[0] = -1;
    } else {
        depth_ = n_ - 1;
        used_ &= ~(std::uint64_t{1} << choice_[depth_]);
    }
    for (;;) {
        const std::uint64_t cand_all = column_rows_[depth_] & ~used_;
        int found = -1;
        for (int i = choice_[depth_] + 1; i < static_cast<int>(n_); ++i) {
            if (!((cand_all >> i) & 1U)) continue;
            if (completable(depth_ + 1, used_ | (std::uint64_t{1} << i))) {
                found = i;
                break;
            }
        }
        if (found >= 0) {
            choice_[depth_] = found;
            used_ |= std::uint64_t{1} << found;
            if (depth_ + 1 == n_) {
                std::vector<std::uint32_t> im(n_);
                for (std::size_t j = 0; j < n_; ++j) im[j] = static_cast<std::uint32_t>(choice_[j]);
                return Permutation(std::move(im));
            }
            ++depth_;
            choice_[depth_] = -1;
            continue;
        }
        choice_[depth_] = -1;
        if (depth_ == 0) {
            done_ = true;
            return std::nullopt;
        }
        --depth_;
        used_ &= ~(std::uint64_t{1} << choice_[depth_]);
    }
}

std::vector<Permutation> transversals(const Matrix& a) {
    TransversalEnumerator it(graph_of(a));
    std::vector<Permutation> out;
    while (auto t = it.next()) out.push_back(std::move(*t));
    return out;
}

namespace {

// Orders attainable by permutations of n points: lcms of the partitions of n.
std::vector<std::uint64_t> attainable_orders(std::size_t n) {
    std::vector<std::set<std::uint64_t>> dp(n + 1);
    dp[0].insert(1);
    for (std::size_t part = 1; part <= n; ++part) {
        for (std::size_t s = part; s <= n; ++s) {
            for (auto o : std::vector<std::uint64_t>(dp[s - part].begin(), dp[s - part].end())) {
                dp[s].insert(std::lcm(o, static_cast<std::uint64_t>(part)));
            }
        }
    }
    return {dp[n].begin(), dp[n].end()};
}

// Finds a transversal whose cycle lengths all divide t.
struct CycleSearch {
    const Digraph& g;
    std::vector<std::uint64_t> column_rows;
    std::vector<std::size_t> lengths;  // divisors of t
    std::vector<std::uint32_t> image;
    std::uint64_t assigned = 0;

    bool edge_image(std::size_t from, std::size_t to) const { return g.has_edge(to, from); }  // t(from) = to

    bool remaining_feasible() const {
        const std::uint64_t rest = low_mask(g.size()) & ~assigned;
        return has_perfect_matching(column_rows, rest, rest);
    }

    bool extend_path(std::vector<std::uint32_t>& path, std::size_t len) {
        const std::uint32_t last = path.back();
        if (path.size() == len) {
            if (!edge_image(last, path.front())) return false;
            for (std::size_t k = 0; k < path.size(); ++k) image[path[k]] = path[(k + 1) % path.size()];
            if (remaining_feasible() && solve()) return true;
            return false;
        }
        for (std::uint32_t w = 0; w < g.size(); ++w) {
            if ((assigned >> w) & 1U) continue;
            if (!edge_image(last, w)) continue;
            assigned |= std::uint64_t{1} << w;
            path.push_back(w);
            if (extend_path(path, len)) return true;
            path.pop_back();
            assigned &= ~(std::uint64_t{1} << w);
        }
        return false;
    }

    bool solve() {
        const std::uint64_t rest = low_mask(g.size()) & ~assigned;
        if (rest == 0) return true;
        const auto v = static_cast<std::uint32_t>(std::countr_zero(rest));
        const auto remaining = static_cast<std::size_t>(std::popcount(rest));
        for (auto len : lengths) {
            if (len > remaining) break;
            assigned |= std::uint64_t{1} << v;
            std::vector<std::uint32_t> path{v};
            if (extend_path(path, len)) return true;
            assigned &= ~(std::uint64_t{1} << v);
        }
        return false;
    }
};

}  // namespace

Permutation min_order_transversal(const Digraph& pattern) {
    const std::size_t n = pattern.size();
    std::vector<std::uint64_t> column_rows;
    for (std::size_t j = 0; j < n; ++j) column_rows.push_back(pattern.column_mask(j));
    if (!has_perfect_matching(column_rows, low_mask(n), low_mask(n))) {
        throw SingularError("structure pattern has no nonzero transversal");
    }
    bool full_diagonal = true;
    for (std::size_t i = 0; i < n; ++i) full_diagonal = full_diagonal && pattern.has_loop(i);
    if (full_diagonal) return Permutation::identity(n);

    for (auto t : attainable_orders(n)) {
        CycleSearch s{pattern, column_rows, {}, std::vector<std::uint32_t>(n), 0};
        for (std::size_t len = 1; len <= n; ++len)
            if (t % len == 0) s.lengths.push_back(len);
        if (s.solve()) return Permutation(std::move(s.image));
    }
    throw SingularError("no transversal found");
}

std::uint64_t min_transversal_order(const Matrix& a) { return min_order_transversal(graph_of(a)).order(); }

}  // namespace evoalg
