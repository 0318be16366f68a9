#ifndef EVOALG_DIGRAPH_HPP
#define EVOALG_DIGRAPH_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evoalg/matrix.hpp"

namespace evoalg {

/// Bijection of {0, ..., n-1}. Stored 0-based; the JSON form and the cycle
/// strings are 1-based.
///
/// Composition follows the matrix convention P_s P_t = P_{s t}: `s * t` applies
/// t first, then s.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::size_t n);
    static Permutation from_one_based(const std::vector<int>& images);
    /// Builds from 1-based cycles, e.g. {{1,2,3},{4,5}}.
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

    std::size_t size() const { return images_.size(); }
    std::uint32_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::uint32_t>& images() const { return images_; }
    std::vector<int> one_based() const;

    bool is_identity() const;
    Permutation inverse() const;
    /// lcm of the cycle lengths.
    std::uint64_t order() const;
    /// Disjoint cycles including fixed points, each starting at its smallest
    /// element, ordered by that element.
    std::vector<std::vector<std::uint32_t>> cycles() const;
    /// Human-readable cycle notation such as "(1 2 3)(4 5)"; "()" for identity.
    std::string cycle_string() const;

    friend Permutation operator*(const Permutation& outer, const Permutation& inner);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> images_;
};

/// 0/1 adjacency with loops; at most 64 vertices.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t n);
    static Digraph from_adjacency(const std::vector<std::vector<int>>& adj);

    std::size_t size() const { return n_; }
    bool has_edge(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1U; }
    void set_edge(std::size_t i, std::size_t j, bool on = true);
    /// Bit j set when (i, j) is an edge.
    std::uint64_t row_mask(std::size_t i) const { return rows_[i]; }
    /// Bit i set when (i, j) is an edge.
    std::uint64_t column_mask(std::size_t j) const;
    std::size_t out_degree(std::size_t i) const;
    std::size_t in_degree(std::size_t j) const;
    bool has_loop(std::size_t i) const { return has_edge(i, i); }
    bool is_symmetric() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// The zero pattern of A: edge (i, j) exactly when a_ij != 0.
Digraph graph_of(const Matrix& a);

constexpr std::size_t kMaxSearchDimension = 12;
constexpr std::size_t kMaxPermutationList = 1'000'000;

/// All s with adj(i, j) == adj(s(i), s(j)), in lexicographic order of image
/// vectors. Backtracking over partial maps pruned by (in-degree, out-degree,
/// loop) invariants. Throws CapExceeded above kMaxSearchDimension vertices or
/// when more than kMaxPermutationList automorphisms exist.
std::vector<Permutation> graph_automorphisms(const Digraph& g);

/// Visits every s with g.adj(i, j) == h.adj(s(i), s(j)) in lexicographic
/// order until `visit` returns false. Returns the number of maps visited.
std::size_t for_each_graph_isomorphism(const Digraph& g, const Digraph& h,
                                       const std::function<bool(const Permutation&)>& visit);

/// Lazy enumeration of the permutations t with a_{t(j) j} != 0 for every j,
/// i.e. the perfect matchings of the bipartite support graph, in lexicographic
/// order of image vectors. Branches that cannot be completed to a perfect
/// matching are cut with a bitmask matching check.
class TransversalEnumerator {
public:
    explicit TransversalEnumerator(const Digraph& pattern);
    std::optional<Permutation> next();

private:
    bool completable(std::size_t from_column, std::uint64_t used_rows) const;

    std::size_t n_;
    std::vector<std::uint64_t> column_rows_;
    std::vector<int> choice_;
    std::uint64_t used_ = 0;
    std::size_t depth_ = 0;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Permutation> transversals(const Matrix& a);

/// A transversal of minimum order. Throws SingularError when the pattern has
/// no transversal.
Permutation min_order_transversal(const Digraph& pattern);
/// t_A: the minimum order over all transversals of A.
std::uint64_t min_transversal_order(const Matrix& a);

}  // namespace evoalg

#endif  // EVOALG_DIGRAPH_HPP
