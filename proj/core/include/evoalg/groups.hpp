#ifndef EVOALG_GROUPS_HPP
#define EVOALG_GROUPS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evoalg/monomial.hpp"

namespace evoalg {

class EvolutionAlgebra;

constexpr std::size_t kMaxGroupOrder = 1'000'000;
constexpr std::size_t kMaxRecognitionOrder = 100'000;

/// A finite set of monomial maps, stored sorted and duplicate-free.
///
/// Construction checks closure: generators are picked greedily from the
/// sorted list and the subgroup they generate is grown by right
/// multiplication; every product is looked up by binary search. The group is
/// `closed` when the identity is present and every product lands back in the
/// list. `partial` is a caller flag for groups known to be incomplete.
class MonomialGroup {
public:
    MonomialGroup(const Field& field, std::size_t n, std::vector<MonomialMap> elements, bool partial = false);

    const Field& field() const { return field_; }
    std::size_t dimension() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<MonomialMap>& elements() const { return elements_; }
    const MonomialMap& operator[](std::size_t i) const { return elements_[i]; }
    bool closed() const { return closed_; }
    bool partial() const { return partial_; }
    /// Generators found by the closure check (a generating set when closed).
    const std::vector<MonomialMap>& generators() const { return generators_; }

    std::optional<std::size_t> index_of(const MonomialMap& g) const;
    bool contains(const MonomialMap& g) const { return index_of(g).has_value(); }

    /// Kernel of g -> sigma(g): the diagonal elements.
    std::vector<MonomialMap> kernel() const;
    /// Distinct sigma parts, sorted.
    std::vector<Permutation> image() const;

private:
    void check_closure();

    Field field_;
    std::size_t n_;
    std::vector<MonomialMap> elements_;
    std::vector<MonomialMap> generators_;
    bool closed_ = false;
    bool partial_ = false;
};

/// Breadth-first closure of `gens` (identity included). Throws CapExceeded
/// when the group would exceed `cap` elements.
MonomialGroup close_generators(const Field& field, std::size_t n, const std::vector<MonomialMap>& gens,
                               std::size_t cap = kMaxGroupOrder);

/// Smallest k >= 1 with g^k = 1. Throws CapExceeded past `cap`.
std::uint64_t element_order(const MonomialMap& g, std::uint64_t cap = kMaxGroupOrder);

struct GroupProfile {
    std::uint64_t order = 0;
    bool is_abelian = true;
    std::map<std::uint64_t, std::uint64_t> order_histogram;  // element order -> count
    std::uint64_t diagonal_order = 0;                         // |kernel of phi|
    std::uint64_t quotient_order = 0;                         // |image of phi|
};

GroupProfile profile(const MonomialGroup& g);

enum class TargetKind { Trivial, Cyclic, Symmetric, Dihedral, SemidirectCyclic };

/// Named groups: Trivial, C_k, S_n, D_n (order 2n), C_m ⋊ C_n.
struct GroupTarget {
    TargetKind kind = TargetKind::Trivial;
    std::uint64_t m = 0;
    std::uint64_t n = 0;

    static GroupTarget trivial() { return {TargetKind::Trivial, 1, 1}; }
    static GroupTarget cyclic(std::uint64_t k) { return {TargetKind::Cyclic, k, 0}; }
    static GroupTarget symmetric(std::uint64_t n) { return {TargetKind::Symmetric, n, 0}; }
    static GroupTarget dihedral(std::uint64_t n) { return {TargetKind::Dihedral, n, 0}; }
    static GroupTarget semidirect(std::uint64_t m, std::uint64_t n) { return {TargetKind::SemidirectCyclic, m, n}; }

    std::uint64_t order() const;
    std::string name() const;
};

struct Recognition {
    bool matched = false;
    std::string target;
    /// Elements certifying the match: a generator for C_k; Coxeter generators
    /// for S_n (empty when the sigma-image check applies); rotation and
    /// reflection for D_n; normal generator and complement for C_m ⋊ C_n.
    std::vector<MonomialMap> witnesses;
    /// For C_m ⋊ C_n: h a h^-1 = a^r.
    std::optional<std::uint64_t> action_exponent;
    std::string detail;
};

/// Throws DomainError on unclosed or partial groups, CapExceeded above
/// kMaxRecognitionOrder.
Recognition recognize(const MonomialGroup& g, const GroupTarget& target);

/// Every named target of matching order that the group is recognized as,
/// in the order trivial, cyclic, symmetric, dihedral, semidirect.
std::vector<Recognition> recognize_all(const MonomialGroup& g);

struct QuotientReport {
    std::uint64_t diagonal_order = 0;  // |D| from the exponent lattice
    std::uint64_t kernel_order = 0;
    std::uint64_t image_order = 0;
    std::uint64_t graph_automorphism_order = 0;
    bool kernel_is_diagonal = false;
    bool diagonal_normal = false;
    bool image_in_graph_automorphisms = false;
    bool image_is_subgroup = false;
    bool order_splits = false;  // |G| = |ker| * |image|

    bool ok() const {
        return kernel_is_diagonal && diagonal_normal && image_in_graph_automorphisms && image_is_subgroup &&
               order_splits;
    }
};

/// For G = Aut(E(A)): ker(phi) equals the diagonal subgroup of A, that
/// subgroup is normal, and G/D embeds into Aut(Gamma_A) through sigma.
QuotientReport quotient_embedding_check(const MonomialGroup& g, const EvolutionAlgebra& alg);

}  // namespace evoalg

#endif  // EVOALG_GROUPS_HPP
