#ifndef EVOALG_SOLVER_HPP
#define EVOALG_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/groups.hpp"

namespace evoalg {

enum class SolveStatus { Complete, NoSolution, Indeterminate };

/// Complete carries a sorted, duplicate-free list (never empty); NoSolution
/// carries nothing; Indeterminate lists the equations the field backend could
/// not settle.
struct SolveOutcome {
    SolveStatus status = SolveStatus::NoSolution;
    std::vector<MonomialMap> maps;
    std::vector<std::string> unsolved;
};

/// All d with d_k a_kj = d_j^2 b_{s(k) s(j)} for every k, j, i.e. every
/// homomorphism E(A) -> E(B) of the form e_i -> d_i e_{s(i)}.
///
/// After the zero-pattern check, each cycle of a transversal of A gives one
/// equation x^(2^L - 1) = c for the scale at the cycle's lowest vertex; the
/// other constraints then force the remaining cycles of each weakly connected
/// component, and every constraint is rechecked at the end.
SolveOutcome solve_monomial(const EvolutionAlgebra& a, const EvolutionAlgebra& b, const Permutation& sigma);

/// Same, reusing a transversal of A computed by the caller.
SolveOutcome solve_monomial(const EvolutionAlgebra& a, const EvolutionAlgebra& b, const Permutation& sigma,
                            const Permutation& transversal);

/// Diagonal automorphisms as exponent vectors over the root-of-unity group
/// <g> of order N: d_i = g^{x_i} with x_i = 2 x_j (mod N) for every a_ij != 0.
struct DiagonalLattice {
    std::uint64_t modulus = 0;
    Scalar generator;
    /// Generators of the solution subgroup of (Z/N)^n.
    std::vector<std::vector<std::uint64_t>> generators;
    /// Order of each generator; invariant factors, each dividing the next.
    std::vector<std::uint64_t> factor_orders;
    std::uint64_t order = 1;
};

struct DiagonalSubgroup {
    DiagonalLattice lattice;
    /// Sorted elements; filled when the order is at most kMaxGroupOrder.
    std::vector<MonomialMap> elements;
    bool materialized = false;
    std::vector<MonomialMap> generator_maps;
    std::uint64_t t_a = 0;
    /// False when N is not divisible by 2^{t_A} - 1: a larger cyclotomic
    /// field may then have more diagonal automorphisms.
    bool conductor_sufficient = false;
};

DiagonalSubgroup diagonal_subgroup(const EvolutionAlgebra& alg);

struct SolverOptions {
    unsigned threads = 1;
};

struct AutomorphismGroup {
    MonomialGroup group;
    /// Set when some sigma gave an Indeterminate solve; `group` then holds the
    /// maps that were found and is not claimed complete.
    bool partial = false;
    std::vector<std::string> unsolved;
    std::vector<Permutation> graph_automorphisms;
    /// Distinct sigma parts of the group (the image of phi).
    std::vector<Permutation> image;
    std::size_t kernel_order = 0;
};

/// Union over s in Aut(Gamma_A) of solve_monomial(A, A, s). The per-s solves
/// run on `threads` workers and are merged in a fixed order.
AutomorphismGroup automorphism_group(const EvolutionAlgebra& alg, const SolverOptions& opts = {});

struct MapCheck {
    bool bp2_eq_pa = false;
    bool b_pstarp_zero = false;
    bool ok() const { return bp2_eq_pa && b_pstarp_zero; }
};

/// Both identities B P^(2) = P A and B (P * P) = 0 by exact matrix arithmetic.
MapCheck check_map(const Matrix& a, const Matrix& b, const MonomialMap& m);
bool verify_map(const Matrix& a, const Matrix& b, const MonomialMap& m);

struct Certificate {
    MonomialMap map;
    MapCheck checked;
};

enum class IsoStatus { Isomorphic, NonIsomorphic, Indeterminate };

struct IsomorphismResult {
    IsoStatus status = IsoStatus::NonIsomorphic;
    std::optional<Certificate> certificate;
    /// Pattern isomorphisms Gamma_A -> Gamma_B tried.
    std::size_t candidates = 0;
    std::vector<std::string> unsolved;
};

/// Searches s over the pattern isomorphisms Gamma_A -> Gamma_B and returns the
/// first map E(A) -> E(B) found, checked with check_map.
IsomorphismResult isomorphism(const EvolutionAlgebra& a, const EvolutionAlgebra& b);

/// Oracle: every monomial G = P_s diag(d) over GF(p) with A G^(2) = G A.
/// Requires p <= 13 and n <= 4.
MonomialGroup brute_force_automorphisms(const EvolutionAlgebra& alg);

struct GeneralAutomorphisms {
    std::vector<Matrix> automorphisms;
    bool all_monomial = true;
};

/// Oracle: every invertible G over GF(p) with A G^(2) = G A and A (G * G) = 0,
/// monomial or not. Requires p <= 3 and n <= 2.
GeneralAutomorphisms brute_force_general_automorphisms(const EvolutionAlgebra& alg);

}  // namespace evoalg

#endif  // EVOALG_SOLVER_HPP
