#ifndef EVOALG_FACTORY_HPP
#define EVOALG_FACTORY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/solver.hpp"

namespace evoalg {

/// K_n: zeros on the diagonal, ones elsewhere. det = (-1)^{n-1} (n-1), so the
/// characteristic must not divide n - 1.
EvolutionAlgebra complete_graph_algebra(std::size_t n, const Field& field);

/// A(a, b): a on the diagonal, b elsewhere; det = (a + (n-1) b)(a - b)^{n-1}.
EvolutionAlgebra two_param_algebra(std::size_t n, const Scalar& a, const Scalar& b);

/// P_s diag(b) for s = (1 2 ... n); b defaults to all ones.
EvolutionAlgebra cycle_algebra(std::size_t n, const Field& field, const std::optional<std::vector<Scalar>>& b = {});

struct FruchtLift {
    EvolutionAlgebra algebra;
    std::uint64_t shift = 0;
};

/// B + mI for the smallest m >= min_shift with nonzero determinant. B must be
/// a symmetric 0/1 matrix and the field must have characteristic 0; some m in
/// [min_shift, min_shift + n] always works.
FruchtLift frucht_lift(const std::vector<std::vector<int>>& adjacency, const Field& field,
                       std::uint64_t min_shift = 0);

struct Representative {
    std::string label;
    std::optional<EvolutionAlgebra> algebra;  // empty when omitted
    std::string omitted_reason;
};

/// Default samples for the continuous families.
std::vector<Scalar> default_c_samples(const Field& field);

/// Structure matrices of the classes of n-dimensional idempotent evolution
/// algebras with automorphism group S_n. Continuous families are instantiated
/// at `c_samples` (defaults above); items the field does not admit come back
/// with a reason instead of an algebra.
std::vector<Representative> sn_representatives(std::size_t n, const Field& field,
                                               std::optional<std::vector<Scalar>> c_samples = {});

/// Diagonal maps D with B D^(2) = D P_s for B = P_s diag(b), s = (1 2 ... n):
/// solves (prod_i b_i^(2^(n-i))) d_1^(2^n - 1) = 1 and propagates
/// d_{i+1} = b_i d_i^2. These are the isomorphisms E(P_s) -> E(B).
SolveOutcome cycle_normalizer(const std::vector<Scalar>& b);

/// `complete:n=4`, `twoparam:n=4,a=1,b=2`, `cycle:n=3,b=128;1;1`,
/// `frucht:<graph.json>` (optionally `frucht:<graph.json>,shift=1`),
/// `sn:n=3,index=0`.
struct FamilySpec {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;
    std::string path;

    static FamilySpec parse(std::string_view text);
    std::optional<std::string> get(std::string_view key) const;
};

struct BuiltFamily {
    EvolutionAlgebra algebra;
    std::vector<std::pair<std::string, std::string>> meta;
};

BuiltFamily build_family(const FamilySpec& spec, const Field& field);

}  // namespace evoalg

#endif  // EVOALG_FACTORY_HPP
