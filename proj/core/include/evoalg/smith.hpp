#ifndef EVOALG_SMITH_HPP
#define EVOALG_SMITH_HPP

#include <gmpxx.h>

#include <vector>

namespace evoalg {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Smith normal form S = L M R with L, R unimodular. `diagonal` holds the
/// invariant factors s_0 | s_1 | ... (nonnegative), padded with zeros up to
/// min(rows, cols).
struct SmithForm {
    std::vector<mpz_class> diagonal;
    IntMatrix left;   // rows x rows
    IntMatrix right;  // cols x cols
    std::size_t rank = 0;
};

SmithForm smith_normal_form(IntMatrix m, std::size_t cols);

/// Integer matrix product, used by callers that check L M R == S.
IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace evoalg

#endif  // EVOALG_SMITH_HPP
