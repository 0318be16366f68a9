#include "evoalg/smith.hpp"

#include <utility>

namespace evoalg {

namespace {

IntMatrix identity_int(std::size_t n) {
    IntMatrix m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m, std::size_t cols) {
    const std::size_t rows = m.size();
    SmithForm out;
    out.left = identity_int(rows);
    out.right = identity_int(cols);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(m[a], m[b]);
        std::swap(out.left[a], out.left[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& row : m) std::swap(row[a], row[b]);
        for (auto& row : out.right) std::swap(row[a], row[b]);
    };
    // row_i -= q * row_t
    auto row_axpy = [&](std::size_t i, std::size_t t, const mpz_class& q) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[t][j];
        for (std::size_t j = 0; j < rows; ++j) out.left[i][j] -= q * out.left[t][j];
    };
    // col_j -= q * col_t
    auto col_axpy = [&](std::size_t j, std::size_t t, const mpz_class& q) {
        for (std::size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][t];
        for (std::size_t i = 0; i < cols; ++i) out.right[i][j] -= q * out.right[i][t];
    };

    const std::size_t limit = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < limit; ++t) {
        bool have_pivot = false;
        for (;;) {
            // smallest nonzero entry of the trailing block
            std::size_t pi = 0, pj = 0;
            bool found = false;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (m[i][j] == 0) continue;
                    if (!found || abs(m[i][j]) < abs(m[pi][pj])) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            }
            if (!found) break;
            have_pivot = true;
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                row_axpy(i, t, q);
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                col_axpy(j, t, q);
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility of the trailing block by the pivot
            std::size_t bad_row = rows;
            for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        bad_row = i;
                        break;
                    }
                }
            }
            if (bad_row == rows) break;
            row_axpy(t, bad_row, -1);
        }
        if (!have_pivot) break;
        if (m[t][t] < 0) {
            for (auto& v : m[t]) v = -v;
            for (auto& v : out.left[t]) v = -v;
        }
    }
    out.rank = t;
    out.diagonal.assign(limit, 0);
    for (std::size_t k = 0; k < limit; ++k) out.diagonal[k] = m[k][k];
    return out;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), c = b.front().size();
    IntMatrix r(n, std::vector<mpz_class>(c, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

}  // namespace evoalg
