#include "evoalg/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "evoalg/error.hpp"
#include "evoalg/parallel.hpp"
#include "evoalg/smith.hpp"

namespace evoalg {

namespace {

void require_compatible(const EvolutionAlgebra& a, const EvolutionAlgebra& b, const char* what) {
    if (a.dimension() != b.dimension()) throw MismatchError(std::string(what) + ": dimension mismatch");
    if (a.field() != b.field()) throw MismatchError(std::string(what) + ": field mismatch");
    a.require_idempotent(what);
    b.require_idempotent(what);
}

struct Constraint {
    std::size_t k, j;
    Scalar r;  // d_k = r d_j^2
};

// One cycle u_0 -> u_1 -> ... of the transversal, u_0 its lowest vertex.
struct CycleInfo {
    std::vector<std::size_t> verts;
    std::vector<Scalar> coef;  // d_{u_i} = coef_i x^(2^i)
    Scalar closing;            // x^(2^L - 1) = 1 / closing
    KthRoots roots;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

SolveOutcome solve_monomial(const EvolutionAlgebra& a, const EvolutionAlgebra& b, const Permutation& sigma) {
    require_compatible(a, b, "solve_monomial");
    return solve_monomial(a, b, sigma, min_order_transversal(a.graph()));
}

SolveOutcome solve_monomial(const EvolutionAlgebra& a, const EvolutionAlgebra& b, const Permutation& sigma,
                            const Permutation& tau) {
    require_compatible(a, b, "solve_monomial");
    const std::size_t n = a.dimension();
    if (sigma.size() != n || tau.size() != n) throw MismatchError("solve_monomial: permutation size mismatch");
    const Matrix& A = a.structure();
    const Matrix& B = b.structure();
    const Field& field = a.field();
    SolveOutcome out;

    // zero patterns must correspond under sigma
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (A(k, j).is_zero() != B(sigma(k), sigma(j)).is_zero()) return out;

    std::vector<Constraint> cons;
    std::vector<std::optional<Scalar>> ratio(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            if (A(k, j).is_zero()) continue;
            Scalar r = B(sigma(k), sigma(j)) / A(k, j);
            ratio[k * n + j] = r;
            cons.push_back({k, j, std::move(r)});
        }
    }
    auto r_of = [&](std::size_t k, std::size_t j) -> const Scalar& {
        const auto& r = ratio[k * n + j];
        if (!r) throw Error("solve_monomial: permutation is not a transversal of A");
        return *r;
    };

    std::vector<CycleInfo> cycles;
    std::vector<std::size_t> cycle_of(n), pos_of(n);
    std::vector<char> placed(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (placed[start]) continue;
        CycleInfo c{{}, {}, field.one(), {}};
        for (std::size_t v = start; !placed[v]; v = tau(v)) {
            placed[v] = 1;
            cycle_of[v] = cycles.size();
            pos_of[v] = c.verts.size();
            c.verts.push_back(v);
        }
        const std::size_t len = c.verts.size();
        if (len > 62) throw CapExceeded("solve_monomial: transversal cycle too long");
        c.coef.push_back(field.one());
        for (std::size_t i = 0; i + 1 < len; ++i) {
            const Scalar& prev = c.coef.back();
            c.coef.push_back(r_of(c.verts[i + 1], c.verts[i]) * prev * prev);
        }
        c.closing = r_of(c.verts[0], c.verts[len - 1]) * c.coef.back() * c.coef.back();
        const std::uint64_t k = (std::uint64_t{1} << len) - 1;
        c.roots = field.kth_roots(c.closing.inverse(), k);
        if (c.roots.decided && c.roots.roots.empty()) return out;
        cycles.push_back(std::move(c));
    }

    // weakly connected components over cycles
    std::vector<std::size_t> parent(cycles.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& e : cons) {
        const std::size_t x = find_root(parent, cycle_of[e.k]), y = find_root(parent, cycle_of[e.j]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    std::map<std::size_t, std::vector<std::size_t>> comps;  // keyed by lowest cycle = lowest vertex
    for (std::size_t c = 0; c < cycles.size(); ++c) comps[find_root(parent, c)].push_back(c);

    std::vector<std::vector<std::vector<Scalar>>> per_comp;  // component -> solutions (length-n, sparse)
    std::vector<std::string> unsolved;
    for (const auto& [key, members] : comps) {
        (void)key;
        std::optional<std::size_t> root;
        for (std::size_t c : members) {
            if (cycles[c].roots.decided) {
                root = c;
                break;
            }
        }
        if (!root) {
            for (std::size_t c : members) unsolved.push_back(cycles[c].roots.equation);
            continue;
        }
        std::vector<char> in_comp(n, 0);
        for (std::size_t c : members)
            for (std::size_t v : cycles[c].verts) in_comp[v] = 1;

        std::vector<std::vector<Scalar>> sols;
        for (const Scalar& x0 : cycles[*root].roots.roots) {
            std::vector<Scalar> d(n, field.zero());
            std::vector<char> done(cycles.size(), 0);
            auto assign = [&](std::size_t c, const Scalar& x) {
                const auto& cy = cycles[c];
                Scalar p = x;
                for (std::size_t i = 0; i < cy.verts.size(); ++i) {
                    d[cy.verts[i]] = cy.coef[i] * p;
                    p = p * p;
                }
                done[c] = 1;
            };
            assign(*root, x0);
            std::size_t remaining = members.size() - 1;
            while (remaining > 0) {
                bool progress = false;
                for (const auto& e : cons) {
                    if (!in_comp[e.k]) continue;
                    const std::size_t ck = cycle_of[e.k], cj = cycle_of[e.j];
                    if (done[ck] == done[cj]) continue;
                    const std::size_t c = done[ck] ? cj : ck;
                    const auto& cy = cycles[c];
                    const std::size_t len = cy.verts.size();
                    Scalar base = field.one();
                    std::uint64_t e2 = 0;
                    if (!done[ck]) {
                        // x^(2^i) = r d_j^2 / coef_i at k = u_i
                        const std::size_t i = pos_of[e.k];
                        base = e.r * d[e.j] * d[e.j] / cy.coef[i];
                        e2 = len - i;
                    } else {
                        // x^(2^(i+1)) = (d_k / r) / coef_i^2 at j = u_i
                        const std::size_t i = pos_of[e.j];
                        base = d[e.k] / e.r / (cy.coef[i] * cy.coef[i]);
                        e2 = len - i - 1;
                    }
                    // x = closing * x^(2^L)
                    assign(c, cy.closing * base.pow(std::uint64_t{1} << e2));
                    --remaining;
                    progress = true;
                }
                if (!progress) throw Error("solve_monomial: component propagation stalled");
            }
            bool ok = true;
            for (const auto& e : cons) {
                if (!in_comp[e.k]) continue;
                if (!(d[e.k] == e.r * d[e.j] * d[e.j])) {
                    ok = false;
                    break;
                }
            }
            if (ok) sols.push_back(std::move(d));
        }
        if (sols.empty()) return out;
        per_comp.push_back(std::move(sols));
    }
    if (!unsolved.empty()) {
        out.status = SolveStatus::Indeterminate;
        out.unsolved = std::move(unsolved);
        return out;
    }

    std::size_t total = 1;
    for (const auto& s : per_comp) {
        if (total > kMaxGroupOrder / s.size()) throw CapExceeded("solve_monomial: more than 10^6 solutions");
        total *= s.size();
    }
    std::vector<std::size_t> idx(per_comp.size(), 0);
    out.maps.reserve(total);
    for (std::size_t t = 0; t < total; ++t) {
        std::vector<Scalar> d(n, field.zero());
        for (std::size_t c = 0; c < per_comp.size(); ++c) {
            const auto& s = per_comp[c][idx[c]];
            for (std::size_t v = 0; v < n; ++v)
                if (!s[v].is_zero()) d[v] = s[v];
        }
        out.maps.emplace_back(sigma, std::move(d));
        for (std::size_t c = 0; c < idx.size(); ++c) {
            if (++idx[c] < per_comp[c].size()) break;
            idx[c] = 0;
        }
    }
    std::sort(out.maps.begin(), out.maps.end());
    out.maps.erase(std::unique(out.maps.begin(), out.maps.end()), out.maps.end());
    out.status = SolveStatus::Complete;
    return out;
}

DiagonalSubgroup diagonal_subgroup(const EvolutionAlgebra& alg) {
    alg.require_idempotent("diagonal_subgroup");
    const std::size_t n = alg.dimension();
    const Matrix& A = alg.structure();
    const Field& field = alg.field();
    const RootOfUnityGroup mu = field.root_of_unity_group();
    const std::uint64_t N = mu.order;

    // x_i - 2 x_j = 0 (mod N) for each a_ij != 0
    std::set<std::vector<long>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (A(i, j).is_zero()) continue;
            std::vector<long> row(n, 0);
            row[i] += 1;
            row[j] -= 2;
            rows.insert(row);
        }
    }
    IntMatrix m;
    for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
    const SmithForm snf = smith_normal_form(m, n);

    DiagonalSubgroup out;
    out.lattice.modulus = N;
    out.lattice.generator = mu.generator;
    const mpz_class modulus(static_cast<unsigned long>(N));
    for (std::size_t k = 0; k < n; ++k) {
        const mpz_class s = k < snf.diagonal.size() ? snf.diagonal[k] : mpz_class(0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
        const std::uint64_t ord = g.get_ui();
        if (ord <= 1) continue;
        const mpz_class step = modulus / g;
        std::vector<std::uint64_t> gen(n);
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class v = snf.right[i][k] * step;
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
            gen[i] = r.get_ui();
        }
        out.lattice.generators.push_back(std::move(gen));
        out.lattice.factor_orders.push_back(ord);
        if (out.lattice.order > ~std::uint64_t{0} / ord) throw CapExceeded("diagonal_subgroup: order overflow");
        out.lattice.order *= ord;
    }

    std::map<std::uint64_t, Scalar> power_cache;
    auto power = [&](std::uint64_t e) -> const Scalar& {
        auto it = power_cache.find(e);
        if (it == power_cache.end()) it = power_cache.emplace(e, mu.generator.pow(e)).first;
        return it->second;
    };
    auto to_map = [&](const std::vector<std::uint64_t>& x) {
        std::vector<Scalar> d;
        d.reserve(n);
        for (std::uint64_t e : x) d.push_back(power(e));
        return MonomialMap::diagonal(std::move(d));
    };
    for (const auto& gen : out.lattice.generators) out.generator_maps.push_back(to_map(gen));

    if (out.lattice.order <= kMaxGroupOrder) {
        const auto& gens = out.lattice.generators;
        const auto& ords = out.lattice.factor_orders;
        std::vector<std::uint64_t> c(gens.size(), 0);
        out.elements.reserve(out.lattice.order);
        for (std::uint64_t t = 0; t < out.lattice.order; ++t) {
            std::vector<std::uint64_t> x(n, 0);
            for (std::size_t g = 0; g < gens.size(); ++g)
                for (std::size_t i = 0; i < n; ++i) x[i] = (x[i] + c[g] * gens[g][i]) % N;
            out.elements.push_back(to_map(x));
            for (std::size_t g = 0; g < c.size(); ++g) {
                if (++c[g] < ords[g]) break;
                c[g] = 0;
            }
        }
        std::sort(out.elements.begin(), out.elements.end());
        out.materialized = true;
    }

    out.t_a = min_transversal_order(A);
    out.conductor_sufficient = out.t_a < 64 && N % ((std::uint64_t{1} << out.t_a) - 1) == 0;
    return out;
}

AutomorphismGroup automorphism_group(const EvolutionAlgebra& alg, const SolverOptions& opts) {
    alg.require_idempotent("automorphism_group");
    const std::size_t n = alg.dimension();
    if (n > kMaxSearchDimension) throw CapExceeded("automorphism_group: dimension above 12");
    std::vector<Permutation> auts = graph_automorphisms(alg.graph());
    const Permutation tau = min_order_transversal(alg.graph());

    std::vector<SolveOutcome> outs(auts.size());
    parallel_for(auts.size(), opts.threads, [&](std::size_t i) { outs[i] = solve_monomial(alg, alg, auts[i], tau); });

    std::vector<MonomialMap> maps;
    std::vector<std::string> unsolved;
    bool partial = false;
    for (auto& o : outs) {
        if (o.status == SolveStatus::Indeterminate) {
            partial = true;
            unsolved.insert(unsolved.end(), o.unsolved.begin(), o.unsolved.end());
        }
        if (maps.size() + o.maps.size() > kMaxGroupOrder) throw CapExceeded("automorphism group above 10^6");
        std::move(o.maps.begin(), o.maps.end(), std::back_inserter(maps));
    }
    std::sort(unsolved.begin(), unsolved.end());
    unsolved.erase(std::unique(unsolved.begin(), unsolved.end()), unsolved.end());

    MonomialGroup group(alg.field(), n, std::move(maps), partial);
    if (!partial && !group.closed()) throw Error("automorphism_group: solution set is not closed");
    AutomorphismGroup out{std::move(group), partial, std::move(unsolved), std::move(auts), {}, 0};
    out.image = out.group.image();
    out.kernel_order = out.group.kernel().size();
    return out;
}

MapCheck check_map(const Matrix& a, const Matrix& b, const MonomialMap& m) {
    const std::size_t n = m.size();
    if (!a.is_square() || !b.is_square() || a.rows() != n || b.rows() != n)
        throw MismatchError("check_map: shape mismatch");
    if (a.field() != m.field() || b.field() != m.field()) throw MismatchError("check_map: field mismatch");
    const Matrix p = m.matrix();
    MapCheck c;
    c.bp2_eq_pa = b * p.entrywise_square() == p * a;
    c.b_pstarp_zero = n < 2 || (b * star_product(p)).is_zero();
    return c;
}

bool verify_map(const Matrix& a, const Matrix& b, const MonomialMap& m) { return check_map(a, b, m).ok(); }

IsomorphismResult isomorphism(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
    require_compatible(a, b, "isomorphism");
    const Permutation tau = min_order_transversal(a.graph());
    IsomorphismResult res;
    bool indeterminate = false;
    res.candidates = for_each_graph_isomorphism(a.graph(), b.graph(), [&](const Permutation& s) {
        SolveOutcome o = solve_monomial(a, b, s, tau);
        if (o.status == SolveStatus::Complete) {
            const MonomialMap& m = o.maps.front();
            res.certificate = Certificate{m, check_map(a.structure(), b.structure(), m)};
            return false;
        }
        if (o.status == SolveStatus::Indeterminate) {
            indeterminate = true;
            res.unsolved.insert(res.unsolved.end(), o.unsolved.begin(), o.unsolved.end());
        }
        return true;
    });
    if (res.certificate) {
        if (!res.certificate->checked.ok()) throw Error("isomorphism: certificate failed verification");
        res.status = IsoStatus::Isomorphic;
        res.unsolved.clear();
    } else {
        res.status = indeterminate ? IsoStatus::Indeterminate : IsoStatus::NonIsomorphic;
    }
    return res;
}

MonomialGroup brute_force_automorphisms(const EvolutionAlgebra& alg) {
    const Field& field = alg.field();
    const std::size_t n = alg.dimension();
    if (!field.is_prime_field() || field.characteristic() > 13 || n > 4)
        throw CapExceeded("brute_force_automorphisms: needs GF(p) with p <= 13 and n <= 4");
    const Matrix& A = alg.structure();
    const std::vector<Scalar> units = field.nonzero_elements();
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    std::vector<MonomialMap> found;
    do {
        std::vector<std::size_t> c(n, 0);
        for (;;) {
            Matrix g(field, n, n);
            for (std::size_t i = 0; i < n; ++i) g(perm[i], i) = units[c[i]];
            if (A * g.entrywise_square() == g * A) {
                std::vector<Scalar> d;
                for (std::size_t i = 0; i < n; ++i) d.push_back(units[c[i]]);
                found.emplace_back(Permutation(perm), std::move(d));
            }
            std::size_t i = 0;
            for (; i < n; ++i) {
                if (++c[i] < units.size()) break;
                c[i] = 0;
            }
            if (i == n) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return MonomialGroup(field, n, std::move(found));
}

GeneralAutomorphisms brute_force_general_automorphisms(const EvolutionAlgebra& alg) {
    const Field& field = alg.field();
    const std::size_t n = alg.dimension();
    if (!field.is_prime_field() || field.characteristic() > 3 || n > 2)
        throw CapExceeded("brute_force_general_automorphisms: needs GF(p) with p <= 3 and n <= 2");
    const std::uint64_t p = field.characteristic();
    const Matrix& A = alg.structure();
    GeneralAutomorphisms out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        Matrix g(field, n, n);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, c /= p) g(i, j) = field.from_residue(c % p);
        if (determinant(g).is_zero()) continue;
        if (!(A * g.entrywise_square() == g * A)) continue;
        if (n >= 2 && !(A * star_product(g)).is_zero()) continue;
        bool monomial = true;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t nz = 0;
            for (std::size_t i = 0; i < n; ++i) nz += g(i, j).is_zero() ? 0 : 1;
            if (nz != 1) monomial = false;
        }
        out.all_monomial = out.all_monomial && monomial;
        out.automorphisms.push_back(std::move(g));
    }
    return out;
}

}  // namespace evoalg
