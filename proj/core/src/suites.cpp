#include "evoalg/suites.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "evoalg/census.hpp"
#include "evoalg/error.hpp"
#include "evoalg/factory.hpp"
#include "evoalg/sampling.hpp"

namespace evoalg {

bool SuiteResult::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::uint64_t mersenne(std::uint64_t n) { return (std::uint64_t{1} << n) - 1; }

Field cyclotomic(std::uint64_t m) { return Field(FieldDescriptor::cyclotomic(m)); }
Field rationals() { return Field(FieldDescriptor::rationals()); }
Field prime(std::uint64_t p) { return Field(FieldDescriptor::prime_field(p)); }

/// Graph automorphisms counted over all of S_n, independent of the pruned
/// backtracking search.
std::uint64_t brute_graph_aut_count(const std::vector<std::vector<int>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) ok = adj[i][j] == adj[s[i]][s[j]];
        count += ok ? 1 : 0;
    } while (std::next_permutation(s.begin(), s.end()));
    return count;
}

std::vector<std::vector<int>> pattern_of(const Matrix& a) {
    std::vector<std::vector<int>> adj(a.rows(), std::vector<int>(a.cols(), 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) adj[i][j] = a(i, j).is_zero() ? 0 : 1;
    return adj;
}

bool is_perfect_power(const mpz_class& v, unsigned long k) {
    mpz_class r;
    return mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) != 0;
}

class Recorder {
public:
    explicit Recorder(SuiteResult& r) : r_(r) {}

    void check(bool ok, std::string name, std::string detail = {}) {
        r_.checks.push_back({std::move(name), ok, std::move(detail)});
    }

    /// Runs `body` and turns library exceptions into a failed check.
    template <class F>
    void guarded(const std::string& name, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, name, std::string("exception: ") + e.what());
        }
    }

private:
    SuiteResult& r_;
};

std::string join_counts(std::uint64_t ok, std::uint64_t total) {
    return std::to_string(ok) + "/" + std::to_string(total);
}

// |Aut(E(K_n))| over Q and Q(zeta_3), and the diagonal part for n = 2.
void complete_graph_suite(Recorder& rec, unsigned threads) {
    const Field q = rationals();
    for (std::uint64_t n = 3; n <= 5; ++n) {
        rec.guarded("K_" + std::to_string(n), [&] {
            const auto g = automorphism_group(complete_graph_algebra(n, q), {threads});
            rec.check(!g.partial && g.group.order() == factorial(n), "|Aut(E(K_" + std::to_string(n) + "))| over Q",
                      "order " + std::to_string(g.group.order()) + ", expected " + std::to_string(factorial(n)));
            rec.check(recognize(g.group, GroupTarget::symmetric(n)).matched,
                      "Aut(E(K_" + std::to_string(n) + ")) recognized as S_" + std::to_string(n));
        });
    }
    rec.guarded("K_2 over Q", [&] {
        const auto g = automorphism_group(complete_graph_algebra(2, q), {threads});
        rec.check(!g.partial && g.group.order() == 2, "|Aut(E(K_2))| over Q",
                  "order " + std::to_string(g.group.order()) + ", expected 2");
    });
    const Field z3 = cyclotomic(3);
    rec.guarded("K_2 over Q(zeta_3)", [&] {
        const EvolutionAlgebra k2 = complete_graph_algebra(2, z3);
        const auto g = automorphism_group(k2, {threads});
        rec.check(!g.partial && g.group.order() == 6, "|Aut(E(K_2))| over Q(zeta_3)",
                  "order " + std::to_string(g.group.order()) + ", expected 6");
        const Recognition r = recognize(g.group, GroupTarget::symmetric(3));
        rec.check(r.matched, "Aut(E(K_2)) over Q(zeta_3) recognized as S_3", r.detail);

        const DiagonalSubgroup d = diagonal_subgroup(k2);
        const Scalar z = z3.zeta();
        const MonomialMap xi = MonomialMap::diagonal({z, z * z});
        const MonomialGroup cyc = close_generators(z3, 2, {xi});
        rec.check(d.lattice.order == 3 && d.materialized && d.elements == cyc.elements(),
                  "D(E(K_2)) over Q(zeta_3) is generated by diag(z, z^2)",
                  "|D| = " + std::to_string(d.lattice.order) + ", <diag(z,z^2)> has order " +
                      std::to_string(cyc.order()));
        rec.check(recognize(cyc, GroupTarget::cyclic(3)).matched, "D(E(K_2)) is cyclic of order 3");
    });
    for (std::uint64_t n = 2; n <= 8; ++n) {
        rec.guarded("det K_n", [&] {
            const Scalar det = complete_graph_algebra(n, q).det();
            const long long expect = (n % 2 == 1 ? 1 : -1) * static_cast<long long>(n - 1);
            rec.check(det == q.from_int(expect), "det(K_" + std::to_string(n) + ") = (-1)^(n-1)(n-1)",
                      det.to_string());
        });
    }
}

struct DiagonalStats {
    std::uint64_t total = 0, odd_order = 0, normal_embedding = 0, complete = 0;
    std::string first_failure;
};

void diagonal_properties(const EvolutionAlgebra& alg, DiagonalStats& st, unsigned threads) {
    ++st.total;
    auto fail = [&](const std::string& why) {
        if (st.first_failure.empty()) st.first_failure = why + " for A = " + alg.structure().to_string();
    };
    const auto g = automorphism_group(alg, {threads});
    if (g.partial) {
        fail("indeterminate solve");
        return;
    }
    ++st.complete;
    const DiagonalSubgroup d = diagonal_subgroup(alg);
    const std::uint64_t bound = mersenne(d.t_a);
    bool odd = d.materialized && d.elements.size() == d.lattice.order;
    for (const auto& x : d.elements) {
        const std::uint64_t k = element_order(x);
        if (k % 2 == 0 || bound % k != 0) odd = false;
    }
    if (odd) ++st.odd_order;
    else fail("diagonal element of even order or not dividing 2^t_A - 1");
    const QuotientReport q = quotient_embedding_check(g.group, alg);
    if (q.ok()) ++st.normal_embedding;
    else fail("kernel/normality/embedding check failed");
}

// Diagonal elements have odd order dividing 2^t_A - 1, D is normal and the
// sigma-image sits inside Aut(Gamma_A).
void diagonal_suite(Recorder& rec, unsigned threads) {
    DiagonalStats st;
    Rng rng(0x5eed22);
    const std::uint64_t primes[] = {3, 5, 7};
    rec.guarded("GF(p) samples", [&] {
        for (int i = 0; i < 200; ++i) {
            const Field f = prime(primes[i % 3]);
            const std::size_t n = 2 + static_cast<std::size_t>((i / 3) % 2);
            diagonal_properties(random_idempotent([&] { return random_prime_field_matrix(f, n, rng); }), st, threads);
        }
    });
    rec.check(st.total == 200 && st.complete == 200, "200 GF(3)/GF(5)/GF(7) samples solved completely",
              join_counts(st.complete, 200));
    rec.check(st.odd_order == 200, "GF(p): diagonal elements have odd order dividing 2^t_A - 1",
              join_counts(st.odd_order, 200) + (st.first_failure.empty() ? "" : "; " + st.first_failure));
    rec.check(st.normal_embedding == 200, "GF(p): D = ker(phi) is normal and G/D embeds in Aut(Gamma_A)",
              join_counts(st.normal_embedding, 200));

    DiagonalStats cs;
    const Field z7 = cyclotomic(7);
    rec.guarded("Q(zeta_7) samples", [&] {
        for (int i = 0; i < 50; ++i) {
            diagonal_properties(random_idempotent([&] { return random_cyclotomic_monomial_matrix(z7, 3, rng); }), cs,
                                threads);
        }
    });
    rec.check(cs.total == 50 && cs.complete == 50, "50 Q(zeta_7) samples solved completely",
              join_counts(cs.complete, 50) + (cs.first_failure.empty() ? "" : "; " + cs.first_failure));
    rec.check(cs.odd_order == 50, "Q(zeta_7): diagonal elements have odd order dividing 2^t_A - 1",
              join_counts(cs.odd_order, 50));
    rec.check(cs.normal_embedding == 50, "Q(zeta_7): D = ker(phi) is normal and G/D embeds in Aut(Gamma_A)",
              join_counts(cs.normal_embedding, 50));
}

// |Aut(E)| = |D| |Aut(Gamma)| for nonsingular 0/1 matrices.
void zero_one_suite(Recorder& rec, unsigned threads) {
    const Field q = rationals();
    Rng rng(0x5eed23);
    std::uint64_t ok = 0;
    std::string failure;
    rec.guarded("0/1 samples", [&] {
        for (int i = 0; i < 30; ++i) {
            const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
            const EvolutionAlgebra alg = random_idempotent([&] { return random_zero_one_matrix(q, n, rng); });
            const auto g = automorphism_group(alg, {threads});
            const std::uint64_t graph = brute_graph_aut_count(pattern_of(alg.structure()));
            const std::uint64_t d = diagonal_subgroup(alg).lattice.order;
            if (!g.partial && g.group.order() == d * graph && g.image.size() == graph) ++ok;
            else if (failure.empty())
                failure = "|Aut| = " + std::to_string(g.group.order()) + ", |D| = " + std::to_string(d) +
                          ", |Aut(Gamma)| = " + std::to_string(graph) + " for " + alg.structure().to_string();
        }
    });
    rec.check(ok == 30, "30 random nonsingular 0/1 matrices: |Aut(E)| = |D| |Aut(Gamma)| and phi onto",
              join_counts(ok, 30) + (failure.empty() ? "" : "; " + failure));
}

// automorphism_group agrees with exhaustive monomial enumeration.
void oracle_suite(Recorder& rec, unsigned threads) {
    Rng rng(0x5eed04);
    const std::uint64_t primes[] = {3, 5};
    std::uint64_t ok = 0;
    std::string failure;
    rec.guarded("oracle samples", [&] {
        for (int i = 0; i < 200; ++i) {
            const Field f = prime(primes[i % 2]);
            const std::size_t n = 2 + static_cast<std::size_t>((i / 2) % 2);
            const EvolutionAlgebra alg = random_idempotent([&] { return random_prime_field_matrix(f, n, rng); });
            const auto g = automorphism_group(alg, {threads});
            const MonomialGroup brute = brute_force_automorphisms(alg);
            if (!g.partial && g.group.elements() == brute.elements()) ++ok;
            else if (failure.empty())
                failure = "solver " + std::to_string(g.group.order()) + " vs brute force " +
                          std::to_string(brute.order()) + " for " + alg.structure().to_string();
        }
    });
    rec.check(ok == 200, "200 random GF(3)/GF(5) algebras, n in {2,3}: element-for-element match",
              join_counts(ok, 200) + (failure.empty() ? "" : "; " + failure));

    // every automorphism is monomial: all invertible matrices, n <= 2, p <= 3
    std::uint64_t checked = 0, agree = 0;
    rec.guarded("general matrices", [&] {
        for (std::uint64_t p : {2, 3}) {
            const Field f = prime(p);
            for (std::size_t n = 1; n <= 2; ++n) {
                std::uint64_t total = 1;
                for (std::size_t i = 0; i < n * n; ++i) total *= p;
                for (std::uint64_t code = 0; code < total; ++code) {
                    Matrix m(f, n, n);
                    std::uint64_t c = code;
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j, c /= p) m(i, j) = f.from_residue(c % p);
                    const EvolutionAlgebra alg(m);
                    if (!alg.is_idempotent()) continue;
                    ++checked;
                    const GeneralAutomorphisms all = brute_force_general_automorphisms(alg);
                    const auto g = automorphism_group(alg);
                    std::vector<Matrix> mono;
                    for (const auto& x : g.group.elements()) mono.push_back(x.matrix());
                    bool same = all.all_monomial && all.automorphisms.size() == mono.size();
                    for (const auto& x : all.automorphisms)
                        same = same && std::find(mono.begin(), mono.end(), x) != mono.end();
                    agree += same ? 1 : 0;
                }
            }
        }
    });
    rec.check(checked > 0 && agree == checked,
              "GF(2)/GF(3), n <= 2: every automorphism among all invertible matrices is monomial",
              join_counts(agree, checked));
}

// Graph -> algebra lift keeps the automorphism group, D trivial.
void frucht_suite(Recorder& rec, unsigned threads) {
    struct Case {
        std::string name;
        std::vector<std::vector<int>> adj;
        std::uint64_t expected;
    };
    std::vector<Case> cases;
    {
        std::vector<std::vector<int>> c5(5, std::vector<int>(5, 0));
        for (int i = 0; i < 5; ++i) c5[i][(i + 1) % 5] = c5[(i + 1) % 5][i] = 1;
        std::vector<std::vector<int>> p4(4, std::vector<int>(4, 0));
        for (int i = 0; i + 1 < 4; ++i) p4[i][i + 1] = p4[i + 1][i] = 1;
        std::vector<std::vector<int>> k4(4, std::vector<int>(4, 1));
        for (int i = 0; i < 4; ++i) k4[i][i] = 0;
        cases = {{"C_5", c5, 10}, {"P_4", p4, 2}, {"K_4", k4, 24}};
    }
    const Field q = rationals();
    const Field z3 = cyclotomic(3);
    for (const auto& c : cases) {
        const std::uint64_t graph = brute_graph_aut_count(c.adj);
        rec.check(graph == c.expected, c.name + ": brute-force |Aut(Gamma)|",
                  std::to_string(graph) + ", expected " + std::to_string(c.expected));
        for (std::uint64_t min_shift : {0, 1}) {
            const std::string tag = c.name + (min_shift ? " (shift >= 1)" : " (smallest shift)");
            rec.guarded(tag, [&] {
                const FruchtLift lift = frucht_lift(c.adj, q, min_shift);
                const auto g = automorphism_group(lift.algebra, {threads});
                const DiagonalSubgroup d = diagonal_subgroup(lift.algebra);
                rec.check(lift.algebra.is_idempotent() && !g.partial && g.group.order() == graph &&
                              g.graph_automorphisms.size() == graph,
                          tag + ": idempotent with |Aut(E)| = |Aut(Gamma)|",
                          "m = " + std::to_string(lift.shift) + ", |Aut(E)| = " + std::to_string(g.group.order()));
                rec.check(d.lattice.order == 1 && g.kernel_order == 1, tag + ": D trivial over Q");
                if (min_shift > 0) {
                    // nonzero diagonal: t_A = 1, so D stays trivial over larger fields too
                    const FruchtLift wide = frucht_lift(c.adj, z3, min_shift);
                    const auto gz = automorphism_group(wide.algebra, {threads});
                    rec.check(!gz.partial && gz.group.order() == graph && gz.kernel_order == 1,
                              tag + ": same group and trivial D over Q(zeta_3)");
                }
            });
        }
    }
}

// Non-isomorphism of the S_n classes, scaling certificates, Aut = S_n.
void sn_suite(Recorder& rec, unsigned threads) {
    const Field q = rationals();
    const std::vector<long long> samples = {2, 3, -1};
    for (std::size_t n = 2; n <= 5; ++n) {
        const std::string tag = "n=" + std::to_string(n);
        rec.guarded(tag, [&] {
            auto admissible = [&](const Scalar& a, const Scalar& b) {
                return !(a == b) && !(a + q.from_int(static_cast<long long>(n) - 1) * b).is_zero();
            };
            std::vector<Scalar> cs;
            for (long long c : samples)
                if (admissible(q.one(), q.from_int(c))) cs.push_back(q.from_int(c));

            std::uint64_t pairs = 0, non_iso = 0;
            for (std::size_t i = 0; i < cs.size(); ++i) {
                for (std::size_t j = 0; j < cs.size(); ++j) {
                    if (i == j) continue;
                    ++pairs;
                    const auto r = isomorphism(two_param_algebra(n, q.one(), cs[i]), two_param_algebra(n, q.one(), cs[j]));
                    non_iso += r.status == IsoStatus::NonIsomorphic ? 1 : 0;
                }
            }
            rec.check(non_iso == pairs, tag + ": E(1,c) and E(1,b) non-isomorphic for c != b",
                      join_counts(non_iso, pairs));

            std::uint64_t k_non_iso = 0;
            const EvolutionAlgebra kn = two_param_algebra(n, q.zero(), q.one());
            for (const auto& c : cs) {
                k_non_iso += isomorphism(kn, two_param_algebra(n, q.one(), c)).status == IsoStatus::NonIsomorphic;
            }
            rec.check(k_non_iso == cs.size(), tag + ": E(0,1) not isomorphic to any E(1,c)",
                      join_counts(k_non_iso, cs.size()));

            std::uint64_t scaled = 0, scaled_total = 0;
            for (long long av : samples) {
                for (long long bv : samples) {
                    const Scalar a = q.from_int(av), b = q.from_int(bv);
                    if (!admissible(a, b)) continue;
                    ++scaled_total;
                    const auto r = isomorphism(two_param_algebra(n, a, b), two_param_algebra(n, q.one(), b / a));
                    bool good = r.status == IsoStatus::Isomorphic && r.certificate && r.certificate->checked.ok();
                    if (good) {
                        for (const auto& d : r.certificate->map.scales()) good = good && d == a;
                    }
                    scaled += good ? 1 : 0;
                }
            }
            rec.check(scaled == scaled_total && scaled_total > 0,
                      tag + ": E(a,b) isomorphic to E(1,b/a) with certificate d_i = a",
                      join_counts(scaled, scaled_total));

            const auto reps = sn_representatives(n, q);
            std::vector<EvolutionAlgebra> present;
            std::uint64_t sym = 0;
            for (const auto& r : reps) {
                if (!r.algebra) continue;
                present.push_back(*r.algebra);
                const auto g = automorphism_group(*r.algebra, {threads});
                sym += !g.partial && g.group.order() == factorial(n);
            }
            rec.check(!present.empty() && sym == present.size(), tag + ": every representative has |Aut| = n!",
                      join_counts(sym, present.size()));
            std::uint64_t rep_pairs = 0, rep_non_iso = 0;
            for (std::size_t i = 0; i < present.size(); ++i)
                for (std::size_t j = i + 1; j < present.size(); ++j) {
                    ++rep_pairs;
                    rep_non_iso += isomorphism(present[i], present[j]).status == IsoStatus::NonIsomorphic;
                }
            rec.check(rep_non_iso == rep_pairs, tag + ": representatives pairwise non-isomorphic",
                      join_counts(rep_non_iso, rep_pairs));
        });
    }
}

// Cycle algebras over Q(zeta_{2^n - 1}): maximal D, C_{2^n-1} ⋊ C_n,
// normalization of random weights, and the order bound for several cycles.
void cycle_suite(Recorder& rec, unsigned threads) {
    Rng rng(0x5eed41);
    for (std::uint64_t n = 2; n <= 4; ++n) {
        const std::uint64_t m = mersenne(n);
        const Field f = cyclotomic(m);
        const std::string tag = "n=" + std::to_string(n) + " over " + f.name();
        rec.guarded(tag, [&] {
            const EvolutionAlgebra alg = cycle_algebra(n, f);
            const DiagonalSubgroup d = diagonal_subgroup(alg);
            rec.check(d.lattice.order == m, tag + ": |D(E(P_s))| = 2^n - 1", std::to_string(d.lattice.order));
            const auto g = automorphism_group(alg, {threads});
            rec.check(!g.partial && g.group.order() == n * m, tag + ": |Aut| = n (2^n - 1)",
                      std::to_string(g.group.order()));
            const Recognition r = recognize(g.group, GroupTarget::semidirect(m, n));
            rec.check(r.matched, tag + ": recognized as C_" + std::to_string(m) + "⋊C_" + std::to_string(n),
                      r.detail);

            // random nonzero rational weights
            const EvolutionAlgebra ones = cycle_algebra(n, f);
            std::uint64_t iso = 0, certified = 0, oracle_agree = 0;
            std::string failure;
            for (int t = 0; t < 10; ++t) {
                std::vector<Scalar> b;
                mpq_class prod = 1;
                for (std::uint64_t i = 0; i < n; ++i) {
                    b.push_back(random_nonzero_rational(f, rng));
                    mpq_class w = *b.back().as_rational();
                    for (std::uint64_t e = 0; e < n - 1 - i; ++e) w *= w;
                    prod *= w;
                }
                const auto res = isomorphism(cycle_algebra(n, f, b), ones);
                const bool is_iso = res.status == IsoStatus::Isomorphic;
                iso += is_iso;
                certified += is_iso && res.certificate->checked.ok();
                // exact oracle: solvable iff |prod| is a rational (2^n - 1)-th power,
                // valid here because gcd(phi(m), m) = 1 and m is odd
                mpq_class a = abs(prod);
                const bool expect = is_perfect_power(a.get_num(), m) && is_perfect_power(a.get_den(), m);
                const bool decided = res.status != IsoStatus::Indeterminate;
                oracle_agree += decided && is_iso == expect;
                if (!is_iso && failure.empty()) {
                    std::ostringstream os;
                    os << "b = (";
                    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << b[i].to_string();
                    os << ") is not isomorphic: prod b_i^(2^(n-i)) = " << prod.get_str() << " is not "
                       << "an m-th power (m = " << m << ") in " << f.name();
                    failure = os.str();
                }
            }
            rec.check(iso == 10 && certified == 10,
                      tag + ": 10 random rational b give E(P_s diag(b)) isomorphic to E(P_s)",
                      join_counts(iso, 10) + " isomorphic" + (failure.empty() ? "" : "; first failure: " + failure));
            rec.check(oracle_agree == 10, tag + ": isomorphism decisions match the exact power-residue oracle",
                      join_counts(oracle_agree, 10));
        });
    }

    // order bound: patterns made of >= 2 disjoint cycles
    std::uint64_t ok = 0;
    std::string failure;
    rec.guarded("order bound", [&] {
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
            const Field f = cyclotomic(mersenne(n));
            const Permutation pi = random_multi_cycle_permutation(n, rng);
            const EvolutionAlgebra alg(weighted_permutation_matrix(f, pi, rng));
            std::uint64_t bound = 1;
            for (const auto& c : pi.cycles()) bound *= mersenne(c.size());
            const DiagonalSubgroup d = diagonal_subgroup(alg);
            const auto g = automorphism_group(alg, {threads});
            const bool good = !g.partial && d.lattice.order == g.kernel_order && d.lattice.order <= bound &&
                              bound < mersenne(n);
            ok += good;
            if (!good && failure.empty())
                failure = "pi = " + pi.cycle_string() + ", |D| = " + std::to_string(d.lattice.order);
        }
    });
    rec.check(ok == 50, "50 random multi-cycle patterns: |D| <= prod(2^n_i - 1) < 2^n - 1",
              join_counts(ok, 50) + (failure.empty() ? "" : "; " + failure));
}

// The worked normalization b = (128, 1, 1) over Q.
void normalizer_example_suite(Recorder& rec, unsigned) {
    const Field q = rationals();
    rec.guarded("b = (128,1,1)", [&] {
        const std::vector<Scalar> b = {q.from_int(128), q.one(), q.one()};
        const MonomialMap expect =
            MonomialMap::diagonal({q.parse_scalar("1/16"), q.parse_scalar("1/2"), q.parse_scalar("1/4")});
        const SolveOutcome out = cycle_normalizer(b);
        const bool found = out.status == SolveStatus::Complete &&
                           std::find(out.maps.begin(), out.maps.end(), expect) != out.maps.end();
        rec.check(found, "cycle_normalizer((128,1,1)) contains d = (1/16, 1/2, 1/4)",
                  std::to_string(out.maps.size()) + " solution(s)");

        // B D^(2) = D P_s by explicit matrices
        const Matrix ps = Matrix::from_ints(q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
        const Matrix bm = Matrix::from_ints(q, {{0, 0, 1}, {128, 0, 0}, {0, 1, 0}});
        Matrix dm(q, 3, 3);
        for (std::size_t i = 0; i < 3; ++i) dm(i, i) = expect.scales()[i];
        rec.check(bm * dm.entrywise_square() == dm * ps, "B D^(2) = D P_s");

        const EvolutionAlgebra ea(ps), eb(bm);
        rec.check(cycle_algebra(3, q, b).structure() == bm, "cycle_algebra(3, (128,1,1)) = P_s diag(128,1,1)");
        const auto iso = isomorphism(ea, eb);
        rec.check(iso.status == IsoStatus::Isomorphic && iso.certificate && iso.certificate->map == expect &&
                      iso.certificate->checked.ok(),
                  "isomorphism E(P_s) -> E(B) certificate is d = (1/16, 1/2, 1/4)");
        rec.check(transport_structure(ps, expect) == bm, "transport of P_s along d gives B");
    });
}

// Census output does not depend on the thread count.
void determinism_suite(Recorder& rec, unsigned) {
    rec.guarded("census", [&] {
        CensusOptions o;
        o.field = FieldDescriptor::prime_field(3);
        o.n = 2;
        o.mode = CensusMode::parse("exhaustive");
        o.threads = 1;
        const CensusReport one = run_census(o);
        o.threads = 8;
        const CensusReport eight = run_census(o);
        const std::string a = dump(one.to_json()), b = dump(eight.to_json());
        rec.check(a == b, "GF(3), n=2 exhaustive census: identical bytes at 1 and 8 threads",
                  std::to_string(a.size()) + " bytes");
        std::uint64_t aut_sum = 0, diag_sum = 0;
        for (const auto& [k, v] : one.aut_orders) aut_sum += v;
        for (const auto& [k, v] : one.diagonal_orders) diag_sum += v;
        rec.check(one.candidates == 81 && one.processed + one.singular == 81 && aut_sum == one.processed &&
                      diag_sum == one.processed,
                  "census histograms sum to the number of algebras processed",
                  std::to_string(one.processed) + " nonsingular of " + std::to_string(one.candidates));
        rec.check(one.even_diagonal == 0 && one.partial == 0, "every censused algebra has |D| odd");
    });
}

using SuiteFn = void (*)(Recorder&, unsigned);

struct Entry {
    SuiteInfo info;
    SuiteFn fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r = {
        {{"example31", "complete-graph algebras K_n"}, complete_graph_suite},
        {{"thm22", "diagonal subgroup: odd order, normality, quotient embedding"}, diagonal_suite},
        {{"thm23", "nonsingular 0/1 matrices: |Aut(E)| = |D| |Aut(Gamma)|"}, zero_one_suite},
        {{"oracle", "solver versus brute-force automorphism enumeration"}, oracle_suite},
        {{"thm31", "graph lifts keep the automorphism group"}, frucht_suite},
        {{"thm32", "algebras with automorphism group S_n"}, sn_suite},
        {{"thm41", "cycle algebras and maximal diagonal subgroups"}, cycle_suite},
        {{"eq42", "normalizing the cycle algebra with b = (128, 1, 1)"}, normalizer_example_suite},
        {{"determinism", "census reports independent of thread count"}, determinism_suite},
    };
    return r;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> cat = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return cat;
}

SuiteResult run_suite(const std::string& name, unsigned threads) {
    for (const auto& e : registry()) {
        if (e.info.name != name) continue;
        SuiteResult r{e.info.name, e.info.title, {}};
        Recorder rec(r);
        e.fn(rec, threads);
        return r;
    }
    throw ParseError("unknown suite '" + name + "'");
}

}  // namespace evoalg
