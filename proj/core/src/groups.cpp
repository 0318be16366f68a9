#include "evoalg/groups.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "evoalg/error.hpp"
#include "evoalg/solver.hpp"

namespace evoalg {

MonomialGroup::MonomialGroup(const Field& field, std::size_t n, std::vector<MonomialMap> elements, bool partial)
    : field_(field), n_(n), elements_(std::move(elements)), partial_(partial) {
    if (n_ == 0) throw MismatchError("monomial group of dimension 0");
    for (const auto& g : elements_) {
        if (g.size() != n_) throw MismatchError("monomial group: element dimension mismatch");
        if (g.field() != field_) throw MismatchError("monomial group: element field mismatch");
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.size() > kMaxGroupOrder) throw CapExceeded("monomial group exceeds 10^6 elements");
    check_closure();
}

std::optional<std::size_t> MonomialGroup::index_of(const MonomialMap& g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || !(*it == g)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

void MonomialGroup::check_closure() {
    closed_ = false;
    generators_.clear();
    const auto id = index_of(MonomialMap::identity(field_, n_));
    if (!id) return;
    const std::size_t order = elements_.size();
    std::vector<char> reached(order, 0);
    std::vector<std::size_t> members{*id};
    reached[*id] = 1;

    for (std::size_t cand = 0; cand < order; ++cand) {
        if (reached[cand]) continue;
        generators_.push_back(elements_[cand]);
        // Old members only need the new generator; new members need all.
        std::deque<std::size_t> fresh;
        const std::size_t old_count = members.size();
        auto visit = [&](std::size_t x, const MonomialMap& s) {
            const auto y = index_of(elements_[x] * s);
            if (!y) return false;
            if (!reached[*y]) {
                reached[*y] = 1;
                members.push_back(*y);
                fresh.push_back(*y);
            }
            return true;
        };
        for (std::size_t i = 0; i < old_count; ++i) {
            if (!visit(members[i], generators_.back())) return;
        }
        while (!fresh.empty()) {
            const std::size_t x = fresh.front();
            fresh.pop_front();
            for (const auto& s : generators_) {
                if (!visit(x, s)) return;
            }
        }
    }
    closed_ = true;
}

std::vector<MonomialMap> MonomialGroup::kernel() const {
    std::vector<MonomialMap> k;
    for (const auto& g : elements_) {
        if (g.is_diagonal()) k.push_back(g);
    }
    return k;
}

std::vector<Permutation> MonomialGroup::image() const {
    std::vector<Permutation> im;
    for (const auto& g : elements_) {
        if (im.empty() || !(im.back() == g.sigma())) im.push_back(g.sigma());
    }
    // elements are sorted by sigma first, so `im` is already sorted
    return im;
}

MonomialGroup close_generators(const Field& field, std::size_t n, const std::vector<MonomialMap>& gens,
                               std::size_t cap) {
    for (const auto& g : gens) {
        if (g.size() != n || g.field() != field) throw MismatchError("close_generators: generator mismatch");
    }
    std::set<MonomialMap> seen;
    std::deque<MonomialMap> queue;
    const MonomialMap id = MonomialMap::identity(field, n);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        const MonomialMap x = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            MonomialMap y = x * s;
            if (seen.count(y)) continue;
            if (seen.size() >= cap) throw CapExceeded("group closure exceeds the element cap");
            seen.insert(y);
            queue.push_back(std::move(y));
        }
    }
    return MonomialGroup(field, n, std::vector<MonomialMap>(seen.begin(), seen.end()));
}

std::uint64_t element_order(const MonomialMap& g, std::uint64_t cap) {
    MonomialMap x = g;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (x.is_identity()) return k;
        x = x * g;
    }
    throw CapExceeded("element order exceeds the cap");
}

namespace {

/// Index arithmetic over a closed group with memoized products.
class Table {
public:
    explicit Table(const MonomialGroup& g) : g_(g) {
        id_ = *g.index_of(MonomialMap::identity(g.field(), g.dimension()));
        orders_.assign(g.order(), 0);
    }

    std::size_t size() const { return g_.order(); }
    std::size_t id() const { return id_; }
    const MonomialMap& at(std::size_t i) const { return g_[i]; }

    std::size_t mul(std::size_t a, std::size_t b) {
        const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const std::size_t r = *g_.index_of(g_[a] * g_[b]);
        memo_.emplace(key, r);
        return r;
    }

    std::size_t inv(std::size_t a) { return *g_.index_of(inverse(g_[a])); }

    std::size_t pow(std::size_t a, std::uint64_t e) {
        std::size_t r = id_;
        for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    std::uint64_t order(std::size_t a) {
        if (orders_[a] == 0) {
            std::uint64_t k = 1;
            for (std::size_t x = a; x != id_; x = mul(x, a)) ++k;
            orders_[a] = k;
        }
        return orders_[a];
    }

    /// Powers a^0, a^1, ..., a^{ord-1}.
    std::vector<std::size_t> cyclic(std::size_t a) {
        std::vector<std::size_t> out{id_};
        for (std::size_t x = a; x != id_; x = mul(x, a)) out.push_back(x);
        return out;
    }

    /// Size of the subgroup generated by `gens`.
    std::size_t span(const std::vector<std::size_t>& gens) {
        std::vector<char> seen(size(), 0);
        std::vector<std::size_t> stack{id_};
        seen[id_] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t s : gens) {
                const std::size_t y = mul(x, s);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        return count;
    }

private:
    const MonomialGroup& g_;
    std::size_t id_ = 0;
    std::vector<std::uint64_t> orders_;
    std::unordered_map<std::uint64_t, std::size_t> memo_;
};

std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (f > kMaxGroupOrder) return kMaxGroupOrder + 1;
        f *= i;
    }
    return f;
}

Recognition recognize_cyclic(Table& t, std::uint64_t k, Recognition r) {
    if (t.size() != k) return r;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.order(i) == k) {
            r.matched = true;
            r.witnesses = {t.at(i)};
            r.detail = "element of order " + std::to_string(k);
            return r;
        }
    }
    return r;
}

Recognition recognize_symmetric(const MonomialGroup& g, Table& t, std::uint64_t m, Recognition r) {
    if (t.size() != factorial(m)) return r;
    if (m <= 1) {
        r.matched = true;
        r.detail = "trivial group";
        return r;
    }
    // sigma is injective and onto S_n
    if (g.dimension() == m && g.kernel().size() == 1 && g.image().size() == factorial(m)) {
        r.matched = true;
        r.detail = "phi is injective onto S_" + std::to_string(m);
        return r;
    }
    // Coxeter generators s_1..s_{m-1}: involutions with (s_i s_{i+1})^3 = 1 and
    // (s_i s_j)^2 = 1 for |i - j| > 1. A group of order m! generated by them
    // is a quotient of S_m of full order, hence S_m.
    std::vector<std::size_t> invs;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.order(i) == 2) invs.push_back(i);
    }
    std::vector<std::size_t> chain;
    std::function<bool()> extend = [&]() -> bool {
        if (chain.size() + 1 == m) return t.span(chain) == t.size();
        for (std::size_t c : invs) {
            if (!chain.empty()) {
                if (t.order(t.mul(chain.back(), c)) != 3) continue;
                bool commute = true;
                for (std::size_t j = 0; j + 1 < chain.size() && commute; ++j) {
                    commute = t.mul(chain[j], c) == t.mul(c, chain[j]);
                }
                if (!commute) continue;
            }
            chain.push_back(c);
            if (extend()) return true;
            chain.pop_back();
        }
        return false;
    };
    if (extend()) {
        r.matched = true;
        for (std::size_t c : chain) r.witnesses.push_back(t.at(c));
        r.detail = "Coxeter generators of S_" + std::to_string(m);
    }
    return r;
}

Recognition recognize_dihedral(Table& t, std::uint64_t k, Recognition r) {
    if (k == 0 || t.size() != 2 * k) return r;
    for (std::size_t a = 0; a < t.size(); ++a) {
        if (t.order(a) != k) continue;
        const auto rot = t.cyclic(a);
        std::vector<char> in_rot(t.size(), 0);
        for (std::size_t x : rot) in_rot[x] = 1;
        const std::size_t a_inv = t.inv(a);
        for (std::size_t s = 0; s < t.size(); ++s) {
            if (in_rot[s] || t.order(s) != 2) continue;
            if (t.mul(t.mul(s, a), s) != a_inv) continue;
            r.matched = true;
            r.witnesses = {t.at(a), t.at(s)};
            r.detail = "s r s^-1 = r^-1";
            return r;
        }
    }
    return r;
}

Recognition recognize_semidirect(const MonomialGroup& g, Table& t, std::uint64_t m, std::uint64_t k,
                                 Recognition r) {
    if (m == 0 || k == 0 || t.size() != m * k) return r;
    // candidates for the normal cyclic factor: diagonal elements first
    std::vector<std::size_t> cands;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.order(i) == m && t.at(i).is_diagonal()) cands.push_back(i);
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.order(i) == m && !t.at(i).is_diagonal()) cands.push_back(i);
    }
    std::vector<std::size_t> gens;
    for (const auto& s : g.generators()) gens.push_back(*g.index_of(s));

    for (std::size_t a : cands) {
        const auto powers = t.cyclic(a);
        std::vector<std::int64_t> log(t.size(), -1);
        for (std::size_t e = 0; e < powers.size(); ++e) log[powers[e]] = static_cast<std::int64_t>(e);
        bool normal = true;
        for (std::size_t s : gens) {
            if (log[t.mul(t.mul(s, a), t.inv(s))] < 0) {
                normal = false;
                break;
            }
        }
        if (!normal) continue;
        for (std::size_t h = 0; h < t.size(); ++h) {
            if (t.order(h) != k) continue;
            bool disjoint = true;
            for (std::size_t x = h; x != t.id(); x = t.mul(x, h)) {
                if (log[x] >= 0) {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) continue;
            const std::int64_t e = log[t.mul(t.mul(h, a), t.inv(h))];
            if (e < 0) continue;
            r.matched = true;
            r.witnesses = {t.at(a), t.at(h)};
            r.action_exponent = static_cast<std::uint64_t>(e);
            r.detail = "h a h^-1 = a^" + std::to_string(e);
            return r;
        }
    }
    return r;
}

}  // namespace

std::uint64_t GroupTarget::order() const {
    switch (kind) {
        case TargetKind::Trivial: return 1;
        case TargetKind::Cyclic: return m;
        case TargetKind::Symmetric: return factorial(m);
        case TargetKind::Dihedral: return 2 * m;
        case TargetKind::SemidirectCyclic: return m * n;
    }
    return 0;
}

std::string GroupTarget::name() const {
    switch (kind) {
        case TargetKind::Trivial: return "1";
        case TargetKind::Cyclic: return "C_" + std::to_string(m);
        case TargetKind::Symmetric: return "S_" + std::to_string(m);
        case TargetKind::Dihedral: return "D_" + std::to_string(m);
        case TargetKind::SemidirectCyclic: return "C_" + std::to_string(m) + "⋊C_" + std::to_string(n);
    }
    return "?";
}

Recognition recognize(const MonomialGroup& g, const GroupTarget& target) {
    if (!g.closed() || g.partial()) throw DomainError("recognize: group is not a closed, complete group");
    if (g.order() > kMaxRecognitionOrder) throw CapExceeded("recognize: group order above 10^5");
    Recognition r;
    r.target = target.name();
    Table t(g);
    switch (target.kind) {
        case TargetKind::Trivial:
            r.matched = g.order() == 1;
            if (r.matched) r.detail = "order 1";
            return r;
        case TargetKind::Cyclic: return recognize_cyclic(t, target.m, r);
        case TargetKind::Symmetric: return recognize_symmetric(g, t, target.m, r);
        case TargetKind::Dihedral: return recognize_dihedral(t, target.m, r);
        case TargetKind::SemidirectCyclic: return recognize_semidirect(g, t, target.m, target.n, r);
    }
    return r;
}

std::vector<Recognition> recognize_all(const MonomialGroup& g) {
    const std::uint64_t order = g.order();
    std::vector<GroupTarget> targets;
    if (order == 1) {
        targets.push_back(GroupTarget::trivial());
    } else {
        targets.push_back(GroupTarget::cyclic(order));
        for (std::uint64_t m = 3; factorial(m) <= order; ++m) {
            if (factorial(m) == order) targets.push_back(GroupTarget::symmetric(m));
        }
        if (order % 2 == 0 && order >= 6) targets.push_back(GroupTarget::dihedral(order / 2));
        const std::uint64_t d = g.kernel().size();
        if (d > 1 && d < order) targets.push_back(GroupTarget::semidirect(d, order / d));
    }
    std::vector<Recognition> out;
    for (const auto& t : targets) {
        Recognition r = recognize(g, t);
        if (r.matched) out.push_back(std::move(r));
    }
    return out;
}

GroupProfile profile(const MonomialGroup& g) {
    GroupProfile p;
    p.order = g.order();
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size() && p.is_abelian; ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!(gens[i] * gens[j] == gens[j] * gens[i])) {
                p.is_abelian = false;
                break;
            }
        }
    }
    if (g.closed()) {
        Table t(g);
        for (std::size_t i = 0; i < t.size(); ++i) ++p.order_histogram[t.order(i)];
    } else {
        for (const auto& x : g.elements()) ++p.order_histogram[element_order(x)];
    }
    p.diagonal_order = g.kernel().size();
    p.quotient_order = g.image().size();
    return p;
}

QuotientReport quotient_embedding_check(const MonomialGroup& g, const EvolutionAlgebra& alg) {
    QuotientReport rep;
    const DiagonalSubgroup d = diagonal_subgroup(alg);
    if (!d.materialized) throw CapExceeded("quotient_embedding_check: diagonal subgroup too large to list");
    rep.diagonal_order = d.lattice.order;
    const auto ker = g.kernel();
    rep.kernel_order = ker.size();
    rep.kernel_is_diagonal = ker == d.elements;

    // g D g^-1 within D for every g
    rep.diagonal_normal = true;
    for (const auto& x : g.elements()) {
        const MonomialMap xi = inverse(x);
        for (const auto& y : d.elements) {
            if (!std::binary_search(d.elements.begin(), d.elements.end(), x * y * xi)) {
                rep.diagonal_normal = false;
                break;
            }
        }
        if (!rep.diagonal_normal) break;
    }

    const auto auts = graph_automorphisms(alg.graph());
    rep.graph_automorphism_order = auts.size();
    const auto image = g.image();
    rep.image_order = image.size();
    rep.image_in_graph_automorphisms = std::includes(auts.begin(), auts.end(), image.begin(), image.end());
    rep.image_is_subgroup = !image.empty() && std::binary_search(image.begin(), image.end(),
                                                                 Permutation::identity(g.dimension()));
    for (const auto& s : image) {
        for (const auto& u : image) {
            if (!std::binary_search(image.begin(), image.end(), s * u)) rep.image_is_subgroup = false;
        }
    }
    rep.order_splits = rep.kernel_order * rep.image_order == g.order();
    return rep;
}

}  // namespace evoalg
