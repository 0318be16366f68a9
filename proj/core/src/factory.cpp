#include "evoalg/factory.hpp"

#include <algorithm>

#include "evoalg/error.hpp"
#include "evoalg/io.hpp"

namespace evoalg {

namespace {

Scalar scalar_of(const Field& f, long long v) { return f.from_int(v); }

std::size_t parse_size(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        throw ParseError(std::string("invalid ") + what + ": '" + text + "'");
    }
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t p = s.find(sep, start);
        out.emplace_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

}  // namespace

EvolutionAlgebra complete_graph_algebra(std::size_t n, const Field& field) {
    if (n < 2) throw DomainError("complete_graph_algebra: n must be at least 2");
    if (field.characteristic() != 0 && (n - 1) % field.characteristic() == 0) {
        throw SingularError("complete_graph_algebra: characteristic divides n - 1");
    }
    Matrix a(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) a(i, j) = field.one();
    return EvolutionAlgebra(a);
}

EvolutionAlgebra two_param_algebra(std::size_t n, const Scalar& a, const Scalar& b) {
    if (n < 1) throw DomainError("two_param_algebra: n must be at least 1");
    if (a.field() != b.field()) throw MismatchError("two_param_algebra: field mismatch");
    const Field& f = a.field();
    if (a == b && n > 1) throw SingularError("two_param_algebra: a = b gives a singular matrix");
    if ((a + scalar_of(f, static_cast<long long>(n) - 1) * b).is_zero()) {
        throw SingularError("two_param_algebra: a = (1 - n) b gives a singular matrix");
    }
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? a : b;
    return EvolutionAlgebra(m);
}

EvolutionAlgebra cycle_algebra(std::size_t n, const Field& field, const std::optional<std::vector<Scalar>>& b) {
    if (n < 1) throw DomainError("cycle_algebra: n must be at least 1");
    std::vector<Scalar> w = b ? *b : std::vector<Scalar>(n, field.one());
    if (w.size() != n) throw MismatchError("cycle_algebra: b must have n entries");
    Matrix a(field, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (w[j].field() != field) throw MismatchError("cycle_algebra: b entry in the wrong field");
        if (w[j].is_zero()) throw DomainError("cycle_algebra: b entries must be nonzero");
        a((j + 1) % n, j) = w[j];
    }
    return EvolutionAlgebra(a);
}

FruchtLift frucht_lift(const std::vector<std::vector<int>>& adj, const Field& field, std::uint64_t min_shift) {
    if (field.characteristic() != 0) throw DomainError("frucht_lift: needs a field of characteristic 0");
    const std::size_t n = adj.size();
    if (n == 0) throw DomainError("frucht_lift: empty graph");
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].size() != n) throw ParseError("frucht_lift: adjacency matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (adj[i][j] != 0 && adj[i][j] != 1) throw DomainError("frucht_lift: adjacency entries must be 0 or 1");
            if (adj[i][j] != adj[j][i]) throw DomainError("frucht_lift: adjacency matrix is not symmetric");
        }
    }
    for (std::uint64_t m = min_shift; m <= min_shift + n; ++m) {
        Matrix a(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = scalar_of(field, adj[i][j] + (i == j ? static_cast<long long>(m) : 0));
        if (!determinant(a).is_zero()) return {EvolutionAlgebra(a), m};
    }
    throw Error("frucht_lift: no nonsingular shift found");  // impossible in characteristic 0
}

std::vector<Scalar> default_c_samples(const Field& field) {
    return {scalar_of(field, 2), scalar_of(field, 3), scalar_of(field, -1)};
}

std::vector<Representative> sn_representatives(std::size_t n, const Field& field,
                                               std::optional<std::vector<Scalar>> c_samples) {
    if (n < 1) throw DomainError("sn_representatives: n must be at least 1");
    const std::vector<Scalar> cs = c_samples ? *c_samples : default_c_samples(field);
    const std::uint64_t ch = field.characteristic();
    const std::size_t cube_roots = field.roots_of_unity(3).size();
    std::vector<Representative> out;
    auto add = [&](std::string label, std::optional<EvolutionAlgebra> alg, std::string reason = {}) {
        out.push_back({std::move(label), std::move(alg), std::move(reason)});
    };

    if (n == 1) {
        add("(1)", EvolutionAlgebra(Matrix::identity(field, 1)));
        return out;
    }

    // the I + cK family
    std::vector<Scalar> seen;
    for (const Scalar& c : cs) {
        const std::string label = "A(1,c) c=" + c.to_string();
        if (c.field() != field) throw MismatchError("sn_representatives: sample in the wrong field");
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) {
            add(label, std::nullopt, "duplicate sample in this field");
            continue;
        }
        seen.push_back(c);
        if (n == 3 && ch == 2) {
            add(label, std::nullopt, "family not classified in characteristic 2");
            continue;
        }
        if (c.is_one()) {
            add(label, std::nullopt, "c = 1 gives a singular matrix");
            continue;
        }
        if ((field.one() + scalar_of(field, static_cast<long long>(n) - 1) * c).is_zero()) {
            add(label, std::nullopt, "1 + (n-1)c = 0 gives a singular matrix");
            continue;
        }
        add(label, two_param_algebra(n, field.one(), c));
    }

    if (n == 2) {
        if (cube_roots == 1) add("K_2", complete_graph_algebra(2, field));
        else add("K_2", std::nullopt, "x^3 - 1 has more than one root in " + field.name());
    } else if (n == 3) {
        if (cube_roots == 3) {
            Matrix a = Matrix::from_ints(field, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
            add("K_2+(1)", EvolutionAlgebra(a));
        } else {
            add("K_2+(1)", std::nullopt, "x^3 - 1 does not have 3 distinct roots in " + field.name());
        }
        if (ch == 2) add("K_3", std::nullopt, "characteristic 2");
        else add("K_3", complete_graph_algebra(3, field));
    } else {
        if (ch != 0 && (n - 1) % ch == 0) add("K_" + std::to_string(n), std::nullopt, "characteristic divides n - 1");
        else add("K_" + std::to_string(n), complete_graph_algebra(n, field));
    }
    return out;
}

SolveOutcome cycle_normalizer(const std::vector<Scalar>& b) {
    const std::size_t n = b.size();
    if (n == 0) throw DomainError("cycle_normalizer: empty b");
    if (n > 62) throw CapExceeded("cycle_normalizer: n too large");
    const Field field = b.front().field();
    for (const auto& x : b) {
        if (x.field() != field) throw MismatchError("cycle_normalizer: field mismatch");
        if (x.is_zero()) throw DomainError("cycle_normalizer: b entries must be nonzero");
    }
    Scalar prod = field.one();
    for (std::size_t i = 0; i < n; ++i) prod *= b[i].pow(std::uint64_t{1} << (n - 1 - i));
    const KthRoots roots = field.kth_roots(prod.inverse(), (std::uint64_t{1} << n) - 1);
    SolveOutcome out;
    if (!roots.decided) {
        out.status = SolveStatus::Indeterminate;
        out.unsolved = {roots.equation};
        return out;
    }
    for (const Scalar& d1 : roots.roots) {
        std::vector<Scalar> d{d1};
        for (std::size_t i = 0; i + 1 < n; ++i) d.push_back(b[i] * d[i] * d[i]);
        out.maps.push_back(MonomialMap::diagonal(std::move(d)));
    }
    std::sort(out.maps.begin(), out.maps.end());
    out.status = out.maps.empty() ? SolveStatus::NoSolution : SolveStatus::Complete;
    return out;
}

FamilySpec FamilySpec::parse(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) {
        throw ParseError("family spec must look like <family>:<params>, got '" + std::string(text) + "'");
    }
    FamilySpec spec;
    spec.family = std::string(text.substr(0, colon));
    std::string_view rest = text.substr(colon + 1);
    if (spec.family == "frucht") {
        // the path may contain '=' but parameters come after the last comma
        const std::size_t comma = rest.rfind(',');
        if (comma != std::string_view::npos && rest.substr(comma + 1).find('=') != std::string_view::npos &&
            rest.substr(comma + 1).find('/') == std::string_view::npos) {
            spec.path = std::string(rest.substr(0, comma));
            rest = rest.substr(comma + 1);
        } else {
            spec.path = std::string(rest);
            rest = {};
        }
        if (spec.path.empty()) throw ParseError("frucht family needs a graph file");
    }
    if (!rest.empty()) {
        for (const auto& kv : split(rest, ',')) {
            const std::size_t eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw ParseError("bad family parameter '" + kv + "'");
            spec.params.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
        }
    }
    return spec;
}

std::optional<std::string> FamilySpec::get(std::string_view key) const {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    return std::nullopt;
}

BuiltFamily build_family(const FamilySpec& spec, const Field& field) {
    auto need = [&](const char* key) {
        auto v = spec.get(key);
        if (!v) throw ParseError("family '" + spec.family + "' needs parameter " + key);
        return *v;
    };
    auto check_keys = [&](std::initializer_list<std::string_view> allowed) {
        for (const auto& [k, v] : spec.params) {
            (void)v;
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
                throw ParseError("unknown parameter '" + k + "' for family " + spec.family);
        }
    };
    if (spec.family == "complete") {
        check_keys({"n"});
        const std::size_t n = parse_size(need("n"), "n");
        return {complete_graph_algebra(n, field), {{"family", "complete"}, {"n", std::to_string(n)}}};
    }
    if (spec.family == "twoparam") {
        check_keys({"n", "a", "b"});
        const std::size_t n = parse_size(need("n"), "n");
        const Scalar a = field.parse_scalar(need("a")), b = field.parse_scalar(need("b"));
        return {two_param_algebra(n, a, b),
                {{"family", "twoparam"}, {"n", std::to_string(n)}, {"a", a.to_string()}, {"b", b.to_string()}}};
    }
    if (spec.family == "cycle") {
        check_keys({"n", "b"});
        const std::size_t n = parse_size(need("n"), "n");
        std::optional<std::vector<Scalar>> b;
        if (auto text = spec.get("b")) {
            b.emplace();
            for (const auto& s : split(*text, ';')) b->push_back(field.parse_scalar(s));
        }
        return {cycle_algebra(n, field, b), {{"family", "cycle"}, {"n", std::to_string(n)}}};
    }
    if (spec.family == "frucht") {
        check_keys({"shift"});
        const std::uint64_t min_shift = spec.get("shift") ? parse_size(*spec.get("shift"), "shift") : 0;
        const auto adj = graph_from_json(read_json_file(spec.path));
        FruchtLift lift = frucht_lift(adj, field, min_shift);
        return {std::move(lift.algebra), {{"family", "frucht"}, {"shift", std::to_string(lift.shift)}}};
    }
    if (spec.family == "sn") {
        check_keys({"n", "index", "c"});
        const std::size_t n = parse_size(need("n"), "n");
        const std::size_t index = spec.get("index") ? parse_size(*spec.get("index"), "index") : 0;
        std::optional<std::vector<Scalar>> cs;
        if (auto text = spec.get("c")) {
            cs.emplace();
            for (const auto& s : split(*text, ';')) cs->push_back(field.parse_scalar(s));
        }
        auto reps = sn_representatives(n, field, cs);
        if (index >= reps.size()) throw DomainError("sn: index out of range");
        auto& rep = reps[index];
        if (!rep.algebra) throw DomainError("sn: item '" + rep.label + "' omitted: " + rep.omitted_reason);
        return {std::move(*rep.algebra), {{"family", "sn"}, {"n", std::to_string(n)}, {"label", rep.label}}};
    }
    throw ParseError("unknown family '" + spec.family + "'");
}

}  // namespace evoalg
