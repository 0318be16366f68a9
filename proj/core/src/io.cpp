#include "evoalg/io.hpp"

#include <fstream>
#include <sstream>

#include "evoalg/error.hpp"

namespace evoalg {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::size_t as_size(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return Json{{"field", m.field().name()}, {"n", m.rows()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j, const std::optional<Field>& field) {
    try {
        Field f = field ? *field : Field(FieldDescriptor::parse(member(j, "field").get<std::string>()));
        const std::size_t n = as_size(member(j, "n"), "n");
        const Json& entries = member(j, "entries");
        if (!entries.is_array() || entries.size() != n) throw ParseError("entries must have n rows");
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const Json& row = entries[i];
            if (!row.is_array() || row.size() != n) throw ParseError("entries must be an n x n array");
            for (std::size_t k = 0; k < n; ++k) {
                const Json& e = row[k];
                if (e.is_string()) m(i, k) = f.parse_scalar(e.get<std::string>());
                else if (e.is_number_integer()) m(i, k) = f.from_int(e.get<long long>());
                else throw ParseError("matrix entries must be strings or integers");
            }
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

Json permutation_to_json(const Permutation& p) { return Json(p.one_based()); }

Permutation permutation_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("permutation must be an array");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("permutation entries must be integers");
        v.push_back(x.get<int>());
    }
    try {
        return Permutation::from_one_based(v);
    } catch (const DomainError& e) {
        throw ParseError(std::string("permutation: ") + e.what());
    }
}

Json map_to_json(const MonomialMap& m) {
    Json d = Json::array();
    for (const auto& s : m.scales()) d.push_back(s.to_string());
    return Json{{"sigma", permutation_to_json(m.sigma())}, {"d", std::move(d)}};
}

MonomialMap map_from_json(const Json& j, const Field& field) {
    Permutation s = permutation_from_json(member(j, "sigma"));
    const Json& d = member(j, "d");
    if (!d.is_array()) throw ParseError("d must be an array");
    std::vector<Scalar> scales;
    for (const auto& x : d) {
        if (!x.is_string()) throw ParseError("d entries must be strings");
        scales.push_back(field.parse_scalar(x.get<std::string>()));
    }
    return MonomialMap(std::move(s), std::move(scales));
}

Json certificate_to_json(const Certificate& c) {
    Json j = map_to_json(c.map);
    j["checked"] = Json{{"BP2_eq_PA", c.checked.bp2_eq_pa}, {"B_PstarP_zero", c.checked.b_pstarp_zero}};
    return j;
}

Json graph_to_json(const std::vector<std::vector<int>>& adjacency) {
    return Json{{"n", adjacency.size()}, {"adjacency", adjacency}};
}

std::vector<std::vector<int>> graph_from_json(const Json& j) {
    try {
        const std::size_t n = as_size(member(j, "n"), "n");
        const Json& adj = member(j, "adjacency");
        if (!adj.is_array() || adj.size() != n) throw ParseError("adjacency must have n rows");
        std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            if (!adj[i].is_array() || adj[i].size() != n) throw ParseError("adjacency must be n x n");
            for (std::size_t k = 0; k < n; ++k) {
                if (!adj[i][k].is_number_integer()) throw ParseError("adjacency entries must be 0 or 1");
                out[i][k] = adj[i][k].get<int>();
                if (out[i][k] != 0 && out[i][k] != 1) throw ParseError("adjacency entries must be 0 or 1");
            }
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
}

Json group_to_json(const MonomialGroup& g) {
    const GroupProfile p = profile(g);
    Json hist = Json::object();
    for (const auto& [k, v] : p.order_histogram) hist[std::to_string(k)] = v;
    Json names = Json::array();
    if (g.closed() && !g.partial() && g.order() <= kMaxRecognitionOrder) {
        for (const auto& r : recognize_all(g)) names.push_back(r.target);
    }
    Json gens = Json::array();
    for (const auto& s : g.generators()) gens.push_back(map_to_json(s));
    return Json{{"order", p.order},
                {"closed", g.closed()},
                {"partial", g.partial()},
                {"abelian", p.is_abelian},
                {"order_histogram", std::move(hist)},
                {"diagonal_order", p.diagonal_order},
                {"quotient_order", p.quotient_order},
                {"recognized", std::move(names)},
                {"generators", std::move(gens)}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
    if (!out) throw Error("write failed for '" + path + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace evoalg
