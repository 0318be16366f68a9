// evoalg: automorphism groups, diagonal subgroups and isomorphism
// certificates of idempotent evolution algebras.
//
// JSON reports go to standard output (or --out); human-readable tables and
// timings go to standard error.
//
// Exit codes: 0 success, 1 parse/input error, 2 singular input,
// 3 indeterminate, 4 negative decision (non-isomorphic, failed verification),
// 5 cap exceeded.

#include <CLI11.hpp>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "evoalg/census.hpp"
#include "evoalg/error.hpp"
#include "evoalg/factory.hpp"
#include "evoalg/io.hpp"
#include "evoalg/solver.hpp"
#include "evoalg/suites.hpp"

namespace {

using namespace evoalg;

enum Exit : int { kOk = 0, kParse = 1, kSingular = 2, kIndeterminate = 3, kNegative = 4, kCap = 5 };

struct Options {
    std::string field;
    std::string in;
    std::string b;
    std::string out;
    std::string suite = "all";
    std::size_t n = 2;
    std::string mode = "exhaustive";
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string family;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::optional<Field> field_flag(const Options& o) {
    if (o.field.empty()) return std::nullopt;
    return Field(FieldDescriptor::parse(o.field));
}

EvolutionAlgebra load_algebra(const std::string& path, const Options& o) {
    if (path.empty()) throw ParseError("missing input matrix file");
    return EvolutionAlgebra(matrix_from_json(read_json_file(path), field_flag(o)));
}

void emit(const Json& j, const Options& o) {
    const std::string text = dump(j);
    if (o.out.empty()) std::cout << text;
    else write_text_file(o.out, text);
}

Json unsolved_json(const std::vector<std::string>& eqs) {
    Json a = Json::array();
    for (const auto& e : eqs) a.push_back(e);
    return a;
}

int cmd_aut(const Options& o) {
    const EvolutionAlgebra alg = load_algebra(o.in, o);
    alg.require_idempotent("aut");
    Stopwatch sw;
    const AutomorphismGroup g = automorphism_group(alg, {o.threads});
    const DiagonalSubgroup d = diagonal_subgroup(alg);
    Json j = group_to_json(g.group);
    Json report{{"field", alg.field().name()},
                {"n", alg.dimension()},
                {"status", g.partial ? "indeterminate" : "complete"}};
    const Json& names = j["recognized"];
    report["name"] = names.empty() ? Json(nullptr) : names.front();
    for (auto it = j.begin(); it != j.end(); ++it) report[it.key()] = it.value();
    report["diagonal_subgroup_order"] = d.lattice.order;
    report["t_A"] = d.t_a;
    report["graph_automorphism_order"] = g.graph_automorphisms.size();
    report["unsolved"] = unsolved_json(g.unsolved);
    emit(report, o);

    std::cerr << "field            " << alg.field().name() << "\n"
              << "|Aut(E)|         " << g.group.order() << (g.partial ? " (partial)" : "") << "\n"
              << "name             " << (names.empty() ? "-" : names.front().get<std::string>()) << "\n"
              << "|D|              " << d.lattice.order << "\n"
              << "t_A              " << d.t_a << "\n"
              << "|Aut(Gamma_A)|   " << g.graph_automorphisms.size() << "\n"
              << "time             " << std::fixed << std::setprecision(3) << sw.seconds() << " s\n";
    return g.partial ? kIndeterminate : kOk;
}

int cmd_diag(const Options& o) {
    const EvolutionAlgebra alg = load_algebra(o.in, o);
    const DiagonalSubgroup d = diagonal_subgroup(alg);
    Json gens = Json::array();
    for (const auto& g : d.generator_maps) gens.push_back(map_to_json(g));
    Json exps = Json::array();
    for (const auto& v : d.lattice.generators) exps.push_back(v);
    Json report{{"field", alg.field().name()},
                {"n", alg.dimension()},
                {"modulus", d.lattice.modulus},
                {"root_of_unity_generator", d.lattice.generator.to_string()},
                {"order", d.lattice.order},
                {"factor_orders", d.lattice.factor_orders},
                {"exponent_generators", std::move(exps)},
                {"generators", std::move(gens)},
                {"t_A", d.t_a},
                {"conductor_sufficient", d.conductor_sufficient}};
    if (d.materialized && d.elements.size() <= 10'000) {
        Json el = Json::array();
        for (const auto& x : d.elements) el.push_back(map_to_json(x));
        report["elements"] = std::move(el);
    }
    emit(report, o);
    std::cerr << "|D| = " << d.lattice.order << " over " << alg.field().name() << ", t_A = " << d.t_a
              << (d.conductor_sufficient ? "" : " (field lacks the 2^t_A - 1 roots of unity)") << "\n";
    return kOk;
}

int cmd_graph_aut(const Options& o) {
    if (o.in.empty()) throw ParseError("missing --in");
    const Json j = read_json_file(o.in);
    Digraph g;
    std::optional<std::uint64_t> t_a;
    if (j.contains("adjacency")) {
        g = Digraph::from_adjacency(graph_from_json(j));
    } else {
        const Matrix m = matrix_from_json(j, field_flag(o));
        g = graph_of(m);
        try {
            t_a = min_transversal_order(m);
        } catch (const SingularError&) {
            // no transversal: t_A undefined
        }
    }
    const auto auts = graph_automorphisms(g);
    Json list = Json::array();
    for (const auto& s : auts) list.push_back(permutation_to_json(s));
    Json report{{"n", g.size()}, {"order", auts.size()}, {"automorphisms", std::move(list)}};
    if (t_a) report["t_A"] = *t_a;
    emit(report, o);
    std::cerr << "|Aut(Gamma)| = " << auts.size() << "\n";
    return kOk;
}

int cmd_iso(const Options& o) {
    const EvolutionAlgebra a = load_algebra(o.in, o);
    if (o.b.empty()) throw ParseError("missing --b");
    const EvolutionAlgebra b = load_algebra(o.b, o);
    Stopwatch sw;
    const IsomorphismResult r = isomorphism(a, b);
    Json report{{"field", a.field().name()}, {"n", a.dimension()}};
    switch (r.status) {
        case IsoStatus::Isomorphic: report["status"] = "isomorphic"; break;
        case IsoStatus::NonIsomorphic: report["status"] = "non-isomorphic"; break;
        case IsoStatus::Indeterminate: report["status"] = "indeterminate"; break;
    }
    report["candidates"] = r.candidates;
    report["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : Json(nullptr);
    report["unsolved"] = unsolved_json(r.unsolved);
    emit(report, o);
    std::cerr << report["status"].get<std::string>() << " after " << r.candidates << " pattern isomorphism(s)";
    if (r.certificate) std::cerr << "; map " << r.certificate->map.to_string();
    std::cerr << " (" << std::fixed << std::setprecision(3) << sw.seconds() << " s)\n";
    if (r.status == IsoStatus::Isomorphic) return kOk;
    return r.status == IsoStatus::NonIsomorphic ? kNegative : kIndeterminate;
}

int cmd_make(const Options& o) {
    if (o.family.empty()) throw ParseError("missing --family");
    const Field field = o.field.empty() ? Field() : Field(FieldDescriptor::parse(o.field));
    const BuiltFamily built = build_family(FamilySpec::parse(o.family), field);
    Json j = matrix_to_json(built.algebra.structure());
    Json meta = Json::object();
    for (const auto& [k, v] : built.meta) meta[k] = v;
    j["meta"] = std::move(meta);
    emit(j, o);
    std::cerr << "det = " << built.algebra.det().to_string() << "\n";
    return kOk;
}

int cmd_verify(const Options& o) {
    std::vector<std::string> names;
    if (o.suite == "all") {
        for (const auto& s : suite_catalog()) names.push_back(s.name);
    } else {
        names.push_back(o.suite);
    }
    Json suites = Json::array();
    bool all_ok = true;
    for (const auto& name : names) {
        Stopwatch sw;
        const SuiteResult r = run_suite(name, o.threads);
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            std::cerr << (c.passed ? "  PASS  " : "  FAIL  ") << c.name;
            if (!c.detail.empty()) std::cerr << "  [" << c.detail << "]";
            std::cerr << "\n";
        }
        std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.title << ") " << std::fixed
                  << std::setprecision(2) << sw.seconds() << " s\n";
        all_ok = all_ok && r.passed();
        suites.push_back(Json{{"suite", r.name}, {"title", r.title}, {"passed", r.passed()}, {"checks", std::move(checks)}});
    }
    emit(Json{{"passed", all_ok}, {"suites", std::move(suites)}}, o);
    return all_ok ? kOk : kNegative;
}

int cmd_census(const Options& o) {
    CensusOptions c;
    c.field = FieldDescriptor::parse(o.field.empty() ? "GF(2)" : o.field);
    c.n = o.n;
    c.mode = CensusMode::parse(o.mode);
    c.seed = o.seed;
    c.threads = o.threads;
    Stopwatch sw;
    const CensusReport r = run_census(c);
    emit(r.to_json(), o);
    std::cerr << "census " << r.field << " n=" << r.n << " " << r.mode << ": " << r.processed << " algebras, "
              << std::fixed << std::setprecision(3) << sw.seconds() << " s\n";
    for (const auto& [k, v] : r.aut_orders) std::cerr << "  |Aut| = " << std::setw(6) << k << "  x " << v << "\n";
    return r.partial ? kIndeterminate : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automorphism groups and isomorphisms of idempotent evolution algebras"};
    app.require_subcommand(1, 1);
    Options o;

    auto field_opt = [&](CLI::App* s) { s->add_option("--field", o.field, "Q, GF(p) or Q(zeta_m)"); };
    auto out_opt = [&](CLI::App* s) { s->add_option("--out", o.out, "write the JSON report here"); };
    auto threads_opt = [&](CLI::App* s) {
        s->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1U, 256U));
    };

    auto* aut = app.add_subcommand("aut", "automorphism group of E(A)");
    aut->add_option("--in", o.in, "matrix JSON")->required();
    field_opt(aut);
    out_opt(aut);
    threads_opt(aut);

    auto* diag = app.add_subcommand("diag", "diagonal automorphism subgroup of E(A)");
    diag->add_option("--in", o.in, "matrix JSON")->required();
    field_opt(diag);
    out_opt(diag);

    auto* gaut = app.add_subcommand("graph-aut", "automorphisms of Gamma_A or of a graph file");
    gaut->add_option("--in", o.in, "matrix or graph JSON")->required();
    field_opt(gaut);
    out_opt(gaut);

    auto* iso = app.add_subcommand("iso", "search for an isomorphism E(A) -> E(B)");
    iso->add_option("--in", o.in, "matrix JSON for A")->required();
    iso->add_option("--b", o.b, "matrix JSON for B")->required();
    field_opt(iso);
    out_opt(iso);

    auto* make = app.add_subcommand("make", "write the structure matrix of a family member");
    make->add_option("--family", o.family, "e.g. complete:n=4, twoparam:n=4,a=1,b=2, cycle:n=3,b=128;1;1")
        ->required();
    field_opt(make);
    out_opt(make);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", o.suite, "suite name or 'all'");
    out_opt(verify);
    threads_opt(verify);

    auto* census = app.add_subcommand("census", "histogram of group orders over GF(p)");
    field_opt(census);
    census->add_option("--n", o.n, "dimension")->check(CLI::Range(1, 12));
    census->add_option("--mode", o.mode, "exhaustive or random:<k>");
    census->add_option("--seed", o.seed, "seed for random mode");
    out_opt(census);
    threads_opt(census);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }

    try {
        if (app.got_subcommand(aut)) return cmd_aut(o);
        if (app.got_subcommand(diag)) return cmd_diag(o);
        if (app.got_subcommand(gaut)) return cmd_graph_aut(o);
        if (app.got_subcommand(iso)) return cmd_iso(o);
        if (app.got_subcommand(make)) return cmd_make(o);
        if (app.got_subcommand(verify)) return cmd_verify(o);
        if (app.got_subcommand(census)) return cmd_census(o);
    } catch (const SingularError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
    return kParse;
}
