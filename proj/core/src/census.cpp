#include "evoalg/census.hpp"

#include "evoalg/error.hpp"
#include "evoalg/parallel.hpp"
#include "evoalg/sampling.hpp"

namespace evoalg {

CensusMode CensusMode::parse(std::string_view text) {
    if (text == "exhaustive") return {true, 0};
    constexpr std::string_view prefix = "random:";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string digits(text.substr(prefix.size()));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 12)
            throw ParseError("random mode needs a sample count, e.g. random:1000");
        return {false, std::stoull(digits)};
    }
    throw ParseError("mode must be exhaustive or random:<k>");
}

std::string CensusMode::to_string() const { return exhaustive ? "exhaustive" : "random:" + std::to_string(samples); }

namespace {

struct Tally {
    std::uint64_t candidates = 0, processed = 0, singular = 0, even_diagonal = 0, partial = 0;
    std::map<std::uint64_t, std::uint64_t> aut, diag, graph;

    void merge(const Tally& o) {
        candidates += o.candidates;
        processed += o.processed;
        singular += o.singular;
        even_diagonal += o.even_diagonal;
        partial += o.partial;
        for (const auto& [k, v] : o.aut) aut[k] += v;
        for (const auto& [k, v] : o.diag) diag[k] += v;
        for (const auto& [k, v] : o.graph) graph[k] += v;
    }

    void add(const Matrix& m) {
        ++candidates;
        EvolutionAlgebra alg(m);
        if (!alg.is_idempotent()) {
            ++singular;
            return;
        }
        ++processed;
        const AutomorphismGroup g = automorphism_group(alg);
        ++aut[g.group.order()];
        ++diag[g.kernel_order];
        ++graph[g.graph_automorphisms.size()];
        if (g.kernel_order % 2 == 0) ++even_diagonal;
        if (g.partial) ++partial;
    }
};

Json histogram(const std::map<std::uint64_t, std::uint64_t>& h) {
    Json j = Json::object();
    for (const auto& [k, v] : h) j[std::to_string(k)] = v;
    return j;
}

}  // namespace

Json CensusReport::to_json() const {
    return Json{{"field", field},
                {"n", n},
                {"mode", mode},
                {"seed", seed},
                {"candidates", candidates},
                {"processed", processed},
                {"singular", singular},
                {"aut_order_histogram", histogram(aut_orders)},
                {"diagonal_order_histogram", histogram(diagonal_orders)},
                {"graph_aut_order_histogram", histogram(graph_aut_orders)},
                {"even_diagonal_count", even_diagonal},
                {"all_diagonal_orders_odd", even_diagonal == 0},
                {"partial", partial}};
}

CensusReport run_census(const CensusOptions& opts) {
    if (opts.field.kind != FieldKind::PrimeField) throw DomainError("census runs over GF(p) only");
    if (opts.n < 1 || opts.n > kMaxSearchDimension) throw DomainError("census: n must be in 1..12");
    const Field field(opts.field);
    const std::uint64_t p = field.characteristic();
    const std::size_t cells = opts.n * opts.n;

    constexpr std::size_t kChunk = 256;
    std::vector<Tally> tallies;

    if (opts.mode.exhaustive) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < cells; ++i) {
            if (total > kMaxExhaustiveCensus / p) throw CapExceeded("exhaustive census needs p^(n^2) <= 10^8");
            total *= p;
        }
        const std::size_t chunks = (total + kChunk - 1) / kChunk;
        tallies.resize(chunks);
        parallel_for(chunks, opts.threads, [&](std::size_t c) {
            const std::uint64_t end = std::min<std::uint64_t>(total, (c + 1) * kChunk);
            for (std::uint64_t code = c * kChunk; code < end; ++code) {
                Matrix m(field, opts.n, opts.n);
                std::uint64_t x = code;
                for (std::size_t i = 0; i < opts.n; ++i)
                    for (std::size_t j = 0; j < opts.n; ++j, x /= p) m(i, j) = field.from_residue(x % p);
                tallies[c].add(m);
            }
        });
    } else {
        if (opts.mode.samples > kMaxExhaustiveCensus) throw CapExceeded("random census limited to 10^8 samples");
        // samples are drawn up front on one thread so the seed fixes them
        Rng rng(opts.seed);
        std::vector<Matrix> samples;
        samples.reserve(opts.mode.samples);
        std::uint64_t rejected = 0;
        while (samples.size() < opts.mode.samples) {
            Matrix m = random_prime_field_matrix(field, opts.n, rng);
            if (determinant(m).is_zero()) {
                ++rejected;
                continue;
            }
            samples.push_back(std::move(m));
        }
        const std::size_t chunks = (samples.size() + kChunk - 1) / kChunk;
        tallies.resize(chunks);
        parallel_for(chunks, opts.threads, [&](std::size_t c) {
            const std::size_t end = std::min(samples.size(), (c + 1) * kChunk);
            for (std::size_t i = c * kChunk; i < end; ++i) tallies[c].add(samples[i]);
        });
        if (tallies.empty()) tallies.emplace_back();
        tallies.front().candidates += rejected;
        tallies.front().singular += rejected;
    }

    Tally all;
    for (const auto& t : tallies) all.merge(t);
    CensusReport r;
    r.field = field.name();
    r.n = opts.n;
    r.mode = opts.mode.to_string();
    r.seed = opts.seed;
    r.candidates = all.candidates;
    r.processed = all.processed;
    r.singular = all.singular;
    r.aut_orders = std::move(all.aut);
    r.diagonal_orders = std::move(all.diag);
    r.graph_aut_orders = std::move(all.graph);
    r.even_diagonal = all.even_diagonal;
    r.partial = all.partial;
    return r;
}

}  // namespace evoalg
