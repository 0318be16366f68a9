#ifndef EVOALG_CENSUS_HPP
#define EVOALG_CENSUS_HPP

#include <cstdint>
#include <map>
#include <string>

#include "evoalg/io.hpp"

namespace evoalg {

struct CensusMode {
    bool exhaustive = true;
    std::uint64_t samples = 0;  // random mode

    /// "exhaustive" or "random:<k>".
    static CensusMode parse(std::string_view text);
    std::string to_string() const;
};

struct CensusOptions {
    FieldDescriptor field = FieldDescriptor::prime_field(2);
    std::size_t n = 2;
    CensusMode mode;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

constexpr std::uint64_t kMaxExhaustiveCensus = 100'000'000;

struct CensusReport {
    std::string field;
    std::size_t n = 0;
    std::string mode;
    std::uint64_t seed = 0;
    std::uint64_t candidates = 0;  // matrices examined
    std::uint64_t processed = 0;   // nonsingular ones grouped
    std::uint64_t singular = 0;
    std::map<std::uint64_t, std::uint64_t> aut_orders;
    std::map<std::uint64_t, std::uint64_t> diagonal_orders;
    std::map<std::uint64_t, std::uint64_t> graph_aut_orders;
    std::uint64_t even_diagonal = 0;  // algebras with |D| even
    std::uint64_t partial = 0;

    Json to_json() const;
};

/// Groups every nonsingular n x n matrix over GF(p) (exhaustive, p^{n^2} <=
/// 10^8) or `samples` random nonsingular ones drawn from `seed`. Work is split
/// into fixed chunks and reduced in input order, so the report does not
/// depend on the thread count.
CensusReport run_census(const CensusOptions& opts);

}  // namespace evoalg

#endif  // EVOALG_CENSUS_HPP
