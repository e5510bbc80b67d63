#pragma once

#include "orbichern/cycle_type.hpp"
#include "orbichern/group.hpp"
#include "orbichern/group_spec.hpp"
#include "orbichern/hom_search.hpp"
#include "orbichern/series.hpp"
#include "orbichern/subgroup_growth.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace orbichern {

/// Homomorphisms A -> S_n or A -> G wr S_n, stratified by the cycle type of
/// the orbit decomposition of the S_n part.
struct HomCensus {
    std::size_t n = 0;
    GroupSpec source;
    std::string target;
    std::map<CycleType, std::uint64_t> counts; // nonzero entries only
    std::uint64_t total = 0;

    std::uint64_t count(const CycleType &c) const;
};

HomCensus census_sym(const GroupSpec &a, std::size_t n, const SearchOptions &opts = {});
HomCensus census_wreath(const GroupSpec &a, const FiniteGroup &g, std::size_t n,
                        const SearchOptions &opts = {});

/// sum_n |Hom(A,S_n)|/n! z^n = exp(sum_r j_r z^r / r), truncated at N.
Series sym_total_via_formula(const JSequence &jseq, std::size_t trunc);

/// sum_n |Hom(A,G_n)|/(|G|^n n!) z^n = exp(sum_r j_r h_r / (|G| r) z^r) with h_r the
/// brute-force |Hom(B_r, G)| of the index-r subgroup type. A in {Z^m, Z/d, 1}.
Series wreath_total_via_formula(const GroupSpec &a, const FiniteGroup &g, std::size_t trunc,
                                const SearchOptions &opts = {});

nlohmann::ordered_json to_json(const HomCensus &c);
/// Header `type,count` then one row per type; types written as "c1 c2 ...".
std::string to_csv(const HomCensus &c);

} // namespace orbichern
