#pragma once

#include "orbichern/finmodel.hpp"
#include "orbichern/group_spec.hpp"
#include "orbichern/gset.hpp"
#include "orbichern/hom_search.hpp"
#include "orbichern/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace orbichern {

enum class CheckStatus { pass, fail, budget, unsupported };
const char *to_string(CheckStatus s);

/// One exact equality between two computed quantities.
struct Comparison {
    std::string quantity;
    std::size_t n = 0;
    bool equal = true;
    Rat max_deviation = 0;
    /// On failure: the first differing point/tuple and the two values there.
    std::optional<std::string> first_diff;
    Rat lhs = 0;
    Rat rhs = 0;
};

Comparison compare_values(std::string quantity, std::size_t n, const Rat &lhs, const Rat &rhs);
Comparison compare_functions(std::string quantity, std::size_t n, const ConstrFn &lhs, const ConstrFn &rhs);

struct VerifyReport {
    std::string suite;
    std::string name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    CheckStatus status = CheckStatus::pass;
    std::string message;
    std::vector<Comparison> comparisons;

    bool passed() const { return status == CheckStatus::pass; }
};

nlohmann::ordered_json to_json(const Comparison &c);
nlohmann::ordered_json to_json(const VerifyReport &r);

/// Symbolic three-way identity hom_oracle_lhs = lemma_dey_lhs = dw_rhs up to weight N.
VerifyReport verify_three_way(const GroupSpec &a, std::size_t trunc, const SearchOptions &opts = {});

/// Pointwise check of the symmetric-product identity on X^n = {0..k-1}^n, n <= N.
VerifyReport verify_symmetric(const GroupSpec &a, std::size_t points, std::size_t trunc,
                              const SearchOptions &opts = {});

/// Pointwise check of the wreath-product identity on a finite G-set, plus the
/// chi_m and Tamanoi checks when A = Z^m. A in {Z^m, Z/d, 1}.
VerifyReport verify_wreath(const GroupSpec &a, const GSet &x, std::size_t trunc, const SearchOptions &opts = {});

/// Identities (1) and (2) of the symmetric-group lemma on {0..k-1}^n, n <= N.
VerifyReport lemma_dey_check(const GroupSpec &a, std::size_t points, std::size_t trunc,
                             const SearchOptions &opts = {});

/// Identities (1') and (2') of the wreath lemma, and the transitive-hom
/// counting identity at every stabilizer, for r, n <= rmax.
VerifyReport lemma_deyg_check(const GroupSpec &a, const GSet &x, std::size_t rmax, const SearchOptions &opts = {});

enum class Suite { theorem1, theorem2, lemma_dey, lemma_deyg, all };
Suite parse_suite(const std::string &text);

/// Restricts the default matrix; empty lists mean no restriction.
struct MatrixFilter {
    std::vector<std::string> groups;  // source specs, compared after parsing
    std::vector<std::string> targets; // finite group names: 1, Z/2, Z/3, S3
    std::vector<std::size_t> points;
};

/// The G-set used by the default matrix: G acts naturally on the first deg(G)
/// points when k >= deg(G), and trivially otherwise.
GSet matrix_gset(const FiniteGroup &g, std::size_t points);

/// Runs every case of the suite's default matrix that passes the filter.
std::vector<VerifyReport> run_suite(Suite suite, const MatrixFilter &filter, const SearchOptions &opts = {});

} // namespace orbichern
