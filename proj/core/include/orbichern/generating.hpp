#pragma once

#include "orbichern/census.hpp"
#include "orbichern/diag.hpp"
#include "orbichern/group_spec.hpp"
#include "orbichern/hom_search.hpp"
#include "orbichern/series.hpp"
#include "orbichern/subgroup_growth.hpp"

#include <cstddef>
#include <map>
#include <string>

namespace orbichern {

/// exp(sum_r j_r/r z^r D^r(alpha)).
DiagElement dw_rhs(const JSequence &jseq, const BaseElement &alpha, std::size_t trunc);

/// r -> the base element standing for 1^(A;r)_X/G.
using BaseAssignment = std::map<std::size_t, BaseElement>;

/// exp(sum_r 1/r z^r D^r(assignment(r))); missing indices contribute nothing.
DiagElement dw_rhs_wreath(const BaseAssignment &assignment, std::size_t trunc);

/// Label used for the canonical function of the subgroup type B, "1^(B)_X/G".
std::string canonical_symbol(const GroupSpec &b);

/// Groups the index-r subgroups by type: r -> sum count * symbol(type).
/// A in {Z^m, Z/d, 1}.
BaseAssignment wreath_base_assignment(const GroupSpec &a, std::size_t trunc);

/// sum over cycle types c of weight <= N of (#c/n!) prod_i j_i^{c_i} D^i(alpha)^{c_i}.
DiagElement lemma_dey_lhs(const JSequence &jseq, const BaseElement &alpha, std::size_t trunc);

/// prod_r D^r(alpha)^{c_r} as an element of truncation `trunc`.
DiagElement mixed_operator(const CycleType &c, const BaseElement &alpha, std::size_t trunc);

/// sum_n sum_c (N_c/n!) prod_r D^r(alpha)^{c_r} with N_c the brute-force
/// census count of Hom(A, S_n) of type c.
DiagElement hom_oracle_lhs(const GroupSpec &a, const BaseElement &alpha, std::size_t trunc,
                           const SearchOptions &opts = {});

/// prod_r (1 - z^r D^r)^(-a_r alpha), each factor in power notation.
DiagElement euler_form(const std::map<std::size_t, Rat> &exponents, const BaseElement &alpha,
                       std::size_t trunc);

/// exp(sum_{r | d} 1/r (zD)^r(alpha)).
DiagElement cyclic_closed_form(std::size_t d, const BaseElement &alpha, std::size_t trunc);
/// exp(sum_k p^-k (zD)^{p^k}(alpha)).
DiagElement artin_hesse_form(std::size_t p, const BaseElement &alpha, std::size_t trunc);

/// Indices k with a nonzero D^k(.) term in log(a), i.e. the generator set of the exponent.
std::vector<std::size_t> exponent_support(const DiagElement &a);

/// (1 - z)^(-chi).
Series macdonald_series(const Rat &chi, std::size_t trunc);
/// prod over (j_1..j_{m-1}) of (1 - z^{j_1...j_{m-1}})^(-j_1^{m-2} j_2^{m-3} ... chi), by tuple enumeration.
Series bryan_fulman_series(unsigned m, const Rat &chi, std::size_t trunc);
/// prod_r (1 - z^r)^(-j(m-1;r) chi_m).
Series tamanoi_series(unsigned m, const Rat &chi_m, std::size_t trunc);

} // namespace orbichern
