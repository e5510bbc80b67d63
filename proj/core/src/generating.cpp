#include "orbichern/generating.hpp"

#include <stdexcept>

namespace orbichern {

namespace {

Rat ratio(const Integer &num, std::size_t den)
{
    return Rat(num) / Rat(static_cast<unsigned long>(den));
}

DiagElement exp_of_diagonals(const std::map<std::size_t, BaseElement> &by_k, std::size_t trunc)
{
    DiagElement exponent(trunc);
    for (const auto &[k, base] : by_k)
        if (k >= 1 && k <= trunc)
            exponent += apply_diagonal(static_cast<unsigned>(k), base, trunc);
    return diag_exp(exponent);
}

} // namespace

DiagElement dw_rhs(const JSequence &jseq, const BaseElement &alpha, std::size_t trunc)
{
    if (jseq.rmax() < trunc)
        throw std::invalid_argument("j-sequence shorter than the truncation order");
    std::map<std::size_t, BaseElement> by_k;
    for (std::size_t r = 1; r <= trunc; ++r)
        if (jseq.j(r) != 0)
            by_k[r] = ratio(jseq.j(r), r) * alpha;
    return exp_of_diagonals(by_k, trunc);
}

DiagElement dw_rhs_wreath(const BaseAssignment &assignment, std::size_t trunc)
{
    std::map<std::size_t, BaseElement> by_k;
    for (const auto &[r, base] : assignment)
        if (r >= 1 && r <= trunc)
            by_k[r] = Rat(1, static_cast<unsigned long>(r)) * base;
    return exp_of_diagonals(by_k, trunc);
}

std::string canonical_symbol(const GroupSpec &b)
{
    return "1^(" + b.to_string() + ")_X/G";
}

BaseAssignment wreath_base_assignment(const GroupSpec &a, std::size_t trunc)
{
    BaseAssignment out;
    for (std::size_t r = 1; r <= trunc; ++r) {
        BaseElement e;
        for (const SubgroupClass &cls : index_subgroup_classes(a, r))
            e.add(canonical_symbol(cls.type), Rat(cls.count));
        if (!e.is_zero())
            out[r] = std::move(e);
    }
    return out;
}

DiagElement mixed_operator(const CycleType &c, const BaseElement &alpha, std::size_t trunc)
{
    if (c.weight() > trunc)
        return DiagElement(trunc);
    DiagElement out = DiagElement::unit(trunc);
    for (std::size_t r = 1; r <= c.weight(); ++r)
        if (c[r] > 0)
            out = odot(out, odot_power(apply_diagonal(static_cast<unsigned>(r), alpha, trunc), c[r]));
    return out;
}

DiagElement lemma_dey_lhs(const JSequence &jseq, const BaseElement &alpha, std::size_t trunc)
{
    if (jseq.rmax() < trunc)
        throw std::invalid_argument("j-sequence shorter than the truncation order");
    DiagElement out = DiagElement::unit(trunc);
    for (std::size_t n = 1; n <= trunc; ++n) {
        const Rat inv_fact = Rat(1) / Rat(factorial(n));
        for (const CycleType &c : cycle_types(n)) {
            Integer jprod = 1;
            for (std::size_t i = 1; i <= n; ++i)
                for (unsigned t = 0; t < c[i]; ++t)
                    jprod *= jseq.j(i);
            if (jprod == 0)
                continue;
            out += (Rat(c.cardinality()) * inv_fact * Rat(jprod)) * mixed_operator(c, alpha, trunc);
        }
    }
    return out;
}

DiagElement hom_oracle_lhs(const GroupSpec &a, const BaseElement &alpha, std::size_t trunc,
                           const SearchOptions &opts)
{
    DiagElement out = DiagElement::unit(trunc);
    for (std::size_t n = 1; n <= trunc; ++n) {
        const HomCensus census = census_sym(a, n, opts);
        const Rat inv_fact = Rat(1) / Rat(factorial(n));
        for (const auto &[c, count] : census.counts)
            out += (Rat(static_cast<unsigned long>(count)) * inv_fact) * mixed_operator(c, alpha, trunc);
    }
    return out;
}

DiagElement euler_form(const std::map<std::size_t, Rat> &exponents, const BaseElement &alpha,
                       std::size_t trunc)
{
    DiagElement out = DiagElement::unit(trunc);
    for (const auto &[r, a] : exponents) {
        if (r == 0)
            throw std::invalid_argument("euler_form: exponents are indexed from 1");
        if (r > trunc || a == 0)
            continue;
        const StandardOperator u{{r, Rat(-1)}};
        out = odot(out, power_notation(u, Rat(-a) * alpha, trunc));
    }
    return out;
}

DiagElement cyclic_closed_form(std::size_t d, const BaseElement &alpha, std::size_t trunc)
{
    if (d == 0)
        throw std::invalid_argument("cyclic order must be positive");
    std::map<std::size_t, BaseElement> by_k;
    for (std::size_t r = 1; r <= d && r <= trunc; ++r)
        if (d % r == 0)
            by_k[r] = Rat(1, static_cast<unsigned long>(r)) * alpha;
    return exp_of_diagonals(by_k, trunc);
}

DiagElement artin_hesse_form(std::size_t p, const BaseElement &alpha, std::size_t trunc)
{
    if (!is_prime(p))
        throw std::invalid_argument("artin_hesse_form needs a prime");
    std::map<std::size_t, BaseElement> by_k;
    for (std::size_t q = 1; q <= trunc; q *= p)
        by_k[q] = Rat(1, static_cast<unsigned long>(q)) * alpha;
    return exp_of_diagonals(by_k, trunc);
}

std::vector<std::size_t> exponent_support(const DiagElement &a)
{
    const DiagElement l = diag_log(a);
    std::vector<std::size_t> out;
    for (const auto &[m, c] : l.terms()) {
        if (m.length() != 1)
            throw std::invalid_argument("exponent is not a linear combination of diagonal generators");
        const std::size_t k = m.factors().front().k;
        if (out.empty() || out.back() != k)
            out.push_back(k);
    }
    return out;
}

Series macdonald_series(const Rat &chi, std::size_t trunc)
{
    Series one_minus_z = Series::one(trunc);
    if (trunc >= 1)
        one_minus_z -= Series::monomial(trunc, 1);
    return series_pow_rat(one_minus_z, -chi);
}

namespace {

// Adds prod_i j_i^{m-1-i} for all tuples (j_1..j_{len}) with product dividing into <= trunc.
void enumerate_tuples(unsigned len, unsigned pos, std::size_t prod, const Integer &weight,
                      std::size_t trunc, std::map<std::size_t, Rat> &exponents, unsigned m)
{
    if (pos == len) {
        exponents[prod] += Rat(weight);
        return;
    }
    for (std::size_t j = 1; prod * j <= trunc; ++j) {
        Integer w = weight;
        for (unsigned e = 0; e < m - 2 - pos; ++e)
            w *= static_cast<unsigned long>(j);
        enumerate_tuples(len, pos + 1, prod * j, w, trunc, exponents, m);
    }
}

} // namespace

Series bryan_fulman_series(unsigned m, const Rat &chi, std::size_t trunc)
{
    if (m == 0)
        throw std::invalid_argument("bryan_fulman_series needs m >= 1");
    std::map<std::size_t, Rat> exponents;
    enumerate_tuples(m - 1, 0, 1, Integer(1), trunc, exponents, m);
    for (auto &[r, a] : exponents)
        a *= chi;
    return euler_product(exponents, trunc);
}

Series tamanoi_series(unsigned m, const Rat &chi_m, std::size_t trunc)
{
    if (m == 0)
        throw std::invalid_argument("tamanoi_series needs m >= 1");
    std::map<std::size_t, Rat> exponents;
    for (std::size_t r = 1; r <= trunc; ++r)
        exponents[r] = Rat(free_abelian_subgroup_count(m - 1, r)) * chi_m;
    return euler_product(exponents, trunc);
}

} // namespace orbichern
