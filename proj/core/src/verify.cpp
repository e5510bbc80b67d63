#include "orbichern/verify.hpp"

#include "orbichern/census.hpp"
#include "orbichern/generating.hpp"
#include "orbichern/subgroup_growth.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace orbichern {

const char *to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::budget:
        return "budget-exceeded";
    case CheckStatus::unsupported:
        return "unsupported";
    }
    return "?";
}

namespace {

Rat abs_rat(const Rat &q)
{
    return q < 0 ? Rat(-q) : q;
}

nlohmann::ordered_json rat_json(const Rat &q)
{
    return to_string(q);
}

} // namespace

Comparison compare_values(std::string quantity, std::size_t n, const Rat &lhs, const Rat &rhs)
{
    Comparison c;
    c.quantity = std::move(quantity);
    c.n = n;
    c.lhs = lhs;
    c.rhs = rhs;
    c.max_deviation = abs_rat(lhs - rhs);
    c.equal = lhs == rhs;
    return c;
}

Comparison compare_functions(std::string quantity, std::size_t n, const ConstrFn &lhs, const ConstrFn &rhs)
{
    if (lhs.points() != rhs.points() || lhs.arity() != rhs.arity())
        throw std::invalid_argument("compare_functions: functions on different spaces");
    Comparison c;
    c.quantity = std::move(quantity);
    c.n = n;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const Rat d = abs_rat(lhs[i] - rhs[i]);
        if (d > c.max_deviation)
            c.max_deviation = d;
        if (d != 0 && !c.first_diff) {
            c.first_diff = tuple_to_string(lhs.decode(i));
            c.lhs = lhs[i];
            c.rhs = rhs[i];
        }
    }
    c.equal = c.max_deviation == 0;
    if (c.equal && lhs.size() > 0) {
        c.lhs = lhs.integral();
        c.rhs = rhs.integral();
    }
    return c;
}

namespace {

Comparison compare_diag(std::string quantity, std::size_t n, const DiagElement &lhs, const DiagElement &rhs)
{
    Comparison c;
    c.quantity = std::move(quantity);
    c.n = n;
    const DiagElement a = lhs.slice(n), b = rhs.slice(n);
    std::vector<DiagMonomial> monos;
    for (const auto &[m, v] : a.terms())
        monos.push_back(m);
    for (const auto &[m, v] : b.terms())
        monos.push_back(m);
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    for (const DiagMonomial &m : monos) {
        const Rat x = a.coefficient(m), y = b.coefficient(m);
        const Rat d = abs_rat(x - y);
        if (d > c.max_deviation)
            c.max_deviation = d;
        if (d != 0 && !c.first_diff) {
            c.first_diff = m.to_string();
            c.lhs = x;
            c.rhs = y;
        }
    }
    c.equal = c.max_deviation == 0;
    return c;
}

VerifyReport run_case(std::string suite, std::string name, nlohmann::ordered_json params,
                      const std::function<void(VerifyReport &)> &body)
{
    VerifyReport r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.params = std::move(params);
    try {
        body(r);
        const bool ok = std::all_of(r.comparisons.begin(), r.comparisons.end(),
                                    [](const Comparison &c) { return c.equal; });
        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    } catch (const BudgetExceeded &e) {
        r.status = CheckStatus::budget;
        r.message = e.what();
    } catch (const GroupTooLarge &e) {
        r.status = CheckStatus::budget;
        r.message = e.what();
    } catch (const std::invalid_argument &e) {
        r.status = CheckStatus::unsupported;
        r.message = e.what();
    } catch (const std::logic_error &e) {
        r.status = CheckStatus::fail;
        r.message = e.what();
    }
    return r;
}

CycleType transitive_type(std::size_t r)
{
    std::vector<unsigned> c(r, 0);
    c[r - 1] = 1;
    return CycleType(std::move(c));
}

Rat as_rat(std::uint64_t v)
{
    return Rat(static_cast<unsigned long>(v));
}

ConstrFn lhs_canonical(PowerCache &cache, std::size_t n, const GroupSpec &a, const SearchOptions &opts)
{
    if (n == 0)
        return ConstrFn::constant(cache.base().size(), 0, Rat(1));
    const ConstrFn flat = canonical_function(cache.power(n).as_gset(), a, opts);
    ConstrFn f(cache.base().size(), n);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = flat[i];
    return f;
}

nlohmann::ordered_json case_params(const GroupSpec &a, const std::string &target, std::size_t points,
                                   std::size_t n)
{
    nlohmann::ordered_json p;
    p["group"] = a.to_string();
    if (!target.empty())
        p["target"] = target;
    if (points)
        p["points"] = points;
    p["N"] = n;
    return p;
}

std::string target_name(const GSet &x)
{
    return x.group().name().empty() ? std::string("G") : x.group().name();
}

} // namespace

nlohmann::ordered_json to_json(const Comparison &c)
{
    nlohmann::ordered_json j;
    j["quantity"] = c.quantity;
    j["n"] = c.n;
    j["status"] = c.equal ? "equal" : "differ";
    j["max_deviation"] = rat_json(c.max_deviation);
    if (c.first_diff)
        j["first_diff"] = *c.first_diff;
    j["lhs"] = rat_json(c.lhs);
    j["rhs"] = rat_json(c.rhs);
    return j;
}

nlohmann::ordered_json to_json(const VerifyReport &r)
{
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["case"] = r.name;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    if (!r.message.empty())
        j["message"] = r.message;
    auto comps = nlohmann::ordered_json::array();
    for (const auto &c : r.comparisons)
        comps.push_back(to_json(c));
    j["comparisons"] = std::move(comps);
    return j;
}

VerifyReport verify_three_way(const GroupSpec &a, std::size_t trunc, const SearchOptions &opts)
{
    return run_case("theorem1", "three-way " + a.to_string(), case_params(a, "", 0, trunc), [&](VerifyReport &r) {
        const BaseElement alpha = BaseElement::symbol("1_X");
        const JSequence jseq = j_sequence(a, std::max<std::size_t>(trunc, 1), opts);
        const DiagElement hom = hom_oracle_lhs(a, alpha, trunc, opts);
        const DiagElement lemma = lemma_dey_lhs(jseq, alpha, trunc);
        const DiagElement rhs = dw_rhs(jseq, alpha, trunc);
        for (std::size_t n = 0; n <= trunc; ++n) {
            r.comparisons.push_back(compare_diag("hom census vs lemma expansion", n, hom, lemma));
            r.comparisons.push_back(compare_diag("lemma expansion vs exponential", n, lemma, rhs));
        }
    });
}

VerifyReport verify_symmetric(const GroupSpec &a, std::size_t points, std::size_t trunc, const SearchOptions &opts)
{
    return run_case(
        "theorem1", "symmetric " + a.to_string() + " X=" + std::to_string(points),
        case_params(a, "", points, trunc), [&](VerifyReport &r) {
            PowerCache cache(GSet::trivial(trivial_group(), points));
            const DiagElement rhs = dw_rhs(j_sequence(a, std::max<std::size_t>(trunc, 1), opts),
                                           BaseElement::symbol("1_X"), trunc);
            const std::map<std::string, ConstrFn> bases{{"1_X", ConstrFn::constant(points, 1, Rat(1))}};
            const Series degrees =
                degree_specialize(rhs, {{"1_X", Rat(static_cast<unsigned long>(points))}});
            for (std::size_t n = 0; n <= trunc; ++n) {
                const ConstrFn lhs = lhs_canonical(cache, n, a, opts);
                const ConstrFn right =
                    evaluate_concrete(rhs, n, bases, cache, DiagonalMode::plain, Symmetrization::plain);
                r.comparisons.push_back(compare_functions("canonical function on X^n", n, lhs, right));
                r.comparisons.push_back(compare_values("integral vs degree series", n, lhs.integral(), degrees[n]));
            }
        });
}

VerifyReport verify_wreath(const GroupSpec &a, const GSet &x, std::size_t trunc, const SearchOptions &opts)
{
    const std::string g = target_name(x);
    return run_case(
        "theorem2", "wreath " + a.to_string() + " G=" + g + " X=" + std::to_string(x.size()),
        case_params(a, g, x.size(), trunc), [&](VerifyReport &r) {
            PowerCache cache(x);
            const BaseAssignment assignment = wreath_base_assignment(a, std::max<std::size_t>(trunc, 1));
            const DiagElement rhs = dw_rhs_wreath(assignment, trunc);
            std::map<std::string, ConstrFn> bases;
            std::map<std::string, Rat> integrals;
            for (std::size_t idx = 1; idx <= std::max<std::size_t>(trunc, 1); ++idx)
                for (const SubgroupClass &cls : index_subgroup_classes(a, idx)) {
                    const std::string sym = canonical_symbol(cls.type);
                    if (bases.count(sym))
                        continue;
                    ConstrFn f = canonical_function(x, cls.type, opts);
                    integrals[sym] = f.integral();
                    bases.emplace(sym, std::move(f));
                }
            const Series degrees = degree_specialize(rhs, integrals);

            // The orbit projection carries 1^(Z) to the constant 1 on X/G.
            const FiniteMap pi = orbit_projection(x);
            const ConstrFn one_z = pushforward(pi, canonical_function(x, GroupSpec::free_abelian(1), opts));
            r.comparisons.push_back(
                compare_functions("orbit pushforward of 1^(Z)", 1, one_z, ConstrFn::constant(pi.target_size, 1, 1)));

            const FreeAbelian *fa = a.get_if<FreeAbelian>();
            std::optional<Series> tamanoi;
            if (fa && fa->rank >= 1) {
                const Rat chi = orbifold_euler_characteristic(x, fa->rank);
                const Rat integral = canonical_function(x, a, opts).integral();
                r.comparisons.push_back(compare_values("chi_m direct vs integral", 1, chi, integral));
                tamanoi = tamanoi_series(fa->rank, chi, trunc);
            }
            for (std::size_t n = 0; n <= trunc; ++n) {
                const ConstrFn lhs = lhs_canonical(cache, n, a, opts);
                const ConstrFn right =
                    evaluate_concrete(rhs, n, bases, cache, DiagonalMode::wreath, Symmetrization::wreath);
                r.comparisons.push_back(compare_functions("canonical function on X^n", n, lhs, right));
                r.comparisons.push_back(compare_values("integral vs degree series", n, lhs.integral(), degrees[n]));
                if (tamanoi)
                    r.comparisons.push_back(compare_values("tamanoi", n, lhs.integral(), (*tamanoi)[n]));
            }
        });
}

VerifyReport lemma_dey_check(const GroupSpec &a, std::size_t points, std::size_t trunc, const SearchOptions &opts)
{
    return run_case(
        "lemma-dey", "lemma-dey " + a.to_string() + " X=" + std::to_string(points),
        case_params(a, "", points, trunc), [&](VerifyReport &r) {
            PowerCache cache(GSet::trivial(trivial_group(), points));
            const JSequence jseq = j_sequence(a, std::max<std::size_t>(trunc, 1), opts);
            const ConstrFn one = ConstrFn::constant(points, 1, Rat(1));
            std::vector<std::map<CycleType, ConstrFn>> sums(trunc + 1);
            std::vector<ConstrFn> theta;
            theta.emplace_back(points, 0);
            for (std::size_t n = 1; n <= trunc; ++n) {
                sums[n] = fixed_sums_by_type(cache.power(n), a, opts);
                auto it = sums[n].find(transitive_type(n));
                theta.push_back(it == sums[n].end() ? ConstrFn(points, n) : it->second);
                const ConstrFn rhs = (Rat(factorial(n - 1)) * Rat(jseq.j(n))) *
                                     diagonal_concrete(one, n, cache, DiagonalMode::plain);
                r.comparisons.push_back(compare_functions("(1) theta_r", n, theta[n], rhs));
            }
            for (std::size_t n = 1; n <= trunc; ++n)
                for (const CycleType &c : cycle_types(n)) {
                    auto it = sums[n].find(c);
                    const ConstrFn lhs = it == sums[n].end() ? ConstrFn(points, n) : it->second;
                    ConstrFn prod = ConstrFn::constant(points, 0, Rat(1));
                    for (std::size_t k = 1; k <= n; ++k)
                        for (unsigned t = 0; t < c[k]; ++t)
                            prod = odot_concrete(prod, theta[k], cache, Symmetrization::plain);
                    const Rat scale = Rat(factorial(n)) / Rat(c.block_symmetry());
                    r.comparisons.push_back(compare_functions("(2) type " + c.to_string(), n, lhs, scale * prod));
                }
        });
}

VerifyReport lemma_deyg_check(const GroupSpec &a, const GSet &x, std::size_t rmax, const SearchOptions &opts)
{
    const std::string g = target_name(x);
    return run_case(
        "lemma-deyg", "lemma-deyg " + a.to_string() + " G=" + g + " X=" + std::to_string(x.size()),
        case_params(a, g, x.size(), rmax), [&](VerifyReport &r) {
            PowerCache cache(x);
            const std::size_t k = x.size();
            const Rat gorder = as_rat(x.group().order());
            std::vector<std::map<CycleType, ConstrFn>> sums(rmax + 1);
            std::vector<ConstrFn> theta;
            theta.emplace_back(k, 0);
            std::map<std::string, ConstrFn> canon;
            for (std::size_t n = 1; n <= rmax; ++n) {
                ConstrFn index_fn(k, 1);
                for (const SubgroupClass &cls : index_subgroup_classes(a, n)) {
                    const std::string sym = canonical_symbol(cls.type);
                    if (!canon.count(sym))
                        canon.emplace(sym, canonical_function(x, cls.type, opts));
                    index_fn += Rat(cls.count) * canon.at(sym);
                }
                sums[n] = fixed_sums_by_type(cache.power(n), a, opts);
                auto it = sums[n].find(transitive_type(n));
                theta.push_back(it == sums[n].end() ? ConstrFn(k, n) : it->second);
                Rat gpow = 1;
                for (std::size_t i = 0; i < n; ++i)
                    gpow *= gorder;
                const ConstrFn rhs =
                    Rat(factorial(n - 1)) * diagonal_concrete(index_fn, n, cache, DiagonalMode::wreath);
                r.comparisons.push_back(compare_functions("(1') Theta_r/|G|^r", n, (Rat(1) / gpow) * theta[n], rhs));
            }
            for (std::size_t n = 1; n <= rmax; ++n)
                for (const CycleType &c : cycle_types(n)) {
                    auto it = sums[n].find(c);
                    const ConstrFn lhs = it == sums[n].end() ? ConstrFn(k, n) : it->second;
                    ConstrFn prod = ConstrFn::constant(k, 0, Rat(1));
                    for (std::size_t kk = 1; kk <= n; ++kk)
                        for (unsigned t = 0; t < c[kk]; ++t)
                            prod = odot_concrete(prod, theta[kk], cache, Symmetrization::wreath);
                    const Rat scale = Rat(factorial(n)) / Rat(c.block_symmetry());
                    r.comparisons.push_back(compare_functions("(2') type " + c.to_string(), n, lhs, scale * prod));
                }
            // At a point with stabilizer H: |Hom(A, H_r; transitive)| = sum_B (r-1)! |H|^{r-1} |Hom(B, H)|.
            for (std::size_t p = 0; p < k; ++p) {
                const FiniteGroup h = x.stabilizer_group(static_cast<Point>(p));
                for (std::size_t n = 1; n <= rmax; ++n) {
                    const HomCensus census = census_wreath(a, h, n, opts);
                    Integer rhs = 0;
                    Integer hpow = 1;
                    for (std::size_t i = 1; i < n; ++i)
                        hpow *= static_cast<unsigned long>(h.order());
                    for (const SubgroupClass &cls : index_subgroup_classes(a, n))
                        rhs += cls.count * factorial(n - 1) * hpow *
                               static_cast<unsigned long>(count_homs(to_presentation(cls.type), h, opts));
                    r.comparisons.push_back(compare_values("transitive homs into Stab(" + std::to_string(p + 1) +
                                                               ") wr S_r",
                                                           n, as_rat(census.count(transitive_type(n))), Rat(rhs)));
                }
            }
        });
}

Suite parse_suite(const std::string &text)
{
    if (text == "theorem1")
        return Suite::theorem1;
    if (text == "theorem2")
        return Suite::theorem2;
    if (text == "lemma-dey")
        return Suite::lemma_dey;
    if (text == "lemma-deyg")
        return Suite::lemma_deyg;
    if (text == "all")
        return Suite::all;
    throw std::invalid_argument("unknown suite '" + text + "'");
}

GSet matrix_gset(const FiniteGroup &g, std::size_t points)
{
    if (points < g.degree())
        return GSet::trivial(g, points);
    std::vector<std::vector<Point>> tables;
    for (std::size_t gen : g.generators()) {
        const auto im = g.element(gen).images();
        std::vector<Point> t(points);
        for (std::size_t p = 0; p < points; ++p)
            t[p] = p < im.size() ? im[p] : static_cast<Point>(p);
        tables.push_back(std::move(t));
    }
    return GSet::from_generator_action(g, points, tables);
}

namespace {

const std::vector<std::string> kSymmetricSources{"1", "Z", "Z^2", "Z^3", "Z/2", "Z/3", "Z/4"};
const std::vector<std::string> kWreathSources{"1", "Z", "Z^2", "Z/2", "Z/3", "Z/4"};
const std::vector<std::string> kTargets{"1", "Z/2", "Z/3", "S3"};
const std::vector<std::size_t> kPoints{1, 2, 3};

bool keep_group(const MatrixFilter &f, const GroupSpec &a)
{
    if (f.groups.empty())
        return true;
    return std::any_of(f.groups.begin(), f.groups.end(),
                       [&](const std::string &s) { return GroupSpec::parse(s).to_string() == a.to_string(); });
}

bool keep_target(const MatrixFilter &f, const FiniteGroup &g)
{
    if (f.targets.empty())
        return true;
    return std::any_of(f.targets.begin(), f.targets.end(),
                       [&](const std::string &s) { return parse_finite_group(s).name() == g.name(); });
}

bool keep_points(const MatrixFilter &f, std::size_t k)
{
    return f.points.empty() || std::find(f.points.begin(), f.points.end(), k) != f.points.end();
}

std::size_t symmetric_depth(const GroupSpec &a, std::size_t points)
{
    std::size_t n = points <= 2 ? 5 : 3;
    if (const auto *fa = a.get_if<FreeAbelian>(); fa && fa->rank >= 3)
        n = std::min<std::size_t>(n, 4);
    return n;
}

std::size_t wreath_depth(const FiniteGroup &g, std::size_t points)
{
    return g.order() == 1 && points <= 2 ? 5 : 3;
}

void run_symmetric_suites(bool theorem, bool lemma, const MatrixFilter &filter, const SearchOptions &opts,
                          std::vector<VerifyReport> &out)
{
    for (const std::string &s : kSymmetricSources) {
        const GroupSpec a = GroupSpec::parse(s);
        if (!keep_group(filter, a))
            continue;
        if (theorem) {
            const std::size_t depth = a.get_if<FreeAbelian>() && a.get_if<FreeAbelian>()->rank >= 3 ? 4 : 5;
            out.push_back(verify_three_way(a, depth, opts));
        }
        for (std::size_t k : kPoints) {
            if (!keep_points(filter, k))
                continue;
            if (theorem)
                out.push_back(verify_symmetric(a, k, symmetric_depth(a, k), opts));
            if (lemma)
                out.push_back(lemma_dey_check(a, k, symmetric_depth(a, k), opts));
        }
    }
}

void run_wreath_suites(bool theorem, bool lemma, const MatrixFilter &filter, const SearchOptions &opts,
                       std::vector<VerifyReport> &out)
{
    for (const std::string &t : kTargets) {
        const FiniteGroup g = parse_finite_group(t);
        if (!keep_target(filter, g))
            continue;
        for (std::size_t k : kPoints) {
            if (!keep_points(filter, k))
                continue;
            const GSet x = matrix_gset(g, k);
            for (const std::string &s : kWreathSources) {
                const GroupSpec a = GroupSpec::parse(s);
                if (!keep_group(filter, a))
                    continue;
                if (theorem)
                    out.push_back(verify_wreath(a, x, wreath_depth(g, k), opts));
                if (lemma)
                    out.push_back(lemma_deyg_check(a, x, wreath_depth(g, k), opts));
            }
        }
    }
}

} // namespace

std::vector<VerifyReport> run_suite(Suite suite, const MatrixFilter &filter, const SearchOptions &opts)
{
    std::vector<VerifyReport> out;
    const bool all = suite == Suite::all;
    run_symmetric_suites(all || suite == Suite::theorem1, all || suite == Suite::lemma_dey, filter, opts, out);
    run_wreath_suites(all || suite == Suite::theorem2, all || suite == Suite::lemma_deyg, filter, opts, out);
    return out;
}

} // namespace orbichern
