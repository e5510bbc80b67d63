#include "orbichern/census.hpp"

#include "orbichern/wreath.hpp"

#include <sstream>

namespace orbichern {

std::uint64_t HomCensus::count(const CycleType &c) const
{
    auto it = counts.find(c);
    return it == counts.end() ? 0 : it->second;
}

namespace {

using TypeCounts = std::map<CycleType, std::uint64_t>;

void merge_counts(TypeCounts &into, TypeCounts from)
{
    for (auto &[c, k] : from)
        into[c] += k;
}

HomCensus finish(const GroupSpec &a, std::string target, std::size_t n, TypeCounts counts)
{
    HomCensus out;
    out.n = n;
    out.source = a;
    out.target = std::move(target);
    for (const auto &[c, k] : counts)
        out.total += k;
    out.counts = std::move(counts);
    return out;
}

} // namespace

HomCensus census_sym(const GroupSpec &a, std::size_t n, const SearchOptions &opts)
{
    if (n == 0)
        return finish(a, "S0", 0, {{CycleType(), 1}});
    const Presentation pres = to_presentation(a);
    const FiniteGroup sym = symmetric_group(n);
    TypeCounts counts = fold_homs(
        pres, sym, opts, TypeCounts{},
        [&](TypeCounts &acc, std::span<const std::size_t> images) {
            std::vector<const Perm *> gens;
            for (std::size_t i : images)
                gens.push_back(&sym.element(i));
            ++acc[CycleType::from_orbit_sizes(n, orbit_sizes(gens, n))];
        },
        merge_counts);
    return finish(a, "S" + std::to_string(n), n, std::move(counts));
}

HomCensus census_wreath(const GroupSpec &a, const FiniteGroup &g, std::size_t n, const SearchOptions &opts)
{
    const std::string gname = g.name().empty() ? "G" : g.name();
    if (n == 0)
        return finish(a, gname + " wr S0", 0, {{CycleType(), 1}});
    const Presentation pres = to_presentation(a);
    const WreathProduct wr(g, n);
    const FiniteGroup &target = wr.as_permutation_group();
    TypeCounts counts = fold_homs(
        pres, target, opts, TypeCounts{},
        [&](TypeCounts &acc, std::span<const std::size_t> images) {
            std::vector<const Perm *> sigmas;
            for (std::size_t i : images)
                sigmas.push_back(&wr.decode(i).sigma);
            ++acc[CycleType::from_orbit_sizes(n, orbit_sizes(sigmas, n))];
        },
        merge_counts);
    return finish(a, gname + " wr S" + std::to_string(n), n, std::move(counts));
}

Series sym_total_via_formula(const JSequence &jseq, std::size_t trunc)
{
    if (jseq.rmax() < trunc)
        throw std::invalid_argument("j-sequence shorter than the truncation order");
    std::vector<Rat> coeffs(trunc + 1);
    for (std::size_t r = 1; r <= trunc; ++r)
        coeffs[r] = Rat(jseq.j(r)) / Rat(static_cast<unsigned long>(r));
    return series_exp(Series(trunc, std::move(coeffs)));
}

Series wreath_total_via_formula(const GroupSpec &a, const FiniteGroup &g, std::size_t trunc,
                                const SearchOptions &opts)
{
    if (!(a.get_if<FreeAbelian>() || a.get_if<Cyclic>() || a.get_if<TrivialGroup>()))
        throw std::invalid_argument("subgroup types unknown for " + a.to_string() +
                                    " (formula route supports Z^m, Z/d, 1)");
    std::vector<Rat> coeffs(trunc + 1);
    const Rat order(static_cast<unsigned long>(g.order()));
    for (std::size_t r = 1; r <= trunc; ++r) {
        for (const SubgroupClass &cls : index_subgroup_classes(a, r)) {
            const std::uint64_t h = count_homs(to_presentation(cls.type), g, opts);
            coeffs[r] += Rat(cls.count) * Rat(static_cast<unsigned long>(h)) /
                         (order * Rat(static_cast<unsigned long>(r)));
        }
    }
    return series_exp(Series(trunc, std::move(coeffs)));
}

nlohmann::ordered_json to_json(const HomCensus &c)
{
    nlohmann::ordered_json j;
    j["source"] = c.source.to_string();
    j["target"] = c.target;
    j["n"] = c.n;
    j["total"] = c.total;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &[type, k] : c.counts) {
        nlohmann::ordered_json row;
        row["type"] = std::vector<unsigned>(type.multiplicities().begin(), type.multiplicities().end());
        row["count"] = k;
        rows.push_back(std::move(row));
    }
    j["by_type"] = std::move(rows);
    return j;
}

std::string to_csv(const HomCensus &c)
{
    std::ostringstream os;
    os << "type,count\n";
    for (const auto &[type, k] : c.counts) {
        bool first = true;
        for (unsigned m : type.multiplicities()) {
            os << (first ? "" : " ") << m;
            first = false;
        }
        os << ',' << k << '\n';
    }
    return os.str();
}

} // namespace orbichern
