#include "orbichern/cli.hpp"

#include "orbichern/census.hpp"
#include "orbichern/finmodel.hpp"
#include "orbichern/generating.hpp"
#include "orbichern/subgroup_growth.hpp"
#include "orbichern/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace orbichern::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct SearchFlags {
    std::string budget;
    unsigned threads = 1;

    void attach(CLI::App &app)
    {
        app.add_option("--budget", budget, "Search-node budget per enumeration (e.g. 1e7)");
        app.add_option("--threads", threads, "Worker threads for homomorphism enumeration")
            ->check(CLI::Range(1u, 256u));
    }

    SearchOptions options() const
    {
        SearchOptions o;
        o.budget = budget.empty() ? default_budget() : parse_budget(budget);
        o.threads = threads;
        return o;
    }
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string join(const std::vector<Integer> &v, const char *sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i].get_str();
    return os.str();
}

std::vector<std::string> integer_strings(const auto &values)
{
    std::vector<std::string> out;
    for (const auto &v : values)
        out.push_back(v.get_str());
    return out;
}

// jseq

struct JseqArgs {
    std::string group;
    std::size_t max = 0;
    std::string format = "text";
    bool conjugacy = false;
    SearchFlags search;
};

int run_jseq(const JseqArgs &a, std::ostream &out)
{
    const GroupSpec spec = GroupSpec::parse(a.group);
    const SearchOptions opts = a.search.options();
    const JSequence j = j_sequence(spec, a.max, opts);
    std::vector<Integer> u;
    if (a.conjugacy)
        u = u_sequence(spec, a.max, opts);
    if (a.format == "json") {
        ordered_json doc;
        doc["group"] = spec.to_string();
        doc["max"] = a.max;
        doc["j"] = integer_strings(j.values);
        std::vector<std::string> prov;
        for (Provenance p : j.provenance)
            prov.emplace_back(to_string(p));
        doc["provenance"] = prov;
        if (a.conjugacy)
            doc["u"] = integer_strings(u);
        out << doc.dump(2) << '\n';
    } else if (a.format == "csv") {
        out << (a.conjugacy ? "r,j,u\n" : "r,j\n");
        for (std::size_t r = 1; r <= a.max; ++r) {
            out << r << ',' << j.j(r).get_str();
            if (a.conjugacy)
                out << ',' << u[r - 1].get_str();
            out << '\n';
        }
    } else if (a.conjugacy) {
        out << "j: " << join(j.values, " ") << '\n' << "u: " << join(u, " ") << '\n';
    } else {
        out << join(j.values, " ") << '\n';
    }
    return kOk;
}

// homcount

struct HomcountArgs {
    std::string group;
    std::size_t n = 0;
    std::string target = "S";
    std::string format = "json";
    SearchFlags search;
};

bool is_symmetric_target(const std::string &t)
{
    return t.empty() || t == "S" || t == "Sn" || t == "S_n";
}

int run_homcount(const HomcountArgs &a, std::ostream &out)
{
    const GroupSpec spec = GroupSpec::parse(a.group);
    const SearchOptions opts = a.search.options();
    const HomCensus c = is_symmetric_target(a.target)
                            ? census_sym(spec, a.n, opts)
                            : census_wreath(spec, parse_finite_group(a.target), a.n, opts);
    if (a.format == "csv")
        out << to_csv(c);
    else
        out << to_json(c).dump(2) << '\n';
    return kOk;
}

// gf

struct GfArgs {
    std::string theorem;
    std::string group = "Z";
    std::string target;
    std::string chi = "1";
    std::size_t order = 0;
    bool symbolic = false;
    std::string format = "text";
    SearchFlags search;
};

unsigned free_abelian_rank(const GroupSpec &spec, const std::string &theorem)
{
    const auto *fa = spec.get_if<FreeAbelian>();
    if (!fa)
        throw UsageError(theorem + " needs --group Z^m (got " + spec.to_string() + ")");
    return fa->rank;
}

FiniteGroup require_target(const GfArgs &a)
{
    if (a.target.empty())
        throw UsageError(a.theorem + " needs --target G (a finite group)");
    return parse_finite_group(a.target);
}

int run_gf(const GfArgs &a, std::ostream &out)
{
    const GroupSpec spec = GroupSpec::parse(a.group);
    const Rat chi = parse_rat(a.chi);
    const SearchOptions opts = a.search.options();
    const std::size_t n = a.order;
    const bool symbolic_theorem = a.theorem == "dw" || a.theorem == "dw-wreath";
    if (a.symbolic && !symbolic_theorem)
        throw UsageError("--symbolic is available for dw and dw-wreath only");

    std::optional<Series> series;
    std::optional<DiagElement> element;
    if (a.theorem == "macdonald") {
        series = macdonald_series(chi, n);
    } else if (a.theorem == "dw") {
        const DiagElement d = dw_rhs(j_sequence(spec, std::max<std::size_t>(n, 1), opts), BaseElement::symbol("c"), n);
        if (a.symbolic)
            element = d;
        else
            series = degree_specialize(d, {{"c", chi}});
    } else if (a.theorem == "dw-wreath") {
        const FiniteGroup g = require_target(a);
        const DiagElement d = dw_rhs_wreath(wreath_base_assignment(spec, std::max<std::size_t>(n, 1)), n);
        if (a.symbolic) {
            element = d;
        } else {
            // At X = pt the canonical function of B is |Hom(B,G)|/|G|.
            std::map<std::string, Rat> values;
            for (std::size_t r = 1; r <= std::max<std::size_t>(n, 1); ++r)
                for (const SubgroupClass &cls : index_subgroup_classes(spec, r))
                    values[canonical_symbol(cls.type)] =
                        Rat(static_cast<unsigned long>(count_homs(to_presentation(cls.type), g, opts))) /
                        Rat(static_cast<unsigned long>(g.order()));
            series = degree_specialize(d, values);
        }
    } else if (a.theorem == "bryan-fulman") {
        series = bryan_fulman_series(free_abelian_rank(spec, a.theorem), chi, n);
    } else if (a.theorem == "tamanoi") {
        series = tamanoi_series(free_abelian_rank(spec, a.theorem), chi, n);
    } else if (a.theorem == "muller") {
        series = wreath_total_via_formula(spec, require_target(a), n, opts);
    } else {
        throw UsageError("unknown theorem '" + a.theorem + "'");
    }

    if (a.format == "json") {
        ordered_json doc;
        doc["theorem"] = a.theorem;
        if (a.theorem != "macdonald")
            doc["group"] = spec.to_string();
        if (!a.target.empty())
            doc["target"] = a.target;
        doc["order"] = n;
        doc["result"] = element ? to_json(*element) : to_json(*series);
        out << doc.dump(2) << '\n';
    } else {
        out << (element ? to_text(*element) : format_coeffs(*series, ",")) << '\n';
    }
    return kOk;
}

// expand

struct ExpandArgs {
    std::string form = "dw";
    std::string group = "Z";
    std::size_t order = 0;
    std::string base = "c";
    std::string format = "text";
    SearchFlags search;
};

int run_expand(const ExpandArgs &a, std::ostream &out)
{
    const GroupSpec spec = GroupSpec::parse(a.group);
    const SearchOptions opts = a.search.options();
    const BaseElement alpha = BaseElement::symbol(a.base);
    const std::size_t n = a.order;
    const std::size_t jmax = std::max<std::size_t>(n, 1);
    DiagElement d(n);
    if (a.form == "dw") {
        d = dw_rhs(j_sequence(spec, jmax, opts), alpha, n);
    } else if (a.form == "lemma-dey") {
        d = lemma_dey_lhs(j_sequence(spec, jmax, opts), alpha, n);
    } else if (a.form == "hom-oracle") {
        d = hom_oracle_lhs(spec, alpha, n, opts);
    } else if (a.form == "euler") {
        const unsigned m = free_abelian_rank(spec, "euler form");
        std::map<std::size_t, Rat> exponents;
        for (std::size_t r = 1; r <= n; ++r)
            exponents[r] = Rat(free_abelian_subgroup_count(m - 1, r));
        d = euler_form(exponents, alpha, n);
    } else if (a.form == "log") {
        d = diag_log(dw_rhs(j_sequence(spec, jmax, opts), alpha, n));
    } else {
        throw UsageError("unknown form '" + a.form + "'");
    }
    if (a.format == "json")
        out << to_json(d).dump(2) << '\n';
    else
        out << to_text(d) << '\n';
    return kOk;
}

// verify

struct VerifyArgs {
    std::string suite = "all";
    std::vector<std::string> groups;
    std::vector<std::string> targets;
    std::vector<std::size_t> points;
    std::string format = "json";
    SearchFlags search;
};

int run_verify(const VerifyArgs &a, std::ostream &out, std::ostream &err)
{
    const Suite suite = parse_suite(a.suite);
    const SearchOptions opts = a.search.options();
    for (const auto &g : a.groups)
        (void)GroupSpec::parse(g);
    for (const auto &t : a.targets)
        (void)parse_finite_group(t);
    const MatrixFilter filter{a.groups, a.targets, a.points};
    const std::vector<VerifyReport> reports = run_suite(suite, filter, opts);

    std::size_t passed = 0, failed = 0, budget = 0, unsupported = 0;
    for (const auto &r : reports)
        switch (r.status) {
        case CheckStatus::pass:
            ++passed;
            break;
        case CheckStatus::fail:
            ++failed;
            break;
        case CheckStatus::budget:
            ++budget;
            break;
        case CheckStatus::unsupported:
            ++unsupported;
            break;
        }
    if (reports.empty())
        err << "warning: the filters select no cases; vacuous pass\n";

    if (a.format == "summary") {
        for (const auto &r : reports)
            out << to_string(r.status) << '\t' << r.suite << '\t' << r.name << '\n';
        out << "total " << reports.size() << ", passed " << passed << ", failed " << failed
            << ", budget-exceeded " << budget << ", unsupported " << unsupported << '\n';
    } else {
        ordered_json doc;
        doc["suite"] = a.suite;
        doc["budget"] = opts.budget;
        auto cases = ordered_json::array();
        for (const auto &r : reports)
            cases.push_back(to_json(r));
        doc["cases"] = std::move(cases);
        ordered_json summary;
        summary["total"] = reports.size();
        summary["passed"] = passed;
        summary["failed"] = failed;
        summary["budget_exceeded"] = budget;
        summary["unsupported"] = unsupported;
        doc["summary"] = std::move(summary);
        out << doc.dump(2) << '\n';
    }
    if (failed)
        return kInequality;
    if (budget)
        return kBudget;
    if (unsupported)
        return kUsage;
    return kOk;
}

// model

struct ModelArgs {
    std::string gset;
    std::size_t points = 0;
    std::string target = "1";
    std::string group = "Z";
    std::size_t n = 1;
    std::string format = "text";
    SearchFlags search;
};

GSet load_gset(const ModelArgs &a)
{
    if (a.gset.empty()) {
        if (a.points == 0)
            throw UsageError("model needs --gset or --points");
        return matrix_gset(parse_finite_group(a.target), a.points);
    }
    nlohmann::json j;
    const auto first = a.gset.find_first_not_of(" \t\n");
    if (first != std::string::npos && a.gset[first] == '{') {
        j = nlohmann::json::parse(a.gset);
    } else {
        std::ifstream in(a.gset);
        if (!in)
            throw UsageError("cannot read G-set file '" + a.gset + "'");
        j = nlohmann::json::parse(in);
    }
    return GSet::from_json(j);
}

int run_model(const ModelArgs &a, std::ostream &out)
{
    const GroupSpec spec = GroupSpec::parse(a.group);
    const SearchOptions opts = a.search.options();
    const GSet x = load_gset(a);
    ConstrFn f(x.size(), a.n);
    if (a.n == 0) {
        f[0] = 1;
    } else {
        PowerCache cache(x);
        const ConstrFn flat = canonical_function(a.n == 1 ? x : cache.power(a.n).as_gset(), spec, opts);
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] = flat[i];
    }
    if (a.format == "json") {
        ordered_json doc;
        doc["group"] = spec.to_string();
        doc["target"] = x.group().name();
        doc["points"] = x.size();
        doc["n"] = a.n;
        auto values = ordered_json::array();
        for (std::size_t i = 0; i < f.size(); ++i) {
            ordered_json v;
            v["tuple"] = tuple_to_string(f.decode(i));
            v["value"] = to_string(f[i]);
            values.push_back(std::move(v));
        }
        doc["values"] = std::move(values);
        doc["integral"] = to_string(f.integral());
        out << doc.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < f.size(); ++i)
            out << tuple_to_string(f.decode(i)) << ' ' << to_string(f[i]) << '\n';
        out << "integral " << to_string(f.integral()) << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact generating functions for symmetric products and wreath-product quotients", "orbichern"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "orbichern 0.1.0");

    JseqArgs jseq;
    auto *jseq_cmd = app.add_subcommand("jseq", "Subgroup counts j_r (and u_d with --conjugacy)");
    jseq_cmd->add_option("--group", jseq.group, "Source group: 1, Z^m, Z/d, Zp(p) or <a,b | ...>")->required();
    jseq_cmd->add_option("--max", jseq.max, "Largest index R")->required()->check(CLI::PositiveNumber);
    jseq_cmd->add_option("--format", jseq.format)->check(CLI::IsMember({"text", "json", "csv"}));
    jseq_cmd->add_flag("--conjugacy", jseq.conjugacy, "Also print u_d");
    jseq.search.attach(*jseq_cmd);

    HomcountArgs hc;
    auto *hc_cmd = app.add_subcommand("homcount", "Census of Hom(A, S_n) or Hom(A, G wr S_n) by cycle type");
    hc_cmd->add_option("--group", hc.group)->required();
    hc_cmd->add_option("--n", hc.n)->required();
    hc_cmd->add_option("--target", hc.target, "S for S_n, otherwise a finite group G for G wr S_n");
    hc_cmd->add_option("--format", hc.format)->check(CLI::IsMember({"json", "csv"}));
    hc.search.attach(*hc_cmd);

    GfArgs gf;
    auto *gf_cmd = app.add_subcommand("gf", "Generating functions");
    gf_cmd->add_option("--theorem", gf.theorem)
        ->required()
        ->check(CLI::IsMember({"dw", "dw-wreath", "macdonald", "bryan-fulman", "tamanoi", "muller"}));
    gf_cmd->add_option("--group", gf.group);
    gf_cmd->add_option("--target", gf.target);
    gf_cmd->add_option("--chi", gf.chi, "Euler characteristic (a rational)");
    gf_cmd->add_option("--order", gf.order, "Truncation order N")->required();
    gf_cmd->add_flag("--symbolic", gf.symbolic, "Print the diagonal-operator form");
    gf_cmd->add_option("--format", gf.format)->check(CLI::IsMember({"text", "json"}));
    gf.search.attach(*gf_cmd);

    ExpandArgs ex;
    auto *ex_cmd = app.add_subcommand("expand", "Symbolic expansions in the diagonal-operator algebra");
    ex_cmd->add_option("--form", ex.form)->check(CLI::IsMember({"dw", "lemma-dey", "hom-oracle", "euler", "log"}));
    ex_cmd->add_option("--group", ex.group);
    ex_cmd->add_option("--order", ex.order)->required();
    ex_cmd->add_option("--base", ex.base, "Name of the base class");
    ex_cmd->add_option("--format", ex.format)->check(CLI::IsMember({"text", "json"}));
    ex.search.attach(*ex_cmd);

    VerifyArgs ver;
    auto *ver_cmd = app.add_subcommand("verify", "Run verification suites over the default matrix");
    ver_cmd->add_option("--suite", ver.suite)
        ->check(CLI::IsMember({"theorem1", "theorem2", "lemma-dey", "lemma-deyg", "all"}));
    ver_cmd->add_option("--groups", ver.groups, "Restrict source groups")->delimiter(',');
    ver_cmd->add_option("--targets", ver.targets, "Restrict finite groups G")->delimiter(',');
    ver_cmd->add_option("--points", ver.points, "Restrict |X|")->delimiter(',');
    ver_cmd->add_option("--format", ver.format)->check(CLI::IsMember({"json", "summary"}));
    ver.search.attach(*ver_cmd);

    ModelArgs mod;
    auto *mod_cmd = app.add_subcommand("model", "Canonical functions on a finite G-set X^n");
    mod_cmd->add_option("--gset", mod.gset, "G-set JSON (inline or a file path)");
    mod_cmd->add_option("--points", mod.points, "Use the standard G-set on this many points");
    mod_cmd->add_option("--target", mod.target, "Finite group G for --points");
    mod_cmd->add_option("--group", mod.group, "Source group A");
    mod_cmd->add_option("--n", mod.n, "Power of X");
    mod_cmd->add_option("--format", mod.format)->check(CLI::IsMember({"text", "json"}));
    mod.search.attach(*mod_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (jseq_cmd->parsed())
            return run_jseq(jseq, out);
        if (hc_cmd->parsed())
            return run_homcount(hc, out);
        if (gf_cmd->parsed())
            return run_gf(gf, out);
        if (ex_cmd->parsed())
            return run_expand(ex, out);
        if (ver_cmd->parsed())
            return run_verify(ver, out, err);
        if (mod_cmd->parsed())
            return run_model(mod, out);
    } catch (const BudgetExceeded &e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const GroupTooLarge &e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error &e) {
        err << "error: " << e.what() << '\n';
        return kInequality;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace orbichern::cli
