#include "orbichern/diag.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbichern {

// BaseElement

BaseElement BaseElement::symbol(const std::string &name, const Rat &coeff)
{
    BaseElement b;
    b.add(name, coeff);
    return b;
}

BaseElement &BaseElement::add(const std::string &name, const Rat &coeff)
{
    if (name.empty())
        throw std::invalid_argument("base class label must be non-empty");
    Rat &slot = terms_[name];
    slot += coeff;
    if (slot == 0)
        terms_.erase(name);
    return *this;
}

BaseElement &BaseElement::operator+=(const BaseElement &rhs)
{
    for (const auto &[name, c] : rhs.terms_)
        add(name, c);
    return *this;
}

BaseElement &BaseElement::operator*=(const Rat &s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[name, c] : terms_)
        c *= s;
    return *this;
}

// DiagMonomial

DiagMonomial DiagMonomial::generator(unsigned k, const std::string &base, unsigned power)
{
    if (k == 0)
        throw std::invalid_argument("diagonal generators have k >= 1");
    DiagMonomial m;
    if (power > 0)
        m.factors_.push_back(DiagFactor{k, base, power});
    return m;
}

std::size_t DiagMonomial::weight() const
{
    std::size_t w = 0;
    for (const auto &f : factors_)
        w += std::size_t{f.k} * f.power;
    return w;
}

std::size_t DiagMonomial::length() const
{
    std::size_t l = 0;
    for (const auto &f : factors_)
        l += f.power;
    return l;
}

DiagMonomial DiagMonomial::operator*(const DiagMonomial &rhs) const
{
    DiagMonomial out;
    out.factors_.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin(), b = rhs.factors_.begin();
    auto key = [](const DiagFactor &f) { return std::tie(f.k, f.base); };
    while (a != factors_.end() || b != rhs.factors_.end()) {
        if (b == rhs.factors_.end() || (a != factors_.end() && key(*a) < key(*b))) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || key(*b) < key(*a)) {
            out.factors_.push_back(*b++);
        } else {
            DiagFactor f = *a++;
            f.power += (b++)->power;
            out.factors_.push_back(std::move(f));
        }
    }
    return out;
}

std::string DiagMonomial::to_string() const
{
    if (factors_.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto &f = factors_[i];
        os << (i ? "·" : "") << 'D' << f.k << '(' << f.base << ')';
        if (f.power > 1)
            os << '^' << f.power;
    }
    return os.str();
}

// DiagElement

DiagElement DiagElement::unit(std::size_t trunc)
{
    DiagElement e(trunc);
    e.add_term(DiagMonomial(), Rat(1));
    return e;
}

DiagElement DiagElement::generator(std::size_t trunc, unsigned k, const std::string &base, const Rat &coeff)
{
    DiagElement e(trunc);
    e.add_term(DiagMonomial::generator(k, base), coeff);
    return e;
}

DiagElement &DiagElement::add_term(const DiagMonomial &mono, const Rat &coeff)
{
    if (coeff == 0 || mono.weight() > trunc_)
        return *this;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

Rat DiagElement::coefficient(const DiagMonomial &mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
}

DiagElement DiagElement::slice(std::size_t n) const
{
    DiagElement out(trunc_);
    for (const auto &[m, c] : terms_)
        if (m.weight() == n)
            out.terms_.emplace(m, c);
    return out;
}

DiagElement DiagElement::truncated(std::size_t trunc) const
{
    if (trunc > trunc_)
        throw std::invalid_argument("cannot raise the truncation order of an element");
    DiagElement out(trunc);
    for (const auto &[m, c] : terms_)
        out.add_term(m, c);
    return out;
}

namespace {

void require_same(const DiagElement &a, const DiagElement &b)
{
    if (a.trunc() != b.trunc())
        throw TruncationMismatch(a.trunc(), b.trunc());
}

// Weight slices as plain term maps.
std::vector<DiagElement::Terms> by_weight(const DiagElement &a)
{
    std::vector<DiagElement::Terms> out(a.trunc() + 1);
    for (const auto &[m, c] : a.terms())
        out[m.weight()].emplace(m, c);
    return out;
}

void accumulate_product(DiagElement::Terms &into, const DiagElement::Terms &x, const DiagElement::Terms &y,
                        const Rat &scale)
{
    for (const auto &[mx, cx] : x)
        for (const auto &[my, cy] : y) {
            const Rat c = scale * cx * cy;
            auto [it, inserted] = into.try_emplace(mx * my, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0)
                    into.erase(it);
            }
        }
}

DiagElement from_slices(std::size_t trunc, const std::vector<DiagElement::Terms> &slices)
{
    DiagElement out(trunc);
    for (const auto &s : slices)
        for (const auto &[m, c] : s)
            out.add_term(m, c);
    return out;
}

} // namespace

DiagElement &DiagElement::operator+=(const DiagElement &rhs)
{
    require_same(*this, rhs);
    for (const auto &[m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

DiagElement &DiagElement::operator-=(const DiagElement &rhs)
{
    require_same(*this, rhs);
    for (const auto &[m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

DiagElement &DiagElement::operator*=(const Rat &s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, c] : terms_)
        c *= s;
    return *this;
}

DiagElement odot(const DiagElement &a, const DiagElement &b)
{
    require_same(a, b);
    DiagElement out(a.trunc());
    for (const auto &[ma, ca] : a.terms())
        for (const auto &[mb, cb] : b.terms())
            if (ma.weight() + mb.weight() <= a.trunc())
                out.add_term(ma * mb, ca * cb);
    return out;
}

DiagElement odot_power(const DiagElement &a, unsigned exponent)
{
    DiagElement result = DiagElement::unit(a.trunc());
    DiagElement base = a;
    while (exponent) {
        if (exponent & 1u)
            result = odot(result, base);
        exponent >>= 1;
        if (exponent)
            base = odot(base, base);
    }
    return result;
}

// With theta the weight derivation (theta x = weight(x) x on homogeneous x),
// E = exp(T) satisfies theta E = theta T . E, so n E_n = sum_k k T_k E_{n-k}.
DiagElement diag_exp(const DiagElement &a)
{
    const auto t = by_weight(a);
    if (!t[0].empty())
        throw std::domain_error("diag_exp: weight-0 part must vanish");
    const std::size_t n = a.trunc();
    std::vector<DiagElement::Terms> e(n + 1);
    e[0].emplace(DiagMonomial(), Rat(1));
    for (std::size_t w = 1; w <= n; ++w)
        for (std::size_t k = 1; k <= w; ++k)
            if (!t[k].empty())
                accumulate_product(e[w], t[k], e[w - k],
                                   Rat(static_cast<unsigned long>(k)) / Rat(static_cast<unsigned long>(w)));
    return from_slices(n, e);
}

// L = log(A) with A_0 = 1: n L_n = n A_n - sum_{k=1}^{n-1} k L_k A_{n-k}.
DiagElement diag_log(const DiagElement &a)
{
    const auto s = by_weight(a);
    if (s[0].size() != 1 || s[0].begin()->second != 1)
        throw std::domain_error("diag_log: weight-0 part must be the unit");
    const std::size_t n = a.trunc();
    std::vector<DiagElement::Terms> l(n + 1);
    for (std::size_t w = 1; w <= n; ++w) {
        l[w] = s[w];
        for (std::size_t k = 1; k < w; ++k)
            if (!l[k].empty() && !s[w - k].empty())
                accumulate_product(l[w], l[k], s[w - k],
                                   -Rat(static_cast<unsigned long>(k)) / Rat(static_cast<unsigned long>(w)));
    }
    return from_slices(n, l);
}

DiagElement apply_diagonal(unsigned k, const BaseElement &alpha, std::size_t trunc)
{
    DiagElement out(trunc);
    for (const auto &[name, c] : alpha.terms())
        out.add_term(DiagMonomial::generator(k, name), c);
    return out;
}

DiagElement apply_standard(const StandardOperator &u, const BaseElement &alpha, std::size_t trunc)
{
    DiagElement out(trunc);
    for (const auto &[k, v] : u) {
        if (k == 0)
            throw std::invalid_argument("standard operators here have no D^0 term");
        if (k > trunc || v == 0)
            continue;
        out += v * apply_diagonal(static_cast<unsigned>(k), alpha, trunc);
    }
    return out;
}

StandardOperator log_one_plus(const StandardOperator &u, std::size_t trunc)
{
    std::vector<Rat> coeffs(trunc + 1);
    coeffs[0] = 1;
    for (const auto &[k, v] : u) {
        if (k == 0)
            throw std::invalid_argument("power notation needs U with zero constant term");
        if (k <= trunc)
            coeffs[k] += v;
    }
    const Series l = series_log(Series(trunc, std::move(coeffs)));
    StandardOperator out;
    for (std::size_t k = 1; k <= trunc; ++k)
        if (l[k] != 0)
            out[k] = l[k];
    return out;
}

DiagElement power_notation(const StandardOperator &u, const BaseElement &alpha, std::size_t trunc)
{
    return diag_exp(apply_standard(log_one_plus(u, trunc), alpha, trunc));
}

Series degree_specialize(const DiagElement &a, const std::map<std::string, Rat> &values)
{
    std::vector<Rat> coeffs(a.trunc() + 1);
    for (const auto &[m, c] : a.terms()) {
        Rat v = c;
        for (const auto &f : m.factors()) {
            auto it = values.find(f.base);
            if (it == values.end())
                throw std::invalid_argument("degree_specialize: unassigned base class '" + f.base + "'");
            v *= pow(it->second, f.power);
        }
        coeffs[m.weight()] += v;
    }
    return Series(a.trunc(), std::move(coeffs));
}

namespace {

std::string term_text(const Rat &abs_coeff, const DiagMonomial &m)
{
    if (m.is_unit())
        return to_string(abs_coeff);
    if (abs_coeff == 1)
        return m.to_string();
    return to_string(abs_coeff) + "·" + m.to_string();
}

} // namespace

std::string to_text(const DiagElement &a)
{
    const auto slices = by_weight(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t w = 0; w < slices.size(); ++w) {
        const auto &s = slices[w];
        if (s.empty())
            continue;
        const std::string zpow = w == 0 ? "" : (w == 1 ? std::string("z·") : "z^" + std::to_string(w) + "·");
        if (s.size() == 1) {
            const auto &[m, c] = *s.begin();
            const bool neg = c < 0;
            const Rat mag = neg ? Rat(-c) : c;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            if (w == 0)
                os << to_string(mag);
            else
                os << zpow << term_text(mag, m);
        } else {
            os << (first ? "" : " + ") << zpow << "( ";
            bool inner_first = true;
            for (const auto &[m, c] : s) {
                const bool neg = c < 0;
                const Rat mag = neg ? Rat(-c) : c;
                if (inner_first)
                    os << (neg ? "-" : "");
                else
                    os << (neg ? " - " : " + ");
                os << term_text(mag, m);
                inner_first = false;
            }
            os << " )";
        }
        first = false;
    }
    if (first)
        return "0";
    return os.str();
}

nlohmann::ordered_json to_json(const DiagElement &a)
{
    nlohmann::ordered_json j;
    j["trunc"] = a.trunc();
    auto terms = nlohmann::ordered_json::array();
    for (const auto &[m, c] : a.terms()) {
        nlohmann::ordered_json t;
        t["coeff"] = {c.get_num().get_str(), c.get_den().get_str()};
        auto mono = nlohmann::ordered_json::array();
        for (const auto &f : m.factors())
            for (unsigned p = 0; p < f.power; ++p) {
                nlohmann::ordered_json fj;
                fj["k"] = f.k;
                fj["base"] = f.base;
                mono.push_back(std::move(fj));
            }
        t["mono"] = std::move(mono);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

DiagElement diag_from_json(const nlohmann::json &j)
{
    DiagElement out(j.at("trunc").get<std::size_t>());
    for (const auto &t : j.at("terms")) {
        const auto &cj = t.at("coeff");
        const Rat c = parse_rat(cj.at(0).get<std::string>() + "/" + cj.at(1).get<std::string>());
        DiagMonomial m;
        for (const auto &f : t.at("mono"))
            m = m * DiagMonomial::generator(f.at("k").get<unsigned>(), f.at("base").get<std::string>());
        if (m.weight() > out.trunc())
            throw std::invalid_argument("diag JSON: monomial weight exceeds trunc");
        out.add_term(m, c);
    }
    return out;
}

} // namespace orbichern
