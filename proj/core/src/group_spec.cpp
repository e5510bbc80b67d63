#include "orbichern/group_spec.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbichern {

bool is_prime(unsigned n)
{
    if (n < 2)
        return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

void validate(const GroupSpec::Variant &v)
{
    if (auto *fa = std::get_if<FreeAbelian>(&v); fa && fa->rank < 1)
        throw std::invalid_argument("Z^m needs m >= 1");
    if (auto *c = std::get_if<Cyclic>(&v); c && c->order < 1)
        throw std::invalid_argument("Z/d needs d >= 1");
    if (auto *p = std::get_if<PAdic>(&v); p && !is_prime(p->prime))
        throw std::invalid_argument("Zp(p) needs p prime");
    if (auto *pr = std::get_if<Presentation>(&v)) {
        for (std::size_t i = 0; i < pr->generators.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (pr->generators[i] == pr->generators[j])
                    throw std::invalid_argument("duplicate generator '" + pr->generators[i] + "'");
        for (const Word &w : pr->relators)
            for (const Letter &l : w)
                if (l.generator >= pr->generators.size())
                    throw std::invalid_argument("relator references an undeclared generator");
    }
}

Word inverse_word(const Word &w)
{
    Word r(w.rbegin(), w.rend());
    for (Letter &l : r)
        l.inverse = !l.inverse;
    return r;
}

Word power_word(const Word &w, long k)
{
    Word base = k < 0 ? inverse_word(w) : w;
    Word r;
    for (long i = 0; i < (k < 0 ? -k : k); ++i)
        r.insert(r.end(), base.begin(), base.end());
    return r;
}

// Recursive-descent parser for relator words.
//   word    := factor*
//   factor  := atom ('^' integer)?
//   atom    := letter | '(' word ')' | '[' word ',' word ']'
class WordParser {
public:
    WordParser(std::string_view text, const std::vector<std::string> &gens) : text_(text), gens_(gens) {}

    Word parse_relator()
    {
        Word lhs = word();
        if (peek() == '=') {
            ++pos_;
            Word rhs = word();
            Word inv = inverse_word(rhs);
            lhs.insert(lhs.end(), inv.begin(), inv.end());
        }
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return lhs;
    }

private:
    char peek()
    {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void skip()
    {
        while (pos_ < text_.size() && text_[pos_] == ' ')
            ++pos_;
    }
    [[noreturn]] void fail(const std::string &msg) const
    {
        throw std::invalid_argument("relator '" + std::string(text_) + "': " + msg);
    }

    Word word()
    {
        Word w;
        for (;;) {
            char c = peek();
            if (c == '(' || c == '[' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '1') {
                Word f = factor();
                w.insert(w.end(), f.begin(), f.end());
            } else {
                return w;
            }
        }
    }

    Word factor()
    {
        Word a = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            bool neg = false;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
                neg = text_[pos_++] == '-';
            if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
                fail("exponent expected after '^'");
            long k = 0;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
                k = k * 10 + (text_[pos_++] - '0');
            a = power_word(a, neg ? -k : k);
        }
        return a;
    }

    Word atom()
    {
        char c = peek();
        if (c == '1') {
            ++pos_;
            return {};
        }
        if (c == '(') {
            ++pos_;
            Word w = word();
            if (peek() != ')')
                fail("missing ')'");
            ++pos_;
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word u = word();
            if (peek() != ',')
                fail("commutator needs ','");
            ++pos_;
            Word v = word();
            if (peek() != ']')
                fail("missing ']'");
            ++pos_;
            // [u,v] = u v u^-1 v^-1
            Word r = u;
            r.insert(r.end(), v.begin(), v.end());
            Word ui = inverse_word(u), vi = inverse_word(v);
            r.insert(r.end(), ui.begin(), ui.end());
            r.insert(r.end(), vi.begin(), vi.end());
            return r;
        }
        const bool inverse = c >= 'A' && c <= 'Z';
        const std::string name(1, static_cast<char>(inverse ? c - 'A' + 'a' : c));
        auto it = std::find(gens_.begin(), gens_.end(), name);
        if (it == gens_.end())
            fail("undeclared generator '" + std::string(1, c) + "'");
        ++pos_;
        return {Letter{static_cast<std::uint32_t>(it - gens_.begin()), inverse}};
    }

    std::string_view text_;
    const std::vector<std::string> &gens_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split_top_level(std::string_view text)
{
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '[')
            ++depth;
        else if (c == ')' || c == ']')
            --depth;
        else if (c == ',' && depth == 0) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(text.substr(start));
    return parts;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    return s;
}

unsigned parse_unsigned(std::string_view s, std::string_view whole)
{
    s = trim(s);
    if (s.empty())
        throw std::invalid_argument("group spec '" + std::string(whole) + "': number expected");
    unsigned v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("group spec '" + std::string(whole) + "': malformed number");
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
}

} // namespace

GroupSpec::GroupSpec(Variant v) : value_(std::move(v))
{
    validate(value_);
}

bool GroupSpec::is_abelian_builtin() const
{
    return !std::holds_alternative<Presentation>(value_);
}

Presentation parse_presentation(std::string_view text)
{
    text = trim(text);
    if (text.size() < 2 || text.front() != '<' || text.back() != '>')
        throw std::invalid_argument("presentation must look like <a,b | relators>");
    std::string_view body = text.substr(1, text.size() - 2);
    const auto bar = body.find('|');
    std::string_view gens_text = trim(bar == std::string_view::npos ? body : body.substr(0, bar));
    std::string_view rels_text = bar == std::string_view::npos ? std::string_view{} : trim(body.substr(bar + 1));

    Presentation p;
    if (!gens_text.empty())
        for (auto g : split_top_level(gens_text)) {
            g = trim(g);
            if (g.size() != 1 || g[0] < 'a' || g[0] > 'z')
                throw std::invalid_argument("generator names are single lowercase letters, got '" +
                                            std::string(g) + "'");
            p.generators.emplace_back(g);
        }
    if (!rels_text.empty())
        for (auto r : split_top_level(rels_text)) {
            r = trim(r);
            if (r.empty())
                throw std::invalid_argument("empty relator");
            p.relators.push_back(WordParser(r, p.generators).parse_relator());
        }
    validate(p);
    return p;
}

GroupSpec GroupSpec::parse(std::string_view text)
{
    const std::string_view whole = text;
    text = trim(text);
    if (text == "1" || text == "{e}")
        return trivial();
    if (text == "Z")
        return free_abelian(1);
    if (!text.empty() && text.front() == '<')
        return presentation(parse_presentation(text));
    if (text.rfind("Z^", 0) == 0)
        return free_abelian(parse_unsigned(text.substr(2), whole));
    if (text.rfind("Z/", 0) == 0)
        return cyclic(parse_unsigned(text.substr(2), whole));
    if (text.rfind("Zp(", 0) == 0 && text.back() == ')')
        return padic(parse_unsigned(text.substr(3, text.size() - 4), whole));
    throw std::invalid_argument("unrecognised group spec '" + std::string(whole) + "'");
}

std::string word_to_string(const Presentation &p, const Word &w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (const Letter &l : w) {
        char c = p.generators[l.generator][0];
        s += l.inverse ? static_cast<char>(c - 'a' + 'A') : c;
    }
    return s;
}

std::string to_string(const Presentation &p)
{
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        os << (i ? "," : "") << p.generators[i];
    os << " | ";
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        os << (i ? ", " : "") << word_to_string(p, p.relators[i]);
    os << '>';
    return os.str();
}

std::string GroupSpec::to_string() const
{
    struct Visitor {
        std::string operator()(const TrivialGroup &) const { return "1"; }
        std::string operator()(const FreeAbelian &f) const
        {
            return f.rank == 1 ? "Z" : "Z^" + std::to_string(f.rank);
        }
        std::string operator()(const Cyclic &c) const { return "Z/" + std::to_string(c.order); }
        std::string operator()(const PAdic &p) const { return "Zp(" + std::to_string(p.prime) + ")"; }
        std::string operator()(const Presentation &p) const { return orbichern::to_string(p); }
    };
    return std::visit(Visitor{}, value_);
}

Presentation to_presentation(const GroupSpec &spec)
{
    struct Visitor {
        Presentation operator()(const TrivialGroup &) const { return {}; }
        Presentation operator()(const FreeAbelian &f) const
        {
            if (f.rank > 26)
                throw std::invalid_argument("Z^m presentation supports m <= 26");
            Presentation p;
            for (unsigned i = 0; i < f.rank; ++i)
                p.generators.emplace_back(1, static_cast<char>('a' + i));
            for (std::uint32_t i = 0; i < f.rank; ++i)
                for (std::uint32_t j = i + 1; j < f.rank; ++j)
                    p.relators.push_back({{i, false}, {j, false}, {i, true}, {j, true}});
            return p;
        }
        Presentation operator()(const Cyclic &c) const
        {
            Presentation p;
            p.generators = {"a"};
            p.relators.push_back(Word(c.order, Letter{0, false}));
            return p;
        }
        Presentation operator()(const PAdic &) const
        {
            throw std::invalid_argument("Zp(p) has no finite presentation; only its closed-form "
                                        "subgroup counts are available");
        }
        Presentation operator()(const Presentation &p) const { return p; }
    };
    return std::visit(Visitor{}, spec.value());
}

} // namespace orbichern
