#include "orbichern/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbichern {

Perm::Perm(std::size_t degree) : images_(degree)
{
    for (std::size_t i = 0; i < degree; ++i)
        images_[i] = static_cast<Point>(i);
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size());
    for (Point p : images_) {
        if (p >= images_.size() || seen[p])
            throw std::invalid_argument("image list is not a permutation");
        seen[p] = true;
    }
}

Perm Perm::parse_cycles(std::string_view text, std::size_t degree)
{
    std::vector<std::vector<Point>> cycles;
    std::size_t max_point = 0;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
            ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("cycle notation: expected '(' in '" + std::string(text) + "'");
        ++i;
        std::vector<Point> cycle;
        for (;;) {
            while (i < text.size() && (text[i] == ' ' || text[i] == ','))
                ++i;
            if (i >= text.size())
                throw std::invalid_argument("cycle notation: unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (text[i] < '0' || text[i] > '9')
                throw std::invalid_argument("cycle notation: unexpected '" + std::string(1, text[i]) + "'");
            std::size_t v = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9')
                v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
            if (v == 0)
                throw std::invalid_argument("cycle notation: points are 1-based");
            max_point = std::max(max_point, v);
            cycle.push_back(static_cast<Point>(v - 1));
        }
        cycles.push_back(std::move(cycle));
        skip_ws();
    }
    if (degree == 0)
        degree = std::max<std::size_t>(max_point, 1);
    if (max_point > degree)
        throw std::invalid_argument("cycle notation: point exceeds degree");

    Perm p(degree);
    std::vector<bool> used(degree);
    for (const auto &cycle : cycles) {
        for (Point x : cycle) {
            if (used[x])
                throw std::invalid_argument("cycle notation: cycles are not disjoint");
            used[x] = true;
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            p.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    return p;
}

Perm Perm::operator*(const Perm &rhs) const
{
    if (degree() != rhs.degree())
        throw std::invalid_argument("composing permutations of different degree");
    std::vector<Point> out(degree());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = images_[rhs.images_[i]];
    Perm r;
    r.images_ = std::move(out);
    return r;
}

Perm Perm::inverse() const
{
    Perm r;
    r.images_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i)
        r.images_[images_[i]] = static_cast<Point>(i);
    return r;
}

bool Perm::is_identity() const
{
    for (std::size_t i = 0; i < degree(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

Perm Perm::extended(std::size_t degree) const
{
    if (degree < this->degree())
        throw std::invalid_argument("cannot shrink a permutation");
    Perm r(degree);
    std::copy(images_.begin(), images_.end(), r.images_.begin());
    return r;
}

std::vector<std::vector<Point>> Perm::cycles() const
{
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(degree());
    for (Point start = 0; start < degree(); ++start) {
        if (seen[start])
            continue;
        std::vector<Point> cycle;
        for (Point x = start; !seen[x]; x = images_[x]) {
            seen[x] = true;
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Perm::to_string() const
{
    std::ostringstream os;
    bool any = false;
    for (const auto &cycle : cycles()) {
        if (cycle.size() < 2)
            continue;
        any = true;
        os << '(';
        for (std::size_t k = 0; k < cycle.size(); ++k)
            os << (k ? " " : "") << cycle[k] + 1;
        os << ')';
    }
    if (!any)
        os << "()";
    return os.str();
}

std::size_t PermHash::operator()(const Perm &p) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (Point x : p.images()) {
        h ^= x;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::vector<Perm> parse_perm_list(std::string_view text, std::size_t degree)
{
    std::vector<std::string_view> parts;
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(')
            ++depth;
        else if (text[i] == ')')
            --depth;
        else if (text[i] == ',' && depth == 0) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(text.substr(start));

    std::vector<Perm> perms;
    std::size_t max_degree = degree;
    for (auto part : parts) {
        perms.push_back(Perm::parse_cycles(part));
        max_degree = std::max(max_degree, perms.back().degree());
    }
    for (auto &p : perms)
        p = p.extended(max_degree);
    return perms;
}

} // namespace orbichern
