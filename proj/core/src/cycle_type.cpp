#include "orbichern/cycle_type.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbichern {

CycleType::CycleType(std::vector<unsigned> multiplicities) : c_(std::move(multiplicities))
{
    if (weight() != c_.size())
        throw std::invalid_argument("cycle type weight sum k*c_k must equal its length n");
}

CycleType CycleType::from_orbit_sizes(std::size_t n, std::span<const std::size_t> sizes)
{
    std::vector<unsigned> c(n);
    for (std::size_t s : sizes) {
        if (s == 0 || s > n)
            throw std::invalid_argument("orbit size out of range");
        ++c[s - 1];
    }
    return CycleType(std::move(c));
}

std::size_t CycleType::weight() const
{
    std::size_t w = 0;
    for (std::size_t k = 0; k < c_.size(); ++k)
        w += (k + 1) * c_[k];
    return w;
}

std::size_t CycleType::length() const
{
    std::size_t l = 0;
    for (unsigned x : c_)
        l += x;
    return l;
}

Integer CycleType::cardinality() const
{
    Integer den = 1;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        Integer kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), k + 1, c_[k]);
        den *= kp * factorial(c_[k]);
    }
    return factorial(c_.size()) / den;
}

Integer CycleType::block_symmetry() const
{
    Integer q = 1;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        Integer fp;
        mpz_pow_ui(fp.get_mpz_t(), factorial(k + 1).get_mpz_t(), c_[k]);
        q *= fp * factorial(c_[k]);
    }
    return q;
}

unsigned CycleType::operator[](std::size_t k) const
{
    if (k == 0)
        throw std::out_of_range("cycle type entries are 1-based");
    return k <= c_.size() ? c_[k - 1] : 0;
}

std::string CycleType::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < c_.size(); ++k)
        os << (k ? "," : "") << c_[k];
    os << ']';
    return os.str();
}

namespace {

void partitions(std::size_t remaining, std::size_t max_part, std::vector<unsigned> &c,
                std::vector<CycleType> &out)
{
    if (remaining == 0) {
        out.emplace_back(c);
        return;
    }
    for (std::size_t part = std::min(max_part, remaining); part >= 1; --part) {
        ++c[part - 1];
        partitions(remaining - part, part, c, out);
        --c[part - 1];
    }
}

} // namespace

std::vector<CycleType> cycle_types(std::size_t n)
{
    std::vector<CycleType> out;
    std::vector<unsigned> c(n);
    partitions(n, n, c, out);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

} // namespace orbichern
