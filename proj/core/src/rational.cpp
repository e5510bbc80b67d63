#include "orbichern/rational.hpp"

#include <stdexcept>

namespace orbichern {

Rat make_rat(const Integer &num, const Integer &den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size())
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return Integer(s, 10);
}

} // namespace

Rat parse_rat(std::string_view text)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_integer(text, text));
    return make_rat(parse_integer(text.substr(0, slash), text),
                    parse_integer(text.substr(slash + 1), text));
}

std::string to_string(const Rat &q)
{
    return q.get_str(10);
}

std::string to_string(const Integer &z)
{
    return z.get_str(10);
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat pow(const Rat &base, unsigned long exponent)
{
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return r;
}

} // namespace orbichern
