#include "orbichern/series.hpp"

#include <sstream>

namespace orbichern {

TruncationMismatch::TruncationMismatch(std::size_t a, std::size_t b)
    : std::invalid_argument("truncation orders differ: " + std::to_string(a) + " vs " +
                            std::to_string(b))
{
}

namespace {

void require_same(const Series &a, const Series &b)
{
    if (a.trunc() != b.trunc())
        throw TruncationMismatch(a.trunc(), b.trunc());
}

} // namespace

Series::Series(std::size_t trunc) : coeffs_(trunc + 1) {}

Series::Series(std::size_t trunc, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() > trunc + 1)
        throw std::invalid_argument("more coefficients than the truncation order admits");
    coeffs_.resize(trunc + 1);
}

Series Series::one(std::size_t trunc)
{
    return monomial(trunc, 0);
}

Series Series::monomial(std::size_t trunc, std::size_t k, const Rat &c)
{
    Series s(trunc);
    if (k <= trunc)
        s.coeffs_[k] = c;
    return s;
}

const Rat &Series::operator[](std::size_t k) const
{
    if (k > trunc())
        throw std::out_of_range("coefficient z^" + std::to_string(k) + " beyond truncation order " +
                                std::to_string(trunc()));
    return coeffs_[k];
}

Series &Series::operator+=(const Series &rhs)
{
    require_same(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Series &Series::operator-=(const Series &rhs)
{
    require_same(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Series &Series::operator*=(const Rat &scalar)
{
    for (auto &c : coeffs_)
        c *= scalar;
    return *this;
}

Series operator*(const Series &a, const Series &b)
{
    return series_mul(a, b);
}

Series series_mul(const Series &a, const Series &b)
{
    require_same(a, b);
    const std::size_t n = a.trunc();
    std::vector<Rat> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            out[i + j] += a[i] * b[j];
    }
    return Series(n, std::move(out));
}

Series series_inverse(const Series &a)
{
    if (a[0] == 0)
        throw std::domain_error("series_inverse: zero constant term");
    const std::size_t n = a.trunc();
    std::vector<Rat> b(n + 1);
    const Rat inv0 = 1 / a[0];
    b[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat acc;
        for (std::size_t i = 1; i <= k; ++i)
            acc += a[i] * b[k - i];
        b[k] = -acc * inv0;
    }
    return Series(n, std::move(b));
}

// b = exp(a)  <=>  k b_k = sum_{i=1..k} i a_i b_{k-i}
Series series_exp(const Series &a)
{
    if (a[0] != 0)
        throw std::domain_error("series_exp: constant term must be 0");
    const std::size_t n = a.trunc();
    std::vector<Rat> b(n + 1);
    b[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat acc;
        for (std::size_t i = 1; i <= k; ++i)
            if (a[i] != 0)
                acc += Rat(static_cast<unsigned long>(i)) * a[i] * b[k - i];
        b[k] = acc / Rat(static_cast<unsigned long>(k));
    }
    return Series(n, std::move(b));
}

// l = log(a)  <=>  k l_k = k a_k - sum_{i=1..k-1} i l_i a_{k-i}
Series series_log(const Series &a)
{
    if (a[0] != 1)
        throw std::domain_error("series_log: constant term must be 1");
    const std::size_t n = a.trunc();
    std::vector<Rat> l(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        Rat acc = Rat(static_cast<unsigned long>(k)) * a[k];
        for (std::size_t i = 1; i < k; ++i)
            if (a[k - i] != 0)
                acc -= Rat(static_cast<unsigned long>(i)) * l[i] * a[k - i];
        l[k] = acc / Rat(static_cast<unsigned long>(k));
    }
    return Series(n, std::move(l));
}

// b = a^e with a_0 = 1  <=>  k b_k = sum_{i=1..k} (e i - (k - i)) a_i b_{k-i}
Series series_pow_rat(const Series &a, const Rat &e)
{
    if (a[0] != 1)
        throw std::domain_error("series_pow_rat: constant term must be 1");
    const std::size_t n = a.trunc();
    std::vector<Rat> b(n + 1);
    b[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (a[i] == 0)
                continue;
            const Rat weight = e * Rat(static_cast<unsigned long>(i)) -
                               Rat(static_cast<unsigned long>(k - i));
            acc += weight * a[i] * b[k - i];
        }
        b[k] = acc / Rat(static_cast<unsigned long>(k));
    }
    return Series(n, std::move(b));
}

Series euler_product(const std::map<std::size_t, Rat> &exponents, std::size_t trunc)
{
    Series out = Series::one(trunc);
    for (const auto &[r, a] : exponents) {
        if (r == 0)
            throw std::invalid_argument("euler_product: exponent index must be >= 1");
        if (r > trunc || a == 0)
            continue;
        Series factor = Series::one(trunc) - Series::monomial(trunc, r);
        out = out * series_pow_rat(factor, -a);
    }
    return out;
}

nlohmann::ordered_json to_json(const Series &s)
{
    nlohmann::ordered_json j;
    j["trunc"] = s.trunc();
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto &c : s.coeffs())
        coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
    j["coeffs"] = std::move(coeffs);
    return j;
}

Series series_from_json(const nlohmann::json &j)
{
    const auto trunc = j.at("trunc").get<std::size_t>();
    const auto &arr = j.at("coeffs");
    if (arr.size() != trunc + 1)
        throw std::invalid_argument("series JSON: coeffs length must equal trunc+1");
    std::vector<Rat> coeffs;
    coeffs.reserve(arr.size());
    for (const auto &pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("series JSON: each coefficient is [\"num\",\"den\"]");
        coeffs.push_back(parse_rat(pair[0].get<std::string>() + "/" + pair[1].get<std::string>()));
    }
    return Series(trunc, std::move(coeffs));
}

std::string format_coeffs(const Series &s, const std::string &sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i <= s.trunc(); ++i) {
        if (i)
            os << sep;
        os << to_string(s[i]);
    }
    return os.str();
}

} // namespace orbichern
