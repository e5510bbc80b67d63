#pragma once

#include "orbichern/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbichern {

/// Raised when two operands carry different truncation orders.
class TruncationMismatch : public std::invalid_argument {
public:
    TruncationMismatch(std::size_t a, std::size_t b);
};

/// Truncated formal power series over Q: coefficients of z^0..z^N.
///
/// Coefficients above the truncation order are undefined, not zero, so the
/// accessors reject indices past trunc().
class Series {
public:
    explicit Series(std::size_t trunc);
    Series(std::size_t trunc, std::vector<Rat> coeffs);

    static Series one(std::size_t trunc);
    static Series monomial(std::size_t trunc, std::size_t k, const Rat &c = Rat(1));

    std::size_t trunc() const { return coeffs_.size() - 1; }
    const Rat &operator[](std::size_t k) const;
    std::span<const Rat> coeffs() const { return coeffs_; }

    Series &operator+=(const Series &rhs);
    Series &operator-=(const Series &rhs);
    Series &operator*=(const Rat &scalar);

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator*(Series a, const Rat &s) { return a *= s; }
    friend Series operator*(const Rat &s, Series a) { return a *= s; }
    friend Series operator*(const Series &a, const Series &b);

    bool operator==(const Series &) const = default;

private:
    std::vector<Rat> coeffs_;
};

Series series_mul(const Series &a, const Series &b);
/// Multiplicative inverse; the constant term must be nonzero.
Series series_inverse(const Series &a);
/// Requires a zero constant term.
Series series_exp(const Series &a);
/// Requires constant term 1.
Series series_log(const Series &a);
/// a^e for constant term 1, via the power recurrence a*(b') = e*(a')*b.
Series series_pow_rat(const Series &a, const Rat &e);
/// prod_{r=1..N} (1 - z^r)^(-a_r); missing exponents are zero.
Series euler_product(const std::map<std::size_t, Rat> &exponents, std::size_t trunc);

nlohmann::ordered_json to_json(const Series &s);
Series series_from_json(const nlohmann::json &j);

/// Coefficients joined by `sep`, e.g. "1,2,3".
std::string format_coeffs(const Series &s, const std::string &sep = ",");

} // namespace orbichern
