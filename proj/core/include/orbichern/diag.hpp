#pragma once

#include "orbichern/rational.hpp"
#include "orbichern/series.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace orbichern {

/// Formal Q-linear combination of base classes such as "1_X" or "C_*(X)".
class BaseElement {
public:
    BaseElement() = default;
    static BaseElement symbol(const std::string &name, const Rat &coeff = Rat(1));

    BaseElement &add(const std::string &name, const Rat &coeff);
    const std::map<std::string, Rat> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BaseElement &operator+=(const BaseElement &rhs);
    BaseElement &operator*=(const Rat &s);
    friend BaseElement operator+(BaseElement a, const BaseElement &b) { return a += b; }
    friend BaseElement operator*(const Rat &s, BaseElement a) { return a *= s; }
    friend BaseElement operator-(BaseElement a) { return a *= Rat(-1); }
    bool operator==(const BaseElement &) const = default;

private:
    std::map<std::string, Rat> terms_;
};

/// D^k(base)^power inside a monomial.
struct DiagFactor {
    unsigned k = 1;
    std::string base;
    unsigned power = 1;
    auto operator<=>(const DiagFactor &) const = default;
};

/// Product of diagonal generators D^k(c), kept sorted by (k, base name).
class DiagMonomial {
public:
    DiagMonomial() = default; // the unit
    static DiagMonomial generator(unsigned k, const std::string &base, unsigned power = 1);

    std::span<const DiagFactor> factors() const { return factors_; }
    std::size_t weight() const;
    std::size_t length() const;
    bool is_unit() const { return factors_.empty(); }

    DiagMonomial operator*(const DiagMonomial &rhs) const;
    /// e.g. "D1(c)^2·D2(c)"; the unit renders as "1".
    std::string to_string() const;

    auto operator<=>(const DiagMonomial &) const = default;

private:
    std::vector<DiagFactor> factors_;
};

/// Element of the free commutative graded Q-algebra on the D^k(c), truncated
/// at total weight N. The weight-n slice is the z^n coefficient.
class DiagElement {
public:
    using Terms = std::map<DiagMonomial, Rat>;

    explicit DiagElement(std::size_t trunc) : trunc_(trunc) {}
    static DiagElement unit(std::size_t trunc);
    static DiagElement generator(std::size_t trunc, unsigned k, const std::string &base,
                                 const Rat &coeff = Rat(1));

    std::size_t trunc() const { return trunc_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff*mono; monomials above the truncation weight are dropped.
    DiagElement &add_term(const DiagMonomial &mono, const Rat &coeff);
    Rat coefficient(const DiagMonomial &mono) const;
    /// Only the weight-n terms.
    DiagElement slice(std::size_t n) const;
    /// Same terms, reinterpreted at a lower truncation order.
    DiagElement truncated(std::size_t trunc) const;

    DiagElement &operator+=(const DiagElement &rhs);
    DiagElement &operator-=(const DiagElement &rhs);
    DiagElement &operator*=(const Rat &s);
    friend DiagElement operator+(DiagElement a, const DiagElement &b) { return a += b; }
    friend DiagElement operator-(DiagElement a, const DiagElement &b) { return a -= b; }
    friend DiagElement operator*(const Rat &s, DiagElement a) { return a *= s; }

    bool operator==(const DiagElement &) const = default;

private:
    std::size_t trunc_;
    Terms terms_;
};

/// The commutative product; weights add and overflow past trunc is dropped.
DiagElement odot(const DiagElement &a, const DiagElement &b);
DiagElement odot_power(const DiagElement &a, unsigned exponent);

/// exp(T) = sum T^n/n!; needs zero weight-0 part.
DiagElement diag_exp(const DiagElement &a);
/// log(1+T); needs weight-0 part equal to 1.
DiagElement diag_log(const DiagElement &a);

/// Standard operator U = sum_k v_k z^k D^k, stored as k -> v_k (k >= 1).
using StandardOperator = std::map<std::size_t, Rat>;

/// D^k(alpha) = sum_c a_c D^k(c).
DiagElement apply_diagonal(unsigned k, const BaseElement &alpha, std::size_t trunc);
/// U(alpha) = sum_k v_k D^k(alpha), linear in alpha.
DiagElement apply_standard(const StandardOperator &u, const BaseElement &alpha, std::size_t trunc);
/// Log(1+U) computed in Q[[zD]].
StandardOperator log_one_plus(const StandardOperator &u, std::size_t trunc);
/// (1+U)^alpha := exp(Log(1+U)(alpha)).
DiagElement power_notation(const StandardOperator &u, const BaseElement &alpha, std::size_t trunc);

/// Degree map to Q[[z]]: prod D^{k_i}(c_i) goes to prod value(c_i) z^{sum k_i}.
Series degree_specialize(const DiagElement &a, const std::map<std::string, Rat> &values);

/// "1 + z·D1(c) + z^2·( 1/2·D1(c)^2 + 1/2·D2(c) )"
std::string to_text(const DiagElement &a);
nlohmann::ordered_json to_json(const DiagElement &a);
DiagElement diag_from_json(const nlohmann::json &j);

} // namespace orbichern
