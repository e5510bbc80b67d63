#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbichern {

using Point = std::uint32_t;

/// Permutation of {0..degree-1}. Text forms are 1-based cycle notation.
///
/// Products compose right to left: (p * q)(i) = p(q(i)), so the induced
/// action on tuples, (p.x)_i = x_{p^{-1}(i)}, is a left action.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t degree);
    explicit Perm(std::vector<Point> images);

    /// Parses "(1 2 3)(4 5)" or "()" ; degree 0 means "largest point mentioned".
    static Perm parse_cycles(std::string_view text, std::size_t degree = 0);

    std::size_t degree() const { return images_.size(); }
    Point operator()(Point i) const { return images_[i]; }
    std::span<const Point> images() const { return images_; }

    Perm operator*(const Perm &rhs) const;
    Perm inverse() const;
    bool is_identity() const;
    /// Same permutation on a larger point set (extra points fixed).
    Perm extended(std::size_t degree) const;

    std::vector<std::vector<Point>> cycles() const;
    std::string to_string() const;

    auto operator<=>(const Perm &) const = default;

private:
    std::vector<Point> images_;
};

struct PermHash {
    std::size_t operator()(const Perm &p) const noexcept;
};

/// Parses a comma-separated list of cycle-notation permutations,
/// e.g. "(1 2 3),(1 2)", padding every entry to the common degree.
std::vector<Perm> parse_perm_list(std::string_view text, std::size_t degree = 0);

} // namespace orbichern
