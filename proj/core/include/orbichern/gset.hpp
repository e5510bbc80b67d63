#pragma once

#include "orbichern/group.hpp"
#include "orbichern/rational.hpp"
#include "orbichern/wreath.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace orbichern {

/// A finite set {0..k-1} with a left action of a finite permutation group.
/// The action is stored as one image table per group element.
class GSet {
public:
    /// Extends the generator tables to the whole group by walking the Cayley
    /// graph; throws std::invalid_argument if they do not define an action.
    static GSet from_generator_action(FiniteGroup group, std::size_t points,
                                      const std::vector<std::vector<Point>> &generator_tables);
    /// The group acting on {0..deg-1} as permutations.
    static GSet natural(FiniteGroup group);
    static GSet trivial(FiniteGroup group, std::size_t points);
    /// {"points": k, "group": "<perm generators or name>", "action": [[1-based images per generator]]}.
    /// Without "action" the group acts trivially.
    static GSet from_json(const nlohmann::json &j);

    std::size_t size() const { return points_; }
    const FiniteGroup &group() const { return group_; }
    Point act(std::size_t g, Point x) const { return tables_[g * points_ + x]; }
    std::span<const Point> table(std::size_t g) const { return {tables_.data() + g * points_, points_}; }

    std::vector<std::size_t> stabilizer(Point x) const;
    FiniteGroup stabilizer_group(Point x) const;
    /// Orbits as sorted point lists, ordered by smallest point.
    std::vector<std::vector<Point>> orbits() const;
    /// Point -> orbit number, matching orbits().
    std::vector<std::size_t> orbit_index() const;

private:
    GSet(FiniteGroup group, std::size_t points, std::vector<Point> tables);

    FiniteGroup group_;
    std::size_t points_;
    std::vector<Point> tables_; // row g holds the images of every point under g
};

/// Rational-valued function on a finite set of size points^arity, stored
/// densely. Tuples (x_0..x_{n-1}) are indexed by sum x_i points^i.
class ConstrFn {
public:
    ConstrFn(std::size_t points, std::size_t arity);
    static ConstrFn constant(std::size_t points, std::size_t arity, const Rat &value);
    /// 1 on the listed tuple indices, 0 elsewhere.
    static ConstrFn indicator(std::size_t points, std::size_t arity, std::span<const std::size_t> support);

    std::size_t points() const { return points_; }
    std::size_t arity() const { return arity_; }
    std::size_t size() const { return values_.size(); }

    const Rat &operator[](std::size_t index) const { return values_[index]; }
    Rat &operator[](std::size_t index) { return values_[index]; }
    const Rat &at(std::span<const Point> tuple) const;

    std::size_t encode(std::span<const Point> tuple) const;
    std::vector<Point> decode(std::size_t index) const;

    /// Sum of values: the Euler-characteristic integral at dimension zero.
    Rat integral() const;

    ConstrFn &operator+=(const ConstrFn &rhs);
    ConstrFn &operator*=(const Rat &s);
    friend ConstrFn operator+(ConstrFn a, const ConstrFn &b) { return a += b; }
    friend ConstrFn operator*(const Rat &s, ConstrFn a) { return a *= s; }
    bool operator==(const ConstrFn &) const = default;

private:
    std::size_t points_;
    std::size_t arity_;
    std::vector<Rat> values_;
};

std::string tuple_to_string(std::span<const Point> tuple);

/// X^n with its action of G wr S_n: (g; sigma).x has i-th entry g_i.x_{sigma^-1(i)}.
class PowerSet {
public:
    PowerSet(const GSet &base, std::size_t n);

    const GSet &base() const { return base_; }
    std::size_t n() const { return n_; }
    const WreathProduct &wreath() const { return *wreath_; }
    /// X^n as a G_n-set; element k of the group is wreath().decode(k).
    const GSet &as_gset() const { return gset_; }

    /// Indices of the elements (e; sigma), i.e. the copy of S_n.
    std::span<const std::size_t> permutation_part() const { return sym_; }
    /// Indices of the elements (g; id), i.e. the base group G^n.
    std::span<const std::size_t> base_part() const { return base_group_; }

private:
    GSet base_;
    std::size_t n_;
    std::shared_ptr<const WreathProduct> wreath_;
    GSet gset_;
    std::vector<std::size_t> sym_;
    std::vector<std::size_t> base_group_;
};

} // namespace orbichern
