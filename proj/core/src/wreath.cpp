#include "orbichern/wreath.hpp"

#include <stdexcept>

namespace orbichern {

WreathElement wreath_mul(const WreathElement &x, const WreathElement &y, const FiniteGroup &base)
{
    const std::size_t n = x.gbar.size();
    if (y.gbar.size() != n || x.sigma.degree() != n || y.sigma.degree() != n)
        throw std::invalid_argument("wreath_mul: operands of different size");
    WreathElement out;
    out.gbar.resize(n);
    const Perm sigma_inv = x.sigma.inverse();
    for (std::size_t i = 0; i < n; ++i)
        out.gbar[i] = base.mul(x.gbar[i], y.gbar[sigma_inv(static_cast<Point>(i))]);
    out.sigma = x.sigma * y.sigma;
    return out;
}

namespace {

FiniteGroup build_group(const FiniteGroup &base, std::size_t n, std::vector<WreathElement> &decoded,
                        const WreathProduct &self)
{
    const FiniteGroup sym = symmetric_group(n);
    std::size_t base_power = 1;
    for (std::size_t i = 0; i < n; ++i)
        base_power *= base.order();
    const std::size_t order = base_power * sym.order();
    if (order > kDefaultMaxGroupOrder)
        throw GroupTooLarge("wreath product of order " + std::to_string(order) + " is too large");

    decoded.clear();
    decoded.reserve(order);
    std::vector<Perm> perms;
    perms.reserve(order);
    for (std::size_t s = 0; s < sym.order(); ++s) {
        for (std::size_t code = 0; code < base_power; ++code) {
            WreathElement w;
            w.sigma = sym.element(s);
            w.gbar.resize(n);
            std::size_t c = code;
            for (std::size_t i = n; i-- > 0;) {
                w.gbar[i] = c % base.order();
                c /= base.order();
            }
            perms.push_back(self.to_perm(w));
            decoded.push_back(std::move(w));
        }
    }

    // Generators: base generators on block 1, plus the S_n generators.
    std::vector<std::size_t> gens;
    auto index_of = [&](const WreathElement &w) {
        std::size_t s = sym.index_of(w.sigma);
        std::size_t code = 0;
        for (std::size_t i = 0; i < n; ++i)
            code = code * base.order() + w.gbar[i];
        return s * base_power + code;
    };
    for (std::size_t g : base.generators()) {
        WreathElement w = self.identity();
        w.gbar[0] = g;
        gens.push_back(index_of(w));
    }
    for (std::size_t g : sym.generators()) {
        WreathElement w = self.identity();
        w.sigma = sym.element(g);
        gens.push_back(index_of(w));
    }
    const std::string name = (base.name().empty() ? std::string("G") : base.name()) + " wr S" + std::to_string(n);
    return FiniteGroup(n * base.degree(), std::move(perms), std::move(gens), name);
}

} // namespace

WreathProduct::WreathProduct(FiniteGroup base, std::size_t n)
    : base_(std::move(base)), n_(n), group_(trivial_group())
{
    if (n == 0)
        throw std::invalid_argument("wreath product needs n >= 1");
    group_ = build_group(base_, n_, decoded_, *this);
}

std::size_t WreathProduct::order() const
{
    return group_.order();
}

WreathElement WreathProduct::identity() const
{
    return WreathElement{std::vector<std::size_t>(n_, base_.identity()), Perm(n_)};
}

WreathElement WreathProduct::mul(const WreathElement &x, const WreathElement &y) const
{
    return wreath_mul(x, y, base_);
}

WreathElement WreathProduct::inverse(const WreathElement &x) const
{
    // (g; s)^-1 = (s^-1(g^-1); s^-1), where s^-1(h)_i = h_{s(i)}.
    WreathElement out;
    out.sigma = x.sigma.inverse();
    out.gbar.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
        out.gbar[i] = base_.inv(x.gbar[x.sigma(static_cast<Point>(i))]);
    return out;
}

Perm WreathProduct::to_perm(const WreathElement &x) const
{
    const std::size_t d = base_.degree();
    std::vector<Point> images(n_ * d);
    for (std::size_t j = 0; j < n_; ++j) {
        const Point target_block = x.sigma(static_cast<Point>(j));
        const Perm &g = base_.element(x.gbar[target_block]);
        for (std::size_t p = 0; p < d; ++p)
            images[j * d + p] = static_cast<Point>(target_block * d + g(static_cast<Point>(p)));
    }
    return Perm(std::move(images));
}

} // namespace orbichern
