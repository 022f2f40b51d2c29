#include "glmn/suzhang.hpp"

#include "glmn/ehrhart.hpp"
#include "glmn/errors.hpp"

#include <algorithm>
#include <functional>

namespace glmn {

namespace {

void require_k(const SuperParams& p, int k, const char* what)
{
    if (k < 1 || k > p.n())
        throw DomainError(std::string(what) + ": atypicality " + std::to_string(k) +
                          " outside [1, " + std::to_string(p.n()) + "]");
}

std::size_t idx(int i) { return static_cast<std::size_t>(i - 1); }

} // namespace

Weight zeta(const ZetaInput& in)
{
    const auto& p = in.params;
    require_k(p, in.k, "zeta");
    if (in.x.size() != static_cast<std::size_t>(in.k))
        throw ParameterError("zeta: expected " + std::to_string(in.k) + " coordinates");
    const int m = p.m(), n = p.n(), k = in.k;
    const std::int64_t q = 2 * m - 2 * k;
    std::vector<std::int64_t> c(static_cast<std::size_t>(m + n), 0);
    for (int i = 1; i <= m - k; ++i)
        c[idx(i)] = m - k - i + 1;
    for (int i = 1; i <= k; ++i) {
        c[idx(m - k + i)] = in.x[idx(i)];
        c[idx(m + k - i + 1)] = -in.x[idx(i)];
    }
    for (int s = 1; s <= n - k; ++s)
        c[idx(m + k + s)] = -(q + s);
    return Weight(p, std::move(c));
}

BlockDescriptor block_B_descriptor(const SuperParams& p, int k)
{
    require_k(p, k, "block_B_descriptor");
    const int m = p.m(), n = p.n();
    BlockDescriptor bd;
    bd.atypicality = k;
    if (k == 1) {
        for (std::int64_t v = 2 * m - 2; v >= 2; v -= 2)
            bd.core_left.push_back(v);
        for (std::int64_t v = 2 * m; v <= 2 * m + 2 * n - 4; v += 2)
            bd.core_right.push_back(v);
    } else {
        for (std::int64_t v = 2 * m - k; v >= k + 2; v -= 2)
            bd.core_left.push_back(v);
        for (std::int64_t v = 2 * m - k + 2; v <= 2 * m + 2 * n - 3 * k; v += 2)
            bd.core_right.push_back(v);
    }
    return bd;
}

bool in_block_B(const Weight& w, int k)
{
    if (!is_dominant(w))
        return false;
    return atypicality(w).same_block_as(block_B_descriptor(w.params(), k));
}

std::optional<Weight> atypicality_one_weight(const SuperParams& p, const BlockDescriptor& block,
                                             std::int64_t t)
{
    if (block.atypicality != 1)
        throw DomainError("atypicality_one_weight: block must have atypicality one");
    auto contains = [](const std::vector<std::int64_t>& v, std::int64_t x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    if (contains(block.core_left, t) || contains(block.core_right, t))
        return std::nullopt;
    std::vector<std::int64_t> left = block.core_left;
    std::vector<std::int64_t> right = block.core_right;
    left.push_back(t);
    right.push_back(t);
    std::sort(left.begin(), left.end(), std::greater<>());
    std::sort(right.begin(), right.end());
    const Weight r = rho(p);
    std::vector<std::int64_t> c(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.m(); ++i)
        c[idx(i)] = left[idx(i)] - r.coeff(i);
    // Right-hand values are (lambda+rho, eps_s) = -(lambda+rho)_s.
    for (int s = 1; s <= p.n(); ++s)
        c[idx(p.m() + s)] = -right[idx(s)] - r.coeff(p.m() + s);
    Weight w(p, std::move(c));
    if (!is_dominant(w) || !atypicality(w).same_block_as(block))
        throw InternalError("atypicality_one_weight: reconstruction left the block");
    return w;
}

Weight nu(const SuperParams& p, int k)
{
    require_k(p, k, "nu");
    if (k > 1)
        return zeta({p, k, std::vector<std::int64_t>(static_cast<std::size_t>(k), 0)});
    // Length is a bijection from this block onto Z and agrees with the stated phi values,
    // so the preimage of 0 is the block weight of length 0.
    const BlockDescriptor block = block_B_descriptor(p, 1);
    const std::int64_t radius = 4 * (p.m() + p.n()) + 8;
    std::optional<Weight> found;
    for (std::int64_t t = -radius; t <= radius; ++t) {
        auto w = atypicality_one_weight(p, block, t);
        if (!w || length(*w) != 0)
            continue;
        if (found)
            throw InternalError("nu: length-zero weight is not unique");
        found = w;
    }
    if (!found)
        throw InternalError("nu: no length-zero weight in the search window");
    return *found;
}

Weight phi_on_zeta(const ZetaInput& in)
{
    const Weight z = zeta(in);
    if (!in_block_B(z, in.k))
        throw DomainError("phi_on_zeta: zeta(x) = " + z.to_string() + " is not in the block");
    const int k = in.k;
    std::vector<std::int64_t> c(static_cast<std::size_t>(2 * k));
    for (int i = 1; i <= k; ++i) {
        c[idx(i)] = in.x[idx(i)];
        c[idx(2 * k - i + 1)] = -in.x[idx(i)];
    }
    return Weight(SuperParams(k, k), std::move(c));
}

Weight phi_k1(const SuperParams& p, std::int64_t a)
{
    const std::int64_t v = a - p.n() + 1;
    return Weight(SuperParams(1, 1), {v, -v});
}

namespace {

// 2d/3 < a <= d
bool in_window(std::int64_t a, std::int64_t d) { return 3 * a > 2 * d && a <= d; }

} // namespace

Weight mu_a(const SuperParams& p, std::int64_t a, std::int64_t d)
{
    const int m = p.m(), n = p.n();
    if (d <= 6 * (m + n))
        throw DomainError("mu_a: requires d > 6(m+n)");
    if (!in_window(a, d))
        throw DomainError("mu_a: a = " + std::to_string(a) + " outside (2d/3, d]");
    const std::int64_t pp = m - 1;
    const std::int64_t q = 2 * m - 2;
    std::vector<std::int64_t> c(static_cast<std::size_t>(m + n), 0);
    c[0] = a;
    for (int i = 2; i <= m; ++i)
        c[idx(i)] = pp - (i - 2);
    for (int s = 1; s <= n - 1; ++s)
        c[idx(m + s)] = -(q + s);
    c[idx(m + n)] = -(a + m - n);
    return Weight(p, std::move(c));
}

WeightPairSet build_S(const SuperParams& p, int k, std::int64_t d)
{
    require_k(p, k, "build_S");
    WeightPairSet out;
    out.d = d;
    out.k = k;
    out.block = block_B_descriptor(p, k);
    if (k == 1) {
        if (d <= 6 * (p.m() + p.n()))
            throw DomainError("build_S: k = 1 requires d > 6(m+n)");
        for (std::int64_t a = d; a >= 0; --a)
            if (in_window(a, d)) {
                Weight w = mu_a(p, a, d);
                out.pairs.emplace_back(w, w);
            }
        std::reverse(out.pairs.begin(), out.pairs.end());
        return out;
    }
    for (const auto& pt : enumerate_lattice_points(k, d)) {
        std::vector<std::int64_t> b(pt.begin(), pt.begin() + k);
        std::vector<std::int64_t> a(pt.begin() + k, pt.end());
        out.pairs.emplace_back(zeta({p, k, b}), zeta({p, k, a}));
    }
    return out;
}

namespace {

std::vector<std::int64_t> zeta_coordinates(const Weight& w, int k)
{
    const int m = w.params().m();
    std::vector<std::int64_t> x;
    for (int i = 1; i <= k; ++i)
        x.push_back(w.coeff(m - k + i));
    return x;
}

} // namespace

bool check_pair_conditions(const std::pair<Weight, Weight>& pair, std::int64_t d,
                           const SuperParams& p, int k)
{
    const auto& [mu, sigma] = pair;
    if (!(mu.params() == p) || !(sigma.params() == p))
        return false;
    if (!in_block_B(mu, k) || !in_block_B(sigma, k))
        return false;

    if (k == 1) {
        if (!(mu == sigma))
            return false;
        const std::int64_t a = mu.coeff(1);
        if (!in_window(a, d) || !(mu == mu_a(p, a, d)))
            return false;
        return length(mu) == phi_k1(p, a).coeff(1);
    }

    const auto xm = zeta_coordinates(mu, k);
    const auto xs = zeta_coordinates(sigma, k);
    if (!(zeta({p, k, xm}) == mu) || !(zeta({p, k, xs}) == sigma))
        return false;
    const Weight pm = phi_on_zeta({p, k, xm});
    const Weight ps = phi_on_zeta({p, k, xs});
    const Weight pn = Weight::zero(SuperParams(k, k));

    if (!bruhat_leq_principal(ps, pm) || !bruhat_leq_principal(ps, pn))
        return false;
    const std::int64_t lm = length(mu);
    const std::int64_t ls = length(sigma);
    if (lm - ls < 0 || lm - ls > d)
        return false;
    // -l(sigma) = (d - l(mu))/2 over the integers.
    if ((d - lm) % 2 != 0 || -2 * ls != d - lm)
        return false;
    const std::int64_t g = 2LL * k * k;
    const int m = p.m();
    if (-g * mu.coeff(m - k + 1) < d)
        return false;
    for (int i = m - k + 1; i <= m - 1; ++i)
        if (g * (mu.coeff(i) - mu.coeff(i + 1)) < d)
            return false;
    return true;
}

} // namespace glmn
