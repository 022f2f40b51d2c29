#include "glmn/dimension.hpp"

#include "glmn/errors.hpp"

#include <algorithm>

namespace glmn {

Integer weyl_dim_g0(const Weight& mu)
{
    if (!is_dominant(mu))
        throw DomainError("weyl_dim_g0: weight " + mu.to_string() + " is not dominant");
    const auto& p = mu.params();
    const Weight shifted_m = mu + rho_m(p);
    const Weight shifted_n = mu + rho_n(p);
    const Weight rm = rho_m(p);
    const Weight rn = rho_n(p);
    Rational product = 1;
    for (const Root& a : positive_roots_m(p))
        product *= make_rational(pair_with_root(shifted_m, a), pair_with_root(rm, a));
    for (const Root& a : positive_roots_n(p))
        product *= make_rational(pair_with_root(shifted_n, a), pair_with_root(rn, a));
    if (!is_integral(product) || product <= 0)
        throw InternalError("weyl_dim_g0: non-positive-integral value " + to_string(product));
    return numerator_of(product);
}

DimBound projective_dim_bounds(const Weight& mu)
{
    const Integer lower = weyl_dim_g0(mu);
    Integer factor = 1;
    factor <<= static_cast<unsigned>(2 * mu.params().odd_half_dim());
    return {lower, lower * factor};
}

std::int64_t proj_growth_exponent(const SuperParams& p, int k)
{
    if (k < 0 || k > p.n())
        throw DomainError("proj_growth_exponent: atypicality out of range");
    return static_cast<std::int64_t>(p.m() + p.n() - k - 1) * k;
}

Integer partitions_at_most_k_parts(std::int64_t i, int k)
{
    if (i < 0)
        return 0;
    if (k <= 0)
        return i == 0 ? 1 : 0;
    // table[j] holds p(j, kk) as kk increases.
    std::vector<Integer> table(static_cast<std::size_t>(i + 1), 0);
    table[0] = 1;
    for (int kk = 1; kk <= k; ++kk)
        for (std::int64_t j = kk; j <= i; ++j)
            table[static_cast<std::size_t>(j)] += table[static_cast<std::size_t>(j - kk)];
    return table[static_cast<std::size_t>(i)];
}

namespace {

void partitions_rec(std::int64_t remaining, std::int64_t max_part, int slots,
                    std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out)
{
    if (remaining == 0) {
        std::vector<std::int64_t> padded = cur;
        padded.resize(cur.size() + static_cast<std::size_t>(slots), 0);
        out.push_back(std::move(padded));
        return;
    }
    if (slots == 0)
        return;
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, slots - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::int64_t>> enumerate_partitions(std::int64_t i, int k)
{
    std::vector<std::vector<std::int64_t>> out;
    if (i < 0 || k < 0)
        return out;
    std::vector<std::int64_t> cur;
    partitions_rec(i, i, k, cur, out);
    return out;
}

ExtDegreeWindow ext_degree_window(const Weight& lambda, const Weight& mu, std::int64_t d)
{
    // b = |mu| - |lambda| - d must lie in [0, mn].
    return {naive_length(mu) - naive_length(lambda) - d, lambda.params().odd_half_dim()};
}

bool ext_degree_constraint(const Weight& lambda, const Weight& mu, std::int64_t d)
{
    if (!(lambda.params() == mu.params()))
        throw ParameterError("ext_degree_constraint: mismatched params");
    const ExtDegreeWindow w = ext_degree_window(lambda, mu, d);
    return w.base >= 0 && w.base <= w.width;
}

std::vector<Weight> cauchy_symmetric_decomposition(const SuperParams& p, std::int64_t d)
{
    if (p.m() != p.n())
        throw DomainError("cauchy_symmetric_decomposition: only gl(k|k) is supported");
    const int k = p.m();
    if (k > 4 || d > 30)
        throw ResourceError("cauchy_symmetric_decomposition: limited to k <= 4, d <= 30");
    if (d < 0)
        throw DomainError("cauchy_symmetric_decomposition: negative degree");
    std::vector<Weight> out;
    for (const auto& tau : enumerate_partitions(d, k)) {
        // g1* = V_m^* (x) V_n, so S_tau(V_m^*) has highest weight (-tau_k, ..., -tau_1).
        std::vector<std::int64_t> c(static_cast<std::size_t>(2 * k));
        for (int i = 0; i < k; ++i) {
            c[static_cast<std::size_t>(i)] = -tau[static_cast<std::size_t>(k - 1 - i)];
            c[static_cast<std::size_t>(k + i)] = tau[static_cast<std::size_t>(i)];
        }
        out.emplace_back(p, std::move(c));
    }
    return out;
}

int kac_ext_trivial(const Weight& sigma, std::int64_t d)
{
    if (!in_principal_block(sigma))
        throw DomainError("kac_ext_trivial: weight " + sigma.to_string() +
                          " is not in the principal block of gl(k|k)");
    const Weight zero = Weight::zero(sigma.params());
    return bruhat_leq_principal(sigma, zero) && d == -length(sigma) ? 1 : 0;
}

} // namespace glmn
