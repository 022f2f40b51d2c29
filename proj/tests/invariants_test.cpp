#include "glmn/errors.hpp"
#include "glmn/invariants.hpp"
#include "glmn/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace glmn;

namespace {

// Dimension of {rank <= r} in m x n matrices, read off as the generic rank of the
// differential of (A, B) -> AB with A of size m x r and B of size r x n.
std::int64_t orbit_dim_by_jacobian(int m, int n, int r)
{
    if (r == 0)
        return 0;
    std::mt19937 rng(static_cast<unsigned>(97 * m + 13 * n + r));
    std::uniform_int_distribution<int> dist(-5, 5);
    std::vector<std::vector<int>> a(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(r)));
    std::vector<std::vector<int>> b(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : a)
        for (auto& v : row)
            v = dist(rng);
    for (auto& row : b)
        for (auto& v : row)
            v = dist(rng);
    const std::size_t vars = static_cast<std::size_t>(m * r + r * n);
    Matrix jac(static_cast<std::size_t>(m * n), vars);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const std::size_t row = static_cast<std::size_t>(i * n + j);
            for (int t = 0; t < r; ++t) {
                // d(AB)_ij / dA_it = B_tj and d(AB)_ij / dB_tj = A_it
                jac.at(row, static_cast<std::size_t>(i * r + t)) = make_rational(b[t][j]);
                jac.at(row, static_cast<std::size_t>(m * r + t * n + j)) = make_rational(a[i][t]);
            }
        }
    return static_cast<std::int64_t>(jac.rank());
}

// Weight of gl(m|n) with atypicality exactly k: zero except a large drop on the last n-k
// odd coordinates.
Weight weight_with_atypicality(const SuperParams& p, int k)
{
    std::vector<std::int64_t> c(static_cast<std::size_t>(p.size()), 0);
    for (int j = k + 1; j <= p.n(); ++j)
        c[static_cast<std::size_t>(p.m() + j - 1)] = -(p.m() + p.n() + 5);
    return Weight(p, c);
}

} // namespace

TEST_CASE("module kind parsing")
{
    CHECK(parse_module_kind("KAC") == ModuleKind::Kac);
    CHECK(parse_module_kind("dualkac") == ModuleKind::DualKac);
    CHECK(parse_module_kind("Simple") == ModuleKind::Simple);
    CHECK_THROWS_AS(parse_module_kind("verma"), ParameterError);
    for (auto k : {ModuleKind::Kac, ModuleKind::DualKac, ModuleKind::Simple})
        CHECK(parse_module_kind(to_string(k)) == k);
}

TEST_CASE("rank orbit closure dimension")
{
    CHECK(rank_orbit_closure_dim(SuperParams(2, 2), 1) == 3);
    CHECK(rank_orbit_closure_dim(SuperParams(3, 2), 0) == 0);
    for (int k = 1; k <= 4; ++k)
        CHECK(rank_orbit_closure_dim(SuperParams(k, k), k) == k * k);
    CHECK_THROWS_AS(rank_orbit_closure_dim(SuperParams(2, 2), 3), DomainError);
    CHECK_THROWS_AS(rank_orbit_closure_dim(SuperParams(2, 2), -1), DomainError);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= m; ++n)
            for (int r = 0; r <= n; ++r)
                CHECK(rank_orbit_closure_dim(SuperParams(m, n), r) == orbit_dim_by_jacobian(m, n, r));
}

TEST_CASE("complexity and z examples")
{
    const SuperParams p11(1, 1);
    const Weight w(p11, {3, -3});
    CHECK(complexity(ModuleKind::Simple, w) == 2);
    CHECK(complexity(ModuleKind::Kac, w) == 1);
    CHECK(z_invariant(ModuleKind::Simple, w) == 2);
    CHECK(z_invariant(ModuleKind::Kac, w) == 1);
    const Weight typical(SuperParams(2, 1), {1, 1, 0});
    for (auto k : {ModuleKind::Kac, ModuleKind::DualKac, ModuleKind::Simple}) {
        CHECK(complexity(k, typical) == 0);
        CHECK(z_invariant(k, typical) == 0);
        CHECK(variety_dims(k, typical) == InvariantReport{});
    }
    const Weight a2 = weight_with_atypicality(SuperParams(3, 2), 2);
    CHECK(complexity(ModuleKind::Simple, a2) == 8);
    CHECK(z_invariant(ModuleKind::Simple, Weight::zero(SuperParams(3, 3))) == 6);
}

TEST_CASE("variety dims")
{
    const Weight zero21 = Weight::zero(SuperParams(2, 1));
    auto r = variety_dims(ModuleKind::Kac, zero21);
    CHECK(r.complexity == 2);
    CHECK(r.dim_X == 2);
    CHECK(r.dim_V_g_g0 == 0);
    r = variety_dims(ModuleKind::Simple, zero21);
    CHECK(r.complexity == 3);
    CHECK(r.dim_X == 2);
    CHECK(r.dim_V_g_g0 == 1);
}

TEST_CASE("weights built for a target atypicality have it")
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= m; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(atypicality(weight_with_atypicality(SuperParams(m, n), k)).atypicality == k);
}
