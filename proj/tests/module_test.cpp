#include "glmn/dimension.hpp"
#include "glmn/errors.hpp"
#include "glmn/module.hpp"

#include <doctest.h>

using namespace glmn;

namespace {

AlgebraElement unit(int i, int j) { return {{make_rational(1), {i, j}}}; }

std::vector<Weight> sample_dominant(const SuperParams& p)
{
    std::vector<Weight> out;
    const int N = p.size();
    std::vector<std::int64_t> c(static_cast<std::size_t>(N), -1);
    while (true) {
        Weight w(p, c);
        if (is_dominant(w))
            out.push_back(w);
        int i = 0;
        while (i < N && c[static_cast<std::size_t>(i)] == 1)
            c[static_cast<std::size_t>(i++)] = -1;
        if (i == N)
            break;
        ++c[static_cast<std::size_t>(i)];
    }
    return out;
}

} // namespace

TEST_CASE("gelfand-tsetlin patterns and gl(n) simples")
{
    CHECK(gt_patterns({1, 0}).size() == 2);
    CHECK(gt_patterns({2, 0}).size() == 3);
    CHECK(gt_patterns({2, 1, 0}).size() == 8);
    CHECK_THROWS_AS(gt_patterns({0, 1}), DomainError);
    CHECK(gl_simple(2, {1, 0}).dim() == 2);
    CHECK(gl_simple(2, {2, 0}).dim() == 3);
    for (const auto& hw : std::vector<std::vector<std::int64_t>>{
             {2, 1, 0}, {3, 1, -1}, {1, 1, 0}, {2, 0, 0, -1}, {1, 0, 0, 0}}) {
        const MatrixModule m = gl_simple(static_cast<int>(hw.size()), hw);
        CHECK(m.bracket_violation().empty());
        CHECK(m.dim() == gt_patterns(hw).size());
    }
}

TEST_CASE("kac module of gl(1|1) at zero")
{
    const MatrixModule k = kac_module(Weight::zero(SuperParams(1, 1)));
    CHECK(k.dim() == 2);
    CHECK(k.action(1, 2).is_zero());
    CHECK(k.action(2, 1).rank() == 1);
    CHECK(k.bracket_violation().empty());
    CHECK(odd_projectivity_test(k, unit(2, 1)));
    CHECK_FALSE(odd_projectivity_test(k, unit(1, 2)));
}

TEST_CASE("dual kac module of gl(1|1) at zero")
{
    const MatrixModule k = dual_kac_module(Weight::zero(SuperParams(1, 1)));
    CHECK(k.dim() == 2);
    CHECK(k.action(2, 1).is_zero());
    CHECK(k.action(1, 2).rank() == 1);
    CHECK(k.bracket_violation().empty());
}

TEST_CASE("kac module dimensions and brackets")
{
    CHECK(kac_module(Weight::zero(SuperParams(2, 1))).dim() == 4);
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
        const SuperParams p(m, n);
        for (const Weight& w : sample_dominant(p)) {
            const auto expected = weyl_dim_g0(w) * (Integer(1) << (m * n));
            const MatrixModule k = kac_module(w);
            CHECK(Integer(k.dim()) == expected);
            CHECK(k.bracket_violation().empty());
            const MatrixModule dk = dual_kac_module(w);
            CHECK(Integer(dk.dim()) == expected);
            CHECK(dk.bracket_violation().empty());
        }
    }
}

TEST_CASE("basis weights of a kac module")
{
    const MatrixModule k = kac_module(Weight::zero(SuperParams(2, 1)));
    const auto ws = k.basis_weights();
    CHECK(ws.size() == 4);
    CHECK(ws.front() == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("odd projectivity")
{
    const MatrixModule triv = g0_simple(Weight::zero(SuperParams(1, 1)));
    CHECK(triv.dim() == 1);
    CHECK_FALSE(odd_projectivity_test(triv, unit(1, 2)));
    CHECK_FALSE(odd_projectivity_test(triv, unit(2, 1)));
    const MatrixModule k = kac_module(Weight::zero(SuperParams(2, 1)));
    // E13 + E31 squares to E11 + E33, which is nonzero on this module.
    const AlgebraElement bad{{make_rational(1), {1, 3}}, {make_rational(1), {3, 1}}};
    CHECK_THROWS_AS(odd_projectivity_test(kac_module(Weight(SuperParams(2, 1), {1, 0, 0})), bad),
                    PreconditionError);
    (void)k;
}

TEST_CASE("rank varieties")
{
    const MatrixModule k21 = kac_module(Weight::zero(SuperParams(2, 1)));
    CHECK(rank_variety(k21, 1) == 1);
    CHECK(rank_variety(k21, -1) == 0);
    const MatrixModule k22 = kac_module(Weight::zero(SuperParams(2, 2)));
    CHECK(rank_variety(k22, 1) == 2);
    CHECK(rank_variety(k22, -1) == 0);
    const MatrixModule dk22 = dual_kac_module(Weight::zero(SuperParams(2, 2)));
    CHECK(rank_variety(dk22, 1) == 0);
    CHECK(rank_variety(dk22, -1) == 2);
    // A typical Kac module is projective, so no rank-one element detects it.
    const MatrixModule typ = kac_module(Weight(SuperParams(2, 1), {1, 1, 0}));
    CHECK(rank_variety(typ, 1) == 0);
    CHECK(rank_variety(typ, -1) == 0);
}

TEST_CASE("representatives")
{
    CHECK(rank_representative(2, 2, 1) ==
          AlgebraElement{{make_rational(1), {1, 3}}, {make_rational(1), {2, 4}}});
    CHECK(rank_representative(2, 1, -1) == AlgebraElement{{make_rational(1), {3, 1}}});
    CHECK(f_representative(2, 2, 1) ==
          AlgebraElement{{make_rational(1), {2, 3}}, {make_rational(1), {1, 4}}});
}

TEST_CASE("trivial summand check")
{
    CHECK(trivial_summand_check(Weight::zero(SuperParams(1, 1))));
    CHECK(trivial_summand_check(Weight::zero(SuperParams(2, 2))));
    CHECK_FALSE(trivial_summand_check(Weight(SuperParams(2, 1), {1, 1, 0})));
    CHECK_FALSE(trivial_summand_check(Weight(SuperParams(1, 1), {2, 0})));
}

TEST_CASE("scale limits")
{
    CHECK_THROWS_AS(gl_simple(4, {12, 6, 3, 0}), ResourceError);
    CHECK_THROWS_AS(kac_module(Weight(SuperParams(4, 4), {6, 4, 2, 0, 0, -2, -4, -6})), ResourceError);
}
