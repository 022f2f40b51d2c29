#include "glmn/errors.hpp"
#include "glmn/weight.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace glmn;

namespace {

// Exhaustive maximum set of pairwise orthogonal odd roots orthogonal to lambda + rho.
int brute_force_atypicality(const Weight& lambda)
{
    const SuperParams& p = lambda.params();
    const Weight shifted = lambda + rho(p);
    std::vector<Root> cand;
    for (const Root& r : positive_odd_roots(p))
        if (pair_with_root(shifted, r) == 0)
            cand.push_back(r);
    int best = 0;
    const std::size_t n = cand.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Root> pick;
        for (std::size_t b = 0; b < n; ++b)
            if (mask >> b & 1)
                pick.push_back(cand[b]);
        bool ok = true;
        for (std::size_t a = 0; a < pick.size() && ok; ++a)
            for (std::size_t b = a + 1; b < pick.size() && ok; ++b)
                ok = bilinear_form(root_weight(p, pick[a]), root_weight(p, pick[b])) == 0;
        if (ok)
            best = std::max(best, static_cast<int>(pick.size()));
    }
    return best;
}

std::vector<Weight> dominant_grid(const SuperParams& p, int lo, int hi)
{
    std::vector<Weight> out;
    std::vector<std::int64_t> c(static_cast<std::size_t>(p.size()), lo);
    while (true) {
        Weight w(p, c);
        if (is_dominant(w))
            out.push_back(w);
        std::size_t i = 0;
        while (i < c.size() && c[i] == hi)
            c[i++] = lo;
        if (i == c.size())
            break;
        ++c[i];
    }
    return out;
}

Weight principal(int k, std::vector<std::int64_t> a)
{
    std::vector<std::int64_t> c = a;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        c.push_back(-*it);
    return Weight(SuperParams(k, k), c);
}

} // namespace

TEST_CASE("super params validation")
{
    CHECK_THROWS_AS(SuperParams(1, 2), ParameterError);
    CHECK_THROWS_AS(SuperParams(1, 0), ParameterError);
    CHECK_NOTHROW(SuperParams(3, 3));
    CHECK_THROWS_AS(Weight(SuperParams(2, 1), {1, 2}), ParameterError);
}

TEST_CASE("bilinear form")
{
    const SuperParams p11(1, 1);
    CHECK(bilinear_form(Weight::epsilon(p11, 1), Weight::epsilon(p11, 1)) == 1);
    CHECK(bilinear_form(Weight::epsilon(p11, 2), Weight::epsilon(p11, 2)) == -1);
    CHECK(bilinear_form(Weight::epsilon(p11, 1), Weight::epsilon(p11, 2)) == 0);
    const SuperParams p21(2, 1);
    CHECK(bilinear_form(rho(p21), rho(p21)) == 4);
    const Weight w(p21, {3, -1, 7});
    CHECK(bilinear_form(w, Weight::zero(p21)) == 0);
    CHECK_THROWS_AS(bilinear_form(w, Weight::zero(p11)), ParameterError);
}

TEST_CASE("rho")
{
    CHECK(rho(SuperParams(1, 1)) == Weight(SuperParams(1, 1), {1, -1}));
    CHECK(rho(SuperParams(2, 2)) == Weight(SuperParams(2, 2), {2, 1, -1, -2}));
    const SuperParams p(3, 2);
    CHECK(rho_m(p) + rho_n(p) == rho(p));
}

TEST_CASE("dominance")
{
    const SuperParams p21(2, 1);
    CHECK(is_dominant(Weight(p21, {1, 0, -1})));
    CHECK_FALSE(is_dominant(Weight(p21, {0, 1, 0})));
    CHECK(is_dominant(Weight(SuperParams(2, 2), {0, 0, 5, 5})));
    CHECK_THROWS_AS(atypicality(Weight(p21, {0, 1, 0})), DomainError);
}

TEST_CASE("atypicality examples")
{
    const SuperParams p11(1, 1), p21(2, 1);
    auto b = atypicality(Weight(p11, {3, -3}));
    CHECK(b.atypicality == 1);
    CHECK(b.omega == std::vector<Root>{{1, 2}});
    CHECK(b.core_left.empty());
    CHECK(b.core_right.empty());

    b = atypicality(Weight::zero(p21));
    CHECK(b.atypicality == 1);
    CHECK(b.omega == std::vector<Root>{{2, 3}});
    CHECK(b.core_left == std::vector<std::int64_t>{2});
    CHECK(b.core_right.empty());

    b = atypicality(Weight(p21, {1, 1, 0}));
    CHECK(b.atypicality == 0);
    CHECK(b.omega.empty());
    CHECK(b.core_left == std::vector<std::int64_t>{3, 2});
    CHECK(b.core_right == std::vector<std::int64_t>{1});

    for (int k = 1; k <= 4; ++k)
        CHECK(atypicality(Weight::zero(SuperParams(k, k))).atypicality == k);
}

TEST_CASE("atypicality agrees with exhaustive search")
{
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}}) {
        const SuperParams p(m, n);
        for (const Weight& w : dominant_grid(p, -2, 2)) {
            const BlockDescriptor b = atypicality(w);
            REQUIRE(b.atypicality == brute_force_atypicality(w));
            CHECK(b.atypicality >= 0);
            CHECK(b.atypicality <= n);
            const Weight shifted = w + rho(p);
            for (std::size_t a = 0; a < b.omega.size(); ++a) {
                CHECK(pair_with_root(shifted, b.omega[a]) == 0);
                for (std::size_t c = a + 1; c < b.omega.size(); ++c)
                    CHECK(bilinear_form(root_weight(p, b.omega[a]), root_weight(p, b.omega[c])) ==
                          0);
            }
        }
    }
}

TEST_CASE("berezinian twist preserves atypicality and shifts cores")
{
    const SuperParams p(3, 2);
    const Weight ber = berezinian(p);
    for (const Weight& w : dominant_grid(p, -1, 1)) {
        const auto b0 = atypicality(w);
        const auto b1 = atypicality(w + ber);
        CHECK(b0.atypicality == b1.atypicality);
        REQUIRE(b0.core_left.size() == b1.core_left.size());
        for (std::size_t i = 0; i < b0.core_left.size(); ++i)
            CHECK(b1.core_left[i] == b0.core_left[i] + 1);
        for (std::size_t i = 0; i < b0.core_right.size(); ++i)
            CHECK(b1.core_right[i] == b0.core_right[i] + 1);
    }
}

TEST_CASE("same block")
{
    const SuperParams p11(1, 1), p21(2, 1);
    CHECK(same_block(Weight(p11, {3, -3}), Weight(p11, {7, -7})));
    CHECK_FALSE(same_block(Weight::zero(p21), Weight(p21, {1, 1, 0})));

    const SuperParams p(2, 2);
    std::mt19937 rng(7);
    auto weights = dominant_grid(p, -2, 2);
    std::shuffle(weights.begin(), weights.end(), rng);
    weights.erase(weights.begin() + 40, weights.end());
    for (const auto& a : weights) {
        CHECK(same_block(a, a));
        for (const auto& b : weights) {
            CHECK(same_block(a, b) == same_block(b, a));
            if (!same_block(a, b))
                continue;
            for (const auto& c : weights)
                if (same_block(b, c))
                    CHECK(same_block(a, c));
        }
    }
}

TEST_CASE("lengths")
{
    const SuperParams p11(1, 1), p21(2, 1), p22(2, 2);
    CHECK(naive_length(Weight(p11, {3, -3})) == 3);
    CHECK(naive_length(Weight(p22, {2, 1, -1, -2})) == 3);
    CHECK(naive_length(Weight::zero(p21)) == 0);
    CHECK(length(Weight(p11, {3, -3})) == 3);
    CHECK(length(Weight(p21, {1, 1, 0})) == 0);
    for (std::int64_t a1 = -4; a1 <= 4; ++a1)
        for (std::int64_t a2 = -4; a2 <= a1; ++a2) {
            const Weight w = principal(2, {a1, a2});
            CHECK(in_principal_block(w));
            CHECK(length(w) == naive_length(w));
        }
    for (std::int64_t a1 = -2; a1 <= 2; ++a1)
        for (std::int64_t a2 = -2; a2 <= a1; ++a2)
            for (std::int64_t a3 = -2; a3 <= a2; ++a3) {
                const Weight w = principal(3, {a1, a2, a3});
                CHECK(length(w) == naive_length(w));
            }
}

TEST_CASE("bruhat order on the principal block")
{
    CHECK(bruhat_leq_principal(principal(1, {-2}), principal(1, {0})));
    CHECK(bruhat_leq_principal(principal(2, {0, -1}), principal(2, {0, 0})));
    CHECK_FALSE(bruhat_leq_principal(principal(2, {1, 0}), principal(2, {0, 0})));
    CHECK(bruhat_leq_principal(principal(2, {3, -1}), principal(2, {3, -1})));
    const SuperParams p21(2, 1);
    CHECK_THROWS_AS(bruhat_leq_principal(Weight::zero(p21), Weight::zero(p21)), DomainError);
    CHECK_THROWS_AS(
        bruhat_leq_principal(Weight(SuperParams(1, 1), {1, 0}), principal(1, {0})), DomainError);
}

TEST_CASE("root partition")
{
    const auto part = root_partition(Weight::zero(SuperParams(2, 1)));
    CHECK(part.a_m.empty());
    CHECK(part.b_m == std::vector<Root>{{1, 2}});
    CHECK(part.c_m.empty());

    for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {3, 3}, {4, 2}, {4, 3}}) {
        const SuperParams p(m, n);
        for (const Weight& w : dominant_grid(p, -1, 1)) {
            const auto r = root_partition(w);
            const int k = atypicality(w).atypicality;
            CHECK(r.b_m.size() == static_cast<std::size_t>((m - k) * k));
            CHECK(r.c_m.size() == static_cast<std::size_t>((k * k - k) / 2));
            std::vector<Root> all = r.a_m;
            all.insert(all.end(), r.b_m.begin(), r.b_m.end());
            all.insert(all.end(), r.c_m.begin(), r.c_m.end());
            std::sort(all.begin(), all.end());
            CHECK(all == positive_roots_m(p));
            std::vector<Root> alln = r.a_n;
            alln.insert(alln.end(), r.b_n.begin(), r.b_n.end());
            alln.insert(alln.end(), r.c_n.begin(), r.c_n.end());
            std::sort(alln.begin(), alln.end());
            CHECK(alln == positive_roots_n(p));
        }
    }
}
