#pragma once

#include "glmn/arith.hpp"
#include "glmn/weight.hpp"

#include <cstdint>
#include <vector>

namespace glmn {

struct DimBound {
    Integer lower;
    Integer upper;
};

// Window of admissible b in -d = |lambda| - |mu| + b.
struct ExtDegreeWindow {
    std::int64_t base = 0;
    std::int64_t width = 0;
};

// Dimension of the simple g0 = gl(m) x gl(n) module of highest weight mu.
Integer weyl_dim_g0(const Weight& mu);

// 2^{2mn} dim L0(mu) >= dim P(mu) >= dim L0(mu).
DimBound projective_dim_bounds(const Weight& mu);

// Exponent e in dim P(mu) <= C d^e for mu in an atypicality-k block.
std::int64_t proj_growth_exponent(const SuperParams& p, int k);

Integer partitions_at_most_k_parts(std::int64_t i, int k);

// All partitions of i with at most k parts, each sorted decreasing and padded to length k.
std::vector<std::vector<std::int64_t>> enumerate_partitions(std::int64_t i, int k);

ExtDegreeWindow ext_degree_window(const Weight& lambda, const Weight& mu, std::int64_t d);

// Necessary condition for Ext^d(K(lambda), L(mu)) != 0.
bool ext_degree_constraint(const Weight& lambda, const Weight& mu, std::int64_t d);

// Highest weights (with multiplicity) of S^d(g1*) as a g0-module for gl(k|k).
std::vector<Weight> cauchy_symmetric_decomposition(const SuperParams& p, std::int64_t d);

// dim Hom_{g0}(L0(sigma), S^d(g1*)) predicted from the block combinatorics.
int kac_ext_trivial(const Weight& sigma, std::int64_t d);

} // namespace glmn
