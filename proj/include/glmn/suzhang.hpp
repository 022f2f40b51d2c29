#pragma once

#include "glmn/weight.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace glmn {

struct ZetaInput {
    SuperParams params;
    int k;
    std::vector<std::int64_t> x;
};

struct WeightPairSet {
    std::int64_t d = 0;
    int k = 0;
    BlockDescriptor block;
    std::vector<std::pair<Weight, Weight>> pairs; // (mu, sigma)
};

Weight zeta(const ZetaInput& input);

// Core of the designated atypicality-k block; omega is left empty.
BlockDescriptor block_B_descriptor(const SuperParams& p, int k);

bool in_block_B(const Weight& w, int k);

// For atypicality one: the block weight whose single atypical value is t, if t is admissible.
std::optional<Weight> atypicality_one_weight(const SuperParams& p, const BlockDescriptor& block,
                                             std::int64_t t);

Weight nu(const SuperParams& p, int k);

// Image in the principal block of gl(k|k).
Weight phi_on_zeta(const ZetaInput& input);
Weight phi_k1(const SuperParams& p, std::int64_t a);

Weight mu_a(const SuperParams& p, std::int64_t a, std::int64_t d);

WeightPairSet build_S(const SuperParams& p, int k, std::int64_t d);

bool check_pair_conditions(const std::pair<Weight, Weight>& pair, std::int64_t d,
                           const SuperParams& p, int k);

} // namespace glmn
