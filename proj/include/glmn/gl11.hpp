#pragma once

#include "glmn/arith.hpp"
#include "glmn/linalg.hpp"
#include "glmn/module.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace glmn {

// Weights of the gl(1|1) principal block are t(eps_1 - eps_2); t is stored alone.

struct Gl11Target {
    enum class Kind { Kac, Simple };
    Kind kind;
    std::int64_t lambda;
};

struct ResolutionTrace {
    Gl11Target target;
    // degrees[d][mu] = multiplicity of P(mu) in P_d
    std::vector<std::map<std::int64_t, std::int64_t>> degrees;
    // boundaries[d]: P_d -> P_{d-1}, with boundaries[0] the augmentation P_0 -> target.
    std::vector<Matrix> boundaries;

    int depth() const { return static_cast<int>(degrees.size()) - 1; }
    std::int64_t total_dim(int d) const;
};

inline constexpr int kMaxResolutionDepth = 25;

MatrixModule gl11_projective(std::int64_t lambda);
MatrixModule gl11_target_module(const Gl11Target& target);

// dim Hom(M, L(mu)) for every mu, i.e. the head multiplicities of M.
std::map<std::int64_t, std::int64_t> gl11_head(const MatrixModule& m);

ResolutionTrace gl11_minimal_resolution(const Gl11Target& target, int depth);

// Multiplicity of P(mu) in degree d of the resolution.
std::int64_t gl11_ext(const ResolutionTrace& trace, std::int64_t mu, int d);
std::int64_t gl11_ext(const Gl11Target& target, std::int64_t mu, int d);

// Naive KL polynomial p_{lambda,mu}(q); index j holds the coefficient of q^j.
std::vector<Integer> kl_poly_gl11(std::int64_t lambda, std::int64_t mu);

enum class GrowthWeighting { ByProjectiveDim, Unit };

struct GrowthFit {
    std::int64_t rate = 0;
    double slope = 0.0;
};

GrowthFit measured_growth(const ResolutionTrace& trace, GrowthWeighting weighting);

} // namespace glmn
