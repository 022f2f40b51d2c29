#pragma once

#include "glmn/weight.hpp"

#include <cstdint>
#include <string>

namespace glmn {

enum class ModuleKind { Kac, DualKac, Simple };

std::string to_string(ModuleKind kind);
// Accepts "kac", "dualkac", "simple" (case-insensitive); throws ParameterError otherwise.
ModuleKind parse_module_kind(const std::string& s);

struct InvariantReport {
    std::int64_t complexity = 0;
    std::int64_t z_invariant = 0;
    std::int64_t dim_X = 0;
    std::int64_t dim_V_g_g0 = 0;
    std::int64_t dim_V_f_f0 = 0;
    std::int64_t dim_rank_plus = 0;
    std::int64_t dim_rank_minus = 0;

    bool operator==(const InvariantReport&) const = default;
};

// Dimension of the closure of the rank-r G0-orbit in g_{+1}.
std::int64_t rank_orbit_closure_dim(const SuperParams& p, int r);

std::int64_t complexity(ModuleKind kind, const Weight& lambda);
std::int64_t z_invariant(ModuleKind kind, const Weight& lambda);
InvariantReport variety_dims(ModuleKind kind, const Weight& lambda);

} // namespace glmn
