#include "glmn/invariants.hpp"

#include "glmn/errors.hpp"

#include <algorithm>
#include <cctype>

namespace glmn {

std::string to_string(ModuleKind kind)
{
    switch (kind) {
    case ModuleKind::Kac: return "kac";
    case ModuleKind::DualKac: return "dualkac";
    case ModuleKind::Simple: return "simple";
    }
    return "unknown";
}

ModuleKind parse_module_kind(const std::string& s)
{
    std::string lower = s;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "kac")
        return ModuleKind::Kac;
    if (lower == "dualkac")
        return ModuleKind::DualKac;
    if (lower == "simple")
        return ModuleKind::Simple;
    throw ParameterError("unknown module kind '" + s + "' (expected kac, dualkac, simple)");
}

std::int64_t rank_orbit_closure_dim(const SuperParams& p, int r)
{
    if (r < 0 || r > p.n())
        throw DomainError("rank_orbit_closure_dim: rank " + std::to_string(r) +
                          " outside [0, " + std::to_string(p.n()) + "]");
    return static_cast<std::int64_t>(p.m() + p.n()) * r - static_cast<std::int64_t>(r) * r;
}

namespace {

int atyp(const Weight& lambda) { return atypicality(lambda).atypicality; }

} // namespace

std::int64_t complexity(ModuleKind kind, const Weight& lambda)
{
    const int k = atyp(lambda);
    const std::int64_t base = rank_orbit_closure_dim(lambda.params(), k);
    return kind == ModuleKind::Simple ? base + k : base;
}

std::int64_t z_invariant(ModuleKind kind, const Weight& lambda)
{
    const int k = atyp(lambda);
    return kind == ModuleKind::Simple ? 2 * k : k;
}

InvariantReport variety_dims(ModuleKind kind, const Weight& lambda)
{
    const int k = atyp(lambda);
    const std::int64_t orbit = rank_orbit_closure_dim(lambda.params(), k);
    InvariantReport r;
    r.complexity = complexity(kind, lambda);
    r.z_invariant = z_invariant(kind, lambda);
    r.dim_X = orbit;
    r.dim_V_f_f0 = r.z_invariant;
    switch (kind) {
    case ModuleKind::Kac:
        r.dim_V_g_g0 = 0;
        r.dim_rank_plus = orbit;
        r.dim_rank_minus = 0;
        break;
    case ModuleKind::DualKac:
        r.dim_V_g_g0 = 0;
        r.dim_rank_plus = 0;
        r.dim_rank_minus = orbit;
        break;
    case ModuleKind::Simple:
        r.dim_V_g_g0 = k;
        r.dim_rank_plus = orbit;
        r.dim_rank_minus = orbit;
        break;
    }
    return r;
}

} // namespace glmn
