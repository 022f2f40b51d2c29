#pragma once

#include "glmn/arith.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace glmn {

// coeffs . x (= or >=) rhs
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational rhs;
};

/// H-representation; variables are ordered (b_1..b_k, a_1..a_k).
struct RationalPolytope {
    int dim_ambient = 0;
    std::vector<LinearConstraint> equalities;
    std::vector<LinearConstraint> inequalities;
};

using RationalPoint = std::vector<Rational>;
using LatticePoint = std::vector<std::int64_t>;
using Polynomial = std::vector<Rational>; // coefficient of d^j at index j

/// Ehrhart quasipolynomial: polys[r] applies when d mod period == r.
struct QuasiPolynomial {
    std::int64_t period = 1;
    std::vector<Polynomial> polys;

    Rational evaluate(std::int64_t d) const;
    int degree() const;
};

// The dilation-one polytope P for atypicality k >= 2.
RationalPolytope build_polytope(int k);

RationalPoint interior_witness(int k);

// Smallest slack over all inequalities (negative when violated) and the equality residual.
struct ConstraintSlack {
    Rational min_inequality_slack;
    Rational max_equality_residual; // absolute value
};
ConstraintSlack constraint_slack(const RationalPolytope& poly, const RationalPoint& x);

// Integer membership test for the dilate dP.
bool in_dilate(int k, std::int64_t d, const LatticePoint& x);

// Lattice points of dP in lexicographic order.
std::vector<LatticePoint> enumerate_lattice_points(int k, std::int64_t d);
std::int64_t count_lattice_points(int k, std::int64_t d);

// Independent full-box scan over [-d,0]^{2k}; for small d only.
std::vector<LatticePoint> brute_force_lattice_points(int k, std::int64_t d);

std::vector<RationalPoint> polytope_vertices(const RationalPolytope& poly);
// lcm of the denominators of all vertex coordinates; the Ehrhart period divides it.
std::int64_t vertex_denominator_lcm(const RationalPolytope& poly);

// Fits by exact per-residue interpolation of degree 2k-1 with held-out validation.
// max_period <= 0 means "use the vertex denominator lcm of P".
QuasiPolynomial fit_quasipolynomial(const std::map<std::int64_t, Integer>& counts, int k,
                                    std::int64_t max_period = 0);

Polynomial lower_bound_poly(const QuasiPolynomial& q);
Rational evaluate(const Polynomial& p, std::int64_t d);

std::pair<std::int64_t, std::int64_t> k1_degenerate_point();

// Ordinary least squares slope of log(count) against log(d) over [dmin, dmax].
double loglog_slope(const std::map<std::int64_t, Integer>& counts, std::int64_t dmin,
                    std::int64_t dmax);

// Largest d accepted by the enumerator for this k.
std::int64_t enumeration_limit(int k);

} // namespace glmn
