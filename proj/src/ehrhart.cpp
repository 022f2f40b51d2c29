#include "glmn/ehrhart.hpp"

#include "glmn/errors.hpp"
#include "glmn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <numeric>
#include <set>

namespace glmn {

Rational evaluate(const Polynomial& p, std::int64_t d)
{
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * d + *it;
    return acc;
}

Rational QuasiPolynomial::evaluate(std::int64_t d) const
{
    const std::int64_t r = ((d % period) + period) % period;
    return glmn::evaluate(polys.at(static_cast<std::size_t>(r)), d);
}

int QuasiPolynomial::degree() const
{
    int deg = -1;
    for (const auto& p : polys)
        for (int j = static_cast<int>(p.size()) - 1; j > deg; --j)
            if (p[static_cast<std::size_t>(j)] != 0) {
                deg = j;
                break;
            }
    return deg;
}

namespace {

void require_k(int k, const char* what)
{
    if (k < 2)
        throw DomainError(std::string(what) +
                          ": the polytope degenerates for k = 1; use k1_degenerate_point");
}

// Index helpers for (b_1..b_k, a_1..a_k).
std::size_t bi(int, int i) { return static_cast<std::size_t>(i - 1); }
std::size_t ai(int k, int i) { return static_cast<std::size_t>(k + i - 1); }

} // namespace

RationalPolytope build_polytope(int k)
{
    require_k(k, "build_polytope");
    const std::size_t n = static_cast<std::size_t>(2 * k);
    const Rational gap = make_rational(1, 2 * k * k);
    RationalPolytope poly;
    poly.dim_ambient = 2 * k;

    auto row = [&]() { return std::vector<Rational>(n, Rational(0)); };

    {
        auto c = row();
        for (int i = 1; i <= k; ++i) {
            c[bi(k, i)] = 1;
            c[ai(k, i)] = -2;
        }
        poly.equalities.push_back({c, 1});
    }
    for (int u = 1; u < k; ++u) {
        auto c = row();
        c[bi(k, u)] = 1;
        c[bi(k, u + 1)] = -1;
        poly.inequalities.push_back({c, gap});
    }
    {
        auto c = row();
        c[bi(k, 1)] = -1;
        poly.inequalities.push_back({c, gap});
    }
    for (int u = 1; u < k; ++u) {
        auto c = row();
        c[ai(k, u)] = 1;
        c[ai(k, u + 1)] = -1;
        poly.inequalities.push_back({c, 0});
    }
    {
        auto c = row();
        c[ai(k, 1)] = -1;
        poly.inequalities.push_back({c, 0});
    }
    {
        auto lo = row();
        for (int i = 1; i <= k; ++i) {
            lo[bi(k, i)] = 1;
            lo[ai(k, i)] = -1;
        }
        auto hi = lo;
        for (auto& v : hi)
            v = -v;
        poly.inequalities.push_back({lo, 0});
        poly.inequalities.push_back({hi, -1});
    }
    for (int v = 1; v <= k; ++v) {
        auto c = row();
        c[bi(k, v)] = 1;
        c[ai(k, v)] = -1;
        poly.inequalities.push_back({c, 0});
    }
    return poly;
}

ConstraintSlack constraint_slack(const RationalPolytope& poly, const RationalPoint& x)
{
    auto dot = [&](const std::vector<Rational>& c) {
        Rational s = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            s += c[i] * x.at(i);
        return s;
    };
    ConstraintSlack out{Rational(0), Rational(0)};
    bool first = true;
    for (const auto& ineq : poly.inequalities) {
        const Rational s = dot(ineq.coeffs) - ineq.rhs;
        if (first || s < out.min_inequality_slack)
            out.min_inequality_slack = s;
        first = false;
    }
    for (const auto& eq : poly.equalities) {
        Rational r = dot(eq.coeffs) - eq.rhs;
        if (r < 0)
            r = -r;
        if (r > out.max_equality_residual)
            out.max_equality_residual = r;
    }
    return out;
}

RationalPoint interior_witness(int k)
{
    require_k(k, "interior_witness");
    const Rational delta = make_rational(3, 5);
    const Rational delta_p = make_rational(7 * k - 13, 20);
    const Rational k2 = make_rational(k * k);
    RationalPoint x(static_cast<std::size_t>(2 * k));
    for (int i = 1; i <= k; ++i) {
        x[bi(k, i)] = -(1 + i * delta) / k2;
        x[ai(k, i)] = -(1 + i * delta + delta_p) / k2;
    }
    const ConstraintSlack s = constraint_slack(build_polytope(k), x);
    if (s.max_equality_residual != 0 || s.min_inequality_slack <= 0)
        throw InternalError("interior_witness: point is not interior for k = " + std::to_string(k));
    return x;
}

bool in_dilate(int k, std::int64_t d, const LatticePoint& x)
{
    if (x.size() != static_cast<std::size_t>(2 * k))
        return false;
    const std::int64_t g = 2LL * k * k;
    std::int64_t sb = 0, sa = 0;
    for (int i = 1; i <= k; ++i) {
        sb += x[bi(k, i)];
        sa += x[ai(k, i)];
    }
    if (sb - 2 * sa != d)
        return false;
    for (int u = 1; u < k; ++u) {
        if (g * (x[bi(k, u)] - x[bi(k, u + 1)]) < d)
            return false;
        if (x[ai(k, u)] < x[ai(k, u + 1)])
            return false;
    }
    if (-g * x[bi(k, 1)] < d || x[ai(k, 1)] > 0)
        return false;
    if (sb - sa < 0 || sb - sa > d)
        return false;
    for (int v = 1; v <= k; ++v)
        if (x[ai(k, v)] > x[bi(k, v)])
            return false;
    return true;
}

std::int64_t enumeration_limit(int k)
{
    if (k == 2)
        return 256;
    if (k == 3)
        return 120;
    return 0;
}

namespace {

void check_enumeration_bounds(int k, std::int64_t d)
{
    require_k(k, "enumerate_lattice_points");
    if (d < 1)
        throw DomainError("enumerate_lattice_points: d must be positive");
    if (k > 3 || d > enumeration_limit(k))
        throw ResourceError("enumerate_lattice_points: k = " + std::to_string(k) + ", d = " +
                            std::to_string(d) + " exceeds the enumeration bound");
}

// Visits lattice points of dP with b_1 fixed, in lexicographic order.
// Every coordinate lies in [-d, 0]: a_1 <= 0 with a decreasing and sum(a) >= -d, b_v >= a_v.
void visit_slice(int k, std::int64_t d, std::int64_t b1,
                 const std::function<void(const LatticePoint&)>& visit)
{
    const std::int64_t g = 2LL * k * k;
    const std::int64_t gap = ceil_div(d, g); // b_u - b_{u+1} >= gap
    LatticePoint x(static_cast<std::size_t>(2 * k), 0);
    x[0] = b1;

    std::function<void(int, std::int64_t)> rec_a;
    std::function<void(int, std::int64_t)> rec_b = [&](int i, std::int64_t sb) {
        if (i > k) {
            // Sum condition 0 <= sb - sa <= d reduces to sb >= -d once sa is fixed by the equality.
            if (sb < -d || (sb - d) % 2 != 0)
                return;
            rec_a(1, (sb - d) / 2);
            return;
        }
        const std::int64_t hi = x[bi(k, i - 1)] - gap;
        // b's are nonpositive, so a partial sum below -d can never recover.
        for (std::int64_t b = -d; b <= hi; ++b) {
            if (sb + b < -d)
                continue;
            x[bi(k, i)] = b;
            rec_b(i + 1, sb + b);
        }
    };
    rec_a = [&](int i, std::int64_t remaining) {
        const int left = k - i + 1; // entries a_i..a_k still to place, summing to remaining
        std::int64_t hi = x[bi(k, i)];
        if (i > 1)
            hi = std::min(hi, x[ai(k, i - 1)]);
        else
            hi = std::min<std::int64_t>(hi, 0);
        if (i == k) {
            if (remaining <= hi && remaining >= -d) {
                x[ai(k, i)] = remaining;
                visit(x);
            }
            return;
        }
        // a_i is the largest of the remaining entries, so a_i >= remaining / left.
        const std::int64_t lo = std::max<std::int64_t>(-d, ceil_div(remaining, left));
        for (std::int64_t a = lo; a <= hi; ++a) {
            x[ai(k, i)] = a;
            rec_a(i + 1, remaining - a);
        }
    };
    if (g * -b1 < d)
        return;
    rec_b(2, b1);
}

std::vector<std::int64_t> b1_range(int k, std::int64_t d)
{
    const std::int64_t g = 2LL * k * k;
    std::vector<std::int64_t> out;
    for (std::int64_t b1 = -d; b1 <= 0; ++b1)
        if (g * -b1 >= d)
            out.push_back(b1);
    return out;
}

} // namespace

std::vector<LatticePoint> enumerate_lattice_points(int k, std::int64_t d)
{
    check_enumeration_bounds(k, d);
    const auto b1s = b1_range(k, d);
    std::vector<std::future<std::vector<LatticePoint>>> jobs;
    jobs.reserve(b1s.size());
    for (std::int64_t b1 : b1s)
        jobs.push_back(std::async(std::launch::async, [k, d, b1] {
            std::vector<LatticePoint> pts;
            visit_slice(k, d, b1, [&](const LatticePoint& p) { pts.push_back(p); });
            return pts;
        }));
    std::vector<LatticePoint> out;
    for (auto& j : jobs) {
        auto part = j.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

std::int64_t count_lattice_points(int k, std::int64_t d)
{
    check_enumeration_bounds(k, d);
    const auto b1s = b1_range(k, d);
    std::vector<std::future<std::int64_t>> jobs;
    for (std::int64_t b1 : b1s)
        jobs.push_back(std::async(std::launch::async, [k, d, b1] {
            std::int64_t c = 0;
            visit_slice(k, d, b1, [&](const LatticePoint&) { ++c; });
            return c;
        }));
    std::int64_t total = 0;
    for (auto& j : jobs)
        total += j.get();
    return total;
}

std::vector<LatticePoint> brute_force_lattice_points(int k, std::int64_t d)
{
    require_k(k, "brute_force_lattice_points");
    const double cells = std::pow(static_cast<double>(d + 1), 2 * k);
    if (d < 1 || cells > 2e8)
        throw ResourceError("brute_force_lattice_points: box too large");
    std::vector<LatticePoint> out;
    LatticePoint x(static_cast<std::size_t>(2 * k), -d);
    while (true) {
        if (in_dilate(k, d, x))
            out.push_back(x);
        int pos = 2 * k - 1;
        while (pos >= 0 && x[static_cast<std::size_t>(pos)] == 0) {
            x[static_cast<std::size_t>(pos)] = -d;
            --pos;
        }
        if (pos < 0)
            break;
        ++x[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::vector<RationalPoint> polytope_vertices(const RationalPolytope& poly)
{
    const std::size_t n = static_cast<std::size_t>(poly.dim_ambient);
    const std::size_t need = n - poly.equalities.size();
    const std::size_t m = poly.inequalities.size();
    std::set<std::vector<Rational>> seen;
    std::vector<RationalPoint> out;
    std::vector<std::size_t> pick(need);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
        if (depth == need) {
            Matrix a(n, n);
            Matrix b(n, 1);
            std::size_t r = 0;
            for (const auto& eq : poly.equalities) {
                for (std::size_t j = 0; j < n; ++j)
                    a.at(r, j) = eq.coeffs[j];
                b.at(r, 0) = eq.rhs;
                ++r;
            }
            for (std::size_t idx : pick) {
                for (std::size_t j = 0; j < n; ++j)
                    a.at(r, j) = poly.inequalities[idx].coeffs[j];
                b.at(r, 0) = poly.inequalities[idx].rhs;
                ++r;
            }
            if (a.rank() != n)
                return;
            auto sol = solve(a, b);
            if (!sol)
                return;
            RationalPoint x(n);
            for (std::size_t j = 0; j < n; ++j)
                x[j] = sol->at(j, 0);
            if (constraint_slack(poly, x).min_inequality_slack < 0)
                return;
            if (seen.insert(x).second)
                out.push_back(x);
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            pick[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t vertex_denominator_lcm(const RationalPolytope& poly)
{
    std::int64_t l = 1;
    for (const auto& v : polytope_vertices(poly))
        for (const auto& c : v)
            l = std::lcm(l, denominator_of(c).convert_to<std::int64_t>());
    return l;
}

namespace {

// Exact Lagrange-free interpolation via a Vandermonde solve.
Polynomial interpolate(const std::vector<std::pair<std::int64_t, Integer>>& pts)
{
    const std::size_t n = pts.size();
    Matrix a(n, n);
    Matrix b(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        Rational pw = 1;
        for (std::size_t j = 0; j < n; ++j) {
            a.at(i, j) = pw;
            pw *= pts[i].first;
        }
        b.at(i, 0) = Rational(pts[i].second);
    }
    auto sol = solve(a, b);
    if (!sol)
        throw InternalError("interpolate: singular Vandermonde system");
    Polynomial p(n);
    for (std::size_t j = 0; j < n; ++j)
        p[j] = sol->at(j, 0);
    return p;
}

} // namespace

QuasiPolynomial fit_quasipolynomial(const std::map<std::int64_t, Integer>& counts, int k,
                                    std::int64_t max_period)
{
    require_k(k, "fit_quasipolynomial");
    if (max_period <= 0)
        max_period = vertex_denominator_lcm(build_polytope(k));
    const std::size_t terms = static_cast<std::size_t>(2 * k);
    bool any_checked = false;
    for (std::int64_t period = 1; period <= max_period; ++period) {
        std::vector<std::vector<std::pair<std::int64_t, Integer>>> classes(
            static_cast<std::size_t>(period));
        for (const auto& [d, c] : counts)
            classes[static_cast<std::size_t>(d % period)].emplace_back(d, c);
        // Every residue needs the interpolation nodes plus at least one held-out value.
        if (std::any_of(classes.begin(), classes.end(),
                        [&](const auto& cl) { return cl.size() < terms + 1; }))
            continue;
        any_checked = true;
        QuasiPolynomial q;
        q.period = period;
        bool ok = true;
        for (const auto& cl : classes) {
            std::vector<std::pair<std::int64_t, Integer>> nodes(cl.begin(),
                                                                cl.begin() + static_cast<long>(terms));
            Polynomial p = interpolate(nodes);
            for (std::size_t i = terms; i < cl.size() && ok; ++i)
                ok = evaluate(p, cl[i].first) == Rational(cl[i].second);
            if (!ok)
                break;
            q.polys.push_back(std::move(p));
        }
        if (!ok)
            continue;
        const Rational lead = q.polys.front().back();
        const bool shared = std::all_of(q.polys.begin(), q.polys.end(),
                                        [&](const Polynomial& p) { return p.back() == lead; });
        if (!shared || lead <= 0)
            continue;
        return q;
    }
    if (!any_checked)
        throw FitError("fit_quasipolynomial: not enough data to validate any period up to " +
                       std::to_string(max_period));
    throw FitError("fit_quasipolynomial: no consistent period up to " + std::to_string(max_period));
}

Polynomial lower_bound_poly(const QuasiPolynomial& q)
{
    if (q.polys.empty())
        throw DomainError("lower_bound_poly: empty quasipolynomial");
    Polynomial out = q.polys.front();
    for (const auto& p : q.polys) {
        if (p.size() != out.size())
            throw DomainError("lower_bound_poly: constituents of different length");
        for (std::size_t j = 0; j < p.size(); ++j)
            out[j] = std::min(out[j], p[j]);
    }
    return out;
}

std::pair<std::int64_t, std::int64_t> k1_degenerate_point() { return {-1, -1}; }

double loglog_slope(const std::map<std::int64_t, Integer>& counts, std::int64_t dmin,
                    std::int64_t dmax)
{
    std::vector<double> xs, ys;
    for (const auto& [d, c] : counts) {
        if (d < dmin || d > dmax || c <= 0)
            continue;
        xs.push_back(std::log(static_cast<double>(d)));
        ys.push_back(std::log(c.convert_to<double>()));
    }
    if (xs.size() < 2)
        throw DomainError("loglog_slope: fewer than two positive counts in range");
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

} // namespace glmn
