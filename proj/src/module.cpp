#include "glmn/module.hpp"

#include "glmn/dimension.hpp"
#include "glmn/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>

namespace glmn {

namespace {

std::size_t unit_index(int rank, int i, int j)
{
    return static_cast<std::size_t>((i - 1) * rank + (j - 1));
}

using Term = std::pair<Rational, std::pair<int, int>>;

// [E_ab, E_cd] = delta_bc E_ad - (-1)^{|ab||cd|} delta_da E_cb in gl(m|n).
std::vector<Term> super_bracket(int m, std::pair<int, int> x, std::pair<int, int> y)
{
    auto par = [m](std::pair<int, int> e) { return (e.first <= m) != (e.second <= m) ? 1 : 0; };
    const int sign = (par(x) * par(y)) % 2 == 0 ? 1 : -1;
    std::vector<Term> out;
    if (x.second == y.first)
        out.push_back({Rational(1), {x.first, y.second}});
    if (y.second == x.first)
        out.push_back({Rational(-sign), {y.first, x.second}});
    return out;
}

} // namespace

MatrixModule::MatrixModule(int even_rank, int odd_rank, std::size_t dim)
    : even_rank_(even_rank), odd_rank_(odd_rank), dim_(dim),
      actions_(static_cast<std::size_t>((even_rank + odd_rank) * (even_rank + odd_rank)),
               SparseMatrix(dim, dim)),
      parity_(dim, 0)
{
}

const SparseMatrix& MatrixModule::action(int i, int j) const
{
    return actions_.at(unit_index(rank(), i, j));
}

SparseMatrix& MatrixModule::action(int i, int j) { return actions_.at(unit_index(rank(), i, j)); }

std::string MatrixModule::bracket_violation() const
{
    const int N = rank();
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            const SparseMatrix& A = action(a, b);
            const int pa = generator_parity(a, b);
            for (std::size_t c = 0; c < dim_; ++c)
                for (const auto& [r, v] : A.column(c))
                    if ((parity_[r] ^ parity_[c]) != pa)
                        return "E" + std::to_string(a) + "," + std::to_string(b) +
                               " does not respect parity";
            for (int c = 1; c <= N; ++c)
                for (int d = 1; d <= N; ++d) {
                    if (std::make_pair(c, d) < std::make_pair(a, b))
                        continue;
                    const SparseMatrix& B = action(c, d);
                    const int pb = generator_parity(c, d);
                    const Rational sign = (pa * pb) % 2 == 0 ? 1 : -1;
                    const SparseMatrix lhs = A * B - (B * A).scaled(sign);
                    SparseMatrix rhs(dim_, dim_);
                    for (const auto& [coef, e] : super_bracket(even_rank_, {a, b}, {c, d}))
                        rhs = rhs + action(e.first, e.second).scaled(coef);
                    if (!(lhs == rhs)) {
                        std::ostringstream os;
                        os << "[E" << a << "," << b << ", E" << c << "," << d << "] fails";
                        return os.str();
                    }
                }
        }
    return {};
}

void MatrixModule::check_brackets() const
{
    const std::string v = bracket_violation();
    if (!v.empty())
        throw InternalError("bracket check: " + v);
}

std::vector<std::vector<std::int64_t>> MatrixModule::basis_weights() const
{
    std::vector<std::vector<std::int64_t>> w(dim_, std::vector<std::int64_t>(
                                                       static_cast<std::size_t>(rank()), 0));
    for (int i = 1; i <= rank(); ++i) {
        const SparseMatrix& h = action(i, i);
        for (std::size_t c = 0; c < dim_; ++c) {
            const auto& col = h.column(c);
            if (col.size() > 1 || (col.size() == 1 && col.begin()->first != c))
                throw InternalError("basis_weights: Cartan element is not diagonal");
            if (col.empty())
                continue;
            const Rational& v = col.begin()->second;
            if (!is_integral(v))
                throw InternalError("basis_weights: non-integral weight");
            w[c][static_cast<std::size_t>(i - 1)] = numerator_of(v).convert_to<std::int64_t>();
        }
    }
    return w;
}

MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b)
{
    if (a.even_rank() != b.even_rank() || a.odd_rank() != b.odd_rank())
        throw ParameterError("direct_sum: modules over different algebras");
    MatrixModule s(a.even_rank(), a.odd_rank(), a.dim() + b.dim());
    for (int i = 1; i <= a.rank(); ++i)
        for (int j = 1; j <= a.rank(); ++j)
            s.action(i, j) = a.action(i, j).direct_sum(b.action(i, j));
    auto& p = s.parity();
    std::copy(a.parity().begin(), a.parity().end(), p.begin());
    std::copy(b.parity().begin(), b.parity().end(), p.begin() + static_cast<long>(a.dim()));
    return s;
}

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin realization

std::vector<GTPattern> gt_patterns(const std::vector<std::int64_t>& hw)
{
    const int n = static_cast<int>(hw.size());
    std::vector<GTPattern> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int i = 0; i + 1 < n; ++i)
        if (hw[static_cast<std::size_t>(i)] < hw[static_cast<std::size_t>(i + 1)])
            throw DomainError("gt_patterns: highest weight is not dominant");
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n));
    rows[static_cast<std::size_t>(n - 1)] = hw;
    // Fill row k-1 from row k, entry by entry.
    std::function<void(int, int)> rec = [&](int k, int i) {
        if (k == 1) {
            out.push_back({rows});
            return;
        }
        const auto& upper = rows[static_cast<std::size_t>(k - 1)];
        auto& lower = rows[static_cast<std::size_t>(k - 2)];
        if (i == k - 1) {
            rec(k - 1, 0);
            return;
        }
        if (lower.size() != static_cast<std::size_t>(k - 1))
            lower.assign(static_cast<std::size_t>(k - 1), 0);
        for (std::int64_t v = upper[static_cast<std::size_t>(i + 1)];
             v <= upper[static_cast<std::size_t>(i)]; ++v) {
            lower[static_cast<std::size_t>(i)] = v;
            rec(k, i + 1);
        }
    };
    rec(n, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Integer gl_weyl_dim(const std::vector<std::int64_t>& hw)
{
    Rational prod = 1;
    const std::size_t n = hw.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            prod *= make_rational(hw[i] - hw[j] + static_cast<std::int64_t>(j - i),
                                  static_cast<std::int64_t>(j - i));
    return numerator_of(prod);
}

bool interlaces(const GTPattern& p)
{
    for (std::size_t k = 1; k < p.rows.size(); ++k)
        for (std::size_t i = 0; i < k; ++i)
            if (p.rows[k - 1][i] > p.rows[k][i] || p.rows[k - 1][i] < p.rows[k][i + 1])
                return false;
    return true;
}

} // namespace

MatrixModule gl_simple(int n, const std::vector<std::int64_t>& hw)
{
    if (n < 1 || hw.size() != static_cast<std::size_t>(n))
        throw ParameterError("gl_simple: highest weight must have n entries");
    for (int i = 0; i + 1 < n; ++i)
        if (hw[static_cast<std::size_t>(i)] < hw[static_cast<std::size_t>(i + 1)])
            throw DomainError("gl_simple: highest weight is not dominant");
    if (gl_weyl_dim(hw) > static_cast<long>(kMaxSimpleDim))
        throw ResourceError("gl_simple: dimension exceeds " + std::to_string(kMaxSimpleDim));

    const auto patterns = gt_patterns(hw);
    std::map<GTPattern, std::size_t> index;
    for (std::size_t i = 0; i < patterns.size(); ++i)
        index.emplace(patterns[i], i);
    MatrixModule mod(n, 0, patterns.size());

    // l_{ki} = lambda_{ki} - i + 1 with 1-based i.
    auto l = [](const GTPattern& p, int k, int i) {
        return make_rational(p.rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] -
                             i + 1);
    };

    for (std::size_t c = 0; c < patterns.size(); ++c) {
        const GTPattern& p = patterns[c];
        for (int k = 1; k <= n; ++k) {
            std::int64_t s = 0;
            for (auto v : p.rows[static_cast<std::size_t>(k - 1)])
                s += v;
            if (k > 1)
                for (auto v : p.rows[static_cast<std::size_t>(k - 2)])
                    s -= v;
            if (s != 0)
                mod.action(k, k).add(c, c, make_rational(s));
        }
        for (int k = 1; k < n; ++k)
            for (int i = 1; i <= k; ++i) {
                Rational denom = 1;
                for (int j = 1; j <= k; ++j)
                    if (j != i)
                        denom *= l(p, k, i) - l(p, k, j);
                GTPattern up = p;
                up.rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] += 1;
                if (interlaces(up)) {
                    Rational num = 1;
                    for (int j = 1; j <= k + 1; ++j)
                        num *= l(p, k, i) - l(p, k + 1, j);
                    const Rational coef = -num / denom;
                    if (coef != 0)
                        mod.action(k, k + 1).add(index.at(up), c, coef);
                }
                GTPattern down = p;
                down.rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] -= 1;
                if (interlaces(down)) {
                    Rational num = 1;
                    for (int j = 1; j <= k - 1; ++j)
                        num *= l(p, k, i) - l(p, k - 1, j);
                    const Rational coef = num / denom;
                    if (coef != 0)
                        mod.action(k + 1, k).add(index.at(down), c, coef);
                }
            }
    }

    // Remaining units from commutators of adjacent ones, by increasing distance.
    for (int dist = 2; dist < n; ++dist)
        for (int i = 1; i + dist <= n; ++i) {
            const int j = i + dist;
            mod.action(i, j) = mod.action(i, i + 1) * mod.action(i + 1, j) -
                               mod.action(i + 1, j) * mod.action(i, i + 1);
            mod.action(j, i) = mod.action(j, j - 1) * mod.action(j - 1, i) -
                               mod.action(j - 1, i) * mod.action(j, j - 1);
        }
    if (mod.dim() <= kBracketCheckDim)
        mod.check_brackets();
    return mod;
}

MatrixModule g0_simple(const Weight& lambda)
{
    if (!is_dominant(lambda))
        throw DomainError("g0_simple: weight " + lambda.to_string() + " is not dominant");
    const int m = lambda.params().m();
    const int n = lambda.params().n();
    const auto& c = lambda.coeffs();
    const MatrixModule left = gl_simple(m, std::vector<std::int64_t>(c.begin(), c.begin() + m));
    const MatrixModule right = gl_simple(n, std::vector<std::int64_t>(c.begin() + m, c.end()));
    const std::size_t dl = left.dim(), dr = right.dim();
    if (dl * dr > kMaxModuleDim)
        throw ResourceError("g0_simple: dimension exceeds " + std::to_string(kMaxModuleDim));
    MatrixModule mod(m, n, dl * dr);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            SparseMatrix& t = mod.action(i, j);
            const SparseMatrix& a = left.action(i, j);
            for (std::size_t x = 0; x < dl; ++x)
                for (const auto& [r, v] : a.column(x))
                    for (std::size_t y = 0; y < dr; ++y)
                        t.add(r * dr + y, x * dr + y, v);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            SparseMatrix& t = mod.action(m + i, m + j);
            const SparseMatrix& b = right.action(i, j);
            for (std::size_t y = 0; y < dr; ++y)
                for (const auto& [r, v] : b.column(y))
                    for (std::size_t x = 0; x < dl; ++x)
                        t.add(x * dr + r, x * dr + y, v);
        }
    return mod;
}

// ---------------------------------------------------------------------------
// Induced modules

namespace {

// U(g) (x)_{U(g0 + g_kill)} L0(base). The free odd part acts by exterior multiplication
// on Lambda(g_free); the killing odd part is moved past free factors with supercommutators.
MatrixModule induced_module(const Weight& base, bool free_is_minus)
{
    const SuperParams& p = base.params();
    const int m = p.m(), n = p.n(), N = p.size();
    const int odd = m * n;
    if (odd >= 31)
        throw ResourceError("induced module: odd part too large");
    const Integer d0 = weyl_dim_g0(base);
    const Integer total = d0 * (Integer(1) << odd);
    if (total > static_cast<long>(kMaxModuleDim))
        throw ResourceError("induced module: dimension " + total.str() + " exceeds " +
                            std::to_string(kMaxModuleDim));
    const MatrixModule l0 = g0_simple(base);
    const std::size_t D0 = l0.dim();
    const std::size_t masks = std::size_t{1} << odd;
    const std::size_t dim = masks * D0;

    std::vector<std::pair<int, int>> free_units, kill_units;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const bool is_odd = (i <= m) != (j <= m);
            if (!is_odd)
                continue;
            const bool minus = i > m; // E_ij with i > m >= j lies in g_{-1}
            (minus == free_is_minus ? free_units : kill_units).push_back({i, j});
        }
    std::map<std::pair<int, int>, int> free_pos;
    for (std::size_t t = 0; t < free_units.size(); ++t)
        free_pos[free_units[t]] = static_cast<int>(t);

    auto apply_free = [&](int t, const SparseVector& v) {
        SparseVector out;
        for (const auto& [idx, coef] : v) {
            const std::size_t mask = idx / D0, w = idx % D0;
            if (mask >> t & 1U)
                continue;
            const int below = std::popcount(mask & ((std::size_t{1} << t) - 1));
            const Rational s = below % 2 == 0 ? coef : Rational(-coef);
            axpy(out, s, SparseVector{{(mask | (std::size_t{1} << t)) * D0 + w, Rational(1)}});
        }
        return out;
    };

    // columns[unit][basis index]
    std::vector<std::vector<SparseVector>> cols(static_cast<std::size_t>(N * N),
                                                std::vector<SparseVector>(dim));
    auto col = [&](std::pair<int, int> e) -> std::vector<SparseVector>& {
        return cols[unit_index(N, e.first, e.second)];
    };

    std::vector<std::size_t> order(masks);
    for (std::size_t i = 0; i < masks; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
        return std::popcount(a) < std::popcount(b);
    });

    for (std::size_t mask : order) {
        for (std::size_t w = 0; w < D0; ++w) {
            const std::size_t idx = mask * D0 + w;
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    const std::pair<int, int> e{i, j};
                    const bool is_odd = (i <= m) != (j <= m);
                    SparseVector out;
                    if (is_odd && free_pos.count(e)) {
                        out = apply_free(free_pos.at(e), SparseVector{{idx, Rational(1)}});
                    } else if (mask == 0) {
                        if (!is_odd)
                            for (const auto& [r, v] : l0.action(i, j).column(w))
                                out.emplace(r, v);
                    } else {
                        const int s = std::countr_zero(mask);
                        const std::size_t u = (mask ^ (std::size_t{1} << s)) * D0 + w;
                        const std::pair<int, int> ys = free_units[static_cast<std::size_t>(s)];
                        const auto br = super_bracket(m, e, ys);
                        if (!is_odd) {
                            // H(y u) = [H,y] u + y H(u)
                            for (const auto& [coef, f] : br)
                                axpy(out, coef,
                                     apply_free(free_pos.at(f), SparseVector{{u, Rational(1)}}));
                            axpy(out, 1, apply_free(s, col(e)[u]));
                        } else {
                            // X(y u) = [X,y] u - y X(u)
                            for (const auto& [coef, f] : br)
                                axpy(out, coef, col(f)[u]);
                            axpy(out, -1, apply_free(s, col(e)[u]));
                        }
                    }
                    col(e)[idx] = std::move(out);
                }
        }
    }

    MatrixModule mod(m, n, dim);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            SparseMatrix& a = mod.action(i, j);
            auto& c = col({i, j});
            for (std::size_t x = 0; x < dim; ++x)
                a.set_column(x, std::move(c[x]));
        }
    for (std::size_t x = 0; x < dim; ++x)
        mod.parity()[x] = std::popcount(x / D0) % 2;
    return mod;
}

} // namespace

MatrixModule kac_module(const Weight& lambda)
{
    if (!is_dominant(lambda))
        throw DomainError("kac_module: weight " + lambda.to_string() + " is not dominant");
    MatrixModule mod = induced_module(lambda, true);
    if (mod.dim() <= kBracketCheckDim)
        mod.check_brackets();
    return mod;
}

MatrixModule dual_kac_module(const Weight& lambda)
{
    if (!is_dominant(lambda))
        throw DomainError("dual_kac_module: weight " + lambda.to_string() + " is not dominant");
    const SuperParams& p = lambda.params();
    // Twist by the sum of the positive odd roots so the top layer carries L0(lambda).
    std::vector<std::int64_t> c = lambda.coeffs();
    for (int i = 0; i < p.m(); ++i)
        c[static_cast<std::size_t>(i)] -= p.n();
    for (int j = p.m(); j < p.size(); ++j)
        c[static_cast<std::size_t>(j)] += p.m();
    MatrixModule mod = induced_module(Weight(p, std::move(c)), false);
    if (mod.dim() <= kBracketCheckDim)
        mod.check_brackets();
    return mod;
}

// ---------------------------------------------------------------------------
// Rank tests

SparseMatrix action_of(const MatrixModule& m, const AlgebraElement& x)
{
    SparseMatrix out(m.dim(), m.dim());
    for (const auto& [coef, e] : x)
        out = out + m.action(e.first, e.second).scaled(coef);
    return out;
}

bool odd_projectivity_test(const MatrixModule& m, const AlgebraElement& x)
{
    const SparseMatrix X = action_of(m, x);
    if (!(X * X).is_zero())
        throw PreconditionError("odd_projectivity_test: x does not act with square zero");
    return 2 * X.rank() == m.dim();
}

AlgebraElement rank_representative(int m, int r, int side)
{
    AlgebraElement x;
    for (int t = 1; t <= r; ++t)
        x.push_back({Rational(1), side > 0 ? std::pair{t, m + t} : std::pair{m + t, t}});
    return x;
}

AlgebraElement f_representative(int m, int s, int side)
{
    AlgebraElement x;
    for (int t = 1; t <= s; ++t)
        x.push_back({Rational(1), side > 0 ? std::pair{m - t + 1, m + t} : std::pair{m + t, m - t + 1}});
    return x;
}

namespace {

int largest_nonprojective(const MatrixModule& mod, int side,
                          AlgebraElement (*rep)(int, int, int))
{
    if (side != 1 && side != -1)
        throw ParameterError("rank variety side must be +1 or -1");
    if (mod.odd_rank() < 1)
        throw ParameterError("rank variety requires a superalgebra module");
    const int m = mod.even_rank();
    const int n = mod.odd_rank();
    for (int r = n; r >= 1; --r)
        if (!odd_projectivity_test(mod, rep(m, r, side)))
            return r;
    return 0;
}

} // namespace

int rank_variety(const MatrixModule& mod, int side)
{
    return largest_nonprojective(mod, side, &rank_representative);
}

int f_rank_variety(const MatrixModule& mod, int side)
{
    return largest_nonprojective(mod, side, &f_representative);
}

bool trivial_summand_check(const Weight& lambda)
{
    const SuperParams& p = lambda.params();
    const MatrixModule k = kac_module(lambda);
    const SparseMatrix X = action_of(k, rank_representative(p.m(), p.n(), 1));
    return 2 * X.rank() < k.dim();
}

} // namespace glmn
