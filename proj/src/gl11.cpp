#include "glmn/gl11.hpp"

#include "glmn/errors.hpp"

#include <cmath>
#include <numeric>
#include <set>

namespace glmn {

std::int64_t ResolutionTrace::total_dim(int d) const
{
    std::int64_t t = 0;
    for (const auto& [mu, mult] : degrees.at(static_cast<std::size_t>(d)))
        t += 4 * mult;
    return t;
}

MatrixModule gl11_projective(std::int64_t t)
{
    // Basis v, E21 v, E12 v, E12 E21 v.
    MatrixModule p(1, 1, 4);
    const std::int64_t w[4] = {t, t - 1, t + 1, t};
    for (std::size_t i = 0; i < 4; ++i) {
        if (w[i] != 0) {
            p.action(1, 1).add(i, i, make_rational(w[i]));
            p.action(2, 2).add(i, i, make_rational(-w[i]));
        }
    }
    p.action(2, 1).add(1, 0, 1);
    p.action(2, 1).add(3, 2, -1);
    p.action(1, 2).add(2, 0, 1);
    p.action(1, 2).add(3, 1, 1);
    p.parity() = {0, 1, 1, 0};
    p.check_brackets();
    return p;
}

MatrixModule gl11_target_module(const Gl11Target& target)
{
    const std::int64_t t = target.lambda;
    if (target.kind == Gl11Target::Kind::Simple) {
        MatrixModule s(1, 1, 1);
        if (t != 0) {
            s.action(1, 1).add(0, 0, make_rational(t));
            s.action(2, 2).add(0, 0, make_rational(-t));
        }
        return s;
    }
    MatrixModule k(1, 1, 2);
    const std::int64_t w[2] = {t, t - 1};
    for (std::size_t i = 0; i < 2; ++i)
        if (w[i] != 0) {
            k.action(1, 1).add(i, i, make_rational(w[i]));
            k.action(2, 2).add(i, i, make_rational(-w[i]));
        }
    k.action(2, 1).add(1, 0, 1);
    k.parity() = {0, 1};
    k.check_brackets();
    return k;
}

namespace {

struct DenseModule {
    Matrix e11, e22, e12, e21;
    std::vector<std::int64_t> weight; // E11 eigenvalue of each basis vector

    std::size_t dim() const { return weight.size(); }
};

DenseModule to_dense(const MatrixModule& m)
{
    if (m.even_rank() != 1 || m.odd_rank() != 1)
        throw ParameterError("expected a gl(1|1) module");
    DenseModule d{m.action(1, 1).to_dense(), m.action(2, 2).to_dense(), m.action(1, 2).to_dense(),
                  m.action(2, 1).to_dense(), {}};
    for (const auto& w : m.basis_weights())
        d.weight.push_back(w[0]);
    return d;
}

// Column indices grouped by weight, for homogeneous columns.
std::map<std::int64_t, std::vector<std::size_t>> by_weight(const std::vector<std::int64_t>& w)
{
    std::map<std::int64_t, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        out[w[i]].push_back(i);
    return out;
}

// Basis vectors (indices) of M spanning a complement of rad M = E12 M + E21 M, per weight.
std::vector<std::size_t> head_vectors(const DenseModule& m)
{
    const Matrix rad = m.e12.hconcat(m.e21);
    std::vector<std::size_t> head;
    for (const auto& [t, rows] : by_weight(m.weight)) {
        // Restrict radical columns to the rows of weight t; other rows vanish on them anyway.
        Matrix r(rows.size(), rad.cols());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = 0; c < rad.cols(); ++c)
                r.at(i, c) = rad.at(rows[i], c);
        std::size_t rank = r.rank();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Matrix e(rows.size(), 1);
            e.at(i, 0) = 1;
            Matrix trial = r.hconcat(e);
            const std::size_t rk = trial.rank();
            if (rk > rank) {
                r = std::move(trial);
                rank = rk;
                head.push_back(rows[i]);
            }
        }
    }
    return head;
}

Matrix unit_column(std::size_t n, std::size_t i)
{
    Matrix e(n, 1);
    e.at(i, 0) = 1;
    return e;
}

} // namespace

std::map<std::int64_t, std::int64_t> gl11_head(const MatrixModule& m)
{
    const DenseModule d = to_dense(m);
    std::map<std::int64_t, std::int64_t> out;
    for (std::size_t h : head_vectors(d))
        ++out[d.weight[h]];
    return out;
}

ResolutionTrace gl11_minimal_resolution(const Gl11Target& target, int depth)
{
    if (depth < 0 || depth > kMaxResolutionDepth)
        throw DomainError("gl11_minimal_resolution: depth must lie in [0, " +
                          std::to_string(kMaxResolutionDepth) + "]");
    ResolutionTrace trace{target, {}, {}};
    DenseModule cur = to_dense(gl11_target_module(target));
    const std::int64_t radius = depth + 2;
    Matrix prev_embedding; // kernel of the previous cover inside P_{d-1}

    for (int d = 0; d <= depth; ++d) {
        std::map<std::int64_t, std::int64_t> summands;
        if (cur.dim() == 0) {
            trace.degrees.push_back(summands);
            trace.boundaries.emplace_back();
            continue;
        }
        const auto head = head_vectors(cur);
        const std::size_t pdim = 4 * head.size();
        Matrix phi(cur.dim(), pdim);
        std::vector<std::int64_t> pweight;
        DenseModule proj{Matrix(pdim, pdim), Matrix(pdim, pdim), Matrix(pdim, pdim),
                         Matrix(pdim, pdim), {}};
        for (std::size_t h = 0; h < head.size(); ++h) {
            const std::int64_t t = cur.weight[head[h]];
            if (t < target.lambda - radius || t > target.lambda + radius)
                throw InternalError("gl11_minimal_resolution: head weight " + std::to_string(t) +
                                    " escaped the weight window");
            ++summands[t];
            const Matrix v = unit_column(cur.dim(), head[h]);
            const Matrix images[4] = {v, cur.e21 * v, cur.e12 * v, cur.e12 * (cur.e21 * v)};
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t r = 0; r < cur.dim(); ++r)
                    phi.at(r, 4 * h + j) = images[j].at(r, 0);
            const DenseModule p = to_dense(gl11_projective(t));
            for (std::size_t a = 0; a < 4; ++a) {
                pweight.push_back(p.weight[a]);
                for (std::size_t b = 0; b < 4; ++b) {
                    proj.e11.at(4 * h + a, 4 * h + b) = p.e11.at(a, b);
                    proj.e22.at(4 * h + a, 4 * h + b) = p.e22.at(a, b);
                    proj.e12.at(4 * h + a, 4 * h + b) = p.e12.at(a, b);
                    proj.e21.at(4 * h + a, 4 * h + b) = p.e21.at(a, b);
                }
            }
        }
        proj.weight = pweight;
        if (phi.rank() != cur.dim())
            throw InternalError("gl11_minimal_resolution: projective cover is not surjective");

        trace.degrees.push_back(summands);
        trace.boundaries.push_back(d == 0 ? phi : prev_embedding * phi);

        // Weight basis of ker(phi).
        std::vector<Matrix> blocks;
        std::vector<std::int64_t> kweight;
        for (const auto& [t, cols] : by_weight(pweight)) {
            Matrix sub(cur.dim(), cols.size());
            for (std::size_t r = 0; r < cur.dim(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c)
                    sub.at(r, c) = phi.at(r, cols[c]);
            const Matrix k = sub.kernel();
            for (std::size_t c = 0; c < k.cols(); ++c) {
                Matrix col(pdim, 1);
                for (std::size_t r = 0; r < cols.size(); ++r)
                    col.at(cols[r], 0) = k.at(r, c);
                blocks.push_back(std::move(col));
                kweight.push_back(t);
            }
        }
        Matrix basis(pdim, 0);
        for (const auto& b : blocks)
            basis = basis.hconcat(b);

        DenseModule next;
        next.weight = kweight;
        if (!blocks.empty()) {
            auto restrict = [&](const Matrix& g) {
                auto sol = solve(basis, g * basis);
                if (!sol)
                    throw InternalError("gl11_minimal_resolution: kernel is not a submodule");
                return *sol;
            };
            next.e11 = restrict(proj.e11);
            next.e22 = restrict(proj.e22);
            next.e12 = restrict(proj.e12);
            next.e21 = restrict(proj.e21);
        }
        prev_embedding = basis;
        cur = std::move(next);
    }

    // Exactness: consecutive boundaries compose to zero and image equals kernel.
    for (int d = 1; d <= trace.depth(); ++d) {
        const Matrix& hi = trace.boundaries[static_cast<std::size_t>(d)];
        const Matrix& lo = trace.boundaries[static_cast<std::size_t>(d - 1)];
        if (hi.cols() == 0 || lo.cols() == 0)
            continue;
        if (!(lo * hi).is_zero())
            throw InternalError("gl11_minimal_resolution: boundary maps do not compose to zero");
        if (hi.rank() != lo.cols() - lo.rank())
            throw InternalError("gl11_minimal_resolution: complex is not exact at degree " +
                                std::to_string(d - 1));
    }
    return trace;
}

std::int64_t gl11_ext(const ResolutionTrace& trace, std::int64_t mu, int d)
{
    if (d < 0 || d > trace.depth())
        throw DomainError("gl11_ext: resolution computed only to depth " +
                          std::to_string(trace.depth()));
    const auto& deg = trace.degrees[static_cast<std::size_t>(d)];
    auto it = deg.find(mu);
    return it == deg.end() ? 0 : it->second;
}

std::int64_t gl11_ext(const Gl11Target& target, std::int64_t mu, int d)
{
    return gl11_ext(gl11_minimal_resolution(target, d), mu, d);
}

std::vector<Integer> kl_poly_gl11(std::int64_t lambda, std::int64_t mu)
{
    // Ext^n(K(lambda), L(mu)) can be nonzero only for n in {mu-lambda-1, mu-lambda}.
    const std::int64_t span = std::max<std::int64_t>(mu - lambda, 0);
    if (span > kMaxResolutionDepth)
        throw ResourceError("kl_poly_gl11: weights too far apart for the resolution depth bound");
    const int depth = static_cast<int>(span);
    const ResolutionTrace trace =
        gl11_minimal_resolution({Gl11Target::Kind::Kac, lambda}, depth);
    // Lengths in the principal block of gl(1|1) are the coordinates themselves.
    const std::int64_t shift = mu - lambda;
    std::map<std::int64_t, Integer> laurent;
    for (int n = 0; n <= depth; ++n) {
        const std::int64_t e = gl11_ext(trace, mu, n);
        if (e != 0)
            laurent[shift - n] += e;
    }
    std::vector<Integer> poly;
    for (const auto& [exp, coef] : laurent) {
        if (exp < 0)
            throw InternalError("kl_poly_gl11: negative power of q");
        if (poly.size() <= static_cast<std::size_t>(exp))
            poly.resize(static_cast<std::size_t>(exp) + 1, 0);
        poly[static_cast<std::size_t>(exp)] = coef;
    }
    if (!poly.empty()) {
        const Integer at_one = std::accumulate(poly.begin(), poly.end(), Integer(0));
        if (poly[0] != 1 || poly.size() > 2 || at_one > 1)
            throw InternalError("kl_poly_gl11: polynomial violates the degree/value constraints");
    }
    return poly;
}

GrowthFit measured_growth(const ResolutionTrace& trace, GrowthWeighting weighting)
{
    if (trace.depth() < 10)
        throw DomainError("measured_growth: depth must be at least 10");
    std::vector<double> xs, ys;
    bool any = false;
    const int start = std::max(1, (trace.depth() + 1) / 2);
    for (int d = start; d <= trace.depth(); ++d) {
        std::int64_t total = 0;
        for (const auto& [mu, mult] : trace.degrees[static_cast<std::size_t>(d)])
            total += weighting == GrowthWeighting::Unit ? mult : 4 * mult;
        if (total <= 0)
            continue;
        any = true;
        xs.push_back(std::log(static_cast<double>(d)));
        ys.push_back(std::log(static_cast<double>(total)));
    }
    if (!any)
        return {0, 0.0};
    if (xs.size() < 2)
        throw DomainError("measured_growth: fewer than two nonzero degrees to fit");
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = sxy / sxx;
    return {static_cast<std::int64_t>(std::llround(slope + 1.0)), slope};
}

} // namespace glmn
