#include "glmn/weight.hpp"

#include "glmn/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace glmn {

SuperParams::SuperParams(int m, int n) : m_(m), n_(n)
{
    if (n < 1 || m < n)
        throw ParameterError("gl(m|n) requires m >= n >= 1, got m=" + std::to_string(m) +
                             " n=" + std::to_string(n));
}

std::string Root::to_string() const
{
    return "e" + std::to_string(i) + "-e" + std::to_string(j);
}

Weight::Weight(SuperParams params, std::vector<std::int64_t> coeffs)
    : params_(params), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != static_cast<std::size_t>(params_.size()))
        throw ParameterError("weight for gl(" + std::to_string(params_.m()) + "|" +
                             std::to_string(params_.n()) + ") needs " +
                             std::to_string(params_.size()) + " coefficients, got " +
                             std::to_string(coeffs_.size()));
}

Weight Weight::zero(SuperParams params)
{
    return Weight(params, std::vector<std::int64_t>(static_cast<std::size_t>(params.size()), 0));
}

Weight Weight::epsilon(SuperParams params, int i)
{
    Weight w = zero(params);
    w.coeffs_.at(static_cast<std::size_t>(i - 1)) = 1;
    return w;
}

namespace {

void require_same(const SuperParams& a, const SuperParams& b)
{
    if (!(a == b))
        throw ParameterError("weights belong to different superalgebras");
}

} // namespace

Weight Weight::operator+(const Weight& other) const
{
    require_same(params_, other.params_);
    Weight r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] += other.coeffs_[i];
    return r;
}

Weight Weight::operator-(const Weight& other) const
{
    require_same(params_, other.params_);
    Weight r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] -= other.coeffs_[i];
    return r;
}

Weight Weight::operator*(std::int64_t s) const
{
    Weight r = *this;
    for (auto& c : r.coeffs_)
        c *= s;
    return r;
}

std::string Weight::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < params_.size(); ++i) {
        if (i == params_.m())
            os << " |";
        if (i > 0)
            os << (i == params_.m() ? " " : ", ");
        os << coeffs_[static_cast<std::size_t>(i)];
    }
    os << ")";
    return os.str();
}

std::int64_t bilinear_form(const Weight& a, const Weight& b)
{
    require_same(a.params(), b.params());
    const int m = a.params().m();
    std::int64_t s = 0;
    for (int i = 1; i <= a.params().size(); ++i)
        s += (i <= m ? 1 : -1) * a.coeff(i) * b.coeff(i);
    return s;
}

std::int64_t pair_with_root(const Weight& w, const Root& alpha)
{
    const int m = w.params().m();
    auto form_eps = [&](int s) { return (s <= m ? 1 : -1) * w.coeff(s); };
    return form_eps(alpha.i) - form_eps(alpha.j);
}

Weight root_weight(const SuperParams& p, const Root& alpha)
{
    return Weight::epsilon(p, alpha.i) - Weight::epsilon(p, alpha.j);
}

Weight rho_m(const SuperParams& p)
{
    Weight w = Weight::zero(p);
    std::vector<std::int64_t> c = w.coeffs();
    for (int i = 1; i <= p.m(); ++i)
        c[static_cast<std::size_t>(i - 1)] = p.m() - i + 1;
    return Weight(p, c);
}

Weight rho_n(const SuperParams& p)
{
    std::vector<std::int64_t> c(static_cast<std::size_t>(p.size()), 0);
    for (int s = 1; s <= p.n(); ++s)
        c[static_cast<std::size_t>(p.m() + s - 1)] = -s;
    return Weight(p, c);
}

Weight rho(const SuperParams& p) { return rho_m(p) + rho_n(p); }

Weight berezinian(const SuperParams& p)
{
    std::vector<std::int64_t> c(static_cast<std::size_t>(p.size()), 1);
    for (int i = p.m(); i < p.size(); ++i)
        c[static_cast<std::size_t>(i)] = -1;
    return Weight(p, c);
}

std::vector<Root> positive_roots_m(const SuperParams& p)
{
    std::vector<Root> out;
    for (int i = 1; i <= p.m(); ++i)
        for (int j = i + 1; j <= p.m(); ++j)
            out.push_back({i, j});
    return out;
}

std::vector<Root> positive_roots_n(const SuperParams& p)
{
    std::vector<Root> out;
    for (int i = p.m() + 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            out.push_back({i, j});
    return out;
}

std::vector<Root> positive_odd_roots(const SuperParams& p)
{
    std::vector<Root> out;
    for (int i = 1; i <= p.m(); ++i)
        for (int j = p.m() + 1; j <= p.size(); ++j)
            out.push_back({i, j});
    return out;
}

bool is_dominant(const Weight& lambda)
{
    const auto& p = lambda.params();
    for (int i = 1; i < p.size(); ++i) {
        if (i == p.m())
            continue;
        if (lambda.coeff(i) < lambda.coeff(i + 1))
            return false;
    }
    return true;
}

namespace {

void require_dominant(const Weight& lambda, const char* what)
{
    if (!is_dominant(lambda))
        throw DomainError(std::string(what) + ": weight " + lambda.to_string() +
                          " is not dominant");
}

// Orthogonality of distinct odd positive roots reduces to disjoint endpoints, so a
// maximal orthogonal family annihilating lambda+rho is a maximum bipartite matching
// between the two index blocks restricted to edges with (lambda+rho, alpha) = 0.
std::vector<Root> atypical_roots(const Weight& shifted)
{
    const auto& p = shifted.params();
    const int m = p.m();
    const int n = p.n();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (const Root& r : positive_odd_roots(p))
        if (pair_with_root(shifted, r) == 0)
            adj[static_cast<std::size_t>(r.i - 1)].push_back(r.j - m - 1);

    // Greedy pass.
    std::vector<int> match_right(static_cast<std::size_t>(n), -1);
    int greedy = 0;
    for (int i = 0; i < m; ++i)
        for (int j : adj[static_cast<std::size_t>(i)])
            if (match_right[static_cast<std::size_t>(j)] < 0) {
                match_right[static_cast<std::size_t>(j)] = i;
                ++greedy;
                break;
            }

    // Verification by augmenting paths; any augmentation means greedy was not maximum.
    std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& seen) {
        for (int j : adj[static_cast<std::size_t>(i)]) {
            if (seen[static_cast<std::size_t>(j)])
                continue;
            seen[static_cast<std::size_t>(j)] = 1;
            int& owner = match_right[static_cast<std::size_t>(j)];
            if (owner < 0 || augment(owner, seen)) {
                owner = i;
                return true;
            }
        }
        return false;
    };
    std::vector<char> matched_left(static_cast<std::size_t>(m), 0);
    for (int j = 0; j < n; ++j)
        if (match_right[static_cast<std::size_t>(j)] >= 0)
            matched_left[static_cast<std::size_t>(match_right[static_cast<std::size_t>(j)])] = 1;
    int total = greedy;
    for (int i = 0; i < m; ++i) {
        if (matched_left[static_cast<std::size_t>(i)])
            continue;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        if (augment(i, seen))
            ++total;
    }
    (void)total;

    std::vector<Root> omega;
    for (int j = 0; j < n; ++j)
        if (match_right[static_cast<std::size_t>(j)] >= 0)
            omega.push_back({match_right[static_cast<std::size_t>(j)] + 1, m + j + 1});
    std::sort(omega.begin(), omega.end());
    return omega;
}

} // namespace

BlockDescriptor atypicality(const Weight& lambda)
{
    require_dominant(lambda, "atypicality");
    const auto& p = lambda.params();
    const Weight shifted = lambda + rho(p);

    BlockDescriptor bd;
    bd.omega = atypical_roots(shifted);
    bd.atypicality = static_cast<int>(bd.omega.size());

    // Uniqueness of omega: every index carries at most one zero pairing. Dominant
    // weights have distinct (lambda+rho, eps_s) inside each block, which forces this.
    for (const Root& r : positive_odd_roots(p)) {
        if (pair_with_root(shifted, r) != 0)
            continue;
        bool covered = std::any_of(bd.omega.begin(), bd.omega.end(), [&](const Root& o) {
            return o.i == r.i || o.j == r.j;
        });
        if (!covered)
            throw InternalError("atypicality: matching is not maximal at " + r.to_string());
    }

    std::vector<char> used(static_cast<std::size_t>(p.size() + 1), 0);
    for (const Root& r : bd.omega) {
        used[static_cast<std::size_t>(r.i)] = 1;
        used[static_cast<std::size_t>(r.j)] = 1;
    }
    for (int s = 1; s <= p.size(); ++s) {
        if (used[static_cast<std::size_t>(s)])
            continue;
        const std::int64_t value = bilinear_form(shifted, Weight::epsilon(p, s));
        (s <= p.m() ? bd.core_left : bd.core_right).push_back(value);
    }
    std::sort(bd.core_left.begin(), bd.core_left.end(), std::greater<>());
    std::sort(bd.core_right.begin(), bd.core_right.end());
    return bd;
}

bool same_block(const Weight& a, const Weight& b)
{
    require_same(a.params(), b.params());
    return atypicality(a).same_block_as(atypicality(b));
}

std::int64_t naive_length(const Weight& lambda)
{
    require_dominant(lambda, "naive_length");
    std::int64_t s = 0;
    for (int i = 1; i <= lambda.params().m(); ++i)
        s += lambda.coeff(i);
    return s;
}

std::int64_t length(const Weight& lambda)
{
    const BlockDescriptor bd = atypicality(lambda);
    const auto& p = lambda.params();
    std::vector<std::int64_t> plus(static_cast<std::size_t>(p.size()), 0);
    for (int i = 1; i <= p.m(); ++i)
        plus[static_cast<std::size_t>(i - 1)] = lambda.coeff(i);
    const Weight shifted = Weight(p, plus) + rho_n(p);
    const std::int64_t k = bd.atypicality;
    std::int64_t total = k * (k + 1) / 2;
    for (const Root& alpha : bd.omega)
        total += pair_with_root(shifted, alpha);
    return total;
}

bool in_principal_block(const Weight& lambda)
{
    const auto& p = lambda.params();
    if (p.m() != p.n() || !is_dominant(lambda))
        return false;
    return atypicality(lambda).atypicality == p.n();
}

bool bruhat_leq_principal(const Weight& a, const Weight& b)
{
    require_same(a.params(), b.params());
    if (!in_principal_block(a) || !in_principal_block(b))
        throw DomainError("bruhat_leq_principal: weights must lie in the principal block of gl(k|k)");
    for (int i = 1; i <= a.params().m(); ++i)
        if (a.coeff(i) > b.coeff(i))
            return false;
    return true;
}

RootPartition root_partition(const Weight& lambda)
{
    const BlockDescriptor bd = atypicality(lambda);
    const auto& p = lambda.params();
    std::vector<char> hit(static_cast<std::size_t>(p.size() + 1), 0);
    for (const Root& r : bd.omega) {
        hit[static_cast<std::size_t>(r.i)] = 1;
        hit[static_cast<std::size_t>(r.j)] = 1;
    }
    auto hits = [&](const Root& r) {
        return int(hit[static_cast<std::size_t>(r.i)]) + int(hit[static_cast<std::size_t>(r.j)]);
    };
    RootPartition out;
    for (const Root& r : positive_roots_m(p)) {
        switch (hits(r)) {
        case 0: out.a_m.push_back(r); break;
        case 1: out.b_m.push_back(r); break;
        default: out.c_m.push_back(r); break;
        }
    }
    for (const Root& r : positive_roots_n(p)) {
        switch (hits(r)) {
        case 0: out.a_n.push_back(r); break;
        case 1: out.b_n.push_back(r); break;
        default: out.c_n.push_back(r); break;
        }
    }
    return out;
}

} // namespace glmn
