#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace glmn {

/// The pair (m, n) of gl(m|n), normalized so that m >= n >= 1.
class SuperParams {
public:
    SuperParams(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int size() const { return m_ + n_; }

    // Dimension of g_1 (equivalently g_{-1}).
    int odd_half_dim() const { return m_ * n_; }

    bool operator==(const SuperParams&) const = default;

private:
    int m_;
    int n_;
};

/// The root eps_i - eps_j. Indices are 1-based as in the usual matrix-unit notation.
struct Root {
    int i;
    int j;

    bool is_odd(const SuperParams& p) const { return (i <= p.m()) != (j <= p.m()); }
    bool is_positive() const { return i < j; }
    std::string to_string() const;

    auto operator<=>(const Root&) const = default;
};

/// An integral weight sum_i c_i eps_i of gl(m|n).
class Weight {
public:
    Weight(SuperParams params, std::vector<std::int64_t> coeffs);
    Weight(SuperParams params, std::initializer_list<std::int64_t> coeffs)
        : Weight(params, std::vector<std::int64_t>(coeffs))
    {
    }

    static Weight zero(SuperParams params);
    // eps_i, 1-based.
    static Weight epsilon(SuperParams params, int i);

    const SuperParams& params() const { return params_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    // 1-based coefficient of eps_i.
    std::int64_t coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }

    Weight operator+(const Weight& other) const;
    Weight operator-(const Weight& other) const;
    Weight operator*(std::int64_t s) const;

    bool operator==(const Weight&) const = default;

    std::string to_string() const;

private:
    SuperParams params_;
    std::vector<std::int64_t> coeffs_;
};

/// Block invariant: atypicality, core, and the set of atypical roots.
struct BlockDescriptor {
    int atypicality = 0;
    std::vector<std::int64_t> core_left;  // sorted decreasing
    std::vector<std::int64_t> core_right; // sorted increasing
    std::vector<Root> omega;              // sorted by first index

    // Block equality compares atypicality and cores only; omega is weight-specific.
    bool same_block_as(const BlockDescriptor& other) const
    {
        return atypicality == other.atypicality && core_left == other.core_left &&
               core_right == other.core_right;
    }
    bool operator==(const BlockDescriptor&) const = default;
};

struct RootPartition {
    std::vector<Root> a_m, b_m, c_m;
    std::vector<Root> a_n, b_n, c_n;
};

std::int64_t bilinear_form(const Weight& a, const Weight& b);
// (w, eps_i - eps_j) without materializing the root as a weight.
std::int64_t pair_with_root(const Weight& w, const Root& alpha);
Weight root_weight(const SuperParams& p, const Root& alpha);

Weight rho(const SuperParams& p);
Weight rho_m(const SuperParams& p);
Weight rho_n(const SuperParams& p);
// Weight of the one-dimensional Berezinian representation.
Weight berezinian(const SuperParams& p);

std::vector<Root> positive_roots_m(const SuperParams& p);
std::vector<Root> positive_roots_n(const SuperParams& p);
std::vector<Root> positive_odd_roots(const SuperParams& p);

bool is_dominant(const Weight& lambda);

// Throws DomainError unless lambda is dominant.
BlockDescriptor atypicality(const Weight& lambda);
bool same_block(const Weight& a, const Weight& b);

std::int64_t naive_length(const Weight& lambda);
std::int64_t length(const Weight& lambda);

bool in_principal_block(const Weight& lambda);
// Coordinate criterion valid only in the principal block of gl(k|k).
bool bruhat_leq_principal(const Weight& a, const Weight& b);

RootPartition root_partition(const Weight& lambda);

} // namespace glmn
