#pragma once

#include "glmn/arith.hpp"
#include "glmn/linalg.hpp"
#include "glmn/weight.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace glmn {

/// Gelfand-Tsetlin pattern; rows[k-1] is row k (k entries), rows.back() is the highest weight.
struct GTPattern {
    std::vector<std::vector<std::int64_t>> rows;

    auto operator<=>(const GTPattern&) const = default;
};

std::vector<GTPattern> gt_patterns(const std::vector<std::int64_t>& highest_weight);

/// Finite-dimensional module over gl(even_rank | odd_rank) given by exact action matrices
/// of every matrix unit E_ij. odd_rank may be zero (an ordinary gl module).
class MatrixModule {
public:
    MatrixModule(int even_rank, int odd_rank, std::size_t dim);

    int even_rank() const { return even_rank_; }
    int odd_rank() const { return odd_rank_; }
    int rank() const { return even_rank_ + odd_rank_; }
    std::size_t dim() const { return dim_; }

    // 1-based matrix unit indices.
    const SparseMatrix& action(int i, int j) const;
    SparseMatrix& action(int i, int j);

    // Z/2 label of each basis vector.
    const std::vector<int>& parity() const { return parity_; }
    std::vector<int>& parity() { return parity_; }

    int generator_parity(int i, int j) const { return (i <= even_rank_) != (j <= even_rank_); }

    // First failing relation, empty when every superbracket relation holds.
    std::string bracket_violation() const;
    // Throws InternalError on failure.
    void check_brackets() const;

    // Eigenvalues of E_11..E_NN on each basis vector; throws InternalError if not diagonal.
    std::vector<std::vector<std::int64_t>> basis_weights() const;

private:
    int even_rank_;
    int odd_rank_;
    std::size_t dim_;
    std::vector<SparseMatrix> actions_;
    std::vector<int> parity_;
};

MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b);

// Simple gl(n)-module with the given dominant highest weight.
MatrixModule gl_simple(int n, const std::vector<std::int64_t>& highest_weight);

// Simple gl(m) x gl(n) module L0(lambda), as a module over gl(m|n) with odd units acting by 0.
MatrixModule g0_simple(const Weight& lambda);

MatrixModule kac_module(const Weight& lambda);
MatrixModule dual_kac_module(const Weight& lambda);

// Linear combination of matrix units, coefficient then (i, j).
using AlgebraElement = std::vector<std::pair<Rational, std::pair<int, int>>>;

SparseMatrix action_of(const MatrixModule& m, const AlgebraElement& x);

// True iff M is free over the algebra generated by x (requires x acting with square zero).
bool odd_projectivity_test(const MatrixModule& m, const AlgebraElement& x);

// sum_{t<=r} E_{t,m+t} (side +1) or its transpose (side -1).
AlgebraElement rank_representative(int m, int r, int side);
// sum_{t<=s} E_{m-t+1,m+t} (side +1) or its transpose (side -1).
AlgebraElement f_representative(int m, int s, int side);

// Largest r whose representative fails the projectivity test.
int rank_variety(const MatrixModule& m, int side);
int f_rank_variety(const MatrixModule& m, int side);

// K(lambda) restricted to <I_n> has a trivial summand.
bool trivial_summand_check(const Weight& lambda);

// Largest module dimension the constructors accept.
inline constexpr std::size_t kMaxModuleDim = 100000;
inline constexpr std::size_t kMaxSimpleDim = 10000;
// Constructors run the full superbracket check up to this dimension; call check_brackets()
// explicitly beyond it.
inline constexpr std::size_t kBracketCheckDim = 2048;

} // namespace glmn
