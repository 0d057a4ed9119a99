#pragma once

#include "chow/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace chow {

/// a_ij(m): pullback of the i-th plane-dual class paired with the j-th plane.
using TransitionMatrix = Eigen::Matrix<std::int64_t, 2, 2>;
using RootVector = std::pair<std::int64_t, std::int64_t>;
using SplittingType = std::vector<std::int64_t>;

/// A finite prefix of a chain of embeddings G_1 -> G_2 -> ..., one degree
/// (and optionally one transition matrix) per step.
struct ChainSpec {
  std::vector<std::int64_t> degrees;
  std::optional<std::vector<TransitionMatrix>> matrices;

  /// Throws InputError unless degrees >= 1, matrices are nonnegative with row
  /// sums degree^2, and there is one matrix per step.
  void validate() const;
  /// First `steps` steps of the chain.
  [[nodiscard]] ChainSpec prefix(std::size_t steps) const;
};

/// Product of the degrees, with overflow check.
std::int64_t degree_product(const ChainSpec& chain);

/// { delta*t : |t| <= bound } with delta the degree product: the values of c1
/// at the start of the chain that admit an integer preimage at every level.
std::vector<std::int64_t> c1_forcing(const ChainSpec& chain, std::int64_t bound);

/// A(m) A(m+1) ... A(m+i).
TransitionMatrix product_matrix(const ChainSpec& chain, std::size_t m, std::size_t i);

/// M (1,1)^t == deg^2 (1,1)^t. For a product A(m,i) pass the degree product.
bool eigen_check(const TransitionMatrix& M, std::int64_t deg);

/// All A(0, end) Lambda_tail with both tail entries in [-bound, bound].
std::set<RootVector> feasible_c2(const ChainSpec& chain, std::int64_t bound);

/// Both entries nonzero, of the same sign, and of absolute value <= limit.
bool small_same_sign(const RootVector& v, std::int64_t limit);

SplittingType make_splitting_type(std::vector<std::int64_t> entries);
SplittingType splitting_lex_min(const std::vector<SplittingType>& types);

/// Lower bound a*delta for the splitting type (a', -a') of a pullback.
std::int64_t pullback_splitting_bound(std::int64_t a, std::int64_t delta);

/// Chain with the given degrees and random transition matrices satisfying
/// the row-sum constraint, reproducible from `seed`.
ChainSpec random_chain(const std::vector<std::int64_t>& degrees, std::uint64_t seed);

} // namespace chow
