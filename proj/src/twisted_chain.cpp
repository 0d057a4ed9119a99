#include "chow/twisted_chain.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <string>
#include <cstdlib>
#include <functional>

namespace chow {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw InputError("integer overflow in chain computation");
  return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw InputError("integer overflow in chain computation");
  return out;
}

TransitionMatrix checked_product(const TransitionMatrix& A, const TransitionMatrix& B) {
  TransitionMatrix out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out(r, c) = checked_add(checked_mul(A(r, 0), B(0, c)), checked_mul(A(r, 1), B(1, c)));
  return out;
}

void require_positive(std::int64_t value, const char* name) {
  if (value < 1) throw InputError(std::string(name) + " must be positive, got " + std::to_string(value));
}

} // namespace

void ChainSpec::validate() const {
  for (std::size_t m = 0; m < degrees.size(); ++m)
    if (degrees[m] < 1)
      throw InputError("degrees[" + std::to_string(m) + "] must be >= 1, got " + std::to_string(degrees[m]));
  if (!matrices) return;
  if (matrices->size() != degrees.size())
    throw InputError("matrices: expected " + std::to_string(degrees.size()) + " entries, got " +
                     std::to_string(matrices->size()));
  for (std::size_t m = 0; m < matrices->size(); ++m) {
    const auto& A = (*matrices)[m];
    const std::string where = "matrices[" + std::to_string(m) + "]";
    if ((A.array() < 0).any()) throw InputError(where + " has a negative entry");
    const std::int64_t sq = checked_mul(degrees[m], degrees[m]);
    if (!eigen_check(A, degrees[m]))
      throw InputError(where + " row sums must equal degrees[" + std::to_string(m) + "]^2 = " + std::to_string(sq));
  }
}

ChainSpec ChainSpec::prefix(std::size_t steps) const {
  ChainSpec out;
  const auto n = std::min(steps, degrees.size());
  out.degrees.assign(degrees.begin(), degrees.begin() + static_cast<std::ptrdiff_t>(n));
  if (matrices) out.matrices.emplace(matrices->begin(), matrices->begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

std::int64_t degree_product(const ChainSpec& chain) {
  std::int64_t delta = 1;
  for (auto d : chain.degrees) delta = checked_mul(delta, d);
  return delta;
}

std::vector<std::int64_t> c1_forcing(const ChainSpec& chain, std::int64_t bound) {
  if (chain.degrees.empty()) throw InputError("chain has no steps");
  require_positive(bound, "bound");
  chain.validate();
  const std::int64_t delta = degree_product(chain);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(2 * bound + 1));
  for (std::int64_t t = -bound; t <= bound; ++t) out.push_back(checked_mul(delta, t));
  return out;
}

TransitionMatrix product_matrix(const ChainSpec& chain, std::size_t m, std::size_t i) {
  chain.validate();
  if (!chain.matrices) throw InputError("chain has no transition matrices");
  const auto& A = *chain.matrices;
  if (m >= A.size() || i >= A.size() - m)
    throw InputError("product A(" + std::to_string(m) + "," + std::to_string(i) + ") runs past the chain of " +
                     std::to_string(A.size()) + " steps");
  TransitionMatrix out = A[m];
  for (std::size_t j = m + 1; j <= m + i; ++j) out = checked_product(out, A[j]);
  return out;
}

bool eigen_check(const TransitionMatrix& M, std::int64_t deg) {
  const std::int64_t sq = checked_mul(deg, deg);
  return checked_add(M(0, 0), M(0, 1)) == sq && checked_add(M(1, 0), M(1, 1)) == sq;
}

std::set<RootVector> feasible_c2(const ChainSpec& chain, std::int64_t bound) {
  require_positive(bound, "bound");
  if (!chain.matrices) throw InputError("feasible_c2 needs transition matrices");
  if (chain.degrees.empty()) throw InputError("chain has no steps");
  const TransitionMatrix P = product_matrix(chain, 0, chain.degrees.size() - 1);

  // One task per value of the first tail entry; the set union is order-free.
  const auto row = [&](std::int64_t t1) {
    std::set<RootVector> part;
    for (std::int64_t t2 = -bound; t2 <= bound; ++t2)
      part.emplace(checked_add(checked_mul(P(0, 0), t1), checked_mul(P(0, 1), t2)),
                   checked_add(checked_mul(P(1, 0), t1), checked_mul(P(1, 1), t2)));
    return part;
  };
  std::set<RootVector> out;
  if (bound < 32) {
    for (std::int64_t t1 = -bound; t1 <= bound; ++t1) out.merge(row(t1));
    return out;
  }
  std::vector<std::future<std::set<RootVector>>> jobs;
  for (std::int64_t t1 = -bound; t1 <= bound; ++t1) jobs.push_back(std::async(std::launch::async, row, t1));
  for (auto& job : jobs) out.merge(job.get());
  return out;
}

bool small_same_sign(const RootVector& v, std::int64_t limit) {
  const auto [x, y] = v;
  if (x == 0 || y == 0 || (x > 0) != (y > 0)) return false;
  return std::abs(x) <= limit && std::abs(y) <= limit;
}

SplittingType make_splitting_type(std::vector<std::int64_t> entries) {
  if (entries.empty()) throw InputError("splitting type must be nonempty");
  if (!std::is_sorted(entries.begin(), entries.end(), std::greater<>()))
    throw InputError("splitting type must be weakly decreasing");
  return entries;
}

SplittingType splitting_lex_min(const std::vector<SplittingType>& types) {
  if (types.empty()) throw InputError("no splitting types given");
  for (const auto& t : types) {
    if (t.size() != types.front().size()) throw InputError("splitting types have mixed lengths");
    make_splitting_type(t);
  }
  return *std::min_element(types.begin(), types.end());
}

std::int64_t pullback_splitting_bound(std::int64_t a, std::int64_t delta) {
  require_positive(a, "a");
  require_positive(delta, "delta");
  return checked_mul(a, delta);
}

ChainSpec random_chain(const std::vector<std::int64_t>& degrees, std::uint64_t seed) {
  ChainSpec chain;
  chain.degrees = degrees;
  std::mt19937_64 rng(seed);
  std::vector<TransitionMatrix> matrices;
  for (auto d : degrees) {
    require_positive(d, "degree");
    const std::int64_t sq = checked_mul(d, d);
    std::uniform_int_distribution<std::int64_t> pick(0, sq);
    const std::int64_t a11 = pick(rng);
    const std::int64_t a21 = pick(rng);
    TransitionMatrix A;
    A << a11, sq - a11, a21, sq - a21;
    matrices.push_back(A);
  }
  chain.matrices = std::move(matrices);
  return chain;
}

} // namespace chow
