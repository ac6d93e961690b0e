// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ordex/errors.hpp"
#include "ordex/prng.hpp"
#include "ordex/rational.hpp"
#include "ordex/types.hpp"

namespace ordex {

// Committee-security parameters: population N, Byzantine count M, committee
// size n, attack reward r and slash amount xi in stake units.
struct SecurityParams {
  std::uint32_t population_size = 0;   // N
  std::uint32_t byzantine_count = 0;   // M
  std::uint32_t committee_size = 0;    // n
  BigRat reward = 0;                   // r >= 0
  BigRat slash = 1;                    // xi > 0
};

// M = N is deliberately allowed (degenerate all-Byzantine populations are
// valid study cases); the BFT operating assumption M < N/3 is a separate
// predicate, not a precondition.
inline void validate(const SecurityParams& p) {
  if (p.population_size == 0)
    throw InvalidParams("population must be positive");
  if (p.byzantine_count > p.population_size)
    throw InvalidParams("byzantine count exceeds population");
  if (p.committee_size == 0 || p.committee_size > p.population_size)
    throw InvalidParams("committee size must be in [1, population]");
  if (p.reward < 0) throw InvalidParams("reward must be nonnegative");
  if (p.slash <= 0) throw InvalidParams("slash must be positive");
}

inline bool within_bft_bound(const SecurityParams& p) {
  return 3ull * p.byzantine_count < p.population_size;
}

// P_{n,N,M}(m) = C(M,m) C(N-M,n-m) / C(N,n), exactly. Out-of-support m
// (m > n, m > M, or n-m > N-M) yields exact zero.
inline ExactProbability hypergeom_pmf(const SecurityParams& p, std::uint32_t m) {
  validate(p);
  const std::uint64_t N = p.population_size;
  const std::uint64_t M = p.byzantine_count;
  const std::uint64_t n = p.committee_size;
  if (m > n || m > M || n - m > N - M) return ExactProbability();
  return ExactProbability(binomial(M, m) * binomial(N - M, n - m), binomial(N, n));
}

// Upper bound on attack success: the probability of sampling a committee of
// Byzantine nodes only. Zero when n > M.
inline ExactProbability all_byzantine_prob(const SecurityParams& p) {
  return hypergeom_pmf(p, p.committee_size);
}

// P_n(n) / P_{n+1}(n+1) = (N - n) / (M - n); strictly > 1 whenever M < N.
inline BigRat monotonicity_ratio(const SecurityParams& p) {
  validate(p);
  if (p.committee_size >= p.byzantine_count)
    throw UndefinedRatio("ratio undefined for n >= M (P_{n+1}(n+1) = 0)");
  return BigRat(p.population_size - p.committee_size,
                p.byzantine_count - p.committee_size);
}

// Statistically expected revenue of an attack: p*r - (1-p)*xi.
inline BigRat expected_revenue(const SecurityParams& p, const BigRat& p_success) {
  if (p_success < 0 || p_success > 1)
    throw InvalidParams("success probability outside [0,1]");
  return p_success * p.reward - (1 - p_success) * p.slash;
}

// Minimum reward-to-slash ratio for a viable attack: 1/P(n) - 1.
// nullopt means the attack is impossible (P = 0, n > M).
inline std::optional<BigRat> min_reward_ratio(const SecurityParams& p) {
  const ExactProbability prob = all_byzantine_prob(p);
  if (prob.is_zero()) return std::nullopt;
  return 1 / prob.value() - 1;
}

inline constexpr std::uint64_t kBruteForceBudget = 1'000'000;

// Independent oracle for all_byzantine_prob: walks every n-subset of the
// population (first M members marked Byzantine) and counts all-Byzantine
// draws. No binomial coefficients on this path.
inline ExactProbability brute_force_all_byzantine(const SecurityParams& p) {
  validate(p);
  const std::uint32_t N = p.population_size;
  const std::uint32_t M = p.byzantine_count;
  const std::uint32_t n = p.committee_size;

  // Guard against runaway enumeration before starting it.
  {
    BigInt total = binomial(N, n);
    if (total > kBruteForceBudget)
      throw InstanceTooLarge("C(N,n) exceeds enumeration budget of 1e6");
  }

  std::vector<std::uint32_t> subset(n);
  for (std::uint32_t i = 0; i < n; ++i) subset[i] = i;

  std::uint64_t total = 0;
  std::uint64_t all_byzantine = 0;
  while (true) {
    ++total;
    // Members are ascending, so the subset is all-Byzantine iff its largest
    // element is below M.
    if (subset[n - 1] < M) ++all_byzantine;

    // Advance to the next combination in lexicographic order.
    std::uint32_t i = n;
    while (i > 0 && subset[i - 1] == N - n + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::uint32_t j = i; j < n; ++j) subset[j] = subset[j - 1] + 1;
  }
  return ExactProbability(BigInt(all_byzantine), BigInt(total));
}

// Stake profile for populations with unequal stakes; rho is the stake unit.
struct StakeProfile {
  std::vector<std::pair<NodeId, double>> stakes;
  double unit = 1.0;  // rho > 0
};

// Multiplicity k = floor(s / rho) per node. The division and floor are done
// in exact rational arithmetic on the given doubles, so no further rounding
// is introduced.
inline std::vector<std::pair<NodeId, std::uint64_t>> expand_stake_units(
    const StakeProfile& profile) {
  if (!(profile.unit > 0)) throw InvalidParams("stake unit must be positive");
  const BigRat rho(profile.unit);
  std::vector<std::pair<NodeId, std::uint64_t>> out;
  out.reserve(profile.stakes.size());
  for (const auto& [id, stake] : profile.stakes) {
    if (stake < 0) throw InvalidParams("stake must be nonnegative");
    const BigRat q = BigRat(stake) / rho;
    const BigInt k = numerator(q) / denominator(q);  // exact floor for q >= 0
    out.emplace_back(id, k.template convert_to<std::uint64_t>());
  }
  return out;
}

// Seeded deterministic sampling without replacement (VRF stand-in): a
// partial Fisher-Yates shuffle, first n elements, returned sorted. Identical
// seed and population order yield identical committees.
inline std::vector<NodeId> sample_committee(std::span<const NodeId> population,
                                            std::size_t n, std::uint64_t seed) {
  if (n > population.size())
    throw InvalidParams("committee size exceeds population");
  std::vector<NodeId> pool(population.begin(), population.end());
  SplitMix rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.bounded(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace ordex
