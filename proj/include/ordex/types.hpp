// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ordex/errors.hpp"
#include "ordex/prng.hpp"

namespace ordex {

using NodeId = std::uint32_t;
using Height = std::uint64_t;
using RegionId = std::uint8_t;

// Simulated time in integer microseconds. Integer ticks keep event ordering
// exact across platforms.
using SimTime = std::int64_t;

inline constexpr SimTime kMillisecond = 1000;
inline constexpr SimTime kSecond = 1000 * kMillisecond;

inline constexpr int kRegionCount = 8;

enum class Role : std::uint8_t { Consensus, Execution, Both };
enum class PerfClass : std::uint8_t { Slow, Medium, Fast };
enum class Mode : std::uint8_t { Separated, Combined };

inline const char* to_string(Role r) {
  switch (r) {
    case Role::Consensus: return "consensus";
    case Role::Execution: return "execution";
    case Role::Both: return "both";
  }
  return "?";
}

inline const char* to_string(PerfClass c) {
  switch (c) {
    case PerfClass::Slow: return "slow";
    case PerfClass::Medium: return "medium";
    case PerfClass::Fast: return "fast";
  }
  return "?";
}

inline const char* to_string(Mode m) {
  return m == Mode::Separated ? "separated" : "combined";
}

// Benchmark-transaction cost per performance class: 10 / 5 / 2.5 ms.
inline constexpr SimTime per_tx_us(PerfClass c) {
  switch (c) {
    case PerfClass::Slow: return 10'000;
    case PerfClass::Medium: return 5'000;
    case PerfClass::Fast: return 2'500;
  }
  return 0;
}

// Compute power in slow-node units: slow 1x, medium 5x, fast 25x.
inline constexpr std::uint32_t power_units(PerfClass c) {
  switch (c) {
    case PerfClass::Slow: return 1;
    case PerfClass::Medium: return 5;
    case PerfClass::Fast: return 25;
  }
  return 0;
}

struct NodeSpec {
  NodeId id = 0;
  Role role = Role::Consensus;
  PerfClass perf = PerfClass::Slow;
  RegionId region = 0;
  // Integral stake units so quorum comparisons stay exact.
  std::uint64_t stake = 1;

  bool in_consensus() const { return role != Role::Execution; }
  bool is_executor() const { return role == Role::Execution; }
  SimTime per_tx() const { return per_tx_us(perf); }
};

struct Block {
  Height height = 0;
  NodeId proposer = 0;
  std::vector<Digest> tx_digests;
  // Present iff the network runs in combined mode.
  std::optional<Digest> state_commitment;
  Digest parent = 0;

  std::uint32_t tx_count() const { return static_cast<std::uint32_t>(tx_digests.size()); }
};

enum class VotePhase : std::uint8_t { Prevote, Precommit };

struct Vote {
  NodeId voter = 0;
  Digest block = 0;
  VotePhase phase = VotePhase::Prevote;
  Height height = 0;
};

struct QuorumDecision {
  Height height = 0;
  Digest block = 0;
  double supporting_stake_fraction = 0.0;
  bool finalized = false;
};

struct ExecutionReceipt {
  Digest block = 0;
  Height height = 0;
  NodeId executor = 0;
  Digest result_commitment = 0;
  SimTime completed_at = 0;
};

// Stand-in for the computational state: an iterated digest chain. Advancing
// by the same block from the same state yields the same commitment anywhere.
struct ToyState {
  Digest commitment = 0;
  Height applied_height = 0;
};

struct RoundTrace {
  Height height = 0;
  NodeId proposer = 0;
  std::uint32_t tx_count = 0;
  SimTime propose_us = 0;
  SimTime finalize_us = 0;
  SimTime latency_us = 0;
};

}  // namespace ordex
