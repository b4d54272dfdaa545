#pragma once

namespace opdet::limits {

// Default size caps. Each default keeps the corresponding algorithm within
// seconds on commodity hardware; every capped entry point also accepts an
// explicit cap argument, and the CLI honors OPDET_MAX_N.

inline constexpr int kLeibnizMaxN = 10;    // n! permutations
inline constexpr int kCofactorMaxN = 10;   // n! recursion leaves
inline constexpr int kPermBruteMaxN = 10;  // n! permutations
inline constexpr int kRyserMaxN = 20;      // 2^n column subsets
inline constexpr int kPartitionMaxN = 9;   // ordered partitions of {1..n}
inline constexpr int kCoefficientTableMaxN = 5;  // n^n functions, expanded symbolically
inline constexpr int kFubiniMaxN = 30;
inline constexpr int kGroundSetMaxN = 63;  // blocks are 64-bit element masks

}  // namespace opdet::limits
