#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cevian/rational.hpp"

namespace cevian {

/// Ordered triple with i*j*k = (n-i)*(n-j)*(n-k), 1 <= i, j, k <= n-1.
///
/// For the equal-division arrangement with n pieces per side, i, j and k
/// index the A-, B- and C-cevians (feet i/n, j/n, k/n) and each solution is
/// one interior triple point.
struct CevaSolution {
  std::int64_t n = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;

  bool satisfies() const;
  friend bool operator==(const CevaSolution&, const CevaSolution&) = default;
  friend auto operator<=>(const CevaSolution&, const CevaSolution&) = default;
};

/// Largest n accepted by the solvers; keeps n^3 inside int64.
inline constexpr std::int64_t kMaxDivisions = 2'000'000;

/// Number of ordered solutions for n. Solves for k in
/// k * (ij + (n-i)(n-j)) = n(n-i)(n-j) over all (i, j), so O(n^2).
/// When `solutions` is non-null the triples are appended in (i, j) order.
/// Throws ValidationError unless 2 <= n <= kMaxDivisions.
std::uint64_t count_concurrencies(std::int64_t n, std::vector<CevaSolution>* solutions = nullptr);

/// Serial reference for count_concurrencies (same contract, no threads).
std::uint64_t count_concurrencies_serial(std::int64_t n,
                                         std::vector<CevaSolution>* solutions = nullptr);

/// First solution found, or nullopt. i is visited outward from n/2 starting
/// at the lower middle index (floor((n-1)/2), then +1, -1, +2, ...), j
/// ascending; witnesses cluster near the middle for even n.
std::optional<CevaSolution> find_concurrency(std::int64_t n);
bool has_concurrency(std::int64_t n);

/// d for equal division into q = p^m pieces: 0 for odd p, 3*2^m - 5 for p = 2.
/// Throws ValidationError if p is not prime or m < 1.
BigInt theorem2_d(std::uint64_t p, unsigned m);

/// d(n) for n = first..last, in order.
std::vector<std::uint64_t> d_sequence(std::int64_t first, std::int64_t last);
std::vector<std::uint64_t> d_sequence_serial(std::int64_t first, std::int64_t last);

/// Odd n <= limit that admit a triple point, ascending. Throws
/// ValidationError for limit < 2.
std::vector<std::int64_t> odd_positive_list(std::int64_t limit);
std::vector<std::int64_t> odd_positive_list_serial(std::int64_t limit);

enum class Family {
  PTimes2PMinus1 = 1,     // n = p(2p-1), p and 2p-1 prime
  PSquaredTimes2PPlus1 = 2,  // n = p^2(2p+1), p a Sophie Germain prime
};

struct ScanRecord {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::int64_t companion_prime = 0;
  bool has_solution = false;
  std::optional<CevaSolution> witness;
  std::optional<std::uint64_t> solution_count;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// One record per prime p <= p_max whose companion is also prime, ascending
/// in p. Distinct n are evaluated in parallel; results are merged by index so
/// output matches scan_family_serial exactly.
std::vector<ScanRecord> scan_family(Family family, std::int64_t p_max, bool count_all = false);
std::vector<ScanRecord> scan_family_serial(Family family, std::int64_t p_max,
                                           bool count_all = false);

}  // namespace cevian
