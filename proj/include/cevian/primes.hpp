#pragma once

#include <cstdint>

namespace cevian {

/// Deterministic primality for the full 64-bit range (Miller-Rabin with the
/// first twelve prime bases, which has no pseudoprimes below 2^64).
bool is_prime(std::uint64_t n);

}  // namespace cevian
