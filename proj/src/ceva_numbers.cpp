#include "cevian/ceva_numbers.hpp"

#include <string>

#include "cevian/errors.hpp"
#include "cevian/primes.hpp"

namespace cevian {

namespace {

void require_divisions(std::int64_t n) {
  if (n < 2) throw ValidationError("division count must be >= 2, got " + std::to_string(n));
  if (n > kMaxDivisions) {
    throw ValidationError("division count " + std::to_string(n) + " exceeds the supported maximum " +
                          std::to_string(kMaxDivisions));
  }
}

// The k completing (i, j), or 0 if none exists.
inline std::int64_t solve_k(std::int64_t n, std::int64_t i, std::int64_t j) {
  const std::int64_t ri = n - i;
  const std::int64_t rj = n - j;
  const std::int64_t num = n * ri * rj;
  const std::int64_t den = i * j + ri * rj;
  if (num % den != 0) return 0;
  const std::int64_t k = num / den;
  return (k >= 1 && k <= n - 1) ? k : 0;
}

std::uint64_t count_row(std::int64_t n, std::int64_t i, std::vector<CevaSolution>* out) {
  std::uint64_t count = 0;
  for (std::int64_t j = 1; j < n; ++j) {
    if (const std::int64_t k = solve_k(n, i, j)) {
      ++count;
      if (out) out->push_back({n, i, j, k});
    }
  }
  return count;
}

std::int64_t companion_of(Family family, std::int64_t p) {
  return family == Family::PTimes2PMinus1 ? 2 * p - 1 : 2 * p + 1;
}

std::int64_t family_n(Family family, std::int64_t p) {
  return family == Family::PTimes2PMinus1 ? p * (2 * p - 1) : p * p * (2 * p + 1);
}

std::vector<ScanRecord> family_members(Family family, std::int64_t p_max) {
  std::vector<ScanRecord> records;
  for (std::int64_t p = 2; p <= p_max; ++p) {
    const std::int64_t companion = companion_of(family, p);
    if (!is_prime(static_cast<std::uint64_t>(p)) || !is_prime(static_cast<std::uint64_t>(companion)))
      continue;
    ScanRecord rec;
    rec.p = p;
    rec.companion_prime = companion;
    rec.n = family_n(family, p);
    require_divisions(rec.n);
    records.push_back(rec);
  }
  return records;
}

void evaluate(ScanRecord& rec, bool count_all) {
  rec.witness = find_concurrency(rec.n);
  rec.has_solution = rec.witness.has_value();
  if (count_all) rec.solution_count = count_concurrencies_serial(rec.n);
}

}  // namespace

bool CevaSolution::satisfies() const {
  if (n < 2 || i < 1 || j < 1 || k < 1 || i >= n || j >= n || k >= n) return false;
  return i * j * k == (n - i) * (n - j) * (n - k);
}

std::uint64_t count_concurrencies_serial(std::int64_t n, std::vector<CevaSolution>* solutions) {
  require_divisions(n);
  std::uint64_t total = 0;
  for (std::int64_t i = 1; i < n; ++i) total += count_row(n, i, solutions);
  return total;
}

std::uint64_t count_concurrencies(std::int64_t n, std::vector<CevaSolution>* solutions) {
  require_divisions(n);
  std::uint64_t total = 0;
  if (!solutions) {
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::int64_t i = 1; i < n; ++i) total += count_row(n, i, nullptr);
    return total;
  }

  // Per-row buffers keep the (i, j) order of the serial path.
  std::vector<std::vector<CevaSolution>> rows(static_cast<std::size_t>(n));
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t i = 1; i < n; ++i) total += count_row(n, i, &rows[static_cast<std::size_t>(i)]);
  for (auto& row : rows) solutions->insert(solutions->end(), row.begin(), row.end());
  return total;
}

std::optional<CevaSolution> find_concurrency(std::int64_t n) {
  require_divisions(n);
  const std::int64_t start = (n - 1) / 2;
  // start, start+1, start-1, start+2, ... clipped to [1, n-1]
  for (std::int64_t step = 0; step < 2 * n; ++step) {
    const std::int64_t offset = (step + 1) / 2;
    const std::int64_t i = (step % 2 == 1) ? start + offset : start - offset;
    if (i < 1 || i > n - 1) {
      if (start - offset < 1 && start + offset > n - 1) break;
      continue;
    }
    for (std::int64_t j = 1; j < n; ++j) {
      if (const std::int64_t k = solve_k(n, i, j)) return CevaSolution{n, i, j, k};
    }
  }
  return std::nullopt;
}

bool has_concurrency(std::int64_t n) { return find_concurrency(n).has_value(); }

BigInt theorem2_d(std::uint64_t p, unsigned m) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (m < 1) throw ValidationError("exponent m must be >= 1");
  if (p != 2) return 0;
  BigInt q;
  mpz_ui_pow_ui(q.get_mpz_t(), 2, m);
  return 3 * q - 5;
}

std::vector<std::uint64_t> d_sequence_serial(std::int64_t first, std::int64_t last) {
  require_divisions(first);
  if (last < first) return {};
  require_divisions(last);
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (std::int64_t n = first; n <= last; ++n) out.push_back(count_concurrencies_serial(n));
  return out;
}

std::vector<std::uint64_t> d_sequence(std::int64_t first, std::int64_t last) {
  require_divisions(first);
  if (last < first) return {};
  require_divisions(last);
  const std::int64_t len = last - first + 1;
  std::vector<std::uint64_t> out(static_cast<std::size_t>(len));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t idx = len - 1; idx >= 0; --idx) {
    out[static_cast<std::size_t>(idx)] = count_concurrencies_serial(first + idx);
  }
  return out;
}

std::vector<std::int64_t> odd_positive_list_serial(std::int64_t limit) {
  if (limit < 2) throw ValidationError("limit must be >= 2, got " + std::to_string(limit));
  std::vector<std::int64_t> out;
  for (std::int64_t n = 3; n <= limit; n += 2) {
    if (has_concurrency(n)) out.push_back(n);
  }
  return out;
}

std::vector<std::int64_t> odd_positive_list(std::int64_t limit) {
  if (limit < 2) throw ValidationError("limit must be >= 2, got " + std::to_string(limit));
  require_divisions(limit);
  const std::int64_t slots = limit >= 3 ? (limit - 3) / 2 + 1 : 0;
  std::vector<char> hit(static_cast<std::size_t>(slots), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t s = slots - 1; s >= 0; --s) {
    hit[static_cast<std::size_t>(s)] = has_concurrency(3 + 2 * s) ? 1 : 0;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t s = 0; s < slots; ++s) {
    if (hit[static_cast<std::size_t>(s)]) out.push_back(3 + 2 * s);
  }
  return out;
}

std::vector<ScanRecord> scan_family_serial(Family family, std::int64_t p_max, bool count_all) {
  std::vector<ScanRecord> records = family_members(family, p_max);
  for (auto& rec : records) evaluate(rec, count_all);
  return records;
}

std::vector<ScanRecord> scan_family(Family family, std::int64_t p_max, bool count_all) {
  std::vector<ScanRecord> records = family_members(family, p_max);
  const auto size = static_cast<std::int64_t>(records.size());
  // Largest n first so dynamic scheduling balances the tail.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t idx = size - 1; idx >= 0; --idx) {
    evaluate(records[static_cast<std::size_t>(idx)], count_all);
  }
  return records;
}

}  // namespace cevian
