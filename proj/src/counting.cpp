#include "cevian/counting.hpp"

#include <stdexcept>

#include "cevian/ceva_numbers.hpp"
#include "cevian/errors.hpp"
#include "cevian/primes.hpp"

namespace cevian {

namespace {

BigInt exact_div(const BigInt& num, unsigned long den) {
  if (mpz_divisible_ui_p(num.get_mpz_t(), den) == 0) {
    throw std::logic_error("non-integral count: " + num.get_str() + " / " + std::to_string(den));
  }
  BigInt out;
  mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), den);
  return out;
}

void require_nonnegative(const BigInt& v, const char* name) {
  if (v < 0) throw ValidationError(std::string(name) + " must be nonnegative, got " + v.get_str());
}

BigInt binom2(const BigInt& n) { return n < 2 ? BigInt(0) : exact_div(n * (n - 1), 2); }

}  // namespace

std::string to_string(DProvenance provenance) {
  switch (provenance) {
    case DProvenance::Geometric: return "geometric";
    case DProvenance::CevaEquation: return "ceva-equation";
    case DProvenance::StructuralZero: return "structural-zero";
    case DProvenance::UserSupplied: return "user-supplied";
  }
  return "unknown";
}

BigInt binom3(const BigInt& n) {
  require_nonnegative(n, "n");
  if (n < 3) return 0;
  return exact_div(n * (n - 1) * (n - 2), 6);
}

CountReport theorem1_count(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                           DProvenance provenance) {
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  require_nonnegative(c, "c");
  require_nonnegative(d, "d");
  const bool structural = a == 0 || b == 0 || c == 0;
  if (structural && d != 0) {
    throw ValidationError("d must be 0 when a, b or c is 0: three cevians can only meet "
                          "inside the triangle if one comes from each vertex (got d = " +
                          d.get_str() + ")");
  }
  if (d > a * b * c) {
    throw ValidationError("d = " + d.get_str() + " exceeds a*b*c = " + BigInt(a * b * c).get_str() +
                          ", the number of (A, B, C) cevian triples");
  }
  CountReport report;
  report.a = a;
  report.b = b;
  report.c = c;
  report.d = d;
  report.d_provenance = structural ? DProvenance::StructuralZero : provenance;
  report.triangle_count = binom3(a + b + c + 3) - binom3(a + 2) - binom3(b + 2) - binom3(c + 2) - d;
  return report;
}

BigInt two_vertex_count(const BigInt& a, const BigInt& b) {
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  return exact_div((a + 1) * (b + 1) * (a + b + 2), 2);
}

BigInt symmetric_count(const BigInt& n) {
  require_nonnegative(n, "n");
  return (n + 3) * (n + 1) * (n + 1);
}

CountReport theorem2_count(std::uint64_t p, unsigned m) {
  const BigInt d = theorem2_d(p, m);
  BigInt q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, m);
  const BigInt q2 = q * q;
  const BigInt q3 = q2 * q;
  const BigInt closed = p == 2 ? exact_div(8 * q3 - 9 * q2 - 3 * q + 10, 2)
                               : exact_div(8 * q3 - 9 * q2 + 3 * q, 2);

  CountReport report = theorem1_count(q - 1, q - 1, q - 1, d, DProvenance::CevaEquation);
  if (report.triangle_count != closed) {
    throw std::logic_error("closed form disagrees with the general count at q = " + q.get_str());
  }
  return report;
}

FanBreakdown fan_parallel_breakdown(long apex_lines, long parallels) {
  if (apex_lines < 2) {
    throw ValidationError("need at least 2 lines through the apex (the two sides), got " +
                          std::to_string(apex_lines));
  }
  if (parallels < 1) {
    throw ValidationError("need at least 1 line parallel to the base (the base), got " +
                          std::to_string(parallels));
  }
  const BigInt p = apex_lines;
  const BigInt r = parallels;
  FanBreakdown out;
  out.total_triples = binom3(p + r);
  out.apex_concurrent = binom3(p);
  out.all_parallel = binom3(r);
  out.two_parallel_apex = binom2(r) * p;
  out.triangles = out.total_triples - out.apex_concurrent - out.all_parallel - out.two_parallel_apex;
  return out;
}

BigInt fan_parallel_count(long apex_lines, long parallels) {
  return fan_parallel_breakdown(apex_lines, parallels).triangles;
}

}  // namespace cevian
