#ifndef CAUCHYKIT_COMMON_HPP
#define CAUCHYKIT_COMMON_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cauchykit {

// Extended precision throughout the numeric core. The simultaneous-approximation
// pipeline produces intermediate magnitudes far beyond double range (outer
// functions with tall mean-zero plateaus), so the core works in long double
// (x86 80-bit, range ~1e4932).
using real = long double;
using cplx = std::complex<real>;

inline constexpr const char* kVersion = "0.1.0";

constexpr real kPi = 3.14159265358979323846264338327950288L;
constexpr real kTwoPi = 2.0L * kPi;

// Error taxonomy. The CLI maps ck_error to exit code 3 (numeric failures),
// everything config/schema-shaped to exit code 2.
struct ck_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : ck_error {
  using ck_error::ck_error;
};
struct precondition_error : ck_error {
  using ck_error::ck_error;
};
struct range_error : ck_error {
  using ck_error::ck_error;
};
struct construction_error : ck_error {
  using ck_error::ck_error;
};
struct resource_error : ck_error {
  using ck_error::ck_error;
};
struct singularity_error : ck_error {
  using ck_error::ck_error;
};
struct division_error : ck_error {
  using ck_error::ck_error;
};

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline real sqr(real x) { return x * x; }

// Unit-circle point at angle given in turns (fraction of a full revolution).
inline cplx unit_at_turns(real turns) {
  return std::polar<real>(1.0L, kTwoPi * turns);
}

std::size_t thread_count();

// Deterministic parallel map over [0, n). Chunk results are merged in index
// order by the caller, so reductions stay reproducible.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk_fn);

// n * theta mod 1, exact when theta is read as the binary rational it stores.
// Plain fmod loses the phase entirely once n * theta outgrows the mantissa.
real mul_mod_one(std::uint64_t n, real theta);

}  // namespace cauchykit

#endif  // CAUCHYKIT_COMMON_HPP
