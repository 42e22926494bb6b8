#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace secnc {

// The prime field F_q. Construction verifies that q is prime.
struct FieldSpec {
  std::uint64_t q;

  explicit FieldSpec(std::uint64_t modulus);
};

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

inline std::uint64_t ff_add(std::uint64_t a, std::uint64_t b, const FieldSpec& f) {
  std::uint64_t s = a + b; // a, b < q <= 2^63 here would be needed for no-overflow; go wide instead
  if (s < a || s >= f.q) s -= f.q;
  return s;
}

inline std::uint64_t ff_sub(std::uint64_t a, std::uint64_t b, const FieldSpec& f) {
  return a >= b ? a - b : a + (f.q - b);
}

inline std::uint64_t ff_mul(std::uint64_t a, std::uint64_t b, const FieldSpec& f) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % f.q);
}

inline std::uint64_t ff_neg(std::uint64_t a, const FieldSpec& f) { return a ? f.q - a : 0; }

std::uint64_t ff_pow(std::uint64_t base, std::uint64_t exp, const FieldSpec& f);

// Multiplicative inverse; throws std::domain_error for a = 0.
std::uint64_t ff_inv(std::uint64_t a, const FieldSpec& f);

// Dense row-major matrix over F_q. Entries are kept canonical in [0, q).
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  Matrix(std::size_t r, std::size_t c, std::vector<std::uint64_t> entries);

  std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static Matrix identity(std::size_t n);

  bool operator==(const Matrix& other) const = default;
};

Matrix mat_mul(const Matrix& a, const Matrix& b, const FieldSpec& f);

// Exact rank over F_q by Gaussian elimination.
std::size_t mat_rank(Matrix m, const FieldSpec& f);

// True iff every row of probe lies in the row space of m.
bool rowspace_contains(const Matrix& m, const Matrix& probe, const FieldSpec& f);

Matrix transpose(const Matrix& m);
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);

// Seeded RNG producing unbiased field elements via rejection sampling on
// whole 64-bit words (no modulo bias). mt19937_64 output is fully specified
// by the standard, so draws are reproducible across platforms.
class FieldRng {
public:
  explicit FieldRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t word() { return gen_(); }

  // Uniform draw from [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  std::uint64_t element(const FieldSpec& f) { return below(f.q); }

private:
  std::mt19937_64 gen_;
};

// i.i.d. uniform entries; deterministic given the RNG state.
Matrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& f, FieldRng& rng);

} // namespace secnc
