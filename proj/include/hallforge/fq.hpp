#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hallforge {

/// Raised when an enumeration would exceed its configured cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime(long n);

/// Arithmetic in the prime field F_p, p < 256.
class PrimeField {
 public:
  explicit PrimeField(int p);
  int p() const { return p_; }
  uint8_t add(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + b) % p_); }
  uint8_t sub(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + p_ - b) % p_); }
  uint8_t mul(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a * b) % p_); }
  uint8_t neg(uint8_t a) const { return static_cast<uint8_t>((p_ - a) % p_); }
  uint8_t inv(uint8_t a) const;

 private:
  int p_;
};

/// Dense matrix over F_p with entries reduced to [0, p).
class FqMatrix {
 public:
  FqMatrix() : rows_(0), cols_(0), p_(2) {}
  FqMatrix(int rows, int cols, int p);
  static FqMatrix identity(int n, int p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int p() const { return p_; }
  bool is_zero() const;

  uint8_t at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, uint8_t v) { e_[static_cast<size_t>(i) * cols_ + j] = static_cast<uint8_t>(v % p_); }
  const std::vector<uint8_t>& data() const { return e_; }
  std::vector<uint8_t>& data() { return e_; }

  FqMatrix operator+(const FqMatrix& o) const;
  FqMatrix operator-(const FqMatrix& o) const;
  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix scaled(uint8_t c) const;
  FqMatrix operator-() const;
  FqMatrix transpose() const;
  FqMatrix pow(int k) const;
  bool operator==(const FqMatrix& o) const;

  int rank() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }
  FqMatrix inverse() const;

  /// Columns form a basis of the null space; kernel dim + rank == cols.
  FqMatrix kernel_basis() const;
  /// Columns form a basis of the column space.
  FqMatrix image_basis() const;
  /// Row-reduced echelon form together with the pivot columns.
  FqMatrix rref(std::vector<int>* pivots = nullptr) const;

  /// Horizontal / vertical concatenation.
  static FqMatrix hcat(const FqMatrix& a, const FqMatrix& b);
  static FqMatrix vcat(const FqMatrix& a, const FqMatrix& b);
  FqMatrix submatrix(int r0, int c0, int nrows, int ncols) const;

 private:
  int rows_, cols_, p_;
  std::vector<uint8_t> e_;
};

struct LinearSolution {
  std::vector<uint8_t> particular;  // one solution of A x = b
  FqMatrix kernel;                  // columns span ker A
};

/// Solves A x = b; std::nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const FqMatrix& a, const std::vector<uint8_t>& b);

/// Deterministic stream over all p^(rows*cols) matrices, row-major odometer
/// order with the last entry fastest. Throws ResourceError when the total
/// count exceeds cap.
class MatrixEnumerator {
 public:
  MatrixEnumerator(int rows, int cols, int p, std::uint64_t cap);
  bool next(FqMatrix& out);  // false when exhausted
  std::uint64_t total() const { return total_; }

 private:
  FqMatrix cur_;
  std::uint64_t total_, emitted_;
  bool fresh_;
};

/// p^e with overflow guard against cap; throws ResourceError beyond cap.
std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e, std::uint64_t cap);

/// All subspaces of F_p^n of each dimension, as RREF row-bases, in
/// deterministic order (by dimension, then enumeration order).
std::vector<FqMatrix> enumerate_subspaces(int n, int p, std::uint64_t cap);

/// Basis rows completing span(rows of u) to F_p^n: the standard basis
/// vectors at the non-pivot coordinates of u's RREF.
FqMatrix complement_basis(const FqMatrix& u, int n, int p);

/// Coordinates of v in the row space of the RREF basis u; throws if outside.
std::vector<uint8_t> coords_in_rowspace(const FqMatrix& u, const std::vector<uint8_t>& v);

}  // namespace hallforge
