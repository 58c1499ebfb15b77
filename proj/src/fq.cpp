#include "hallforge/fq.hpp"

#include <algorithm>

namespace hallforge {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (p < 2 || p > 255 || !is_prime(p)) throw std::domain_error("PrimeField: p must be a small prime");
}

uint8_t PrimeField::inv(uint8_t a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  for (int x = 1; x < p_; ++x)
    if ((a * x) % p_ == 1) return static_cast<uint8_t>(x);
  throw std::logic_error("PrimeField: no inverse found");
}

FqMatrix::FqMatrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
  if (rows < 0 || cols < 0) throw std::domain_error("FqMatrix: negative shape");
  e_.assign(static_cast<size_t>(rows) * cols, 0);
}

FqMatrix FqMatrix::identity(int n, int p) {
  FqMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool FqMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](uint8_t x) { return x == 0; });
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::domain_error("FqMatrix: shape mismatch in +");
  FqMatrix r(rows_, cols_, p_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<uint8_t>((e_[i] + o.e_[i]) % p_);
  return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::domain_error("FqMatrix: shape mismatch in -");
  FqMatrix r(rows_, cols_, p_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<uint8_t>((e_[i] + p_ - o.e_[i]) % p_);
  return r;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::domain_error("FqMatrix: shape mismatch in *");
  FqMatrix r(rows_, o.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      uint8_t a = at(i, k);
      if (!a) continue;
      for (int j = 0; j < o.cols_; ++j) {
        int v = r.at(i, j) + a * o.at(k, j);
        r.e_[static_cast<size_t>(i) * o.cols_ + j] = static_cast<uint8_t>(v % p_);
      }
    }
  return r;
}

FqMatrix FqMatrix::scaled(uint8_t c) const {
  FqMatrix r(rows_, cols_, p_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<uint8_t>((e_[i] * c) % p_);
  return r;
}

FqMatrix FqMatrix::operator-() const { return scaled(static_cast<uint8_t>((p_ - 1) % p_)); }

FqMatrix FqMatrix::transpose() const {
  FqMatrix r(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

FqMatrix FqMatrix::pow(int k) const {
  if (rows_ != cols_) throw std::domain_error("FqMatrix: pow of non-square");
  FqMatrix r = identity(rows_, p_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
}

FqMatrix FqMatrix::rref(std::vector<int>* pivots) const {
  FqMatrix m = *this;
  PrimeField f(p_);
  if (pivots) pivots->clear();
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols_; ++j) std::swap(m.e_[static_cast<size_t>(piv) * cols_ + j], m.e_[static_cast<size_t>(r) * cols_ + j]);
    uint8_t s = f.inv(m.at(r, c));
    for (int j = 0; j < cols_; ++j) m.set(r, j, f.mul(m.at(r, j), s));
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      uint8_t t = m.at(i, c);
      if (!t) continue;
      for (int j = 0; j < cols_; ++j) m.set(i, j, f.sub(m.at(i, j), f.mul(t, m.at(r, j))));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

int FqMatrix::rank() const {
  std::vector<int> pivots;
  rref(&pivots);
  return static_cast<int>(pivots.size());
}

FqMatrix FqMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("FqMatrix: inverse of non-square");
  if (rows_ == 0) return *this;
  FqMatrix aug = hcat(*this, identity(rows_, p_));
  std::vector<int> pivots;
  FqMatrix r = aug.rref(&pivots);
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= rows_)
    throw std::domain_error("FqMatrix: singular");
  return r.submatrix(0, rows_, rows_, rows_);
}

FqMatrix FqMatrix::kernel_basis() const {
  std::vector<int> pivots;
  FqMatrix r = rref(&pivots);
  std::vector<int> free_cols;
  {
    std::vector<bool> is_piv(cols_, false);
    for (int c : pivots) is_piv[c] = true;
    for (int c = 0; c < cols_; ++c)
      if (!is_piv[c]) free_cols.push_back(c);
  }
  PrimeField f(p_);
  FqMatrix k(cols_, static_cast<int>(free_cols.size()), p_);
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k.set(fc, static_cast<int>(j), 1);
    for (size_t i = 0; i < pivots.size(); ++i) k.set(pivots[i], static_cast<int>(j), f.neg(r.at(static_cast<int>(i), fc)));
  }
  return k;
}

FqMatrix FqMatrix::image_basis() const {
  std::vector<int> pivots;
  rref(&pivots);
  FqMatrix b(rows_, static_cast<int>(pivots.size()), p_);
  for (size_t j = 0; j < pivots.size(); ++j)
    for (int i = 0; i < rows_; ++i) b.set(i, static_cast<int>(j), at(i, pivots[j]));
  return b;
}

FqMatrix FqMatrix::hcat(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows_ != b.rows_ || a.p_ != b.p_) throw std::domain_error("FqMatrix: hcat shape mismatch");
  FqMatrix r(a.rows_, a.cols_ + b.cols_, a.p_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols_; ++j) r.set(i, a.cols_ + j, b.at(i, j));
  }
  return r;
}

FqMatrix FqMatrix::vcat(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols_ != b.cols_ || a.p_ != b.p_) throw std::domain_error("FqMatrix: vcat shape mismatch");
  FqMatrix r(a.rows_ + b.rows_, a.cols_, a.p_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.set(a.rows_ + i, j, b.at(i, j));
  return r;
}

FqMatrix FqMatrix::submatrix(int r0, int c0, int nrows, int ncols) const {
  FqMatrix r(nrows, ncols, p_);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) r.set(i, j, at(r0 + i, c0 + j));
  return r;
}

std::optional<LinearSolution> solve_linear(const FqMatrix& a, const std::vector<uint8_t>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::domain_error("solve_linear: rhs size mismatch");
  FqMatrix rhs(a.rows(), 1, a.p());
  for (int i = 0; i < a.rows(); ++i) rhs.set(i, 0, b[i]);
  FqMatrix aug = FqMatrix::hcat(a, rhs);
  std::vector<int> pivots;
  FqMatrix r = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // pivot in rhs column
  LinearSolution sol;
  sol.particular.assign(a.cols(), 0);
  for (size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = r.at(static_cast<int>(i), a.cols());
  sol.kernel = a.kernel_basis();
  return sol;
}

std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > cap / p) throw ResourceError("enumeration cap exceeded: p^" + std::to_string(e));
    r *= p;
  }
  if (r > cap) throw ResourceError("enumeration cap exceeded");
  return r;
}

MatrixEnumerator::MatrixEnumerator(int rows, int cols, int p, std::uint64_t cap)
    : cur_(rows, cols, p), emitted_(0), fresh_(true) {
  total_ = checked_pow(p, static_cast<std::uint64_t>(rows) * cols, cap);
}

bool MatrixEnumerator::next(FqMatrix& out) {
  if (emitted_ >= total_) return false;
  if (fresh_) {
    fresh_ = false;
  } else {
    auto& e = cur_.data();
    int p = cur_.p();
    for (size_t i = e.size(); i-- > 0;) {
      if (++e[i] < p) break;
      e[i] = 0;
    }
  }
  ++emitted_;
  out = cur_;
  return true;
}

std::vector<FqMatrix> enumerate_subspaces(int n, int p, std::uint64_t cap) {
  // RREF row-bases: choose pivot columns, then fill the free entries. An
  // entry (i, j) is free iff j > pivot[i] and j is not a pivot column.
  std::vector<FqMatrix> out;
  std::uint64_t produced = 0;
  for (int r = 0; r <= n; ++r) {
    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      std::vector<std::pair<int, int>> free_pos;
      std::vector<bool> is_piv(n, false);
      for (int c : piv) is_piv[c] = true;
      for (int i = 0; i < r; ++i)
        for (int j = piv[i] + 1; j < n; ++j)
          if (!is_piv[j]) free_pos.emplace_back(i, j);
      std::uint64_t count = checked_pow(p, free_pos.size(), cap);
      produced += count;
      if (produced > cap) throw ResourceError("subspace enumeration cap exceeded");
      std::vector<uint8_t> vals(free_pos.size(), 0);
      for (std::uint64_t t = 0; t < count; ++t) {
        FqMatrix m(r, n, p);
        for (int i = 0; i < r; ++i) m.set(i, piv[i], 1);
        for (size_t k = 0; k < free_pos.size(); ++k) m.set(free_pos[k].first, free_pos[k].second, vals[k]);
        out.push_back(std::move(m));
        for (size_t k = vals.size(); k-- > 0;) {
          if (++vals[k] < p) break;
          vals[k] = 0;
        }
      }
      // next pivot combination in lexicographic order
      int i = r - 1;
      while (i >= 0 && piv[i] == n - r + i) --i;
      if (i < 0) break;
      ++piv[i];
      for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

FqMatrix complement_basis(const FqMatrix& u, int n, int p) {
  std::vector<int> pivots;
  u.rref(&pivots);
  std::vector<bool> is_piv(n, false);
  for (int c : pivots) is_piv[c] = true;
  FqMatrix w(n - static_cast<int>(pivots.size()), n, p);
  int row = 0;
  for (int j = 0; j < n; ++j)
    if (!is_piv[j]) w.set(row++, j, 1);
  return w;
}

std::vector<uint8_t> coords_in_rowspace(const FqMatrix& u, const std::vector<uint8_t>& v) {
  auto sol = solve_linear(u.transpose(), v);
  if (!sol) throw std::logic_error("coords_in_rowspace: vector outside subspace");
  return sol->particular;
}

}  // namespace hallforge
