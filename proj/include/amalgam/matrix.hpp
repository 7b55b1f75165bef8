#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace amalgam {

using Complex = std::complex<double>;

/// Dense square complex matrix, row major.  Sizes here stay tiny (a few
/// dozen at most), so no external linear algebra is pulled in.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static CMatrix identity(int n);
  static CMatrix unit(int n, int row, int col);  // e_{row,col}, 1-based

  int size() const { return n_; }
  Complex& at(int row, int col) { return a_[idx(row, col)]; }
  const Complex& at(int row, int col) const { return a_[idx(row, col)]; }
  const std::vector<Complex>& data() const { return a_; }

  CMatrix adjoint() const;
  CMatrix operator*(const CMatrix& rhs) const;
  CMatrix operator+(const CMatrix& rhs) const;
  CMatrix operator-(const CMatrix& rhs) const;
  CMatrix scaled(Complex factor) const;

  /// Entrywise maximum modulus.
  double max_abs() const;

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t idx(int row, int col) const {
    return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
  }

  int n_ = 0;
  std::vector<Complex> a_;
};

double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// a (x) I_m in the basis ordering (i, copy) -> (i - 1) m + copy.
CMatrix amplify(const CMatrix& a, int m);

/// Deterministic random stream: mt19937_64 with explicit bit-to-double
/// conversion and Box-Muller normals, so identical seeds give identical
/// matrices on every conforming platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform();             // (0, 1]
  double gaussian();            // standard normal
  Complex unit_phase();         // e^{i theta}, theta uniform
  Complex complex_gaussian();   // (g1 + i g2) / sqrt(2)

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t next_bits() { return engine_(); }
  std::mt19937_64 engine_;
};

/// Haar-distributed m x m unitary (QR of a complex Ginibre matrix with the
/// positive-diagonal phase convention).
CMatrix haar_unitary(int m, RandomStream& rng);

/// Block-diagonal matrix with the given diagonal blocks.
CMatrix block_diagonal(const std::vector<CMatrix>& blocks);

CMatrix conjugate(const CMatrix& u, const CMatrix& x);  // u x u*

}  // namespace amalgam
