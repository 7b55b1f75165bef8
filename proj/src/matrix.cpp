#include "amalgam/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace amalgam {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::unit(int n, int row, int col) {
  CMatrix m(n);
  m.at(row, col) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) out.at(j, i) = std::conj(at(i, j));
  }
  return out;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
  CMatrix out(n_);
  for (int i = 1; i <= n_; ++i) {
    for (int k = 1; k <= n_; ++k) {
      const Complex aik = at(i, k);
      if (aik == Complex{}) continue;
      for (int j = 1; j <= n_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  }
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
  CMatrix out = *this;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
  CMatrix out = *this;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= rhs.a_[i];
  return out;
}

CMatrix CMatrix::scaled(Complex factor) const {
  CMatrix out = *this;
  for (Complex& v : out.a_) v *= factor;
  return out;
}

double CMatrix::max_abs() const {
  double worst = 0.0;
  for (const Complex& v : a_) worst = std::max(worst, std::abs(v));
  return worst;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

CMatrix amplify(const CMatrix& a, int m) {
  const int n = a.size();
  CMatrix out(n * m);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Complex v = a.at(i, j);
      if (v == Complex{}) continue;
      for (int t = 1; t <= m; ++t) out.at((i - 1) * m + t, (j - 1) * m + t) = v;
    }
  }
  return out;
}

double RandomStream::uniform() {
  // 53 uniform bits, shifted into (0, 1].
  return (static_cast<double>(next_bits() >> 11) + 1.0) * 0x1.0p-53;
}

double RandomStream::gaussian() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex RandomStream::unit_phase() {
  const double theta = 2.0 * std::numbers::pi * uniform();
  return Complex{std::cos(theta), std::sin(theta)};
}

Complex RandomStream::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex{re, im} / std::numbers::sqrt2;
}

std::uint64_t RandomStream::derive(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over the seed/index pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

CMatrix haar_unitary(int m, RandomStream& rng) {
  // Ginibre columns, modified Gram-Schmidt.
  std::vector<std::vector<Complex>> cols(m, std::vector<Complex>(m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) cols[j][i] = rng.complex_gaussian();
  }
  for (int j = 0; j < m; ++j) {
    for (int p = 0; p < j; ++p) {
      Complex dot{};
      for (int i = 0; i < m; ++i) dot += std::conj(cols[p][i]) * cols[j][i];
      for (int i = 0; i < m; ++i) cols[j][i] -= dot * cols[p][i];
    }
    double norm = 0.0;
    for (int i = 0; i < m; ++i) norm += std::norm(cols[j][i]);
    norm = std::sqrt(norm);
    for (int i = 0; i < m; ++i) cols[j][i] /= norm;
  }
  CMatrix u(m);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) u.at(i, j) = cols[j - 1][i - 1];
  }
  return u;
}

CMatrix block_diagonal(const std::vector<CMatrix>& blocks) {
  int total = 0;
  for (const CMatrix& b : blocks) total += b.size();
  CMatrix out(total);
  int offset = 0;
  for (const CMatrix& b : blocks) {
    for (int i = 1; i <= b.size(); ++i) {
      for (int j = 1; j <= b.size(); ++j) out.at(offset + i, offset + j) = b.at(i, j);
    }
    offset += b.size();
  }
  return out;
}

CMatrix conjugate(const CMatrix& u, const CMatrix& x) { return u * x * u.adjoint(); }

}  // namespace amalgam
