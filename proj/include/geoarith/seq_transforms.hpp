#pragma once

// Sequence operators on finite prefixes f(1..N): the divisor-sum transform W,
// Mobius inversion M, the gcd pullback Q_n, the divisor restriction R_n, and
// dense truncations of the W and M matrices.
//
// Every divisor of m <= N is itself <= N, so the prefix {1..N} is closed under
// the divisor-sum transforms and truncated inversion is exact.

#include <span>
#include <vector>

#include "geoarith/divisor_arith.hpp"
#include "geoarith/geo_field.hpp"

namespace geoarith {

/// A non-empty, 1-indexed finite prefix of a sequence N -> R(G).
class GSeq {
 public:
  /// Throws std::domain_error when terms is empty.
  explicit GSeq(std::vector<GReal> terms);

  static GSeq from_exponents(std::span<const double> exponents);
  static GSeq zeros(Index length);
  /// f(1), ..., f(length).
  static GSeq tabulate(const ArithFn& f, Index length);

  Index size() const { return terms_.size(); }

  /// 1-based access; throws std::out_of_range outside 1..size().
  GReal at(Index i) const;

  std::span<const GReal> terms() const { return terms_; }
  std::vector<double> exponents() const;

  friend bool operator==(const GSeq&, const GSeq&) = default;

 private:
  std::vector<GReal> terms_;
};

/// (Wf)(m) = geometric sum of f(k) over k | m.
GSeq w_transform(const GSeq& f);

/// (Mg)(n) = geometric sum of mu_G(n/k) (*) g(k) over k | n; inverse of W.
GSeq m_transform(const GSeq& g);

/// (Q_n f)(i) = f(<n, i>). Throws std::domain_error for n == 0.
GSeq q_transform(const GSeq& f, Index n);

/// (R_n f)(i) = f(i) when i | n, e^0 otherwise. Throws std::domain_error for n == 0.
GSeq r_transform(const GSeq& f, Index n);

/// Dirichlet convolution of two equal-length prefixes, result of the same length.
GSeq dirichlet_convolve(const GSeq& f, const GSeq& g);

enum class MatrixKind { W, M, general };

inline constexpr Index kMatrixSizeCap = 2048;

/// Dense N x N grid of GReal with 1-based (row, column) access.
class DivisorMatrix {
 public:
  /// Row-major entries; throws std::domain_error unless entries.size() == size^2.
  DivisorMatrix(Index size, std::vector<GReal> entries, MatrixKind kind = MatrixKind::general);

  /// e on the diagonal, e^0 elsewhere.
  static DivisorMatrix identity(Index size);

  Index size() const { return size_; }
  MatrixKind kind() const { return kind_; }
  GReal entry(Index i, Index j) const;
  GSeq row(Index i) const;

  friend bool operator==(const DivisorMatrix& a, const DivisorMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

 private:
  Index size_;
  std::vector<GReal> entries_;
  MatrixKind kind_;
};

/// w(i, j) = e if i | j, else e^0. Throws CapacityError above cap.
DivisorMatrix emit_w_matrix(Index size, Index cap = kMatrixSizeCap);

/// m(i, j) = mu_G(j / i) if i | j, else e^0. Throws CapacityError above cap.
DivisorMatrix emit_m_matrix(Index size, Index cap = kMatrixSizeCap);

/// Geometric matrix product: (AB)(i, j) = geometric sum over k of A(i, k) (*) B(k, j).
/// Throws std::domain_error on a size mismatch.
DivisorMatrix gmatmul(const DivisorMatrix& a, const DivisorMatrix& b);

/// Row-vector action (fA)(j) = geometric sum over i of f(i) (*) A(i, j).
///
/// With w(i, j) = e iff i | j this is the divisor sum over i | j, so
/// apply_matrix(W, f) == w_transform(f) and apply_matrix(M, g) == m_transform(g).
/// Throws std::domain_error on a size mismatch.
GSeq apply_matrix(const DivisorMatrix& a, const GSeq& f);

}  // namespace geoarith
