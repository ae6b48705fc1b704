#include "geoarith/seq_transforms.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "geoarith/errors.hpp"

namespace geoarith {
namespace {

void require_positive(Index n, const char* what) {
  if (n == 0) throw std::domain_error(std::string(what) + ": n must be >= 1");
}

void require_matrix_size(Index size, Index cap) {
  if (size == 0) throw std::domain_error("matrix size must be >= 1");
  if (size > cap) {
    throw CapacityError("matrix size " + std::to_string(size) + " exceeds cap " +
                        std::to_string(cap));
  }
}

// mu(1..n) as exact integer exponents, index 0 unused.
std::vector<double> mobius_exponents(Index n) {
  std::vector<double> mu(n + 1, 0.0);
  for (Index k = 1; k <= n; ++k) mu[k] = mobius_g(k).exponent();
  return mu;
}

}  // namespace

GSeq::GSeq(std::vector<GReal> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::domain_error("a sequence prefix needs at least one term");
}

GSeq GSeq::from_exponents(std::span<const double> exponents) {
  std::vector<GReal> terms;
  terms.reserve(exponents.size());
  for (double t : exponents) terms.push_back(GReal::from_exponent(t));
  return GSeq(std::move(terms));
}

GSeq GSeq::zeros(Index length) { return GSeq(std::vector<GReal>(length, GReal::zero())); }

GSeq GSeq::tabulate(const ArithFn& f, Index length) {
  std::vector<GReal> terms;
  terms.reserve(length);
  for (Index i = 1; i <= length; ++i) terms.push_back(f(i));
  return GSeq(std::move(terms));
}

GReal GSeq::at(Index i) const {
  if (i == 0 || i > terms_.size()) {
    throw std::out_of_range("sequence index " + std::to_string(i) + " outside 1.." +
                            std::to_string(terms_.size()));
  }
  return terms_[i - 1];
}

std::vector<double> GSeq::exponents() const {
  std::vector<double> out;
  out.reserve(terms_.size());
  for (GReal x : terms_) out.push_back(x.exponent());
  return out;
}

GSeq w_transform(const GSeq& f) {
  const Index n = f.size();
  const auto terms = f.terms();
  std::vector<double> acc(n + 1, 0.0);
  for (Index k = 1; k <= n; ++k) {
    const double t = terms[k - 1].exponent();
    for (Index m = k; m <= n; m += k) acc[m] += t;
  }
  return GSeq::from_exponents(std::span(acc).subspan(1));
}

GSeq m_transform(const GSeq& g) {
  const Index n = g.size();
  const auto terms = g.terms();
  const auto mu = mobius_exponents(n);
  std::vector<double> acc(n + 1, 0.0);
  for (Index k = 1; k <= n; ++k) {
    const double t = terms[k - 1].exponent();
    for (Index m = k, q = 1; m <= n; m += k, ++q) {
      if (mu[q] != 0.0) acc[m] += mu[q] * t;
    }
  }
  return GSeq::from_exponents(std::span(acc).subspan(1));
}

GSeq q_transform(const GSeq& f, Index n) {
  require_positive(n, "q_transform");
  std::vector<GReal> out;
  out.reserve(f.size());
  for (Index i = 1; i <= f.size(); ++i) out.push_back(f.at(gcd(n, i)));
  return GSeq(std::move(out));
}

GSeq r_transform(const GSeq& f, Index n) {
  require_positive(n, "r_transform");
  std::vector<GReal> out;
  out.reserve(f.size());
  for (Index i = 1; i <= f.size(); ++i) out.push_back(n % i == 0 ? f.at(i) : GReal::zero());
  return GSeq(std::move(out));
}

GSeq dirichlet_convolve(const GSeq& f, const GSeq& g) {
  if (f.size() != g.size()) {
    throw std::domain_error("dirichlet_convolve: sequences differ in length");
  }
  const ArithFn lhs = ArithFn::from_terms({f.terms().begin(), f.terms().end()});
  const ArithFn rhs = ArithFn::from_terms({g.terms().begin(), g.terms().end()});
  std::vector<GReal> out;
  out.reserve(f.size());
  for (Index n = 1; n <= f.size(); ++n) out.push_back(dirichlet_convolve(lhs, rhs, n));
  return GSeq(std::move(out));
}

DivisorMatrix::DivisorMatrix(Index size, std::vector<GReal> entries, MatrixKind kind)
    : size_(size), entries_(std::move(entries)), kind_(kind) {
  if (size_ == 0 || entries_.size() != size_ * size_) {
    throw std::domain_error("matrix of size " + std::to_string(size_) + " needs " +
                            std::to_string(size_ * size_) + " entries");
  }
}

DivisorMatrix DivisorMatrix::identity(Index size) {
  std::vector<GReal> entries(size * size, GReal::zero());
  for (Index i = 0; i < size; ++i) entries[i * size + i] = GReal::unity();
  return DivisorMatrix(size, std::move(entries));
}

GReal DivisorMatrix::entry(Index i, Index j) const {
  if (i == 0 || j == 0 || i > size_ || j > size_) {
    throw std::out_of_range("matrix entry (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside 1.." + std::to_string(size_));
  }
  return entries_[(i - 1) * size_ + (j - 1)];
}

GSeq DivisorMatrix::row(Index i) const {
  if (i == 0 || i > size_) throw std::out_of_range("matrix row out of range");
  const auto begin = entries_.begin() + static_cast<std::ptrdiff_t>((i - 1) * size_);
  return GSeq(std::vector<GReal>(begin, begin + static_cast<std::ptrdiff_t>(size_)));
}

DivisorMatrix emit_w_matrix(Index size, Index cap) {
  require_matrix_size(size, cap);
  std::vector<GReal> entries(size * size, GReal::zero());
  for (Index i = 1; i <= size; ++i) {
    for (Index j = i; j <= size; j += i) entries[(i - 1) * size + (j - 1)] = GReal::unity();
  }
  return DivisorMatrix(size, std::move(entries), MatrixKind::W);
}

DivisorMatrix emit_m_matrix(Index size, Index cap) {
  require_matrix_size(size, cap);
  const auto mu = mobius_exponents(size);
  std::vector<GReal> entries(size * size, GReal::zero());
  for (Index i = 1; i <= size; ++i) {
    for (Index j = i, q = 1; j <= size; j += i, ++q) {
      entries[(i - 1) * size + (j - 1)] = GReal::from_exponent(mu[q]);
    }
  }
  return DivisorMatrix(size, std::move(entries), MatrixKind::M);
}

DivisorMatrix gmatmul(const DivisorMatrix& a, const DivisorMatrix& b) {
  if (a.size() != b.size()) throw std::domain_error("gmatmul: matrix sizes differ");
  const Index n = a.size();
  std::vector<double> lhs(n * n);
  std::vector<double> rhs(n * n);
  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= n; ++j) {
      lhs[(i - 1) * n + (j - 1)] = a.entry(i, j).exponent();
      rhs[(i - 1) * n + (j - 1)] = b.entry(i, j).exponent();
    }
  }
  // i-k-j order: each output entry accumulates over k in increasing order.
  std::vector<double> acc(n * n, 0.0);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      const double aik = lhs[i * n + k];
      if (aik == 0.0) continue;
      for (Index j = 0; j < n; ++j) acc[i * n + j] += aik * rhs[k * n + j];
    }
  }
  std::vector<GReal> entries;
  entries.reserve(n * n);
  for (double t : acc) entries.push_back(GReal::from_exponent(t));
  return DivisorMatrix(n, std::move(entries));
}

GSeq apply_matrix(const DivisorMatrix& a, const GSeq& f) {
  if (a.size() != f.size()) throw std::domain_error("apply_matrix: size mismatch");
  const Index n = a.size();
  const auto terms = f.terms();
  std::vector<double> acc(n, 0.0);
  for (Index i = 1; i <= n; ++i) {
    const double fi = terms[i - 1].exponent();
    for (Index j = 1; j <= n; ++j) {
      const double aij = a.entry(i, j).exponent();
      if (aij != 0.0) acc[j - 1] += fi * aij;
    }
  }
  return GSeq::from_exponents(acc);
}

}  // namespace geoarith
