#pragma once

// Exact Gaussian-integer scalars and dense square matrices over Z[i].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clifford/blade.hpp"

namespace clifford {

struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr Gaussian() = default;
  constexpr Gaussian(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  static constexpr Gaussian i() { return {0, 1}; }
  static constexpr Gaussian from_phase(Phase p) {
    constexpr Gaussian kUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kUnits[p.exponent()];
  }

  constexpr Gaussian conj() const { return {re, -im}; }
  constexpr std::int64_t norm() const { return re * re + im * im; }
  constexpr bool is_zero() const { return re == 0 && im == 0; }

  /// Phase if this is one of +-1, +-i.
  std::optional<Phase> as_phase() const;

  constexpr Gaussian operator-() const { return {-re, -im}; }
  constexpr Gaussian operator+(Gaussian o) const { return {re + o.re, im + o.im}; }
  constexpr Gaussian operator-(Gaussian o) const { return {re - o.re, im - o.im}; }
  constexpr Gaussian operator*(Gaussian o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Gaussian& operator+=(Gaussian o) { return *this = *this + o; }

  friend constexpr bool operator==(Gaussian, Gaussian) = default;
};

/// Exact quotient; throws std::domain_error if b does not divide a in Z[i].
Gaussian exact_divide(Gaussian a, Gaussian b);

/// "0", "1", "-i", "2+3i", ...
std::string to_string(Gaussian z);

class GaussianMatrix {
 public:
  GaussianMatrix() = default;
  explicit GaussianMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  /// Row-major entries; size must be a perfect square.
  GaussianMatrix(std::size_t dim, std::vector<Gaussian> entries);
  GaussianMatrix(std::initializer_list<std::initializer_list<Gaussian>> rows);

  static GaussianMatrix identity(std::size_t dim);
  static GaussianMatrix scalar(std::size_t dim, Gaussian c);

  std::size_t dim() const { return dim_; }
  const Gaussian& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  Gaussian& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const std::vector<Gaussian>& entries() const { return entries_; }

  GaussianMatrix operator*(const GaussianMatrix& o) const;
  GaussianMatrix operator+(const GaussianMatrix& o) const;
  GaussianMatrix operator-(const GaussianMatrix& o) const;
  GaussianMatrix operator-() const;
  GaussianMatrix operator*(Gaussian c) const;
  GaussianMatrix& operator+=(const GaussianMatrix& o);

  GaussianMatrix transpose() const;
  GaussianMatrix conjugate() const;
  GaussianMatrix adjoint() const { return transpose().conjugate(); }

  bool is_zero() const;
  bool is_hermitian() const { return *this == adjoint(); }

  friend bool operator==(const GaussianMatrix&, const GaussianMatrix&) = default;

 private:
  void require_same_dim(const GaussianMatrix& o) const;

  std::size_t dim_ = 0;
  std::vector<Gaussian> entries_;
};

inline GaussianMatrix operator*(Gaussian c, const GaussianMatrix& m) { return m * c; }

GaussianMatrix kron(const GaussianMatrix& a, const GaussianMatrix& b);

/// k = 0 is the 2x2 identity, 1..3 the Pauli matrices.
GaussianMatrix pauli(int k);

/// Fraction-free (Bareiss) determinant over Z[i].
Gaussian determinant(const GaussianMatrix& m);

/// c if m == c*I exactly.
std::optional<Gaussian> schur_scalar(const GaussianMatrix& m);

/// c with a == c*b, if one exists (b nonzero). Scalars need not be units.
std::optional<Gaussian> proportionality(const GaussianMatrix& a, const GaussianMatrix& b);

std::string to_string(const GaussianMatrix& m);

}  // namespace clifford
