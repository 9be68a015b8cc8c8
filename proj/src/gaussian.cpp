#include "clifford/gaussian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace clifford {

std::optional<Phase> Gaussian::as_phase() const {
  if (*this == Gaussian{1, 0}) return Phase::one();
  if (*this == Gaussian{0, 1}) return Phase::i();
  if (*this == Gaussian{-1, 0}) return Phase::minus_one();
  if (*this == Gaussian{0, -1}) return Phase::minus_i();
  return std::nullopt;
}

Gaussian exact_divide(Gaussian a, Gaussian b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Z[i]");
  const Gaussian num = a * b.conj();
  const std::int64_t den = b.norm();
  if (num.re % den != 0 || num.im % den != 0) {
    throw std::domain_error(to_string(b) + " does not divide " + to_string(a));
  }
  return {num.re / den, num.im / den};
}

std::string to_string(Gaussian z) {
  if (z.im == 0) return std::to_string(z.re);
  const std::string imag = z.im == 1 ? "i" : z.im == -1 ? "-i" : std::to_string(z.im) + "i";
  if (z.re == 0) return imag;
  return std::to_string(z.re) + (z.im > 0 ? "+" : "") + imag;
}

GaussianMatrix::GaussianMatrix(std::size_t dim, std::vector<Gaussian> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) throw std::invalid_argument("entry count is not dim^2");
}

GaussianMatrix::GaussianMatrix(std::initializer_list<std::initializer_list<Gaussian>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("matrix rows must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

GaussianMatrix GaussianMatrix::identity(std::size_t dim) { return scalar(dim, Gaussian{1}); }

GaussianMatrix GaussianMatrix::scalar(std::size_t dim, Gaussian c) {
  GaussianMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = c;
  return m;
}

void GaussianMatrix::require_same_dim(const GaussianMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
}

GaussianMatrix GaussianMatrix::operator*(const GaussianMatrix& o) const {
  require_same_dim(o);
  GaussianMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Gaussian a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * o(k, c);
    }
  }
  return out;
}

GaussianMatrix GaussianMatrix::operator+(const GaussianMatrix& o) const {
  GaussianMatrix out = *this;
  return out += o;
}

GaussianMatrix& GaussianMatrix::operator+=(const GaussianMatrix& o) {
  require_same_dim(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

GaussianMatrix GaussianMatrix::operator-(const GaussianMatrix& o) const { return *this + (-o); }

GaussianMatrix GaussianMatrix::operator-() const { return *this * Gaussian{-1}; }

GaussianMatrix GaussianMatrix::operator*(Gaussian c) const {
  GaussianMatrix out = *this;
  for (auto& e : out.entries_) e = e * c;
  return out;
}

GaussianMatrix GaussianMatrix::transpose() const {
  GaussianMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

GaussianMatrix GaussianMatrix::conjugate() const {
  GaussianMatrix out = *this;
  for (auto& e : out.entries_) e = e.conj();
  return out;
}

bool GaussianMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

GaussianMatrix kron(const GaussianMatrix& a, const GaussianMatrix& b) {
  const std::size_t n = a.dim() * b.dim();
  GaussianMatrix out(n);
  for (std::size_t ar = 0; ar < a.dim(); ++ar)
    for (std::size_t ac = 0; ac < a.dim(); ++ac)
      for (std::size_t br = 0; br < b.dim(); ++br)
        for (std::size_t bc = 0; bc < b.dim(); ++bc)
          out(ar * b.dim() + br, ac * b.dim() + bc) = a(ar, ac) * b(br, bc);
  return out;
}

GaussianMatrix pauli(int k) {
  const Gaussian i = Gaussian::i();
  switch (k) {
    case 0: return GaussianMatrix{{1, 0}, {0, 1}};
    case 1: return GaussianMatrix{{0, 1}, {1, 0}};
    case 2: return GaussianMatrix{{0, -i}, {i, 0}};
    case 3: return GaussianMatrix{{1, 0}, {0, -1}};
    default: throw std::out_of_range("Pauli index must be 0..3");
  }
}

Gaussian determinant(const GaussianMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return Gaussian{1};
  GaussianMatrix a = m;
  Gaussian prev{1};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return Gaussian{0};
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_divide(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      }
    }
    prev = a(k, k);
  }
  return a(n - 1, n - 1) * Gaussian{sign};
}

std::optional<Gaussian> schur_scalar(const GaussianMatrix& m) {
  if (m.dim() == 0) return std::nullopt;
  const Gaussian c = m(0, 0);
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t col = 0; col < m.dim(); ++col)
      if (m(r, col) != (r == col ? c : Gaussian{0})) return std::nullopt;
  return c;
}

std::optional<Gaussian> proportionality(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  const auto& eb = b.entries();
  std::size_t pivot = 0;
  while (pivot < eb.size() && eb[pivot].is_zero()) ++pivot;
  if (pivot == eb.size()) return std::nullopt;
  const Gaussian num = a.entries()[pivot] * eb[pivot].conj();
  const std::int64_t den = eb[pivot].norm();
  if (num.re % den != 0 || num.im % den != 0) return std::nullopt;
  const Gaussian c{num.re / den, num.im / den};
  if (b * c != a) return std::nullopt;
  return c;
}

std::string to_string(const GaussianMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& e : m.entries()) {
    cells.push_back(to_string(e));
    width = std::max(width, cells.back().size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    out << "[";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const std::string& s = cells[r * m.dim() + c];
      out << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace clifford
