#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gcpres/poly.hpp"

namespace gcpres {

/// Dense row-major square-or-rectangular matrix of ring elements.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Exact-division hook used by the Bareiss recurrence.
template <class T>
struct ExactDivision;

template <>
struct ExactDivision<Integer> {
  static Integer apply(const Integer& a, const Integer& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw InternalError("Bareiss: inexact integer division");
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static bool is_zero(const Integer& a) { return a == 0; }
  static Integer zero(const Integer&) { return 0; }
};

template <>
struct ExactDivision<Rational> {
  static Rational apply(const Rational& a, const Rational& b) { return a / b; }
  static bool is_zero(const Rational& a) { return a == 0; }
  static Rational zero(const Rational&) { return 0; }
};

template <>
struct ExactDivision<Poly> {
  static Poly apply(const Poly& a, const Poly& b) {
    if (b.is_constant()) {
      Poly r = a;
      r *= 1 / b.constant_term();
      return r;
    }
    return divide_exact(a, b);
  }
  static bool is_zero(const Poly& a) { return a.is_zero(); }
  static Poly zero(const Poly& like) { return Poly(like.ring()); }
};

/// Determinant by single-step fraction-free (Bareiss) elimination with row pivoting.
/// `one` is returned for the 0x0 matrix and seeds the recurrence.
template <class T>
T bareiss_determinant(Matrix<T> m, const T& one) {
  using Ops = ExactDivision<T>;
  const std::size_t n = m.rows();
  if (n != m.cols()) throw UsageError("determinant of a non-square matrix");
  if (n == 0) return one;

  T previous = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (Ops::is_zero(m(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && Ops::is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return Ops::zero(one);
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = Ops::apply(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      m(i, k) = Ops::zero(one);
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(-det) : det;
}

inline Poly det_fraction_free(const Matrix<Poly>& m, const Ring& ring) { return bareiss_determinant(m, Poly(ring, 1)); }

inline Integer det_fraction_free(const Matrix<Integer>& m) { return bareiss_determinant(m, Integer(1)); }

}  // namespace gcpres
