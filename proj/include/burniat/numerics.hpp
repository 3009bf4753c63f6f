#pragma once

#include <span>
#include <string>
#include <vector>

#include "burniat/picard.hpp"

namespace burniat {

/// Holomorphic Euler characteristic of O_X(D): 1 + D.(D - K)/2.
Int chi(const DivClass& D);

/// chi(L_i, L_j) = sum_k (-1)^k dim Ext^k(O(R_i), O(R_j)) = chi(R_j - R_i).
Int euler_pair(const DivClass& Ri, const DivClass& Rj);

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), v_(n * n, 0) {}

  std::size_t size() const { return n_; }
  Int& operator()(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
  bool operator==(const IntMatrix&) const = default;

  /// Exact determinant by fraction-free (Bareiss) elimination.
  Int determinant() const;
  bool is_upper_unitriangular() const;

  std::string to_csv() const;

 private:
  std::size_t n_ = 0;
  std::vector<Int> v_;
};

using EulerMatrix = IntMatrix;

EulerMatrix euler_matrix(std::span<const DivClass> seq);

struct NumericalCheck {
  bool exceptional = false;
  EulerMatrix matrix;
};

/// Backward Euler pairings vanish and the diagonal is 1.
NumericalCheck is_numerically_exceptional(std::span<const DivClass> seq);

}  // namespace burniat
