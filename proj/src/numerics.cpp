#include "burniat/numerics.hpp"

#include <cassert>
#include <sstream>

namespace burniat {

Int chi(const DivClass& D) {
  const Int twice = intersect(D, D) - intersect(D, canonical());
  assert(twice % 2 == 0);
  return 1 + twice / 2;
}

Int euler_pair(const DivClass& Ri, const DivClass& Rj) { return chi(Rj - Ri); }

Int IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<Int> a = v_;
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return a[i * n_ + j]; };
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

bool IntMatrix::is_upper_unitriangular() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != 0) return false;
  }
  return true;
}

std::string IntMatrix::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "\n";
  }
  return os.str();
}

EulerMatrix euler_matrix(std::span<const DivClass> seq) {
  EulerMatrix m(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j < seq.size(); ++j) m(i, j) = euler_pair(seq[i], seq[j]);
  return m;
}

NumericalCheck is_numerically_exceptional(std::span<const DivClass> seq) {
  NumericalCheck out{true, euler_matrix(seq)};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (out.matrix(i, i) != 1) out.exceptional = false;
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (out.matrix(j, i) != 0) out.exceptional = false;
  }
  return out;
}

}  // namespace burniat
