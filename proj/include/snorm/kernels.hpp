#ifndef SNORM_KERNELS_HPP
#define SNORM_KERNELS_HPP

// Closed-form evaluators behind the catalog. Each takes Eigen expressions so
// they compose with arithmetic at the call site without temporaries.
//
// Lengths use stableNorm: a plain sqrt of the squared sum underflows to 0 for
// vectors near 1e-162, which would report non-fixed points as exact fixed
// points.

#include <Eigen/Dense>

namespace snorm::kernels {

template <typename Derived>
typename Derived::Scalar euclidean(const Eigen::MatrixBase<Derived>& x) {
  return x.stableNorm();
}

/// |x| + |y| + |z| with |.| the Euclidean norm.
template <typename DX, typename DY, typename DZ>
typename DX::Scalar sum_abs(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                            const Eigen::MatrixBase<DZ>& z) {
  return x.stableNorm() + y.stableNorm() + z.stableNorm();
}

/// |x - 2y - 2z| + |y - 2x - 2z| + |z - 2y - 2x|.
template <typename DX, typename DY, typename DZ>
typename DX::Scalar example6(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                             const Eigen::MatrixBase<DZ>& z) {
  using Scalar = typename DX::Scalar;
  const Scalar two(2);
  return (x - two * y - two * z).stableNorm() + (y - two * x - two * z).stableNorm() +
         (z - two * y - two * x).stableNorm();
}

}  // namespace snorm::kernels

#endif  // SNORM_KERNELS_HPP
