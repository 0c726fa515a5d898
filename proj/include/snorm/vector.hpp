#ifndef SNORM_VECTOR_HPP
#define SNORM_VECTOR_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace snorm {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A point of R^n. The dimension is the number of rows.
using Vector = VectorX<double>;

inline Vector vec(std::initializer_list<double> coords) {
  Vector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) v(i++) = c;
  return v;
}

inline Vector vec(const std::vector<double>& coords) {
  return Eigen::Map<const Vector>(coords.data(), static_cast<Eigen::Index>(coords.size()));
}

inline std::size_t dim_of(const Vector& v) { return static_cast<std::size_t>(v.size()); }

/// Bitwise-exact coordinate equality (no tolerance).
inline bool exactly_equal(const Vector& a, const Vector& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

inline bool all_finite(const Vector& v) { return v.allFinite(); }

/// Lexicographic order on coordinates; shorter vectors sort first.
inline bool lexicographic_less(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

/// Throws DimensionMismatch if v has the wrong dimension or NonFinite if it
/// carries NaN/Inf.
void require_point(const Vector& v, std::size_t dim, const char* what);

}  // namespace snorm

#endif  // SNORM_VECTOR_HPP
