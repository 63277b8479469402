#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Core>

#include "smdna/error.hpp"

namespace smdna {

/// 8-bit grayscale image. Row-major so that data() walks pixels in raster
/// order, which is the order the cipher chains them in.
using Image = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline std::size_t pixel_count(const Image& img) {
  return static_cast<std::size_t>(img.size());
}

inline void require_nonempty(const Image& img) {
  if (img.rows() <= 0 || img.cols() <= 0)
    throw DimensionError("image must have at least one row and one column");
}

inline void require_same_shape(const Image& a, const Image& b) {
  require_nonempty(a);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("images differ in dimensions");
}

/// Shape-aware equality; Eigen's operator== requires equal shapes.
inline bool same_pixels(const Image& a, const Image& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

}  // namespace smdna
