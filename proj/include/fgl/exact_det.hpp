#ifndef FGL_EXACT_DET_HPP_
#define FGL_EXACT_DET_HPP_

#include <vector>

#include "fgl/group.hpp"

namespace fgl {

// Exact determinant of an n x n row-major integer matrix, by fraction-free
// Bareiss elimination. The input is consumed.
Int det_bareiss(std::vector<Int> m, int n);

}  // namespace fgl

#endif  // FGL_EXACT_DET_HPP_
