#pragma once

#include <unordered_map>
#include <vector>

#include "polargrass/linalg.hpp"

namespace polargrass::detail {

using PointIndex = std::unordered_map<Subspace, int, SubspaceHash>;

// Hyperplanes of F^d (as kernels of functionals) and the pencils of
// hyperplanes through each codimension-2 subspace. Lifting this through a
// basis of a d-space C yields the lines S(C, A) of all A of codim 2 in C.
struct LocalPencils {
  int d = 0;
  std::vector<std::vector<Vector>> hyperplane_bases;  // d-1 coordinate vectors each
  std::vector<std::vector<int>> pencils;
};

LocalPencils make_local_pencils(const Field& F, int d);

// Appends the pencils inside C to `lines`, looking up hyperplanes of C in `idx`.
// Every hyperplane of C must be a known point.
void append_pencils(const Field& F, const Subspace& C, const LocalPencils& lp, const PointIndex& idx,
                    std::vector<std::vector<int>>& lines);

PointIndex make_index(const std::vector<Subspace>& pts);

}  // namespace polargrass::detail
