#include "polargrass/projgeom.hpp"

#include <algorithm>
#include <deque>

#include "pencils.hpp"
#include "polargrass/error.hpp"

namespace polargrass {

Geometry build_proj_grassmannian(int m, int j, FieldPtr field, std::size_t budget) {
  if (!field) throw InvalidArgument("null field");
  if (j < 1 || j > m) throw InvalidArgument("projective Grassmannian needs 1 <= j <= m");
  const Field& F = *field;
  std::size_t count = gaussian_binomial(m + 1, j, F.order());
  if (count > budget)
    throw BudgetExceeded("A_{" + std::to_string(m) + "," + std::to_string(j) + "} has " + std::to_string(count) +
                         " points, budget " + std::to_string(budget));
  auto pts = enumerate_subspaces(m + 1, j, F);
  auto idx = detail::make_index(pts);
  std::vector<std::vector<int>> lines;
  auto lp = detail::make_local_pencils(F, j + 1);
  for (const auto& C : enumerate_subspaces(m + 1, j + 1, F)) detail::append_pencils(F, C, lp, idx, lines);
  GeometryTags tags{"A", 0, 0, m, j, F.order()};
  return Geometry(field, nullptr, GeometryKind::projective, tags, std::move(pts), std::move(lines));
}

PointSet shadow_S(const Geometry& G, const Subspace& C, const Subspace& A) {
  const Field& F = G.field();
  if (!contains(F, C, A)) throw InvalidArgument("shadow_S needs A contained in C");
  PointSet out;
  for (const auto& B : subspaces_between(F, A, C, G.point_dim()))
    if (auto i = G.index_of(B)) out.push_back(*i);
  std::sort(out.begin(), out.end());
  return out;
}

PointSet points_inside(const Geometry& G, const Subspace& U) {
  PointSet out;
  for (int i = 0; i < static_cast<int>(G.num_points()); ++i)
    if (contains(G.field(), U, G.point(i))) out.push_back(i);
  return out;
}

PointSet points_containing(const Geometry& G, const Subspace& X) {
  PointSet out;
  for (int i = 0; i < static_cast<int>(G.num_points()); ++i)
    if (contains(G.field(), G.point(i), X)) out.push_back(i);
  return out;
}

std::vector<MaximalSingular> maximal_singulars_proj(const Geometry& G) {
  if (G.kind() != GeometryKind::projective) throw InvalidArgument("maximal_singulars_proj needs a projective Grassmannian");
  const int j = G.tags().j, m = G.tags().m;
  if (j < 2 || j > m - 1) throw InvalidArgument("maximal singular families need 2 <= j <= m-1");
  const Field& F = G.field();
  std::vector<MaximalSingular> out;
  const Subspace V = Subspace::full(m + 1);
  for (const auto& D : enumerate_subspaces(m + 1, j - 1, F)) out.push_back({shadow_S(G, V, D), '+', D});
  for (const auto& E : enumerate_subspaces(m + 1, j + 1, F))
    out.push_back({shadow_S(G, E, Subspace::zero(m + 1)), '-', E});
  return out;
}

int proj_distance(const Geometry& G, int x, int y) {
  std::vector<int> dist(G.num_points(), -1);
  std::deque<int> queue{x};
  dist[x] = 0;
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    if (p == y) return dist[p];
    for (int l : G.lines_through(p))
      for (int r : G.line(l))
        if (dist[r] < 0) {
          dist[r] = dist[p] + 1;
          queue.push_back(r);
        }
  }
  throw Error("points are in different connected components");
}

int proj_distance_formula(const Geometry& G, int x, int y) {
  return G.point(x).dim() - intersect(G.field(), G.point(x), G.point(y)).dim();
}

}  // namespace polargrass
