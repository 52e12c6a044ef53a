#include "pencils.hpp"

#include <map>

#include "polargrass/error.hpp"

namespace polargrass::detail {

LocalPencils make_local_pencils(const Field& F, int d) {
  LocalPencils lp;
  lp.d = d;
  auto funcs = projective_points(F, Subspace::full(d));
  std::map<Vector, int> fidx;
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    fidx[funcs[i]] = static_cast<int>(i);
    lp.hyperplane_bases.push_back(kernel(F, d, {funcs[i]}).basis());
  }
  if (d >= 2) {
    for (const auto& P : enumerate_subspaces(d, 2, F)) {
      std::vector<int> pen;
      for (const auto& v : projective_points(F, P)) pen.push_back(fidx.at(v));
      lp.pencils.push_back(std::move(pen));
    }
  }
  return lp;
}

void append_pencils(const Field& F, const Subspace& C, const LocalPencils& lp, const PointIndex& idx,
                    std::vector<std::vector<int>>& lines) {
  const int n = C.ambient_dim();
  std::vector<int> hid;
  hid.reserve(lp.hyperplane_bases.size());
  for (const auto& hb : lp.hyperplane_bases) {
    std::vector<Elem> flat;
    flat.reserve(hb.size() * n);
    for (const auto& a : hb) {
      std::vector<Elem> v(n, 0);
      for (int t = 0; t < lp.d; ++t) {
        if (a[t] == 0) continue;
        auto r = C.row(t);
        for (int x = 0; x < n; ++x) v[x] = F.add(v[x], F.mul(a[t], r[x]));
      }
      flat.insert(flat.end(), v.begin(), v.end());
    }
    auto it = idx.find(canonicalize_flat(F, n, std::move(flat)));
    if (it == idx.end()) throw Error("internal: hyperplane of a line carrier is not a point");
    hid.push_back(it->second);
  }
  for (const auto& pen : lp.pencils) {
    std::vector<int> l;
    l.reserve(pen.size());
    for (int i : pen) l.push_back(hid[i]);
    lines.push_back(std::move(l));
  }
}

PointIndex make_index(const std::vector<Subspace>& pts) {
  PointIndex idx;
  idx.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) idx.emplace(pts[i], static_cast<int>(i));
  return idx;
}

}  // namespace polargrass::detail
