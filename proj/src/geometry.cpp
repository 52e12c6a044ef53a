#include "polargrass/geometry.hpp"

#include <algorithm>

#include "polargrass/error.hpp"

namespace polargrass {

std::string to_string(GeometryKind k) {
  switch (k) {
    case GeometryKind::projective: return "projective";
    case GeometryKind::polar: return "polar";
    case GeometryKind::oriflamme: return "oriflamme";
    case GeometryKind::induced: return "induced";
  }
  return "?";
}

PointSet sorted_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Geometry::Geometry(FieldPtr field, std::shared_ptr<const Form> form, GeometryKind kind, GeometryTags tags,
                   std::vector<Subspace> points, std::vector<std::vector<int>> lines, bool allow_thin)
    : field_(std::move(field)),
      form_(std::move(form)),
      kind_(kind),
      base_kind_(kind),
      tags_(std::move(tags)),
      thin_(allow_thin),
      points_(std::move(points)) {
  if (!field_) throw InvalidArgument("geometry needs a field");
  if (!points_.empty()) {
    ambient_ = points_.front().ambient_dim();
    point_dim_ = points_.front().dim();
  }
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (!(points_[i - 1] < points_[i])) throw InvalidArgument("points must be sorted and distinct");
  index_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], static_cast<int>(i));

  const int np = static_cast<int>(points_.size());
  for (auto& l : lines) std::sort(l.begin(), l.end());
  std::sort(lines.begin(), lines.end());
  std::size_t total = 0;
  for (const auto& l : lines) total += l.size();
  line_start_.reserve(lines.size() + 1);
  line_pts_.reserve(total);
  std::vector<int> deg(np, 0);
  for (const auto& l : lines) {
    if (l.size() < 2 || (!allow_thin && l.size() < 3)) throw InvalidArgument("line is too short");
    for (std::size_t t = 0; t < l.size(); ++t) {
      if (l[t] < 0 || l[t] >= np) throw InvalidArgument("line references an unknown point");
      if (t && l[t] == l[t - 1]) throw InvalidArgument("line repeats a point");
      ++deg[l[t]];
      line_pts_.push_back(l[t]);
    }
    line_start_.push_back(static_cast<int>(line_pts_.size()));
  }
  lines.clear();
  lines.shrink_to_fit();
  inc_start_.assign(np + 1, 0);
  for (int p = 0; p < np; ++p) inc_start_[p + 1] = inc_start_[p] + deg[p];
  inc_.resize(inc_start_[np]);
  std::vector<int> fill(inc_start_.begin(), inc_start_.end() - 1);
  for (int l = 0; l < static_cast<int>(num_lines()); ++l)
    for (int p : line(l)) inc_[fill[p]++] = l;

  // partial linear: the lines through p meet pairwise only in p
  std::vector<int> stamp(np, -1);
  for (int p = 0; p < np; ++p) {
    for (int l : lines_through(p))
      for (int x : line(l)) {
        if (x == p) continue;
        if (stamp[x] == p) throw InvalidArgument("two points lie on more than one common line");
        stamp[x] = p;
      }
  }
}

std::optional<int> Geometry::index_of(const Subspace& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Geometry::common_line(int a, int b) const {
  if (a == b) return std::nullopt;
  for (int l : lines_through(a)) {
    auto ln = line(l);
    if (std::binary_search(ln.begin(), ln.end(), b)) return l;
  }
  return std::nullopt;
}

Geometry restrict_to(const Geometry& G, const PointSet& S) {
  std::vector<Subspace> pts;
  pts.reserve(S.size());
  std::vector<int> local(G.num_points(), -1);
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (i && S[i] <= S[i - 1]) throw InvalidArgument("point set must be sorted and distinct");
    local[S[i]] = static_cast<int>(i);
    pts.push_back(G.point(S[i]));
  }
  std::vector<char> seen(G.num_lines(), 0);
  std::vector<std::vector<int>> lines;
  bool thin = G.is_thin();
  for (int p : S)
    for (int l : G.lines_through(p)) {
      if (seen[l]) continue;
      seen[l] = 1;
      std::vector<int> tr;
      for (int x : G.line(l))
        if (local[x] >= 0) tr.push_back(local[x]);
      if (tr.size() < 2) continue;
      if (tr.size() < G.line(l).size()) thin = thin || tr.size() < 3;
      lines.push_back(std::move(tr));
    }
  Geometry out(G.field_ptr(), G.form_ptr(), GeometryKind::induced, G.tags(), std::move(pts), std::move(lines), thin);
  out.base_kind_ = G.base_kind();
  return out;
}

bool is_subspace(const Geometry& G, const PointSet& S) {
  std::vector<char> in(G.num_points(), 0);
  for (int p : S) in[p] = 1;
  for (int p : S)
    for (int l : G.lines_through(p)) {
      int c = 0;
      for (int x : G.line(l)) c += in[x];
      if (c >= 2 && c < static_cast<int>(G.line(l).size())) return false;
    }
  return true;
}

}  // namespace polargrass
