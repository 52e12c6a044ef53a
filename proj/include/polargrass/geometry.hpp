#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "polargrass/field.hpp"
#include "polargrass/forms.hpp"
#include "polargrass/linalg.hpp"

namespace polargrass {

// Sorted, duplicate-free list of point indices.
using PointSet = std::vector<int>;

inline constexpr std::size_t kDefaultPointBudget = 1'000'000;

enum class GeometryKind {
  projective,  // A_{m,j}: all j-spaces of F^{m+1}
  polar,       // M_{n,k}: totally isotropic / singular k-spaces
  oriflamme,   // D_{n,n-2}
  induced,     // a restriction of one of the above (apartments, subspaces)
};

std::string to_string(GeometryKind k);

struct GeometryTags {
  std::string type;  // A | B | C | D | 2A-even | 2A-odd | 2D | D-nminus2
  int n = 0;         // Witt index (polar types)
  int k = 0;         // point dimension (polar types)
  int m = 0;         // projective: ambient is F^{m+1}
  int j = 0;         // projective: point dimension
  int q = 0;
};

// Explicit point-line geometry. Points are canonical subspaces in sorted
// order; lines are sorted index lists kept in CSR form, as are the lines
// through each point.
class Geometry {
 public:
  Geometry(FieldPtr field, std::shared_ptr<const Form> form, GeometryKind kind, GeometryTags tags,
           std::vector<Subspace> points, std::vector<std::vector<int>> lines, bool allow_thin = false);

  std::size_t num_points() const { return points_.size(); }
  std::size_t num_lines() const { return line_start_.size() - 1; }

  const Subspace& point(int i) const { return points_[i]; }
  const std::vector<Subspace>& points() const { return points_; }
  std::optional<int> index_of(const Subspace& s) const;

  std::span<const int> line(int l) const {
    return {line_pts_.data() + line_start_[l], static_cast<std::size_t>(line_start_[l + 1] - line_start_[l])};
  }
  std::span<const int> lines_through(int p) const {
    return {inc_.data() + inc_start_[p], static_cast<std::size_t>(inc_start_[p + 1] - inc_start_[p])};
  }
  std::optional<int> common_line(int a, int b) const;

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  // Null for projective Grassmannians.
  const Form* form() const { return form_.get(); }
  const std::shared_ptr<const Form>& form_ptr() const { return form_; }
  GeometryKind kind() const { return kind_; }
  // Kind of the geometry this one was restricted from (equals kind() unless induced).
  GeometryKind base_kind() const { return base_kind_; }
  const GeometryTags& tags() const { return tags_; }
  int ambient_dim() const { return ambient_; }
  int point_dim() const { return point_dim_; }
  bool is_thin() const { return thin_; }

 private:
  friend Geometry restrict_to(const Geometry&, const PointSet&);

  FieldPtr field_;
  std::shared_ptr<const Form> form_;
  GeometryKind kind_;
  GeometryKind base_kind_;
  GeometryTags tags_;
  int ambient_ = 0;
  int point_dim_ = 0;
  bool thin_ = false;
  std::vector<Subspace> points_;
  std::unordered_map<Subspace, int, SubspaceHash> index_;
  std::vector<int> line_start_{0};
  std::vector<int> line_pts_;
  std::vector<int> inc_start_;
  std::vector<int> inc_;
};

// Induced geometry on S: points of S, lines = traces of lines meeting S in at
// least two points. Traces shorter than the original line make the result thin.
Geometry restrict_to(const Geometry& G, const PointSet& S);

// True when every line meeting S in two points lies inside S.
bool is_subspace(const Geometry& G, const PointSet& S);

PointSet sorted_set(std::vector<int> v);

}  // namespace polargrass
