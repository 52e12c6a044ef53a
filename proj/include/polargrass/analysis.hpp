#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polargrass/geometry.hpp"

namespace polargrass {

class CollinearityGraph {
 public:
  explicit CollinearityGraph(const Geometry& G);

  std::size_t size() const { return start_.size() - 1; }
  std::span<const int> neighbors(int p) const {
    return {adj_.data() + start_[p], static_cast<std::size_t>(start_[p + 1] - start_[p])};
  }
  int degree(int p) const { return static_cast<int>(start_[p + 1] - start_[p]); }
  bool adjacent(int a, int b) const;
  // Degree if every vertex has the same one, otherwise -1.
  int regular_degree() const;

 private:
  std::vector<std::int64_t> start_;
  std::vector<int> adj_;
};

inline constexpr std::uint8_t kUnreachable = 255;

std::vector<std::uint8_t> distances_from(const CollinearityGraph& g, int x);
std::vector<std::uint8_t> distances_from(const Geometry& G, int x);

// Graph distances. Small graphs get a full matrix computed up front; larger
// ones compute BFS rows on demand and keep a bounded cache.
class DistanceTable {
 public:
  explicit DistanceTable(const CollinearityGraph& g, std::size_t full_limit = 8000, int threads = 0);

  std::uint8_t operator()(int a, int b) const { return full_ ? matrix_[idx(a, b)] : row(a)[b]; }
  // Row pointer stays valid only until the next call when the table is not full.
  const std::uint8_t* row(int a) const;
  std::shared_ptr<const std::vector<std::uint8_t>> row_shared(int a) const;
  bool is_full() const { return full_; }
  const CollinearityGraph& graph() const { return *g_; }
  std::size_t size() const { return n_; }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

  const CollinearityGraph* g_;
  std::size_t n_;
  bool full_;
  std::vector<std::uint8_t> matrix_;
  mutable std::mutex mu_;
  mutable std::unordered_map<int, std::shared_ptr<const std::vector<std::uint8_t>>> cache_;
  mutable std::shared_ptr<const std::vector<std::uint8_t>> last_;
};

// Diameter of a connected graph (kUnreachable if disconnected).
int graph_diameter(const DistanceTable& D);

PointSet subspace_closure(const Geometry& G, const PointSet& X);

// Points on some geodesic between a and b.
PointSet interval(const CollinearityGraph& g, const DistanceTable& D, int a, int b);

// Least set containing X that is closed under geodesics and lines.
PointSet convex_closure(const Geometry& G, const CollinearityGraph& g, const DistanceTable& D, const PointSet& X);
PointSet convex_closure(const Geometry& G, const PointSet& X);

bool is_convex(const Geometry& G, const CollinearityGraph& g, const DistanceTable& D, const PointSet& S);

// Convex closure restricted to a universe U that is already known to be
// convex: every geodesic between members of U stays in U, so intervals can be
// precomputed on U alone. Intended for repeated closures inside one symp.
class ConfinedClosure {
 public:
  ConfinedClosure(const Geometry& G, const DistanceTable& D, PointSet universe);

  PointSet closure(const PointSet& seeds) const;
  // True when the closure of {x, y} is the whole universe.
  bool generates_universe(int x, int y) const;
  const PointSet& universe() const { return universe_; }

 private:
  using Bits = std::vector<std::uint64_t>;
  void close(Bits& s, std::vector<int>& members) const;

  PointSet universe_;
  std::unordered_map<int, int> local_;
  int words_ = 0;
  std::vector<std::uint64_t> intervals_;  // t*t rows of words_ words
  std::vector<std::vector<int>> lines_;   // local lines fully inside the universe
  std::vector<std::vector<int>> lines_at_;
};

// Thin subgeometry on the coordinate subspaces of a polar frame. Points are
// spans of k frame vectors, never both e_i and f_i; lines join collinear pairs.
Geometry apartment(const Geometry& G, const Frame& frame);
// Same, without needing the ambient geometry to be built.
Geometry build_apartment(std::shared_ptr<const Form> form, GeometryKind kind, int k, const Frame& frame,
                         GeometryTags tags);
// Projective Grassmannian apartment on a basis of F^{m+1}.
Geometry apartment_proj(const Geometry& G, const std::vector<Vector>& basis);

struct Signature {
  int distance = 0;
  int meet_dim = 0;       // dim(x cap y)
  int meet_perp_dim = 0;  // dim(x cap y^perp)
  bool span_ts = false;   // x + y totally singular
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature signature_of(const Geometry& G, int x, int y, int distance);

// Label for a signature in D_{n,n-2}: 0, 1, 2g, 2q, 2s, 3h, 3q, 3hh, 4.
std::optional<std::string> d_nminus2_label(int k, const Signature& s);

struct DistanceClass {
  std::string label;
  Signature signature;  // meet fields unused when not refined
  PointSet members;
};

struct DistanceClassReport {
  int base = 0;
  bool refined = false;
  std::vector<DistanceClass> classes;
};

struct DistributionDiagram {
  std::vector<std::string> labels;
  std::vector<std::size_t> sizes;
  // n[i][j]: neighbours in class j of each member of class i; -1 if members disagree.
  std::vector<std::vector<int>> n;
  bool equitable = true;
  bool double_counting = true;
  int degree = -1;
};

std::pair<DistanceClassReport, DistributionDiagram> distance_distribution(const Geometry& G, int base, bool refine);

}  // namespace polargrass
