#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polargrass/analysis.hpp"
#include "polargrass/geometry.hpp"

namespace polargrass {

enum class PairKind { plus, minus, zero_special, dualpolar, polarspace, projective };
std::string to_string(PairKind k);

struct PairClass {
  PairKind kind = PairKind::plus;
  Subspace upper;   // symp witness (upper, lower); unset for zero_special
  Subspace lower;
  int middle = -1;  // the unique common neighbour of a special pair
};

// Distance-2 pair classification. Throws InvalidArgument when d(x,y) != 2.
PairClass classify_pair(const Geometry& G, const CollinearityGraph& g, const DistanceTable& D, int x, int y);
PairClass classify_pair(const Geometry& G, int x, int y);

// Number of the three trichotomy predicates (plus, minus, zero-special) that
// hold for x, y. A well-defined trichotomy gives exactly 1 at distance 2.
int trichotomy_matches(const Geometry& G, int x, int y);

// The symp on a non-special pair, from its witness.
PointSet symp_of_pair(const Geometry& G, const PairClass& pc);
PointSet symp_of_pair(const Geometry& G, const CollinearityGraph& g, const DistanceTable& D, int x, int y);

enum class IsoStatus { yes, no, unresolved };
std::string to_string(IsoStatus s);

inline constexpr std::size_t kIsoPointBudget = 10'000;
inline constexpr std::size_t kIsoNodeBudget = 5'000'000;

struct IsoResult {
  IsoStatus status = IsoStatus::unresolved;
  int m = 0;
  int j = 0;
  // witness[r] = point of S (global index) matched to point r of the reference A_{m,j}.
  std::vector<int> witness;
  std::string reason;
};

// Is the subgeometry induced on S isomorphic to A_{m,j}(F) over G's field?
IsoResult test_isomorphic_to(const Geometry& G, const PointSet& S, int m, int j,
                             std::size_t node_budget = kIsoNodeBudget);
// Canonical (m, j) with j <= (m+1)/2, if any.
IsoResult grassmannian_isomorphism_type(const Geometry& G, const PointSet& S,
                                        std::size_t node_budget = kIsoNodeBudget);

struct FlagWitness {
  Subspace E;  // intersection of the members
  Subspace F;  // span of the members, or E^perp for a residue
  bool residue = false;  // S is every point containing E (D_{n,n-2})
};

std::optional<FlagWitness> recognize_parabolic(const Geometry& G, const PointSet& S);

enum class Verdict { parabolic, exceptional_d31, neither, not_grassmannian, unresolved };
std::string to_string(Verdict v);

struct ClassificationReport {
  PointSet subject;
  Verdict verdict = Verdict::unresolved;
  std::optional<FlagWitness> flag;
  std::optional<Subspace> C;  // exceptional witness
  std::optional<Subspace> U;
  IsoResult iso;
  std::string origin;  // minus-symp | plus-symp | exceptional-search
};

// Exceptional T(U,C) = D_{3,1} subspaces: C a t.s. (k-1)-space, C < U <= C^perp,
// dim U = k+5, U/C non-degenerate of Witt index 3. Candidates U are visited in
// canonical order; at most `candidate_budget` are examined.
// Classifies an arbitrary point set; exceptional when it is T(U,C) with U the
// span and C the meet of its members.
ClassificationReport classify_subspace(const Geometry& G, const PointSet& S);

struct ExceptionalSearch {
  std::vector<ClassificationReport> reports;
  std::size_t candidates = 0;
  bool sampled = false;
};
ExceptionalSearch find_exceptional_A32(const Geometry& G, std::size_t candidate_budget = 200'000);

struct A32Enumeration {
  std::vector<ClassificationReport> reports;
  std::size_t pairs_at_distance_two = 0;
  std::size_t special_pairs = 0;
  std::size_t plus_symps = 0;
  std::size_t minus_symps = 0;
  std::size_t rank_two_symps = 0;
  bool sampled = false;
};

// A_{3,2} subspaces via symps: minus symps are A_{3,2}; inside plus symps the
// candidates are the D_{3,1} shadows T(U,C).
A32Enumeration enumerate_A32_subspaces(const Geometry& G, std::size_t candidate_budget = 200'000,
                                       int threads = 0);

struct NoA53Report {
  std::string relation;  // distance class label of (x, y)
  std::size_t middle_size = 0;
  bool passed = false;  // the structural description for this relation holds
  std::size_t full_lines = 0;  // lines entirely inside C
  std::size_t planes = 0;      // projective planes entirely inside C
  // C is a union of lines through the unique common neighbour, minus that point
  // (0 when it is not, or when x, y do not have exactly one common neighbour).
  std::size_t punctured_lines = 0;
  std::string detail;
};

// Middle set C = {u : dist(x,u) in {2g, 2q}, u collinear with y} and the
// structural description for the relation of (x, y):
//   3q, 3hh: C empty; 3h: C on one line; 2s: two isolated points plus a line
//   through the unique common neighbour minus that point; 2q: every line with
//   two points in C passes through a common neighbour, and C holds no plane;
//   2g: C holds no full line.
NoA53Report verify_lemma_no_A53(const Geometry& G, const CollinearityGraph& g, const DistanceTable& D, int x, int y);

struct MainTheoremReport {
  std::string geometry;
  std::size_t a32_found = 0;
  std::size_t parabolic = 0;
  std::size_t exceptional = 0;
  std::size_t neither = 0;
  std::size_t unresolved = 0;
  std::size_t flags_checked = 0;
  std::size_t flags_recognized = 0;
  bool exceptional_allowed = false;
  bool sampled = false;
  bool passed = false;
  std::vector<std::string> rows;
};

MainTheoremReport verify_main_theorem(const Geometry& G, std::size_t candidate_budget = 200'000, int threads = 0);

struct DualPolarCorrespondence {
  std::size_t maximal_spaces = 0;
  std::size_t distinct_shadows = 0;
  std::size_t a_type_subspaces = 0;  // subspaces of type A_{n-1,k} found independently
  std::size_t pairs_checked = 0;
  std::size_t line_pairs = 0;        // pairs with dim(B1 cap B2) = n-1
  bool injective = false;
  bool image_matches = false;
  bool intersections_ok = false;
  bool lines_ok = false;
  bool passed = false;
};

DualPolarCorrespondence dual_polar_correspondence(const Geometry& G);

}  // namespace polargrass
