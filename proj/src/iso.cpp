#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "polargrass/classify.hpp"
#include "polargrass/error.hpp"
#include "polargrass/projgeom.hpp"

namespace polargrass {

std::string to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::yes: return "yes";
    case IsoStatus::no: return "no";
    case IsoStatus::unresolved: return "unresolved";
  }
  return "?";
}

namespace {

// Small incidence structure with local indices 0..n-1.
struct Local {
  int n = 0;
  std::vector<std::vector<int>> lines;
  std::vector<std::vector<int>> lines_at;
  std::vector<std::vector<int>> nbrs;
  std::vector<std::uint64_t> adj;
  int words = 0;

  bool adjacent(int a, int b) const { return (adj[static_cast<std::size_t>(a) * words + (b >> 6)] >> (b & 63)) & 1u; }

  int line_through(int a, int b) const {
    for (int l : lines_at[a])
      if (std::binary_search(lines[l].begin(), lines[l].end(), b)) return l;
    return -1;
  }

  void finish() {
    lines_at.assign(n, {});
    nbrs.assign(n, {});
    words = (n + 63) / 64;
    adj.assign(static_cast<std::size_t>(n) * words, 0);
    for (int l = 0; l < static_cast<int>(lines.size()); ++l) {
      std::sort(lines[l].begin(), lines[l].end());
      for (int a : lines[l]) {
        lines_at[a].push_back(l);
        for (int b : lines[l])
          if (a != b) {
            adj[static_cast<std::size_t>(a) * words + (b >> 6)] |= std::uint64_t{1} << (b & 63);
            nbrs[a].push_back(b);
          }
      }
    }
    for (auto& v : nbrs) std::sort(v.begin(), v.end());
  }

  std::vector<std::vector<int>> distance_profiles() const {
    std::vector<std::vector<int>> prof(n);
    std::vector<int> dist(n), queue;
    for (int s = 0; s < n; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      queue.assign(1, s);
      dist[s] = 0;
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (int r : nbrs[queue[h]])
          if (dist[r] < 0) {
            dist[r] = dist[queue[h]] + 1;
            queue.push_back(r);
          }
      auto& p = prof[s];
      for (int d : dist) {
        int key = d < 0 ? 0 : d + 1;  // slot 0 counts unreachable vertices
        if (static_cast<int>(p.size()) <= key) p.resize(key + 1, 0);
        ++p[key];
      }
    }
    std::sort(prof.begin(), prof.end());
    return prof;
  }
};

Local local_of(const Geometry& G, const PointSet& S) {
  Local L;
  L.n = static_cast<int>(S.size());
  std::unordered_map<int, int> loc;
  for (int i = 0; i < L.n; ++i) loc.emplace(S[i], i);
  std::vector<char> seen(G.num_lines(), 0);
  for (int p : S)
    for (int l : G.lines_through(p)) {
      if (seen[l]) continue;
      seen[l] = 1;
      std::vector<int> tr;
      for (int x : G.line(l))
        if (auto it = loc.find(x); it != loc.end()) tr.push_back(it->second);
      if (tr.size() >= 2) L.lines.push_back(std::move(tr));
    }
  L.finish();
  return L;
}

Local local_of(const Geometry& G) {
  PointSet all(G.num_points());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return local_of(G, all);
}

std::string screen(const Local& ref, const Local& src) {
  if (ref.n != src.n) return "point counts differ";
  if (ref.lines.size() != src.lines.size()) return "line counts differ";
  auto sizes = [](const Local& L) {
    std::vector<std::size_t> s;
    for (const auto& l : L.lines) s.push_back(l.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(ref) != sizes(src)) return "line sizes differ";
  auto degs = [](const Local& L) {
    std::vector<std::size_t> d;
    for (const auto& v : L.nbrs) d.push_back(v.size());
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(ref) != degs(src)) return "degree sequences differ";
  if (ref.distance_profiles() != src.distance_profiles()) return "distance distributions differ";
  return {};
}

class Matcher {
 public:
  Matcher(const Local& ref, const Local& src, std::size_t budget) : ref_(ref), src_(src), budget_(budget) {
    const int n = ref.n;
    phi_.assign(n, -1);
    inv_.assign(n, -1);
    std::vector<int> placed_nb(n, 0);
    std::vector<char> done(n, 0);
    for (int t = 0; t < n; ++t) {
      int best = -1;
      for (int r = 0; r < n; ++r)
        if (!done[r] && (best < 0 || placed_nb[r] > placed_nb[best])) best = r;
      done[best] = 1;
      order_.push_back(best);
      for (int x : ref.nbrs[best]) ++placed_nb[x];
    }
    pos_.assign(n, 0);
    for (int t = 0; t < n; ++t) pos_[order_[t]] = t;
  }

  IsoStatus run() {
    if (ref_.n == 0) return IsoStatus::yes;
    bool ok = extend(0);
    if (ok) return IsoStatus::yes;
    return exhausted_ ? IsoStatus::unresolved : IsoStatus::no;
  }

  const std::vector<int>& mapping() const { return phi_; }

 private:
  bool consistent(int r, int c, int t) const {
    for (int s = 0; s < t; ++s) {
      int r2 = order_[s];
      if (ref_.adjacent(r, r2) != src_.adjacent(c, phi_[r2])) return false;
    }
    for (int l : ref_.lines_at[r]) {
      const auto& ln = ref_.lines[l];
      int anchor = -1;
      int placed = 0;
      for (int p : ln)
        if (p != r && phi_[p] >= 0) {
          ++placed;
          if (anchor < 0) anchor = p;
        }
      if (anchor < 0) continue;
      int sl = src_.line_through(c, phi_[anchor]);
      if (sl < 0) return false;
      int images = 0;
      for (int x : src_.lines[sl]) {
        if (x == c || inv_[x] < 0) continue;
        if (!std::binary_search(ln.begin(), ln.end(), inv_[x])) return false;
        ++images;
      }
      if (images != placed) return false;
    }
    return true;
  }

  bool extend(int t) {
    if (t == ref_.n) return true;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const int r = order_[t];
    int anchor = -1;
    for (int x : ref_.nbrs[r])
      if (phi_[x] >= 0 && (anchor < 0 || src_.nbrs[phi_[x]].size() < src_.nbrs[phi_[anchor]].size())) anchor = x;
    auto try_c = [&](int c) -> bool {
      if (inv_[c] >= 0 || !consistent(r, c, t)) return false;
      phi_[r] = c;
      inv_[c] = r;
      if (extend(t + 1)) return true;
      phi_[r] = -1;
      inv_[c] = -1;
      return false;
    };
    if (anchor >= 0) {
      for (int c : src_.nbrs[phi_[anchor]]) {
        if (try_c(c)) return true;
        if (exhausted_) return false;
      }
    } else {
      for (int c = 0; c < src_.n; ++c) {
        if (try_c(c)) return true;
        if (exhausted_) return false;
      }
    }
    return false;
  }

  const Local& ref_;
  const Local& src_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> order_, pos_, phi_, inv_;
};

// Reference A_{m,j} structures, shared across calls.
std::shared_ptr<const Local> reference(const FieldPtr& field, int m, int j) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const Local>> cache;
  auto key = std::make_tuple(field->order(), m, j);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto ref = std::make_shared<const Local>(local_of(build_proj_grassmannian(m, j, field)));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(ref)).first->second;
}

IsoResult match_against(const Local& ref, const Local& src, const PointSet& S, int m, int j,
                        std::size_t node_budget) {
  IsoResult res;
  res.m = m;
  res.j = j;
  if (auto why = screen(ref, src); !why.empty()) {
    res.status = IsoStatus::no;
    res.reason = why;
    return res;
  }
  Matcher mt(ref, src, node_budget);
  res.status = mt.run();
  if (res.status == IsoStatus::yes) {
    // every reference line must land on a line of S
    for (const auto& l : ref.lines) {
      int sl = src.line_through(mt.mapping()[l[0]], mt.mapping()[l[1]]);
      if (sl < 0 || src.lines[sl].size() != l.size()) throw Error("internal: isomorphism witness is not incidence preserving");
      for (int p : l)
        if (!std::binary_search(src.lines[sl].begin(), src.lines[sl].end(), mt.mapping()[p]))
          throw Error("internal: isomorphism witness is not incidence preserving");
    }
    res.witness.resize(ref.n);
    for (int r = 0; r < ref.n; ++r) res.witness[r] = S[mt.mapping()[r]];
    res.reason = "incidence-preserving bijection found";
  } else if (res.status == IsoStatus::no) {
    res.reason = "exhaustive search found no isomorphism";
  } else {
    res.reason = "search budget exhausted";
  }
  return res;
}

}  // namespace

IsoResult test_isomorphic_to(const Geometry& G, const PointSet& S, int m, int j, std::size_t node_budget) {
  IsoResult res;
  res.m = m;
  res.j = j;
  if (S.size() > kIsoPointBudget) {
    res.reason = "subject exceeds the isomorphism point budget";
    return res;
  }
  if (gaussian_binomial(m + 1, j, G.field().order()) != S.size()) {
    res.status = IsoStatus::no;
    res.reason = "point counts differ";
    return res;
  }
  return match_against(*reference(G.field_ptr(), m, j), local_of(G, S), S, m, j, node_budget);
}

IsoResult grassmannian_isomorphism_type(const Geometry& G, const PointSet& S, std::size_t node_budget) {
  IsoResult res;
  if (S.size() > kIsoPointBudget) {
    res.reason = "subject exceeds the isomorphism point budget";
    return res;
  }
  const int q = G.field().order();
  Local src = local_of(G, S);
  bool unresolved = false;
  std::string last = "no A_{m,j} has this many points";
  for (int m = 1; gaussian_binomial(m + 1, 1, q) <= S.size(); ++m)
    for (int j = 1; 2 * j <= m + 1; ++j) {
      if (gaussian_binomial(m + 1, j, q) != S.size()) continue;
      IsoResult r = match_against(*reference(G.field_ptr(), m, j), src, S, m, j, node_budget);
      if (r.status == IsoStatus::yes) return r;
      if (r.status == IsoStatus::unresolved) unresolved = true;
      last = r.reason;
    }
  res.status = unresolved ? IsoStatus::unresolved : IsoStatus::no;
  res.reason = last;
  return res;
}

}  // namespace polargrass
