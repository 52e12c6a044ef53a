#include "polargrass/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

#include "polargrass/error.hpp"

namespace polargrass {

CollinearityGraph::CollinearityGraph(const Geometry& G) {
  const int n = static_cast<int>(G.num_points());
  start_.assign(n + 1, 0);
  for (int p = 0; p < n; ++p) {
    std::int64_t d = 0;
    for (int l : G.lines_through(p)) d += static_cast<std::int64_t>(G.line(l).size()) - 1;
    start_[p + 1] = start_[p] + d;
  }
  adj_.resize(start_[n]);
  for (int p = 0; p < n; ++p) {
    std::int64_t at = start_[p];
    for (int l : G.lines_through(p))
      for (int x : G.line(l))
        if (x != p) adj_[at++] = x;
    std::sort(adj_.begin() + start_[p], adj_.begin() + start_[p + 1]);
  }
}

bool CollinearityGraph::adjacent(int a, int b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

int CollinearityGraph::regular_degree() const {
  if (size() == 0) return 0;
  int d = degree(0);
  for (std::size_t p = 1; p < size(); ++p)
    if (degree(static_cast<int>(p)) != d) return -1;
  return d;
}

static void bfs_into(const CollinearityGraph& g, int x, std::uint8_t* dist, std::vector<int>& queue) {
  const std::size_t n = g.size();
  std::fill(dist, dist + n, kUnreachable);
  queue.clear();
  queue.push_back(x);
  dist[x] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int p = queue[h];
    std::uint8_t nd = static_cast<std::uint8_t>(dist[p] + 1);
    for (int r : g.neighbors(p))
      if (dist[r] == kUnreachable) {
        dist[r] = nd;
        queue.push_back(r);
      }
  }
}

std::vector<std::uint8_t> distances_from(const CollinearityGraph& g, int x) {
  if (x < 0 || static_cast<std::size_t>(x) >= g.size()) throw InvalidArgument("point index out of range");
  std::vector<std::uint8_t> d(g.size());
  std::vector<int> q;
  bfs_into(g, x, d.data(), q);
  return d;
}

std::vector<std::uint8_t> distances_from(const Geometry& G, int x) { return distances_from(CollinearityGraph(G), x); }

DistanceTable::DistanceTable(const CollinearityGraph& g, std::size_t full_limit, int threads)
    : g_(&g), n_(g.size()), full_(g.size() <= full_limit) {
  if (!full_) return;
  matrix_.resize(n_ * n_);
  int nt = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  nt = static_cast<int>(std::min<std::size_t>(nt, std::max<std::size_t>(1, n_ / 64)));
  std::atomic<int> next{0};
  auto work = [&] {
    std::vector<int> q;
    for (int a; (a = next++) < static_cast<int>(n_);) bfs_into(g, a, matrix_.data() + idx(a, 0), q);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

std::shared_ptr<const std::vector<std::uint8_t>> DistanceTable::row_shared(int a) const {
  if (full_) {
    return std::make_shared<const std::vector<std::uint8_t>>(matrix_.begin() + idx(a, 0),
                                                             matrix_.begin() + idx(a, 0) + n_);
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
  }
  auto r = std::make_shared<std::vector<std::uint8_t>>(n_);
  std::vector<int> q;
  bfs_into(*g_, a, r->data(), q);
  std::lock_guard<std::mutex> lock(mu_);
  if (cache_.size() >= 1024) cache_.clear();
  cache_.emplace(a, r);
  return r;
}

const std::uint8_t* DistanceTable::row(int a) const {
  if (full_) return matrix_.data() + idx(a, 0);
  auto r = row_shared(a);
  std::lock_guard<std::mutex> lock(mu_);
  last_ = r;
  return r->data();
}

int graph_diameter(const DistanceTable& D) {
  int diam = 0;
  for (std::size_t a = 0; a < D.size(); ++a) {
    auto r = D.row_shared(static_cast<int>(a));
    for (std::uint8_t v : *r) {
      if (v == kUnreachable) return kUnreachable;
      diam = std::max<int>(diam, v);
    }
  }
  return diam;
}

PointSet subspace_closure(const Geometry& G, const PointSet& X) {
  if (X.empty()) throw InvalidArgument("closure of an empty set");
  std::vector<char> in(G.num_points(), 0);
  std::vector<int> work;
  for (int p : X)
    if (!in[p]) {
      in[p] = 1;
      work.push_back(p);
    }
  for (std::size_t h = 0; h < work.size(); ++h) {
    int p = work[h];
    for (int l : G.lines_through(p)) {
      auto ln = G.line(l);
      int c = 0;
      for (int x : ln) c += in[x];
      if (c < 2) continue;
      for (int x : ln)
        if (!in[x]) {
          in[x] = 1;
          work.push_back(x);
        }
    }
  }
  return sorted_set(std::move(work));
}

PointSet interval(const CollinearityGraph& g, const DistanceTable& D, int a, int b) {
  auto rb = D.row_shared(b);
  const auto& db = *rb;
  int d = db[a];
  if (d == kUnreachable) throw InvalidArgument("points are not connected");
  std::vector<int> layer{a}, out{a};
  std::vector<char> seen(g.size(), 0);
  seen[a] = 1;
  for (int s = d; s > 0; --s) {
    std::vector<int> next;
    for (int u : layer)
      for (int c : g.neighbors(u))
        if (!seen[c] && db[c] == s - 1) {
          seen[c] = 1;
          next.push_back(c);
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return sorted_set(std::move(out));
}

PointSet convex_closure(const Geometry& G, const CollinearityGraph& g, const DistanceTable& D, const PointSet& X) {
  if (X.empty()) throw InvalidArgument("closure of an empty set");
  std::vector<char> in(G.num_points(), 0);
  std::vector<int> members;
  auto add = [&](int p) {
    if (!in[p]) {
      in[p] = 1;
      members.push_back(p);
    }
  };
  for (int p : X) add(p);
  for (std::size_t h = 0; h < members.size(); ++h) {
    const int a = members[h];
    for (std::size_t t = 0; t < h; ++t) {
      const int b = members[t];
      if (g.adjacent(a, b)) continue;
      for (int c : interval(g, D, a, b)) add(c);
    }
    for (int l : G.lines_through(a)) {
      auto ln = G.line(l);
      int c = 0;
      for (int x : ln) c += in[x];
      if (c >= 2)
        for (int x : ln) add(x);
    }
  }
  return sorted_set(std::move(members));
}

PointSet convex_closure(const Geometry& G, const PointSet& X) {
  CollinearityGraph g(G);
  DistanceTable D(g);
  return convex_closure(G, g, D, X);
}

bool is_convex(const Geometry& G, const CollinearityGraph& g, const DistanceTable& D, const PointSet& S) {
  if (!is_subspace(G, S)) return false;
  std::vector<char> in(G.num_points(), 0);
  for (int p : S) in[p] = 1;
  // A geodesic leaving S has a first step a -> c with a in S, c outside, and
  // c one step closer to the far endpoint b.
  for (int b : S) {
    auto rb = D.row_shared(b);
    const auto& db = *rb;
    for (int a : S) {
      if (a == b) continue;
      for (int c : g.neighbors(a))
        if (!in[c] && db[c] + 1 == db[a]) return false;
    }
  }
  return true;
}

ConfinedClosure::ConfinedClosure(const Geometry& G, const DistanceTable& D, PointSet universe)
    : universe_(std::move(universe)) {
  const int t = static_cast<int>(universe_.size());
  for (int i = 0; i < t; ++i) local_.emplace(universe_[i], i);
  words_ = (t + 63) / 64;
  std::vector<std::uint8_t> dist(static_cast<std::size_t>(t) * t);
  for (int i = 0; i < t; ++i) {
    auto r = D.row_shared(universe_[i]);
    for (int j = 0; j < t; ++j) dist[static_cast<std::size_t>(i) * t + j] = (*r)[universe_[j]];
  }
  intervals_.assign(static_cast<std::size_t>(t) * t * words_, 0);
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) {
      const int dab = dist[static_cast<std::size_t>(a) * t + b];
      std::uint64_t* w = intervals_.data() + (static_cast<std::size_t>(a) * t + b) * words_;
      for (int c = 0; c < t; ++c)
        if (dist[static_cast<std::size_t>(a) * t + c] + dist[static_cast<std::size_t>(c) * t + b] == dab)
          w[c >> 6] |= std::uint64_t{1} << (c & 63);
    }
  lines_at_.assign(t, {});
  std::vector<char> seen(G.num_lines(), 0);
  for (int p : universe_)
    for (int l : G.lines_through(p)) {
      if (seen[l]) continue;
      seen[l] = 1;
      std::vector<int> loc;
      for (int x : G.line(l)) {
        auto it = local_.find(x);
        if (it == local_.end()) break;
        loc.push_back(it->second);
      }
      if (loc.size() != G.line(l).size()) continue;
      for (int x : loc) lines_at_[x].push_back(static_cast<int>(lines_.size()));
      lines_.push_back(std::move(loc));
    }
}

void ConfinedClosure::close(Bits& s, std::vector<int>& members) const {
  const int t = static_cast<int>(universe_.size());
  auto has = [&](int c) { return (s[c >> 6] >> (c & 63)) & 1u; };
  auto push = [&](int c) {
    if (!has(c)) {
      s[c >> 6] |= std::uint64_t{1} << (c & 63);
      members.push_back(c);
    }
  };
  for (std::size_t h = 0; h < members.size() && static_cast<int>(members.size()) < t; ++h) {
    const int a = members[h];
    for (std::size_t k = 0; k < h; ++k) {
      const std::uint64_t* w = intervals_.data() + (static_cast<std::size_t>(a) * t + members[k]) * words_;
      for (int i = 0; i < words_; ++i) {
        std::uint64_t fresh = w[i] & ~s[i];
        while (fresh) {
          int c = i * 64 + __builtin_ctzll(fresh);
          fresh &= fresh - 1;
          push(c);
        }
      }
    }
    for (int l : lines_at_[a]) {
      int c = 0;
      for (int x : lines_[l]) c += static_cast<int>(has(x));
      if (c >= 2)
        for (int x : lines_[l]) push(x);
    }
  }
}

PointSet ConfinedClosure::closure(const PointSet& seeds) const {
  Bits s(words_, 0);
  std::vector<int> members;
  for (int p : seeds) {
    auto it = local_.find(p);
    if (it == local_.end()) throw InvalidArgument("seed outside the closure universe");
    int c = it->second;
    if (!((s[c >> 6] >> (c & 63)) & 1u)) {
      s[c >> 6] |= std::uint64_t{1} << (c & 63);
      members.push_back(c);
    }
  }
  close(s, members);
  PointSet out;
  out.reserve(members.size());
  for (int c : members) out.push_back(universe_[c]);
  return sorted_set(std::move(out));
}

bool ConfinedClosure::generates_universe(int x, int y) const {
  return closure({std::min(x, y), std::max(x, y)}).size() == universe_.size();
}

}  // namespace polargrass
