#include "polargrass/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "polargrass/error.hpp"

namespace polargrass {

Subspace Subspace::zero(int ambient) { return Subspace(ambient, 0, {}); }

Subspace Subspace::full(int ambient) {
  std::vector<Elem> rows(static_cast<std::size_t>(ambient) * ambient, 0);
  for (int i = 0; i < ambient; ++i) rows[static_cast<std::size_t>(i) * ambient + i] = 1;
  return Subspace(ambient, ambient, std::move(rows));
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(dim_);
  for (int i = 0; i < dim_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  for (int i = 0; i < dim_; ++i) {
    auto r = row(i);
    int c = 0;
    while (r[c] == 0) ++c;
    out.push_back(c);
  }
  return out;
}

std::size_t Subspace::hash() const {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(dim_ * 131 + ambient_);
  for (Elem e : rows_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

Subspace canonicalize_flat(const Field& F, int ambient, std::vector<Elem> m) {
  if (ambient < 0) throw InvalidArgument("negative ambient dimension");
  if (ambient == 0) return Subspace(0, 0, {});
  if (m.size() % ambient != 0) throw InvalidArgument("row length does not match ambient dimension");
  const int nrows = static_cast<int>(m.size() / ambient);
  auto at = [&](int r, int c) -> Elem& { return m[static_cast<std::size_t>(r) * ambient + c]; };
  int rank = 0;
  for (int c = 0; c < ambient && rank < nrows; ++c) {
    int piv = -1;
    for (int r = rank; r < nrows; ++r)
      if (at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int cc = c; cc < ambient; ++cc) std::swap(at(piv, cc), at(rank, cc));
    Elem s = F.inv_unchecked(at(rank, c));
    if (s != 1)
      for (int cc = c; cc < ambient; ++cc) at(rank, cc) = F.mul(at(rank, cc), s);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) continue;
      Elem f = at(r, c);
      if (f == 0) continue;
      Elem nf = F.neg(f);
      for (int cc = c; cc < ambient; ++cc) at(r, cc) = F.add(at(r, cc), F.mul(nf, at(rank, cc)));
    }
    ++rank;
  }
  m.resize(static_cast<std::size_t>(rank) * ambient);
  return Subspace(ambient, rank, std::move(m));
}

Subspace canonicalize(const Field& F, int ambient, const std::vector<Vector>& rows) {
  std::vector<Elem> flat;
  flat.reserve(rows.size() * ambient);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != ambient) throw InvalidArgument("inconsistent row lengths");
    for (Elem e : r) {
      if (e >= F.order()) throw InvalidArgument("coordinate is not a field element");
      flat.push_back(e);
    }
  }
  return canonicalize_flat(F, ambient, std::move(flat));
}

Subspace canonicalize(const Field& F, const std::vector<Vector>& rows) {
  if (rows.empty()) throw InvalidArgument("cannot infer ambient dimension from an empty row list");
  return canonicalize(F, static_cast<int>(rows.front().size()), rows);
}

static void check_ambient(const Subspace& U, const Subspace& V) {
  if (U.ambient_dim() != V.ambient_dim())
    throw InvalidArgument("ambient mismatch: " + std::to_string(U.ambient_dim()) + " vs " +
                          std::to_string(V.ambient_dim()));
}

Subspace sum(const Field& F, const Subspace& U, const Subspace& V) {
  check_ambient(U, V);
  if (V.is_zero()) return U;
  if (U.is_zero()) return V;
  std::vector<Elem> flat = U.data();
  flat.insert(flat.end(), V.data().begin(), V.data().end());
  return canonicalize_flat(F, U.ambient_dim(), std::move(flat));
}

Subspace add_vector(const Field& F, const Subspace& U, std::span<const Elem> v) {
  if (static_cast<int>(v.size()) != U.ambient_dim()) throw InvalidArgument("vector length mismatch");
  std::vector<Elem> flat = U.data();
  flat.insert(flat.end(), v.begin(), v.end());
  return canonicalize_flat(F, U.ambient_dim(), std::move(flat));
}

Subspace annihilator(const Field& F, const Subspace& U) {
  const int n = U.ambient_dim();
  auto piv = U.pivots();
  std::vector<char> is_piv(n, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<Elem> flat;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<Elem> w(n, 0);
    w[f] = 1;
    for (int i = 0; i < U.dim(); ++i) w[piv[i]] = F.neg(U.row(i)[f]);
    flat.insert(flat.end(), w.begin(), w.end());
  }
  return canonicalize_flat(F, n, std::move(flat));
}

Subspace kernel(const Field& F, int ambient, const std::vector<Vector>& rows) {
  if (rows.empty()) return Subspace::full(ambient);
  return annihilator(F, canonicalize(F, ambient, rows));
}

Subspace intersect(const Field& F, const Subspace& U, const Subspace& V) {
  check_ambient(U, V);
  if (U == V) return U;
  if (U.is_zero() || V.is_zero()) return Subspace::zero(U.ambient_dim());
  return annihilator(F, sum(F, annihilator(F, U), annihilator(F, V)));
}

Vector reduce(const Field& F, const Subspace& U, std::span<const Elem> v) {
  if (static_cast<int>(v.size()) != U.ambient_dim()) throw InvalidArgument("vector length mismatch");
  Vector w(v.begin(), v.end());
  const int n = U.ambient_dim();
  for (int i = 0; i < U.dim(); ++i) {
    auto r = U.row(i);
    int c = 0;
    while (r[c] == 0) ++c;
    Elem f = w[c];
    if (f == 0) continue;
    Elem nf = F.neg(f);
    for (int cc = c; cc < n; ++cc) w[cc] = F.add(w[cc], F.mul(nf, r[cc]));
  }
  return w;
}

bool contains_vector(const Field& F, const Subspace& U, std::span<const Elem> v) {
  auto w = reduce(F, U, v);
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool contains(const Field& F, const Subspace& big, const Subspace& small) {
  check_ambient(big, small);
  if (small.dim() > big.dim()) return false;
  for (int i = 0; i < small.dim(); ++i)
    if (!contains_vector(F, big, small.row(i))) return false;
  return true;
}

void normalize(const Field& F, Vector& v) {
  for (Elem e : v)
    if (e != 0) {
      if (e == 1) return;
      Elem s = F.inv_unchecked(e);
      for (Elem& x : v) x = F.mul(x, s);
      return;
    }
}

std::size_t gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  unsigned __int128 r = 1;
  const unsigned __int128 cap = std::numeric_limits<std::size_t>::max();
  auto qpow = [&](int e) {
    unsigned __int128 x = 1;
    for (int i = 0; i < e; ++i) {
      x *= static_cast<unsigned>(q);
      if (x > cap) return cap + 1;
    }
    return x;
  };
  for (int i = 0; i < k; ++i) {
    unsigned __int128 num = qpow(n - i);
    if (num > cap) return std::numeric_limits<std::size_t>::max();
    r = r * (num - 1) / (qpow(i + 1) - 1);
    if (r > cap) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(r);
}

namespace {

// Calls fn(coeffs) for every tuple in F^len, lexicographically.
template <class Fn>
void for_each_tuple(int len, int q, Fn&& fn) {
  std::vector<Elem> t(len, 0);
  while (true) {
    fn(t);
    int i = len - 1;
    while (i >= 0 && t[i] == q - 1) t[i--] = 0;
    if (i < 0) return;
    ++t[i];
  }
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(int ambient, int j, const Field& F, std::size_t budget) {
  if (j < 0 || j > ambient) throw InvalidArgument("subspace dimension out of range");
  std::size_t count = gaussian_binomial(ambient, j, F.order());
  if (count > budget)
    throw BudgetExceeded("enumerating " + std::to_string(count) + " subspaces exceeds budget " +
                         std::to_string(budget));
  std::vector<Subspace> out;
  out.reserve(count);
  if (j == 0) {
    out.push_back(Subspace::zero(ambient));
    return out;
  }
  const int q = F.order();
  std::vector<int> piv(j);
  for (int i = 0; i < j; ++i) piv[i] = i;
  while (true) {
    // free slots: (row, col) with col > piv[row] and col not a pivot
    std::vector<std::pair<int, int>> slots;
    std::vector<char> is_piv(ambient, 0);
    for (int c : piv) is_piv[c] = 1;
    for (int r = 0; r < j; ++r)
      for (int c = piv[r] + 1; c < ambient; ++c)
        if (!is_piv[c]) slots.emplace_back(r, c);
    std::vector<Elem> base(static_cast<std::size_t>(j) * ambient, 0);
    for (int r = 0; r < j; ++r) base[static_cast<std::size_t>(r) * ambient + piv[r]] = 1;
    for_each_tuple(static_cast<int>(slots.size()), q, [&](const std::vector<Elem>& t) {
      std::vector<Elem> m = base;
      for (std::size_t s = 0; s < slots.size(); ++s)
        m[static_cast<std::size_t>(slots[s].first) * ambient + slots[s].second] = t[s];
      out.push_back(canonicalize_flat(F, ambient, std::move(m)));
    });
    int i = j - 1;
    while (i >= 0 && piv[i] == ambient - j + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int r = i + 1; r < j; ++r) piv[r] = piv[r - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vector> complement_basis(const Field& F, const Subspace& A, const Subspace& C) {
  check_ambient(A, C);
  std::vector<Elem> flat;
  for (int i = 0; i < C.dim(); ++i) {
    auto w = reduce(F, A, C.row(i));
    flat.insert(flat.end(), w.begin(), w.end());
  }
  Subspace R = canonicalize_flat(F, C.ambient_dim(), std::move(flat));
  if (R.dim() != C.dim() - A.dim()) throw InvalidArgument("first subspace is not contained in the second");
  return R.basis();
}

std::vector<Subspace> subspaces_between(const Field& F, const Subspace& A, const Subspace& C, int d,
                                        std::size_t budget) {
  if (!contains(F, C, A)) throw InvalidArgument("lower subspace is not contained in upper subspace");
  if (d < A.dim() || d > C.dim()) return {};
  auto comp = complement_basis(F, A, C);
  const int r = static_cast<int>(comp.size());
  const int n = C.ambient_dim();
  auto coords = enumerate_subspaces(r, d - A.dim(), F, budget);
  std::vector<Subspace> out;
  out.reserve(coords.size());
  for (const auto& X : coords) {
    std::vector<Elem> flat = A.data();
    for (int i = 0; i < X.dim(); ++i) {
      Vector v(n, 0);
      auto c = X.row(i);
      for (int t = 0; t < r; ++t) {
        if (c[t] == 0) continue;
        for (int x = 0; x < n; ++x) v[x] = F.add(v[x], F.mul(c[t], comp[t][x]));
      }
      flat.insert(flat.end(), v.begin(), v.end());
    }
    out.push_back(canonicalize_flat(F, n, std::move(flat)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vector> all_vectors(const Field& F, const Subspace& U) {
  const int n = U.ambient_dim();
  std::vector<Vector> out;
  for_each_tuple(U.dim(), F.order(), [&](const std::vector<Elem>& t) {
    Vector v(n, 0);
    for (int i = 0; i < U.dim(); ++i) {
      if (t[i] == 0) continue;
      auto r = U.row(i);
      for (int x = 0; x < n; ++x) v[x] = F.add(v[x], F.mul(t[i], r[x]));
    }
    out.push_back(std::move(v));
  });
  return out;
}

std::vector<Vector> projective_points(const Field& F, const Subspace& U) {
  const int n = U.ambient_dim();
  const int d = U.dim();
  std::vector<Vector> out;
  for (int lead = 0; lead < d; ++lead) {
    for_each_tuple(d - lead - 1, F.order(), [&](const std::vector<Elem>& t) {
      Vector v(U.row(lead).begin(), U.row(lead).end());
      for (int i = 0; i < d - lead - 1; ++i) {
        if (t[i] == 0) continue;
        auto r = U.row(lead + 1 + i);
        for (int x = 0; x < n; ++x) v[x] = F.add(v[x], F.mul(t[i], r[x]));
      }
      out.push_back(std::move(v));
    });
  }
  return out;
}

}  // namespace polargrass
