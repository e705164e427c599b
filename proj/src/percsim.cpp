#include "critwin/percsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "critwin/profiles.hpp"

namespace critwin::percsim {

ClusterSample sample_cluster_bfs(long long V, double p_over_V, Xoshiro256& rng) {
  if (p_over_V < 0 || p_over_V > 1)
    throw std::invalid_argument("sample_cluster_bfs: need 0 <= p/V <= 1");
  if (V < 1) throw std::invalid_argument("sample_cluster_bfs: V >= 1");
  if (p_over_V >= 1.0) return {V, V > 1};
  if (p_over_V == 0.0) return {1, false};

  // Unvisited vertices live in slots [0, U). Identities are immaterial except
  // for vertex 1, whose slot is tracked through the removal swaps.
  const double log1mp = std::log1p(-p_over_V);
  long long U = V;
  long long pos1 = (V > 1) ? 1 : -1;
  bool hit1 = false;

  auto remove_slot = [&](long long slot) {
    if (slot == pos1) {
      hit1 = true;
      pos1 = -1;
    } else if (pos1 == U - 1) {
      pos1 = slot;  // id in the last slot moves into the freed slot
    }
    --U;
  };

  remove_slot(0);  // vertex 0 starts the cluster
  long long size = 1;
  long long active = 1;
  std::vector<long long> hits;

  while (active > 0 && U > 0) {
    --active;
    // Binomial(U, p) draws via geometric skips; collect ascending slot hits.
    hits.clear();
    std::uint64_t j = geometric_skip(rng, log1mp);
    while (j < static_cast<std::uint64_t>(U)) {
      hits.push_back(static_cast<long long>(j));
      j += 1 + geometric_skip(rng, log1mp);
    }
    // remove from the highest slot down so recorded indices stay valid
    for (auto it = hits.rbegin(); it != hits.rend(); ++it) remove_slot(*it);
    size += static_cast<long long>(hits.size());
    active += static_cast<long long>(hits.size());
  }
  return {size, hit1};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;
  explicit UnionFind(long long n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

ClusterSample sample_cluster_skip(long long V, double p_over_V, Xoshiro256& rng) {
  if (p_over_V < 0 || p_over_V > 1)
    throw std::invalid_argument("sample_cluster_skip: need 0 <= p/V <= 1");
  if (V > 4000000)
    throw std::invalid_argument("sample_cluster_skip: V too large for the reference sampler");
  if (p_over_V >= 1.0) return {V, V > 1};
  if (p_over_V == 0.0 || V == 1) return {1, false};

  const double log1mp = std::log1p(-p_over_V);
  const unsigned long long total = static_cast<unsigned long long>(V) * (V - 1) / 2;
  UnionFind uf(V);
  // edge index e < total maps to (u, v): e = off(u) + (v - u - 1),
  // off(u) = u V - u(u+1)/2
  std::uint64_t e = geometric_skip(rng, log1mp);
  while (e < total) {
    double ed = static_cast<double>(e);
    long long u = static_cast<long long>(
        std::floor(V - 0.5 - std::sqrt((V - 0.5) * (V - 0.5) - 2.0 * ed)));
    if (u < 0) u = 0;
    auto off = [&](long long uu) {
      return static_cast<unsigned long long>(uu) * V - static_cast<unsigned long long>(uu) * (uu + 1) / 2;
    };
    while (u > 0 && off(u) > e) --u;
    while (off(u + 1) <= e) ++u;
    long long v = u + 1 + static_cast<long long>(e - off(u));
    uf.unite(static_cast<int>(u), static_cast<int>(v));
    e += 1 + geometric_skip(rng, log1mp);
  }
  int root = uf.find(0);
  return {uf.size[root], V > 1 && uf.find(1) == root};
}

MCEstimate estimate_chi(long long V, double s, long long replicas,
                        std::uint64_t seed, Sampler sampler, int threads) {
  if (replicas < 1) throw std::invalid_argument("estimate_chi: replicas >= 1");
  double p = 1.0 + s / std::cbrt(static_cast<double>(V));
  double pv = p / static_cast<double>(V);
  if (pv < 0) throw std::domain_error("estimate_chi: p < 0 outside model range");
  if (pv > 1) pv = 1;

  struct Partial {
    unsigned long long size_sum = 0;
    __uint128_t size_sq = 0;
    unsigned long long hits = 0;
  };
  int nthreads = std::max(1, threads);
  std::vector<Partial> parts(nthreads);

  auto work = [&](int tid) {
    Partial acc;
    for (long long r = tid; r < replicas; r += nthreads) {
      Xoshiro256 rng(seed, static_cast<std::uint64_t>(r));
      ClusterSample c = sampler == Sampler::Bfs ? sample_cluster_bfs(V, pv, rng)
                                                : sample_cluster_skip(V, pv, rng);
      acc.size_sum += static_cast<unsigned long long>(c.size);
      acc.size_sq += static_cast<__uint128_t>(c.size) * static_cast<__uint128_t>(c.size);
      acc.hits += c.contains_1 ? 1u : 0u;
    }
    parts[tid] = acc;
  };

  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  unsigned long long size_sum = 0, hits = 0;
  __uint128_t size_sq = 0;
  for (const auto& pp : parts) {
    size_sum += pp.size_sum;
    size_sq += pp.size_sq;
    hits += pp.hits;
  }

  MCEstimate out;
  out.V = V;
  out.s = s;
  out.seed = seed;
  out.replicas = replicas;
  double n = static_cast<double>(replicas);
  out.mean = static_cast<double>(size_sum) / n;
  double msq = static_cast<double>(size_sq) / n;
  double var = std::max(0.0, (msq - out.mean * out.mean) * (n / std::max(1.0, n - 1)));
  out.std_error = std::sqrt(var / n);
  out.tau_mean = static_cast<double>(hits) / n;
  out.tau_se = std::sqrt(std::max(0.0, out.tau_mean * (1 - out.tau_mean)) / n);
  return out;
}

ProfileFit profile_fit(const std::vector<MCEstimate>& estimates) {
  std::vector<double> svals, vvals;
  for (const auto& e : estimates) {
    svals.push_back(e.s);
    vvals.push_back(static_cast<double>(e.V));
  }
  std::sort(svals.begin(), svals.end());
  svals.erase(std::unique(svals.begin(), svals.end()), svals.end());
  std::sort(vvals.begin(), vvals.end());
  vvals.erase(std::unique(vvals.begin(), vvals.end()), vvals.end());
  if (svals.size() < 3 || vvals.size() < 2)
    throw std::invalid_argument("profile_fit: need >= 3 distinct s and >= 2 distinct V");

  struct Pt {
    double s, y, w;
  };
  std::vector<Pt> pts;
  for (const auto& e : estimates) {
    double scale = std::cbrt(static_cast<double>(e.V));
    double y = e.mean / scale;
    double se = std::max(e.std_error / scale, 1e-12);
    pts.push_back({e.s, y, 1.0 / (se * se)});
  }

  auto eval = [&](double a, double& b_out) {
    // weighted LS for b given a; returns weighted mean squared residual
    double num = 0, den = 0;
    std::vector<double> f(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
      f[i] = static_cast<double>(profiles::perc_profile(a * pts[i].s, 1e-7).value);
      num += pts[i].w * pts[i].y * f[i];
      den += pts[i].w * f[i] * f[i];
    }
    double b = den > 0 ? num / den : 0;
    b_out = b;
    double r = 0, wsum = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
      double d = pts[i].y - b * f[i];
      r += pts[i].w * d * d;
      wsum += pts[i].w;
    }
    return r / wsum;
  };

  // golden-section over a after a coarse scan (the scan range keeps the
  // f_perc argument within the supported MGF domain)
  double best_a = 0.5, best_r = 1e300;
  for (double a = 0.1; a <= 2.0001; a += 0.1) {
    double b;
    double r = eval(a, b);
    if (r < best_r) {
      best_r = r;
      best_a = a;
    }
  }
  double lo = std::max(0.02, best_a - 0.1), hi = best_a + 0.1;
  const double gr = 0.6180339887498949;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo), b1, b2;
  double r1 = eval(x1, b1), r2 = eval(x2, b2);
  for (int it = 0; it < 40; ++it) {
    if (r1 < r2) {
      hi = x2;
      x2 = x1;
      r2 = r1;
      b2 = b1;
      x1 = hi - gr * (hi - lo);
      r1 = eval(x1, b1);
    } else {
      lo = x1;
      x1 = x2;
      r1 = r2;
      b1 = b2;
      x2 = lo + gr * (hi - lo);
      r2 = eval(x2, b2);
    }
  }
  ProfileFit fit;
  if (r1 < r2) {
    fit.a = x1;
    fit.b = b1;
    fit.residual = std::sqrt(r1);
  } else {
    fit.a = x2;
    fit.b = b2;
    fit.residual = std::sqrt(r2);
  }

  // nested s-independent fit: y = const
  double num = 0, den = 0;
  for (const auto& q : pts) {
    num += q.w * q.y;
    den += q.w;
  }
  double c = num / den, r = 0;
  for (const auto& q : pts) r += q.w * (q.y - c) * (q.y - c);
  fit.residual_const = std::sqrt(r / den);
  return fit;
}

}  // namespace critwin::percsim
