#pragma once

#include <cstdint>
#include <vector>

#include "critwin/rng.hpp"

namespace critwin::percsim {

// Monte Carlo estimate at one window point p = 1 + s V^{-1/3}.
// Re-running with the same (V, s, replicas, seed) reproduces the estimate
// bit-identically: accumulators are exact integers and replica streams are
// derived from (seed, replica index), independent of scheduling.
struct MCEstimate {
  double mean = 0;       // mean cluster size of vertex 0 (= chi estimate)
  double std_error = 0;  // sample sd / sqrt(replicas)
  double tau_mean = 0;   // fraction of replicas with 0 <-> 1
  double tau_se = 0;
  long long replicas = 0;
  std::uint64_t seed = 0;
  long long V = 0;
  double s = 0;
};

enum class Sampler { Bfs, Skip };

struct ClusterSample {
  long long size = 0;
  bool contains_1 = false;
};

// Cluster of vertex 0 in G(V, p_over_V) by breadth-first exploration with
// geometric-skip neighbor draws over the unvisited set; O(|C|) per sample,
// never materializes edges. Requires 0 <= p_over_V <= 1.
ClusterSample sample_cluster_bfs(long long V, double p_over_V, Xoshiro256& rng);

// Reference sampler: skip-enumerates the binom(V,2) candidate edges of the
// whole graph, builds union-find, reads off the component of 0. O(V + E) per
// sample; intended as an independent oracle at moderate V.
ClusterSample sample_cluster_skip(long long V, double p_over_V, Xoshiro256& rng);

MCEstimate estimate_chi(long long V, double s, long long replicas,
                        std::uint64_t seed, Sampler sampler = Sampler::Bfs,
                        int threads = 1);

// Least-squares fit of chi * V^{-1/3} against b * f_perc(a s) over a grid of
// estimates. Reports the recovered (a, b) and the weighted residual norm;
// this is a conjecture diagnostic, never asserted as a theorem check.
struct ProfileFit {
  double a = 0;
  double b = 0;
  double residual = 0;        // sqrt(mean weighted squared residual)
  double residual_const = 0;  // same for the best s-independent fit
};

ProfileFit profile_fit(const std::vector<MCEstimate>& estimates);

}  // namespace critwin::percsim
