#include "critwin/count.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace critwin::counts {

Count cayley_count(long long n) {
  if (n <= 0) throw std::invalid_argument("cayley_count: n must be >= 1");
  if (n <= 2) return Count(1);
  Count base(n);
  Count out;
  mpz_pow_ui(out.backend().data(), base.backend().data(), static_cast<unsigned long>(n - 2));
  return out;
}

Count binomial(long long a, long long b) {
  if (a < 0) throw std::invalid_argument("binomial: a must be >= 0");
  if (b < 0 || b > a) return Count(0);
  Count out;
  mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

Count total_graphs(int n, long long m) {
  if (n < 1) throw std::invalid_argument("total_graphs: n must be >= 1");
  long long edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > edges) return Count(0);
  return binomial(edges, m);
}

Count brute_force_connected(int n, int m) {
  if (n < 1 || n > 8) throw std::invalid_argument("brute_force_connected: need 1 <= n <= 8");
  int edges = n * (n - 1) / 2;
  if (m < 0 || m > edges) return Count(0);
  if (n == 1) return Count(m == 0 ? 1 : 0);
  if (m == 0) return Count(0);  // n >= 2 cannot be spanned without edges

  std::array<int, 28> eu{}, ev{};
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      eu[idx] = u;
      ev[idx] = v;
      ++idx;
    }

  unsigned long long total = 0;
  std::array<int, 8> parent{};
  // Gosper's hack over m-subsets of the edge index set.
  std::uint32_t mask = (m == 0) ? 0u : ((1u << m) - 1u);
  const std::uint32_t limit = 1u << edges;
  while (mask < limit) {
    for (int v = 0; v < n; ++v) parent[v] = v;
    int comps = n;
    std::uint32_t bits = mask;
    while (bits) {
      int e = __builtin_ctz(bits);
      bits &= bits - 1;
      int a = eu[e], b = ev[e];
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      while (parent[b] != b) b = parent[b] = parent[parent[b]];
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    if (comps == 1) ++total;
    // next combination
    std::uint32_t c = mask & static_cast<std::uint32_t>(-static_cast<std::int32_t>(mask));
    std::uint32_t r = mask + c;
    if (c == 0) break;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return Count(total);
}

CountTable::CountTable(int n_max, long long surplus_cap)
    : n_max_(n_max), surplus_cap_(surplus_cap) {
  if (n_max < 1) throw std::invalid_argument("CountTable: n_max must be >= 1");
  build();
}

long long CountTable::row_top(int n) const {
  long long edges = static_cast<long long>(n) * (n - 1) / 2;
  if (surplus_cap_ < 0) return edges;
  // Banded rows widen toward small n: computing surplus c at row n consumes
  // surplus up to c + (n' - n) at rows n < n', so width cap + (n_max - n)
  // closes the recurrence within the band.
  return std::min(edges, (n - 1) + surplus_cap_ + (n_max_ - n));
}

void CountTable::build() {
  rows_.resize(n_max_ + 1);
  rows_[1] = {Count(1)};  // C(1, 0) = 1

  // Binomial rows binom(E(k), .) reused as the total-graph polynomials T_k.
  std::vector<std::vector<Count>> binrow(n_max_ + 1);
  for (int k = 0; k <= n_max_; ++k) {
    long long ek = static_cast<long long>(k) * (k - 1) / 2;
    binrow[k].resize(ek + 1);
    binrow[k][0] = 1;
    for (long long m = 1; m <= ek; ++m)
      binrow[k][m] = binomial(ek, m);
  }

  for (int n = 2; n <= n_max_; ++n) {
    const long long lo = row_lo(n), hi = row_top(n);
    std::vector<Count> acc(hi + 1);  // sum over j of binom(n-1,j-1) C_j * T_{n-j}, m in [0,hi]
    for (int j = 1; j <= n - 1; ++j) {
      const Count w = binomial(n - 1, j - 1);
      const auto& cj = rows_[j];
      const long long cj_lo = row_lo(j);
      const auto& t = binrow[n - j];
      const long long tdeg = static_cast<long long>(t.size()) - 1;
      for (long long i = 0; i < static_cast<long long>(cj.size()); ++i) {
        if (cj[i].is_zero()) continue;
        Count wc = w * cj[i];
        const long long mi = cj_lo + i;
        const long long mtop = std::min(hi, mi + tdeg);
        for (long long m = mi; m <= mtop; ++m) {
          mpz_addmul(acc[m].backend().data(), wc.backend().data(),
                     t[m - mi].backend().data());
        }
      }
    }
    auto& row = rows_[n];
    row.resize(hi - lo + 1);
    for (long long m = lo; m <= hi; ++m)
      row[m - lo] = binrow[n][m] - acc[m];
  }
}

const Count& CountTable::connected(int n, long long m) const {
  static const Count kZero(0);
  if (n < 1 || n > n_max_)
    throw std::out_of_range("CountTable: n = " + std::to_string(n) +
                            " beyond capacity n_max = " + std::to_string(n_max_));
  long long edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > edges) return kZero;
  if (m < row_lo(n)) return kZero;
  if (m > row_top(n))
    throw std::out_of_range("CountTable: banded table does not store m = " +
                            std::to_string(m) + " for n = " + std::to_string(n));
  return rows_[n][m - row_lo(n)];
}

Count CountTable::connected_total(int n) const {
  if (banded()) throw std::logic_error("connected_total requires an unbanded table");
  if (n < 1 || n > n_max_) throw std::out_of_range("connected_total: n beyond capacity");
  Count s(0);
  for (const auto& c : rows_[n]) s += c;
  return s;
}

}  // namespace critwin::counts
