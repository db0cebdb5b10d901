#include "oracles.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

std::vector<std::uint32_t> components(std::uint32_t n, const EdgeList& edges) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [u, v] : edges) {
    auto a = find(u), b = find(v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::uint32_t> out(n);
  for (std::uint32_t v = 0; v < n; ++v) out[v] = find(v);
  return out;
}

std::uint64_t min_cut_by_enumeration(std::uint32_t n, const EdgeList& edges) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t c = 0;
    for (auto [u, v] : edges) c += ((mask >> u) & 1) != ((mask >> v) & 1);
    best = std::min(best, c);
  }
  return best;
}

std::uint64_t induced_min_cut(const EdgeList& edges, const std::vector<std::uint32_t>& members) {
  std::map<std::uint32_t, std::uint32_t> local;
  for (auto v : members) local.emplace(v, static_cast<std::uint32_t>(local.size()));
  EdgeList sub;
  for (auto [u, v] : edges)
    if (local.count(u) && local.count(v)) sub.emplace_back(local[u], local[v]);
  return min_cut_by_enumeration(static_cast<std::uint32_t>(members.size()), sub);
}

namespace {

long double adjusted(long double index, long double a, long double b, long double total) {
  const long double expected = a * b / total;
  const long double maximum = (a + b) / 2;
  return (index - expected) / (maximum - expected);
}

}  // namespace

long double ari_by_pairs(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  long double both = 0, in_a = 0, in_b = 0, total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const bool x = a[i] == a[j], y = b[i] == b[j];
      both += x && y;
      in_a += x;
      in_b += y;
      total += 1;
    }
  return adjusted(both, in_a, in_b, total);
}

long double agri_by_edges(const EdgeList& edges, const std::vector<std::uint32_t>& a,
                          const std::vector<std::uint32_t>& b) {
  long double both = 0, in_a = 0, in_b = 0;
  for (auto [u, v] : edges) {
    const bool x = a[u] == a[v], y = b[u] == b[v];
    both += x && y;
    in_a += x;
    in_b += y;
  }
  return adjusted(both, in_a, in_b, static_cast<long double>(edges.size()));
}

double nmi_direct(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const double n = static_cast<double>(a.size());
  std::map<std::uint32_t, double> pa, pb;
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> pab;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa[a[i]] += 1 / n;
    pb[b[i]] += 1 / n;
    pab[{a[i], b[i]}] += 1 / n;
  }
  double ha = 0, hb = 0, mi = 0;
  for (auto [k, p] : pa) ha -= p * std::log2(p);
  for (auto [k, p] : pb) hb -= p * std::log2(p);
  for (auto [k, p] : pab) mi += p * std::log2(p / (pa[k.first] * pb[k.second]));
  return 2 * mi / (ha + hb);
}

std::uint64_t count_tables(const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols) {
  const std::size_t R = rows.size(), S = cols.size();
  std::vector<std::uint64_t> row_left = rows, col_left = cols;
  std::function<std::uint64_t(std::size_t)> fill = [&](std::size_t cell) -> std::uint64_t {
    if (cell == R * S) {
      for (auto x : row_left) if (x) return 0;
      for (auto x : col_left) if (x) return 0;
      return 1;
    }
    const std::size_t r = cell / S, s = cell % S;
    std::uint64_t total = 0;
    for (std::uint64_t x = 0; x <= std::min(row_left[r], col_left[s]); ++x) {
      row_left[r] -= x;
      col_left[s] -= x;
      // A finished row must be exhausted before moving on.
      if (s + 1 < S || row_left[r] == 0) total += fill(cell + 1);
      row_left[r] += x;
      col_left[s] += x;
    }
    return total;
  };
  return fill(0);
}

double log_binomial_exact(std::uint64_t top, std::uint64_t k) {
  mpz_t c;
  mpz_init(c);
  mpz_bin_uiui(c, top, k);
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, c);
  mpz_clear(c);
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

bool same_partition(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return false;
  std::map<std::uint32_t, std::uint32_t> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [x, fresh_x] = ab.emplace(a[i], b[i]);
    auto [y, fresh_y] = ba.emplace(b[i], a[i]);
    if (x->second != b[i] || y->second != a[i]) return false;
  }
  return true;
}

wellconn::Graph make_graph(std::uint32_t n, const EdgeList& edges) {
  std::vector<wellconn::Edge> e;
  for (auto [u, v] : edges) e.push_back({u, v});
  return wellconn::Graph::from_edges(n, e);
}

EdgeList random_connected(std::mt19937_64& rng, std::uint32_t n, double p) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    EdgeList edges;
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const auto comp = components(n, edges);
    if (std::all_of(comp.begin(), comp.end(), [](std::uint32_t c) { return c == 0; })) return edges;
  }
}

Instance random_instance(std::mt19937_64& rng, std::uint32_t lo_n, std::uint32_t hi_n, double p,
                         std::uint32_t max_clusters) {
  Instance inst;
  const auto n = std::uniform_int_distribution<std::uint32_t>(lo_n, hi_n)(rng);
  std::bernoulli_distribution coin(p);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (coin(rng)) inst.edges.emplace_back(u, v);
  const auto k = std::uniform_int_distribution<std::uint32_t>(1, max_clusters)(rng);
  std::uniform_int_distribution<std::uint32_t> pick(0, k - 1);
  inst.labels.resize(n);
  for (auto& l : inst.labels) l = pick(rng);
  inst.graph = make_graph(n, inst.edges);
  std::vector<std::uint64_t> wide(inst.labels.begin(), inst.labels.end());
  inst.clustering = wellconn::Clustering::from_labels(wide);
  return inst;
}

}  // namespace oracle
