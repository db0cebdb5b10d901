#include "wellconn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "wellconn/error.hpp"

namespace wellconn {

namespace {

__extension__ typedef __int128 Int;

constexpr double kLn2 = 0.69314718055994530942;

std::uint64_t pairs(std::uint64_t k) { return k * (k - (k > 0)) / 2; }

double lfact(std::uint64_t k) { return std::lgamma(static_cast<double>(k) + 1.0); }

// 2(index*T - a*b) / ((a+b)*T - 2ab), the pair-count form of the adjusted
// Rand index, evaluated in exact integers before the final division.
double adjusted_rand(std::uint64_t index, std::uint64_t a, std::uint64_t b, std::uint64_t total, bool identical) {
  const Int num = 2 * (Int(index) * total - Int(a) * b);
  const Int den = (Int(a) + b) * total - 2 * Int(a) * b;
  if (den == 0) return identical ? 1.0 : 0.0;
  return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

double entropy_bits(std::span<const std::uint64_t> sums, std::uint64_t n) {
  double h = 0;
  for (auto s : sums)
    if (s) {
      const double p = static_cast<double>(s) / static_cast<double>(n);
      h -= p * std::log2(p);
    }
  return h;
}

}  // namespace

ContingencyTable contingency(const Clustering& truth, const Clustering& est) {
  if (truth.n() != est.n())
    throw MismatchError("contingency: clusterings cover " + std::to_string(truth.n()) + " and " +
                        std::to_string(est.n()) + " nodes");
  ContingencyTable t;
  t.total = truth.n();
  t.row_sums.assign(truth.size(), 0);
  t.col_sums.assign(est.size(), 0);
  std::vector<std::uint64_t> keys(truth.n());
  for (NodeId v = 0; v < truth.n(); ++v) {
    keys[v] = (std::uint64_t{truth.cluster_of(v)} << 32) | est.cluster_of(v);
    ++t.row_sums[truth.cluster_of(v)];
    ++t.col_sums[est.cluster_of(v)];
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    t.cells.push_back({static_cast<ClusterId>(keys[i] >> 32), static_cast<ClusterId>(keys[i] & 0xffffffffu), j - i});
    i = j;
  }
  return t;
}

double nmi(const Clustering& truth, const Clustering& est) {
  const auto t = contingency(truth, est);
  if (t.total == 0) return 1.0;
  const double h_truth = entropy_bits(t.row_sums, t.total);
  const double h_est = entropy_bits(t.col_sums, t.total);
  if (h_truth + h_est == 0.0) return truth == est ? 1.0 : 0.0;
  const double n = static_cast<double>(t.total);
  double mi = 0;
  for (const auto& c : t.cells) {
    const double p = static_cast<double>(c.count) / n;
    mi += p * std::log2(static_cast<double>(c.count) * n /
                        (static_cast<double>(t.row_sums[c.row]) * static_cast<double>(t.col_sums[c.col])));
  }
  return std::clamp(2.0 * mi / (h_truth + h_est), 0.0, 1.0);
}

double ari(const Clustering& truth, const Clustering& est) {
  const auto t = contingency(truth, est);
  std::uint64_t index = 0, a = 0, b = 0;
  for (const auto& c : t.cells) index += pairs(c.count);
  for (auto s : t.row_sums) a += pairs(s);
  for (auto s : t.col_sums) b += pairs(s);
  return adjusted_rand(index, a, b, pairs(t.total), truth == est);
}

double agri(const Graph& g, const Clustering& truth, const Clustering& est) {
  if (g.n() != truth.n() || g.n() != est.n()) throw MismatchError("agri: clusterings do not cover the graph");
  std::uint64_t both = 0, in_truth = 0, in_est = 0;
  bool identical = true;
  g.for_each_edge([&](NodeId u, NodeId v) {
    const bool x = truth.cluster_of(u) == truth.cluster_of(v);
    const bool y = est.cluster_of(u) == est.cluster_of(v);
    in_truth += x;
    in_est += y;
    both += x && y;
    identical = identical && x == y;
  });
  return adjusted_rand(both, in_truth, in_est, g.m(), identical);
}

// ---------------------------------------------------------------------------
// Counting contingency tables

namespace {

class TableCounter {
 public:
  TableCounter(std::vector<std::uint64_t> rows, std::size_t max_states)
      : rows_(std::move(rows)), max_states_(max_states) {}

  // Number of ways to finish rows [r, R) given remaining column capacities.
  // Capacities are kept sorted: columns are interchangeable for counting.
  std::optional<long double> count(std::size_t r, std::vector<std::uint64_t> caps) {
    if (r + 1 == rows_.size()) return 1.0L;  // last row takes exactly what is left
    std::sort(caps.begin(), caps.end());
    while (!caps.empty() && caps.front() == 0) caps.erase(caps.begin());
    auto& memo = memo_[r];
    if (auto it = memo.find(caps); it != memo.end()) return it->second;
    // Budget counts stored capacity entries, bounding memo memory.
    if ((stored_ += caps.size() + 1) > max_states_) return std::nullopt;

    long double total = 0;
    std::vector<std::uint64_t> next = caps;
    bool ok = true;
    distribute(rows_[r], 0, caps, next, [&] {
      if (!ok) return;
      auto sub = count(r + 1, next);
      if (!sub) ok = false;
      else total += *sub;
    });
    if (!ok) return std::nullopt;
    memo.emplace(std::move(caps), total);
    return total;
  }

  void reserve_rows() { memo_.resize(rows_.size()); }

 private:
  // Enumerates every way to take `left` units from columns [s, end) with
  // per-column limits caps[s]; `next` holds the capacities after the take.
  template <typename Visit>
  void distribute(std::uint64_t left, std::size_t s, const std::vector<std::uint64_t>& caps,
                  std::vector<std::uint64_t>& next, Visit&& visit) {
    if (s == caps.size()) {
      if (left == 0) visit();
      return;
    }
    std::uint64_t rest = 0;  // capacity available after column s
    for (std::size_t k = s + 1; k < caps.size(); ++k) rest += caps[k];
    const std::uint64_t lo = left > rest ? left - rest : 0;
    const std::uint64_t hi = std::min(left, caps[s]);
    for (std::uint64_t x = lo; x <= hi; ++x) {
      if (++work_ > 10 * max_states_) return;
      next[s] = caps[s] - x;
      distribute(left - x, s + 1, caps, next, visit);
    }
    next[s] = caps[s];
  }

  std::vector<std::uint64_t> rows_;
  std::size_t max_states_;
  std::size_t stored_ = 0;
  std::size_t work_ = 0;
  std::vector<std::map<std::vector<std::uint64_t>, long double>> memo_;

 public:
  bool exhausted() const { return work_ > 10 * max_states_; }
};

std::uint64_t sum(std::span<const std::uint64_t> v) { return std::accumulate(v.begin(), v.end(), std::uint64_t{0}); }

}  // namespace

std::optional<double> log_table_count_exact(std::span<const std::uint64_t> rows, std::span<const std::uint64_t> cols,
                                            std::size_t max_states) {
  if (sum(rows) != sum(cols)) throw ContractViolation("log_table_count_exact: margins have different totals");
  std::vector<std::uint64_t> r, c;
  for (auto x : rows) if (x) r.push_back(x);
  for (auto x : cols) if (x) c.push_back(x);
  if (r.size() <= 1 || c.size() <= 1) return 0.0;
  // Fewer rows means a shallower recursion; fill large rows first.
  if (r.size() > c.size()) std::swap(r, c);
  if (r.size() > 512) return std::nullopt;  // recursion depth is the row count
  std::sort(r.begin(), r.end(), std::greater<>());
  TableCounter counter(r, max_states);
  counter.reserve_rows();
  auto n = counter.count(0, c);
  if (!n || counter.exhausted()) return std::nullopt;
  return static_cast<double>(std::log(*n));
}

double log_table_count_approx(std::span<const std::uint64_t> rows, std::span<const std::uint64_t> cols) {
  if (sum(rows) != sum(cols)) throw ContractViolation("log_table_count_approx: margins have different totals");
  std::vector<double> a, b;
  for (auto x : rows) if (x) a.push_back(static_cast<double>(x));
  for (auto x : cols) if (x) b.push_back(static_cast<double>(x));
  if (a.size() <= 1 || b.size() <= 1) return 0.0;

  // Each row is a uniform composition over the S columns; the column-sum
  // vector is modelled as Dirichlet-multinomial with a symmetric parameter
  // alpha chosen to match its variance.
  const double n = static_cast<double>(sum(rows));
  const double S = static_cast<double>(b.size());
  double sq = 0;
  for (double x : a) sq += x * x;
  auto lbinom = [](double top, double bottom) {  // log C(top, bottom) for real arguments
    return std::lgamma(top + 1) - std::lgamma(bottom + 1) - std::lgamma(top - bottom + 1);
  };

  double log_rows = 0;
  for (double x : a) log_rows += lbinom(x + S - 1, S - 1);

  if (sq == n) {  // all rows are 1: the column model degenerates to a multinomial
    double lp = std::lgamma(n + 1) - n * std::log(S);
    for (double y : b) lp -= std::lgamma(y + 1);
    return log_rows + lp;
  }
  const double alpha = ((n * n - n) + (n * n - sq) / S) / (sq - n);
  double lp = -lbinom(n + S * alpha - 1, S * alpha - 1);
  for (double y : b) lp += lbinom(y + alpha - 1, alpha - 1);
  return log_rows + lp;
}

double log_table_count(std::span<const std::uint64_t> rows, std::span<const std::uint64_t> cols,
                       TableCountMethod* method) {
  if (auto exact = log_table_count_exact(rows, cols)) {
    if (method) *method = TableCountMethod::Exact;
    return *exact;
  }
  if (method) *method = TableCountMethod::Approximate;
  return log_table_count_approx(rows, cols);
}

std::string to_string(TableCountMethod m) { return m == TableCountMethod::Exact ? "exact" : "effective-columns"; }

namespace {

RmiResult rmi_raw(const ContingencyTable& t) {
  RmiResult r;
  if (t.total == 0) return r;
  double lw = lfact(t.total);
  for (const auto& c : t.cells) lw += lfact(c.count);
  for (auto s : t.row_sums) lw -= lfact(s);
  for (auto s : t.col_sums) lw -= lfact(s);
  const double n = static_cast<double>(t.total);
  const double log_omega = log_table_count(t.row_sums, t.col_sums, &r.method);
  r.mutual_information = lw / n / kLn2;
  r.log2_table_count = log_omega / kLn2;
  r.value = (lw - log_omega) / n / kLn2;
  return r;
}

}  // namespace

RmiResult rmi(const Clustering& truth, const Clustering& est, bool normalized) {
  RmiResult r = rmi_raw(contingency(truth, est));
  if (!normalized) return r;
  const RmiResult self = rmi_raw(contingency(truth, truth));
  if (self.value <= 0.0) {
    r.value = truth == est ? 1.0 : 0.0;
  } else {
    r.value /= self.value;
  }
  if (self.method == TableCountMethod::Approximate) r.method = TableCountMethod::Approximate;
  return r;
}

}  // namespace wellconn
