#include "a1count/torsion.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace a1c {

long long order(const TorsionPoint& p) { return std::lcm(p.u.den, p.v.den); }

const SurfaceConfig& SurfaceConfig::standard() {
  static const SurfaceConfig cfg = [] {
    SurfaceConfig c;
    int idx = 0;
    for (int v = 0; v <= 1; ++v)
      for (int u = 0; u <= 2; ++u) c.p[idx++] = TorsionPoint(Rat(u, 3), Rat(v, 3));
    for (int u = 0; u <= 2; ++u) c.q[u] = TorsionPoint(Rat(u, 3), Rat(2, 3));
    c.o_z = TorsionPoint(Rat(1, 9), Rat(0));
    return c;
  }();
  return cfg;
}

std::string to_string(CosetRow row) { return row == CosetRow::low ? "0|1/3" : "2/3"; }

std::map<CosetRow, TorsionPoint> base_points(int d, const SurfaceConfig& cfg) {
  if (d < 1) throw std::invalid_argument("base_points: d must be >= 1");
  std::map<CosetRow, TorsionPoint> reps;
  TorsionPoint high(Rat(1, 3 * d), Rat(2, 3 * d));
  if (order(high) != 3LL * d) throw std::logic_error("base_points: bad high representative");
  reps[CosetRow::high] = high;
  if (d >= 2) {
    TorsionPoint low(Rat(1, 3 * d), Rat(0));
    if (order(low) != 3LL * d) throw std::logic_error("base_points: bad low representative");
    reps[CosetRow::low] = low;
  }
  // for d = 1 every order-3 point with second coordinate 0 or 1/3 is one of
  // the six base points of cfg, so the low row carries no admissible P
  (void)cfg;
  return reps;
}

bool contact_relation_holds(int d, const TorsionPoint& P, const std::array<int, 6>& a,
                            const SurfaceConfig& cfg) {
  TorsionPoint s = static_cast<long long>(d) * (P - cfg.o_z);
  for (int i = 0; i < 6; ++i) s = s + static_cast<long long>(a[i]) * (cfg.p[i] - cfg.o_z);
  return s.is_zero();
}

std::vector<TorsionPoint> primitive_points(int d) {
  std::vector<TorsionPoint> pts;
  int n = 3 * d;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      TorsionPoint p(Rat(i, n), Rat(j, n));
      if (order(p) == n) pts.push_back(p);
    }
  return pts;
}

namespace {

// Counts of ordered tuples per (multiset, value of sum a_i p_i), computed
// once per degree; the contact relation then reads sum = 3e*o_z - d*P.
struct Census {
  std::map<Multiset6, std::map<TorsionPoint, long long>> by_sum;
};

const Census& census(int d, const SurfaceConfig& cfg) {
  // keyed by degree and configuration so alternative normalizations
  // do not collide; guarded for concurrent callers
  static std::map<std::string, Census> cache;
  static std::mutex cache_mutex;
  std::string key = std::to_string(d) + "|" + cfg.o_z.str();
  for (const auto& p : cfg.p) key += p.str();
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Census c;
  std::set<Multiset6> candidates;
  for (const auto& m : enumerate_candidate_classes(d)) candidates.insert(m);

  std::array<int, 6> a{};
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == 6) {
      Multiset6 m;
      std::copy(a.begin(), a.end(), m.begin());
      std::sort(m.begin(), m.end(), std::greater<int>());
      if (!candidates.count(m)) return;
      TorsionPoint s;
      for (int i = 0; i < 6; ++i) s = s + static_cast<long long>(a[i]) * cfg.p[i];
      ++c.by_sum[m][s];
      return;
    }
    for (int v = 0; v <= d; ++v) {
      a[idx] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return cache.emplace(key, std::move(c)).first->second;
}

}  // namespace

std::map<Multiset6, long long> ordered_counts(int d, const TorsionPoint& P, const SurfaceConfig& cfg) {
  if (order(P) != 3LL * d) throw std::invalid_argument("ordered_counts: P must have exact order 3d");
  const Census& c = census(d, cfg);
  std::map<Multiset6, long long> out;
  for (const auto& [m, sums] : c.by_sum) {
    int sum = 0;
    for (int x : m) sum += x;
    long long e = (d + sum) / 3;
    TorsionPoint target = (3 * e) * cfg.o_z - static_cast<long long>(d) * P;
    auto it = sums.find(target);
    out[m] = it == sums.end() ? 0 : it->second;
  }
  return out;
}

std::map<PlaneClass, long long> model_weights(int d, const TorsionPoint& P, const SurfaceConfig& cfg) {
  std::map<PlaneClass, long long> totals;
  for (const auto& [m, count] : ordered_counts(d, P, cfg)) {
    if (count == 0) continue;
    totals[minimize(class_of(m, d))] += count;
  }
  std::map<PlaneClass, long long> weights;
  for (const auto& [model, total] : totals) {
    if (total % 3 != 0)
      throw std::logic_error("model_weights: total for model " + model.str() + " is " +
                             std::to_string(total) + ", not divisible by 3");
    weights[model] = total / 3;
  }
  return weights;
}

}  // namespace a1c
