#include "a1count/wdvv.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace a1c {

Int binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

PlaneClass drop_simple_points(const PlaneClass& c) {
  if (c.e < 1) throw std::invalid_argument("drop_simple_points: plane degree must be >= 1");
  std::vector<int> a;
  for (int x : c.a) {
    if (x < 0) throw std::invalid_argument("drop_simple_points: multiplicities must be >= 0");
    if (x >= 2) a.push_back(x);
  }
  return PlaneClass(c.e, std::move(a));
}

namespace {

RawClass unit_at(size_t slots, size_t i) {
  RawClass u{0, std::vector<int>(slots, 0)};
  u.a[i] = -1;
  return u;
}

bool is_unit_raw(const RawClass& c) {
  if (c.e != 0) return false;
  int minus = 0;
  for (int x : c.a) {
    if (x == -1)
      ++minus;
    else if (x != 0)
      return false;
  }
  return minus == 1;
}

Int side_count(const RawClass& side) {
  if (is_unit_raw(side)) return 1;
  return rational_curve_count(drop_simple_points(side.canonical()));
}

// memo value; unset marks the class signalled as unresolved
std::map<PlaneClass, std::optional<Int>>& memo() {
  static std::map<PlaneClass, std::optional<Int>> m;
  return m;
}
std::mutex memo_mutex;

Int dispatch(const PlaneClass& c);

Int compute(const PlaneClass& c) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(c);
    if (it != memo().end()) {
      if (!it->second) throw UnresolvedCount(c);
      return *it->second;
    }
  }
  std::optional<Int> value;
  try {
    value = dispatch(c);
  } catch (const UnresolvedCount&) {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo().emplace(c, std::nullopt);
    throw;
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo().emplace(c, value);
  return *value;
}

Int dispatch(const PlaneClass& c) {
  if (c.is_unit()) return 1;
  if (c.e <= 0) return 0;
  bool negative = std::any_of(c.a.begin(), c.a.end(), [](int x) { return x < 0; });
  if (negative || c.genus() < 0 || c.anticanonical() <= 0) return 0;
  if (c.genus() == 0 && c.anticanonical() == 1) return 1;
  if (c == PlaneClass(6, std::vector<int>(8, 2))) throw UnresolvedCount(c);
  if (c == PlaneClass(1, {})) return 1;  // the line; no valid decomposition exists

  long long n = c.anticanonical() - 1;
  if (n >= 3) {
    RawClass beta{c.e, c.a};
    RawClass h{1, std::vector<int>(c.a.size(), 0)};
    return wdvv_sum(beta, h, h);
  }

  // Too few point conditions for the four-point relation.  The count is
  // invariant under quadratic transformations with nonnegative image, and
  // one step strictly lowers the plane degree for every such class in range.
  RawClass raw{c.e, c.a};
  while (raw.a.size() < 3) raw.a.push_back(0);
  int top = raw.a[0] + raw.a[1] + raw.a[2];
  if (2 * raw.e - top < raw.e && raw.a[0] + raw.a[1] <= raw.e) {
    PlaneClass image = cremona(raw, 0, 1, 2).canonical();
    if (image.e >= 1 && std::all_of(image.a.begin(), image.a.end(), [](int x) { return x >= 0; }))
      return compute(drop_simple_points(image));
  }
  throw std::logic_error("rational_curve_count: class out of supported range: " + c.str());
}

}  // namespace

Int rational_curve_count(const PlaneClass& c) {
  if (!c.is_unit()) {
    for (int x : c.a)
      if (x == 1) throw std::invalid_argument("rational_curve_count: class not reduced: " + c.str());
  }
  return compute(c);
}

Int wdvv_sum(const RawClass& beta, const RawClass& A, const RawClass& B) {
  long long n = beta.anticanonical() - 1;
  if (n < 3) throw std::invalid_argument("wdvv_sum: needs at least three point conditions");
  size_t slots = beta.a.size();
  if (A.a.size() != slots || B.a.size() != slots)
    throw std::invalid_argument("wdvv_sum: divisor slot count mismatch");

  Int total = 0;
  auto term = [&](const RawClass& b1, const RawClass& b2) {
    long long n1 = b1.anticanonical() - 1;
    Int bracket = intersect(B, b2) * binom(n - 3, n1 - 1) - intersect(B, b1) * binom(n - 3, n1);
    if (bracket == 0) return;
    Int coeff = Int(intersect(b1, b2)) * intersect(A, b1);
    if (coeff == 0) return;
    Int n1v = side_count(b1);
    if (n1v == 0) return;
    Int n2v = side_count(b2);
    if (n2v == 0) return;
    total += n1v * n2v * coeff * bracket;
  };

  // interior decompositions: both sides of positive plane degree
  for (int e1 = 1; e1 <= beta.e - 1; ++e1) {
    RawClass b1{e1, std::vector<int>(slots, 0)};
    RawClass b2{beta.e - e1, beta.a};
    auto rec = [&](auto&& self, size_t idx) -> void {
      if (idx == slots) {
        term(b1, b2);
        return;
      }
      for (int v = 0; v <= beta.a[idx]; ++v) {
        b1.a[idx] = v;
        b2.a[idx] = beta.a[idx] - v;
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
  }
  // decompositions with an exceptional unit on one side; with A = B = H
  // every such term vanishes, but they belong to the sum
  for (size_t i = 0; i < slots; ++i) {
    RawClass u = unit_at(slots, i);
    RawClass rest{beta.e, beta.a};
    rest.a[i] += 1;
    term(u, rest);
    term(rest, u);
  }
  return total;
}

Int rational_curve_count_raw(const RawClass& beta) {
  RawClass h{1, std::vector<int>(beta.a.size(), 0)};
  return wdvv_sum(beta, h, h);
}

}  // namespace a1c
