#include "a1count/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace a1c {

PlaneClass::PlaneClass(int e_, std::vector<int> a_) : e(e_), a(std::move(a_)) {
  a.erase(std::remove(a.begin(), a.end(), 0), a.end());
  std::sort(a.begin(), a.end(), std::greater<int>());
}

PlaneClass PlaneClass::unit() {
  PlaneClass u;
  u.e = 0;
  u.a = {-1};
  return u;
}

long long PlaneClass::mult_sum() const {
  long long s = 0;
  for (int x : a) s += x;
  return s;
}

long long PlaneClass::anticanonical() const { return 3LL * e - mult_sum(); }

long long PlaneClass::self_intersection() const {
  long long s = 1LL * e * e;
  for (int x : a) s -= 1LL * x * x;
  return s;
}

long long PlaneClass::genus() const {
  long long g = 1LL * (e - 1) * (e - 2) / 2;
  for (int x : a) g -= 1LL * x * (x - 1) / 2;
  return g;
}

std::string PlaneClass::str() const {
  std::ostringstream os;
  os << e << ';';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  return os.str();
}

long long intersect(const PlaneClass& x, const PlaneClass& y) {
  long long s = 1LL * x.e * y.e;
  size_t n = std::min(x.a.size(), y.a.size());
  for (size_t i = 0; i < n; ++i) s -= 1LL * x.a[i] * y.a[i];
  return s;
}

long long RawClass::mult_sum() const {
  long long s = 0;
  for (int x : a) s += x;
  return s;
}

long long RawClass::anticanonical() const { return 3LL * e - mult_sum(); }

PlaneClass RawClass::canonical() const { return PlaneClass(e, a); }

long long intersect(const RawClass& x, const RawClass& y) {
  long long s = 1LL * x.e * y.e;
  size_t n = std::min(x.a.size(), y.a.size());
  for (size_t i = 0; i < n; ++i) s -= 1LL * x.a[i] * y.a[i];
  return s;
}

// total on the slotted form: an isometry of the class lattice
RawClass cremona(const RawClass& c, int i, int j, int k) {
  if (i == j || j == k || i == k) throw std::invalid_argument("cremona: slots must be distinct");
  RawClass r = c;
  size_t need = static_cast<size_t>(std::max({i, j, k})) + 1;
  if (r.a.size() < need) r.a.resize(need, 0);
  int ai = r.a[i], aj = r.a[j], ak = r.a[k];
  r.e = 2 * c.e - ai - aj - ak;
  r.a[i] = c.e - aj - ak;
  r.a[j] = c.e - ai - ak;
  r.a[k] = c.e - ai - aj;
  return r;
}

PlaneClass cremona(const PlaneClass& c, int i, int j, int k) {
  if (c.e < 1) throw std::invalid_argument("cremona: plane degree must be >= 1");
  RawClass raw{c.e, c.a};
  return cremona(raw, i, j, k).canonical();
}

PlaneClass minimize(PlaneClass c) {
  if (c.is_unit()) return c;
  if (c.e < 1) throw std::invalid_argument("minimize: plane degree must be >= 1");
  for (int x : c.a)
    if (x < 0) throw std::invalid_argument("minimize: multiplicities must be >= 0");
  for (;;) {
    RawClass raw{c.e, c.a};
    while (raw.a.size() < 3) raw.a.push_back(0);
    // canonical form is sorted descending, so slots 0,1,2 hold the largest
    int s = raw.a[0] + raw.a[1] + raw.a[2];
    if (2 * raw.e - s >= raw.e) return c;  // no strict decrease
    PlaneClass image = cremona(raw, 0, 1, 2).canonical();
    if (image.is_unit()) return image;
    // a curve class never leaves the curve range here; stop if fed junk
    if (image.e < 1 || (!image.a.empty() && image.a.back() < 0)) return c;
    c = image;
  }
}

std::vector<RawClass> twenty_seven_lines() {
  std::vector<RawClass> lines;
  for (int i = 0; i < 6; ++i) {
    RawClass u{0, std::vector<int>(6, 0)};
    u.a[i] = -1;
    lines.push_back(u);
  }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      RawClass l{1, std::vector<int>(6, 0)};
      l.a[i] = l.a[j] = 1;
      lines.push_back(l);
    }
  for (int skip = 0; skip < 6; ++skip) {
    RawClass l{2, std::vector<int>(6, 1)};
    l.a[skip] = 0;
    lines.push_back(l);
  }
  return lines;
}

namespace {

bool admissible(const Multiset6& m, int d, int e) {
  // genus
  long long g = 1LL * (e - 1) * (e - 2) / 2;
  for (int x : m) g -= 1LL * x * (x - 1) / 2;
  if (g < 0) return false;
  if (d == 1) {
    // the degree-1 candidates are the (-1)-classes themselves
    long long self = 1LL * e * e;
    for (int x : m) self -= 1LL * x * x;
    return g == 0 && self == -1;
  }
  // nonnegative against H - E_i - E_j (m sorted descending)
  if (m[0] + m[1] > e) return false;
  // nonnegative against 2H - (five E_i)
  long long five = 0;
  for (int i = 0; i < 5; ++i) five += m[i];
  return five <= 2LL * e;
}

}  // namespace

std::vector<Multiset6> enumerate_candidate_classes(int d) {
  if (d < 1) throw std::invalid_argument("enumerate_candidate_classes: d must be >= 1");
  std::set<Multiset6> out;
  Multiset6 m{};
  // iterate non-increasing 6-tuples with entries in [0, d]
  auto rec = [&](auto&& self, int idx, int maxv) -> void {
    if (idx == 6) {
      int sum = 0;
      for (int x : m) sum += x;
      if ((d + sum) % 3 != 0) return;
      int e = (d + sum) / 3;
      if (e < 1) return;
      if (admissible(m, d, e)) out.insert(m);
      return;
    }
    for (int v = 0; v <= maxv; ++v) {
      m[idx] = v;
      self(self, idx + 1, v);
    }
    m[idx] = 0;
  };
  rec(rec, 0, d);
  std::vector<Multiset6> res(out.begin(), out.end());
  return res;
}

PlaneClass class_of(const Multiset6& m, int d) {
  int sum = 0;
  for (int x : m) sum += x;
  if ((d + sum) % 3 != 0) throw std::invalid_argument("class_of: degree mismatch");
  return PlaneClass((d + sum) / 3, std::vector<int>(m.begin(), m.end()));
}

TangencyKey::TangencyKey(int e_, std::vector<int> a_, std::vector<int> b_)
    : e(e_), a(std::move(a_)), b(std::move(b_)) {
  std::sort(a.begin(), a.end(), std::greater<int>());
  while (!a.empty() && a.back() == 0) a.pop_back();
  for (int x : a)
    if (x < 1) throw std::invalid_argument("TangencyKey: multiplicities must be >= 1");
  for (int x : b)
    if (x < 1) throw std::invalid_argument("TangencyKey: tangency orders must be >= 1");
}

std::string TangencyKey::str() const {
  std::ostringstream os;
  os << e << ';';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ';';
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) os << ',';
    os << b[i];
  }
  return os.str();
}

TangencyKey TangencyKey::parse(const std::string& s) {
  auto split = [](const std::string& t, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : t) {
      if (c == sep) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto parts = split(s, ';');
  if (parts.size() != 3) throw std::invalid_argument("TangencyKey::parse: expected e;a;b in '" + s + "'");
  auto ints = [&split](const std::string& t) {
    std::vector<int> v;
    if (t.empty()) return v;
    for (auto& piece : split(t, ',')) v.push_back(std::stoi(piece));
    return v;
  };
  return TangencyKey(std::stoi(parts[0]), ints(parts[1]), ints(parts[2]));
}

long long log_degree(const TangencyKey& k) {
  long long s = 3LL * k.e;
  for (int x : k.a) s -= x;
  for (int x : k.b) s -= x;
  return s;
}

long long genus(const TangencyKey& k) {
  long long g = 1LL * (k.e - 1) * (k.e - 2) / 2;
  for (int x : k.a) g -= 1LL * x * (x - 1) / 2;
  for (int x : k.b) g -= 1LL * x * (x - 1) / 2;
  return g;
}

bool vanishes(const TangencyKey& k) { return log_degree(k) < 0 || genus(k) < 0; }

}  // namespace a1c
