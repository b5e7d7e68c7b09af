#pragma once

#include <array>
#include <string>
#include <vector>

namespace a1c {

// Divisor class e*H - sum a_i E_i on a blow-up of the plane, kept in
// canonical form: multiplicities sorted descending with zeros dropped.
// The exceptional unit E_i is encoded as e = 0 with a single -1 entry.
struct PlaneClass {
  int e = 0;
  std::vector<int> a;

  PlaneClass() = default;
  PlaneClass(int e_, std::vector<int> a_);

  static PlaneClass unit();
  bool is_unit() const { return e == 0 && a.size() == 1 && a[0] == -1; }
  bool is_zero() const { return e == 0 && a.empty(); }

  long long mult_sum() const;
  long long anticanonical() const;     // 3e - sum a_i
  long long self_intersection() const; // e^2 - sum a_i^2
  long long genus() const;             // (e-1)(e-2)/2 - sum a_i(a_i-1)/2

  friend bool operator==(const PlaneClass& x, const PlaneClass& y) { return x.e == y.e && x.a == y.a; }
  friend bool operator!=(const PlaneClass& x, const PlaneClass& y) { return !(x == y); }
  friend bool operator<(const PlaneClass& x, const PlaneClass& y) {
    if (x.e != y.e) return x.e < y.e;
    return x.a < y.a;
  }

  std::string str() const;  // "e;a1,a2,..."
};

// Intersection form (e;a).(e';a') = e e' - sum a_i a'_i, padding with zeros.
long long intersect(const PlaneClass& x, const PlaneClass& y);

// Slot-faithful form used where slot positions matter (quadratic
// transformations, summand enumeration in the curve-count recursion).
struct RawClass {
  int e = 0;
  std::vector<int> a;

  long long mult_sum() const;
  long long anticanonical() const;
  PlaneClass canonical() const;
};

long long intersect(const RawClass& x, const RawClass& y);

// Quadratic transformation centered at slots i, j, k:
// e' = 2e - ai - aj - ak, ai' = e - aj - ak and cyclically; other slots
// unchanged.  Involutive on the slotted form.
RawClass cremona(const RawClass& c, int i, int j, int k);
PlaneClass cremona(const PlaneClass& c, int i, int j, int k);

// Repeated quadratic transformation on the three largest multiplicities
// while the plane degree strictly decreases.
PlaneClass minimize(PlaneClass c);

// Candidate classes for degree-d contact curves on the covering cubic
// surface: 6-slot multiplicity vectors with 0 <= a_i <= d, 3e = d + sum,
// genus >= 0, and nonnegative intersection with each of the 27 lines
// (a_i + a_j <= e pairwise, any five a_i sum to <= 2e).  For d = 1 the
// candidates are exactly the (-1)-classes, which meet themselves in -1.
using Multiset6 = std::array<int, 6>;  // sorted descending
std::vector<Multiset6> enumerate_candidate_classes(int d);

PlaneClass class_of(const Multiset6& m, int d);

// The 27 lines E_i, H - E_i - E_j, 2H - (five E_i), slot-faithful on 6 slots.
std::vector<RawClass> twenty_seven_lines();

// Index (e; multiplicity multiset; tangency order sequence) of a contact
// count.  Multiplicities are sorted descending; the tangency sequence is
// order-sensitive.
struct TangencyKey {
  int e = 0;
  std::vector<int> a;  // sorted descending, entries >= 1
  std::vector<int> b;  // entries >= 1

  TangencyKey() = default;
  TangencyKey(int e_, std::vector<int> a_, std::vector<int> b_);

  friend bool operator==(const TangencyKey& x, const TangencyKey& y) {
    return x.e == y.e && x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const TangencyKey& x, const TangencyKey& y) {
    if (x.e != y.e) return x.e < y.e;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }

  std::string str() const;  // "e;a1,a2,...;b1,b2,..."
  static TangencyKey parse(const std::string& s);
};

long long log_degree(const TangencyKey& k);  // 3e - sum a - sum b
long long genus(const TangencyKey& k);       // b entries counted like multiplicities

// A key counts zero curves when its log degree or genus is negative.
bool vanishes(const TangencyKey& k);

}  // namespace a1c
