#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "a1count/lattice.hpp"
#include "a1count/rational.hpp"

namespace a1c {

// Element of (Q/Z)^2, the torsion part of the group of a smooth plane
// cubic with a flex as origin.  Coordinates are reduced fractions in [0,1).
struct TorsionPoint {
  Rat u, v;

  TorsionPoint() = default;
  TorsionPoint(Rat uu, Rat vv) : u(uu.mod1()), v(vv.mod1()) {}

  bool is_zero() const { return u.num == 0 && v.num == 0; }

  friend TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b) {
    return TorsionPoint(a.u + b.u, a.v + b.v);
  }
  friend TorsionPoint operator-(const TorsionPoint& a, const TorsionPoint& b) {
    return TorsionPoint(a.u - b.u, a.v - b.v);
  }
  TorsionPoint operator-() const { return TorsionPoint(-u, -v); }
  friend TorsionPoint operator*(long long k, const TorsionPoint& p) {
    return TorsionPoint(k * p.u, k * p.v);
  }
  friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(const TorsionPoint& a, const TorsionPoint& b) { return !(a == b); }
  friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) {
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  }

  std::string str() const { return "(" + u.str() + "," + v.str() + ")"; }
};

// Smallest n >= 1 with n*p = 0: the lcm of the two reduced denominators.
long long order(const TorsionPoint& p);

// The nine 3-torsion points split into the six base points of the
// blow-down (second coordinate 0 or 1/3) and the three remaining ones
// (second coordinate 2/3); o_z is the flex trivializing line sections.
struct SurfaceConfig {
  std::array<TorsionPoint, 6> p;
  std::array<TorsionPoint, 3> q;
  TorsionPoint o_z;

  static const SurfaceConfig& standard();
};

// Coset row of d*P: second coordinate in {0, 1/3} versus {2/3}.
enum class CosetRow { low, high };

std::string to_string(CosetRow row);

// One representative of exact order 3d per realizable coset row.  For
// d = 1 only the high row is realizable: every order-3 point of the low
// rows is itself one of the six base points.
std::map<CosetRow, TorsionPoint> base_points(int d, const SurfaceConfig& cfg = SurfaceConfig::standard());

// d(P - o_z) + sum a_i (p_i - o_z) = 0 in (Q/Z)^2.
bool contact_relation_holds(int d, const TorsionPoint& P, const std::array<int, 6>& a,
                            const SurfaceConfig& cfg = SurfaceConfig::standard());

// All points of exact order 3d.
std::vector<TorsionPoint> primitive_points(int d);

// For every candidate class of enumerate_candidate_classes(d), the number
// of ordered 6-tuples realizing its multiset and satisfying the contact
// relation.  P must have exact order 3d.
std::map<Multiset6, long long> ordered_counts(int d, const TorsionPoint& P,
                                              const SurfaceConfig& cfg = SurfaceConfig::standard());

// Ordered counts grouped by Cremona-minimal model and divided by 3
// (the deck transformation of the triple cover acts freely on the
// contributing classes).  Zero-weight models are dropped.
std::map<PlaneClass, long long> model_weights(int d, const TorsionPoint& P,
                                              const SurfaceConfig& cfg = SurfaceConfig::standard());

}  // namespace a1c
