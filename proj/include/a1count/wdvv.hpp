#pragma once

#include <stdexcept>

#include "a1count/lattice.hpp"
#include "a1count/numbers.hpp"

namespace a1c {

// Raised for the one in-range class (6;2^8) whose rational-curve count the
// associativity recursion cannot determine; the pipeline resolves it from
// the torsion route instead.
struct UnresolvedCount : std::runtime_error {
  PlaneClass cls;
  explicit UnresolvedCount(const PlaneClass& c)
      : std::runtime_error("rational-curve count not determined by recursion: " + c.str()), cls(c) {}
};

// Simple points at general position are plain point conditions:
// N(e;(a,1)) = N(e;(a)).  Drops every 0 and 1 entry.
PlaneClass drop_simple_points(const PlaneClass& c);

// Number of rational curves in the class on a blow-up of the plane at
// general points, via the recursion coming from associativity of the
// quantum product.  Expects a canonical class with no entries equal to 1;
// memoized; thread-safe.
Int rational_curve_count(const PlaneClass& c);

// Sum over ordered decompositions beta1 + beta2 = beta of
//   N1 N2 (beta1.beta2) (A.beta1) [ (B.beta2) C(n-3, n1-1) - (B.beta1) C(n-3, n1) ]
// with n = -K.beta - 1 >= 3 and C(n,k) = 0 outside 0 <= k <= n.
// Equals (A.B) * N_beta; with A = B = H this is the recursion itself.
Int wdvv_sum(const RawClass& beta, const RawClass& A, const RawClass& B);

// Evaluates the recursion on the slotted class as given, without dropping
// 0/1 entries first (sub-calls still reduce).  Test hook.
Int rational_curve_count_raw(const RawClass& beta);

// Binomial coefficient, 0 outside 0 <= k <= n.
Int binom(long long n, long long k);

}  // namespace a1c
