#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "a1count/lattice.hpp"
#include "a1count/numbers.hpp"

namespace a1c {

// Exact value affine in the one unresolved count x: c0 + c1*x.
// Coefficients are rationals during elimination; resolved table entries
// are required to be integral.
struct AffineCount {
  Ratio c0 = 0;
  Ratio c1 = 0;

  AffineCount() = default;
  AffineCount(Ratio a, Ratio b = Ratio(0)) : c0(std::move(a)), c1(std::move(b)) {}
  static AffineCount constant(const Int& v) { return AffineCount(Ratio(v)); }
  static AffineCount symbol_x() { return AffineCount(Ratio(0), Ratio(1)); }

  bool is_constant() const { return c1 == 0; }
  bool is_integral() const { return is_integer(c0) && is_integer(c1); }
  Ratio substitute(const Int& x) const { return c0 + c1 * Ratio(x); }

  friend AffineCount operator+(const AffineCount& a, const AffineCount& b) {
    return AffineCount(a.c0 + b.c0, a.c1 + b.c1);
  }
  friend AffineCount operator-(const AffineCount& a, const AffineCount& b) {
    return AffineCount(a.c0 - b.c0, a.c1 - b.c1);
  }
  friend AffineCount operator*(const Ratio& k, const AffineCount& a) {
    return AffineCount(k * a.c0, k * a.c1);
  }
  friend bool operator==(const AffineCount& a, const AffineCount& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
  friend bool operator!=(const AffineCount& a, const AffineCount& b) { return !(a == b); }

  std::string str() const;                       // "948", "-6342+81x", "0+1x"
  static AffineCount parse(const std::string&);  // inverse of str, plus bare integers
};

enum class RelationKind { trailing_one, degree_zero_conversion, point_merge };

// left = sum coeff * right, with every key's value read as 0 when the key
// vanishes (negative log degree or genus).
struct Relation {
  RelationKind kind;
  TangencyKey left;
  std::vector<std::pair<Int, TangencyKey>> right;

  std::string str() const;
};

// Builds and solves the linear relation system for every contact count
// n(e;(a_i);(b_j)) with e <= e_max and a single tangency order.
class TableEngine {
 public:
  explicit TableEngine(int e_max = 6) : e_max_(e_max) {}

  void set_threads(int n) { threads_ = n; }  // 0 = hardware concurrency
  void build();

  int e_max() const { return e_max_; }
  const std::map<TangencyKey, AffineCount>& seed_values() const { return seeds_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::map<TangencyKey, AffineCount>& solved() const { return solved_; }
  const std::vector<TangencyKey>& unresolved_keys() const { return unresolved_; }
  size_t universe_size() const { return universe_.size(); }

  // Normalized lookup: strips trailing tangency 1s where the identification
  // applies, answers 0 for vanishing keys, nullopt for keys the relation
  // system does not reach (the fixture-only ones).
  std::optional<AffineCount> value(const TangencyKey& k) const;

 private:
  void build_universe();
  void build_seeds();
  void build_relations();
  void solve();

  int e_max_;
  int threads_ = 1;
  std::vector<TangencyKey> universe_;
  std::map<TangencyKey, AffineCount> seeds_;
  std::vector<Relation> relations_;
  std::map<TangencyKey, AffineCount> solved_;
  std::vector<TangencyKey> unresolved_;
  bool built_ = false;
};

struct FixtureEntry {
  TangencyKey key;
  AffineCount expect;
};

// One entry per line: "e;a1,a2,...;b1,...<TAB>value"; '#' lines ignored.
std::vector<FixtureEntry> parse_fixtures(const std::string& text);

// Every printed table entry, as shipped with the binary.
const std::string& embedded_fixtures();

struct FixtureReport {
  size_t total = 0;
  size_t checked = 0;
  size_t fixture_only = 0;
  std::vector<std::string> mismatches;
  std::vector<std::string> fixture_only_keys;
  bool ok() const { return mismatches.empty(); }
};

// Compares each fixture against the solved table, exactly as AffineCount
// and, when x is supplied, as substituted integers.  Keys the system does
// not reach (tangency sequences of length >= 2) are recorded, not compared.
FixtureReport check_fixtures(const TableEngine& engine, const std::vector<FixtureEntry>& fixtures,
                             const std::optional<Int>& x = std::nullopt);

}  // namespace a1c
