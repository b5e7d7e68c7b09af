#pragma once

#include <map>
#include <optional>
#include <string>

#include "a1count/tables.hpp"
#include "a1count/torsion.hpp"

namespace a1c {

// Orchestrates the two counting routes: the torsion route on the covering
// cubic surface (weights times model counts) and the relation-table route,
// resolves the one unknown count, and cross-checks everything.
class Pipeline {
 public:
  struct DegreeDetail {
    int d = 0;
    TorsionPoint rep;                                // representative contact point used
    std::map<PlaneClass, long long> weights;         // Cremona-minimal model -> weight
    std::map<PlaneClass, AffineCount> model_values;  // model -> table value (symbolic)
    Int torsion_total = 0;                           // weights . values, after substitution
    std::optional<AffineCount> engine_value;         // n(d;;) from the relation table
  };

  explicit Pipeline(int threads = 1);

  void run();

  const TableEngine& tables() const { return tables_; }
  bool ran() const { return ran_; }
  const Int& x() const { return x_; }                    // the resolved unknown count
  const Int& count(int d) const;                         // n_d, d in 1..7
  const DegreeDetail& detail(int d) const;
  std::map<std::string, Int> quartic_breakdown() const;  // singularity type -> count
  FixtureReport verify(const std::vector<FixtureEntry>& fixtures) const;
  FixtureReport verify_embedded() const;

  // Table value with x substituted (errors if the key is out of reach).
  Int value_at_x(const TangencyKey& k) const;

  static AffineCount model_value(const TableEngine& tables, const PlaneClass& model);

 private:
  Int torsion_route(int d, DegreeDetail& det, bool substitute_x) const;

  TableEngine tables_;
  std::map<int, DegreeDetail> details_;
  std::map<int, Int> counts_;
  Int x_ = 0;
  bool ran_ = false;
};

}  // namespace a1c
