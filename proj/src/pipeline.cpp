#include "a1count/pipeline.hpp"

#include <stdexcept>

namespace a1c {

Pipeline::Pipeline(int threads) : tables_(6) { tables_.set_threads(threads); }

AffineCount Pipeline::model_value(const TableEngine& tables, const PlaneClass& model) {
  // a (-1)-class carries a unique rational curve; the exceptional unit is
  // the one Cremona-minimal model that falls outside the table keys
  if (model.is_unit()) return AffineCount::constant(1);
  if (model.e < 1 || model.e > tables.e_max())
    throw std::logic_error("model out of table range: " + model.str());
  auto v = tables.value(TangencyKey(model.e, model.a, {}));
  if (!v) throw std::logic_error("model value not resolved: " + model.str());
  return *v;
}

Int Pipeline::torsion_route(int d, DegreeDetail& det, bool substitute_x) const {
  det.d = d;
  auto reps = base_points(d);
  det.rep = reps.count(CosetRow::low) ? reps.at(CosetRow::low) : reps.at(CosetRow::high);
  det.weights = model_weights(d, det.rep);
  AffineCount total;
  for (const auto& [model, w] : det.weights) {
    AffineCount v = model_value(tables_, model);
    det.model_values[model] = v;
    total = total + Ratio(w) * v;
  }
  if (!total.is_constant()) {
    if (!substitute_x)
      throw std::logic_error("torsion route for d=" + std::to_string(d) +
                             " depends on x before resolution");
    return to_int(total.substitute(x_));
  }
  return to_int(total.c0);
}

void Pipeline::run() {
  if (ran_) return;
  tables_.build();

  // torsion route for d <= 6 needs no x
  for (int d = 1; d <= 6; ++d) {
    DegreeDetail det;
    Int torsion = torsion_route(d, det, false);
    det.torsion_total = torsion;
    det.engine_value = tables_.value(TangencyKey(d, {}, {}));
    if (!det.engine_value)
      throw std::logic_error("engine value n(" + std::to_string(d) + ";;) not resolved");
    details_[d] = det;
  }

  // resolve x by equating the symbolic n(6;;) with the torsion value
  const AffineCount& six = *details_[6].engine_value;
  if (six.c1 == 0) throw std::logic_error("n(6;;) does not involve x; cannot resolve it");
  Ratio xr = (Ratio(details_[6].torsion_total) - six.c0) / six.c1;
  if (!is_integer(xr)) throw std::logic_error("x resolves to a non-integer: " + xr.str());
  x_ = numerator(xr);

  // engine/torsion agreement for every d <= 6, after substitution
  for (int d = 1; d <= 6; ++d) {
    DegreeDetail& det = details_[d];
    Int engine = to_int(det.engine_value->substitute(x_));
    if (engine != det.torsion_total)
      throw std::logic_error("route disagreement for d=" + std::to_string(d) + ": engine " +
                             engine.str() + ", torsion " + det.torsion_total.str());
    counts_[d] = det.torsion_total;
  }

  // d = 7 by the torsion route alone (one model value is affine in x)
  {
    DegreeDetail det;
    det.torsion_total = torsion_route(7, det, true);
    details_[7] = det;
    counts_[7] = det.torsion_total;
  }
  ran_ = true;
}

const Int& Pipeline::count(int d) const {
  auto it = counts_.find(d);
  if (it == counts_.end()) throw std::invalid_argument("count: d must be in 1..7 (after run)");
  return it->second;
}

const Pipeline::DegreeDetail& Pipeline::detail(int d) const {
  auto it = details_.find(d);
  if (it == details_.end()) throw std::invalid_argument("detail: d must be in 1..7 (after run)");
  return it->second;
}

Int Pipeline::value_at_x(const TangencyKey& k) const {
  auto v = tables_.value(k);
  if (!v) throw std::invalid_argument("value_at_x: key not resolved: " + k.str());
  return to_int(v->substitute(x_));
}

std::map<std::string, Int> Pipeline::quartic_breakdown() const {
  auto fixture_value = [&](const TangencyKey& key) {
    for (const auto& f : parse_fixtures(embedded_fixtures()))
      if (f.key == key) return to_int(f.expect.c0);
    throw std::logic_error("fixture value missing for " + key.str());
  };
  std::map<std::string, Int> out;
  out["smooth"] = value_at_x(TangencyKey(4, {}, {}));
  out["nodal"] = value_at_x(TangencyKey(4, {}, {2}));
  out["tacnodal"] = fixture_value(TangencyKey(4, {}, {2, 2}));
  out["triple contact"] = fixture_value(TangencyKey(4, {}, {2, 2, 2}));
  out["triple point"] = value_at_x(TangencyKey(4, {}, {3}));
  return out;
}

FixtureReport Pipeline::verify(const std::vector<FixtureEntry>& fixtures) const {
  return check_fixtures(tables_, fixtures, ran_ ? std::optional<Int>(x_) : std::nullopt);
}

FixtureReport Pipeline::verify_embedded() const { return verify(parse_fixtures(embedded_fixtures())); }

}  // namespace a1c
