#include "a1count/tables.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "a1count/wdvv.hpp"

namespace a1c {

namespace {

std::string ratio_str(const Ratio& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

std::string AffineCount::str() const {
  if (is_constant()) return ratio_str(c0);
  std::string s = ratio_str(c0);
  if (c1 >= 0)
    s += "+" + ratio_str(c1) + "x";
  else
    s += "-" + ratio_str(-c1) + "x";
  return s;
}

namespace {
Int parse_int(const std::string& s) {
  // cpp_int rejects a leading '+'
  if (!s.empty() && s[0] == '+') return Int(s.substr(1));
  return Int(s);
}
}  // namespace

AffineCount AffineCount::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("AffineCount::parse: empty value");
  size_t xpos = s.find('x');
  if (xpos == std::string::npos) return AffineCount(Ratio(parse_int(s)));
  if (xpos + 1 != s.size()) throw std::invalid_argument("AffineCount::parse: bad value '" + text + "'");
  std::string body = s.substr(0, xpos);
  // split "c0+c1" / "c0-c1" at the last sign not in front position
  size_t split = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string c0s, c1s;
  if (split == std::string::npos) {
    c0s = "0";
    c1s = body;
  } else {
    c0s = body.substr(0, split);
    c1s = body.substr(split);  // keeps the sign
    if (c1s == "+" || c1s == "-") c1s += "1";
  }
  if (c1s.empty() || c1s == "+") c1s = "1";
  if (c1s == "-") c1s = "-1";
  if (c0s.empty()) c0s = "0";
  return AffineCount(Ratio(parse_int(c0s)), Ratio(parse_int(c1s)));
}

std::string Relation::str() const {
  std::ostringstream os;
  os << left.str() << " =";
  if (right.empty()) os << " 0";
  for (size_t i = 0; i < right.size(); ++i) {
    if (i) os << " +";
    os << ' ' << right[i].first.str() << "*[" << right[i].second.str() << "]";
  }
  return os.str();
}

namespace {

int max_multiplicity(int e) { return std::max(1, e - 1); }

// all descending multiplicity multisets with entries in [1, maxv], sum <= cap
void gen_multisets(int maxv, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  int start = cur.empty() ? maxv : std::min(maxv, cur.back());
  int sum = 0;
  for (int x : cur) sum += x;
  for (int v = start; v >= 1; --v) {
    if (sum + v > cap) continue;
    cur.push_back(v);
    gen_multisets(maxv, cap, cur, out);
    cur.pop_back();
  }
}

std::vector<int> without_one(const std::vector<int>& a, int k) {
  std::vector<int> r = a;
  auto it = std::find(r.begin(), r.end(), k);
  r.erase(it);
  return r;
}

}  // namespace

void TableEngine::build_universe() {
  universe_.clear();
  for (int e = 1; e <= e_max_; ++e) {
    std::vector<std::vector<int>> msets;
    std::vector<int> cur;
    gen_multisets(max_multiplicity(e), 3 * e, cur, msets);
    for (const auto& a : msets) {
      int sum = 0;
      for (int x : a) sum += x;
      universe_.emplace_back(e, a, std::vector<int>{});
      for (int k = 1; k <= e + 1; ++k)
        if (sum + k <= 3 * e) universe_.emplace_back(e, a, std::vector<int>{k});
    }
  }
  std::sort(universe_.begin(), universe_.end());
}

void TableEngine::build_seeds() {
  seeds_.clear();
  const TangencyKey known_x(6, std::vector<int>(8, 2), {});  // with one simple point appended
  std::vector<const TangencyKey*> seed_keys;
  for (const auto& k : universe_) {
    if (!k.b.empty()) continue;
    if (log_degree(k) != 1) continue;
    seed_keys.push_back(&k);
  }
  std::vector<std::pair<TangencyKey, AffineCount>> results(seed_keys.size());
  std::atomic<size_t> next{0};
  std::mutex error_mutex;
  std::string error;
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= seed_keys.size()) return;
      const TangencyKey& k = *seed_keys[i];
      try {
        PlaneClass reduced = drop_simple_points(PlaneClass(k.e, k.a));
        AffineCount v;
        try {
          v = AffineCount::constant(rational_curve_count(reduced));
        } catch (const UnresolvedCount&) {
          if (reduced != PlaneClass(6, std::vector<int>(8, 2)))
            throw std::logic_error("seed out of scope, recursion cannot determine " + k.str());
          v = AffineCount::symbol_x();
        }
        results[i] = {k, v};
      } catch (const std::exception& ex) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (error.empty()) error = ex.what();
      }
    }
  };
  size_t nthreads = threads_ == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                  : static_cast<unsigned>(threads_);
  nthreads = std::min(nthreads, seed_keys.size());
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (!error.empty()) throw std::logic_error("seed evaluation failed: " + error);
  for (auto& [k, v] : results) seeds_.emplace(k, v);

  if (e_max_ >= 6) {
    // the double-point tangency value next to the unresolved class is known
    seeds_.emplace(TangencyKey(6, std::vector<int>(8, 2), {2}), AffineCount::constant(12));
  }
}

void TableEngine::build_relations() {
  relations_.clear();
  // right-hand tangency-1 references collapse through the trailing-one rule:
  // n(e;a';1) = n(e;a';) whenever 3e - sum a' >= 1, which always holds here
  auto tangency_term = [](int e, std::vector<int> rest, int k) {
    if (k == 1) return TangencyKey(e, std::move(rest), {});
    return TangencyKey(e, std::move(rest), {k});
  };
  for (const auto& key : universe_) {
    if (!key.b.empty()) continue;
    long long d = log_degree(key);
    if (d >= 1) {
      // the identification itself, as a relation of its own
      relations_.push_back(Relation{RelationKind::trailing_one, TangencyKey(key.e, key.a, {1}),
                                    {{Int(1), key}}});
    }
    if (key.a.empty()) continue;
    std::set<int> distinct(key.a.begin(), key.a.end());
    if (d == 0) {
      for (int k : distinct)
        relations_.push_back(Relation{RelationKind::degree_zero_conversion, key,
                                      {{Int(1), tangency_term(key.e, without_one(key.a, k), k)}}});
    } else if (d >= 1) {
      for (int k : distinct) {
        std::vector<int> rest = without_one(key.a, k);
        Int coeff = 1 + (d == 1 ? Int(k) : Int(0));
        relations_.push_back(Relation{RelationKind::point_merge, key,
                                      {{Int(1), tangency_term(key.e, rest, k)},
                                       {coeff, TangencyKey(key.e, rest, {k + 1})}}});
      }
    }
  }
}

void TableEngine::solve() {
  std::map<TangencyKey, AffineCount> assign;
  for (const auto& k : universe_)
    if (vanishes(k)) assign.emplace(k, AffineCount());
  for (const auto& [k, v] : seeds_) {
    auto it = assign.find(k);
    if (it != assign.end() && !(it->second == v))
      throw std::logic_error("seed conflicts with vanishing key " + k.str());
    assign[k] = v;
  }

  auto lookup = [&](const TangencyKey& k) -> const AffineCount* {
    auto it = assign.find(k);
    return it == assign.end() ? nullptr : &it->second;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& rel : relations_) {
      const AffineCount* lv = lookup(rel.left);
      const TangencyKey* missing = nullptr;
      const Int* missing_coeff = nullptr;
      AffineCount acc;
      bool two_missing = false;
      for (const auto& [coeff, k] : rel.right) {
        const AffineCount* v = lookup(k);
        if (v) {
          acc = acc + Ratio(coeff) * *v;
        } else if (missing) {
          two_missing = true;
          break;
        } else {
          missing = &k;
          missing_coeff = &coeff;
        }
      }
      if (two_missing) continue;
      if (!lv && !missing) {
        assign[rel.left] = acc;
        progress = true;
      } else if (lv && missing) {
        if (*missing_coeff == 0) continue;
        AffineCount v = Ratio(Int(1), *missing_coeff) * (*lv - acc);
        assign[*missing] = v;
        progress = true;
      }
    }
  }

  // residuals of fully resolved relations must vanish exactly
  for (const auto& rel : relations_) {
    const AffineCount* lv = lookup(rel.left);
    if (!lv) continue;
    AffineCount acc;
    bool complete = true;
    for (const auto& [coeff, k] : rel.right) {
      const AffineCount* v = lookup(k);
      if (!v) {
        complete = false;
        break;
      }
      acc = acc + Ratio(coeff) * *v;
    }
    if (complete && !(acc == *lv))
      throw std::logic_error("inconsistent relation: " + rel.str() + " (lhs " + lv->str() +
                             ", rhs " + acc.str() + ")");
  }

  for (const auto& [k, v] : assign)
    if (!v.is_integral())
      throw std::logic_error("non-integral resolved value for " + k.str() + ": " + v.str());

  unresolved_.clear();
  for (const auto& k : universe_)
    if (!assign.count(k)) unresolved_.push_back(k);
  solved_ = std::move(assign);
}

void TableEngine::build() {
  if (built_) return;
  build_universe();
  build_seeds();
  build_relations();
  solve();
  built_ = true;
}

std::optional<AffineCount> TableEngine::value(const TangencyKey& key) const {
  TangencyKey k = key;
  while (!k.b.empty() && k.b.back() == 1) {
    TangencyKey stripped = k;
    stripped.b.pop_back();
    if (log_degree(stripped) < 1) break;
    k = stripped;
  }
  if (vanishes(k)) return AffineCount();
  auto it = solved_.find(k);
  if (it == solved_.end()) return std::nullopt;
  return it->second;
}

std::vector<FixtureEntry> parse_fixtures(const std::string& text) {
  std::vector<FixtureEntry> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) throw std::invalid_argument("fixture line without tab: " + line);
    out.push_back(FixtureEntry{TangencyKey::parse(line.substr(0, tab)),
                               AffineCount::parse(line.substr(tab + 1))});
  }
  return out;
}

FixtureReport check_fixtures(const TableEngine& engine, const std::vector<FixtureEntry>& fixtures,
                             const std::optional<Int>& x) {
  FixtureReport rep;
  rep.total = fixtures.size();
  for (const auto& f : fixtures) {
    auto got = engine.value(f.key);
    if (!got) {
      ++rep.fixture_only;
      rep.fixture_only_keys.push_back(f.key.str());
      continue;
    }
    ++rep.checked;
    bool same = *got == f.expect;
    if (same && x) same = got->substitute(*x) == f.expect.substitute(*x);
    if (!same)
      rep.mismatches.push_back(f.key.str() + ": expected " + f.expect.str() + ", got " + got->str());
  }
  return rep;
}

}  // namespace a1c
