#include "fairdiv/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "fairdiv/errors.hpp"
#include "fairdiv/predicates.hpp"
#include "fairdiv/preference.hpp"

namespace fairdiv {

namespace {

// Odometer enumeration over per-item agent choices with incremental bundle
// sums. V is the scaled integer value type: int64 when everything fits,
// arbitrary precision otherwise.
template <typename V>
struct Enumerator {
  int n, m, split;
  const std::vector<V>& v1;
  const std::vector<V>& v2;

  std::vector<int> agent_of;
  std::vector<V> sum1, sum2;  // per-bundle totals under each row
  std::vector<int> bundle_size;
  V welfare{};

  Enumerator(int n_, int m_, int split_, const std::vector<V>& v1_, const std::vector<V>& v2_)
      : n(n_), m(m_), split(split_), v1(v1_), v2(v2_),
        agent_of(m_, 0), sum1(n_, V{}), sum2(n_, V{}), bundle_size(n_, 0) {
    for (int g = 0; g < m; ++g) place(g, 0);
  }

  void place(int g, int agent) {
    sum1[agent] += v1[g];
    sum2[agent] += v2[g];
    bundle_size[agent] += 1;
    welfare += agent < split ? v1[g] : v2[g];
  }

  void remove(int g, int agent) {
    sum1[agent] -= v1[g];
    sum2[agent] -= v2[g];
    bundle_size[agent] -= 1;
    welfare -= agent < split ? v1[g] : v2[g];
  }

  bool advance() {
    for (int g = 0; g < m; ++g) {
      const int from = agent_of[g];
      remove(g, from);
      if (from + 1 < n) {
        agent_of[g] = from + 1;
        place(g, from + 1);
        return true;
      }
      agent_of[g] = 0;
      place(g, 0);
    }
    return false;
  }

  bool ef1() const {
    for (int i = 0; i < n; ++i) {
      const auto& viewer = i < split ? v1 : v2;
      const auto& viewer_sum = i < split ? sum1 : sum2;
      for (int k = 0; k < n; ++k) {
        if (k == i || bundle_size[k] == 0) continue;
        if (viewer_sum[i] >= viewer_sum[k]) continue;
        V best{};
        for (int g = 0; g < m; ++g) {
          if (agent_of[g] == k && viewer[g] > best) best = viewer[g];
        }
        if (viewer_sum[i] < viewer_sum[k] - best) return false;
      }
    }
    return true;
  }
};

template <typename V>
OracleReport enumerate_all(const Instance& inst, const std::vector<V>& v1,
                           const std::vector<V>& v2, const BigInt& scale) {
  Enumerator<V> e(inst.n, inst.item_count(), inst.type_split, v1, v2);

  bool have_best = false;
  V best_welfare{};
  std::vector<int> best_assignment;
  long long ef1_count = 0;

  while (true) {
    if (e.ef1()) {
      ++ef1_count;
      if (!have_best || e.welfare > best_welfare) {
        have_best = true;
        best_welfare = e.welfare;
        best_assignment = e.agent_of;
      }
    }
    if (!e.advance()) break;
  }
  if (!have_best) throw std::logic_error("oracle: no EF1 allocation found");

  OracleReport report;
  report.ef1_count = ef1_count;
  report.opt_ef1 = Rational(BigInt(best_welfare), scale);
  report.best_alloc = Allocation::empty(inst.n);
  for (int g = 0; g < inst.item_count(); ++g) {
    report.best_alloc.bundles[best_assignment[g]].insert(g);
  }
  for (int g = 0; g < inst.item_count(); ++g) {
    report.unconstrained_max += std::max(inst.u_first[g], inst.u_second[g]);
  }
  return report;
}

}  // namespace

OracleReport brute_force_opt_ef1(const Instance& inst) {
  validate_instance(inst);
  const int m = inst.item_count();
  BigInt assignments = 1;
  for (int g = 0; g < m; ++g) {
    assignments *= inst.n;
    if (assignments > 10'000'000)
      throw SizeGuardError("oracle: n^m exceeds the 10^7 enumeration budget");
  }

  BigInt scale = 1;
  for (int g = 0; g < m; ++g) {
    scale = boost::multiprecision::lcm(scale, denominator(inst.u_first[g]));
    scale = boost::multiprecision::lcm(scale, denominator(inst.u_second[g]));
  }
  std::vector<BigInt> w1(m), w2(m);
  BigInt ceiling = 0;
  for (int g = 0; g < m; ++g) {
    w1[g] = numerator(inst.u_first[g]) * (scale / denominator(inst.u_first[g]));
    w2[g] = numerator(inst.u_second[g]) * (scale / denominator(inst.u_second[g]));
    ceiling += std::max(w1[g], w2[g]);
  }

  if (ceiling < BigInt(1) << 62) {
    std::vector<long long> v1(m), v2(m);
    for (int g = 0; g < m; ++g) {
      v1[g] = w1[g].convert_to<long long>();
      v2[g] = w2[g].convert_to<long long>();
    }
    return enumerate_all<long long>(inst, v1, v2, scale);
  }
  return enumerate_all<BigInt>(inst, w1, w2, scale);
}

namespace {

// The two hand-built families rely on a strict ratio chain
// g1 > g2 > g3 > (break-even) > g4 = g5; reject any eps that bends it.
void require_tightness_chain(const Instance& inst, const char* what) {
  const bool ok = compare_preference(inst, 0, 1) == Ordering::greater &&
                  compare_preference(inst, 1, 2) == Ordering::greater &&
                  inst.u_first[2] > inst.u_second[2] &&
                  inst.u_first[3] < inst.u_second[3] &&
                  compare_preference(inst, 3, 4) == Ordering::equal;
  if (!ok) throw ValidationError(std::string(what) + ": epsilon breaks the preference chain");
}

}  // namespace

Instance gen_tightness_unnorm(const Rational& eps) {
  if (eps <= 0) throw ValidationError("epsilon: must be positive");
  Instance inst;
  inst.n = 3;
  inst.type_split = 1;
  inst.normalized = false;
  inst.u_first = {eps, 1, 1, 0, 0};
  inst.u_second = {0, eps, 2 * eps, eps, eps};
  require_tightness_chain(inst, "tightness-unnorm");
  return inst;
}

Instance gen_tightness_norm(const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 6))
    throw ValidationError("epsilon: must lie strictly between 0 and 1/6");
  const Rational third(1, 3);
  Instance inst;
  inst.n = 3;
  inst.type_split = 1;
  inst.normalized = true;
  inst.u_first = {third, third - eps, third + eps, 0, 0};
  inst.u_second = {eps, eps, third, third - eps, third - eps};
  require_tightness_chain(inst, "tightness-norm");
  validate_instance(inst);
  return inst;
}

Instance gen_random(std::uint64_t seed, int n, int m, bool normalized, int value_bound) {
  if (n < 2) throw ValidationError("n: must be at least 2");
  if (m < 0) throw ValidationError("m: must be non-negative");
  if (value_bound < 1) throw ValidationError("value_bound: must be positive");
  if (normalized && m == 0)
    throw ValidationError("m: cannot normalize an empty instance");

  std::mt19937_64 rng(seed);
  auto draw = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

  Instance inst;
  inst.n = n;
  inst.type_split = 1 + draw(n - 1);
  inst.normalized = normalized;

  while (true) {
    inst.u_first.assign(m, 0);
    inst.u_second.assign(m, 0);
    for (int g = 0; g < m; ++g) {
      do {
        inst.u_first[g] = Rational(draw(value_bound + 1), 1 + draw(value_bound));
        inst.u_second[g] = Rational(draw(value_bound + 1), 1 + draw(value_bound));
      } while (inst.u_first[g] == 0 && inst.u_second[g] == 0);
    }
    if (!normalized) break;
    Rational sum1 = 0, sum2 = 0;
    for (int g = 0; g < m; ++g) {
      sum1 += inst.u_first[g];
      sum2 += inst.u_second[g];
    }
    if (sum1 == 0 || sum2 == 0) continue;  // a row of zeros cannot be rescaled
    for (int g = 0; g < m; ++g) {
      inst.u_first[g] /= sum1;
      inst.u_second[g] /= sum2;
    }
    break;
  }
  return inst;
}

}  // namespace fairdiv
