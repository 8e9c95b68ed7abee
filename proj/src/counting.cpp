#include "tauenum/counting.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tauenum {

namespace {

std::int64_t mul_sub(std::int64_t pow2_exp, std::int64_t value, int minus) {
  std::int64_t r;
  if (pow2_exp >= 62 || __builtin_mul_overflow(std::int64_t{1} << pow2_exp,
                                               value, &r)) {
    throw std::overflow_error("spine factor overflow");
  }
  return r - minus;
}

// 2^{n_1}(2^{n_2}(...(2^{n_{i-1}} - d(i-1,i))...) - d(2,i)) - d(1,i), with the
// empty nesting at i = 1 equal to 1.
std::int64_t nested_factor(const TauFunction& tau, const TailDecomposition& td,
                           std::size_t i) {
  if (i == 1) return 1;
  std::int64_t v = mul_sub(static_cast<std::int64_t>(td.steps[i - 1]), 1,
                           delta(tau, td, i - 1, i));
  for (std::size_t j = i - 2; j >= 1; --j) {
    v = mul_sub(static_cast<std::int64_t>(td.steps[j]), v, delta(tau, td, j, i));
  }
  return v;
}

}  // namespace

TauAnalysis analyze(const TauFunction& tau) {
  TauAnalysis a{tail_decomposition(tau), marked_level_table(tau), 0};
  for (Level l = a.tail.images[0]; !a.marked[l]; l = tau[l]) ++a.symmetry;
  return a;
}

std::size_t symmetry(const TauFunction& tau) { return analyze(tau).symmetry; }

std::int64_t side_component_count(const TauFunction& tau,
                                  const TauAnalysis& analysis, std::size_t i) {
  const auto& td = analysis.tail;
  if (i < 1 || i > td.k + 1) {
    throw std::domain_error("side component index outside 1..k+1");
  }
  return mul_sub(static_cast<std::int64_t>(td.steps[0]),
                 nested_factor(tau, td, i), 0);
}

Count spine_factor(const TauFunction& tau, const TauAnalysis& analysis,
                   std::size_t index) {
  const auto& td = analysis.tail;
  if (index == 0) return 1;
  if (index > td.k + 1) throw std::domain_error("extension index outside 0..k+1");
  if (analysis.symmetry > td.steps[0]) {
    throw IntegrityError("symmetry exceeds n_0");
  }
  const std::int64_t nested = nested_factor(tau, td, index);
  if (nested <= 0) {
    throw std::domain_error("spine factor of an excluded extension choice");
  }
  return checked_shl(static_cast<Count>(nested),
                     static_cast<unsigned>(td.steps[0] - analysis.symmetry));
}

Count spine_factor(const TauFunction& tau, const ExtensionChoice& choice) {
  const auto analysis = analyze(tau);
  const auto choices = admissible_extensions(analysis.tail);
  const bool known = std::any_of(choices.begin(), choices.end(), [&](auto& c) {
    return c.index == choice.index && c.value == choice.value;
  });
  if (!known) {
    throw std::domain_error("tau(N+1) = " + std::to_string(choice.value) +
                            " is not an admissible extension");
  }
  return spine_factor(tau, analysis, choice.index);
}

std::vector<ExtensionChoice> extensions_with_spine_factors(
    const TauFunction& tau) {
  const auto analysis = analyze(tau);
  auto choices = admissible_extensions(analysis.tail);
  for (auto& c : choices) c.spine_factor = spine_factor(tau, analysis, c.index);
  return choices;
}

Count spines(const TauFunction& tau) {
  if (tau.empty()) throw std::domain_error("spines of empty tau");
  Count total = 1;  // SF(tau, 1) = 1
  TauFunction prefix{0};
  for (std::size_t n = 2; n <= tau.size(); ++n) {
    const auto choices = extensions_with_spine_factors(prefix);
    const auto it = std::find_if(choices.begin(), choices.end(),
                                 [&](auto& c) { return c.value == tau[n]; });
    if (it == choices.end()) {
      throw std::domain_error("tau is not admissible at level " +
                              std::to_string(n));
    }
    total = checked_mul(total, it->spine_factor);
    prefix.push_back(tau[n]);
  }
  return total;
}

namespace {

void require_marked(const TauFunction& tau, Level l) {
  if (l > tau.size() || !marked_level_table(tau)[l]) {
    throw std::domain_error("level " + std::to_string(l) + " is not marked");
  }
}

DyadicRational moduli_sum_unchecked(const TauFunction& tau, Level l) {
  DyadicRational sum;
  for (Level i = 1; i <= l; ++i) {
    sum += DyadicRational::inverse_power_of_two(
        static_cast<unsigned>(tau.ord_unchecked(i)));
  }
  return sum;
}

}  // namespace

DyadicRational moduli_sum(const TauFunction& tau, Level l) {
  require_marked(tau, l);
  return moduli_sum_unchecked(tau, l);
}

Count twist_period(const TauFunction& tau, Level l) {
  require_marked(tau, l);
  return moduli_sum_unchecked(tau, l).denominator();
}

TwistFactor twist_factor(const TauFunction& tau) {
  const auto marked = marked_level_table(tau);
  TwistFactor tf;
  unsigned max_exponent = 0;
  DyadicRational running;
  for (Level l = 1; l < marked.size(); ++l) {
    running += DyadicRational::inverse_power_of_two(
        static_cast<unsigned>(tau.ord_unchecked(l)));
    if (!marked[l]) continue;
    ++tf.nonzero_marked_levels;
    max_exponent = std::max(max_exponent, running.exponent());
  }
  tf.max_period = checked_pow2(max_exponent);
  tf.value = DyadicRational(
      checked_pow2(static_cast<unsigned>(tf.nonzero_marked_levels)),
      max_exponent);
  return tf;
}

Count top_from(Count spines, const TwistFactor& twist) {
  const Count scaled = checked_mul(spines, twist.value.numerator());
  const unsigned e = twist.value.exponent();
  if (scaled == 0 || (e > 0 && std::countr_zero(scaled) < static_cast<int>(e))) {
    throw IntegrityError("Spines * TF = " + std::to_string(scaled) + "/2^" +
                         std::to_string(e) + " is not a positive integer");
  }
  return scaled >> e;
}

Count top(const TauFunction& tau) {
  return top_from(spines(tau), twist_factor(tau));
}

CountRecord count_record(const TauFunction& tau) {
  CountRecord r;
  r.spines = spines(tau);
  const auto tf = twist_factor(tau);
  r.nonzero_marked_levels = tf.nonzero_marked_levels;
  r.max_period = tf.max_period;
  r.twist_factor = tf.value;
  r.top = top_from(r.spines, tf);
  return r;
}

}  // namespace tauenum
