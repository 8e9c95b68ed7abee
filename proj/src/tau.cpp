#include "tauenum/tau.hpp"

#include <charconv>
#include <stdexcept>

namespace tauenum {

TauFunction::TauFunction(std::span<const Level> values) {
  values_.reserve(values.size() + 1);
  ords_.reserve(values.size() + 1);
  for (Level v : values) push_back(v);
}

TauFunction::TauFunction(std::initializer_list<Level> values)
    : TauFunction(std::span<const Level>(values.begin(), values.size())) {}

std::size_t TauFunction::ord(Level n) const {
  if (n > size()) {
    throw std::domain_error("ord: level " + std::to_string(n) +
                            " outside 0.." + std::to_string(size()));
  }
  return ords_[n];
}

Level TauFunction::iterate(Level n, std::size_t m) const {
  if (n > size()) throw std::domain_error("iterate: level out of range");
  for (; m > 0 && n != 0; --m) n = values_[n];
  return n;
}

void TauFunction::push_back(Level value) {
  const std::size_t n = values_.size();
  if (value >= n) {
    throw std::invalid_argument("tau(" + std::to_string(n) + ") = " +
                                std::to_string(value) + " must be at most " +
                                std::to_string(n - 1));
  }
  values_.push_back(value);
  ords_.push_back(ords_[value] + 1);
}

void TauFunction::pop_back() {
  if (empty()) throw std::logic_error("pop_back on empty tau-function");
  values_.pop_back();
  ords_.pop_back();
}

TauFunction TauFunction::prefix(std::size_t length) const {
  if (length > size()) throw std::domain_error("prefix longer than tau");
  return TauFunction(values().first(length));
}

OrbitView orbit(const TauFunction& tau, Level start) {
  OrbitView view{start, {}};
  view.chain.reserve(tau.ord(start) + 1);
  for (Level n = start;; n = tau[n]) {
    view.chain.push_back(n);
    if (n == 0) break;
  }
  return view;
}

std::size_t ord(const TauFunction& tau, Level n) { return tau.ord(n); }

const char* property_name(Property p) {
  switch (p) {
    case Property::kNone: return "none";
    case Property::kRange: return "range";
    case Property::kA: return "A";
    case Property::kB: return "B";
    case Property::kC: return "C";
    case Property::kD: return "D";
    case Property::kE: return "E";
  }
  return "?";
}

namespace {

AdmissibilityReport violation(Property p, std::size_t index) {
  return {false, p, index};
}

}  // namespace

AdmissibilityReport check_admissible(std::span<const std::int64_t> candidate) {
  const std::size_t length = candidate.size();
  if (length == 0) return violation(Property::kRange, 0);
  for (std::size_t n = 1; n <= length; ++n) {
    if (candidate[n - 1] < 0) return violation(Property::kRange, n);
  }
  if (candidate[0] != 0) return violation(Property::kA, 1);
  for (std::size_t n = 1; n < length; ++n) {
    if (candidate[n] > candidate[n - 1] + 1) return violation(Property::kB, n);
  }

  // A and B give tau(n) < n, so the sequence is a well-formed TauFunction.
  TauFunction tau;
  for (std::int64_t v : candidate) tau.push_back(static_cast<Level>(v));

  // C and D: for every 0 < k < ord(n), with a = tau^k(n), b = tau^{k+1}(n).
  for (std::size_t n = 1; n < length; ++n) {
    const Level next = tau[n + 1];
    for (Level a = tau[n]; a != 0; a = tau[a]) {
      const Level b = tau[a];
      if (next < a + 1 && next > b + 1) return violation(Property::kC, n);
    }
  }
  for (std::size_t n = 1; n < length; ++n) {
    const Level next = tau[n + 1];
    for (Level a = tau[n]; a != 0; a = tau[a]) {
      const Level b = tau[a];
      if (next < a + 1 && tau[a + 1] == b + 1 && !(next < b + 1)) {
        return violation(Property::kD, n);
      }
    }
  }
  for (std::size_t n = 1; n < length; ++n) {
    const std::size_t order = tau.ord_unchecked(n);
    if (order <= 1) continue;
    const Level last = tau.iterate(n, order - 1);
    if (tau.ord_unchecked(last + 1) == 1 && tau[n + 1] == 0) {
      return violation(Property::kE, n);
    }
  }
  return {};
}

AdmissibilityReport check_admissible(const TauFunction& tau) {
  std::vector<std::int64_t> raw(tau.values().begin(), tau.values().end());
  return check_admissible(raw);
}

std::vector<Level> markers(const TauFunction& tau) {
  std::vector<Level> out;
  for (Level m = 1; m < tau.size(); ++m) {
    if (tau[m + 1] < tau[m] + 1) out.push_back(m);
  }
  return out;
}

std::vector<bool> marked_level_table(const TauFunction& tau) {
  std::vector<bool> marked(tau.size() + 1, false);
  marked[0] = true;
  for (Level m = 1; m < tau.size(); ++m) {
    if (!(tau[m + 1] < tau[m] + 1)) continue;
    // Orbits merge, so stop at the first level already marked.
    for (Level l = tau[m]; !marked[l]; l = tau[l]) marked[l] = true;
  }
  return marked;
}

std::vector<Level> marked_levels(const TauFunction& tau) {
  const auto table = marked_level_table(tau);
  std::vector<Level> out;
  for (Level l = 0; l < table.size(); ++l) {
    if (table[l]) out.push_back(l);
  }
  return out;
}

std::vector<std::int64_t> parse_tau_text(std::string_view text) {
  std::vector<std::int64_t> out;
  auto trim = [](std::string_view s) {
    const auto* ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return std::string_view{};
    return s.substr(first, s.find_last_not_of(ws) - first + 1);
  };
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const auto token = trim(text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos));
    std::int64_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
      throw std::invalid_argument("bad tau token '" + std::string(token) +
                                  "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

TauFunction parse_tau(std::string_view text) {
  TauFunction tau;
  for (std::int64_t v : parse_tau_text(text)) {
    if (v < 0) throw std::invalid_argument("negative tau value");
    tau.push_back(static_cast<Level>(v));
  }
  if (tau.empty()) throw std::invalid_argument("empty tau");
  return tau;
}

std::string format_tau(const TauFunction& tau) {
  std::string out;
  for (Level v : tau.values()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace tauenum
