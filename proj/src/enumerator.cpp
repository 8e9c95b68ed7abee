#include "tauenum/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <mutex>
#include <new>
#include <thread>

#include "tauenum/counting.hpp"

namespace tauenum {

namespace {

struct Subtree {
  TauFunction tau;
  Count spines;
};

// Depth-first walk over the extension tree. The tau buffer is shared along
// the path; Spines is carried as the running product of spine factors.
class Walker {
 public:
  Walker(std::size_t max_level, const TauVisitor* visitor)
      : max_level_(max_level), visitor_(visitor), totals_(max_level + 1) {}

  // Nodes of length `stop_at` are handed to `frontier` instead of visited.
  void set_frontier(std::size_t stop_at, std::vector<Subtree>* frontier) {
    stop_at_ = stop_at;
    frontier_ = frontier;
  }

  void walk(TauFunction& tau, Count spines) {
    const std::size_t n = tau.size();
    if (frontier_ != nullptr && n == stop_at_) {
      frontier_->push_back({tau, spines});
      return;
    }
    assert(is_admissible(tau));

    const Count classes = top_from(spines, twist_factor(tau));
    auto& row = totals_[n];
    row.tau_count = checked_add(row.tau_count, 1);
    row.spine_count = checked_add(row.spine_count, spines);
    row.class_count = checked_add(row.class_count, classes);
    if (visitor_ != nullptr && *visitor_) (*visitor_)(tau, spines, classes);

    if (n == max_level_) return;
    const auto analysis = analyze(tau);
    const auto choices = admissible_extensions(analysis.tail);
    // Choices come descending by value; walk ascending for lexicographic
    // order within each level.
    for (auto it = choices.rbegin(); it != choices.rend(); ++it) {
      const Count factor = spine_factor(tau, analysis, it->index);
      tau.push_back(it->value);
      walk(tau, checked_mul(spines, factor));
      tau.pop_back();
    }
  }

  const std::vector<LevelSummary>& totals() const { return totals_; }

 private:
  std::size_t max_level_;
  const TauVisitor* visitor_;
  std::vector<LevelSummary> totals_;  // index = level
  std::size_t stop_at_ = 0;
  std::vector<Subtree>* frontier_ = nullptr;
};

std::vector<LevelSummary> finish(std::vector<LevelSummary> totals) {
  totals.erase(totals.begin());
  for (std::size_t i = 0; i < totals.size(); ++i) totals[i].level = i + 1;
  return totals;
}

std::vector<LevelSummary> enumerate_impl(const EnumerationOptions& options,
                                         const TauVisitor& visitor) {
  const std::size_t max_level = options.max_level;
  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency()
                                          : options.threads;
  threads = std::max(threads, 1u);

  TauFunction root{0};
  if (visitor || threads == 1 || options.split_depth < 1 ||
      options.split_depth >= max_level) {
    Walker walker(max_level, &visitor);
    walker.walk(root, 1);
    return finish(walker.totals());
  }

  std::vector<Subtree> frontier;
  Walker head(max_level, nullptr);
  head.set_frontier(options.split_depth, &frontier);
  head.walk(root, 1);

  std::vector<std::vector<LevelSummary>> partial(
      threads, std::vector<LevelSummary>(max_level + 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](unsigned id) {
    try {
      Walker walker(max_level, nullptr);
      for (std::size_t t = next++; t < frontier.size(); t = next++) {
        TauFunction tau = frontier[t].tau;
        walker.walk(tau, frontier[t].spines);
      }
      partial[id] = walker.totals();
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = frontier.size();
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  auto totals = head.totals();
  for (const auto& p : partial) {
    for (std::size_t n = 1; n <= max_level; ++n) totals[n] += p[n];
  }
  return finish(std::move(totals));
}

}  // namespace

std::vector<LevelSummary> enumerate(const EnumerationOptions& options,
                                    const TauVisitor& visitor) {
  if (options.max_level < 1) {
    throw std::invalid_argument("max level must be at least 1");
  }
  try {
    return enumerate_impl(options, visitor);
  } catch (const std::bad_alloc&) {
    throw EnumerationError("enumeration ran out of memory at max level " +
                           std::to_string(options.max_level));
  }
}

std::vector<LevelSummary> brute_force_enumerate(std::size_t max_level,
                                                const TauVisitor& visitor,
                                                std::size_t cap) {
  if (max_level < 1) throw std::invalid_argument("max level must be at least 1");
  if (max_level > cap) {
    throw std::invalid_argument("brute force refuses max level " +
                                std::to_string(max_level) + " (cap " +
                                std::to_string(cap) + ")");
  }
  std::vector<LevelSummary> out;
  for (std::size_t n = 1; n <= max_level; ++n) {
    LevelSummary row{n, 0, 0, 0};
    // Odometer over tau(i) in 0..i-1, last position fastest.
    std::vector<std::int64_t> candidate(n, 0);
    while (true) {
      if (check_admissible(candidate)) {
        std::vector<Level> values(candidate.begin(), candidate.end());
        const TauFunction tau(values);
        const auto record = count_record(tau);
        row += LevelSummary{n, 1, record.spines, record.top};
        if (visitor) visitor(tau, record.spines, record.top);
      }
      std::size_t pos = n - 1;
      while (pos >= 1 && candidate[pos] == static_cast<std::int64_t>(pos)) {
        candidate[pos--] = 0;
      }
      if (pos == 0) break;
      ++candidate[pos];
    }
    out.push_back(row);
  }
  return out;
}

std::string format_ratio(Count numerator, Count denominator) {
  if (denominator == 0) throw std::domain_error("ratio with zero denominator");
  using Wide = unsigned __int128;
  const Wide scaled = (Wide{numerator} * 2000 + denominator) / (Wide{denominator} * 2);
  const auto whole = static_cast<unsigned long long>(scaled / 1000);
  const auto frac = static_cast<unsigned>(scaled % 1000);
  std::string digits = std::to_string(frac);
  digits.insert(0, 3 - digits.size(), '0');
  return std::to_string(whole) + "." + digits;
}

std::vector<RatioRow> ratios(const std::vector<LevelSummary>& summaries) {
  std::vector<RatioRow> out;
  for (std::size_t i = 1; i < summaries.size(); ++i) {
    const auto& prev = summaries[i - 1];
    const auto& cur = summaries[i];
    if (cur.level != prev.level + 1) {
      throw std::invalid_argument("ratios need consecutive levels");
    }
    out.push_back({cur.level, format_ratio(cur.class_count, prev.class_count)});
  }
  return out;
}

std::string export_prefix_tree(std::size_t max_level, TreeFormat format,
                               std::size_t cap) {
  if (format != TreeFormat::kDot) throw std::invalid_argument("unknown format");
  if (max_level < 1) throw std::invalid_argument("max level must be at least 1");
  if (max_level > cap) {
    throw std::invalid_argument("tree export refuses level " +
                                std::to_string(max_level) + " (cap " +
                                std::to_string(cap) + ")");
  }

  std::string out = "digraph tau_prefix_tree {\n  node [shape=box];\n";
  std::size_t next_id = 0;
  std::vector<std::size_t> path;  // node id per depth

  enumerate(max_level, [&](const TauFunction& tau, Count spines, Count top) {
    const std::size_t id = next_id++;
    const auto tf = twist_factor(tau);
    path.resize(tau.size() - 1);
    out += "  n" + std::to_string(id) + " [label=\"" + format_tau(tau) +
           "\\nSpines=" + std::to_string(spines) +
           " TF=" + tf.value.to_string() + " Top=" + std::to_string(top) +
           "\"];\n";
    if (!path.empty()) {
      out += "  n" + std::to_string(path.back()) + " -> n" +
             std::to_string(id) + ";\n";
    }
    path.push_back(id);
  });
  out += "}\n";
  return out;
}

}  // namespace tauenum
