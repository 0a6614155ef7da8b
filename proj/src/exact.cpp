#include "dagalign/exact.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "dagalign/conflict.hpp"
#include "dagalign/error.hpp"

namespace dagalign {

namespace {

using Clock = std::chrono::steady_clock;
using ClashFn =
    std::function<bool(const AlignmentInstance&, const CandidateEdge&, const CandidateEdge&)>;

struct Candidate {
  EdgeIndex beta_index;
  CandidateEdge edge;
};

// Include/exclude search over the positive-weight candidates. Candidates are
// visited by descending weight; `available` holds the positions that are
// neither decided nor excluded by an earlier inclusion, so the next position
// to branch on is always its first set bit.
class BranchAndBound {
 public:
  BranchAndBound(const AlignmentInstance& instance, const ClashFn& clash,
                 std::uint64_t budget, std::size_t max_size, std::optional<double> target)
      : budget_(budget), max_size_(max_size), target_(target) {
    for (EdgeIndex i = 0; i < instance.size(); ++i) {
      if (instance.edge(i).weight > 0.0) candidates_.push_back({i, instance.edge(i)});
    }
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return a.edge.weight > b.edge.weight;
                     });
    const std::size_t c = candidates_.size();
    clash_.assign(c, VertexSet(c));
    for (std::size_t x = 0; x < c; ++x) {
      for (std::size_t y = x + 1; y < c; ++y) {
        if (clash(instance, candidates_[x].edge, candidates_[y].edge)) {
          clash_[x].set(y);
          clash_[y].set(x);
        }
      }
    }
    left_best_.assign(instance.g1().vertex_count(), 0.0);
    right_best_.assign(instance.g2().vertex_count(), 0.0);
  }

  void run() {
    VertexSet available(candidates_.size());
    available.set();
    search(available);
  }

  bool reached_target() const { return reached_target_; }
  std::uint64_t nodes() const { return nodes_; }
  double best_weight() const { return best_weight_; }
  const std::vector<EdgeIndex>& best_set() const { return best_set_; }

 private:
  void search(const VertexSet& available) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "node budget of " + std::to_string(budget_) + " exhausted");
    }
    if (target_ && weight_ >= *target_ - kWeightTolerance) {
      record();
      reached_target_ = true;
      return;
    }
    if (available.none() || stack_.size() >= max_size_) {
      record();
      return;
    }
    const double bound = weight_ + remaining_bound(available);
    const double floor = target_ ? *target_ : best_weight_;
    if (bound < floor - kWeightTolerance) return;

    const std::size_t pos = available.find_first();
    const Candidate& cand = candidates_[pos];

    VertexSet with = available - clash_[pos];
    with.reset(pos);
    stack_.push_back(pos);
    weight_ += cand.edge.weight;
    search(with);
    weight_ -= cand.edge.weight;
    stack_.pop_back();
    if (reached_target_) return;

    VertexSet without = available;
    without.reset(pos);
    search(without);
  }

  // Admissible bound on what the undecided candidates can still add: no more
  // than their sum, than one best edge per free vertex on either side, or than
  // the heaviest remaining-capacity edges under a size cap.
  double remaining_bound(const VertexSet& available) {
    double total = 0.0;
    double capped = 0.0;
    std::size_t room = max_size_ - stack_.size();
    touched_left_.clear();
    touched_right_.clear();
    for (auto p = available.find_first(); p != VertexSet::npos; p = available.find_next(p)) {
      const CandidateEdge& e = candidates_[p].edge;
      total += e.weight;
      if (room > 0) {
        capped += e.weight;
        --room;
      }
      if (left_best_[e.left] == 0.0) touched_left_.push_back(e.left);
      if (right_best_[e.right] == 0.0) touched_right_.push_back(e.right);
      left_best_[e.left] = std::max(left_best_[e.left], e.weight);
      right_best_[e.right] = std::max(right_best_[e.right], e.weight);
    }
    double left_sum = 0.0;
    for (VertexId v : touched_left_) {
      left_sum += left_best_[v];
      left_best_[v] = 0.0;
    }
    double right_sum = 0.0;
    for (VertexId v : touched_right_) {
      right_sum += right_best_[v];
      right_best_[v] = 0.0;
    }
    return std::min({total, capped, left_sum, right_sum});
  }

  void record() {
    std::vector<std::pair<EdgeIndex, double>> picked;
    picked.reserve(stack_.size());
    for (std::size_t pos : stack_) {
      picked.emplace_back(candidates_[pos].beta_index, candidates_[pos].edge.weight);
    }
    std::sort(picked.begin(), picked.end());
    std::vector<EdgeIndex> set;
    set.reserve(picked.size());
    double w = 0.0;
    for (const auto& [index, weight] : picked) {
      set.push_back(index);
      w += weight;
    }
    if (w > best_weight_ + kWeightTolerance ||
        (w >= best_weight_ - kWeightTolerance && set < best_set_)) {
      best_weight_ = w;
      best_set_ = std::move(set);
    }
  }

  std::vector<Candidate> candidates_;
  std::vector<VertexSet> clash_;
  std::uint64_t budget_;
  std::size_t max_size_;
  std::optional<double> target_;

  std::vector<std::size_t> stack_;
  double weight_ = 0.0;
  std::uint64_t nodes_ = 0;
  bool reached_target_ = false;
  double best_weight_ = 0.0;
  std::vector<EdgeIndex> best_set_;

  std::vector<double> left_best_;
  std::vector<double> right_best_;
  std::vector<VertexId> touched_left_;
  std::vector<VertexId> touched_right_;
};

ExactResult solve(const AlignmentInstance& instance, const ClashFn& clash,
                  const ExactOptions& options) {
  const auto start = Clock::now();
  BranchAndBound bnb(instance, clash, options.node_budget,
                     std::numeric_limits<std::size_t>::max(), std::nullopt);
  bnb.run();
  ExactResult result;
  result.alignment = make_alignment(instance, bnb.best_set());
  result.stats.nodes_expanded = bnb.nodes();
  result.stats.best_bound = bnb.best_weight();
  result.stats.elapsed = Clock::now() - start;
  return result;
}

}  // namespace

ExactResult exact_align(const AlignmentInstance& instance, const ExactOptions& options) {
  return solve(instance, is_conflict, options);
}

ExactResult exact_align_isomorphic(const AlignmentInstance& instance,
                                   const ExactOptions& options) {
  return solve(instance, breaks_ancestry_isomorphism, options);
}

bool decide_alignment(const AlignmentInstance& instance, double min_weight,
                      std::size_t max_size, const ExactOptions& options) {
  if (min_weight <= kWeightTolerance) return true;
  if (max_size == 0) return false;
  BranchAndBound bnb(instance, is_conflict, options.node_budget, max_size, min_weight);
  bnb.run();
  return bnb.reached_target();
}

}  // namespace dagalign
