#include "weylarr/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylarr {

PosetPoint ExtendedPoint::point() const {
  if (!point_) throw std::logic_error("ExtendedPoint: infinity has no coordinates");
  return *point_;
}

bool leq(PosetPoint p, const ExtendedPoint& q) { return q.is_infinite() || leq(p, q.point()); }

bool leq(const ExtendedPoint& p, const ExtendedPoint& q) {
  if (q.is_infinite()) return true;
  if (p.is_infinite()) return false;
  return leq(p.point(), q.point());
}

std::vector<PosetPoint> level_set(int n, int i) {
  if (i < 0 || i > n)
    throw std::out_of_range("level_set: level " + std::to_string(i) + " outside [0, " +
                            std::to_string(n) + "]");
  std::vector<PosetPoint> out;
  out.reserve(static_cast<std::size_t>(i) + 1);
  for (int a = 0; a <= i; ++a) out.push_back({a, i - a});
  return out;
}

std::vector<PosetPoint> poset_points(int n, Ambient ambient) {
  std::vector<PosetPoint> out;
  for (int level = ambient == Ambient::with_origin ? 0 : 1; level <= n; ++level)
    for (int b = 0; b <= level; ++b) out.push_back({level - b, b});
  return out;
}

bool in_ambient(PosetPoint p, int n, Ambient ambient) {
  if (p.a < 0 || p.b < 0 || p.level() > n) return false;
  return ambient == Ambient::with_origin || p != kOrigin;
}

std::size_t punctured_size(int n) {
  return n <= 0 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 3) / 2;
}

Interval::Interval(PosetPoint lo, ExtendedPoint hi) : lo_(lo), hi_(hi) {
  if (lo.a < 0 || lo.b < 0)
    throw std::domain_error("interval: negative coordinate in " + to_string(lo));
  if (!leq(lo, hi))
    throw std::domain_error("interval: " + to_string(lo) + " is not <= " + to_string(hi));
}

std::vector<PosetPoint> interval_realize(const Interval& interval, int n, Ambient ambient) {
  const PosetPoint lo = interval.lo();
  const int top = interval.hi().is_infinite() ? n : std::min(n, interval.hi().point().level());
  std::vector<PosetPoint> out;
  for (int level = lo.level(); level <= top; ++level)
    for (int b = 0; b <= level; ++b) {
      const PosetPoint p{level - b, b};
      if (interval.contains(p) && in_ambient(p, n, ambient)) out.push_back(p);
    }
  return out;
}

Chain::Chain(std::vector<PosetPoint> points) : elements_(std::move(points)) {
  std::sort(elements_.begin(), elements_.end(), ListingLess{});
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const PosetPoint p = elements_[i];
    if (p.a < 0 || p.b < 0 || p == kOrigin)
      throw std::domain_error("chain: " + to_string(p) + " is not a point of E*_n");
    if (i > 0 && !lt(elements_[i - 1], p))
      throw std::domain_error("chain: " + to_string(elements_[i - 1]) + " and " + to_string(p) +
                              " are not comparable");
  }
}

namespace {

// Number of ambient levels covered by [lo, hi].
int covered_levels(PosetPoint lo, const ExtendedPoint& hi, int n, Ambient ambient) {
  const int top = hi.is_infinite() ? n : std::min(n, hi.point().level());
  int count = top - lo.level() + 1;
  if (ambient == Ambient::without_origin && lo == kOrigin) --count;
  return std::max(count, 0);
}

int total_levels(const std::vector<Interval>& intervals, int n, Ambient ambient) {
  int total = 0;
  for (const Interval& iv : intervals) total += covered_levels(iv.lo(), iv.hi(), n, ambient);
  return total;
}

std::vector<PosetPoint> realize_all(const std::vector<Interval>& intervals, int n, Ambient ambient) {
  std::vector<PosetPoint> out;
  for (const Interval& iv : intervals) {
    std::vector<PosetPoint> part = interval_realize(iv, n, ambient);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), ListingLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_interval_chain(int n, const std::vector<Interval>& intervals, const char* what) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const Interval& iv = intervals[i];
    const bool last = i + 1 == intervals.size();
    if (iv.lo().level() > n)
      throw std::domain_error(std::string(what) + ": start " + to_string(iv.lo()) + " outside E_n");
    if (!iv.hi().is_infinite() && iv.hi().point().level() > n)
      throw std::domain_error(std::string(what) + ": end " + to_string(iv.hi()) + " outside E_n");
    if (!last) {
      if (iv.hi().is_infinite())
        throw std::domain_error(std::string(what) + ": only the last interval may end at infinity");
      if (!leq(iv.hi().point() + kDiagonalStep, intervals[i + 1].lo()))
        throw std::domain_error(std::string(what) + ": gap condition fails between " +
                                to_string(iv) + " and " + to_string(intervals[i + 1]));
    } else if (!iv.hi().is_infinite() && iv.hi().point().level() >= n) {
      throw std::domain_error(std::string(what) + ": last interval " + to_string(iv) +
                              " must end below level n or at infinity");
    }
  }
}

// Decomposes a subset of E_n into maximal runs of consecutive levels and
// checks that each run is an interval and the runs satisfy the gap and
// last-interval conditions.
std::optional<std::vector<Interval>> recognize(int n, std::vector<PosetPoint> points) {
  std::sort(points.begin(), points.end(), ListingLess{});
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Interval> out;
  std::size_t begin = 0;
  while (begin < points.size()) {
    std::size_t end = begin + 1;
    while (end < points.size() && points[end].level() <= points[end - 1].level() + 1) ++end;
    const std::vector<PosetPoint> run(points.begin() + static_cast<std::ptrdiff_t>(begin),
                                      points.begin() + static_cast<std::ptrdiff_t>(end));
    const bool last = end == points.size();
    PosetPoint lo{run.front().a, run.front().b}, hi = lo;
    for (const PosetPoint& p : run) {
      lo = {std::min(lo.a, p.a), std::min(lo.b, p.b)};
      hi = {std::max(hi.a, p.a), std::max(hi.b, p.b)};
    }
    std::optional<Interval> found;
    if (last && interval_realize(Interval(lo, ExtendedPoint::infinity()), n, Ambient::with_origin) == run)
      found = Interval(lo, ExtendedPoint::infinity());
    else if (hi.level() <= n && interval_realize(Interval(lo, hi), n, Ambient::with_origin) == run)
      found = Interval(lo, hi);
    if (!found) return std::nullopt;
    out.push_back(*found);
    begin = end;
  }
  try {
    check_interval_chain(n, out, "recognize");
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Ensemble Ensemble::from_intervals(int n, const std::vector<Interval>& intervals) {
  if (intervals.empty() || intervals.front().lo() != kOrigin)
    throw std::domain_error("ensemble: the first interval must start at the origin");
  check_interval_chain(n, intervals, "ensemble");
  std::vector<PosetPoint> points = realize_all(intervals, n, Ambient::with_origin);
  auto canonical = recognize(n, std::move(points));
  if (!canonical) throw std::logic_error("ensemble: canonical decomposition failed");
  return Ensemble(n, std::move(*canonical));
}

std::optional<Ensemble> Ensemble::from_points(int n, std::vector<PosetPoint> points) {
  for (const PosetPoint& p : points)
    if (!in_ambient(p, n, Ambient::without_origin)) return std::nullopt;
  points.push_back(kOrigin);
  auto canonical = recognize(n, std::move(points));
  if (!canonical) return std::nullopt;
  return Ensemble(n, std::move(*canonical));
}

std::vector<PosetPoint> Ensemble::realize() const {
  return realize_all(intervals_, n_, Ambient::without_origin);
}

bool Ensemble::contains(PosetPoint p) const {
  if (!in_ambient(p, n_, Ambient::without_origin)) return false;
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.contains(p); });
}

int Ensemble::rank() const { return total_levels(intervals_, n_, Ambient::without_origin); }

int ensemble_rank(const Ensemble& ensemble) { return ensemble.rank(); }

PseudoEnsemble PseudoEnsemble::from_intervals(int n, const std::vector<Interval>& intervals) {
  check_interval_chain(n, intervals, "pseudo-ensemble");
  auto canonical = recognize(n, realize_all(intervals, n, Ambient::with_origin));
  if (!canonical) throw std::logic_error("pseudo-ensemble: canonical decomposition failed");
  return PseudoEnsemble(n, std::move(*canonical));
}

std::optional<PseudoEnsemble> PseudoEnsemble::from_points(int n, std::vector<PosetPoint> points) {
  for (const PosetPoint& p : points)
    if (!in_ambient(p, n, Ambient::with_origin)) return std::nullopt;
  auto canonical = recognize(n, std::move(points));
  if (!canonical) return std::nullopt;
  return PseudoEnsemble(n, std::move(*canonical));
}

std::optional<PosetPoint> PseudoEnsemble::start() const {
  if (intervals_.empty()) return std::nullopt;
  return intervals_.front().lo();
}

std::vector<PosetPoint> PseudoEnsemble::realize() const {
  return realize_all(intervals_, n_, Ambient::with_origin);
}

int PseudoEnsemble::rank() const { return total_levels(intervals_, n_, Ambient::with_origin) - 1; }

// ---------------------------------------------------------------------------

ChainEnumerator::ChainEnumerator(int n, int k)
    : n_(n), k_(k), points_(poset_points(n, Ambient::without_origin)) {}

int ChainEnumerator::candidate(std::size_t depth, std::size_t from) const {
  const int max_level = n_ - (k_ - 1 - static_cast<int>(depth));
  for (std::size_t i = from; i < points_.size(); ++i) {
    const PosetPoint p = points_[i];
    if (p.level() > max_level) return -1;
    if (depth == 0 || lt(points_[index_[depth - 1]], p)) return static_cast<int>(i);
  }
  return -1;
}

bool ChainEnumerator::extend() {
  while (index_.size() < static_cast<std::size_t>(k_)) {
    const std::size_t from = index_.empty() ? 0 : index_.back() + 1;
    const int c = candidate(index_.size(), from);
    if (c < 0) return false;
    index_.push_back(static_cast<std::size_t>(c));
  }
  return true;
}

std::optional<Chain> ChainEnumerator::next() {
  if (done_) return std::nullopt;
  bool ok = false;
  if (!started_) {
    started_ = true;
    if (k_ < 0 || k_ > n_) {
      done_ = true;
      return std::nullopt;
    }
    ok = extend();
  }
  while (!ok) {
    if (index_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    const std::size_t depth = index_.size() - 1;
    const std::size_t from = index_.back() + 1;
    index_.pop_back();
    const int c = candidate(depth, from);
    if (c >= 0) {
      index_.push_back(static_cast<std::size_t>(c));
      ok = extend();
    }
  }
  std::vector<PosetPoint> elements;
  elements.reserve(index_.size());
  for (std::size_t i : index_) elements.push_back(points_[i]);
  return Chain(std::move(elements));
}

namespace detail {

IntervalUnionSearch::IntervalUnionSearch(int n, int target_levels, Ambient ambient,
                                         std::vector<PosetPoint> starts)
    : n_(n), target_(target_levels), ambient_(ambient) {
  if (target_levels >= 0 && n >= 0) stack_.push_back(make_frame(starts, 0));
}

IntervalUnionSearch::Frame IntervalUnionSearch::make_frame(const std::vector<PosetPoint>& starts,
                                                           int base) const {
  Frame frame;
  frame.base = base;
  const std::vector<PosetPoint> ends = poset_points(n_ - 1, Ambient::with_origin);
  for (const PosetPoint& lo : starts) {
    if (!in_ambient(lo, n_, Ambient::with_origin)) continue;
    for (const PosetPoint& hi : ends) {
      if (!leq(lo, hi)) continue;
      const int levels = covered_levels(lo, hi, n_, ambient_);
      frame.choices.push_back({lo, hi, true, levels});
      if (hi.level() <= n_ - 2) frame.choices.push_back({lo, hi, false, levels});
    }
    frame.choices.push_back(
        {lo, ExtendedPoint::infinity(), true,
         covered_levels(lo, ExtendedPoint::infinity(), n_, ambient_)});
  }
  return frame;
}

std::optional<std::vector<Interval>> IntervalUnionSearch::next() {
  while (!stack_.empty()) {
    Frame& frame = stack_.back();
    if (++frame.index >= static_cast<std::ptrdiff_t>(frame.choices.size())) {
      stack_.pop_back();
      continue;
    }
    const Choice choice = frame.choices[static_cast<std::size_t>(frame.index)];
    const int total = frame.base + choice.levels;
    if (total > target_) continue;
    if (choice.last) {
      if (total != target_) continue;
      std::vector<Interval> out;
      out.reserve(stack_.size());
      for (const Frame& f : stack_) {
        const Choice& c = f.choices[static_cast<std::size_t>(f.index)];
        out.emplace_back(c.lo, c.hi);
      }
      return out;
    }
    if (total + 1 > target_) continue;
    const PosetPoint floor = choice.hi.point() + kDiagonalStep;
    std::vector<PosetPoint> starts;
    for (const PosetPoint& p : poset_points(n_, Ambient::with_origin))
      if (leq(floor, p)) starts.push_back(p);
    if (starts.empty()) continue;
    stack_.push_back(make_frame(starts, total));
  }
  return std::nullopt;
}

}  // namespace detail

EnsembleEnumerator::EnsembleEnumerator(int n, int k)
    : n_(n), search_(n, k, Ambient::without_origin, {kOrigin}) {}

std::optional<Ensemble> EnsembleEnumerator::next() {
  auto intervals = search_.next();
  if (!intervals) return std::nullopt;
  return Ensemble::from_intervals(n_, *intervals);
}

namespace {
std::vector<PosetPoint> pseudo_starts(int n, std::optional<PosetPoint> start) {
  if (start) return {*start};
  return poset_points(n, Ambient::with_origin);
}
}  // namespace

PseudoEnsembleEnumerator::PseudoEnsembleEnumerator(int n, int k, std::optional<PosetPoint> start)
    : n_(n),
      yield_empty_(k == -1 && !start && n >= -1),
      search_(n, k + 1, Ambient::with_origin, pseudo_starts(n, start)) {}

std::optional<PseudoEnsemble> PseudoEnsembleEnumerator::next() {
  if (yield_empty_) {
    yield_empty_ = false;
    return PseudoEnsemble::empty(n_);
  }
  auto intervals = search_.next();
  if (!intervals || intervals->empty()) return std::nullopt;
  return PseudoEnsemble::from_intervals(n_, *intervals);
}

std::uint64_t count_chains(int n, int k) {
  std::uint64_t count = 0;
  ChainEnumerator e(n, k);
  while (e.next()) ++count;
  return count;
}

std::uint64_t count_ensembles(int n, int k) {
  std::uint64_t count = 0;
  EnsembleEnumerator e(n, k);
  while (e.next()) ++count;
  return count;
}

std::uint64_t count_pseudo_ensembles(int n, int k) {
  std::uint64_t count = 0;
  PseudoEnsembleEnumerator e(n, k);
  while (e.next()) ++count;
  return count;
}

std::string to_string(PosetPoint p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

std::string to_string(const ExtendedPoint& p) {
  return p.is_infinite() ? std::string("inf") : to_string(p.point());
}

std::string to_string(const Interval& interval) {
  return "[" + to_string(interval.lo()) + "," + to_string(interval.hi()) + "]";
}

}  // namespace weylarr
