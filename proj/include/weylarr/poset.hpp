#pragma once

// The graded quarter-plane poset N^2 truncated at level n:
//   E_n  = { (a,b) : a+b <= n },   E*_n = E_n minus the origin,
// together with an adjoined maximum "infinity", intervals, chains, and the
// interval unions (ensembles, pseudo-ensembles) that index flats.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace weylarr {

struct PosetPoint {
  int a = 0;
  int b = 0;

  constexpr int level() const { return a + b; }

  friend constexpr bool operator==(PosetPoint, PosetPoint) = default;
  friend constexpr PosetPoint operator+(PosetPoint p, PosetPoint q) { return {p.a + q.a, p.b + q.b}; }
  friend constexpr PosetPoint operator-(PosetPoint p, PosetPoint q) { return {p.a - q.a, p.b - q.b}; }
};

inline constexpr PosetPoint kOrigin{0, 0};
inline constexpr PosetPoint kDiagonalStep{1, 1};

/// Cartesian order: (a,b) <= (c,d) iff a <= c and b <= d.
constexpr bool leq(PosetPoint p, PosetPoint q) { return p.a <= q.a && p.b <= q.b; }
constexpr bool lt(PosetPoint p, PosetPoint q) { return leq(p, q) && p != q; }
constexpr bool comparable(PosetPoint p, PosetPoint q) { return leq(p, q) || leq(q, p); }

/// Total order used for every listing: by level, then by b. Within a level
/// this runs from the a-axis towards the b-axis.
struct ListingLess {
  constexpr bool operator()(PosetPoint p, PosetPoint q) const {
    return p.level() != q.level() ? p.level() < q.level() : p.b < q.b;
  }
};

/// A point of E_n or the adjoined maximum.
class ExtendedPoint {
 public:
  ExtendedPoint(PosetPoint p) : point_(p) {}  // NOLINT: implicit by design of the poset
  static ExtendedPoint infinity() { return ExtendedPoint(); }

  bool is_infinite() const { return !point_.has_value(); }
  PosetPoint point() const;  // throws std::logic_error on infinity

  friend bool operator==(const ExtendedPoint&, const ExtendedPoint&) = default;

 private:
  ExtendedPoint() = default;
  std::optional<PosetPoint> point_;
};

bool leq(PosetPoint p, const ExtendedPoint& q);
bool leq(const ExtendedPoint& p, const ExtendedPoint& q);

enum class Ambient {
  with_origin,     // E_n
  without_origin,  // E*_n
};

/// Points of level i, sorted by a. Throws std::out_of_range unless 0 <= i <= n.
std::vector<PosetPoint> level_set(int n, int i);

/// All points of E_n or E*_n in listing order.
std::vector<PosetPoint> poset_points(int n, Ambient ambient);

bool in_ambient(PosetPoint p, int n, Ambient ambient);

/// |E*_n| = n(n+3)/2.
std::size_t punctured_size(int n);

/// [lo, hi] in the completed poset. Construction enforces lo <= hi.
class Interval {
 public:
  Interval(PosetPoint lo, ExtendedPoint hi);

  PosetPoint lo() const { return lo_; }
  const ExtendedPoint& hi() const { return hi_; }
  bool contains(PosetPoint p) const { return leq(lo_, p) && leq(p, hi_); }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  PosetPoint lo_;
  ExtendedPoint hi_;
};

/// Ambient points P with lo <= P <= hi, in listing order.
std::vector<PosetPoint> interval_realize(const Interval& interval, int n, Ambient ambient);

/// Pairwise comparable points of E*_n, held in increasing order.
class Chain {
 public:
  Chain() = default;
  /// Sorts the points; throws std::domain_error if they are not a strict
  /// chain or contain the origin or a negative coordinate.
  explicit Chain(std::vector<PosetPoint> points);

  const std::vector<PosetPoint>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  int max_level() const { return elements_.empty() ? 0 : elements_.back().level(); }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<PosetPoint> elements_;
};

/// Union of level-separated intervals starting at the origin, restricted to
/// E*_n. Always held in canonical form: one interval per maximal run of
/// consecutive levels of the realized set (together with the origin).
class Ensemble {
 public:
  /// Checks A_0 = 0, A_i <= B_i, B_i + (1,1) <= A_{i+1}, level(B_k) < n or
  /// B_k = infinity, with every A_i a point of E_n and every finite B_i of
  /// level <= n. Throws std::domain_error on violation.
  static Ensemble from_intervals(int n, const std::vector<Interval>& intervals);

  /// Recognizes a subset of E*_n; nullopt if it is not an ensemble.
  static std::optional<Ensemble> from_points(int n, std::vector<PosetPoint> points);

  int n() const { return n_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  std::vector<PosetPoint> realize() const;
  bool contains(PosetPoint p) const;
  int rank() const;

  friend bool operator==(const Ensemble&, const Ensemble&) = default;

 private:
  Ensemble(int n, std::vector<Interval> intervals) : n_(n), intervals_(std::move(intervals)) {}
  int n_ = 0;
  std::vector<Interval> intervals_;
};

/// Number of distinct levels among the realized elements.
int ensemble_rank(const Ensemble& ensemble);

/// Like an ensemble but realized in E_n with a free starting point. The empty
/// set is the unique pseudo-ensemble of rank -1.
class PseudoEnsemble {
 public:
  static PseudoEnsemble empty(int n) { return PseudoEnsemble(n, {}); }
  static PseudoEnsemble from_intervals(int n, const std::vector<Interval>& intervals);
  static std::optional<PseudoEnsemble> from_points(int n, std::vector<PosetPoint> points);

  int n() const { return n_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  std::optional<PosetPoint> start() const;
  std::vector<PosetPoint> realize() const;
  /// Distinct levels minus one.
  int rank() const;

  friend bool operator==(const PseudoEnsemble&, const PseudoEnsemble&) = default;

 private:
  PseudoEnsemble(int n, std::vector<Interval> intervals) : n_(n), intervals_(std::move(intervals)) {}
  int n_ = 0;
  std::vector<Interval> intervals_;
};

// ---------------------------------------------------------------------------
// Lazy enumeration. Each enumerator is single-consumer; next() returns
// nullopt once exhausted.

/// k-chains of E*_n in lexicographic order of their element lists (elements
/// compared with ListingLess).
class ChainEnumerator {
 public:
  using value_type = Chain;
  ChainEnumerator(int n, int k);
  std::optional<Chain> next();

 private:
  bool extend();
  int candidate(std::size_t depth, std::size_t from) const;

  int n_;
  int k_;
  bool started_ = false;
  bool done_ = false;
  std::vector<PosetPoint> points_;
  std::vector<std::size_t> index_;
};

namespace detail {

// Depth-first generator of canonical interval lists. Shared by ensembles
// (ambient E*_n, start at the origin) and pseudo-ensembles (ambient E_n).
class IntervalUnionSearch {
 public:
  IntervalUnionSearch(int n, int target_levels, Ambient ambient, std::vector<PosetPoint> starts);
  std::optional<std::vector<Interval>> next();

 private:
  struct Choice {
    PosetPoint lo;
    ExtendedPoint hi;
    bool last;
    int levels;
  };
  struct Frame {
    std::vector<Choice> choices;
    int base = 0;
    std::ptrdiff_t index = -1;
  };
  Frame make_frame(const std::vector<PosetPoint>& starts, int base) const;

  int n_;
  int target_;
  Ambient ambient_;
  std::vector<Frame> stack_;
};

}  // namespace detail

/// k-ensembles of E*_n, each exactly once, in lexicographic order of their
/// canonical interval lists (A before B, finite before infinity, and "stop"
/// before "continue" for the same interval).
class EnsembleEnumerator {
 public:
  using value_type = Ensemble;
  EnsembleEnumerator(int n, int k);
  std::optional<Ensemble> next();

 private:
  int n_;
  detail::IntervalUnionSearch search_;
};

/// k-pseudo-ensembles of E_n, optionally restricted to one starting point.
class PseudoEnsembleEnumerator {
 public:
  using value_type = PseudoEnsemble;
  PseudoEnsembleEnumerator(int n, int k, std::optional<PosetPoint> start = std::nullopt);
  std::optional<PseudoEnsemble> next();

 private:
  int n_;
  bool yield_empty_;
  detail::IntervalUnionSearch search_;
};

/// Input range over an enumerator, for range-for loops.
template <typename Enumerator>
class EnumerationRange {
 public:
  using value_type = typename Enumerator::value_type;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = EnumerationRange::value_type;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = const value_type&;

    iterator() = default;
    explicit iterator(Enumerator* source) : source_(source) { ++*this; }
    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = source_->next();
      if (!current_) source_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& x, const iterator& y) { return x.source_ == y.source_; }

   private:
    Enumerator* source_ = nullptr;
    std::optional<value_type> current_;
  };

  explicit EnumerationRange(Enumerator source) : source_(std::move(source)) {}
  iterator begin() { return iterator(&source_); }
  iterator end() { return iterator(); }

 private:
  Enumerator source_;
};

inline EnumerationRange<ChainEnumerator> enumerate_chains(int n, int k) {
  return EnumerationRange<ChainEnumerator>(ChainEnumerator(n, k));
}
inline EnumerationRange<EnsembleEnumerator> enumerate_ensembles(int n, int k) {
  return EnumerationRange<EnsembleEnumerator>(EnsembleEnumerator(n, k));
}
inline EnumerationRange<PseudoEnsembleEnumerator> enumerate_pseudo_ensembles(
    int n, int k, std::optional<PosetPoint> start = std::nullopt) {
  return EnumerationRange<PseudoEnsembleEnumerator>(PseudoEnsembleEnumerator(n, k, start));
}

/// Counts by walking the enumerators; nothing is stored.
std::uint64_t count_chains(int n, int k);
std::uint64_t count_ensembles(int n, int k);
std::uint64_t count_pseudo_ensembles(int n, int k);

std::string to_string(PosetPoint p);
std::string to_string(const ExtendedPoint& p);
std::string to_string(const Interval& interval);

}  // namespace weylarr
