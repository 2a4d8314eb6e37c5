#include "weylarr/chamber.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylarr {

bool Chamber::contains(int i) const {
  return std::find(subset_.begin(), subset_.end(), i) != subset_.end();
}

IntVector Chamber::characteristic() const {
  IntVector s = IntVector::Constant(n_, -1);
  for (int a : subset_) s(a - 1) = 1;
  return s;
}

std::string Chamber::label() const {
  std::string out(static_cast<std::size_t>(n_), '-');
  for (int a : subset_) out[static_cast<std::size_t>(a - 1)] = '+';
  return out;
}

std::uint64_t Chamber::code() const {
  std::uint64_t c = 0;
  for (int a : subset_) c |= std::uint64_t{1} << (n_ - a);
  return c;
}

Chamber chamber_from_subset(int n, std::vector<int> subset) {
  for (int a : subset)
    if (a < 1 || a > n)
      throw std::domain_error("chamber: element " + std::to_string(a) + " outside [1, " +
                              std::to_string(n) + "]");
  std::sort(subset.begin(), subset.end(), std::greater<>());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return Chamber(n, std::move(subset));
}

Chamber chamber_from_code(int n, std::uint64_t code) {
  std::vector<int> subset;
  for (int i = 1; i <= n; ++i)
    if (code >> (n - i) & 1) subset.push_back(i);
  return chamber_from_subset(n, std::move(subset));
}

std::vector<Chamber> all_chambers(int n) {
  if (n < 0 || n > 62) throw std::out_of_range("all_chambers: n out of range");
  std::vector<Chamber> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code)
    out.push_back(chamber_from_code(n, code));
  return out;
}

// ---------------------------------------------------------------------------

SignTableau::SignTableau(int n) : n_(n), cells_(static_cast<std::size_t>(weight_count(n)), false) {
  if (n < 0) throw std::invalid_argument("tableau: negative rank");
}

std::string SignTableau::render() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += '\n';
    out.append(static_cast<std::size_t>(i - 1), ' ');
    for (int j = i; j <= n_; ++j) out += plus(i, j) ? '+' : '-';
  }
  return out;
}

SignTableau SignTableau::parse(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(' ') == std::string::npos) continue;
    rows.push_back(line);
  }
  const int n = static_cast<int>(rows.size());
  SignTableau t(n);
  for (int i = 1; i <= n; ++i) {
    const std::string& row = rows[static_cast<std::size_t>(i - 1)];
    const std::size_t first = row.find_first_not_of(' ');
    const std::string cells = row.substr(first);
    if (cells.size() != static_cast<std::size_t>(n - i + 1))
      throw std::invalid_argument("tableau: row " + std::to_string(i) + " must have " +
                                  std::to_string(n - i + 1) + " boxes");
    for (int j = i; j <= n; ++j) {
      const char c = cells[static_cast<std::size_t>(j - i)];
      if (c != '+' && c != '-')
        throw std::invalid_argument(std::string("tableau: unexpected character '") + c + "'");
      t.set(i, j, c == '+');
    }
  }
  return t;
}

SignTableau tableau_of(const Chamber& chamber) {
  const int n = chamber.n();
  SignTableau t(n);
  const auto& a = chamber.subset();
  for (int i = 1; i <= static_cast<int>(a.size()); ++i)
    for (int j = i; j <= n && j <= i - 1 + a[static_cast<std::size_t>(i - 1)]; ++j) t.set(i, j, true);
  return t;
}

TableauVerdict tableau_validate(const SignTableau& tableau) {
  const int n = tableau.n();
  TableauVerdict verdict;
  auto reject = [&](Box plus_box, Box minus_box, const char* where) {
    verdict.violation = std::make_pair(plus_box, minus_box);
    verdict.message = "box (" + std::to_string(plus_box.i) + "," + std::to_string(plus_box.j) +
                      ") is + but box (" + std::to_string(minus_box.i) + "," +
                      std::to_string(minus_box.j) + ") " + where + " it is -";
    return verdict;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (!tableau.plus(i, j)) continue;
      if (j > i && !tableau.plus(i, j - 1)) return reject({i, j}, {i, j - 1}, "left of");
      if (i > 1 && !tableau.plus(i - 1, j)) return reject({i, j}, {i - 1, j}, "above");
    }
  std::vector<int> subset;
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int j = i; j <= n; ++j) count += tableau.plus(i, j);
    if (count > 0) subset.push_back(count);
  }
  verdict.chamber = chamber_from_subset(n, subset);
  return verdict;
}

// ---------------------------------------------------------------------------

RayVector::RayVector(IntVector coordinates) : coordinates_(std::move(coordinates)) {
  const Eigen::Index n = coordinates_.size();
  Eigen::Index i = 0;
  while (i < n && coordinates_(i) == 1) ++i;
  while (i < n && coordinates_(i) == 0) ++i;
  while (i < n && coordinates_(i) == -1) ++i;
  if (i != n) throw std::domain_error("ray vector: entries are not of the form (1..1, 0..0, -1..-1)");
  if (n == 0 || (coordinates_.array() == 0).all())
    throw std::domain_error("ray vector: the zero vector is not a ray");
}

PosetPoint ray_index(const RayVector& ray) {
  const IntVector& c = ray.coordinates();
  return {static_cast<int>((c.array() == 1).count()), static_cast<int>((c.array() == -1).count())};
}

RayVector ray_from_index(int n, PosetPoint p) {
  if (!in_ambient(p, n, Ambient::without_origin))
    throw std::domain_error("ray index " + to_string(p) + " is not a point of E*_" + std::to_string(n));
  IntVector c = IntVector::Zero(n);
  c.head(p.a).setOnes();
  c.tail(p.b).setConstant(-1);
  return RayVector(std::move(c));
}

Chain chain_of(const Chamber& chamber) {
  const int n = chamber.n();
  std::vector<PosetPoint> points;
  int pi = 0;
  for (int level = 1; level <= n; ++level) {
    if (chamber.contains(n - level + 1)) ++pi;
    points.push_back({pi, level - pi});
  }
  return Chain(std::move(points));
}

std::vector<RayVector> extreme_rays(const Chamber& chamber) {
  const Chain chain = chain_of(chamber);
  std::vector<RayVector> out;
  for (const PosetPoint& p : chain.elements()) out.push_back(ray_from_index(chamber.n(), p));
  return out;
}

Chamber chamber_from_chain(int n, const Chain& c) {
  if (static_cast<int>(c.size()) != n)
    throw std::domain_error("chamber_from_chain: a chamber needs a chain of length n");
  std::vector<int> subset;
  PosetPoint previous = kOrigin;
  for (const PosetPoint& p : c.elements()) {
    if (!in_ambient(p, n, Ambient::without_origin) || p.level() != previous.level() + 1)
      throw std::domain_error("chamber_from_chain: chain is not maximal in E*_" + std::to_string(n));
    if (p.a > previous.a) subset.push_back(n - p.level() + 1);
    previous = p;
  }
  return chamber_from_subset(n, std::move(subset));
}

RationalVector interior_point(const Chamber& chamber) {
  RationalVector x = RationalVector::Zero(chamber.n());
  int weight = 1;
  for (const RayVector& e : extreme_rays(chamber)) {
    for (int i = 0; i < chamber.n(); ++i) x(i) += Rational(weight * e.coordinates()(i));
    ++weight;
  }
  return x;
}

SignCondition chamber_sign_condition(const Chamber& chamber) {
  const SignTableau t = tableau_of(chamber);
  SignCondition c(chamber.n());
  for (int i = 1; i <= chamber.n(); ++i)
    for (int j = i; j <= chamber.n(); ++j) c.set_weight(i, j, t.plus(i, j) ? 1 : -1);
  std::fill(c.roots.begin(), c.roots.end(), std::int8_t{1});
  return c;
}

PointClass classify_point(int n, const RationalVector& x) {
  if (x.size() != n)
    throw std::domain_error("classify_point: expected " + std::to_string(n) + " coordinates");
  for (int i = 0; i + 1 < n; ++i)
    if (x(i) < x(i + 1)) throw std::domain_error("classify_point: point is outside the Weyl chamber");
  PointClass out{std::nullopt, sign_condition_at(x)};

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> magnitude(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) magnitude[static_cast<std::size_t>(i)] = boost::multiprecision::abs(x(i));
  std::sort(order.begin(), order.end(), [&](int p, int q) {
    return magnitude[static_cast<std::size_t>(p)] < magnitude[static_cast<std::size_t>(q)];
  });
  for (int r = 0; r < n; ++r) {
    const Rational& m = magnitude[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])];
    if (m == 0 || (r > 0 && m == magnitude[static_cast<std::size_t>(order[static_cast<std::size_t>(r - 1)])]))
      return out;
  }
  std::vector<int> subset;
  for (int r = 0; r < n; ++r)
    if (x(order[static_cast<std::size_t>(r)]) > 0) subset.push_back(r + 1);
  out.chamber = chamber_from_subset(n, std::move(subset));
  return out;
}

}  // namespace weylarr
