#include "weylarr/counting.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylarr {

BivariatePolynomial::BivariatePolynomial(std::initializer_list<Term> terms) {
  for (const Term& term : terms) {
    grow(term.s, term.t);
    c_(term.s, term.t) += BigInt(term.coefficient);
  }
}

void BivariatePolynomial::grow(int i, int j) {
  if (i < 0 || j < 0) throw std::domain_error("polynomial: negative exponent");
  const Eigen::Index rows = std::max<Eigen::Index>(c_.rows(), i + 1);
  const Eigen::Index cols = std::max<Eigen::Index>(c_.cols(), j + 1);
  if (rows == c_.rows() && cols == c_.cols()) return;
  Matrix<BigInt> bigger = Matrix<BigInt>::Zero(rows, cols);
  bigger.topLeftCorner(c_.rows(), c_.cols()) = c_;
  c_ = std::move(bigger);
}

BigInt BivariatePolynomial::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i >= c_.rows() || j >= c_.cols()) return BigInt(0);
  return c_(i, j);
}

BivariatePolynomial operator*(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  BivariatePolynomial out;
  if (p.c_.size() == 0 || q.c_.size() == 0) return out;
  out.grow(p.degree_s() + q.degree_s(), p.degree_t() + q.degree_t());
  for (int a = 0; a <= p.degree_s(); ++a)
    for (int b = 0; b <= p.degree_t(); ++b) {
      if (p.c_(a, b) == 0) continue;
      for (int c = 0; c <= q.degree_s(); ++c)
        for (int d = 0; d <= q.degree_t(); ++d) out.c_(a + c, b + d) += p.c_(a, b) * q.c_(c, d);
    }
  return out;
}

bool operator==(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  const int ds = std::max(p.degree_s(), q.degree_s());
  const int dt = std::max(p.degree_t(), q.degree_t());
  for (int i = 0; i <= ds; ++i)
    for (int j = 0; j <= dt; ++j)
      if (p.coefficient(i, j) != q.coefficient(i, j)) return false;
  return true;
}

BiSeries::BiSeries(int max_n, int max_k) {
  if (max_n < 0 || max_k < 0) throw std::domain_error("series: negative truncation order");
  c_ = Matrix<BigInt>::Zero(max_n + 1, max_k + 1);
}

BigInt BiSeries::operator()(int n, int k) const {
  if (n < 0 || k < 0 || n > max_n() || k > max_k()) return BigInt(0);
  return c_(n, k);
}

std::vector<BigInt> BiSeries::row(int n) const {
  std::vector<BigInt> out;
  for (int k = 0; k <= max_k(); ++k) out.push_back((*this)(n, k));
  return out;
}

BiSeries expand_rational(const BivariatePolynomial& p, const BivariatePolynomial& q, int max_n, int max_k) {
  const BigInt q00 = q.coefficient(0, 0);
  if (q00 == 0) throw std::domain_error("expand_rational: denominator vanishes at the origin");
  BiSeries f(max_n, max_k);
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= max_k; ++k) {
      BigInt acc = p.coefficient(n, k);
      for (int i = 0; i <= std::min(n, q.degree_s()); ++i)
        for (int j = 0; j <= std::min(k, q.degree_t()); ++j) {
          if (i == 0 && j == 0) continue;
          const BigInt qij = q.coefficient(i, j);
          if (qij != 0) acc -= qij * f(n - i, k - j);
        }
      if (acc % q00 != 0)
        throw std::domain_error("expand_rational: coefficient of s^" + std::to_string(n) + " t^" +
                                std::to_string(k) + " is not an integer");
      f.at(n, k) = acc / q00;
    }
  return f;
}

BiSeries truncated_product(const BivariatePolynomial& p, const BiSeries& f) {
  BiSeries out(f.max_n(), f.max_k());
  for (int n = 0; n <= f.max_n(); ++n)
    for (int k = 0; k <= f.max_k(); ++k) {
      BigInt acc(0);
      for (int i = 0; i <= std::min(n, p.degree_s()); ++i)
        for (int j = 0; j <= std::min(k, p.degree_t()); ++j) {
          const BigInt pij = p.coefficient(i, j);
          if (pij != 0) acc += pij * f(n - i, k - j);
        }
      out.at(n, k) = acc;
    }
  return out;
}

BivariatePolynomial g_numerator() { return {{1, 0, 0}, {-1, 1, 0}}; }

BivariatePolynomial g_denominator() {
  return {{1, 0, 0}, {-2, 1, 0}, {1, 2, 0}, {-2, 1, 1}, {1, 2, 1}};
}

BivariatePolynomial h_numerator() {
  return BivariatePolynomial{{1, 0, 0}, {-1, 1, 0}} * BivariatePolynomial{{1, 0, 0}, {-1, 1, 1}, {1, 2, 1}};
}

BivariatePolynomial h_denominator() {
  return {{1, 0, 0},  {-2, 1, 0}, {1, 2, 0},  {-2, 1, 1}, {3, 2, 1},
          {-2, 3, 1}, {1, 2, 2},  {-2, 3, 2}, {1, 4, 2}};
}

// ---------------------------------------------------------------------------

namespace {

using Memo = std::map<std::pair<int, int>, BigInt>;

bool in_triangle(int n, int k) { return n >= 0 && k >= 0 && k <= n; }

}  // namespace

BigInt g_recurrence(int n, int k) {
  if (!in_triangle(n, k)) return BigInt(0);
  thread_local Memo memo;
  if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  BigInt value(k == 0 ? 1 : 0);
  for (int l = 1; l <= n - k + 1; ++l) value += BigInt(l + 1) * g_recurrence(n - l, k - 1);
  memo.emplace(std::make_pair(n, k), value);
  return value;
}

BigInt g_linear_recurrence(int n, int k) {
  if (!in_triangle(n, k)) return BigInt(0);
  if (n == 0) return BigInt(1);
  if (n == 1) return BigInt(k == 0 ? 1 : 2);
  thread_local Memo memo;
  if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  const BigInt value = 2 * g_linear_recurrence(n - 1, k) - g_linear_recurrence(n - 2, k) +
                       2 * g_linear_recurrence(n - 1, k - 1) - g_linear_recurrence(n - 2, k - 1);
  memo.emplace(std::make_pair(n, k), value);
  return value;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt out(1);
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BigInt g_closed_form(int n, int k) {
  if (!in_triangle(n, k)) return BigInt(0);
  BigInt sum(0);
  for (int i = 0; i <= k; ++i) {
    const BigInt term = (BigInt(1) << i) * binomial(k, i) * binomial(n + i, 2 * k);
    sum += (k - i) % 2 == 0 ? term : BigInt(-term);
  }
  return sum;
}

BigInt g_near_top(int n, int k) {
  if (!in_triangle(n, k)) return BigInt(0);
  Rational sum(0);
  const int top = std::min(k, (n + 1) / 2);
  for (int i = 0; i <= top; ++i) {
    const int e = n - 2 * i;
    const Rational power = e >= 0 ? Rational(BigInt(1) << e) : Rational(BigInt(1), BigInt(1) << -e);
    const Rational term =
        power * Rational(binomial(n - i, k - i) * (binomial(n - i + 1, i) + binomial(n - i, i - 1)));
    sum += i % 2 == 0 ? term : Rational(-term);
  }
  if (boost::multiprecision::denominator(sum) != 1)
    throw std::logic_error("g_near_top: non-integral value");
  return boost::multiprecision::numerator(sum);
}

std::vector<BigInt> g_polynomial(int n) {
  if (n < 0) throw std::domain_error("g_polynomial: n must be non-negative");
  std::vector<BigInt> previous{BigInt(1)};
  if (n == 0) return previous;
  std::vector<BigInt> current{BigInt(1), BigInt(2)};
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, BigInt(0));
    for (std::size_t k = 0; k < current.size(); ++k) {
      next[k] += 2 * current[k];
      next[k + 1] += 2 * current[k];
    }
    for (std::size_t k = 0; k < previous.size(); ++k) {
      next[k] -= previous[k];
      next[k + 1] -= previous[k];
    }
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

BigInt rho(int n, int k) {
  if (n < -1 || k < -1 || k > n) return BigInt(0);
  thread_local Memo memo;
  if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  BigInt value(k == -1 ? 1 : 0);
  for (int l = 0; l <= n; ++l) value += BigInt(l + 1) * h_recurrence(n - l, k);
  memo.emplace(std::make_pair(n, k), value);
  return value;
}

BigInt h_recurrence(int n, int k) {
  if (!in_triangle(n, k)) return BigInt(0);
  thread_local Memo memo;
  if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  BigInt value(n == k ? 1 : 0);
  for (int l = 0; l <= n - 1; ++l) value += BigInt(l + 1) * rho(n - l - 2, k - l - 1);
  memo.emplace(std::make_pair(n, k), value);
  return value;
}

BigInt h_linear_recurrence(int n, int k) {
  if (!in_triangle(n, k)) return BigInt(0);
  if (n <= 3) {
    static const BiSeries base = expand_rational(h_numerator(), h_denominator(), 3, 3);
    return base(n, k);
  }
  thread_local Memo memo;
  if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  auto h = [](int a, int b) { return h_linear_recurrence(a, b); };
  const BigInt value = 2 * h(n - 1, k) - h(n - 2, k) + 2 * h(n - 1, k - 1) - 3 * h(n - 2, k - 1) +
                       2 * h(n - 3, k - 1) - h(n - 2, k - 2) + 2 * h(n - 3, k - 2) - h(n - 4, k - 2);
  memo.emplace(std::make_pair(n, k), value);
  return value;
}

// ---------------------------------------------------------------------------

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::recurrence: return "recurrence";
    case Provenance::rational_expansion: return "rational-expansion";
    case Provenance::closed_form: return "closed-form";
    case Provenance::enumeration: return "enumeration";
    case Provenance::oracle: return "oracle";
    case Provenance::reference: return "reference";
  }
  return "unknown";
}

std::string to_string(CountKind kind) { return kind == CountKind::faces ? "faces" : "flats"; }

BigInt CountTable::get(int n, int k) const {
  auto it = values_.find({n, k});
  return it == values_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> CountTable::row(int n) const {
  std::vector<BigInt> out;
  for (int k = 0; k <= n; ++k) out.push_back(get(n, k));
  return out;
}

std::string CountTable::to_csv() const {
  std::string out;
  for (const auto& [key, value] : values_)
    out += to_string(kind_) + "," + std::to_string(key.first) + "," + std::to_string(key.second) + "," +
           value.str() + "," + to_string(provenance_) + "\n";
  return out;
}

std::string CountTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, value] : values_)
    rows.push_back({{"kind", to_string(kind_)},
                    {"n", key.first},
                    {"k", key.second},
                    {"value", value.str()},
                    {"provenance", to_string(provenance_)}});
  return rows.dump();
}

}  // namespace weylarr
