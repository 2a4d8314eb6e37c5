#include "cli/commands.hpp"

#include "weylarr/chamber.hpp"
#include "weylarr/incidence.hpp"
#include "weylarr/oracle.hpp"
#include "weylarr/poset.hpp"
#include "weylarr/reference.hpp"
#include "weylarr/weight_system.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#ifndef WEYLARR_DEFAULT_ERRATA
#define WEYLARR_DEFAULT_ERRATA "data/errata.json"
#endif

namespace weylarr::cli {

using nlohmann::json;
using weylarr::to_string;

std::string to_string(Method method) {
  switch (method) {
    case Method::enumerate: return "enumerate";
    case Method::recurrence: return "recurrence";
    case Method::series: return "series";
    case Method::closed_form: return "closed-form";
    case Method::oracle: return "oracle";
    case Method::all: return "all";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string row_text(const std::vector<BigInt>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].str();
  return s + "]";
}

json row_json(const std::vector<BigInt>& values) {
  json a = json::array();
  for (const BigInt& v : values) a.push_back(v.str());
  return a;
}

template <typename T>
std::vector<BigInt> to_big(const std::vector<T>& values) {
  std::vector<BigInt> out;
  for (const T& v : values) out.emplace_back(v);
  return out;
}

json point_json(PosetPoint p) { return json::array({p.a, p.b}); }

json vector_json(const IntVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

OracleLimits limits_of(const RunConfig& config) {
  OracleLimits limits;
  limits.max_cells_n = config.oracle_cap_cells;
  limits.max_flats_n = config.oracle_cap_flats;
  limits.threads = config.threads;
  return limits;
}

// ---------------------------------------------------------------------------
// count

struct MethodRow {
  std::string method;
  Provenance provenance;
  std::vector<BigInt> values;  // k = 0..n
  double ms = 0;
};

struct Skip {
  std::string method;
  std::string reason;
};

using RowFn = std::function<std::vector<BigInt>()>;

struct Candidate {
  std::string name;
  Method group;
  Provenance provenance;
  std::optional<std::string> unavailable;
  RowFn compute;
};

std::vector<BigInt> row_by(int n, const std::function<BigInt(int, int)>& f) {
  std::vector<BigInt> row;
  for (int k = 0; k <= n; ++k) row.push_back(f(n, k));
  return row;
}

std::vector<Candidate> count_candidates(const RunConfig& config) {
  const int n = config.n;
  const OracleLimits limits = limits_of(config);
  std::vector<Candidate> c;
  if (config.kind == CountKind::faces) {
    c.push_back({"recurrence", Method::recurrence, Provenance::recurrence, std::nullopt,
                 [n] { return row_by(n, g_recurrence); }});
    c.push_back({"linear-recurrence", Method::recurrence, Provenance::recurrence, std::nullopt,
                 [n] { return row_by(n, g_linear_recurrence); }});
    c.push_back({"series", Method::series, Provenance::rational_expansion, std::nullopt,
                 [n] { return expand_rational(g_numerator(), g_denominator(), n, n).row(n); }});
    c.push_back({"closed-form", Method::closed_form, Provenance::closed_form, std::nullopt,
                 [n] { return row_by(n, g_closed_form); }});
    c.push_back({"closed-form-top", Method::closed_form, Provenance::closed_form, std::nullopt,
                 [n] { return row_by(n, [](int m, int k) { return g_near_top(m, m - k); }); }});
    c.push_back({"enumerate", Method::enumerate, Provenance::enumeration,
                 n > kCountEnumerateMax ? std::optional<std::string>("chain enumeration is limited to n <= " +
                                                                     std::to_string(kCountEnumerateMax))
                                        : std::nullopt,
                 [n] { return row_by(n, [](int m, int k) { return BigInt(count_chains(m, k)); }); }});
    c.push_back({"oracle", Method::oracle, Provenance::oracle,
                 n > limits.max_cells_n ? std::optional<std::string>(
                                              "cell enumeration capped at n <= " + std::to_string(limits.max_cells_n) +
                                              "; search space " + search_space_cells(n))
                                        : std::nullopt,
                 [n, limits] { return to_big(enumerate_cells(n, limits).counts); }});
  } else {
    c.push_back({"recurrence", Method::recurrence, Provenance::recurrence, std::nullopt,
                 [n] { return row_by(n, h_recurrence); }});
    c.push_back({"linear-recurrence", Method::recurrence, Provenance::recurrence, std::nullopt,
                 [n] { return row_by(n, h_linear_recurrence); }});
    c.push_back({"series", Method::series, Provenance::rational_expansion, std::nullopt,
                 [n] { return expand_rational(h_numerator(), h_denominator(), n, n).row(n); }});
    c.push_back({"closed-form", Method::closed_form, Provenance::closed_form,
                 std::string("no closed form is known for flat counts"), {}});
    c.push_back({"enumerate", Method::enumerate, Provenance::enumeration,
                 n > kCountEnumerateMax ? std::optional<std::string>("ensemble enumeration is limited to n <= " +
                                                                     std::to_string(kCountEnumerateMax))
                                        : std::nullopt,
                 [n] { return row_by(n, [](int m, int k) { return BigInt(count_ensembles(m, k)); }); }});
    c.push_back({"oracle", Method::oracle, Provenance::oracle,
                 n > limits.max_flats_n ? std::optional<std::string>(
                                              "flat enumeration capped at n <= " + std::to_string(limits.max_flats_n) +
                                              "; search space " + search_space_flats(n))
                                        : std::nullopt,
                 [n, limits] { return to_big(enumerate_flats_geometric(n, limits).counts); }});
  }
  return c;
}

}  // namespace

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.n < 0 || config.n > kCountMax)
    throw UsageError("-n must lie in [0, " + std::to_string(kCountMax) + "]");
  if (config.k && (*config.k < 0 || *config.k > config.n)) throw UsageError("-k must lie in [0, n]");
  const Format format = config.format.value_or(Format::text);
  if (format == Format::dot) throw UsageError("count supports --format text, json or csv");

  std::vector<MethodRow> rows;
  std::vector<Skip> skipped;
  for (const Candidate& c : count_candidates(config)) {
    if (config.method != Method::all && config.method != c.group) continue;
    if (c.unavailable) {
      if (config.method != Method::all) throw UsageError("method " + c.name + " refused: " + *c.unavailable);
      skipped.push_back({c.name, *c.unavailable});
      continue;
    }
    const Clock::time_point start = Clock::now();
    MethodRow row{c.name, c.provenance, c.compute(), 0};
    row.ms = elapsed_ms(start);
    if (config.k) row.values = {row.values[static_cast<std::size_t>(*config.k)]};
    rows.push_back(std::move(row));
  }

  const int k0 = config.k.value_or(0);
  std::vector<std::string> diffs;
  for (std::size_t r = 1; r < rows.size(); ++r)
    for (std::size_t i = 0; i < rows[0].values.size(); ++i)
      if (rows[r].values[i] != rows[0].values[i])
        diffs.push_back("k=" + std::to_string(k0 + static_cast<int>(i)) + ": " + rows[0].method + "=" +
                        rows[0].values[i].str() + " " + rows[r].method + "=" + rows[r].values[i].str());

  std::ostringstream buf;
  const std::string kind = to_string(config.kind);
  if (format == Format::text) {
    buf << kind << " n=" << config.n;
    if (config.k) buf << " k=" << *config.k;
    buf << "\n";
    std::size_t width = 0;
    for (const MethodRow& r : rows) width = std::max(width, r.method.size());
    for (const MethodRow& r : rows) {
      buf << r.method << std::string(width - r.method.size() + 2, ' ') << row_text(r.values);
      if (config.timing) buf << "  (" << r.ms << " ms)";
      buf << "\n";
    }
    for (const Skip& s : skipped) buf << "skipped " << s.method << ": " << s.reason << "\n";
    if (rows.size() > 1) buf << (diffs.empty() ? "agreement: " + std::to_string(rows.size()) + " methods agree\n"
                                               : "disagreement:\n");
    for (const std::string& d : diffs) buf << "  " << d << "\n";
  } else if (format == Format::json) {
    json doc = {{"kind", kind}, {"n", config.n}, {"k", config.k ? json(*config.k) : json(nullptr)}};
    doc["rows"] = json::array();
    for (const MethodRow& r : rows) {
      json row = {{"method", r.method}, {"provenance", to_string(r.provenance)}, {"values", row_json(r.values)}};
      if (config.timing) row["elapsed_ms"] = r.ms;
      doc["rows"].push_back(row);
    }
    doc["skipped"] = json::array();
    for (const Skip& s : skipped) doc["skipped"].push_back({{"method", s.method}, {"reason", s.reason}});
    doc["agree"] = diffs.empty();
    doc["disagreements"] = diffs;
    buf << doc.dump(2) << "\n";
  } else {
    buf << "kind,n,k,value,method,provenance\n";
    for (const MethodRow& r : rows)
      for (std::size_t i = 0; i < r.values.size(); ++i)
        buf << kind << "," << config.n << "," << k0 + static_cast<int>(i) << "," << r.values[i].str() << ","
            << r.method << "," << to_string(r.provenance) << "\n";
  }
  out << buf.str();
  if (!diffs.empty()) {
    err << "methods disagree:\n";
    for (const std::string& d : diffs) err << "  " << d << "\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// enumerate

namespace {

json chamber_record(const Chamber& ch) {
  json tableau = json::array();
  std::istringstream lines(tableau_of(ch).render());
  for (std::string line; std::getline(lines, line);) tableau.push_back(line);
  json rays = json::array();
  for (const RayVector& r : extreme_rays(ch)) rays.push_back(vector_json(r.coordinates()));
  json chain = json::array();
  const Chain maximal = chain_of(ch);
  for (PosetPoint p : maximal.elements()) chain.push_back(point_json(p));
  return {{"n", ch.n()}, {"subset", ch.subset()}, {"label", ch.label()}, {"tableau", tableau},
          {"rays", rays}, {"chain", chain}};
}

json face_record(int n, const Chain& chain) {
  json points = json::array();
  json rays = json::array();
  for (PosetPoint p : chain.elements()) {
    points.push_back(point_json(p));
    rays.push_back(vector_json(ray_from_index(n, p).coordinates()));
  }
  return {{"n", n}, {"k", chain.size()}, {"chain", points}, {"rays", rays}};
}

json flat_record(const Ensemble& e) {
  json intervals = json::array();
  for (const Interval& iv : e.intervals())
    intervals.push_back({{"lo", point_json(iv.lo())},
                         {"hi", iv.hi().is_infinite() ? json("inf") : point_json(iv.hi().point())}});
  json rays = json::array();
  for (PosetPoint p : e.realize()) rays.push_back(point_json(p));
  json generators = json::array();
  const Flat flat = flat_from_ensemble(e);
  for (const WeightIndex& w : flat.generators()) generators.push_back(json::array({w.i, w.j}));
  return {{"n", e.n()}, {"k", e.rank()}, {"intervals", intervals}, {"rays", rays}, {"generators", generators}};
}

}  // namespace

int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream&) {
  const int n = config.n;
  if (n < 0 || n > 62) throw UsageError("-n must lie in [0, 62]");
  if (config.k && (*config.k < 0 || *config.k > n)) throw UsageError("-k must lie in [0, n]");
  if (config.format && *config.format != Format::json) throw UsageError("enumerate writes JSON lines only");

  int k_lo = 0, k_hi = n;
  if (config.k) k_lo = k_hi = *config.k;
  BigInt estimate(0);
  if (config.target == "chambers") {
    if (config.k) throw UsageError("enumerate chambers takes no -k");
    estimate = BigInt(1) << n;
  } else {
    for (int k = k_lo; k <= k_hi; ++k) estimate += config.target == "faces" ? g_recurrence(n, k) : h_recurrence(n, k);
  }
  if (estimate > config.max_records)
    throw UsageError("refused: " + estimate.str() + " " + config.target + " records exceed --max-records " +
                     std::to_string(config.max_records));

  if (config.target == "chambers") {
    for (const Chamber& ch : all_chambers(n)) out << chamber_record(ch).dump() << "\n";
  } else if (config.target == "faces") {
    for (int k = k_lo; k <= k_hi; ++k)
      for (const Chain& c : enumerate_chains(n, k)) out << face_record(n, c).dump() << "\n";
  } else {
    for (int k = k_lo; k <= k_hi; ++k)
      for (const Ensemble& e : enumerate_ensembles(n, k)) out << flat_record(e).dump() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// graph

int cmd_graph(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.n < 1 || config.n > kGraphMax) throw UsageError("-n must lie in [1, " + std::to_string(kGraphMax) + "]");
  if (config.format && *config.format != Format::dot) throw UsageError("graph writes DOT only");
  out << to_dot(chamber_adjacency_graph(config.n, config.threads));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

namespace {

struct Flag {
  const Erratum* erratum;
  std::vector<std::pair<int, int>> cells;
  std::vector<std::string> computed;
};

class Report {
 public:
  Report(const Errata& errata, bool timing) : errata_(errata), timing_(timing) {}

  // Runs one named check. The body returns its detail and adds mismatches
  // through mismatch().
  void check(const std::string& name, const std::function<json()>& body) {
    current_failures_ = 0;
    current_flags_ = 0;
    const Clock::time_point start = Clock::now();
    json entry = {{"name", name}};
    try {
      entry["detail"] = body();
    } catch (const std::exception& e) {
      ++current_failures_;
      entry["detail"] = {{"exception", e.what()}};
    }
    entry["status"] = current_failures_ ? "fail" : current_flags_ ? "flagged" : "pass";
    if (current_flags_) entry["flagged"] = current_flags_;
    if (timing_) entry["elapsed_ms"] = elapsed_ms(start);
    failures_ += current_failures_;
    checks_.push_back(entry);
  }

  // A printed value differs from the computed one; flagged iff the errata
  // file records exactly this correction.
  json mismatch(const std::string& table, int n, int k, const std::string& printed, const std::string& computed) {
    const Erratum* e = errata_.find(table, n, k);
    json m = {{"table", table}, {"n", n}, {"k", k}, {"printed", printed}, {"computed", computed}};
    if (e && (e->n == -1 || e->arbitrated == computed)) {
      ++current_flags_;
      m["erratum"] = e->id;
      Flag& f = flags_[e->id];
      f.erratum = e;
      f.cells.emplace_back(n, k);
      f.computed.push_back(computed);
    } else {
      ++current_failures_;
      m["erratum"] = nullptr;
    }
    return m;
  }

  void fail() { ++current_failures_; }
  bool passed() const { return failures_ == 0; }

  json to_json() const {
    json flags = json::array();
    for (const auto& [id, f] : flags_) {
      json cells = json::array();
      for (std::size_t i = 0; i < f.cells.size(); ++i)
        cells.push_back({{"n", f.cells[i].first}, {"k", f.cells[i].second}, {"computed", f.computed[i]}});
      flags.push_back({{"id", id},
                       {"table", f.erratum->table},
                       {"printed", f.erratum->printed},
                       {"arbitrated", f.erratum->arbitrated},
                       {"arbiter", f.erratum->arbiter},
                       {"note", f.erratum->note},
                       {"cells", cells}});
    }
    return {{"result", passed() ? "pass" : "fail"}, {"errata_version", errata_.version}, {"checks", checks_},
            {"known_typo_flags", flags}};
  }

  const json& checks() const { return checks_; }

 private:
  const Errata& errata_;
  bool timing_;
  json checks_ = json::array();
  std::map<std::string, Flag> flags_;
  int failures_ = 0;
  int current_failures_ = 0;
  int current_flags_ = 0;
};

constexpr int kTableN = 10;

json compare_printed(Report& report, const std::string& table, const std::vector<std::vector<long>>& printed,
                     const std::function<BigInt(int, int)>& truth) {
  json mismatches = json::array();
  int compared = 0;
  for (int n = 0; n < static_cast<int>(printed.size()); ++n)
    for (int k = 0; k < static_cast<int>(printed[static_cast<std::size_t>(n)].size()); ++k) {
      ++compared;
      const BigInt value = truth(n, k);
      const long p = printed[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      if (value != p) mismatches.push_back(report.mismatch(table, n, k, std::to_string(p), value.str()));
    }
  return {{"compared", compared}, {"mismatches", mismatches}};
}

json method_agreement(Report& report, const std::map<std::string, std::function<BigInt(int, int)>>& methods,
                      const std::map<std::string, int>& max_n, const std::string& reference_name) {
  json disagreements = json::array();
  const auto& truth = methods.at(reference_name);
  json used = json::object();
  for (const auto& [name, f] : methods) {
    const int top = max_n.count(name) ? max_n.at(name) : kTableN;
    used[name] = top;
    for (int n = 0; n <= top; ++n)
      for (int k = 0; k <= n; ++k) {
        const BigInt a = truth(n, k);
        const BigInt b = f(n, k);
        if (a != b) {
          report.fail();
          disagreements.push_back({{"method", name}, {"n", n}, {"k", k}, {"value", b.str()}, {"expected", a.str()}});
        }
      }
  }
  return {{"methods_max_n", used}, {"disagreements", disagreements}};
}

std::vector<BigInt> g_row(int n) { return row_by(n, g_recurrence); }
std::vector<BigInt> h_row(int n) { return row_by(n, h_recurrence); }

void table_checks(Report& report) {
  report.check("g-table", [&] { return compare_printed(report, "g-table", reference::g_table(), g_recurrence); });
  report.check("g-polynomials",
               [&] { return compare_printed(report, "g-polynomials", reference::g_polynomials(), g_recurrence); });
  report.check("h-table", [&] { return compare_printed(report, "h-table", reference::h_table(), h_recurrence); });
  report.check("h-series", [&] { return compare_printed(report, "h-series", reference::h_series(), h_recurrence); });

  report.check("g-formulas", [&] {
    json mismatches = json::array();
    for (int k = 0; k <= 4; ++k)
      for (int n = k; n <= kTableN; ++n) {
        const Rational small = *reference::g_small_k(n, k);
        if (small != Rational(g_recurrence(n, k)))
          mismatches.push_back(report.mismatch("g-small-k", n, k, to_string(small), g_recurrence(n, k).str()));
        const Rational top = *reference::g_near_top(n, k);
        if (top != Rational(g_recurrence(n, n - k)))
          mismatches.push_back(report.mismatch("g-near-top", n, k, to_string(top), g_recurrence(n, n - k).str()));
      }
    return json{{"mismatches", mismatches}};
  });

  report.check("face-methods", [&] {
    const BiSeries series = expand_rational(g_numerator(), g_denominator(), kTableN, kTableN);
    return method_agreement(
        report,
        {{"recurrence", g_recurrence},
         {"linear-recurrence", g_linear_recurrence},
         {"series", [&](int n, int k) { return series(n, k); }},
         {"closed-form", g_closed_form},
         {"closed-form-top", [](int n, int k) { return g_near_top(n, n - k); }},
         {"polynomial", [](int n, int k) { return g_polynomial(n)[static_cast<std::size_t>(k)]; }},
         {"enumerate", [](int n, int k) { return BigInt(count_chains(n, k)); }}},
        {{"enumerate", 8}}, "recurrence");
  });

  report.check("flat-methods", [&] {
    const BiSeries series = expand_rational(h_numerator(), h_denominator(), kTableN, kTableN);
    return method_agreement(report,
                            {{"recurrence", h_recurrence},
                             {"linear-recurrence", h_linear_recurrence},
                             {"series", [&](int n, int k) { return series(n, k); }},
                             {"enumerate", [](int n, int k) { return BigInt(count_ensembles(n, k)); }}},
                            {{"enumerate", 6}}, "recurrence");
  });

  report.check("convolution-identities", [&] {
    const int order = 30;
    int bad = 0;
    const BiSeries g = expand_rational(g_numerator(), g_denominator(), order, order);
    const BiSeries h = expand_rational(h_numerator(), h_denominator(), order, order);
    const BiSeries qg = truncated_product(g_denominator(), g);
    const BiSeries qh = truncated_product(h_denominator(), h);
    for (int i = 0; i <= order; ++i)
      for (int j = 0; j <= order; ++j) {
        if (qg(i, j) != g_numerator().coefficient(i, j)) ++bad;
        if (qh(i, j) != h_numerator().coefficient(i, j)) ++bad;
      }
    if (bad) report.fail();
    return json{{"order", order}, {"mismatched_coefficients", bad}};
  });

  report.check("chambers", [&] {
    json counts = json::array();
    for (int n = 1; n <= 12; ++n) {
      std::uint64_t valid = 0;
      const std::vector<Chamber> chambers = all_chambers(n);
      for (const Chamber& ch : chambers) {
        const TableauVerdict v = tableau_validate(tableau_of(ch));
        if (v.chamber && *v.chamber == ch) ++valid;
        if (!(chamber_from_chain(n, chain_of(ch)) == ch)) report.fail();
      }
      if (valid != (std::uint64_t{1} << n) || chambers.size() != valid) report.fail();
      counts.push_back(valid);
    }
    return json{{"valid_tableaux", counts}};
  });

  report.check("hyperplane-rays", [&] {
    int pairs = 0;
    for (int n = 1; n <= 8; ++n) {
      for (const WeightIndex& w : all_weights(n)) {
        std::vector<PosetPoint> zeros;
        for (PosetPoint p : poset_points(n, Ambient::without_origin))
          if (weight_on_ray(n, w, p) == 0) zeros.push_back(p);
        if (hyperplane_rays(n, w).realize() != zeros) report.fail();
      }
      for (PosetPoint b : poset_points(n, Ambient::with_origin)) {
        std::vector<ExtendedPoint> tops{ExtendedPoint::infinity()};
        for (PosetPoint a : poset_points(n, Ambient::with_origin))
          if (leq(b + kDiagonalStep, a)) tops.emplace_back(a);
        for (const ExtendedPoint& a : tops) {
          if (a.is_infinite() && b.level() >= n) continue;
          flat_from_two_point_data(n, b, a);  // throws if the generators miss the target
          ++pairs;
        }
      }
    }
    return json{{"max_n", 8}, {"two_point_pairs", pairs}};
  });
}

void oracle_checks(Report& report, const RunConfig& config, const Errata& errata) {
  const OracleLimits limits = limits_of(config);
  int lo_cells = 1, hi_cells = limits.max_cells_n, lo_flats = 1, hi_flats = limits.max_flats_n;
  if (config.verify_n) {
    lo_cells = hi_cells = lo_flats = hi_flats = *config.verify_n;
    if (*config.verify_n > limits.max_cells_n)
      throw UsageError("oracle cell enumeration refused for n = " + std::to_string(*config.verify_n) + ": search space " +
                       search_space_cells(*config.verify_n));
    if (*config.verify_n > limits.max_flats_n) hi_flats = lo_flats - 1;
  }

  report.check("oracle-cells", [&] {
    json rows = json::array();
    for (int n = lo_cells; n <= hi_cells; ++n) {
      const CellEnumeration cells = enumerate_cells(n, limits);
      const std::vector<BigInt> oracle = to_big(cells.counts);
      const std::vector<BigInt> expected = g_row(n);
      json row = {{"n", n}, {"oracle", row_json(oracle)}, {"recurrence", row_json(expected)},
                  {"lp_solves", cells.stats.lp_solves}};
      if (oracle != expected) report.fail();
      for (const ConeCell& c : cells.cells)
        if (!(sign_condition_at(c.witness) == to_sign_condition(n, c))) report.fail();
      // Printed rows that disagree with the geometry are reported as they stand.
      if (n < static_cast<int>(reference::g_table().size())) {
        const std::vector<BigInt> printed = to_big(reference::g_table()[static_cast<std::size_t>(n)]);
        if (printed != oracle) {
          row["printed"] = row_json(printed);
          json ids = json::array();
          for (int k = 0; k <= n; ++k)
            if (const Erratum* e = errata.find("g-table", n, k)) ids.push_back(e->id);
          row["errata"] = ids;
        }
      }
      rows.push_back(row);
    }
    return rows;
  });

  if (lo_flats <= hi_flats)
    report.check("oracle-flats", [&] {
      json rows = json::array();
      for (int n = lo_flats; n <= hi_flats; ++n) {
        const FlatEnumeration flats = enumerate_flats_geometric(n, limits);
        const std::vector<BigInt> oracle = to_big(flats.counts);
        if (oracle != h_row(n)) report.fail();
        rows.push_back({{"n", n}, {"oracle", row_json(oracle)}, {"recurrence", row_json(h_row(n))},
                        {"lp_solves", flats.stats.lp_solves}});
      }
      return rows;
    });

  report.check("oracle-rays", [&] {
    json rows = json::array();
    for (int n = lo_cells; n <= std::min(hi_cells, 4); ++n) {
      std::vector<IntVector> expected;
      for (PosetPoint p : poset_points(n, Ambient::without_origin)) expected.push_back(ray_from_index(n, p).coordinates());
      std::vector<IntVector> found = rays_geometric(n, limits);
      std::size_t matched = 0;
      for (const IntVector& v : found)
        for (const IntVector& e : expected)
          if (v == e) ++matched;
      if (matched != expected.size() || found.size() != expected.size()) report.fail();
      rows.push_back({{"n", n}, {"rays", found.size()}, {"poset_points", expected.size()}});
    }
    return rows;
  });

  report.check("oracle-adjacency", [&] {
    json rows = json::array();
    for (int n = lo_cells; n <= std::min(hi_cells, 3); ++n) {
      const ChamberGraph graph = chamber_adjacency_graph(n, config.threads);
      std::vector<std::pair<std::uint64_t, std::uint64_t>> expected;
      for (auto [u, v] : graph.edges) {
        const std::uint64_t a = graph.vertices[u].code(), b = graph.vertices[v].code();
        expected.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(expected.begin(), expected.end());
      const auto found = geometric_adjacency(n, limits);
      if (found != expected) report.fail();
      rows.push_back({{"n", n}, {"edges", found.size()}, {"chain_graph_edges", expected.size()}});
    }
    return rows;
  });

  if (lo_cells <= 2 && 2 <= hi_cells && 2 <= limits.max_flats_n)
    report.check("gl2-picture", [&] {
      const CellEnumeration cells = enumerate_cells(2, limits);
      const FlatEnumeration flats = enumerate_flats_geometric(2, limits);
      const ChamberGraph graph = chamber_adjacency_graph(2, config.threads);
      std::vector<int> degree(graph.vertices.size(), 0);
      for (auto [u, v] : graph.edges) ++degree[u], ++degree[v];
      int ends = 0;
      for (int d : degree) ends += d == 1;
      const bool ok = cells.counts == std::vector<std::uint64_t>{1, 5, 4} &&
                      flats.counts == std::vector<std::uint64_t>{1, 3, 1} && graph.vertices.size() == 4 &&
                      graph.edges.size() == 3 && ends == 2;
      if (!ok) report.fail();
      return json{{"cells", cells.counts}, {"flats", flats.counts}, {"graph_nodes", graph.vertices.size()},
                  {"graph_edges", graph.edges.size()}};
    });
}

void non_simply_laced_checks(Report& report, const RunConfig& config) {
  const int rank = config.verify_n.value_or(3);
  if (rank < 2) throw UsageError("--non-simply-laced needs -n >= 2");
  report.check("proportionality-certificates", [&] {
    json certs = json::array();
    for (WeightSystemTag tag : proportional_tags()) {
      const WeightSystem s = make_weight_system(tag, rank);
      const ProportionalityCertificate cert = check_weights_proportional_to_roots(s);
      if (!cert.proportional) report.fail();
      json entries = json::array();
      for (const ProportionalityEntry& e : cert.entries) {
        json weight = json::array();
        for (Eigen::Index i = 0; i < s.weights[e.weight].size(); ++i) weight.push_back(to_string(s.weights[e.weight](i)));
        json root = nullptr;
        if (e.root) {
          root = json::array();
          for (Eigen::Index i = 0; i < s.roots[*e.root].size(); ++i) root.push_back(to_string(s.roots[*e.root](i)));
        }
        entries.push_back({{"weight", weight}, {"root", root}, {"multiplier", to_string(e.multiplier)}});
      }
      certs.push_back({{"system", s.name}, {"proportional", cert.proportional}, {"entries", entries}});
    }
    const WeightSystem gl = make_weight_system(WeightSystemTag::gl_vector_wedge2, rank);
    const ProportionalityCertificate contrast = check_weights_proportional_to_roots(gl);
    if (contrast.proportional) report.fail();
    return json{{"rank", rank}, {"certificates", certs}, {"contrast", {{"system", gl.name}, {"proportional", false}}}};
  });

  report.check("simplex-face-counts", [&] {
    json rows = json::array();
    std::vector<WeightSystem> systems = {make_weight_system(WeightSystemTag::so_odd_vector, 2),
                                         make_weight_system(WeightSystemTag::sp_vector_wedge2_0, 2)};
    for (WeightSystemTag tag : proportional_tags()) systems.push_back(make_weight_system(tag, rank));
    for (const WeightSystem& s : systems) {
      const std::vector<std::uint64_t> counts = geometric_face_counts(s, config.threads);
      const std::vector<std::uint64_t> expected = simplex_counts(s.rank);
      if (counts != expected) report.fail();
      rows.push_back({{"system", s.name}, {"faces", counts}, {"simplex", expected}});
    }
    return rows;
  });
}

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Format format = config.format.value_or(Format::json);
  if (format != Format::json && format != Format::text) throw UsageError("verify supports --format json or text");
  if (config.verify_n && *config.verify_n < 1) throw UsageError("-n must be positive");

  Errata errata;
  try {
    errata = load_errata(config.errata_path.empty() ? WEYLARR_DEFAULT_ERRATA : config.errata_path);
  } catch (const std::exception& e) {
    err << "cannot load errata: " << e.what() << "\n";
    return kExitIo;
  }

  Report report(errata, config.timing);
  const bool everything = !config.oracle && !config.non_simply_laced;
  if (everything) table_checks(report);
  if (everything || config.oracle) oracle_checks(report, config, errata);
  if (everything || config.non_simply_laced) non_simply_laced_checks(report, config);

  const json doc = report.to_json();
  if (format == Format::json) {
    out << doc.dump(2) << "\n";
  } else {
    for (const json& c : report.checks()) {
      std::string status = c["status"].get<std::string>();
      for (char& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      out << status << " " << c["name"].get<std::string>();
      if (c.contains("flagged")) out << " (" << c["flagged"].get<int>() << " known-typo cells)";
      out << "\n";
    }
    for (const json& f : doc["known_typo_flags"])
      out << "flag " << f["id"].get<std::string>() << ": printed " << f["printed"].get<std::string>() << ", arbitrated "
          << f["arbitrated"].get<std::string>() << "\n";
    out << "result: " << doc["result"].get<std::string>() << "\n";
  }
  return report.passed() ? kExitOk : kExitDisagreement;
}

// ---------------------------------------------------------------------------
// command line

namespace {

const std::map<std::string, Method> kMethods = {{"enumerate", Method::enumerate},   {"recurrence", Method::recurrence},
                                                {"series", Method::series},         {"closed-form", Method::closed_form},
                                                {"oracle", Method::oracle},         {"all", Method::all}};
const std::map<std::string, Format> kFormats = {
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}, {"dot", Format::dot}};

void add_common(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--format", config.format, "Output format: text, json, csv or dot")
      ->transform(CLI::CheckedTransformer(kFormats))
      ->option_text("FORMAT (Env:WEYLARR_FORMAT)")
      ->envname("WEYLARR_FORMAT");
  cmd->add_option("--out", config.out, "Write to this file instead of standard output")->envname("WEYLARR_OUT");
  cmd->add_option("--threads", config.threads, "Worker threads for the oracle and the chamber graph")
      ->check(CLI::Range(1u, 256u))
      ->envname("WEYLARR_THREADS");
  cmd->add_option("--oracle-cap-cells", config.oracle_cap_cells, "Largest n for LP cell enumeration")
      ->check(CLI::Range(0, 8))
      ->envname("WEYLARR_ORACLE_CAP_CELLS");
  cmd->add_option("--oracle-cap-flats", config.oracle_cap_flats, "Largest n for LP flat enumeration")
      ->check(CLI::Range(0, 10))
      ->envname("WEYLARR_ORACLE_CAP_FLATS");
  cmd->add_flag("--timing", config.timing, "Include wall-clock timings (output is then not reproducible)")
      ->envname("WEYLARR_TIMING");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Chambers, faces and flats of the gl_n weight arrangement on V + wedge^2 V, restricted to the Weyl chamber.\n"
               "Options fall back to the WEYLARR_* environment variable shown next to them.",
               "weylarr"};
  app.require_subcommand(1);

  bool faces = false, flats = false;
  CLI::App* count = app.add_subcommand("count", "Face or flat counts g(n,k) / h(n,k) by one or more methods");
  count->add_flag("--faces", faces, "Count faces");
  count->add_flag("--flats", flats, "Count flats");
  count->add_option("-n", config.n, "Rank n")->required()->envname("WEYLARR_N");
  count->add_option("-k", config.k, "Only dimension k")->envname("WEYLARR_K");
  count->add_option("--method", config.method, "enumerate, recurrence, series, closed-form, oracle or all")
      ->transform(CLI::CheckedTransformer(kMethods))
      ->option_text("METHOD (Env:WEYLARR_METHOD)")
      ->envname("WEYLARR_METHOD");
  add_common(count, config);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Stream chambers, k-faces or k-flats as JSON lines");
  enumerate->add_option("target", config.target, "chambers, faces or flats")
      ->required()
      ->check(CLI::IsMember({"chambers", "faces", "flats"}));
  enumerate->add_option("-n", config.n, "Rank n")->required()->envname("WEYLARR_N");
  enumerate->add_option("-k", config.k, "Only dimension k")->envname("WEYLARR_K");
  enumerate->add_option("--max-records", config.max_records, "Refuse listings longer than this")
      ->envname("WEYLARR_MAX_RECORDS");
  add_common(enumerate, config);

  CLI::App* graph = app.add_subcommand("graph", "Chamber adjacency graph in DOT");
  graph->add_option("-n", config.n, "Rank n (at most 12)")->required()->envname("WEYLARR_N");
  add_common(graph, config);

  CLI::App* verify = app.add_subcommand("verify", "Cross-check tables, recurrences, series, enumeration and the oracle");
  verify->add_flag("--oracle", config.oracle, "Only the geometric oracle checks");
  verify->add_flag("--non-simply-laced", config.non_simply_laced,
                   "Only the proportionality certificates and simplex face counts");
  verify->add_option("-n", config.verify_n, "Restrict oracle checks to this n (rank for --non-simply-laced)")
      ->envname("WEYLARR_N");
  verify->add_option("--errata", config.errata_path, "Errata file")->envname("WEYLARR_ERRATA");
  add_common(verify, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) {
      err << "cannot open " << config.out << " for writing\n";
      return kExitIo;
    }
    sink = &file;
  }

  int status = kExitOk;
  // Buffered so that a failure leaves the destination untouched.
  std::ostringstream buffer;
  const bool streamed = enumerate->parsed();
  std::ostream& target = streamed ? *sink : buffer;
  try {
    if (count->parsed()) {
      if (faces == flats) throw UsageError("count needs exactly one of --faces or --flats");
      config.command = "count";
      config.kind = faces ? CountKind::faces : CountKind::flats;
      status = cmd_count(config, target, err);
    } else if (enumerate->parsed()) {
      config.command = "enumerate";
      status = cmd_enumerate(config, target, err);
    } else if (graph->parsed()) {
      config.command = "graph";
      status = cmd_graph(config, target, err);
    } else {
      config.command = "verify";
      status = cmd_verify(config, target, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleRefusal& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!streamed) *sink << buffer.str();
  sink->flush();
  if (!*sink) {
    err << "write failed\n";
    return kExitIo;
  }
  return status;
}

}  // namespace weylarr::cli
