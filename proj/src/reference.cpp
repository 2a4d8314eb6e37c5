#include "weylarr/reference.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace weylarr {

namespace reference {

const std::vector<std::vector<long>>& g_table() {
  static const std::vector<std::vector<long>> rows{
      {1},
      {1, 1},
      {1, 5, 4},
      {1, 9, 16, 8},
      {1, 14, 41, 44, 16},
      {1, 20, 85, 146, 112, 32},
      {1, 27, 155, 377, 456, 272, 64},
      {1, 35, 259, 833, 1408, 1312, 640, 128},
      {1, 44, 406, 1652, 3649, 4712, 3568, 1472, 256},
      {1, 54, 606, 3024, 8361, 14002, 14608, 9312, 3328, 512},
      {1, 65, 870, 5202, 17469, 36365, 48940, 42800, 23662, 7424, 1024},
  };
  return rows;
}

const std::vector<std::vector<long>>& g_polynomials() {
  static const std::vector<std::vector<long>> rows{
      {1},
      {1, 1},
      {1, 5, 4},
      {1, 9, 16, 8},
      {1, 14, 41, 44, 16},
      {1, 20, 85, 146, 112, 32},
      {1, 27, 155, 377, 456, 272, 64},
      {1, 35, 259, 833, 1408, 1312, 640, 128},
      {1, 44, 406, 1652, 3649, 4712, 3568, 1472, 256},
      {1, 54, 606, 3024, 8361, 14002, 14608, 9312, 3328, 512},
      {1, 65, 870, 5202, 17469, 36365, 48940, 42800, 23552, 7424, 1024},
  };
  return rows;
}

const std::vector<std::vector<long>>& h_table() {
  static const std::vector<std::vector<long>> rows{
      {1},
      {1, 1},
      {1, 3, 1},
      {1, 5, 6, 1},
      {1, 8, 14, 10, 1},
      {1, 12, 29, 31, 15, 1},
      {1, 17, 54, 79, 60, 21, 1},
      {1, 23, 93, 175, 183, 106, 28, 1},
      {1, 30, 151, 352, 471, 380, 175, 36, 1},
      {1, 38, 234, 659, 1082, 1119, 728, 274, 45, 1},
      {1, 47, 349, 1166, 2286, 2894, 2426, 1310, 411, 55, 1},
  };
  return rows;
}

const std::vector<std::vector<long>>& h_series() { return h_table(); }

namespace {
Rational power_of_two(int e) {
  return e >= 0 ? Rational(BigInt(1) << e) : Rational(BigInt(1), BigInt(1) << -e);
}
}  // namespace

std::optional<Rational> g_small_k(int n, int k) {
  const Rational x(n);
  switch (k) {
    case 0: return Rational(1);
    case 1: return x * (x + 3) / 3;
    case 2: return x * (x - 1) * (x * x + 11 * x + 22) / 24;
    case 3: return x * (x - 1) * (x - 2) * (x + 7) * (x * x + 17 * x + 36) / 720;
    case 4:
      return x * (x - 1) * (x - 2) * (x - 3) * (x * x * x * x + 42 * x * x * x + 563 * x * x + 2754 * x + 3912) /
             40320;
    default: return std::nullopt;
  }
}

std::optional<Rational> g_near_top(int n, int k) {
  const Rational x(n);
  switch (k) {
    case 0: return power_of_two(n);
    case 1: return power_of_two(n - 2) * (3 * x - 1);
    case 2: return power_of_two(n - 5) * (9 * x * x - 17 * x + 6);
    case 3: return power_of_two(n - 7) * (9 * x * x * x - 42 * x * x + 57 * x - 20);
    case 4: return power_of_two(n - 11) * (27 * x * x * x * x - 234 * x * x * x + 697 * x * x - 810 * x + 280);
    default: return std::nullopt;
  }
}

}  // namespace reference

const Erratum* Errata::find(const std::string& table, int n, int k) const {
  for (const Erratum& e : entries)
    if (e.table == table && (e.n == -1 || e.n == n) && e.k == k) return &e;
  return nullptr;
}

Errata parse_errata(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("errata: ") + e.what());
  }
  Errata out;
  out.version = doc.value("version", 0);
  if (out.version != 1) throw std::runtime_error("errata: unsupported version " + std::to_string(out.version));
  for (const auto& item : doc.at("entries")) {
    Erratum e;
    e.id = item.at("id").get<std::string>();
    e.table = item.at("table").get<std::string>();
    e.n = item.value("n", -1);
    e.k = item.value("k", -1);
    e.printed = item.value("printed", "");
    e.arbitrated = item.value("arbitrated", "");
    e.arbiter = item.value("arbiter", "");
    e.note = item.value("note", "");
    out.entries.push_back(std::move(e));
  }
  return out;
}

Errata load_errata(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("errata: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_errata(buffer.str());
}

}  // namespace weylarr
