#include "dlas/tsp.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

namespace dlas {
namespace {

std::string trim(const std::string& s) {
  std::size_t first = 0;
  std::size_t last = s.size();
  while (first < last && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(s[last - 1]))) --last;
  return s.substr(first, last - first);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& line,
                       const std::string& why) {
  throw ParseError("line " + std::to_string(line_no) + ": " + why + ": \"" +
                   line + "\"");
}

long long parse_int(const std::string& token, std::size_t line_no,
                    const std::string& line, const char* what) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    fail(line_no, line, std::string(what) + " is not an integer");
  return value;
}

std::string format_coord(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

TspInstance parse_tsplib(const std::string& text) {
  std::istringstream in(text);
  TspInstance instance;
  long long dimension = -1;
  bool have_edge_weight = false;
  bool in_coords = false;
  std::vector<bool> seen;
  long long coord_count = 0;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (!in_coords) {
      const std::size_t colon = line.find(':');
      const std::string key =
          trim(colon == std::string::npos ? line : line.substr(0, colon));
      const std::string value =
          colon == std::string::npos ? "" : trim(line.substr(colon + 1));

      if (key == "NAME") {
        instance.name = value;
      } else if (key == "DIMENSION") {
        dimension = parse_int(value, line_no, raw, "DIMENSION");
        if (dimension < 3) fail(line_no, raw, "DIMENSION must be at least 3");
      } else if (key == "EDGE_WEIGHT_TYPE") {
        if (value == "EUC_2D") {
          instance.edge_weight = EdgeWeight::euc_2d;
        } else if (value == "CEIL_2D") {
          instance.edge_weight = EdgeWeight::ceil_2d;
        } else {
          fail(line_no, raw, "unsupported EDGE_WEIGHT_TYPE \"" + value + "\"");
        }
        have_edge_weight = true;
      } else if (key == "NODE_COORD_SECTION") {
        if (dimension < 0) fail(line_no, raw, "NODE_COORD_SECTION before DIMENSION");
        if (!have_edge_weight)
          fail(line_no, raw, "NODE_COORD_SECTION before EDGE_WEIGHT_TYPE");
        instance.x.assign(static_cast<std::size_t>(dimension), 0.0);
        instance.y.assign(static_cast<std::size_t>(dimension), 0.0);
        seen.assign(static_cast<std::size_t>(dimension), false);
        in_coords = true;
      } else if (key == "EOF") {
        break;
      }
      // TYPE, COMMENT, display hints and the like carry no geometry: skipped.
    } else {
      if (line == "EOF") break;
      std::istringstream fields(line);
      long long id = 0;
      double cx = 0.0;
      double cy = 0.0;
      if (!(fields >> id >> cx >> cy))
        fail(line_no, raw, "expected \"id x y\"");
      std::string extra;
      if (fields >> extra) fail(line_no, raw, "trailing tokens after coordinates");
      if (id < 1 || id > dimension) fail(line_no, raw, "node id out of range");
      const std::size_t slot = static_cast<std::size_t>(id - 1);
      if (seen[slot]) fail(line_no, raw, "duplicate node id");
      seen[slot] = true;
      instance.x[slot] = cx;
      instance.y[slot] = cy;
      ++coord_count;
    }
  }

  if (dimension < 0) throw ParseError("missing DIMENSION");
  if (!have_edge_weight) throw ParseError("missing EDGE_WEIGHT_TYPE");
  if (coord_count != dimension)
    throw ParseError("DIMENSION is " + std::to_string(dimension) + " but " +
                     std::to_string(coord_count) + " coordinate lines were read");
  return instance;
}

std::string serialize_tsplib(const TspInstance& instance) {
  std::ostringstream out;
  out << "NAME : " << instance.name << "\n";
  out << "TYPE : TSP\n";
  out << "DIMENSION : " << instance.size() << "\n";
  out << "EDGE_WEIGHT_TYPE : "
      << (instance.edge_weight == EdgeWeight::euc_2d ? "EUC_2D" : "CEIL_2D")
      << "\n";
  out << "NODE_COORD_SECTION\n";
  for (std::uint32_t i = 0; i < instance.size(); ++i)
    out << (i + 1) << ' ' << format_coord(instance.x[i]) << ' '
        << format_coord(instance.y[i]) << "\n";
  out << "EOF\n";
  return out.str();
}

TspInstance load_tsplib_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_tsplib(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Fitness tour_fitness(const TspInstance& instance, const Tour& tour) {
  const std::uint32_t n = static_cast<std::uint32_t>(tour.size());
  Fitness total = 0;
  for (std::uint32_t p = 0; p < n; ++p)
    total += instance.distance(tour[p], tour[p + 1 == n ? 0 : p + 1]);
  return total;
}

Tour random_tour(std::uint32_t n, Rng& rng) {
  Tour tour(n);
  for (std::uint32_t i = 0; i < n; ++i) tour[i] = i;
  for (std::uint32_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::uint32_t>(rng.below(i + 1));
    std::swap(tour[i], tour[j]);
  }
  return tour;
}

ReversalMove propose_reversal(const Tour& tour, Rng& rng) {
  const std::uint64_t n = tour.size();
  if (n < 4) throw ConfigError("tour reversal needs at least 4 cities");
  const auto [a, b] = rng.two_below(n);
  return {static_cast<std::uint32_t>(std::min(a, b)),
          static_cast<std::uint32_t>(std::max(a, b))};
}

Fitness reversal_delta(const TspInstance& instance, const Tour& tour,
                       ReversalMove move) {
  const std::uint32_t n = static_cast<std::uint32_t>(tour.size());
  const std::uint32_t before = tour[move.i];
  const std::uint32_t first = tour[move.i + 1];
  const std::uint32_t last = tour[move.j];
  const std::uint32_t after = tour[move.j + 1 == n ? 0 : move.j + 1];
  return instance.distance(before, last) + instance.distance(first, after) -
         instance.distance(before, first) - instance.distance(last, after);
}

void apply_reversal(Tour& tour, ReversalMove move) {
  std::reverse(tour.begin() + move.i + 1, tour.begin() + move.j + 1);
}

}  // namespace dlas
