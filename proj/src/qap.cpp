#include "dlas/qap.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>
#include <utility>

namespace dlas {
namespace {

std::vector<std::string_view> tokenize(const std::string& text) {
  std::vector<std::string_view> tokens;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    const char* start = p;
    while (p < end && !std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p > start) tokens.emplace_back(start, static_cast<std::size_t>(p - start));
  }
  return tokens;
}

Fitness parse_token(std::string_view token, std::size_t index) {
  Fitness value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("token " + std::to_string(index + 1) + " (\"" +
                     std::string(token) + "\") is not an integer");
  return value;
}

}  // namespace

QapInstance parse_qaplib(const std::string& text, std::string name) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty input");

  QapInstance instance;
  instance.name = std::move(name);
  const Fitness n = parse_token(tokens[0], 0);
  if (n < 2) throw ParseError("size must be at least 2, got " + std::to_string(n));
  instance.n = static_cast<std::uint32_t>(n);

  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (tokens.size() != 1 + 2 * cells)
    throw ParseError("expected 1 + 2n^2 = " + std::to_string(1 + 2 * cells) +
                     " tokens for n = " + std::to_string(n) + ", found " +
                     std::to_string(tokens.size()));

  instance.a.resize(cells);
  instance.b.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) instance.a[i] = parse_token(tokens[1 + i], 1 + i);
  for (std::size_t i = 0; i < cells; ++i)
    instance.b[i] = parse_token(tokens[1 + cells + i], 1 + cells + i);
  return instance;
}

QapInstance load_qaplib_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_qaplib(buffer.str(), std::filesystem::path(path).stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Fitness assignment_fitness(const QapInstance& instance, const Assignment& perm) {
  const std::uint32_t n = instance.n;
  Fitness total = 0;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      total += instance.a_at(i, j) * instance.b_at(perm[i], perm[j]);
  return total;
}

Assignment random_assignment(std::uint32_t n, Rng& rng) {
  Assignment perm(n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  for (std::uint32_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::uint32_t>(rng.below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

SwapMove propose_swap(const Assignment& perm, Rng& rng) {
  const std::uint64_t n = perm.size();
  const auto r = static_cast<std::uint32_t>(rng.below(n));
  auto s = static_cast<std::uint32_t>(rng.below(n));
  while (s == r) s = static_cast<std::uint32_t>(rng.below(n));
  return {r, s};
}

Fitness swap_delta(const QapInstance& instance, const Assignment& perm,
                   SwapMove move) {
  if (move.r == move.s) throw ConfigError("swap endpoints must differ");
  const std::uint32_t r = move.r;
  const std::uint32_t s = move.s;
  const std::uint32_t pr = perm[r];
  const std::uint32_t ps = perm[s];

  Fitness delta =
      (instance.a_at(r, r) - instance.a_at(s, s)) *
          (instance.b_at(ps, ps) - instance.b_at(pr, pr)) +
      (instance.a_at(r, s) - instance.a_at(s, r)) *
          (instance.b_at(ps, pr) - instance.b_at(pr, ps));
  for (std::uint32_t k = 0; k < instance.n; ++k) {
    if (k == r || k == s) continue;
    const std::uint32_t pk = perm[k];
    delta += (instance.a_at(k, r) - instance.a_at(k, s)) *
                 (instance.b_at(pk, ps) - instance.b_at(pk, pr)) +
             (instance.a_at(r, k) - instance.a_at(s, k)) *
                 (instance.b_at(ps, pk) - instance.b_at(pr, pk));
  }
  return delta;
}

void apply_swap(Assignment& perm, SwapMove move) {
  std::swap(perm[move.r], perm[move.s]);
}

}  // namespace dlas
