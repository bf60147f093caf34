#include "leafcert/families.hpp"

#include <array>
#include <string>
#include <utility>

#include "leafcert/errors.hpp"

namespace leafcert {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kNames = {{
    {Family::ExtremalM1, "extremal-m1"},
    {Family::EdgeException, "edge-exception"},
    {Family::ThreeFiveException, "three-five-exception"},
    {Family::FourSevenException, "four-seven-exception"},
    {Family::Complete, "complete"},
    {Family::Empty, "empty"},
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (auto [family, name] : kNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto [family, n] : kNames) {
    if (n == name) return family;
  }
  return std::nullopt;
}

bool is_valid(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t k = spec.k;
  if (n == 0 || n > kMaxOrder) return false;
  switch (spec.family) {
    case Family::ExtremalM1:
      return k >= 1 && n >= k + 2;
    case Family::EdgeException:
      return k >= 1 && n >= k + 3;
    case Family::ThreeFiveException:
      return n >= 6;
    case Family::FourSevenException:
      return n >= 8;
    case Family::Cycle:
      return n >= 3;
    case Family::Complete:
    case Family::Empty:
    case Family::Path:
      return true;
  }
  return false;
}

Graph build(const FamilySpec& spec) {
  if (!is_valid(spec)) {
    throw ArgumentError("invalid parameters for family " +
                        std::string(family_name(spec.family)) +
                        ": n=" + std::to_string(spec.n) +
                        " k=" + std::to_string(spec.k));
  }
  const std::size_t n = spec.n;
  const std::size_t k = spec.k;
  switch (spec.family) {
    case Family::ExtremalM1:
      return join(complete_graph(k),
                  disjoint_union(complete_graph(1), complete_graph(n - k - 1)));
    case Family::EdgeException:
      return join(complete_graph(k), disjoint_union(complete_graph(n - k - 2),
                                                    complete_graph(2)));
    case Family::ThreeFiveException:
      return join(complete_graph(3),
                  disjoint_union(complete_graph(n - 5), empty_graph(2)));
    case Family::FourSevenException:
      return join(complete_graph(4),
                  disjoint_union(complete_graph(n - 7), empty_graph(3)));
    case Family::Complete:
      return complete_graph(n);
    case Family::Empty:
      return empty_graph(n);
    case Family::Path:
      return path_graph(n);
    case Family::Cycle:
      return cycle_graph(n);
  }
  throw ArgumentError("unknown family");
}

}  // namespace leafcert
