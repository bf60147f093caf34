#pragma once

#include <optional>
#include <string_view>

#include "leafcert/graph.hpp"

namespace leafcert {

enum class Family {
  ExtremalM1,          // K_k ∨ (K_1 + K_{n-k-1})
  EdgeException,       // K_k ∨ (K_{n-k-2} + K_2)
  ThreeFiveException,  // K_3 ∨ (K_{n-5} + 2K_1)
  FourSevenException,  // K_4 ∨ (K_{n-7} + 3K_1)
  Complete,
  Empty,
  Path,
  Cycle,
};

struct FamilySpec {
  Family family;
  std::size_t n;
  std::size_t k = 0;  // read by ExtremalM1 and EdgeException only
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Whether spec satisfies the order constraints of its family.
bool is_valid(const FamilySpec& spec);

/// Builds the named construction from complete graphs with join and
/// disjoint union. In joins the left operand's vertices come first, so for
/// ExtremalM1 vertices 0..k-1 are the hubs and vertex k is the solo vertex.
/// Throws ArgumentError when the spec is out of range.
Graph build(const FamilySpec& spec);

}  // namespace leafcert
