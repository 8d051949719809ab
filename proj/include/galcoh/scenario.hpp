#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galcoh/cochains.hpp"
#include "galcoh/places_sha.hpp"
#include "galcoh/tori.hpp"

namespace galcoh {

struct TorusEntry {
  std::string name;
  std::string kind;  // norm_one, multinorm, quasi_trivial
  Torus torus;
  std::vector<Subgroup> subgroups;
  /// 0 -> Z -> permutation lattice -> characters -> 0 (norm_one and multinorm only).
  std::optional<TorusWithSequence> norm_sequence;
  /// Built when a lattice, sequence or directive first asks for it.
  std::optional<FlasqueResolution> resolution;
};

enum class DirectiveKind { Cohomology, Tate, Flasque, Resolution, Br, Sha, Coverage, Transfer, Connecting };

struct Directive {
  DirectiveKind kind = DirectiveKind::Cohomology;
  int degree = 0;
  std::vector<std::string> names;
  std::string text;
  std::size_t line = 0;
};

/// A parsed and fully validated scenario file. Named objects keep declaration order.
struct Scenario {
  std::string name;
  std::string group_description;
  GroupPtr group;
  CochainLimits limits;
  std::vector<std::pair<std::string, GLattice>> lattices;
  std::vector<TorusEntry> tori;
  std::vector<std::pair<std::string, PlaceFamily>> places;
  std::vector<std::pair<std::string, ShortExactSequence>> sequences;
  std::vector<Directive> directives;

  const GLattice* find_lattice(const std::string& name) const;
  const TorusEntry* find_torus(const std::string& name) const;
  const PlaceFamily* find_places(const std::string& name) const;
  const ShortExactSequence* find_sequence(const std::string& name) const;
  /// Name of the first declared lattice equal to m, if any.
  std::optional<std::string> lattice_name(const GLattice& m) const;
};

/// Throws ParseError (with line and column) on syntax errors, unknown names, invalid subgroups
/// and directive degrees above limits.max_degree.
Scenario parse_scenario(const std::string& text, const std::string& name = "scenario",
                        const CochainLimits& limits = {});

/// Klein four with the norm-one torus of a biquadratic extension and its multinorm companion.
const std::string& builtin_paper_biquadratic_text();
Scenario builtin_paper_biquadratic(const CochainLimits& limits = {});

}  // namespace galcoh
