#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "andgraph/models.hpp"

namespace andgraph {

enum class Family {
  Path,
  Cycle,
  Complete,
  CompleteMultipartite,
  HGraph,
  RandomInterval,
  RandomDissection,
  RandomBlockGraph,
  RandomOuterplanar,
  RandomRootedPath,
};

/// Family name plus its integer parameters, e.g. {HGraph, {2, 2, 2}}.
struct FamilySpec {
  Family family = Family::Path;
  std::vector<int> params;
};

/// Accepts the names used on the command line: path, cycle, complete,
/// multipartite, h, interval, dissection, block, outerplanar, rooted-path.
FamilySpec parse_family(const std::string& name, std::vector<int> params);
std::string family_name(Family f);

/// Deterministic for a fixed seed. The aux model (when the family has one)
/// reproduces the graph. Throws PreconditionError on invalid parameters.
GraphBundle generate(const FamilySpec& spec, std::uint64_t seed);

}  // namespace andgraph
