#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "andgraph/characterization.hpp"
#include "andgraph/graph.hpp"
#include "andgraph/intersection_model.hpp"
#include "andgraph/models.hpp"
#include "andgraph/ordering.hpp"
#include "andgraph/realization.hpp"

namespace andgraph {

// Text formats. Blank lines and lines starting with "c " are comments
// everywhere. Every parser throws ParseError with the offending line number.

/// "p and <n> <m>" then m lines "e <u> <v>".
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// "i <id> <L> <R>", one per vertex 1..n.
IntervalModel parse_interval_model(std::string_view text);
std::string format_interval_model(const IntervalModel& m);

/// "outer <v1> ... <vk>" opens a block; "chord <u> <v>" lines belong to the
/// block opened last.
OuterplanarModel parse_outerplanar_model(std::string_view text);
std::string format_outerplanar_model(const OuterplanarModel& m);

/// "t <parent> <child>" arcs and "k <vid> <node> ..." paths, one per vertex.
RootedPathModel parse_rooted_path_model(std::string_view text);
std::string format_rooted_path_model(const RootedPathModel& m);

/// "r and <n> <d>" then d lines "v <id> <dim> <L> <R> <p>" per vertex. An
/// optional "central" line is checked against the coordinates.
Realization parse_realization(std::string_view text);
/// Emits "central" whenever the realization is central.
std::string format_realization(const Realization& r);

/// Single line "o <v1> ... <vn>".
Ordering parse_ordering(std::string_view text);
std::string format_ordering(const Ordering& o);

/// "ic <id> <l> <rho> <p>", one per vertex 1..n.
std::vector<ImplicitCode> parse_implicit_codes(std::string_view text);
std::string format_implicit_codes(const std::vector<ImplicitCode>& codes);

/// Optional "s <shift>" then "b <id> <dim> <x_lo> <x_hi> <y_lo> <y_hi>",
/// one line per vertex and source dimension.
CornerBoxModel parse_corner_boxes(std::string_view text);
std::string format_corner_boxes(const CornerBoxModel& m);

/// Optional "s <shift>" then "tri <id> <cx> <cy> <rx> <ry> <tx> <ty>":
/// corner, right and top vertices of each semi-square.
SemiSquareModel parse_semisquares(std::string_view text);
std::string format_semisquares(const SemiSquareModel& m);

/// Whole-file helpers. write_file_atomic writes a sibling temporary file and
/// renames it over `path`. Both throw std::runtime_error on I/O failure.
std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, std::string_view contents);

}  // namespace andgraph
