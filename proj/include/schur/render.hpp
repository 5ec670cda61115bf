#pragma once

#include "schur/space.hpp"

#include <string>

namespace schur {

enum class ListFormat { json, csv, md, text };
enum class PartitionConvention { increasing, decreasing };

ListFormat list_format_from_string(const std::string& s);

/// Row-per-class rendering of a classified poset.  JSON output is
/// schema-stable ({space, classes:[{id, dim, degree, a, J, partition,
/// rigid, witnesses}]}, keys sorted) and byte-identical across runs.
std::string render_list(const CominusculeSpace& X, const HassePoset& poset, ListFormat fmt,
                        PartitionConvention conv = PartitionConvention::increasing);

/// DOT digraph: nodes labelled "dim/degree", rigid nodes drawn with a
/// doubled border, edges oriented from lower to higher dimension.
std::string render_dot(const CominusculeSpace& X, const HassePoset& poset);

/// Stable per-class identifier within a space listing.
std::string class_id(const HassePoset& poset, int idx);

} // namespace schur
