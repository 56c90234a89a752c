#pragma once

#include <string>
#include <string_view>

#include "equistable/kernelizer.hpp"
#include "equistable/recognizer.hpp"
#include "equistable/twin_partition.hpp"

namespace equistable {

/// Twin analysis payload: pi, ordered class list with members and kind, and
/// the quotient adjacency lists.
std::string twin_report_to_json(const TwinPartition& tp, const QuotientGraph& q);

/// Structure file format: {"weights": [w_0, ..., w_{n-1}], "target": t}.
std::string structure_to_json(const EquistableStructure& s);

/// Parses a structure file. Throws std::invalid_argument on malformed JSON,
/// missing fields, or non-integer entries.
EquistableStructure structure_from_json(std::string_view text);

/// Recipe file: original/kernel sizes, the old-to-new vertex mapping
/// (-1 marks deleted vertices), and the ordered reduction steps.
std::string recipe_to_json(const LiftingRecipe& recipe, const std::vector<int>& old_to_new,
                           int original_vertices, int kernel_vertices);

struct RecipeFile {
    LiftingRecipe recipe;
    std::vector<int> old_to_new;
    int original_vertices = 0;
    int kernel_vertices = 0;
};

RecipeFile recipe_from_json(std::string_view text);

}  // namespace equistable
