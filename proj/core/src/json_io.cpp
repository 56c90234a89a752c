#include "equistable/json_io.hpp"

#include <nlohmann/json.hpp>

namespace equistable {

using ordered_json = nlohmann::ordered_json;

std::string twin_report_to_json(const TwinPartition& tp, const QuotientGraph& q) {
    ordered_json out;
    out["pi"] = tp.pi();
    out["classes"] = ordered_json::array();
    for (const TwinClass& c : tp.classes) {
        ordered_json entry;
        entry["id"] = c.id;
        entry["kind"] = to_string(c.kind);
        entry["members"] = c.members;
        out["classes"].push_back(std::move(entry));
    }
    out["quotient_adjacency"] = q.adj;
    return out.dump();
}

std::string structure_to_json(const EquistableStructure& s) {
    ordered_json out;
    out["weights"] = s.weights;
    out["target"] = s.target;
    return out.dump();
}

namespace {

ordered_json parse_or_throw(std::string_view text, const char* what) {
    ordered_json parsed = ordered_json::parse(text, nullptr, false);
    if (parsed.is_discarded())
        throw std::invalid_argument(std::string(what) + ": malformed JSON");
    return parsed;
}

std::vector<int> int_array(const ordered_json& value, const char* what) {
    if (!value.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<int> out;
    out.reserve(value.size());
    for (const auto& entry : value) {
        if (!entry.is_number_integer())
            throw std::invalid_argument(std::string(what) + ": expected integer entries");
        out.push_back(entry.get<int>());
    }
    return out;
}

}  // namespace

EquistableStructure structure_from_json(std::string_view text) {
    ordered_json parsed = parse_or_throw(text, "structure");
    if (!parsed.is_object() || !parsed.contains("weights") || !parsed.contains("target"))
        throw std::invalid_argument("structure: expected {\"weights\": [...], \"target\": t}");
    EquistableStructure s;
    s.weights = int_array(parsed["weights"], "structure weights");
    if (!parsed["target"].is_number_integer())
        throw std::invalid_argument("structure: target must be an integer");
    s.target = parsed["target"].get<long long>();
    return s;
}

std::string recipe_to_json(const LiftingRecipe& recipe, const std::vector<int>& old_to_new,
                           int original_vertices, int kernel_vertices) {
    ordered_json out;
    out["original_vertices"] = original_vertices;
    out["kernel_vertices"] = kernel_vertices;
    out["mapping"] = old_to_new;
    out["steps"] = ordered_json::array();
    for (const ReductionStep& step : recipe.steps) {
        ordered_json entry;
        if (std::holds_alternative<CliqueTruncation>(step)) {
            const auto& clique = std::get<CliqueTruncation>(step);
            entry["type"] = "clique_truncation";
            entry["representative"] = clique.representative;
            entry["deleted"] = clique.deleted;
            entry["target_shift"] = 0;
        } else {
            const auto& stable = std::get<StableTruncation>(step);
            entry["type"] = "stable_truncation";
            entry["survivors"] = stable.survivors;
            entry["deleted"] = stable.deleted;
            // the target grows by (constant class weight) x this factor
            entry["target_shift_factor"] = stable.deleted.size();
            entry["requires_constant_normalization"] = true;
        }
        out["steps"].push_back(std::move(entry));
    }
    return out.dump();
}

RecipeFile recipe_from_json(std::string_view text) {
    ordered_json parsed = parse_or_throw(text, "recipe");
    if (!parsed.is_object() || !parsed.contains("mapping") || !parsed.contains("steps"))
        throw std::invalid_argument("recipe: expected mapping and steps fields");
    RecipeFile file;
    file.old_to_new = int_array(parsed["mapping"], "recipe mapping");
    file.original_vertices = parsed.value("original_vertices", 0);
    file.kernel_vertices = parsed.value("kernel_vertices", 0);
    for (const auto& entry : parsed["steps"]) {
        std::string type = entry.value("type", "");
        if (type == "clique_truncation") {
            CliqueTruncation step;
            step.representative = entry.value("representative", -1);
            step.deleted = int_array(entry.at("deleted"), "recipe deleted");
            file.recipe.steps.emplace_back(std::move(step));
        } else if (type == "stable_truncation") {
            StableTruncation step;
            step.survivors = int_array(entry.at("survivors"), "recipe survivors");
            step.deleted = int_array(entry.at("deleted"), "recipe deleted");
            file.recipe.steps.emplace_back(std::move(step));
        } else {
            throw std::invalid_argument("recipe: unknown step type '" + type + "'");
        }
    }
    return file;
}

}  // namespace equistable
