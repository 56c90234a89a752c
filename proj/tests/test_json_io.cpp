#include "doctest.h"
#include "equistable/json_io.hpp"
#include "equistable/oracle.hpp"
#include "test_helpers.hpp"

using namespace equistable;
namespace tg = equistable::testing;

TEST_CASE("structure JSON round-trips and rejects malformed input") {
    EquistableStructure s{{1, 2, 3, 2}, 4};
    std::string text = structure_to_json(s);
    CHECK(text == R"({"weights":[1,2,3,2],"target":4})");
    EquistableStructure back = structure_from_json(text);
    CHECK(back.weights == s.weights);
    CHECK(back.target == s.target);

    CHECK_THROWS_AS(structure_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(structure_from_json(R"({"weights":[1,2]})"), std::invalid_argument);
    CHECK_THROWS_AS(structure_from_json(R"({"weights":[1,"x"],"target":1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(structure_from_json(R"({"weights":2,"target":1})"), std::invalid_argument);
}

TEST_CASE("twin report lists classes in order with quotient adjacency") {
    Graph c4 = tg::cycle_graph(4);
    TwinPartition tp = twin_partition(c4);
    std::string text = twin_report_to_json(tp, quotient_graph(c4, tp));
    CHECK(text ==
          R"({"pi":2,"classes":[{"id":0,"kind":"stable","members":[0,2]},)"
          R"({"id":1,"kind":"stable","members":[1,3]}],"quotient_adjacency":[[1],[0]]})");
}

TEST_CASE("recipe JSON carries everything lift_structure needs") {
    Graph k5 = tg::complete_graph(5);
    Kernel reduced = clique_reduce(k5, twin_partition(k5), 2);
    std::string text = recipe_to_json(reduced.recipe, reduced.old_to_new, 5,
                                      reduced.graph.vertex_count());
    RecipeFile file = recipe_from_json(text);
    CHECK(file.original_vertices == 5);
    CHECK(file.kernel_vertices == 2);
    CHECK(file.old_to_new == reduced.old_to_new);
    REQUIRE(file.recipe.steps.size() == 1);

    EquistableStructure lifted = lift_structure({{1, 1}, 1}, file.recipe, k5);
    CHECK(lifted.weights == std::vector<int>(5, 1));
    CHECK(lifted.target == 1);
    CHECK(oracle::verify_structure_exhaustive(k5, lifted));
}

TEST_CASE("recipe JSON round-trips stable truncations") {
    Graph e40 = tg::edgeless_graph(40);
    KernelOutcome outcome = kernel_k(e40, 2);
    REQUIRE(std::holds_alternative<Kernel>(outcome));
    const Kernel& kernel = std::get<Kernel>(outcome);
    std::string text = recipe_to_json(kernel.recipe, kernel.old_to_new, 40,
                                      kernel.graph.vertex_count());
    RecipeFile file = recipe_from_json(text);
    REQUIRE(file.recipe.steps.size() == 1);
    const auto& step = std::get<StableTruncation>(file.recipe.steps[0]);
    CHECK(step.survivors.size() == 32);
    CHECK(step.deleted.size() == 8);

    EquistableStructure on_kernel{std::vector<int>(32, 1), 32};
    EquistableStructure lifted = lift_structure(on_kernel, file.recipe, e40);
    CHECK(lifted.target == 40);
}
