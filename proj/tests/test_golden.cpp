#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "orbifold/parameters.hpp"
#include "orbifold/solver.hpp"
#include "table_golden.hpp"

using namespace orbifold;

TEST(Golden, TableP3)
{
    const auto rows = golden::load_p3_table(std::string(ORBIFOLD_TEST_DATA) + "/p3_solution_table.txt");
    const auto expected = golden::pairs(rows);
    std::set<std::pair<GroupAlgebraElement, GroupAlgebraElement>> actual;
    for (auto const& r : enumerate_solutions(Prime(3), EnumerationMode::closed_form))
        for (auto const& s : r.solutions) actual.insert({r.b, s.a});
    EXPECT_EQ(actual.size(), 81U);
    EXPECT_EQ(actual, expected);
}

TEST(Golden, TableRowsShareASets)
{
    const auto rows = golden::load_p3_table(std::string(ORBIFOLD_TEST_DATA) + "/p3_solution_table.txt");
    for (auto const& row : rows) {
        if (row.a_depends_on_b) continue;
        for (auto const& b : row.bs) {
            std::set<GroupAlgebraElement> as;
            for (auto const& s : solve_for(b).solutions) as.insert(s.a);
            EXPECT_EQ(as, row.as) << to_string(b);
        }
    }
}

TEST(Golden, RunningExamplePrettyPrint)
{
    std::ifstream in(std::string(ORBIFOLD_TEST_DATA) + "/running_example_p3.txt");
    std::stringstream golden;
    golden << in.rdbuf();
    const Prime p(3);
    const Scalar d[] = {2};
    EXPECT_EQ(pretty_print(closed_form(parse_element("1-g", p), d, GroupAlgebraElement(p))), golden.str());
}
