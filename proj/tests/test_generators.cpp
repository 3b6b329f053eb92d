#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "graphon/generators.hpp"

using namespace graphon;

TEST_CASE("sbm2 builds the two-block graphon") {
    const StepGraphon w = sbm2({0.5, 0.7, 0.3});
    CHECK(w.widths() == std::vector<double>{0.5, 0.5});
    CHECK(w.values()(0, 0) == 0.7);
    CHECK(w.values()(0, 1) == 0.3);
    CHECK(w.values()(1, 1) == 0.7);

    const StepGraphon uneven = sbm2({0.3, 0.7, 0.3});
    CHECK(uneven.widths()[0] == doctest::Approx(0.3));
    CHECK(uneven.widths()[1] == doctest::Approx(0.7));
}

TEST_CASE("sbm2 with equal densities is constant in value") {
    const StepGraphon w = sbm2({0.4, 0.6, 0.6});
    for (double x : {0.1, 0.5, 0.9})
        for (double y : {0.2, 0.8}) CHECK(w.eval(x, y) == 0.6);
}

TEST_CASE("sbm2 rejects degenerate widths") {
    CHECK_THROWS_AS(sbm2({0.0, 0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(sbm2({1.0, 0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(sbm2({0.5, 1.5, 0.5}), std::invalid_argument);
}

TEST_CASE("sbm_general covers constants and reproduces sbm2") {
    const StepGraphon c = sbm_general({1.0}, Matrix(1, 1, 0.25));
    CHECK(c.eval(0.5, 0.5) == 0.25);

    Matrix values(2, 2);
    values(0, 0) = values(1, 1) = 0.7;
    values(0, 1) = values(1, 0) = 0.3;
    const StepGraphon general = sbm_general({0.5, 0.5}, values);
    const StepGraphon two = sbm2({0.5, 0.7, 0.3});
    CHECK(general.widths() == two.widths());
    CHECK(general.values().data() == two.values().data());
}

TEST_CASE("sbm_general rejects inconsistent inputs") {
    CHECK_THROWS_AS(sbm_general({0.5, 0.5}, Matrix(3, 3, 0.1)), std::invalid_argument);
    Matrix asym(2, 2, 0.2);
    asym(0, 1) = 0.9;
    CHECK_THROWS_AS(sbm_general({0.5, 0.5}, asym), std::invalid_argument);
}

TEST_CASE("seven equal 0/1 blocks form a valid black-and-white graphon") {
    Matrix values(7, 7, 0.0);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            if (i != j && (i + j) % 2 == 0) values(i, j) = 1.0;
    const StepGraphon w = sbm_general(std::vector<double>(7, 1.0 / 7.0), values);
    CHECK(w.step_count() == 7);
    CHECK(w.eval(0.0, 0.3) == 1.0);
}

TEST_CASE("irm produces a valid step graphon with Beta-distributed values") {
    const StepGraphon w = irm({3.0, 3.0, 2.9, 2000}, 2024);
    double width_sum = 0.0;
    for (double width : w.widths()) width_sum += width;
    CHECK(width_sum == doctest::Approx(1.0));
    CHECK(w.values().values_in_unit_interval());

    // Block values average to a/(a+b) ~ 0.508 across seeds.
    double total = 0.0;
    std::size_t count = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const StepGraphon v = irm({3.0, 3.0, 2.9, 200}, seed);
        const std::size_t k = v.step_count();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i; j < k; ++j) {
                total += v.values()(i, j);
                ++count;
            }
    }
    const double mean = total / static_cast<double>(count);
    // Beta(3, 2.9) has mean ~0.5085 and sd ~0.19; count is in the hundreds.
    CHECK(std::abs(mean - 3.0 / 5.9) < 0.05);
}

TEST_CASE("irm at vanishing concentration collapses to one class") {
    const StepGraphon w = irm({1e-9, 2.0, 2.0, 1000}, 77);
    CHECK(w.step_count() == 1);
    CHECK(w.widths()[0] == doctest::Approx(1.0));
}

TEST_CASE("irm is deterministic per seed") {
    const StepGraphon a = irm({3.0, 3.0, 2.9, 500}, 42);
    const StepGraphon b = irm({3.0, 3.0, 2.9, 500}, 42);
    CHECK(a.widths() == b.widths());
    CHECK(a.values().data() == b.values().data());
}

TEST_CASE("irm class count grows with concentration") {
    double mean_low = 0.0, mean_high = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        mean_low += static_cast<double>(irm({0.3, 2.0, 2.0, 300}, seed).step_count());
        mean_high += static_cast<double>(irm({3.0, 2.0, 2.0, 300}, seed).step_count());
    }
    CHECK(mean_high > mean_low);
}

TEST_CASE("irm validates its parameters") {
    CHECK_THROWS_AS(irm({0.0, 1.0, 1.0, 100}, 1), std::invalid_argument);
    CHECK_THROWS_AS(irm({1.0, -1.0, 1.0, 100}, 1), std::invalid_argument);
    CHECK_THROWS_AS(irm({1.0, 1.0, 1.0, 0}, 1), std::invalid_argument);
}

TEST_CASE("constant builds one-step graphons and validates the range") {
    CHECK(constant(0.5).eval(0.2, 0.9) == 0.5);
    CHECK(constant(0.0).step_count() == 1);
    CHECK(constant(1.0).eval(1.0, 1.0) == 1.0);
    CHECK_THROWS_AS(constant(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(constant(1.1), std::invalid_argument);
}

TEST_CASE("step graphon file round-trips") {
    const StepGraphon w = sbm2({0.3, 0.8, 0.2});
    std::stringstream buffer;
    write_step_graphon(w, buffer);
    const StepGraphon back = read_step_graphon(buffer);
    CHECK(back.widths() == w.widths());
    CHECK(back.values().data() == w.values().data());
}

TEST_CASE("step graphon file parse errors") {
    std::stringstream missing_rows("0.5 0.5\n0.1 0.2\n");
    CHECK_THROWS_AS(read_step_graphon(missing_rows), std::runtime_error);
    std::stringstream short_row("0.5 0.5\n0.1 0.2\n0.2\n");
    CHECK_THROWS_AS(read_step_graphon(short_row), std::runtime_error);
    std::stringstream empty("");
    CHECK_THROWS_AS(read_step_graphon(empty), std::runtime_error);
}

TEST_CASE("graphon spec strings parse into the right families") {
    const Graphon c = parse_graphon_spec("constant:0.5", 1);
    CHECK(eval(c, 0.1, 0.2) == 0.5);

    const Graphon s = parse_graphon_spec("sbm2:0.5,0.7,0.3", 1);
    CHECK(eval(s, 0.25, 0.75) == 0.3);

    const Graphon g = parse_graphon_spec("gradient", 1);
    CHECK(eval(g, 0.0, 0.0) == 1.0);

    const Graphon i = parse_graphon_spec("irm:3,3,2.9", 7);
    CHECK(std::holds_alternative<StepGraphon>(i));

    CHECK_THROWS_AS(parse_graphon_spec("mystery:1", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_graphon_spec("sbm2:0.5,0.7", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_graphon_spec("constant:abc", 1), std::invalid_argument);
}

TEST_CASE("file: spec loads a step graphon from disk") {
    const std::string path = "generators_test_graphon.txt";
    {
        std::ofstream out(path);
        out << "0.5 0.5\n0.7 0.3\n0.3 0.7\n";
    }
    const Graphon w = parse_graphon_spec("file:" + path, 1);
    CHECK(eval(w, 0.25, 0.75) == 0.3);
    std::remove(path.c_str());
}
