#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphon/graphon.hpp"

namespace graphon {

/// Two-block stochastic block model: blocks of width p and 1-p, within-block
/// density q0, cross-block density q1.
struct SbmSpec {
    double p;
    double q0;
    double q1;
};

/// Infinite relational model, truncated: block widths from a Chinese
/// restaurant process over `customers` arrivals, block values Beta(a,b).
struct IrmSpec {
    double alpha;
    double a;
    double b;
    std::size_t customers = 10000;
};

StepGraphon sbm2(const SbmSpec& spec);

StepGraphon sbm_general(std::vector<double> widths, Matrix block_values);

/// Stream layout: the CRP consumes one draw per arrival after the first,
/// then one Beta value per unordered class pair (diagonal included) in
/// row-major upper-triangle order.
StepGraphon irm(const IrmSpec& spec, std::uint64_t seed);

/// W(x,y) = ((1-x) + (1-y)) / 2.
AnalyticGraphon gradient();

StepGraphon constant(double c);

/// Step graphon from a whitespace matrix file: first line the k widths,
/// then k lines of k values each.
StepGraphon read_step_graphon(std::istream& in);
StepGraphon read_step_graphon_file(const std::string& path);
void write_step_graphon(const StepGraphon& w, std::ostream& out);

/// Parses a graphon spec string: `constant:c`, `sbm2:p,q0,q1`, `gradient`,
/// `irm:alpha,a,b`, or `file:PATH`. The seed feeds seeded generators (irm).
Graphon parse_graphon_spec(const std::string& text, std::uint64_t seed);

}  // namespace graphon
