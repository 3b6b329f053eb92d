#include "graphon/generators.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace graphon {

StepGraphon sbm2(const SbmSpec& spec) {
    if (!(spec.p > 0.0 && spec.p < 1.0))
        throw std::invalid_argument("sbm2: block width p must lie strictly inside (0,1)");
    if (!(spec.q0 >= 0.0 && spec.q0 <= 1.0 && spec.q1 >= 0.0 && spec.q1 <= 1.0))
        throw std::invalid_argument("sbm2: densities must lie in [0,1]");
    Matrix values(2, 2);
    values(0, 0) = spec.q0;
    values(1, 1) = spec.q0;
    values(0, 1) = spec.q1;
    values(1, 0) = spec.q1;
    return StepGraphon({spec.p, 1.0 - spec.p}, std::move(values));
}

StepGraphon sbm_general(std::vector<double> widths, Matrix block_values) {
    return StepGraphon(std::move(widths), std::move(block_values));
}

StepGraphon irm(const IrmSpec& spec, std::uint64_t seed) {
    if (!(spec.alpha > 0.0 && spec.a > 0.0 && spec.b > 0.0))
        throw std::invalid_argument("irm: alpha, a, b must be positive");
    if (spec.customers == 0)
        throw std::invalid_argument("irm: customer count must be positive");

    RandomStream rng(seed);

    // CRP over `customers` arrivals; table counts in creation order.
    std::vector<std::size_t> counts{1};
    for (std::size_t m = 1; m < spec.customers; ++m) {
        const double total = static_cast<double>(m) + spec.alpha;
        double u = rng.uniform() * total;
        std::size_t table = counts.size();  // new table unless an existing one absorbs u
        for (std::size_t t = 0; t < counts.size(); ++t) {
            u -= static_cast<double>(counts[t]);
            if (u < 0.0) {
                table = t;
                break;
            }
        }
        if (table == counts.size())
            counts.push_back(1);
        else
            ++counts[table];
    }

    const std::size_t k = counts.size();
    std::vector<double> widths(k);
    for (std::size_t t = 0; t < k; ++t)
        widths[t] = static_cast<double>(counts[t]) / static_cast<double>(spec.customers);

    Matrix values(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            const double v = rng.beta(spec.a, spec.b);
            values(i, j) = v;
            values(j, i) = v;
        }
    return StepGraphon(std::move(widths), std::move(values));
}

AnalyticGraphon gradient() {
    return AnalyticGraphon{[](double x, double y) { return ((1.0 - x) + (1.0 - y)) / 2.0; }};
}

StepGraphon constant(double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("constant: value must lie in [0,1]");
    return StepGraphon({1.0}, Matrix(1, 1, c));
}

StepGraphon read_step_graphon(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("step graphon file: missing width line");
    std::istringstream widths_in(line);
    std::vector<double> widths;
    double w;
    while (widths_in >> w) widths.push_back(w);
    if (widths.empty()) throw std::runtime_error("step graphon file: width line holds no numbers");

    const std::size_t k = widths.size();
    Matrix values(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!std::getline(in, line))
            throw std::runtime_error("step graphon file: missing value row " + std::to_string(i + 1));
        std::istringstream row_in(line);
        for (std::size_t j = 0; j < k; ++j)
            if (!(row_in >> values(i, j)))
                throw std::runtime_error("step graphon file: value row " + std::to_string(i + 1) +
                                         " needs " + std::to_string(k) + " numbers");
    }
    return StepGraphon(std::move(widths), std::move(values));
}

StepGraphon read_step_graphon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open step graphon file: " + path);
    return read_step_graphon(in);
}

void write_step_graphon(const StepGraphon& w, std::ostream& out) {
    char buf[32];
    const std::size_t k = w.step_count();
    for (std::size_t i = 0; i < k; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", w.widths()[i]);
        out << buf << (i + 1 == k ? "\n" : " ");
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", w.values()(i, j));
            out << buf << (j + 1 == k ? "\n" : " ");
        }
}

namespace {

std::vector<double> parse_numbers(const std::string& text, std::size_t expected,
                                  const std::string& what) {
    std::vector<double> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("graphon spec '" + what + "': bad number '" + token + "'");
        }
    }
    if (out.size() != expected)
        throw std::invalid_argument("graphon spec '" + what + "': expected " +
                                    std::to_string(expected) + " parameters");
    return out;
}

}  // namespace

Graphon parse_graphon_spec(const std::string& text, std::uint64_t seed) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);

    if (head == "gradient") {
        if (!args.empty()) throw std::invalid_argument("graphon spec 'gradient' takes no parameters");
        return gradient();
    }
    if (head == "constant") {
        const auto v = parse_numbers(args, 1, text);
        return constant(v[0]);
    }
    if (head == "sbm2") {
        const auto v = parse_numbers(args, 3, text);
        return sbm2({v[0], v[1], v[2]});
    }
    if (head == "irm") {
        const auto v = parse_numbers(args, 3, text);
        return irm({v[0], v[1], v[2]}, seed);
    }
    if (head == "file") {
        if (args.empty()) throw std::invalid_argument("graphon spec 'file' needs a path");
        return read_step_graphon_file(args);
    }
    throw std::invalid_argument("unknown graphon spec: " + text);
}

}  // namespace graphon
