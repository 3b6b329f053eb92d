#include "graphon/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "graphon/random.hpp"

namespace graphon {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Majority block of a class: A (0) wins ties.
std::uint8_t majority_block(std::size_t count_a, std::size_t count_b) {
    return count_a >= count_b ? 0 : 1;
}

struct ClassStats {
    std::vector<std::size_t> size;
    std::vector<std::size_t> count_a;
};

ClassStats class_stats(const Partition& p, const GroundTruth& truth) {
    ClassStats stats;
    stats.size.assign(p.class_count(), 0);
    stats.count_a.assign(p.class_count(), 0);
    for (std::size_t v = 0; v < p.size(); ++v) {
        const auto c = p.class_of(v);
        ++stats.size[c];
        if (truth.block[v] == 0) ++stats.count_a[c];
    }
    return stats;
}

}  // namespace

void SbmAnalysisConfig::validate() const {
    if (n == 0) throw std::invalid_argument("analysis config: n must be positive");
    if (k < 2) throw std::invalid_argument("analysis config: k must be at least 2");
    if (!(p > 0.0 && p <= 0.5))
        throw std::invalid_argument("analysis config: p must lie in (0, 1/2]");
    if (!(q0 >= 0.0 && q0 <= 1.0 && q1 >= 0.0 && q1 <= 1.0 && q0 > q1))
        throw std::invalid_argument("analysis config: densities need 0 <= q1 < q0 <= 1");
    if (!(tau > 1.0 - 1.0 / (4.0 * static_cast<double>(k)) && tau <= 1.0))
        throw std::invalid_argument("analysis config: tau must exceed 1 - 1/(4k)");
    // tau = 1 is degenerate (tau' cannot exceed it, and tau' + xi <= 1 cannot
    // hold with positive xi); it is admitted with tau' = 1 so the perfect-
    // classification diagnostics can run, and condition (ii) reports unmet.
    if (!(tau_prime > tau || (tau == 1.0 && tau_prime == 1.0)))
        throw std::invalid_argument("analysis config: tau' must exceed tau");
    if (!(tau_prime <= 1.0))
        throw std::invalid_argument("analysis config: tau' must not exceed 1");
    if (!(epsilon > 0.0 && xi > 0.0))
        throw std::invalid_argument("analysis config: epsilon and xi must be positive");
}

std::pair<Graph, GroundTruth> sample_sbm_with_blocks(std::size_t n, double p, double q0,
                                                     double q1, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample_sbm_with_blocks: n must be positive");
    RandomStream rng(seed);
    GroundTruth truth;
    truth.block.resize(n);
    for (std::size_t i = 0; i < n; ++i) truth.block[i] = rng.uniform() < p ? 0 : 1;
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(truth.block[i] == truth.block[j] ? q0 : q1)) g.add_edge(i, j);
    return {std::move(g), std::move(truth)};
}

double majority_fraction(const Partition& p, const GroundTruth& truth) {
    if (p.size() != truth.block.size())
        throw std::invalid_argument("majority_fraction: partition size mismatch");
    const auto stats = class_stats(p, truth);
    std::size_t correct = 0;
    for (std::size_t c = 0; c < p.class_count(); ++c) {
        const std::size_t count_b = stats.size[c] - stats.count_a[c];
        correct += majority_block(stats.count_a[c], count_b) == 0 ? stats.count_a[c] : count_b;
    }
    return static_cast<double>(correct) / static_cast<double>(p.size());
}

Partition corrupt_partition(const GroundTruth& truth, std::size_t k, double tau,
                            std::uint64_t seed) {
    const std::size_t n = truth.block.size();
    if (k < 2) throw std::invalid_argument("corrupt_partition: k must be at least 2");
    if (k > n) throw std::invalid_argument("corrupt_partition: k exceeds vertex count");
    if (!(tau > 1.0 - 1.0 / (4.0 * static_cast<double>(k)) && tau <= 1.0))
        throw std::domain_error("corrupt_partition: tau must lie in (1 - 1/(4k), 1]");

    const std::size_t a_side = (k + 1) / 2;  // classes [0, a_side) belong to block A
    const std::size_t b_side = k - a_side;
    RandomStream rng(seed);

    std::vector<std::uint32_t> assignment(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (truth.block[v] == 0)
            assignment[v] = static_cast<std::uint32_t>(rng.uniform_index(a_side));
        else
            assignment[v] = static_cast<std::uint32_t>(a_side + rng.uniform_index(b_side));
    }

    // Misplace exactly floor((1 - tau) n) vertices, chosen without replacement.
    const auto misplaced = static_cast<std::size_t>((1.0 - tau) * static_cast<double>(n));
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::size_t t = 0; t < misplaced; ++t) {
        const std::size_t j = t + rng.uniform_index(n - t);
        std::swap(pool[t], pool[j]);
        const std::uint32_t v = pool[t];
        if (truth.block[v] == 0)
            assignment[v] = static_cast<std::uint32_t>(a_side + rng.uniform_index(b_side));
        else
            assignment[v] = static_cast<std::uint32_t>(rng.uniform_index(a_side));
    }

    // Repair empty classes from the largest class; k <= n keeps this sound.
    std::vector<std::size_t> counts(k, 0);
    for (auto c : assignment) ++counts[c];
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] > 0) continue;
        const std::size_t donor =
            static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) -
                                     counts.begin());
        for (std::size_t v = 0; v < n; ++v) {
            if (assignment[v] == donor) {
                assignment[v] = static_cast<std::uint32_t>(c);
                break;
            }
        }
        --counts[donor];
        ++counts[c];
    }
    return Partition(std::move(assignment), k);
}

Partition random_centroid_iteration(const Graph& g, const Partition& previous, std::size_t k,
                                    std::uint64_t seed) {
    const std::size_t n = g.size();
    if (k == 0) throw std::invalid_argument("random_centroid_iteration: k must be positive");
    if (k > n) throw std::invalid_argument("random_centroid_iteration: k exceeds vertex count");
    if (previous.size() != n)
        throw std::invalid_argument("random_centroid_iteration: partition size mismatch");

    RandomStream rng(seed);
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t j = t + rng.uniform_index(n - t);
        std::swap(pool[t], pool[j]);
    }
    const std::vector<std::uint32_t> centroids(pool.begin(), pool.begin() + k);

    std::vector<std::uint32_t> assignment(n, 0);
    std::vector<bool> is_centroid(n, false);
    for (std::size_t c = 0; c < k; ++c) {
        assignment[centroids[c]] = static_cast<std::uint32_t>(c);
        is_centroid[centroids[c]] = true;
    }

    const Matrix densities = all_density_vectors(g, previous);
    const std::size_t cols = densities.cols();
    std::vector<std::uint32_t> ties;
    for (std::size_t v = 0; v < n; ++v) {
        if (is_centroid[v]) continue;
        double best = std::numeric_limits<double>::infinity();
        ties.clear();
        for (std::size_t c = 0; c < k; ++c) {
            double d = 0.0;
            for (std::size_t r = 0; r < cols; ++r)
                d += std::abs(densities(v, r) - densities(centroids[c], r));
            if (d < best) {
                best = d;
                ties.assign(1, static_cast<std::uint32_t>(c));
            } else if (d == best) {
                ties.push_back(static_cast<std::uint32_t>(c));
            }
        }
        assignment[v] = ties.size() == 1 ? ties[0] : ties[rng.uniform_index(ties.size())];
    }
    return Partition(std::move(assignment), k);
}

double delta_from_tau(std::size_t k, double tau) {
    double discriminant = 1.0 - 4.0 * static_cast<double>(k) * (1.0 - tau);
    // The boundary tau = 1 - 1/(4k) rarely lands on an exact double; absorb
    // rounding residue instead of rejecting it.
    if (discriminant < 0.0 && discriminant > -1e-12) discriminant = 0.0;
    if (discriminant < 0.0)
        throw std::domain_error("delta_from_tau: tau too small for k (needs 4k(1-tau) <= 1)");
    return (1.0 + std::sqrt(discriminant)) / 2.0;
}

ConditionCheck condition_i(const SbmAnalysisConfig& cfg) {
    cfg.validate();
    const double lhs = cfg.q0 - cfg.q1;
    const double k = static_cast<double>(cfg.k);
    const double n = static_cast<double>(cfg.n);
    const double root = std::sqrt(1.0 - 4.0 * k * (1.0 - cfg.tau));
    if (cfg.tau == 1.0) {
        // No vertex is misplaced; the final term's 0/0 is taken at its limit.
        const double rhs = (3.0 - root) / cfg.tau - 2.0 + 4.0 * cfg.epsilon + 2.0 * k / (n * cfg.tau);
        return {lhs, rhs, true};
    }
    const double rhs = (3.0 - root) / cfg.tau - 2.0 + 4.0 * cfg.epsilon +
                       (1.0 - root) / (n * cfg.tau * (1.0 - cfg.tau));
    return {lhs, rhs, lhs >= rhs};
}

ConditionCheck condition_ii(const SbmAnalysisConfig& cfg) {
    cfg.validate();
    if (cfg.tau_prime + cfg.xi >= 1.0)
        throw std::domain_error("condition_ii: tau' + xi must be below 1");
    const double k = static_cast<double>(cfg.k);
    const double lhs = cfg.epsilon * cfg.epsilon * static_cast<double>(cfg.n);
    const double rhs =
        -12.0 * k * std::log((1.0 - std::pow(cfg.tau_prime + cfg.xi, 1.0 / k)) / 2.0);
    return {lhs, rhs, lhs > rhs};
}

double theorem_bound(const SbmAnalysisConfig& cfg) {
    cfg.validate();
    const double k = static_cast<double>(cfg.k);
    const double n = static_cast<double>(cfg.n);
    const double p_k = 1.0 - std::pow(cfg.p, k) - std::pow(1.0 - cfg.p, k);
    const double centroid_factor = 1.0 - 2.0 * std::exp(-cfg.epsilon * cfg.epsilon * n / (12.0 * k));
    const double mass_factor = 1.0 - 2.0 * std::exp(-cfg.xi * cfg.xi * n / 3.0);
    if (centroid_factor <= 0.0 || mass_factor <= 0.0) return 0.0;
    return p_k * std::pow(centroid_factor, k * k) * mass_factor;
}

TheoremReport evaluate_theorem(const SbmAnalysisConfig& cfg) {
    cfg.validate();
    TheoremReport report;
    report.config = cfg;
    report.delta = delta_from_tau(cfg.k, cfg.tau);
    report.condition_i = condition_i(cfg);
    try {
        report.condition_ii = condition_ii(cfg);
    } catch (const std::domain_error&) {
        // tau' + xi at or past 1: the required n diverges.
        report.condition_ii = {cfg.epsilon * cfg.epsilon * static_cast<double>(cfg.n),
                               std::numeric_limits<double>::infinity(), false};
    }
    report.conditions_met = report.condition_i.satisfied && report.condition_ii.satisfied;
    const double k = static_cast<double>(cfg.k);
    report.p_k = 1.0 - std::pow(cfg.p, k) - std::pow(1.0 - cfg.p, k);
    report.bound = theorem_bound(cfg);
    const double centroid_factor =
        1.0 - 2.0 * std::exp(-cfg.epsilon * cfg.epsilon * static_cast<double>(cfg.n) / (12.0 * k));
    const double mass_factor =
        1.0 - 2.0 * std::exp(-cfg.xi * cfg.xi * static_cast<double>(cfg.n) / 3.0);
    report.vacuous = centroid_factor <= 0.0 || mass_factor <= 0.0;
    return report;
}

double chernoff_lower_bound(std::size_t n, double zeta, double eps) {
    if (!(zeta > 0.0 && zeta <= 1.0))
        throw std::domain_error("chernoff_lower_bound: zeta must lie in (0,1]");
    if (!(eps > 0.0)) throw std::invalid_argument("chernoff_lower_bound: eps must be positive");
    return 1.0 - 2.0 * std::exp(-eps * eps * static_cast<double>(n) / (3.0 * zeta));
}

TheoremReport monte_carlo_theorem(const SbmAnalysisConfig& cfg) {
    TheoremReport report = evaluate_theorem(cfg);
    report.per_trial_fractions.reserve(cfg.trials);
    std::size_t hits = 0;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t trial_seed = derive_seed(cfg.seed, trial);
        auto [graph, truth] = sample_sbm_with_blocks(cfg.n, cfg.p, cfg.q0, cfg.q1,
                                                     derive_seed(trial_seed, 0));
        const Partition start = corrupt_partition(truth, cfg.k, cfg.tau, derive_seed(trial_seed, 1));
        const Partition refined =
            random_centroid_iteration(graph, start, cfg.k, derive_seed(trial_seed, 2));
        const double fraction = majority_fraction(refined, truth);
        report.per_trial_fractions.push_back(fraction);
        if (fraction >= cfg.tau_prime) ++hits;
    }
    report.has_empirical = cfg.trials > 0;
    report.empirical_frequency =
        report.has_empirical ? static_cast<double>(hits) / static_cast<double>(cfg.trials) : 0.0;
    return report;
}

std::vector<bool> epsilon_delta_good(const Graph& g, const GroundTruth& truth,
                                     const Partition& p, double q0, double q1, double eps,
                                     double delta, std::uint64_t selfloop_seed) {
    const std::size_t n = g.size();
    if (p.size() != n || truth.block.size() != n)
        throw std::invalid_argument("epsilon_delta_good: size mismatch");
    const std::size_t k = p.class_count();
    const auto stats = class_stats(p, truth);

    // Virtual self-loops, one draw per vertex in vertex order.
    RandomStream rng(selfloop_seed);
    std::vector<bool> selfloop(n);
    for (std::size_t v = 0; v < n; ++v) selfloop[v] = rng.bernoulli(q0);

    // Majorities of the delta-large, delta-good classes.
    struct MajorityClass {
        std::uint8_t block;
        std::size_t size;
        std::vector<std::uint64_t> mask;
        std::vector<bool> member;
    };
    std::vector<MajorityClass> good_classes;
    const double min_size = delta * static_cast<double>(n) / static_cast<double>(k);
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t count_b = stats.size[c] - stats.count_a[c];
        const std::uint8_t maj = majority_block(stats.count_a[c], count_b);
        const std::size_t maj_size = maj == 0 ? stats.count_a[c] : count_b;
        const bool large = static_cast<double>(stats.size[c]) >= min_size;
        const bool good = static_cast<double>(maj_size) >=
                          delta * static_cast<double>(stats.size[c]);
        if (!(large && good)) continue;
        MajorityClass mc;
        mc.block = maj;
        mc.size = maj_size;
        mc.mask.assign(g.words_per_row(), 0);
        mc.member.assign(n, false);
        for (std::size_t v = 0; v < n; ++v)
            if (p.class_of(v) == c && truth.block[v] == maj) {
                mc.mask[v / 64] |= std::uint64_t{1} << (v % 64);
                mc.member[v] = true;
            }
        good_classes.push_back(std::move(mc));
    }

    std::vector<bool> result(n, true);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& mc : good_classes) {
            std::uint64_t count = 0;
            const auto row = g.row(v);
            for (std::size_t w = 0; w < row.size(); ++w)
                count += static_cast<std::uint64_t>(std::popcount(row[w] & mc.mask[w]));
            if (mc.member[v] && selfloop[v]) ++count;
            const double density = static_cast<double>(count) / static_cast<double>(mc.size);
            const double expected = truth.block[v] == mc.block ? q0 : q1;
            if (!(std::abs(density - expected) < eps)) {
                result[v] = false;
                break;
            }
        }
    }
    return result;
}

void write_report(const TheoremReport& r, std::ostream& out) {
    const auto& c = r.config;
    out << "n=" << c.n << "\n";
    out << "k=" << c.k << "\n";
    out << "p=" << fmt(c.p) << "\n";
    out << "q0=" << fmt(c.q0) << "\n";
    out << "q1=" << fmt(c.q1) << "\n";
    out << "tau=" << fmt(c.tau) << "\n";
    out << "tau_prime=" << fmt(c.tau_prime) << "\n";
    out << "epsilon=" << fmt(c.epsilon) << "\n";
    out << "xi=" << fmt(c.xi) << "\n";
    out << "trials=" << c.trials << "\n";
    out << "seed=" << c.seed << "\n";
    out << "delta=" << fmt(r.delta) << "\n";
    out << "condition_i_lhs=" << fmt(r.condition_i.lhs) << "\n";
    out << "condition_i_rhs=" << fmt(r.condition_i.rhs) << "\n";
    out << "condition_i_satisfied=" << (r.condition_i.satisfied ? 1 : 0) << "\n";
    out << "condition_ii_lhs=" << fmt(r.condition_ii.lhs) << "\n";
    out << "condition_ii_rhs=" << fmt(r.condition_ii.rhs) << "\n";
    out << "condition_ii_satisfied=" << (r.condition_ii.satisfied ? 1 : 0) << "\n";
    out << "conditions_met=" << (r.conditions_met ? 1 : 0) << "\n";
    out << "p_k=" << fmt(r.p_k) << "\n";
    out << "bound=" << fmt(r.bound) << "\n";
    out << "vacuous=" << (r.vacuous ? 1 : 0) << "\n";
    if (r.has_empirical)
        out << "empirical_frequency=" << fmt(r.empirical_frequency) << "\n";
    else
        out << "empirical_frequency=undefined\n";
}

void write_per_trial_csv(const TheoremReport& r, std::ostream& out) {
    out << "trial,majority_fraction\n";
    for (std::size_t t = 0; t < r.per_trial_fractions.size(); ++t)
        out << t << "," << fmt(r.per_trial_fractions[t]) << "\n";
}

SbmAnalysisConfig parse_analysis_config(std::istream& in) {
    SbmAnalysisConfig cfg;
    std::map<std::string, std::string> keys;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("analysis config line " + std::to_string(line_no) +
                                     ": expected name=value");
        keys[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto need = [&](const std::string& key) -> const std::string& {
        const auto it = keys.find(key);
        if (it == keys.end())
            throw std::runtime_error("analysis config: missing key '" + key + "'");
        return it->second;
    };
    try {
        cfg.n = std::stoull(need("n"));
        cfg.k = std::stoull(need("k"));
        cfg.p = std::stod(need("p"));
        cfg.q0 = std::stod(need("q0"));
        cfg.q1 = std::stod(need("q1"));
        cfg.tau = std::stod(need("tau"));
        cfg.tau_prime = std::stod(need("tau_prime"));
        cfg.epsilon = std::stod(need("epsilon"));
        cfg.xi = std::stod(need("xi"));
        cfg.trials = std::stoull(need("trials"));
        cfg.seed = std::stoull(need("seed"));
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("analysis config: malformed numeric value");
    } catch (const std::out_of_range&) {
        throw std::runtime_error("analysis config: numeric value out of range");
    }
    return cfg;
}

}  // namespace graphon
