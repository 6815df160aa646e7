#include "tfree/scan.hpp"

#include "tfree/decomposition.hpp"
#include "tfree/errors.hpp"
#include "tfree/exact_solver.hpp"
#include "tfree/generators.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

namespace tfree {

namespace {

constexpr std::size_t kStoredFailureLimit = 64;

bool ordinal_less(const ScanInstance& a, const ScanInstance& b) { return a.ordinal < b.ordinal; }

void keep_first(std::vector<ScanInstance>& list, std::size_t limit)
{
    std::sort(list.begin(), list.end(), ordinal_less);
    if (list.size() > limit) {
        list.resize(limit);
    }
}

std::optional<std::string> check_theorem1(const Digraph& g, std::size_t beta, std::size_t gamma)
{
    if (beta > gamma) {
        return "beta exceeds gamma";
    }
    try {
        const FeedbackCertificate cert = theorem1_feedback(g);
        if (!cert.within_bound()) {
            return "decomposition certificate larger than gamma";
        }
    } catch (const CertificateError& e) {
        return std::string("decomposition certificate invalid: ") + e.what();
    }
    return std::nullopt;
}

void scan_one(ScanReport& report, const Digraph& g, std::array<std::uint64_t, 3> ordinal)
{
    const std::size_t beta = beta_exact(g).beta;
    const std::size_t gamma = gamma_count(g);
    report.record(g, beta, gamma, ordinal, check_theorem1(g, beta, gamma));
}

// Fixed so that reports (and witness order) do not depend on the thread count.
constexpr std::size_t kPrefixPairs = 4;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Runs work(i, local_report) for i in [0, count) over a pool of threads.
template <typename Work>
ScanReport run_parallel(std::size_t count, std::size_t threads, const ScanReport& blank, Work work)
{
    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    ScanReport merged = blank;
    const auto worker = [&] {
        ScanReport local = blank;
        for (std::size_t i = next++; i < count; i = next++) {
            work(i, local);
        }
        std::lock_guard lock(merge_mutex);
        merged.merge(local);
    };
    const std::size_t pool = std::max<std::size_t>(1, std::min(threads, count));
    if (pool == 1) {
        worker();
        return merged;
    }
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < pool; ++w) {
        workers.emplace_back(worker);
    }
    for (auto& w : workers) {
        w.join();
    }
    return merged;
}

}  // namespace

void ScanReport::record(const Digraph& g, std::size_t beta, std::size_t gamma, std::array<std::uint64_t, 3> ordinal,
                        std::optional<std::string> theorem1_problem)
{
    const std::size_t n_here = g.vertex_count();
    if (instances_by_n.size() <= n_here) {
        instances_by_n.resize(n_here + 1, 0);
    }
    ++instances_by_n[n_here];
    ++instances_checked;

    const auto twice_excess = static_cast<std::int64_t>(2 * beta) - static_cast<std::int64_t>(gamma);
    if (gamma > 0) {
        Rational ratio(beta, gamma);
        ratio.canonicalize();
        max_beta_over_gamma = std::max(max_beta_over_gamma, ratio);
    }
    const auto key = std::pair(twice_excess, beta);
    const auto best = std::pair(max_twice_excess, max_beta_at_extreme);
    if (!any_instance || key > best) {
        max_twice_excess = twice_excess;
        max_beta_at_extreme = beta;
        witnesses.clear();
    }
    any_instance = true;
    if (key == std::pair(max_twice_excess, max_beta_at_extreme) && witnesses.size() < witness_limit) {
        witnesses.push_back({g, beta, gamma, ordinal, {}});
    }
    if (twice_excess > 0) {
        ++violation_count;
        if (violations.size() < kStoredFailureLimit) {
            violations.push_back({g, beta, gamma, ordinal, "beta exceeds gamma/2"});
        }
    }
    if (theorem1_problem) {
        ++theorem1_failure_count;
        if (theorem1_failures.size() < kStoredFailureLimit) {
            theorem1_failures.push_back({g, beta, gamma, ordinal, *theorem1_problem});
        }
    }
}

void ScanReport::merge(const ScanReport& other)
{
    if (instances_by_n.size() < other.instances_by_n.size()) {
        instances_by_n.resize(other.instances_by_n.size(), 0);
    }
    for (std::size_t i = 0; i < other.instances_by_n.size(); ++i) {
        instances_by_n[i] += other.instances_by_n[i];
    }
    instances_checked += other.instances_checked;
    max_beta_over_gamma = std::max(max_beta_over_gamma, other.max_beta_over_gamma);
    complete = complete && other.complete;

    if (other.any_instance) {
        const auto mine = std::pair(max_twice_excess, max_beta_at_extreme);
        const auto theirs = std::pair(other.max_twice_excess, other.max_beta_at_extreme);
        if (!any_instance || theirs > mine) {
            max_twice_excess = other.max_twice_excess;
            max_beta_at_extreme = other.max_beta_at_extreme;
            witnesses = other.witnesses;
        } else if (theirs == mine) {
            witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
        }
        any_instance = true;
    }
    keep_first(witnesses, witness_limit);

    violation_count += other.violation_count;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    keep_first(violations, kStoredFailureLimit);
    theorem1_failure_count += other.theorem1_failure_count;
    theorem1_failures.insert(theorem1_failures.end(), other.theorem1_failures.begin(), other.theorem1_failures.end());
    keep_first(theorem1_failures, kStoredFailureLimit);
}

ScanReport conjecture_scan(const ScanOptions& options)
{
    if (options.n_max == 0) {
        throw PreconditionError("scan needs n_max >= 1");
    }
    ScanReport blank;
    blank.n = options.n_max;
    blank.mode = options.mode;
    blank.witness_limit = options.witness_limit;
    const std::size_t threads = std::max<std::size_t>(1, options.threads);

    if (options.mode == ScanMode::random) {
        if (options.n_max > kDefaultExactLimit) {
            throw SizeLimitError("random scan is limited to " + std::to_string(kDefaultExactLimit) + " vertices");
        }
        const std::size_t samples = options.budget.value_or(1000);
        return run_parallel(samples, threads, blank, [&](std::size_t i, ScanReport& local) {
            std::mt19937_64 rng(mix_seed(options.seed, i));
            const std::size_t n = std::uniform_int_distribution<std::size_t>(1, options.n_max)(rng);
            const double p = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
            scan_one(local, random_3free(n, p, rng()), {n, i, 0});
        });
    }

    if (options.n_max > kExhaustiveLimit) {
        throw SizeLimitError("exhaustive scan is limited to " + std::to_string(kExhaustiveLimit) +
                             " vertices; use random mode");
    }
    std::atomic<std::size_t> remaining{options.budget.value_or(static_cast<std::size_t>(-1))};
    ScanReport total = blank;
    for (std::size_t n = 1; n <= options.n_max; ++n) {
        const std::size_t prefix = std::min(kPrefixPairs, pair_count(n));
        std::size_t blocks = 1;
        for (std::size_t i = 0; i < prefix; ++i) {
            blocks *= 3;
        }
        total.merge(run_parallel(blocks, threads, blank, [&](std::size_t block, ScanReport& local) {
            std::uint64_t index = 0;
            enumerate_3free_block(n, prefix, block, [&](const Digraph& g) {
                std::size_t left = remaining.load();
                while (left > 0 && !remaining.compare_exchange_weak(left, left - 1)) {
                }
                if (left == 0) {
                    local.complete = false;
                    return false;
                }
                scan_one(local, g, {n, block, index++});
                return true;
            });
        }));
    }
    return total;
}

const char* to_string(ScanMode mode) noexcept { return mode == ScanMode::exhaustive ? "exhaustive" : "random"; }

std::string arcs_text(const Digraph& g)
{
    std::string out;
    for (const Arc& a : g.arcs()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(a.from) + '>' + std::to_string(a.to);
    }
    return out.empty() ? "-" : out;
}

namespace {

void write_instance(std::ostream& out, const ScanInstance& inst)
{
    out << "n=" << inst.graph.vertex_count() << " beta=" << inst.beta << " gamma=" << inst.gamma
        << " arcs=" << arcs_text(inst.graph);
}

}  // namespace

void write_scan_report(std::ostream& out, const ScanReport& report)
{
    out << "RESULT nmax " << report.n << '\n';
    out << "RESULT mode " << to_string(report.mode) << '\n';
    out << "RESULT instances_checked " << report.instances_checked << '\n';
    for (std::size_t n = 1; n < report.instances_by_n.size(); ++n) {
        out << "RESULT instances_n" << n << ' ' << report.instances_by_n[n] << '\n';
    }
    out << "RESULT complete " << (report.complete ? "yes" : "no") << '\n';
    out << "RESULT max_beta_minus_half_gamma " << to_string(report.max_beta_minus_half_gamma()) << '\n';
    out << "RESULT max_beta_over_gamma " << to_string(report.max_beta_over_gamma) << '\n';
    out << "RESULT violations " << report.violation_count << '\n';
    out << "RESULT theorem1_failures " << report.theorem1_failure_count << '\n';
    for (const ScanInstance& w : report.witnesses) {
        out << "RESULT witness ";
        write_instance(out, w);
        out << '\n';
    }
    for (const auto* list : {&report.violations, &report.theorem1_failures}) {
        for (const ScanInstance& v : *list) {
            out << "VIOLATION " << v.problem << ": ";
            write_instance(out, v);
            out << '\n';
        }
    }
}

}  // namespace tfree
