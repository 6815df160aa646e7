#pragma once

#include "tfree/digraph.hpp"
#include "tfree/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tfree {

enum class ScanMode { exhaustive, random };

struct ScanOptions {
    std::size_t n_max = 1;
    ScanMode mode = ScanMode::exhaustive;
    std::uint64_t seed = 1;
    /// Exhaustive: stop after this many instances and flag the report
    /// incomplete. Random: number of samples (default 1000).
    std::optional<std::size_t> budget;
    std::size_t threads = 1;
    std::size_t witness_limit = 4;
};

/// One scanned graph with its statistics. `ordinal` orders instances the
/// way a single-threaded scan visits them: (n, block, index in block) for
/// exhaustive scans, (n, sample, 0) for random ones.
struct ScanInstance {
    Digraph graph;
    std::size_t beta = 0;
    std::size_t gamma = 0;
    std::array<std::uint64_t, 3> ordinal{};
    std::string problem;  // set for failures
};

/// Summary of a conjecture scan.
///
/// The extreme instances maximise (beta - gamma/2, beta) lexicographically;
/// the first `witness_limit` of them in scan order are kept. `violations`
/// holds instances with beta > gamma/2. `theorem1_failures` holds instances
/// with beta > gamma or a decomposition certificate that is too large or
/// does not verify. Stored lists are capped; the counts are exact.
struct ScanReport {
    std::size_t n = 0;
    ScanMode mode = ScanMode::exhaustive;
    std::size_t instances_checked = 0;
    std::vector<std::size_t> instances_by_n;  // index = vertex count
    std::int64_t max_twice_excess = 0;        // max of 2 beta - gamma
    std::size_t max_beta_at_extreme = 0;
    Rational max_beta_over_gamma = 0;         // over instances with gamma > 0
    std::vector<ScanInstance> witnesses;
    std::size_t violation_count = 0;
    std::vector<ScanInstance> violations;
    std::size_t theorem1_failure_count = 0;
    std::vector<ScanInstance> theorem1_failures;
    bool complete = true;
    bool any_instance = false;
    std::size_t witness_limit = 4;

    Rational max_beta_minus_half_gamma() const
    {
        Rational r(max_twice_excess, 2);
        r.canonicalize();
        return r;
    }

    /// Folds in a single instance.
    void record(const Digraph& g, std::size_t beta, std::size_t gamma, std::array<std::uint64_t, 3> ordinal,
                std::optional<std::string> theorem1_problem);

    /// Associative and commutative combination of partial reports.
    void merge(const ScanReport& other);
};

/// Checks beta <= gamma/2 and beta <= gamma on every instance (beta from
/// beta_exact), and that the decomposition certificate verifies within
/// gamma. Exhaustive mode needs n_max <= kExhaustiveLimit; random mode
/// needs n_max <= kDefaultExactLimit.
ScanReport conjecture_scan(const ScanOptions& options);

const char* to_string(ScanMode mode) noexcept;

/// `RESULT <field> <value>` lines, one `RESULT witness ...` line per
/// witness and one `VIOLATION ...` line per stored failure.
void write_scan_report(std::ostream& out, const ScanReport& report);

/// Compact single-line arc list: `0>1,1>2`.
std::string arcs_text(const Digraph& g);

}  // namespace tfree
