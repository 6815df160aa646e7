// Command-line front end: exact beta/gamma, feedback certificates, instance
// generators and the conjecture scan.
//
// Exit codes: 0 ok, 2 a bound or the conjecture failed, 1 usage/input error.

#include "tfree/circular_interval.hpp"
#include "tfree/decomposition.hpp"
#include "tfree/edge_list.hpp"
#include "tfree/errors.hpp"
#include "tfree/exact_solver.hpp"
#include "tfree/four_functions.hpp"
#include "tfree/generators.hpp"
#include "tfree/scan.hpp"
#include "tfree/two_cliques.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

using tfree::Vertex;

void print_arcs(const tfree::ArcList& arcs)
{
    for (const tfree::Arc& a : arcs) {
        std::cout << "arc " << a.from << ' ' << a.to << '\n';
    }
}

template <typename T>
std::string join(const std::vector<T>& xs)
{
    std::string out;
    for (const auto& x : xs) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(x);
    }
    return out;
}

// Prints the certificate after re-verifying it; returns the exit code.
int emit_certificate(const tfree::Digraph& g, const tfree::FeedbackCertificate& cert)
{
    if (!tfree::verify_feedback_set(g, cert.arcs)) {
        std::cerr << "error: " << cert.algorithm << " certificate does not break every cycle\n";
        return kExitViolation;
    }
    std::cout << "algorithm " << cert.algorithm << '\n'
              << "gamma " << cert.gamma << '\n'
              << "bound " << to_string(cert.bound) << ' ' << cert.limit << '\n'
              << "size " << cert.size() << '\n'
              << "within_bound " << (cert.within_bound() ? "yes" : "no") << '\n';
    print_arcs(cert.arcs);
    return cert.within_bound() ? kExitOk : kExitViolation;
}

int cmd_beta(const std::string& path)
{
    const tfree::Digraph g = tfree::load_edge_list(path);
    const tfree::BetaResult r = tfree::beta_exact(g);
    std::cout << "beta " << r.beta << '\n';
    print_arcs(r.witness);
    return kExitOk;
}

int cmd_gamma(const std::string& path)
{
    const tfree::NonadjacencyReport r = tfree::gamma(tfree::load_edge_list(path));
    std::cout << "gamma " << r.gamma << '\n';
    for (const auto& [u, v] : r.pairs) {
        std::cout << "pair " << u << ' ' << v << '\n';
    }
    return kExitOk;
}

int cmd_thm1(const std::string& path)
{
    const tfree::Digraph g = tfree::load_edge_list(path);
    return emit_certificate(g, tfree::theorem1_feedback(g));
}

int cmd_twoclique(const std::string& path, const std::vector<Vertex>& m, const std::vector<Vertex>& n)
{
    const tfree::Digraph g = tfree::load_edge_list(path);
    const tfree::TwoCliqueResult r = tfree::two_cliques_feedback(g, m, n);
    std::cout << "m_order " << join(r.partition.m_order) << '\n'
              << "n_order " << join(r.partition.n_order) << '\n'
              << "matching " << r.cross.matching.size() << '\n'
              << "corner_c " << r.cross.c_points.size() << '\n'
              << "corner_d " << r.cross.d_points.size() << '\n'
              << "four_functions " << to_string(r.four_functions.status) << '\n';
    const int code = emit_certificate(g, r.certificate);
    return r.four_functions.ok() ? code : kExitViolation;
}

int cmd_circular(const std::string& path, const std::vector<Vertex>& order)
{
    const tfree::Digraph g = tfree::load_edge_list(path);
    tfree::CircularFeedback r;
    try {
        r = tfree::circular_feedback(g, order);
    } catch (const tfree::StructureError& e) {
        std::cout << "VIOLATION structure: " << e.what() << '\n';
        return kExitViolation;
    }
    if (r.structure.transitive_tournament) {
        std::cout << "structure transitive_tournament\n";
    } else {
        std::cout << "structure blocks " << join(r.structure.blocks->sizes) << '\n'
                  << "cut_index " << r.cut->k << '\n'
                  << "cut_value " << tfree::to_string(r.cut->cut_value) << '\n'
                  << "half_far_sum " << tfree::to_string(r.cut->half_far_sum) << '\n';
    }
    std::cout << "completion_arcs " << r.completion.arc_count() << '\n';
    return emit_certificate(g, r.certificate);
}

int cmd_fourfn(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw tfree::ParseError("cannot open " + path);
    }
    const tfree::FourFunctionsVerdict v = tfree::verify_four_functions(tfree::read_grid_instance(in));
    std::cout << "status " << to_string(v.status) << '\n';
    if (!v.detail.empty()) {
        std::cout << "detail " << v.detail << '\n';
    }
    std::cout << "a_total " << tfree::to_string(v.a_total) << '\n'
              << "b_total " << tfree::to_string(v.b_total) << '\n'
              << "c_total " << tfree::to_string(v.c_total) << '\n'
              << "d_total " << tfree::to_string(v.d_total) << '\n'
              << "margin " << tfree::to_string(v.margin) << '\n';
    return v.status == tfree::FourFunctionsStatus::conclusion_failed ? kExitViolation : kExitOk;
}

int cmd_scan(const tfree::ScanOptions& options)
{
    const tfree::ScanReport report = tfree::conjecture_scan(options);
    tfree::write_scan_report(std::cout, report);
    return report.violation_count + report.theorem1_failure_count > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Feedback arc sets of digraphs without short directed cycles"};
    app.require_subcommand(1);

    std::string file;
    std::vector<Vertex> m_list;
    std::vector<Vertex> n_list;
    std::vector<Vertex> order;
    std::vector<std::size_t> blocks;
    std::size_t extremal_n = 0;
    tfree::ScanOptions scan;
    bool random = false;
    std::size_t budget = 0;
    scan.threads = std::max(1u, std::thread::hardware_concurrency());

    auto* beta = app.add_subcommand("beta", "exact beta with a witness arc set");
    beta->add_option("file", file, "edge-list file")->required();
    auto* gamma = app.add_subcommand("gamma", "gamma and the nonadjacent pairs");
    gamma->add_option("file", file, "edge-list file")->required();

    auto* bound = app.add_subcommand("bound", "feedback arc set certificates");
    bound->require_subcommand(1);
    auto* thm1 = bound->add_subcommand("thm1", "decomposition certificate, size <= gamma");
    thm1->add_option("file", file, "edge-list file")->required();
    auto* twoclique = bound->add_subcommand("twoclique", "two-clique certificate, size <= gamma/2");
    twoclique->add_option("file", file, "edge-list file")->required();
    twoclique->add_option("--m", m_list, "first clique, comma separated")->required()->delimiter(',');
    twoclique->add_option("--n", n_list, "second clique, comma separated")->required()->delimiter(',');
    auto* circular = bound->add_subcommand("circular", "circular interval certificate, size <= gamma/2");
    circular->add_option("file", file, "edge-list file")->required();
    circular->add_option("--order", order, "circular order, comma separated")->required()->delimiter(',');

    auto* gen = app.add_subcommand("gen", "write generated instances as edge lists");
    gen->require_subcommand(1);
    auto* extremal = gen->add_subcommand("extremal", "G(n,n,n,n)");
    extremal->add_option("--n", extremal_n, "block size")->required()->check(CLI::PositiveNumber);
    auto* gen_circular = gen->add_subcommand("circular", "G(n0,...,n3t)");
    gen_circular->add_option("--blocks", blocks, "block sizes, 3t+1 of them")->required()->delimiter(',');

    auto* fourfn = app.add_subcommand("fourfn", "check a four-functions grid instance");
    fourfn->add_option("file", file, "grid instance file")->required();

    auto* scan_cmd = app.add_subcommand("scan", "check beta <= gamma/2 over many 3-free digraphs");
    scan_cmd->add_option("--nmax", scan.n_max, "largest vertex count")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_flag("--random", random, "sample instead of enumerating");
    scan_cmd->add_option("--seed", scan.seed, "random seed");
    auto* budget_opt = scan_cmd->add_option("--budget", budget, "instance budget");
    scan_cmd->add_option("--threads", scan.threads, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*beta) {
            return cmd_beta(file);
        }
        if (*gamma) {
            return cmd_gamma(file);
        }
        if (*thm1) {
            return cmd_thm1(file);
        }
        if (*twoclique) {
            return cmd_twoclique(file, m_list, n_list);
        }
        if (*circular) {
            return cmd_circular(file, order);
        }
        if (*extremal) {
            tfree::write_edge_list(std::cout, tfree::extremal_family(extremal_n));
            return kExitOk;
        }
        if (*gen_circular) {
            tfree::write_edge_list(std::cout, tfree::generate(tfree::BlockStructure::from_sizes(blocks)).graph);
            return kExitOk;
        }
        if (*fourfn) {
            return cmd_fourfn(file);
        }
        if (*scan_cmd) {
            scan.mode = random ? tfree::ScanMode::random : tfree::ScanMode::exhaustive;
            if (budget_opt->count() > 0) {
                scan.budget = budget;
            }
            return cmd_scan(scan);
        }
    } catch (const tfree::CertificateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const tfree::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
