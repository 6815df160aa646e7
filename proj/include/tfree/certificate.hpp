#pragma once

#include "tfree/digraph.hpp"

#include <cstddef>
#include <string>

namespace tfree {

/// Which upper bound a feedback set is claimed to meet.
enum class BoundKind {
    gamma,       // |X| <= gamma(G)
    half_gamma,  // |X| <= floor(gamma(G) / 2)
};

const char* to_string(BoundKind kind) noexcept;

/// A feedback arc set together with the bound it certifies.
struct FeedbackCertificate {
    ArcList arcs;
    std::string algorithm;
    BoundKind bound = BoundKind::gamma;
    std::size_t gamma = 0;
    std::size_t limit = 0;  // gamma or floor(gamma / 2)

    std::size_t size() const noexcept { return arcs.size(); }
    bool within_bound() const noexcept { return arcs.size() <= limit; }
};

/// Builds a certificate after re-checking that `arcs` is a feedback set of
/// `g`. Throws CertificateError if it is not. The bound itself is recorded,
/// not enforced: see FeedbackCertificate::within_bound.
FeedbackCertificate make_certificate(const Digraph& g, ArcList arcs, std::string algorithm,
                                     BoundKind bound);

}  // namespace tfree
