#include "tfree/certificate.hpp"

#include "tfree/errors.hpp"

#include <utility>

namespace tfree {

const char* to_string(BoundKind kind) noexcept
{
    switch (kind) {
    case BoundKind::gamma:
        return "gamma";
    case BoundKind::half_gamma:
        return "half-gamma";
    }
    return "?";
}

FeedbackCertificate make_certificate(const Digraph& g, ArcList arcs, std::string algorithm,
                                     BoundKind bound)
{
    arcs = normalize_arcs(std::move(arcs));
    if (!verify_feedback_set(g, arcs)) {
        throw CertificateError(algorithm + ": arc set does not leave the graph acyclic");
    }
    FeedbackCertificate cert;
    cert.gamma = gamma_count(g);
    cert.limit = bound == BoundKind::gamma ? cert.gamma : cert.gamma / 2;
    cert.arcs = std::move(arcs);
    cert.algorithm = std::move(algorithm);
    cert.bound = bound;
    return cert;
}

}  // namespace tfree
