#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace torelli {

struct CertificateCheck {
    std::vector<std::string> mismatches;
    int checked = 0;  // number of individual comparisons made
    bool ok() const { return mismatches.empty(); }
};

// Re-derives a distance certificate from its own data: reruns the weight
// iteration, compares every support in the trace, re-checks the zero
// intersections with gamma and recomputes the bound chain. Shares no code with
// the generator.
CertificateCheck check_certificate(const nlohmann::ordered_json& cert);

}  // namespace torelli
