#pragma once

#include "json.hpp"
#include "torelli/bounds.hpp"
#include "torelli/curve_system.hpp"
#include "torelli/mapping_class.hpp"
#include "torelli/penner.hpp"

namespace torelli {

using Json = nlohmann::ordered_json;

constexpr int kSystemFormatVersion = 1;
constexpr int kCertificateFormatVersion = 1;

Json system_to_json(const CurveSystem& s);
// Rebuilds the ribbon from the stored crossing orders and checks it against
// the stored rotations. Throws MalformedRibbon or MalformedCertificate.
CurveSystem system_from_json(const Json& j);

Json bound_report_to_json(const BoundReport& r);

// Self-contained: carries the chain data the checker needs to re-run the
// weight iteration.
Json certificate_to_json(const CurveSystem& s, const MappingClass& f, const DistanceCertificate& c);

}  // namespace torelli
