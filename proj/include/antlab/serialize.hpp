#pragma once

#include <json.hpp>

#include "antlab/classify.hpp"
#include "antlab/seedlab.hpp"

namespace antlab {

// JSON schemas (stable, documented in README):
//   certificate: {word, onset, period, drift:[a,b], read_set_size,
//                 trace_period_canonical, digest, witness, pose:{...}}
//   report:      {class, steps, resource_limited, certificate?, recurrence?
//                 (n0, delta_n, displacement:[dx,dy]), f_model?, g_model?,
//                 interlacing?}
//   catalog:     {word, entries:[{seed_digest, report}], classes:[...]}
// Traces are arrays of integer symbols; digests are decimal strings (JSON
// numbers lose 64-bit precision).

nlohmann::json certificate_to_json(const HighwayCertificate& cert);
HighwayCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const BehaviorReport& report);
BehaviorReport report_from_json(const nlohmann::json& j);

nlohmann::json catalog_to_json(const BehaviorCatalog& catalog);
BehaviorCatalog catalog_from_json(const nlohmann::json& j);

void save_catalog(const BehaviorCatalog& catalog, const std::string& path);

/// Loads the catalog at `path`; a missing file yields an empty catalog for
/// the given word (append-merge semantics for repeated searches).
BehaviorCatalog load_catalog(const std::string& path, const std::string& word);

}  // namespace antlab
