#pragma once

#include <string>

#include "json.hpp"
#include "morava/derive.hpp"
#include "morava/powerops.hpp"
#include "morava/rings.hpp"

namespace morava {

using ReportJson = nlohmann::ordered_json;

/// Canonical text plus raw residues (ascending a-degree).
ReportJson element_json(const CoeffElem& x);
ReportJson row_json(const RowVector& v);
ReportJson sigma_json(const SigmaElem& x);

/// Field order is fixed, generators are listed in graded order.
ReportJson saturation_json(const SaturationReport& report);
ReportJson presentation_check_json(const PresentationReport& report);

/// Indented "key: value" rendering of a report object; same fields as the JSON.
std::string render_text(const ReportJson& report);

}  // namespace morava
