#pragma once

#include <string>

#include "json.hpp"
#include "lot/conjecture.hpp"
#include "lot/decompose.hpp"
#include "lot/enumerate.hpp"
#include "lot/hnn.hpp"

namespace lot {

// Reports are built as JSON documents with a fixed field order; both output
// formats render the same document.
using Json = nlohmann::ordered_json;

Json lot_json(const Lot& lot);
Json validate_report(const Lot& lot);
Json info_report(const Lot& lot);
Json present_report(const Lot& lot);
Json hnn_report_json(const Lot& lot, const HnnReport& rep);
Json derive_report(const Lot& lot, const RelatorSequence& seq);
Json decompose_report(const Lot& lot, const DecompositionReport& rep);
Json enum_report(const EnumerationSpec& spec, const SuiteSummary& summary);
Json conjecture_report(const Lot& lot, const ConjectureDataset& ds);

// Wraps a payload as the single per-invocation document: schema version,
// command name, then the payload fields.
Json envelope(const std::string& command, const Json& payload);

std::string render_structured(const Json& doc);
std::string render_human(const Json& doc);

}  // namespace lot
