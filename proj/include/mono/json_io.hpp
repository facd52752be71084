#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mono/construction.hpp"
#include "mono/counterexample.hpp"
#include "mono/evaluator.hpp"
#include "mono/group.hpp"
#include "mono/norm.hpp"
#include "mono/verification.hpp"

namespace mono {

using json = nlohmann::ordered_json;

inline constexpr int kFileVersion = 1;

json to_json(const GroupDescriptor& g);
GroupDescriptor descriptor_from_json(const json& j);

json to_json(const NormSpec& spec);
NormSpec spec_from_json(const json& j);

/// Free coordinates followed by torsion coordinates.
json to_json(const HElement& h);
HElement helement_from_json(const GroupDescriptor& g, const json& j);

/// {"h": [...], "k": "<int>"}; k may also be given as a JSON integer.
json to_json(const ExtElement& x);
ExtElement element_from_json(const GroupDescriptor& g, const json& j);

json to_json(const Decomposition& d);
json to_json(const EvalResult& r);
json to_json(const DensityWitness& w);
json to_json(const SuiteReport& r, bool with_timing = false);
json to_json(const ContradictionReport& r);
json summary_to_json(const ScanSummary& s);

json to_json(const AnchorTable& table);
/// Recomputes pi, k and delta and the anchor targets; throws CorruptedTableError on any
/// mismatch and ParseError on a malformed or wrong-version document.
AnchorTable table_from_json(const json& j);

/// The norm-independent part of a table: {"pi": [[m, j], ...], "delta": [...], "k": [...]}.
json shared_block(const AnchorTable& table);

void save_table(const AnchorTable& table, const std::filesystem::path& path);
AnchorTable load_table(const std::filesystem::path& path);

/// Parses text as JSON; throws ParseError with `what` in the message on failure.
json parse_json(const std::string& text, const std::string& what);

}  // namespace mono
