#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gbs/detect.hpp"
#include "gbs/gpm.hpp"
#include "gbs/mcs.hpp"

namespace gbs::io {

using Json = nlohmann::ordered_json;

/// Parses "m,n;m,n;..." (whitespace allowed around numbers and separators).
/// Throws Error(Parse) on malformed text; range and duplicate checks are
/// those of GbsSet.
GbsSet parse_set(std::string_view text, const RingContext &ring);

/// Parses a JSON array of [m, n] pairs.
GbsSet parse_set_json(std::string_view text, const RingContext &ring);

std::string format_set(const GbsSet &s);

Json to_json(GpmCoord c);
Json to_json(const Mcs &mcs);
Json to_json(const DetectionReport &report);

/// Multi-line human-readable report.
void print_report(std::ostream &out, const DetectionReport &report);

}  // namespace gbs::io
