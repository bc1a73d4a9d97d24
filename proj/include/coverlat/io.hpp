#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coverlat/approx_space.hpp"
#include "coverlat/classification.hpp"
#include "coverlat/hasse.hpp"
#include "coverlat/verification.hpp"

namespace coverlat::io {

using nlohmann::json;

/// {"universe": [labels], "covering": [[labels], ...]}. Integer labels are
/// accepted and read as their decimal text. Throws `Errc::ParseError` on
/// malformed input, then the covering validation errors.
Covering parse_covering_json(std::string_view text);

/// One block per nonblank line; labels are separated by whitespace, commas
/// or braces, so "{}" is an empty block. Lines starting with '#' are
/// comments. An optional first line "universe: a b c" fixes the universe;
/// otherwise it is the union of the blocks, ordered numerically when every
/// label is an integer and lexicographically otherwise.
Covering parse_covering_text(std::string_view text);

/// JSON when the input starts with '{' and contains a quote, text otherwise.
Covering parse_covering(std::string_view text);
Covering read_covering_file(const std::filesystem::path& path);

/// "{a,b,c}" with elements in universe order; "{}" when empty.
std::string format_subset(const Subset& x, const Universe& universe);
/// "{{1},{2,3}}".
std::string format_family(std::span<const Subset> sets, const Universe& universe);

/// Accepts "{1,4}", "1,4", "1 4", "{}" or "". Throws `Errc::UnknownElement`.
Subset parse_subset(std::string_view text, const Universe& universe);

json subset_json(const Subset& x, const Universe& universe);
json covering_json(const Covering& covering);

json analysis_json(const ApproxSpace& space);
std::string analysis_text(const ApproxSpace& space);

json lattice_json(const FixedPointFamily& family, const ClassificationReport& report);
std::string lattice_text(const FixedPointFamily& family, const ClassificationReport& report);

json summary_json(const VerificationSummary& summary);
std::string summary_text(const VerificationSummary& summary);

/// Bottom-to-top digraph; nodes in (cardinality, bit pattern) order.
std::string to_dot(const HasseDiagram& diagram, const Universe& universe, std::string_view name);

std::string_view family_name(FamilyKind kind) noexcept;

}  // namespace coverlat::io
