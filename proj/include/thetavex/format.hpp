#pragma once

#include <string>
#include <string_view>

#include "thetavex/classify.hpp"
#include "thetavex/diagram.hpp"
#include "thetavex/theta.hpp"

namespace thetavex {

inline constexpr std::string_view kSchemaVersion = "1";

/// {"k":[...],"p":[...],"q":[...],"n":N}
std::string triple_to_json(const ThetaTriple& t);

/// Reads either the JSON object above or the semicolon text form. A JSON "n"
/// overrides `n`. Throws ParseError or InvalidTripleError.
ThetaTriple parse_triple(std::string_view text, int n = 0);

std::string report_to_json(const ClassificationReport& r, bool pretty = false);
std::string report_to_text(const ClassificationReport& r, bool overline = false);

/// Dots, boxes, crosses and corners of w as a JSON object.
std::string diagram_to_json(const SignedPermutation& w, const CornerSet& cs, bool pretty = false);

std::string construction_to_json(const ThetaTriple& t, const SignedPermutation& w,
                                  const SignedPermutation& inverse, bool pretty = false);

/// "(6,2,-1)"
std::string corner_to_string(const CornerRecord& c);

}  // namespace thetavex
