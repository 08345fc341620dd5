#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "spinchain/sequence.hpp"

namespace spinchain {

// Line-based pulse-program format, one event per line:
//
//   pulse <all|i,j,...> <x|y|z> <angle_deg>
//   delay <seconds> [only=<c1,c2,...>]
//   effpair <a> <b> <x|y|z> <angle_deg> [dur=<seconds>]
//
// Spins and couplings are 1-based; coupling c joins spins c and c + 1. '#'
// starts a comment. When n is given, indices are range-checked against it;
// otherwise the chain length is the largest index referenced.
//
// Throws ParseError carrying the 1-based line number.
PulseSequence parse_sequence(std::string_view text, std::optional<int> n = std::nullopt);

// Canonical text with 12 significant digits. Round-trips through
// parse_sequence.
std::string format_sequence(const PulseSequence& seq);

std::string format_event(const SequenceEvent& event);

}  // namespace spinchain
