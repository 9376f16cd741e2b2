#pragma once

#include <string>
#include <string_view>

#include "fusion/ring.hpp"

namespace fusion {

// Line-oriented ring document:
//
//   fusionring 1
//   rank 6
//   labels e g g2 g3 X X'
//   dual 0 3 2 1 5 4
//   meta family moore_read
//   N 1 1 2 1
//   ...
//
// `labels` and `meta` are optional; `N i j k v` lists the nonzero structure
// constants.  serialize_ring emits them sorted lexicographically, so
// parse . serialize is the identity byte for byte.  parse_ring accepts
// blank lines, '#' comments and any entry order, re-indexes the unit to 0
// if needed, and runs verify_ring (structural_error on violation,
// parse_error on malformed text).
FusionRing parse_ring(std::string_view text);
std::string serialize_ring(const FusionRing& r);

FusionRing load_ring(const std::string& path);
void save_ring(const FusionRing& r, const std::string& path);

}  // namespace fusion
