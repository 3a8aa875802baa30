#pragma once

#include <array>
#include <string_view>

namespace sic::known {

/// Square-free 13-vertex graphs with chromatic number above 3 (graph6).
inline constexpr std::array<std::string_view, 8> kThirteenVertexChiAbove3 = {
    "L?AEB?oDDIQSUS", "L?AEB?oFDHISPS", "L?ABA_oo_iREJa", "L?ABAagF@bWgHc",
    "L?ABEagE`gH``c", "L?AB?vOLDPHa`o", "L?BDA_gEREHcac", "L?`D@bCUCbDgWc",
};

/// Yu-Oh orthogonality graph.
inline constexpr std::string_view kYuOh = "L?AB?vOLDPHa`o";
/// Yu-Oh graph minus one edge; fractional chromatic number 19/6.
inline constexpr std::string_view kYuOhMinusEdge = "L?ABEagE`gH``c";
/// Fractional chromatic number 13/4.
inline constexpr std::string_view kThirteenQuarters = "L?`D@bCUCbDgWc";

}  // namespace sic::known
