#pragma once

// Canonical descriptor syntax:
//
//   X1(n)  X2  X3(n,m)  X4  X5          two-orbit horospherical families
//   B5/P3                               G/P_k, Bourbaki node k
//   G(k,n)+c<c>   OG(k,2k)+c<c>         general linear sections
//   WCI(a0,...,an; d1,...,dc)           weighted complete intersections
//
// Whitespace inside parentheses is ignored.

#include <string_view>

#include "horo/classification.hpp"

namespace horo {

/// Throws ParseError naming the offending token, or DomainError when the
/// syntax is fine but the parameters are invalid.
ClassifiedVariety parse_descriptor(std::string_view text);

HorosphericalFamily parse_family(std::string_view text);

}  // namespace horo
