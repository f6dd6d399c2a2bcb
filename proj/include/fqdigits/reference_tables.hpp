#pragma once

#include <array>
#include <string_view>

namespace fqdigits::reference_tables {

// Known-good expansion tables the `tables` command must reproduce from
// scratch: 1/M in base x over F_2 (all monic M of degree <= 4 coprime to
// B(B-1), with ord(x, M)) and 1/P in base x^2+x over F_2 (same range,
// necessarily irreducible). Row order is fixed reference data.

inline constexpr std::array<std::string_view, 7> kTable1Rows = {
    "x^2+x+1 | 3 | 0.(0,1,1)",
    "x^3+x+1 | 7 | 0.(0,0,1,0,1,1,1)",
    "x^3+x^2+1 | 7 | 0.(0,0,1,1,1,0,1)",
    "x^4+x^3+1 | 15 | 0.(0,0,0,1,1,1,1,0,1,0,1,1,0,0,1)",
    "x^4+x+1 | 15 | 0.(0,0,0,1,0,0,1,1,0,1,0,1,1,1,1)",
    "x^4+x^3+x^2+x+1 | 5 | 0.(0,0,0,1,1)",
    "x^4+x^2+1 | 6 | 0.(0,0,0,1,0,1)",
};

inline constexpr std::array<std::string_view, 5> kTable2Rows = {
    "x^3+x+1 | 0.(0,x,1,x,1+x,1+x,1)",
    "x^3+x^2+1 | 0.(0,1+x,1,1+x,x,x,1)",
    "x^4+x^3+1 | 0.(0,1,1+x,1,1,x,x,0,1+x,0,x,1+x,1+x,x,1)",
    "x^4+x+1 | 0.(0,1,1)",
    "x^4+x^3+x^2+x+1 | 0.(0,1,x,1,1,1+x,1+x,0,x,0,1+x,x,x,1+x,1)",
};

inline constexpr unsigned kTableMaxDegree = 4;
inline constexpr std::string_view kTable1Base = "x";
inline constexpr std::string_view kTable2Base = "x^2+x";

}  // namespace fqdigits::reference_tables
