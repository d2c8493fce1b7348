#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl3web/errors.hpp"

namespace sl3web {

// A boundary sign: '+' carries weight 1 (single tableau value, boundary source),
// '-' carries weight 2 (doubled tableau value, boundary sink).
enum class sign : std::uint8_t { plus, minus };

using sign_string = std::vector<sign>;
using composition = std::vector<int>;  // content: multiplicity per value, entries in {1,2}

sign_string parse_signs(const std::string& text);  // "+-+"; throws bad_sign_text
std::string format_signs(const sign_string& s);

int weight(const sign_string& s);                    // #plus + 2 * #minus
composition content_of_sign(const sign_string& s);   // 1 per plus, 2 per minus
sign_string dual_sign(const sign_string& s);         // swap every sign; involution
sign_string rotate_left(const sign_string& s);       // s2..sn s1

inline sign_string all_plus(int n) { return sign_string(n, sign::plus); }

}  // namespace sl3web
