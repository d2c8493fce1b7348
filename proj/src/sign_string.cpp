#include "sl3web/sign_string.hpp"

#include <algorithm>

namespace sl3web {

sign_string parse_signs(const std::string& text) {
    sign_string s;
    s.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '+': s.push_back(sign::plus); break;
            case '-': s.push_back(sign::minus); break;
            default: fail(errc::bad_sign_text, std::string("unexpected character '") + c + "' in sign string");
        }
    }
    return s;
}

std::string format_signs(const sign_string& s) {
    std::string out;
    out.reserve(s.size());
    for (sign x : s) out.push_back(x == sign::plus ? '+' : '-');
    return out;
}

int weight(const sign_string& s) {
    int w = 0;
    for (sign x : s) w += x == sign::plus ? 1 : 2;
    return w;
}

composition content_of_sign(const sign_string& s) {
    composition parts;
    parts.reserve(s.size());
    for (sign x : s) parts.push_back(x == sign::plus ? 1 : 2);
    return parts;
}

sign_string dual_sign(const sign_string& s) {
    sign_string d;
    d.reserve(s.size());
    for (sign x : s) d.push_back(x == sign::plus ? sign::minus : sign::plus);
    return d;
}

sign_string rotate_left(const sign_string& s) {
    if (s.empty()) return s;
    sign_string r(s.begin() + 1, s.end());
    r.push_back(s.front());
    return r;
}

}  // namespace sl3web
