#include "tripcf/rational.hpp"

#include "tripcf/errors.hpp"

#include <cctype>

namespace tripcf {

Rational parse_rational(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw ParseError("empty rational literal");
    // mpq set_str understands '-' but not an explicit leading '+'.
    if (s[0] == '+') {
        if (s.size() < 2 || !std::isdigit(static_cast<unsigned char>(s[1])))
            throw ParseError("bad rational literal: '" + std::string(text) + "'");
        s.erase(0, 1);
    }
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
                  ((ch == '-' || ch == '+') && (i == 0 || s[i - 1] == '/'));
        if (!ok) throw ParseError("bad rational literal: '" + std::string(text) + "'");
    }
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw ParseError("bad rational literal: '" + std::string(text) + "'");
    }
    if (r.get_den() == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

} // namespace tripcf
