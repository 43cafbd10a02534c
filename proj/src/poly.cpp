#include "tripcf/poly.hpp"

#include "tripcf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tripcf {

namespace {
const Rational kZero = 0;
}

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::x() { return PolyQ({Rational(0), Rational(1)}); }

PolyQ PolyQ::monic_cubic(const Rational& a, const Rational& b, const Rational& c) {
    return PolyQ({c, b, a, Rational(1)});
}

const Rational& PolyQ::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& PolyQ::lead() const {
    if (is_zero()) return kZero;
    return c_.back();
}

bool PolyQ::is_monic() const { return !is_zero() && lead() == 1; }

bool PolyQ::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& r) { return r.get_den() == 1; });
}

Rational PolyQ::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

PolyQ PolyQ::derivative() const {
    if (degree() < 1) return PolyQ();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const {
    if (is_zero() || is_monic()) return *this;
    Rational inv = 1 / lead();
    return *this * inv;
}

PolyQ PolyQ::operator-() const {
    std::vector<Rational> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return PolyQ(std::move(d));
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rational> d(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) d[i] += o.c_[i];
    return PolyQ(std::move(d));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    std::vector<Rational> d(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
    return PolyQ(std::move(d));
}

PolyQ PolyQ::operator*(const Rational& s) const {
    std::vector<Rational> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * s;
    return PolyQ(std::move(d));
}

std::string PolyQ::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sign(c) < 0) out << "-";
            first = false;
        } else {
            out << (sign(c) < 0 ? "-" : "+");
        }
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i >= 1) {
            out << "x";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw DivByZero("polynomial division by zero");
    PolyQ r = a;
    std::vector<Rational> q(
        a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree() + 1) : 0,
        Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational factor = r.lead() / b.lead();
        q[static_cast<size_t>(shift)] = factor;
        std::vector<Rational> sub(static_cast<size_t>(shift), Rational(0));
        sub.push_back(factor);
        r = r - b * PolyQ(std::move(sub));
    }
    return {PolyQ(std::move(q)), r};
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_squarefree(const PolyQ& p) {
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

Rational discriminant(const PolyQ& p) {
    if (p.degree() != 3) throw Error("discriminant requires a degree-3 polynomial");
    const Rational &a = p.coeff(3), &b = p.coeff(2), &c = p.coeff(1), &d = p.coeff(0);
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

bool is_irreducible_cubic(const PolyQ& p) {
    if (p.degree() != 3 || !p.is_monic() || !p.has_integer_coeffs())
        throw Error("irreducibility test requires a monic integer cubic");
    Integer c0 = p.coeff(0).get_num();
    if (c0 == 0) return false; // root 0
    // A monic integer cubic is reducible over Q iff it has an integer root,
    // and any integer root divides the constant term.
    Integer n = abs(c0);
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const Integer divisors[2] = {d, Integer(n / d)};
        for (const Integer& cand : divisors) {
            for (int s : {1, -1}) {
                Rational r(s * cand);
                if (p.eval(r) == 0) return false;
            }
        }
    }
    return true;
}

namespace {

// Parses one term of display text, e.g. "2x^2", "-x", "1/2", "+x^3".
struct TermParser {
    std::string s;
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    Rational parse_coeff_digits() {
        size_t start = pos;
        while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
            ++pos;
        return parse_rational(s.substr(start, pos - start));
    }
};

} // namespace

PolyQ parse_poly(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty polynomial");

    TermParser tp{std::move(s)};
    std::vector<Rational> coeffs;
    auto bump = [&](int deg, const Rational& c) {
        if (deg >= static_cast<int>(coeffs.size()))
            coeffs.resize(static_cast<size_t>(deg) + 1, Rational(0));
        coeffs[static_cast<size_t>(deg)] += c;
    };

    bool expect_term = true;
    int term_sign = 1;
    while (!tp.done()) {
        char ch = tp.peek();
        if (ch == '+' || ch == '-') {
            if (expect_term && ch == '-') term_sign = -term_sign;
            else if (expect_term && ch == '+') {
                // leading plus, ignore
            } else {
                term_sign = (ch == '-') ? -1 : 1;
            }
            ++tp.pos;
            expect_term = true;
            continue;
        }
        Rational coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coeff = tp.parse_coeff_digits();
            saw_coeff = true;
        }
        int deg = 0;
        if (!tp.done() && (tp.peek() == 'x' || tp.peek() == 'X')) {
            ++tp.pos;
            deg = 1;
            if (!tp.done() && tp.peek() == '^') {
                ++tp.pos;
                size_t start = tp.pos;
                while (!tp.done() && std::isdigit(static_cast<unsigned char>(tp.peek())))
                    ++tp.pos;
                if (start == tp.pos) throw ParseError("missing exponent in '" + tp.s + "'");
                deg = std::stoi(tp.s.substr(start, tp.pos - start));
            }
        } else if (!saw_coeff) {
            throw ParseError("unexpected character in polynomial: '" + tp.s + "'");
        }
        bump(deg, coeff * term_sign);
        term_sign = 1;
        expect_term = false;
    }
    if (expect_term) throw ParseError("dangling sign in polynomial");
    return PolyQ(std::move(coeffs));
}

PolyQ parse_cubic(std::string_view text) {
    std::string s(text);
    if (s.find(',') != std::string::npos) {
        std::vector<Rational> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
        if (parts.size() == 3)
            return PolyQ::monic_cubic(parts[0], parts[1], parts[2]);
        if (parts.size() == 4) {
            if (parts[0] != 1)
                throw ParseError("four-coefficient cubics must have leading coefficient 1");
            return PolyQ::monic_cubic(parts[1], parts[2], parts[3]);
        }
        throw ParseError("expected 3 or 4 comma-separated coefficients");
    }
    PolyQ p = parse_poly(s);
    if (p.degree() != 3) throw ParseError("expected a cubic, got degree " +
                                          std::to_string(p.degree()));
    return p;
}

} // namespace tripcf
