#include "tripcf/perm.hpp"

#include "tripcf/errors.hpp"

#include <algorithm>
#include <cctype>

namespace tripcf {

Perm3::Perm3(std::array<int, 3> img) : img_(img) {
    std::array<int, 3> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2})
        throw Error("Perm3: images must be a permutation of {0,1,2}");
}

Perm3 Perm3::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s == "e" || s == "()" || s == "id") return Perm3();
    if (s.size() >= 3 && s.front() == '(' && s.back() == ')') {
        std::string body = s.substr(1, s.size() - 2);
        for (char ch : body)
            if (ch != '1' && ch != '2' && ch != '3')
                throw ParseError("bad permutation: '" + std::string(text) + "'");
        for (size_t i = 0; i < body.size(); ++i)
            for (size_t j = i + 1; j < body.size(); ++j)
                if (body[i] == body[j])
                    throw ParseError("bad permutation: '" + std::string(text) + "'");
        if (body.size() == 2 || body.size() == 3) {
            std::array<int, 3> img{0, 1, 2};
            for (size_t i = 0; i < body.size(); ++i) {
                int from = body[i] - '1';
                int to = body[(i + 1) % body.size()] - '1';
                img[from] = to;
            }
            // reject repeated symbols like "(11)"
            std::array<int, 3> sorted = img;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != std::array<int, 3>{0, 1, 2})
                throw ParseError("bad permutation: '" + std::string(text) + "'");
            return Perm3(img);
        }
    }
    throw ParseError("bad permutation: '" + std::string(text) + "'");
}

const std::array<Perm3, 6>& Perm3::all() {
    static const std::array<Perm3, 6> table = {
        Perm3({0, 1, 2}), Perm3({1, 0, 2}), Perm3({2, 1, 0}),
        Perm3({0, 2, 1}), Perm3({1, 2, 0}), Perm3({2, 0, 1}),
    };
    return table;
}

Perm3 Perm3::inverse() const {
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[img_[i]] = i;
    return Perm3(inv);
}

Perm3 compose(const Perm3& a, const Perm3& b) {
    return Perm3({b.img_[a.img_[0]], b.img_[a.img_[1]], b.img_[a.img_[2]]});
}

std::string Perm3::str() const {
    if (is_identity()) return "e";
    // Two-cycles: exactly one fixed point.
    for (int fixed = 0; fixed < 3; ++fixed) {
        if (img_[fixed] != fixed) continue;
        int a = (fixed + 1) % 3, b = (fixed + 2) % 3;
        if (a > b) std::swap(a, b);
        return "(" + std::to_string(a + 1) + std::to_string(b + 1) + ")";
    }
    // Three-cycles, written starting from 1.
    std::string out = "(1";
    int cur = img_[0];
    while (cur != 0) {
        out += std::to_string(cur + 1);
        cur = img_[cur];
    }
    return out + ")";
}

} // namespace tripcf
