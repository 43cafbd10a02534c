#include "tripcf/matrix.hpp"

#include "tripcf/errors.hpp"

#include <sstream>

namespace tripcf {

MatrixZ::MatrixZ() : m_{} {}

MatrixZ::MatrixZ(std::array<std::array<long, 3>, 3> rows) {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m_[r][c] = rows[r][c];
}

MatrixZ MatrixZ::identity() {
    return MatrixZ({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

MatrixZ MatrixZ::permutation(const Perm3& sigma) {
    MatrixZ p;
    for (int i = 0; i < 3; ++i) p.m_[i][sigma(i)] = 1;
    return p;
}

MatrixZ MatrixZ::operator*(const MatrixZ& o) const {
    MatrixZ out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Integer s = 0;
            for (int k = 0; k < 3; ++k) s += m_[r][k] * o.m_[k][c];
            out.m_[r][c] = s;
        }
    return out;
}

Integer MatrixZ::det() const {
    return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
           m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
           m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

MatrixZ MatrixZ::transpose() const {
    MatrixZ out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.m_[r][c] = m_[c][r];
    return out;
}

MatrixZ MatrixZ::inverse_unimodular() const {
    Integer d = det();
    if (d != 1 && d != -1)
        throw Error("inverse_unimodular: determinant is " + to_string(d) + ", need +-1");
    MatrixZ adj;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            // Cofactor expansion: adj[c][r] = (-1)^(r+c) * minor(r, c).
            int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
            int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
            // Using cyclic complements keeps the sign pattern implicit.
            adj.m_[c][r] = m_[r1][c1] * m_[r2][c2] - m_[r1][c2] * m_[r2][c1];
        }
    if (d == -1)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) adj.m_[r][c] = -adj.m_[r][c];
    return adj;
}

MatrixZ MatrixZ::pow(long e) const {
    if (e < 0) return inverse_unimodular().pow(-e);
    MatrixZ result = identity();
    MatrixZ base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1UL) result = result * base;
        base = base * base;
        n >>= 1UL;
    }
    return result;
}

std::array<Integer, 3> MatrixZ::column(int c) const {
    return {m_[0][c], m_[1][c], m_[2][c]};
}

std::string MatrixZ::str() const {
    std::ostringstream os;
    os << '[';
    for (int r = 0; r < 3; ++r) {
        os << '[';
        for (int c = 0; c < 3; ++c) {
            os << to_string(m_[r][c]);
            if (c < 2) os << ',';
        }
        os << ']';
        if (r < 2) os << ',';
    }
    os << ']';
    return os.str();
}

const MatrixZ& mat_A0() {
    static const MatrixZ m({{{0, 0, 1}, {1, 0, 0}, {0, 1, 1}}});
    return m;
}

const MatrixZ& mat_A1() {
    static const MatrixZ m({{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}});
    return m;
}

const MatrixZ& mat_B() {
    static const MatrixZ m({{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}});
    return m;
}

const MatrixZ& mat_Binv() {
    static const MatrixZ m({{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}});
    return m;
}

} // namespace tripcf
