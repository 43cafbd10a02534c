#pragma once

#include "tripcf/perm.hpp"
#include "tripcf/rational.hpp"

#include <array>
#include <string>

namespace tripcf {

/// 3x3 integer matrix with exact arithmetic.
class MatrixZ {
public:
    MatrixZ(); // zero matrix
    MatrixZ(std::array<std::array<long, 3>, 3> rows);

    static MatrixZ identity();
    /// Row i carries a 1 in column sigma(i).
    static MatrixZ permutation(const Perm3& sigma);

    const Integer& at(int r, int c) const { return m_[r][c]; }
    Integer& at(int r, int c) { return m_[r][c]; }

    MatrixZ operator*(const MatrixZ& o) const;
    bool operator==(const MatrixZ& o) const { return m_ == o.m_; }
    bool operator!=(const MatrixZ& o) const { return !(*this == o); }

    Integer det() const;
    MatrixZ transpose() const;
    /// Exact inverse; throws unless det is +1 or -1.
    MatrixZ inverse_unimodular() const;
    /// M^e for any integer e (negative exponents require det = +-1).
    MatrixZ pow(long e) const;

    /// Column c as an integer 3-vector.
    std::array<Integer, 3> column(int c) const;

    std::string str() const;

private:
    std::array<std::array<Integer, 3>, 3> m_;
};

/// Generator matrices of the triangle-map family.
const MatrixZ& mat_A0();   // [[0,0,1],[1,0,0],[0,1,1]]
const MatrixZ& mat_A1();   // [[1,0,1],[0,1,0],[0,0,1]]
const MatrixZ& mat_B();    // [[1,1,1],[0,1,1],[0,0,1]]
const MatrixZ& mat_Binv(); // [[1,-1,0],[0,1,-1],[0,0,1]]

} // namespace tripcf
