#pragma once

#include <array>
#include <string>
#include <string_view>

namespace tripcf {

/// Permutation of {0,1,2}, stored as the image array: img[i] is where index i
/// goes. Text form uses cycle notation on {1,2,3}: "e", "(12)", "(13)",
/// "(23)", "(123)", "(132)".
class Perm3 {
public:
    Perm3() : img_{0, 1, 2} {}
    explicit Perm3(std::array<int, 3> img);

    static Perm3 identity() { return Perm3(); }
    static Perm3 parse(std::string_view text);
    static const std::array<Perm3, 6>& all();

    int operator()(int i) const { return img_[i]; }
    const std::array<int, 3>& images() const { return img_; }

    Perm3 inverse() const;
    /// "Apply a, then b": returns the permutation i -> b(a(i)).
    friend Perm3 compose(const Perm3& a, const Perm3& b);

    bool operator==(const Perm3& o) const { return img_ == o.img_; }
    bool operator!=(const Perm3& o) const { return !(*this == o); }
    bool is_identity() const { return img_ == std::array<int, 3>{0, 1, 2}; }

    std::string str() const;

private:
    std::array<int, 3> img_;
};

} // namespace tripcf
