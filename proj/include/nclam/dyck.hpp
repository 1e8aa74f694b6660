#ifndef NCLAM_DYCK_HPP
#define NCLAM_DYCK_HPP

#include <string>
#include <string_view>
#include <vector>

namespace nclam {

/// Lattice excursion stored as its height sequence h_0..h_L: starts and ends
/// at zero, moves by +-1 and never goes negative. The zero-step path (0) is a
/// legal degenerate value.
class DyckPath {
public:
    DyckPath() : heights_{0} {}

    // Validates all three excursion invariants, throws NotAnExcursion with
    // the first offending index.
    explicit DyckPath(std::vector<int> heights);

    // Parses a line of 'U'/'D' characters; the empty string is the empty path.
    static DyckPath from_steps(std::string_view updown);

    const std::vector<int>& heights() const { return heights_; }
    int length() const { return static_cast<int>(heights_.size()) - 1; }
    int at(int t) const { return heights_[static_cast<std::size_t>(t)]; }

    std::string to_steps() const;

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend bool operator<(const DyckPath& a, const DyckPath& b) {
        return a.heights_ < b.heights_;
    }

private:
    struct Unchecked {};
    DyckPath(std::vector<int> heights, Unchecked) : heights_(std::move(heights)) {}

    std::vector<int> heights_;

    friend DyckPath marchal_insert(const DyckPath&, int);
    friend DyckPath marchal_lift(const DyckPath&, int);
};

namespace detail {
// Raw move kernels shared with the growth loop, which keeps a bare height
// vector to avoid revalidating O(n) state on every step.
void insert_move_inplace(std::vector<int>& h, int k);
void lift_move_inplace(std::vector<int>& h, int k);
int lift_anchor(const std::vector<int>& h, int k);
}  // namespace detail

/// Inserts an up-step followed by a down-step right after time k.
DyckPath marchal_insert(const DyckPath& p, int k);

/// Raises the sub-path between time k and its last return to height h_k (the
/// anchor l) by one, closing it with a fresh up/down step pair.
DyckPath marchal_lift(const DyckPath& p, int k);

/// The anchor l = max{ j >= k : h_j = h_k and min h over [k, j] = h_k }.
int lift_anchor(const DyckPath& p, int k);

/// Compresses a path whose even-index increments are all +-2 into the path of
/// its halved even heights. Throws NotPairEncodable naming the violating k.
DyckPath halve(const DyckPath& p);

/// Inverse of halve: doubles every height and fills odd positions with the
/// unique interpolating value.
DyckPath double_path(const DyckPath& p);

}  // namespace nclam

#endif
