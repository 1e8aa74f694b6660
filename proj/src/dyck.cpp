#include "nclam/dyck.hpp"

#include <cstdlib>
#include <utility>

#include "nclam/errors.hpp"

namespace nclam {

DyckPath::DyckPath(std::vector<int> heights) {
    if (heights.empty())
        throw NotAnExcursion("empty height sequence (the zero-step path is (0))", 0);
    if (heights.front() != 0)
        throw NotAnExcursion("path does not start at height 0", 0);
    for (std::size_t t = 1; t < heights.size(); ++t) {
        if (std::abs(heights[t] - heights[t - 1]) != 1)
            throw NotAnExcursion("step is not +-1 at index " + std::to_string(t), t);
        if (heights[t] < 0)
            throw NotAnExcursion("negative height at index " + std::to_string(t), t);
    }
    if (heights.back() != 0)
        throw NotAnExcursion("path does not end at height 0", heights.size() - 1);
    heights_ = std::move(heights);
}

DyckPath DyckPath::from_steps(std::string_view updown) {
    std::vector<int> h;
    h.reserve(updown.size() + 1);
    h.push_back(0);
    for (std::size_t i = 0; i < updown.size(); ++i) {
        char c = updown[i];
        if (c == 'U' || c == 'u')
            h.push_back(h.back() + 1);
        else if (c == 'D' || c == 'd')
            h.push_back(h.back() - 1);
        else
            throw ParseError("unexpected character '" + std::string(1, c) +
                             "' in step string at position " + std::to_string(i));
    }
    return DyckPath(std::move(h));
}

std::string DyckPath::to_steps() const {
    std::string s;
    s.reserve(heights_.size() - 1);
    for (std::size_t t = 1; t < heights_.size(); ++t)
        s.push_back(heights_[t] > heights_[t - 1] ? 'U' : 'D');
    return s;
}

namespace detail {

void insert_move_inplace(std::vector<int>& h, int k) {
    const int L = static_cast<int>(h.size()) - 1;
    if (k < 0 || k > L)
        throw IndexOutOfRange("insert position " + std::to_string(k) +
                              " beyond path length " + std::to_string(L));
    const int v = h[static_cast<std::size_t>(k)];
    h.insert(h.begin() + k + 1, {v + 1, v});
}

int lift_anchor(const std::vector<int>& h, int k) {
    const int L = static_cast<int>(h.size()) - 1;
    if (k < 0 || k > L)
        throw IndexOutOfRange("lift position " + std::to_string(k) +
                              " beyond path length " + std::to_string(L));
    const int base = h[static_cast<std::size_t>(k)];
    int l = k;
    for (int j = k + 1; j <= L; ++j) {
        if (h[static_cast<std::size_t>(j)] < base) break;  // first dip below h_k
        if (h[static_cast<std::size_t>(j)] == base) l = j;
    }
    return l;
}

void lift_move_inplace(std::vector<int>& h, int k) {
    const int l = lift_anchor(h, k);  // also range-checks k
    std::vector<int> out;
    out.reserve(h.size() + 2);
    out.insert(out.end(), h.begin(), h.begin() + k + 1);
    out.push_back(h[static_cast<std::size_t>(k)] + 1);
    for (int j = k + 1; j <= l; ++j) out.push_back(h[static_cast<std::size_t>(j)] + 1);
    out.push_back(h[static_cast<std::size_t>(l)]);
    out.insert(out.end(), h.begin() + l + 1, h.end());
    h = std::move(out);
}

}  // namespace detail

DyckPath marchal_insert(const DyckPath& p, int k) {
    std::vector<int> h = p.heights();
    detail::insert_move_inplace(h, k);
    return DyckPath(std::move(h), DyckPath::Unchecked{});
}

DyckPath marchal_lift(const DyckPath& p, int k) {
    std::vector<int> h = p.heights();
    detail::lift_move_inplace(h, k);
    return DyckPath(std::move(h), DyckPath::Unchecked{});
}

int lift_anchor(const DyckPath& p, int k) { return detail::lift_anchor(p.heights(), k); }

DyckPath halve(const DyckPath& p) {
    const auto& h = p.heights();
    const std::size_t L = h.size() - 1;
    std::vector<int> half;
    half.reserve(L / 2 + 1);
    half.push_back(0);
    for (std::size_t k = 0; k + 2 <= L; k += 2) {
        if (std::abs(h[k + 2] - h[k]) != 2)
            throw NotPairEncodable(
                "even-index increment is not +-2 at k=" + std::to_string(k / 2), k / 2);
        half.push_back(h[k + 2] / 2);
    }
    return DyckPath(std::move(half));
}

DyckPath double_path(const DyckPath& p) {
    const auto& h = p.heights();
    std::vector<int> full;
    full.reserve(2 * h.size() - 1);
    full.push_back(0);
    for (std::size_t k = 0; k + 1 < h.size(); ++k) {
        // midpoint of 2*h_k and 2*h_{k+1}, the unique value adjacent to both
        full.push_back(h[k] + h[k + 1]);
        full.push_back(2 * h[k + 1]);
    }
    return DyckPath(std::move(full));
}

}  // namespace nclam
