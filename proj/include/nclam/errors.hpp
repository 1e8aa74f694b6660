#ifndef NCLAM_ERRORS_HPP
#define NCLAM_ERRORS_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace nclam {

// A height sequence broke one of the excursion invariants; `index` is the
// first offending position.
struct NotAnExcursion : std::runtime_error {
    NotAnExcursion(const std::string& msg, std::size_t index)
        : std::runtime_error(msg), index(index) {}
    std::size_t index;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Some even-index increment of the path is not +-2; `k` is the violating step.
struct NotPairEncodable : std::runtime_error {
    NotPairEncodable(const std::string& msg, std::size_t k)
        : std::runtime_error(msg), k(k) {}
    std::size_t k;
};

struct NotAPartition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Indices a < b < c < d with a, c in one block and b, d in another.
struct CrossingBlocks : std::runtime_error {
    CrossingBlocks(const std::string& msg, std::array<int, 4> witness)
        : std::runtime_error(msg), witness(witness) {}
    std::array<int, 4> witness;
};

struct NotAPairPartition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyLamination : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedTrajectory : std::runtime_error {
    MalformedTrajectory(const std::string& msg, std::size_t step)
        : std::runtime_error(msg), step(step) {}
    std::size_t step;
};

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nclam

#endif
