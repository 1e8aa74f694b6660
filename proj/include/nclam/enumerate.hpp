#ifndef NCLAM_ENUMERATE_HPP
#define NCLAM_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "nclam/dyck.hpp"
#include "nclam/partition.hpp"

namespace nclam {

/// Exhaustive small-n catalog, the ground truth behind the statistical and
/// bijection tests. Objects are deduplicated and canonically ordered.
struct PartitionTable {
    int n = 0;
    std::vector<NoncrossingPartition> objects;
};

struct PathTable {
    int steps = 0;
    std::vector<DyckPath> objects;
};

/// All noncrossing partitions of P_n, found by generating every set
/// partition as a restricted-growth string and keeping those that pass the
/// quadruple crossing scan. Deliberately independent of the Dyck encoding.
/// Guard: n <= 12.
PartitionTable enumerate_ncp(int n);

/// All noncrossing pair partitions of P_n (n even): brute-force perfect
/// matchings filtered by chord crossings. Guard: n <= 16.
PartitionTable enumerate_pair(int n);

/// All Dyck paths with the given number of steps, by height backtracking.
/// Guard: steps <= 20.
PathTable enumerate_dyck(int steps);

/// C_n = binom(2n, n) / (n + 1), evaluated incrementally in exact integers.
std::uint64_t catalan(int n);

}  // namespace nclam

#endif
