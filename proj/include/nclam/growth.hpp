#ifndef NCLAM_GROWTH_HPP
#define NCLAM_GROWTH_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "nclam/partition.hpp"
#include "nclam/rng.hpp"

namespace nclam {

enum class Model { Ncp, Pair };

enum class MoveKind { InsertVertex, Slice, ShortChord, LongChord };

struct GrowthMove {
    MoveKind kind;
    int k;
    friend bool operator==(const GrowthMove&, const GrowthMove&) = default;
};

/// Seed plus per-step move records; replaying the moves from the base object
/// reproduces every intermediate partition of a run.
struct GrowthTrajectory {
    Model model = Model::Ncp;
    std::uint64_t seed = 0;
    std::vector<GrowthMove> moves;

    friend bool operator==(const GrowthTrajectory&, const GrowthTrajectory&) = default;

    void write(std::ostream& out) const;
    static GrowthTrajectory read(std::istream& in);
};

struct GrowResult {
    NoncrossingPartition partition;
    GrowthTrajectory trajectory;
};

/// Random recursive growth of a uniform noncrossing partition of P_n:
/// starting from P_1, each step draws k uniform on {0,..,2t} and applies
/// insert-vertex or slice with probability 1/2 each.
GrowResult grow_ncp(int n_target, std::uint64_t seed);

/// The pair analog: starting from the one pair partition of P_2, each step
/// inserts a short or long chord at a uniform position, producing a uniform
/// noncrossing pair partition of P_{2 n_target}.
GrowResult grow_pair(int n_target, std::uint64_t seed);

/// Deterministically re-applies a trajectory. Throws MalformedTrajectory when
/// a move kind does not match the model or k exceeds 2t at step t.
NoncrossingPartition replay_final(const GrowthTrajectory& t);

/// All intermediate partitions including the base object. Materializes the
/// whole sequence; intended for desk-scale trajectories.
std::vector<NoncrossingPartition> replay_all(const GrowthTrajectory& t);

/// Streams the encoding path after every step (step 0 = base object) without
/// materializing partitions; the workhorse behind convergence measurements.
void replay_paths(const GrowthTrajectory& t,
                  const std::function<void(int step, const std::vector<int>& heights)>& visit);

/// Exactly uniform 2m-step Dyck path: a balanced +-1 word rotated at its last
/// prefix-sum minimum (cycle lemma).
DyckPath uniform_dyck_path(int m, SplitMix64& rng);

/// Independent exactly-uniform samplers, used where coupled growth sequences
/// would bias statistics.
NoncrossingPartition uniform_ncp_direct(int n, SplitMix64& rng);
NoncrossingPartition uniform_pair_direct(int n, SplitMix64& rng);

std::string to_string(Model model);
std::string to_string(MoveKind kind);

}  // namespace nclam

#endif
