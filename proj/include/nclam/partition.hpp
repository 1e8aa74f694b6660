#ifndef NCLAM_PARTITION_HPP
#define NCLAM_PARTITION_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nclam/dyck.hpp"

namespace nclam {

/// Which interleaved slots of the 2n-th roots of unity the elements occupy.
/// Even slots: element i sits at angle i/n of a turn (the default polygon
/// vertices). Odd slots: element i sits at angle (2i+1)/(2n) of a turn, the
/// frame of Kreweras complements.
enum class Frame { EvenSlots, OddSlots };

/// Partition of the vertices of the regular n-gon whose blocks have pairwise
/// disjoint convex hulls. Blocks are kept canonical: each ascending, the list
/// ordered by smallest element. Values are immutable once constructed.
class NoncrossingPartition {
public:
    // Validates and canonicalizes. Throws NotAPartition when the blocks do
    // not partition {0,..,n-1} and CrossingBlocks (with a witness quadruple
    // a<b<c<d) when two hulls intersect.
    NoncrossingPartition(int n, std::vector<std::vector<int>> blocks,
                         Frame frame = Frame::EvenSlots);

    int size() const { return n_; }
    Frame frame() const { return frame_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    int block_count() const { return static_cast<int>(blocks_.size()); }
    int block_of(int v) const { return block_of_[static_cast<std::size_t>(v)]; }

    bool is_pair() const;

    std::string to_line() const;
    static NoncrossingPartition parse(std::string_view line);

    friend bool operator==(const NoncrossingPartition& a, const NoncrossingPartition& b) {
        return a.n_ == b.n_ && a.frame_ == b.frame_ && a.blocks_ == b.blocks_;
    }
    friend bool operator<(const NoncrossingPartition& a, const NoncrossingPartition& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        if (a.frame_ != b.frame_) return a.frame_ < b.frame_;
        return a.blocks_ < b.blocks_;
    }

private:
    int n_;
    Frame frame_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

/// Free-function alias of the validating constructor.
NoncrossingPartition check_noncrossing(int n, std::vector<std::vector<int>> blocks,
                                       Frame frame = Frame::EvenSlots);

/// Kreweras complement: the partition of the opposite-parity slots whose
/// blocks are the connected components of the disk minus the lamination.
/// Even-frame input yields an odd-frame partition and vice versa; applying it
/// twice returns the original partition.
NoncrossingPartition kreweras(const NoncrossingPartition& p);

/// The 2n-step Dyck path of breadth-first block labels around the circle.
/// Requires the even-slot frame.
DyckPath encode(const NoncrossingPartition& p);

/// Inverse of encode. First component: equivalence classes of even path
/// indices (the partition, even frame); second: classes of odd indices (its
/// Kreweras complement, odd frame).
std::pair<NoncrossingPartition, NoncrossingPartition> decode(const DyckPath& p);

/// Grows P_{n+1} from P_n by adding a vertex to the block at position k.
/// Path-level semantics: decode(marchal_insert(encode(p), k)).
NoncrossingPartition insert_vertex(const NoncrossingPartition& p, int k);

/// Grows P_{n+1} by splitting the block of position k along the chord to its
/// anchor l. Path-level semantics: decode(marchal_lift(encode(p), k)).
NoncrossingPartition slice(const NoncrossingPartition& p, int k);

bool is_pair(const NoncrossingPartition& p);

/// Encodes a pair partition of P_{2n} as an unconstrained 2n-step Dyck path:
/// the vertices are rotated onto the odd 4n-th-root slots, the full 4n-step
/// labeling is computed with label 0 on the block of slot 0, and the even
/// subsequence is halved.
DyckPath encode_pair(const NoncrossingPartition& p);

/// Inverse of encode_pair; always produces a pair partition of P_{2n}.
NoncrossingPartition decode_pair(const DyckPath& p);

NoncrossingPartition insert_short_chord(const NoncrossingPartition& p, int k);
NoncrossingPartition insert_long_chord(const NoncrossingPartition& p, int k);

/// Collapses a pair partition of P_{2n} to a noncrossing partition of P_n by
/// fusing positions 2k-1 and 2k into merged vertex k.
NoncrossingPartition pair_to_ncp(const NoncrossingPartition& p);

/// Relabels every element v to (v + shift) mod n. Same frame.
NoncrossingPartition rotate(const NoncrossingPartition& p, int shift);

/// Reinterprets the same index blocks under another frame tag.
NoncrossingPartition with_frame(const NoncrossingPartition& p, Frame frame);

}  // namespace nclam

#endif
