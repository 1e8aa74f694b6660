#ifndef NCLAM_GEOMETRY_HPP
#define NCLAM_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nclam/partition.hpp"
#include "nclam/rng.hpp"

namespace nclam {

/// Angle as an exact reduced fraction of a full turn in [0, 1). Chord
/// identity must be exact for set semantics; floating point enters only in
/// distance and rendering calls.
struct Angle {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Angle of(std::int64_t num, std::int64_t den);

    double turns() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Angle&, const Angle&) = default;
    friend bool operator<(const Angle& a, const Angle& b) {
        return a.num * b.den < b.num * a.den;
    }
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

Vec2 circle_point(const Angle& a);

/// Chord of the unit disk between two boundary angles; degenerate chords
/// (a == b) stand for single boundary points.
struct Chord {
    Angle a, b;  // canonical: a <= b

    static Chord between(Angle u, Angle v);
    bool degenerate() const { return a == b; }

    friend bool operator==(const Chord&, const Chord&) = default;
    friend bool operator<(const Chord& l, const Chord& r) {
        if (l.a == r.a) return l.b < r.b;
        return l.a < r.a;
    }
};

/// Finite union of pairwise noncrossing chords, stored canonically sorted
/// and deduplicated.
class Lamination {
public:
    Lamination() = default;
    explicit Lamination(std::vector<Chord> chords);

    const std::vector<Chord>& chords() const { return chords_; }
    bool empty() const { return chords_.empty(); }
    std::size_t size() const { return chords_.size(); }

    /// Exact pairwise crossing audit (endpoints may coincide); O(m^2), used
    /// by tests rather than on every construction.
    bool pairwise_noncrossing() const;

    friend bool operator==(const Lamination&, const Lamination&) = default;

private:
    std::vector<Chord> chords_;
};

/// Block polygons of a partition, frame-aware: even-slot element i sits at
/// angle i/n, odd-slot at (2i+1)/(2n). Singleton blocks contribute their
/// degenerate point chord.
Lamination lamination_of(const NoncrossingPartition& p);

/// Same polygons with vertex k of P_n drawn at the fused-pair angle
/// (4k-1)/(4n), the midpoint of the two P_{2n} positions vertex k replaces.
/// This is the embedding under which a pair partition and its merged image
/// stay within pi/(2n) of each other.
Lamination merged_frame_lamination(const NoncrossingPartition& p);

/// Directed Hausdorff distance estimate: chords of `from` are sampled at
/// Euclidean spacing <= delta (endpoints always included) and the exact
/// point-to-chord-set distance to `to` is maximized. Result is within
/// delta/2 of the true directed distance. Throws EmptyLamination.
double directed_hausdorff(const Lamination& from, const Lamination& to, double delta);

/// Symmetric Hausdorff distance: max of the two directed estimates.
double hausdorff(const Lamination& a, const Lamination& b, double delta);

/// Finite stand-in for the Brownian triangulation: the lamination of a
/// uniform noncrossing partition of P_m drawn through a uniform 2m-step path.
Lamination brownian_triangulation_sample(int m, SplitMix64& rng);

struct RenderOptions {
    int size_px = 800;
    std::string chord_color = "#1f4e79";
    std::string overlay_color = "#c0392b";
    std::string circle_color = "#444444";
};

/// Deterministic SVG document: the unit circle plus one path element per
/// chord (degenerate chords become round-capped dots), optional overlay in a
/// second color.
std::string render_svg(const Lamination& l, const RenderOptions& options = {},
                       const Lamination* overlay = nullptr);

}  // namespace nclam

#endif
