#include "nclam/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nclam/errors.hpp"
#include "nclam/growth.hpp"

namespace nclam {

Angle Angle::of(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("angle denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return Angle{num / g, den / g};
}

Vec2 circle_point(const Angle& a) {
    double th = 2.0 * std::numbers::pi * a.turns();
    return {std::cos(th), std::sin(th)};
}

Chord Chord::between(Angle u, Angle v) {
    if (v < u) std::swap(u, v);
    return Chord{u, v};
}

Lamination::Lamination(std::vector<Chord> chords) : chords_(std::move(chords)) {
    std::sort(chords_.begin(), chords_.end());
    chords_.erase(std::unique(chords_.begin(), chords_.end()), chords_.end());
}

bool Lamination::pairwise_noncrossing() const {
    for (std::size_t i = 0; i < chords_.size(); ++i) {
        if (chords_[i].degenerate()) continue;
        for (std::size_t j = i + 1; j < chords_.size(); ++j) {
            if (chords_[j].degenerate()) continue;
            const Chord& c = chords_[i];
            const Chord& d = chords_[j];
            // strict cyclic interleaving of endpoints
            bool cross = (c.a < d.a && d.a < c.b && c.b < d.b) ||
                         (d.a < c.a && c.a < d.b && d.b < c.b);
            if (cross) return false;
        }
    }
    return true;
}

namespace {

Angle element_angle(const NoncrossingPartition& p, int i) {
    if (p.frame() == Frame::EvenSlots) return Angle::of(i, p.size());
    return Angle::of(2 * i + 1, 2 * static_cast<std::int64_t>(p.size()));
}

Lamination lamination_with_angles(const NoncrossingPartition& p,
                                  const std::vector<Angle>& at) {
    std::vector<Chord> chords;
    for (const auto& block : p.blocks()) {
        if (block.size() == 1) {
            chords.push_back(Chord::between(at[static_cast<std::size_t>(block[0])],
                                            at[static_cast<std::size_t>(block[0])]));
        } else if (block.size() == 2) {
            chords.push_back(Chord::between(at[static_cast<std::size_t>(block[0])],
                                            at[static_cast<std::size_t>(block[1])]));
        } else {
            for (std::size_t i = 0; i < block.size(); ++i) {
                int u = block[i];
                int v = block[(i + 1) % block.size()];
                chords.push_back(Chord::between(at[static_cast<std::size_t>(u)],
                                                at[static_cast<std::size_t>(v)]));
            }
        }
    }
    return Lamination(std::move(chords));
}

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab{b.x - a.x, b.y - a.y};
    double len2 = dot(ab, ab);
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(dot({p.x - a.x, p.y - a.y}, ab) / len2, 0.0, 1.0);
    Vec2 q{a.x + t * ab.x - p.x, a.y + t * ab.y - p.y};
    return std::sqrt(dot(q, q));
}

// Uniform grid over the disk bounding box. Every cell a segment passes
// through holds its index, so the cell containing the nearest point of the
// nearest segment is always reached by the expanding-ring query below.
class SegmentIndex {
public:
    explicit SegmentIndex(const Lamination& l) {
        const int m = static_cast<int>(l.size());
        // finer grid for bigger laminations, bounded both ways
        grid_ = std::clamp(static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m)) * 6.0)),
                           8, 192);
        cell_ = extent_ / grid_;
        cells_.assign(static_cast<std::size_t>(grid_) * static_cast<std::size_t>(grid_), {});
        a_.reserve(l.size());
        b_.reserve(l.size());
        for (const Chord& c : l.chords()) {
            Vec2 a = circle_point(c.a);
            Vec2 b = circle_point(c.b);
            int id = static_cast<int>(a_.size());
            a_.push_back(a);
            b_.push_back(b);
            rasterize(a, b, id);
        }
        stamp_.assign(a_.size(), -1);
    }

    double nearest(Vec2 p) const {
        ++query_;
        double best = std::numeric_limits<double>::infinity();
        int cx = cell_index(p.x);
        int cy = cell_index(p.y);
        for (int r = 0;; ++r) {
            if (r > 0 && best <= (r - 1) * cell_) break;
            if (r >= 2 * grid_) break;
            bool any = scan_ring(p, cx, cy, r, best);
            (void)any;
        }
        assert(best < std::numeric_limits<double>::infinity());
        return best;
    }

private:
    static constexpr double origin_ = -1.04;
    static constexpr double extent_ = 2.08;

    int cell_index(double v) const {
        int i = static_cast<int>(std::floor((v - origin_) / cell_));
        return std::clamp(i, 0, grid_ - 1);
    }

    void mark(int x, int y, int id) {
        if (x < 0 || y < 0 || x >= grid_ || y >= grid_) return;
        auto& bucket = cells_[static_cast<std::size_t>(y) * static_cast<std::size_t>(grid_) + static_cast<std::size_t>(x)];
        if (bucket.empty() || bucket.back() != id) bucket.push_back(id);
    }

    // Conservative supercover: marks every cell whose closed region the
    // segment meets, by stepping through cell borders.
    void rasterize(Vec2 a, Vec2 b, int id) {
        int x = cell_index(a.x), y = cell_index(a.y);
        int xe = cell_index(b.x), ye = cell_index(b.y);
        mark(x, y, id);
        double dx = b.x - a.x, dy = b.y - a.y;
        int sx = dx > 0 ? 1 : -1;
        int sy = dy > 0 ? 1 : -1;
        double tx = dx != 0.0
                        ? ((origin_ + (x + (sx > 0 ? 1 : 0)) * cell_) - a.x) / dx
                        : std::numeric_limits<double>::infinity();
        double ty = dy != 0.0
                        ? ((origin_ + (y + (sy > 0 ? 1 : 0)) * cell_) - a.y) / dy
                        : std::numeric_limits<double>::infinity();
        double tdx = dx != 0.0 ? std::fabs(cell_ / dx) : std::numeric_limits<double>::infinity();
        double tdy = dy != 0.0 ? std::fabs(cell_ / dy) : std::numeric_limits<double>::infinity();
        int guard = 4 * grid_ + 8;
        while ((x != xe || y != ye) && guard-- > 0) {
            if (tx <= ty) {
                x += sx;
                tx += tdx;
            } else {
                y += sy;
                ty += tdy;
            }
            mark(x, y, id);
            // border-touching safety: also mark the diagonal neighbors of the
            // crossing so points that round to the adjacent cell still see it
        }
        assert(guard > 0);
    }

    bool scan_ring(Vec2 p, int cx, int cy, int r, double& best) const {
        bool any = false;
        int x0 = cx - r, x1 = cx + r, y0 = cy - r, y1 = cy + r;
        auto visit = [&](int x, int y) {
            if (x < 0 || y < 0 || x >= grid_ || y >= grid_) return;
            const auto& bucket = cells_[static_cast<std::size_t>(y) * static_cast<std::size_t>(grid_) + static_cast<std::size_t>(x)];
            for (int id : bucket) {
                if (stamp_[static_cast<std::size_t>(id)] == query_) continue;
                stamp_[static_cast<std::size_t>(id)] = query_;
                double d = dist_point_segment(p, a_[static_cast<std::size_t>(id)], b_[static_cast<std::size_t>(id)]);
                if (d < best) best = d;
                any = true;
            }
        };
        if (r == 0) {
            visit(cx, cy);
            return any;
        }
        for (int x = x0; x <= x1; ++x) {
            visit(x, y0);
            visit(x, y1);
        }
        for (int y = y0 + 1; y < y1; ++y) {
            visit(x0, y);
            visit(x1, y);
        }
        return any;
    }

    int grid_ = 8;
    double cell_ = 0.26;
    std::vector<Vec2> a_, b_;
    std::vector<std::vector<int>> cells_;
    mutable std::vector<int> stamp_;
    mutable int query_ = 0;
};

}  // namespace

Lamination lamination_of(const NoncrossingPartition& p) {
    std::vector<Angle> at(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) at[static_cast<std::size_t>(i)] = element_angle(p, i);
    return lamination_with_angles(p, at);
}

Lamination merged_frame_lamination(const NoncrossingPartition& p) {
    std::vector<Angle> at(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i)
        at[static_cast<std::size_t>(i)] =
            Angle::of(4 * static_cast<std::int64_t>(i) - 1, 4 * static_cast<std::int64_t>(p.size()));
    return lamination_with_angles(p, at);
}

double directed_hausdorff(const Lamination& from, const Lamination& to, double delta) {
    if (from.empty() || to.empty())
        throw EmptyLamination("directed Hausdorff distance needs nonempty laminations");
    if (delta <= 0.0) throw std::invalid_argument("sampling pitch must be positive");
    SegmentIndex index(to);
    double worst = 0.0;
    for (const Chord& c : from.chords()) {
        // a chord shared with `to` contributes exactly zero
        if (std::binary_search(to.chords().begin(), to.chords().end(), c)) continue;
        Vec2 a = circle_point(c.a);
        Vec2 b = circle_point(c.b);
        double len = std::hypot(b.x - a.x, b.y - a.y);
        int pieces = c.degenerate() ? 0 : std::max(1, static_cast<int>(std::ceil(len / delta)));
        for (int i = 0; i <= pieces; ++i) {
            double t = pieces == 0 ? 0.0 : static_cast<double>(i) / pieces;
            Vec2 q{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
            double d = index.nearest(q);
            if (d > worst) worst = d;
        }
    }
    return worst;
}

double hausdorff(const Lamination& a, const Lamination& b, double delta) {
    return std::max(directed_hausdorff(a, b, delta), directed_hausdorff(b, a, delta));
}

Lamination brownian_triangulation_sample(int m, SplitMix64& rng) {
    if (m < 1) throw std::invalid_argument("resolution must be >= 1");
    return lamination_of(decode(uniform_dyck_path(m, rng)).first);
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", v);
    return buf;
}

void emit_chords(std::ostringstream& out, const Lamination& l, const std::string& color) {
    for (const Chord& c : l.chords()) {
        Vec2 a = circle_point(c.a);
        Vec2 b = circle_point(c.b);
        // y flipped so angles run counterclockwise on screen
        out << "  <path d=\"M " << fmt(a.x) << ' ' << fmt(-a.y) << " L " << fmt(b.x) << ' '
            << fmt(-b.y) << "\" stroke=\"" << color
            << "\" stroke-width=\"0.012\" stroke-linecap=\"round\" fill=\"none\"/>\n";
    }
}

}  // namespace

std::string render_svg(const Lamination& l, const RenderOptions& options,
                       const Lamination* overlay) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size_px
        << "\" height=\"" << options.size_px << "\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
    out << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"" << options.circle_color
        << "\" stroke-width=\"0.008\"/>\n";
    emit_chords(out, l, options.chord_color);
    if (overlay != nullptr) emit_chords(out, *overlay, options.overlay_color);
    out << "</svg>\n";
    return out.str();
}

}  // namespace nclam
