#include "nclam/enumerate.hpp"

#include <algorithm>

#include "nclam/errors.hpp"

namespace nclam {

namespace {

// Literal quadruple scan: a < b < c < d with a, c together and b, d together
// in a different block. Independent of the stack walk used by the validating
// constructor.
bool has_crossing(const std::vector<int>& label, int n) {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (label[static_cast<std::size_t>(b)] == label[static_cast<std::size_t>(a)]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (label[static_cast<std::size_t>(c)] != label[static_cast<std::size_t>(a)]) continue;
                for (int d = c + 1; d < n; ++d)
                    if (label[static_cast<std::size_t>(d)] == label[static_cast<std::size_t>(b)])
                        return true;
            }
        }
    return false;
}

std::vector<std::vector<int>> blocks_from_labels(const std::vector<int>& label, int n,
                                                 int block_count) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(block_count));
    for (int v = 0; v < n; ++v) blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
    return blocks;
}

void rgs_recurse(int n, int pos, int max_label, std::vector<int>& label,
                 std::vector<NoncrossingPartition>& out) {
    if (pos == n) {
        if (!has_crossing(label, n))
            out.emplace_back(n, blocks_from_labels(label, n, max_label + 1), Frame::EvenSlots);
        return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
        label[static_cast<std::size_t>(pos)] = l;
        rgs_recurse(n, pos + 1, std::max(max_label, l), label, out);
    }
}

bool chords_cross(int a1, int b1, int a2, int b2) {
    // canonical a < b on both; strict interleaving
    return (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
}

void matching_recurse(int n, std::vector<int>& partner, std::vector<std::pair<int, int>>& chords,
                      std::vector<NoncrossingPartition>& out) {
    int first = -1;
    for (int v = 0; v < n; ++v)
        if (partner[static_cast<std::size_t>(v)] < 0) {
            first = v;
            break;
        }
    if (first < 0) {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(chords.size());
        for (auto [a, b] : chords) blocks.push_back({a, b});
        out.emplace_back(n, std::move(blocks), Frame::EvenSlots);
        return;
    }
    for (int w = first + 1; w < n; ++w) {
        if (partner[static_cast<std::size_t>(w)] >= 0) continue;
        bool crossing = false;
        for (auto [a, b] : chords)
            if (chords_cross(a, b, first, w)) {
                crossing = true;
                break;
            }
        if (crossing) continue;
        partner[static_cast<std::size_t>(first)] = w;
        partner[static_cast<std::size_t>(w)] = first;
        chords.emplace_back(first, w);
        matching_recurse(n, partner, chords, out);
        chords.pop_back();
        partner[static_cast<std::size_t>(first)] = -1;
        partner[static_cast<std::size_t>(w)] = -1;
    }
}

void dyck_recurse(int steps, std::vector<int>& h, std::vector<DyckPath>& out) {
    const int t = static_cast<int>(h.size()) - 1;
    if (t == steps) {
        if (h.back() == 0) out.emplace_back(h);
        return;
    }
    const int remaining = steps - t;
    if (h.back() + 1 <= remaining - 1) {
        h.push_back(h.back() + 1);
        dyck_recurse(steps, h, out);
        h.pop_back();
    }
    if (h.back() - 1 >= 0 && h.back() - 1 <= remaining - 1) {
        h.push_back(h.back() - 1);
        dyck_recurse(steps, h, out);
        h.pop_back();
    }
}

}  // namespace

PartitionTable enumerate_ncp(int n) {
    if (n < 0 || n > 12)
        throw TooLarge("noncrossing partition enumeration capped at n <= 12, got " +
                       std::to_string(n));
    PartitionTable table{n, {}};
    if (n == 0) {
        table.objects.emplace_back(0, std::vector<std::vector<int>>{}, Frame::EvenSlots);
        return table;
    }
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    rgs_recurse(n, 1, 0, label, table.objects);
    std::sort(table.objects.begin(), table.objects.end());
    return table;
}

PartitionTable enumerate_pair(int n) {
    if (n < 0 || n > 16)
        throw TooLarge("pair partition enumeration capped at n <= 16, got " + std::to_string(n));
    if (n % 2 != 0) throw TooLarge("pair partitions need an even polygon");
    PartitionTable table{n, {}};
    if (n == 0) {
        table.objects.emplace_back(0, std::vector<std::vector<int>>{}, Frame::EvenSlots);
        return table;
    }
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> chords;
    matching_recurse(n, partner, chords, table.objects);
    std::sort(table.objects.begin(), table.objects.end());
    return table;
}

PathTable enumerate_dyck(int steps) {
    if (steps < 0 || steps > 20)
        throw TooLarge("Dyck path enumeration capped at 20 steps, got " + std::to_string(steps));
    if (steps % 2 != 0) throw TooLarge("Dyck paths have an even number of steps");
    PathTable table{steps, {}};
    std::vector<int> h{0};
    dyck_recurse(steps, h, table.objects);
    std::sort(table.objects.begin(), table.objects.end());
    return table;
}

std::uint64_t catalan(int n) {
    if (n < 0 || n > 33) throw TooLarge("catalan argument out of uint64 range");
    // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k)
        c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
    return c;
}

}  // namespace nclam
