#include "nclam/partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <sstream>

#include "nclam/errors.hpp"

namespace nclam {

namespace {

// Connected components of the disk minus the lamination, computed by walking
// the circle once. Crossing a vertex of a block of size >= 2 moves between
// regions: opening a block descends into its first lune, an intermediate
// vertex steps to the next lune, closing pops back to the enclosing region.
// Singleton blocks divide nothing. Gap g lies between elements g and g+1;
// the returned classes group gap indices by region, ordered by first gap.
std::vector<std::vector<int>> complement_gap_classes(const NoncrossingPartition& p) {
    const int n = p.size();
    std::vector<int> region_of_gap(static_cast<std::size_t>(n));
    std::vector<int> stack;
    int current = 0;
    int next_region = 1;
    for (int i = 0; i < n; ++i) {
        const auto& block = p.blocks()[static_cast<std::size_t>(p.block_of(i))];
        if (block.size() >= 2) {
            if (i == block.front()) {
                stack.push_back(current);
                current = next_region++;
            } else if (i == block.back()) {
                current = stack.back();
                stack.pop_back();
            } else {
                current = next_region++;
            }
        }
        region_of_gap[static_cast<std::size_t>(i)] = current;
    }
    assert(stack.empty());
    assert(n == 0 || region_of_gap.back() == 0);

    std::vector<int> class_index(static_cast<std::size_t>(next_region), -1);
    std::vector<std::vector<int>> classes;
    for (int g = 0; g < n; ++g) {
        int r = region_of_gap[static_cast<std::size_t>(g)];
        if (class_index[static_cast<std::size_t>(r)] < 0) {
            class_index[static_cast<std::size_t>(r)] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[static_cast<std::size_t>(class_index[static_cast<std::size_t>(r)])].push_back(g);
    }
    return classes;
}

// Breadth-first labels over the block adjacency of consecutive slots, label 0
// on the block of slot 0. Returns the closed label path (length = slot count).
DyckPath bfs_label_path(const std::vector<int>& slot_node, int node_count) {
    const int s = static_cast<int>(slot_node.size());
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(node_count));
    for (int k = 0; k < s; ++k) {
        int a = slot_node[static_cast<std::size_t>(k)];
        int b = slot_node[static_cast<std::size_t>((k + 1) % s)];
        adjacency[static_cast<std::size_t>(a)].push_back(b);
        adjacency[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> dist(static_cast<std::size_t>(node_count), -1);
    std::queue<int> queue;
    dist[static_cast<std::size_t>(slot_node[0])] = 0;
    queue.push(slot_node[0]);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : adjacency[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push(v);
            }
        }
    }
    std::vector<int> labels(static_cast<std::size_t>(s) + 1);
    for (int k = 0; k < s; ++k) labels[static_cast<std::size_t>(k)] = dist[static_cast<std::size_t>(slot_node[static_cast<std::size_t>(k)])];
    labels[static_cast<std::size_t>(s)] = labels[0];
    return DyckPath(std::move(labels));
}

// Full 2m-slot labeling of an m-element partition together with its
// complement: slot 2i carries the block of element i under `element_first`,
// slot 2i+1 under the other family. Used with element_first = true for the
// plain encoding and false for the rotated pair encoding.
DyckPath interleaved_label_path(const NoncrossingPartition& p,
                                const std::vector<std::vector<int>>& co_classes,
                                bool element_first) {
    const int m = p.size();
    const int blocks = p.block_count();
    std::vector<int> co_of(static_cast<std::size_t>(m), -1);
    for (std::size_t c = 0; c < co_classes.size(); ++c)
        for (int g : co_classes[c]) co_of[static_cast<std::size_t>(g)] = static_cast<int>(c);
    std::vector<int> slot_node(static_cast<std::size_t>(2 * m));
    for (int i = 0; i < m; ++i) {
        int e = p.block_of(i);
        int c = blocks + co_of[static_cast<std::size_t>(i)];
        if (element_first) {
            slot_node[static_cast<std::size_t>(2 * i)] = e;
            slot_node[static_cast<std::size_t>(2 * i + 1)] = c;
        } else {
            slot_node[static_cast<std::size_t>(2 * i + 1)] = e;
            slot_node[static_cast<std::size_t>(2 * i)] = c;
        }
    }
    return bfs_label_path(slot_node, blocks + static_cast<int>(co_classes.size()));
}

std::vector<std::vector<int>> shift_classes(std::vector<std::vector<int>> classes, int n,
                                            int shift) {
    for (auto& cls : classes)
        for (int& g : cls) g = (g + shift) % n;
    return classes;
}

}  // namespace

NoncrossingPartition::NoncrossingPartition(int n, std::vector<std::vector<int>> blocks,
                                           Frame frame)
    : n_(n), frame_(frame), blocks_(std::move(blocks)) {
    if (n < 0) throw NotAPartition("negative element count");
    block_of_.assign(static_cast<std::size_t>(n), -1);
    for (auto& block : blocks_) {
        if (block.empty()) throw NotAPartition("empty block");
        std::sort(block.begin(), block.end());
        for (int v : block) {
            if (v < 0 || v >= n)
                throw NotAPartition("element " + std::to_string(v) + " outside 0.." +
                                    std::to_string(n - 1));
            if (block_of_[static_cast<std::size_t>(v)] != -1)
                throw NotAPartition("element " + std::to_string(v) + " appears twice");
            block_of_[static_cast<std::size_t>(v)] = 0;  // provisional marker
        }
    }
    for (int v = 0; v < n; ++v)
        if (block_of_[static_cast<std::size_t>(v)] == -1)
            throw NotAPartition("element " + std::to_string(v) + " is uncovered");

    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (int v : blocks_[b]) block_of_[static_cast<std::size_t>(v)] = static_cast<int>(b);

    // Noncrossing check: scan elements in circular order keeping the stack of
    // open blocks; a block resuming while it is not innermost is a crossing.
    std::vector<int> open;
    for (int i = 0; i < n; ++i) {
        int b = block_of_[static_cast<std::size_t>(i)];
        const auto& block = blocks_[static_cast<std::size_t>(b)];
        if (block.size() < 2) continue;
        if (i == block.front()) {
            open.push_back(b);
        } else {
            assert(!open.empty());  // b itself is still open
            if (open.back() != b) {
                int t = open.back();
                const auto& top = blocks_[static_cast<std::size_t>(t)];
                std::array<int, 4> witness{block.front(), top.front(), i, top.back()};
                throw CrossingBlocks("blocks {" + std::to_string(witness[0]) + ",...} and {" +
                                         std::to_string(witness[1]) + ",...} cross at (" +
                                         std::to_string(witness[0]) + "," + std::to_string(witness[1]) +
                                         "," + std::to_string(witness[2]) + "," +
                                         std::to_string(witness[3]) + ")",
                                     witness);
            }
            if (i == block.back()) open.pop_back();
        }
    }
    assert(open.empty());
}

NoncrossingPartition check_noncrossing(int n, std::vector<std::vector<int>> blocks, Frame frame) {
    return NoncrossingPartition(n, std::move(blocks), frame);
}

bool NoncrossingPartition::is_pair() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const auto& b) { return b.size() == 2; });
}

bool is_pair(const NoncrossingPartition& p) { return p.is_pair(); }

std::string NoncrossingPartition::to_line() const {
    std::ostringstream out;
    out << "n=" << n_ << ";";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        out << (b == 0 ? " " : " | ");
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) out << ' ';
            out << blocks_[b][i];
        }
    }
    if (frame_ == Frame::OddSlots) out << " frame=odd";
    return out.str();
}

NoncrossingPartition NoncrossingPartition::parse(std::string_view line) {
    std::string text(line);
    Frame frame = Frame::EvenSlots;
    const std::string odd_suffix = "frame=odd";
    // optional trailing frame tag
    auto trimmed = text;
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t' ||
                                trimmed.back() == '\r' || trimmed.back() == '\n'))
        trimmed.pop_back();
    if (trimmed.size() >= odd_suffix.size() &&
        trimmed.compare(trimmed.size() - odd_suffix.size(), odd_suffix.size(), odd_suffix) == 0) {
        frame = Frame::OddSlots;
        trimmed.erase(trimmed.size() - odd_suffix.size());
    }
    std::istringstream in(trimmed);
    std::string head;
    in >> head;
    if (head.rfind("n=", 0) != 0 || head.back() != ';')
        throw ParseError("expected 'n=<count>;' at start of partition line: " + text);
    int n = 0;
    try {
        n = std::stoi(head.substr(2, head.size() - 3));
    } catch (const std::exception&) {
        throw ParseError("bad element count in partition line: " + text);
    }
    std::vector<std::vector<int>> blocks;
    std::vector<int> current;
    std::string token;
    while (in >> token) {
        if (token == "|") {
            if (current.empty()) throw ParseError("empty block in partition line: " + text);
            blocks.push_back(std::move(current));
            current.clear();
        } else {
            try {
                current.push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw ParseError("bad vertex token '" + token + "' in partition line");
            }
        }
    }
    if (!current.empty()) blocks.push_back(std::move(current));
    return NoncrossingPartition(n, std::move(blocks), frame);
}

NoncrossingPartition kreweras(const NoncrossingPartition& p) {
    auto classes = complement_gap_classes(p);
    if (p.frame() == Frame::EvenSlots) {
        // gap g sits at odd slot 2g+1
        return NoncrossingPartition(p.size(), std::move(classes), Frame::OddSlots);
    }
    // Odd-frame input: gap g sits at even slot 2g+2, i.e. element g+1.
    return NoncrossingPartition(p.size(), shift_classes(std::move(classes), p.size(), 1),
                                Frame::EvenSlots);
}

DyckPath encode(const NoncrossingPartition& p) {
    if (p.frame() != Frame::EvenSlots)
        throw NotAPartition("encode expects the even-slot frame");
    if (p.size() == 0) return DyckPath();
    return interleaved_label_path(p, complement_gap_classes(p), /*element_first=*/true);
}

std::pair<NoncrossingPartition, NoncrossingPartition> decode(const DyckPath& p) {
    const auto& h = p.heights();
    const int L = p.length();
    const int n = L / 2;
    if (n == 0)
        return {NoncrossingPartition(0, {}, Frame::EvenSlots),
                NoncrossingPartition(0, {}, Frame::OddSlots)};

    std::vector<std::vector<int>> evens, odds;
    auto finalize = [&](std::vector<int>&& indices) {
        // classes are parity-pure since h_t has the parity of t
        if (indices.front() % 2 == 0) {
            std::vector<int> vertices;
            vertices.reserve(indices.size());
            for (int idx : indices)
                if (idx != L) vertices.push_back(idx / 2);
            evens.push_back(std::move(vertices));
        } else {
            std::vector<int> vertices;
            vertices.reserve(indices.size());
            for (int idx : indices) vertices.push_back((idx - 1) / 2);
            odds.push_back(std::move(vertices));
        }
    };

    // Stack of open classes, one per height level below the current position.
    // An up-step opens a class; a down-step closes the class one level up and
    // appends the current time to the class at the new height.
    std::vector<std::vector<int>> stack;
    stack.push_back({0});
    for (int t = 1; t <= L; ++t) {
        if (h[static_cast<std::size_t>(t)] > h[static_cast<std::size_t>(t - 1)]) {
            stack.push_back({t});
        } else {
            finalize(std::move(stack.back()));
            stack.pop_back();
            stack.back().push_back(t);
        }
    }
    finalize(std::move(stack.back()));
    stack.pop_back();
    assert(stack.empty());

    return {NoncrossingPartition(n, std::move(evens), Frame::EvenSlots),
            NoncrossingPartition(n, std::move(odds), Frame::OddSlots)};
}

NoncrossingPartition insert_vertex(const NoncrossingPartition& p, int k) {
    return decode(marchal_insert(encode(p), k)).first;
}

NoncrossingPartition slice(const NoncrossingPartition& p, int k) {
    return decode(marchal_lift(encode(p), k)).first;
}

DyckPath encode_pair(const NoncrossingPartition& p) {
    if (!p.is_pair())
        throw NotAPairPartition("encode_pair expects a partition into blocks of size 2");
    // Vertices are reinterpreted on the odd slots of a twice-finer circle;
    // the complement occupies the even slots, with slot 0 carrying the class
    // of the gap just before vertex 0.
    auto classes = shift_classes(complement_gap_classes(p), p.size(), 1);
    return halve(interleaved_label_path(p, classes, /*element_first=*/false));
}

NoncrossingPartition decode_pair(const DyckPath& p) {
    auto odd_part = decode(double_path(p)).second;
    NoncrossingPartition result = with_frame(odd_part, Frame::EvenSlots);
    assert(result.is_pair());
    return result;
}

NoncrossingPartition insert_short_chord(const NoncrossingPartition& p, int k) {
    return decode_pair(marchal_insert(encode_pair(p), k));
}

NoncrossingPartition insert_long_chord(const NoncrossingPartition& p, int k) {
    return decode_pair(marchal_lift(encode_pair(p), k));
}

NoncrossingPartition pair_to_ncp(const NoncrossingPartition& p) {
    if (!p.is_pair())
        throw NotAPairPartition("pair_to_ncp expects a partition into blocks of size 2");
    const int m = p.size();
    const int n = m / 2;
    // Positions 2k-1 and 2k fuse into merged vertex k; blocks of the image
    // are the connected components once each pair block links its two merged
    // endpoints.
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto merged = [&](int v) { return ((v + 1) / 2) % n; };
    for (const auto& block : p.blocks()) {
        int a = find(merged(block[0]));
        int b = find(merged(block[1]));
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) groups[static_cast<std::size_t>(find(v))].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty()) blocks.push_back(std::move(g));
    return NoncrossingPartition(n, std::move(blocks), Frame::EvenSlots);
}

NoncrossingPartition rotate(const NoncrossingPartition& p, int shift) {
    const int n = p.size();
    if (n == 0) return p;
    int s = ((shift % n) + n) % n;
    std::vector<std::vector<int>> blocks = p.blocks();
    for (auto& block : blocks)
        for (int& v : block) v = (v + s) % n;
    return NoncrossingPartition(n, std::move(blocks), p.frame());
}

NoncrossingPartition with_frame(const NoncrossingPartition& p, Frame frame) {
    return NoncrossingPartition(p.size(), p.blocks(), frame);
}

}  // namespace nclam
