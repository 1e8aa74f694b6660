#include "nclam/growth.hpp"

#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nclam/errors.hpp"

namespace nclam {

namespace {

MoveKind insert_kind(Model m) {
    return m == Model::Ncp ? MoveKind::InsertVertex : MoveKind::ShortChord;
}
MoveKind lift_kind(Model m) { return m == Model::Ncp ? MoveKind::Slice : MoveKind::LongChord; }

bool is_lift(MoveKind k) { return k == MoveKind::Slice || k == MoveKind::LongChord; }

void check_move(const GrowthTrajectory& t, std::size_t i) {
    const GrowthMove& mv = t.moves[i];
    const int step = static_cast<int>(i) + 1;  // move step t grows object t -> t+1
    if (mv.kind != insert_kind(t.model) && mv.kind != lift_kind(t.model))
        throw MalformedTrajectory("move kind " + to_string(mv.kind) + " does not belong to model " +
                                      to_string(t.model) + " at step " + std::to_string(step),
                                  static_cast<std::size_t>(step));
    if (mv.k < 0 || mv.k > 2 * step)
        throw MalformedTrajectory("position " + std::to_string(mv.k) + " out of range 0.." +
                                      std::to_string(2 * step) + " at step " + std::to_string(step),
                                  static_cast<std::size_t>(step));
}

// Both algorithms drive the same path kernel: the ncp model grows the
// encoding path of P_n, the pair model grows the halved encoding path of
// the pair partition of P_{2n}. Base object in both cases: (0,1,0).
GrowResult grow(Model model, int n_target, std::uint64_t seed) {
    if (n_target < 1) throw std::invalid_argument("growth target must be >= 1");
    SplitMix64 rng(seed);
    GrowthTrajectory traj{model, seed, {}};
    traj.moves.reserve(static_cast<std::size_t>(n_target - 1));
    std::vector<int> h{0, 1, 0};
    for (int t = 1; t < n_target; ++t) {
        // Draw order is part of the format: position first, then the move coin.
        int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * t) + 1));
        bool lift = rng.coin();
        if (lift)
            detail::lift_move_inplace(h, k);
        else
            detail::insert_move_inplace(h, k);
        traj.moves.push_back({lift ? lift_kind(model) : insert_kind(model), k});
    }
    DyckPath path{std::move(h)};
    NoncrossingPartition out =
        model == Model::Ncp ? decode(path).first : decode_pair(path);
    return {std::move(out), std::move(traj)};
}

NoncrossingPartition partition_of_path(Model model, DyckPath path) {
    return model == Model::Ncp ? decode(path).first : decode_pair(path);
}

}  // namespace

GrowResult grow_ncp(int n_target, std::uint64_t seed) { return grow(Model::Ncp, n_target, seed); }

GrowResult grow_pair(int n_target, std::uint64_t seed) { return grow(Model::Pair, n_target, seed); }

void replay_paths(const GrowthTrajectory& t,
                  const std::function<void(int, const std::vector<int>&)>& visit) {
    std::vector<int> h{0, 1, 0};
    visit(0, h);
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        check_move(t, i);
        if (is_lift(t.moves[i].kind))
            detail::lift_move_inplace(h, t.moves[i].k);
        else
            detail::insert_move_inplace(h, t.moves[i].k);
        visit(static_cast<int>(i) + 1, h);
    }
}

NoncrossingPartition replay_final(const GrowthTrajectory& t) {
    std::vector<int> last;
    replay_paths(t, [&](int step, const std::vector<int>& h) {
        if (step == static_cast<int>(t.moves.size())) last = h;
    });
    return partition_of_path(t.model, DyckPath(std::move(last)));
}

std::vector<NoncrossingPartition> replay_all(const GrowthTrajectory& t) {
    std::vector<NoncrossingPartition> out;
    out.reserve(t.moves.size() + 1);
    replay_paths(t, [&](int, const std::vector<int>& h) {
        out.push_back(partition_of_path(t.model, DyckPath(h)));
    });
    return out;
}

DyckPath uniform_dyck_path(int m, SplitMix64& rng) {
    if (m < 0) throw std::invalid_argument("negative path semilength");
    if (m == 0) return DyckPath();
    const int len = 2 * m + 1;  // m+1 up-steps, m down-steps
    std::vector<int> word(static_cast<std::size_t>(len), -1);
    for (int i = 0; i <= m; ++i) word[static_cast<std::size_t>(i)] = 1;
    for (int i = len - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(word[static_cast<std::size_t>(i)], word[static_cast<std::size_t>(j)]);
    }
    // Cycle lemma: the unique rotation dominating zero starts right after the
    // last prefix-sum minimum.
    int sum = 0, min_sum = 0, start = 0;
    for (int j = 0; j < len; ++j) {
        if (sum <= min_sum) {
            min_sum = sum;
            start = j;
        }
        sum += word[static_cast<std::size_t>(j)];
    }
    assert(word[static_cast<std::size_t>(start)] == 1);
    std::vector<int> h;
    h.reserve(static_cast<std::size_t>(2 * m) + 1);
    h.push_back(0);
    for (int t = 1; t < len; ++t)
        h.push_back(h.back() + word[static_cast<std::size_t>((start + t) % len)]);
    return DyckPath(std::move(h));
}

NoncrossingPartition uniform_ncp_direct(int n, SplitMix64& rng) {
    return decode(uniform_dyck_path(n, rng)).first;
}

NoncrossingPartition uniform_pair_direct(int n, SplitMix64& rng) {
    return decode_pair(uniform_dyck_path(n, rng));
}

std::string to_string(Model model) { return model == Model::Ncp ? "ncp" : "pair"; }

std::string to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::InsertVertex: return "insert";
        case MoveKind::Slice: return "slice";
        case MoveKind::ShortChord: return "short";
        case MoveKind::LongChord: return "long";
    }
    return "?";
}

void GrowthTrajectory::write(std::ostream& out) const {
    out << "model=" << to_string(model) << " seed=" << seed << " steps=" << moves.size() << "\n";
    for (const GrowthMove& mv : moves) out << mv.k << ' ' << to_string(mv.kind) << "\n";
}

GrowthTrajectory GrowthTrajectory::read(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("missing trajectory header");
    std::istringstream hs(header);
    std::string model_tok, seed_tok, steps_tok;
    if (!(hs >> model_tok >> seed_tok >> steps_tok) || model_tok.rfind("model=", 0) != 0 ||
        seed_tok.rfind("seed=", 0) != 0 || steps_tok.rfind("steps=", 0) != 0)
        throw ParseError("bad trajectory header: " + header);
    GrowthTrajectory t;
    std::string model_name = model_tok.substr(6);
    if (model_name == "ncp")
        t.model = Model::Ncp;
    else if (model_name == "pair")
        t.model = Model::Pair;
    else
        throw ParseError("unknown model '" + model_name + "'");
    std::size_t steps = 0;
    try {
        t.seed = std::stoull(seed_tok.substr(5));
        steps = std::stoull(steps_tok.substr(6));
    } catch (const std::exception&) {
        throw ParseError("bad numeric field in trajectory header: " + header);
    }
    t.moves.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        int k = 0;
        std::string kind;
        if (!(in >> k >> kind))
            throw ParseError("trajectory truncated at move " + std::to_string(i + 1));
        GrowthMove mv{MoveKind::InsertVertex, k};
        if (kind == "insert")
            mv.kind = MoveKind::InsertVertex;
        else if (kind == "slice")
            mv.kind = MoveKind::Slice;
        else if (kind == "short")
            mv.kind = MoveKind::ShortChord;
        else if (kind == "long")
            mv.kind = MoveKind::LongChord;
        else
            throw ParseError("unknown move kind '" + kind + "'");
        t.moves.push_back(mv);
    }
    return t;
}

}  // namespace nclam
