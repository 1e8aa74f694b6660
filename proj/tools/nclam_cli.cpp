// nclam: uniform noncrossing (pair) partitions, Dyck-path codecs, Kreweras
// complements, recursive growth, laminations and Hausdorff-convergence
// experiments. Every random subcommand requires an explicit --seed and is a
// pure function of its flags.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nclam/converge.hpp"
#include "nclam/enumerate.hpp"
#include "nclam/errors.hpp"
#include "nclam/geometry.hpp"
#include "nclam/growth.hpp"
#include "nclam/stats.hpp"

namespace {

using namespace nclam;

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::string line;
    if (path.empty() || path == "-") {
        while (std::getline(std::cin, line)) lines.push_back(line);
        return lines;
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

Model parse_model(const std::string& name) {
    if (name == "pair") return Model::Pair;
    return Model::Ncp;
}

// Runs job(i) for i in [0, count) over a small worker pool and returns the
// results in index order.
std::vector<std::string> ordered_parallel(int count, int workers,
                                          const std::function<std::string(int)>& job) {
    std::vector<std::string> results(static_cast<std::size_t>(count));
    if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min(workers, count);
    std::atomic<int> cursor{0};
    auto run_jobs = [&]() {
        for (;;) {
            int i = cursor.fetch_add(1);
            if (i >= count) return;
            results[static_cast<std::size_t>(i)] = job(i);
        }
    };
    if (workers <= 1) {
        run_jobs();
    } else {
        std::vector<std::future<void>> futures;
        for (int w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, run_jobs));
        for (auto& f : futures) f.get();
    }
    return results;
}

std::string format_distance(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

int run(int argc, char** argv) {
    CLI::App app{"noncrossing partition laboratory"};
    app.require_subcommand(1);

    // ---- sample ----------------------------------------------------------
    struct {
        std::string model = "ncp";
        int n = 1;
        std::uint64_t seed = 0;
        int count = 1;
        std::string algorithm = "direct";
        std::string out;
        std::string svg;
        int workers = 0;
    } sample;
    auto* cmd_sample = app.add_subcommand(
        "sample", "draw uniform noncrossing (pair) partitions, one line each");
    cmd_sample->add_option("--model", sample.model, "ncp | pair")
        ->check(CLI::IsMember({"ncp", "pair"}));
    cmd_sample->add_option("--n", sample.n, "size: P_n for ncp, pair partition of P_{2n} for pair")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_sample->add_option("--seed", sample.seed, "base seed; sample i uses a derived child seed")
        ->required();
    cmd_sample->add_option("--count", sample.count, "number of samples")
        ->check(CLI::PositiveNumber);
    cmd_sample->add_option("--algorithm", sample.algorithm, "direct | marchal")
        ->check(CLI::IsMember({"direct", "marchal"}));
    cmd_sample->add_option("--out", sample.out, "output file (default stdout)");
    cmd_sample->add_option("--svg", sample.svg, "also render the first sample to this SVG file");
    cmd_sample->add_option("--workers", sample.workers, "worker threads (0 = auto)");

    // ---- grow ------------------------------------------------------------
    struct {
        std::string model = "ncp";
        int n = 1;
        std::uint64_t seed = 0;
        std::string out;
        std::string final_out;
    } grow_cfg;
    auto* cmd_grow = app.add_subcommand("grow", "run one recursive growth trajectory");
    cmd_grow->add_option("--model", grow_cfg.model)->check(CLI::IsMember({"ncp", "pair"}));
    cmd_grow->add_option("--n", grow_cfg.n, "growth target")->required()->check(CLI::PositiveNumber);
    cmd_grow->add_option("--seed", grow_cfg.seed)->required();
    cmd_grow->add_option("--out", grow_cfg.out, "trajectory file")->required();
    cmd_grow->add_option("--final-out", grow_cfg.final_out,
                         "file for the final partition (default stdout)");

    // ---- replay ----------------------------------------------------------
    struct {
        std::string in;
        std::string out;
        bool all = false;
    } replay_cfg;
    auto* cmd_replay = app.add_subcommand("replay", "re-run a stored trajectory");
    cmd_replay->add_option("--in", replay_cfg.in, "trajectory file")->required();
    cmd_replay->add_option("--out", replay_cfg.out);
    cmd_replay->add_flag("--all", replay_cfg.all, "emit every intermediate partition");

    // ---- encode / decode / kreweras ---------------------------------------
    struct {
        std::string in, out;
    } encode_cfg, kreweras_cfg;
    struct {
        std::string in, out;
        bool complement = false;
    } decode_cfg;
    auto* cmd_encode = app.add_subcommand("encode", "partition lines -> U/D path lines");
    cmd_encode->add_option("--in", encode_cfg.in, "input file (default stdin)");
    cmd_encode->add_option("--out", encode_cfg.out);
    auto* cmd_decode = app.add_subcommand("decode", "U/D path lines -> partition lines");
    cmd_decode->add_option("--in", decode_cfg.in, "input file (default stdin)");
    cmd_decode->add_option("--out", decode_cfg.out);
    cmd_decode->add_flag("--complement", decode_cfg.complement,
                         "emit the odd-index classes (the Kreweras complement) instead");
    auto* cmd_kreweras = app.add_subcommand("kreweras", "partition lines -> complement lines");
    cmd_kreweras->add_option("--in", kreweras_cfg.in, "input file (default stdin)");
    cmd_kreweras->add_option("--out", kreweras_cfg.out);

    // ---- render ------------------------------------------------------------
    struct {
        std::string in, out;
        int size = 800;
        bool overlay = false;
    } render_cfg;
    auto* cmd_render = app.add_subcommand("render", "partition line -> SVG lamination");
    cmd_render->add_option("--in", render_cfg.in, "partition file (first line rendered)");
    cmd_render->add_option("--out", render_cfg.out, "SVG output file")->required();
    cmd_render->add_option("--size", render_cfg.size, "pixel size")->check(CLI::PositiveNumber);
    cmd_render->add_flag("--overlay-kreweras", render_cfg.overlay,
                         "draw the Kreweras complement in a second color");

    // ---- converge ----------------------------------------------------------
    struct {
        std::string model = "ncp";
        int terminal = 4096;
        std::string schedule = "16,64,256,1024";
        int seeds = 20;
        std::uint64_t seed = 0;
        double delta = 1e-3;
        int workers = 0;
        std::string out;
    } conv;
    auto* cmd_converge = app.add_subcommand(
        "converge", "measure d_H(L(P_m), L(P_M)) along replayed growth trajectories");
    cmd_converge->add_option("--model", conv.model)->check(CLI::IsMember({"ncp", "pair"}));
    cmd_converge->add_option("--M", conv.terminal, "terminal size")->check(CLI::PositiveNumber);
    cmd_converge->add_option("--schedule", conv.schedule, "comma-separated sizes m");
    cmd_converge->add_option("--seeds", conv.seeds, "number of trajectories")
        ->check(CLI::PositiveNumber);
    cmd_converge->add_option("--seed", conv.seed, "base seed")->required();
    cmd_converge->add_option("--delta", conv.delta, "sampling pitch")->check(CLI::PositiveNumber);
    cmd_converge->add_option("--workers", conv.workers, "worker threads (0 = auto)");
    cmd_converge->add_option("--out", conv.out);

    // ---- uniformity ---------------------------------------------------------
    struct {
        std::string model = "ncp";
        int n = 4;
        int count = 100000;
        std::uint64_t seed = 0;
        std::string algorithm = "marchal";
        int workers = 0;
    } unif;
    auto* cmd_uniformity = app.add_subcommand(
        "uniformity", "chi-square test of sampled partitions against the exhaustive catalog");
    cmd_uniformity->add_option("--model", unif.model)->check(CLI::IsMember({"ncp", "pair"}));
    cmd_uniformity->add_option("--n", unif.n, "object size (catalog must stay desk-scale)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_uniformity->add_option("--count", unif.count)->check(CLI::PositiveNumber);
    cmd_uniformity->add_option("--seed", unif.seed)->required();
    cmd_uniformity->add_option("--algorithm", unif.algorithm)
        ->check(CLI::IsMember({"direct", "marchal"}));
    cmd_uniformity->add_option("--workers", unif.workers);

    // ---- enumerate -----------------------------------------------------------
    struct {
        std::string kind = "ncp";
        int n = 1;
        std::string out;
    } enum_cfg;
    auto* cmd_enumerate = app.add_subcommand("enumerate", "exhaustive small-n catalogs");
    cmd_enumerate->add_option("--kind", enum_cfg.kind, "ncp | pair | dyck")
        ->check(CLI::IsMember({"ncp", "pair", "dyck"}));
    cmd_enumerate->add_option("--n", enum_cfg.n, "polygon size (ncp, pair) or step count (dyck)")
        ->required();
    cmd_enumerate->add_option("--out", enum_cfg.out);

    CLI11_PARSE(app, argc, argv);

    if (cmd_sample->parsed()) {
        Model model = parse_model(sample.model);
        auto lines = ordered_parallel(sample.count, sample.workers, [&](int i) {
            std::uint64_t s = child_seed(sample.seed, static_cast<std::uint64_t>(i));
            NoncrossingPartition p = [&] {
                if (sample.algorithm == "direct") {
                    SplitMix64 rng(s);
                    return model == Model::Ncp ? uniform_ncp_direct(sample.n, rng)
                                               : uniform_pair_direct(sample.n, rng);
                }
                return (model == Model::Ncp ? grow_ncp(sample.n, s) : grow_pair(sample.n, s))
                    .partition;
            }();
            return p.to_line();
        });
        std::ostringstream out;
        for (const auto& l : lines) out << l << "\n";
        write_text(sample.out, out.str());
        if (!sample.svg.empty())
            write_text(sample.svg,
                       render_svg(lamination_of(NoncrossingPartition::parse(lines.front()))));
        return 0;
    }

    if (cmd_grow->parsed()) {
        Model model = parse_model(grow_cfg.model);
        GrowResult result = model == Model::Ncp ? grow_ncp(grow_cfg.n, grow_cfg.seed)
                                                : grow_pair(grow_cfg.n, grow_cfg.seed);
        std::ostringstream traj;
        result.trajectory.write(traj);
        write_text(grow_cfg.out, traj.str());
        write_text(grow_cfg.final_out, result.partition.to_line() + "\n");
        return 0;
    }

    if (cmd_replay->parsed()) {
        std::ifstream in(replay_cfg.in);
        if (!in) throw std::runtime_error("cannot open trajectory file: " + replay_cfg.in);
        GrowthTrajectory traj = GrowthTrajectory::read(in);
        std::ostringstream out;
        if (replay_cfg.all) {
            for (const auto& p : replay_all(traj)) out << p.to_line() << "\n";
        } else {
            out << replay_final(traj).to_line() << "\n";
        }
        write_text(replay_cfg.out, out.str());
        return 0;
    }

    if (cmd_encode->parsed()) {
        std::ostringstream out;
        for (const auto& line : read_lines(encode_cfg.in)) {
            if (line.empty()) {
                out << "\n";
                continue;
            }
            out << encode(NoncrossingPartition::parse(line)).to_steps() << "\n";
        }
        write_text(encode_cfg.out, out.str());
        return 0;
    }

    if (cmd_decode->parsed()) {
        std::ostringstream out;
        for (const auto& line : read_lines(decode_cfg.in)) {
            if (line.empty()) {
                out << "\n";
                continue;
            }
            auto [part, complement] = decode(DyckPath::from_steps(line));
            out << (decode_cfg.complement ? complement : part).to_line() << "\n";
        }
        write_text(decode_cfg.out, out.str());
        return 0;
    }

    if (cmd_kreweras->parsed()) {
        std::ostringstream out;
        for (const auto& line : read_lines(kreweras_cfg.in)) {
            if (line.empty()) {
                out << "\n";
                continue;
            }
            out << kreweras(NoncrossingPartition::parse(line)).to_line() << "\n";
        }
        write_text(kreweras_cfg.out, out.str());
        return 0;
    }

    if (cmd_render->parsed()) {
        auto lines = read_lines(render_cfg.in);
        if (lines.empty() || lines.front().empty())
            throw std::runtime_error("render needs a partition line");
        NoncrossingPartition p = NoncrossingPartition::parse(lines.front());
        Lamination lam = lamination_of(p);
        RenderOptions options;
        options.size_px = render_cfg.size;
        std::string svg;
        if (render_cfg.overlay) {
            Lamination overlay = lamination_of(kreweras(p));
            svg = render_svg(lam, options, &overlay);
        } else {
            svg = render_svg(lam, options);
        }
        write_text(render_cfg.out, svg);
        return 0;
    }

    if (cmd_converge->parsed()) {
        Model model = parse_model(conv.model);
        std::vector<int> schedule;
        std::stringstream ss(conv.schedule);
        std::string tok;
        while (std::getline(ss, tok, ',')) schedule.push_back(std::stoi(tok));
        std::vector<std::uint64_t> seeds;
        for (int i = 0; i < conv.seeds; ++i)
            seeds.push_back(child_seed(conv.seed, static_cast<std::uint64_t>(i)));
        ConvergenceReport report =
            measure_convergence(model, conv.terminal, schedule, seeds, conv.delta, conv.workers);
        std::ostringstream out;
        for (const auto& row : report.rows)
            out << "seed=" << row.seed << " m=" << row.m << " M=" << report.terminal
                << " d_H=" << format_distance(row.distance) << " delta=" << report.delta << "\n";
        for (std::size_t j = 0; j < report.schedule.size(); ++j)
            out << "median m=" << report.schedule[j]
                << " d_H=" << format_distance(report.medians[j]) << " delta=" << report.delta
                << "\n";
        write_text(conv.out, out.str());
        return 0;
    }

    if (cmd_uniformity->parsed()) {
        Model model = parse_model(unif.model);
        PartitionTable table =
            model == Model::Ncp ? enumerate_ncp(unif.n) : enumerate_pair(2 * unif.n);
        std::vector<std::string> keys;
        keys.reserve(table.objects.size());
        for (const auto& p : table.objects) keys.push_back(p.to_line());
        std::sort(keys.begin(), keys.end());
        auto samples = ordered_parallel(unif.count, unif.workers, [&](int i) {
            std::uint64_t s = child_seed(unif.seed, static_cast<std::uint64_t>(i));
            NoncrossingPartition p = [&] {
                if (unif.algorithm == "direct") {
                    SplitMix64 rng(s);
                    return model == Model::Ncp ? uniform_ncp_direct(unif.n, rng)
                                               : uniform_pair_direct(unif.n, rng);
                }
                return (model == Model::Ncp ? grow_ncp(unif.n, s) : grow_pair(unif.n, s)).partition;
            }();
            return p.to_line();
        });
        std::vector<std::int64_t> counts(keys.size(), 0);
        for (const auto& line : samples) {
            auto it = std::lower_bound(keys.begin(), keys.end(), line);
            if (it == keys.end() || *it != line)
                throw std::runtime_error("sampled object missing from catalog: " + line);
            counts[static_cast<std::size_t>(it - keys.begin())]++;
        }
        double stat = chi_square_uniform_stat(counts);
        int df = static_cast<int>(keys.size()) - 1;
        double q = chi_square_quantile(0.999, df);
        std::cout << "chi2=" << stat << " df=" << df << " q999=" << q
                  << " verdict=" << (stat < q ? "PASS" : "FAIL") << "\n";
        return stat < q ? 0 : 1;
    }

    if (cmd_enumerate->parsed()) {
        std::ostringstream out;
        if (enum_cfg.kind == "dyck") {
            for (const auto& p : enumerate_dyck(enum_cfg.n).objects) out << p.to_steps() << "\n";
        } else {
            PartitionTable table =
                enum_cfg.kind == "ncp" ? enumerate_ncp(enum_cfg.n) : enumerate_pair(enum_cfg.n);
            for (const auto& p : table.objects) out << p.to_line() << "\n";
        }
        write_text(enum_cfg.out, out.str());
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
