#include "nclam/converge.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>
#include <thread>

#include "nclam/geometry.hpp"

namespace nclam {

namespace {

NoncrossingPartition partition_at(Model model, const std::vector<int>& heights) {
    DyckPath path{std::vector<int>(heights)};
    return model == Model::Ncp ? decode(path).first : decode_pair(path);
}

std::vector<double> one_seed(Model model, int terminal, const std::vector<int>& schedule,
                             std::uint64_t seed, double delta) {
    // A single growth run; snapshots taken as the path passes each size.
    GrowthTrajectory traj =
        (model == Model::Ncp ? grow_ncp(terminal, seed) : grow_pair(terminal, seed)).trajectory;
    std::vector<Lamination> snapshots;
    snapshots.reserve(schedule.size());
    Lamination final_lam;
    replay_paths(traj, [&](int step, const std::vector<int>& h) {
        int size = step + 1;
        if (std::find(schedule.begin(), schedule.end(), size) != schedule.end())
            snapshots.push_back(lamination_of(partition_at(model, h)));
        if (size == terminal) final_lam = lamination_of(partition_at(model, h));
    });
    std::vector<double> distances;
    distances.reserve(snapshots.size());
    for (const Lamination& lam : snapshots)
        distances.push_back(hausdorff(lam, final_lam, delta));
    return distances;
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

ConvergenceReport measure_convergence(Model model, int terminal, std::vector<int> schedule,
                                      const std::vector<std::uint64_t>& seeds, double delta,
                                      int workers) {
    std::sort(schedule.begin(), schedule.end());
    for (int m : schedule)
        if (m < 1 || m > terminal)
            throw std::invalid_argument("schedule entry outside 1..terminal");
    if (seeds.empty()) throw std::invalid_argument("need at least one seed");

    ConvergenceReport report;
    report.model = model;
    report.terminal = terminal;
    report.delta = delta;
    report.schedule = schedule;

    if (workers <= 0)
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min<int>(workers, static_cast<int>(seeds.size()));

    std::vector<std::vector<double>> per_seed(seeds.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= seeds.size()) return;
            per_seed[i] = one_seed(model, terminal, schedule, seeds[i], delta);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::future<void>> futures;
        futures.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, worker));
        for (auto& f : futures) f.get();
    }

    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = 0; j < schedule.size(); ++j)
            report.rows.push_back({seeds[i], schedule[j], per_seed[i][j]});

    for (std::size_t j = 0; j < schedule.size(); ++j) {
        std::vector<double> column;
        column.reserve(seeds.size());
        for (std::size_t i = 0; i < seeds.size(); ++i) column.push_back(per_seed[i][j]);
        report.medians.push_back(median_of(std::move(column)));
    }
    return report;
}

}  // namespace nclam
