#ifndef NCLAM_CONVERGE_HPP
#define NCLAM_CONVERGE_HPP

#include <cstdint>
#include <vector>

#include "nclam/growth.hpp"

namespace nclam {

/// One measured distance: how far the lamination at size m sits from the
/// lamination at the terminal size M of the same trajectory.
struct ConvergenceRow {
    std::uint64_t seed = 0;
    int m = 0;
    double distance = 0.0;
};

struct ConvergenceReport {
    Model model = Model::Ncp;
    int terminal = 0;
    double delta = 0.0;
    std::vector<int> schedule;
    std::vector<ConvergenceRow> rows;      // seed-major, schedule order
    std::vector<double> medians;           // one per schedule entry
};

/// Grows one trajectory per seed to size M, snapshots the encoding path at
/// every scheduled size, and measures d_H(L(P_m), L(P_M)). Rows come back in
/// deterministic seed order regardless of scheduling.
ConvergenceReport measure_convergence(Model model, int terminal, std::vector<int> schedule,
                                      const std::vector<std::uint64_t>& seeds, double delta,
                                      int workers = 0);

}  // namespace nclam

#endif
