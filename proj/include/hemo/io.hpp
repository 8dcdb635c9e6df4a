#pragma once

#include "hemo/integrator.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace hemo {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunMetrics {
    double max_abs_q_final = 0.0;
    double mass_drift_relative = 0.0;
    std::optional<double> l2_error_vs_reference;
    long clamp_event_total = 0;
    double wall_time = 0.0;  // seconds
};

struct XWindow {
    double lo = 0.0;
    double hi = 0.0;
};

struct L2Result {
    double abs = 0.0;  // sqrt(sum (Q - Qref)^2 dx)
    double rel = 0.0;  // abs / sqrt(sum Qref^2 dx)
};

// Q reference field as a function of (x, t).
using QReference = std::function<double(double, double)>;

struct ConvergenceRow {
    int cells = 0;
    double error = 0.0;  // absolute L2 at t_end over the whole domain
    double order = 0.0;  // log(e_prev/e_this) / log(J_this/J_prev); 0 on the first row
};

// One file per snapshot.  Values carry 17 significant digits so a reread
// reproduces every double bit for bit.
void write_snapshot_csv(std::ostream& out, const SnapshotSeries& series, std::size_t index);

// Reads a file produced by write_snapshot_csv; returns the (A, Q) columns.
std::vector<ConservedState> read_snapshot_csv(std::istream& in);

// snap_<index>.csv per snapshot plus index.csv mapping files to times.
// Creates dir if needed; any filesystem failure throws IoError.
void write_series(const std::string& dir, const SnapshotSeries& series);

RunMetrics compute_metrics(const RunResult& result, const QReference* reference = nullptr,
                           const XWindow* window = nullptr);

void write_metrics_csv(std::ostream& out, const RunMetrics& m);

// L2 distance of snapshot snap_index's Q field from reference at that
// snapshot's time, restricted to cells with center in [window.lo, window.hi].
L2Result l2_error(const SnapshotSeries& series, std::size_t snap_index,
                  const QReference& reference, const XWindow& window);

// Reruns base on each grid size (snapshots reduced to t_end) and compares
// the final Q field with reference over the whole domain.
std::vector<ConvergenceRow> convergence_study(const SimulationConfig& base,
                                              const std::vector<int>& grids,
                                              const QReference& reference);

std::string format_convergence_csv(const std::vector<ConvergenceRow>& rows);

// The damped traveling wave implied by a uniform-geometry config with a sine
// discharge imposed on the left; rejects configs outside that family.
QReference damped_wave_reference(const SimulationConfig& cfg);

} // namespace hemo
