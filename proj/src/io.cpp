#include "hemo/io.hpp"

#include "hemo/analytic.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hemo {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

constexpr const char* snapshot_header = "x,A,Q,u,p,k,A0";

double parse_field(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw IoError("snapshot CSV: cannot parse value '" + s + "'");
    return v;
}

} // namespace

void write_snapshot_csv(std::ostream& out, const SnapshotSeries& series, std::size_t index) {
    if (index >= series.snapshots.size())
        throw std::out_of_range("write_snapshot_csv: snapshot index out of range");
    const Snapshot& snap = series.snapshots[index];
    out << snapshot_header << "\n";
    for (std::size_t i = 0; i < snap.cells.size(); ++i) {
        const ConservedState& u = snap.cells[i];
        const double k = series.geometry.k[i];
        const double a0 = series.geometry.a0[i];
        const double v = u.a > 0.0 ? velocity(u) : 0.0;
        out << fmt(series.grid.center(static_cast<int>(i))) << ',' << fmt(u.a) << ','
            << fmt(u.q) << ',' << fmt(v) << ','
            << fmt(pressure(u, k, a0, series.params.p0)) << ',' << fmt(k) << ','
            << fmt(a0) << "\n";
    }
}

std::vector<ConservedState> read_snapshot_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw IoError("snapshot CSV: empty stream");
    if (line == std::string(snapshot_header) + "\r")
        line.pop_back();
    if (line != snapshot_header)
        throw IoError("snapshot CSV: unexpected header '" + line + "'");
    std::vector<ConservedState> cells;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ','))
            fields.push_back(field);
        if (fields.size() != 7)
            throw IoError("snapshot CSV: expected 7 columns, got " +
                          std::to_string(fields.size()));
        cells.push_back({parse_field(fields[1]), parse_field(fields[2])});
    }
    return cells;
}

void write_series(const std::string& dir, const SnapshotSeries& series) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + dir + "': " + ec.message());

    std::ostringstream index;
    index << "file,t\n";
    for (std::size_t i = 0; i < series.snapshots.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "snap_%04zu.csv", i);
        const std::string path = dir + "/" + name;
        std::ofstream out(path);
        if (!out)
            throw IoError("cannot open '" + path + "' for writing");
        write_snapshot_csv(out, series, i);
        if (!out.good())
            throw IoError("write failed on '" + path + "'");
        index << name << ',' << fmt(series.snapshots[i].time) << "\n";
    }
    const std::string ipath = dir + "/index.csv";
    std::ofstream iout(ipath);
    if (!iout)
        throw IoError("cannot open '" + ipath + "' for writing");
    iout << index.str();
    if (!iout.good())
        throw IoError("write failed on '" + ipath + "'");
}

RunMetrics compute_metrics(const RunResult& result, const QReference* reference,
                           const XWindow* window) {
    if (result.series.snapshots.empty())
        throw std::invalid_argument("compute_metrics: empty series");
    const SnapshotSeries& series = result.series;
    const Snapshot& last = series.snapshots.back();

    RunMetrics m;
    for (const ConservedState& u : last.cells)
        m.max_abs_q_final = std::max(m.max_abs_q_final, std::abs(u.q));

    const double m0 = mass_total(series.snapshots.front().cells, series.grid.dx);
    const double mt = mass_total(last.cells, series.grid.dx);
    m.mass_drift_relative = m0 != 0.0 ? std::abs(mt - m0) / m0 : std::abs(mt - m0);

    if (reference) {
        const XWindow full{0.0, series.grid.length};
        m.l2_error_vs_reference =
            l2_error(series, series.snapshots.size() - 1, *reference, window ? *window : full).rel;
    }
    m.clamp_event_total = result.clamp_events;
    m.wall_time = result.wall_seconds;
    return m;
}

void write_metrics_csv(std::ostream& out, const RunMetrics& m) {
    out << "max_abs_q_final,mass_drift_relative,l2_error_vs_reference,"
           "clamp_event_total,wall_time\n";
    out << fmt(m.max_abs_q_final) << ',' << fmt(m.mass_drift_relative) << ',';
    if (m.l2_error_vs_reference)
        out << fmt(*m.l2_error_vs_reference);
    out << ',' << m.clamp_event_total << ',' << fmt(m.wall_time) << "\n";
}

L2Result l2_error(const SnapshotSeries& series, std::size_t snap_index,
                  const QReference& reference, const XWindow& window) {
    if (snap_index >= series.snapshots.size())
        throw std::out_of_range("l2_error: snapshot index out of range");
    const Snapshot& snap = series.snapshots[snap_index];
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < snap.cells.size(); ++i) {
        const double x = series.grid.center(static_cast<int>(i));
        if (x < window.lo || x > window.hi)
            continue;
        const double ref = reference(x, snap.time);
        const double diff = snap.cells[i].q - ref;
        num += diff * diff;
        den += ref * ref;
    }
    L2Result r;
    r.abs = std::sqrt(num * series.grid.dx);
    const double ref_norm = std::sqrt(den * series.grid.dx);
    if (ref_norm == 0.0)
        r.rel = r.abs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    else
        r.rel = r.abs / ref_norm;
    return r;
}

std::vector<ConvergenceRow> convergence_study(const SimulationConfig& base,
                                              const std::vector<int>& grids,
                                              const QReference& reference) {
    if (grids.empty())
        throw ConfigError("convergence_study: need at least one grid size");
    for (std::size_t i = 0; i < grids.size(); ++i) {
        if (grids[i] < 2)
            throw ConfigError("convergence_study: grid sizes must be >= 2");
        if (i > 0 && grids[i] <= grids[i - 1])
            throw ConfigError("convergence_study: grid sizes must increase strictly");
    }

    std::vector<ConvergenceRow> rows;
    for (std::size_t i = 0; i < grids.size(); ++i) {
        SimulationConfig cfg = base;
        cfg.grid.cells = grids[i];
        cfg.snapshot_times.clear();
        const RunResult result = run(cfg);
        const XWindow full{0.0, result.series.grid.length};
        const double err =
            l2_error(result.series, result.series.snapshots.size() - 1, reference, full).abs;
        ConvergenceRow row;
        row.cells = grids[i];
        row.error = err;
        if (i > 0 && rows.back().error > 0.0 && err > 0.0)
            row.order = std::log(rows.back().error / err) /
                        std::log(static_cast<double>(grids[i]) / grids[i - 1]);
        rows.push_back(row);
    }
    return rows;
}

std::string format_convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream out;
    out << "cells,l2_error,observed_order\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << rows[i].cells << ',' << fmt(rows[i].error) << ',';
        if (i > 0)
            out << fmt(rows[i].order);
        out << "\n";
    }
    return out.str();
}

QReference damped_wave_reference(const SimulationConfig& cfg) {
    if (cfg.geometry.kind != GeometryKind::uniform)
        throw ConfigError("damped_wave_reference: needs a uniform geometry");
    if (cfg.bc_left.kind != BoundaryKind::imposed_discharge ||
        cfg.bc_left.waveform.kind != WaveformKind::sine)
        throw ConfigError("damped_wave_reference: needs a sine discharge on the left");

    const double a0 = pi * cfg.geometry.r0 * cfg.geometry.r0;
    const double c0 = sound_speed(a0, cfg.geometry.k, cfg.phys.rho);
    const DampedWaveParams p = damped_wave_params(cfg.bc_left.waveform.omega, c0, cfg.phys.cf,
                                                  a0, cfg.bc_left.waveform.q_amp);
    return [p](double x, double t) { return damped_wave_discharge(p, x, t); };
}

} // namespace hemo
