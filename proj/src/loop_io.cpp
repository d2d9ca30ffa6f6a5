#include "rotorsym/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rotorsym::io {

using domain::DiscreteLoop;

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_loop_csv(std::ostream& out, const DiscreteLoop& loop) {
    const int n = loop.n();
    out << (loop.is_phase() ? "t,q1,q2,p1,p2" : "t,q1,q2") << "\n";
    for (int i = 0; i < n; ++i) {
        out << format_real(static_cast<double>(i) / n) << ',' << format_real(loop.q[i].x)
            << ',' << format_real(loop.q[i].y);
        if (loop.is_phase())
            out << ',' << format_real(loop.p[i].x) << ',' << format_real(loop.p[i].y);
        out << "\n";
    }
}

namespace {

[[noreturn]] void bad_row(int line, const std::string& what) {
    throw std::invalid_argument("loop CSV, line " + std::to_string(line) + ": " + what);
}

std::vector<double> split_row(const std::string& line, int lineno, std::size_t expect) {
    std::vector<double> vals;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(cell, &used);
            while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used])))
                ++used;
            if (used != cell.size()) bad_row(lineno, "trailing junk in \"" + cell + "\"");
            vals.push_back(v);
        } catch (const std::invalid_argument&) {
            bad_row(lineno, "not a number: \"" + cell + "\"");
        } catch (const std::out_of_range&) {
            bad_row(lineno, "out of range: \"" + cell + "\"");
        }
    }
    if (vals.size() != expect)
        bad_row(lineno, "expected " + std::to_string(expect) + " columns, got " +
                            std::to_string(vals.size()));
    return vals;
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ')) s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && s[b] == ' ') ++b;
    return s.substr(b);
}

} // namespace

DiscreteLoop read_loop_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("loop CSV: empty input");
    const std::string header = trimmed(line);
    bool phase = false;
    if (header == "t,q1,q2,p1,p2")
        phase = true;
    else if (header != "t,q1,q2")
        throw std::invalid_argument("loop CSV: bad header \"" + header +
                                    "\" (want t,q1,q2 or t,q1,q2,p1,p2)");

    std::vector<double> ts;
    std::vector<Vec2> q, p;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string row = trimmed(line);
        if (row.empty()) continue;
        const auto vals = split_row(row, lineno, phase ? 5u : 3u);
        ts.push_back(vals[0]);
        q.push_back({vals[1], vals[2]});
        if (phase) p.push_back({vals[3], vals[4]});
    }

    // A final t=1 row duplicating row 0 is the written-out closure of a
    // trajectory; the loop stores each sample once.
    if (ts.size() >= 2 && std::abs(ts.back() - 1.0) < 1e-12) {
        if (norm_inf(q.back() - q.front()) > 1e-6)
            throw std::invalid_argument("loop CSV: endpoint at t=1 does not close the loop");
        ts.pop_back();
        q.pop_back();
        if (phase) p.pop_back();
    }

    const int n = static_cast<int>(ts.size());
    if (n < 8) throw std::invalid_argument("loop CSV: need at least 8 samples, got " +
                                           std::to_string(n));
    for (int i = 0; i < n; ++i)
        if (std::abs(ts[static_cast<std::size_t>(i)] - static_cast<double>(i) / n) > 1e-9)
            throw std::invalid_argument("loop CSV, line " + std::to_string(i + 2) +
                                        ": t must equal " + std::to_string(i) + "/" +
                                        std::to_string(n));

    return phase ? domain::make_phase_loop(std::move(q), std::move(p))
                 : domain::make_configuration_loop(std::move(q));
}

DiscreteLoop read_loop_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open loop file " + path);
    return read_loop_csv(in);
}

void write_loop_csv_file(const std::string& path, const DiscreteLoop& loop) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write loop file " + path);
    write_loop_csv(out, loop);
}

void write_trajectory_csv(std::ostream& out, const integrate::Trajectory& traj) {
    out << "t,q1,q2,p1,p2\n";
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const Vec4& z = traj.states[i];
        out << format_real(traj.time_at(static_cast<int>(i)));
        for (int k = 0; k < 4; ++k) out << ',' << format_real(z[k]);
        out << "\n";
    }
}

DiscreteLoop loop_from_trajectory(const integrate::Trajectory& traj, int samples, bool phase) {
    const int steps = static_cast<int>(traj.states.size()) - 1;
    if (samples < 8 || steps % samples != 0)
        throw std::invalid_argument("trajectory step count must be a multiple of the "
                                    "requested sample count");
    const int stride = steps / samples;
    std::vector<Vec2> q, p;
    q.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const Vec4& z = traj.states[static_cast<std::size_t>(i) * stride];
        q.push_back(z.q());
        if (phase) p.push_back(z.p());
    }
    return phase ? domain::make_phase_loop(std::move(q), std::move(p))
                 : domain::make_configuration_loop(std::move(q));
}

} // namespace rotorsym::io
