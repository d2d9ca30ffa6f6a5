// CSV exchange formats. Loops: header `t,q1,q2` or `t,q1,q2,p1,p2`, n rows,
// t column validated against i/n; a trailing t=1 row that closes the loop is
// accepted as the structural duplicate of row 0 and dropped. Trajectories:
// header `t,q1,q2,p1,p2`, one row per state. All reals use 17 significant
// digits so outputs are reproducible byte for byte.
#pragma once

#include <iosfwd>
#include <string>

#include "rotorsym/integrate.hpp"
#include "rotorsym/problem.hpp"

namespace rotorsym::io {

std::string format_real(double x);

void write_loop_csv(std::ostream& out, const domain::DiscreteLoop& loop);
domain::DiscreteLoop read_loop_csv(std::istream& in);
domain::DiscreteLoop read_loop_csv_file(const std::string& path);
void write_loop_csv_file(const std::string& path, const domain::DiscreteLoop& loop);

void write_trajectory_csv(std::ostream& out, const integrate::Trajectory& traj);

// Downsamples a [0,1] trajectory to an n-sample loop (stride must divide the
// step count); phase loops keep the last two state components as p.
domain::DiscreteLoop loop_from_trajectory(const integrate::Trajectory& traj, int samples,
                                          bool phase);

} // namespace rotorsym::io
