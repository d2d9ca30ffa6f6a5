// Thread-count control for the OpenMP kernels. ROTORSYM_THREADS caps the
// worker count (<=1 forces the serial path); results are bit-identical at
// any cap because reductions are fixed-order pairwise sums over buffers.
#pragma once

namespace rotorsym {

// Effective worker count: override if set, else ROTORSYM_THREADS clamped to
// the OpenMP maximum, else the OpenMP maximum (1 without OpenMP).
int thread_cap();
// n >= 1 overrides; n <= 0 returns to the environment-derived default.
void set_thread_cap(int n);
bool parallel_enabled();

} // namespace rotorsym
