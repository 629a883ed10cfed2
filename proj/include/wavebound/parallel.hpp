#pragma once

namespace wavebound {

/// Threads used by the OpenMP kernels: the OpenMP default, capped by the
/// WAVEBOUND_THREADS environment variable when it holds a positive integer.
int thread_count();

} // namespace wavebound
