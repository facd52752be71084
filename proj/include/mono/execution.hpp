#pragma once

namespace mono {

/// Kernels that loop over independent samples come in two flavours: a plain loop kept as
/// the reference, and an OpenMP loop whose results are merged in sample order.
enum class Execution { serial, parallel };

/// Honors MONO_THREADS when set; otherwise the OpenMP default.
int worker_count();
void apply_thread_limit_from_env();

}  // namespace mono
