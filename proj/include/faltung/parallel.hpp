#pragma once

namespace faltung {

// Kernels with a data-parallel inner structure take an Exec mode.  The
// serial path is the reference; the parallel path must produce identical
// values (all parallelized work is exact arithmetic on disjoint outputs,
// so results do not depend on thread count).
enum class Exec { serial, parallel };

}  // namespace faltung
