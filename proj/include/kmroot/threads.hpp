#pragma once

namespace kmroot {

// OpenMP thread budget capped by the KMROOT_THREADS environment variable.
// Returns 1 when built without OpenMP.
int effective_threads();

}  // namespace kmroot
