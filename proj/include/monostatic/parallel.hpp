// Execution mode for the data-parallel kernels. Every parallel path must
// reduce deterministically and match its serial reference bit for bit.
#pragma once

namespace monostatic {

enum class Execution { Serial, Parallel };

}  // namespace monostatic
