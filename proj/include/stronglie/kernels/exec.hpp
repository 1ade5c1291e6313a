#pragma once

namespace stronglie {

/// Execution policy for the data-parallel kernels. `serial` is the reference
/// implementation the parallel paths are tested against.
enum class Exec { serial, parallel };

} // namespace stronglie
