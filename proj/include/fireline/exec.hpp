#pragma once

namespace fireline {

// Kernel execution policy. Every parallel path is schedule-independent:
// running serial or parallel, with any thread count, gives identical output.
enum class Exec { serial, parallel };

} // namespace fireline
