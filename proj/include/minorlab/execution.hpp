#pragma once

namespace minorlab {

// Serial is the reference path; Parallel must give identical results.
enum class Execution { Serial, Parallel };

}  // namespace minorlab
