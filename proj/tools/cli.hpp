#pragma once

namespace geomint::cli {

/// Parses and dispatches one invocation. Exit status: 0 on success, 1 on
/// domain errors (bad images, missing files, degenerate figures), 2 on
/// usage errors.
int run(int argc, const char* const* argv);

} // namespace geomint::cli
