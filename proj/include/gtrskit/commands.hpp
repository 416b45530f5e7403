#pragma once

#include "gtrskit/report.hpp"

namespace gtrskit {

// Subcommand entry points.  Each consumes the parameter block of its
// RunConfig, runs the grid/instances (cells dispatched across
// rc.workers, merged in cell order) and returns the full report.
// Parameter problems throw (ParamWindowError and friends) and are mapped
// to exit code 2 by run_cli; a false verdict inside a report maps to 1.
Report cmd_construct(const RunConfig& rc);
Report cmd_verify(const RunConfig& rc);
Report cmd_search(const RunConfig& rc);

// Serializes per rc.format to rc.out_path (stdout when empty).
void emit_report(const Report& report, const RunConfig& rc);

// Full front end: parse argv, dispatch, emit; returns the process exit code
// (0 all-pass, 1 some verdict failed, 2 usage/config error).
int run_cli(int argc, const char* const* argv);

}  // namespace gtrskit
