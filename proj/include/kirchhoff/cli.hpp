#pragma once

#include <iosfwd>

namespace kirchhoff::cli {

/// Entry point shared by the binary and the tests. Dispatches the
/// subcommands:
///
///   kirchhoff compute <file> [--backend float|rational] [--omega-csv <file>]
///   kirchhoff transform <file> --op s|t [--k N] --out <file>
///   kirchhoff verify (<file> | --builtin) [--max-k-s N] [--max-k-t N]
///                    [--tol X] [--json <file>] [--backend float|rational]
///
/// Returns the process exit code: 0 success, 1 verification failure,
/// 2 input error, 3 resource cap. The KIRCHHOFF_VERTEX_CAP environment
/// variable overrides the structural vertex cap for transform iterates.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kirchhoff::cli
