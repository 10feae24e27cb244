#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kneser::cli {

/// Process exit codes; part of the public interface.
enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kTimedOut = 3,
    kCapacity = 4,
    kFalsified = 5,
};

/// Runs the experiment CLI. `args` excludes the program name. Artifacts go to
/// --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Applies KNESER_CHROMA_THREADS (if set) as the OpenMP worker cap.
void apply_thread_env();

}  // namespace kneser::cli
