#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairlab::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUnknownCommand = 2,
    kMalformedInput = 3,
    kInternalError = 4,
};

/// Runs one invocation. `args` excludes the program name. One JSON
/// document goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory holding the golden corpus: PAIRLAB_CORPUS_DIR if set, else the
/// location baked in at build time.
std::string default_corpus_dir();

/// Runs every golden case under `dir`. Returns kOk when all pass.
int verify_corpus(const std::string& dir, std::ostream& out, std::ostream& err);

}  // namespace pairlab::cli
