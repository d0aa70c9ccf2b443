#pragma once

#include "semisep/io/json.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace semisep::cli {

using io::Json;

/// 0 holds, 1 fails, 2 input or usage error, 3 indeterminate or bound exceeded.
enum ExitCode : int { kHolds = 0, kFails = 1, kUsage = 2, kIndeterminate = 3 };

int exit_code(Status s);

/// Builds the report of `command` ("cat decide", "ring-ext", ...) on a
/// canonical inline input. The report carries no verification block.
Json execute(const std::string& command, const Json& input, const Json& params);

/// Re-checks a report: a "holds" witness is substituted into the independent
/// verifiers; any other status is recomputed from the embedded input and the
/// verdict data compared.
Json verify_report(const Json& report);

/// One command line without the program name. The JSON report goes to `out`,
/// diagnostics to `err`. Relative input paths are resolved against `base`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::filesystem::path& base = {});

/// Replays every case of a manifest; writes one report per case and
/// summary.json into `out_dir` when given. Returns the exit code.
int corpus_run(const std::filesystem::path& manifest, const std::filesystem::path& out_dir, std::ostream& out,
               std::ostream& err);

}  // namespace semisep::cli
