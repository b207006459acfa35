// cli.hpp - command-line front end
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace liss {

// Parses and dispatches one invocation. Writes the machine-readable
// key=value summary to `out` and diagnostics to `err`. Returns 0 on
// success, 2 on usage errors (unknown flag, invalid value), 1 on I/O or
// computation failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Regenerates every figure analogue into outdir (9 files, fixed names) and
// prints one manifest line per file. Without `big`, per-panel sample counts
// are capped at 65537 so the run stays desk-scale; with `big`, full
// Nyquist-based defaults apply.
int reproduce_all(const std::filesystem::path& outdir, bool big,
                  std::ostream& out, std::ostream& err);

}  // namespace liss
