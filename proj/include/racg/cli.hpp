#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace racg::cli {

inline constexpr int kOk = 0;
inline constexpr int kAnalysisFailure = 1;
inline constexpr int kUsageError = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Checks every graph file in `dir` against its `<stem>.expect.json` sidecar.
int run_corpus(const std::filesystem::path& dir, std::ostream& out, std::ostream& err);

}  // namespace racg::cli
