#ifndef RAAG_TEST_HELPERS_HPP
#define RAAG_TEST_HELPERS_HPP

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace test_helpers {

inline std::string data_dir() { return RAAG_DATA_DIR; }
inline std::string cli_path() { return RAAG_CLI_PATH; }

inline std::string data_file(const std::string& name) { return data_dir() + "/" + name; }

inline bool data_present(const std::string& name) {
  return std::filesystem::exists(data_file(name));
}

struct CliResult {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
inline CliResult run_cli(const std::string& args) {
  CliResult res;
  std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  int rc = pclose(pipe);
  res.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  return res;
}

}  // namespace test_helpers

#endif
