#include "fgeo/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
    std::cout << fgeo::cli::usage();
    return args.empty() ? 2 : 0;
  }
  fgeo::cli::OutputFormat format = fgeo::cli::OutputFormat::text;
  const auto report = fgeo::cli::dispatch(args, &format);
  std::cout << (format == fgeo::cli::OutputFormat::json ? fgeo::cli::render_json(report)
                                                        : fgeo::cli::render_text(report));
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  if (report.exit_code == 2) std::cerr << "\n" << fgeo::cli::usage();
  return report.exit_code;
}
