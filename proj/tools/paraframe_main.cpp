#include <iostream>
#include <string>
#include <vector>

#include "paraframe/cli_driver.hpp"
#include "paraframe/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  paraframe::CliOptions options;
  options.color = paraframe::color_allowed_for_stdout();
  return paraframe::run_command(args, std::cout, std::cerr, options);
}
