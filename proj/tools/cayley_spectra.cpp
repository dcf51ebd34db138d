// Copyright 2026 The cayley-spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cayley-spectra <command> [--input job.json] [--oracle auto|on|off]
//                [--tol 1e-8] [--output json|table]

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cayley/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of normal Cayley digraphs"};
  std::string command;
  std::string input;
  std::optional<std::string> oracle_mode;
  std::optional<double> tolerance;
  std::optional<std::string> output;

  app.add_option("command", command,
                 "spectrum | classes | check-integrality | check-theorem1 | check-theorem2 | "
                 "character-table | verify-all")
      ->required();
  app.add_option("--input,-i", input, "job JSON file (default: stdin)");
  app.add_option("--oracle", oracle_mode, "brute-force oracle: auto, on or off");
  app.add_option("--tol", tolerance, "floating oracle tolerance");
  app.add_option("--output,-o", output, "json or table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  cayley::Json document;
  try {
    if (input.empty()) {
      document = cayley::Json::parse(std::cin);
    } else {
      std::ifstream file(input);
      if (!file) {
        std::cerr << "error: cannot open input file '" << input << "'\n";
        return 2;
      }
      document = cayley::Json::parse(file);
    }
  } catch (const cayley::Json::exception& e) {
    std::cerr << "error: input is not valid JSON: " << e.what() << "\n";
    return 2;
  }

  auto overrides = [&](cayley::JobSpec& job) {
    job.command = cayley::parse_command(command);
    if (oracle_mode) job.oracle = cayley::parse_oracle_mode(*oracle_mode);
    if (tolerance) {
      if (*tolerance <= 0) throw cayley::InputError("--tol: expected a positive number");
      job.tolerance = *tolerance;
    }
    if (output) job.output = cayley::parse_output_format(*output);
  };
  return cayley::run(document, std::cout, std::cerr, overrides);
}
