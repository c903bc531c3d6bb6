// Copyright 2026 The dualqf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dualqf <subcommand> <problem.json> [--field F] [--half-gram] [--output PATH]
//
// Exit codes: 0 success, 2 radical condition violated, 1 any other failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "dualqf/dualqf.h"

namespace {

struct Args {
  std::string input;
  std::string field;
  std::string output;
  bool half_gram = false;
};

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

int fail(const char* stage, dqf_status status) {
  std::cerr << "dualqf: " << stage << ": " << dqf_status_string(status);
  const char* detail = dqf_last_error();
  if (detail && *detail) std::cerr << " (" << detail << ")";
  std::cerr << "\n";
  return dqf_exit_code(status);
}

int run(const std::string& command, const Args& args) {
  std::string text;
  if (!read_file(args.input, text)) {
    std::cerr << "dualqf: cannot read " << args.input << "\n";
    return 1;
  }

  dqf_problem* raw = nullptr;
  dqf_status status = dqf_problem_parse(text.c_str(), args.field.empty() ? nullptr : args.field.c_str(), &raw);
  if (status != DQF_OK) return fail("parse", status);
  std::unique_ptr<dqf_problem, decltype(&dqf_problem_free)> problem(raw, &dqf_problem_free);

  char* out = nullptr;
  status = dqf_run(problem.get(), command.c_str(), args.half_gram ? DQF_FLAG_HALF_GRAM : 0u, &out);
  if (status != DQF_OK) return fail(command.c_str(), status);
  std::unique_ptr<char, decltype(&dqf_string_free)> doc(out, &dqf_string_free);

  if (args.output.empty()) {
    std::cout << doc.get() << std::flush;
    return std::cout ? 0 : 1;
  }
  std::ofstream file(args.output, std::ios::binary | std::ios::trunc);
  file << doc.get();
  file.close();
  if (!file) {
    std::cerr << "dualqf: cannot write " << args.output << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dual quadratic forms on annihilators of the radical"};
  app.set_version_flag("--version", std::string(dqf_version()));
  app.require_subcommand(1, 1);

  Args args;
  std::vector<std::string> names;
  for (const char* const* p = dqf_command_names(); *p; ++p) names.emplace_back(*p);
  for (const auto& name : names) {
    CLI::App* sub = app.add_subcommand(name, "Run " + name + " on a problem file");
    sub->add_option("file", args.input, "Problem file (JSON)")->required();
    sub->add_option("--field", args.field, "Override the field, e.g. Q or GF(5)");
    sub->add_flag("--half-gram", args.half_gram, "Also print 1/2-Gram matrices (characteristic != 2)");
    sub->add_option("--output,-o", args.output, "Write the document to this path instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  for (const auto* sub : app.get_subcommands()) return run(sub->get_name(), args);
  return 1;
}
