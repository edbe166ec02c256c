// Copyright 2026 The bbb Authors.
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

// Command-line front end. Every command prints one JSON report on stdout
// (gen prints the instance) and exits with the code from commands.h.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bbb/commands.h"
#include "bbb/generator.h"
#include "bbb/instance_io.h"

namespace {

int Emit(const bbb::CommandResult& r) {
  std::cout << bbb::RenderReport(r.report);
  if (r.exit_code != bbb::kExitOk && r.report.contains("error")) {
    std::cerr << "bbb: " << r.report["error"].get<std::string>() << "\n";
  }
  return r.exit_code;
}

bool WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest and packed b-bibranchings, with exact checks"};
  app.require_subcommand(1);

  std::string instance_path, solution_path, method = "auto", dump_lp;
  std::string what, out_path;
  uint64_t seed = 1;
  long trials = 100;
  bbb::GenParams gen;

  CLI::App* validate = app.add_subcommand("validate", "Check a solution");
  validate->add_option("instance", instance_path)->required();
  validate->add_option("solution", solution_path)->required();

  CLI::App* solve = app.add_subcommand("solve", "Shortest b-bibranching");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--method", method, "lp, mflow, brute or auto");
  solve->add_option("--dump-lp", dump_lp, "Write the final LP here");

  CLI::App* pack = app.add_subcommand("pack", "Disjoint b-bibranchings");
  pack->add_option("instance", instance_path)->required();

  CLI::App* number =
      app.add_subcommand("packing-number", "Min-max packing bound");
  number->add_option("instance", instance_path)->required();

  CLI::App* check = app.add_subcommand("check", "Run a structural check");
  check->add_option("instance", instance_path)->required();
  check->add_option("--what", what, "tdi, mconvex, exchange or idp")
      ->required();
  check->add_option("--seed", seed);
  check->add_option("--trials", trials);

  CLI::App* generate = app.add_subcommand("gen", "Random instance");
  generate->add_option("--seed", gen.seed);
  generate->add_option("--nS", gen.num_s);
  generate->add_option("--nT", gen.num_t);
  generate->add_option("--arc-density", gen.arc_density);
  generate->add_option("--bmax", gen.bmax);
  generate->add_option("--wmax", gen.wmax);
  generate->add_option("-o,--out", out_path, "Write here, not stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bbb::kExitInputError;
  }

  bbb::Json echo;
  if (*generate) {
    echo["name"] = "gen";
    echo["seed"] = gen.seed;
    echo["nS"] = gen.num_s;
    echo["nT"] = gen.num_t;
    echo["arc_density"] = gen.arc_density;
    echo["bmax"] = gen.bmax;
    echo["wmax"] = gen.wmax;
    std::string text;
    bbb::CommandResult r = bbb::Execute(echo, [&] {
      text = bbb::SerializeInstance(bbb::GenerateInstance(gen));
      return bbb::CommandResult{};
    });
    if (r.exit_code != bbb::kExitOk) return Emit(r);
    if (out_path.empty()) {
      std::cout << text;
    } else if (!WriteText(out_path, text)) {
      std::cerr << "bbb: cannot write '" << out_path << "'\n";
      return bbb::kExitInputError;
    }
    return bbb::kExitOk;
  }

  echo["name"] = app.get_subcommands().front()->get_name();
  echo["instance"] = instance_path;
  if (*validate) {
    echo["solution"] = solution_path;
    return Emit(bbb::Execute(echo, [&] {
      bbb::Instance inst = bbb::LoadInstance(instance_path);
      return bbb::RunValidate(inst, bbb::LoadSolution(inst, solution_path));
    }));
  }
  if (*solve) {
    echo["method"] = method;
    bbb::CommandResult r = bbb::Execute(echo, [&] {
      bbb::CuttingPlaneOptions options;
      options.dump_lp = !dump_lp.empty();
      bbb::Method m = bbb::ParseMethod(method);
      return bbb::RunSolve(bbb::LoadInstance(instance_path), m, options);
    });
    if (r.report.contains("lp_text")) {
      if (!WriteText(dump_lp, r.report["lp_text"].get<std::string>())) {
        std::cerr << "bbb: cannot write '" << dump_lp << "'\n";
      }
      r.report.erase("lp_text");
    }
    return Emit(r);
  }
  if (*pack) {
    return Emit(bbb::Execute(echo, [&] {
      return bbb::RunPack(bbb::LoadInstance(instance_path));
    }));
  }
  if (*number) {
    return Emit(bbb::Execute(echo, [&] {
      return bbb::RunPackingNumber(bbb::LoadInstance(instance_path));
    }));
  }
  echo["what"] = what;
  echo["seed"] = seed;
  echo["trials"] = trials;
  return Emit(bbb::Execute(echo, [&] {
    bbb::CheckKind kind = bbb::ParseCheckKind(what);
    return bbb::RunCheck(bbb::LoadInstance(instance_path), kind, seed, trials);
  }));
}
