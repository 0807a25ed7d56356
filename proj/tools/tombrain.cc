// Copyright 2026 The Tombrain Authors.
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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "tom/error.h"
#include "tom/http_api.h"
#include "tom/session.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tom::Error(tom::ErrorCode::kInvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct BrainOptions {
  std::string brain;
  std::string lexicon;
  std::string templates;
  bool verbose = false;
};

std::unique_ptr<tom::Service> make_service(const BrainOptions& o) {
  auto brain = o.brain.empty()
                   ? std::make_unique<tom::Brain>()
                   : std::make_unique<tom::Brain>(tom::Brain::deserialize(slurp(o.brain)));
  tom::ServiceOptions opts;
  if (!o.lexicon.empty()) opts.lexicon = tom::Lexicon::load(o.lexicon);
  if (!o.templates.empty()) opts.templates = tom::TemplateTable::load(o.templates);
  opts.verbose = o.verbose;
  return std::make_unique<tom::Service>(std::move(brain), std::move(opts));
}

void print_lines(const std::vector<std::string>& lines) {
  for (const auto& l : lines) std::cout << "L: " << l << "\n";
  std::cout.flush();
}

int repl(tom::Service& svc) {
  int session = svc.open_session(std::nullopt).first;
  std::string speaker = "unknown";
  double conf = 1.0;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    try {
      if (line == "/quit") break;
      if (line.rfind("/percept ", 0) == 0) {
        auto evs = tom::parse_script("PERCEPT " + line.substr(9));
        print_lines(svc.post_percept(evs.at(0).percept));
      } else if (line.rfind("/who ", 0) == 0) {
        std::istringstream ss(line.substr(5));
        ss >> speaker;
        std::string c;
        if (ss >> c && c.rfind("conf=", 0) == 0) conf = std::stod(c.substr(5));
      } else if (line.rfind("/date ", 0) == 0) {
        svc.set_date(tom::Date(line.substr(6)));
      } else if (line == "/dump") {
        std::cout << svc.dump();
      } else if (line == "/conflicts") {
        std::cout << svc.view("conflicts").dump(2) << "\n";
      } else if (line[0] == '/') {
        std::cerr << "unknown command " << line << "\n";
      } else {
        print_lines(svc.post_utterance(session, speaker, line, conf).lines);
      }
    } catch (const tom::Error& e) {
      std::cerr << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tombrain: a perspective-keeping knowledge engine and chat agent"};
  app.require_subcommand(1);
  BrainOptions bo;

  auto* repl_cmd = app.add_subcommand("repl", "interactive conversation on stdin");
  repl_cmd->add_option("--brain", bo.brain, "brain dump to start from");
  repl_cmd->add_option("--lexicon", bo.lexicon, "lexicon TSV");
  repl_cmd->add_option("--templates", bo.templates, "template TSV");

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve_cmd = app.add_subcommand("serve", "HTTP API");
  serve_cmd->add_option("--port", port, "port")->required();
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("--brain", bo.brain, "brain dump to start from");

  std::string script;
  std::string dump_out;
  auto* run_cmd = app.add_subcommand("run-script", "replay a scenario");
  run_cmd->add_option("FILE", script, "scenario file")->required();
  run_cmd->add_option("--dump-out", dump_out, "write the final brain here");
  run_cmd->add_option("--brain", bo.brain, "brain dump to start from");
  run_cmd->add_flag("--verbose", bo.verbose, "include percept notes");

  auto* dump_cmd = app.add_subcommand("dump", "print a brain dump");
  dump_cmd->add_option("--brain", bo.brain, "brain dump to normalize");

  CLI11_PARSE(app, argc, argv);

  try {
    auto svc = make_service(bo);
    if (*repl_cmd) return repl(*svc);
    if (*serve_cmd) {
      httplib::Server server;
      tom::install_routes(server, *svc);
      std::cerr << "listening on " << host << ":" << port << "\n";
      return server.listen(host, port) ? 0 : 1;
    }
    if (*run_cmd) {
      auto result = tom::run_script(tom::parse_script(slurp(script)), *svc);
      for (const auto& e : result.transcript) std::cout << e.render() << "\n";
      if (!dump_out.empty()) {
        std::ofstream(dump_out, std::ios::binary) << svc->dump();
      }
      for (const auto& m : result.mismatches) {
        std::cerr << "ExpectMismatch: " << m.describe() << "\n";
      }
      return result.passed() ? 0 : 1;
    }
    if (*dump_cmd) {
      std::cout << svc->dump();
      return 0;
    }
  } catch (const tom::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
