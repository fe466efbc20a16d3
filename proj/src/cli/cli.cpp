// Copyright 2026 The rjanus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rjanus/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <boost/asio/io_context.hpp>
#include <boost/asio/signal_set.hpp>

#include "rjanus/bigstep.hpp"
#include "rjanus/cfg.hpp"
#include "rjanus/debug/server.hpp"
#include "rjanus/inverter.hpp"
#include "rjanus/json.hpp"
#include "rjanus/reversible.hpp"
#include "rjanus/smallstep.hpp"
#include "rjanus/syntax.hpp"

namespace rjanus {

namespace {

// Thrown for bad flags or unreadable inputs; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown after diagnostics have been printed; maps to kExitProgramError.
struct ProgramRejected {};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Program load_program(const std::string& path, bool strict, std::ostream& err) {
  const std::string source = read_file(path);
  ParseResult parsed = parse(source, ParseOptions{strict});
  std::vector<Diagnostic> diags = parsed.diagnostics;
  if (parsed.ok()) {
    auto more = check_reversibility(*parsed.program);
    diags.insert(diags.end(), more.begin(), more.end());
  }
  for (const auto& d : diags) err << format_diagnostic(d, path) << '\n';
  if (!parsed.ok() || has_errors(diags)) throw ProgramRejected{};
  return std::move(*parsed.program);
}

std::int32_t parse_int(std::string_view text, const std::string& what) {
  std::int32_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("bad integer '" + std::string(text) + "' in " + what);
  }
  return v;
}

// "x=1,a[2]=-3"
Store parse_store_flag(const std::string& spec) {
  Store store;
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw UsageError("--store entries must look like name=value or name[i]=value");
    }
    std::string_view cell = item.substr(0, eq);
    const std::int32_t value = parse_int(item.substr(eq + 1), "--store");
    const auto open = cell.find('[');
    if (open == std::string_view::npos) {
      store = store.assign(CellKey::scalar(std::string(cell)), value);
    } else {
      if (cell.back() != ']' || open == 0) throw UsageError("bad cell '" + std::string(cell) + "'");
      const auto idx = parse_int(cell.substr(open + 1, cell.size() - open - 2), "--store");
      store = store.assign(CellKey::element(std::string(cell.substr(0, open)), idx), value);
    }
  }
  return store;
}

RevConfig load_state(const std::string& path, const LabeledProgram& lp) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
  try {
    if (j.is_object() && j.contains("prev") && j.contains("next")) {
      RevConfig c = config_from_json(j);
      for (Label l : {c.prev, c.next}) {
        if (!lp.contains(l)) throw UsageError("label " + std::to_string(l) + " does not exist");
      }
      return c;
    }
    const Label stop = lp.main().stop;
    return RevConfig{store_from_json(j), lp.unique_pred(stop), stop, {}};
  } catch (const JsonFormatError& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

std::string stack_text(const RevConfig& c) {
  std::string out;
  for (auto it = c.stack.rbegin(); it != c.stack.rend(); ++it) {
    out += std::string(to_string(it->kind)) + "(" + std::to_string(it->l1);
    if (it->kind != FrameKind::Call && it->kind != FrameKind::Uncall) {
      out += "," + std::to_string(it->l2);
    }
    out += "):";
  }
  return out + "[]";
}

std::string config_text(const RevConfig& c) {
  return "⟨" + to_string(c.store) + ", " + std::to_string(c.prev) + ", " + std::to_string(c.next) +
         ", " + stack_text(c) + "⟩";
}

void report(const EngineError& e, const std::string& path, std::ostream& err) {
  err << path;
  if (!e.span().synthesized()) err << ':' << e.span().line << ':' << e.span().column;
  err << ": " << to_string(e.kind()) << ": " << e.what() << '\n';
}

void print_store(const Store& store, bool as_json, std::ostream& out) {
  if (as_json) {
    out << store_flat(store).dump() << '\n';
  } else {
    out << to_string(store) << '\n';
  }
}

int serve(std::uint16_t port, const std::string& host, std::ostream& out) {
  debug::SessionManager manager(debug::options_from_env());
  debug::Server server(manager);
  const std::uint16_t bound = server.start(host, port);
  out << "rjanus debug service listening on http://" << host << ':' << bound << std::endl;
  boost::asio::io_context signals_ctx;
  boost::asio::signal_set signals(signals_ctx, SIGINT, SIGTERM);
  signals.async_wait([&](const boost::system::error_code&, int) { server.stop(); });
  signals_ctx.run();
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Janus reversible language toolkit", "rjanus"};
  app.require_subcommand(1);

  std::string file;
  std::string engine;
  std::string store_spec;
  std::string state_file;
  bool backward = false;
  bool as_json = false;
  bool strict = false;
  std::uint64_t fuel = kDefaultFuel;

  auto* run = app.add_subcommand("run", "Execute a program and print the final store");
  run->add_option("file", file, "Janus source file")->required();
  run->add_option("--engine", engine, "bigstep | smallstep | reversible")
      ->check(CLI::IsMember({"bigstep", "smallstep", "reversible"}))
      ->default_str("bigstep");
  run->add_flag("--backward", backward, "Run backward from --from-state (reversible engine)");
  run->add_option("--from-state", state_file, "Terminal store or configuration (JSON)");
  run->add_option("--store", store_spec, "Initial store, e.g. n=3,a[0]=1");
  run->add_flag("--json", as_json, "Print the store as a JSON object");
  run->add_option("--fuel", fuel, "Step budget before giving up");
  run->add_flag("--strict-grammar", strict, "Reject the lenient grammar extensions");

  auto* invert = app.add_subcommand("invert", "Print the inverse program");
  invert->add_option("file", file, "Janus source file")->required();
  invert->add_flag("--strict-grammar", strict, "Reject the lenient grammar extensions");

  bool dot = false;
  bool cfg_json = false;
  auto* cfg = app.add_subcommand("cfg", "Print the control-flow graphs");
  cfg->add_option("file", file, "Janus source file")->required();
  auto* dot_flag = cfg->add_flag("--dot", dot, "Graphviz output (default)");
  cfg->add_flag("--json", cfg_json, "JSON output")->excludes(dot_flag);
  cfg->add_flag("--strict-grammar", strict, "Reject the lenient grammar extensions");

  bool jsonl = false;
  auto* trace = app.add_subcommand("trace", "Print every rule applied by a forward run");
  trace->add_option("file", file, "Janus source file")->required();
  trace->add_option("--engine", engine, "smallstep | reversible")
      ->check(CLI::IsMember({"smallstep", "reversible"}))
      ->default_str("reversible");
  trace->add_flag("--jsonl", jsonl, "One JSON record per line");
  trace->add_option("--store", store_spec, "Initial store, e.g. n=3,a[0]=1");
  trace->add_option("--fuel", fuel, "Step budget before giving up");
  trace->add_flag("--strict-grammar", strict, "Reject the lenient grammar extensions");

  std::uint16_t port = debug::kDefaultPort;
  std::string host = "127.0.0.1";
  auto* serve_cmd = app.add_subcommand("serve", "Start the debug service");
  serve_cmd->add_option("--port", port, "TCP port (0 picks a free one)");
  serve_cmd->add_option("--host", host, "Address to bind");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*run) {
      if (engine.empty()) engine = "bigstep";
      if (backward && engine != "reversible") throw UsageError("--backward requires --engine reversible");
      if (backward && state_file.empty()) throw UsageError("--backward requires --from-state FILE");
      if (!backward && !state_file.empty()) throw UsageError("--from-state is only used with --backward");
      if (backward && !store_spec.empty()) throw UsageError("--store cannot be combined with --backward");
      const Program program = load_program(file, strict, err);
      const Store initial_store = parse_store_flag(store_spec);
      if (engine == "bigstep") {
        print_store(exec_program(program, initial_store, ExecOptions{fuel}), as_json, out);
      } else if (engine == "smallstep") {
        ProcEnv env(program);
        print_store(run_small(initial_store, program.main, env, ExecOptions{fuel}).store, as_json, out);
      } else {
        auto lp = LabeledProgram::build(program);
        const RevRunOptions options{fuel, false};
        if (backward) {
          const RevConfig from = load_state(state_file, *lp);
          print_store(run_backward(*lp, from, options).final.store, as_json, out);
        } else {
          print_store(run_forward(*lp, initial(*lp, initial_store), options).final.store, as_json, out);
        }
      }
      return kExitOk;
    }
    if (*invert) {
      out << render(inverse_of(load_program(file, strict, err)));
      return kExitOk;
    }
    if (*cfg) {
      auto lp = LabeledProgram::build(load_program(file, strict, err));
      if (cfg_json) {
        out << cfg_to_json(*lp).dump(2) << '\n';
      } else {
        out << to_dot(*lp);
      }
      return kExitOk;
    }
    if (*trace) {
      if (engine.empty()) engine = "reversible";
      const Program program = load_program(file, strict, err);
      const Store initial_store = parse_store_flag(store_spec);
      std::uint64_t idx = 0;
      if (engine == "smallstep") {
        ProcEnv env(program);
        run_small(initial_store, program.main, env, ExecOptions{fuel},
                  [&](const SmallConfig& c, SmallRule rule) {
                    if (jsonl) {
                      out << small_trace_record(idx, rule, c).dump() << '\n';
                    } else {
                      out << idx << ' ' << to_string(rule) << ' ' << to_string(c.store)
                          << " depth " << c.stack.size() << '\n';
                    }
                    ++idx;
                  });
      } else {
        auto lp = LabeledProgram::build(program);
        RevConfig c = initial(*lp, initial_store);
        for (; !is_terminal(*lp, c); ++idx) {
          if (idx == fuel) throw EngineError(ErrorKind::Timeout, "step budget exhausted");
          auto [next, rule] = step_forward(*lp, c);
          c = std::move(next);
          if (jsonl) {
            out << rev_trace_record(idx, Direction::Forward, rule, c).dump() << '\n';
          } else {
            out << idx << ' ' << to_string(rule) << ' ' << config_text(c) << '\n';
          }
        }
      }
      return kExitOk;
    }
    if (*serve_cmd) return serve(port, host, out);
  } catch (const ProgramRejected&) {
    return kExitProgramError;
  } catch (const EngineError& e) {
    report(e, file, err);
    return kExitProgramError;
  } catch (const InversionError& e) {
    err << file << ": " << e.what() << '\n';
    return kExitProgramError;
  } catch (const UsageError& e) {
    err << "rjanus: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::system_error& e) {
    err << "rjanus: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rjanus
