// Command-line front end. Exit codes: 0 holds / printed, 1 does not hold,
// 2 syntax, usage or role error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "sesstype/sesstype.hpp"

using namespace sesstype;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

// Inline text, or the contents of the file after a leading '@'.
std::string argument_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1), std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProcessTerm process_arg(const std::string& arg) { return parse_process(argument_text(arg)); }
SessionType type_arg(const std::string& arg) { return parse_type(argument_text(arg)); }

int verdict(bool holds) {
  std::cout << (holds ? "true" : "false") << '\n';
  return holds ? kHolds : kFails;
}

void collect_names(const SessionType& t, std::set<ActionName>& out) {
  switch (t.kind()) {
    case TypeKind::Prefix:
      out.insert(t.action().name);
      collect_names(t.continuation(), out);
      break;
    case TypeKind::Intersection:
    case TypeKind::Union:
      collect_names(t.left(), out);
      collect_names(t.right(), out);
      break;
    default: break;
  }
}

// A small process in ⟦t⟧ but not in ⟦s⟧, if one exists at low height.
std::optional<ProcessTerm> membership_witness(const SessionType& t, const SessionType& s) {
  std::set<ActionName> alphabet;
  collect_names(t, alphabet);
  collect_names(s, alphabet);
  if (alphabet.empty()) alphabet.insert(ActionName("a"));
  if (alphabet.size() > 4) return std::nullopt;
  const NormalForm nt = normalize(t), ns = normalize(s);
  LtsCache cache;
  std::optional<ProcessTerm> found;
  visit_processes(alphabet, alphabet.size() <= 2 ? 3 : 2, [&](const ProcessTerm& p) {
    if (member(cache, p, nt) && !member(cache, p, ns)) found = p;
    return !found;
  });
  return found;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Session types with intersection and union types"};
  app.require_subcommand(1);
  int code = kHolds;

  std::string a, b;
  std::size_t depth = 3;
  std::string role;

  auto binary_type = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("T", a, "session type")->required();
    cmd->add_option("S", b, "session type")->required();
    return cmd;
  };
  auto unary = [&](const char* name, const char* help, const char* what) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option(what, a, what)->required();
    return cmd;
  };

  auto* subtype_cmd = binary_type("subtype", "decide T <= S");
  subtype_cmd->callback([&] {
    const SessionType t = type_arg(a), s = type_arg(b);
    code = verdict(subtype(t, s));
    if (code == kFails) {
      if (auto w = membership_witness(t, s)) std::cout << "witness=" << render_process(*w) << '\n';
    }
  });
  binary_type("equiv", "decide T == S")->callback([&] {
    code = verdict(equivalent(type_arg(a), type_arg(b)));
  });
  binary_type("meet", "normal form of T & S")->callback([&] {
    std::cout << render_normal_form(meet(type_arg(a), type_arg(b))) << '\n';
  });
  binary_type("join", "normal form of T | S")->callback([&] {
    std::cout << render_normal_form(join(type_arg(a), type_arg(b))) << '\n';
  });
  unary("normalize", "print the normal form of T", "T")->callback([&] {
    std::cout << render_normal_form(normalize(type_arg(a))) << '\n';
  });
  unary("dual", "print the dual of T", "T")->callback([&] {
    std::cout << render_type(dual(type_arg(a))) << '\n';
  });

  auto* member_cmd = app.add_subcommand("member", "decide P in [[T]]");
  member_cmd->add_option("P", a, "process")->required();
  member_cmd->add_option("T", b, "session type")->required();
  member_cmd->callback([&] { code = verdict(member_type(process_arg(a), type_arg(b))); });

  auto* check_cmd = app.add_subcommand("check", "decide T |- P");
  check_cmd->add_option("T", a, "session type")->required();
  check_cmd->add_option("P", b, "process")->required();
  check_cmd->callback([&] { code = verdict(check(type_arg(a), process_arg(b))); });

  auto* orth_cmd = app.add_subcommand("orthogonal", "decide P and Q are orthogonal");
  orth_cmd->add_option("P", a, "process")->required();
  orth_cmd->add_option("Q", b, "process")->required();
  orth_cmd->callback([&] { code = verdict(orthogonal(process_arg(a), process_arg(b))); });

  auto* refines_cmd = app.add_subcommand("refines", "search for a test separating P from Q");
  refines_cmd->add_option("P", a, "process")->required();
  refines_cmd->add_option("Q", b, "process")->required();
  refines_cmd->add_option("--depth", depth, "height bound on tests")->capture_default_str();
  refines_cmd->callback([&] {
    RefinementVerdict v = refines_bounded(process_arg(a), process_arg(b), depth);
    if (v.holds_up_to_bound) {
      std::cout << "HOLDS-UP-TO-BOUND depth=" << depth << '\n';
    } else {
      std::cout << "FAILS witness=" << render_process(*v.counterexample) << '\n';
      code = kFails;
    }
  });

  auto* project_cmd = app.add_subcommand("project", "project global type G onto a role");
  project_cmd->add_option("G", a, "global type")->required();
  project_cmd->add_option("--role", role, "role name")->required();
  project_cmd->callback([&] {
    if (!RoleName::is_valid(role)) throw CLI::ValidationError("invalid role name: " + role);
    std::cout << render_type(project(parse_global(argument_text(a)), RoleName(role))) << '\n';
  });

  unary("step", "print the one-step transitions of P", "P")->callback([&] {
    const ProcessTerm p = process_arg(a);
    const TransitionSet t = step(p);
    for (const ProcessTerm& q : t.internal) std::cout << "--> " << render_process(q) << '\n';
    for (const auto& [mu, q] : t.labeled) {
      std::cout << "--" << to_string(mu) << "--> " << render_process(q) << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kHolds : kInputError;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kInputError;
  } catch (const RoleError& e) {
    std::cerr << "role error: " << e.what() << '\n';
    return kInputError;
  } catch (const ProjectionError& e) {
    std::cerr << "projection error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return code;
}
