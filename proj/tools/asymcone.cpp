// Command-line surface over the arrangement pipeline. Exit codes are a
// stable contract: 0 success, 2 input error, 3 resource cap, 4 oracle or
// consistency mismatch.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "asymcone/errors.hpp"
#include "asymcone/report.hpp"

namespace {

using namespace asymcone;

Arrangement load_input(const std::string& token, std::uint64_t seed) {
  if (token.rfind("builtin:", 0) == 0) {
    std::string name = token.substr(8);
    // random:d:n takes its seed from --seed unless given explicitly.
    if (name.rfind("random:", 0) == 0 &&
        std::count(name.begin(), name.end(), ':') == 2)
      name += ":" + std::to_string(seed);
    return builtin_arrangement(name);
  }
  std::ifstream in(token, std::ios::binary);
  if (!in)
    throw ParseError("cannot open input file '" + token + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

std::vector<std::int64_t> parse_primes(const std::string& list) {
  std::vector<std::int64_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ParseError("bad prime list entry '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError("empty prime list");
  return out;
}

void emit(const report::Json& doc, const std::string& format,
          std::string (*text_renderer)(const report::Json&)) {
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text_renderer(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"characteristic cycles of hyperplane arrangements"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  std::size_t flat_cap = kDefaultFlatCap;
  app.add_option("--flat-cap", flat_cap, "abort above this many flats");
  std::string primes_arg = "5,7,11";
  app.add_option("--primes", primes_arg, "comma-separated verification primes");
  std::string budget_arg = "10000000";
  app.add_option("--budget", budget_arg, "point-enumeration budget");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for builtin:random:d:n inputs");

  std::string input;
  auto add_cmd = [&](const char* name, const char* desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->add_option("input", input, "file path or builtin:NAME[:params]")
        ->required();
    return c;
  };
  CLI::App* cmd_lattice =
      add_cmd("lattice", "flats, containments, Mobius numbers");
  CLI::App* cmd_charpoly =
      add_cmd("charpoly", "characteristic polynomial only");
  CLI::App* cmd_euler =
      add_cmd("euler", "complement, decone and fiber Euler characteristics");
  CLI::App* cmd_cc = add_cmd("cc", "conormal multiplicities and rank");
  CLI::App* cmd_rank = add_cmd("rank", "rank of the local system");
  CLI::App* cmd_verify =
      add_cmd("verify", "cross-check against the brute-force oracles");
  int fault_c_offset = 0;
  cmd_verify->add_option("--fault-c-offset", fault_c_offset)->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    Arrangement a = load_input(input, seed);

    if (cmd_verify->parsed()) {
      if (budget_arg.empty() ||
          budget_arg.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad --budget value '" + budget_arg + "'");
      report::VerifyOptions opt;
      opt.primes = parse_primes(primes_arg);
      opt.budget = Int(budget_arg);
      opt.flat_cap = flat_cap;
      opt.fault_c_offset = fault_c_offset;
      report::VerifyOutcome outcome = report::run_verify(a, opt);
      emit(outcome.doc, format, report::verify_text);
      return outcome.ok ? 0 : 4;
    }

    IntersectionPoset p = build_poset(a, flat_cap);
    if (cmd_lattice->parsed())
      emit(report::lattice_json(p), format, report::lattice_text);
    else if (cmd_charpoly->parsed())
      emit(report::charpoly_json(p), format, report::charpoly_text);
    else if (cmd_euler->parsed())
      emit(report::euler_json(p), format, report::euler_text);
    else if (cmd_cc->parsed())
      emit(report::cc_json(p), format, report::cc_text);
    else if (cmd_rank->parsed())
      emit(report::rank_json(p), format, report::rank_text);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ZeroForm& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EmptyArrangement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonpositiveMultiplicity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotAFlat& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FlatCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
