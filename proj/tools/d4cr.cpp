// d4cr: run the triality scenarios and dump the root data.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "d4cr/rootsys.hpp"
#include "d4cr/scenarios.hpp"
#include "json.hpp"

namespace {

constexpr int kUsage = 2;

std::string render_list(d4cr::Format fmt) {
  const auto& reg = d4cr::scenario_registry();
  if (fmt == d4cr::Format::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& sc : reg) arr.push_back({{"id", sc.id}, {"claim", sc.claim}});
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (const auto& sc : reg) out += sc.id + "\t" + sc.claim + "\n";
  return out;
}

std::string render_roots(bool json) {
  const d4cr::Coweight lam = d4cr::highest_coroot();
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const d4cr::Root& z : d4cr::all_roots()) {
      const auto& c = z.coords();
      arr.push_back({{"label", z.label()},
                     {"alpha", c[0]},
                     {"beta", c[1]},
                     {"gamma", c[2]},
                     {"delta", c[3]},
                     {"height", z.height()},
                     {"pairing_lambda", d4cr::pairing(z, lam)}});
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "label\talpha\tbeta\tgamma\tdelta\theight\tpairing_lambda\n";
  for (const d4cr::Root& z : d4cr::all_roots()) {
    const auto& c = z.coords();
    os << z.label() << '\t' << c[0] << '\t' << c[1] << '\t' << c[2] << '\t' << c[3] << '\t'
       << z.height() << '\t' << d4cr::pairing(z, lam) << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for a triality example in characteristic 2"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  auto* list = app.add_subcommand("list", "List scenario ids and claims");
  list->fallthrough();

  std::vector<std::string> ids;
  bool all = false;
  auto* verify = app.add_subcommand("verify", "Run scenarios");
  verify->fallthrough();
  verify->add_option("ids", ids, "Scenario ids, e.g. S1 S5");
  verify->add_flag("--all", all, "Run every scenario");

  std::string roots_format;
  auto* dump = app.add_subcommand("dump-roots", "Print the 24 roots with their pairing against lambda");
  dump->add_option("--format", roots_format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  const d4cr::Format fmt = format == "json" ? d4cr::Format::Json : d4cr::Format::Text;
  std::string output;
  int rc = 0;

  try {
    if (*list) {
      output = render_list(fmt);
    } else if (*dump) {
      bool json = roots_format.empty() ? fmt == d4cr::Format::Json : roots_format == "json";
      output = render_roots(json);
    } else {
      if (all == !ids.empty()) {
        std::cerr << "verify: give scenario ids or --all\n";
        return kUsage;
      }
      std::vector<d4cr::Report> reports;
      if (all) {
        reports = d4cr::run_all();
      } else {
        for (const std::string& id : ids) reports.push_back(d4cr::run_scenario(id));
      }
      for (const auto& r : reports) {
        if (r.status == d4cr::Status::Error) rc = kUsage;
        else if (r.status == d4cr::Status::Fail && rc == 0) rc = 1;
      }
      output = d4cr::emit(reports, fmt);
    }
  } catch (const d4cr::UnknownScenario& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }

  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << out_path << "\n";
      return kUsage;
    }
    f << output;
  }
  return rc;
}
