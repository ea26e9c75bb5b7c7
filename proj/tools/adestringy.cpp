#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ade/shell.hpp"

namespace {

const std::map<std::string, ade::Method> kMethods{
    {"strata", ade::Method::strata}, {"closed", ade::Method::closed}, {"both", ade::Method::both}};
const std::map<std::string, ade::Format> kFormats{
    {"json", ade::Format::json}, {"text", ade::Format::text}, {"latex", ade::Format::latex},
    {"csv", ade::Format::csv}};

// Case-insensitive name lookup that rewrites the value to the enum's integer.
template <class E>
CLI::Validator one_of(const std::map<std::string, E>& names)
{
  std::string keys;
  for (const auto& [k, v] : names)
    keys += (keys.empty() ? "" : ",") + k;
  return CLI::Validator(
      [&names, keys](std::string& value) -> std::string {
        std::string low = value;
        std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });
        const auto it = names.find(low);
        if (it == names.end())
          return value + " not in {" + keys + "}";
        value = std::to_string(static_cast<int>(it->second));
        return {};
      },
      "{" + keys + "}");
}

struct Options {
  ade::CommandRequest req;
  std::vector<std::string> families;
  std::string n, m;
  std::string resolution_file, smooth_part, sing_file, out;
  ade::Format format = ade::Format::text;
  long dim = 0;
};

void add_common(CLI::App* sub, Options& o, bool ranges)
{
  sub->add_option("--family", o.families, "A, D, E6, E7 or E8")
      ->check(CLI::IsMember({"A", "D", "E6", "E7", "E8"}, CLI::ignore_case));
  sub->add_option("--n", o.n, ranges ? "index or range lo..hi" : "index");
  sub->add_option("--m", o.m, ranges ? "dimension + 1, or range lo..hi" : "dimension + 1");
  sub->add_option("--method", o.req.method, "strata, closed or both")
      ->transform(one_of(kMethods));
}

void add_format(CLI::App* sub, Options& o)
{
  sub->add_option("--format", o.format, "json, text, latex or csv")
      ->transform(one_of(kFormats));
  sub->add_option("--out", o.out, "write the report to PATH");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact contributions of A-D-E singularities to the stringy E-function"};
  app.require_subcommand(1);
  Options o;

  const std::map<ade::Command, CLI::App*> subs{
      {ade::Command::contribution, app.add_subcommand("contribution", "local contribution of one singularity")},
      {ade::Command::euler, app.add_subcommand("euler", "stringy Euler number of the contribution")},
      {ade::Command::classify, app.add_subcommand("classify", "is the contribution a polynomial")},
      {ade::Command::assemble, app.add_subcommand("assemble", "global E_st from a smooth part and singularities")},
      {ade::Command::table, app.add_subcommand("table", "contributions over a grid of singularities")},
      {ade::Command::verify, app.add_subcommand("verify", "check both routes and all verdicts over a grid")},
  };
  for (const auto& [cmd, sub] : subs) {
    const bool grid = cmd == ade::Command::table || cmd == ade::Command::verify;
    if (cmd != ade::Command::assemble)
      add_common(sub, o, grid);
    add_format(sub, o);
  }
  for (auto cmd : {ade::Command::contribution, ade::Command::euler})
    subs.at(cmd)->add_option("--resolution-file", o.resolution_file, "stratified resolution JSON")
        ->check(CLI::ExistingFile);
  auto* assemble = subs.at(ade::Command::assemble);
  assemble->add_option("--method", o.req.method, "strata, closed or both")
      ->transform(one_of(kMethods));
  assemble->add_option("--smooth-part", o.smooth_part, "H of the smooth locus (JSON array or text)")
      ->required()
      ->check(CLI::ExistingFile);
  assemble->add_option("--sing", o.req.sing_tokens, "FAMILY:n:m=M, repeatable");
  assemble->add_option("--sing-file", o.sing_file, "JSON array of singularities")->check(CLI::ExistingFile);
  assemble->add_flag("--projective", o.req.projective, "run the duality and symmetry checks");
  auto* dim = assemble->add_option("--dim", o.dim, "dimension of the variety");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ade::kExitUsage;
  }

  for (const auto& [cmd, sub] : subs) {
    if (!sub->parsed())
      continue;
    o.req.command = cmd;
    if (sub->count("--format"))
      o.req.format = o.format;
  }
  for (auto f : o.families) {
    std::transform(f.begin(), f.end(), f.begin(), [](unsigned char c) { return std::toupper(c); });
    o.req.families.push_back(ade::parse_family(f).value());
  }
  if (!o.n.empty())
    o.req.n = o.n;
  if (!o.m.empty())
    o.req.m = o.m;
  if (!o.resolution_file.empty())
    o.req.resolution_file = o.resolution_file;
  if (!o.smooth_part.empty())
    o.req.smooth_part = o.smooth_part;
  if (!o.sing_file.empty())
    o.req.sing_file = o.sing_file;
  if (dim->count())
    o.req.dim = o.dim;

  ade::CommandResult r;
  try {
    r = ade::run(o.req);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return ade::kExitCheckFailed;
  }

  if (!o.out.empty() && !r.out.empty()) {
    std::ofstream f(o.out);
    if (!(f << r.out)) {
      std::cerr << "cannot write " << o.out << "\n";
      return ade::kExitUsage;
    }
  } else {
    std::cout << r.out;
  }
  std::cerr << r.err;
  return r.exit_code;
}
