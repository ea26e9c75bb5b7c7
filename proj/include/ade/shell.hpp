#ifndef ADE_SHELL_HPP
#define ADE_SHELL_HPP

// Command layer behind the adestringy CLI. Each command takes a parsed
// CommandRequest and returns the rendered output plus an exit status:
//   0  every requested check passed
//   1  a check failed (route disagreement, failed verdict)
//   2  usage or input error

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "catalog.hpp"
#include "closedform.hpp"
#include "exactalg.hpp"
#include "io.hpp"
#include "stringy.hpp"

namespace ade {

enum class Command { contribution, euler, classify, assemble, table, verify };
enum class Method { strata, closed, both };
enum class Format { json, text, latex, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Range {
  long lo = 0;
  long hi = -1;

  bool empty() const { return hi < lo; }
};

// "7" or "1..9"
inline Range parse_range(const std::string& s)
{
  const auto parse_long = [&](const std::string& part) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      throw UsageError("bad integer or range '" + s + "'");
    }
    if (used != part.size())
      throw UsageError("bad integer or range '" + s + "'");
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(s);
    return {v, v};
  }
  return {parse_long(s.substr(0, dots)), parse_long(s.substr(dots + 2))};
}

// "FAMILY:n:m=M", e.g. "D:4:m=4"; E-families may omit n ("E6:m=5").
inline SingularitySpec parse_sing_token(const std::string& token)
{
  std::vector<std::string> parts;
  std::stringstream ss(token);
  for (std::string p; std::getline(ss, p, ':');)
    parts.push_back(p);
  const auto bad = [&](const std::string& why) {
    return UsageError("bad singularity token '" + token + "': " + why);
  };
  if (parts.size() < 2 || parts.size() > 3)
    throw bad("expected FAMILY:n:m=M");
  const auto family = parse_family(parts[0]);
  if (!family)
    throw bad("unknown family '" + parts[0] + "'");
  const std::string& mpart = parts.back();
  if (mpart.rfind("m=", 0) != 0)
    throw bad("last field must be m=M");
  const Range m = parse_range(mpart.substr(2));
  if (m.lo != m.hi)
    throw bad("m must be a single value");
  long n = SingularitySpec::forced_index(*family);
  if (parts.size() == 3) {
    const Range r = parse_range(parts[1]);
    if (r.lo != r.hi)
      throw bad("n must be a single value");
    n = r.lo;
  } else if (*family == Family::A || *family == Family::D) {
    throw bad("A and D need an index");
  }
  try {
    return SingularitySpec::make(*family, n, m.lo);
  } catch (const std::invalid_argument& e) {
    throw bad(e.what());
  }
}

struct CommandRequest {
  Command command = Command::contribution;
  std::vector<Family> families;
  std::optional<std::string> n;
  std::optional<std::string> m;
  Method method = Method::both;
  std::optional<Format> format;
  std::optional<std::string> resolution_file;
  std::optional<std::string> smooth_part;
  std::vector<std::string> sing_tokens;
  std::optional<std::string> sing_file;
  bool projective = false;
  std::optional<long> dim;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

namespace detail {

struct RouteOutcome {
  std::optional<RationalFunction> strata;
  std::optional<RationalFunction> closed;
  std::optional<StratifiedResolution> resolution;

  const RationalFunction& value() const { return strata ? *strata : *closed; }
  bool agree() const { return !(strata && closed) || *strata == *closed; }
};

inline RouteOutcome evaluate(const SingularitySpec& spec, Method method)
{
  RouteOutcome r;
  if (method != Method::closed) {
    r.resolution = build_resolution(spec);
    const auto diags = validate_resolution(*r.resolution, kCatalogValidation);
    if (!diags.empty())
      throw std::logic_error("catalog produced an invalid resolution for " + spec.name() + ": " +
                             diags.front().path + " " + diags.front().message);
    r.strata = contribution_from_strata(*r.resolution);
  }
  if (method != Method::strata)
    r.closed = contribution_closed(spec);
  return r;
}

inline SingularitySpec single_spec(const CommandRequest& req)
{
  if (req.families.size() != 1)
    throw UsageError("exactly one --family is required");
  const Family f = req.families.front();
  long n = SingularitySpec::forced_index(f);
  if (req.n) {
    const Range r = parse_range(*req.n);
    if (r.lo != r.hi)
      throw UsageError("--n must be a single value for this command");
    n = r.lo;
  } else if (f == Family::A || f == Family::D) {
    throw UsageError("--n is required for family " + std::string(family_name(f)));
  }
  if (!req.m)
    throw UsageError("--m is required");
  const Range m = parse_range(*req.m);
  if (m.lo != m.hi)
    throw UsageError("--m must be a single value for this command");
  try {
    return SingularitySpec::make(f, n, m.lo);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline std::string render_report_text(const StringyReport& r)
{
  std::ostringstream out;
  out << "source: " << r.source << "\n";
  out << "contribution: " << render_text(r.contribution) << "\n";
  out << "euler: " << to_string(r.euler) << "\n";
  out << "polynomial: " << (r.is_polynomial ? "yes" : "no") << "\n";
  if (r.hodge_numbers) {
    out << "hodge_numbers: [";
    for (std::size_t i = 0; i < r.hodge_numbers->size(); ++i)
      out << (i ? ", " : "") << (*r.hodge_numbers)[i].str();
    out << "]\n";
  }
  out << "checks:";
  for (const auto& [name, c] : r.checks)
    out << " " << name << "=" << check_name(c);
  out << "\n";
  return out.str();
}

inline std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s)
    q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string render_report(const StringyReport& r, Format f)
{
  switch (f) {
  case Format::json:
    return to_json(r).dump(2) + "\n";
  case Format::text:
    return render_report_text(r);
  case Format::latex: {
    std::string s = "% " + r.source + "\n";
    s += "E = " + render_latex(r.contribution) + "\n";
    s += "e_{st} = " + render_latex(r.euler) + "\n";
    return s;
  }
  case Format::csv: {
    std::string s = "source,contribution,euler,is_polynomial";
    for (const auto& [name, c] : r.checks)
      s += "," + name;
    s += "\n" + csv_field(r.source) + "," + csv_field(render_text(r.contribution)) + "," +
         to_string(r.euler) + "," + (r.is_polynomial ? "true" : "false");
    for (const auto& [name, c] : r.checks)
      s += std::string(",") + check_name(c);
    return s + "\n";
  }
  }
  return {};
}

inline CommandResult route_mismatch(const SingularitySpec& spec, const RouteOutcome& r)
{
  CommandResult res;
  res.exit_code = kExitCheckFailed;
  res.err = "routes disagree for " + spec.name() + "\n  strata: " + to_json(*r.strata).dump() +
            "\n  closed: " + to_json(*r.closed).dump() + "\n";
  return res;
}

// Report for one catalog singularity, with every check applicable to it.
inline StringyReport spec_report(const SingularitySpec& spec, const RouteOutcome& r)
{
  StringyReport rep = make_report(spec.name(), r.value());
  rep.checks["routes_agree"] = (r.strata && r.closed) ? check_of(r.agree()) : Check::not_applicable;
  rep.checks["euler_consistency"] =
      r.resolution ? check_of(stringy_euler_direct(*r.resolution) == rep.euler) : Check::not_applicable;
  rep.checks["polynomiality_classifier"] = spec.m() >= 4
                                               ? check_of(classify_polynomiality(spec) == rep.is_polynomial)
                                               : Check::not_applicable;
  rep.checks["normalization"] = check_of(r.value().num().eval(0) == r.value().den().eval(0));
  return rep;
}

inline CommandResult finish(const StringyReport& rep, Format f)
{
  CommandResult res;
  res.out = render_report(rep, f);
  res.exit_code = rep.all_pass() ? kExitOk : kExitCheckFailed;
  return res;
}

} // namespace detail

inline CommandResult run_contribution(const CommandRequest& req)
{
  const Format fmt = req.format.value_or(Format::text);
  if (req.resolution_file) {
    if (req.method == Method::closed)
      throw UsageError("--method closed needs a catalog singularity, not a resolution file");
    const StratifiedResolution res = ingest_resolution(*req.resolution_file);
    StringyReport rep = make_report(*req.resolution_file, contribution_from_strata(res));
    rep.checks["euler_consistency"] = check_of(stringy_euler_direct(res) == rep.euler);
    return detail::finish(rep, fmt);
  }
  const SingularitySpec spec = detail::single_spec(req);
  const auto r = detail::evaluate(spec, req.method);
  if (!r.agree())
    return detail::route_mismatch(spec, r);
  return detail::finish(detail::spec_report(spec, r), fmt);
}

inline CommandResult run_euler(const CommandRequest& req)
{
  const Format fmt = req.format.value_or(Format::text);
  std::optional<StratifiedResolution> res;
  std::optional<RationalFunction> contribution;
  std::string source;
  if (req.resolution_file) {
    res = ingest_resolution(*req.resolution_file);
    source = *req.resolution_file;
  } else {
    const SingularitySpec spec = detail::single_spec(req);
    source = spec.name();
    const auto r = detail::evaluate(spec, req.method);
    if (!r.agree())
      return detail::route_mismatch(spec, r);
    res = r.resolution;
    contribution = r.value();
  }
  if (!contribution)
    contribution = contribution_from_strata(*res);
  const Rational limit = rf_limit_at_one(*contribution);
  std::optional<Rational> direct;
  if (res)
    direct = stringy_euler_direct(*res);
  const bool ok = !direct || *direct == limit;

  CommandResult out;
  out.exit_code = ok ? kExitOk : kExitCheckFailed;
  switch (fmt) {
  case Format::json: {
    Json j{{"source", source}, {"euler", to_string(limit)}};
    j["euler_direct"] = direct ? Json(to_string(*direct)) : Json(nullptr);
    j["consistent"] = direct ? Json(check_name(check_of(ok))) : Json("n/a");
    out.out = j.dump(2) + "\n";
    break;
  }
  case Format::latex:
    out.out = "e_{st} = " + render_latex(limit) + "\n";
    break;
  case Format::csv:
    out.out = "source,euler,euler_direct\n" + detail::csv_field(source) + "," + to_string(limit) + "," +
              (direct ? to_string(*direct) : std::string()) + "\n";
    break;
  case Format::text:
    out.out = "source: " + source + "\neuler: " + to_string(limit) + "\n";
    if (direct)
      out.out += "euler_direct: " + to_string(*direct) + " (" + check_name(check_of(ok)) + ")\n";
    break;
  }
  return out;
}

inline CommandResult run_classify(const CommandRequest& req)
{
  const Format fmt = req.format.value_or(Format::text);
  const SingularitySpec spec = detail::single_spec(req);
  const bool claimed = classify_polynomiality(spec);
  const bool actual = rf_as_polynomial(contribution_closed(spec)).has_value();
  const bool consistent = spec.m() < 4 || claimed == actual;
  CommandResult out;
  out.exit_code = consistent ? kExitOk : kExitCheckFailed;
  const std::string verdict = claimed ? "polynomial" : "not polynomial";
  switch (fmt) {
  case Format::json:
    out.out = Json{{"source", spec.name()},
                   {"polynomial", claimed},
                   {"consistent", spec.m() < 4 ? "n/a" : check_name(check_of(consistent))}}
                  .dump(2) +
              "\n";
    break;
  case Format::csv:
    out.out = "source,polynomial,consistent\n" + detail::csv_field(spec.name()) + "," +
              (claimed ? "true" : "false") + "," + (spec.m() < 4 ? "n/a" : check_name(check_of(consistent))) + "\n";
    break;
  case Format::latex:
  case Format::text:
    out.out = spec.name() + ": " + verdict + "\n";
    break;
  }
  return out;
}

inline std::vector<SingularitySpec> collect_singularities(const CommandRequest& req)
{
  std::vector<SingularitySpec> specs;
  for (const auto& t : req.sing_tokens)
    specs.push_back(parse_sing_token(t));
  if (req.sing_file) {
    const Json j = parse_json_text(read_file(*req.sing_file), *req.sing_file);
    if (!j.is_array())
      throw InputError(*req.sing_file, "expected a JSON array of singularities");
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string at = *req.sing_file + "#/" + std::to_string(i);
      if (j[i].is_string()) {
        specs.push_back(parse_sing_token(j[i].get<std::string>()));
        continue;
      }
      if (!j[i].is_object() || !j[i].contains("family") || !j[i]["family"].is_string() ||
          !j[i].contains("m") || !j[i]["m"].is_number_integer())
        throw InputError(at, "expected a token string or {\"family\", \"n\", \"m\"}");
      const auto family = parse_family(j[i]["family"].get<std::string>());
      if (!family)
        throw InputError(at + "/family", "unknown family");
      long n = SingularitySpec::forced_index(*family);
      if (j[i].contains("n")) {
        if (!j[i]["n"].is_number_integer())
          throw InputError(at + "/n", "expected an integer");
        n = j[i]["n"].get<long>();
      }
      try {
        specs.push_back(SingularitySpec::make(*family, n, j[i]["m"].get<long>()));
      } catch (const std::invalid_argument& e) {
        throw InputError(at, e.what());
      }
    }
  }
  return specs;
}

inline CommandResult run_assemble(const CommandRequest& req)
{
  const Format fmt = req.format.value_or(Format::text);
  if (!req.smooth_part)
    throw UsageError("--smooth-part is required");
  if (req.projective && !req.dim)
    throw UsageError("--projective needs --dim");
  const Polynomial smooth = parse_polynomial(read_file(*req.smooth_part), *req.smooth_part);
  if (req.dim) {
    if (*req.dim < 0)
      throw UsageError("--dim must be >= 0");
    if (smooth.degree() && static_cast<long>(*smooth.degree()) > *req.dim)
      throw InputError(*req.smooth_part, "smooth part has degree " + std::to_string(*smooth.degree()) +
                                             " > dimension " + std::to_string(*req.dim));
  }

  std::vector<RationalFunction> contributions;
  std::string source = "smooth=" + render_text(smooth);
  for (const auto& spec : collect_singularities(req)) {
    if (req.dim && spec.dimension() != *req.dim)
      throw UsageError("singularity " + spec.name() + " has dimension " + std::to_string(spec.dimension()) +
                       ", expected " + std::to_string(*req.dim));
    const auto r = detail::evaluate(spec, req.method);
    if (!r.agree())
      return detail::route_mismatch(spec, r);
    contributions.push_back(r.value());
    source += "; " + spec.name();
  }

  const RationalFunction e = assemble_global(smooth, contributions);
  std::optional<std::size_t> dim;
  if (req.dim) {
    dim = static_cast<std::size_t>(*req.dim);
    if (const auto p = rf_as_polynomial(e); p && p->degree() && *p->degree() > *dim)
      throw InputError("E_st", "degree " + std::to_string(*p->degree()) + " exceeds --dim " +
                                   std::to_string(*dim));
  }
  return detail::finish(make_report(source, e, dim, req.projective), fmt);
}

namespace detail {

struct TableRow {
  SingularitySpec spec;
  std::optional<RationalFunction> strata;
  std::optional<RationalFunction> closed;
  std::optional<Rational> euler;
  std::optional<Rational> euler_direct;
  bool is_polynomial = false;
  bool classifier_ok = false;
  bool normalized = false;
  std::string error;

  bool routes_ok() const { return error.empty() && (!(strata && closed) || *strata == *closed); }
  bool euler_ok() const { return !euler_direct || (euler && *euler == *euler_direct); }
  bool pass() const { return routes_ok() && euler_ok() && classifier_ok && normalized; }
};

inline std::vector<SingularitySpec> grid_specs(const CommandRequest& req)
{
  if (req.families.empty())
    throw UsageError("at least one --family is required");
  if (!req.m)
    throw UsageError("--m range is required");
  const Range m = parse_range(*req.m);
  if (m.empty())
    throw UsageError("empty m range");
  std::vector<Family> families = req.families;
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());

  std::vector<SingularitySpec> specs;
  for (Family f : families) {
    Range n{SingularitySpec::forced_index(f), SingularitySpec::forced_index(f)};
    if (f == Family::A || f == Family::D) {
      if (!req.n)
        throw UsageError("--n range is required for family " + std::string(family_name(f)));
      n = parse_range(*req.n);
      if (n.empty())
        throw UsageError("empty n range");
      // a range spanning several families keeps only the indices valid for each
      const long least = f == Family::A ? 1 : 4;
      if (n.hi >= least)
        n.lo = std::max(n.lo, least);
    }
    for (long i = n.lo; i <= n.hi; ++i)
      for (long mm = m.lo; mm <= m.hi; ++mm) {
        try {
          specs.push_back(SingularitySpec::make(f, i, mm));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
  }
  return specs;
}

inline TableRow evaluate_row(const SingularitySpec& spec, Method method)
{
  TableRow row{spec};
  try {
    const auto r = evaluate(spec, method);
    row.strata = r.strata;
    row.closed = r.closed;
    row.euler = rf_limit_at_one(r.value());
    if (r.resolution)
      row.euler_direct = stringy_euler_direct(*r.resolution);
    row.is_polynomial = rf_as_polynomial(r.value()).has_value();
    row.classifier_ok = spec.m() < 4 || classify_polynomiality(spec) == row.is_polynomial;
    row.normalized = r.value().num().eval(0) == r.value().den().eval(0);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

// Cells are evaluated concurrently; rows come back in input order.
inline std::vector<TableRow> evaluate_grid(const std::vector<SingularitySpec>& specs, Method method)
{
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::optional<TableRow>> slots(specs.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers && w < specs.size(); ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < specs.size(); i += workers)
        slots[i] = evaluate_row(specs[i], method);
    }));
  for (auto& j : jobs)
    j.get();
  std::vector<TableRow> rows;
  rows.reserve(slots.size());
  for (auto& s : slots)
    rows.push_back(std::move(*s));
  return rows;
}

inline std::string value_text(const TableRow& row)
{
  if (!row.error.empty())
    return "error: " + row.error;
  return render_text(row.strata ? *row.strata : *row.closed);
}

} // namespace detail

inline CommandResult run_table(const CommandRequest& req)
{
  const Format fmt = req.format.value_or(Format::csv);
  const auto rows = detail::evaluate_grid(detail::grid_specs(req), req.method);
  CommandResult out;
  const auto routes = [&](const detail::TableRow& r) -> std::string {
    if (!r.error.empty())
      return "fail";
    if (!(r.strata && r.closed))
      return "n/a";
    return r.routes_ok() ? "pass" : "fail";
  };
  std::ostringstream s;
  switch (fmt) {
  case Format::csv:
    s << "family,n,m,contribution,euler,is_polynomial,routes\n";
    for (const auto& r : rows)
      s << family_name(r.spec.family()) << "," << r.spec.n() << "," << r.spec.m() << ","
        << detail::csv_field(detail::value_text(r)) << "," << (r.euler ? to_string(*r.euler) : "") << ","
        << (r.is_polynomial ? "true" : "false") << "," << routes(r) << "\n";
    break;
  case Format::text:
    for (const auto& r : rows)
      s << r.spec.name() << "  " << detail::value_text(r) << "  euler=" << (r.euler ? to_string(*r.euler) : "?")
        << "  " << (r.is_polynomial ? "polynomial" : "rational") << "  routes=" << routes(r) << "\n";
    break;
  case Format::latex:
    s << "\\begin{tabular}{lll}\n";
    for (const auto& r : rows)
      s << "$" << family_name(r.spec.family()) << "_{" << r.spec.n() << "}$ & $m=" << r.spec.m() << "$ & $"
        << (r.error.empty() ? render_latex(r.strata ? *r.strata : *r.closed) : std::string("?")) << "$ \\\\\n";
    s << "\\end{tabular}\n";
    break;
  case Format::json: {
    Json a = Json::array();
    for (const auto& r : rows) {
      Json row{{"family", std::string(family_name(r.spec.family()))}, {"n", r.spec.n()}, {"m", r.spec.m()}};
      row["contribution"] = r.error.empty() ? to_json(r.strata ? *r.strata : *r.closed) : Json(nullptr);
      row["euler"] = r.euler ? Json(to_string(*r.euler)) : Json(nullptr);
      row["is_polynomial"] = r.is_polynomial;
      row["routes"] = routes(r);
      if (!r.error.empty())
        row["error"] = r.error;
      a.push_back(row);
    }
    s << a.dump(2) << "\n";
    break;
  }
  }
  out.out = s.str();
  for (const auto& r : rows)
    if (!r.routes_ok()) {
      out.exit_code = kExitCheckFailed;
      out.err += "route mismatch: " + r.spec.name() + (r.error.empty() ? "" : " (" + r.error + ")") + "\n";
    }
  return out;
}

// Default grid: A 1..20, D 4..20, E6, E7, E8 at m = 3..10.
inline CommandResult run_verify(const CommandRequest& req)
{
  std::vector<SingularitySpec> specs;
  if (req.families.empty() && !req.n && !req.m) {
    for (long m = 3; m <= 10; ++m) {
      for (long n = 1; n <= 20; ++n)
        specs.push_back(SingularitySpec::make(Family::A, n, m));
      for (long n = 4; n <= 20; ++n)
        specs.push_back(SingularitySpec::make(Family::D, n, m));
      for (Family f : {Family::E6, Family::E7, Family::E8})
        specs.push_back(SingularitySpec::make(f, m));
    }
  } else {
    specs = detail::grid_specs(req);
  }
  const auto rows = detail::evaluate_grid(specs, Method::both);
  CommandResult out;
  std::size_t failed = 0;
  std::ostringstream s;
  for (const auto& r : rows) {
    if (r.pass())
      continue;
    ++failed;
    s << "FAIL " << r.spec.name() << ":";
    if (!r.error.empty())
      s << " error=" << r.error;
    if (!r.routes_ok())
      s << " routes";
    if (!r.euler_ok())
      s << " euler";
    if (!r.classifier_ok)
      s << " classifier";
    if (!r.normalized)
      s << " normalization";
    s << "\n";
  }
  s << rows.size() - failed << "/" << rows.size() << " cells pass\n";
  out.out = s.str();
  out.exit_code = failed == 0 ? kExitOk : kExitCheckFailed;
  return out;
}

// Dispatches a request; usage and input errors become exit status 2.
inline CommandResult run(const CommandRequest& req)
{
  try {
    switch (req.command) {
    case Command::contribution:
      return run_contribution(req);
    case Command::euler:
      return run_euler(req);
    case Command::classify:
      return run_classify(req);
    case Command::assemble:
      return run_assemble(req);
    case Command::table:
      return run_table(req);
    case Command::verify:
      return run_verify(req);
    }
  } catch (const UsageError& e) {
    return {kExitUsage, {}, std::string("usage error: ") + e.what() + "\n"};
  } catch (const InputError& e) {
    return {kExitUsage, {}, std::string("input error:\n") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, {}, std::string("invalid argument: ") + e.what() + "\n"};
  }
  return {kExitUsage, {}, "unknown command\n"};
}

} // namespace ade

#endif // ADE_SHELL_HPP
