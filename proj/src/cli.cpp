#include "octfactor/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "octfactor/errors.hpp"
#include "octfactor/factoring.hpp"
#include "octfactor/text.hpp"

namespace octfactor::cli {

using nlohmann::json;

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const AlgebraMismatch*>(&e) ||
      dynamic_cast<const std::invalid_argument*>(&e)) {
    return kParseError;
  }
  if (dynamic_cast<const NotDecomposable*>(&e) || dynamic_cast<const DegreeCapExceeded*>(&e)) return kNotDecomposable;
  if (dynamic_cast<const NotARoot*>(&e) || dynamic_cast<const NoRootInClass*>(&e) ||
      dynamic_cast<const EqualRoots*>(&e) || dynamic_cast<const WitnessNotFound*>(&e)) {
    return kNoRoot;
  }
  if (dynamic_cast<const ZeroDivisor*>(&e)) return kZeroDivisor;
  if (dynamic_cast<const InternalVerificationFailure*>(&e) || dynamic_cast<const NonCentralResult*>(&e)) {
    return kInternalFailure;
  }
  return kFailure;
}

namespace {

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const AlgebraMismatch*>(&e)) return "AlgebraMismatch";
  if (dynamic_cast<const NotDecomposable*>(&e)) return "NotDecomposable";
  if (dynamic_cast<const DegreeCapExceeded*>(&e)) return "DegreeCapExceeded";
  if (dynamic_cast<const NotARoot*>(&e)) return "NotARoot";
  if (dynamic_cast<const NoRootInClass*>(&e)) return "NoRootInClass";
  if (dynamic_cast<const EqualRoots*>(&e)) return "EqualRoots";
  if (dynamic_cast<const WitnessNotFound*>(&e)) return "WitnessNotFound";
  if (dynamic_cast<const ZeroDivisor*>(&e)) return "ZeroDivisor";
  if (dynamic_cast<const InternalVerificationFailure*>(&e)) return "InternalVerificationFailure";
  if (dynamic_cast<const NonCentralResult*>(&e)) return "NonCentralResult";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "InvalidArgument";
  return "Error";
}

struct Config {
  std::string alpha = "-1";
  std::string beta = "-1";
  std::string gamma = "-1";
  int dim = 8;
  std::string output = "text";
  std::string class_order;
  std::string witness_bound;
  bool check = false;
  std::string batch;
};

struct Context {
  AlgebraRef algebra;
  FactorOptions options;
  bool check = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Rational config_rational(const std::string& name, const std::string& text) {
  try {
    return parse_rational(trim(text));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("--" + name + ": " + e.what());
  }
}

Context make_context(const Config& cfg) {
  Context ctx;
  ctx.algebra = make_algebra(AlgebraParams{config_rational("alpha", cfg.alpha), config_rational("beta", cfg.beta),
                                           config_rational("gamma", cfg.gamma), cfg.dim});
  ctx.check = cfg.check;
  ctx.options.check = cfg.check;
  if (!cfg.class_order.empty()) {
    std::vector<ClassKey> order;
    for (const auto& pair : split(cfg.class_order, ';')) {
      auto tn = split(pair, ',');
      if (tn.size() != 2) throw std::invalid_argument("--class-order expects 't,n;t,n;...'");
      order.push_back({config_rational("class-order", tn[0]), config_rational("class-order", tn[1])});
    }
    ctx.options.class_order = std::move(order);
  }
  if (!cfg.witness_bound.empty()) {
    auto parts = split(cfg.witness_bound, ',');
    if (parts.size() != 2) throw std::invalid_argument("--witness-bound expects 'max_denominator,max_numerator'");
    try {
      ctx.options.witness_bound = {std::stoi(parts[0]), std::stoi(parts[1])};
    } catch (const std::exception&) {
      throw std::invalid_argument("--witness-bound expects two integers");
    }
    if (ctx.options.witness_bound.max_denominator < 1 || ctx.options.witness_bound.max_numerator < 1) {
      throw std::invalid_argument("--witness-bound values must be positive");
    }
  }
  return ctx;
}

json params_json(const AlgebraParams& p) {
  return {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"gamma", to_string(p.gamma)}, {"dim", p.dim}};
}

json classes_json(const CompanionDecomposition& dec) {
  json arr = json::array();
  for (const auto& c : dec.classes) {
    arr.push_back({{"trace", to_string(c.trace)}, {"norm", to_string(c.norm)}, {"multiplicity", c.multiplicity}});
  }
  return arr;
}

json chain_json(const FactorChain& chain) {
  json roots = json::array();
  for (const auto& r : chain.roots) roots.push_back(format_octonion(r));
  return {{"leading", format_octonion(chain.leading)}, {"roots", roots}};
}

json report_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"ok", report.ok()}, {"checks", checks}};
}

FactorChain parse_chain(const std::string& text, const AlgebraRef& algebra) {
  json j;
  try {
    std::string src = text;
    if (trim(src).rfind('{', 0) != 0) {
      std::ifstream file(text);
      if (!file) throw std::invalid_argument("chain argument is neither JSON nor a readable file: " + text);
      src.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    j = json::parse(src);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed chain JSON: ") + e.what(), 0);
  }
  if (j.contains("chain")) j = j["chain"];
  if (!j.contains("leading") || !j.contains("roots") || !j["roots"].is_array()) {
    throw ParseError("chain JSON needs 'leading' and 'roots'", 0);
  }
  FactorChain chain{parse_octonion(j["leading"].get<std::string>(), algebra), {}};
  for (const auto& r : j["roots"]) chain.roots.push_back(parse_octonion(r.get<std::string>(), algebra));
  return chain;
}

std::string linear_factor(const Octonion& lam) {
  if (lam.is_zero()) return "x";
  std::string s = format_octonion(lam);
  const bool single = s.find(' ') == std::string::npos;
  if (single && s.front() == '-') return "x + " + s.substr(1);
  return single ? "x - " + s : "x - (" + s + ")";
}

std::string chain_text(const FactorChain& chain) {
  std::string lead = format_octonion(chain.leading);
  if (lead.find(' ') != std::string::npos) lead = "(" + lead + ")";
  if (chain.roots.empty()) return lead;
  std::string s = lead == "1" ? "" : lead;
  for (std::size_t k = 0; k < chain.roots.size(); ++k) {
    std::string lin = "(" + linear_factor(chain.roots[k]) + ")";
    // With a unit leading coefficient the first two factors need no extra grouping.
    const bool flat = k == 0 || (k == 1 && lead == "1");
    s = flat ? s + lin : "(" + s + ")" + lin;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Commands. Each returns a JSON result and renders text from it.

json cmd_companion(const Context& ctx, const std::vector<std::string>& args) {
  OctPoly f = parse_poly(args.at(0), ctx.algebra);
  CentralPoly c = companion_via_product(f);
  json j{{"params", params_json(*ctx.algebra)}, {"input", format_poly(f)}, {"companion", c.to_string()}};
  if (ctx.check) {
    CentralPoly alt = companion_via_coeffs(f);
    j["check"] = {{"via_product", c.to_string()}, {"via_coeffs", alt.to_string()}, {"agree", alt == c}};
    if (alt != c) throw InternalVerificationFailure("companion polynomial formulas disagree");
  }
  return j;
}

json cmd_eval(const Context& ctx, const std::vector<std::string>& args) {
  OctPoly f = parse_poly(args.at(0), ctx.algebra);
  Octonion lam = parse_octonion(args.at(1), ctx.algebra);
  Octonion v = evaluate(f, lam);
  return {{"params", params_json(*ctx.algebra)}, {"input", format_poly(f)}, {"point", format_octonion(lam)},
          {"value", format_octonion(v)}, {"is_root", v.is_zero()}};
}

json cmd_factor_out(const Context& ctx, const std::vector<std::string>& args) {
  OctPoly f = parse_poly(args.at(0), ctx.algebra);
  Octonion lam = parse_octonion(args.at(1), ctx.algebra);
  OctPoly g = factor_out_root(f, lam);
  return {{"params", params_json(*ctx.algebra)}, {"input", format_poly(f)}, {"root", format_octonion(lam)},
          {"quotient", format_poly(g)}};
}

json cmd_wedderburn(const Context& ctx, const std::vector<std::string>& args) {
  OctPoly f = parse_poly(args.at(0), ctx.algebra);
  Octonion l1 = parse_octonion(args.at(1), ctx.algebra);
  Octonion l2 = parse_octonion(args.at(2), ctx.algebra);
  auto [gamma, h] = wedderburn_transfer(f, l1, l2);
  return {{"params", params_json(*ctx.algebra)}, {"input", format_poly(f)},   {"root1", format_octonion(l1)},
          {"root2", format_octonion(l2)},        {"gamma", format_octonion(gamma)}, {"h", format_poly(h)},
          {"h_at_gamma", format_octonion(evaluate(h, gamma))}};
}

json cmd_factor(const Context& ctx, const std::vector<std::string>& args) {
  OctPoly f = parse_poly(args.at(0), ctx.algebra);
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  FactorChain chain = factor_fully(f, ctx.options);
  CentralPoly c = companion_via_product(f);
  CompanionDecomposition dec = decompose_companion(c, f.leading().norm(), *ctx.algebra, ctx.options);
  VerificationReport report = verify_factorization(f, chain, ctx.options);
  if (!report.ok()) throw InternalVerificationFailure("factorization failed its verification report");
  json j{{"params", params_json(*ctx.algebra)},
         {"input", format_poly(f)},
         {"companion", c.to_string()},
         {"classes", classes_json(dec)},
         {"chain", chain_json(chain)},
         {"verification", report_json(report)}};
  j["factorization"] = chain_text(chain);
  return j;
}

json cmd_mul_table(const Context& ctx, const std::vector<std::string>&) {
  BasisTable table = basis_table(ctx.algebra);
  const auto n = static_cast<std::size_t>(ctx.algebra->dim);
  json rows = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(format_octonion(table[a][b]));
    rows.push_back(row);
  }
  json names = json::array();
  for (std::size_t a = 0; a < n; ++a) names.push_back(std::string(kBasisNames[a]));
  return {{"params", params_json(*ctx.algebra)}, {"basis", names}, {"table", rows}};
}

json cmd_verify(const Context& ctx, const std::vector<std::string>& args) {
  OctPoly f = parse_poly(args.at(0), ctx.algebra);
  FactorChain chain = parse_chain(args.at(1), ctx.algebra);
  VerificationReport report = verify_factorization(f, chain, ctx.options);
  return {{"params", params_json(*ctx.algebra)},
          {"input", format_poly(f)},
          {"chain", chain_json(chain)},
          {"verification", report_json(report)}};
}

void render_verification(std::ostream& out, const json& v) {
  out << "verification: " << (v["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
  for (const auto& c : v["checks"]) {
    out << "  [" << (c["passed"].get<bool>() ? "pass" : "FAIL") << "] " << c["name"].get<std::string>() << ": "
        << c["detail"].get<std::string>() << "\n";
  }
}

void render_text(std::ostream& out, const std::string& command, const json& j) {
  auto s = [&](const char* key) { return j[key].get<std::string>(); };
  if (command == "companion") {
    out << s("companion") << "\n";
    if (j.contains("check")) {
      out << "via product: " << j["check"]["via_product"].get<std::string>() << "\n"
          << "via coeffs:  " << j["check"]["via_coeffs"].get<std::string>() << "\n"
          << "agree: " << (j["check"]["agree"].get<bool>() ? "yes" : "no") << "\n";
    }
  } else if (command == "eval") {
    out << s("value") << "\n";
  } else if (command == "factor-out") {
    out << s("quotient") << "\n";
  } else if (command == "wedderburn") {
    out << "gamma: " << s("gamma") << "\n"
        << "h: " << s("h") << "\n"
        << "h(gamma): " << s("h_at_gamma") << "\n";
  } else if (command == "factor") {
    out << "input: " << s("input") << "\n" << "companion: " << s("companion") << "\n" << "classes:\n";
    for (const auto& c : j["classes"]) {
      out << "  trace " << c["trace"].get<std::string>() << ", norm " << c["norm"].get<std::string>()
          << ", multiplicity " << c["multiplicity"].get<int>() << "\n";
    }
    out << "leading: " << j["chain"]["leading"].get<std::string>() << "\n";
    const auto& roots = j["chain"]["roots"];
    for (std::size_t k = 0; k < roots.size(); ++k) {
      out << "lambda_" << roots.size() - k << ": " << roots[k].get<std::string>() << "\n";
    }
    out << "factorization: " << s("factorization") << "\n";
    render_verification(out, j["verification"]);
  } else if (command == "mul-table") {
    const auto& names = j["basis"];
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 4;
    for (const auto& row : j["table"]) {
      std::vector<std::string> r;
      for (const auto& c : row) {
        r.push_back(c.get<std::string>());
        width = std::max(width, r.back().size());
      }
      cells.push_back(std::move(r));
    }
    auto pad = [&](const std::string& t) { return t + std::string(width + 2 - t.size(), ' '); };
    out << pad("*");
    for (const auto& n : names) out << pad(n.get<std::string>());
    out << "\n";
    for (std::size_t a = 0; a < cells.size(); ++a) {
      out << pad(names[a].get<std::string>());
      for (const auto& c : cells[a]) out << pad(c);
      out << "\n";
    }
  } else if (command == "verify") {
    render_verification(out, j["verification"]);
  }
}

using Command = std::function<json(const Context&, const std::vector<std::string>&)>;

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<std::string> positionals;
  Command fn;
};

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> specs = {
      {"companion", "Print the companion polynomial conj(f)*f", {"poly"}, cmd_companion},
      {"eval", "Evaluate f at an element", {"poly", "octonion"}, cmd_eval},
      {"factor-out", "Divide f by (x - root) on the right", {"poly", "root"}, cmd_factor_out},
      {"wedderburn", "Transfer a second root to the quotient", {"poly", "root1", "root2"}, cmd_wedderburn},
      {"factor", "Factor f into left-nested linear factors", {"poly"}, cmd_factor},
      {"mul-table", "Print the basis multiplication table", {}, cmd_mul_table},
      {"verify", "Check a factor chain against f", {"poly", "chain-json"}, cmd_verify},
  };
  return specs;
}

const std::vector<std::string> kValueOptions = {"--alpha", "--beta",        "--gamma",         "--dim",
                                                "--output", "--class-order", "--witness-bound", "--batch"};

// Options first, then the command name, then "--" and the positionals, so that
// arguments such as "-i" are never taken for flags.
std::vector<std::string> normalize_args(const std::vector<std::string>& args) {
  std::vector<std::string> options;
  std::vector<std::string> positionals;
  bool only_positionals = false;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const std::string& a = args[k];
    if (only_positionals) {
      positionals.push_back(a);
    } else if (a == "--") {
      only_positionals = true;
    } else if (std::find(kValueOptions.begin(), kValueOptions.end(), a) != kValueOptions.end()) {
      if (k + 1 < args.size()) options.push_back(a + "=" + args[++k]);
      else options.push_back(a);
    } else if (a.rfind("--", 0) == 0 || a == "-h") {
      options.push_back(a);
    } else {
      positionals.push_back(a);
    }
  }
  std::vector<std::string> out = options;
  if (!positionals.empty()) {
    out.push_back(positionals.front());
    if (positionals.size() > 1) {
      out.push_back("--");
      out.insert(out.end(), positionals.begin() + 1, positionals.end());
    }
  }
  return out;
}

struct Outcome {
  json result;
  int code = kOk;
};

Outcome execute(const CommandSpec& spec, const Context& ctx, const std::vector<std::string>& args) {
  try {
    json result = spec.fn(ctx, args);
    int code = kOk;
    if (result.contains("verification") && !result["verification"]["ok"].get<bool>()) code = kFailure;
    return {std::move(result), code};
  } catch (const std::exception& e) {
    int code = exit_code_for(e);
    return {json{{"error", {{"kind", error_kind(e)}, {"message", e.what()}}}, {"exit_code", code}}, code};
  }
}

void emit(std::ostream& out, std::ostream& err, const std::string& command, const Outcome& o, bool as_json) {
  if (o.result.contains("error")) {
    err << "error: " << o.result["error"]["message"].get<std::string>() << "\n";
    if (as_json) out << o.result.dump(2) << "\n";
    return;
  }
  if (as_json) out << o.result.dump(2) << "\n";
  else render_text(out, command, o.result);
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact factorization of polynomials over octonion and quaternion division algebras", "octfactor"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--alpha", cfg.alpha, "i^2 (rational)")->capture_default_str();
  app.add_option("--beta", cfg.beta, "j^2 (rational)")->capture_default_str();
  app.add_option("--gamma", cfg.gamma, "l^2, the Cayley-Dickson parameter (rational)")->capture_default_str();
  app.add_option("--dim", cfg.dim, "4 (quaternions) or 8 (octonions)")->check(CLI::IsMember({4, 8}))->capture_default_str();
  app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--class-order", cfg.class_order, "class order for factor, e.g. '-1,1;1,1' (trace,norm pairs)");
  app.add_option("--witness-bound", cfg.witness_bound, "class witness search bound 'max_denominator,max_numerator'");
  app.add_flag("--check", cfg.check, "cross-check companion formulas");
  app.add_option("--batch", cfg.batch, "file with one first-argument per line, processed concurrently");

  std::map<std::string, std::vector<std::string>> positional_values;
  for (const auto& spec : commands()) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    auto& values = positional_values[spec.name];
    if (!spec.positionals.empty()) {
      sub->add_option("args", values, "arguments: " + [&] {
        std::string s;
        for (const auto& p : spec.positionals) s += (s.empty() ? "" : " ") + p;
        return s;
      }());
    }
  }

  std::vector<std::string> argv_store = normalize_args(raw_args);
  argv_store.insert(argv_store.begin(), "octfactor");
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const CommandSpec* spec = nullptr;
  for (const auto& s : commands()) {
    if (app.got_subcommand(s.name)) spec = &s;
  }
  std::vector<std::string> args = positional_values[spec->name];
  const bool as_json = cfg.output == "json";

  Context ctx;
  try {
    ctx = make_context(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  if (!cfg.batch.empty()) {
    if (spec->positionals.empty()) {
      err << "error: --batch needs a command that takes a polynomial\n";
      return kParseError;
    }
    std::ifstream file(cfg.batch);
    if (!file) {
      err << "error: cannot read batch file " << cfg.batch << "\n";
      return kParseError;
    }
    if (args.size() + 1 != spec->positionals.size()) {
      err << "error: in batch mode '" << spec->name << "' takes " << spec->positionals.size() - 1
          << " argument(s) after the polynomial\n";
      return kParseError;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(file, line);) {
      line = trim(line);
      if (!line.empty() && line.front() != '#') lines.push_back(line);
    }
    std::vector<std::future<Outcome>> jobs;
    for (const auto& line : lines) {
      std::vector<std::string> line_args{line};
      line_args.insert(line_args.end(), args.begin(), args.end());
      jobs.push_back(std::async(std::launch::async, [spec, &ctx, line_args] { return execute(*spec, ctx, line_args); }));
    }
    int code = kOk;
    json all = json::array();
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      Outcome o = jobs[k].get();
      if (code == kOk) code = o.code;
      if (as_json) {
        o.result["line"] = lines[k];
        all.push_back(o.result);
        if (o.result.contains("error")) err << "error (line " << k + 1 << "): " << o.result["error"]["message"].get<std::string>() << "\n";
      } else {
        out << "# " << lines[k] << "\n";
        emit(out, err, spec->name, o, false);
      }
    }
    if (as_json) out << all.dump(2) << "\n";
    return code;
  }

  if (args.size() != spec->positionals.size()) {
    err << "error: '" << spec->name << "' expects " << spec->positionals.size() << " argument(s)\n";
    return kParseError;
  }
  if (!args.empty() && args.front() == "-") {
    args.front().assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    args.front() = trim(args.front());
  }
  Outcome o = execute(*spec, ctx, args);
  emit(out, err, spec->name, o, as_json);
  return o.code;
}

}  // namespace octfactor::cli
