// Command-line surface of the library: set generation, arithmetic images,
// measure sandwiches, theorem verifiers, decompositions and root brackets,
// each emitted as one machine-readable document (JSON by default, CSV for
// plot-ready tables).  Exit code 0 = success/pass, 1 = a verifier ran and
// failed, 2 = usage or domain error (reported as JSON on standard error).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cantor/decompose.hpp"
#include "cantor/extensions.hpp"
#include "cantor/output.hpp"

using namespace cantor;
using nlohmann::json;

namespace {

struct Cli {
  std::string format = "json";
  long seed = 0;  // echoed for reproducibility; no subcommand draws randomness
  std::string out;
  std::vector<std::string> argv;
};

int fail(const std::string& type, const std::string& message) {
  const json doc = {{"error", {{"type", type}, {"message", message}}}};
  std::cerr << doc.dump(2) << "\n";
  return 2;
}

void emit(const Cli& cli, const json& doc, const std::string& csv) {
  const std::string text = cli.format == "json" ? doc.dump(2) + "\n" : csv;
  if (cli.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cli.out);
  if (!file) throw std::runtime_error("cannot open " + cli.out + " for writing");
  file << text;
  if (!file) throw std::runtime_error("write to " + cli.out + " failed");
}

json document(const Cli& cli, const std::string& command, json parameters,
              json result) {
  parameters["format"] = cli.format;
  parameters["seed"] = cli.seed;
  return {{"command", command},
          {"argv", cli.argv},
          {"parameters", std::move(parameters)},
          {"result", std::move(result)}};
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string interval_rows(const std::vector<Interval>& members) {
  std::string text = "lo_num,lo_den,hi_num,hi_den\n";
  for (const auto& m : members) {
    text += m.lo.get_num().get_str() + "," + m.lo.get_den().get_str() + "," +
            m.hi.get_num().get_str() + "," + m.hi.get_den().get_str() + "\n";
  }
  return text;
}

CantorSpec make_spec(const std::string& variant, int depth, const Rational& t) {
  CantorSpec spec;
  spec.variant = variant == "c"        ? CantorVariant::standard
                 : variant == "ctilde" ? CantorVariant::upper
                                       : CantorVariant::self_similar;
  spec.depth = depth;
  spec.keep = t;
  return spec;
}

json variant_parameters(const std::string& variant, int depth,
                        const Rational& t) {
  json p = {{"variant", variant}, {"depth", depth}};
  if (variant == "selfsim") p["t"] = fraction_string(t);
  return p;
}

int run_gen(const Cli& cli, const std::string& variant, int depth,
            const Rational& t) {
  if (depth > 20)
    throw std::invalid_argument(
        "gen: depth capped at 20 (2^20 intervals); raise the cap in code if "
        "you really need more");
  const IntervalSet set = generate(make_spec(variant, depth, t));
  const json result = {
      {"intervals", interval_set_json(set)},
      {"component_count", set.component_count()},
      {"measure", rational_json(set.measure())},
  };
  emit(cli, document(cli, "gen", variant_parameters(variant, depth, t), result),
       interval_rows(set.members()));
  return 0;
}

int run_image(const Cli& cli, const std::string& map_text,
              const std::string& variant, int depth, const Rational& t) {
  if (depth > 12)
    throw std::invalid_argument(
        "image: depth capped at 12 (box count grows as 4^depth)");
  const MapDescriptor map = parse_map(map_text);
  const IntervalSet set = generate(make_spec(variant, depth, t));
  const ImageReport report = map.arity() == 1 ? set_image(map, set)
                                              : set_image(map, set, set);
  json parameters = variant_parameters(variant, depth, t);
  parameters["map"] = map.name();
  const json result = {
      {"image", interval_set_json(report.image)},
      {"boxes_evaluated", report.boxes_evaluated},
      {"gaps", gaps_json(report.gaps)},
      {"exact", map.exact()},
  };
  emit(cli, document(cli, "image", std::move(parameters), result),
       interval_rows(report.image.members()));
  return 0;
}

int run_measure_product(const Cli& cli, int depth) {
  json sequence = json::array();
  std::string csv = "depth,upper,lower,decimal\n";
  for (int m = 1; m <= depth; ++m) {
    const MeasureSandwich s = product_measure_sandwich(m);
    sequence.push_back({
        {"depth", s.depth},
        {"upper_half", rational_json(s.upper_half)},
        {"tail", rational_json(s.tail)},
        {"lower_half", rational_json(s.lower_half)},
        {"lower", rational_json(s.lower)},
        {"upper", rational_json(s.upper)},
        {"component_count", s.component_count},
    });
    csv += std::to_string(s.depth) + "," + fraction_string(s.upper) + "," +
           fraction_string(s.lower) + "," + decimal_string(s.lower, 10) + "\n";
  }
  emit(cli,
       document(cli, "measure-product", {{"depth", depth}},
                {{"sequence", std::move(sequence)}}),
       csv);
  return 0;
}

int emit_verification(const Cli& cli, json parameters,
                      const VerificationReport& r) {
  const json result = {
      {"claim", r.claim},           {"depth", r.depth},
      {"computed", interval_set_json(r.computed)},
      {"expected", interval_set_json(r.expected)},
      {"gaps", gaps_json(r.gaps)},  {"notes", r.notes},
  };
  json doc = document(cli, "verify", std::move(parameters), result);
  doc["pass"] = r.pass;
  const std::string csv = "claim,depth,pass\n" + csv_escape(r.claim) + "," +
                          std::to_string(r.depth) + "," +
                          (r.pass ? "true" : "false") + "\n";
  emit(cli, doc, csv);
  return r.pass ? 0 : 1;
}

int run_verify_multiples(const Cli& cli, const Rational& q, int depth) {
  const MultipleReport r = multiple_solutions(q, depth);
  json claimed = json::array();
  for (const auto& u : r.claimed) claimed.push_back(rational_json(u));
  const json result = {
      {"ratio", fraction_string(r.ratio)},
      {"depth", r.depth},
      {"solutions", interval_set_json(r.solutions)},
      {"claimed", std::move(claimed)},
      {"claimed_in_set", r.claimed_in_set},
      {"zero_solution", r.zero_solution},
      {"residual_measure", rational_json(r.residual_measure)},
  };
  const std::string claim =
      "closed-form solutions of q*u in the set, q = " + fraction_string(q);
  json doc = document(
      cli, "verify",
      {{"verifier", "multiples"}, {"q", fraction_string(q)}, {"depth", depth}},
      result);
  doc["pass"] = r.all_claims_certified;
  const std::string csv = "claim,depth,pass\n" + csv_escape(claim) + "," +
                          std::to_string(depth) + "," +
                          (r.all_claims_certified ? "true" : "false") + "\n";
  emit(cli, doc, csv);
  return r.all_claims_certified ? 0 : 1;
}

int run_decompose(const Cli& cli, const std::string& kind, const Rational& u) {
  std::pair<Rational, Rational> parts;
  std::string identity;
  if (kind == "sum") {
    parts = decompose_sum(u);
    identity = "x + y == u";
  } else if (kind == "diff") {
    parts = decompose_diff(u);
    identity = "x - y == u";
  } else {
    parts = decompose_third(u);
    identity = "x + y/3 == u";
  }
  const bool x_in = in_cantor(parts.first);
  const bool y_in = in_cantor(parts.second);
  const json result = {
      {"u", rational_json(u)},           {"x", rational_json(parts.first)},
      {"y", rational_json(parts.second)}, {"x_in_cantor", x_in},
      {"y_in_cantor", y_in},             {"identity", identity},
  };
  const std::string csv =
      "u,x,y,x_in_cantor,y_in_cantor\n" + fraction_string(u) + "," +
      fraction_string(parts.first) + "," + fraction_string(parts.second) +
      "," + (x_in ? "true" : "false") + "," + (y_in ? "true" : "false") + "\n";
  emit(cli,
       document(cli, "decompose",
                {{"kind", kind}, {"u", fraction_string(u)}}, result),
       csv);
  return 0;
}

int run_quotient_test(const Cli& cli, const Rational& u) {
  const std::optional<long> witness = in_quotient_set(u);
  json result = {{"u", rational_json(u)}, {"member", witness.has_value()}};
  result["witness"] = witness ? json(*witness) : json(nullptr);
  const std::string csv =
      "u,member,witness\n" + fraction_string(u) + "," +
      (witness ? "true" : "false") + "," +
      (witness ? std::to_string(*witness) : std::string()) + "\n";
  emit(cli,
       document(cli, "quotient-test", {{"u", fraction_string(u)}}, result),
       csv);
  return 0;
}

int run_roots(const Cli& cli, int m, const Rational& tol) {
  const RootBracket b = solve_tm(m, tol);
  const json result = {
      {"m", b.index},
      {"lo", rational_json(b.lo)},
      {"hi", rational_json(b.hi)},
      {"width", rational_json(b.width())},
  };
  const std::string csv = "m,lo,hi,width\n" + std::to_string(b.index) + "," +
                          fraction_string(b.lo) + "," + fraction_string(b.hi) +
                          "," + fraction_string(b.width()) + "\n";
  emit(cli,
       document(cli, "roots",
                {{"m", m}, {"tol", fraction_string(tol)}}, result),
       csv);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Exact rational arithmetic on Cantor-type interval sets: generation, "
      "images under arithmetic maps, measure sandwiches and verifiers"};
  app.require_subcommand(1);

  Cli cli;
  cli.argv.assign(argv + 1, argv + argc);
  app.add_option("--format", cli.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", cli.seed,
                 "echoed into the document for reproducibility")
      ->capture_default_str();
  app.add_option("--out", cli.out,
                 "write the document to this file instead of standard output");

  std::string variant = "c";
  std::string t_text = "1/3";
  int depth = 0;

  auto* gen = app.add_subcommand("gen", "generate a set approximation");
  gen->fallthrough();
  gen->add_option("--variant", variant, "c, ctilde or selfsim")
      ->check(CLI::IsMember({"c", "ctilde", "selfsim"}))
      ->capture_default_str();
  gen->add_option("--depth", depth, "refinement depth")->required();
  auto* gen_t =
      gen->add_option("--t", t_text, "keep fraction p/q for selfsim");

  std::string map_text;
  auto* image = app.add_subcommand(
      "image", "image of the set (squared, for binary maps) under a map");
  image->fallthrough();
  image->add_option("--map", map_text,
                    "sum:L, product, quotient, squarecube, power:T or square")
      ->required();
  image->add_option("--variant", variant, "c, ctilde or selfsim")
      ->check(CLI::IsMember({"c", "ctilde", "selfsim"}))
      ->capture_default_str();
  image->add_option("--depth", depth, "refinement depth")->required();
  auto* image_t =
      image->add_option("--t", t_text, "keep fraction p/q for selfsim");

  auto* measure = app.add_subcommand(
      "measure-product", "two-sided measure bounds for the product image");
  measure->fallthrough();
  measure->add_option("--depth", depth, "deepest level of the sequence (1..12)")
      ->required();

  std::string lambda_text = "1";
  std::string q_text;
  auto* verify = app.add_subcommand("verify", "run one verifier");
  verify->fallthrough();
  verify->require_subcommand(1);
  auto* verify_depth = verify->add_option("--depth", depth, "refinement depth");
  auto* utz = verify->add_subcommand(
      "utz", "the scaled sumset covers [0, 1+lambda]");
  utz->add_option("--lambda", lambda_text, "coefficient p/q")->required();
  auto* squarecube =
      verify->add_subcommand("squarecube", "x^2*y covers [8/27, 1]");
  auto* quotient = verify->add_subcommand("quotient", "x/y covers [2/3, 3/2]");
  auto* gapcover = verify->add_subcommand(
      "gapcover", "the first refinement gap is covered by a cross product");
  auto* powerthreshold = verify->add_subcommand(
      "powerthreshold", "depth-1 gap of x*y^t appears iff t is small");
  powerthreshold->add_option("--t", t_text, "exponent p/q >= 1")->required();
  auto* multiples = verify->add_subcommand(
      "multiples", "closed-form solutions of q*u in the set");
  multiples->add_option("--q", q_text, "ratio p/q > 1")->required();
  auto* foursquares = verify->add_subcommand(
      "foursquares", "four squares cover [0, 1], three leave a gap");
  for (auto* sub : {utz, squarecube, quotient, gapcover, powerthreshold,
                    multiples, foursquares})
    sub->fallthrough();

  std::string u_text;
  auto* decompose =
      app.add_subcommand("decompose", "split u into set members");
  decompose->fallthrough();
  decompose->require_subcommand(1);
  decompose->add_option("--u", u_text, "value p/q to split")->required();
  auto* dsum = decompose->add_subcommand("sum", "u == x + y");
  auto* ddiff = decompose->add_subcommand("diff", "u == x - y");
  auto* dthird = decompose->add_subcommand("third", "u == x + y/3");
  for (auto* sub : {dsum, ddiff, dthird}) sub->fallthrough();

  auto* quotient_test = app.add_subcommand(
      "quotient-test", "membership of u in the quotient-set bands");
  quotient_test->fallthrough();
  quotient_test->add_option("--u", u_text, "positive value p/q")->required();

  int root_m = 0;
  std::string tol_text = "1/100000000";
  auto* roots = app.add_subcommand(
      "roots", "bisection bracket for the coverage threshold root");
  roots->fallthrough();
  roots->add_option("--m", root_m, "number of factors (>= 2)")->required();
  roots->add_option("--tol", tol_text, "bracket width bound p/q")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what());
  }

  const Rational t = parse_rational(t_text);
  if (gen->parsed()) {
    if (gen_t->count() > 0 && variant != "selfsim")
      throw std::invalid_argument("--t only applies to the selfsim variant");
    return run_gen(cli, variant, depth, t);
  }
  if (image->parsed()) {
    if (image_t->count() > 0 && variant != "selfsim")
      throw std::invalid_argument("--t only applies to the selfsim variant");
    return run_image(cli, map_text, variant, depth, t);
  }
  if (measure->parsed()) return run_measure_product(cli, depth);
  if (verify->parsed()) {
    // gapcover and powerthreshold are pinned demonstrations; every other
    // verifier needs an explicit depth
    const bool fixed_depth = gapcover->parsed() || powerthreshold->parsed();
    if (!fixed_depth && verify_depth->count() == 0)
      throw std::invalid_argument("verify: --depth is required");
    if (fixed_depth && verify_depth->count() > 0)
      throw std::invalid_argument(
          "this verifier runs at a fixed depth; drop --depth");
    if (utz->parsed()) {
      const Rational lambda = parse_rational(lambda_text);
      return emit_verification(cli,
                               {{"verifier", "utz"},
                                {"lambda", fraction_string(lambda)},
                                {"depth", depth}},
                               verify_utz(lambda, depth));
    }
    if (squarecube->parsed())
      return emit_verification(cli,
                               {{"verifier", "squarecube"}, {"depth", depth}},
                               verify_square_cube(depth));
    if (quotient->parsed())
      return emit_verification(cli,
                               {{"verifier", "quotient"}, {"depth", depth}},
                               verify_quotient(depth));
    if (gapcover->parsed())
      return emit_verification(cli, {{"verifier", "gapcover"}},
                               gap_cover_demo());
    if (powerthreshold->parsed())
      return emit_verification(
          cli, {{"verifier", "powerthreshold"}, {"t", fraction_string(t)}},
          power_threshold_demo(t));
    if (multiples->parsed())
      return run_verify_multiples(cli, parse_rational(q_text), depth);
    return emit_verification(cli,
                             {{"verifier", "foursquares"}, {"depth", depth}},
                             four_squares_evidence(depth));
  }
  if (decompose->parsed()) {
    const std::string kind = dsum->parsed()    ? "sum"
                             : ddiff->parsed() ? "diff"
                                               : "third";
    return run_decompose(cli, kind, parse_rational(u_text));
  }
  if (quotient_test->parsed())
    return run_quotient_test(cli, parse_rational(u_text));
  return run_roots(cli, root_m, parse_rational(tol_text));
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    return fail("usage", e.what());
  } catch (const std::domain_error& e) {
    return fail("domain", e.what());
  } catch (const std::runtime_error& e) {
    return fail("io", e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
}
