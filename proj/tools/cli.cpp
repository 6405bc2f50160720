#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "constacyclic/descriptor.hpp"
#include "constacyclic/errors.hpp"
#include "constacyclic/gray.hpp"
#include "constacyclic/nechaev.hpp"
#include "constacyclic/oracle.hpp"
#include "constacyclic/verify.hpp"

namespace constacyclic::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CodeArgs {
  std::string code;
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::string g1 = "1", g2 = "1", g3 = "1";
};

void add_code_options(CLI::App* sub, CodeArgs& args) {
  sub->add_option("--code", args.code, "code descriptor as JSON text, or @path to a JSON file");
  sub->add_option("-p", args.p, "odd prime");
  sub->add_option("-n", args.n, "code length");
  sub->add_option("--g1", args.g1, "generator of the cyclic component")->capture_default_str();
  sub->add_option("--g2", args.g2, "generator of the first negacyclic component")->capture_default_str();
  sub->add_option("--g3", args.g3, "generator of the second negacyclic component")->capture_default_str();
}

std::string read_document(const std::string& text) {
  if (text.empty() || text.front() != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw ParseError("cannot read " + text.substr(1));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ConstaCode load_code(const CodeArgs& args) {
  if (!args.code.empty()) return parse_descriptor(read_document(args.code));
  if (args.p == 0 || args.n == 0) throw ParseError("give a code with --code, or with -p, -n and --g1/--g2/--g3");
  PrimeField field(args.p);
  return code_from_generators(field, args.n, parse_fp_poly(field, args.g1), parse_fp_poly(field, args.g2),
                              parse_fp_poly(field, args.g3));
}

Json size_json(const BigInt& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) return value.convert_to<std::uint64_t>();
  return value.str();
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (item.find_first_not_of(" \t") != std::string::npos) parts.push_back(item);
  }
  return parts;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::vector<std::string> basis_strings(const LinearCodeFp& code) {
  std::vector<std::string> rows;
  for (const auto& row : code.basis()) rows.push_back(to_string(row));
  return rows;
}

Json code_json(const LinearCodeFp& code) {
  Json doc;
  doc["length"] = code.length();
  doc["dimension"] = code.dimension();
  doc["basis"] = basis_strings(code);
  return doc;
}

std::string factor_string(const Factor& f) {
  std::string body = "(" + to_string(f.irreducible) + ")";
  return f.multiplicity > 1 ? body + "^" + std::to_string(f.multiplicity) : body;
}

// factor

struct FactorArgs {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::string modulus = "xn-minus-1";
  std::string poly;
};

int cmd_factor(const FactorArgs& args, bool json, std::ostream& out) {
  PrimeField field(args.p);
  FpPoly f(field);
  if (!args.poly.empty()) {
    f = parse_fp_poly(field, args.poly);
  } else {
    if (args.n == 0) throw ParseError("-n is required with --modulus");
    f = args.modulus == "xn-minus-1" ? FpPoly::cyclic_modulus(field, args.n)
                                     : FpPoly::negacyclic_modulus(field, args.n);
  }
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  const Residue scale = f.leading();
  FpPoly monic = f.monic();
  auto factors = factor_monic(monic);
  auto divisors = monic_divisors(monic);
  if (json) {
    Json doc;
    doc["p"] = field.modulus();
    doc["polynomial"] = to_string(f);
    doc["leading"] = scale;
    Json items = Json::array();
    for (const auto& fac : factors) items.push_back({{"factor", to_string(fac.irreducible)}, {"multiplicity", fac.multiplicity}});
    doc["factors"] = std::move(items);
    Json divs = Json::array();
    for (const auto& d : divisors) divs.push_back(to_string(d));
    doc["divisors"] = std::move(divs);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::string> factor_text, divisor_text;
  for (const auto& fac : factors) factor_text.push_back(factor_string(fac));
  for (const auto& d : divisors) divisor_text.push_back(to_string(d));
  std::string product = join(factor_text, "");
  if (scale != 1) product = std::to_string(scale) + product;
  out << "polynomial: " << to_string(f) << " over F_" << field.modulus() << '\n';
  out << "factorization: " << (factors.empty() ? to_string(f) : product) << '\n';
  out << "factors:";
  for (const auto& fac : factors) {
    out << ' ' << to_string(fac.irreducible);
    if (fac.multiplicity > 1) out << " (multiplicity " << fac.multiplicity << ')';
    if (&fac != &factors.back()) out << ',';
  }
  out << '\n' << "divisors (" << divisors.size() << "): " << join(divisor_text, ", ") << '\n';
  return kExitOk;
}

// construct

int cmd_construct(const CodeArgs& args, bool json, std::ostream& out) {
  ConstaCode code = load_code(args);
  ConstaCode dual = code_dual(code);
  auto h = check_polynomials(code);
  if (json) {
    Json doc;
    doc["code"] = to_descriptor(code);
    doc["size"] = size_json(code_size(code));
    doc["generator"] = to_string(combined_generator(code));
    doc["check"] = {to_string(h[0]), to_string(h[1]), to_string(h[2])};
    doc["dual"] = to_descriptor(dual);
    doc["dual_size"] = size_json(code_size(dual));
    doc["dual_generator"] = to_string(combined_generator(dual));
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "code: " << serialize_descriptor(code) << '\n';
  out << "size: " << code_size(code).str() << '\n';
  out << "generator: " << to_string(combined_generator(code)) << '\n';
  out << "check polynomials: " << to_string(h[0]) << ", " << to_string(h[1]) << ", " << to_string(h[2]) << '\n';
  out << "dual: " << serialize_descriptor(dual) << '\n';
  out << "dual size: " << code_size(dual).str() << '\n';
  out << "dual generator: " << to_string(combined_generator(dual)) << '\n';
  return kExitOk;
}

// gray

struct GrayArgs {
  CodeArgs code;
  std::string vector;
  bool min_weight = false;
  std::size_t cap = kDefaultEnumerationCap;
};

int cmd_gray(const GrayArgs& args, bool json, std::ostream& out) {
  if (!args.vector.empty()) {
    if (args.code.p == 0) throw ParseError("-p is required with --vector");
    PrimeField field(args.code.p);
    VectorFp image = gray_vec(parse_vector_r(field, args.vector));
    if (json) {
      out << Json{{"p", field.modulus()}, {"image", to_string(image)}}.dump(2) << '\n';
    } else {
      out << to_string(image) << '\n';
    }
    return kExitOk;
  }
  ConstaCode code = load_code(args.code);
  LinearCodeFp image = gray_image_code(code);
  std::optional<std::optional<std::size_t>> weight;
  if (args.min_weight) weight = oracle::brute_min_weight(image.enumerate(args.cap));
  if (json) {
    Json doc;
    doc["code"] = to_descriptor(code);
    doc["image"] = code_json(image);
    doc["cyclic"] = image.is_closed_under(ShiftKind::sigma);
    if (weight) doc["min_weight"] = *weight ? Json(**weight) : Json(nullptr);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << to_string(image) << '\n';
  out << "cyclic: " << (image.is_closed_under(ShiftKind::sigma) ? "yes" : "no") << '\n';
  if (weight) out << "min weight: " << (*weight ? std::to_string(**weight) : "none (zero code)") << '\n';
  return kExitOk;
}

// dual

int cmd_dual(const CodeArgs& args, bool json, std::ostream& out) {
  ConstaCode code = load_code(args);
  ConstaCode dual = code_dual(code);
  if (json) {
    Json doc = to_descriptor(dual);
    doc["size"] = size_json(code_size(dual));
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << serialize_descriptor(dual) << '\n';
  out << "size: " << code_size(dual).str() << '\n';
  return kExitOk;
}

// decompose

struct DecomposeArgs {
  CodeArgs code;
  std::string span;
  std::size_t cap = kDefaultEnumerationCap;
};

Decomposition decompose_input(const DecomposeArgs& args) {
  if (args.span.empty()) {
    auto components = component_codes(load_code(args.code));
    return {components[0], components[1], components[2]};
  }
  if (args.code.p == 0) throw ParseError("-p is required with --span");
  PrimeField field(args.code.p);
  RWordSet generators;
  for (const auto& item : split_list(args.span, ';')) generators.insert(parse_vector_r(field, item));
  if (generators.empty()) throw ParseError("--span needs at least one vector");
  const std::size_t n = generators.begin()->size();
  return code_decompose(oracle::brute_r_linear_closure(field, n, generators, args.cap));
}

int cmd_decompose(const DecomposeArgs& args, bool json, std::ostream& out) {
  Decomposition parts = decompose_input(args);
  const bool constacyclic = parts.c1.is_closed_under(ShiftKind::sigma) &&
                            parts.c2.is_closed_under(ShiftKind::gamma) &&
                            parts.c3.is_closed_under(ShiftKind::gamma);
  const LinearCodeFp* codes[] = {&parts.c1, &parts.c2, &parts.c3};
  if (json) {
    Json doc;
    doc["c1"] = code_json(parts.c1);
    doc["c2"] = code_json(parts.c2);
    doc["c3"] = code_json(parts.c3);
    doc["constacyclic"] = constacyclic;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < 3; ++i) out << "C" << i + 1 << ": " << to_string(*codes[i]) << '\n';
  out << "constacyclic: " << (constacyclic ? "yes" : "no") << '\n';
  return kExitOk;
}

// mu

struct MuArgs {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::string vector;
  std::string poly;
};

int cmd_mu(const MuArgs& args, bool json, std::ostream& out) {
  PrimeField field(args.p);
  std::string result;
  if (!args.poly.empty()) {
    if (args.n == 0) throw ParseError("-n is required with --poly");
    result = to_string(mu_map(parse_rpoly(field, args.poly), args.n));
  } else if (!args.vector.empty()) {
    result = to_string(mu_bar(parse_vector_r(field, args.vector)));
  } else {
    throw ParseError("give --vector or --poly");
  }
  if (json) {
    out << Json{{"p", field.modulus()}, {"image", result}}.dump(2) << '\n';
  } else {
    out << result << '\n';
  }
  return kExitOk;
}

// nechaev

struct NechaevArgs {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::string vector;
};

int cmd_nechaev(const NechaevArgs& args, bool json, std::ostream& out) {
  std::optional<VectorR> v;
  std::size_t n = args.n;
  if (!args.vector.empty()) {
    if (args.p == 0) throw ParseError("-p is required with --vector");
    v = parse_vector_r(PrimeField(args.p), args.vector);
    if (n != 0 && n != v->size()) throw LengthMismatchError("vector length differs from -n");
    n = v->size();
  }
  if (n == 0) throw ParseError("give -n or --vector");
  NechaevPerm perm = tau_build(n);
  Json doc;
  doc["n"] = n;
  doc["tau"] = to_string(perm);
  if (v) {
    VectorFp image = gray_vec(*v);
    doc["mu_bar"] = to_string(mu_bar(*v));
    doc["gray"] = to_string(image);
    doc["pi_gray"] = to_string(nechaev_pi(perm, image));
    doc["gray_mu_bar"] = to_string(gray_vec(mu_bar(*v)));
  }
  if (json) {
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << to_string(perm) << '\n';
  if (v) {
    out << "mu_bar: " << doc["mu_bar"].get<std::string>() << '\n';
    out << "gray: " << doc["gray"].get<std::string>() << '\n';
    out << "pi(gray): " << doc["pi_gray"].get<std::string>() << '\n';
    out << "gray(mu_bar): " << doc["gray_mu_bar"].get<std::string>() << '\n';
  }
  return kExitOk;
}

// verify

struct VerifyArgs {
  std::string suite = "all";
  std::vector<std::uint64_t> primes{3};
  std::vector<std::size_t> lengths{2};
  verify::Options options;
};

int cmd_verify(const VerifyArgs& args, bool json, std::ostream& out) {
  if (args.suite != "all" && !verify::is_theorem_id(args.suite)) {
    throw ParseError("unknown suite '" + args.suite + "'; expected all or one of: " + join(verify::theorem_ids(), ", "));
  }
  verify::Report report = verify::run_suite(args.suite, args.primes, args.lengths, args.options);
  if (json) {
    out << verify::to_json(report).dump(2) << '\n';
  } else {
    out << verify::to_text(report);
  }
  return report.passed() ? kExitOk : kExitFailure;
}

// enumerate

struct EnumerateArgs {
  CodeArgs code;
  bool words = false;
  std::size_t cap = kDefaultEnumerationCap;
};

int cmd_enumerate(const EnumerateArgs& args, bool json, std::ostream& out) {
  if (args.words) {
    ConstaCode code = load_code(args.code);
    RWordSet words = code_span(code, args.cap);
    if (json) {
      Json list = Json::array();
      for (const auto& w : words) list.push_back(to_string(w));
      out << Json{{"code", to_descriptor(code)}, {"words", std::move(list)}}.dump(2) << '\n';
      return kExitOk;
    }
    for (const auto& w : words) out << to_string(w) << '\n';
    out << words.size() << " words\n";
    return kExitOk;
  }
  if (args.code.p == 0 || args.code.n == 0) throw ParseError("-p and -n are required");
  PrimeField field(args.code.p);
  auto codes = all_codes(field, args.code.n);
  if (json) {
    Json list = Json::array();
    for (const auto& code : codes) {
      Json item = to_descriptor(code);
      item["size"] = size_json(code_size(code));
      list.push_back(std::move(item));
    }
    out << list.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& code : codes) {
    out << "g1=" << to_string(code.g1()) << " g2=" << to_string(code.g2()) << " g3=" << to_string(code.g3())
        << " size=" << code_size(code).str() << '\n';
  }
  out << codes.size() << " codes\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constacyclic codes over F_p[u]/(u^3 - u)", "constacyclic"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  FactorArgs factor;
  auto* factor_cmd = app.add_subcommand("factor", "factor x^n - 1, x^n + 1 or a given polynomial over F_p");
  factor_cmd->add_option("-p", factor.p, "odd prime")->required();
  factor_cmd->add_option("-n", factor.n, "exponent n");
  factor_cmd->add_option("--modulus", factor.modulus, "xn-minus-1 or xn-plus-1")
      ->check(CLI::IsMember({"xn-minus-1", "xn-plus-1"}))
      ->capture_default_str();
  factor_cmd->add_option("--poly", factor.poly, "explicit polynomial, e.g. x^4+2");

  CodeArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "summarize a code: size, generator, dual");
  add_code_options(construct_cmd, construct);

  GrayArgs gray;
  auto* gray_cmd = app.add_subcommand("gray", "Gray image of a vector over R or of a code");
  add_code_options(gray_cmd, gray.code);
  gray_cmd->add_option("--vector", gray.vector, "vector over R, e.g. [1,0,1],[2,0,2]");
  gray_cmd->add_flag("--min-weight", gray.min_weight, "also report the minimum weight of the image");
  gray_cmd->add_option("--cap", gray.cap, "enumeration cap")->capture_default_str();

  CodeArgs dual;
  auto* dual_cmd = app.add_subcommand("dual", "dual code descriptor");
  add_code_options(dual_cmd, dual);

  DecomposeArgs decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "component codes C1, C2, C3");
  add_code_options(decompose_cmd, decompose.code);
  decompose_cmd->add_option("--span", decompose.span, "semicolon-separated vectors generating an R-linear code");
  decompose_cmd->add_option("--cap", decompose.cap, "enumeration cap")->capture_default_str();

  MuArgs mu;
  auto* mu_cmd = app.add_subcommand("mu", "apply mu to a polynomial or mu_bar to a vector (odd n)");
  mu_cmd->add_option("-p", mu.p, "odd prime")->required();
  mu_cmd->add_option("-n", mu.n, "odd length");
  mu_cmd->add_option("--vector", mu.vector, "vector over R");
  mu_cmd->add_option("--poly", mu.poly, "polynomial over R, e.g. [1,0,0]*x+[0,1,0]");

  NechaevArgs nechaev;
  auto* nechaev_cmd = app.add_subcommand("nechaev", "the Nechaev permutation, optionally applied to a vector");
  nechaev_cmd->add_option("-p", nechaev.p, "odd prime");
  nechaev_cmd->add_option("-n", nechaev.n, "odd length");
  nechaev_cmd->add_option("--vector", nechaev.vector, "vector over R");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check the theorems against the brute-force oracles");
  verify_cmd->add_option("--suite", verify_args.suite, "all or a theorem id")->capture_default_str();
  verify_cmd->add_option("-p", verify_args.primes, "primes")->delimiter(',')->capture_default_str();
  verify_cmd->add_option("-n", verify_args.lengths, "lengths")->delimiter(',')->capture_default_str();
  verify_cmd->add_option("--seed", verify_args.options.seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--cap", verify_args.options.cap, "enumeration cap")->capture_default_str();
  verify_cmd->add_option("--exhaustive-limit", verify_args.options.exhaustive_limit,
                         "largest space scanned exhaustively")
      ->capture_default_str();
  verify_cmd->add_option("--random-cases", verify_args.options.random_cases, "samples for larger spaces")
      ->capture_default_str();

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every code of length n, or every word of one code");
  add_code_options(enumerate_cmd, enumerate.code);
  enumerate_cmd->add_flag("--words", enumerate.words, "list the words of the given code");
  enumerate_cmd->add_option("--cap", enumerate.cap, "enumeration cap")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (factor_cmd->parsed()) return cmd_factor(factor, json, out);
    if (construct_cmd->parsed()) return cmd_construct(construct, json, out);
    if (gray_cmd->parsed()) return cmd_gray(gray, json, out);
    if (dual_cmd->parsed()) return cmd_dual(dual, json, out);
    if (decompose_cmd->parsed()) return cmd_decompose(decompose, json, out);
    if (mu_cmd->parsed()) return cmd_mu(mu, json, out);
    if (nechaev_cmd->parsed()) return cmd_nechaev(nechaev, json, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, json, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(enumerate, json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace constacyclic::cli
