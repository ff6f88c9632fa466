// Command-line front end for the garank shared library. All computation goes
// through the C API in garank/garank.h; this translation unit only handles
// flags, files, and formatting.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "garank/garank.h"

namespace {

using nlohmann::json;

constexpr int kTextDigits = 12;

struct MvDeleter {
  void operator()(garank_mv* m) const { garank_mv_free(m); }
};
using MvHandle = std::unique_ptr<garank_mv, MvDeleter>;

struct StringDeleter {
  void operator()(char* s) const { garank_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

int exit_code_of(garank_status s) {
  switch (s) {
    case GARANK_OK: return 0;
    case GARANK_ERR_SINGULAR:
    case GARANK_ERR_NOT_IN_IMAGE:
    case GARANK_ERR_UNSUPPORTED_MODE:
    case GARANK_ERR_NOT_NORMAL:
    case GARANK_ERR_NUMERIC: return 2;
    default: return 1;
  }
}

void check(garank_status s) {
  if (s == GARANK_OK) return;
  std::string detail = garank_last_error();
  die(exit_code_of(s), detail.empty() ? garank_status_name(s) : detail);
}

struct Options {
  int p = 0, q = 0;
  bool exact = false;
  double tolerance = -1.0;  // <0: library default
  std::string expr;
  std::string json_in;
  std::string json_out;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(1, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die(1, "cannot write " + path);
  out << text;
}

MvHandle load_input(const Options& opt) {
  garank_mv* raw = nullptr;
  if (!opt.json_in.empty()) {
    const std::string text = read_file(opt.json_in);
    check(garank_mv_from_json(text.c_str(), &raw));
    MvHandle m(raw);
    int p = 0, q = 0;
    check(garank_mv_signature(m.get(), &p, &q));
    if (p != opt.p || q != opt.q)
      die(1, "--signature does not match the JSON input signature");
    garank_mode mode = GARANK_MODE_FLOAT;
    check(garank_mv_mode(m.get(), &mode));
    if (opt.exact && mode != GARANK_MODE_EXACT)
      die(1, "--exact given but the JSON input is float mode");
    return m;
  }
  if (opt.expr.empty()) die(1, "an expression or --json-in is required");
  const garank_mode mode = opt.exact ? GARANK_MODE_EXACT : GARANK_MODE_FLOAT;
  check(garank_mv_parse(opt.p, opt.q, mode, opt.expr.c_str(), &raw));
  return MvHandle(raw);
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", kTextDigits, v);
  return buf;
}

std::string pretty_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos && s.substr(slash + 1) == "1") return s.substr(0, slash);
  return s;
}

// scalar JSON {"re":..,"im":..} (numbers or "num/den" strings) -> text
std::string scalar_text(const json& node) {
  const auto part = [](const json& v) -> std::string {
    return v.is_string() ? pretty_rational(v.get<std::string>()) : format_double(v.get<double>());
  };
  const auto is_zero = [](const json& v) {
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      return s.substr(0, s.find('/')) == "0";
    }
    return v.get<double>() == 0.0;
  };
  const bool re0 = is_zero(node.at("re")), im0 = is_zero(node.at("im"));
  if (im0) return part(node.at("re"));
  if (re0) return part(node.at("im")) + "i";
  return "(" + part(node.at("re")) + " + " + part(node.at("im")) + "i)";
}

std::string mv_text(const garank_mv* m) {
  char* raw = nullptr;
  check(garank_mv_to_text(m, kTextDigits, &raw));
  ApiString s(raw);
  return s.get();
}

void emit(const Options& opt, const std::string& text_form, const std::string& json_form) {
  if (opt.format == "json")
    std::cout << json_form << "\n";
  else
    std::cout << text_form << "\n";
  if (!opt.json_out.empty()) write_file(opt.json_out, json_form + "\n");
}

int cmd_rank(const Options& opt) {
  MvHandle m = load_input(opt);
  int r = 0;
  char* raw = nullptr;
  check(garank_mv_rank(m.get(), opt.tolerance, &r, &raw));
  ApiString res(raw);
  const json j = json::parse(res.get());
  emit(opt, "rank " + std::to_string(r) + "\npath " + j.at("path").get<std::string>(),
       res.get());
  return 0;
}

int cmd_det(const Options& opt) {
  MvHandle m = load_input(opt);
  char* raw = nullptr;
  check(garank_mv_det(m.get(), &raw));
  ApiString res(raw);
  emit(opt, scalar_text(json::parse(res.get())), res.get());
  return 0;
}

int cmd_charpoly(const Options& opt) {
  MvHandle m = load_input(opt);
  char* raw = nullptr;
  check(garank_mv_charpoly(m.get(), &raw));
  ApiString res(raw);
  const json j = json::parse(res.get());
  std::ostringstream text;
  const auto& coeffs = j.at("coeffs");
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    text << "C(" << (k + 1) << ") = " << scalar_text(coeffs[k]) << "\n";
  text << "det = " << scalar_text(j.at("det"));
  emit(opt, text.str(), res.get());
  return 0;
}

int cmd_inverse(const Options& opt) {
  MvHandle m = load_input(opt);
  garank_mv* raw = nullptr;
  check(garank_mv_inverse(m.get(), &raw));
  MvHandle inv(raw);
  char* js = nullptr;
  check(garank_mv_to_json(inv.get(), &js));
  ApiString json_form(js);
  emit(opt, mv_text(inv.get()), json_form.get());
  return 0;
}

int cmd_norm(const Options& opt) {
  MvHandle m = load_input(opt);
  garank_mode mode = GARANK_MODE_FLOAT;
  check(garank_mv_mode(m.get(), &mode));
  char* raw = nullptr;
  check(garank_mv_norm_squared(m.get(), &raw));
  ApiString n2(raw);
  const json j = json::parse(n2.get());
  if (mode == GARANK_MODE_EXACT) {
    // exact mode exposes the squared norm exactly
    const std::string n2s = j.get<std::string>();
    emit(opt, "norm2 = " + pretty_rational(n2s), json{{"norm2", n2s}}.dump());
  } else {
    double norm = 0.0;
    check(garank_mv_norm(m.get(), &norm));
    emit(opt, "norm = " + format_double(norm), json{{"norm", norm}}.dump());
  }
  return 0;
}

int cmd_svd(const Options& opt) {
  MvHandle m = load_input(opt);
  garank_mv *u = nullptr, *s = nullptr, *v = nullptr;
  check(garank_mv_svd(m.get(), &u, &s, &v));
  MvHandle uh(u), sh(s), vh(v);
  const auto part_json = [](const garank_mv* part) {
    char* raw = nullptr;
    check(garank_mv_to_json(part, &raw));
    ApiString str(raw);
    return json::parse(str.get());
  };
  const json out{{"U", part_json(uh.get())},
                 {"Sigma", part_json(sh.get())},
                 {"V", part_json(vh.get())}};
  std::ostringstream text;
  text << "U = " << mv_text(uh.get()) << "\n"
       << "Sigma = " << mv_text(sh.get()) << "\n"
       << "V = " << mv_text(vh.get());
  emit(opt, text.str(), out.dump());
  return 0;
}

int cmd_normal(const Options& opt) {
  MvHandle m = load_input(opt);
  int normal = 0;
  check(garank_mv_is_normal(m.get(), opt.tolerance, &normal));
  emit(opt, normal ? "normal" : "not normal", json{{"normal", normal != 0}}.dump());
  return 0;
}

int cmd_repr(const Options& opt) {
  MvHandle m = load_input(opt);
  char* raw = nullptr;
  check(garank_mv_represent(m.get(), &raw));
  ApiString res(raw);
  const json j = json::parse(res.get());
  std::ostringstream text;
  const auto& entries = j.at("entries");
  for (const auto& row : entries) {
    for (std::size_t c = 0; c < row.size(); ++c) text << (c ? "  " : "") << scalar_text(row[c]);
    text << "\n";
  }
  std::string t = text.str();
  if (!t.empty()) t.pop_back();
  emit(opt, t, res.get());
  return 0;
}

int cmd_verify(const Options& opt) {
  MvHandle m = load_input(opt);
  int ok = 0;
  char* raw = nullptr;
  check(garank_mv_verify(m.get(), opt.tolerance, &ok, &raw));
  ApiString res(raw);
  const json j = json::parse(res.get());
  std::ostringstream text;
  for (const auto& c : j.at("checks"))
    text << (c.at("ok").get<bool>() ? "ok   " : "FAIL ") << c.at("name").get<std::string>()
         << "\n";
  text << (ok ? "all checks passed" : "oracle disagreement");
  emit(opt, text.str(), res.get());
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multivector rank/det/charpoly/inverse/SVD in complexified Clifford algebras"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("GARANK_TOLERANCE")) opt.tolerance = std::atof(env);

  const auto add_common = [&](CLI::App* cmd, bool takes_expr = true) {
    cmd->add_option("--signature", [&opt](const std::vector<std::string>& vals) {
         int p = 0, q = 0;
         if (std::sscanf(vals[0].c_str(), "%d,%d", &p, &q) != 2) return false;
         opt.p = p;
         opt.q = q;
         return true;
       },
       "algebra signature p,q")
        ->required()
        ->type_name("P,Q");
    cmd->add_flag("--exact", opt.exact, "exact Gaussian-rational coefficients");
    cmd->add_option("--tolerance", opt.tolerance, "decision tolerance (default 1e-9)");
    cmd->add_option("--json-in", opt.json_in, "read the input multivector from a JSON file");
    cmd->add_option("--json-out", opt.json_out, "also write the JSON result to a file");
    cmd->add_option("--format", opt.format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}));
    if (takes_expr) cmd->add_option("expr", opt.expr, "multivector expression");
  };

  int (*run)(const Options&) = nullptr;
  const auto wire = [&](const char* name, const char* desc, int (*fn)(const Options&)) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    add_common(cmd);
    cmd->callback([&run, fn] { run = fn; });
    return cmd;
  };

  wire("rank", "rank of a multivector (coefficient cascade)", cmd_rank);
  wire("det", "determinant", cmd_det);
  wire("charpoly", "characteristic polynomial coefficients C_(1)..C_(N)", cmd_charpoly);
  wire("inverse", "inverse via the adjugate", cmd_inverse);
  wire("norm", "norm (float) or squared norm (exact)", cmd_norm);
  wire("svd", "singular value decomposition inside the algebra", cmd_svd);
  wire("normal", "test M†M = MM†", cmd_normal);
  wire("repr", "matrix representation beta'(M)", cmd_repr);
  wire("verify", "cross-check the basis-free results against the matrix oracle", cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(opt);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
