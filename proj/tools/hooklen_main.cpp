// hooklen: exact verification of hook-length identities on binary trees,
// 3-ary trees and plane forests, with tree enumeration and value tables.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hooklen/engine.hpp"
#include "hooklen/series.hpp"

namespace {

using namespace hooklen;
using nlohmann::json;

enum class SeriesCheck { Convolution, Square, TreeFn };

std::optional<SeriesCheck> series_from_name(std::string_view name) {
  if (name == "lemma3") return SeriesCheck::Convolution;
  if (name == "square") return SeriesCheck::Square;
  if (name == "treefn") return SeriesCheck::TreeFn;
  return std::nullopt;
}

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapSetup {
  Caps caps;
  std::vector<std::string> notices;  // env overrides, echoed in the header
};

int env_cap(const char* var, int fallback, std::vector<std::string>& notices,
            const std::string& label) {
  const char* raw = std::getenv(var);
  if (!raw) return fallback;
  try {
    size_t used = 0;
    int v = std::stoi(raw, &used);
    if (used != std::string(raw).size() || v < 0) throw std::invalid_argument(raw);
    notices.push_back("# " + label + "=" + std::to_string(v) + " (from " + var + ")");
    return v;
  } catch (const std::exception&) {
    throw Usage(std::string("invalid ") + var + " value '" + raw + "'");
  }
}

CapSetup resolve_caps(std::optional<int> flag_binary, std::optional<int> flag_ternary,
                      std::optional<int> flag_forest) {
  CapSetup setup;
  Caps defaults;
  setup.caps.binary =
      flag_binary ? *flag_binary
                  : env_cap("HOOKLEN_CAP_BINARY", defaults.binary, setup.notices, "cap-binary");
  setup.caps.ternary =
      flag_ternary ? *flag_ternary
                   : env_cap("HOOKLEN_CAP_TERNARY", defaults.ternary, setup.notices, "cap-ternary");
  setup.caps.forest =
      flag_forest ? *flag_forest
                  : env_cap("HOOKLEN_CAP_FOREST", defaults.forest, setup.notices, "cap-forest");
  return setup;
}

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Usage("unknown format '" + name + "'");
}

void emit_notices(const CapSetup& setup, Format format) {
  // The text header carries the override echo; structured formats keep
  // stdout machine-clean and echo on stderr instead.
  for (const std::string& line : setup.notices) {
    if (format == Format::Text)
      std::cout << line << "\n";
    else
      std::cerr << line << "\n";
  }
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string identity;
  std::optional<int> n;
  std::optional<int> n_max;
  std::string method = "recurrence";
  std::string format = "text";
  std::optional<int> cap_binary, cap_ternary, cap_forest;
};

std::pair<int, int> resolve_range(const std::optional<int>& n, const std::optional<int>& n_max,
                                  int lo_default) {
  if (n && n_max) throw Usage("--n and --n-max are mutually exclusive");
  if (n) return {*n, *n};
  if (n_max) return {lo_default, *n_max};
  throw Usage("one of --n or --n-max is required");
}

int run_verify_series(SeriesCheck check, const VerifyArgs& args, Format format,
                      const CapSetup& setup) {
  auto [lo, hi] = resolve_range(args.n, args.n_max, 0);
  if (lo < 0) throw Usage("series checks need n >= 0");

  std::vector<SeriesRow> rows;
  switch (check) {
    case SeriesCheck::Convolution: rows = convolution_rows(hi); break;
    case SeriesCheck::Square: rows = square_rows(hi); break;
    case SeriesCheck::TreeFn: rows = tree_function_rows(hi); break;
  }

  emit_notices(setup, format);
  bool all_pass = true;
  json out = json::array();
  if (format == Format::Text)
    std::cout << "# identity=" << args.identity << " n-max=" << hi << "\n";
  if (format == Format::Csv) std::cout << "identity,n,method,lhs_brute,lhs_rec,rhs,verdict\n";
  for (const SeriesRow& row : rows) {
    if (row.n < lo) continue;
    all_pass = all_pass && row.pass;
    const char* verdict = row.pass ? "pass" : "fail";
    switch (format) {
      case Format::Text:
        if (row.pass)
          std::cout << "n=" << row.n << " pass " << row.lhs.str() << "\n";
        else
          std::cout << "n=" << row.n << " FAIL lhs=" << row.lhs.str()
                    << " rhs=" << row.rhs.str() << "\n";
        break;
      case Format::Csv:
        std::cout << args.identity << "," << row.n << ",series,," << row.lhs.str() << ","
                  << row.rhs.str() << "," << verdict << "\n";
        break;
      case Format::Json:
        out.push_back({{"identity", args.identity},
                       {"n", row.n},
                       {"method", "series"},
                       {"lhs_rec", row.lhs.str()},
                       {"rhs", row.rhs.str()},
                       {"verdict", verdict}});
        break;
    }
  }
  if (format == Format::Json) std::cout << out.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

int run_verify(const VerifyArgs& args) {
  Format format = parse_format(args.format);
  CapSetup setup = resolve_caps(args.cap_binary, args.cap_ternary, args.cap_forest);

  if (auto check = series_from_name(args.identity))
    return run_verify_series(*check, args, format, setup);

  auto id = identity_from_name(args.identity);
  if (!id) throw Usage("unknown identity '" + args.identity + "'");
  auto method = method_from_name(args.method);
  if (!method) throw Usage("unknown method '" + args.method + "'");

  auto [lo, hi] = resolve_range(args.n, args.n_max, 1);
  if (lo < 1) throw Usage("identity verification needs n >= 1");
  if (*method != Method::Recurrence) {
    // Brute force enumerates every shape; refuse up front when the top of
    // the range is over the family cap.
    check_cap(identity_family(*id), hi, setup.caps.of(identity_family(*id)));
  }

  emit_notices(setup, format);
  Engine engine(setup.caps);
  bool all_pass = true;
  json out = json::array();
  if (format == Format::Text)
    std::cout << "# identity=" << args.identity << " method=" << method_name(*method)
              << " n-max=" << hi << "\n";
  if (format == Format::Csv) std::cout << "identity,n,method,lhs_brute,lhs_rec,rhs,verdict\n";

  for (int n = lo; n <= hi; ++n) {
    VerificationReport rep = engine.verify(*id, n, *method);
    all_pass = all_pass && rep.pass;
    const char* verdict = rep.pass ? "pass" : "fail";
    switch (format) {
      case Format::Text:
        if (rep.pass) {
          std::cout << "n=" << n << " pass " << rep.lhs_rec.str() << "\n";
        } else {
          std::cout << "n=" << n << " FAIL rec=" << rep.lhs_rec.str()
                    << " rhs=" << rep.rhs.str();
          if (rep.lhs_brute) std::cout << " brute=" << rep.lhs_brute->str();
          if (rep.lhs_han_at_half)
            std::cout << " han@1/2=" << rep.lhs_han_at_half->str();
          std::cout << "\n";
        }
        break;
      case Format::Csv:
        std::cout << args.identity << "," << n << "," << method_name(*method) << ","
                  << (rep.lhs_brute ? rep.lhs_brute->str() : "") << "," << rep.lhs_rec.str()
                  << "," << rep.rhs.str() << "," << verdict << "\n";
        break;
      case Format::Json: {
        json row = {{"identity", args.identity},
                    {"n", n},
                    {"method", method_name(*method)},
                    {"lhs_rec", rep.lhs_rec.str()},
                    {"rhs", rep.rhs.str()},
                    {"verdict", verdict}};
        if (rep.lhs_brute) row["lhs_brute"] = rep.lhs_brute->str();
        if (rep.lhs_han_at_half) row["lhs_han_at_half"] = rep.lhs_han_at_half->str();
        out.push_back(std::move(row));
        break;
      }
    }
  }
  if (format == Format::Json) std::cout << out.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

// -------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string family;
  std::optional<int> n;
  std::optional<int> cap_binary, cap_ternary, cap_forest;
};

int run_enumerate(const EnumerateArgs& args) {
  CapSetup setup = resolve_caps(args.cap_binary, args.cap_ternary, args.cap_forest);
  if (!args.n) throw Usage("--n is required");
  int n = *args.n;
  if (n < 0) throw Usage("--n must be non-negative");

  Family family;
  if (args.family == "binary") family = Family::Binary;
  else if (args.family == "ternary") family = Family::Ternary;
  else if (args.family == "forest") family = Family::Forest;
  else throw Usage("unknown family '" + args.family + "'");

  check_cap(family, n, setup.caps.of(family));
  for (const std::string& line : setup.notices) std::cerr << line << "\n";

  std::ostream& os = std::cout;
  switch (family) {
    case Family::Binary:
      for_each_binary(n, [&](BinaryTree t) {
        os << encode_binary(t) << "\t" << hooks_str(hooks_binary(t)) << "\n";
      });
      break;
    case Family::Ternary:
      for_each_ternary(n, [&](TernaryTree t) {
        os << encode_ternary(t) << "\t" << hooks_str(hooks_ternary(t)) << "\n";
      });
      break;
    case Family::Forest:
      for_each_forest(n, [&](PlaneForest f) {
        os << encode_forest(f) << "\t" << hooks_str(hooks_forest(f)) << "\n";
      });
      break;
  }
  return 0;
}

// ------------------------------------------------------------------ table

struct TableArgs {
  std::string identity;
  std::optional<int> n;
  std::optional<int> n_max;
  std::string format = "text";
  std::optional<std::string> eval;
  std::optional<int> cap_binary, cap_ternary, cap_forest;
};

int run_table(const TableArgs& args) {
  Format format = parse_format(args.format);
  CapSetup setup = resolve_caps(args.cap_binary, args.cap_ternary, args.cap_forest);
  auto id = identity_from_name(args.identity);
  if (!id) throw Usage("unknown identity '" + args.identity + "'");
  auto [lo, hi] = resolve_range(args.n, args.n_max, 1);
  if (lo < 1) throw Usage("tables start at n = 1");

  std::optional<BigRat> at;
  if (args.eval) {
    try {
      at = BigRat::parse(*args.eval);
    } catch (const std::exception&) {
      throw Usage("invalid --eval value '" + *args.eval + "'");
    }
  }

  emit_notices(setup, format);
  Engine engine(setup.caps);
  const HookWeight& w = engine.weight(*id);
  Family family = identity_family(*id);

  bool all_pass = true;
  json out = json::array();
  if (format == Format::Text) {
    std::cout << "# identity=" << args.identity << " n-max=" << hi;
    if (at) std::cout << " eval=" << at->str();
    std::cout << "\n"
              << "n\tlhs\trhs\tverdict\n";
  }
  if (format == Format::Csv) std::cout << "n,lhs,rhs,verdict\n";

  for (int n = lo; n <= hi; ++n) {
    RatFunc lhs = engine.sum_rec(family, n, w);
    RatFunc rhs = rhs_value(*id, n);
    std::string lhs_s, rhs_s, verdict;
    if (!at) {
      lhs_s = lhs.str();
      rhs_s = rhs.str();
      verdict = lhs == rhs ? "pass" : "fail";
    } else {
      try {
        BigRat lv = lhs.eval(*at);
        BigRat rv = rhs.eval(*at);
        lhs_s = lv.str();
        rhs_s = rv.str();
        verdict = lv == rv ? "pass" : "fail";
      } catch (const PoleError& e) {
        lhs_s = rhs_s = "";
        verdict = std::string("error: ") + e.what();
      }
    }
    all_pass = all_pass && verdict == "pass";
    switch (format) {
      case Format::Text:
        std::cout << n << "\t" << lhs_s << "\t" << rhs_s << "\t" << verdict << "\n";
        break;
      case Format::Csv:
        std::cout << n << "," << lhs_s << "," << rhs_s << "," << verdict << "\n";
        break;
      case Format::Json:
        out.push_back({{"n", n}, {"lhs", lhs_s}, {"rhs", rhs_s}, {"verdict", verdict}});
        break;
    }
  }
  if (format == Format::Json) std::cout << out.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hook-length identity checker for binary trees, 3-ary trees and plane forests"};
  app.require_subcommand(1);

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand(
      "verify", "verify an identity for a range of sizes (exit 0 pass, 1 fail, 2 usage)");
  verify->add_option("--identity", vargs.identity,
                     "postnikov|lascoux|han|half|ternary|forest|lemma3|square|treefn")
      ->required();
  verify->add_option("--n", vargs.n, "single size to check");
  verify->add_option("--n-max", vargs.n_max, "check sizes 1..N (0..N for series checks)");
  verify->add_option("--method", vargs.method, "brute|recurrence|both (default recurrence)");
  verify->add_option("--format", vargs.format, "text|csv|json");
  verify->add_option("--cap-binary", vargs.cap_binary, "binary enumeration cap (default 14)");
  verify->add_option("--cap-ternary", vargs.cap_ternary, "ternary enumeration cap (default 9)");
  verify->add_option("--cap-forest", vargs.cap_forest, "forest enumeration cap (default 14)");

  EnumerateArgs eargs;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list every shape of a family with its hook multiset");
  enumerate->add_option("--family", eargs.family, "binary|ternary|forest")->required();
  enumerate->add_option("--n", eargs.n, "shape size");
  enumerate->add_option("--cap-binary", eargs.cap_binary, "binary enumeration cap");
  enumerate->add_option("--cap-ternary", eargs.cap_ternary, "ternary enumeration cap");
  enumerate->add_option("--cap-forest", eargs.cap_forest, "forest enumeration cap");

  TableArgs targs;
  CLI::App* table = app.add_subcommand(
      "table", "tabulate recurrence values against the closed form");
  table->add_option("--identity", targs.identity, "postnikov|lascoux|han|half|ternary|forest")
      ->required();
  table->add_option("--n", targs.n, "single size");
  table->add_option("--n-max", targs.n_max, "sizes 1..N");
  table->add_option("--format", targs.format, "text|csv|json");
  table->add_option("--eval", targs.eval, "specialize t to this rational, e.g. 1/2");
  table->add_option("--cap-binary", targs.cap_binary, "binary enumeration cap");
  table->add_option("--cap-ternary", targs.cap_ternary, "ternary enumeration cap");
  table->add_option("--cap-forest", targs.cap_forest, "forest enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(vargs);
    if (enumerate->parsed()) return run_enumerate(eargs);
    if (table->parsed()) return run_table(targs);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
