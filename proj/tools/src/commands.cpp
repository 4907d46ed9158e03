#include "derange/cli/commands.hpp"

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "derange/cli/cache.hpp"
#include "derange/cli/verify.hpp"
#include "derange/counting.hpp"
#include "derange/euler_tables.hpp"
#include "derange/lambda_formulas.hpp"
#include "derange/series.hpp"
#include "json.hpp"

namespace derange::cli {

using nlohmann::json;

namespace {

// Raised for bad argument values that CLI11 itself cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + ": '" + text + "'");
  }
}

Composition parse_composition(const std::string& text) {
  if (text.empty()) return Composition();
  std::vector<int> parts;
  for (const auto& item : split(text, ',')) {
    const int v = parse_int(item, "composition part");
    if (v < 0) throw UsageError("composition parts must be nonnegative");
    parts.push_back(v);
  }
  return Composition(parts);
}

Permutation parse_permutation(const std::string& text) {
  try {
    if (text.find(',') == std::string::npos) return Permutation::from_word(text);
    std::vector<int> image;
    for (const auto& item : split(text, ',')) image.push_back(parse_int(item, "permutation entry"));
    return Permutation(image);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid permutation '") + text + "': " + e.what());
  }
}

std::map<int, int> parse_colours(const std::string& text) {
  std::map<int, int> out;
  if (text.empty()) return out;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("colours are given as pos:colour, got '" + item + "'");
    out[parse_int(item.substr(0, colon), "colour position")] = parse_int(item.substr(colon + 1), "colour");
  }
  return out;
}

json parts_json(const Composition& a) { return json(std::vector<int>(a.parts().begin(), a.parts().end())); }

json coloured_json(const ColouredPermutation& p) {
  json colours = json::object();
  for (int pos : p.essential_fixed_points()) colours[std::to_string(pos)] = p.colour(pos);
  return {{"perm", p.perm().to_string()}, {"colours", colours}, {"text", p.to_string()}};
}

// Shared cache plumbing: compute on a miss, mark hits.
class Session {
 public:
  Session(bool use_cache, std::ostream& err) {
    if (use_cache) cache_.emplace(default_cache_path(), err);
  }

  template <class Compute>
  json cached(const std::string& command, const json& params, Compute compute) {
    const std::string key = cache_key(command, params);
    if (cache_) {
      if (auto hit = cache_->get(key)) {
        (*hit)["cached"] = true;
        return *hit;
      }
    }
    json value = compute();
    if (cache_) cache_->put(key, value);
    return value;
  }

 private:
  std::optional<ResultCache> cache_;
};

// ------------------------------------------------------------------ count

struct CountOptions {
  std::string composition;
  std::string mode = "Dj";
  std::string method = "brute";
  std::optional<int> j;
};

BigInt block_factorials(const Composition& a) {
  BigInt out = 1;
  for (int part : a.parts()) out *= factorial(part);
  return out;
}

json run_count(const CountOptions& o, Session& session) {
  const Composition a = parse_composition(o.composition);
  const int k = a.blocks();
  int j = o.j.value_or(k);
  if (o.mode == "Dj") {
    if (j < 0 || j > k) throw UsageError("--j must lie in [0, k]");
  } else if (o.mode == "Dstar" || o.mode == "Dhat") {
    if (!o.j) throw UsageError("--mode " + o.mode + " needs --j");
    if (j < 1 || j > k) throw UsageError("--j must lie in [1, k]");
  } else if (o.mode == "preimage") {
    j = k;
  }
  const bool full = j == k;
  if ((o.method == "factorial" || o.method == "derangement-basis") && !full) {
    throw UsageError("--method " + o.method + " only counts j = k");
  }
  if (o.mode == "Dhat" && o.method != "brute") throw UsageError("--mode Dhat is counted by --method brute only");

  const json params{{"composition", parts_json(a)}, {"mode", o.mode}, {"method", o.method}, {"j", j}};
  return session.cached("count", params, [&] {
    BigInt count;
    if (o.mode == "Dj") {
      if (o.method == "brute") {
        count = counting::count_Dj(a, j);
      } else if (o.method == "genfunc") {
        count = series::coeff_Dj(a, j);
      } else if (o.method == "factorial") {
        count = lambda::explicit_D_count(a);
      } else {
        count = lambda::derangement_basis_count(a);
      }
    } else if (o.mode == "Dstar") {
      if (o.method == "brute") {
        count = counting::count_Dstar(a, j);
      } else if (o.method == "genfunc") {
        count = series::coeff_Dj(a, j - 1) - series::coeff_Dj(a, j);
      } else {
        throw UsageError("--mode Dstar is counted by --method brute or genfunc");
      }
    } else if (o.mode == "Dhat") {
      count = counting::count_Dhat(a, j);
    } else {
      if (o.method == "brute") {
        count = counting::count_sorted_derangement_preimage(a);
      } else if (o.method == "genfunc") {
        count = block_factorials(a) * series::coeff_Dj(a, k);
      } else if (o.method == "factorial") {
        const auto rhs = lambda::lamfak_rhs(a);
        if (!rhs.is_constant()) throw std::logic_error("lambda-factorial sum is not constant");
        count = rhs.coefficient(0);
      } else {
        count = block_factorials(a) * lambda::derangement_basis_count(a);
      }
    }
    return json{{"composition", parts_json(a)}, {"mode", o.mode}, {"method", o.method}, {"j", j},
                {"count", to_decimal(count)}};
  });
}

// ------------------------------------------------------------------ table

struct TableOptions {
  int n_max = 6;
  std::string lambda = "0";
  std::string kind = "d";
  std::string format = "json";
};

void emit_table(const TableOptions& o, const json& payload, std::ostream& out) {
  const auto& rows = payload["rows"];
  const bool symbolic = o.lambda == "symbolic";
  if (o.format == "json") {
    out << payload.dump() << '\n';
    return;
  }
  if (symbolic) throw UsageError("--format " + o.format + " needs a numeric --lambda");
  if (o.format == "csv") {
    out << "n,k,value\n";
    for (std::size_t n = 0; n < rows.size(); ++n) {
      for (std::size_t k = 0; k < rows[n].size(); ++k) out << n << ',' << k << ',' << rows[n][k].get<std::string>() << '\n';
    }
  } else if (o.format == "bfile") {
    // Rows read left to right, n = 0 first; offset 0.
    std::size_t index = 0;
    for (const auto& row : rows) {
      for (const auto& v : row) out << index++ << ' ' << v.get<std::string>() << '\n';
    }
  } else {
    std::size_t width = 1;
    for (const auto& row : rows) {
      for (const auto& v : row) width = std::max(width, v.get<std::string>().size());
    }
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k > 0) out << ' ';
        out << std::setw(static_cast<int>(width)) << row[k].get<std::string>();
      }
      out << '\n';
    }
  }
}

json run_table(const TableOptions& o, Session& session) {
  if (o.n_max < 0) throw UsageError("--n-max must be nonnegative");
  const bool symbolic = o.lambda == "symbolic";
  const std::optional<int> lam = symbolic ? std::nullopt : std::optional<int>(parse_int(o.lambda, "lambda"));
  const json params{{"n_max", o.n_max}, {"lambda", o.lambda}, {"kind", o.kind}};
  return session.cached("table", params, [&] {
    const auto t = euler::build_tables(o.n_max);
    json rows = json::array();
    for (int n = 0; n <= o.n_max; ++n) {
      json row = json::array();
      for (int k = 0; k <= n; ++k) {
        const auto& p = o.kind == "e" ? t.e(n, k) : t.d(n, k);
        if (lam) {
          row.push_back(to_decimal(p.evaluate(*lam)));
        } else {
          row.push_back(p.to_strings());
        }
      }
      rows.push_back(std::move(row));
    }
    return json{{"kind", o.kind}, {"lambda", o.lambda}, {"n_max", o.n_max}, {"rows", rows}};
  });
}

// ------------------------------------------------------------------ bijection

struct BijectionOptions {
  std::string map;
  int k = 0;
  std::optional<int> n;
  int lambda = 2;
  std::optional<int> index;
  std::optional<int> colour;
  std::string perm;
  std::string colours;
  std::string arg;
  bool inverse = false;
};

json branch_json(const euler::BranchArg& arg) {
  if (const auto* index = std::get_if<euler::IndexArg>(&arg)) {
    return {{"branch", "index"}, {"index", index->index}, {"arg", coloured_json(index->perm)}};
  }
  const auto& colour = std::get<euler::ColourArg>(arg);
  return {{"branch", "colour"}, {"colour", colour.colour}, {"arg", coloured_json(colour.perm)}};
}

json preimages_json(const std::string& map, const ColouredPermutation& q, int k) {
  json pre = json::array();
  if (map == "theta") {
    pre.push_back(branch_json(euler::theta_inverse(q, k)));
  } else if (map == "eta") {
    pre.push_back(branch_json(euler::eta_inverse(q, k)));
  } else if (map == "zeta1") {
    for (const auto& z : euler::zeta1_preimages(q, k)) {
      pre.push_back({{"index", z.j}, {"colour", z.colour}, {"arg", coloured_json(z.perm)}});
    }
  } else if (auto z = euler::zeta2_inverse(q, k)) {
    pre.push_back({{"colour", z->colour}, {"index", z->j}, {"arg", coloured_json(z->perm)}});
  }
  return pre;
}

// --arg forms: theta/eta "x/word[/pos:c,...]" with the branch read off the
// word length (needs --n); zeta1 "j/c/word[/...]"; zeta2 "c/j/word[/...]".
void apply_arg(BijectionOptions& o) {
  if (o.arg.empty()) return;
  if (!o.perm.empty() || o.index || o.colour) throw UsageError("--arg replaces --index, --colour and --perm");
  const auto fields = split(o.arg, '/');
  const bool zeta = o.map == "zeta1" || o.map == "zeta2";
  const std::size_t word_at = zeta ? 2 : 1;
  if (fields.size() < word_at + 1 || fields.size() > word_at + 2) throw UsageError("malformed --arg '" + o.arg + "'");
  o.perm = fields[word_at];
  if (fields.size() == word_at + 2) o.colours = fields[word_at + 1];
  const int first = parse_int(fields[0], "--arg field");
  if (o.map == "zeta1") {
    o.index = first;
    o.colour = parse_int(fields[1], "--arg field");
  } else if (o.map == "zeta2") {
    o.colour = first;
    o.index = parse_int(fields[1], "--arg field");
  } else {
    if (!o.n) throw UsageError("--arg for " + o.map + " needs --n to tell the branches apart");
    const int size = parse_permutation(o.perm).size();
    const int index_size = o.map == "theta" ? *o.n : *o.n - 1;
    if (size == index_size) {
      o.index = first;
    } else if (size == index_size - 1) {
      o.colour = first;
    } else {
      throw UsageError("--arg word has the wrong length for --n");
    }
  }
}

json run_bijection(BijectionOptions o) {
  apply_arg(o);
  if (o.perm.empty()) throw UsageError("--perm or --arg is required");
  const Permutation perm = parse_permutation(o.perm);
  const auto colours = parse_colours(o.colours);
  auto coloured = [&](int scope_k) {
    try {
      return ColouredPermutation::with_tail_scope(perm, scope_k, o.lambda, colours);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("invalid coloured permutation: ") + e.what());
    }
  };
  json out{{"map", o.map}, {"k", o.k}, {"lambda", o.lambda}, {"inverse", o.inverse}};

  if (o.inverse) {
    const auto q = coloured(o.map == "theta" ? o.k - 1 : o.k);
    out["image"] = coloured_json(q);
    out["preimages"] = preimages_json(o.map, q, o.k);
    return out;
  }

  if (o.map == "theta" || o.map == "eta") {
    if (o.index.has_value() == o.colour.has_value()) throw UsageError("give exactly one of --index and --colour");
  }
  ColouredPermutation image;
  if (o.map == "theta") {
    if (o.index) {
      image = euler::theta(euler::IndexArg{*o.index, coloured(o.k)}, o.k);
    } else {
      image = euler::theta(euler::ColourArg{*o.colour, coloured(o.k - 1)}, o.k);
    }
  } else if (o.map == "eta") {
    const int n = o.n.value_or(perm.size() + (o.index ? 1 : 2));
    if (o.index) {
      image = euler::eta(euler::IndexArg{*o.index, coloured(o.k)}, o.k, n);
    } else {
      image = euler::eta(euler::ColourArg{*o.colour, coloured(o.k - 1)}, o.k, n);
    }
  } else if (o.map == "zeta1") {
    if (!o.index) throw UsageError("zeta1 needs --index");
    image = euler::zeta1({*o.index, o.colour.value_or(1), coloured(o.k)}, o.k);
  } else {
    if (!o.index || !o.colour) throw UsageError("zeta2 needs --index and --colour");
    image = euler::zeta2({*o.colour, *o.index, coloured(o.k)}, o.k);
  }
  if (o.index) out["index"] = *o.index;
  if (o.colour) out["colour"] = *o.colour;
  out["image"] = coloured_json(image);
  out["preimages"] = preimages_json(o.map, image, o.k);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of block-descending derangements and coloured difference tables", "derange"};
  app.require_subcommand(1);
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "Bypass the result cache");

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Count D_j(a), D*_j(a), D^_j(a) or the block-sorted preimage");
  count_cmd->add_option("--composition", count.composition, "Block lengths, e.g. 4,2")->required();
  count_cmd->add_option("--mode", count.mode)->check(CLI::IsMember({"Dj", "Dstar", "Dhat", "preimage"}));
  count_cmd->add_option("--method", count.method)
      ->check(CLI::IsMember({"brute", "genfunc", "factorial", "derangement-basis"}));
  count_cmd->add_option("--j", count.j, "Number of leading blocks (default: all)");

  std::string series_comp;
  int series_j = -1;
  auto* series_cmd = app.add_subcommand("series", "Coefficient of x^a in the generating function of D_j");
  series_cmd->add_option("--composition", series_comp)->required();
  series_cmd->add_option("--j", series_j, "Number of (1 + x_i) factors (default: all)");

  int lamfak_n = -1;
  std::string lamfak_lambda = "symbolic";
  std::string lamfak_comp;
  std::string lamfak_method = "recurrence";
  auto* lamfak_cmd = app.add_subcommand("lamfak", "Lambda-factorial f_lambda(n), or the lambda sum for a composition");
  lamfak_cmd->add_option("--n", lamfak_n);
  lamfak_cmd->add_option("--composition", lamfak_comp);
  lamfak_cmd->add_option("--lambda", lamfak_lambda, "Integer, or 'symbolic' for coefficients");
  lamfak_cmd->add_option("--method", lamfak_method)->check(CLI::IsMember({"recurrence", "truncexp"}));

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Difference table e^k_n(lambda) or d^k_n(lambda)");
  table_cmd->add_option("--n-max", table.n_max);
  table_cmd->add_option("--lambda", table.lambda, "Integer, or 'symbolic'");
  table_cmd->add_option("--kind", table.kind)->check(CLI::IsMember({"e", "d"}));
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"json", "csv", "text", "bfile"}));

  BijectionOptions bij;
  auto* bij_cmd = app.add_subcommand("bijection", "Apply or invert theta, eta, zeta1, zeta2");
  bij_cmd->add_option("--map", bij.map)->required()->check(CLI::IsMember({"theta", "eta", "zeta1", "zeta2"}));
  bij_cmd->add_option("--k", bij.k)->required();
  bij_cmd->add_option("--n", bij.n);
  bij_cmd->add_option("--lambda", bij.lambda);
  bij_cmd->add_option("--index", bij.index);
  bij_cmd->add_option("--colour", bij.colour);
  bij_cmd->add_option("--perm", bij.perm, "Word such as 542361, or comma separated");
  bij_cmd->add_option("--arg", bij.arg, "Compact argument, e.g. 2/213 or 3/2/213/3:2");
  bij_cmd->add_option("--colours", bij.colours, "Essential colours as pos:colour,...");
  bij_cmd->add_flag("--inverse", bij.inverse);

  std::string suite;
  int verify_n_max = 6;
  std::optional<int> verify_n;
  auto* verify_cmd = app.add_subcommand("verify", "Run self-check suites");
  verify_cmd->add_option("suite", suite, "all, or one of perm series counting lambda euler correlation")->required();
  verify_cmd->add_option("--n-max", verify_n_max);
  verify_cmd->add_option("--n", verify_n, "correlation only: report every pair for this n");

  std::vector<std::string> argv_storage{"derange"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Session session(!no_cache, err);
  try {
    if (*count_cmd) {
      out << run_count(count, session).dump() << '\n';
    } else if (*series_cmd) {
      const Composition a = parse_composition(series_comp);
      const int j = series_j < 0 ? a.blocks() : series_j;
      if (j > a.blocks()) throw UsageError("--j must lie in [0, k]");
      const json params{{"composition", parts_json(a)}, {"j", j}};
      out << session.cached("series", params, [&] {
        return json{{"a", parts_json(a)}, {"j", j}, {"coefficient", to_decimal(series::coeff_Dj(a, j))}};
      }).dump() << '\n';
    } else if (*lamfak_cmd) {
      if ((lamfak_n >= 0) == !lamfak_comp.empty()) throw UsageError("give exactly one of --n and --composition");
      const std::optional<int> lam =
          lamfak_lambda == "symbolic" ? std::nullopt : std::optional<int>(parse_int(lamfak_lambda, "lambda"));
      const json params{{"n", lamfak_n}, {"composition", lamfak_comp}, {"lambda", lamfak_lambda},
                        {"method", lamfak_method}};
      out << session.cached("lamfak", params, [&] {
        json result;
        LambdaPolynomial p;
        if (lamfak_n >= 0) {
          p = lamfak_method == "truncexp" ? lambda::lambda_factorial_truncexp(lamfak_n)
                                          : lambda::lambda_factorial(lamfak_n);
          result["n"] = lamfak_n;
        } else {
          const Composition a = parse_composition(lamfak_comp);
          p = lambda::lamfak_rhs(a);
          result["composition"] = parts_json(a);
        }
        if (lam) {
          result["lambda"] = std::to_string(*lam);
          result["value"] = to_decimal(p.evaluate(*lam));
        } else {
          result["coefficients"] = p.to_strings();
          result["degree"] = p.degree();
        }
        return result;
      }).dump() << '\n';
    } else if (*table_cmd) {
      emit_table(table, run_table(table, session), out);
    } else if (*bij_cmd) {
      if (bij.lambda < 1) throw UsageError("--lambda must be at least 1 for the bijections");
      out << run_bijection(bij).dump() << '\n';
    } else if (*verify_cmd) {
      if (verify_n) {
        if (suite != "correlation") throw UsageError("--n applies to 'verify correlation' only");
        if (*verify_n < 1) throw UsageError("--n must be positive");
        bool passed = false;
        out << correlation_pairs(*verify_n, passed).dump() << '\n';
        return passed ? kExitOk : kExitVerifyFailed;
      }
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
        names = {suite};
      } else {
        throw UsageError("unknown suite '" + suite + "'");
      }
      json reports = json::array();
      bool passed = true;
      std::size_t total = 0;
      std::size_t failed = 0;
      for (const auto& name : names) {
        const auto report = run_suite(name, verify_n_max);
        passed = passed && report.passed();
        total += report.cases.size();
        failed += report.count(CaseStatus::fail);
        reports.push_back(report.to_json());
      }
      out << json{{"n_max", verify_n_max}, {"suites", reports}, {"summary", {{"total", total}, {"fail", failed}}},
                  {"passed", passed}}
                 .dump()
          << '\n';
      return passed ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace derange::cli
