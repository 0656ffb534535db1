// Command-line front end: bounds and family classification, bound tables,
// explicit constructions, code transforms, file verification, and the
// exhaustive S_q(k,d) search.
//
// Exit codes: 0 success, 1 a requested check failed, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "codebounds/codebounds.hpp"

namespace cb = codebounds;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

std::string render_code(const cb::Code& c, bool as_json) {
  return as_json ? cb::code_to_json(c).dump(2) + "\n" : cb::code_to_text(c);
}

cb::Setting parse_setting(const std::string& s) {
  if (s == "systematic") return cb::Setting::Systematic;
  if (s == "nonlinear") return cb::Setting::Nonlinear;
  if (s == "linear") return cb::Setting::Linear;
  throw std::invalid_argument("unknown setting \"" + s + "\" (systematic|nonlinear|linear)");
}

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer \"" + item + "\" in list");
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct BoundsOpts {
  long long q = 2;
  long long k = -1;
  long long M = -1;
  long long d = -1;
  std::string setting = "systematic";
};

int run_bounds(const BoundsOpts& o) {
  const cb::Setting setting = parse_setting(o.setting);
  long long k_or_M = 0;
  if (setting == cb::Setting::Nonlinear) {
    if (o.M >= 0 && o.k >= 0) throw std::invalid_argument("give either --k or --M, not both");
    if (o.M >= 0)
      k_or_M = o.M;
    else if (o.k >= 0)
      k_or_M = cb::pow_ll(o.q, o.k);
    else
      throw std::invalid_argument("nonlinear setting needs --M (or --k for M = q^k)");
  } else {
    if (o.M >= 0)
      throw std::invalid_argument("--M is only meaningful with --setting nonlinear");
    if (o.k < 0) throw std::invalid_argument("setting \"" + o.setting + "\" needs --k");
    k_or_M = o.k;
  }

  const cb::BoundSet bs = cb::lower_bounds(o.q, setting, k_or_M, o.d);
  std::cout << "parameters: q=" << bs.q << " d=" << bs.d << " k=" << bs.k << " M=" << bs.M
            << " setting=" << cb::setting_name(setting) << "\n";
  if (bs.verdict) {
    std::cout << "family: " << cb::holds_name(bs.verdict->holds);
    if (bs.verdict->holds == cb::Holds::Proven) std::cout << " via " << bs.verdict->theorem;
    std::cout << "\n  " << bs.verdict->condition << "\n";
  }
  std::cout << "bounds (largest first, * = applicable):\n";
  for (const cb::BoundReport& r : bs.reports) {
    std::cout << (r.applicable ? "  * " : "    ") << std::setw(6) << r.value << "  " << std::left
              << std::setw(33) << cb::bound_source_name(r.source) << std::right << r.condition
              << "\n";
  }
  const cb::BoundReport& best = bs.best();
  std::cout << "best applicable lower bound: " << best.value << " ("
            << cb::bound_source_name(best.source) << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::string input = "-";
  long long k = -1;
  long long expect_n = -1;
  long long expect_m = -1;
  long long expect_d = -1;
  std::string expect_systematic;  // "", "yes", "no"
  std::string expect_griesmer;    // "", "violates", "meets", "exceeds"
};

int run_verify(const VerifyOpts& o) {
  const cb::Code code = cb::parse_code(read_input(o.input));
  if (code.size() < 2)
    throw std::invalid_argument("minimum distance is undefined for a single-word code");
  const int d = cb::minimum_distance(code);

  std::cout << "source: " << (o.input.empty() || o.input == "-" ? "(stdin)" : o.input) << "\n";
  std::cout << "parameters: q=" << code.q() << " n=" << code.n() << " M=" << code.size()
            << " d=" << d << "\n";

  long long k = o.k;
  if (k >= 0) {
    std::cout << "dimension: k=" << k << " (given)\n";
  } else {
    const long long detected = cb::floor_log(code.q(), static_cast<long long>(code.size()));
    if (cb::pow_ll(code.q(), detected) == static_cast<long long>(code.size())) {
      k = detected;
      std::cout << "dimension: k=" << k << " (detected from M = q^k)\n";
    } else {
      std::cout << "dimension: M=" << code.size() << " is not a power of q=" << code.q()
                << "; no systematic dimension\n";
    }
  }

  bool systematic = false;
  if (k >= 0) {
    if (k > code.n()) throw std::invalid_argument("--k exceeds the code length");
    const cb::SystematicCheck chk = cb::check_systematic(code, static_cast<int>(k));
    systematic = chk.ok;
    std::cout << "systematic check (k=" << k << "): ";
    if (chk.ok) {
      std::cout << "systematic\n";
    } else {
      std::cout << "NOT systematic";
      if (chk.duplicate_message)
        std::cout << " (prefix " << cb::word_to_string(*chk.duplicate_message, code.q())
                  << " repeats)";
      else if (chk.missing_message)
        std::cout << " (message " << cb::word_to_string(*chk.missing_message, code.q())
                  << " is missing)";
      std::cout << "\n";
    }
  }

  std::string griesmer_verdict;
  if (k >= 1) {
    const long long g = cb::griesmer(code.q(), k, d);
    std::cout << "Griesmer: n=" << code.n();
    if (code.n() < g) {
      griesmer_verdict = "violates";
      std::cout << " < g_" << code.q() << "(" << k << "," << d << ")=" << g
                << " -> VIOLATES the Griesmer bound\n";
    } else if (code.n() == g) {
      griesmer_verdict = "meets";
      std::cout << " = g_" << code.q() << "(" << k << "," << d << ")=" << g
                << " -> meets the Griesmer bound with equality\n";
    } else {
      griesmer_verdict = "exceeds";
      std::cout << " > g_" << code.q() << "(" << k << "," << d << ")=" << g
                << " -> exceeds the Griesmer bound\n";
    }
  }

  int failures = 0;
  auto expect_num = [&](const char* name, long long expected, long long actual) {
    if (expected >= 0 && expected != actual) {
      std::cout << "EXPECT FAILED: " << name << "=" << actual << ", expected " << expected << "\n";
      ++failures;
    }
  };
  expect_num("n", o.expect_n, code.n());
  expect_num("M", o.expect_m, static_cast<long long>(code.size()));
  expect_num("d", o.expect_d, d);
  if (!o.expect_systematic.empty()) {
    const bool want = o.expect_systematic == "yes";
    if (k < 0 || systematic != want) {
      std::cout << "EXPECT FAILED: systematic="
                << (k < 0 ? "undetermined" : (systematic ? "yes" : "no")) << ", expected "
                << o.expect_systematic << "\n";
      ++failures;
    }
  }
  if (!o.expect_griesmer.empty() && o.expect_griesmer != griesmer_verdict) {
    std::cout << "EXPECT FAILED: griesmer=" << (griesmer_verdict.empty() ? "undetermined"
                                                                         : griesmer_verdict)
              << ", expected " << o.expect_griesmer << "\n";
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct TableOpts {
  long long q = 2;
  long long k_min = -1, k_max = -1;
  long long m_min = -1, m_max = -1;
  long long d_min = -1, d_max = -1;
  std::string setting = "systematic";
  std::string format = "csv";
  std::string output;
};

int run_table(const TableOpts& o) {
  const cb::Setting setting = parse_setting(o.setting);
  const bool by_M = o.m_min >= 0 || o.m_max >= 0;
  if (by_M && (o.k_min >= 0 || o.k_max >= 0))
    throw std::invalid_argument("give either a k-range or an M-range, not both");
  if (by_M && setting != cb::Setting::Nonlinear)
    throw std::invalid_argument("an M-range needs --setting nonlinear");
  if (o.d_min < 1 || o.d_max < o.d_min || o.d_max > 1024)
    throw std::invalid_argument("need 1 <= d-min <= d-max <= 1024");

  std::vector<long long> columns;
  if (by_M) {
    if (o.m_min < 2 || o.m_max < o.m_min || o.m_max > (1LL << 32))
      throw std::invalid_argument("need 2 <= m-min <= m-max <= 2^32");
    for (long long m = o.m_min; m <= o.m_max; ++m) columns.push_back(m);
  } else {
    if (o.k_min < 1 || o.k_max < o.k_min || o.k_max > 16)
      throw std::invalid_argument("need 1 <= k-min <= k-max <= 16");
    for (long long k = o.k_min; k <= o.k_max; ++k) columns.push_back(k);
  }
  const char* col_label = by_M ? "M" : "k";

  struct Cell {
    long long d, col, value;
    cb::BoundSource source;
  };
  std::vector<Cell> cells;
  for (long long d = o.d_min; d <= o.d_max; ++d)
    for (long long col : columns) {
      const cb::BoundReport best = cb::best_lower_bound(o.q, setting, col, d);
      cells.push_back({d, col, best.value, best.source});
    }

  static const cb::BoundSource kAllSources[] = {
      cb::BoundSource::Griesmer,     cb::BoundSource::BoundA,
      cb::BoundSource::BoundB,       cb::BoundSource::BoundC,
      cb::BoundSource::WeakGriesmer, cb::BoundSource::SingletonImprovedSystematic,
      cb::BoundSource::Plotkin,      cb::BoundSource::Singleton,
  };
  std::string legend;
  for (cb::BoundSource s : kAllSources) {
    if (!legend.empty()) legend += ", ";
    legend += std::string(1, cb::bound_source_letter(s)) + "=" + cb::bound_source_name(s);
  }

  std::ostringstream out;
  if (o.format == "csv") {
    out << "# best lower bounds on code length; q=" << o.q
        << ", setting=" << cb::setting_name(setting) << "\n";
    out << "# legend: " << legend << "\n";
    out << "d";
    for (long long col : columns) out << "," << col_label << "=" << col;
    out << "\n";
    std::size_t i = 0;
    for (long long d = o.d_min; d <= o.d_max; ++d) {
      out << d;
      for (std::size_t c = 0; c < columns.size(); ++c, ++i)
        out << "," << cells[i].value << " " << cb::bound_source_letter(cells[i].source);
      out << "\n";
    }
  } else if (o.format == "markdown") {
    out << "Best lower bounds on code length; q=" << o.q
        << ", setting=" << cb::setting_name(setting) << ".\n\n";
    out << "Legend: " << legend << ".\n\n";
    out << "| d |";
    for (long long col : columns) out << " " << col_label << "=" << col << " |";
    out << "\n|--:|";
    for (std::size_t c = 0; c < columns.size(); ++c) out << "--:|";
    out << "\n";
    std::size_t i = 0;
    for (long long d = o.d_min; d <= o.d_max; ++d) {
      out << "| " << d << " |";
      for (std::size_t c = 0; c < columns.size(); ++c, ++i)
        out << " " << cells[i].value << " " << cb::bound_source_letter(cells[i].source) << " |";
      out << "\n";
    }
  } else if (o.format == "json") {
    json j;
    j["q"] = o.q;
    j["setting"] = cb::setting_name(setting);
    j["d_min"] = o.d_min;
    j["d_max"] = o.d_max;
    j[by_M ? "m_min" : "k_min"] = columns.front();
    j[by_M ? "m_max" : "k_max"] = columns.back();
    json& legend_obj = j["legend"] = json::object();
    for (cb::BoundSource s : kAllSources)
      legend_obj[std::string(1, cb::bound_source_letter(s))] = cb::bound_source_name(s);
    json& arr = j["cells"] = json::array();
    for (const Cell& c : cells) {
      json cell;
      cell["d"] = c.d;
      cell[by_M ? "M" : "k"] = c.col;
      cell["value"] = c.value;
      cell["source"] = cb::bound_source_name(c.source);
      arr.push_back(std::move(cell));
    }
    out << j.dump(2) << "\n";
  } else {
    throw std::invalid_argument("unknown format \"" + o.format + "\" (csv|markdown|json)");
  }
  write_output(o.output, out.str());
  return 0;
}

// ---------------------------------------------------------------------------

struct ConstructOpts {
  std::string output;
  bool as_json = false;
  long long cyclic_n = -1;
  std::string cyclic_defset;
};

int run_construct_code(const cb::Code& code, const ConstructOpts& o) {
  write_output(o.output, render_code(code, o.as_json));
  return 0;
}

int run_construct_cyclic(const ConstructOpts& o) {
  if (o.cyclic_n < 1) throw std::invalid_argument("cyclic needs --n");
  std::set<int> defset;
  for (long long v : parse_int_list(o.cyclic_defset)) defset.insert(static_cast<int>(v));
  return run_construct_code(cb::cyclic_code(static_cast<int>(o.cyclic_n), defset), o);
}

// ---------------------------------------------------------------------------

struct TransformOpts {
  std::string input = "-";
  std::string output;
  bool as_json = false;
  long long coord = -1;  // 1-based on the command line
  long long k = -1;
  long long target = -1;
  long long times = -1;
  std::string with_file;
  std::string pairing;
};

cb::SystematicCode require_systematic(const cb::Code& code, long long k, const char* op) {
  if (k < 0) throw std::invalid_argument(std::string(op) + " needs --k (systematic dimension)");
  return cb::SystematicCode(code, static_cast<int>(k));
}

int run_transform(const std::string& op, const TransformOpts& o) {
  const cb::Code input = cb::parse_code(read_input(o.input));
  cb::Code result = input;

  if (op == "puncture") {
    if (o.coord < 1) throw std::invalid_argument("puncture needs --coord (1-based)");
    result = cb::puncture(input, static_cast<int>(o.coord) - 1);
    if (result.size() != input.size())
      std::cerr << "note: puncturing merged words, M dropped from " << input.size() << " to "
                << result.size() << "\n";
  } else if (op == "shorten") {
    if (o.coord < 1) throw std::invalid_argument("shorten needs --coord (1-based)");
    result = cb::shorten_systematic(require_systematic(input, o.k, "shorten"),
                                    static_cast<int>(o.coord) - 1)
                 .code();
  } else if (op == "reduce-d") {
    if (o.target < 1) throw std::invalid_argument("reduce-d needs --target");
    result = cb::reduce_distance(require_systematic(input, o.k, "reduce-d"),
                                 static_cast<int>(o.target))
                 .code();
  } else if (op == "extend-parity") {
    result = cb::extend_parity(input);
  } else if (op == "repeat") {
    if (o.times < 1) throw std::invalid_argument("repeat needs --t >= 1");
    result = cb::repeat(input, static_cast<int>(o.times));
  } else if (op == "concat") {
    if (o.with_file.empty()) throw std::invalid_argument("concat needs --with FILE");
    const cb::Code other = cb::parse_code(read_input(o.with_file));
    if (o.pairing.empty()) {
      result = cb::concat_paired(input, other);
    } else {
      std::vector<std::size_t> pairing;
      for (long long v : parse_int_list(o.pairing)) pairing.push_back(static_cast<std::size_t>(v));
      result = cb::concat_paired(input, other, pairing);
    }
  } else {
    throw std::invalid_argument("unknown transform \"" + op + "\"");
  }

  write_output(o.output, render_code(result, o.as_json));
  return 0;
}

// ---------------------------------------------------------------------------

struct SearchOpts {
  long long q = 2;
  long long k = -1;
  long long d = -1;
  double budget = -1;
  long long max_n = 0;
  long long threads = 1;
  std::string witness_out;
  bool stats = false;
};

int run_search(const SearchOpts& o) {
  double budget = o.budget;
  if (budget <= 0) {
    if (const char* env = std::getenv("CODEBOUNDS_SEARCH_BUDGET")) budget = std::atof(env);
    if (budget <= 0) budget = 30.0;
  }
  const cb::SearchOutcome outcome =
      cb::compute_S(static_cast<int>(o.q), static_cast<int>(o.k), o.d, budget,
                    static_cast<int>(o.max_n), static_cast<int>(o.threads));

  json j;
  j["q"] = outcome.q;
  j["k"] = outcome.k;
  j["d"] = outcome.d;
  j["status"] = cb::search_status_name(outcome.status);
  j["value"] = outcome.value;
  j["witness_length"] = outcome.witness_length ? json(*outcome.witness_length) : json(nullptr);
  j["witness"] = outcome.witness ? cb::code_to_json(*outcome.witness) : json(nullptr);
  if (o.stats) {
    j["nodes_explored"] = outcome.nodes_explored;
    j["budget_used_seconds"] = outcome.budget_used_seconds;
  }
  std::cout << j.dump(2) << "\n";

  if (!o.witness_out.empty() && outcome.witness)
    cb::write_code_file(o.witness_out, *outcome.witness);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds, constructions, transforms and exact searches for systematic codes"};
  app.require_subcommand(1);
  int rc = 0;

  // bounds
  BoundsOpts bounds_opts;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "evaluate every length lower bound for (q, k or M, d)");
  bounds_cmd->add_option("--q", bounds_opts.q, "alphabet size")->default_val(2);
  bounds_cmd->add_option("--k", bounds_opts.k, "dimension");
  bounds_cmd->add_option("--M", bounds_opts.M, "word count (nonlinear setting)");
  bounds_cmd->add_option("--d", bounds_opts.d, "minimum distance")->required();
  bounds_cmd->add_option("--setting", bounds_opts.setting, "systematic|nonlinear|linear")
      ->default_val("systematic");
  bounds_cmd->callback([&]() { rc = run_bounds(bounds_opts); });

  // verify
  VerifyOpts verify_opts;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "measure a code file and compare against the Griesmer value");
  verify_cmd->add_option("input", verify_opts.input, "code file (\"-\" = stdin)")->default_val("-");
  verify_cmd->add_option("--k", verify_opts.k, "systematic dimension to check");
  verify_cmd->add_option("--expect-n", verify_opts.expect_n, "fail unless n matches");
  verify_cmd->add_option("--expect-m", verify_opts.expect_m, "fail unless M matches");
  verify_cmd->add_option("--expect-d", verify_opts.expect_d, "fail unless d matches");
  verify_cmd->add_option("--expect-systematic", verify_opts.expect_systematic, "yes|no")
      ->check(CLI::IsMember({"yes", "no"}));
  verify_cmd
      ->add_option("--expect-griesmer", verify_opts.expect_griesmer, "violates|meets|exceeds")
      ->check(CLI::IsMember({"violates", "meets", "exceeds"}));
  verify_cmd->callback([&]() { rc = run_verify(verify_opts); });

  // table
  TableOpts table_opts;
  CLI::App* table_cmd = app.add_subcommand("table", "grid of best lower bounds with provenance");
  table_cmd->add_option("--q", table_opts.q, "alphabet size")->default_val(2);
  table_cmd->add_option("--k-min", table_opts.k_min, "first dimension column");
  table_cmd->add_option("--k-max", table_opts.k_max, "last dimension column");
  table_cmd->add_option("--m-min", table_opts.m_min, "first word-count column (nonlinear)");
  table_cmd->add_option("--m-max", table_opts.m_max, "last word-count column (nonlinear)");
  table_cmd->add_option("--d-min", table_opts.d_min, "first distance row")->required();
  table_cmd->add_option("--d-max", table_opts.d_max, "last distance row")->required();
  table_cmd->add_option("--setting", table_opts.setting, "systematic|nonlinear|linear")
      ->default_val("systematic");
  table_cmd->add_option("--format", table_opts.format, "csv|markdown|json")->default_val("csv");
  table_cmd->add_option("-o,--output", table_opts.output, "output file (default stdout)");
  table_cmd->callback([&]() { rc = run_table(table_opts); });

  // construct
  ConstructOpts construct_opts;
  CLI::App* construct_cmd = app.add_subcommand("construct", "emit an explicit code");
  construct_cmd->require_subcommand(1);
  auto add_construct_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", construct_opts.output, "output file (default stdout)");
    sub->add_flag("--json", construct_opts.as_json, "emit the JSON mirror format");
  };
  CLI::App* simplex_cmd =
      construct_cmd->add_subcommand("simplex15", "systematic [15,4,8] code, Griesmer-optimal");
  add_construct_common(simplex_cmd);
  simplex_cmd->callback(
      [&]() { rc = run_construct_code(cb::simplex_15_4_8().code(), construct_opts); });
  CLI::App* lev_cmd = construct_cmd->add_subcommand(
      "levenshtein-19-16-10", "(19,16,10) code from rotations of one word; beats g_2(4,10)");
  add_construct_common(lev_cmd);
  lev_cmd->callback(
      [&]() { rc = run_construct_code(cb::levenshtein_19_16_10(), construct_opts); });
  CLI::App* counter_cmd = construct_cmd->add_subcommand(
      "counterexample-34", "(34,2^4,18) systematic code; beats g_2(4,18)");
  add_construct_common(counter_cmd);
  counter_cmd->callback(
      [&]() { rc = run_construct_code(cb::systematic_counterexample_34().code(), construct_opts); });
  CLI::App* cyclic_cmd =
      construct_cmd->add_subcommand("cyclic", "binary cyclic code from a complete defining set");
  add_construct_common(cyclic_cmd);
  cyclic_cmd->add_option("--n", construct_opts.cyclic_n, "odd length")->required();
  cyclic_cmd->add_option("--defset", construct_opts.cyclic_defset,
                         "comma-separated residues mod n (may be empty)");
  cyclic_cmd->callback([&]() { rc = run_construct_cyclic(construct_opts); });

  // transform
  TransformOpts transform_opts;
  CLI::App* transform_cmd = app.add_subcommand("transform", "apply a code surgery to a file");
  transform_cmd->require_subcommand(1);
  std::string transform_op;
  auto add_transform_common = [&](CLI::App* sub, const std::string& name) {
    sub->add_option("input", transform_opts.input, "code file (\"-\" = stdin)")->default_val("-");
    sub->add_option("-o,--output", transform_opts.output, "output file (default stdout)");
    sub->add_flag("--json", transform_opts.as_json, "emit the JSON mirror format");
    sub->callback([&, name]() { rc = run_transform(name, transform_opts); });
  };
  CLI::App* puncture_cmd = transform_cmd->add_subcommand("puncture", "delete one coordinate");
  puncture_cmd->add_option("--coord", transform_opts.coord, "coordinate (1-based)")->required();
  add_transform_common(puncture_cmd, "puncture");
  CLI::App* shorten_cmd =
      transform_cmd->add_subcommand("shorten", "shorten at a systematic coordinate");
  shorten_cmd->add_option("--coord", transform_opts.coord, "systematic coordinate (1-based)")
      ->required();
  shorten_cmd->add_option("--k", transform_opts.k, "systematic dimension")->required();
  add_transform_common(shorten_cmd, "shorten");
  CLI::App* reduce_cmd = transform_cmd->add_subcommand(
      "reduce-d", "puncture non-systematic coordinates until the distance hits a target");
  reduce_cmd->add_option("--target", transform_opts.target, "target distance")->required();
  reduce_cmd->add_option("--k", transform_opts.k, "systematic dimension")->required();
  add_transform_common(reduce_cmd, "reduce-d");
  CLI::App* extend_cmd =
      transform_cmd->add_subcommand("extend-parity", "append an overall parity bit");
  add_transform_common(extend_cmd, "extend-parity");
  CLI::App* repeat_cmd = transform_cmd->add_subcommand("repeat", "repeat every word t times");
  repeat_cmd->add_option("--t", transform_opts.times, "repetition count")->required();
  add_transform_common(repeat_cmd, "repeat");
  CLI::App* concat_cmd =
      transform_cmd->add_subcommand("concat", "concatenate with a second code, word by word");
  concat_cmd->add_option("--with", transform_opts.with_file, "second code file")->required();
  concat_cmd->add_option("--pairing", transform_opts.pairing,
                         "comma-separated permutation of 0..M-1 (default: sorted order)");
  add_transform_common(concat_cmd, "concat");

  // search
  SearchOpts search_opts;
  CLI::App* search_cmd =
      app.add_subcommand("search", "exact S_q(k,d) by exhaustive search; JSON on stdout");
  search_cmd->add_option("--q", search_opts.q, "alphabet size")->default_val(2);
  search_cmd->add_option("--k", search_opts.k, "dimension")->required();
  search_cmd->add_option("--d", search_opts.d, "minimum distance")->required();
  search_cmd->add_option("--budget", search_opts.budget,
                         "wall-time budget in seconds (default: $CODEBOUNDS_SEARCH_BUDGET or 30)");
  search_cmd->add_option("--max-n", search_opts.max_n, "stop scanning above this length");
  search_cmd->add_option("--threads", search_opts.threads, "parallel subtree workers")
      ->default_val(1);
  search_cmd->add_option("--witness-out", search_opts.witness_out,
                         "write the witness code to this file");
  search_cmd->add_flag("--stats", search_opts.stats, "include node and timing statistics");
  search_cmd->callback([&]() { rc = run_search(search_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const cb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
