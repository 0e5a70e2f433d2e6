// Command-line front end: verify, rhom, act, twist, resolve, fixtures.
//
// Exit status: 0 success, 1 a check failed, 2 bad arguments or expressions.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gentle/gentle.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* s = std::getenv("GENTLE_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError(std::string("GENTLE_SEED is not an unsigned integer: ") + s);
    }
  }
  return 0;
}

void print_json(const gentle::Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_verify(bool all, const std::vector<std::string>& ids, const gentle::CheckParams& params, bool json,
               unsigned jobs, bool timing) {
  using namespace gentle;
  if (all == !ids.empty()) throw UsageError("verify needs exactly one of --all or --check");
  std::vector<std::string> run;
  std::vector<std::string> skipped;
  if (all) {
    run = applicable_checks(params.mu);
    for (const auto& c : check_registry())
      if (params.mu && !applies(c, *params.mu)) skipped.push_back(c.id);
  } else {
    for (const auto& id : ids) {
      try {
        const auto& spec = find_check(id);
        if (params.mu && !applies(spec, *params.mu))
          throw UsageError(id + " applies to mu in " + std::to_string(spec.mu_lo) + ".." + std::to_string(spec.mu_hi));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      run.push_back(id);
    }
  }
  std::vector<CheckReport> reports;
  try {
    reports = run_checks(run, params, jobs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.status == CheckStatus::pass;
  if (json) {
    Json doc = report_document(reports, params, timing);
    doc["skipped"] = skipped;
    print_json(doc);
  } else {
    for (const auto& r : reports) {
      std::string status = to_string(r.status);
      for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      std::cout << status << "  " << r.id << "  (" << r.anchor << ")";
      if (timing) std::cout << "  " << r.wall_seconds << "s";
      std::cout << "\n";
      if (r.status != CheckStatus::pass) std::cout << "  " << r.data.dump() << "\n";
    }
    for (const auto& id : skipped) std::cout << "SKIP  " << id << "  (not defined at mu=" << *params.mu << ")\n";
  }
  return ok ? 0 : kExitFail;
}

int cmd_rhom(int mu, const std::string& x, const std::string& y, bool json) {
  using namespace gentle;
  const GradedDims g = rhom_dims(parse_object(x, mu), parse_object(y, mu));
  if (json) {
    Json doc;
    doc["schema"] = kJsonSchema;
    doc["rhom"] = to_json(g);
    print_json(doc);
  } else {
    std::cout << to_string(g) << "\n";
  }
  return 0;
}

int cmd_act(int mu, const std::string& word, const std::string& shift_text, const std::string& collection,
            bool print_table, bool json) {
  using namespace gentle;
  GroupWord w;
  try {
    w.letters = parse_braid_word(word);
    if (!shift_text.empty()) w.shifts = parse_shift_vector(shift_text);
    w.validate(mu);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  const auto objects = parse_collection(collection, mu);
  const ExcCollection start = make_collection(mu, objects, collection, collection == "EP" || collection.rfind("Eprime", 0) == 0);
  const ExcCollection e = act(start, w);
  const Verdict exc = is_exceptional_collection(e);
  const Verdict strong = is_strong(e);
  if (json) {
    Json doc;
    doc["schema"] = kJsonSchema;
    doc["provenance"] = e.provenance;
    Json objs = Json::array();
    for (const auto& x : e.objects) objs.push_back(to_json(x));
    doc["objects"] = std::move(objs);
    doc["exceptional"] = exc.holds;
    doc["strong"] = strong.holds;
    if (print_table) doc["rhom"] = to_json(rhom_table(e));
    print_json(doc);
    return 0;
  }
  std::cout << e.provenance << "\n";
  for (std::size_t k = 0; k < e.size(); ++k) {
    std::cout << "E" << k + 1 << ":\n" << format_complex(e.objects[k]);
  }
  std::cout << "exceptional: " << (exc.holds ? "yes" : "no (" + exc.witness + ")") << "\n";
  std::cout << "strong: " << (strong.holds ? "yes" : "no (" + strong.witness + ")") << "\n";
  if (print_table) std::cout << "RHom(E_i, E_j):\n" << format_table(rhom_table(e));
  return 0;
}

int cmd_twist(int mu, const std::string& s, int k, const std::string& x, bool json) {
  using namespace gentle;
  const ProjComplex sc = parse_object(s, mu);
  if (sc.is_zero()) throw ParseError("twist by the zero object", 0);
  const ProjComplex out = twist_power(sc, k, parse_object(x, mu));
  if (json) {
    Json doc;
    doc["schema"] = kJsonSchema;
    doc["complex"] = to_json(out);
    print_json(doc);
  } else {
    std::cout << format_complex(out);
  }
  return 0;
}

int cmd_resolve(int mu, const std::string& m, bool json) {
  using namespace gentle;
  const ProjComplex out = minimize(parse_object(m, mu));
  if (json) {
    Json doc;
    doc["schema"] = kJsonSchema;
    doc["complex"] = to_json(out);
    print_json(doc);
  } else {
    std::cout << format_complex(out);
  }
  return 0;
}

int cmd_selfcheck() {
  bool ok = true;
  for (const auto& line : gentle::fixtures_selfcheck(gentle::load_fixtures())) {
    std::cout << (line.ok ? "ok    " : "DIFF  ") << line.fixture << "  " << line.item << "  " << line.detail << "\n";
    ok = ok && line.ok;
  }
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the derived category of the doubled A_mu gentle algebra"};
  app.require_subcommand(1);

  int mu = 4;
  bool json = false;

  auto* verify = app.add_subcommand("verify", "run named checks");
  bool all = false;
  std::vector<std::string> ids;
  std::optional<int> v_mu, v_k, v_i;
  std::optional<std::uint64_t> v_seed;
  unsigned jobs = 0;
  bool timing = false;
  verify->add_flag("--all", all, "run every check (restricted to --mu when given)");
  verify->add_option("--check", ids, "check id (repeatable)");
  verify->add_option("--mu", v_mu, "number of vertices")->check(CLI::PositiveNumber);
  verify->add_option("--k", v_k, "twist exponent");
  verify->add_option("--i", v_i, "index parameter");
  verify->add_option("--seed", v_seed, "random seed (default: $GENTLE_SEED or 0)");
  verify->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");
  verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--timing", timing, "include wall times");

  auto* rhom = app.add_subcommand("rhom", "graded dimensions of RHom(X, Y)");
  std::string x, y;
  rhom->add_option("--mu", mu, "number of vertices")->required()->check(CLI::PositiveNumber);
  rhom->add_option("X", x)->required();
  rhom->add_option("Y", y)->required();
  rhom->add_flag("--json", json);

  auto* act = app.add_subcommand("act", "act on a collection by a braid word and shifts");
  std::string word, shift_text, collection = "EP";
  bool print_table = false;
  act->add_option("--mu", mu, "number of vertices")->required()->check(CLI::PositiveNumber);
  act->add_option("--word", word, "braid word, e.g. \"s1 s2^-1\"")->required();
  act->add_option("--shift", shift_text, "shift vector, e.g. 0,1,0,0");
  act->add_option("--collection", collection, "EP, Eprime(k) or a tuple of objects");
  act->add_flag("--print-table", print_table, "print the RHom table");
  act->add_flag("--json", json);

  auto* tw = app.add_subcommand("twist", "apply T_S^k to X");
  std::string s_text, x_text;
  int k = 1;
  tw->add_option("--mu", mu, "number of vertices")->required()->check(CLI::PositiveNumber);
  tw->add_option("S", s_text)->required();
  tw->add_option("k", k)->required();
  tw->add_option("X", x_text)->required();
  tw->add_flag("--json", json);

  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution of a module or complex");
  std::string m_text;
  resolve->add_option("--mu", mu, "number of vertices")->required()->check(CLI::PositiveNumber);
  resolve->add_option("M", m_text)->required();
  resolve->add_flag("--json", json);

  auto* fixtures = app.add_subcommand("fixtures", "stored fixture data");
  auto* selfcheck = fixtures->add_subcommand("selfcheck", "recompute derivable fixture data and diff");
  fixtures->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      gentle::CheckParams params{v_mu, v_k, v_i, v_seed ? *v_seed : default_seed()};
      return cmd_verify(all, ids, params, json, jobs, timing);
    }
    if (rhom->parsed()) return cmd_rhom(mu, x, y, json);
    if (act->parsed()) return cmd_act(mu, word, shift_text, collection, print_table, json);
    if (tw->parsed()) return cmd_twist(mu, s_text, k, x_text, json);
    if (resolve->parsed()) return cmd_resolve(mu, m_text, json);
    if (selfcheck->parsed()) return cmd_selfcheck();
  } catch (const gentle::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
