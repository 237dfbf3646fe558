#include "starconf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "starconf/certify.hpp"
#include "starconf/classifier.hpp"
#include "starconf/membership.hpp"
#include "starconf/poly_io.hpp"
#include "starconf/selftest.hpp"
#include "starconf/star.hpp"

namespace starconf {

std::uint64_t default_prime_from_env() {
  const char* env = std::getenv("STAR_PRIME");
  if (env == nullptr || *env == '\0') return kDefaultPrime;
  std::size_t pos = 0;
  unsigned long long p = 0;
  try {
    p = std::stoull(env, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("STAR_PRIME is not a number: ") + env);
  }
  if (pos != std::string(env).size()) throw std::invalid_argument(std::string("STAR_PRIME is not a number: ") + env);
  return p;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, int n, int l, int r, int d) {
  std::uint64_t h = splitmix64(base);
  for (int v : {n, l, r, d}) h = splitmix64(h ^ static_cast<std::uint64_t>(v));
  return h;
}

namespace {

/// Thrown by subcommands for semantic input errors (exit code 2).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  RunConfig run;
  std::string field_text = "prime";
  std::string strategy_text = "macaulay";
  std::string format = "json";
  int n = 0, l = 0, r = 0, d = 0;
  int tmax = -1;
  int nmax = 0, dmax = 0, lspan = 6;
  bool json = false;
  bool certify = false;
  bool random = false;
  std::string poly_file, forms_file, save_poly, save_forms;
};

void add_field_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--prime", o.run.prime, "prime modulus for the finite field");
  cmd->add_option("--field", o.field_text, "prime | rational")->check(CLI::IsMember({"prime", "rational", "PrimeField", "Rational"}));
}

void apply_field(Options& o) {
  o.run.field_kind = field_kind_from_string(o.field_text);
  o.run.field().validate();
}

/// Writes to --output when given, otherwise to `out`.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.run.output_path) {
    std::ofstream f(*o.run.output_path);
    if (!f) throw UsageError("cannot open output file " + *o.run.output_path);
    f << text;
  } else {
    out << text;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// ---- classify ----

int cmd_classify(const Options& o, std::ostream& out) {
  const Classification c = classify(o.n, o.l, o.r, o.d);
  if (o.json) {
    out << to_json(c).dump(2) << "\n";
    return 0;
  }
  out << "(n,l,r,d) = (" << o.n << "," << o.l << "," << o.r << "," << o.d << ")\n";
  out << "verdict: " << c.verdict_text() << "\n";
  out << "case:    " << c.case_label << "\n";
  if (c.bound_value) out << "bound:   " << *c.bound_value << "\n";
  return 0;
}

// ---- hilbert ----

template <ExactField F>
int hilbert_impl(const F& field, const Options& o, std::ostream& out) {
  const int r = o.r > 0 ? o.r : o.l - o.n + 1;
  if (r < 1 || r > o.l) throw UsageError("hilbert: need 1 <= r <= l");
  const int tmax = o.tmax >= 0 ? o.tmax : o.l;
  Rng rng(o.run.seed);
  const auto set = random_general_forms(field, o.n, o.l, rng);
  const auto gens = star_generators(set, r);
  const bool points = o.l - r + 1 == o.n;

  bool all_match = true;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream text;
  text << std::left << std::setw(6) << "t" << std::setw(12) << "HF" << std::setw(12) << "expected" << "MATCH\n";
  for (int t = 0; t <= tmax; ++t) {
    const std::size_t hf = hilbert_function(field, set.nvars(), gens, t);
    nlohmann::ordered_json row{{"t", t}, {"hf", hf}};
    text << std::setw(6) << t << std::setw(12) << hf;
    if (points) {
      const auto expected = expected_hf(o.n, o.l, t);
      const bool match = static_cast<std::int64_t>(hf) == expected;
      all_match = all_match && match;
      row["expected"] = expected;
      row["match"] = match;
      text << std::setw(12) << expected << (match ? "yes" : "NO") << "\n";
    } else {
      row["expected"] = nullptr;
      row["match"] = nullptr;
      text << std::setw(12) << "-" << "-\n";
    }
    rows.push_back(std::move(row));
  }
  if (o.json) {
    nlohmann::ordered_json j{{"n", o.n}, {"l", o.l}, {"r", r}, {"seed", o.run.seed}, {"rows", rows}};
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return all_match ? 0 : 1;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.l < o.n) throw UsageError("hilbert: need 1 <= n <= l");
  if (o.run.field_kind == FieldKind::PrimeField) return hilbert_impl(PrimeField(o.run.prime), o, out);
  return hilbert_impl(RationalField{}, o, out);
}

// ---- certify ----

int cmd_certify(const Options& o, std::ostream& out) {
  const bool experimental = o.l > 0 || o.r > 0;
  Certificate cert;
  if (experimental) {
    if (o.l <= 0 || o.r <= 0) throw UsageError("certify: --l and --r must be given together");
    cert = experimental_certify({o.n, o.l, o.r, o.d}, o.run.field(), o.run.seed, o.run.retries);
  } else {
    cert = certify_tuple(o.n, o.d, strategy_from_string(o.strategy_text), o.run.field(), o.run.seed, o.run.retries);
  }
  emit(o, out, to_json(cert).dump(2) + "\n");
  if (o.run.output_path) out << "verdict: " << to_string(cert.verdict) << "\n";
  return cert.verdict == Verdict::Certified ? 0 : 1;
}

// ---- decompose ----

template <ExactField F>
int decompose_impl(const F& field, const Options& o, std::ostream& out) {
  MultiPoly<F> target(field, 1, 0);
  std::vector<MultiPoly<F>> forms;
  int r = o.r;

  if (o.random) {
    if (o.n < 1 || o.l < 1 || o.r < 1 || o.d < 1) throw UsageError("decompose --random: --n --l --r --d must be positive");
    if (o.r > o.l) throw UsageError("decompose: r exceeds the number of forms");
    if (o.r > o.d) throw UsageError("decompose: r exceeds the degree");
    Rng rng(o.run.seed);
    const auto set = random_general_forms(field, o.n, o.l, rng);
    const auto sel = random_m_selection(set, o.r, o.d, rng);
    Decomposition<F> planted{set.forms, o.r, sel.sigmas, sel.m};
    target = planted.reconstruct();
    forms = set.forms;
    if (!o.save_poly.empty()) std::ofstream(o.save_poly) << format_poly(target) << "\n";
    if (!o.save_forms.empty()) {
      std::ofstream f(o.save_forms);
      for (const auto& L : forms) f << format_poly(L) << "\n";
    }
  } else {
    if (o.poly_file.empty() || o.forms_file.empty()) throw UsageError("decompose: need --poly and --forms, or --random");
    if (r < 1) throw UsageError("decompose: --r must be positive");
    std::istringstream poly_in(read_file(o.poly_file)), forms_in(read_file(o.forms_file));
    const auto poly_lines = read_poly_lines(poly_in);
    const auto form_lines = read_poly_lines(forms_in);
    if (poly_lines.size() != 1) throw ParseError("decompose: the polynomial file must hold exactly one polynomial");
    if (form_lines.empty()) throw ParseError("decompose: the forms file is empty");
    const ParsedPoly pf = parse_poly_text(poly_lines.front());
    std::vector<ParsedPoly> pl;
    int max_index = pf.max_index();
    for (const auto& line : form_lines) {
      pl.push_back(parse_poly_text(line));
      max_index = std::max(max_index, pl.back().max_index());
    }
    const int nvars = o.n > 0 ? o.n + 1 : std::max(max_index + 1, 1);
    int degree = 0;
    if (!pf.terms.empty()) degree = pf.terms.front().degree();
    target = to_poly(field, pf, nvars, degree);
    for (const auto& p : pl) forms.push_back(to_poly(field, p, nvars, 1));
    for (const auto& L : forms) {
      if (L.degree() != 1 || L.is_zero()) throw ParseError("decompose: every line of the forms file must be a nonzero linear form");
    }
    if (r > static_cast<int>(forms.size())) throw UsageError("decompose: r exceeds the number of forms");
    if (r > target.degree()) throw UsageError("decompose: r exceeds the degree of F");
  }

  const auto dec = decompose(target, forms, r);
  if (!dec) {
    out << "not decomposable\n";
    return 1;
  }
  const bool verified = dec->reconstruct() == target;
  for (std::size_t s = 0; s < dec->sigmas.size(); ++s) {
    out << "M[" << subset_key(dec->sigmas[s]) << "] = " << format_poly(dec->m[s]) << "\n";
  }
  out << "reconstruction: " << (verified ? "verified" : "FAILED") << "\n";
  return verified ? 0 : 1;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  if (o.run.field_kind == FieldKind::PrimeField) return decompose_impl(PrimeField(o.run.prime), o, out);
  return decompose_impl(RationalField{}, o, out);
}

// ---- table ----

struct TableRow {
  Classification cls;
  std::optional<Certificate> cert;
};

std::vector<TableRow> build_table(const Options& o) {
  std::vector<TupleNLRD> tuples;
  for (int n = 1; n <= o.nmax; ++n) {
    for (int l = 1; l <= n + o.lspan; ++l) {
      for (int r = 1; r <= l; ++r) {
        for (int d = 1; d <= o.dmax; ++d) tuples.push_back({n, l, r, d});
      }
    }
  }
  std::vector<TableRow> rows(tuples.size());
  const Strategy strategy = strategy_from_string(o.strategy_text);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      const TupleNLRD& t = tuples[i];
      rows[i].cls = classify(t.n, t.l, t.r, t.d);
      const bool certifiable = o.certify && t.n >= 2 && t.l == t.n + 2 && t.r == 3 && t.d >= 3;
      if (certifiable) {
        rows[i].cert = certify_tuple(t.n, t.d, strategy, o.run.field(), derive_seed(o.run.seed, t.n, t.l, t.r, t.d), o.run.retries);
      }
    }
  };
  const int jobs = std::max(1, o.run.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

std::string render_json(const Options& o, const std::vector<TableRow>& rows) {
  nlohmann::ordered_json j;
  j["nmax"] = o.nmax;
  j["dmax"] = o.dmax;
  j["lspan"] = o.lspan;
  j["seed"] = o.run.seed;
  j["certify"] = o.certify;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json e = to_json(row.cls);
    if (o.certify) e["certificate"] = row.cert ? to_json(*row.cert) : nlohmann::ordered_json(nullptr);
    j["rows"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string render_csv(const Options& o, const std::vector<TableRow>& rows) {
  std::ostringstream s;
  s << "n,l,r,d,verdict,case,bound";
  if (o.certify) s << ",certificate";
  s << "\n";
  for (const auto& row : rows) {
    const auto& t = row.cls.tuple;
    s << t.n << "," << t.l << "," << t.r << "," << t.d << "," << row.cls.verdict_text() << "," << row.cls.case_label << ",";
    if (row.cls.bound_value) s << *row.cls.bound_value;
    if (o.certify) s << "," << (row.cert ? to_string(row.cert->verdict) : "");
    s << "\n";
  }
  return s.str();
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.nmax < 1 || o.dmax < 1) throw UsageError("table: --nmax and --dmax must be positive");
  if (o.lspan < 0) throw UsageError("table: --lspan must be >= 0");
  const auto rows = build_table(o);
  emit(o, out, o.format == "csv" ? render_csv(o, rows) : render_json(o, rows));
  return 0;
}

// ---- selftest ----

int cmd_selftest(const Options& o, std::ostream& out) {
  int failed = 0;
  const auto results = run_selftest(o.run.seed);
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
    if (!r.passed) ++failed;
  }
  out << "selftest: " << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.run.prime = default_prime_from_env();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Decompositions of forms along star configurations of hyperplanes", "starconf"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "classify a tuple (n, l, r, d)");
  classify_cmd->add_option("--n", o.n)->required();
  classify_cmd->add_option("--l", o.l)->required();
  classify_cmd->add_option("--r", o.r)->required();
  classify_cmd->add_option("--d", o.d)->required();
  classify_cmd->add_flag("--json", o.json);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of a star configuration");
  hilbert_cmd->add_option("--n", o.n)->required();
  hilbert_cmd->add_option("--l", o.l)->required();
  hilbert_cmd->add_option("--r", o.r, "defaults to l - n + 1 (points)");
  hilbert_cmd->add_option("--tmax", o.tmax, "defaults to l");
  hilbert_cmd->add_option("--seed", o.run.seed);
  hilbert_cmd->add_flag("--json", o.json);
  add_field_options(hilbert_cmd, o);

  auto* certify_cmd = app.add_subcommand("certify", "certify a tuple (n, n+2, 3, d) by a rank computation");
  certify_cmd->add_option("--n", o.n)->required();
  certify_cmd->add_option("--d", o.d)->required();
  certify_cmd->add_option("--strategy", o.strategy_text)
      ->check(CLI::IsMember({"macaulay", "evaluation", "MacaulayRank", "EvaluationMatrix"}));
  certify_cmd->add_option("--seed", o.run.seed);
  certify_cmd->add_option("--retries", o.run.retries);
  certify_cmd->add_option("--output", o.run.output_path);
  certify_cmd->add_option("--l", o.l, "experimental: any l, with random M");
  certify_cmd->add_option("--r", o.r, "experimental: any r, with random M");
  add_field_options(certify_cmd, o);

  auto* decompose_cmd = app.add_subcommand("decompose", "write F as sum L_sigma M_sigma");
  decompose_cmd->add_option("--poly", o.poly_file, "file holding F");
  decompose_cmd->add_option("--forms", o.forms_file, "file with one linear form per line");
  decompose_cmd->add_option("--r", o.r);
  decompose_cmd->add_flag("--random", o.random, "plant a random decomposable F");
  decompose_cmd->add_option("--n", o.n);
  decompose_cmd->add_option("--l", o.l);
  decompose_cmd->add_option("--d", o.d);
  decompose_cmd->add_option("--seed", o.run.seed);
  decompose_cmd->add_option("--save-poly", o.save_poly);
  decompose_cmd->add_option("--save-forms", o.save_forms);
  add_field_options(decompose_cmd, o);

  auto* table_cmd = app.add_subcommand("table", "classification table over a grid");
  table_cmd->add_option("--nmax", o.nmax)->required();
  table_cmd->add_option("--dmax", o.dmax)->required();
  table_cmd->add_option("--lspan", o.lspan, "l ranges over 1..n+lspan");
  table_cmd->add_flag("--certify", o.certify, "certify the (n, n+2, 3, d) rows");
  table_cmd->add_option("--strategy", o.strategy_text)
      ->check(CLI::IsMember({"macaulay", "evaluation", "MacaulayRank", "EvaluationMatrix"}));
  table_cmd->add_option("--jobs", o.run.jobs)->check(CLI::PositiveNumber);
  table_cmd->add_option("--seed", o.run.seed);
  table_cmd->add_option("--retries", o.run.retries);
  table_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  table_cmd->add_option("--output", o.run.output_path);
  add_field_options(table_cmd, o);

  auto* selftest_cmd = app.add_subcommand("selftest", "run quick randomized self checks");
  selftest_cmd->add_option("--seed", o.run.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_field(o);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (hilbert_cmd->parsed()) return cmd_hilbert(o, out);
    if (certify_cmd->parsed()) return cmd_certify(o, out);
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (table_cmd->parsed()) return cmd_table(o, out);
    if (selftest_cmd->parsed()) return cmd_selftest(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GeneralPositionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace starconf
