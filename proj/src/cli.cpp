#include "ctq/cli.hpp"

#include "ctq/frobenius.hpp"
#include "ctq/matrix_ball.hpp"
#include "ctq/matrix_io.hpp"
#include "ctq/quotient.hpp"
#include "ctq/tableau.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ctq {

using nlohmann::json;

namespace {

// Bad input: reported with status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json parts_json(const std::vector<int> &v) { return json(v); }

std::string label(const WeakComposition &a, const WeakComposition &b) {
  return "alpha=" + to_string(a) + " beta=" + to_string(b);
}

std::string label(const Partition &a, const Partition &b) {
  return "mu=" + to_string(a) + " nu=" + to_string(b);
}

void require_margins(const JobSpec &job) {
  if (job.alpha.length() == 0)
    throw UsageError("--alpha is required");
  if (job.beta.length() == 0)
    throw UsageError("--beta is required");
  if (job.alpha.sum() != job.beta.sum())
    throw UsageError("--alpha and --beta have different sums");
}

Partition as_partition(const WeakComposition &a, const char *flag) {
  try {
    return Partition(a.parts());
  } catch (const std::invalid_argument &) {
    throw UsageError(std::string(flag) +
                     ": expected positive weakly decreasing parts");
  }
}

std::string coeff_csv(const QPoly &h) {
  std::ostringstream os;
  os << "degree,coefficient\n";
  for (std::size_t d = 0; d < h.size(); ++d)
    os << d << ',' << h[d] << '\n';
  return os.str();
}

std::string dump(const json &j) { return j.dump() + "\n"; }

NonnegMatrix job_matrix(const JobSpec &job) {
  try {
    return parse_matrix(job.matrix);
  } catch (const std::exception &e) {
    throw UsageError(std::string("--matrix: ") + e.what());
  }
}

json tensor_terms(const TensorSymFunc &f) {
  json terms = json::array();
  for (const auto &[key, c] : f.terms) {
    json shapes = json::array();
    for (const auto &lambda : key)
      shapes.push_back(parts_json(lambda.parts()));
    terms.push_back({{"coeff", to_string(c)}, {"shapes", shapes}});
  }
  return terms;
}

DiagonalOrder::Tie parse_tie(const std::string &s) {
  if (s == "row")
    return DiagonalOrder::Tie::Row;
  if (s == "column")
    return DiagonalOrder::Tie::Column;
  throw UsageError("--tie: expected row or column");
}

RunResult cmd_hilbert(const JobSpec &job) {
  require_margins(job);
  QPoly h;
  if (job.method == "kostka")
    h = hilbert_kostka(job.alpha, job.beta);
  else if (job.method == "zigzag")
    h = hilbert_zigzag(job.alpha, job.beta);
  else if (job.method == "linear")
    h = hilbert_linear_algebra(job.alpha, job.beta);
  else
    throw UsageError("--method: expected kostka, zigzag or linear");
  if (job.csv)
    return {0, coeff_csv(h), ""};
  json j{{"alpha", parts_json(job.alpha.parts())},
         {"beta", parts_json(job.beta.parts())},
         {"method", job.method},
         {"coeffs", qpoly_to_json(h)}};
  return {0, dump(j), ""};
}

RunResult cmd_rsk(const JobSpec &job) {
  NonnegMatrix a = job_matrix(job);
  json steps = json::array();
  NonnegMatrix cur = a;
  while (!support(cur).empty()) {
    steps.push_back(matrix_to_json(cur));
    cur = mb(cur);
  }
  RskPair r = rsk(a);
  json j{{"P", tableau_to_json(r.p)},
         {"Q", tableau_to_json(r.q)},
         {"shape", parts_json(r.p.shape().parts())},
         {"zigzag", zigzag_number(a)},
         {"steps", steps}};
  return {0, dump(j), ""};
}

RunResult cmd_zigzag(const JobSpec &job) {
  NonnegMatrix a = job_matrix(job);
  json cells = json::array();
  for (auto [i, j] : zigzag_witness(a))
    cells.push_back({i + 1, j + 1});
  json j{{"zigzag", zigzag_number(a)},
         {"witness", cells},
         {"mb", matrix_to_json(mb(a))}};
  return {0, dump(j), ""};
}

RunResult cmd_standard_basis(const JobSpec &job) {
  require_margins(job);
  QuotientModel m = build_quotient(job.alpha, job.beta, parse_tie(job.tie));
  BigInt tables = count_contingency(job.alpha, job.beta);
  bool matches = m.standard == mb_monomials(job.alpha, job.beta) &&
                 BigInt(m.standard.size()) == tables;
  json monomials = json::array();
  for (const auto &x : m.standard)
    monomials.push_back(matrix_to_json(x.to_matrix()));
  json j{{"alpha", parts_json(job.alpha.parts())},
         {"beta", parts_json(job.beta.parts())},
         {"dimension", std::to_string(m.standard.size())},
         {"tables", to_string(tables)},
         {"hilbert", qpoly_to_json(m.hilbert)},
         {"matches_mb", matches},
         {"monomials", monomials}};
  return {matches ? 0 : 1, dump(j), ""};
}

RunResult cmd_verify(const JobSpec &job) {
  require_margins(job);
  QuotientModel m = build_quotient(job.alpha, job.beta);
  bool basis = m.standard == mb_monomials(job.alpha, job.beta) &&
               BigInt(m.standard.size()) ==
                   count_contingency(job.alpha, job.beta);
  QPoly hz = hilbert_zigzag(job.alpha, job.beta);
  QPoly hk = hilbert_kostka(job.alpha, job.beta);
  bool hilbert = hz == hk && hk == m.hilbert;
  GrIdealReport gr = verify_gr_ideal(m);
  bool passed = basis && hilbert && gr.ok();
  json j{{"alpha", parts_json(job.alpha.parts())},
         {"beta", parts_json(job.beta.parts())},
         {"checks",
          {{"standard_basis", basis},
           {"hilbert_three_way", hilbert},
           {"gr_ideal", gr.ok()}}},
         {"hilbert", qpoly_to_json(hk)},
         {"passed", passed}};
  return {passed ? 0 : 1, dump(j), ""};
}

json lefschetz_json(const LefschetzReport &r) {
  json entries = json::array();
  json violations = json::array();
  for (const auto &e : r.entries) {
    entries.push_back({{"k", e.k},
                       {"power", e.power},
                       {"source_dim", e.source_dim},
                       {"target_dim", e.target_dim},
                       {"rank", e.rank},
                       {"injective", e.injective}});
    if (!e.injective)
      violations.push_back(e.k);
  }
  return {{"n", r.n},
          {"min_zigzag", r.min_zigzag},
          {"entries", entries},
          {"violations", violations}};
}

RunResult cmd_lefschetz(const JobSpec &job) {
  require_margins(job);
  json j = lefschetz_json(lefschetz_check(job.alpha, job.beta));
  j["alpha"] = parts_json(job.alpha.parts());
  j["beta"] = parts_json(job.beta.parts());
  return {0, dump(j), ""};
}

RunResult cmd_frobenius(const JobSpec &job) {
  require_margins(job);
  Partition mu = as_partition(job.alpha, "--alpha");
  Partition nu = as_partition(job.beta, "--beta");
  GradedDecomp g = graded_frobenius(mu, nu);
  if (job.csv) {
    std::ostringstream os;
    os << "degree,coefficient,shapes\n";
    for (std::size_t d = 0; d < g.degrees.size(); ++d)
      for (const auto &[key, c] : g.degrees[d].terms) {
        os << d << ',' << c << ',';
        for (std::size_t i = 0; i < key.size(); ++i)
          os << (i ? "|" : "") << to_string(key[i]);
        os << '\n';
      }
    return {0, os.str(), ""};
  }
  json degrees = json::array();
  for (std::size_t d = 0; d < g.degrees.size(); ++d)
    degrees.push_back({{"degree", d},
                       {"dimension", to_string(dimension(g.degrees[d]))},
                       {"terms", tensor_terms(g.degrees[d])}});
  json j{{"mu", parts_json(mu.parts())},
         {"nu", parts_json(nu.parts())},
         {"factor_degrees", g.factor_degrees},
         {"degrees", degrees}};
  return {0, dump(j), ""};
}

RunResult cmd_conjectures(const JobSpec &job) {
  require_margins(job);
  QPoly h = hilbert_kostka(job.alpha, job.beta);
  auto lc = log_concavity_report(h);
  json lef = lefschetz_json(lefschetz_check(job.alpha, job.beta));
  // The module for a composition is the one for its sorted parts.
  Partition mu = Partition::from_unsorted(job.alpha.parts());
  Partition nu = Partition::from_unsorted(job.beta.parts());
  auto eq = equivariant_log_concavity_violations(graded_frobenius(mu, nu));
  std::size_t total = lc.size() + lef["violations"].size() + eq.size();
  json j{{"alpha", parts_json(job.alpha.parts())},
         {"beta", parts_json(job.beta.parts())},
         {"log_concave_hilbert", {{"coeffs", qpoly_to_json(h)}, {"violations", lc}}},
         {"weak_lefschetz", lef},
         {"equivariant_log_concave", {{"violations", eq}}},
         {"violations", total}};
  return {0, dump(j), ""};
}

RunResult cmd_ehrhart(const JobSpec &job) {
  require_margins(job);
  if (job.order < 0)
    throw UsageError("--order must be nonnegative");
  if (job.interior && (job.alpha.has_zero() || job.beta.has_zero()))
    throw UsageError("--interior needs positive parts in --alpha and --beta");
  auto series = q_ehrhart(job.alpha, job.beta, job.order, job.interior);
  if (job.csv) {
    std::ostringstream os;
    os << "m,degree,coefficient\n";
    for (std::size_t m = 0; m < series.size(); ++m)
      for (std::size_t d = 0; d < series[m].size(); ++d)
        os << m << ',' << d << ',' << series[m][d] << '\n';
    return {0, os.str(), ""};
  }
  json rows = json::array();
  for (std::size_t m = 0; m < series.size(); ++m)
    rows.push_back({{"m", m},
                    {"coeffs", qpoly_to_json(series[m])},
                    {"at_one", to_string(evaluate_at_one(series[m]))}});
  json j{{"alpha", parts_json(job.alpha.parts())},
         {"beta", parts_json(job.beta.parts())},
         {"interior", job.interior},
         {"series", rows}};
  return {0, dump(j), ""};
}

RunResult cmd_figure1(const JobSpec &job) {
  if (job.family < 1 || job.n < 1 || job.n % job.family != 0)
    throw UsageError("--family must be a positive divisor of --n");
  if (!job.full && job.upto < 0)
    throw UsageError("--upto must be nonnegative");
  WeakComposition a(std::vector<int>(job.n / job.family, job.family));
  QPoly h = hilbert_kostka(a, a, job.full ? -1 : job.upto);
  if (!job.full)
    h.resize(std::min<std::size_t>(h.size(), job.upto + 1));
  if (job.csv)
    return {0, coeff_csv(h), ""};
  json j{{"family", job.family},
         {"n", job.n},
         {"alpha", std::to_string(job.family) + "^" +
                       std::to_string(job.n / job.family)},
         {"coeffs", qpoly_to_json(h)}};
  return {0, dump(j), ""};
}

RunResult cmd_sweep(const JobSpec &job) {
  if (job.max_n < 0 || job.max_len < 1 || job.threads < 1)
    throw UsageError("sweep bounds must be positive");
  SweepOptions o;
  o.max_n = job.max_n;
  o.max_len = job.max_len;
  o.threads = job.threads;
  json j = sweep(o);
  return {j["passed"].get<bool>() ? 0 : 1, dump(j), ""};
}

std::filesystem::path cache_file() {
  const char *dir = std::getenv("CTQ_CACHE_DIR");
  if (!dir || !*dir)
    return {};
  return std::filesystem::path(dir) / "kostka-memo.json";
}

} // namespace

void load_kostka_cache() {
  auto f = cache_file();
  if (f.empty() || !std::filesystem::exists(f))
    return;
  std::ifstream in(f);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    thread_kostka_table().merge_json(ss.str());
  } catch (const std::exception &e) {
    std::cerr << "ignoring Kostka cache " << f << ": " << e.what() << '\n';
  }
}

void save_kostka_cache() {
  auto f = cache_file();
  if (f.empty())
    return;
  std::error_code ec;
  std::filesystem::create_directories(f.parent_path(), ec);
  auto tmp = f;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << thread_kostka_table().to_json();
    if (!out)
      return;
  }
  std::filesystem::rename(tmp, f, ec);
}

RunResult run(const JobSpec &job) {
  try {
    const std::string &c = job.command;
    if (c == "hilbert")
      return cmd_hilbert(job);
    if (c == "rsk")
      return cmd_rsk(job);
    if (c == "zigzag")
      return cmd_zigzag(job);
    if (c == "standard-basis")
      return cmd_standard_basis(job);
    if (c == "verify")
      return cmd_verify(job);
    if (c == "frobenius")
      return cmd_frobenius(job);
    if (c == "conjectures")
      return cmd_conjectures(job);
    if (c == "lefschetz")
      return cmd_lefschetz(job);
    if (c == "ehrhart")
      return cmd_ehrhart(job);
    if (c == "figure1")
      return cmd_figure1(job);
    if (c == "sweep")
      return cmd_sweep(job);
    return {2, "", "unknown command '" + c + "'\n"};
  } catch (const UsageError &e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument &e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const std::domain_error &e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const std::exception &e) {
    return {1, "", std::string("check failed: ") + e.what() + "\n"};
  }
}

namespace {

// Parses a composition flag, naming the flag on failure.
struct CompositionOption {
  std::string text;
  const char *flag;

  WeakComposition get() const {
    if (text.empty())
      return {};
    try {
      return parse_composition(text);
    } catch (const std::exception &e) {
      throw UsageError(std::string(flag) + ": " + e.what());
    }
  }
};

std::string read_matrix_source(const std::string &src, std::istream &in) {
  std::stringstream ss;
  if (src == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(src);
  if (!f)
    throw UsageError("--matrix: cannot open '" + src + "'");
  ss << f.rdbuf();
  return ss.str();
}

} // namespace

RunResult run_command_line(const std::vector<std::string> &args,
                           std::istream &in) {
  CLI::App app{"Contingency table quotient rings"};
  app.require_subcommand(1);
  JobSpec job;
  CompositionOption alpha{"", "--alpha"}, beta{"", "--beta"};
  std::string matrix_src;

  auto margins = [&](CLI::App *s) {
    s->add_option("--alpha,--mu", alpha.text, "Row sums, e.g. 3,2 or 2^30")
        ->required();
    s->add_option("--beta,--nu", beta.text, "Column sums")->required();
  };
  auto csv = [&](CLI::App *s) {
    s->add_flag("--csv", job.csv, "CSV coefficient table");
  };

  auto *hil = app.add_subcommand("hilbert", "Hilbert series");
  margins(hil);
  hil->add_option("--method", job.method, "kostka, zigzag or linear");
  csv(hil);

  for (const char *name : {"rsk", "zigzag"}) {
    auto *s = app.add_subcommand(name, name == std::string("rsk")
                                           ? "RSK by matrix-ball steps"
                                           : "Zigzag number and witness");
    s->add_option("--matrix", matrix_src, "File, or - for stdin")->required();
  }

  auto *sb = app.add_subcommand("standard-basis", "Standard monomials");
  margins(sb);
  sb->add_option("--tie", job.tie, "Diagonal order tie-break: row or column");

  margins(app.add_subcommand("verify", "Theorem checks for one pair"));
  auto *fro = app.add_subcommand("frobenius", "Graded Frobenius image");
  margins(fro);
  csv(fro);
  margins(app.add_subcommand("conjectures", "Conjecture report"));
  margins(app.add_subcommand("lefschetz", "Weak Lefschetz ranks"));

  auto *ehr = app.add_subcommand("ehrhart", "Graded Ehrhart series");
  margins(ehr);
  ehr->add_option("--order", job.order, "Largest dilation m");
  ehr->add_flag("--interior", job.interior, "Interior series");
  csv(ehr);

  auto *fig = app.add_subcommand("figure1", "Hilbert series of (d^{n/d})");
  fig->add_option("--family", job.family, "Part size d")->required();
  fig->add_option("--upto", job.upto, "Largest degree");
  fig->add_option("--n", job.n, "Total size");
  fig->add_flag("--full", job.full, "Whole series (slow for n=60)");
  csv(fig);

  auto *sw = app.add_subcommand("sweep", "Checks over all small margins");
  sw->add_option("--max-n", job.max_n, "Largest total");
  sw->add_option("--max-len", job.max_len, "Longest composition");
  sw->add_option("--threads", job.threads, "Worker threads");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &) {
    return {0, app.help(), ""};
  } catch (const CLI::ParseError &e) {
    return {2, "", std::string(e.what()) + "\n" + app.help()};
  }
  job.command = app.get_subcommands().front()->get_name();
  try {
    job.alpha = alpha.get();
    job.beta = beta.get();
    if (!matrix_src.empty())
      job.matrix = read_matrix_source(matrix_src, in);
  } catch (const UsageError &e) {
    return {2, "", std::string(e.what()) + "\n"};
  }
  load_kostka_cache();
  RunResult r = run(job);
  save_kostka_cache();
  return r;
}

namespace {

struct Check {
  long checked = 0;
  std::vector<std::string> failures;

  void add(bool ok, const std::string &what) {
    ++checked;
    if (!ok)
      failures.push_back(what);
  }
  void merge(const Check &o) {
    checked += o.checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
  json to_json(const char *key) const {
    return {{"checked", checked}, {key, failures}};
  }
};

struct CaseResult {
  Check standard_basis, hilbert, gr_ideal, log_concave, lefschetz;
  Check graded, ungraded, equivariant;
};

CaseResult check_margins(const WeakComposition &a, const WeakComposition &b) {
  CaseResult r;
  const std::string name = label(a, b);
  QuotientModel m;
  try {
    m = build_quotient(a, b);
  } catch (const std::exception &e) {
    r.standard_basis.add(false, name + ": " + e.what());
    return r;
  }
  BigInt tables = count_contingency(a, b);
  r.standard_basis.add(m.standard == mb_monomials(a, b) &&
                           BigInt(m.standard.size()) == tables,
                       name);
  QPoly hk = hilbert_kostka(a, b);
  r.hilbert.add(hk == m.hilbert && hk == hilbert_zigzag(a, b), name);
  r.gr_ideal.add(verify_gr_ideal(m).ok(), name);
  r.log_concave.add(log_concavity_report(hk).empty(), name);
  r.lefschetz.add(lefschetz_check(m).all_injective(), name);
  return r;
}

CaseResult check_partitions(const Partition &mu, const Partition &nu) {
  CaseResult r;
  const std::string name = label(mu, nu);
  GradedDecomp g = graded_frobenius(mu, nu);
  WeakComposition a(mu.parts()), b(nu.parts());
  r.graded.add(g.dimensions() == hilbert_kostka(a, b), name);
  bool chars = true;
  auto dm = multiplicity_profile(mu), dn = multiplicity_profile(nu);
  for (const auto &cm : product_classes(dm))
    for (const auto &cn : product_classes(dn)) {
      ProductClass c = cm;
      c.insert(c.end(), cn.begin(), cn.end());
      if (g.character(c) != fixed_tables(mu, nu, cm, cn))
        chars = false;
    }
  r.ungraded.add(chars, name);
  auto bad = equivariant_log_concavity_violations(g);
  std::string degrees;
  for (int k : bad)
    degrees += " " + std::to_string(k);
  r.equivariant.add(bad.empty(), name + " degrees" + degrees);
  return r;
}

template <typename Job, typename Fn>
std::vector<CaseResult> run_parallel(const std::vector<Job> &jobs, int threads,
                                     Fn fn) {
  std::vector<CaseResult> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      out[i] = fn(jobs[i].first, jobs[i].second);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  return out;
}

} // namespace

json sweep(const SweepOptions &o) {
  std::vector<std::pair<WeakComposition, WeakComposition>> pairs;
  std::vector<std::pair<Partition, Partition>> parts;
  for (int n = 1; n <= o.max_n; ++n) {
    std::vector<WeakComposition> comps;
    for (int len = 1; len <= o.max_len; ++len) {
      auto c = enum_weak_compositions(n, len);
      comps.insert(comps.end(), c.begin(), c.end());
    }
    for (const auto &a : comps)
      for (const auto &b : comps)
        pairs.emplace_back(a, b);
    if (n > o.max_frobenius_n)
      continue;
    std::vector<Partition> ps;
    for (const auto &p : enum_partitions(n))
      if (static_cast<int>(p.length()) <= o.max_len)
        ps.push_back(p);
    for (const auto &a : ps)
      for (const auto &b : ps)
        parts.emplace_back(a, b);
  }
  int threads = std::max(1, o.threads);
  auto r1 = run_parallel(pairs, threads, &check_margins);
  auto r2 = run_parallel(parts, threads, &check_partitions);

  CaseResult total;
  for (const auto &r : r1) {
    total.standard_basis.merge(r.standard_basis);
    total.hilbert.merge(r.hilbert);
    total.gr_ideal.merge(r.gr_ideal);
    total.log_concave.merge(r.log_concave);
    total.lefschetz.merge(r.lefschetz);
  }
  for (const auto &r : r2) {
    total.graded.merge(r.graded);
    total.ungraded.merge(r.ungraded);
    total.equivariant.merge(r.equivariant);
  }
  bool passed = total.standard_basis.failures.empty() &&
                total.hilbert.failures.empty() &&
                total.gr_ideal.failures.empty() &&
                total.graded.failures.empty() &&
                total.ungraded.failures.empty();
  std::size_t violations = total.log_concave.failures.size() +
                           total.lefschetz.failures.size() +
                           total.equivariant.failures.size();
  return {{"max_n", o.max_n},
          {"max_len", o.max_len},
          {"margin_pairs", pairs.size()},
          {"partition_pairs", parts.size()},
          {"theorems",
           {{"standard-monomial-basis", total.standard_basis.to_json("failures")},
            {"hilbert-series", total.hilbert.to_json("failures")},
            {"gr-ideal", total.gr_ideal.to_json("failures")},
            {"graded-module-structure", total.graded.to_json("failures")},
            {"ungraded-module-structure", total.ungraded.to_json("failures")}}},
          {"conjectures",
           {{"log-concave-hilbert", total.log_concave.to_json("violations")},
            {"weak-lefschetz", total.lefschetz.to_json("violations")},
            {"equivariant-log-concave", total.equivariant.to_json("violations")}}},
          {"violations", violations},
          {"passed", passed}};
}

} // namespace ctq
