// Command-line front end. Talks to the core exclusively through the C API
// in monkey/monkey.h; every subcommand is a reproducible experiment whose
// output embeds its own provenance (command line, seed, tool version).
//
// Exit codes: 0 success, 1 validation error, 2 resource limit, 3 violation
// of a proven inequality (which indicates a bug, not bad input).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monkey/monkey.h"

namespace {

struct CliFailure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliFailure{code, message};
}

int code_for(monkey_status status) {
  switch (status) {
    case MONKEY_OK:
      return 0;
    case MONKEY_ERR_INVALID_ARGUMENT:
      return 1;
    case MONKEY_ERR_RESOURCE:
      return 2;
    default:
      return 3;
  }
}

void check(monkey_status status) {
  if (status != MONKEY_OK) fail(code_for(status), monkey_last_error());
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct SpacingsDeleter {
  void operator()(monkey_spacings* p) const { monkey_spacings_free(p); }
};
struct KeyboardDeleter {
  void operator()(monkey_keyboard* p) const { monkey_keyboard_free(p); }
};
struct RankedDeleter {
  void operator()(monkey_ranked* p) const { monkey_ranked_free(p); }
};
struct SeriesDeleter {
  void operator()(monkey_series* p) const { monkey_series_free(p); }
};
using SpacingsPtr = std::unique_ptr<monkey_spacings, SpacingsDeleter>;
using KeyboardPtr = std::unique_ptr<monkey_keyboard, KeyboardDeleter>;
using RankedPtr = std::unique_ptr<monkey_ranked, RankedDeleter>;
using SeriesPtr = std::unique_ptr<monkey_series, SeriesDeleter>;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MONKEY_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 1;
}

// Shared keyboard/model options. Exactly one of (c, s) may be given; the
// other is derived as 1 minus it. Defaults reproduce the reference
// configuration: K=26, c=0.82.
struct ModelOpts {
  std::size_t k = 26;
  double c = -1.0;
  double s = -1.0;
  bool miller = false;
  std::string dist = "uniform";
  std::string table_path;
  std::uint64_t seed = default_seed();

  void resolve() {
    if (c >= 0.0 && s >= 0.0) fail(1, "give only one of --c and --s");
    if (c < 0.0 && s < 0.0) c = 0.82;
    if (c >= 0.0) {
      s = 1.0 - c;
    } else {
      c = 1.0 - s;
    }
  }
};

void add_model_flags(CLI::App* cmd, ModelOpts* m, bool with_miller = true) {
  cmd->add_option("--K", m->k, "alphabet size (default 26)");
  auto* c_opt = cmd->add_option("--c", m->c, "letter mass fraction, s = 1-c")
                    ->check(CLI::Range(0.0, 1.0));
  auto* s_opt = cmd->add_option("--s", m->s, "space probability, c = 1-s")
                    ->check(CLI::Range(0.0, 1.0));
  c_opt->excludes(s_opt);
  cmd->add_option("--dist", m->dist, "spacing distribution: uniform|beta32|table")
      ->check(CLI::IsMember({"uniform", "beta32", "table"}));
  cmd->add_option("--table", m->table_path,
                  "quantile table file (p,v per line) for --dist table");
  cmd->add_option("--seed", m->seed,
                  "RNG seed (default: MONKEY_SEED env or 1)");
  if (with_miller) {
    cmd->add_flag("--miller", m->miller,
                  "equal letter probabilities (1-s)/K instead of spacings");
  }
}

struct TableData {
  std::vector<double> prob, value;
};

TableData load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(1, "cannot open quantile table file: " + path);
  TableData t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    double p = 0.0, v = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf", &p, &v) != 2)
      fail(1, "malformed quantile table line: " + line);
    t.prob.push_back(p);
    t.value.push_back(v);
  }
  return t;
}

SpacingsPtr draw_spacings(const ModelOpts& m) {
  monkey_dist_kind kind = MONKEY_DIST_UNIFORM;
  TableData table;
  if (m.dist == "beta32") kind = MONKEY_DIST_BETA32;
  if (m.dist == "table") {
    kind = MONKEY_DIST_TABLE;
    if (m.table_path.empty()) fail(1, "--dist table needs --table <file>");
    table = load_table(m.table_path);
  }
  monkey_spacings* raw = nullptr;
  check(monkey_spacings_sample(
      kind, table.prob.empty() ? nullptr : table.prob.data(),
      table.value.empty() ? nullptr : table.value.data(), table.prob.size(),
      m.k, m.seed, &raw));
  return SpacingsPtr(raw);
}

KeyboardPtr build_keyboard(const ModelOpts& m) {
  monkey_keyboard* raw = nullptr;
  if (m.miller) {
    check(monkey_keyboard_miller(m.k, m.s, &raw));
  } else {
    SpacingsPtr sp = draw_spacings(m);
    check(monkey_keyboard_from_spacings(sp.get(), m.c, &raw));
  }
  return KeyboardPtr(raw);
}

// ---- output plumbing ----

std::string g_command_line;  // argv[1..] joined, for provenance headers

std::string provenance_comment(const ModelOpts* m, const char* dist_label) {
  std::string line = "# monkey ";
  line += monkey_version();
  line += " | cmd: monkey " + g_command_line;
  if (m) {
    line += " | dist: ";
    line += dist_label ? dist_label : m->dist.c_str();
    line += " | c: " + g17(m->c);
    line += " | seed: " + std::to_string(m->seed);
  }
  line += "\n";
  return line;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

// Splices a provenance object into a serialized JSON document.
std::string with_provenance(const std::string& body, std::uint64_t seed) {
  std::string prov = "{\"provenance\": {\"tool\": \"monkey ";
  prov += monkey_version();
  prov += "\", \"cmd\": \"monkey " + json_escape(g_command_line) + "\"";
  prov += ", \"seed\": " + std::to_string(seed) + "}, ";
  return prov + body.substr(1);
}

// Streams land on stdout when no path is given; files are written to a
// temporary sibling and renamed so readers never see partial output.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(2, "cannot write output file: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(2, "cannot rename " + tmp + " to " + path);
}

void note(const std::string& message) {
  std::fputs((message + "\n").c_str(), stderr);
}

std::string keyboard_json(const monkey_keyboard* kb) {
  size_t needed = 0;
  check(monkey_keyboard_to_json(kb, nullptr, 0, &needed));
  std::string buf(needed, '\0');
  check(monkey_keyboard_to_json(kb, buf.data(), buf.size(), &needed));
  buf.resize(needed - 1);
  return buf;
}

std::string spacings_json(const monkey_spacings* s) {
  size_t needed = 0;
  check(monkey_spacings_to_json(s, nullptr, 0, &needed));
  std::string buf(needed, '\0');
  check(monkey_spacings_to_json(s, buf.data(), buf.size(), &needed));
  buf.resize(needed - 1);
  return buf;
}

// ---- subcommands ----

struct SampleOpts {
  ModelOpts model;
  std::string out, format = "csv";
  bool keyboard = false;
};

void run_sample(const SampleOpts& o) {
  ModelOpts m = o.model;
  m.resolve();
  SpacingsPtr sp = draw_spacings(m);
  if (o.format == "json") {
    if (o.keyboard) {
      monkey_keyboard* raw = nullptr;
      check(monkey_keyboard_from_spacings(sp.get(), m.c, &raw));
      KeyboardPtr kb(raw);
      emit(o.out, with_provenance(keyboard_json(kb.get()), m.seed) + "\n");
    } else {
      emit(o.out, with_provenance(spacings_json(sp.get()), m.seed) + "\n");
    }
    return;
  }
  const size_t k = monkey_spacings_count(sp.get());
  std::vector<double> values(k), sorted(k);
  check(monkey_spacings_values(sp.get(), values.data(), values.size()));
  check(monkey_spacings_sorted(sp.get(), sorted.data(), sorted.size()));
  std::string csv = provenance_comment(&m, nullptr);
  csv += "i,spacing,sorted_spacing\n";
  for (size_t i = 0; i < k; ++i) {
    csv += std::to_string(i + 1) + "," + g17(values[i]) + "," +
           g17(sorted[i]) + "\n";
  }
  emit(o.out, csv);
}

struct ExponentOpts {
  ModelOpts model;
  std::string out, format = "text";
};

void run_exponent(const ExponentOpts& o) {
  ModelOpts m = o.model;
  m.resolve();
  KeyboardPtr kb = build_keyboard(m);
  monkey_exponent_report rep{};
  check(monkey_solve_root(kb.get(), &rep));

  if (o.format == "json") {
    size_t needed = 0;
    check(monkey_exponent_report_to_json(&rep, nullptr, 0, &needed));
    std::string buf(needed, '\0');
    check(monkey_exponent_report_to_json(&rep, buf.data(), buf.size(),
                                         &needed));
    buf.resize(needed - 1);
    emit(o.out, with_provenance(buf, m.seed) + "\n");
    return;
  }
  std::string text;
  text += "K = " + std::to_string(m.k) + "\n";
  text += "s = " + g17(m.s) + "\n";
  text += "beta = " + g17(rep.beta) + "\n";
  text += "minus_beta = " + g17(-rep.beta) + "\n";
  text += "R0 = " + g17(rep.r0) + "\n";
  text += "b = " + g17(rep.b) + "\n";
  text += "C1 = " + g17(rep.c1) + "\n";
  text += "C2 = " + g17(rep.c2) + "\n";
  text += "residual = " + g17(rep.residual) + "\n";
  if (m.miller) {
    double closed = 0.0;
    check(monkey_miller_exponent(m.k, m.s, &closed));
    text += "miller_closed_form_minus_beta = " + g17(closed) + "\n";
  }
  emit(o.out, text);
}

struct EnumerateOpts {
  ModelOpts model;
  std::uint64_t n = 475255;
  std::uint64_t budget = 0;
  std::string out;
};

void run_enumerate(const EnumerateOpts& o) {
  ModelOpts m = o.model;
  m.resolve();
  KeyboardPtr kb = build_keyboard(m);
  monkey_ranked* raw = nullptr;
  check(monkey_top_n(kb.get(), o.n, o.budget, &raw));
  RankedPtr ranked(raw);

  const double inv_ln10 = 1.0 / std::log(10.0);
  std::string csv = provenance_comment(&m, m.miller ? "equal" : nullptr);
  csv += "rank,length,log_base,log10_base,word\n";
  std::vector<uint32_t> word;
  const uint64_t count = monkey_ranked_count(ranked.get());
  for (uint64_t r = 1; r <= count; ++r) {
    const double lb = monkey_ranked_log_base(ranked.get(), r);
    const uint32_t len = monkey_ranked_word_length(ranked.get(), r);
    word.resize(len);
    if (len) check(monkey_ranked_word(ranked.get(), r, word.data(), len));
    csv += std::to_string(r) + "," + std::to_string(len) + "," + g17(lb) +
           "," + g17(lb * inv_ln10) + ",";
    for (uint32_t i = 0; i < len; ++i) {
      if (i) csv += '.';
      csv += std::to_string(word[i]);
    }
    csv += '\n';
  }
  emit(o.out, csv);
}

struct GridOpts {
  double tmax = 10.0;
  double tstep = 0.5;
  double tcap = 0.0;
  std::vector<double> explicit_ts;

  std::vector<double> grid() const {
    if (!explicit_ts.empty()) return explicit_ts;
    std::vector<double> ts;
    for (std::size_t i = 0;; ++i) {
      const double t = static_cast<double>(i) * tstep;
      if (t > tmax + 1e-12) break;
      ts.push_back(t);
    }
    return ts;
  }
};

void add_grid_flags(CLI::App* cmd, GridOpts* g) {
  cmd->add_option("--tmax", g->tmax, "largest threshold (default 10)");
  cmd->add_option("--tstep", g->tstep, "threshold step (default 0.5)");
  cmd->add_option("--t", g->explicit_ts, "explicit threshold list");
  cmd->add_option("--tcap", g->tcap, "hard cap on t (default 30)");
}

std::string bound_rows_csv(const ModelOpts& m,
                           const std::vector<monkey_bound_row>& rows,
                           const char* dist_label) {
  std::string csv = provenance_comment(&m, dist_label);
  csv += "t,N,Ncum,lower,upper,ok\n";
  for (const auto& r : rows) {
    csv += g17(r.t) + "," + std::to_string(r.n) + "," +
           std::to_string(r.n_cum) + "," + g17(r.lower) + "," + g17(r.upper) +
           "," + (r.ok ? "1" : "0") + "\n";
  }
  return csv;
}

struct CountsOpts {
  ModelOpts model;
  GridOpts grid;
  std::string out;
};

void run_counts(const CountsOpts& o) {
  ModelOpts m = o.model;
  m.resolve();
  KeyboardPtr kb = build_keyboard(m);
  const std::vector<double> ts = o.grid.grid();
  std::vector<monkey_bound_row> rows(ts.size());
  int all_ok = 0;
  check(monkey_verify_csiszar(kb.get(), ts.data(), ts.size(), o.grid.tcap,
                              rows.data(), &all_ok));
  emit(o.out, bound_rows_csv(m, rows, m.miller ? "equal" : nullptr));
  if (!all_ok) fail(3, "counting-function bounds violated");
}

struct VerifyOpts {
  ModelOpts model;
  GridOpts grid;
  bool csiszar = false, rankbounds = false, prop1 = false;
  std::uint64_t n = 100000;
  std::string out;
};

void run_verify(const VerifyOpts& o) {
  ModelOpts m = o.model;
  m.resolve();
  if (static_cast<int>(o.csiszar) + static_cast<int>(o.rankbounds) +
          static_cast<int>(o.prop1) !=
      1) {
    fail(1, "choose exactly one of --csiszar, --rankbounds, --prop1");
  }
  KeyboardPtr kb = build_keyboard(m);

  if (o.csiszar) {
    const std::vector<double> ts = o.grid.grid();
    std::vector<monkey_bound_row> rows(ts.size());
    int all_ok = 0;
    check(monkey_verify_csiszar(kb.get(), ts.data(), ts.size(), o.grid.tcap,
                                rows.data(), &all_ok));
    if (!o.out.empty())
      emit(o.out, bound_rows_csv(m, rows, m.miller ? "equal" : nullptr));
    std::size_t bad = 0;
    for (const auto& r : rows) bad += r.ok ? 0 : 1;
    note("csiszar bounds: " + std::to_string(rows.size() - bad) + "/" +
         std::to_string(rows.size()) + " thresholds ok");
    if (!all_ok) fail(3, "counting-function bounds violated");
    return;
  }

  if (o.rankbounds) {
    monkey_ranked* raw = nullptr;
    check(monkey_top_n(kb.get(), o.n, 0, &raw));
    RankedPtr ranked(raw);
    const uint64_t count = monkey_ranked_count(ranked.get());
    std::vector<monkey_rank_bound_row> rows(count);
    int all_ok = 0;
    check(monkey_verify_rank_bounds(kb.get(), ranked.get(), rows.data(),
                                    &all_ok));
    if (!o.out.empty()) {
      std::string csv = provenance_comment(&m, m.miller ? "equal" : nullptr);
      csv += "rank,log_base,lower,upper,ok\n";
      for (const auto& r : rows) {
        csv += std::to_string(r.rank) + "," + g17(r.log_base) + "," +
               g17(r.lower) + "," + g17(r.upper) + "," + (r.ok ? "1" : "0") +
               "\n";
      }
      emit(o.out, csv);
    }
    std::size_t bad = 0;
    for (const auto& r : rows) bad += r.ok ? 0 : 1;
    note("rank bounds: " + std::to_string(count - bad) + "/" +
         std::to_string(count) + " ranks ok");
    if (!all_ok) fail(3, "rank bounds violated");
    return;
  }

  monkey_prop1_report rep{};
  check(monkey_verify_prop1(kb.get(), &rep));
  std::string text;
  text += "mu_bar = " + g17(rep.mu_bar) + "\n";
  text += "minus_beta = " + g17(rep.minus_beta) + "\n";
  text += "ratio = " + g17(rep.ratio) + "\n";
  text += std::string("holds = ") + (rep.holds ? "true" : "false") + "\n";
  emit(o.out, text);
  if (!rep.holds) fail(3, "mu_bar <= -beta violated");
}

struct FigureOpts {
  ModelOpts model;
  std::string kind;
  std::uint64_t n = 475255;
  std::string out;
};

void run_figure(const FigureOpts& o) {
  ModelOpts m = o.model;
  m.resolve();
  monkey_figure_kind kind;
  if (o.kind == "equal") {
    kind = MONKEY_FIGURE_EQUAL;
  } else if (o.kind == "uniform") {
    kind = MONKEY_FIGURE_UNIFORM;
  } else if (o.kind == "beta32") {
    kind = MONKEY_FIGURE_BETA32;
  } else {
    fail(1, "unknown figure kind: " + o.kind);
  }
  monkey_series* raw = nullptr;
  check(monkey_figure_series(kind, m.k, m.c, o.n, m.seed, &raw));
  SeriesPtr series(raw);

  std::string csv = provenance_comment(&m, o.kind.c_str());
  csv += "rank,log_rank,log_base\n";
  const uint64_t count = monkey_series_count(series.get());
  for (uint64_t i = 0; i < count; ++i) {
    uint64_t rank = 0;
    double log_rank = 0.0, log_base = 0.0;
    check(monkey_series_row(series.get(), i, &rank, &log_rank, &log_base));
    csv += std::to_string(rank) + "," + g17(log_rank) + "," + g17(log_base) +
           "\n";
  }
  emit(o.out, csv);

  double slope = 0.0, intercept = 0.0, r2 = 0.0;
  const monkey_status fit_status =
      monkey_fit_loglog(series.get(), 2, &slope, &intercept, &r2);
  if (fit_status == MONKEY_OK) {
    note("fitted slope (min_rank=2): " + g17(slope) + ", r^2 = " + g17(r2));
  }
}

struct SweepOpts {
  ModelOpts model;
  std::vector<std::size_t> ks{10, 100, 1000};
  std::uint32_t seeds = 20;
  std::string out;
};

void run_sweep(const SweepOpts& o) {
  ModelOpts m = o.model;
  m.resolve();
  if (m.miller) fail(1, "sweep draws spacings; --miller does not apply");
  monkey_dist_kind kind = MONKEY_DIST_UNIFORM;
  TableData table;
  if (m.dist == "beta32") kind = MONKEY_DIST_BETA32;
  if (m.dist == "table") {
    kind = MONKEY_DIST_TABLE;
    if (m.table_path.empty()) fail(1, "--dist table needs --table <file>");
    table = load_table(m.table_path);
  }

  std::vector<monkey_sweep_row> rows(o.ks.size() * o.seeds);
  std::vector<double> medians(o.ks.size());
  check(monkey_convergence_sweep(
      kind, table.prob.empty() ? nullptr : table.prob.data(),
      table.value.empty() ? nullptr : table.value.data(), table.prob.size(),
      o.ks.data(), o.ks.size(), o.seeds, m.c, m.seed, rows.data(),
      medians.data()));

  std::string csv = provenance_comment(&m, nullptr);
  csv += "K,seed,beta,mu_bar,abs_err\n";
  for (const auto& r : rows) {
    csv += std::to_string(r.k) + "," + std::to_string(r.seed) + "," +
           g17(r.beta) + "," + g17(r.mu_bar) + "," + g17(r.abs_err) + "\n";
  }
  for (std::size_t i = 0; i < o.ks.size(); ++i) {
    csv += "# median K=" + std::to_string(o.ks[i]) +
           " |beta-1| = " + g17(medians[i]) + "\n";
  }
  emit(o.out, csv);
  for (std::size_t i = 0; i < o.ks.size(); ++i) {
    note("median |beta-1| at K=" + std::to_string(o.ks[i]) + ": " +
         g17(medians[i]));
  }
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (i > 1) g_command_line += ' ';
    g_command_line += argv[i];
  }

  CLI::App app{"word-frequency power laws for the monkey-at-the-typewriter "
               "model"};
  app.require_subcommand(1);

  SampleOpts sample;
  auto* sample_cmd =
      app.add_subcommand("sample", "draw a random division of [0,1]");
  add_model_flags(sample_cmd, &sample.model, /*with_miller=*/false);
  sample_cmd->add_option("--out", sample.out, "output path (default stdout)");
  sample_cmd->add_option("--format", sample.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sample_cmd->add_flag("--keyboard", sample.keyboard,
                       "emit the derived keyboard JSON instead of spacings");

  ExponentOpts exponent;
  auto* exponent_cmd = app.add_subcommand(
      "exponent", "solve the characteristic root and power-law exponent");
  add_model_flags(exponent_cmd, &exponent.model);
  exponent_cmd->add_option("--out", exponent.out,
                           "output path (default stdout)");
  exponent_cmd->add_option("--format", exponent.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  EnumerateOpts enumerate;
  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "rank the N largest word base values as CSV");
  add_model_flags(enumerate_cmd, &enumerate.model);
  enumerate_cmd->add_option("--N", enumerate.n,
                            "number of ranks (default 475255)");
  enumerate_cmd->add_option("--budget", enumerate.budget,
                            "frontier entry budget (default 2^27)");
  enumerate_cmd->add_option("--out", enumerate.out,
                            "output path (default stdout)");

  CountsOpts counts;
  auto* counts_cmd = app.add_subcommand(
      "counts", "counting function N(t), cumulative counts and bounds");
  add_model_flags(counts_cmd, &counts.model);
  add_grid_flags(counts_cmd, &counts.grid);
  counts_cmd->add_option("--out", counts.out, "output path (default stdout)");

  VerifyOpts verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "check the proven bounds on counts, ranks or mu_bar");
  add_model_flags(verify_cmd, &verify.model);
  add_grid_flags(verify_cmd, &verify.grid);
  verify_cmd->add_flag("--csiszar", verify.csiszar,
                       "check b*R0^t < N(t) <= R0^t over the t grid");
  verify_cmd->add_flag("--rankbounds", verify.rankbounds,
                       "check C1*B_r^(-1/beta) < r < C2*B_r^(-1/beta)");
  verify_cmd->add_flag("--prop1", verify.prop1, "check mu_bar <= -beta");
  verify_cmd->add_option("--N", verify.n,
                         "ranks to check for --rankbounds (default 100000)");
  verify_cmd->add_option("--out", verify.out, "optional CSV report path");

  FigureOpts figure;
  auto* figure_cmd = app.add_subcommand(
      "figure", "log-log series for one reference panel");
  add_model_flags(figure_cmd, &figure.model, /*with_miller=*/false);
  figure_cmd
      ->add_option("--kind", figure.kind, "equal|uniform|beta32")
      ->required()
      ->check(CLI::IsMember({"equal", "uniform", "beta32"}));
  figure_cmd->add_option("--N", figure.n, "number of ranks (default 475255)");
  figure_cmd->add_option("--out", figure.out, "output path (default stdout)");

  SweepOpts sweep;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "beta and mu_bar across alphabet sizes and seeds");
  add_model_flags(sweep_cmd, &sweep.model, /*with_miller=*/false);
  sweep_cmd->add_option("--K-list", sweep.ks,
                        "alphabet sizes (default 10,100,1000)")
      ->delimiter(',');
  sweep_cmd->add_option("--seeds", sweep.seeds, "seeds per K (default 20)");
  sweep_cmd->add_option("--out", sweep.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 1;
  }

  try {
    if (sample_cmd->parsed()) run_sample(sample);
    if (exponent_cmd->parsed()) run_exponent(exponent);
    if (enumerate_cmd->parsed()) run_enumerate(enumerate);
    if (counts_cmd->parsed()) run_counts(counts);
    if (verify_cmd->parsed()) run_verify(verify);
    if (figure_cmd->parsed()) run_figure(figure);
    if (sweep_cmd->parsed()) run_sweep(sweep);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
