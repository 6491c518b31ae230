#include "tangenttab/cli.hpp"

#include "tangenttab/chrelation.hpp"
#include "tangenttab/errors.hpp"
#include "tangenttab/kontsevich.hpp"
#include "tangenttab/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace tangenttab::cli {

// ---------------------------------------------------------------------------
// Records

std::string csv_header() { return "d,a,b,c,num,den,integer"; }

std::string to_csv(const ResultRecord& r) {
  std::ostringstream s;
  s << r.d << ',' << r.a << ',' << r.b << ',' << r.c << ',' << r.value.get_num().get_str() << ','
    << r.value.get_den().get_str() << ',' << (r.integer_flag() ? "true" : "false");
  return s.str();
}

namespace {

nlohmann::ordered_json record_json(const ResultRecord& r) {
  nlohmann::ordered_json j;
  j["d"] = r.d;
  j["a"] = r.a;
  j["b"] = r.b;
  j["c"] = r.c;
  j["value"] = to_fraction_string(r.value);
  j["integer_flag"] = r.integer_flag();
  j["provenance"] = r.provenance;
  return j;
}

}  // namespace

std::string to_json(const ResultRecord& r) { return record_json(r).dump(); }

std::string to_json(const std::vector<ResultRecord>& records) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(record_json(r));
  return arr.dump(2);
}

std::string to_text(const ResultRecord& r) {
  return TangencyProblem{r.d, r.a, r.b, r.c}.label() + " = " + to_fraction_string(r.value) +
         " integer=" + (r.integer_flag() ? "true" : "false") + " provenance=" + r.provenance;
}

// ---------------------------------------------------------------------------
// Cache

std::optional<CacheContents> read_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) return std::nullopt;
  CacheContents contents;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream fields(line);
      std::string tag;
      fields >> tag;
      if (tag == "F" || tag == "K") {
        int d = 0, idx = 0;
        std::string value, extra;
        if (!(fields >> d >> idx >> value) || (fields >> extra)) return std::nullopt;
        auto& target = tag == "F" ? contents.normalization : contents.k_values;
        target[{d, idx}] = parse_rational(value);
      } else if (tag == "N") {
        int d = 0;
        std::string value, extra;
        if (!(fields >> d >> value) || (fields >> extra)) return std::nullopt;
        Rational q = parse_rational(value);
        if (!is_integer(q)) return std::nullopt;
        contents.kontsevich[d] = q.get_num();
      } else {
        return std::nullopt;
      }
    }
  } catch (const ParseError&) {
    return std::nullopt;
  }
  return contents;
}

void write_cache(const std::filesystem::path& path, const CacheContents& contents) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ParseError("cannot write cache " + path.string());
  out << kCacheHeader << '\n';
  for (const auto& [key, v] : contents.normalization)
    out << "F " << key.first << ' ' << key.second << ' ' << to_fraction_string(v) << '\n';
  for (const auto& [key, v] : contents.k_values)
    out << "K " << key.first << ' ' << key.second << ' ' << to_fraction_string(v) << '\n';
  for (const auto& [d, v] : contents.kontsevich) out << "N " << d << ' ' << v.get_str() << '\n';
}

// ---------------------------------------------------------------------------
// Verification suites

std::vector<std::string> verification_suites() {
  return {"ch", "key", "delta", "poly", "integrality", "gauge", "reducer", "kontsevich"};
}

namespace {

VerificationReport gauge_suite(const KCoefficientEngine& engine, int dmax, std::uint64_t seed) {
  VerificationReport report{"gauge", {}};
  RationalSampler sampler(seed);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational x = sampler.nonzero_scalar();
    KCoefficientEngine scaled(engine.normalization().rescaled(x), engine.overrides());
    for (int d = 1; d <= dmax; ++d)
      for (int lambda = 0; 2 * lambda <= 3 * d; ++lambda) {
        std::string label = "x=" + to_fraction_string(x) + " K_" + std::to_string(d) + "^" + std::to_string(lambda);
        if (!engine.computable(d, lambda)) {
          report.entries.push_back({label, CheckStatus::skipped, "not computable"});
          continue;
        }
        try {
          const Rational a = engine.k(d, lambda), b = scaled.k(d, lambda);
          report.entries.push_back({label, a == b ? CheckStatus::pass : CheckStatus::fail,
                                    a == b ? "" : to_fraction_string(a) + " vs " + to_fraction_string(b)});
        } catch (const Error& e) {
          report.entries.push_back({label, CheckStatus::fail, e.what()});
        }
      }
  }
  return report;
}

VerificationReport reducer_suite(const KCoefficientEngine& engine, int dmax) {
  VerificationReport report{"reducer", {}};
  TangencyCounter counter(engine);
  ProfileReducer reducer;
  for (int d = 1; d <= dmax; ++d)
    for (const auto& p : valid_problems(d)) {
      const ContactProfile profile = cubic_profile(d, p.a, p.b, p.c);
      CheckEntry entry{"reduce " + profile.to_string(), CheckStatus::pass, ""};
      try {
        const Rational direct = evaluate_cubic_profile(profile, counter);
        const Rational reduced = evaluate_combination(reducer.reduce(profile), counter);
        if (direct != reduced) {
          entry.status = CheckStatus::fail;
          entry.detail = to_fraction_string(direct) + " vs " + to_fraction_string(reduced);
        } else if (free_points(profile) > 0) {
          const Rational one_step = evaluate_combination(expand_once(profile), counter);
          if (one_step != direct) {
            entry.status = CheckStatus::fail;
            entry.detail = "single expansion changed the value";
          }
        }
        if (entry.status == CheckStatus::pass && hypothesis_readings_disagree(profile))
          entry.detail = "flag: e-I(alpha) and e-|alpha| readings disagree";
      } catch (const UnknownNormalization& e) {
        entry = {entry.label, CheckStatus::skipped, e.what()};
      } catch (const ZeroNormalization& e) {
        entry = {entry.label, CheckStatus::skipped, e.what()};
      } catch (const Error& e) {
        entry = {entry.label, CheckStatus::fail, e.what()};
      }
      report.entries.push_back(std::move(entry));
    }
  return report;
}

VerificationReport kontsevich_suite(const KCoefficientEngine& engine, int dmax) {
  VerificationReport report{"kontsevich", {}};
  KontsevichTable table;
  for (int d = 1; d <= dmax; ++d) {
    const std::string label = "N_" + std::to_string(d);
    try {
      const Integer n = kontsevich_number(d, table);
      const Rational k = engine.k(d, 0);
      std::string detail;
      if (n <= 0) detail = "not positive";
      else if (k != Rational(n)) detail = "K_d^0 = " + to_fraction_string(k) + " but N_d = " + n.get_str();
      if (detail.empty() && d >= 2) {
        KCoefficientEngine probe(engine.normalization(), engine.overrides());
        const Rational induced = probe.solve_normalization(d, 0, Rational(n));
        if (induced != *engine.normalization().value(d, 0))
          detail = "induced f_d^(0) = " + to_fraction_string(induced);
      }
      report.entries.push_back({label, detail.empty() ? CheckStatus::pass : CheckStatus::fail, detail});
    } catch (const UnknownNormalization& e) {
      report.entries.push_back({label, CheckStatus::skipped, e.what()});
    } catch (const Error& e) {
      report.entries.push_back({label, CheckStatus::fail, e.what()});
    }
  }
  return report;
}

}  // namespace

VerificationReport run_suite(const std::string& suite, int dmax, const KCoefficientEngine& engine,
                             std::uint64_t seed) {
  TangencyCounter counter(engine);
  if (suite == "ch") return verify_ch_identity(counter, dmax);
  if (suite == "key") return verify_key_relation(counter, dmax);
  if (suite == "delta") return verify_delta(counter, dmax);
  if (suite == "poly") return verify_polynomial(counter, dmax);
  if (suite == "integrality") return verify_integrality(counter, dmax);
  if (suite == "gauge") return gauge_suite(engine, dmax, seed);
  if (suite == "reducer") return reducer_suite(engine, dmax);
  if (suite == "kontsevich") return kontsevich_suite(engine, dmax);
  throw ParseError("unknown suite '" + suite + "'");
}

// ---------------------------------------------------------------------------
// Commands

namespace {

struct TableOptions {
  std::string ftable;
  std::string ktable;
  std::string cache;
};

void add_table_options(CLI::App* cmd, TableOptions& opts) {
  cmd->add_option("--ftable", opts.ftable, "Normalization table file (d b num/den per line)");
  cmd->add_option("--ktable", opts.ktable, "K override file (d lambda num/den per line)");
  cmd->add_option("--cache", opts.cache, "Persistent cache file");
}

class Session {
 public:
  explicit Session(const TableOptions& opts)
      : cache_path_(opts.cache),
        engine_(opts.ftable.empty() ? NormalizationTable::shipped() : NormalizationTable::load(opts.ftable),
                opts.ktable.empty() ? KTable{} : KTable::load(opts.ktable)) {
    if (cache_path_.empty()) return;
    auto contents = read_cache(cache_path_);
    if (!contents || contents->normalization != normalization_snapshot()) return;
    for (const auto& [key, v] : contents->k_values) engine_.preload(key.first, key.second, v);
    for (const auto& [d, n] : contents->kontsevich) kontsevich_.insert(d, n);
  }

  void save() const {
    if (cache_path_.empty()) return;
    CacheContents contents;
    contents.normalization = normalization_snapshot();
    for (const auto& [key, entry] : engine_.cached()) contents.k_values[key] = entry.value;
    contents.kontsevich = kontsevich_.snapshot();
    write_cache(cache_path_, contents);
  }

  KCoefficientEngine& engine() { return engine_; }
  KontsevichTable& kontsevich() { return kontsevich_; }

 private:
  std::map<DegreeOrder, Rational> normalization_snapshot() const {
    std::map<DegreeOrder, Rational> out;
    for (const auto& [key, entry] : engine_.normalization().entries()) out[key] = entry.value;
    return out;
  }

  std::filesystem::path cache_path_;
  KCoefficientEngine engine_;
  KontsevichTable kontsevich_;
};

void print_record(std::ostream& out, const ResultRecord& r, const std::string& format) {
  if (format == "csv") out << csv_header() << '\n' << to_csv(r) << '\n';
  else if (format == "json") out << to_json(r) << '\n';
  else out << to_text(r) << '\n';
}

void print_summary(std::ostream& out, const OracleKind kind, const TrialSummary& s) {
  out << to_string(kind) << ": trials=" << s.trials << " accepted=" << s.accepted << " rejected=" << s.rejected
      << " expected=" << expected_oracle_count(kind) << " counts={";
  bool first = true;
  for (const auto& [count, n] : s.counts) {
    out << (first ? "" : ", ") << count << ":" << n;
    first = false;
  }
  out << "} " << (s.consistent() ? "consistent" : "INCONSISTENT") << '\n';
  for (const auto& r : s.rejections) out << "  rejected " << r << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts rational plane curves with prescribed contacts to a smooth cubic"};
  app.require_subcommand(1);

  TableOptions topts;
  std::string format = "text";
  const std::vector<std::string> formats{"text", "csv", "json"};

  int d = 0, a = 0, b = 0, c = 0, lambda = 0;
  auto* count_cmd = app.add_subcommand("count", "N_d(a,b,c) from the closed form");
  count_cmd->add_option("d", d)->required();
  count_cmd->add_option("a", a)->required();
  count_cmd->add_option("b", b)->required();
  count_cmd->add_option("c", c)->required();
  count_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
  add_table_options(count_cmd, topts);

  int dmax = 2;
  std::string table_format = "csv";
  auto* table_cmd = app.add_subcommand("table", "All computable counts up to a degree");
  table_cmd->add_option("--dmax", dmax)->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
  add_table_options(table_cmd, topts);

  auto* kcoeff_cmd = app.add_subcommand("kcoeff", "The coefficient K_d^lambda");
  kcoeff_cmd->add_option("d", d)->required();
  kcoeff_cmd->add_option("lambda", lambda)->required();
  add_table_options(kcoeff_cmd, topts);

  auto* kont_cmd = app.add_subcommand("kontsevich", "Kontsevich numbers N_1..N_dmax");
  kont_cmd->add_option("--dmax", dmax)->required()->check(CLI::PositiveNumber);
  kont_cmd->add_option("--cache", topts.cache, "Persistent cache file");

  auto* gw_cmd = app.add_subcommand("gw", "Gromov-Witten invariant (3d-a-2c)! N_d(a,0,c)");
  gw_cmd->add_option("d", d)->required();
  gw_cmd->add_option("a", a)->required();
  gw_cmd->add_option("c", c)->required();
  add_table_options(gw_cmd, topts);

  std::string suite = "all";
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity and consistency suites");
  auto suites = verification_suites();
  suites.push_back("all");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suites));
  verify_cmd->add_option("--dmax", dmax)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed);
  bool verbose = false;
  verify_cmd->add_flag("--verbose", verbose, "Print every check, not just failures");
  add_table_options(verify_cmd, topts);

  int trials = 100;
  std::string calib_output;
  auto* calib_cmd = app.add_subcommand("calibrate", "Rebuild the normalization table from the conic oracles");
  calib_cmd->add_option("--seed", seed);
  calib_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  calib_cmd->add_option("--output", calib_output, "Also write the table to this file");

  std::string profile_literal;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a contact profile to terminal profiles");
  reduce_cmd->add_option("profile", profile_literal, "e.g. \"d=2 delta=3 alpha=[0,2] beta=[1,1]\"")->required();
  add_table_options(reduce_cmd, topts);

  std::string oracle_name;
  int oracle_trials = 10;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run an independent geometric oracle");
  std::vector<std::string> kinds{"all"};
  for (auto k : all_oracle_kinds()) kinds.emplace_back(to_string(k));
  oracle_cmd->add_option("which", oracle_name)->required()->check(CLI::IsMember(kinds));
  oracle_cmd->add_option("--seed", seed);
  oracle_cmd->add_option("--trials", oracle_trials)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (count_cmd->parsed()) {
      Session session(topts);
      TangencyCounter counter(session.engine());
      ResultRecord record{d, a, b, c, counter.count(d, a, b, c), "closed-form"};
      if (!TangencyProblem{d, a, b, c}.is_valid()) err << "note: invalid problem, count is 0 by convention\n";
      print_record(out, record, format);
      session.save();
      return kSuccess;
    }

    if (table_cmd->parsed()) {
      Session session(topts);
      TangencyCounter counter(session.engine());
      std::vector<ResultRecord> records;
      std::size_t skipped = 0;
      for (int deg = 1; deg <= dmax; ++deg)
        for (const auto& p : valid_problems(deg)) {
          try {
            records.push_back({p.d, p.a, p.b, p.c, counter.count(p), "closed-form"});
          } catch (const UnknownNormalization&) {
            ++skipped;
          }
        }
      if (table_format == "json") {
        out << to_json(records) << '\n';
      } else {
        out << csv_header() << '\n';
        for (const auto& r : records) out << to_csv(r) << '\n';
      }
      if (skipped) err << "skipped " << skipped << " problems lacking normalization data\n";
      session.save();
      return kSuccess;
    }

    if (kcoeff_cmd->parsed()) {
      Session session(topts);
      const KEntry entry = session.engine().coefficient(d, lambda);
      out << "K_" << d << "^" << lambda << " = " << to_fraction_string(entry.value)
          << " provenance=" << to_string(entry.source) << '\n';
      session.save();
      return kSuccess;
    }

    if (kont_cmd->parsed()) {
      Session session(topts);
      for (int deg = 1; deg <= dmax; ++deg)
        out << "N " << deg << ' ' << kontsevich_number(deg, session.kontsevich()).get_str() << '\n';
      session.save();
      return kSuccess;
    }

    if (gw_cmd->parsed()) {
      Session session(topts);
      TangencyCounter counter(session.engine());
      out << "I_" << d << "(p^" << 3 * d - 1 - a - c << " alpha^" << 3 * d - a - 2 * c << " beta^" << a
          << ") = " << to_fraction_string(counter.gw_invariant(d, a, c)) << '\n';
      session.save();
      return kSuccess;
    }

    if (verify_cmd->parsed()) {
      Session session(topts);
      std::vector<std::string> to_run = suite == "all" ? verification_suites() : std::vector<std::string>{suite};
      bool ok = true;
      for (const auto& name : to_run) {
        VerificationReport report = run_suite(name, dmax, session.engine(), seed);
        for (const auto& e : report.entries) {
          if (e.status == CheckStatus::fail || verbose) {
            const char* tag = e.status == CheckStatus::pass ? "PASS" : e.status == CheckStatus::fail ? "FAIL" : "SKIP";
            out << "  " << tag << ' ' << e.label << (e.detail.empty() ? "" : "  " + e.detail) << '\n';
          }
        }
        out << name << ": passed=" << report.passed() << " failed=" << report.failed()
            << " skipped=" << report.skipped() << (report.ok() ? " OK" : " FAILED") << '\n';
        ok = ok && report.ok();
      }
      session.save();
      return ok ? kSuccess : kVerificationFailure;
    }

    if (calib_cmd->parsed()) {
      CalibrationReport report = calibrate_normalization(seed, trials);
      for (const auto& line : report.derivation) out << "# " << line << '\n';
      report.table.write(out);
      if (!calib_output.empty()) {
        std::ofstream file(calib_output, std::ios::trunc);
        if (!file) throw ParseError("cannot write " + calib_output);
        report.table.write(file);
      }
      out << "# " << (report.matches_shipped ? "matches shipped defaults" : "DIFFERS from shipped defaults") << '\n';
      return report.matches_shipped ? kSuccess : kVerificationFailure;
    }

    if (reduce_cmd->parsed()) {
      Session session(topts);
      const ContactProfile profile = parse_profile(profile_literal);
      const LinearCombination terminal = reduce_to_terminal(profile);
      out << "profile " << profile.to_string() << " free_points=" << free_points(profile) << '\n';
      if (hypothesis_readings_disagree(profile))
        out << "note: e-I(alpha) and e-|alpha| disagree on this profile; e-|alpha| is used\n";
      for (const auto& [p, coeff] : terminal.terms()) out << "  " << coeff.get_str() << " * " << p.to_string() << '\n';
      if (profile.delta == 3) {
        TangencyCounter counter(session.engine());
        const Rational reduced = evaluate_combination(terminal, counter);
        out << "value = " << to_fraction_string(reduced) << " provenance=reduction\n";
        const Rational direct = evaluate_cubic_profile(profile, counter);
        if (direct != reduced) {
          out << "MISMATCH closed form = " << to_fraction_string(direct) << '\n';
          return kVerificationFailure;
        }
      }
      session.save();
      return kSuccess;
    }

    if (oracle_cmd->parsed()) {
      std::vector<OracleKind> which;
      if (oracle_name == "all") which.assign(all_oracle_kinds().begin(), all_oracle_kinds().end());
      else which.push_back(parse_oracle_kind(oracle_name));
      int code = kSuccess;
      for (auto kind : which) {
        TrialSummary s = run_oracle_trials(kind, seed, oracle_trials);
        print_summary(out, kind, s);
        if (s.accepted == 0) code = std::max<int>(code, kOracleDegeneracy);
        else if (!s.consistent() && code == kSuccess) code = kVerificationFailure;
      }
      return code;
    }
  } catch (const UnknownNormalization& e) {
    err << "error: " << e.what() << '\n';
    return kUnknownNormalization;
  } catch (const ZeroNormalization& e) {
    err << "error: " << e.what() << '\n';
    return kUnknownNormalization;
  } catch (const CalibrationMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const DegenerateConfiguration& e) {
    err << "error: " << e.what() << '\n';
    return kOracleDegeneracy;
  } catch (const IdenticallyZeroEliminant& e) {
    err << "error: " << e.what() << '\n';
    return kOracleDegeneracy;
  } catch (const ExtraneousFactorAmbiguity& e) {
    err << "error: " << e.what() << '\n';
    return kOracleDegeneracy;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace tangenttab::cli
