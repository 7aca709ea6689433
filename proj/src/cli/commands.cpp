#include "stirling/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirling/central.hpp"
#include "stirling/cli/output_record.hpp"
#include "stirling/comparators.hpp"
#include "stirling/config.hpp"
#include "stirling/errors.hpp"
#include "stirling/exact_oracles.hpp"
#include "stirling/moments.hpp"
#include "stirling/noncentral.hpp"
#include "stirling/regime_dispatch.hpp"
#include "stirling/stochastic_validation.hpp"

namespace stirling::cli {

namespace {

using nlohmann::json;

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        body(i);
      }
    });
  }
}

// ---------------------------------------------------------------- bounds

struct BoundsOptions {
  long long n = 0;
  long long m = 0;
  std::string method = "auto";
  std::string format = "text";
  bool linear = false;
};

void emit(std::ostream& out, Format format, const OutputRecord& r, bool linear) {
  switch (format) {
    case Format::Text: out << to_text(r, linear) << '\n'; break;
    case Format::Csv: out << to_csv(r, linear) << '\n'; break;
    case Format::Jsonl: out << to_jsonl(r) << '\n'; break;
  }
}

OutputRecord exact_record(const Index& idx, const BigInt& value, Method method, std::string_view regime) {
  BoundBracket b;
  b.method = method;
  b.lower_log = b.upper_log = log_of(value);
  OutputRecord r = make_record(idx, b, regime);
  r.exact = to_decimal(value);
  return r;
}

int cmd_bounds(const BoundsOptions& o, std::ostream& out, std::ostream& err) {
  const Index idx(o.n, o.m);
  const Format format = parse_format(o.format);
  const std::string regime(to_string(classify(idx)));
  std::vector<OutputRecord> records;

  auto single = [&](const BoundBracket& b) {
    if (!b.preconditions_ok) {
      err << "error: " << to_string(b.method) << " not applicable at " << idx.str() << ": " << b.report << '\n';
      return kExitPrecondition;
    }
    records.push_back(make_record(idx, b, regime));
    return kExitOk;
  };

  int code = kExitOk;
  if (o.method == "auto") {
    const DispatchReport rep = best_bracket(idx);
    if (rep.exact) {
      records.push_back(exact_record(idx, *rep.exact, rep.chosen.method, regime));
    } else {
      records.push_back(make_record(idx, rep.chosen, regime));
    }
  } else if (o.method == "thm33") {
    code = single(thm33_bracket(idx));
  } else if (o.method == "thm34") {
    code = single(thm34_bracket(idx));
  } else if (o.method == "thm45") {
    if (idx.m() < 2 || idx.n() == idx.m()) {
      err << "error: THM45 not applicable at " << idx.str() << ": requires m >= 2 and n > m\n";
      return kExitPrecondition;
    }
    code = single(thm45_bracket(idx));
  } else if (o.method == "exact") {
    const unsigned cap = config::exact_cap_from_env();
    if (idx.n() > cap) {
      err << "error: n = " << idx.n() << " exceeds the exactness cap " << cap << " (set STIRLING_EXACT_CAP)\n";
      return kExitPrecondition;
    }
    records.push_back(exact_record(idx, stirling_exact(idx), Method::Exact, regime));
  } else {  // all
    const DispatchReport rep = best_bracket(idx);
    for (const BoundBracket& b : rep.brackets) {
      if (b.preconditions_ok) {
        if (rep.exact) {
          records.push_back(exact_record(idx, *rep.exact, b.method, regime));
        } else {
          records.push_back(make_record(idx, b, regime));
        }
      } else if (format == Format::Text) {
        out << "# " << to_string(b.method) << " not applicable: " << b.report << '\n';
      }
    }
  }
  if (code != kExitOk) {
    return code;
  }
  if (format == Format::Csv) {
    out << csv_header() << '\n';
  }
  for (const OutputRecord& r : records) {
    emit(out, format, r, o.linear);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- exact

int cmd_exact(const BoundsOptions& o, std::ostream& out, std::ostream& err) {
  const Index idx(o.n, o.m);
  const unsigned cap = config::exact_cap_from_env();
  if (idx.n() > cap) {
    err << "error: n = " << idx.n() << " exceeds the exactness cap " << cap << " (set STIRLING_EXACT_CAP)\n";
    return kExitPrecondition;
  }
  const BigInt value = stirling_exact(idx);
  const Format format = parse_format(o.format);
  if (format == Format::Text) {
    out << to_decimal(value) << '\n';
    return kExitOk;
  }
  const OutputRecord r = exact_record(idx, value, Method::Exact, to_string(classify(idx)));
  if (format == Format::Csv) {
    out << csv_header() << '\n';
  }
  emit(out, format, r, o.linear);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct RowResult {
  std::map<std::string, MethodCounts> counts;
  std::vector<Violation> violations;
};

struct ColumnOracles {
  std::vector<BigInt> moment_values;       // S(m + d, m) by the moment route, d = 0..
  std::vector<Rational> probability_cdf;   // P(V_{m-1} <= d), d = 0..
};

void check_bracket(RowResult& row, unsigned n, unsigned m, const BoundBracket& b, long double log_exact) {
  if (!b.preconditions_ok) {
    return;
  }
  const std::string tag(to_string(b.method));
  MethodCounts& c = row.counts[tag];
  ++c.applicable;
  if (b.contains_log(log_exact)) {
    ++c.contained;
  } else {
    row.violations.push_back({n, m, tag});
  }
  if (!b.lower_finite()) {
    ++c.vacuous_lower;
  }
}

void check_exact_rational(RowResult& row, unsigned n, unsigned m, const std::string& tag, const Rational& lower,
                          const Rational& upper, const BigInt& exact, bool lower_valid = true) {
  MethodCounts& c = row.counts[tag];
  ++c.applicable;
  const bool ok = (!lower_valid || lower <= exact) && Rational(exact) <= upper;
  if (ok) {
    ++c.contained;
  } else {
    row.violations.push_back({n, m, tag});
  }
  if (!lower_valid || lower <= 0) {
    ++c.vacuous_lower;
  }
}

void check_agreement(RowResult& row, unsigned n, unsigned m, const std::string& tag, bool agree) {
  MethodCounts& c = row.counts[tag];
  ++c.applicable;
  if (agree) {
    ++c.contained;
  } else {
    row.violations.push_back({n, m, tag});
  }
}

RowResult verify_row(unsigned n, const std::vector<BigInt>& row_values, const std::vector<ColumnOracles>& oracles) {
  RowResult row;
  for (unsigned m = 1; m <= n; ++m) {
    const Index idx(n, m);
    const BigInt& exact = row_values[m];
    const long double log_exact = log_of(exact);
    const unsigned d = n - m;

    const ColumnOracles& col = oracles[m];
    if (d < col.moment_values.size()) {
      check_agreement(row, n, m, "ORACLE_MOMENTS", col.moment_values[d] == exact);
    }
    if (m >= 2 && d < col.probability_cdf.size()) {
      const Rational via = Rational(pow(BigInt(m), n), factorial(m)) * col.probability_cdf[d];
      check_agreement(row, n, m, "ORACLE_PROBABILITY", via == Rational(exact));
    }

    if (m == 1 || d == 0) {
      check_agreement(row, n, m, "EXACT", exact == 1);
    } else if (d <= 2) {
      check_agreement(row, n, m, d == 1 ? "EXACT_NM1" : "EXACT_NM2", exact_near_diagonal(idx) == exact);
    }
    if (d >= 3) {
      check_bracket(row, n, m, thm33_bracket(idx), log_exact);
    }
    if (m >= 2) {
      const Thm34Endpoints e = thm34_endpoints(idx);
      if (e.lower_valid) {
        check_exact_rational(row, n, m, "THM34", e.lower, e.upper, exact);
      }
    }
    if (m >= 2 && d >= 1) {
      check_bracket(row, n, m, thm45_bracket(idx), log_exact);
    }
    {
      const Thm34Endpoints e = thm34_endpoints(idx);
      check_exact_rational(row, n, m, "TRIVIAL_UPPER", Rational(1), e.upper, exact);
    }
    if (d >= 1) {
      const RennieDobsonEndpoints rd = rennie_dobson_endpoints(idx);
      check_exact_rational(row, n, m, "RENNIE_DOBSON", rd.lower, rd.upper, exact);
    }
    const DispatchReport best = best_bracket(idx);
    MethodCounts& c = row.counts["BEST"];
    ++c.applicable;
    if (best.chosen.contains_log(log_exact) && (!best.exact || *best.exact == exact)) {
      ++c.contained;
    } else {
      row.violations.push_back({n, m, "BEST"});
    }
  }
  return row;
}

}  // namespace

VerifySummary verify_grid(unsigned n_max, unsigned jobs) {
  VerifySummary summary;
  summary.n_max = n_max;

  std::vector<std::vector<BigInt>> rows(n_max + 1);
  StirlingRows gen;
  rows[0] = gen.row();
  for (unsigned n = 1; n <= n_max; ++n) {
    gen.advance();
    rows[n] = gen.row();
  }

  // Per-column tables for the two independent exact routes.
  std::vector<ColumnOracles> oracles(n_max + 1);
  parallel_for(n_max, jobs, [&](std::size_t i) {
    const unsigned m = static_cast<unsigned>(i) + 1;
    const unsigned span = std::min(n_max - m, config::kMomentOrderCap);
    ColumnOracles& col = oracles[m];
    col.moment_values.push_back(1);
    if (span > 0) {
      const auto mu = raw_moments(cumulants(m, span), span);
      BigInt fact = 1;
      for (unsigned d = 1; d <= span; ++d) {
        fact *= d;
        col.moment_values.push_back(mu[d] / fact);
        if (mu[d] % fact != 0) {
          col.moment_values.back() = -1;  // non-integer: reported as disagreement
        }
      }
    }
    if (m >= 2) {
      col.probability_cdf = geometric_sum_cdf_exact(m, n_max - m).entries;
    }
  });

  std::vector<RowResult> results(n_max + 1);
  parallel_for(n_max, jobs, [&](std::size_t i) {
    const unsigned n = static_cast<unsigned>(i) + 1;
    results[n] = verify_row(n, rows[n], oracles);
  });

  for (unsigned n = 1; n <= n_max; ++n) {
    summary.points += n;
    for (const auto& [tag, c] : results[n].counts) {
      MethodCounts& total = summary.counts[tag];
      total.applicable += c.applicable;
      total.contained += c.contained;
      total.vacuous_lower += c.vacuous_lower;
    }
    summary.violations.insert(summary.violations.end(), results[n].violations.begin(), results[n].violations.end());
  }
  std::sort(summary.violations.begin(), summary.violations.end());
  return summary;
}

namespace {

struct VerifyOptions {
  long long n_max = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string format = "text";
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.n_max < 2) {
    err << "error: --n-max must be at least 2\n";
    return kExitUsage;
  }
  const Format format = parse_format(o.format);
  const VerifySummary s = verify_grid(static_cast<unsigned>(o.n_max), o.jobs);

  // Seeded Monte-Carlo spot checks of the probability representation;
  // informational, never part of the exit status.
  RandomStream pick(o.seed);
  unsigned mc_total = 0;
  unsigned mc_within = 0;
  for (int k = 0; k < 4; ++k) {
    const unsigned n = 2 + static_cast<unsigned>(pick.next_u64() % (static_cast<unsigned>(o.n_max) - 1));
    // Small m keeps P(V_{m-1} <= n-m) within reach of 20000 draws.
    const unsigned m = 2 + static_cast<unsigned>(pick.next_u64() % std::min(n - 1, 5u));
    const MCReport r = mc_probability_representation(Index(n, m), 20000, pick.split(k).next_u64());
    ++mc_total;
    mc_within += std::fabs(r.z_score()) <= 4.0 ? 1 : 0;
  }

  switch (format) {
    case Format::Text: {
      out << "verify n_max=" << s.n_max << " points=" << s.points << '\n';
      out << std::left << std::setw(20) << "method" << std::right << std::setw(12) << "applicable" << std::setw(12)
          << "contained" << std::setw(15) << "vacuous_lower" << '\n';
      for (const auto& [tag, c] : s.counts) {
        out << std::left << std::setw(20) << tag << std::right << std::setw(12) << c.applicable << std::setw(12)
            << c.contained << std::setw(15) << c.vacuous_lower << '\n';
      }
      out << "mc_spot_checks within 4 std errors: " << mc_within << "/" << mc_total << " (seed " << o.seed << ")\n";
      out << "violations: " << s.violations.size() << '\n';
      break;
    }
    case Format::Csv: {
      out << "method,applicable,contained,vacuous_lower\n";
      for (const auto& [tag, c] : s.counts) {
        out << tag << ',' << c.applicable << ',' << c.contained << ',' << c.vacuous_lower << '\n';
      }
      break;
    }
    case Format::Jsonl: {
      for (const auto& [tag, c] : s.counts) {
        out << json{{"method", tag}, {"applicable", c.applicable}, {"contained", c.contained},
                    {"vacuous_lower", c.vacuous_lower}}
                   .dump()
            << '\n';
      }
      out << json{{"n_max", s.n_max}, {"points", s.points}, {"violations", s.violations.size()},
                  {"mc_within", mc_within}, {"mc_total", mc_total}, {"seed", o.seed}}
                 .dump()
          << '\n';
      break;
    }
  }
  if (!s.violations.empty()) {
    for (const Violation& v : s.violations) {
      err << "violation: n=" << v.n << " m=" << v.m << " method=" << v.method << '\n';
    }
    return kExitViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- compare

struct CompareRow {
  std::string method;
  bool certified = false;
  std::optional<long double> lower_log;
  std::optional<long double> upper_log;
  std::optional<long double> estimate_log;
  std::string note;
};

std::string opt_real(const std::optional<long double>& x) {
  return x ? format_real(static_cast<double>(*x)) : std::string("");
}

int cmd_compare(const BoundsOptions& o, std::ostream& out, std::ostream&) {
  const Index idx(o.n, o.m);
  const Format format = parse_format(o.format);
  std::vector<CompareRow> rows;

  const DispatchReport rep = best_bracket(idx);
  for (const BoundBracket& b : rep.brackets) {
    CompareRow r{std::string(to_string(b.method)), true, std::nullopt, std::nullopt, std::nullopt, b.report};
    if (b.preconditions_ok) {
      r.lower_log = b.lower_log;
      r.upper_log = b.upper_log;
    } else {
      r.certified = false;
      r.note = "not applicable: " + b.report;
    }
    rows.push_back(std::move(r));
  }
  const JordanEstimates j = jordan_estimates(idx);
  rows.push_back({std::string(to_string(j.small_m.method)), false, std::nullopt, std::nullopt, j.small_m.value_log,
                  "m^n/m!"});
  rows.push_back({std::string(to_string(j.large_m.method)), false, std::nullopt, std::nullopt, j.large_m.value_log,
                  "n^(2d)/(2^d d!)"});
  if (idx.m() < idx.n()) {
    const ComparatorValue rd = rennie_dobson_bracket(idx);
    rows.push_back({std::string(to_string(rd.method)), true, rd.lower_log, rd.upper_log, std::nullopt, ""});
    const ComparatorValue mw = moser_wyman_leading(idx);
    rows.push_back({std::string(to_string(mw.method)), false, std::nullopt, std::nullopt, mw.value_log, "leading term"});
  }

  std::optional<BigInt> exact;
  if (idx.n() <= config::exact_cap_from_env()) {
    exact = stirling_exact(idx);
  }
  std::optional<long double> log_exact;
  if (exact) {
    log_exact = log_of(*exact);
  }
  const std::string reference = exact ? to_decimal(*exact) : std::string("");

  auto rel_error = [&](const CompareRow& r) -> std::optional<long double> {
    if (!log_exact || !r.estimate_log) return std::nullopt;
    return std::expm1(*r.estimate_log - *log_exact);
  };
  auto width = [](const CompareRow& r) -> std::optional<long double> {
    if (!r.lower_log || !r.upper_log) return std::nullopt;
    if (!std::isfinite(*r.lower_log)) return std::numeric_limits<long double>::infinity();
    return *r.upper_log - *r.lower_log;
  };
  auto contains = [&](const CompareRow& r) -> std::string {
    if (!log_exact || !r.lower_log || !r.upper_log) return "";
    return (*r.lower_log <= *log_exact && *log_exact <= *r.upper_log) ? "true" : "false";
  };

  switch (format) {
    case Format::Text: {
      out << "S" << idx.str() << " regime=" << to_string(rep.label);
      if (exact) {
        out << " exact=" << (reference.size() <= 60 ? reference : "exp(" + format_real(static_cast<double>(*log_exact)) + ")");
      }
      out << '\n';
      out << std::left << std::setw(16) << "method" << std::setw(11) << "certified" << std::setw(44) << "bracket (log)"
          << std::setw(24) << "estimate (log)" << std::setw(24) << "rel_error" << " contains\n";
      for (const CompareRow& r : rows) {
        std::string bracket;
        if (r.lower_log) bracket = "[" + opt_real(r.lower_log) + ", " + opt_real(r.upper_log) + "]";
        const auto err_rel = rel_error(r);
        out << std::left << std::setw(16) << r.method << std::setw(11) << (r.certified ? "yes" : "no") << std::setw(44)
            << bracket << std::setw(24) << opt_real(r.estimate_log) << std::setw(24) << opt_real(err_rel) << ' '
            << contains(r) << '\n';
      }
      break;
    }
    case Format::Csv: {
      out << "n,m,method,certified,lower_log,upper_log,rel_width,estimate_log,rel_error,contains,reference\n";
      for (const CompareRow& r : rows) {
        out << idx.n() << ',' << idx.m() << ',' << r.method << ',' << (r.certified ? "true" : "false") << ','
            << opt_real(r.lower_log) << ',' << opt_real(r.upper_log) << ',' << opt_real(width(r)) << ','
            << opt_real(r.estimate_log) << ',' << opt_real(rel_error(r)) << ',' << contains(r) << ',' << reference
            << '\n';
      }
      break;
    }
    case Format::Jsonl: {
      auto num = [](const std::optional<long double>& x) -> json {
        if (!x) return nullptr;
        const double v = static_cast<double>(*x);
        if (std::isfinite(v)) return v;
        return v > 0 ? "inf" : "-inf";
      };
      for (const CompareRow& r : rows) {
        out << json{{"n", idx.n()},
                    {"m", idx.m()},
                    {"method", r.method},
                    {"certified", r.certified},
                    {"lower_log", num(r.lower_log)},
                    {"upper_log", num(r.upper_log)},
                    {"rel_width", num(width(r))},
                    {"estimate_log", num(r.estimate_log)},
                    {"rel_error", num(rel_error(r))},
                    {"reference", exact ? json(reference) : json(nullptr)}}
                   .dump()
            << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- sample

struct SampleOptions {
  long long n = 0;
  long long m = 0;
  std::string target = "prob";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::string format = "text";
};

int cmd_sample(const SampleOptions& o, std::ostream& out, std::ostream& err) {
  const Index idx(o.n, o.m);
  const Format format = parse_format(o.format);
  if (o.samples == 0) {
    err << "error: --samples must be positive\n";
    return kExitUsage;
  }
  MCReport r;
  if (o.target == "prob") {
    if (idx.m() < 2) {
      err << "error: the probability representation requires m >= 2\n";
      return kExitPrecondition;
    }
    r = mc_probability_representation(idx, o.samples, o.seed);
  } else {
    if (idx.displacement() > config::kMonteCarloPowerCap) {
      err << "error: the moment representation requires n-m <= " << config::kMonteCarloPowerCap << ", got "
          << idx.displacement() << '\n';
      return kExitPrecondition;
    }
    r = mc_moment_representation(idx, o.samples, o.seed);
  }
  const double z = r.z_score();
  switch (format) {
    case Format::Text:
      out << "target=" << to_string(r.target) << " n=" << idx.n() << " m=" << idx.m() << " samples=" << r.n_samples
          << " seed=" << r.seed << " rng=" << config::kRngName << '\n';
      out << "estimate=" << format_real(r.estimate) << " std_error=" << format_real(r.std_error)
          << " reference=" << format_real(static_cast<double>(r.reference)) << " z=" << format_real(z) << '\n';
      break;
    case Format::Csv:
      out << "n,m,target,samples,seed,estimate,std_error,reference,z\n";
      out << idx.n() << ',' << idx.m() << ',' << to_string(r.target) << ',' << r.n_samples << ',' << r.seed << ','
          << format_real(r.estimate) << ',' << format_real(r.std_error) << ','
          << format_real(static_cast<double>(r.reference)) << ',' << format_real(z) << '\n';
      break;
    case Format::Jsonl:
      out << json{{"n", idx.n()},
                  {"m", idx.m()},
                  {"target", to_string(r.target)},
                  {"samples", r.n_samples},
                  {"seed", r.seed},
                  {"estimate", r.estimate},
                  {"std_error", r.std_error},
                  {"reference", static_cast<double>(r.reference)},
                  {"z", std::isfinite(z) ? json(z) : json(format_real(z))}}
                 .dump()
          << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified bounds for Stirling numbers of the second kind", "stirling"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "csv", "jsonl"};

  BoundsOptions bounds_opts;
  auto* bounds = app.add_subcommand("bounds", "Certified bracket for S(n,m)");
  bounds->add_option("--n", bounds_opts.n, "n")->required();
  bounds->add_option("--m", bounds_opts.m, "m")->required();
  bounds->add_option("--method", bounds_opts.method, "auto|thm33|thm34|thm45|exact|all")
      ->check(CLI::IsMember({"auto", "thm33", "thm34", "thm45", "exact", "all"}));
  bounds->add_option("--format", bounds_opts.format)->check(CLI::IsMember(formats));
  bounds->add_flag("--linear", bounds_opts.linear, "Print exact values as decimal integers");

  BoundsOptions exact_opts;
  auto* exact = app.add_subcommand("exact", "Exact S(n,m) as a decimal integer");
  exact->add_option("--n", exact_opts.n)->required();
  exact->add_option("--m", exact_opts.m)->required();
  exact->add_option("--format", exact_opts.format)->check(CLI::IsMember(formats));
  exact->add_flag("--linear", exact_opts.linear);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Grid sweep of oracle agreement and bracket containment");
  verify->add_option("--n-max", verify_opts.n_max)->required();
  verify->add_option("--seed", verify_opts.seed);
  verify->add_option("--jobs", verify_opts.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_opts.format)->check(CLI::IsMember(formats));

  BoundsOptions compare_opts;
  auto* compare = app.add_subcommand("compare", "Certified brackets beside classical estimates");
  compare->add_option("--n", compare_opts.n)->required();
  compare->add_option("--m", compare_opts.m)->required();
  compare->add_option("--format", compare_opts.format)->check(CLI::IsMember(formats));

  SampleOptions sample_opts;
  auto* sample = app.add_subcommand("sample", "Monte-Carlo check of a probabilistic representation");
  sample->add_option("--n", sample_opts.n)->required();
  sample->add_option("--m", sample_opts.m)->required();
  sample->add_option("--target", sample_opts.target)->check(CLI::IsMember({"prob", "moment"}));
  sample->add_option("--samples", sample_opts.samples);
  sample->add_option("--seed", sample_opts.seed);
  sample->add_option("--format", sample_opts.format)->check(CLI::IsMember(formats));

  std::vector<const char*> argv{"stirling"};
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bounds) return cmd_bounds(bounds_opts, out, err);
    if (*exact) return cmd_exact(exact_opts, out, err);
    if (*verify) return cmd_verify(verify_opts, out, err);
    if (*compare) return cmd_compare(compare_opts, out, err);
    if (*sample) return cmd_sample(sample_opts, out, err);
  } catch (const InvalidIndex& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace stirling::cli
