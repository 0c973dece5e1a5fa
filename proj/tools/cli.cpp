#include "cli.hpp"

#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "gwbinom/coefficients.hpp"
#include "gwbinom/necklace.hpp"
#include "gwbinom/render.hpp"

namespace gwbinom::cli {
namespace {

namespace co = coefficients;
using render::Json;

constexpr int kExitOk = 0;
constexpr int kExitDivergence = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void check_format(const std::string& f) {
  if (f != "text" && f != "json" && f != "csv") throw UsageError("unknown format '" + f + "'");
}

void check_q(std::int64_t q) {
  if (q < 3 || q % 2 == 0) throw UsageError("--q must be an odd prime power; only its parity is used");
}

std::string csv_row(const co::EnrichedCoefficient& c) {
  std::ostringstream s;
  s << c.n << ',' << c.j << ',' << (c.twisted ? "true" : "false") << ',' << co::to_string(c.method) << ','
    << c.value.rank().str() << ',' << to_string(c.value.disc()) << ',' << c.value.display() << '\n';
  return s.str();
}

constexpr const char* kCoeffCsvHeader = "n,j,twisted,method,rank,disc,display\n";

struct CoeffArgs {
  std::int64_t n = -1;
  std::int64_t j = -1;
  bool twisted = false;
  bool oracle = false;
  std::string format = "text";
};

int run_coeff(const CoeffArgs& a, std::ostream& out) {
  check_format(a.format);
  if (a.j < 0) throw UsageError("--j is required");
  co::EnrichedCoefficient closed;
  std::optional<co::EnrichedCoefficient> oracle;
  if (a.twisted) {
    if (a.n >= 0 && a.n != 2 * a.j) throw UsageError("--twisted requires n = 2j");
    closed = co::twisted_closed(a.j);
    if (a.oracle) oracle = co::twisted_oracle(a.j);
  } else {
    if (a.n < 0) throw UsageError("--n is required unless --twisted is given");
    if (a.j > a.n) throw UsageError("j must satisfy 0 <= j <= n");
    closed = co::untwisted_closed(a.n, a.j);
    if (a.oracle) oracle = co::untwisted_oracle(a.n, a.j);
  }
  const bool agree = !oracle || oracle->value == closed.value;

  if (a.format == "json") {
    Json j = render::to_json(closed);
    if (oracle) {
      j["oracle"] = render::to_json(oracle->value);
      j["agree"] = agree;
    }
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << kCoeffCsvHeader << csv_row(closed);
    if (oracle) out << csv_row(*oracle);
  } else {
    out << closed.value.display() << '\n';
    out << "rank: " << closed.value.rank().str() << '\n';
    out << "disc: " << to_string(closed.value.disc()) << '\n';
    if (oracle) {
      out << "oracle: " << oracle->value.display() << '\n';
      out << "agree: " << (agree ? "yes" : "no") << '\n';
    }
  }
  return agree ? kExitOk : kExitDivergence;
}

int run_triangle(int rows, const std::string& format, std::ostream& out) {
  check_format(format);
  if (rows < 1) throw UsageError("--rows must be positive");
  const auto table = co::triangle(rows);
  if (format == "json") {
    out << render::triangle_json(table).dump() << '\n';
  } else if (format == "csv") {
    out << render::triangle_csv(table);
  } else {
    out << render::triangle_text(table);
  }
  return kExitOk;
}

int run_twisted(int max_j, bool with_oracle, const std::string& format, std::ostream& out) {
  check_format(format);
  if (max_j < 1) throw UsageError("--max-j must be positive");
  std::vector<co::EnrichedCoefficient> closed;
  std::vector<co::EnrichedCoefficient> oracle;
  bool agree = true;
  for (int j = 1; j <= max_j; ++j) {
    closed.push_back(co::twisted_closed(j));
    if (with_oracle) {
      oracle.push_back(co::twisted_oracle(j));
      agree = agree && oracle.back().value == closed.back().value;
    }
  }
  if (format == "json") {
    Json arr = Json::array();
    for (std::size_t i = 0; i < closed.size(); ++i) {
      Json j = render::to_json(closed[i]);
      if (with_oracle) {
        j["oracle"] = render::to_json(oracle[i].value);
        j["agree"] = oracle[i].value == closed[i].value;
      }
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
  } else if (format == "csv") {
    out << kCoeffCsvHeader;
    for (std::size_t i = 0; i < closed.size(); ++i) {
      out << csv_row(closed[i]);
      if (with_oracle) out << csv_row(oracle[i]);
    }
  } else {
    for (std::size_t i = 0; i < closed.size(); ++i) out << (i ? ", " : "") << closed[i].value.display();
    out << '\n';
    if (with_oracle) out << "oracle agrees: " << (agree ? "yes" : "no") << '\n';
  }
  return agree ? kExitOk : kExitDivergence;
}

std::string axis_text(const necklace::AxisIndex& a) {
  return "m=" + std::to_string(a.m) + " type " + std::to_string(static_cast<int>(a.type));
}

int run_necklaces(int n, int j, bool classify, const std::string& format, std::ostream& out) {
  check_format(format);
  if (n < 1 || j < 0 || j > n) throw UsageError("need n >= 1 and 0 <= j <= n");
  necklace::check_enumeration_limit(n);
  const auto orbits = necklace::enumerate_orbits(n, j);
  std::optional<necklace::FlipFixedCounts> counts;
  if (classify && n % 2 == 0) counts = necklace::classify_flip_fixed(n, j);

  if (format == "json") {
    Json catalog = render::orbit_catalog(n, j, orbits);
    if (classify) {
      if (counts) {
        catalog["classification"] = {{"type1_even", counts->type1_even},
                                     {"type2_even", counts->type2_even},
                                     {"odd_fixed", counts->odd_fixed}};
      } else {
        catalog["classification"] = nullptr;
      }
    }
    out << catalog.dump(2) << '\n';
  } else if (format == "csv") {
    out << "canonical,period,flip_fixed,axes\n";
    for (const auto& rec : orbits) {
      out << rec.canonical.to_bitstring() << ',' << rec.period << ',' << (rec.flip_fixed ? "true" : "false") << ',';
      for (std::size_t i = 0; i < rec.axes.size(); ++i) {
        out << (i ? ";" : "") << rec.axes[i].m << ':' << static_cast<int>(rec.axes[i].type);
      }
      out << '\n';
    }
  } else {
    out << orbits.size() << " orbits of Neck(" << n << ", " << j << ")\n";
    for (const auto& rec : orbits) {
      out << rec.canonical.to_bitstring() << "  period " << rec.period << (rec.flip_fixed ? "  flip-fixed" : "");
      if (classify) {
        for (const auto& a : rec.axes) out << "  [" << axis_text(a) << ']';
      }
      out << '\n';
    }
    if (counts) {
      out << "type1_even " << counts->type1_even << "  type2_even " << counts->type2_even << "  odd_fixed "
          << counts->odd_fixed << '\n';
    }
  }
  return kExitOk;
}

struct VerifyArgs {
  int max_n = 16;
  int twisted_max_j = 10;
  int jobs = 0;
  bool no_timing = false;
  bool mutate = false;
  std::string format = "text";
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.format != "text" && a.format != "json") throw UsageError("verify supports text and json output");
  if (a.max_n < 0 || a.twisted_max_j < 0 || a.jobs < 0) throw UsageError("limits must be non-negative");
  const auto report = co::verify({a.max_n, a.twisted_max_j, a.jobs, a.mutate});

  if (a.format == "json") {
    Json j;
    j["ok"] = report.ok();
    j["cells"] = Json::array();
    for (const auto& c : report.cells) {
      Json cell{{"n", c.n}, {"j", c.j}, {"twisted", c.twisted}, {"closed", render::to_json(c.closed)},
                {"oracle", render::to_json(c.oracle)}, {"agree", c.agree}};
      if (!a.no_timing) cell["seconds"] = c.seconds;
      j["cells"].push_back(std::move(cell));
    }
    j["properties"] = Json::array();
    for (const auto& p : report.properties) {
      j["properties"].push_back({{"name", p.name}, {"passed", p.passed}, {"detail", p.detail}});
    }
    if (!a.no_timing) j["seconds"] = report.seconds;
    out << j.dump(2) << '\n';
  } else {
    out << std::fixed << std::setprecision(6);
    for (const auto& c : report.cells) {
      out << (c.twisted ? "twisted " : "        ") << "n=" << std::setw(2) << c.n << " j=" << std::setw(2) << c.j
          << "  closed " << std::setw(8) << c.closed.display() << "  oracle " << std::setw(8) << c.oracle.display()
          << "  " << (c.agree ? "ok" : "DIVERGES");
      if (!a.no_timing) out << "  " << c.seconds << " s";
      out << '\n';
    }
    for (const auto& p : report.properties) {
      out << "property " << p.name << ": " << (p.passed ? "pass" : "FAIL " + p.detail) << '\n';
    }
    if (const auto d = report.first_divergence()) {
      out << "first divergence: " << (d->twisted ? "twisted " : "") << "n=" << d->n << " j=" << d->j << '\n';
    }
    out << (report.ok() ? "all cells agree" : "verification FAILED");
    if (!a.no_timing) out << " (" << report.seconds << " s)";
    out << '\n';
  }
  return report.ok() ? kExitOk : kExitDivergence;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratically enriched binomial coefficients over F_q, q odd"};
  app.require_subcommand(1);
  std::int64_t q = 3;
  app.add_option("--q", q, "Odd prime power (values are independent of q; only parity is checked)");

  CoeffArgs coeff;
  auto* c = app.add_subcommand("coeff", "One enriched binomial coefficient");
  c->add_option("--n", coeff.n, "Degree n");
  c->add_option("--j", coeff.j, "Subset size j")->required();
  c->add_flag("--twisted", coeff.twisted, "Quadratically twisted coefficient (n = 2j)");
  c->add_flag("--oracle", coeff.oracle, "Also compute the orbit-enumeration value");
  c->add_option("--format", coeff.format, "text | json | csv");

  int rows = 9;
  std::string triangle_format = "text";
  auto* t = app.add_subcommand("triangle", "Rows of the enriched Pascal triangle");
  t->add_option("--rows", rows, "Number of rows");
  t->add_option("--format", triangle_format, "text | json | csv");

  int max_j = 8;
  bool twisted_oracle = false;
  std::string twisted_format = "text";
  auto* tw = app.add_subcommand("twisted", "Twisted coefficients for j = 1 .. max-j");
  tw->add_option("--max-j", max_j, "Largest j");
  tw->add_flag("--oracle", twisted_oracle, "Compare against the twisted orbit enumeration");
  tw->add_option("--format", twisted_format, "text | json | csv");

  int neck_n = 0;
  int neck_j = 0;
  bool classify = false;
  std::string neck_format = "text";
  auto* nk = app.add_subcommand("necklaces", "Rotation orbits of Neck(n, j)");
  nk->add_option("--n", neck_n, "Bead count")->required();
  nk->add_option("--j", neck_j, "Blue beads")->required();
  nk->add_flag("--classify", classify, "Axis types and flip-fixed summary");
  nk->add_option("--format", neck_format, "text | json | csv");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Closed forms against orbit enumeration");
  v->add_option("--max-n", verify.max_n, "Untwisted cells 1 <= n <= max-n");
  v->add_option("--twisted-max-j", verify.twisted_max_j, "Twisted cells 1 <= j <= max");
  v->add_option("--jobs", verify.jobs, "Worker threads (0: all cores)");
  v->add_flag("--no-timing", verify.no_timing, "Omit timings for byte-stable output");
  v->add_option("--format", verify.format, "text | json");
  v->add_flag("--mutate-closed", verify.mutate)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.count("--q") != 0) check_q(q);
    if (*c) return run_coeff(coeff, out);
    if (*t) return run_triangle(rows, triangle_format, out);
    if (*tw) return run_twisted(max_j, twisted_oracle, twisted_format, out);
    if (*nk) return run_necklaces(neck_n, neck_j, classify, neck_format, out);
    if (*v) return run_verify(verify, out);
  } catch (const necklace::LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gwbinom::cli
