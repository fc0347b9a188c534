// cochar: Hilbert series, multiplicity tables, catalog verification and
// asymptotic checks for relatively free algebras of block triangular
// matrix algebras.
//
// Exit codes: 0 success/match, 1 mismatch or failed check, 2 usage error or
// unknown entry, 3 internal assertion (integrality), 4 interpolation window
// too small.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cochar/catalog.hpp"
#include "cochar/multiplicity.hpp"
#include "cochar/schur.hpp"
#include "cochar/tideal.hpp"
#include "json.hpp"

#ifndef COCHAR_DEFAULT_CATALOG
#define COCHAR_DEFAULT_CATALOG "data/catalog.json"
#endif
#ifndef COCHAR_VERSION
#define COCHAR_VERSION "0.0.0"
#endif

namespace {

using namespace cochar;
using nlohmann::json;

std::string catalog_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("COCHAR_CATALOG")) return env;
  return COCHAR_DEFAULT_CATALOG;
}

std::string checksum_hex(std::uint64_t c) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)c);
  return buf;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string exps_csv(const std::vector<int>& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  return os.str();
}

json meta_json(int p, int q, int d, int cap, const Catalog* cat) {
  json m;
  m["p"] = p;
  m["q"] = q;
  m["d"] = d;
  m["cap"] = cap;
  m["version"] = COCHAR_VERSION;
  m["catalog_checksum"] = cat ? checksum_hex(cat->checksum()) : "";
  return m;
}

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw argument_error("bad partition part: " + item);
    parts.push_back(v);
  }
  return Partition(parts);
}

// Rows of a t-space series as (exponent vector, num, den), sorted by total
// degree then lexicographically by exponents.
struct SeriesRow {
  std::vector<int> exps;
  int deg;
  Rat coeff;
};

std::vector<SeriesRow> series_rows(const Series& h) {
  std::vector<SeriesRow> rows;
  for (const Term& t : h.terms()) {
    SeriesRow r;
    r.exps = key_to_vector(t.key, h.nvars());
    r.deg = key_tdegree(t.key, h.nvars(), h.space());
    r.coeff = t.coeff;
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const SeriesRow& a, const SeriesRow& b) {
    return a.deg != b.deg ? a.deg < b.deg : a.exps < b.exps;
  });
  return rows;
}

int cmd_hilbert(int p, int q, int d, int cap, const std::string& format,
                const Catalog* cat) {
  Series h = hilbert_rpq(p, q, d, cap);
  std::vector<SeriesRow> rows = series_rows(h);
  if (format == "csv") {
    std::printf("exps,num,den\n");
    for (const auto& r : rows)
      std::printf("%s,%s,%s\n", csv_quote(exps_csv(r.exps)).c_str(),
                  r.coeff.get_num().get_str().c_str(),
                  r.coeff.get_den().get_str().c_str());
  } else {
    json out;
    out["meta"] = meta_json(p, q, d, cap, cat);
    out["rows"] = json::array();
    for (const auto& r : rows)
      out["rows"].push_back({{"exps", r.exps},
                             {"num", r.coeff.get_num().get_str()},
                             {"den", r.coeff.get_den().get_str()}});
    std::printf("%s\n", out.dump(1).c_str());
  }
  return 0;
}

int cmd_table(int p, int q, int d, int cap, const std::string& format,
              const Catalog* cat) {
  MultiplicitySeries m = extract(hilbert_rpq(p, q, d, cap));
  for (const auto& [lam, c] : m.coeffs())
    if (!is_integer(c) || c < 0) {
      std::fprintf(stderr, "internal error: m_%s = %s is not a nonnegative integer\n",
                   lam.to_string().c_str(), rat_to_string(c).c_str());
      return 3;
    }
  if (format == "csv") {
    std::printf("lambda,m\n");
    for (const auto& [lam, c] : m.coeffs())
      std::printf("%s,%s\n", csv_quote(lam.to_string()).c_str(),
                  c.get_num().get_str().c_str());
  } else {
    json out;
    out["meta"] = meta_json(p, q, d, cap, cat);
    out["rows"] = json::array();
    for (const auto& [lam, c] : m.coeffs())
      out["rows"].push_back(
          {{"lambda", lam.to_string()}, {"m", c.get_num().get_str()}});
    std::printf("%s\n", out.dump(1).c_str());
  }
  return 0;
}

int cmd_verify(const Catalog& cat, const std::string& entry, int d, int cap) {
  CompareReport r = compare_entry(cat, entry, d, cap);
  if (r.equal) {
    std::printf("%s: EQUAL up to degree %d (d=%d)\n", entry.c_str(), r.cap, r.d);
    return 0;
  }
  const auto& [lam, want, got] = *r.first_mismatch;
  std::printf("%s: MISMATCH at lambda=(%s): closed form %s, pipeline %s\n",
              entry.c_str(), lam.to_string().c_str(),
              rat_to_string(want).c_str(), rat_to_string(got).c_str());
  return 1;
}

// Sample points for a leading form at scale s, following its constraint.
std::vector<int> constraint_point(const LeadingForm& lf, int s) {
  std::vector<int> n(lf.nvars, 0);
  int rows = lf.nvars, last = -1;
  if (std::sscanf(lf.constraint.c_str(), "rows=%d,last=%d", &rows, &last) >= 1) {
    for (int i = 0; i < rows && i < lf.nvars; ++i) n[i] = s;
    if (last >= 0 && rows >= 1) n[rows - 1] = last;
    return n;
  }
  for (int i = 0; i < lf.nvars; ++i) n[i] = s;
  if (lf.constraint == "n3>=n1" && lf.nvars >= 3) n[2] = 2 * s;
  return n;
}

int asym_ratio(const Catalog& cat, const std::string& id,
               const std::vector<int>& svals) {
  const ClosedFormEntry& e = cat.entry(id);
  if (e.leading.empty()) {
    std::fprintf(stderr, "%s has no leading forms\n", id.c_str());
    return 2;
  }
  bool all_pass = true;
  for (const LeadingForm& lf : e.leading) {
    std::vector<std::vector<int>> pts;
    for (int s : svals) pts.push_back(constraint_point(lf, s));
    RatioReport rr = asym_ratio_check(e, lf, pts);
    std::printf("%s%s%s:\n", id.c_str(), lf.constraint.empty() ? "" : " ",
                lf.constraint.c_str());
    for (const RatioSample& smp : rr.samples) {
      std::printf("  n=(%s)  exact=%s  leading=%s  ratio=%s\n",
                  exps_csv(smp.nvec).c_str(), rat_to_string(smp.exact).c_str(),
                  rat_to_string(smp.predicted).c_str(),
                  rat_to_string(smp.ratio).c_str());
    }
    std::printf("  %s\n", rr.pass ? "PASS" : "FAIL");
    all_pass = all_pass && rr.pass;
  }
  return all_pass ? 0 : 1;
}

int asym_interpolate_entry(const Catalog& cat, const std::string& id) {
  const ClosedFormEntry& e = cat.entry(id);
  NPoly lf = leading_form_2var(e);
  std::printf("%s leading form: %s\n", id.c_str(), lf.to_string().c_str());
  for (const LeadingForm& want : e.leading)
    if (want.constraint.empty()) {
      bool ok = lf == want.poly();
      std::printf("catalog comparison: %s\n", ok ? "MATCH" : "MISMATCH");
      return ok ? 0 : 1;
    }
  return 0;
}

int asym_interpolate_pipeline(const Catalog& cat, int p, int q,
                              const std::vector<int>& window) {
  InterpWindow w{20, 27, 20, 33, 7, 13};
  if (!window.empty()) {
    if (window.size() != 6)
      throw CLI::ValidationError("--window needs n1lo,n1hi,n2lo,n2hi,deg1,deg2");
    w = InterpWindow{window[0], window[1], window[2],
                     window[3], window[4], window[5]};
  }
  NPoly lf = leading_form_pipeline_2var(p, q, w);
  std::printf("pipeline (%d,%d) leading form: %s\n", p, q,
              lf.to_string().c_str());
  for (const std::string& id : cat.ids()) {
    const ClosedFormEntry& e = cat.entry(id);
    if (e.pq && e.pq->first == p && e.pq->second == q && e.nvars == 2)
      for (const LeadingForm& want : e.leading)
        if (want.constraint.empty()) {
          bool ok = lf == want.poly();
          std::printf("catalog comparison (%s): %s\n", id.c_str(),
                      ok ? "MATCH" : "MISMATCH");
          return ok ? 0 : 1;
        }
  }
  return 0;
}

int cmd_schur(const std::string& lambda, int d) {
  Partition lam = parse_partition(lambda);
  Series s = schur_poly(lam, d);
  std::printf("S_(%s)(t_1..t_%d) = %s\n", lam.to_string().c_str(), d,
              s.to_string().c_str());
  return 0;
}

// Fast subset of the acceptance checks, for installation sanity.
int cmd_selftest(const Catalog& cat) {
  struct Check {
    const char* name;
    bool ok;
  };
  std::vector<Check> checks;

  {
    Series lhs = sum_snn(4, 12);
    RationalExpr e(4, VarSpace::t_space);
    Series num = Series::constant(1, 4, VarSpace::t_space) -
                 Series::monomial(1, key_from(std::vector<int>{1, 1, 1, 1}), 4,
                                  VarSpace::t_space);
    std::vector<DenFactor> den;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        std::vector<int> ex(4, 0);
        ex[i] = ex[j] = 1;
        den.push_back({key_from(ex), 1});
      }
    e.add({num, den});
    checks.push_back({"f closed form", lhs == e.expand(4, 12)});
  }
  {
    CompareReport r = compare_entry(cat, "f", 4, 12);
    checks.push_back({"M'(f) = 1/(1-v2)", r.equal});
  }
  {
    CompareReport r = compare_entry(cat, "f2", 4, 12);
    checks.push_back({"M'(f^2)", r.equal});
  }
  {
    CompareReport r = compare_entry(cat, "R02_2var", 2, 20);
    checks.push_back({"R02 two variables", r.equal});
  }
  {
    CompareReport r = compare_entry(cat, "R03_2var", 2, 14);
    checks.push_back({"R03 two variables", r.equal});
  }
  {
    MultiplicitySeries a = mult_uk(2, 2, 8);
    MultiplicitySeries b = extract(hilbert_rpq(2, 0, 2, 8));
    checks.push_back({"U_2 cross-check", a == b});
  }

  bool all = true;
  for (const Check& c : checks) {
    std::printf("%-22s %s\n", c.name, c.ok ? "PASS" : "FAIL");
    all = all && c.ok;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cocharacter multiplicity computations for block "
               "triangular matrix algebras"};
  app.require_subcommand(1);

  std::string catalog_flag;
  int threads = 0;
  app.add_option("--catalog", catalog_flag, "Catalog file path");
  app.add_option("--threads", threads, "Worker thread count (default: cores)");

  int p = 0, q = 0, d = 2, cap = 10;
  std::string format = "csv";
  std::string entry, lambda, mode = "interpolate", pipeline;
  std::vector<int> points{8, 16, 32}, window;

  CLI::App* c_hilb = app.add_subcommand("hilbert", "Hilbert series of F_d(R_{p,q})");
  CLI::App* c_table = app.add_subcommand("table", "Multiplicity table of R_{p,q}");
  for (CLI::App* c : {c_hilb, c_table}) {
    c->add_option("--p", p, "Number of 1x1 blocks")->required();
    c->add_option("--q", q, "Number of 2x2 blocks")->required();
    c->add_option("--d", d, "Variable count");
    c->add_option("--deg", cap, "Total degree cap");
    c->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }

  CLI::App* c_verify = app.add_subcommand("verify", "Compare a catalog entry against the pipeline");
  c_verify->add_option("--entry", entry, "Catalog entry id")->required();
  c_verify->add_option("--d", d, "Variable count");
  c_verify->add_option("--deg", cap, "Comparison degree cap");

  CLI::App* c_asym = app.add_subcommand("asym", "Leading-form interpolation or ratio check");
  c_asym->add_option("--entry", entry, "Catalog entry id");
  c_asym->add_option("--pipeline", pipeline, "p,q pair for pipeline interpolation");
  c_asym->add_option("--mode", mode, "interpolate or ratio")
      ->check(CLI::IsMember({"interpolate", "ratio"}));
  c_asym->add_option("--points", points, "Sample scales for ratio mode")
      ->delimiter(',');
  c_asym->add_option("--window", window,
                     "n1lo,n1hi,n2lo,n2hi,deg1,deg2 for pipeline interpolation")
      ->delimiter(',');

  CLI::App* c_schur = app.add_subcommand("schur", "Print a Schur polynomial");
  c_schur->add_option("--lambda", lambda, "Partition, e.g. 2,1")->required();
  c_schur->add_option("--d", d, "Variable count");

  CLI::App* c_self = app.add_subcommand("selftest", "Fast acceptance subset");
  for (CLI::App* c : {c_hilb, c_table, c_verify, c_asym, c_schur, c_self})
    c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (threads > 0) cochar::set_num_threads(threads);
    cochar::Catalog cat = cochar::Catalog::load(catalog_path(catalog_flag));

    if (app.got_subcommand(c_hilb)) return cmd_hilbert(p, q, d, cap, format, &cat);
    if (app.got_subcommand(c_table)) return cmd_table(p, q, d, cap, format, &cat);
    if (app.got_subcommand(c_verify)) return cmd_verify(cat, entry, d, cap);
    if (app.got_subcommand(c_schur)) return cmd_schur(lambda, d);
    if (app.got_subcommand(c_self)) return cmd_selftest(cat);
    if (app.got_subcommand(c_asym)) {
      if (mode == "ratio") {
        if (entry.empty()) {
          std::fprintf(stderr, "ratio mode needs --entry\n");
          return 2;
        }
        return asym_ratio(cat, entry, points);
      }
      if (!entry.empty()) return asym_interpolate_entry(cat, entry);
      if (!pipeline.empty()) {
        int pp, qq;
        if (std::sscanf(pipeline.c_str(), "%d,%d", &pp, &qq) != 2) {
          std::fprintf(stderr, "--pipeline needs p,q\n");
          return 2;
        }
        return asym_interpolate_pipeline(cat, pp, qq, window);
      }
      std::fprintf(stderr, "asym needs --entry or --pipeline\n");
      return 2;
    }
  } catch (const cochar::window_error& e) {
    std::fprintf(stderr, "window error: %s\n", e.what());
    return 4;
  } catch (const cochar::catalog_error& e) {
    std::fprintf(stderr, "catalog error: %s\n", e.what());
    return 2;
  } catch (const cochar::argument_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const cochar::dimension_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
  return 2;
}
