// Command-line front end: every library operation as a subcommand with JSON output.
//
// Exit codes: 0 success, 1 a verified claim fails, 2 usage or invalid input,
// 3 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "specturan/bounds.hpp"
#include "specturan/canonical.hpp"
#include "specturan/enumerate.hpp"
#include "specturan/families.hpp"
#include "specturan/graph6.hpp"
#include "specturan/motifs.hpp"
#include "specturan/spectral.hpp"
#include "specturan/verify.hpp"

namespace st = specturan;
using json = nlohmann::ordered_json;
using big_graph = st::basic_graph<4>;

namespace {

struct cli_config {
  std::size_t max_vertices = 64;
  double tol = st::default_tol;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  std::string cache_dir;
  std::string output = "json";
  bool allow_large = false;

  json to_json() const {
    json j = {{"max_vertices", max_vertices}, {"tol", tol}, {"threads", threads}, {"output", output}};
    if (!cache_dir.empty()) j["cache_dir"] = cache_dir;
    return j;
  }
  st::enum_options enumeration() const {
    st::enum_options o;
    o.threads = threads;
    o.allow_large = allow_large;
    return o;
  }
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Defaults, then ST_* environment variables. Flags are applied later by CLI11 and win.
cli_config config_from_env() {
  cli_config c;
  auto env = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  };
  try {
    if (auto v = env("ST_TOL")) c.tol = std::stod(*v);
    if (auto v = env("ST_MAX_VERTICES")) c.max_vertices = std::stoul(*v);
    if (auto v = env("ST_THREADS")) c.threads = std::stoul(*v);
  } catch (const std::exception&) {
    throw usage_error("malformed ST_* environment variable");
  }
  if (auto v = env("ST_CACHE_DIR")) c.cache_dir = *v;
  if (auto v = env("ST_OUTPUT")) c.output = *v;
  return c;
}

std::string read_graph_argument(const std::string& arg) {
  if (arg != "-") return arg;
  std::string line;
  while (std::getline(std::cin, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    return line.substr(b, e - b + 1);
  }
  throw usage_error("no graph on standard input");
}

big_graph load_graph(const std::string& arg, const cli_config& cfg) {
  const std::string text = read_graph_argument(arg);
  const big_graph g = st::graph6_decode<4>(text);
  if (g.order() > cfg.max_vertices)
    throw st::resource_error("graph has " + std::to_string(g.order()) + " vertices; the limit is " +
                             std::to_string(cfg.max_vertices));
  return g;
}

json poly_json(const st::int_poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.descending_coeffs()) coeffs.push_back(c.str());
  return {{"coeffs", coeffs}, {"text", p.to_string()}};
}

json degree_sequence(const big_graph& g) {
  std::vector<std::size_t> d;
  for (st::vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

void emit(const json& j, const cli_config& cfg, const std::string& plain) {
  if (cfg.output == "plain") {
    std::cout << plain;
    if (!plain.empty() && plain.back() != '\n') std::cout << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

/// "0,1|2,3,4" into cells.
std::vector<std::vector<st::vertex>> parse_cells(const std::string& text) {
  std::vector<std::vector<st::vertex>> cells;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, '|')) {
    std::vector<st::vertex> c;
    std::stringstream cs(cell);
    std::string v;
    while (std::getline(cs, v, ',')) {
      try {
        c.push_back(static_cast<st::vertex>(std::stoul(v)));
      } catch (const std::exception&) {
        throw usage_error("malformed --cells value '" + text + "'");
      }
    }
    cells.push_back(std::move(c));
  }
  return cells;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw usage_error("--m-range expects a..b");
  try {
    const auto a = std::stoll(text.substr(0, dots));
    const auto b = std::stoll(text.substr(dots + 2));
    if (a > b) throw usage_error("--m-range is empty");
    return {a, b};
  } catch (const std::invalid_argument&) {
    throw usage_error("--m-range expects a..b");
  } catch (const std::out_of_range&) {
    throw usage_error("--m-range expects a..b");
  }
}

// ---------------------------------------------------------------------------

struct family_args {
  std::string name;
  std::map<std::string, std::int64_t> values;
  bool json_out = false;
};

int run_family(const family_args& a, const cli_config& cfg) {
  const auto kind = st::parse_family(a.name);
  if (!kind) throw usage_error("unknown family '" + a.name + "'");
  st::family_spec spec{*kind, {}};
  for (const auto& p : st::info(*kind).params) {
    const auto it = a.values.find(std::string(p));
    if (it == a.values.end()) throw usage_error(a.name + " needs --" + std::string(p));
    spec.params.push_back(it->second);
  }
  const big_graph g = st::build<4>(spec);
  if (g.order() > cfg.max_vertices)
    throw st::resource_error(spec.to_string() + " has " + std::to_string(g.order()) + " vertices; the limit is " +
                             std::to_string(cfg.max_vertices));
  const std::string g6 = st::graph6_encode(g);
  if (a.json_out) {
    json j = {{"family", spec.to_string()}, {"graph6", g6}, {"n", g.order()}, {"m", g.size()},
              {"degree_sequence", degree_sequence(g)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << g6 << '\n';
  }
  return 0;
}

int run_rho(const std::string& arg, const cli_config& cfg) {
  const auto g = load_graph(arg, cfg);
  const auto sp = st::spectral_radius(g, cfg.tol);
  json j = {{"rho", sp.rho},
            {"bracket", st::bracket_json(sp.bracket)},
            {"perron", sp.perron},
            {"ustar", sp.ustar},
            {"component", sp.component},
            {"residual", sp.residual},
            {"params", cfg.to_json()}};
  emit(j, cfg, fmt(sp.rho));
  return 0;
}

int run_charpoly(const std::string& arg, const cli_config& cfg) {
  const auto g = load_graph(arg, cfg);
  const auto p = st::char_poly(g);
  json j = poly_json(p);
  j["n"] = g.order();
  emit(j, cfg, p.to_string());
  return 0;
}

int run_quotient(const std::string& arg, const std::string& cells_text, const cli_config& cfg) {
  const auto g = load_graph(arg, cfg);
  std::optional<std::vector<std::vector<st::vertex>>> seed;
  if (!cells_text.empty()) seed = parse_cells(cells_text);
  const auto q = st::equitable_partition(g, seed);
  st::int_poly qp = st::characteristic_polynomial(q.b);
  const bool divides = st::char_poly(g).divisible_by(qp);
  json j = {{"cells", q.cells}, {"B", q.b}, {"charpoly_B", poly_json(qp)}, {"divides", divides}};
  emit(j, cfg, qp.to_string() + (divides ? " divides" : " does not divide") + " charpoly(G)");
  return 0;
}

int run_motif(const std::string& arg, const std::string& what, const cli_config& cfg) {
  const auto g = load_graph(arg, cfg);
  // c<t> is the cycle C_t; c<t>+ and ct:<t> are C_t^+.
  bool plus = false;
  std::size_t t = 0;
  try {
    if (what.rfind("ct:", 0) == 0) {
      plus = true;
      t = std::stoul(what.substr(3));
    } else if (what.size() >= 2 && what[0] == 'c') {
      std::string digits = what.substr(1);
      if (!digits.empty() && digits.back() == '+') {
        plus = true;
        digits.pop_back();
      }
      std::size_t used = 0;
      t = std::stoul(digits, &used);
      if (used != digits.size()) throw usage_error("");
    } else {
      throw usage_error("");
    }
  } catch (const std::exception&) {
    throw usage_error("--find expects c3, c4, c5+, c<t>, c<t>+ or ct:<t>, got '" + what + "'");
  }
  const auto w = plus ? st::contains_ct_plus(g, t) : st::contains_cycle(g, t);
  json j = {{"motif", plus ? "C" + std::to_string(t) + "+" : "C" + std::to_string(t)}, {"found", w.has_value()}};
  j["witness"] = w ? json(w->vertices) : json(nullptr);
  emit(j, cfg, w ? "found" : "not found");
  return 0;
}

int run_poly(const std::string& name, const std::map<std::string, std::int64_t>& values, bool root,
             const cli_config& cfg) {
  const auto kind = st::parse_poly_kind(name);
  if (!kind) throw usage_error("unknown polynomial '" + name + "'");
  st::poly_spec spec{*kind, {}};
  for (const auto& p : st::info(*kind).params) {
    const auto it = values.find(std::string(p));
    if (it == values.end()) throw usage_error(name + " needs --" + std::string(p));
    spec.params.push_back(it->second);
  }
  const auto p = st::instantiate(spec);
  json j = poly_json(p);
  j["name"] = spec.to_string();
  std::string plain = p.to_string();
  if (root) {
    const auto r = st::largest_root(p, cfg.tol);
    j["largest_root"] = r.value;
    j["bracket"] = st::bracket_json(r.bracket);
    plain += "\nlargest root " + fmt(r.value);
  }
  if (auto printed = st::printed_variant(spec)) j["printed_variant"] = poly_json(*printed);
  j["warnings"] = st::warnings_json(st::warnings_for(spec));
  emit(j, cfg, plain);
  return 0;
}

std::filesystem::path cache_path(const cli_config& cfg, const st::enum_filter& f) {
  std::string flags = f.flag_string();
  std::replace(flags.begin(), flags.end(), ',', '+');
  return std::filesystem::path(cfg.cache_dir) / ("m" + std::to_string(f.m) + "_" + flags + ".json");
}

/// Cached record if present and valid; a stale or corrupt file is reported and recomputed.
std::optional<st::extremal_record> load_cached(const cli_config& cfg, const st::enum_filter& f) {
  if (cfg.cache_dir.empty()) return std::nullopt;
  const auto path = cache_path(cfg, f);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto rec = st::record_from_json(json::parse(in));
    if (rec.filter.m != f.m || rec.filter.flags != f.flags) throw st::hypothesis_error("record is for another family");
    st::validate_record(rec);
    return rec;
  } catch (const std::exception& e) {
    std::cerr << "ignoring cache entry " << path.string() << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

void store_cached(const cli_config& cfg, const st::extremal_record& rec) {
  if (cfg.cache_dir.empty()) return;
  std::filesystem::create_directories(cfg.cache_dir);
  const auto path = cache_path(cfg, rec.filter);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << st::record_to_json(rec).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

int run_enumerate(std::size_t m, const std::string& filter, const std::string& emit_fmt, bool extremal,
                  const cli_config& cfg) {
  const st::enum_filter f{m, st::enum_filter::parse_flags(filter)};
  if (!emit_fmt.empty() && emit_fmt != "g6") throw usage_error("--emit supports only g6");
  json j = {{"m", m}, {"filter", f.flag_string()}, {"params", cfg.to_json()}};
  std::string plain;
  if (extremal) {
    std::optional<st::extremal_record> rec = load_cached(cfg, f);
    j["cached"] = rec.has_value();
    if (!rec) {
      const auto r = st::extremal_rho(f, cfg.enumeration(), cfg.tol);
      rec = st::make_record(f, r);
      json runners = json::array();
      for (const auto& e : r.runners_up) runners.push_back({{"cert", e.graph.cert}, {"rho", e.spectrum.rho}});
      j["runners_up"] = runners;
      store_cached(cfg, *rec);
    }
    const auto top = st::graph6_decode<1>(rec->certs.front());
    const auto sp = st::spectral_radius(top, cfg.tol);
    j["count"] = rec->count;
    j["extremal"] = rec->certs;
    j["names"] = st::identify_family(top);
    j["rho"] = sp.rho;
    j["rho_bracket"] = {{"lo", rec->lo}, {"hi", rec->hi}};
    plain = "count " + std::to_string(rec->count) + "\nextremal " + rec->certs.front() + "\nrho " + fmt(sp.rho);
    if (!emit_fmt.empty()) {
      // --emit with --extremal lists the extremal graphs.
      for (const auto& c : rec->certs) std::cout << c << '\n';
      return 0;
    }
    emit(j, cfg, plain);
    return 0;
  }
  if (!emit_fmt.empty()) {
    st::enumerate(f, [](const st::enumerated_graph& e) { std::cout << e.cert << '\n'; }, cfg.enumeration());
    return 0;
  }
  const auto all = st::enumerate_classes(f, cfg.enumeration());
  j["count"] = all.size();
  emit(j, cfg, "count " + std::to_string(all.size()));
  return 0;
}

int run_compare(const std::string& a, const std::string& b, const cli_config& cfg) {
  const auto ga = load_graph(a, cfg);
  const auto gb = load_graph(b, cfg);
  const auto sa = st::spectral_radius(ga, cfg.tol);
  const auto sb = st::spectral_radius(gb, cfg.tol);
  const int c = st::compare(sa, sb);
  const std::string rel = c < 0 ? "<" : c > 0 ? ">" : "=";
  json j = {{"order", rel},
            {"a", {{"graph6", st::graph6_encode(ga)}, {"rho", sa.rho}, {"bracket", st::bracket_json(sa.bracket)}}},
            {"b", {{"graph6", st::graph6_encode(gb)}, {"rho", sb.rho}, {"bracket", st::bracket_json(sb.bracket)}}}};
  if (c == 0) {
    const auto g = gcd(sa.bracket.poly(), sb.bracket.poly());
    j["certificate"] = json{{"kind", "common root"}, {"gcd", poly_json(g)}};
  } else {
    // Refine copies until the brackets are disjoint; the compare above guarantees termination.
    auto ra = sa.bracket;
    auto rb = sb.bracket;
    while (!(ra.hi() <= rb.lo() || rb.hi() <= ra.lo())) {
      if (ra.width() >= rb.width())
        ra.bisect();
      else
        rb.bisect();
    }
    j["certificate"] = json{{"kind", "disjoint brackets"}, {"a", st::bracket_json(ra)}, {"b", st::bracket_json(rb)}};
  }
  emit(j, cfg, "rho(A) " + rel + " rho(B)  (" + fmt(sa.rho) + " vs " + fmt(sb.rho) + ")");
  return 0;
}

int run_verify(const std::string& suite, std::optional<std::int64_t> m, const std::string& range,
               const cli_config& cfg) {
  if (std::find(st::suite_names().begin(), st::suite_names().end(), suite) == st::suite_names().end())
    throw usage_error("unknown suite '" + suite + "'");
  std::vector<std::int64_t> ms;
  if (!range.empty()) {
    const auto [a, b] = parse_range(range);
    for (auto x = a; x <= b; ++x) ms.push_back(x);
  } else if (m) {
    ms.push_back(*m);
  } else {
    throw usage_error("verify needs --m or --m-range");
  }
  st::suite_options opt;
  opt.enumeration = cfg.enumeration();
  opt.tol = cfg.tol;
  json reports = json::array();
  bool failed = false;
  std::string plain;
  for (auto x : ms) {
    auto r = st::run_suite(suite, x, opt);
    r.params["config"] = cfg.to_json();
    failed = failed || r.has_failures();
    for (const auto& c : r.claims)
      plain += suite + " m=" + std::to_string(x) + " " + std::string(st::to_string(c.status)) + ": " + c.statement + "\n";
    reports.push_back(r.to_json());
  }
  const json out = reports.size() == 1 ? reports[0] : json{{"suite", suite}, {"m_range", range}, {"reports", reports}};
  emit(out, cfg, plain);
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  cli_config cfg;
  try {
    cfg = config_from_env();
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Spectral Turan-type extremal graph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for all subcommands");
  app.add_option("--tol", cfg.tol, "Bracket width for certified spectral radii (env ST_TOL)");
  app.add_option("--max-vertices", cfg.max_vertices, "Largest accepted input graph (env ST_MAX_VERTICES)");
  app.add_option("--threads", cfg.threads, "Worker threads for enumeration (env ST_THREADS)")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached extremal records (env ST_CACHE_DIR)");
  app.add_option("--output", cfg.output, "json or plain")->check(CLI::IsMember({"json", "plain"}));
  app.add_flag("--allow-large", cfg.allow_large, "Permit enumeration above the soft cap");

  family_args fam;
  std::map<std::string, std::int64_t> poly_values;
  std::string graph_a;
  std::string graph_b;
  std::string cells;
  std::string find;
  std::string poly_name;
  bool poly_root = false;
  std::size_t enum_m = 0;
  std::string enum_filter = "none";
  std::string enum_emit;
  bool enum_extremal = false;
  std::string suite;
  std::optional<std::int64_t> verify_m;
  std::string m_range;

  auto* family = app.add_subcommand("family", "Build a named family; prints graph6");
  family->set_help_flag("--help", "Print this help message and exit");  // -h is SK2's parameter
  family->add_option("name", fam.name, "Family name")->required();
  for (const char* p : {"m", "n", "k", "t", "r", "a", "b", "h"}) {
    family->add_option_function<std::int64_t>(std::string("--") + p,
                                              [&fam, p](const std::int64_t& v) { fam.values[p] = v; });
  }
  family->add_flag("--json", fam.json_out, "Print {graph6, n, m, degree_sequence}");

  auto* rho = app.add_subcommand("rho", "Certified spectral radius and Perron vector");
  rho->add_option("graph", graph_a, "graph6, or - for stdin")->required();
  rho->add_option("--tol", cfg.tol, "Bracket width");

  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial");
  charpoly->add_option("graph", graph_a, "graph6, or - for stdin")->required();

  auto* quotient = app.add_subcommand("quotient", "Equitable partition and quotient matrix");
  quotient->add_option("graph", graph_a, "graph6, or - for stdin")->required();
  quotient->add_option("--cells", cells, "Seed partition, e.g. 0|1,2|3,4,5");

  auto* motif = app.add_subcommand("motif", "Find a cycle or C_t^+");
  motif->add_option("graph", graph_a, "graph6, or - for stdin")->required();
  motif->add_option("--find", find, "c3, c4, c5+, c<t>, c<t>+ or ct:<t>")->required();

  auto* poly = app.add_subcommand("poly", "Instantiate a named polynomial");
  poly->add_option("name", poly_name, "Polynomial name")->required();
  for (const char* p : {"m", "k", "t"})
    poly->add_option_function<std::int64_t>(std::string("--") + p,
                                            [&poly_values, p](const std::int64_t& v) { poly_values[p] = v; });
  poly->add_flag("--root", poly_root, "Also compute the largest real root");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate isomorphism classes with m edges");
  enumerate->add_option("--m", enum_m, "Number of edges")->required();
  enumerate->add_option("--filter", enum_filter, "Comma-separated: c3free,c4free,c4plusfree,c5plusfree,nonbipartite,connected");
  enumerate->add_option("--emit", enum_emit, "Print each class in this format (g6)");
  enumerate->add_flag("--extremal", enum_extremal, "Report the classes of maximum spectral radius");

  auto* compare = app.add_subcommand("compare", "Certified order of two spectral radii");
  compare->add_option("a", graph_a, "graph6, or - for stdin")->required();
  compare->add_option("b", graph_b, "graph6, or - for stdin")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "nosal, perron, eq8, lemma22, lemma43, lemma44, t13-order, t14, t16")->required();
  verify->add_option("--m", verify_m, "Number of edges");
  verify->add_option("--m-range", m_range, "Inclusive range a..b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*family) return run_family(fam, cfg);
    if (*rho) return run_rho(graph_a, cfg);
    if (*charpoly) return run_charpoly(graph_a, cfg);
    if (*quotient) return run_quotient(graph_a, cells, cfg);
    if (*motif) return run_motif(graph_a, find, cfg);
    if (*poly) return run_poly(poly_name, poly_values, poly_root, cfg);
    if (*enumerate) return run_enumerate(enum_m, enum_filter, enum_emit, enum_extremal, cfg);
    if (*compare) return run_compare(graph_a, graph_b, cfg);
    if (*verify) return run_verify(suite, verify_m, m_range, cfg);
  } catch (const st::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
