// rankcover: bounds, tables, constructions and brute-force checks for rank-metric covering codes.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rankcover/bounds.hpp"
#include "rankcover/codes.hpp"
#include "rankcover/finite_field.hpp"
#include "rankcover/kernels.hpp"
#include "rankcover/qcombinatorics.hpp"
#include "rankcover/search.hpp"
#include "rankcover/table.hpp"

using json = nlohmann::json;
using namespace rankcover;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned q = 2, m = 0, n = 0;
  std::optional<unsigned> r, s, d, k;
  unsigned threads = 0;
  std::uint64_t cap = std::uint64_t(1) << 26;
  bool json = false, csv = false;
  std::string field;
};

EnumOptions enum_opts(const Common& c) { return EnumOptions{c.cap, c.threads}; }

void need(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

void check_qmn(const Common& c) {
  need(is_prime(c.q), "q must be prime");
  need(c.m >= 1, "-m must be >= 1");
  need(c.n >= 1, "-n must be >= 1");
}

FieldPtr field_for(const Common& c) {
  if (!c.field.empty()) {
    FieldPtr f = parse_field_spec(c.field);
    need(f->q() == c.q && f->m() == c.m, "--field disagrees with -q/-m");
    return f;
  }
  return default_field(c.q, c.m);
}

std::string s(const BigCount& x) { return x.str(); }

json params_json(unsigned q, unsigned m, unsigned n, std::optional<unsigned> rho) {
  json p = {{"q", q}, {"m", m}, {"n", n}};
  if (rho) p["rho"] = *rho;
  return p;
}

int emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write " + out);
  os << text;
  return kOk;
}

// ---- bound ----
int cmd_bound(const Common& c, bool constructive) {
  check_qmn(c);
  need(c.r.has_value(), "-r is required");
  BoundOptions bo;
  bo.constructive = constructive;
  bo.enumeration = enum_opts(c);
  BoundReport r = best_bounds(c.q, c.m, c.n, *c.r, bo);
  if (c.json) {
    json j;
    j["params"] = params_json(c.q, c.m, c.n, c.r);
    j["normalized"] = params_json(c.q, r.normalized.m, r.normalized.n, r.normalized.rho);
    j["trivial"] = r.trivial;
    j["best_lower"] = s(r.best_lower);
    j["best_upper"] = s(r.best_upper);
    j["lower_letters"] = r.lower_letters;
    j["upper_letters"] = r.upper_letters;
    j["entries"] = json::array();
    for (const auto& e : r.entries) {
      json je = {{"name", e.name},
                 {"letter", e.letter},
                 {"kind", e.kind == BoundKind::lower ? "lower" : "upper"},
                 {"applicable", e.applicable},
                 {"note", e.note}};
      je["value"] = e.applicable ? json(s(e.value)) : json(nullptr);
      j["entries"].push_back(je);
    }
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "K_R(" << c.q << '^' << c.m << ',' << c.n << ',' << *c.r << ")";
  if (r.normalized.m != c.m) std::cout << " = K_R(" << c.q << '^' << r.normalized.m << ',' << r.normalized.n << ','
                                       << r.normalized.rho << ')';
  std::cout << '\n';
  if (r.trivial) {
    std::cout << "trivial: K_R = " << r.best_lower << '\n';
    return kOk;
  }
  for (const auto& e : r.entries) {
    std::cout << "  " << (e.kind == BoundKind::lower ? "lower " : "upper ") << e.letter;
    for (std::size_t i = e.letter.size(); i < 3; ++i) std::cout << ' ';
    std::cout << e.name << ": " << (e.applicable ? e.value.str() : "n/a");
    if (!e.note.empty()) std::cout << "  (" << e.note << ')';
    std::cout << '\n';
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : ",") + x;
    return out;
  };
  std::cout << "best: " << r.best_lower << " <= K_R <= " << r.best_upper << "  [" << join(r.lower_letters) << " / "
            << join(r.upper_letters) << "]\n";
  return kOk;
}

// ---- table ----
struct TableFlags {
  unsigned min_m = 2, max_m = 7;
  bool linear = false, analytic_only = false, exhaustive = false, failures = false;
  std::optional<std::string> diff;
  std::string out;
};

int cmd_table(const Common& c, const TableFlags& t) {
  need(is_prime(c.q), "q must be prime");
  std::ostringstream os;
  bool all_ok = true;
  const bool diffing = t.diff.has_value() || t.analytic_only;
  if (t.linear) {
    LinearTableOptions lo;
    lo.min_m = std::max(t.min_m, 4u);
    lo.max_m = t.max_m;
    lo.exhaustive = t.exhaustive;
    std::vector<LinearCell> cells;
    if (lo.min_m <= lo.max_m) cells = linear_table(c.q, lo);
    os << (c.csv ? render_linear_csv(cells) : render_linear_table(cells));
    if (diffing) {
      need(c.q == 2, "golden tables are for q = 2");
      auto golden = load_golden(t.diff && !t.diff->empty() ? *t.diff : data_path("table2.csv"));
      auto lines = diff_table2(golden, lo);
      if (t.analytic_only) std::erase_if(lines, [](const DiffLine& d) { return !d.analytic; });
      for (const auto& d : lines) all_ok = all_ok && d.ok;
      os << render_diff(lines, t.failures);
    }
  } else {
    BoundOptions bo;
    bo.enumeration = enum_opts(c);
    std::vector<BoundReport> reports;
    if (t.min_m <= t.max_m) reports = bounds_table(c.q, t.min_m, t.max_m, bo);
    os << (c.csv ? render_bounds_csv(reports) : render_bounds_table(reports));
    if (diffing) {
      need(c.q == 2, "golden tables are for q = 2");
      auto golden = load_golden(t.diff && !t.diff->empty() ? *t.diff : data_path("table1.csv"));
      DiffOptions dopt;
      dopt.analytic_only = t.analytic_only;
      dopt.max_m = t.max_m;
      std::erase_if(golden, [&](const GoldenEntry& g) { return g.m < t.min_m; });
      auto lines = diff_table1(golden, dopt);
      for (const auto& d : lines) all_ok = all_ok && d.ok;
      os << render_diff(lines, t.failures);
    }
  }
  emit(os.str(), t.out);
  return all_ok ? kOk : kFailed;
}

// ---- verify ----
int cmd_verify(const Common& c, const std::string& file, bool force_explicit) {
  need(c.r.has_value(), "-r is required");
  Code code = [&] {
    if (file == "-") return read_skip_stream(std::cin);
    std::ifstream is(file);
    need(static_cast<bool>(is), "cannot open " + file);
    return read_skip_stream(is);
  }();
  RadiusOptions ro;
  ro.enumeration = enum_opts(c);
  ro.force_explicit = force_explicit;
  const unsigned radius = covering_radius(code, ro);
  const unsigned dmin = code.size() > 1 ? min_rank_distance(code) : 0;
  const bool pass = radius <= *c.r;
  if (c.json) {
    json j = {{"params", params_json(code.q(), code.m(), code.n(), c.r)},
              {"field", code.field()->spec()},
              {"K", code.size()},
              {"radius_verified", radius},
              {"min_distance", dmin},
              {"pass", pass}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "field " << code.field()->spec() << ", n=" << code.n() << '\n'
              << "|C| = " << code.size() << '\n'
              << "covering radius = " << radius << '\n'
              << "min distance = " << dmin << (code.size() > 1 ? "" : " (fewer than two codewords)") << '\n'
              << (pass ? "PASS" : "FAIL") << ": radius " << radius << (pass ? " <= " : " > ") << *c.r << '\n';
  }
  return pass ? kOk : kFailed;
}

// ---- construct ----
struct ConstructFlags {
  std::string method;
  std::optional<unsigned> u, K;
  std::uint64_t seed = 1;
  std::uint64_t iterations = 20000;
  unsigned restarts = 50;
  bool greedy = false;
  std::string out, cert, in;
};

int cmd_construct(const Common& c, const ConstructFlags& f) {
  check_qmn(c);
  std::optional<Code> code;
  std::string method = f.method;
  if (method == "mrd") {
    need(c.d.has_value(), "mrd needs -d");
    code = mrd_construct(c.q, c.m, c.n, *c.d);
  } else if (method == "gabidulin") {
    need(c.k.has_value(), "gabidulin needs -k");
    need(c.n <= c.m, "gabidulin needs n <= m");
    code = gabidulin_generator(field_for(c), c.n, *c.k, c.s.value_or(1));
  } else if (method == "jsl") {
    need(c.r.has_value(), "jsl needs -r");
    code = jsl_construct(c.q, c.m, c.n, *c.r, f.greedy ? JslMode::greedy : JslMode::staged, enum_opts(c));
  } else if (method == "local") {
    need(c.r.has_value() && f.K.has_value(), "local needs -r and -K");
    SearchBudget b;
    b.seed = f.seed;
    b.max_iterations = f.iterations;
    b.max_restarts = f.restarts;
    code = local_search(c.q, c.m, c.n, *c.r, *f.K, b, enum_opts(c));
    if (!code) {
      std::cerr << "local search found no covering of size " << *f.K << " within budget\n";
      return kFailed;
    }
  } else if (method == "embed") {
    need(f.u.has_value(), "embed needs -u");
    Code base = [&] {
      if (!f.in.empty()) return read_skip_file(f.in);
      need(c.d.has_value(), "embed needs -d (MRD source) or --in");
      return mrd_construct(c.q, c.m, c.n, *c.d);
    }();
    code = field_embed(base, *f.u);
  } else {
    throw UsageError("unknown method " + method);
  }
  RadiusOptions ro;
  ro.enumeration = enum_opts(c);
  const unsigned radius = covering_radius(*code, ro);
  if (c.r && radius > *c.r) {
    std::cerr << "constructed code has covering radius " << radius << " > " << *c.r << "; nothing written\n";
    return kFailed;
  }
  json cert = {{"params", params_json(code->q(), code->m(), code->n(), c.r.value_or(radius))},
               {"field", code->field()->spec()},
               {"K", code->size()},
               {"radius_verified", radius},
               {"seed", f.seed},
               {"method", method}};
  if (code->is_linear()) cert["dimension"] = code->dimension();
  std::ostringstream os;
  write_skip_stream(os, *code);
  emit(os.str(), f.out);
  std::string cert_path = f.cert;
  if (cert_path.empty() && !f.out.empty() && f.out != "-") cert_path = f.out + ".json";
  if (!cert_path.empty()) {
    emit(cert.dump(2) + "\n", cert_path);
  } else if (c.json) {
    std::cerr << cert.dump(2) << '\n';
  }
  if (!f.out.empty() && f.out != "-") {
    std::cout << method << ": " << code->size() << " codewords, covering radius " << radius << ", written to " << f.out
              << '\n';
  }
  return kOk;
}

// ---- intersect / volume ----
int cmd_intersect(const Common& c, bool closed_form) {
  check_qmn(c);
  need(c.r && c.s && c.d, "intersect needs -r, -s and -d");
  const unsigned r = *c.r, sr = *c.s, d = *c.d;
  // balls whose centers are farther apart than r + s are disjoint
  need(d <= std::min(c.m, c.n) || d > r + sr, "-d exceeds min(m, n)");
  const BigCount v = d > r + sr ? BigCount(0) : intersection_bruteforce(c.q, c.m, c.n, r, sr, d, enum_opts(c));
  std::optional<BigCount> cf;
  std::string which;
  if (closed_form) {
    if (d >= 1 && d == r && sr == 1) {
      cf = intersection_ball_radius1(c.q, c.m, c.n, r);
      which = "radius-1 formula";
    } else if (d >= 1 && d == sr && r == 1) {
      cf = intersection_ball_radius1(c.q, c.m, c.n, sr);
      which = "radius-1 formula";
    } else if (d == r + sr && d >= 1) {
      cf = intersection_complementary(c.q, c.m, c.n, d, r);
      which = "complementary-radii formula";
    }
  }
  const bool ok = !cf || *cf == v;
  if (c.json) {
    json j = {{"params", {{"q", c.q}, {"m", c.m}, {"n", c.n}, {"r", r}, {"s", sr}, {"d", d}}}, {"value", s(v)}};
    if (closed_form) j["closed_form"] = cf ? json(s(*cf)) : json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << v << '\n';
    if (closed_form) {
      if (cf)
        std::cout << which << ": " << *cf << (ok ? " (agrees)" : " (MISMATCH)") << '\n';
      else
        std::cout << "no closed form applies\n";
    }
  }
  return ok ? kOk : kFailed;
}

int cmd_volume(const Common& c) {
  check_qmn(c);
  need(c.r.has_value(), "-r is required");
  const unsigned r = *c.r;
  const BigCount v = ball_volume(c.q, c.m, c.n, r);
  const BigCount nu = num_rank_u(c.q, c.m, c.n, r);
  if (c.json) {
    json j = {{"params", params_json(c.q, c.m, c.n, r)}, {"V", s(v)}, {"N", s(nu)}};
    if (r <= std::min(c.m, c.n)) {
      VolumeBounds b = volume_bounds(c.q, c.m, c.n, r);
      j["lower"] = s(b.lower);
      j["upper"] = b.upper.str(20);
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "V_" << r << " = " << v << '\n' << "N_" << r << " = " << nu << '\n';
    if (r <= std::min(c.m, c.n)) {
      VolumeBounds b = volume_bounds(c.q, c.m, c.n, r);
      std::cout << "q^{r(m+n-r)} = " << b.lower << " <= V_r < " << b.upper.str(20) << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rankcover: covering properties of rank-metric codes"};
  app.require_subcommand(1);
  Common c;
  std::string isa;
  app.add_option("--threads", c.threads, "worker threads (0 = all cores)");
  app.add_option("--cap", c.cap, "maximum number of vectors to enumerate");
  app.add_option("--isa", isa, "force kernel variant")->check(CLI::IsMember({"scalar", "avx2"}));

  auto params = [&](CLI::App* sub, bool rs = true) {
    sub->add_option("-q", c.q, "field characteristic (prime)");
    sub->add_option("-m", c.m, "extension degree")->required();
    sub->add_option("-n", c.n, "code length")->required();
    if (rs) sub->add_option("-r", c.r, "covering radius");
    sub->add_flag("--json", c.json, "JSON output");
  };

  auto* bound = app.add_subcommand("bound", "all bounds on K_R(q^m,n,rho)");
  params(bound);
  bool constructive = false;
  bound->add_flag("--constructive", constructive, "also run JSL / exhaustive search on small spaces");

  auto* table = app.add_subcommand("table", "reproduce the bounds tables");
  TableFlags tf;
  table->add_option("-q", c.q, "field characteristic");
  table->add_option("--min-m", tf.min_m, "smallest m");
  table->add_option("--max-m", tf.max_m, "largest m");
  table->add_flag("--linear", tf.linear, "bounds on the dimension of linear codes");
  table->add_flag("--analytic-only", tf.analytic_only, "compare only closed-form entries with the golden values");
  table->add_option("--diff", tf.diff, "golden CSV to compare against (empty: bundled file)")->expected(0, 1);
  table->add_flag("--exhaustive", tf.exhaustive, "run exhaustive linear searches (linear table)");
  table->add_flag("--only-failures", tf.failures, "print only mismatching diff lines");
  table->add_flag("--csv", c.csv, "CSV output");
  table->add_option("--out", tf.out, "output file");

  auto* verify = app.add_subcommand("verify", "measure the covering radius of a skip-vector file");
  std::string file;
  bool force_explicit = false;
  verify->add_option("file", file, "skip-vector file ('-' for stdin)")->required();
  verify->add_option("-r", c.r, "claimed covering radius")->required();
  verify->add_flag("--explicit", force_explicit, "ignore linear structure");
  verify->add_flag("--json", c.json, "JSON output");

  auto* construct = app.add_subcommand("construct", "build and verify a covering code");
  ConstructFlags cf;
  construct->add_option("method", cf.method, "mrd | gabidulin | jsl | local | embed")
      ->required()
      ->check(CLI::IsMember({"mrd", "gabidulin", "jsl", "local", "embed"}));
  params(construct);
  construct->add_option("-k", c.k, "dimension (gabidulin)");
  construct->add_option("-s", c.s, "Frobenius exponent (gabidulin)");
  construct->add_option("-d", c.d, "minimum distance (mrd, embed)");
  construct->add_option("-u", cf.u, "extra extension degree (embed)");
  construct->add_option("-K", cf.K, "code size (local)");
  construct->add_option("--seed", cf.seed, "random seed (local)");
  construct->add_option("--iterations", cf.iterations, "moves per restart (local)");
  construct->add_option("--restarts", cf.restarts, "restarts (local)");
  construct->add_flag("--greedy", cf.greedy, "plain greedy instead of staged selection (jsl)");
  construct->add_option("--field", c.field, "field spec, e.g. gf(2^5;poly=0b100101)");
  construct->add_option("--in", cf.in, "source code file (embed)");
  construct->add_option("--out", cf.out, "skip-vector output file (default stdout)");
  construct->add_option("--cert", cf.cert, "certificate file (default <out>.json)");

  auto* intersect = app.add_subcommand("intersect", "brute-force |B_r(0) ∩ B_s(c)| with rk(c) = d");
  bool closed = false;
  params(intersect);
  intersect->add_option("-s", c.s, "second radius")->required();
  intersect->add_option("-d", c.d, "distance between centers")->required();
  intersect->add_flag("--closed-form", closed, "cross-check closed forms where they apply");

  auto* volume = app.add_subcommand("volume", "ball volume V_r");
  params(volume);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (!isa.empty()) kernels::set_isa_override(isa == "avx2" ? kernels::Isa::avx2 : kernels::Isa::scalar);
    if (*bound) return cmd_bound(c, constructive);
    if (*table) return cmd_table(c, tf);
    if (*verify) return cmd_verify(c, file, force_explicit);
    if (*construct) return cmd_construct(c, cf);
    if (*intersect) return cmd_intersect(c, closed);
    if (*volume) return cmd_volume(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const FieldError& e) {
    std::cerr << "field error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "enumeration cap exceeded: " << e.what() << " (raise --cap)\n";
    return kUsage;
  } catch (const Intractable& e) {
    std::cerr << "intractable: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
