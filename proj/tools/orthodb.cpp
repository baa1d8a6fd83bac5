// orthodb command-line front end.
// Exit codes: 0 ok, 1 a verified property fails, 2 usage or guard errors,
// 3 internal certification failure.
#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orthodb/constructions.hpp"
#include "orthodb/error.hpp"
#include "orthodb/io.hpp"
#include "orthodb/language.hpp"
#include "orthodb/oracle.hpp"

namespace {

using namespace orthodb;

constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlphabetFlags {
  std::optional<std::size_t> sigma;
  std::string tokens;
  bool dna = false;
  std::string weighted;

  void add(CLI::App* app) {
    app->add_option("--sigma", sigma, "alphabet size (symbols 0-9, a-z, ...)");
    app->add_option("--alphabet", tokens, "explicit symbol tokens, e.g. ATCG");
    app->add_flag("--dna", dna, "use ATCG with weighted subset CG");
    app->add_option("-W,--weighted", weighted, "weighted symbol tokens, e.g. CG");
  }

  // DNA when asked, when -W names only DNA letters, or for `dna_default`
  // families at sigma 4.
  Alphabet resolve(bool dna_default = false) const {
    std::optional<Alphabet> a;
    const bool dna_weights =
        !weighted.empty() && std::all_of(weighted.begin(), weighted.end(), [](char ch) {
          return std::string_view("ATCG").find(ch) != std::string_view::npos;
        });
    if (!tokens.empty()) {
      a = Alphabet::from_tokens(tokens);
    } else if (dna || (!sigma && dna_weights) || (dna_default && sigma == 4u)) {
      a = Alphabet::dna();
    } else if (sigma) {
      a = Alphabet::numeric(*sigma);
    } else {
      throw UsageError("give --sigma, --alphabet or --dna");
    }
    if (sigma && *sigma != a->size()) {
      throw UsageError("--sigma " + std::to_string(*sigma) + " disagrees with the alphabet size " +
                       std::to_string(a->size()));
    }
    if (!weighted.empty()) a = a->with_weighted(weighted);
    return *a;
  }
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_out(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << body;
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

// ---- generate ----

struct GenerateArgs {
  std::string family;
  AlphabetFlags alpha;
  std::optional<std::size_t> k, ell, c, b, wmin, wmax;
  std::string seed;
  std::string format = "text";
  std::string output;
  std::string certificate;
};

int run_generate(const GenerateArgs& g) {
  std::optional<ConstructionResult> r;
  std::optional<Alphabet> alphabet;
  const std::size_t k = need(g.k, "-k");
  if (g.family == "ortho-db" || g.family == "ortho-kautz") {
    const bool kautz = g.family == "ortho-kautz";
    alphabet = g.alpha.resolve(kautz);
    std::optional<std::vector<Symbol>> seed;
    if (!g.seed.empty()) seed = alphabet->parse(g.seed);
    const std::size_t ell = g.ell.value_or(1);
    r = kautz ? construct_l_orthogonal_kautz(alphabet->size(), k, ell, seed)
              : construct_l_orthogonal_de_bruijn(alphabet->size(), k, ell, seed);
  } else if (g.family == "balanced-db" || g.family == "balanced-kautz") {
    const std::size_t c = need(g.c, "-c");
    const std::size_t b = need(g.b, "-b");
    r = g.family == "balanced-db" ? construct_orthogonal_balanced_de_bruijn(c, b, k)
                                  : construct_orthogonal_balanced_kautz(c, b, k);
    alphabet = Alphabet::numeric(std::min<std::size_t>(r->sigma, 62));
  } else if (g.family == "fw-db") {
    alphabet = g.alpha.resolve();
    const std::size_t w = need(g.wmax, "--wmax");
    if (g.wmin && *g.wmin + 1 != w) throw UsageError("fw-db uses the band [w-1, w]");
    r = construct_fixed_weight_orthogonal_db(*alphabet, k, w);
  } else if (g.family == "fw-kautz") {
    alphabet = g.alpha.resolve(true);
    r = construct_fixed_weight_kautz_orthogonal(*alphabet, k, need(g.wmin, "--wmin"),
                                                need(g.wmax, "--wmax"));
  } else {
    throw UsageError("unknown family " + g.family);
  }

  const auto json = io::result_to_json(*r, *alphabet);
  std::string body;
  if (g.format == "json") {
    body = json.dump(2) + "\n";
  } else if (g.format == "fasta") {
    body = io::to_fasta(*r, *alphabet);
  } else {
    body = io::to_text(*r, *alphabet);
  }
  write_out(g.output, body);
  std::string cert_path = g.certificate;
  if (cert_path.empty() && !g.output.empty() && g.output != "-" && g.format != "json") {
    cert_path = g.output + ".certificate.json";
  }
  if (!cert_path.empty()) write_out(cert_path, json.dump(2) + "\n");
  std::cerr << r->family << ": " << r->words.size() << " sequences over sigma=" << r->sigma
            << ", certified=" << (r->certified() ? "yes" : "no") << "\n";
  return r->certified() ? kOk : kInternal;
}

// ---- verify ----

struct VerifyArgs {
  std::string input = "-";
  std::vector<std::string> properties;
  AlphabetFlags alpha;
  std::optional<std::size_t> k, ell, b, wmin, wmax;
  std::string format = "text";
};

int run_verify(const VerifyArgs& v) {
  const Alphabet a = v.alpha.resolve();
  std::istringstream in(read_all(v.input));
  const auto words = io::read_words(in, a);
  if (words.empty()) throw UsageError("no words in " + v.input);
  const std::size_t k = need(v.k, "-k");
  const std::size_t sigma = a.size();

  auto language_for = [&](bool kautz) {
    if (!a.has_weighted_subset()) throw UsageError("fixed-weight checks need -W or --dna");
    oracle::LanguageFilter f;
    f.kautz = kautz;
    for (Symbol s = 0; s < sigma; ++s) f.weighted.push_back(a.is_weighted(s));
    f.w_min = need(v.wmin, "--wmin");
    f.w_max = need(v.wmax, "--wmax");
    return oracle::brute_force_language(sigma, k, f);
  };

  std::vector<std::pair<std::string, oracle::VerificationReport>> reports;
  for (const auto& p : v.properties) {
    if (p == "orthogonal") {
      reports.emplace_back("collection", oracle::is_l_orthogonal(words, k, v.ell.value_or(1)));
      continue;
    }
    std::vector<oracle::Sequence> lang;
    if (p == "fixed-weight") lang = language_for(false);
    if (p == "fixed-weight-kautz") lang = language_for(true);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const auto& w = words[i];
      oracle::VerificationReport rep;
      if (p == "de-bruijn") {
        rep = oracle::is_de_bruijn(w, sigma, k);
      } else if (p == "kautz") {
        rep = oracle::is_kautz_word(w, sigma, k);
      } else if (p == "balanced") {
        rep = oracle::is_b_balanced(w, sigma, k, need(v.b, "-b"));
      } else if (p == "balanced-kautz") {
        rep = oracle::is_b_balanced_kautz(w, sigma, k, need(v.b, "-b"));
      } else if (p == "self-orthogonal") {
        rep = oracle::is_self_orthogonal(w, k);
      } else if (p == "fixed-weight" || p == "fixed-weight-kautz") {
        rep = oracle::is_fixed_weight_db(w, lang);
      } else {
        throw UsageError("unknown property " + p);
      }
      reports.emplace_back("word " + std::to_string(i), std::move(rep));
    }
  }

  bool all = true;
  for (const auto& [who, rep] : reports) all = all && rep.holds;
  if (v.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [who, rep] : reports) {
      auto j = io::report_to_json(rep);
      j["subject"] = who;
      out.push_back(std::move(j));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [who, rep] : reports) {
      std::cout << who << " " << rep.property << ": " << (rep.holds ? "PASS" : "FAIL");
      if (rep.witness) std::cout << " (" << rep.witness->description << ")";
      std::cout << "\n";
    }
  }
  return all ? kOk : kPropertyFails;
}

// ---- enumerate ----

struct EnumerateArgs {
  std::string table;
  std::vector<std::size_t> sigmas, ks, ells, cs, bs;
  AlphabetFlags alpha;
  std::string format = "csv";
  std::optional<std::size_t> guard;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render(const std::string& format) const {
    std::string out;
    if (format == "markdown") {
      auto line = [](const std::vector<std::string>& cells) {
        std::string s = "|";
        for (const auto& c : cells) s += " " + c + " |";
        return s + "\n";
      };
      out += line(header);
      out += line(std::vector<std::string>(header.size(), "---"));
      for (const auto& r : rows) out += line(r);
      return out;
    }
    out += io::csv_row(header) + "\n";
    for (const auto& r : rows) out += io::csv_row(r) + "\n";
    return out;
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_enumerate(const EnumerateArgs& e) {
  Table t;
  bool within_all = true;
  auto num = [](std::size_t x) { return std::to_string(x); };
  if (e.table == "omega") {
    t.header = {"sigma", "k", "ell", "exact", "lower", "upper", "within"};
    oracle::SearchLimits limits;
    if (e.guard) limits.word_guard = *e.guard;
    for (auto sigma : e.sigmas) {
      for (auto k : e.ks) {
        for (auto ell : e.ells) {
          const std::size_t exact = oracle::exact_max_orthogonal(sigma, k, ell, limits);
          // trivial lower bound 1 on the binary alphabet
          const std::size_t lower = sigma >= 3 ? ell * std::max<std::size_t>(2, sigma / 2) : 1;
          const std::size_t upper = ell * (sigma - 1);
          const bool ok = lower <= exact && exact <= upper;
          within_all = within_all && ok;
          t.rows.push_back({num(sigma), num(k), num(ell), num(exact), num(lower), num(upper),
                            yes_no(ok)});
        }
      }
    }
  } else if (e.table == "sigma-db" || e.table == "sigma-kautz") {
    const bool kautz = e.table == "sigma-kautz";
    t.header = {"c", "b", "k", "sigma_used", "lower", "upper", "within"};
    for (auto c : e.cs) {
      for (auto b : e.bs) {
        for (auto k : e.ks) {
          const auto r = kautz ? construct_orthogonal_balanced_kautz(c, b, k)
                               : construct_orthogonal_balanced_de_bruijn(c, b, k);
          const std::size_t lower = kautz ? c * b + 1 : c * b;
          const std::size_t upper = kautz ? 2 * c * b + 1 : smallest_prime_power_at_least(c * b);
          const bool ok = lower <= r.sigma && r.sigma <= upper && r.certified();
          within_all = within_all && ok;
          t.rows.push_back({num(c), num(b), num(k), num(r.sigma), num(lower), num(upper),
                            yes_no(ok)});
        }
      }
    }
  } else if (e.table == "db-words") {
    t.header = {"sigma", "k", "word"};
    const Alphabet a = e.alpha.resolve();
    for (auto k : e.ks) {
      const auto words =
          oracle::enumerate_db_words(a.size(), k, e.guard.value_or(oracle::kDefaultGuard));
      for (const auto& w : words) t.rows.push_back({num(a.size()), num(k), a.render(w)});
    }
  } else {
    throw UsageError("unknown table " + e.table + " (omega, sigma-db, sigma-kautz, db-words)");
  }
  std::cout << t.render(e.format);
  return within_all ? kOk : kPropertyFails;
}

// ---- export ----

struct ExportArgs {
  std::string family;
  AlphabetFlags alpha;
  std::optional<std::size_t> k, wmin, wmax;
  std::string format = "dot";
  std::string output;
};

int run_export(const ExportArgs& x) {
  const std::size_t k = need(x.k, "-k");
  const bool kautz = x.family == "kautz" || x.family == "fw-kautz";
  const Alphabet a = x.alpha.resolve(kautz);
  DirectedMultigraph g;
  if (x.family == "db") {
    g = de_bruijn_graph(a.size(), k);
  } else if (x.family == "kautz") {
    g = kautz_graph(a.size(), k);
  } else if (x.family == "fw-db" || x.family == "fw-kautz") {
    if (!a.has_weighted_subset()) throw UsageError("fixed-weight graphs need -W or --dna");
    const std::size_t lo = need(x.wmin, "--wmin");
    const std::size_t hi = need(x.wmax, "--wmax");
    const auto spec = kautz ? LanguageSpec::kautz_weight_band(k, lo, hi)
                            : LanguageSpec::weight_band(k, lo, hi);
    g = restricted_graph(expand_language(spec, a), a.size());
  } else {
    throw UsageError("unknown graph family " + x.family + " (db, kautz, fw-db, fw-kautz)");
  }
  write_out(x.output, x.format == "json" ? io::graph_to_json(g, a).dump(2) + "\n"
                                         : io::to_dot(g, a, x.family));
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::CertificationFailed:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::NotConnected:
    case ErrorCode::MultipleCycles:
    case ErrorCode::SearchExhausted:
      return kInternal;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal de Bruijn and Kautz sequence constructions with brute-force checks"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "construct and certify a family of sequences");
  g->add_option("family", gen.family,
                "ortho-db | ortho-kautz | balanced-db | balanced-kautz | fw-db | fw-kautz")
      ->required();
  gen.alpha.add(g);
  g->add_option("-k,--k", gen.k, "window length")->required();
  g->add_option("--ell", gen.ell, "orthogonality multiplicity");
  g->add_option("-c", gen.c, "number of balanced sequences");
  g->add_option("-b", gen.b, "balance multiplicity");
  g->add_option("--wmin", gen.wmin, "lowest weight");
  g->add_option("--wmax", gen.wmax, "highest weight");
  g->add_option("--seed", gen.seed, "seed Eulerian word for ortho families");
  g->add_option("--format", gen.format, "text | json | fasta")
      ->check(CLI::IsMember({"text", "json", "fasta"}));
  g->add_option("-o,--output", gen.output, "output path (default stdout)");
  g->add_option("--certificate", gen.certificate,
                "certificate JSON path (default <output>.certificate.json)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "check words against properties");
  v->add_option("input", ver.input, "file with one circular word per line, or FASTA; - for stdin");
  v->add_option("-p,--property", ver.properties,
                "de-bruijn | kautz | balanced | balanced-kautz | self-orthogonal | orthogonal | "
                "fixed-weight | fixed-weight-kautz")
      ->required();
  ver.alpha.add(v);
  v->add_option("-k,--k", ver.k, "window length")->required();
  v->add_option("--ell", ver.ell, "orthogonality multiplicity");
  v->add_option("-b", ver.b, "balance multiplicity");
  v->add_option("--wmin", ver.wmin, "lowest weight");
  v->add_option("--wmax", ver.wmax, "highest weight");
  v->add_option("--format", ver.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "exhaustive tables on tiny instances");
  e->add_option("table", en.table, "omega | sigma-db | sigma-kautz | db-words")->required();
  e->add_option("--sigmas", en.sigmas, "alphabet sizes for omega")->delimiter(',');
  e->add_option("--ks,-k", en.ks, "window lengths")->delimiter(',')->required();
  e->add_option("--ells", en.ells, "multiplicities for omega")->delimiter(',');
  e->add_option("-c", en.cs, "values of c")->delimiter(',');
  e->add_option("-b", en.bs, "values of b")->delimiter(',');
  en.alpha.add(e);
  e->add_option("--format", en.format, "csv | markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  e->add_option("--guard", en.guard, "instance-size guard override");

  ExportArgs ex;
  auto* x = app.add_subcommand("export", "write a graph as DOT or JSON");
  x->add_option("--family", ex.family, "db | kautz | fw-db | fw-kautz")->required();
  ex.alpha.add(x);
  x->add_option("-k,--k", ex.k, "word length of arcs")->required();
  x->add_option("--wmin", ex.wmin, "lowest weight");
  x->add_option("--wmax", ex.wmax, "highest weight");
  x->add_option("--format", ex.format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  x->add_option("-o,--output", ex.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return run_generate(gen);
    if (*v) return run_verify(ver);
    if (*e) return run_enumerate(en);
    if (*x) return run_export(ex);
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kUsage;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    if (err.code() == ErrorCode::GuardExceeded && !err.details().empty()) {
      std::cerr << "guard: " << err.details().front() << "\n";
    }
    return exit_code_for(err);
  }
  return kUsage;
}
