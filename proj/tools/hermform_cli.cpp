// hermform: command line front end.
//
//   hermform invariants FILE
//   hermform canonical FILE [--certificate-out OUT] [--trace]
//   hermform congruent FILE_A FILE_B [--certificate-out OUT] [--trace]
//   hermform verify FILE_A FILE_S FILE_B
//   hermform random --p P --n N --epsilon E [--seed S] [--max-degree D] [--moves M]
//   hermform selftest [--budget-seconds T] [--seed S]
//
// Exit status: 0 success, 1 verification failure, 2 input error.

#include "hermform/oracles.hpp"
#include "hermform/random.hpp"
#include "hermform/textio.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hermform;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

TraceSink make_trace(bool on) {
  if (!on) return {};
  return [](const std::string& s) { std::cerr << s << "\n"; };
}

// Loads the document, installs its generators and returns the matrix under
// the preferred key (or the only matrix in the file).
PolyMatrix load_matrix(const Document& doc, const std::string& key) {
  if (doc.find(key)) return document_matrix(doc, key);
  if (doc.values.size() == 1) return document_matrix(doc, doc.values[0].first);
  throw ParseError("no matrix named " + key);
}

FormKind kind_of(const Document& doc, const PolyMatrix& a) {
  if (doc.kind) return *doc.kind;
  if (auto k = form_kind(a)) return *k;
  throw DomainError("matrix is neither hermitian nor skew-hermitian");
}

std::string factor_line(const Vec& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ", ";
    const Parity par = parity(f[i]);
    s += to_string(f[i]) + " (" + std::string(f[i].is_zero() ? "zero" : to_string(par)) + ")";
  }
  return s;
}

void check(const PolyMatrix& a, const Certificate& c) {
  if (auto why = certificate_failure(a, c.S, c.B)) throw VerifyFailure("certificate check failed: " + *why);
}

int cmd_invariants(const std::string& file) {
  const Document doc = parse_document(slurp(file));
  Tower tw(doc.p);
  install_generators(tw, doc);
  TowerScope scope(tw);
  const PolyMatrix a = load_matrix(doc, "A");
  std::cout << factor_line(invariant_factors(a)) << "\n";
  return kOk;
}

int cmd_canonical(const std::string& file, const std::string& cert_out, bool trace) {
  const Document doc = parse_document(slurp(file));
  Tower tw(doc.p);
  install_generators(tw, doc);
  TowerScope scope(tw);
  const PolyMatrix a = load_matrix(doc, "A");
  const FormKind kind = kind_of(doc, a);
  const Canonicalization c = canonicalize(a, kind, make_trace(trace));
  check(a, c.cert);
  std::cout << format_header(kind, a.rows()) << format_blocks(c.blocks) << "B = " << format_matrix(c.cert.B) << "\n";
  if (!cert_out.empty())
    write_file(cert_out, format_header(kind, a.rows()) + "A = " + format_matrix(a) + "\nS = " + format_matrix(c.cert.S) +
                             "\nB = " + format_matrix(c.cert.B) + "\n");
  return kOk;
}

// Both documents share one tower; generators must agree on their common
// prefix.
Tower shared_tower(const std::vector<Document>& docs) {
  const std::uint32_t p = docs.front().p;
  for (const auto& d : docs)
    if (d.p != p) throw ParseError("files use different primes");
  Tower tw(p);
  for (const auto& d : docs) install_generators(tw, d);
  return tw;
}

int cmd_congruent(const std::string& fa, const std::string& fb, const std::string& cert_out, bool trace) {
  const Document da = parse_document(slurp(fa));
  const Document db = parse_document(slurp(fb));
  Tower tw = shared_tower({da, db});
  TowerScope scope(tw);
  const PolyMatrix a = load_matrix(da, "A");
  const PolyMatrix b = load_matrix(db, "A");
  const FormKind kind = kind_of(da, a);
  if (trace) std::cerr << "congruent: kind " << to_string(kind) << "\n";
  const CongruenceDecision d = are_congruent(a, b, kind, !cert_out.empty());
  if (!d.congruent) {
    std::cout << "no: " << d.reason << "\n";
    return kOk;
  }
  std::cout << "yes\n";
  if (d.cert) {
    check(a, *d.cert);
    write_file(cert_out, format_header(kind, a.rows()) + "A = " + format_matrix(a) + "\nS = " + format_matrix(d.cert->S) +
                             "\nB = " + format_matrix(d.cert->B) + "\n");
  }
  return kOk;
}

int cmd_verify(const std::string& fa, const std::string& fs, const std::string& fb) {
  const Document da = parse_document(slurp(fa));
  const Document ds = parse_document(slurp(fs));
  const Document db = parse_document(slurp(fb));
  Tower tw = shared_tower({da, ds, db});
  TowerScope scope(tw);
  const PolyMatrix a = load_matrix(da, "A");
  const PolyMatrix s = parse_matrix(ds.find("S") ? *ds.find("S") : ds.values.at(0).second);
  const PolyMatrix b = load_matrix(db, "B");
  if (auto why = certificate_failure(a, s, b)) {
    std::cout << "fail: " << *why << "\n";
    return kVerifyFailed;
  }
  std::cout << "pass\n";
  return kOk;
}

int cmd_random(std::uint32_t p, const RandomSpec& spec, const std::string& out) {
  if (p < 3 || !is_prime(p)) throw ParseError("p must be an odd prime");
  Tower tw(p);
  TowerScope scope(tw);
  const RandomInstance ri = random_instance(spec);
  std::string text = "# seed " + std::to_string(spec.seed) + "\n" + format_header(spec.kind, spec.n) +
                     "A = " + format_matrix(ri.a) + "\n# ground truth: A = S* C S\nC = " + format_matrix(ri.c) +
                     "\nS = " + format_matrix(ri.s) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return kOk;
}

struct Suite {
  std::string name;
  long run = 0, failed = 0;
};

int cmd_selftest(double budget, std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto left = [&] { return std::chrono::duration<double>(clock::now() - start).count() < budget; };
  std::vector<Suite> suites;

  {
    Suite s{"isotropy vs brute force over F_3"};
    Tower tw(3);
    TowerScope scope(tw);
    std::mt19937_64 rng(seed);
    while (left() && s.run < 200) {
      const FormKind kind = rng() % 2 ? FormKind::Hermitian : FormKind::Skew;
      Poly x = random_poly(rng, 2), b = random_poly(rng, 2), c = random_poly(rng, 2);
      x = kind == FormKind::Hermitian ? even_part(x) : odd_part(x);
      c = kind == FormKind::Hermitian ? even_part(c) : odd_part(c);
      const PolyMatrix a(2, 2, {x, b, kind == FormKind::Hermitian ? star(b) : -star(b), c});
      ++s.run;
      const Vec v = isotropic_vector(a, kind);
      const bool formula_ok = naive_form_value(a, v, v).is_zero() && gcd(v).is_one();
      bool in_range = true;
      for (const auto& e : v) in_range = in_range && coeff_level(e) == 0 && e.degree() <= 3;
      const bool brute = brute_force_isotropic(a, 3).has_value();
      if (!formula_ok || (in_range && !brute)) ++s.failed;
    }
    suites.push_back(s);
  }
  {
    Suite s{"factor sequence round trip over F_3"};
    Tower tw(3);
    TowerScope scope(tw);
    for (FormKind kind : {FormKind::Hermitian, FormKind::Skew})
      for (const auto& fs : enumerate_sequences(2, 4, kind)) {
        if (!left()) break;
        ++s.run;
        const bool valid = validate_sequence(fs).valid;
        if (valid != realizable_by_pairing(fs)) {
          ++s.failed;
        } else if (valid && invariant_factors(assemble_canonical(fs).matrix()) != fs.entries) {
          ++s.failed;
        }
      }
    suites.push_back(s);
  }
  {
    Suite s{"canonicalize certificates"};
    for (std::uint32_t p : {3u, 5u}) {
      Tower tw(p);
      TowerScope scope(tw);
      for (std::uint64_t k = 0; k < 100 && left(); ++k) {
        RandomSpec spec;
        spec.seed = seed * 1000 + k;
        spec.n = 2 + k % 4;
        spec.kind = k % 2 ? FormKind::Hermitian : FormKind::Skew;
        const RandomInstance ri = random_instance(spec);
        ++s.run;
        try {
          const Canonicalization c = canonicalize(ri.a, spec.kind);
          if (!c.cert.verifies(ri.a) || c.factors.entries != ri.factors.entries) ++s.failed;
        } catch (const std::exception&) {
          ++s.failed;
        }
      }
    }
    suites.push_back(s);
  }

  bool green = true;
  for (const auto& s : suites) {
    const bool ok = s.failed == 0 && s.run > 0;
    green = green && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << s.name << ": " << s.run - s.failed << "/" << s.run << "\n";
  }
  std::cout << "elapsed " << std::chrono::duration<double>(clock::now() - start).count() << " s of " << budget << " s budget\n";
  return green ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical forms of hermitian and skew-hermitian matrices over F[t]"};
  app.require_subcommand(1);
  bool trace = false;
  std::string cert_out;

  std::string f1, f2, f3;
  auto* inv = app.add_subcommand("invariants", "invariant factors with parity tags");
  inv->add_option("file", f1)->required();

  auto* can = app.add_subcommand("canonical", "canonical form with a verified certificate");
  can->add_option("file", f1)->required();
  can->add_option("--certificate-out", cert_out, "write A, S and B here");
  can->add_flag("--trace", trace, "log every elementary move to stderr");

  auto* con = app.add_subcommand("congruent", "decide congruence of two forms");
  con->add_option("file_a", f1)->required();
  con->add_option("file_b", f2)->required();
  con->add_option("--certificate-out", cert_out, "write S with S* A S = B here");
  con->add_flag("--trace", trace, "log every elementary move to stderr");

  auto* ver = app.add_subcommand("verify", "check S* A S = B with S unimodular");
  ver->add_option("file_a", f1)->required();
  ver->add_option("file_s", f2)->required();
  ver->add_option("file_b", f3)->required();

  RandomSpec spec;
  std::uint32_t p = 5;
  int eps = 1;
  std::string out;
  auto* rnd = app.add_subcommand("random", "random instance A = S* C S with known C");
  rnd->add_option("--p", p, "odd prime")->required();
  rnd->add_option("--n", spec.n, "size")->required();
  rnd->add_option("--epsilon", eps, "1 or -1")->required()->check(CLI::IsMember({1, -1}));
  rnd->add_option("--seed", spec.seed);
  rnd->add_option("--max-degree", spec.max_degree);
  rnd->add_option("--moves", spec.moves);
  rnd->add_option("--out", out);

  double budget = 60;
  std::uint64_t seed = 1;
  auto* st = app.add_subcommand("selftest", "oracle suites within a time budget");
  st->add_option("--budget-seconds", budget);
  st->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*inv) return cmd_invariants(f1);
    if (*can) return cmd_canonical(f1, cert_out, trace);
    if (*con) return cmd_congruent(f1, f2, cert_out, trace);
    if (*ver) return cmd_verify(f1, f2, f3);
    if (*rnd) {
      spec.kind = eps == 1 ? FormKind::Hermitian : FormKind::Skew;
      return cmd_random(p, spec, out);
    }
    if (*st) return cmd_selftest(budget, seed);
  } catch (const VerifyFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kInputError;
}
