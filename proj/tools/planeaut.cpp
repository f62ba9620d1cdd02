// planeaut: command-line front end for the plane automorphism library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "planeaut/generators.hpp"
#include "planeaut/matrix_rep.hpp"
#include "planeaut/nonlin_lab.hpp"
#include "planeaut/parse.hpp"
#include "planeaut/random.hpp"
#include "planeaut/word_io.hpp"

using namespace planeaut;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kCheckFailed = 1, kParse = 2, kNotAuto = 3, kDomain = 4, kUsage = 64 };

struct Options {
  std::string field = "q";
  std::string format = "text";
  std::uint64_t seed = 1;
  bool verify = false;
  std::uint64_t work_bound = kDefaultWorkBound;

  // operands
  std::vector<std::string> autos;
  std::string matrix;
  std::string word_path = "-";
  std::string corner = "G11";
  std::string ideal;
  std::string r;
  int n = 0;
  std::string name;

  // lab parameters
  unsigned p = 2;
  unsigned rank = 1;
  unsigned N = 3;
  unsigned trials = 0;
};

class VerifyFailed : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Out {
 public:
  explicit Out(bool structured) : structured_(structured) {}
  bool structured() const { return structured_; }

  void result(const std::string& command, const std::string& text, json extra = json::object()) const {
    if (!structured_) {
      std::cout << text << "\n";
      return;
    }
    json j{{"command", command}, {"result", text}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump() << "\n";
  }
  void report(const Report& rep) const { std::cout << (structured_ ? rep.to_json_lines() : rep.to_text()); }

 private:
  bool structured_;
};

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void verify(bool on, bool ok, const std::string& what) {
  if (on && !ok) throw VerifyFailed("verification failed: " + what);
}

template <Field K>
json factor_records(const AmalgamWord<K>& w) {
  json arr = json::array();
  for (const auto& f : w.factors) {
    if (const auto* a = std::get_if<AffineAuto<K>>(&f))
      arr.push_back({{"kind", "affine"}, {"map", a->to_plane().to_string()}});
    else
      arr.push_back({{"kind", "elementary"}, {"map", std::get<ElemAuto<K>>(f).to_plane().to_string()}});
  }
  arr.push_back({{"kind", "tail"}, {"map", w.tail.to_plane().to_string()}});
  return arr;
}

template <Field K>
int run_algebra(const std::string& cmd, const Options& o, const typename K::Context& ctx, const Out& out) {
  auto autos = [&] {
    std::vector<PlaneAuto<K>> v;
    for (const auto& s : o.autos) v.push_back(parse_plane_auto<K>(s, ctx));
    return v;
  };

  if (cmd == "compose") {
    const auto v = autos();
    PlaneAuto<K> r = v.front();
    for (std::size_t i = 1; i < v.size(); ++i) r = compose(r, v[i]);
    out.result(cmd, r.to_string());
  } else if (cmd == "invert") {
    const PlaneAuto<K> phi = autos().front();
    const PlaneAuto<K> inv = invert(phi);
    verify(o.verify, compose(phi, inv).is_identity() && compose(inv, phi).is_identity(), "phi o phi^-1 = id");
    out.result(cmd, inv.to_string());
  } else if (cmd == "jacobian") {
    const PlaneAuto<K> phi = autos().front();
    const Poly2<K> j = jacobian(phi);
    const bool unit = j.is_constant() && !j.is_zero();
    if (!unit) std::cerr << "warning: NotAnAutomorphism: jacobian is not a nonzero constant\n";
    out.result(cmd, j.to_string(), {{"automorphism_candidate", unit}});
  } else if (cmd == "classify") {
    const ClassifyFlags f = classify(autos().front());
    out.result(cmd, to_string(f),
               {{"flags",
                 {{"is_affine", f.is_affine},
                  {"is_elementary", f.is_elementary},
                  {"in_B", f.in_B},
                  {"in_Aut0", f.in_Aut0},
                  {"in_Aut1", f.in_Aut1},
                  {"in_SAut", f.in_SAut}}}});
  } else if (cmd == "factor") {
    const PlaneAuto<K> phi = autos().front();
    const AmalgamWord<K> w = vdk_factor(phi);
    verify(o.verify, w.recompose() == phi, "recomposition of the word");
    const std::string type = to_string(word_type(w));
    if (out.structured())
      out.result(cmd, write_word(w), {{"type", type}, {"factors", factor_records(w)}});
    else
      std::cout << write_word(w) << "# type " << type << "\n";
  } else if (cmd == "nf") {
    const AmalgamWord<K> w = read_word<K>(read_source(o.word_path), ctx);
    const AmalgamWord<K> nf = normal_form(w);
    verify(o.verify, nf.recompose() == w.recompose(), "normal form recomposes to the input");
    if (out.structured())
      out.result(cmd, write_word(nf), {{"type", to_string(word_type(nf))}, {"factors", factor_records(nf)}});
    else
      std::cout << write_word(nf);
  } else if (cmd == "free") {
    const PlaneAuto<K> phi = autos().front();
    const FreeWord<K> w = free1_decompose(phi);
    verify(o.verify, recompose(w, ctx) == phi, "recomposition of the free word");
    json pairs = json::array();
    std::string text;
    for (const auto& [d, f] : w) {
      pairs.push_back({{"delta", {d.a().to_string(), d.b().to_string()}}, {"f", f.to_string("t")}});
      text += d.to_string() + " " + f.to_string("t") + "\n";
    }
    if (out.structured())
      out.result(cmd, text, {{"pairs", pairs}});
    else
      std::cout << text;
  } else if (cmd == "to-matrix") {
    const PlaneAuto<K> phi = autos().front();
    const PolyMat2<K> m = to_matrix(phi);
    verify(o.verify, from_matrix(m) == phi, "from_matrix(to_matrix(phi)) = phi");
    out.result(cmd, m.to_string());
  } else if (cmd == "from-matrix") {
    const PolyMat2<K> m = parse_polymat<K>(o.matrix, ctx);
    const PlaneAuto<K> phi = from_matrix(m);
    verify(o.verify, to_matrix(phi) == m, "to_matrix(from_matrix(G)) = G");
    out.result(cmd, phi.to_string());
  } else if (cmd == "matrix-factor") {
    const PolyMat2<K> m = parse_polymat<K>(o.matrix, ctx);
    std::vector<long> trace;
    const auto fs = matrix_factor(m, &trace);
    verify(o.verify, product(fs, ctx) == m, "product of the factors");
    json recs = json::array();
    std::string text;
    for (const auto& f : fs) {
      recs.push_back({{"delta", {f.delta.a().to_string(), f.delta.b().to_string()}}, {"c", f.c.to_string()}, {"k", f.k}});
      text += f.delta.to_string() + " c=" + f.c.to_string() + " k=" + std::to_string(f.k) + "\n";
    }
    if (out.structured())
      out.result(cmd, text, {{"factors", recs}, {"degrees", trace}});
    else
      std::cout << text;
  } else if (cmd == "corner") {
    const WordType target = o.corner == "G22" ? WordType::G22 : WordType::G11;
    if (o.corner != "G11" && o.corner != "G22") throw DomainError("corner must be G11 or G22");
    const auto c = conjugate_to_corner(vdk_factor(autos().front()), target);
    verify(o.verify, word_type(c.conjugate) == target, "conjugate has the requested type");
    out.result(cmd, c.conjugator.recompose().to_string(),
               {{"conjugate", c.conjugate.recompose().to_string()}, {"type", to_string(word_type(c.conjugate))}});
    if (!out.structured())
      std::cout << "conjugate: " << c.conjugate.recompose().to_string() << "\ntype: " << to_string(word_type(c.conjugate)) << "\n";
  } else if (cmd == "witness") {
    const PlaneAuto<K> g = autos().front();
    HWitness<K> w;
    if constexpr (requires { typename K::Base; }) {
      using B = typename K::Base;
      const Poly1<B> gen = o.ideal.empty() ? Poly1<B>::variable(ctx) : parse_poly1<B>(o.ideal, ctx, "z");
      std::optional<K> r;
      if (!o.r.empty()) r = parse_scalar<K>(o.r, ctx);
      std::optional<int> n;
      if (o.n > 0) n = o.n;
      w = hypothesis_h_witness_congruence<B>(g, gen, r, n);
    } else {
      w = hypothesis_h_witness_saut0(g);
    }
    verify(o.verify, !classify(w.conjugate).in_B, "conjugate lies outside B");
    out.result(cmd, w.conjugator.to_string(), {{"conjugate", w.conjugate.to_string()}, {"rule", w.rule}});
    if (!out.structured()) std::cout << "conjugate: " << w.conjugate.to_string() << "\nrule: " << w.rule << "\n";
  } else if (cmd == "named") {
    std::optional<K> r;
    if (!o.r.empty()) r = parse_scalar<K>(o.r, ctx);
    out.result(cmd, generators::named<K>(o.name, ctx, o.n, r).to_string());
  } else if (cmd == "lab pingpong") {
    Random rnd(o.seed);
    const unsigned trials = o.trials ? o.trials : 100;
    std::vector<EFactor<K>> factors;
    std::vector<PolyVec<K>> samples;
    Report rep;
    for (unsigned i = 0; i < trials; ++i) {
      const EFactor<K> f{rnd.line<K>(ctx), rnd.any<K>(ctx, true), static_cast<unsigned>(rnd.integer(1, 3))};
      PolyVec<K> v;
      do {
        v = {rnd.poly<K>(ctx, 0, static_cast<unsigned>(rnd.integer(0, 3))),
             rnd.poly<K>(ctx, 0, static_cast<unsigned>(rnd.integer(0, 3)))};
        if (rnd.coin()) v.x = Poly1<K>(ctx);
      } while (v.hc_line() == f.delta);
      rep.append(pingpong_check<K>({f}, {v}));
    }
    std::vector<MatFreeWord<K>> words;
    for (unsigned i = 0; i < (trials + 1) / 2; ++i) {
      MatFreeWord<K> w;
      for (const auto& f : rnd.efactors<K>(ctx, 5, 3)) w.push_back({f.delta, Poly1<K>::monomial(f.c, f.k)});
      w = reduce(w);
      if (!w.empty()) words.push_back(w);
    }
    rep.append(pingpong_check<K>({}, {}, words));
    out.report(rep);
    return rep.all_pass() ? kOk : kCheckFailed;
  } else {
    throw DomainError("unknown command '" + cmd + "'");
  }
  return kOk;
}

int run_lab(const std::string& suite, const Options& o, const Out& out) {
  Report rep;
  if (suite == "gamma") {
    rep = gamma_relations_check(o.seed, o.trials ? o.trials : 10);
  } else if (suite == "pgroup") {
    const unsigned index = pgroup_nilpotency_index(o.p, o.rank, o.work_bound);
    const unsigned expected = o.p * o.rank;
    const std::string params = "p=" + std::to_string(o.p) + " r=" + std::to_string(o.rank);
    rep.add("pgroup.index", params, std::to_string(expected), std::to_string(index), index == expected);
    if (pgroup_work(o.p, o.rank) <= 4096) {
      const unsigned brute = pgroup_nilpotency_index_bruteforce(o.p, o.rank);
      rep.add("pgroup.bruteforce", params, std::to_string(index), std::to_string(brute), brute == index);
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < o.rank; ++i) q *= o.p;
    if (q <= 27) {
      const bool ok = power_sum_identity(o.p, o.rank);
      rep.add("pgroup.power_sum", params, "true", ok ? "true" : "false", ok);
    }
    if (!out.structured())
      std::cout << "index=" << index << " expected=" << expected << (index == expected ? " pass" : " FAIL") << "\n";
  } else if (suite == "digits") {
    const auto bad = digit_lemma_scan(o.p, o.N);
    if (!out.structured()) std::cout << bad.size() << " counterexamples\n";
    const std::string params = "p=" + std::to_string(o.p) + " N_max=" + std::to_string(o.N);
    rep.add("digits.scan", params, "0", std::to_string(bad.size()), bad.empty());
    for (const auto& c : bad)
      rep.add("digits.counterexample",
              "N=" + std::to_string(c.N) + " a=" + std::to_string(c.a) + " n=" + std::to_string(c.n) +
                  " m=" + std::to_string(c.m),
              "none", "violation", false);
  } else if (suite == "logscale") {
    using Q = Rational;
    using M = DenseMat<Q>;
    const M u(2, {Q(1L), Q(1L), Q(0L), Q(1L)});
    const M h = M::diag({Q(2L), Q(1L)});
    const bool base = log_scaling_check(h, u, 1);
    rep.add("logscale.example", "u=" + u.to_string() + " h=" + h.to_string() + " k=1", "true", base ? "true" : "false", base);
    Random rnd(o.seed);
    const unsigned trials = o.trials ? o.trials : 2;
    for (unsigned i = 0; i < trials; ++i) {
      M P(2, Q::Context{});
      do {
        for (std::size_t a = 0; a < 2; ++a)
          for (std::size_t b = 0; b < 2; ++b) P(a, b) = rnd.scalar(Q::Context{});
      } while (P.det().is_zero());
      const M Pi = P.inverse();
      const M u2 = P * u * Pi, h2 = P * h * Pi;
      const bool ok = log_scaling_check(h2, u2, 1);
      rep.add("logscale.conjugated", "P=" + P.to_string(), "true", ok ? "true" : "false", ok);
    }
    const bool neg = log_scaling_check(M::diag({Q(-1L), Q(-1L)}), M::diag({Q(-1L), Q(-1L)}), 0);
    rep.add("logscale.minus_identity", "u=-id h=id k=0", "true", neg ? "true" : "false", neg);
  } else {
    throw DomainError("unknown lab suite '" + suite + "'");
  }
  out.report(rep);
  return rep.all_pass() ? kOk : kCheckFailed;
}

int dispatch(const std::string& cmd, const Options& o) {
  const Out out(o.format == "structured");
  if (cmd.rfind("lab ", 0) == 0 && cmd != "lab pingpong") return run_lab(cmd.substr(4), o, out);

  const std::string& f = o.field;
  if (f == "q") return run_algebra<Rational>(cmd, o, {}, out);
  if (f == "q-of-z") return run_algebra<RatFunc<Rational>>(cmd, o, {}, out);
  if (f.rfind("fp:", 0) == 0) {
    std::string rest = f.substr(3);
    const bool of_z = rest.size() > 5 && rest.substr(rest.size() - 5) == "-of-z";
    if (of_z) rest.resize(rest.size() - 5);
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(rest);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--field", "bad prime in '" + f + "'");
    }
    const auto ctx = Fp::make_context(p);
    return of_z ? run_algebra<RatFunc<Fp>>(cmd, o, ctx, out) : run_algebra<Fp>(cmd, o, ctx, out);
  }
  throw CLI::ValidationError("--field", "expected q, fp:<p>, q-of-z or fp:<p>-of-z");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with polynomial automorphisms of the plane"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("PLANEAUT_WORK_BOUND")) {
    try {
      o.work_bound = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: PLANEAUT_WORK_BOUND is not a number\n";
      return kUsage;
    }
  }
  app.add_option("--field", o.field, "q | fp:<p> | q-of-z | fp:<p>-of-z")->capture_default_str();
  app.add_option("--format", o.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_flag("--verify", o.verify, "recompute and check each result before printing");
  app.add_option("--work-bound", o.work_bound, "work bound for the p-group lab")->capture_default_str();

  std::string cmd;
  auto with_autos = [&](const char* name, const char* help, std::size_t count) {
    auto* sc = app.add_subcommand(name, help);
    auto* opt = sc->add_option("automorphism", o.autos, "\"P, Q\"")->required();
    if (count) opt->expected(static_cast<int>(count));
    sc->callback([&cmd, name] { cmd = name; });
    return sc;
  };
  with_autos("compose", "compose left to right: first o second o ...", 0)->get_option("automorphism")->expected(2, 1 << 16);
  with_autos("invert", "inverse automorphism", 1);
  with_autos("jacobian", "Jacobian determinant", 1);
  with_autos("classify", "subgroup membership flags", 1);
  with_autos("factor", "van der Kulk factorization into a reduced word", 1);
  with_autos("free", "free-product decomposition of an element of Aut_1", 1);
  with_autos("to-matrix", "image in GL_1(2, K[t])", 1);
  with_autos("witness", "conjugator moving a Borel element out of B", 1);
  auto* corner = with_autos("corner", "conjugate into type G11 or G22", 1);
  corner->add_option("--to", o.corner, "G11 | G22")->capture_default_str();
  auto* witness = app.get_subcommand("witness");
  witness->add_option("--ideal", o.ideal, "generator of the ideal I in K[z] (default z)");
  witness->add_option("--r", o.r, "element r of I");
  witness->add_option("--n", o.n, "exponent n >= 3");

  auto* nf = app.add_subcommand("nf", "normal form of a serialized word");
  nf->add_option("word", o.word_path, "file with a serialized word, or - for stdin")->capture_default_str();
  nf->callback([&] { cmd = "nf"; });
  for (const char* name : {"from-matrix", "matrix-factor"}) {
    auto* sc = app.add_subcommand(name, std::string(name) == "from-matrix" ? "inverse of to-matrix" : "E_delta factorization");
    sc->add_option("matrix", o.matrix, "\"a, b ; c, d\" in t")->required();
    sc->callback([&cmd, name] { cmd = name; });
  }
  auto* named = app.add_subcommand("named", "named generator: S, S', T, h, u, gamma, phi");
  named->add_option("name", o.name)->required();
  named->add_option("--n", o.n, "exponent for u and phi");
  named->add_option("--r", o.r, "parameter for gamma and phi");
  named->callback([&] { cmd = "named"; });

  auto* lab = app.add_subcommand("lab", "verification suites");
  lab->require_subcommand(1);
  const std::vector<std::pair<const char*, const char*>> suites{
      {"pingpong", "ping-pong inclusions and faithfulness"},
      {"gamma", "relations of S, S', T"},
      {"pgroup", "nilpotency index of E x| F_p[E]"},
      {"digits", "p-adic digit scan"},
      {"logscale", "logarithm scaling of unipotent matrices"}};
  for (const auto& [name, help] : suites) {
    auto* sc = lab->add_subcommand(name, help);
    sc->add_option("--p", o.p, "prime")->capture_default_str();
    sc->add_option("--r", o.rank, "rank of E")->capture_default_str();
    sc->add_option("--N", o.N, "largest N")->capture_default_str();
    sc->add_option("--trials", o.trials, "number of random cases (0 = suite default)");
    sc->callback([&cmd, name = std::string(name)] { cmd = "lab " + name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return dispatch(cmd, o);
  } catch (const ParseError& e) {
    std::cerr << "error: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NotAnAutomorphism& e) {
    std::cerr << "error: NotAnAutomorphism: " << e.what() << "\n";
    return kNotAuto;
  } catch (const VerifyFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
}
