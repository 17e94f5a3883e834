// Acceptance runner: one PASS/FAIL line per criterion. Time limits are wall
// clock per criterion; a criterion passes only if its checks hold and it
// finishes within its limit.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "displace/checkers/checkers.hpp"
#include "displace/cli/suite.hpp"
#include "displace/core/errors.hpp"
#include "displace/hnn/hnn.hpp"
#include "displace/linalg/gl.hpp"
#include "displace/perm/perm_group.hpp"
#include "displace/pl/pl_group.hpp"
#include "displace/pl/pl_tower.hpp"
#include "displace/wreath/wreath.hpp"
#include "oracles.hpp"

using namespace displace;

namespace {

constexpr std::uint64_t kSeed = 2024;

/// Collects failed conditions for one criterion.
class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& fact) { notes_.push_back(fact); }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    std::ostringstream out;
    for (const auto& f : failures_) out << "\n    violated: " << f;
    for (const auto& n : notes_) out << "\n    " << n;
    return out.str();
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

/// Runs one check of a registered suite and reports whether it met its
/// expected verdict.
bool suite_check_met(const std::string& suite_name, const std::string& id, Outcome& out) {
  const Suite suite = find_suite(suite_name);
  for (const auto& spec : suite.checks) {
    if (spec.id != id) continue;
    RunOptions options;
    options.seed = kSeed;
    const PropertyReport r = spec.run(options);
    const bool met = r.verdict == spec.expected ||
                     (spec.expected == Verdict::Pass && r.verdict == Verdict::BoundedPass);
    out.require(met, suite_name + "/" + id + ": " + r.failed_condition);
    return met;
  }
  out.require(false, "no check " + suite_name + "/" + id);
  return false;
}

TowerSpec explicit_spec(std::vector<std::int64_t> prefix) {
  TowerSpec spec;
  spec.base = symmetric_s3();
  spec.prefix = std::move(prefix);
  return spec;
}

oracle::Perm to_oracle(const Permutation& p) {
  oracle::Perm out;
  for (auto x : p.images()) out.push_back(static_cast<int>(x));
  return out;
}

Rational random_rational(Rng& rng) {
  return make_rational(static_cast<long>(uniform_index(rng, 11)) - 5, static_cast<long>(uniform_index(rng, 3)) + 1);
}

RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = random_rational(rng);
    }
    if (m.is_invertible()) return m;
  }
}

/// Full product computed entry by entry, without the library's operator*.
RationalMatrix naive_product(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational sum = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += a.at(i, k) * b.at(k, j);
      out.at(i, j) = sum;
    }
  }
  return out;
}

void criterion_wreath_positive(Outcome& out) {
  const Tower tower(explicit_spec({2, 2, 2, 2}), 4);
  for (std::size_t i = 1; i <= 4; ++i) {
    const FgSubgroup h = tower.level_generators(i - 1);
    const auto w = zn_witness(tower, h, i - 1, i, 2);
    const Element& t = std::get<CznWitness>(w.certificate.witness).t;
    out.require(check_cznc(tower.embed(h, i - 1, i), t, 2).passed(), "level " + std::to_string(i));
  }
  const Tower four(explicit_spec({4}), 1);
  const auto w = zn_witness(four, four.level_generators(0), 0, 1, 2);
  const Element& t = std::get<CznWitness>(w.certificate.witness).t;
  out.require(t == power(four.shift_generator(1), 2), "n = 4 witness is shift^2");
  const FgSubgroup embedded = four.embed(four.level_generators(0), 0, 1);
  out.require(check_cznc(embedded, t, 2).passed(), "n = 4, k = 2");
  // Closure-level cross-check in the imprimitive permutation realization.
  std::vector<oracle::Perm> gens;
  for (const auto& g : embedded.generators()) gens.push_back(oracle::wreath_to_perm(g));
  out.require(oracle::is_zp_witness(oracle::closure(gens, 12), oracle::wreath_to_perm(t), 2),
              "n = 4 witness on full closures");
}

void criterion_wreath_negative(Outcome& out) {
  auto w = WreathGroup::make(symmetric_s3(), 3);
  const FgSubgroup h("S3", w, {w->embed(symmetric_s3()->parse("(1 2)")), w->embed(symmetric_s3()->parse("(1 2 3)"))});
  out.require(*w->order() == 648, "|S3 wr Z/3| = 648");
  out.require(!brute_search_zp_witness(*w, h, 2), "no Z/2 witness");
  std::vector<oracle::Perm> gens;
  for (const auto& g : h.generators()) gens.push_back(oracle::wreath_to_perm(g));
  const auto closure_h = oracle::closure(gens, 9);
  std::size_t oracle_hits = 0;
  for (const auto& t : enumerate_group(*w)) oracle_hits += oracle::is_zp_witness(closure_h, oracle::wreath_to_perm(t), 2);
  out.require(oracle_hits == 0, "oracle finds no Z/2 witness");
  out.note("elements searched: 648");
}

void criterion_torsion(Outcome& out) {
  auto w = WreathGroup::make(symmetric_s3(), 3);
  const FgSubgroup h("S3", w, {w->embed(symmetric_s3()->parse("(1 2)")), w->embed(symmetric_s3()->parse("(1 2 3)"))});
  std::size_t count = 0;
  for (const auto& t : enumerate_group(*w)) {
    const auto q = order_of(t);
    out.require(q.has_value(), "finite order");
    out.require(*q == oracle::order(oracle::wreath_to_perm(t)), "order agrees with the permutation realization");
    if (!check_czc(h, t, static_cast<std::int64_t>(*q)).failed()) out.require(false, "czc passed for " + t.to_string());
    ++count;
  }
  out.note("elements checked: " + std::to_string(count));
}

void criterion_gl_block(Outcome& out) {
  Rng rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    const RationalMatrix x = random_invertible(rng, 2);
    const RationalMatrix g = random_invertible(rng, 4);
    const RationalMatrix full = naive_product(naive_product(x.padded(4), g), x.inverse().padded(4));
    if (!(block_conjugate(x, g) == full)) {
      out.require(false, "sample " + std::to_string(i));
      return;
    }
  }
}

void criterion_gl_centralizer(Outcome& out) {
  std::vector<RationalMatrix> mats;
  std::vector<std::vector<std::vector<long>>> raw;
  for (const auto& m : test_matrices()) {
    const RationalMatrix p = m.padded(4);
    mats.push_back(p);
    std::vector<std::vector<long>> rows(4, std::vector<long>(4));
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) rows[r][c] = p.at(r, c).get_num().get_si();
    }
    raw.push_back(rows);
  }
  const auto c = centralizer_space(mats);
  out.require(c.dim() == 5, "dimension " + std::to_string(c.dim()));
  out.require(oracle::centralizer_dimension(raw) == 5, "oracle dimension");
  for (const auto& v : c.basis()) {
    const RationalMatrix m = unvectorize(v, 4);
    bool shape = m.at(0, 1) == 0 && m.at(1, 0) == 0 && m.at(0, 0) == m.at(1, 1);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t col = 2; col < 4; ++col) shape = shape && m.at(r, col) == 0 && m.at(col, r) == 0;
    }
    out.require(shape, "basis element " + m.to_string());
    for (const auto& a : mats) out.require(naive_product(m, a) == naive_product(a, m), "basis element commutes");
  }
}

void criterion_gl_z2(Outcome& out) {
  const FgSubgroup h = gl_subgroup("GL_2(Z)", gl2z_generators());
  const auto w = gl_block_swap_witness(h);
  const Element& t = std::get<CznWitness>(w.certificate.witness).t;
  out.require(check_cznc(h, t, 2).passed(), "check_cznc n = 2");
  out.require(check_czc(h, t, 2).failed(), "check_czc fails at p = 2");
}

void criterion_pl_tower(Outcome& out) {
  const PLTower tower = tower_gamma(3);
  auto pl = PLGroup::instance();
  for (std::size_t i = 1; i <= 2; ++i) {
    const PLHomeo& t = tower.dissipator(i + 1);
    const IntervalSet region = IntervalSet::single(tower.interval(i).lo, tower.interval(i).hi);
    out.require(displaces(t, region, 50).passed(), "displaces i = " + std::to_string(i));
    const auto czc = check_czc(tower.subgroup(i), pl->element(t), 10);
    out.require(czc.verdict == Verdict::BoundedPass, "czc bounded-pass i = " + std::to_string(i));
  }
  suite_check_met("pl-tower", "dichotomy-200", out);
  suite_check_met("pl-tower", "finite-supports-200", out);
}

void criterion_fixed_point(Outcome& out) {
  const PLHomeo h = unique_fixed_point_element();
  out.require(h(make_rational(1, 2)) == make_rational(1, 2), "h(1/2) = 1/2");
  out.require(in_standard_f_copy(h), "h in F");
  // Pointwise sign pattern from the F-copy formulas, not the library.
  for (long n = 1; n < 256; ++n) {
    const Rational x = make_rational(n, 256);
    if (x == make_rational(1, 2)) continue;
    out.require((h(x) > x) == (x < make_rational(1, 2)), "h moves " + to_string(x) + " toward 1/2");
  }
  suite_check_met("fixed-point", "unique-fixed-point", out);
  suite_check_met("fixed-point", "centralizers-fix-half", out);
}

void criterion_britton(Outcome& out) {
  for (const char* id : {"relations-b", "relations-m", "britton-lemma-b", "britton-lemma-m", "confluence-b",
                         "confluence-m"}) {
    suite_check_met("britton", id, out);
  }
  out.note("one-letter words enumerated: 2592 in b(S3), 5184 in m(S3)");
}

void criterion_bass_serre(Outcome& out) {
  auto b = HnnGroup::make_binate(symmetric_s3()->as_subgroup());
  out.require(bass_serre_ball(*b, 3).size() == oracle::regular_ball(12, 3), "ball size");
  std::size_t minus_checked = 0;
  std::size_t diagonal_checked = 0;
  for (const auto& g : enumerate_group(*symmetric_s3())) {
    if (g.is_identity()) continue;
    const auto fixed = bass_serre_fixed_vertices(b->from_base(b->minus(g)), 3);
    out.require(fixed.size() == 1 && fixed.front().letters.empty(), "(g, 1) fixes only the base");
    ++minus_checked;
    const auto diag = bass_serre_fixed_vertices(b->from_base(b->diagonal(g)), 1);
    out.require(diag.size() >= 2, "(h, h) fixes at least 2 vertices");
    ++diagonal_checked;
  }
  out.require(minus_checked == 5 && diagonal_checked == 5, "five nontrivial elements");
}

void criterion_binate_refutation(Outcome& out) {
  auto b = HnnGroup::make_binate(symmetric_s3()->as_subgroup());
  const auto space = cc_search_space(*b, 2);
  out.require(space == 36 + 2 * 36 * 36 + 4ULL * 36 * 36 * 36, "search space size");
  out.require(!cc_witness_search_b1(symmetric_s3()->as_subgroup(), 2), "no witness found");
  out.note("words searched: " + std::to_string(space));
}

void criterion_mitosis(Outcome& out) {
  out.require(mitosis_check(symmetric_s3()->as_subgroup()).passed(), "mitosis_check(S3)");
  auto m = HnnGroup::make_mitosis(symmetric_s3()->as_subgroup());
  const Element s = m->letter(m->letter_index("s"));
  const Element d = m->letter(m->letter_index("d"));
  const FgSubgroup h = m->gamma_minus();
  out.require(check_mitotic(h, s, d * s).passed(), "check_mitotic(t1 = s, t2 = d s)");
  GeneratorMap f;
  for (const auto& g : h.generators()) f.images.push_back(conj(s, g));
  // Binate data induced by (t1, t2): f = conjugation by t1, t = t2 t1^-1 = d.
  out.require(d * s * inv(s) == d, "t2 t1^-1 = d");
  out.require(check_binate(h, f, d * s * inv(s)).passed(), "check_binate(f = conj s, t = d)");
  out.note("check_binate with t = d s itself fails; the induced t is t2 t1^-1 = d");
}

void criterion_hall(Outcome& out) {
  for (std::int64_t n : {2, 3, 4}) {
    const auto w = sym_zn_witness(symmetric_s3()->as_subgroup(), n);
    const Element& t = std::get<CznWitness>(w.certificate.witness).t;
    const FgSubgroup& h = w.certificate.subject;
    out.require(check_cznc(h, t, n).passed(), "n = " + std::to_string(n));
    std::vector<oracle::Perm> gens;
    for (const auto& g : h.generators()) gens.push_back(to_oracle(g.as<Permutation>()));
    const auto degree = static_cast<std::size_t>(3 * n);
    out.require(oracle::is_zp_witness(oracle::closure(gens, degree), to_oracle(t.as<Permutation>()), static_cast<int>(n)),
                "oracle n = " + std::to_string(n));
  }
}

void criterion_end_to_end(Outcome& out) {
  std::vector<CertifiedWitness> produced;
  const Tower tower(explicit_spec({2, 2, 2}), 3);
  for (std::size_t i = 1; i <= 3; ++i) produced.push_back(zn_witness(tower, tower.level_generators(i - 1), i - 1, i, 2));
  for (std::int64_t n : {2, 3, 4}) produced.push_back(sym_zn_witness(symmetric_s3()->as_subgroup(), n));
  produced.push_back(gl_block_swap_witness(gl_subgroup("GL_2(Z)", gl2z_generators())));
  auto sym4 = PermGroup::symmetric(4);
  const FgSubgroup lambda("<(1 2)>", sym4, {sym4->parse("(1 2)")});
  const FgSubgroup h("<(1 3)>", sym4, {sym4->parse("(1 3)")});
  const WitnessCertificate m_cert{h, MWitness{lambda, sym4->parse("(1 3)(2 4)"), h.generators(), sym4->parse("(2 3)"),
                                              10, finite_membership(lambda)}};
  produced.push_back(derive_czc_from_M(m_cert, h, sym4->parse("(2 3)")));
  auto sym6 = PermGroup::symmetric(6);
  const FgSubgroup s3("S3", sym6, {sym6->parse("(1 2)"), sym6->parse("(1 2 3)")});
  const WitnessCertificate first{lambda, CcWitness{sym4->parse("(1 3)(2 4)")}};
  const WitnessCertificate second{s3, CcWitness{sym6->parse("(1 4)(2 5)(3 6)")}};
  produced.push_back(product_cc_witness(first, second));
  for (const auto& w : produced) {
    out.require(w.report.passed(), "produced report for " + w.certificate.subject.label());
    out.require(verify(w.certificate).passed(), "re-verification for " + w.certificate.subject.label());
  }
  out.note("witness certificates re-verified: " + std::to_string(produced.size()));

  const std::string report_path = "acceptance-suite-all.json";
  const std::string command = std::string("\"") + DISPLACE_CHECK_PATH + "\" --suite all --out " + report_path;
  const int status = std::system(command.c_str());
  const int code = status == -1 ? -1 : WEXITSTATUS(status);
  out.require(code == 0, "displace-check --suite all exited " + std::to_string(code));
  std::remove(report_path.c_str());
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "wreath Z/n witnesses at levels 1-4 and n = 4, k = 2", 5, criterion_wreath_positive},
      {2, "no Z/2 witness in S3 wr Z/3 (648 elements)", 10, criterion_wreath_negative},
      {3, "torsion obstruction for every t in S3 wr Z/3", 30, criterion_torsion},
      {4, "block conjugation on 200 random GL_4(Q) inputs", 5, criterion_gl_block},
      {5, "centralizer of the test matrices has dimension 5 and block shape", 2, criterion_gl_centralizer},
      {6, "GL_2(Z) block swap is a Z/2 witness and fails at p = 2", 2, criterion_gl_z2},
      {7, "PL tower of depth 3", 60, criterion_pl_tower},
      {8, "unique fixed point and centralizers fixing 1/2", 10, criterion_fixed_point},
      {9, "Britton relations, lemma and confluence", 60, criterion_britton},
      {10, "Bass-Serre fixed vertices", 120, criterion_bass_serre},
      {11, "no commuting-conjugate witness in b(S3) with <= 2 letters", 300, criterion_binate_refutation},
      {12, "mitosis data in m(S3)", 10, criterion_mitosis},
      {13, "Sym(3n) Z/n witnesses for n = 2, 3, 4", 2, criterion_hall},
      {14, "witness re-verification and full suite exit code", 600, criterion_end_to_end},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) out.require(false, "time limit exceeded");
    const bool pass = out.ok();
    failed += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", seconds, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.number << "] " << c.name << " (" << timing << ")"
              << out.detail() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
