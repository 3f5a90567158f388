#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>

#include "commands.hpp"
#include "hopfcat/fixtures.hpp"
#include "hopfcat/hopfcat.hpp"

using namespace hopfcat;
namespace fx = hopfcat::fixtures;
namespace fs = std::filesystem;

namespace {

const Field Q = Field::rationals();
const fs::path fixture_dir = HOPFCAT_FIXTURE_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HopfCategory load_hopf(const std::string& name) {
  return std::get<HopfCategory>(load_document(fixture_dir / (name + ".hcat")));
}

/// Every Hopf fixture, read from the shipped files where one exists.
std::vector<std::pair<std::string, HopfCategory>> fixtures() {
  std::vector<std::pair<std::string, HopfCategory>> out;
  for (const char* n : {"pair2", "pair3", "disjoint", "z2", "z3", "sweedler"}) out.emplace_back(n, load_hopf(n));
  for (const char* n : {"z2-strong-graded", "z2-zero-graded"}) {
    out.emplace_back(n, from_graded(std::get<GradedHopf>(load_document(fixture_dir / (std::string(n) + ".hcat")))));
  }
  return out;
}

int quiet_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

// 1
Outcome groupoid_pipeline() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto gf = std::get<GroupoidFile>(load_document(fixture_dir / "pair3-groupoid.hcat"));
  const HopfCategory a = linearize_groupoid(gf.groupoid, gf.field);
  const Report r = verify_structure(a, Level::hopf);
  o.require(r.passed(), "pair3 fails level hopf");
  o.require(r.find("assoc").size() == 81, "expected 81 associativity quadruples");
  o.require(r.find("comult-mult").size() == 27, "expected 27 multiplication triples");
  o.require(r.find("coassoc").size() == 9 && r.find("counit-left").size() == 9, "expected 9 coalgebra pairs");
  o.require(r.find("antipode-left").size() == 9 && r.find("antipode-right").size() == 9, "expected 9 antipode pairs");
  const WeakHopf w = pack(a);
  o.require(verify_weak_hopf(w).passed(), "packed algebra is not weak Hopf");
  // Delta(1) = sum_x 1_x (x) 1_x
  LinMap expected(Q, w.total * w.total, 1);
  for (std::size_t x = 0; x < 3; ++x) {
    const std::size_t i = w.block(x, x).offset;
    expected.at(i * w.total + i, 0) = Scalar::one(Q);
  }
  o.require(w.comult * w.unit == expected, "Delta(1) differs from sum_x 1_x (x) 1_x");
  // Groupoid algebra built from the composition table alone.
  const Groupoid& g = gf.groupoid;
  auto index = [&](std::size_t m) {
    const auto& mm = g.morphisms[m];
    return w.block(mm.target, mm.source).offset + g.local_index(m);
  };
  LinMap table(Q, w.total, w.total * w.total);
  for (std::size_t p = 0; p < g.morphisms.size(); ++p)
    for (std::size_t q = 0; q < g.morphisms.size(); ++q)
      if (auto c = g.comp(p, q)) table.at(index(*c), index(p) * w.total + index(q)) = Scalar::one(Q);
  o.require(w.mult == table, "packed multiplication differs from the groupoid algebra");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = "81 assoc quadruples, 27 mult triples, 9 pairs, total dim " + std::to_string(w.total);
  return o;
}

// 2
Outcome singleton_reduction() {
  Outcome o;
  for (const char* n : {"z2", "z3"}) {
    const HopfCategory a = load_hopf(n);
    o.require(verify_structure(a, Level::hopf).passed(), std::string(n) + " fails level hopf");
    const Report t = check_antipode_theorems(a);
    o.require(t.passed(), std::string(n) + " fails the antipode identities");
    const auto c = involution_conditions(a);
    o.require(c[0] && c[1] && c[2], std::string(n) + ": an involution condition is false");
    const LinMap& s = a.antipode(0, 0);
    o.require(s * s == LinMap::identity(Q, a.dim(0, 0)), std::string(n) + ": S^2 != id");
  }
  const HopfCategory sw = load_hopf("sweedler");
  o.require(verify_structure(sw, Level::hopf).passed(), "sweedler fails level hopf");
  o.require(check_antipode_theorems(sw).passed(), "sweedler fails the antipode identities");
  const auto c = involution_conditions(sw);
  o.require(!c[0] && !c[1] && !c[2], "sweedler: an involution condition holds");
  if (o.ok) o.detail = "Z/2, Z/3 all true; Sweedler all false";
  return o;
}

// 3
Outcome fundamental_positive() {
  Outcome o;
  std::size_t cans = 0;
  for (const auto& [name, a] : fixtures()) {
    for (const auto& c : can_ranks(a)) o.require(c.invertible(), name + ": singular can map");
    const std::size_t n = a.size();
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          // can_inverse compares the closed form with the matrix inverse.
          const auto inv = can_inverse(a, z, x, y);
          const LinMap* m = std::get_if<LinMap>(&inv);
          o.require(m != nullptr, name + ": no inverse");
          if (m) {
            const LinMap can = build_can(a, z, x, y);
            o.require(*m * can == LinMap::identity(Q, can.cols()), name + ": inverse is wrong");
          }
          ++cans;
        }
    const fs::path stripped = fixture_dir / (name + "-stripped.hcat");
    const HopfCategory input = fs::exists(stripped) ? std::get<HopfCategory>(load_document(stripped)) : strip_antipode(a);
    const auto rec = recover_antipode(input);
    const HopfCategory* got = std::get_if<HopfCategory>(&rec);
    o.require(got != nullptr && *got == a, name + ": recovered antipode differs");
    for (std::size_t z = 0; z < n; ++z) {
      o.require(check_equivalence(a, mz_module(a, z)).passed(), name + ": M^z equivalence fails");
    }
    std::vector<std::size_t> ndims(n);
    for (std::size_t x = 0; x < n; ++x) ndims[x] = 1 + x % 2;
    o.require(check_equivalence(a, free_hopf_module(a, ndims)).passed(), name + ": F(N) equivalence fails");
  }
  if (o.ok) o.detail = std::to_string(cans) + " can maps inverted";
  return o;
}

// 4
Outcome fundamental_negative() {
  Outcome o;
  const HopfCategory a = load_hopf("idempotent");
  bool singular = false;
  for (const auto& c : can_ranks(a)) singular = singular || !c.invertible();
  o.require(singular, "every can map is invertible");
  const auto rec = recover_antipode(a);
  const auto* fail = std::get_if<RecoveryFailure>(&rec);
  o.require(fail != nullptr, "recovery succeeded");
  if (fail) o.require(fail->rank < fail->size, "failure witness has full rank");
  std::size_t rejected = 0, files = 0;
  for (const auto& entry : fs::directory_iterator(fixture_dir)) {
    const std::string f = entry.path().filename().string();
    if (f.rfind("idempotent-candidate-", 0) != 0) continue;
    ++files;
    if (quiet_cli({"verify", "--level", "hopf", entry.path().string()}) == cli::exit_axiom_failure) ++rejected;
  }
  o.require(files == fx::idempotent_candidates().size(), "candidate files missing");
  o.require(rejected == files, "a candidate antipode file verified");
  if (o.ok) {
    o.detail = "blocked at (" + a.objects().label(fail->z) + "," + a.objects().label(fail->x) + "," +
               a.objects().label(fail->y) + ") rank " + std::to_string(fail->rank) + " of " +
               std::to_string(fail->size) + "; " + std::to_string(rejected) + " candidates rejected";
  }
  return o;
}

// 5
Outcome duality(const fs::path& tmp) {
  Outcome o;
  for (const auto& [name, a] : fixtures()) {
    const fs::path src = tmp / (name + ".hcat"), d = tmp / (name + ".dual.hcat"), back = tmp / (name + ".back.hcat"),
                   again = tmp / (name + ".again.hcat");
    std::ofstream(src) << write_document(a);
    o.require(quiet_cli({"transform", "dualize", src.string(), "-o", d.string()}) == 0, name + ": dualize failed");
    o.require(quiet_cli({"transform", "undualize", d.string(), "-o", back.string()}) == 0, name + ": undualize failed");
    o.require(quiet_cli({"transform", "dualize", back.string(), "-o", again.string()}) == 0, name + ": redualize failed");
    o.require(slurp(src) == slurp(back), name + ": dualize/undualize is not byte-identical");
    o.require(slurp(d) == slurp(again), name + ": undualize/dualize is not byte-identical");
    const DualHopfCategory c = dualize(a);
    o.require(verify_dual(c).passed(), name + ": dual fails its axioms");
    o.require(verify_weak_hopf(pack_dual(c)).passed(), name + ": pack_dual is not weak Hopf");
  }
  if (o.ok) o.detail = "8 fixtures, both directions byte-identical";
  return o;
}

// 6
Outcome modules_comodules() {
  Outcome o;
  for (const auto& [name, a] : fixtures()) {
    const DualHopfCategory c = dualize(a);
    const ComoduleData co = regular_comodule(c);
    o.require(module_to_comodule(c, comodule_to_module(c, co)) == co, name + ": comodule round trip");
    const ModuleData mod = regular_module(undualize(c), Side::right);
    o.require(comodule_to_module(c, module_to_comodule(c, mod)) == mod, name + ": module round trip");
  }
  return o;
}

/// Functionals phi on F_5[Z/n] with (phi a*)(g) = phi(g) a*(g) = a*(e) phi(g)
/// for every basis functional a*, found by enumerating all 5^n candidates.
std::vector<std::vector<unsigned>> brute_force_integrals(std::size_t n) {
  std::vector<std::vector<unsigned>> sols;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 5;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<unsigned> phi(n);
    for (std::size_t i = 0, c = code; i < n; ++i, c /= 5) phi[i] = static_cast<unsigned>(c % 5);
    bool ok = true;
    for (std::size_t h = 0; h < n && ok; ++h)
      for (std::size_t g = 0; g < n && ok; ++g) ok = phi[g] * (g == h) % 5 == (h == 0) * phi[g] % 5;
    if (ok) sols.push_back(phi);
  }
  return sols;
}

// 7
Outcome integral_theory() {
  Outcome o;
  const Field f5 = Field::prime(5);
  for (std::size_t n : {2u, 3u}) {
    const HopfCategory a = load_hopf("z" + std::to_string(n));
    const IntegralSpace s = integrals(a, 0);
    o.require(s.basis.size() == 1, "dim integrals(Z/" + std::to_string(n) + ") != 1");
    const auto sols = brute_force_integrals(n);
    o.require(sols.size() == 5, "brute force did not find a line");
    const IntegralSpace s5 = integrals(fx::group_algebra(n, f5), 0);
    o.require(s5.basis.size() == 1, "dimension over F_5");
    for (const auto& v : sols) {
      for (std::size_t i = 0; i < n && !s5.basis.empty(); ++i) {
        o.require(Scalar::from_int(f5, v[i]) == Scalar::from_int(f5, v[0]) * s5.basis[0][i],
                  "brute-force solution outside the computed line");
      }
    }
  }
  std::size_t maps = 0;
  for (const auto& [name, a] : fixtures()) {
    const CoinvariantFamily co = coinvariants(a, dual_hopf_module(a));
    for (std::size_t x = 0; x < a.size(); ++x) {
      const IntegralSpace s = integrals(a, x);
      o.require(s.basis == co.bases[x], name + ": integrals differ from coinvariants");
      const auto bij = s.report.find("integral-map-bijective");
      o.require(bij.size() == a.size(), name + ": missing bijectivity checks");
      for (const auto* b : bij) o.require(b->status == Status::pass, name + ": integral map not bijective");
      maps += bij.size();
    }
  }
  if (o.ok) o.detail = std::to_string(maps) + " integral maps bijective";
  return o;
}

std::set<std::string> failed_axioms(const Report& r) {
  std::set<std::string> out;
  for (const auto& f : r.items())
    if (f.status == Status::fail) out.insert(f.axiom);
  return out;
}

// 8
Outcome bimonoid_correspondence() {
  Outcome o;
  const Scalar two = Scalar::from_int(Q, 2);
  const std::vector<std::function<void(HopfCategory&)>> mutations = {
      [&](HopfCategory& a) { a.mult(0, 0, 0).at(0, 0) += two; },
      [&](HopfCategory& a) { a.unit(0).at(0, 0) = two; },
      [&](HopfCategory& a) { a.comult(0, 0).at(0, 0) += two; },
      [&](HopfCategory& a) { a.counit(0, 0).at(0, 0) = Scalar::zero(Q); },
      [&](HopfCategory& a) { a.mult(0, 0, 0) = a.mult(0, 0, 0).scaled(two); },
  };
  auto all = fixtures();
  all.emplace_back("idempotent", load_hopf("idempotent"));
  std::size_t mutants = 0;
  for (const auto& [name, a] : all) {
    const HopfCategory base = strip_antipode(a);
    const BimonoidData b = bimonoid_from_category(a);
    o.require(category_from_bimonoid(b) == base, name + ": category round trip");
    o.require(bimonoid_from_category(category_from_bimonoid(b)) == b, name + ": bimonoid round trip");
    o.require(verify_structure(base, Level::semihopf).passed() && verify_bimonoid(b).passed(),
              name + ": passing fixture rejected");
    for (std::size_t i = 0; i < mutations.size(); ++i) {
      HopfCategory m = base;
      mutations[i](m);
      const Report cat = verify_structure(m, Level::semihopf);
      const Report bim = verify_bimonoid(bimonoid_from_category(m));
      o.require(!cat.passed() && !bim.passed(), name + ": mutant " + std::to_string(i) + " passes");
      std::set<std::string> mapped;
      for (const auto& ax : failed_axioms(cat)) mapped.insert(bimonoid_axiom_map().at(ax));
      o.require(mapped == failed_axioms(bim), name + ": mutant " + std::to_string(i) + " axioms differ");
      ++mutants;
    }
  }
  if (o.ok) o.detail = std::to_string(mutants) + " mutants, failed axioms match";
  return o;
}

// 9
Outcome strictness_criterion() {
  Outcome o;
  for (const char* n : {"pair2-groupoid", "pair3-groupoid"}) {
    const auto gf = std::get<GroupoidFile>(load_document(fixture_dir / (std::string(n) + ".hcat")));
    o.require(is_strict(linearize_groupoid(gf.groupoid, gf.field)), std::string(n) + " is not strict");
  }
  const auto strong = std::get<GradedHopf>(load_document(fixture_dir / "z2-strong-graded.hcat"));
  const auto zero = std::get<GradedHopf>(load_document(fixture_dir / "z2-zero-graded.hcat"));
  o.require(is_strict(from_graded(strong)), "strongly graded fixture is not strict");
  o.require(!is_strict(from_graded(zero)), "zero-component fixture is strict");
  auto all = fixtures();
  all.emplace_back("idempotent", load_hopf("idempotent"));
  for (const auto& [name, a] : all) {
    const Strictness s = strictness(a);
    o.require(s.all_surjective == s.loops_surjective, name + ": strictness conditions disagree");
  }
  return o;
}

// 10
Outcome antipode_bijective() {
  Outcome o;
  for (const auto& [name, a] : fixtures()) {
    o.require(check_antipode_bijective(a).passed(), name + ": antipode not bijective");
  }
  const HopfCategory sw = load_hopf("sweedler");
  const LinMap& s = sw.antipode(0, 0);
  o.require(rank(s) == 4, "Sweedler antipode is singular");
  o.require(!(s * s == LinMap::identity(Q, 4)), "Sweedler S^2 = id");
  return o;
}

}  // namespace

int main() {
  const fs::path tmp = fs::temp_directory_path() / ("hopfcat_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"groupoid pipeline", groupoid_pipeline},
      {"singleton reduction", singleton_reduction},
      {"fundamental theorem, positive", fundamental_positive},
      {"fundamental theorem, negative", fundamental_negative},
      {"duality round trips", [&] { return duality(tmp); }},
      {"module/comodule correspondence", modules_comodules},
      {"integrals", integral_theory},
      {"bimonoid correspondence", bimonoid_correspondence},
      {"strictness", strictness_criterion},
      {"antipode bijective", antipode_bijective},
  };
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " (" << std::fixed
              << std::setprecision(1) << ms << " ms)" << (o.detail.empty() ? "" : ": " + o.detail) << "\n";
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool fast = total < 60.0;
  all = all && fast;
  std::cout << (fast ? "PASS" : "FAIL") << " [11] whole-suite runtime (" << std::setprecision(2) << total
            << " s, limit 60 s)\n";
  fs::remove_all(tmp);
  return all ? 0 : 1;
}
