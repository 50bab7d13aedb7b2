// Prints one PASS/FAIL line per acceptance criterion; exit code 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>

#include "catalog.hpp"
#include "cli/commands.hpp"
#include "gen.hpp"
#include "oracles.hpp"
#include "parsmash/errors.hpp"
#include "parsmash/fixtures.hpp"
#include "parsmash/spectral.hpp"

using namespace parsmash;

namespace {

// Collects the first few failures of a criterion.
class Log {
 public:
  void require(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  void checks(const std::vector<Check>& cs, const std::string& where) {
    for (const auto& c : cs) require(c.ok(), where + ": " + c.name + " [" + c.witness + "]");
  }
  bool ok() const { return failed_ == 0; }
  std::size_t count() const { return count_; }
  std::string summary() const {
    std::string s = std::to_string(failed_) + " of " + std::to_string(count_) + " failed";
    for (const auto& f : failures_) s += "\n    " + f;
    return s;
  }

 private:
  std::size_t count_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

std::string tag(const std::string& group, const Field& f) { return group + "/" + f.name(); }

std::vector<std::pair<std::string, PartialAction>> smash_fixtures(const Field& f) {
  return {
      {"kk_partial", kk_partial_z2(f)},
      {"kk_swap", global_partial_action(kk_swap_z2(f))},
      {"kk_trivial", kk_trivial_group(f)},
      {"k3_restricted", k3_restricted_z3(f).action},
      {"dual_numbers", global_partial_action(dual_numbers_z2(f))},
  };
}

// Restriction of G acting on K^G by translation to the indicator of {e, s}.
PartialAction translation_fixture(const Field& f, const FiniteGroup& g) {
  GlobalAction ga = gen::translation_action(f, g);
  Vector idem(g.order());
  idem[0] = f.one();
  if (g.order() > 1) idem[1] = f.one();
  return restrict_global_action(ga, idem).action;
}

Bimodule zero_bimodule(const AlgebraPtr& a) {
  return Bimodule(a, a, 0, std::vector<SparseMatrix>(a->dim(), SparseMatrix(0, 0)),
                  std::vector<SparseMatrix>(a->dim(), SparseMatrix(0, 0)));
}

// ------------------------------------------------------------------ criteria

void axiom_suites(Log& log) {
  for (const Field& f : catalog::fields()) {
    for (const auto& [name, g] : catalog::groups()) {
      const std::string t = tag(name, f);
      FiniteGroup again = make_group(g.table(), g.labels());
      log.require(again.table() == g.table(), t + ": group table round trip");
      Kpar k = build_kpar(f, g);
      log.checks(kpar_checks(k), t + " kpar");
      log.checks(partial_action_checks(k.beta), t + " beta");
      log.checks(smash_checks(k.smash), t + " K_par G as smash");
      log.require(associativity_check(*k.b).ok(), t + ": B associative");
      log.checks(module_checks(b_module(k)), t + " B-module");
      PartialAction tr = translation_fixture(f, g);
      log.checks(partial_action_checks(tr), t + " translation restricted");
      log.checks(smash_checks(smash_product(tr)), t + " translation smash");
    }
    for (const auto& [name, pa] : smash_fixtures(f)) {
      log.checks(partial_action_checks(pa), tag(name, f));
      log.checks(smash_checks(smash_product(pa)), tag(name, f) + " smash");
    }
    NonAssociativeExample ex = non_associative_example(f);
    bool rejected = false;
    try {
      partial_action_from_domains(ex.action.group, ex.action.algebra, ex.action.domains, ex.action.alpha);
    } catch (const ValidationError&) {
      rejected = true;
    }
    log.require(rejected, f.name() + ": non-associative example rejected by validation");
    RawWitness w = raw_smash_witness(ex.action, ex.probe);
    log.require(!w.associative && w.witness == "(uu)u = 0, u(uu) = xyδ_g",
                f.name() + ": witness reproduced, got \"" + w.witness + "\"");
  }
}

void kpar_dimensions(Log& log) {
  const std::vector<std::pair<FiniteGroup, std::size_t>> cases = {
      {standard_group(GroupFamily::cyclic, 2), 3},
      {standard_group(GroupFamily::cyclic, 3), 8},
      {standard_group(GroupFamily::cyclic, 4), 20},
      {standard_group(GroupFamily::symmetric, 3), 112},
  };
  for (const auto& [g, expect] : cases) {
    Kpar k = build_kpar(Field::rationals(), g);
    const std::size_t n = g.order();
    std::set<std::pair<std::size_t, uint64_t>> enumerated;
    for (uint64_t t = 0; t < (uint64_t{1} << n); ++t) {
      if (!(t & 1)) continue;
      for (std::size_t x = 0; x < n; ++x)
        if (t >> x & 1) enumerated.insert({x, t >> 1});
    }
    std::set<std::pair<std::size_t, uint64_t>> built(k.pairs.begin(), k.pairs.end());
    const std::string t = "|G| = " + std::to_string(n);
    log.require(k.dim() == expect, t + ": dim " + std::to_string(k.dim()));
    log.require(oracle::kpar_dim_by_enumeration(n) == expect, t + ": enumeration");
    log.require(kpar_dimension_formula(n) == expect, t + ": formula");
    log.require(built == enumerated, t + ": basis pairs differ from the enumeration");
  }
}

Vector product(const Kpar& k, std::initializer_list<std::size_t> brackets) {
  Vector acc = k.algebra()->unit();
  for (auto g : brackets) acc = k.algebra()->multiply(acc, k.bracket[g]);
  return acc;
}

void bracket_relations(Log& log) {
  for (const Field& f : catalog::fields())
    for (const auto& [name, g] : catalog::groups()) {
      const std::string t = tag(name, f);
      Kpar k = build_kpar(f, g);
      log.require(k.bracket[0] == k.algebra()->unit(), t + ": [e] = 1");
      for (std::size_t s = 0; s < g.order(); ++s)
        for (std::size_t u = 0; u < g.order(); ++u) {
          std::size_t si = g.inv(s), ui = g.inv(u), su = g.mul(s, u);
          log.require(product(k, {si, s, u}) == product(k, {si, su}), t + ": [s^-1][s][t] relation");
          log.require(product(k, {s, u, ui}) == product(k, {su, ui}), t + ": [s][t][t^-1] relation");
        }
      gen::Rng r(1000 + g.order());
      for (int i = 0; i < 500; ++i) {
        auto w = gen::word(r, g.order(), 10);
        Vector acc = k.algebra()->unit();
        for (auto x : w) acc = k.algebra()->multiply(acc, k.bracket[x]);
        log.require(acc == word_to_element(k, w), t + ": word " + gen::show(w));
      }
    }
}

void epsilon_identities(Log& log) {
  for (const Field& f : catalog::fields())
    for (const auto& [name, g] : catalog::groups()) {
      const std::string t = tag(name, f);
      Kpar k = build_kpar(f, g);
      const Algebra& L = *k.algebra();
      gen::Rng r(2000 + g.order());
      for (int i = 0; i < 1000; ++i) {
        // x ranges over bracket words: the first two identities are quadratic in x
        auto w = gen::word(r, g.order(), 8);
        Vector x = word_to_element(k, w), y = gen::vector(r, f, k.dim(), 0.7);
        Vector exy = embed_b(k, epsilon(k, L.multiply(x, y)));
        log.require(L.multiply(exy, x) == L.multiply(x, embed_b(k, epsilon(k, y))),
                    t + ": eps(xy)x = x eps(y) at x = " + gen::show(w));
        log.require(exy == L.multiply(exy, embed_b(k, epsilon(k, x))), t + ": eps(xy) = eps(xy)eps(x)");
        Vector z = gen::vector(r, f, k.dim(), 0.7);
        log.require(epsilon(k, L.multiply(z, embed_b(k, epsilon(k, y)))) == epsilon(k, L.multiply(z, y)),
                    t + ": eps(z eps(y)) = eps(zy) at z = " + gen::show(z));
      }
    }
}

// dim coker(M -> Hom(IG, M)), v -> (x -> x v)
std::size_t cokernel_dim(const Kpar& k, const AlgModule& m) {
  const Field& f = k.field();
  Subspace ig = ig_subspace(k);
  std::size_t hom = hom_dimension(ig_module(k), m);
  std::vector<Vector> images;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Vector v = unit_vector(f, m.dim(), j), flat;
    for (const auto& x : ig.basis()) {
      Vector xv = m.act(x, v);
      flat.insert(flat.end(), xv.begin(), xv.end());
    }
    images.push_back(std::move(flat));
  }
  return hom - (images.empty() ? 0 : Subspace::span(f, images[0].size(), images).dim());
}

void triple_agreement(Log& log) {
  for (const Field& f : catalog::fields())
    for (const auto& [name, g] : catalog::groups()) {
      Kpar k = build_kpar(f, g);
      HparOptions opts;
      opts.max_degree = 3;
      PartialCohomology pc(k, opts);
      Resolution ig_res = resolve_module(ig_module(k), 3);
      std::vector<std::pair<std::string, AlgModule>> mods = {
          {"B", b_module(k)}, {"Lambda", regular_module(k.algebra())}, {"Dg", dg_module(k)},
          {"quotient", random_quotient_module(k, 17)}};
      for (const auto& [mname, m] : mods) {
        const std::string t = tag(name, f) + " M = " + mname;
        CohomologyReport rep = pc.compute(m);
        log.checks(rep.checks, t);
        std::size_t h0 = rep.degrees[0].dim, h1 = rep.degrees[1].dim;
        log.require(h0 == partial_invariants(k, m).dim(), t + ": H0 vs invariants");
        log.require(h0 == hom_dimension(b_module(k), m), t + ": H0 vs Hom(B, M)");
        DerivationSpace d = partial_derivations(k, m);
        log.require(h1 == d.outer_dim(), t + ": H1 vs Der/Int");
        log.require(h1 == cokernel_dim(k, m), t + ": H1 vs coker");
        ExtResult ig_ext = ext_from_resolution(ig_res, m, 2);
        for (std::size_t n = 2; n <= 3; ++n)
          log.require(rep.degrees[n].dim == ig_ext.dims[n - 1],
                      t + ": H" + std::to_string(n) + " vs Ext(IG, M), " + std::to_string(rep.degrees[n].dim) +
                          " vs " + std::to_string(ig_ext.dims[n - 1]));
      }
    }
}

void semilattice_lemma(Log& log) {
  for (const Field& f : catalog::fields()) {
    for (std::size_t n = 0; n <= 5; ++n) {
      Semilattice s = boolean_semilattice(n);
      AlgebraPtr a = semilattice_algebra(f, s);
      auto w = orthogonal_idempotent_basis(f, s);
      const std::string t = f.name() + " ground " + std::to_string(n);
      Vector total = zero_vector(s.size());
      bool orth = true;
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j)
          orth = orth && a->multiply(w[i], w[j]) == (i == j ? w[i] : zero_vector(s.size()));
        total = add(f, total, w[i]);
      }
      log.require(orth, t + ": orthogonality");
      log.require(oracle::rank(f, w) == s.size(), t + ": spanning");
      log.require(total == a->unit(), t + ": sum is the unit");
    }
    gen::Rng r(3000);
    for (int i = 0; i < 200; ++i) {
      std::size_t ground = 1 + r.below(4);
      // random family closed under union: close a few random masks
      std::set<uint64_t> masks;
      for (std::size_t j = 0; j < 1 + r.below(4); ++j) masks.insert(r.below(std::size_t{1} << ground));
      for (bool grew = true; grew;) {
        grew = false;
        for (auto x : std::vector<uint64_t>(masks.begin(), masks.end()))
          for (auto y : std::vector<uint64_t>(masks.begin(), masks.end()))
            grew = masks.insert(x | y).second || grew;
      }
      Semilattice s = make_semilattice(ground, {masks.begin(), masks.end()});
      AlgebraPtr a = semilattice_algebra(f, s);
      std::vector<Vector> gens;
      for (std::size_t j = 0; j < 1 + r.below(3); ++j) gens.push_back(gen::vector(r, f, s.size(), 0.5));
      Vector u = principal_generator(f, s, gens);
      Subspace ideal = ideal_closure(*a, gens);
      log.require(a->multiply(u, u) == u, f.name() + ": u^2 = u on random ideal " + std::to_string(i));
      for (const auto& g : gens) log.require(a->multiply(u, g) == g, f.name() + ": u r_i = r_i");
      log.require(ideal.contains(u), f.name() + ": u lies in the ideal");
    }
  }
}

void isomorphisms(Log& log) {
  for (const Field& f : catalog::fields()) {
    std::vector<std::pair<std::string, PartialAction>> fx = {{"kk_partial", kk_partial_z2(f)},
                                                             {"kk_swap", global_partial_action(kk_swap_z2(f))}};
    for (const auto& [name, pa] : fx) {
      SmashContext c = make_smash_context(pa);
      Bimodule m = regular_bimodule(c.s());
      const std::string t = tag(name, f);
      std::vector<std::pair<std::string, AlgModule>> xs = {
          {"B", b_module(c.kpar)}, {"Lambda", regular_module(c.kpar.algebra())}, {"Dg", dg_module(c.kpar)}};
      for (const auto& [xname, x] : xs) {
        GammaLambdaReport r = gamma_lambda_check(c, x, m);
        log.checks(r.checks, t + " X = " + xname);
        log.require(r.hom_f1_dim == r.hom_tensor_dim, t + " X = " + xname + ": Hom dims");
      }
      FactorizationReport fr = factorization_check(c, m);
      log.checks(fr.checks, t + " factorization");
      log.require(fr.f_dim == fr.f2f1_dim, t + ": dim F(M) = dim F2(F1(M))");
      log.require(fr.f_dim == oracle::center_dim(m), t + ": dim F(M) vs centralizer oracle");
    }
  }
}

void flatness(Log& log) {
  for (const Field& f : catalog::fields())
    for (const auto& [name, g] : catalog::groups()) {
      Kpar k = build_kpar(f, g);
      AlgModule breg = regular_module(k.b);
      gen::Rng r(4000 + g.order());
      // small B-modules: ideals e_T B, quotients by them, and for small groups K_par G-modules
      std::vector<AlgModule> mods = {breg, gen::as_b_module(k, dg_module(k))};
      for (std::size_t i = 0; i < 4; ++i) {
        Subspace s = gen::submodule_subspace(r, breg);
        mods.push_back(submodule(breg, s));
        mods.push_back(quotient_module(breg, s));
      }
      if (g.order() <= 3) {
        mods.push_back(gen::as_b_module(k, regular_module(k.algebra())));
        mods.push_back(gen::as_b_module(k, random_quotient_module(k, 3)));
      }
      std::vector<const AlgModule*> small;
      for (const auto& m : mods)
        if (m.dim() <= 16) small.push_back(&m);
      const std::string t = tag(name, f);
      int done = 0;
      for (int i = 0; done < 100 && i < 1000; ++i) {
        const AlgModule& x = *small[r.below(small.size())];
        const AlgModule& y2 = *small[r.below(small.size())];
        if (y2.dim() == 0) continue;
        Subspace s = gen::submodule_subspace(r, y2, 1 + r.below(2));
        FlatnessReport fr = flatness_check(x, submodule(y2, s), y2, gen::inclusion(s));
        log.checks(fr.checks, t + " injection " + std::to_string(done));
        ++done;
      }
      log.require(done == 100, t + ": only " + std::to_string(done) + " injections generated");
    }
  for (const Field& f : catalog::fields())
    for (const auto& [name, pa] : smash_fixtures(f)) {
      SmashContext c = make_smash_context(pa);
      gen::Rng r(5000);
      std::vector<AlgModule> mods = {b_module(c.kpar), regular_module(c.kpar.algebra()), dg_module(c.kpar),
                                     random_quotient_module(c.kpar, 2)};
      for (int i = 0; i < 20; ++i) {
        const AlgModule& y2 = mods[r.below(mods.size())];
        if (y2.dim() == 0) continue;
        Subspace s = gen::submodule_subspace(r, y2);
        log.checks(exactness_check(c, submodule(y2, s), y2, gen::inclusion(s)).checks, tag(name, f) + " exactness");
      }
    }
}

void collapse(Log& log) {
  for (const Field& f : catalog::fields()) {
    SmashContext c = make_smash_context(kk_partial_z2(f));
    SpectralReport r = spectral_low_degree(c, regular_bimodule(c.s()));
    const std::string t = f.name();
    log.checks(r.checks, t);
    for (std::size_t p = 1; p < r.a_side.size(); ++p) log.require(r.a_side[p] == 0, t + ": A separable");
    for (std::size_t n = 0; n <= 2; ++n) {
      bool have = n < r.total.size() && r.e2[0][n].has_value();
      log.require(have && r.total[n] == *r.e2[0][n],
                  t + ": H" + std::to_string(n) + "(S, M) vs H" + std::to_string(n) + "_par(G, F1(M))");
    }
    // the right-hand side recomputed from scratch through F1 and partial cohomology
    F1Module f1m = f1(c, regular_bimodule(c.s()));
    HparOptions opts;
    opts.max_degree = 2;
    CohomologyReport hp = hpar(c.kpar, f1m.module, opts);
    HochschildComplex hs = hochschild(regular_bimodule(c.s()));
    for (std::size_t n = 0; n <= 2; ++n)
      log.require(hs.dims[n] == hp.degrees[n].dim, t + ": independent pipelines differ at n = " + std::to_string(n));
  }
}

void spectral_identities(Log& log) {
  for (const Field& f : catalog::fields()) {
    auto fx = smash_fixtures(f);
    for (const auto& [name, g] : catalog::groups())
      if (g.order() >= 3) fx.push_back({"translation " + name, translation_fixture(f, g)});
    for (const auto& [name, pa] : fx) {
      SmashContext c = make_smash_context(pa);
      Bimodule reg = regular_bimodule(c.s());
      std::vector<std::pair<std::string, Bimodule>> coeffs = {
          {"regular", reg}, {"dual", dual_bimodule(reg)}, {"zero", zero_bimodule(c.s())}};
      for (const auto& [mname, m] : coeffs) {
        const std::string t = tag(name, f) + " M = " + mname;
        SpectralBounds b;
        b.total_degree = c.s()->dim() > 8 ? 1 : 2;
        SpectralReport r = spectral_low_degree(c, m, b);
        log.checks(r.checks, t);
        bool have = r.e2.size() > 0 && r.e2[0].size() > 1 && r.e2[0][0] && r.e2[0][1];
        log.require(have, t + ": E2 row 0 missing");
        if (!have) continue;
        log.require(r.f_dim == *r.e2[0][0], t + ": dim F(M) = dim H0_par(G, F1(M))");
        log.require(*r.e2[0][1] <= r.total[1], t + ": dim H1_par(G, H0(A, M)) <= dim H1(S, M)");
      }
    }
  }
}

void determinism(Log& log) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(PARSMASH_EXAMPLES_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  log.require(!files.empty(), "no example inputs found");
  auto suite = [&] {
    std::string all;
    for (const auto& p : files) {
      cli::Outcome o = cli::execute("run", p.string(), {}, cli::Format::json);
      all += p.filename().string() + "\n" + std::to_string(o.code) + "\n" + o.output;
    }
    return all;
  };
  std::string first = suite(), second = suite();
  log.require(first == second, "two runs of the example suite differ");
  log.require(first.find("\"timings\"") == std::string::npos, "timings leaked into a default report");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria = {
      {"C1 axiom suites and the non-associative witness", axiom_suites},
      {"C2 K_par G dimensions against basis enumeration", kpar_dimensions},
      {"C3 bracket relations and random words", bracket_relations},
      {"C4 epsilon identities on random word/element pairs", epsilon_identities},
      {"C5 low-degree triple agreement", triple_agreement},
      {"C6 orthogonal idempotents and principal generators", semilattice_lemma},
      {"C7 Gamma/Lambda and factorization", isomorphisms},
      {"C8 flatness and exactness on random injections", flatness},
      {"C9 collapse for separable A", collapse},
      {"C10 degree-0 identity and five-term inequality", spectral_identities},
      {"C11 byte-identical reports", determinism},
  };
  bool all = true;
  for (const auto& [title, run] : criteria) {
    Log log;
    auto start = std::chrono::steady_clock::now();
    try {
      run(log);
    } catch (const std::exception& e) {
      log.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%zu checks, %.1fs)\n", log.ok() ? "PASS" : "FAIL", title.c_str(), log.count(), secs);
    if (!log.ok()) std::printf("    %s\n", log.summary().c_str());
    std::fflush(stdout);
    all = all && log.ok();
  }
  return all ? 0 : 1;
}
