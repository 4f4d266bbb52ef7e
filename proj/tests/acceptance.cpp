// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact (cyclotomic or integer equality); the only tolerance is the runtime
// bound of criterion 1.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mtc/cli.hpp"
#include "mtc/dataio.hpp"
#include "mtc/dft.hpp"
#include "mtc/spectra.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mtc;
using mtc::testing::bundle;

namespace {

constexpr double kTableSeconds = 60.0;  // criterion 1 runtime bound
constexpr std::int64_t kMaxN = 4;       // criteria 4, 5, 9: n ≤ 4

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

/// ±e^{pπi/q}
RootOfUnity pm_exp(int sign, std::int64_t p, std::int64_t q) { return RootOfUnity(2 * q, sign > 0 ? p : p + q); }

Outcome haagerup_table() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const char* argv[] = {"mtc", "report", "catalog:haagerup-center", "--braid-sigma", "--object", "x6",
                        "--format", "structured"};
  std::ostringstream out, err;
  const int code = cli::run(8, argv, out, err);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (code != 0) {
    o.fail("report exited with " + std::to_string(code) + ": " + err.str());
    return o;
  }
  const auto rep = spectrum_from_string(out.str());
  struct Row {
    RootOfUnity e1, e2;
    std::int64_t m1, m2;
  };
  const RootOfUnity w3m = pm_exp(-1, 2, 3), w3 = pm_exp(1, 2, 3);
  const std::vector<Row> expect = {
      {w3m, w3, 0, 1},
      {w3m, w3, 1, 1},
      {w3m, w3, 0, 1},
      {w3m, w3, 0, 1},
      {RootOfUnity(1, 0), RootOfUnity(2, 1), 1, 0},
      {pm_exp(-1, 1, 3), pm_exp(1, 1, 3), 2, 0},
      {pm_exp(1, 5, 39), pm_exp(-1, 5, 39), 1, 0},
      {pm_exp(-1, 20, 39), pm_exp(1, 20, 39), 1, 0},
      {pm_exp(-1, 32, 39), pm_exp(1, 32, 39), 1, 0},
      {pm_exp(1, 2, 39), pm_exp(-1, 2, 39), 0, 1},
      {pm_exp(-1, 8, 39), pm_exp(1, 8, 39), 1, 0},
      {pm_exp(-1, 11, 39), pm_exp(1, 11, 39), 0, 1},
  };
  if (rep.rows.size() != expect.size()) o.fail("expected 12 rows, got " + std::to_string(rep.rows.size()));
  for (std::size_t i = 0; i < rep.rows.size() && i < expect.size(); ++i) {
    const auto& r = rep.rows[i];
    const auto& e = expect[i];
    if (r.entries.size() != 2 || !(r.entries[0].eigenvalue == e.e1) || !(r.entries[1].eigenvalue == e.e2) ||
        r.entries[0].multiplicity != e.m1 || r.entries[1].multiplicity != e.m2)
      o.fail("row " + std::to_string(i + 1) + " differs");
  }
  if (secs >= kTableSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "12 rows exact, %.3f s (bound %.0f s)", secs, kTableSeconds);
    o.detail = buf;
  }
  return o;
}

Outcome haagerup_fusion() {
  Outcome o;
  const auto& md = catalog("haagerup-center");
  const FusionRing fr = verlinde(md);  // throws IntegralityError on any non-integral entry
  const std::vector<std::int64_t> want = {1, 2, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1};
  if (fr.fuse(5, 5).multiplicities() != want) o.fail("x6 ⊗ x6 = " + to_string(fr.fuse(5, 5), md.labels()));
  std::size_t count = 0;
  for (std::size_t a = 0; a < 12; ++a)
    for (std::size_t b = 0; b < 12; ++b)
      for (std::size_t c = 0; c < 12; ++c, ++count)
        if (fr.N(c, a, b) < 0) o.fail("negative coefficient");
  if (o.pass) o.detail = "x6 ⊗ x6 exact, " + std::to_string(count) + " coefficients in Z>=0";
  return o;
}

Outcome haagerup_relations() {
  Outcome o;
  const auto& md = catalog("haagerup-center");
  const auto rep = validate(md);
  for (const char* name : {"S^2 = C", "C^2 = I", "(ST)^3 = xi S^2", "S unitary", "S symmetric"}) {
    const auto* c = rep.find(name);
    if (!c || !c->passed) o.fail(std::string(name) + " fails");
  }
  const auto inv = derive_invariants(md);
  if (inv.conductor != 39) o.fail("conductor " + std::to_string(inv.conductor));
  if (!inv.central_charge.is_one()) o.fail("xi = " + to_string(inv.central_charge));
  if (o.pass) o.detail = "all relations exact, M = 39, xi = 1";
  return o;
}

Outcome sum_rules() {
  Outcome o;
  std::size_t k_checks = 0, rot_checks = 0;
  for (const auto& name : catalog_names()) {
    const auto& b = bundle(name);
    IndicatorEngine engine(b.cd);
    const std::size_t r = b.md.rank();
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t a = 0; a < r; ++a) {
          const std::size_t z = b.cd.index(c, x);
          const ObjectMultiset zb(b.cd.rank(), z), ao(r, a);
          std::int64_t sum = 0;
          for (const auto& w : b.cd.md.theta(z).inverse().nth_roots(2)) sum += semisimple_K(engine, zb, ao, 2, w);
          ++k_checks;
          if (sum != triple_multiplicity(b.fr, x, b.md.dual(c), a))
            o.fail(name + ": K sum at (" + std::to_string(c) + "," + std::to_string(x) + "," + std::to_string(a) + ")");
        }
    for (std::int64_t n = 1; n <= kMaxN; ++n)
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t z = 0; z < b.cd.rank(); ++z) {
          const ObjectMultiset ao(r, a);
          const auto row = rotation_spectrum(engine, z, ao, n);
          ++rot_checks;
          if (row.total() != engine.hom(z, ao, n) || row.hom_dim != row.total())
            o.fail(name + ": rotation sum for " + row.label);
        }
  }
  if (o.pass) o.detail = std::to_string(k_checks) + " K sums, " + std::to_string(rot_checks) + " rotation sums";
  return o;
}

Outcome cross_route() {
  Outcome o;
  std::size_t direct = 0, galois = 0;
  for (const auto& name : catalog_names()) {
    const auto& b = bundle(name);
    const auto t = gfs_matrix(b.cd, 2, 1);
    const std::size_t r = b.md.rank();
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t a = 0; a < r; ++a, ++direct)
          if (!(t.values(b.cd.index(c, x), a) == nu2_direct(b.md, b.fr, c, x, a))) o.fail(name + ": V_{2,1} entry");
  }
  for (const auto& name : mtc::testing::small_fixtures()) {
    const auto& cd = bundle(name).cd;
    for (std::int64_t n = 1; n <= kMaxN; ++n)
      for (std::int64_t k = 0; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        const auto t = gfs_matrix(cd, n, k);
        for (std::size_t z = 0; z < cd.rank(); ++z)
          for (std::size_t a = 0; a < cd.base_rank(); ++a, ++galois)
            if (!(nu_general(cd, z, n, k, ObjectMultiset(cd.base_rank(), a)) == t.values(z, a)))
              o.fail(name + ": nu_general at n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
  }
  if (o.pass) o.detail = std::to_string(direct) + " closed-formula entries, " + std::to_string(galois) + " Galois-route entries";
  return o;
}

Outcome indicator_properties() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& name : catalog_names()) {
    const auto& b = bundle(name);
    const auto& cd = b.cd;
    for (std::int64_t m = 1; m <= kMaxN; ++m)
      for (std::int64_t l = 0; l < m; ++l) {
        if (std::gcd(m, l) != 1) continue;
        const auto base = gfs_matrix(cd, m, l);
        for (std::int64_t k : {-1, 1, 2}) {
          const auto shifted = gfs_matrix(cd, m, l + k * m);
          for (std::size_t z = 0; z < cd.rank(); ++z) {
            const Cyclotomic f = cd.md.theta(z).pow(-k).value();
            for (std::size_t a = 0; a < cd.base_rank(); ++a, ++checks)
              if (!(shifted.values(z, a) == f * base.values(z, a))) o.fail(name + ": periodicity");
          }
        }
      }
    IndicatorEngine engine(cd);
    const auto v21 = gfs_matrix(cd, 2, 1);
    for (std::size_t a = 0; a < b.md.rank(); ++a) {
      const auto a2 = power_decompose(b.fr, a, 2);
      for (std::size_t z = 0; z < cd.rank(); ++z, ++checks) {
        Cyclotomic rhs;
        for (const auto& [c, k] : a2.terms()) rhs += Cyclotomic(k) * v21.values(z, c);
        if (!(engine.nu(z, 4, 2, ObjectMultiset(b.md.rank(), a)) == rhs)) o.fail(name + ": gcd reduction");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " identities";
  return o;
}

Outcome foundations() {
  Outcome o;
  mtc::testing::Gen gen(20240517);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = gen.integer(1, 24);
    std::vector<Cyclotomic> x;
    for (std::int64_t i = 0; i < n; ++i) x.emplace_back(gen.rational());
    if (inverse_dft(dft(x)) != x) o.fail("DFT roundtrip, length " + std::to_string(n));
  }
  Cyclotomic g;
  for (int k = 1; k < 13; ++k) {
    bool square = false;
    for (int j = 1; j < 13; ++j) square = square || (j * j) % 13 == k;
    g += Cyclotomic(square ? 1 : -1) * Cyclotomic::root_of_unity(13, k);
  }
  if (!(g * g == Cyclotomic(13))) o.fail("Gauss sum squared is " + to_string(g * g));
  const std::uint32_t orders[] = {5, 7, 8, 12, 13, 20, 24, 39, 78};
  std::size_t galois = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = orders[gen.integer(0, 8)];
    const auto x = gen.cyclotomic(n, 5);
    std::int64_t j, k;
    do j = gen.integer(1, n); while (std::gcd<std::int64_t>(j, n) != 1);
    do k = gen.integer(1, n); while (std::gcd<std::int64_t>(k, n) != 1);
    ++galois;
    if (!(galois_apply(galois_apply(x, k, n), j, n) == galois_apply(x, (j * k) % n, n))) o.fail("Galois composition");
  }
  if (o.pass) o.detail = "100 DFT roundtrips, Gauss sum, " + std::to_string(galois) + " compositions";
  return o;
}

Outcome pointed_oracle() {
  Outcome o;
  std::size_t checks = 0;
  const std::pair<std::string, mtc::testing::PointedModel> cases[] = {{"toric-code", mtc::testing::toric_model()},
                                                                      {"semion", mtc::testing::semion_model()}};
  for (const auto& [name, model] : cases) {
    const auto& b = bundle(name);
    for (std::size_t a = 0; a < b.md.rank(); ++a) {
      const auto s1 = sigma_spectrum_n2(b.md, b.fr, a, SigmaVariant::sigma);
      const auto s3 = sigma_spectrum_n2(b.md, b.fr, a, SigmaVariant::sigma3);
      for (std::size_t x = 0; x < b.md.rank(); ++x) {
        checks += 2;
        if (mtc::testing::nonzero(s1.rows[x]) != model.braid(x, a, 2, 1)) o.fail(name + ": sigma on " + b.md.label(a));
        if (mtc::testing::nonzero(s3.rows[x]) != model.braid(x, a, 3, 3)) o.fail(name + ": sigma3 on " + b.md.label(a));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " spectra match the quadratic-form oracle";
  return o;
}

Outcome root_choice() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& name : catalog_names()) {
    const auto& b = bundle(name);
    IndicatorEngine e0(b.cd), e1(b.cd, 1);
    for (std::int64_t n = 1; n <= kMaxN; ++n)
      for (std::size_t a = 0; a < b.md.rank(); ++a)
        for (std::size_t z = 0; z < b.cd.rank(); ++z, ++checks) {
          const ObjectMultiset ao(b.md.rank(), a);
          if (!(rotation_spectrum(e0, z, ao, n) == rotation_spectrum(e1, z, ao, n)))
            o.fail(name + ": " + b.cd.md.label(z) + " n=" + std::to_string(n));
        }
  }
  if (o.pass) o.detail = std::to_string(checks) + " rotation spectra identical";
  return o;
}

Outcome integrality() {
  // Every multiplicity passes through a checked conversion that throws
  // IntegralityError; this sweep drives all producers and re-checks signs.
  Outcome o;
  std::size_t count = 0;
  auto scan = [&](const SpectrumRow& row) {
    for (const auto& e : row.entries) {
      ++count;
      if (e.multiplicity < 0) o.fail("negative multiplicity in " + row.label);
    }
  };
  for (const auto& name : catalog_names()) {
    const auto& b = bundle(name);
    verlinde(b.md);
    IndicatorEngine engine(b.cd);
    for (std::int64_t n = 1; n <= kMaxN; ++n)
      for (std::size_t a = 0; a < b.md.rank(); ++a)
        for (std::size_t z = 0; z < b.cd.rank(); ++z) scan(rotation_spectrum(engine, z, ObjectMultiset(b.md.rank(), a), n));
    for (std::size_t a = 0; a < b.md.rank(); ++a)
      for (auto v : {SigmaVariant::sigma, SigmaVariant::sigma3})
        for (const auto& row : sigma_spectrum_n2(b.md, b.fr, a, v).rows) scan(row);
    const std::int64_t max_n = b.cd.rank() > 16 ? 3 : kMaxN;
    for (std::int64_t n = 2; n <= max_n; ++n)
      for (std::int64_t l = 0; l < n; ++l)
        for (std::int64_t m = 0; l + m < n; ++m)
          for (std::size_t a = 0; a < b.md.rank(); ++a) {
            for (const auto& row : braid_jm_spectrum(engine, a, n, l, m).rows) scan(row);
            if (b.cd.rank() <= 16)
              for (const auto& row : braid_jm_spectrum(b.md, a, n, l, m, Crossing::under).rows) scan(row);
          }
  }
  if (o.pass) o.detail = std::to_string(count) + " multiplicities in Z>=0";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Haagerup braid table", haagerup_table},
      {"Haagerup fusion", haagerup_fusion},
      {"Haagerup modular relations", haagerup_relations},
      {"sum rules", sum_rules},
      {"cross-route indicators", cross_route},
      {"indicator identities", indicator_properties},
      {"DFT and Galois foundations", foundations},
      {"pointed brute force", pointed_oracle},
      {"root-choice independence", root_choice},
      {"integrality", integrality},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %2zu %-28s %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
