// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eckardt/cli/commands.hpp"
#include "eckardt/errors.hpp"
#include "eckardt/lines.hpp"
#include "eckardt/rng.hpp"
#include "eckardt/singular.hpp"

using namespace eckardt;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << v;
  return ss.str();
}

SylvesterPoint sp(std::array<Rat, 5> a) { return SylvesterPoint(a); }

SylvesterPoint random_point(SeededRng& rng) {
  std::array<Rat, 5> a;
  for (auto& x : a) x = Rat(rng.uniform_int(-15, 15), rng.uniform_int(1, 6));
  if (std::all_of(a.begin(), a.end(), [](const Rat& r) { return r.is_zero(); })) a[0] = Rat(1);
  return SylvesterPoint(a);
}

Outcome singular_decomposition() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto claimed = claimed_components();
  std::map<ComponentKind, int> kinds;
  int verified = 0;
  for (const auto& c : claimed) {
    ++kinds[c.kind()];
    if (verify_component_in_singular_locus(c)) {
      ++verified;
    } else {
      o.expect(false, c.name() + " not in the singular locus");
    }
  }
  o.expect(kinds[ComponentKind::Hyperplane] == 5 && kinds[ComponentKind::PairPair] == 15 &&
               kinds[ComponentKind::Triple] == 10,
           "component counts 5 + 15 + 10");
  o.expect(arrangement_oracle().components == claimed, "oracle set equals claimed set");

  cli::RunOptions opts;
  opts.seed = kSeed;
  const auto cert = cli::cmd_sing_verify(opts);
  o.expect(cert.exit_code == 0, "sing verify exit code");
  o.expect(cert.output["verdict"] == "30/30 components verified; oracle set equal", "sing verify verdict");
  const double secs = seconds_since(t0);
  o.expect(secs < 60, "runtime under 60 s");
  o.note(std::to_string(verified) + "/30 verified, oracle equal, " + fmt(secs) + " s");
  return o;
}

Outcome completeness_sampling() {
  Outcome o;
  const SmoothnessReport r = smoothness_off_components(100, kSeed);
  o.expect(r.hyperplane_points.size() == 100 && r.generic_points.size() == 100, "100 samples of each kind");
  o.expect(r.hyperplane_failures == 0, "single-hyperplane points are smooth");
  o.expect(r.off_e_failures == 0, "generic points are off E");
  o.note("failures " + std::to_string(r.hyperplane_failures) + " + " + std::to_string(r.off_e_failures) +
         ", redraws " + std::to_string(r.redraws));
  return o;
}

Outcome multiplicities() {
  Outcome o;
  SeededRng rng(kSeed);
  const std::vector<std::pair<FamilyTag, int>> expected{
      {FamilyTag::S1, 2}, {FamilyTag::S2, 3}, {FamilyTag::C1, 4}, {FamilyTag::C2, 6}};
  int samples = 0;
  for (const auto& [tag, mult] : expected) {
    for (int k = 0; k < 25; ++k) {
      const SylvesterPoint p = sample_family_point(tag, rng);
      const MultiplicityReport r = multiplicity_at(p, rng.next());
      ++samples;
      const std::string where = to_string(tag) + " " + p.to_string();
      o.expect(r.multiplicity == mult, where + " factor count " + std::to_string(r.multiplicity));
      o.expect(r.taylor_order == r.multiplicity && r.directions_agree, where + " Taylor oracle disagrees");
      o.expect(r.ordinary == true, where + " ordinary");
    }
  }
  cli::RunOptions opts;
  opts.seed = kSeed;
  opts.sample_multiplicities = true;
  const auto cert = cli::cmd_sing_verify(opts);
  o.expect(cert.exit_code == 0, "certificate multiplicity samples agree");
  bool flagged = false;
  for (const auto& n : cert.output.value("notes", Json::array())) {
    flagged = flagged || n.get<std::string>().find("open question") != std::string::npos;
  }
  o.expect(flagged, "curve divergence flagged in the certificate");
  o.note(std::to_string(samples) + " samples; S1=2, S2=3, C1=4, C2=6 under both oracles; divergence flagged");
  return o;
}

Outcome exact_counts() {
  Outcome o;
  SeededRng rng(kSeed);
  const std::vector<std::pair<FamilyTag, std::size_t>> expected{
      {FamilyTag::S1, 2}, {FamilyTag::S2, 3}, {FamilyTag::C1, 4}, {FamilyTag::C2, 6}, {FamilyTag::Clebsch, 10}};
  for (const auto& [tag, count] : expected) {
    for (int k = 0; k < 10; ++k) {
      const auto s = sample_family_point(tag, rng);
      o.expect(eckardt_vertices(s).size() == count, to_string(tag) + " " + s.to_string());
    }
  }
  o.note("2 / 3 / 4 / 6 / 10 on 10 seeded representatives each");
  return o;
}

Outcome numeric_counts() {
  Outcome o;
  SeededRng rng(kSeed);
  std::vector<std::pair<std::string, SylvesterPoint>> surfaces;
  for (auto tag : {FamilyTag::Generic, FamilyTag::E1, FamilyTag::S1, FamilyTag::S2, FamilyTag::C1, FamilyTag::C2,
                   FamilyTag::Clebsch}) {
    for (int k = 0; k < 3; ++k) surfaces.emplace_back(to_string(tag), sample_smooth_family_point(tag, rng));
  }
  surfaces.emplace_back("Fermat", sp({1, 1, 1, 1, 0}));

  TrackerConfig cfg;
  cfg.seed = kSeed;
  double worst_time = 0, worst_residual = 0;
  for (const auto& [name, s] : surfaces) {
    const std::string where = name + " " + s.to_string();
    o.expect(is_smooth(s), where + " smooth");
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const ComplexCubic f = ComplexCubic::from(to_cubic_p3(s));
      const TrackResult tracked = track_all(f, cfg);
      const EckardtNumeric numeric = eckardt_numeric(tracked.lines, f, 1e-6);
      o.expect(tracked.lines.size() == 27, where + " line count");
      o.expect(tracked.max_residual < 1e-8, where + " residual");
      worst_residual = std::max(worst_residual, tracked.max_residual);
      const std::size_t expected = name == "Fermat" ? 18 : eckardt_vertices(s).size();
      o.expect(numeric.clusters.size() == expected,
               where + " clusters " + std::to_string(numeric.clusters.size()) + " vs " + std::to_string(expected));
      if (name != "Fermat") {
        const CrossValidation cv = cross_validate(s, cfg, 1e-6);
        o.expect(cv.ok(), where + " vertex positions");
      }
    } catch (const Error& e) {
      o.expect(false, where + ": " + e.what());
    }
    const double secs = seconds_since(t0);
    worst_time = std::max(worst_time, secs);
    o.expect(secs < 10, where + " runtime");
  }
  o.note(std::to_string(surfaces.size()) + " surfaces incl. Fermat (18); max residual " + fmt(worst_residual) +
         ", slowest " + fmt(worst_time) + " s");
  return o;
}

Outcome geometry_facts() {
  Outcome o;
  SeededRng rng(kSeed);
  auto vec = [](const PentVertex& v) {
    const auto z = v.z();
    return std::vector<Rat>(z.begin(), z.end());
  };
  for (int k = 0; k < 5; ++k) {
    // Unshuffled samples keep the customary index positions.
    const auto s1 = sample_family_point(FamilyTag::S1, rng, false);
    o.expect(contains_line(s1, PentVertex(1, 2).z(), PentVertex(3, 4).z()), "S1 join in S " + s1.to_string());

    const auto s2 = sample_family_point(FamilyTag::S2, rng, false);
    o.expect(collinear({vec(PentVertex(1, 2)), vec(PentVertex(1, 3)), vec(PentVertex(2, 3))}), "S2 collinear");
    o.expect(!contains_line(s2, PentVertex(1, 2).z(), PentVertex(1, 3).z()), "S2 line not in S " + s2.to_string());

    const auto c1 = sample_family_point(FamilyTag::C1, rng, false);
    for (const auto& v : {PentVertex(1, 2), PentVertex(1, 3), PentVertex(2, 3)}) {
      o.expect(contains_line(c1, PentVertex(0, 4).z(), v.z()), "C1 join A04-" + v.name() + " " + c1.to_string());
    }

    const auto c2 = sample_family_point(FamilyTag::C2, rng, false);
    const auto vs = eckardt_vertices(c2);
    o.expect(vs.size() == 6 && std::all_of(vs.begin(), vs.end(), [](const PentVertex& v) { return v.on_face(0); }),
             "C2 vertices on pi0 " + c2.to_string());
  }
  o.note("S1 join in S; S2 collinear, line not in S; C1 joins from A04 in S; C2 on pi0");
  return o;
}

Outcome moduli_round_trip() {
  Outcome o;
  SeededRng rng(kSeed);
  int done = 0;
  while (done < 100) {
    const auto s = random_point(rng);
    if (sigma_values(s)[4].is_zero()) continue;
    o.expect(weighted_equal(inverse_map(salmon_invariants(s)), sigma_point(s)), "round trip " + s.to_string());
    ++done;
  }
  bool threw = false;
  try {
    inverse_map(q_point());
  } catch (const InverseUndefined& e) {
    threw = std::string(e.what()).starts_with("inverse undefined at Q");
  }
  o.expect(threw, "inverse at Q errors");
  int degenerate = 0;
  while (degenerate < 20) {
    auto a = random_point(rng).coeffs();
    a[rng.uniform_int(0, 4)] = Rat(0);
    const SylvesterPoint s(a);
    if (base_locus_forward(s)) continue;
    o.expect(is_q(salmon_invariants(s)), "degenerate maps to Q " + s.to_string());
    ++degenerate;
  }
  o.note("100 round trips, inverse at Q rejected, 20 degenerate points map to Q");
  return o;
}

Outcome stabilizers() {
  Outcome o;
  SeededRng rng(kSeed);
  const std::vector<std::pair<FamilyTag, std::size_t>> expected{
      {FamilyTag::S1, 4}, {FamilyTag::S2, 6}, {FamilyTag::C1, 12}, {FamilyTag::C2, 24}, {FamilyTag::Clebsch, 120}};
  for (const auto& [tag, order] : expected) {
    for (int k = 0; k < 5; ++k) {
      const auto s = sample_family_point(tag, rng);
      const PermSubgroup g = stabilizer(s);
      o.expect(g.order() == order, to_string(tag) + " order " + std::to_string(g.order()));
      o.expect(g.is_abelian() == (order == 4), to_string(tag) + " abelian flag");
    }
  }
  o.note("orders 4, 6, 12, 24, 120; abelian only for 4");
  return o;
}

Outcome invariance() {
  Outcome o;
  SeededRng rng(kSeed);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = random_point(rng);
    const auto base = salmon_values(s);
    const Rat e = i100(s);
    for (const auto& pi : all_permutations()) {
      o.expect(salmon_values(s.permuted(pi)) == base, "I8..I40 permutation invariance " + s.to_string());
      o.expect(i100(s.permuted(pi)) == e * Rat(pi.sign()), "I100 permutation sign " + s.to_string());
    }
  }
  const std::array<unsigned, 5> degrees{8, 16, 24, 32, 40};
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_point(rng);
    Rat lambda(rng.uniform_int(1, 9), rng.uniform_int(1, 9));
    if (rng.uniform_int(0, 1) == 1) lambda = -lambda;
    const auto a = salmon_values(s);
    const auto b = salmon_values(s.scaled(lambda));
    for (std::size_t k = 0; k < 5; ++k) o.expect(b[k] == lambda.pow(degrees[k]) * a[k], "scaling " + s.to_string());
    o.expect(i100(s.scaled(lambda)) == lambda.pow(100) * i100(s), "I100 scaling");
  }
  o.note("120 permutations x 5 points, 20 scalings");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"singular-locus decomposition", singular_decomposition},
      {"completeness sampling", completeness_sampling},
      {"multiplicities", multiplicities},
      {"Eckardt counts, exact", exact_counts},
      {"Eckardt counts, numeric", numeric_counts},
      {"geometry facts", geometry_facts},
      {"moduli round trip", moduli_round_trip},
      {"stabilizers", stabilizers},
      {"invariance properties", invariance},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first;
    if (!o.notes.empty()) {
      std::cout << ": " << o.notes.front();
      for (std::size_t n = 1; n < o.notes.size() && n < 6; ++n) std::cout << "; " << o.notes[n];
    }
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
