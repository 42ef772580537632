// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "naf/error.hpp"
#include "naf/expansion.hpp"
#include "naf/nads.hpp"
#include "naf/optimality.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace naf;

namespace {

IntPoly poly(std::initializer_list<long> descending) {
  std::vector<Integer> c;
  for (long v : descending) c.emplace_back(v);
  return IntPoly::from_descending(c);
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < limit_seconds, "runtime over " + std::to_string(limit_seconds) + " s");
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << o.note.str()
            << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s)" << std::endl;
}

bool roundtrips(const DigitSet& ds, const LatticePoint& p) {
  const auto r = expand(ds, p);
  if (!std::holds_alternative<Expansion>(r)) return false;
  const auto& e = std::get<Expansion>(r);
  return value(ds.lattice(), e) == p && is_wnaf(e);
}

void classic_naf(Outcome& o) {
  const auto nf = NumberFieldInstance::build(poly({1, -2}));
  const DigitSet ds = build_minimal_norm(nf, 2);
  o.require(ds.digits() == std::vector<LatticePoint>{LatticePoint{-1}, LatticePoint{0}, LatticePoint{1}},
            "digit set is not {0, +-1}");
  std::size_t checked = 0;
  for (long z = -4096; z <= 4096; ++z) {
    const LatticePoint p{z};
    const auto r = expand(ds, p);
    if (!std::holds_alternative<Expansion>(r)) {
      o.require(false, "no expansion of " + p.str());
      continue;
    }
    const auto& e = std::get<Expansion>(r);
    o.require(value(nf.lattice(), e) == p, "roundtrip of " + p.str());
    o.require(is_wnaf(e), "window condition at " + p.str());
    o.require(weight(e) == min_weight_oracle(ds, nf, p), "weight of " + p.str());
    ++checked;
  }
  o.note << checked << " integers, weights equal the oracle; ";
}

void koblitz_thresholds(Outcome& o) {
  const auto nf = NumberFieldInstance::build(poly({1, -1, 2}));
  const unsigned w0 = w0_bound(nf);
  o.require(w0 == 3, "w0 = " + std::to_string(w0));
  const NormContext ctx = norm_context(nf);
  for (unsigned w = 3; w <= 6; ++w)
    o.require(certify(build_minimal_norm(nf, w), ctx, nf).has_value(), "certify at w = " + std::to_string(w));
  const NadsVerdict v = search(build_minimal_norm(nf, 2), nf);
  o.require(v.status == NadsStatus::verified_by_search, "search at w = 2");
  o.note << "w0 = " << w0 << ", certified w = 3..6, w = 2 verified over " << v.ball_size << " points; ";
}

void decision_consistency(Outcome& o) {
  std::vector<IntPoly> bases;
  for (long t : {2, 3, 4, 5, -2, -3, -4, -5}) bases.push_back(poly({1, -t}));
  for (auto q : {poly({1, -1, 2}), poly({1, 1, 2}), poly({1, -2, 2}), poly({1, 2, 2}), poly({1, 0, 2}), poly({1, 0, 3}),
                 poly({1, -1, 3}), poly({1, -2, 3}), poly({1, -4, 5}), poly({1, 3, 4}), poly({1, 0, -3}), poly({1, -5, 5})})
    bases.push_back(q);
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> coord(-1'000'000, 1'000'000);
  std::size_t instances = 0, certified = 0, verified = 0, counterexamples = 0;
  for (const auto& mp : bases) {
    const auto nf = NumberFieldInstance::build(mp);
    if (!is_expanding(nf.lattice())) {
      o.require(false, to_string(mp) + " is not expanding");
      continue;
    }
    const NormContext ctx = norm_context(nf);
    for (unsigned w = 1; w <= 3; ++w) {
      std::vector<DigitSet> sets{build_minimal_norm(nf, w)};
      if (nf.n() == 1) sets.push_back(build_rational_interval(nf.lattice(), w));
      for (const auto& ds : sets) {
        ++instances;
        const std::string label = to_string(mp) + " w=" + std::to_string(w) + " " + to_string(ds.family());
        const auto cert = certify(ds, ctx, nf);
        const NadsVerdict v = search(ds, nf);
        if (cert) {
          ++certified;
          o.require(v.status == NadsStatus::verified_by_search, "certified but search disagrees: " + label);
        }
        if (v.status == NadsStatus::counterexample) {
          ++counterexamples;
          o.require(validate_cycle(ds, v.witness), "invalid witness: " + label);
          continue;
        }
        ++verified;
        for (int i = 0; i < 1000; ++i) {
          IntVector c(nf.n());
          for (auto& x : c) x = coord(rng);
          o.require(roundtrips(ds, LatticePoint(c)), "expansion failed: " + label);
        }
      }
    }
  }
  o.require(instances >= 20, "corpus too small");
  o.note << instances << " instances, " << certified << " certified, " << verified << " verified, "
         << counterexamples << " counterexamples; ";
}

void optimality(Outcome& o) {
  const auto three = NumberFieldInstance::build(poly({1, -3}));
  const auto quad = NumberFieldInstance::build(poly({1, -4, 5}));
  const std::pair<const NumberFieldInstance*, unsigned> cases[] = {{&three, 2}, {&quad, 3}};
  for (const auto& [nf, w] : cases) {
    const DigitSet ds = build_minimal_norm(*nf, w);
    const std::string label = to_string(nf->min_poly()) + " w=" + std::to_string(w);
    o.require(check_hypotheses(*nf, ds).certified(), "not certified: " + label);
    const EmpiricalReport r = verify_empirically(ds, *nf, Rational(200), 2026);
    o.require(!r.sampled, "sweep was sampled: " + label);
    o.require(r.violations.empty() && r.expand_failures.empty(), "violations: " + label);
    o.require(r.cross_mismatches == 0, "oracle mismatch: " + label);
    o.note << label << ": " << r.points << " points, " << r.violations.size() << " violations; ";
  }
}

void negative_controls(Outcome& o) {
  o.require(!is_expanding(LatticeInstance(IntMatrix::identity(2))), "identity reported expanding");
  const auto x2m1 = LatticeInstance::companion(poly({1, 0, -1}));
  o.require(!is_expanding(x2m1), "x^2 - 1 reported expanding");
  bool rejected = false;
  try {
    build_minimal_norm(NumberFieldInstance::build(poly({1, 0, -1})), 2);
  } catch (const NotExpanding&) {
    rejected = true;
  }
  o.require(rejected, "digit construction accepted x^2 - 1");

  const auto nf = NumberFieldInstance::build(poly({1, -2}));
  const DigitSet bad = build_minimal_norm(nf, 2).with_replacement(LatticePoint{1}, LatticePoint{-3});
  const NadsVerdict v = search(bad, nf);
  o.require(v.status == NadsStatus::counterexample, "corrupted set not refuted");
  o.require(validate_cycle(bad, v.witness), "witness does not validate");
  o.note << "corrupted set {0, -1, -3} cycles through";
  for (const auto& p : v.witness) o.note << ' ' << p.str();
  o.note << "; ";
}

void uniqueness(Outcome& o) {
  const auto nf = NumberFieldInstance::build(poly({1, -2}));
  for (unsigned w : {2u, 3u}) {
    const DigitSet ds = build_minimal_norm(nf, w);
    std::set<LatticePoint> values;
    std::size_t words = 0;
    std::vector<LatticePoint> word;
    // words end in a nonzero digit, or are empty; gap counts zeros since the last nonzero
    std::function<void(unsigned)> rec = [&](unsigned gap) {
      if (word.empty() || !word.back().is_zero()) {
        ++words;
        values.insert(value(nf.lattice(), Expansion{word, w}));
      }
      if (word.size() == 10) return;
      for (const auto& d : ds.digits()) {
        if (!d.is_zero() && !word.empty() && gap < w - 1) continue;
        word.push_back(d);
        rec(d.is_zero() ? gap + 1 : 0);
        word.pop_back();
      }
    };
    rec(w);
    o.require(values.size() == words, "collision for w = " + std::to_string(w));
    o.note << "w=" << w << ": " << words << " words, " << words - values.size() << " collisions; ";
  }
}

}  // namespace

int main() {
  criterion(1, "classic NAF in base 2", 10, classic_naf);
  criterion(2, "NADS thresholds for x^2 - x + 2", 60, koblitz_thresholds);
  criterion(3, "certify and search agree on a corpus", 600, decision_consistency);
  criterion(4, "optimality certificate and oracle sweep", 300, optimality);
  criterion(5, "negative controls", 60, negative_controls);
  criterion(6, "uniqueness of short w-NAF words", 60, uniqueness);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
