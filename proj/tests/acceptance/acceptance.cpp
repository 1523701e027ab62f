// One line per acceptance criterion: PASS/FAIL, wall time and limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "../oracles.hpp"
#include "weyl/groebner.hpp"
#include "weyl/suites.hpp"

using namespace weyl;

namespace {

struct Verdict {
  bool passed;
  std::string detail;
};

Verdict fromSuite(const std::string& name) {
  const SuiteResult r = runSuite(name);
  if (r.outcome() == Outcome::Pass) return {true, std::to_string(r.checks.size()) + " checks"};
  for (const auto& c : r.checks)
    if (!c.passed) return {false, c.name + ": " + c.detail};
  return {false, "failed"};
}

Verdict membership() {
  std::mt19937 rng(2024);
  int members = 0;
  for (int t = 0; t < 100; ++t) {
    const auto inst = oracle::membershipInstance(rng, t);
    const bool gb = isMember(inst.f, buchberger(inst.gens));
    if (gb != oracle::inBoundedSlice(inst.f, inst.gens, 10)) return {false, "instance " + std::to_string(t)};
    members += gb;
  }
  return {true, "100 instances, " + std::to_string(members) + " members"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limitSeconds;  // 0: no time limit
    std::function<Verdict()> run;
  };
  const Criterion criteria[] = {
      {1, "algebra identities", 5, [] { return fromSuite("identities"); }},
      {2, "Eulerian suite", 30, [] { return fromSuite("eulerian"); }},
      {3, "Tor against R^r concentrated at -n, window [-12,6]", 60, [] { return fromSuite("tor-concentration"); }},
      {4, "Ext over A_n concentrated at 0, window [-10,10]", 120, [] { return fromSuite("ext-concentration"); }},
      {5, "Ext(R, N) equals de Rham shifted by -n", 0, [] { return fromSuite("derham-shift"); }},
      {6, "duality: dual Eulerian bounds, Tor vs Ext of the dual", 0, [] { return fromSuite("duality"); }},
      {7, "presentation vs Cech: dims and E characteristic polynomials", 0,
       [] { return fromSuite("model-consistency"); }},
      {8, "Groebner membership vs brute-force oracle", 0, membership},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool inTime = c.limitSeconds == 0 || secs < c.limitSeconds;
    const bool ok = v.passed && inTime;
    failed += !ok;
    std::string limit = c.limitSeconds > 0 ? ", limit " + std::to_string(static_cast<int>(c.limitSeconds)) + " s" : "";
    std::printf("%s [%d] %s (%.2f s%s) %s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs, limit.c_str(),
                v.detail.c_str(), inTime ? "" : " -- over time limit");
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
