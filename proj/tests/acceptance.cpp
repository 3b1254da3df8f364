// Acceptance suite: one PASS/FAIL line per criterion.
//
// Each criterion runs the matching verify groups at the default configuration
// and checks the recorded values against thresholds pinned here, not against
// the records' own pass flags, plus the ensemble sizes and a wall-clock limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wpnum/diff.hpp"
#include "wpnum/wp.hpp"
#include "wpnum_cli/cli.hpp"
#include "wpnum_cli/verify.hpp"

namespace {

using wpnum::cli::CheckRecord;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED ") + what;
  }
};

std::string g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

class Records {
 public:
  void add(const std::string& group) {
    for (auto& r : wpnum::cli::run_group(group, wpnum::cli::VerifyConfig{})) by_name_[r.check] = r;
  }
  const CheckRecord& operator[](const std::string& name) const { return by_name_.at(name); }

 private:
  std::map<std::string, CheckRecord> by_name_;
};

// value < limit, with a readable note.
void below(Outcome& o, const CheckRecord& r, double limit) {
  o.require(std::isfinite(r.value) && r.value < limit, r.check + "=" + g(r.value) + " < " + g(limit));
}

void at_most(Outcome& o, const CheckRecord& r, double limit) {
  o.require(std::isfinite(r.value) && r.value <= limit, r.check + "=" + g(r.value) + " <= " + g(limit));
}

void trials(Outcome& o, const CheckRecord& r, const char* key, int want) {
  const int got = r.inputs.at(key).get<int>();
  o.require(got == want, r.check + " " + key + "=" + std::to_string(got));
}

struct Criterion {
  int id;
  std::string title;
  double max_seconds;  // 0: no runtime limit
  std::function<Outcome()> body;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "B isometry", 5.0,
       [] {
         Records rs;
         rs.add("bfrak_isometry");
         Outcome o;
         below(o, rs["bfrak_isometry_exact"], 1e-10);
         below(o, rs["bfrak_isometry_quadrature"], 1e-6);
         trials(o, rs["bfrak_isometry_exact"], "trials", 50);
         return o;
       }},
      {2, "annulus norm identity", 5.0,
       [] {
         Records rs;
         rs.add("annulus_norm_identity");
         Outcome o;
         below(o, rs["annulus_norm_identity"], 1e-8);
         trials(o, rs["annulus_norm_identity"], "trials_per_r", 100);
         return o;
       }},
      {3, "Wulf bound", 20.0,
       [] {
         Records rs;
         rs.add("wulf_bound");
         Outcome o;
         for (const char* name : {"wulf_bound_r2_t1.5", "wulf_bound_r4_t2", "wulf_bound_r1.5_t1.2"}) {
           at_most(o, rs[name], 1.0);
           trials(o, rs[name], "trials", 1000);
         }
         return o;
       }},
      {4, "Schwarzian sup-L2 estimate", 10.0,
       [] {
         Records rs;
         rs.add("schwarzian_sup_l2");
         Outcome o;
         at_most(o, rs["schwarzian_sup_l2"], 1.0);
         trials(o, rs["schwarzian_sup_l2"], "trials", 200);
         below(o, rs["schwarzian_sup_l2_constant_case"], 1e-10);
         return o;
       }},
      {5, "Ahlfors-Weill quarter identity", 0.0,
       [] {
         Records rs;
         rs.add("aw_quarter_identity");
         Outcome o;
         below(o, rs["aw_quarter_identity"], 1e-6);
         trials(o, rs["aw_quarter_identity"], "trials", 50);
         below(o, rs["aw_quarter_identity_constant_case"], 1e-10);
         return o;
       }},
      {6, "K reproducing property", 0.0,
       [] {
         Records rs;
         rs.add("k_reproducing");
         Outcome o;
         below(o, rs["k_reproducing"], 1e-10);
         below(o, rs["k_direct_oracle"], 1e-6);
         return o;
       }},
      {7, "P kernel and idempotence", 0.0,
       [] {
         Records rs;
         rs.add("p_projection");
         Outcome o;
         below(o, rs["p_kernel"], 1e-8);
         below(o, rs["p_idempotence"], 1e-8);
         trials(o, rs["p_idempotence"], "trials", 100);
         below(o, rs["decompose_residual"], 1e-8);
         return o;
       }},
      {8, "WP Gram matrix", 0.0,
       [] {
         Records rs;
         rs.add("wp_gram");
         Outcome o;
         below(o, rs["wp_gram_diagonal"], 1e-8);
         below(o, rs["wp_gram_offdiagonal"], 1e-10);
         o.require(rs["wp_gram_hermitian"].pass, "hermitian");
         o.require(rs["wp_gram_psd"].pass, "psd");
         const auto gram = wpnum::wp_gram(10, wpnum::disk_rule(64, 256));
         const double want[] = {wpnum::pi / 3.0, wpnum::pi / 12.0, wpnum::pi / 30.0};
         double err = 0.0;
         for (int n = 0; n < 3; ++n) err = std::max(err, std::abs(gram(n, n).real() - want[n]) / want[n]);
         o.require(err < 1e-8, "pi/3, pi/12, pi/30 rel err " + g(err));
         return o;
       }},
      {9, "H in Omega boundedness", 0.0,
       [] {
         Records rs;
         rs.add("h_in_omega");
         Outcome o;
         at_most(o, rs["h_in_omega"], 1.0);
         trials(o, rs["h_in_omega"], "trials", 500);
         return o;
       }},
      {10, "geometry sanity", 0.0,
       [] {
         Records rs;
         rs.add("geometry");
         Outcome o;
         below(o, rs["cayley_factor_two"], 1e-12);
         trials(o, rs["cayley_factor_two"], "points", 100);
         below(o, rs["disk_automorphism_invariance"], 1e-12);
         return o;
       }},
      {11, "end-to-end verify --seed 42", 0.0,
       [] {
         Outcome o;
         const auto dir = std::filesystem::temp_directory_path() / "wpnum_acceptance";
         std::filesystem::create_directories(dir);
         std::string reports[2];
         for (int k = 0; k < 2; ++k) {
           const auto path = (dir / ("report" + std::to_string(k) + ".json")).string();
           std::ostringstream out, err;
           const auto t0 = Clock::now();
           const int code = wpnum::cli::run({"verify", "--seed", "42", "--out", path}, out, err);
           const double s = std::chrono::duration<double>(Clock::now() - t0).count();
           o.require(code == 0, "run " + std::to_string(k + 1) + " exit " + std::to_string(code));
           o.require(s < 60.0, "run " + std::to_string(k + 1) + " " + g(s) + " s < 60 s");
           reports[k] = slurp(path);
         }
         o.require(!reports[0].empty() && reports[0] == reports[1], "byte-identical reports");
         std::filesystem::remove_all(dir);
         return o;
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.max_seconds > 0.0) o.require(s < c.max_seconds, "runtime " + g(s) + " s < " + g(c.max_seconds) + " s");
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.title << ", "
              << g(s) << " s): " << o.detail << std::endl;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
