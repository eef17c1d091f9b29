// Acceptance criteria 1-9, one PASS/FAIL line each. Runtime limits are pinned below.
// The order-1944 ambient is enumerated by default; TERMINVAR_ACCEPT_LARGE=0 (or --no-large) skips it.

#include <chrono>
#include <cstring>
#include <iostream>

#include "properties.hpp"

using namespace terminvar;

namespace {

constexpr double kKummerTableSeconds = 60;       // whole K2 table
constexpr double kSingRowSeconds = 60;      // each singularity row
constexpr double kSingLargeRowSeconds = 600; // the order-1944 singularity row
constexpr double kInstantSeconds = 1;       // closed forms
constexpr double kPropertySeconds = 300;    // property suites
constexpr double kLargeEnumSeconds = 1800;  // order-1944 enumeration

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void report(int n, bool ok, const std::string &what, const std::string &detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << n << ": " << what << " -- " << detail << std::endl;
}

std::string first_diff(const VerifyReport &r) {
  if (r.ok()) return "";
  auto &d = r.mismatches.front();
  return "; first diff row " + d.row + " " + d.column + " expected " + d.expected + " got " + d.computed;
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

template <class F> void guarded(int n, const std::string &what, F f) {
  try {
    f();
  } catch (const std::exception &e) {
    report(n, false, what, std::string("exception: ") + e.what());
  }
}

} // namespace

int main(int argc, char **argv) {
  bool large = true;
  if (const char *env = std::getenv("TERMINVAR_ACCEPT_LARGE")) large = std::strcmp(env, "0") != 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--no-large") == 0) large = false;

  guarded(1, "K2(A)/G table", [] {
    auto t0 = Clock::now();
    VerifyReport r = verify_table("kummer-n2");
    double s = since(t0);
    report(1, r.ok() && s < kKummerTableSeconds, "K2(A)/G table",
           std::to_string(r.rows) + " rows, " + std::to_string(r.mismatches.size()) + " mismatches, " + secs(s) +
               " (limit " + secs(kKummerTableSeconds) + ")" + first_diff(r));
  });

  guarded(2, "simply connected n=2 singularity table", [] {
    VerifyReport r = verify_table("kummer-n2-sing");
    double worst = 0, worst_large = 0;
    for (auto &s : k2_sing_table()) {
      auto t0 = Clock::now();
      census_n2(build_group(k2_row(s.id).spec));
      double t = since(t0);
      (s.id == "1944,NA" ? worst_large : worst) = std::max(s.id == "1944,NA" ? worst_large : worst, t);
    }
    bool fast = worst < kSingRowSeconds && worst_large < kSingLargeRowSeconds;
    report(2, r.ok() && fast, "simply connected n=2 singularity table",
           std::to_string(r.rows) + " rows x 10 columns, " + std::to_string(r.mismatches.size()) +
               " mismatches, slowest row " + secs(worst) + ", order-1944 row " + secs(worst_large) + first_diff(r));
  });

  guarded(3, "K3(A)/G closed forms", [] {
    auto t0 = Clock::now();
    VerifyReport r = verify_table("kummer-n3-sing");
    double s = since(t0);
    report(3, r.ok() && s < kInstantSeconds, "K3(A)/G closed forms",
           std::to_string(r.rows) + " rows, " + std::to_string(r.mismatches.size()) + " mismatches, " + secs(s) +
               first_diff(r));
  });

  guarded(4, "fixed surfaces and isolated points", [] {
    VerifyReport r = verify_table("fixed-loci");
    report(4, r.ok(), "fixed surfaces and isolated points",
           std::to_string(r.rows) + " rows incl. incidence splits, " + std::to_string(r.mismatches.size()) +
               " mismatches" + first_diff(r));
  });

  guarded(5, "216,153 intermediate counts", [] {
    ActionGroup G = build_group(k2_row("216,153").spec);
    const Ambient &amb = G.ambient();
    StabilizerCensus c = stabilizer_census(G);
    int c4 = 0, c3_tr = 0, c3_lin = 0;
    for (auto &o : c.orbits) {
      if (!local_model(o).isolated()) continue;
      if (o.isotropy == "C4") ++c4;
      if (o.isotropy == "C3") ++(o.translation_type ? c3_tr : c3_lin);
    }
    bool split27 = true;
    size_t elements = 0;
    for (Code h : G.elements()) {
      if (amb.element_order(h) != 3 || amb.linear_group().order[amb.lin(h)] != 3 || qualify(G, h) != Qualification::None)
        continue;
      ++elements;
      auto f = fixed_points_on_K2(amb, h);
      size_t off = std::count_if(f.isolated.begin(), f.isolated.end(),
                                 [](auto &z) { return z.variant == KummerPoint::Variant::Triple; });
      size_t on = std::count_if(f.isolated.begin(), f.isolated.end(),
                                [](auto &z) { return z.variant == KummerPoint::Variant::CurveFiber; });
      split27 = split27 && off == 9 && on == 18 && f.isolated.size() == 27;
    }
    bool ok = c4 == 3 && c3_tr == 1 && c3_lin == 9 && split27 && elements > 0;
    report(5, ok, "216,153 intermediate counts",
           "isolated C4 " + std::to_string(c4) + ", translation C3 " + std::to_string(c3_tr) + ", other C3 " +
               std::to_string(c3_lin) + ", 27-point split " + (split27 ? "holds" : "fails") + " on " +
               std::to_string(elements) + " elements (9 + 18 each)");
  });

  guarded(6, "smoothness flags", [] {
    std::vector<std::string> smooth;
    for (auto &r : k2_table())
      if (smoothness_n2(build_group(r.spec)).smooth) smooth.push_back("k2/" + r.id);
    for (auto &r : k3_table())
      if (smoothness_flag(census_n3(r.i)).smooth) smooth.push_back("k3/" + r.id);
    std::string list;
    for (auto &s : smooth) list += (list.empty() ? "" : ", ") + s;
    bool ok = smooth == std::vector<std::string>{"k2/27,5.b", "k3/32,51"};
    report(6, ok, "smoothness flags", "smooth rows: " + list + " (expected k2/27,5.b, k3/32,51)");
  });

  guarded(7, "Hilbert-square fixtures", [] {
    VerifyReport r = verify_table("hilb2");
    bool c24 = hilb_invariants(hilb_row("16,14").group(), hilb_row("16,14").rank).b2 == 23;
    bool q16 = hilb_invariants(hilb_row("16,9").group(), hilb_row("16,9").rank).pi1.name() == "D4";
    report(7, r.ok() && r.rows >= 35 && c24 && q16, "Hilbert-square fixtures",
           std::to_string(r.rows) + " fixtured rows (" + std::to_string(r.skipped_rows) + " rank-only), " +
               std::to_string(r.mismatches.size()) + " mismatches, C2^4 b2 = 23 " + (c24 ? "yes" : "no") +
               ", Q16 pi1 = D4 " + (q16 ? "yes" : "no") + first_diff(r));
  });

  guarded(8, "property suites", [] {
    auto t0 = Clock::now();
    std::vector<std::pair<std::string, props::Verdict>> v = {
        {"fix=det", props::fix_count_matches_det()},
        {"wedge2", props::exterior_square_homomorphism(100)},
        {"poincare", props::poincare_all_rows()},
        {"conjugation", props::conjugation_invariance(20)},
        {"orbit-stabilizer", props::orbit_stabilizer_products()},
        {"a3 closed form", props::a3_closed_form()},
    };
    double s = since(t0);
    bool ok = s < kPropertySeconds;
    std::string detail;
    for (auto &[name, r] : v) {
      ok = ok && r.ok;
      detail += name + " " + std::to_string(r.checked) + (r.ok ? " ok" : " FAILED (" + r.detail + ")") + "; ";
    }
    report(8, ok, "property suites", detail + secs(s) + " (limit " + secs(kPropertySeconds) + ")");
  });

  guarded(9, "enumeration completeness", [large] {
    auto t0 = Clock::now();
    auto c2 = props::enumerated_strings("generic", "C2");
    auto c3 = props::enumerated_strings("e2-zeta3", "C3");
    auto e2 = props::block_strings({"2,1", "6,1", "18,4", "54,14", "162,54"});
    auto e3 = props::block_strings({"3,1.a", "3,1.b", "9,2.a", "9,2.b", "27,3.a", "27,3.b", "27,5.a", "27,5.b",
                                    "81,12.a", "81,12.b", "243,37"});
    bool ok = c2 == e2 && c3 == e3;
    std::string detail = "order 162: " + std::to_string(c2.size()) + "/" + std::to_string(e2.size()) +
                         " strings, order 243: " + std::to_string(c3.size()) + "/" + std::to_string(e3.size()) +
                         " strings, " + secs(since(t0));
    if (large) {
      auto t1 = Clock::now();
      auto bt = props::enumerated_strings("quaternionic", "BT24");
      auto eb = props::block_strings({"24,3", "216,153", "1944,NA"});
      double s = since(t1);
      ok = ok && bt == eb && s < kLargeEnumSeconds;
      detail += "; order 1944: " + std::to_string(bt.size()) + "/" + std::to_string(eb.size()) + " strings, " + secs(s);
    } else {
      detail += "; order 1944 skipped (TERMINVAR_ACCEPT_LARGE=0)";
    }
    report(9, ok, "enumeration completeness", detail);
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
