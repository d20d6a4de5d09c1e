// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "bhcr/borcea_voisin.hpp"
#include "bhcr/duality.hpp"
#include "bhcr/fixtures.hpp"
#include "bhcr/splitting.hpp"
#include "support.hpp"

using namespace bhcr;
using testing::poly;
using testing::sym;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// K3 potentials y0^2 + g with g in three variables built from Fermat, chain and
// loop atoms, kept when Calabi-Yau with first weight v0 in {3, 5}.
std::vector<DelsartePolynomial> generated_surfaces() {
  std::vector<DelsartePolynomial> out;
  auto add = [&](const std::string& g) {
    try {
      auto p = poly("y0^2+" + g);
      auto w = oracle::weights(testing::to_mat(p));
      const std::int64_t sum = std::accumulate(w.w.begin(), w.w.end(), std::int64_t{0});
      if (sum == w.degree && (w.w[0] == 3 || w.w[0] == 5)) out.push_back(p);
    } catch (const Error&) {
    }
  };
  for (int a = 2; a <= 10; ++a)
    for (int b = 2; b <= 10; ++b)
      for (int c = 2; c <= 12; ++c) {
        const auto A = std::to_string(a), B = std::to_string(b), C = std::to_string(c);
        add("y1^" + A + "*y2+y2^" + B + "*y3+y3^" + C);
        add("y1^" + A + "*y2+y2^" + B + "*y3+y3^" + C + "*y1");
        add("y1^" + A + "+y2^" + B + "*y3+y3^" + C);
        add("y1^" + A + "+y2^" + B + "*y3+y3^" + C + "*y2");
      }
  return out;
}

struct TwistFixture {
  std::string name;
  TwistModel model;
};

// The worked example followed by the first two generated surfaces (one chain,
// one loop where available) paired with each of the curves of rows 6, 8, 10.
std::vector<TwistFixture> twist_fixtures() {
  std::vector<TwistFixture> out;
  const auto& w = worked_example();
  out.push_back({"worked example", build_twist_model(w.curve, w.surface)});
  auto surfaces = generated_surfaces();
  for (int row : {6, 8, 10}) {
    int taken_chain = 0, taken_loop = 0;
    for (const auto& s : surfaces) {
      auto dec = atomic_decomposition(s);
      const bool loop = std::any_of(dec.blocks.begin(), dec.blocks.end(), [](const Atom& a) { return a.kind == AtomKind::Loop; });
      const bool chain = std::any_of(dec.blocks.begin(), dec.blocks.end(), [](const Atom& a) { return a.kind == AtomKind::Chain; });
      int& taken = loop ? taken_loop : taken_chain;
      if ((!loop && !chain) || taken >= 1) continue;
      try {
        auto m = build_twist_model(elliptic_row(row).potential, s);
        transposed_twist_weights(m);
        out.push_back({"row " + std::to_string(row) + " x " + s.to_string(), m});
        ++taken;
      } catch (const Error&) {
      }
    }
  }
  return out;
}

// Every potential the library ships or builds in the fixtures above.
std::vector<DelsartePolynomial> fixture_potentials() {
  std::vector<DelsartePolynomial> out;
  for (const auto& row : elliptic_table()) out.push_back(row.potential);
  for (const auto& f : twist_fixtures()) {
    const auto& m = f.model;
    for (const auto& p : {m.surface_potential, m.product_potential}) {
      out.push_back(p);
      out.push_back(transpose(p));
    }
  }
  return out;
}

Outcome ac1_table() {
  Outcome o;
  const auto t0 = Clock::now();
  auto checks = verify_elliptic_table();
  const auto& rows = elliptic_table();
  o.expect(rows.size() == 13, "table does not have 13 rows; ");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& c = checks[i];
    const auto ref = oracle::weights(testing::to_mat(rows[i].potential));
    o.expect(c.ok(), "row " + std::to_string(c.index) + " " + c.failing_field() + "; ");
    o.expect(c.weights == ref.w && c.degree == ref.degree, "row " + std::to_string(c.index) + " weights/degree; ");
    o.expect(c.sl_order == static_cast<Integer>(oracle::sl(testing::to_mat(rows[i].potential)).size()),
             "row " + std::to_string(c.index) + " |SL| vs brute force; ");
  }
  o.expect(elliptic_row(1).sl_order == 9 && elliptic_row(1).sl_tilde_order == 3, "row 1 orders; ");
  o.expect(elliptic_row(6).sl_order == 8 && elliptic_row(6).sl_tilde_order == 2, "row 6 orders; ");
  const double s = seconds_since(t0);
  o.expect(s < 1.0, "took " + std::to_string(s) + " s; ");
  o.detail << "13 rows in " << s << " s";
  return o;
}

Outcome ac2_worked_example() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto& w = worked_example();
  auto ws = weight_system(w.surface);
  o.expect(ws.weights == std::vector<Integer>{3, 1, 1, 1} && ws.degree == 6, "S weights; ");
  auto wst = weight_system(transpose(w.surface));
  o.expect(wst.weights == std::vector<Integer>{25, 10, 8, 7}, "S^T weights; ");
  auto m = build_twist_model(w.curve, w.surface);
  o.expect(m.weights.weights == std::vector<Integer>{3, 3, 2, 2, 2} && m.weights.degree == 12, "W_ES weights; ");
  auto tw = transposed_twist_weights(m);
  o.expect(tw.weights == std::vector<Integer>{25, 25, 20, 16, 14} && tw.degree == 100, "W_ES^T weights; ");

  ThetaMap theta(m);
  ThetaMap theta_t(transposed_model(m));
  const auto& et = theta_t.curve_group();
  const auto iota = sym("1/2,0,1/2");
  o.expect(et.order() == 2 && et.contains(iota) && !et.canonical(iota).is_identity(), "SL~(E^T) is not <iota>; ");
  o.expect(theta_t.surface_group().order() == 1, "SL~(S^T) not trivial; ");
  o.expect(theta_t.product_group().order() == 2, "|SL~(W_ES^T)| != 2; ");
  const auto nu = sym("1/4,3/4,0,0,0");
  auto image = theta_t(nu);
  o.expect(image.curve_part == et.canonical(iota) && image.surface_part.is_identity(), "theta(nu) != (iota, id); ");

  auto fl = fixed_locus(w.triple);
  o.expect(fl == FixedLocus{10, 0}, "fixed locus; ");
  o.expect(triple_from_fixed_locus(10, 0) == std::pair{1, 1} && w.triple.delta == 1, "triple from fixed locus; ");
  o.expect(hodge_numbers(w.triple) == HodgeNumbers{6, 60}, "Hodge (6,60); ");
  o.expect(hodge_numbers(lattice_mirror(w.triple)) == HodgeNumbers{60, 6}, "Hodge (60,6); ");
  o.expect(hodge_swap_check(w.triple), "swap; ");
  const double s = seconds_since(t0);
  o.expect(s < 1.0, "took " + std::to_string(s) + " s; ");
  o.detail << "P(3,3,2,2,2) / P(25,25,20,16,14), theta(nu) = (iota, id), (6,60) <-> (60,6) in " << s << " s";
  return o;
}

Outcome ac3_order_formulas(const std::vector<DelsartePolynomial>& potentials) {
  Outcome o;
  for (const auto& p : potentials) {
    const auto m = testing::to_mat(p);
    std::int64_t det = oracle::det(m);
    if (det < 0) det = -det;
    const std::int64_t d = oracle::weights(m).degree;
    const std::int64_t dt = oracle::weights(oracle::transpose(m)).degree;
    try {
      const auto sl = static_cast<std::int64_t>(sl_group(p).order());
      const auto slt = static_cast<std::int64_t>(sl_tilde(p).order());
      o.expect(sl * dt == det, p.to_string() + " |SL|; ");
      o.expect(slt * d * dt == det, p.to_string() + " |SL~|; ");
    } catch (const Error& e) {
      o.expect(false, p.to_string() + ": " + e.what() + "; ");
    }
  }
  o.detail << potentials.size() << " potentials";
  return o;
}

Outcome ac4_double_transpose(const std::vector<DelsartePolynomial>& potentials) {
  Outcome o;
  std::size_t groups = 0, largest = 0;
  for (const auto& p : potentials) {
    auto full = sl_tilde(p);
    for (const auto& g : all_subgroups(full)) {
      ++groups;
      largest = std::max(largest, g.order());
      o.expect(transposed_group(transposed_group(g)).same_elements(g), p.to_string() + " subgroup; ");
    }
  }
  o.detail << groups << " subgroups, largest of order " << largest;
  return o;
}

Outcome ac5_pairing(const std::vector<DelsartePolynomial>& potentials) {
  Outcome o;
  std::mt19937 rng(424242);
  int trials = 0;
  for (int round = 0; round < 10; ++round)
    for (const auto& w : potentials) {
      auto g = sl_tilde(w);
      auto gt = sl_tilde(transpose(w));
      std::uniform_int_distribution<std::size_t> pu(0, gt.order() - 1), pv(0, g.order() - 1);
      std::uniform_int_distribution<Integer> k(0, 1000);
      const auto& u = gt.elements()[pu(rng)];
      const auto& v = g.elements()[pv(rng)];
      const auto base = pairing(w, u, v);
      const auto shifted = pairing(w, u + gt.j().times(k(rng)), v + g.j().times(k(rng)));
      o.expect(base == shifted, w.to_string() + " " + u.to_string() + " " + v.to_string() + "; ");
      ++trials;
    }
  o.expect(trials >= 100, "only " + std::to_string(trials) + " trials; ");
  o.detail << trials << " trials";
  return o;
}

Outcome ac6_weight_identity(const std::vector<TwistFixture>& fixtures) {
  Outcome o;
  for (const auto& f : fixtures) {
    const auto& m = f.model;
    auto ct = oracle::weights(testing::to_mat(transpose(m.curve_potential)));
    auto st = oracle::weights(testing::to_mat(transpose(m.surface_potential)));
    std::vector<std::int64_t> expect;
    for (std::size_t i = 1; i < ct.w.size(); ++i) expect.push_back(st.w[0] * ct.w[i]);
    for (std::size_t i = 1; i < st.w.size(); ++i) expect.push_back(ct.w[0] * st.w[i]);
    auto ws = weight_system(transpose(m.product_potential));
    o.expect(ws.weights == expect && ws.degree == 2 * ct.w[0] * st.w[0], f.name + "; ");
    o.expect(transposed_twist_weights(m) == ws, f.name + " (library formula); ");
  }
  try {
    build_twist_model(poly("x0^2+x1^3+x2^6"), poly("y0^2+y1^3+y2^12+y3^12"));
    o.expect(false, "v0 = 6 accepted; ");
  } catch (const Error& e) {
    o.expect(e.kind() == ErrorKind::WeightObstruction, std::string("v0 = 6 gave ") + e.what() + "; ");
  }
  o.detail << fixtures.size() << " fixtures, v0 = 6 rejected";
  return o;
}

Outcome ac7_theta(const std::vector<TwistFixture>& fixtures) {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& f : fixtures) {
    for (const auto& model : {f.model, transposed_model(f.model)}) {
      ThetaMap theta(model);
      const auto& g = theta.product_group();
      std::set<SplitElement> images;
      for (const auto& a : g.elements()) {
        auto ta = theta(a);
        images.insert(ta);
        o.expect(theta.inverse(ta) == a, f.name + " inverse; ");
        for (const auto& b : g.elements()) {
          auto tab = theta(g.compose(a, b));
          auto tb = theta(b);
          o.expect(tab.curve_part == theta.curve_group().compose(ta.curve_part, tb.curve_part) &&
                       tab.surface_part == theta.surface_group().compose(ta.surface_part, tb.surface_part),
                   f.name + " homomorphism; ");
        }
      }
      o.expect(images.size() == g.order() &&
                   images.size() == theta.curve_group().order() * theta.surface_group().order(),
               f.name + " bijectivity; ");
    }
    ThetaMap theta(f.model);
    ThetaMap theta_t(transposed_model(f.model));
    for (const auto& ge : all_subgroups(theta.curve_group()))
      for (const auto& gs : all_subgroups(theta.surface_group())) {
        ++pairs;
        o.expect(verify_transposed_splitting(theta, theta_t, ge, gs).holds, f.name + " splitting; ");
      }
  }
  o.expect(fixtures.size() >= 3, "fewer than two generated fixtures; ");
  o.detail << fixtures.size() << " models, " << pairs << " subgroup pairs";
  return o;
}

Outcome ac8_triples() {
  Outcome o;
  const auto& cat = TripleCatalog::builtin();
  for (const auto& e : cat.entries())
    if (e.mirror) o.expect(hodge_swap_check(e.triple), e.triple.to_string() + " swap; ");
  for (auto t : {NikulinTriple{2, 0, 0}, NikulinTriple{18, 0, 0}, NikulinTriple{4, 4, 1}, NikulinTriple{16, 4, 1}})
    o.expect(bhcr_model_available(t) == Availability::NotAvailable, t.to_string() + " availability; ");
  o.expect(cat.count_mirror() == 63, "mirror count " + std::to_string(cat.count_mirror()) + "; ");
  o.expect(cat.count_delsarte() == 29, "model count " + std::to_string(cat.count_delsarte()) + "; ");
  o.expect(cat.count_theorem() == 25, "theorem count " + std::to_string(cat.count_theorem()) + "; ");
  o.detail << cat.count_mirror() << " / " << cat.count_delsarte() << " / " << cat.count_theorem();
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const char* id, const char* title, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << id << ' ' << title << " (" << o.detail.str() << ")\n";
    failures += !o.ok;
  };

  std::vector<TwistFixture> fixtures;
  std::vector<DelsartePolynomial> potentials;
  try {
    fixtures = twist_fixtures();
    potentials = fixture_potentials();
  } catch (const std::exception& e) {
    std::cout << "fixture construction failed: " << e.what() << '\n';
    return 1;
  }

  report("AC1", "elliptic table reproduction", ac1_table);
  report("AC2", "worked example end to end", ac2_worked_example);
  report("AC3", "order formulas", [&] { return ac3_order_formulas(potentials); });
  report("AC4", "double transpose", [&] { return ac4_double_transpose(potentials); });
  report("AC5", "pairing well-definedness", [&] { return ac5_pairing(potentials); });
  report("AC6", "transposed weight identity", [&] { return ac6_weight_identity(fixtures); });
  report("AC7", "theta isomorphism and transposed splitting", [&] { return ac7_theta(fixtures); });
  report("AC8", "triple sweep and catalog counts", ac8_triples);
  return failures == 0 ? 0 : 1;
}
