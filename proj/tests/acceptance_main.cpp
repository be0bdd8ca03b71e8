// Gate binary: one line per criterion, "CRITERION <k> PASS|FAIL - <text>".
// Exits 0 only when every criterion passes. All comparisons are exact.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fixtures_common.hpp"
#include "oracles.hpp"

using namespace rb3lie;

namespace {

using Check = std::pair<bool, std::string>;

template <typename F>
Check guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

Vec random_coords(std::size_t n, std::mt19937& gen) {
  std::uniform_int_distribution<int> entry(-2, 2);
  Vec v = zero_vec(n);
  for (auto& x : v) x = entry(gen);
  return v;
}

Vec random_kernel_combination(const std::vector<Vec>& kern, std::size_t dim, std::mt19937& gen) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, kern.empty() ? 0 : kern.size() - 1);
  Vec v = zero_vec(dim);
  for (int i = 0; i < 3 && !kern.empty(); ++i)
    vec_add_scaled(v, Rational(coeff(gen)), kern[pick(gen)]);
  return v;
}

tfx::NamedFixture find_fixture(const std::string& name) {
  for (auto& fx : tfx::suite())
    if (fx.name == name) return fx;
  throw std::runtime_error("missing fixture: " + name);
}

bool has_tag(const VerifyResult& r, int tag) {
  for (const auto& v : r.violations)
    if (!v.empty() && v[0] == tag) return true;
  return false;
}

RB2Algebra make_skeletal(const RBRepresentation& P, const Vec& coords) {
  const std::size_t d0 = P.dim(), d1 = P.mdim();
  CochainSpace c3(d0, d1, 3);
  RB2Algebra A;
  A.underlying = ThreeLie2Algebra::zero(d0, d1);
  A.underlying.l3_000 = P.rep.algebra;
  A.underlying.l3_001 = P.rep.rho;
  for (std::size_t i = 0; i < c3.dim; ++i) A.underlying.l5[i] = coords[i];
  A.T0 = P.rb.T;
  A.T1 = P.TM;
  A.weight = P.weight();
  A.t2.assign(triple_count(d0), zero_vec(d1));
  for (std::size_t tr = 0; tr < triple_count(d0); ++tr)
    for (std::size_t t = 0; t < d1; ++t) A.t2[tr][t] = coords[c3.dim + tr * d1 + t];
  return A;
}

// ---------------------------------------------------------------------------

Check criterion1() {
  for (const auto& fx : tfx::suite()) {
    auto t0 = std::chrono::steady_clock::now();
    for (ComplexKind kind : {ComplexKind::ThreeLie, ComplexKind::Operator, ComplexKind::Combined}) {
      VerifyResult r = complex_square_zero(fx.rep, kind, 4);
      if (!r.ok)
        return {false, fx.name + ": nonzero square in the " + complex_kind_name(kind) + " complex"};
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 10.0) return {false, fx.name + " exceeded the 10s budget"};
  }
  return {true, ""};
}

Check criterion2() {
  for (const auto& fx : tfx::suite()) {
    VerifyResult r = chain_map_check(fx.rep, 3);
    if (!r.ok) return {false, fx.name + ": the square at some degree does not commute"};
  }
  return {true, ""};
}

Check criterion3() {
  for (const auto& fx : tfx::suite()) {
    for (int n = 0; n <= 3; ++n) {
      try {
        partial_matrix(fx.rep, n);
      } catch (const RouteDisagreement& e) {
        return {false, fx.name + ": " + e.what()};
      }
    }
  }
  return {true, ""};
}

Check criterion4() {
  for (const auto& fx : tfx::suite()) {
    LesTable t = les_consistency(fx.rep, 3);
    if (!t.ok) return {false, fx.name + ": dimension bookkeeping violated"};
  }
  const RBRepresentation& Z = find_fixture("abelian-d3-zero").rep;
  const std::size_t expected_combined[3] = {0, 3, 4};
  for (int n = 0; n <= 2; ++n)
    if (betti(Z, ComplexKind::Combined, n).betti != expected_combined[n])
      return {false, "combined quotient at degree " + std::to_string(n) + " is off"};
  const std::size_t expected_threelie[5] = {1, 3, 1, 3, 9};
  for (int n = 0; n <= 4; ++n)
    if (betti(Z, ComplexKind::ThreeLie, n).betti != expected_threelie[n])
      return {false, "bracket-complex quotient at degree " + std::to_string(n) + " is off"};
  return {true, ""};
}

Check criterion5() {
  // (i) infinitesimals of valid deformations are degree-2 cocycles.
  RotaBaxterStructure base = find_fixture("rank1-t0").rep.rb;
  RBRepresentation reg = regular_representation(base);

  TruncatedDeformation trivial;
  trivial.base = base;
  trivial.order = 2;
  trivial.mu.assign(2, ThreeLieAlgebra::abelian(3));
  trivial.t.assign(2, Matrix(3, 3));

  Matrix shear(3, 3);
  shear.at(1, 0) = 1;
  DeformationEquivalence E;
  E.order = 2;
  E.psi = {shear, Matrix(3, 3)};
  TruncatedDeformation D = apply_equivalence(trivial, E);
  if (!verify_deformation(D, DeformationMode::Pair).ok)
    return {false, "the twisted pair deformation does not verify"};
  Infinitesimal inf = infinitesimal(D, DeformationMode::Pair);
  if (!inf.cocycle || !vec_is_zero(mat_apply(rba_differential(reg, 2), inf.cochain)))
    return {false, "a valid deformation has a non-cocycle first-order term"};
  if (vec_is_zero(inf.cochain)) return {false, "the twisted infinitesimal degenerated to zero"};

  RotaBaxterStructure e11base = find_fixture("rank1-e11").rep.rb;
  TruncatedDeformation homog;
  homog.base = e11base;
  homog.order = 1;
  homog.mu.assign(1, ThreeLieAlgebra::abelian(3));
  homog.t.assign(1, e11base.T);
  if (!verify_deformation(homog, DeformationMode::OperatorOnly).ok)
    return {false, "the homogeneous operator deformation does not verify"};
  if (!infinitesimal(homog, DeformationMode::OperatorOnly).cocycle)
    return {false, "the operator-mode infinitesimal is not a cocycle"};

  // (ii) equivalent deformations have infinitesimals differing by an exact
  // coboundary, produced by solving in the degree-1 block.
  Infinitesimal inf0 = infinitesimal(trivial, DeformationMode::Pair);
  Vec diff = inf.cochain;
  vec_sub(diff, inf0.cochain);
  if (vec_is_zero(diff)) return {false, "equivalent pair has an identical infinitesimal"};
  auto pre = solve(rba_differential(reg, 1), diff);
  if (!pre || !(mat_apply(rba_differential(reg, 1), *pre) == diff))
    return {false, "the infinitesimal difference is not an exact coboundary"};

  // (iii) a vanishing degree-2 quotient trivializes an order-3 deformation.
  const RBRepresentation& A4 = find_fixture("a4-regular").rep;
  if (betti(A4, ComplexKind::Combined, 2).betti != 0)
    return {false, "the rigid fixture has a nonzero degree-2 quotient"};
  TruncatedDeformation triv3;
  triv3.base = A4.rb;
  triv3.order = 3;
  triv3.mu.assign(3, ThreeLieAlgebra::abelian(4));
  triv3.t.assign(3, Matrix(4, 4));
  Matrix shear4(4, 4);
  shear4.at(0, 1) = 1;
  shear4.at(2, 3) = -1;
  DeformationEquivalence E3;
  E3.order = 3;
  E3.psi = {shear4, Matrix(4, 4), Matrix(4, 4)};
  TruncatedDeformation D3 = apply_equivalence(triv3, E3);
  if (!verify_deformation(D3, DeformationMode::Pair).ok)
    return {false, "the order-3 twisted deformation does not verify"};
  if (infinitesimal(D3, DeformationMode::Pair).cochain.empty())
    return {false, "missing order-3 infinitesimal"};
  TrivializeResult tr = trivialize(D3);
  if (!tr.trivialized) return {false, "order-3 trivialization failed on the rigid fixture"};

  // (iv) a nonzero degree-2 quotient obstructs at order 1.
  const RBRepresentation& L0 = find_fixture("abelian-d3-l0").rep;
  if (betti(L0, ComplexKind::Combined, 2).betti == 0)
    return {false, "the obstructed fixture has a vanishing degree-2 quotient"};
  TruncatedDeformation obs;
  obs.base = L0.rb;
  obs.order = 1;
  obs.mu.assign(1, tfx::rank1_algebra());
  obs.t.assign(1, Matrix(3, 3));
  if (!verify_deformation(obs, DeformationMode::Pair).ok)
    return {false, "the obstructed deformation does not verify at order 1"};
  TrivializeResult ob = trivialize(obs);
  if (ob.trivialized || ob.obstructed_order != 1 || vec_is_zero(ob.obstruction))
    return {false, "the obstruction at order 1 was not reported"};
  return {true, ""};
}

Check criterion6() {
  std::size_t fixture_index = 0;
  for (const auto& fx : tfx::suite()) {
    const RBRepresentation& P = fx.rep;
    const std::size_t d = P.dim(), m = P.mdim();
    std::mt19937 gen(9100 + 31 * static_cast<unsigned>(fixture_index++));
    Matrix d1 = rba_differential(P, 1);
    Matrix d2 = rba_differential(P, 2);
    std::vector<Vec> kern = kernel_basis(d2);

    int valid_count = 0;
    for (int s = 0; s < 100; ++s) {
      Vec coords = (s % 2 == 0) ? random_kernel_combination(kern, d2.cols, gen)
                                : random_coords(d2.cols, gen);
      ExtensionCocycle c = split_extension_cocycle(d, m, coords);
      BuildResult B = build_extension(P, c);
      if (B.valid != vec_is_zero(mat_apply(d2, coords)))
        return {false, fx.name + ": build verdict disagrees with the cocycle condition"};
      if (!B.valid) continue;
      ++valid_count;
      if (s % 10 == 0) {
        ExtractResult ex = extract_cocycle(B.extension, Section::canonical(d, m));
        if (!(ex.cocycle.psi == c.psi) || !(ex.cocycle.chi == c.chi) ||
            !(ex.induced.TM == P.TM) || !(ex.induced.rb.T == P.rb.T) ||
            !(ex.induced.rep.rho == P.rep.rho))
          return {false, fx.name + ": extraction does not invert building"};
      }
    }
    if (valid_count == 0) return {false, fx.name + ": no valid samples drawn"};

    Vec coords = random_kernel_combination(kern, d2.cols, gen);
    ExtensionCocycle c = split_extension_cocycle(d, m, coords);
    BuildResult B = build_extension(P, c);
    if (!B.valid) return {false, fx.name + ": kernel combination rejected"};
    std::uniform_int_distribution<int> entry(-2, 2);
    Matrix gamma(m, d);
    for (auto& x : gamma.a) x = entry(gen);
    Section sec = Section::canonical(d, m);
    sec.s.set_block(d, 0, gamma);
    ExtractResult ex = extract_cocycle(B.extension, sec);
    Vec diff = embed_extension_cocycle(ex.cocycle);
    vec_sub(diff, coords);
    auto pre = solve(d1, diff);
    if (!pre || !(mat_apply(d1, *pre) == diff))
      return {false, fx.name + ": section change is not an exact coboundary"};
    IsoResult iso = iso_from_cohomologous(P, ex.cocycle, c, gamma);
    if (!iso.ok) return {false, fx.name + ": the intertwining map was not produced"};
  }
  return {true, ""};
}

Check criterion7() {
  for (const char* name : {"abelian-d3-zero", "rank1-e11", "a4-regular"}) {
    tfx::NamedFixture fx = find_fixture(name);
    const RBRepresentation& P = fx.rep;
    Matrix D3 = rba_differential(P, 3);
    std::vector<Vec> kern = kernel_basis(D3);
    if (kern.empty()) return {false, fx.name + ": empty degree-3 kernel"};
    std::mt19937 gen(5200);
    std::uniform_int_distribution<int> coeff(-2, 2);
    Vec mix = zero_vec(D3.cols);
    for (const Vec& k : kern) vec_add_scaled(mix, Rational(coeff(gen)), k);
    for (const Vec& coords : {kern.front(), mix}) {
      RB2Algebra A = cocycle_to_skeletal(P, coords);
      if (!A.is_skeletal() || !verify_2algebra(A.underlying).ok || !verify_rb_2algebra(A).ok)
        return {false, fx.name + ": the skeletal instance does not verify"};
      SkeletalCocycle back = skeletal_to_cocycle(A);
      if (!back.cocycle || !(back.coords == coords))
        return {false, fx.name + ": the classifying cocycle does not round trip"};
    }
  }

  // Constructed violation: a lone operator-block unit with a nonzero
  // differential column must trip exactly the degree-3 coherence of the pair.
  // That block vanishes identically on the small d = 3 regular modules, so
  // scan the suite for a fixture where it does not.
  {
    bool exercised = false;
    for (const auto& fx : tfx::suite()) {
      const RBRepresentation& P = fx.rep;
      Matrix D3 = rba_differential(P, 3);
      CochainSpace c3(P.dim(), P.mdim(), 3);
      std::size_t bad = D3.cols;
      for (std::size_t j = c3.dim; j < D3.cols && bad == D3.cols; ++j)
        if (!vec_is_zero(D3.column(j))) bad = j;
      if (bad == D3.cols) continue;
      RB2Algebra broken = make_skeletal(P, unit_vec(D3.cols, bad));
      VerifyResult res = verify_rb_2algebra(broken);
      if (res.ok || !has_tag(res, 14))
        return {false, "the non-cocycle instance was not rejected at the coherence tag"};
      bool threw = false;
      try {
        skeletal_to_cocycle(broken);
      } catch (const ContractViolation&) {
        threw = true;
      }
      if (!threw) return {false, "a non-verifying instance produced classifying data"};
      exercised = true;
      break;
    }
    if (!exercised) return {false, "no violating operator column available"};
  }

  // Strict side: the adjoint tower is a crossed module and round trips.
  {
    ThreeLieAlgebra g = tfx::rank1_algebra();
    CrossedModule C;
    C.base = tfx::with_operator(g, Matrix::identity(3), Rational(-1));
    C.g1 = g;
    C.dmap = Matrix::identity(3);
    C.S = adjoint_representation(g).rho;
    C.T1 = Matrix::identity(3);
    if (!verify_crossed_module(C).ok) return {false, "the adjoint tower is not a crossed module"};
    RB2Algebra S = crossed_module_to_strict(C);
    if (!S.is_strict()) return {false, "the induced instance is not strict"};
    if (!verify_2algebra(S.underlying).ok || !verify_rb_2algebra(S).ok)
      return {false, "the strict instance does not verify"};
    CrossedModule back = strict_to_crossed_module(S);
    if (!(back.base.algebra.table == C.base.algebra.table) || !(back.base.T == C.base.T) ||
        !(back.base.weight == C.base.weight) || !(back.g1.table == C.g1.table) ||
        !(back.dmap == C.dmap) || !(back.S == C.S) || !(back.T1 == C.T1))
      return {false, "the crossed module does not round trip"};
  }
  return {true, ""};
}

Check criterion8() {
  ThreeLieAlgebra g = tfx::rank1_algebra();
  oracle::Tensor ten = oracle::bracket_tensor(g);
  const std::vector<Rational> entries = {Rational(-1), Rational(0), Rational(1)};
  for (const Rational& w : {Rational(0), Rational(-1)}) {
    std::vector<Matrix> lib = search_rb_operators(g, w, entries, 1u << 22);

    std::vector<Matrix> brute;
    const std::size_t cells = g.dim * g.dim;
    std::vector<std::size_t> digit(cells, 0);
    Matrix T(g.dim, g.dim);
    const long long wi = oracle::to_int(w);
    while (true) {
      for (std::size_t c = 0; c < cells; ++c) T.a[c] = entries[digit[c]];
      if (oracle::rb_holds(ten, oracle::to_cols(T), wi)) brute.push_back(T);
      std::size_t pos = cells;
      bool done = false;
      while (pos > 0) {
        --pos;
        if (++digit[pos] < entries.size()) break;
        digit[pos] = 0;
        if (pos == 0) done = true;
      }
      if (done) break;
    }
    if (brute.empty()) return {false, "the brute-force sweep found nothing"};
    if (!(lib == brute))
      return {false, "search and brute force disagree at weight " + format_rational(w)};
  }
  return {true, ""};
}

Check criterion9() {
  const std::vector<std::vector<std::string>> invocations = {
      {"verify", tfx::fixture_path("a4_t0.json"), "--json"},
      {"cohomology", tfx::fixture_path("abelian_d3_zero.json"), "--complex", "rba",
       "--max-degree", "2", "--with-bases", "--json"},
      {"deform", tfx::fixture_path("d3_rank1_t0.json"), tfx::fixture_path("deform_twisted.json"),
       "--trivialize", "--json"},
      {"ext", "build", tfx::fixture_path("abelian_d3_zero.json"),
       tfx::fixture_path("cocycle_d3_zero.json"), "--json"},
      {"twoalg", "from-crossed", tfx::fixture_path("crossed_d3_adjoint.json"), "--json"},
      {"search-rb", tfx::fixture_path("d3_rank1_t0.json"), "--weight", "0", "--entries", "0,1,-1",
       "--json"},
  };
  for (const auto& args : invocations) {
    std::ostringstream o1, e1, o2, e2;
    int c1 = run_command(args, o1, e1);
    int c2 = run_command(args, o2, e2);
    if (c1 != c2 || o1.str() != o2.str() || o1.str().empty())
      return {false, args[0] + ": repeated runs differ"};
  }
  return {true, ""};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* text;
    Check (*fn)();
  };
  const Entry entries[] = {
      {1, "differentials square to zero in all three complexes through the degree-4 block, "
          "within 10s per fixture", criterion1},
      {2, "the comparison map intertwines the bracket and operator differentials in degrees 0..3 "
          "on every fixture", criterion2},
      {3, "the operator coboundary agrees between its two independent assemblies on every fixture",
       criterion3},
      {4, "long-exact-sequence bookkeeping holds in degrees 1..3 and the zero example matches its "
          "closed-form dimensions", criterion4},
      {5, "deformation infinitesimals are cocycles, equivalence shifts them by exact coboundaries, "
          "and trivialization succeeds or obstructs with the degree-2 quotient", criterion5},
      {6, "extension building matches the cocycle condition on randomized data, inverts exactly, "
          "and section changes bound", criterion6},
      {7, "skeletal and strict instances round trip through cocycles and crossed modules, with "
          "verification matching the degree-3 condition", criterion7},
      {8, "the operator search agrees with an independent integer brute-force sweep of the full "
          "grid at both weights", criterion8},
      {9, "repeated command-line invocations are byte-identical", criterion9},
  };
  bool all_ok = true;
  for (const Entry& e : entries) {
    Check r = guarded(e.fn);
    std::cout << "CRITERION " << e.id << " " << (r.first ? "PASS" : "FAIL") << " - " << e.text;
    if (!r.first && !r.second.empty()) std::cout << " [" << r.second << "]";
    std::cout << "\n";
    all_ok = all_ok && r.first;
  }
  return all_ok ? 0 : 1;
}
