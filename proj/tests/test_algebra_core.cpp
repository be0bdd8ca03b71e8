#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures_common.hpp"
#include "oracles.hpp"

using namespace rb3lie;

namespace {

ThreeLieAlgebra random_table(std::size_t d, std::mt19937& gen) {
  std::uniform_int_distribution<int> entry(-1, 1);
  ThreeLieAlgebra g = ThreeLieAlgebra::abelian(d);
  for (auto& v : g.table)
    for (auto& x : v) x = entry(gen);
  return g;
}

Matrix random_matrix(std::size_t r, std::size_t c, int lo, int hi, std::mt19937& gen) {
  std::uniform_int_distribution<int> entry(lo, hi);
  Matrix M(r, c);
  for (auto& x : M.a) x = entry(gen);
  return M;
}

}  // namespace

TEST_CASE("fundamental identity holds on the named brackets") {
  REQUIRE(verify_fundamental_identity(tfx::rank1_algebra()).ok);
  REQUIRE(verify_fundamental_identity(tfx::a4_algebra()).ok);
  REQUIRE(verify_fundamental_identity(ThreeLieAlgebra::abelian(5)).ok);
  REQUIRE(oracle::fi_holds(oracle::bracket_tensor(tfx::rank1_algebra())));
  REQUIRE(oracle::fi_holds(oracle::bracket_tensor(tfx::a4_algebra())));
}

TEST_CASE("fundamental identity verdict matches the brute-force cube") {
  std::mt19937 gen(20240811);
  int fi_failures = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = (trial % 2 == 0) ? 3 : 4;
    ThreeLieAlgebra g = random_table(d, gen);
    bool lib = verify_fundamental_identity(g).ok;
    bool brute = oracle::fi_holds(oracle::bracket_tensor(g));
    REQUIRE(lib == brute);
    if (!lib) ++fi_failures;
  }
  REQUIRE(fi_failures > 0);  // the sample must exercise the failing branch

  // Rerouting one product onto a different basis vector breaks the identity;
  // sign flips alone do not, they land on an isomorphic table.
  ThreeLieAlgebra bad = tfx::a4_algebra();
  bad.table[triple_rank(1, 2, 3, 4)] = unit_vec(4, 1);
  bad.verified = false;
  REQUIRE_FALSE(verify_fundamental_identity(bad).ok);
  REQUIRE_FALSE(oracle::fi_holds(oracle::bracket_tensor(bad)));
}

TEST_CASE("bracket evaluation is trilinear and skew") {
  ThreeLieAlgebra g = tfx::a4_algebra();
  Vec x = {Rational(1), Rational(-2), Rational(0), Rational(3)};
  Vec y = {Rational(0), Rational(1), Rational(1), Rational(0)};
  Vec z = {Rational(2), Rational(0), Rational(-1), Rational(1)};
  Vec xy = g.bracket(x, y, z);
  Vec yx = g.bracket(y, x, z);
  for (std::size_t t = 0; t < 4; ++t) REQUIRE(xy[t] == -yx[t]);
  REQUIRE(vec_is_zero(g.bracket(x, x, z)));
  Vec sum = x;
  vec_add_scaled(sum, Rational(5, 2), y);
  Vec lhs = g.bracket(sum, y, z);
  REQUIRE(lhs == g.bracket(x, y, z));  // the y-multiple drops out
}

TEST_CASE("weighted operator relation accepts and rejects correctly") {
  ThreeLieAlgebra r1 = tfx::rank1_algebra();
  Matrix e11(3, 3);
  e11.at(0, 0) = 1;

  RotaBaxterStructure R;
  R.algebra = r1;
  R.T = e11;
  R.weight = 0;
  REQUIRE(verify_rota_baxter(R).ok);

  R.weight = 1;
  VerifyResult res = verify_rota_baxter(R);
  REQUIRE_FALSE(res.ok);
  REQUIRE(res.violations[0] == std::vector<int>{0, 1, 2});

  R.T = Matrix::identity(3);
  R.weight = -1;
  REQUIRE(verify_rota_baxter(R).ok);
  R.weight = 0;
  REQUIRE_FALSE(verify_rota_baxter(R).ok);
}

TEST_CASE("operator verdict matches the brute-force cube on random matrices") {
  std::mt19937 gen(20240812);
  ThreeLieAlgebra r1 = tfx::rank1_algebra();
  ThreeLieAlgebra a4 = tfx::a4_algebra();
  int agreements_ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const ThreeLieAlgebra& g = (trial % 2 == 0) ? r1 : a4;
    Rational w((trial % 5) - 2);
    RotaBaxterStructure R;
    R.algebra = g;
    R.T = random_matrix(g.dim, g.dim, -2, 2, gen);
    R.weight = w;
    bool lib = verify_rota_baxter(R).ok;
    REQUIRE(lib == oracle::rb_holds(g, R.T, w));
    if (lib) ++agreements_ok;
  }
  // Zero operators guarantee at least some passes; force one explicitly too.
  RotaBaxterStructure Z;
  Z.algebra = a4;
  Z.T = Matrix(4, 4);
  Z.weight = 3;
  REQUIRE(verify_rota_baxter(Z).ok);
  REQUIRE(oracle::rb_holds(a4, Z.T, Rational(3)));
  (void)agreements_ok;
}

TEST_CASE("exhaustive search output equals the brute-force passing set") {
  // d = 3, entries {-1, 0, 1}, both weights: the full 3^9 grid in both codes.
  ThreeLieAlgebra g = tfx::rank1_algebra();
  oracle::Tensor ten = oracle::bracket_tensor(g);
  std::vector<Rational> entries = {Rational(-1), Rational(0), Rational(1)};
  const long long ivals[3] = {-1, 0, 1};

  for (long long w : {0LL, -1LL}) {
    std::vector<Matrix> found = search_rb_operators(g, Rational(w), entries, 1u << 22);

    std::vector<Matrix> expected;
    std::vector<std::size_t> digit(9, 0);
    while (true) {
      Matrix T(3, 3);
      oracle::IMat cols(3, oracle::IVec(3, 0));
      for (std::size_t cell = 0; cell < 9; ++cell) {
        T.a[cell] = entries[digit[cell]];
        cols[cell % 3][cell / 3] = ivals[digit[cell]];
      }
      if (oracle::rb_holds(ten, cols, w)) expected.push_back(T);
      std::size_t pos = 9;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++digit[pos] < 3) {
          done = false;
          break;
        }
        digit[pos] = 0;
      }
      if (done) break;
    }

    REQUIRE(found.size() == expected.size());
    REQUIRE(found == expected);
    REQUIRE(found.size() > 1);  // zero and more
  }
}

TEST_CASE("search refuses over-cap jobs with the required size") {
  ThreeLieAlgebra g = tfx::rank1_algebra();
  std::vector<Rational> entries = {Rational(0), Rational(1)};
  try {
    search_rb_operators(g, Rational(0), entries, 100);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    REQUIRE(e.required == 512);  // 2^9
    REQUIRE(e.cap == 100);
  }
}

TEST_CASE("derived bracket closures") {
  ThreeLieAlgebra r1 = tfx::rank1_algebra();

  // T = 0: derived bracket is weight^2 times the original.
  RotaBaxterStructure R0 = tfx::with_operator(r1, Matrix(3, 3), Rational(-1));
  ThreeLieAlgebra der0 = derived_bracket(R0);
  REQUIRE(der0.table == r1.table);
  RotaBaxterStructure R0b = tfx::with_operator(r1, Matrix(3, 3), Rational(2));
  ThreeLieAlgebra der0b = derived_bracket(R0b);
  for (std::size_t tr = 0; tr < der0b.table.size(); ++tr)
    for (std::size_t t = 0; t < 3; ++t) REQUIRE(der0b.table[tr][t] == Rational(4) * r1.table[tr][t]);

  // T = id at weight -1: derived bracket equals the original.
  RotaBaxterStructure Rid = tfx::with_operator(r1, Matrix::identity(3), Rational(-1));
  REQUIRE(derived_bracket(Rid).table == r1.table);

  // Generic case: closure satisfies the fundamental identity and T stays
  // an operator of the same weight for the new bracket.
  Matrix e11(3, 3);
  e11.at(0, 0) = 1;
  RotaBaxterStructure Re = tfx::with_operator(r1, e11, Rational(0));
  ThreeLieAlgebra der = derived_bracket(Re);
  REQUIRE(verify_fundamental_identity(der).ok);
  RotaBaxterStructure onDer;
  onDer.algebra = der;
  onDer.T = e11;
  onDer.weight = 0;
  REQUIRE(verify_rota_baxter(onDer).ok);
  REQUIRE(oracle::rb_holds(der, e11, Rational(0)));
}

TEST_CASE("operator transforms") {
  ThreeLieAlgebra r1 = tfx::rank1_algebra();
  Matrix e11(3, 3);
  e11.at(0, 0) = 1;
  RotaBaxterStructure Re = tfx::with_operator(r1, e11, Rational(0));

  RotaBaxterStructure scaled = transform_operator(Re, OperatorTransform::Scale, Rational(5));
  REQUIRE(scaled.T == Rational(5) * e11);
  REQUIRE(scaled.weight == Rational(0));
  REQUIRE(scaled.verified);

  RotaBaxterStructure Rid = tfx::with_operator(r1, Matrix::identity(3), Rational(-1));
  RotaBaxterStructure comp = transform_operator(Rid, OperatorTransform::Companion);
  REQUIRE(comp.T == Matrix(3, 3));  // -w id - id = 0 at w = -1
  REQUIRE(comp.weight == Rational(-1));

  // psi = id + 2 E12 + 3 E13 is a bracket automorphism of the rank-1 table.
  Matrix psi = Matrix::identity(3);
  psi.at(0, 1) = 2;
  psi.at(0, 2) = 3;
  RotaBaxterStructure conj = transform_operator(Re, OperatorTransform::Conjugate, Rational(1), &psi);
  Matrix expected = e11;
  expected.at(0, 1) = 2;
  expected.at(0, 2) = 3;
  REQUIRE(conj.T == expected);
  REQUIRE(conj.verified);

  Matrix bad = Matrix::identity(3);
  bad.at(1, 1) = 2;  // scales the bracket image inconsistently
  REQUIRE_THROWS_AS(transform_operator(Re, OperatorTransform::Conjugate, Rational(1), &bad),
                    ContractViolation);
  Matrix sing(3, 3);
  REQUIRE_THROWS_AS(transform_operator(Re, OperatorTransform::Conjugate, Rational(1), &sing),
                    ContractViolation);
}

TEST_CASE("module identities hold for the adjoint action and fail when corrupted") {
  ThreeLieAlgebra a4 = tfx::a4_algebra();
  Representation adj = adjoint_representation(a4);
  REQUIRE(verify_representation(adj).ok);

  Representation broken = adj;
  broken.rho[0].at(0, 0) += 1;
  REQUIRE_FALSE(verify_representation(broken).ok);
}

TEST_CASE("module operator law holds for regular structures and fails when corrupted") {
  for (const auto& fx : tfx::suite()) {
    REQUIRE(verify_rb_representation(fx.rep).ok);
    REQUIRE(verify_representation(fx.rep.rep).ok);
  }
  for (const auto& fx : tfx::suite()) {
    if (fx.name != "rank1-e11") continue;
    RBRepresentation reg = fx.rep;
    reg.TM.at(1, 1) += 1;
    REQUIRE_FALSE(verify_rb_representation(reg).ok);
  }
}

TEST_CASE("semidirect closure carries the structure") {
  Matrix tm(1, 1);
  tm.at(0, 0) = 3;
  ThreeLieAlgebra r1 = tfx::rank1_algebra();
  RotaBaxterStructure Rid = tfx::with_operator(r1, Matrix::identity(3), Rational(-1));
  RBRepresentation small = tfx::trivial_rep(Rid, 1, tm);
  RotaBaxterStructure sd = semidirect_product(small);
  REQUIRE(sd.algebra.dim == 4);
  REQUIRE(verify_fundamental_identity(sd.algebra).ok);
  REQUIRE(verify_rota_baxter(sd).ok);
  REQUIRE(sd.algebra.table[triple_rank(0, 1, 2, 4)] == unit_vec(4, 0));

  // A non-trivial action: the regular module of the same structure.
  RotaBaxterStructure sd2 = semidirect_product(regular_representation(Rid));
  REQUIRE(sd2.algebra.dim == 6);
  REQUIRE(verify_fundamental_identity(sd2.algebra).ok);
  REQUIRE(verify_rota_baxter(sd2).ok);
  // [e1, e2, m3] = rho(e1, e2) m3 = [e1, e2, e3] pushed into the fiber.
  Vec v = sd2.algebra.table[triple_rank(0, 1, 5, 6)];
  REQUIRE(v[3] == Rational(1));
  v[3] = 0;
  REQUIRE(vec_is_zero(v));
}

TEST_CASE("direct sums act blockwise") {
  ThreeLieAlgebra r1 = tfx::rank1_algebra();
  RotaBaxterStructure Rid = tfx::with_operator(r1, Matrix::identity(3), Rational(-1));
  Matrix tm(1, 1);
  tm.at(0, 0) = 3;
  RBRepresentation a = regular_representation(Rid);
  RBRepresentation b = tfx::trivial_rep(Rid, 1, tm);
  RBRepresentation sum = direct_sum_representations(a, b);
  REQUIRE(sum.mdim() == 4);
  REQUIRE(verify_representation(sum.rep).ok);
  REQUIRE(verify_rb_representation(sum).ok);
  REQUIRE(sum.rep.rho[0].at(3, 3) == Rational(0));
  REQUIRE(sum.rep.rho[pair_rank(0, 1, 3)].at(0, 2) == a.rep.rho[pair_rank(0, 1, 3)].at(0, 2));

  RBRepresentation c = tfx::trivial_rep(tfx::with_operator(r1, Matrix(3, 3), Rational(-1)), 1, tm);
  REQUIRE_THROWS_AS(direct_sum_representations(a, c), ContractViolation);
}

TEST_CASE("derived module descends with the structure") {
  const auto fixtures = tfx::suite();
  for (const auto& fx : fixtures) {
    RBRepresentation der = derived_representation(fx.rep);
    REQUIRE(verify_fundamental_identity(der.rep.algebra).ok);
    REQUIRE(verify_representation(der.rep).ok);
    REQUIRE(verify_rota_baxter(der.rb).ok);
    REQUIRE(verify_rb_representation(der).ok);
  }
}
