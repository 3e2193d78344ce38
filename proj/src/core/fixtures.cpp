#include "core/fixtures.hpp"

#include "core/errors.hpp"

namespace liedist {

namespace {

using Brackets = std::vector<std::vector<ExactVector>>;

Brackets empty_brackets(std::size_t n) {
  return Brackets(n, std::vector<ExactVector>(n, ExactVector(n)));
}

// Sets [e_i, e_j] = sum coeffs and the antisymmetric counterpart.
void set_bracket(Brackets& c, std::size_t i, std::size_t j, std::size_t k, long long num,
                 long long den = 1) {
  c[i][j][k] = GaussianRational(Rational(num, den));
  c[j][i][k] = GaussianRational(Rational(-num, den));
}

ExactMatrix unit(std::size_t d, std::size_t r, std::size_t c) {
  ExactMatrix m(d, d);
  m(r, c) = GaussianRational(1);
  return m;
}

Subspace span_indices(std::size_t dim, std::initializer_list<std::size_t> idx) {
  std::vector<ExactVector> rows;
  for (std::size_t i : idx) {
    ExactVector v(dim);
    v[i] = GaussianRational(1);
    rows.push_back(std::move(v));
  }
  return Subspace::span_of(rows, dim);
}

Fixture make_heisenberg3() {
  Brackets c = empty_brackets(3);
  set_bracket(c, 0, 1, 2, 1);  // [e1, e2] = e3
  auto alg = std::make_shared<LieAlgebra>(std::vector<std::string>{"e1", "e2", "e3"}, c);
  std::vector<ExactMatrix> rho = {unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)};
  Fixture f;
  f.name = "heisenberg3";
  f.algebra = alg;
  f.rep = std::make_shared<MatrixRep>(alg, rho, true);
  f.levi = Subspace(3);
  f.subgroups["N"] = span_indices(3, {2});
  f.subgroups["E"] = Subspace(3);
  f.b_ideal = Subspace::full(3);
  f.l_subalg = Subspace(3);
  return f;
}

Fixture make_filiform(std::size_t n) {
  // Basis e1..en, [e1, e_j] = e_{j+1} for 2 <= j <= n-1. The coordinates
  // t_k of exp(sum t_k e_k) carry weights (1, 1, 2, ..., n-1).
  Brackets c = empty_brackets(n);
  for (std::size_t j = 1; j + 1 < n; ++j) set_bracket(c, 0, j, j + 1, 1);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  auto alg = std::make_shared<LieAlgebra>(names, c);

  // Lower-unipotent faithful realization: e1 is the shift on rows 2..n-1,
  // e_j (j >= 2) hits the first column.
  std::vector<ExactMatrix> rho;
  ExactMatrix shift(n, n);
  for (std::size_t r = 2; r < n; ++r) shift(r, r - 1) = GaussianRational(1);
  rho.push_back(shift);
  for (std::size_t j = 2; j <= n; ++j) rho.push_back(unit(n, j - 1, 0));

  Fixture f;
  f.name = "filiform" + std::to_string(n);
  f.algebra = alg;
  f.rep = std::make_shared<MatrixRep>(alg, rho, true);
  f.levi = Subspace(n);
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<ExactVector> rows;
    for (std::size_t i = k; i < n; ++i) {
      ExactVector v(n);
      v[i] = GaussianRational(1);
      rows.push_back(std::move(v));
    }
    f.subgroups["H" + std::to_string(k)] = Subspace::span_of(rows, n);
  }
  f.b_ideal = Subspace::full(n);
  f.l_subalg = Subspace(n);
  return f;
}

Fixture make_affine2() {
  Brackets c = empty_brackets(2);
  set_bracket(c, 0, 1, 1, 1);  // [x, y] = y
  auto alg = std::make_shared<LieAlgebra>(std::vector<std::string>{"x", "y"}, c);
  ExactMatrix rx(2, 2);
  rx(0, 0) = GaussianRational(1);
  std::vector<ExactMatrix> rho = {rx, unit(2, 0, 1)};
  Fixture f;
  f.name = "affine2";
  f.algebra = alg;
  f.rep = std::make_shared<MatrixRep>(alg, rho, true);
  f.levi = Subspace(2);
  f.subgroups["N"] = span_indices(2, {1});
  f.b_ideal = Subspace::full(2);
  f.l_subalg = Subspace(2);
  return f;
}

Fixture make_sl2() {
  Brackets c = empty_brackets(3);
  set_bracket(c, 0, 1, 1, 2);   // [h, e] = 2e
  set_bracket(c, 0, 2, 2, -2);  // [h, f] = -2f
  set_bracket(c, 1, 2, 0, 1);   // [e, f] = h
  auto alg = std::make_shared<LieAlgebra>(std::vector<std::string>{"h", "e", "f"}, c);
  ExactMatrix rh(2, 2);
  rh(0, 0) = GaussianRational(1);
  rh(1, 1) = GaussianRational(-1);
  std::vector<ExactMatrix> rho = {rh, unit(2, 0, 1), unit(2, 1, 0)};
  Fixture f;
  f.name = "sl2";
  f.algebra = alg;
  f.rep = std::make_shared<MatrixRep>(alg, rho, true);
  f.levi = Subspace::full(3);
  f.subgroups["0"] = Subspace(3);
  f.b_ideal = Subspace(3);
  f.l_subalg = Subspace::full(3);
  return f;
}

Fixture make_sixdim() {
  // Solvable, dim 6: a Heisenberg algebra in s1,s2,s3 acting on a second
  // Heisenberg algebra in t1,t2,t3 through the semisimple derivation
  // diag(1,-1,0) attached to s1. The lower central series stabilizes at
  // span(t1,t2,t3), and the quotient by it is again Heisenberg.
  Brackets c = empty_brackets(6);
  set_bracket(c, 0, 1, 2, 1);  // [s1, s2] = s3
  set_bracket(c, 0, 3, 3, 1);  // [s1, t1] = t1
  set_bracket(c, 0, 4, 4, -1); // [s1, t2] = -t2
  set_bracket(c, 3, 4, 5, 1);  // [t1, t2] = t3
  auto alg = std::make_shared<LieAlgebra>(
      std::vector<std::string>{"s1", "s2", "s3", "t1", "t2", "t3"}, c);

  std::size_t d = 6;
  ExactMatrix rs1(d, d);
  rs1(0, 0) = GaussianRational(1);
  rs1(2, 2) = GaussianRational(1);
  rs1(3, 4) = GaussianRational(1);  // Heisenberg block on coordinates 3..5
  std::vector<ExactMatrix> rho = {
      rs1,
      unit(d, 4, 5),  // s2
      unit(d, 3, 5),  // s3
      unit(d, 0, 1),  // t1
      unit(d, 1, 2),  // t2
      unit(d, 0, 2),  // t3
  };
  Fixture f;
  f.name = "sixdim";
  f.algebra = alg;
  f.rep = std::make_shared<MatrixRep>(alg, rho, true);
  f.levi = Subspace(6);
  f.subgroups["N"] = span_indices(6, {2, 3, 4, 5});
  f.subgroups["E"] = span_indices(6, {3, 4, 5});
  f.b_ideal = Subspace::full(6);
  f.l_subalg = Subspace(6);
  return f;
}

Fixture make_cgroup() {
  Brackets c = empty_brackets(1);
  auto alg = std::make_shared<LieAlgebra>(std::vector<std::string>{"z"}, c);
  ExactMatrix rz(2, 2);
  rz(0, 0) = GaussianRational(1);
  rz(1, 1) = GaussianRational::i();
  std::vector<ExactMatrix> rho = {rz};
  Fixture f;
  f.name = "cgroup";
  f.algebra = alg;
  f.rep = std::make_shared<MatrixRep>(alg, rho, true);
  f.levi = Subspace(1);
  f.subgroups["N"] = Subspace(1);
  f.b_ideal = Subspace::full(1);
  f.l_subalg = Subspace(1);
  return f;
}

}  // namespace

Fixture builtin_fixture(const std::string& name) {
  if (name == "heisenberg3") return make_heisenberg3();
  if (name == "affine2") return make_affine2();
  if (name == "sl2") return make_sl2();
  if (name == "sixdim") return make_sixdim();
  if (name == "cgroup") return make_cgroup();
  if (name.rfind("filiform", 0) == 0) {
    int n = std::stoi(name.substr(8));
    if (n >= 4 && n <= 8) return make_filiform(static_cast<std::size_t>(n));
  }
  throw config_error("unknown fixture '" + name + "'");
}

std::vector<std::string> builtin_fixture_names() {
  return {"heisenberg3", "filiform4", "filiform5", "filiform6", "filiform7",
          "filiform8",   "affine2",   "sl2",       "sixdim",    "cgroup"};
}

bool is_builtin_fixture(const std::string& name) {
  for (const auto& n : builtin_fixture_names())
    if (n == name) return true;
  return false;
}

}  // namespace liedist
