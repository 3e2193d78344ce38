#pragma once

#include "core/matrix_rep.hpp"

#include <map>
#include <string>

namespace liedist {

/// A fully described input: algebra, optional matrix realization, optional
/// Levi complement, named subgroup candidates, and the semidirect split
/// (the solvable part and the reductive complement).
struct Fixture {
  std::string name;
  LieAlgebraPtr algebra;
  MatrixRepPtr rep;  // null when the input has no realization
  Subspace levi;
  std::map<std::string, Subspace> subgroups;
  Subspace b_ideal;
  Subspace l_subalg;
};

/// Built-in catalog: heisenberg3, filiform4..filiform8, affine2, sl2,
/// sixdim, cgroup.
Fixture builtin_fixture(const std::string& name);
std::vector<std::string> builtin_fixture_names();
bool is_builtin_fixture(const std::string& name);

}  // namespace liedist
