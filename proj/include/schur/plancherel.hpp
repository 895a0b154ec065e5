#pragma once

#include <span>
#include <vector>

#include "schur/partition.hpp"
#include "schur/random.hpp"

namespace schur {

// Poissonized Plancherel: N ~ Poisson(θ), uniform permutation of N, HH growth with 0/1 inputs.
Partition plancherel_sample(double theta, RandomSource& src);

// Shape obtained by growing a 0/1 permutation-like matrix: column c carries its point on row rows[c].
Partition grow_point_configuration(std::span<const int> row_of_column, int row_count);

// Line i carries Poisson(a·b_i) points; points are ordered uniformly in time and grown column by column.
Partition mixed_plancherel_sample(double a, std::span<const double> b, RandomSource& src);

}  // namespace schur
