#pragma once

#include "mhx/matrix.hpp"

namespace mhx {

/// True iff a^n = 0 where n is the ambient dimension.
bool is_nilpotent(const Matrix& a);

/// exp of a nilpotent matrix as the exact finite series. Throws InputError
/// when a is not nilpotent.
Matrix exp_nilpotent(const Matrix& a);

/// log of a unipotent matrix (u - 1 nilpotent), exact finite series;
/// inverse of exp_nilpotent.
Matrix log_unipotent(const Matrix& u);

}  // namespace mhx
