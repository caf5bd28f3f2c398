#include "mhx/nilpotent.hpp"

#include "mhx/error.hpp"

namespace mhx {

bool is_nilpotent(const Matrix& a) {
    if (!a.is_square()) throw InputError("nilpotency test on non-square matrix");
    return a.pow(a.rows()).is_zero();
}

Matrix exp_nilpotent(const Matrix& a) {
    if (!is_nilpotent(a)) throw InputError("exp_nilpotent: matrix is not nilpotent");
    const std::size_t n = a.rows();
    Matrix acc = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    Rational fact(1);
    for (std::size_t k = 1; k <= n; ++k) {
        term = term * a;
        if (term.is_zero()) break;
        fact *= Rational(static_cast<long>(k));
        acc += Scalar(1 / fact) * term;
    }
    return acc;
}

Matrix log_unipotent(const Matrix& u) {
    if (!u.is_square()) throw InputError("log_unipotent: non-square matrix");
    const std::size_t n = u.rows();
    const Matrix x = u - Matrix::identity(n);
    if (!is_nilpotent(x)) throw InputError("log_unipotent: matrix is not unipotent");
    Matrix acc(n, n);
    Matrix term = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        term = term * x;
        if (term.is_zero()) break;
        const Rational coeff = Rational(k % 2 ? 1 : -1) / Rational(static_cast<long>(k));
        acc += Scalar(coeff) * term;
    }
    return acc;
}

}  // namespace mhx
