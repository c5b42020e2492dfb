#include "raidd/core/vector_ops.hpp"

#include <cmath>

#include "raidd/errors.hpp"

namespace raidd {

double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vector& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

double cosine(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DataError("cosine: dimension mismatch (" + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()) + ")");
    }
    const double na = norm(a);
    const double nb = norm(b);
    if (na == 0.0 || nb == 0.0) throw DataError("cosine: zero-norm vector");
    return dot(a, b) / (na * nb);
}

bool all_finite(const Vector& a) {
    for (double v : a) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

}  // namespace raidd
