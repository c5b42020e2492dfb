#pragma once

#include <string>
#include <vector>

namespace raidd {

// Dense embedding. Dimension is the length; providers report it implicitly
// through the arrays they return.
using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm(const Vector& a);

// Cosine similarity in [-1, 1]. Throws DataError on dimension mismatch or a
// zero-norm side; a zero embedding indicates a provider fault and must not be
// scored silently.
double cosine(const Vector& a, const Vector& b);

// True iff every component is finite.
bool all_finite(const Vector& a);

}  // namespace raidd
