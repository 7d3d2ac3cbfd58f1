#pragma once

#include "twobridge/intpoly.hpp"
#include "twobridge/ring.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace twobridge::qlift {

// Rational lift of Z[z]/(m): ascending mpq coefficients, trimmed, degree < deg m.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p);
bool is_zero(const QPoly& p);
QPoly lift(const RingElement& e);
QPoly reduce(QPoly raw, const IntPoly& modulus);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b, const IntPoly& modulus);
// Inverse in Q[z]/(modulus); nullopt when the element shares a factor with the modulus.
std::optional<QPoly> inverse(const QPoly& a, const IntPoly& modulus);
// Back to an integer representative; nullopt when any coefficient is non-integral.
std::optional<RingElement> to_elem(const QPoly& p, const RingPtr& ring);

} // namespace twobridge::qlift
