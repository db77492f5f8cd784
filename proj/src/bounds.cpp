#include "exclusion/bounds.hpp"

#include <cmath>

namespace exclusion {

double theta_min(int n) {
    if (n < 1) throw InvalidN("theta_min: n = " + std::to_string(n));
    return 2.0 * std::atan(std::pow(2.0, 1.0 / n) - 1.0);
}

double onset_sin(int n) { return std::sin(theta_min(n)); }

BoundTable bound_table_row(int n) {
    const double t = theta_min(n);
    return BoundTable{n, t, std::sin(t)};
}

Povm lift_measurement(const Povm& m_small, int n_small) {
    if (m_small.size() != (1 << n_small) || m_small.dim() != (1 << n_small))
        throw InvalidPovm("lift_measurement: expected " +
                          std::to_string(1 << n_small) + " effects of dim " +
                          std::to_string(1 << n_small));
    if (!povm_valid(m_small))
        throw InvalidPovm("lift_measurement: input effects are not a POVM");

    const int small_count = m_small.size();
    const ComplexMatrix half_id2 = 0.5 * ComplexMatrix::identity(2);
    Povm lifted;
    lifted.effects.resize(static_cast<std::size_t>(2 * small_count));
    for (int k = 0; k < small_count; ++k) {
        ComplexMatrix e = kron(half_id2, m_small.effects[static_cast<std::size_t>(k)]);
        // New leading bit 0 keeps index k, leading bit 1 lands at k + K.
        lifted.effects[static_cast<std::size_t>(k)] = e;
        lifted.effects[static_cast<std::size_t>(k + small_count)] = std::move(e);
    }
    return lifted;
}

}  // namespace exclusion
