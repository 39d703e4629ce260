#pragma once

#include <cstdint>
#include <random>

#include "affsurf/region.hpp"
#include "affsurf/tensor.hpp"
#include "affsurf/type_b.hpp"

namespace affsurf {

// Seedable portable generator: MT19937-64 with an explicit 53-bit mapping to
// doubles, so streams are identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// Linear map with |det| in [det_min, det_max]; positive_det restricts to the
// orientation-preserving component.
LinearMap2 sample_gl2(Rng& rng, double det_min = 0.1, double det_max = 10.0,
                      bool positive_det = false);

// Rank-2 structure of the requested signature class: a normal-form symbol
// with parameters drawn from a bounded box, moved by a random pullback.
ChristoffelA sample_type_a_rank2(SigClass sig, Rng& rng, bool apply_pullback = true);

// Structure with Ricci rank exactly 1 (normal-form family plus a random
// pullback).
ChristoffelA sample_type_a_rank1(Rng& rng);

// Generic symbol with entries in [-2, 2].
ChristoffelA sample_type_a_box(Rng& rng);

// Coefficient array in the z23b membership class (box sampling with
// rejection).
TypeBSymbol sample_z23b(Rng& rng);

// Gauge with b in [-2, 2] and c in [0.2, 5], optionally orientation
// reversing.
GaugeTransform sample_gauge(Rng& rng, bool allow_flip = false);

} // namespace affsurf
