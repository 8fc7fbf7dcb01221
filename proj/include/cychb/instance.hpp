#pragma once

#include <random>

#include "cychb/higgs.hpp"

namespace cychb {

/// Deterministic RNG for instance generation. mt19937_64 with modulo-style
/// bounded draws keeps the stream identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next(std::uint64_t bound) { return bound ? eng_() % bound : 0; }
    std::int64_t next_signed(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    FieldElem next_elem(Field f) {
        if (f.is_rational()) return FieldElem::of(f, next_signed(-9, 9));
        return FieldElem::of(f, static_cast<std::int64_t>(next(f.characteristic())));
    }
    Poly next_poly(Field f, Var v, int deg_cap) {
        std::vector<FieldElem> c;
        for (int i = 0; i <= deg_cap; ++i) c.push_back(next_elem(f));
        return Poly::from_coeffs(f, v, std::move(c));
    }

  private:
    std::mt19937_64 eng_;
};

struct InstanceSpec {
    int m = 2;
    std::vector<int> dims;
    Field field = Field::prime(10007);
    int deg_cap = 2;
    std::uint64_t seed = 0;
};

/// Deterministic for a fixed spec; entries drawn uniformly within the caps.
CyclicHiggsData random_instance(const InstanceSpec& spec);

enum class InstanceFilter {
    None,
    InvertibleArrows,  // det(phi_i) != 0 for all i
    SmoothIrreducible, // equal dims, invertible arrows, smooth irreducible common curve
};

/// Redraws until the filter passes, up to `budget` attempts (continuing the
/// same deterministic stream); nullopt when the budget is exhausted.
std::optional<CyclicHiggsData> random_instance_filtered(const InstanceSpec& spec, InstanceFilter filter, int budget);

} // namespace cychb
