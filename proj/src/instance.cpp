#include "cychb/instance.hpp"

#include "cychb/divisor.hpp"

namespace cychb {

namespace {

CyclicHiggsData draw(Rng& rng, const InstanceSpec& spec) {
    CyclicHiggsData H;
    H.m = spec.m;
    H.field = spec.field;
    H.dims = spec.dims;
    for (int i = 0; i < spec.m; ++i) {
        const std::size_t rows = static_cast<std::size_t>(spec.dims[(i + 1) % spec.m]);
        const std::size_t cols = static_cast<std::size_t>(spec.dims[i]);
        PMat phi(spec.field, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) phi.at(r, c) = rng.next_poly(spec.field, Var::x, spec.deg_cap);
        H.phi.push_back(std::move(phi));
    }
    H.validate();
    return H;
}

bool passes(const CyclicHiggsData& H, InstanceFilter filter) {
    if (filter == InstanceFilter::None) return true;
    for (const auto& phi : H.phi) {
        if (phi.rows() != phi.cols()) {
            if (filter == InstanceFilter::InvertibleArrows) return false;
        } else if (phi.det().is_zero()) {
            return false;
        }
    }
    if (filter == InstanceFilter::InvertibleArrows) return true;

    for (int i = 1; i < H.m; ++i)
        if (H.dims[i] != H.dims[0]) return false;
    const TPoly c = spectral_curve(H, 0);
    if (c.t_valuation() != 0) return false;
    if (c == TPoly::t(H.field)) return false;
    if (smoothness_certificate(c).verdict != SmoothVerdict::Smooth) return false;
    if (irreducibility_certificate(c).verdict != IrredVerdict::Irreducible) return false;
    return true;
}

} // namespace

CyclicHiggsData random_instance(const InstanceSpec& spec) {
    if (spec.m < 1 || static_cast<int>(spec.dims.size()) != spec.m)
        throw std::invalid_argument("random_instance: need m positive dimensions");
    Rng rng(spec.seed);
    return draw(rng, spec);
}

std::optional<CyclicHiggsData> random_instance_filtered(const InstanceSpec& spec, InstanceFilter filter, int budget) {
    if (spec.m < 1 || static_cast<int>(spec.dims.size()) != spec.m)
        throw std::invalid_argument("random_instance_filtered: need m positive dimensions");
    Rng rng(spec.seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        CyclicHiggsData H = draw(rng, spec);
        if (passes(H, filter)) return H;
    }
    return std::nullopt;
}

} // namespace cychb
