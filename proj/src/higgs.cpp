#include "cychb/higgs.hpp"

namespace cychb {

void CyclicHiggsData::validate() const {
    if (m < 1) throw std::invalid_argument("CyclicHiggsData: m must be positive");
    if (static_cast<int>(dims.size()) != m || static_cast<int>(phi.size()) != m)
        throw std::invalid_argument("CyclicHiggsData: need m dimensions and m arrow matrices");
    for (int i = 0; i < m; ++i) {
        if (dims[i] < 1) throw std::invalid_argument("CyclicHiggsData: dimensions must be positive");
        const int rows = dims[(i + 1) % m], cols = dims[i];
        if (phi[i].rows() != static_cast<std::size_t>(rows) || phi[i].cols() != static_cast<std::size_t>(cols))
            throw std::invalid_argument("CyclicHiggsData: phi[" + std::to_string(i) + "] has the wrong shape");
        if (phi[i].field() != field) throw std::invalid_argument("CyclicHiggsData: mixed fields");
    }
}

bool operator==(const CyclicHiggsData& a, const CyclicHiggsData& b) {
    if (a.m != b.m || a.field != b.field || a.dims != b.dims) return false;
    for (int i = 0; i < a.m; ++i)
        if (a.phi[i] != b.phi[i]) return false;
    return true;
}

PMat loop_composite(const CyclicHiggsData& H, int i) {
    H.validate();
    const int m = H.m;
    i = ((i % m) + m) % m;
    PMat acc = PMat::identity(H.field, static_cast<std::size_t>(H.dims[i]));
    for (int step = 0; step < m; ++step) acc = H.phi[(i + step) % m] * acc;
    return acc;
}

TPoly spectral_curve(const CyclicHiggsData& H, int i) { return char_poly(loop_composite(H, i)); }

PMat associated_matrix(const CyclicHiggsData& H) {
    H.validate();
    std::size_t total = 0;
    std::vector<std::size_t> offset(H.m + 1, 0);
    for (int i = 0; i < H.m; ++i) {
        offset[i] = total;
        total += static_cast<std::size_t>(H.dims[i]);
    }
    offset[H.m] = total;
    PMat Phi(H.field, total, total);
    for (int i = 0; i < H.m; ++i) {
        const std::size_t r0 = offset[(i + 1) % H.m], c0 = offset[i];
        for (std::size_t r = 0; r < H.phi[i].rows(); ++r)
            for (std::size_t c = 0; c < H.phi[i].cols(); ++c) Phi.at(r0 + r, c0 + c) = H.phi[i].at(r, c);
    }
    return Phi;
}

CommonComponentReport common_component_check(const CyclicHiggsData& H) {
    H.validate();
    CommonComponentReport rep;
    std::vector<TPoly> stripped;
    for (int i = 0; i < H.m; ++i) {
        TPoly c = spectral_curve(H, i);
        const int v = c.t_valuation();
        rep.q.push_back(v);
        stripped.push_back(c.strip_t_power(v));
    }
    rep.strict = true;
    for (int i = 1; i < H.m; ++i)
        if (stripped[i] != stripped[0]) rep.strict = false;
    if (rep.strict) rep.common = stripped[0];

    std::vector<TPoly> sf;
    for (auto& c : stripped) sf.push_back(c.deg_t() == 0 ? c : squarefree_part_t(c));
    rep.squarefree = true;
    for (int i = 1; i < H.m; ++i)
        if (sf[i] != sf[0]) rep.squarefree = false;
    if (rep.squarefree) rep.common_squarefree = sf[0];
    return rep;
}

PMat path_action(const CyclicHiggsData& H, const Path& p) {
    H.validate();
    if (p.src < 0 || p.src >= H.m || p.len < 0) throw std::invalid_argument("path_action: bad path");
    PMat acc = PMat::identity(H.field, static_cast<std::size_t>(H.dims[p.src]));
    for (int step = 0; step < p.len; ++step) acc = H.phi[(p.src + step) % H.m] * acc;
    return acc;
}

SpectralQuiverData to_spectral_module(const CyclicHiggsData& H) {
    H.validate();
    SpectralQuiverData S;
    S.m = H.m;
    S.field = H.field;
    for (int i = 0; i < H.m; ++i) S.F.push_back(SLattice{H.dims[i], loop_composite(H, i)});
    S.psi = H.phi;
    return S;
}

bool verify_loop_relation(const SpectralQuiverData& S) {
    for (int i = 0; i < S.m; ++i) {
        PMat acc = PMat::identity(S.field, static_cast<std::size_t>(S.F[i].rank));
        for (int step = 0; step < S.m; ++step) acc = S.psi[(i + step) % S.m] * acc;
        if (acc != S.F[i].T) return false;
    }
    return true;
}

bool matrix_annihilated_by(const PMat& T, const TPoly& c) {
    if (T.rows() != T.cols()) throw std::invalid_argument("matrix_annihilated_by: non-square");
    PMat acc(T.field(), T.rows(), T.cols());
    PMat power = PMat::identity(T.field(), T.rows());
    for (int i = 0; i <= c.deg_t(); ++i) {
        acc = acc + power * c.tcoeff(i);
        if (i < c.deg_t()) power = power * T;
    }
    return acc.is_zero();
}

bool verify_support(const SpectralQuiverData& S, int i) {
    if (i < 0 || i >= S.m) throw std::invalid_argument("verify_support: bad index");
    return matrix_annihilated_by(S.F[i].T, char_poly(S.F[i].T));
}

bool verify_support(const SpectralQuiverData& S) {
    for (int i = 0; i < S.m; ++i)
        if (!verify_support(S, i)) return false;
    return true;
}

CyclicHiggsData from_spectral_module(const SpectralQuiverData& S) {
    if (!verify_loop_relation(S))
        throw std::invalid_argument("from_spectral_module: loop relation fails, the ideal I is not annihilated");
    CyclicHiggsData H;
    H.m = S.m;
    H.field = S.field;
    for (const auto& F : S.F) H.dims.push_back(F.rank);
    H.phi = S.psi;
    H.validate();
    return H;
}

} // namespace cychb
