#pragma once

#include <optional>

#include "cychb/quiver.hpp"

namespace cychb {

/// Cyclic Higgs data in the trivialized local model: dimension vector
/// (p_0..p_{m-1}) and arrow matrices phi[i] of shape p_{i+1} x p_i over k[x].
struct CyclicHiggsData {
    int m = 0;
    Field field;
    std::vector<int> dims;
    std::vector<PMat> phi;

    void validate() const; // shape chain closes cyclically

    friend bool operator==(const CyclicHiggsData& a, const CyclicHiggsData& b);
    friend bool operator!=(const CyclicHiggsData& a, const CyclicHiggsData& b) { return !(a == b); }
};

/// Free k[x]-module of finite rank with a commuting t-action: a module over
/// S = k[x][t]/(c) whenever c(T) = 0.
struct SLattice {
    int rank = 0;
    PMat T;
};

/// Quiver data on the spectral side: modules F[i] with t-action T_i and
/// t-equivariant maps psi[i] : F_i -> F_{i+1}.
struct SpectralQuiverData {
    int m = 0;
    Field field;
    std::vector<SLattice> F;
    std::vector<PMat> psi;
};

/// phi[i-1] ... phi[i+1] phi[i] (indices mod m): the loop composite at v_i.
PMat loop_composite(const CyclicHiggsData& H, int i);

/// char poly of the loop composite: monic in t of degree p_i.
TPoly spectral_curve(const CyclicHiggsData& H, int i);

/// The full block-cyclic Higgs field on E = (+) E_i, as one square matrix.
PMat associated_matrix(const CyclicHiggsData& H);

struct CommonComponentReport {
    bool strict = false;                  // all t-stripped curves equal on the nose
    bool squarefree = false;              // squarefree parts of the stripped curves agree
    std::vector<int> q;                   // t-adic valuations q_i
    std::optional<TPoly> common;          // the common stripped curve, when strict
    std::optional<TPoly> common_squarefree;
};

/// Checks the constraint shape (C~ + q_0 Y_0, ..., C~ + q_{m-1} Y_0) on the
/// spectral curves: strips t-powers, compares exactly, then by squarefree part.
CommonComponentReport common_component_check(const CyclicHiggsData& H);

/// Matrix of the right-module action of a path: ordered product of the phi
/// factors, E_{source} -> E_{target}; idempotents act as the identity.
PMat path_action(const CyclicHiggsData& H, const Path& p);

/// F_i = (free of rank p_i, T_i = loop composite), psi_i = phi_i.
SpectralQuiverData to_spectral_module(const CyclicHiggsData& H);

/// psi_{i-1} ... psi_i = T_i for every i.
bool verify_loop_relation(const SpectralQuiverData& S);

/// c_i(T_i) = 0: the module is scheme-theoretically supported on its curve.
bool verify_support(const SpectralQuiverData& S, int i);
bool verify_support(const SpectralQuiverData& S);
bool matrix_annihilated_by(const PMat& T, const TPoly& c);

/// Inverse of to_spectral_module; throws when the loop relation fails.
CyclicHiggsData from_spectral_module(const SpectralQuiverData& S);

} // namespace cychb
