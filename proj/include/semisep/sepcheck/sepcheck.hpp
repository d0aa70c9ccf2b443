#pragma once

#include "semisep/algstruct/constructions.hpp"
#include "semisep/certificate.hpp"
#include "semisep/verdict.hpp"

#include <optional>

namespace semisep::sepcheck {

using algstruct::AlgebraMap;
using algstruct::Bimodule;
using algstruct::CoalgebraMap;
using algstruct::Coring;
using algstruct::FDAlgebra;
using linalg::Matrix;
using linalg::Vector;

/// Restriction of scalars φ* along a ring map φ: R → S.
struct RingExtReport {
    Verdict semiseparable;
    Verdict separable;
    Verdict naturally_full;
    /// R-bimodule maps E: S → R (R.dim × S.dim), one per verdict that holds.
    std::optional<Matrix> E;
    std::optional<Matrix> E_separable;
    std::optional<Matrix> E_naturally_full;
    /// z = E(1_S).
    std::optional<Vector> z;
    bool z_unique = false;
    /// Rz with the splitting π(s) = E(s)z, the image φ(R), and λ: Rz → φ(R).
    std::optional<algstruct::CornerAlgebra> corner;
    std::optional<algstruct::Subalgebra> image;
    Certificates certificates;
};

/// Throws InputError unless φ is a unital algebra map.
RingExtReport ring_ext_analyze(const AlgebraMap& phi);

/// S as an R-bimodule through φ.
Bimodule extension_bimodule(const AlgebraMap& phi);

/// For ψ*: comodules over D → comodules over C given by cotensoring with C.
struct CoalgMapReport {
    Verdict semiseparable;
    Verdict separable;
    Verdict naturally_full;
    /// D-bicomodule maps χ: D → C (C.dim × D.dim).
    std::optional<Matrix> chi;
    std::optional<Matrix> chi_separable;
    std::optional<Matrix> chi_naturally_full;
    std::size_t bicomodule_maps = 0;
};

CoalgMapReport coalg_map_analyze(const CoalgebraMap& psi);

struct CoringReport {
    Verdict semicosplit;
    Verdict cosplit;
    Verdict natfull_G;
    Verdict eps_regular;
    Verdict coseparable;
    std::optional<Vector> z;            // semicosplit witness in C^R
    std::optional<Vector> z_cosplit;
    std::optional<Vector> z_natfull;
    std::optional<Matrix> alpha;        // R → C with ε∘α∘ε = ε
    std::optional<Matrix> cointegral;   // δ: C⊗_R C → R, R.dim × (C⊗_R C).dim
    bool equivalent_form_agrees = false;  // ε(z)ε(c) = ε(c) system has the same verdict
    bool regularity_agrees = false;       // eps_regular ⟺ semicosplit
};

CoringReport coring_analyze(const Coring& c);

struct CoringFactorization {
    Coring ideal;        // I = Im ε with Δ(i) = i⊗ẑ and ε_I the inclusion
    Matrix inclusion;    // I → R
    Matrix psi;          // C → I
    Matrix nu;           // I → C, i ↦ i·z
    Vector unit;         // ẑ = ε(z) in I-coordinates
    Certificates certificates;
};

/// Throws PreconditionError unless the report is semicosplit.
CoringFactorization coring_factorize(const Coring& c, const CoringReport& report);

/// The evaluation M*⊗_R M → S and the pieces it is built from.
struct Evaluation {
    algstruct::DualModule dual;
    algstruct::BalancedTensor tensor;  // M*⊗_R M as an (S,S)-bimodule
    Matrix ev;                         // S.dim × tensor dim
    Matrix ev_flat;                    // S.dim × (M*.dim · M.dim)
};

Evaluation evaluation(const Bimodule& m);

struct BimoduleReport {
    Verdict M_semisep;
    Verdict M_sep;
    Verdict ev_regular;
    Verdict ev_tensor_surjective;
    Verdict generator;
    Verdict fgp;
    /// Central tensor in tensor coordinates and as Σ c_{ab} f_a⊗m_b.
    std::optional<Vector> central_tensor;
    std::optional<Vector> central_tensor_flat;
    std::optional<Vector> separable_tensor;
    std::optional<Vector> separable_tensor_flat;
    std::optional<Vector> z;  // Σ f_i(m_i)
    bool thm_agrees = false;  // M_semisep ⟺ ev_regular ∧ ev_tensor_surjective
    bool cor_agrees = false;  // M_sep ⟺ M_semisep ∧ generator
    Certificates certificates;  // restriction to Sz
    algstruct::TraceReport trace;
    std::vector<Matrix> dual_maps;
};

BimoduleReport bimodule_analyze(const Bimodule& m);

/// M*⊗_R M with ε = ev and Δ(f⊗m) = Σᵢ (f⊗eᵢ)⊗_S(eᵢ*⊗m). Functionals are
/// coordinates in the basis of dual_module(m). Throws PreconditionError for
/// an invalid dual basis.
Coring comatrix_coring(const Bimodule& m, const std::vector<Vector>& elements, const std::vector<Vector>& functionals);
/// Uses the dual basis found by trace_ideal_and_fgp; throws PreconditionError unless fgp.
Coring comatrix_coring(const Bimodule& m);

struct EndoReport {
    FDAlgebra endo;    // End_S(M) as commuting matrices
    AlgebraMap phi;    // R → End_S(M)
    RingExtReport report;
    /// At fgp instances, the same extension built on M⊗_S M*.
    std::optional<AlgebraMap> phi_tensor;
    std::optional<RingExtReport> report_tensor;
    bool agrees = true;
};

EndoReport endo_ring_analyze(const Bimodule& m);

struct SweedlerReport {
    Coring coring;
    CoringReport report;
    Verdict separability_idempotent;
    std::optional<Vector> idempotent;  // in S⊗_R S coordinates
    bool sweed1_agrees = false;
    RingExtReport ring;
    Verdict e_condition;  // ∃ E bimodule with φE(1) = 1, solved on raw matrices
    bool sweed2_agrees = false;
};

/// S⊗_R S with Δ(s⊗s′) = s⊗1⊗s′ and ε the multiplication.
Coring build_sweedler_coring(const AlgebraMap& phi);
SweedlerReport sweedler_coring(const AlgebraMap& phi);

}  // namespace semisep::sepcheck
