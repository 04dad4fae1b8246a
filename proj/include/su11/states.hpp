#ifndef SU11_STATES_HPP
#define SU11_STATES_HPP

#include "su11/types.hpp"

namespace su11 {

/// Normalization constant of the m-deformed displaced vacuum,
/// 1F2([l+1/2],[l+1/2+m, l+1/2+m], |z|^2).
double nbgcs_norm(double z_abs, int m, const IrrepParams& p);

/// Normalization constant of the m-photon-added state,
/// 1F2([m+1],[1, l+1/2+m], |z|^2).
double pabgcs_norm(double z_abs, int m, const IrrepParams& p);

/// Deformed displaced vacuum in the Fock basis; cutoff auto-extended
/// (and trimmed back) until the relative tail mass is below tail_tol.
FockVector nbgcs(const StateSpec& spec, const TruncationPolicy& trunc = {});

/// Photon-added state: support starts at n = m, components below are
/// exactly zero.
FockVector pabgcs(const StateSpec& spec, const TruncationPolicy& trunc = {});

/// Dispatch on spec.family (BGCS builds the m = 0 deformed vacuum).
FockVector make_state(const StateSpec& spec, const TruncationPolicy& trunc = {});

/// Second construction path for the photon-added state: build the
/// deformed vacuum, apply raise_power(., m), renormalize. Must agree
/// with pabgcs() coefficientwise.
FockVector pabgcs_from_diagram(const StateSpec& spec, const TruncationPolicy& trunc = {});

/// <u|v> over the common representation; rejects mismatched lambda.
cplx overlap(const FockVector& u, const FockVector& v);

/// Closed-form overlap of two deformed displaced vacua (orders m1, m2).
cplx nbgcs_overlap_closed(cplx z1, int m1, cplx z2, int m2, const IrrepParams& p);

/// Closed-form overlap of two photon-added states of equal order m.
cplx pabgcs_overlap_closed(cplx z1, cplx z2, int m, const IrrepParams& p);

/// Closed-form overlap <z, m_bra || z, m_ket> at equal coherence
/// parameter but different photon-addition orders.
cplx pabgcs_overlap_unequal(cplx z, int m_bra, int m_ket, const IrrepParams& p);

/// || e^{-itH} |z> - e^{-it(l+1/2)} |z e^{-2it}> ||; temporal-stability
/// deviation, rounding-level for constructor states.
double evolve_check(const StateSpec& spec, double t, const TruncationPolicy& trunc = {});

}  // namespace su11

#endif
