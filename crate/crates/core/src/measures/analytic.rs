//! Closed-form boosted Bloch vectors for shared-momentum superpositions.
//!
//! For `Σ c_i u_{r_i}(p) ⊗ u_{s_i}(q)` the boosted density matrix is a sum
//! of products of 4×4 single-particle blocks `Ŝ|u_i⟩⟨u_j|Ŝ`. Each block
//! factors into a parity part and the spin dyad `Ξ_ij = |χ_i⟩⟨χ_j|`, so its
//! trace and its parity/spin Bloch components reduce to a handful of 2×2
//! traces. With `δ = [s_i = s_j]`, `h` the helicity sign, `α = Eδ + m(1−δ)`,
//! `β = E(1−δ) + mδ`, `N = n·σ`, `c = cosh(ω/2)`, `s = sinh(ω/2)`:
//!
//! - `μ_ij = [cosh ω · α Tr Ξ − sinh ω · δ h |k| Tr(NΞ)] / E`
//! - parity `x = [cosh ω · δ h |k| Tr Ξ − sinh ω · α Tr(NΞ)] / E`, `y = 0`,
//!   `z = β Tr Ξ / E`
//! - spin `a_k = [c² α Tr(σ_kΞ) − sinh ω · δ h |k| n_k Tr Ξ + s² α Tr(σ_k NΞN)] / E`
//!
//! and a qubit of particle A has Bloch component
//! `(1/ν) Σ c_i c_j* μ^B_ij a^A_ij`, with `ν = Σ c_i c_j* μ^A_ij μ^B_ij`.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::BlochVector;
use crate::error::{Error, Result};
use crate::kinematics::{helicity_spinor, BoostSpec, FourMomentum, Helicity};
use crate::states::TwoParticleState;
use crate::tensor::{pauli, ComplexMatrix, Subsystem};

/// Traces of one boosted single-particle block `Ŝ|u_i⟩⟨u_j|Ŝ`.
#[derive(Clone, Copy, Debug)]
pub struct BlockTraces {
    /// `Tr` of the block.
    pub mu: Complex64,
    /// `Tr[(σ_k ⊗ I) block]`.
    pub parity: [Complex64; 3],
    /// `Tr[(I ⊗ σ_k) block]`.
    pub spin: [Complex64; 3],
}

struct PairData {
    xi: ComplexMatrix,
    delta: f64,
    h: f64,
    alpha: f64,
    beta: f64,
    energy: f64,
    momentum: f64,
}

fn pair_data(k: &FourMomentum, si: Helicity, sj: Helicity) -> PairData {
    let xi = ComplexMatrix::outer(&helicity_spinor(k, si), &helicity_spinor(k, sj));
    let (energy, mass) = (k.energy(), k.mass());
    let delta = if si == sj { 1.0 } else { 0.0 };
    PairData {
        xi,
        delta,
        h: si.sign(),
        alpha: energy * delta + mass * (1.0 - delta),
        beta: energy * (1.0 - delta) + mass * delta,
        energy,
        momentum: k.magnitude(),
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Closed-form traces of `Ŝ(ω,n) u_{si}(k) u_{sj}(k)† Ŝ(ω,n)`.
pub fn block_traces(k: &FourMomentum, si: Helicity, sj: Helicity, b: &BoostSpec) -> BlockTraces {
    let d = pair_data(k, si, sj);
    let w = b.rapidity();
    let n = b.direction();
    let nn = pauli::dot(n);
    let (c2, s2) = ((w / 2.0).cosh().powi(2), (w / 2.0).sinh().powi(2));
    let t0 = d.xi.trace();
    let tn = nn.matmul(&d.xi).trace();
    let e = d.energy;
    let moving = d.delta * d.h * d.momentum;

    let mu = (t0 * (w.cosh() * d.alpha) - tn * (w.sinh() * moving)) / e;
    let parity = [
        (t0 * (w.cosh() * moving) - tn * (w.sinh() * d.alpha)) / e,
        re(0.0),
        t0 * (d.beta / e),
    ];
    let nxin = nn.matmul(&d.xi).matmul(&nn);
    let sigmas = pauli::all();
    let spin = std::array::from_fn(|k| {
        let s = &sigmas[k];
        (s.matmul(&d.xi).trace() * (c2 * d.alpha) - t0 * (w.sinh() * moving * n[k])
            + s.matmul(&nxin).trace() * (s2 * d.alpha))
            / e
    });
    BlockTraces { mu, parity, spin }
}

/// Spin part `Tr_P[Ŝ u_i u_j† Ŝ]` of one boosted block:
/// `c² (α/E) Ξ − (sinh ω/2) δ h (|k|/E) {Ξ, N} + s² (α/E) NΞN`.
pub fn boosted_spin_block(
    k: &FourMomentum,
    si: Helicity,
    sj: Helicity,
    b: &BoostSpec,
) -> ComplexMatrix {
    let d = pair_data(k, si, sj);
    let w = b.rapidity();
    let nn = pauli::dot(b.direction());
    let (c2, s2) = ((w / 2.0).cosh().powi(2), (w / 2.0).sinh().powi(2));
    let e = d.energy;
    let first = d.xi.scale_real(c2 * d.alpha / e);
    let middle = d
        .xi
        .anticommutator(&nn)
        .scale_real(0.5 * w.sinh() * d.delta * d.h * d.momentum / e);
    let last = d.xi.conjugate_by(&nn).scale_real(s2 * d.alpha / e);
    &(&first - &middle) + &last
}

/// Closed-form Bloch vectors of the boosted state and its `ν`.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticBloch {
    pub bloch: BTreeMap<Subsystem, BlochVector>,
    /// Trace of the boosted unit-trace density matrix before renormalising.
    pub nu: f64,
}

fn require_shared(st: &TwoParticleState) -> Result<(FourMomentum, FourMomentum)> {
    st.shared_momenta().ok_or_else(|| {
        Error::UnsupportedState(
            "closed form needs one momentum in slot A and one in slot B across all terms".into(),
        )
    })
}

pub fn analytic_boosted_bloch(st: &TwoParticleState, b: &BoostSpec) -> Result<AnalyticBloch> {
    let (p, q) = require_shared(st)?;
    let identity = BoostSpec::identity();
    let terms = st.terms();

    let mut nu_raw = Complex64::new(0.0, 0.0);
    let mut norm = Complex64::new(0.0, 0.0);
    let mut acc: BTreeMap<Subsystem, [Complex64; 3]> =
        Subsystem::ALL.iter().map(|&s| (s, [Complex64::new(0.0, 0.0); 3])).collect();

    for ti in terms {
        for tj in terms {
            let c = ti.coefficient * tj.coefficient.conj();
            let a = block_traces(&p, ti.a.helicity, tj.a.helicity, b);
            let bb = block_traces(&q, ti.b.helicity, tj.b.helicity, b);
            let a0 = block_traces(&p, ti.a.helicity, tj.a.helicity, &identity);
            let b0 = block_traces(&q, ti.b.helicity, tj.b.helicity, &identity);
            nu_raw += c * a.mu * bb.mu;
            norm += c * a0.mu * b0.mu;
            for k in 0..3 {
                acc.get_mut(&Subsystem::ParityA).unwrap()[k] += c * bb.mu * a.parity[k];
                acc.get_mut(&Subsystem::SpinA).unwrap()[k] += c * bb.mu * a.spin[k];
                acc.get_mut(&Subsystem::ParityB).unwrap()[k] += c * a.mu * bb.parity[k];
                acc.get_mut(&Subsystem::SpinB).unwrap()[k] += c * a.mu * bb.spin[k];
            }
        }
    }
    if !(nu_raw.re > 0.0) || !(norm.re > 0.0) {
        return Err(Error::DegenerateBoost { nu: nu_raw.re });
    }
    let bloch = acc
        .into_iter()
        .map(|(s, v)| {
            let [x, y, z] = v.map(|z| (z / nu_raw).re);
            (s, BlochVector::new(x, y, z))
        })
        .collect();
    Ok(AnalyticBloch {
        bloch,
        nu: nu_raw.re / norm.re,
    })
}

/// Closed-form boosted spin-spin state `(1/ν) Σ c_i c_j* ϱ^{S,A}_ij ⊗ ϱ^{S,B}_ij`.
pub fn analytic_boosted_spin_spin(st: &TwoParticleState, b: &BoostSpec) -> Result<ComplexMatrix> {
    let (p, q) = require_shared(st)?;
    let mut out = ComplexMatrix::zeros(4, 4);
    for ti in st.terms() {
        for tj in st.terms() {
            let c = ti.coefficient * tj.coefficient.conj();
            let a = boosted_spin_block(&p, ti.a.helicity, tj.a.helicity, b);
            let bb = boosted_spin_block(&q, ti.b.helicity, tj.b.helicity, b);
            out = &out + &a.kron(&bb).scale(c);
        }
    }
    let nu = out.trace().re;
    if !(nu > 0.0) {
        return Err(Error::DegenerateBoost { nu });
    }
    Ok(out.scale_real(1.0 / nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::{bispinor_boost, bispinor_u};
    use crate::measures::{bloch_vector, spin_spin_reduced, EntanglementReport};
    use crate::states::{boost_two_particle, make_psi1, make_psi2, make_psi3};
    use crate::tensor::{partial_trace, SubsystemLayout};

    fn brute_block(k: &FourMomentum, si: Helicity, sj: Helicity, b: &BoostSpec) -> ComplexMatrix {
        let s = bispinor_boost(b);
        let ui = bispinor_u(k, si).amplitudes;
        let uj = bispinor_u(k, sj).amplitudes;
        ComplexMatrix::outer(&s.mul_vec(&ui), &s.mul_vec(&uj))
    }

    #[test]
    fn block_traces_match_direct_single_particle_traces() {
        let layout = SubsystemLayout::single_particle();
        let hs = [Helicity::Positive, Helicity::Negative];
        for (w0, dir) in [(0.7, [0.0, 0.0, 1.0]), (1.3, [0.0, 0.0, -1.0]), (0.0, [0.0, 0.0, 1.0])] {
            let k = FourMomentum::from_rapidity(1.5, w0, dir).unwrap();
            for (w, th) in [(0.0, 0.0), (0.9, 0.4), (2.5, 2.0), (1.0, std::f64::consts::PI)] {
                let b = BoostSpec::in_xz_plane(w, th).unwrap();
                for si in hs {
                    for sj in hs {
                        let blk = brute_block(&k, si, sj, &b);
                        let t = block_traces(&k, si, sj, &b);
                        assert!((t.mu - blk.trace()).norm() < 1e-12);
                        let sigmas = pauli::all();
                        for (i, s) in sigmas.iter().enumerate() {
                            let want_p = s.kron(&ComplexMatrix::identity(2)).matmul(&blk).trace();
                            let want_s = ComplexMatrix::identity(2).kron(s).matmul(&blk).trace();
                            assert!((t.parity[i] - want_p).norm() < 1e-12, "parity {i}");
                            assert!((t.spin[i] - want_s).norm() < 1e-12, "spin {i}");
                        }
                        let spin =
                            partial_trace(&blk, &layout, &[Subsystem::SpinA]).unwrap();
                        assert!(boosted_spin_block(&k, si, sj, &b).max_abs_diff(&spin) < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn off_diagonal_z_dyad_is_invariant_along_z() {
        // Ξ = |z+⟩⟨z−| with n = e_z: c²Ξ + s²NΞN = (c² − s²)Ξ = Ξ, and the
        // anticommutator {Ξ, σ_z} vanishes.
        let k = FourMomentum::at_rest(1.0).unwrap();
        for w in [0.3, 1.0, 4.0] {
            let b = BoostSpec::in_xz_plane(w, 0.0).unwrap();
            let blk = boosted_spin_block(&k, Helicity::Positive, Helicity::Negative, &b);
            let rest = boosted_spin_block(&k, Helicity::Positive, Helicity::Negative, &BoostSpec::identity());
            assert!(blk.max_abs_diff(&rest) < 1e-12);
        }
    }

    #[test]
    fn unboosted_closed_form_matches_reductions() {
        for st in [make_psi2(1.0, 1.0).unwrap(), make_psi3(0.6, 2.0).unwrap()] {
            let rho = st.density_matrix().unwrap();
            let r = EntanglementReport::of(&rho, None).unwrap();
            let a = analytic_boosted_bloch(&st, &BoostSpec::identity()).unwrap();
            assert!((a.nu - 1.0).abs() < 1e-12);
            for s in Subsystem::ALL {
                assert!(a.bloch[&s].max_abs_diff(&r.bloch[&s]) < 1e-12, "{s}");
            }
        }
    }

    #[test]
    fn boosted_closed_form_matches_numeric_path() {
        let layout = SubsystemLayout::two_particle();
        for st in [make_psi2(1.0, 1.0).unwrap(), make_psi3(1.0, 1.0).unwrap()] {
            let rho = st.density_matrix().unwrap();
            for (w, th) in [(0.5, 0.3), (2.0, 1.2), (4.0, 2.9)] {
                let b = BoostSpec::in_xz_plane(w, th).unwrap();
                let boosted = boost_two_particle(&rho, &b).unwrap();
                let a = analytic_boosted_bloch(&st, &b).unwrap();
                assert!((a.nu - boosted.nu).abs() < 1e-12 * boosted.nu.max(1.0));
                for s in Subsystem::ALL {
                    let r = partial_trace(&boosted.rho, &layout, &[s]).unwrap();
                    let numeric = bloch_vector(&r).unwrap();
                    assert!(a.bloch[&s].max_abs_diff(&numeric) < 1e-10, "{s} at ({w},{th})");
                }
                assert_eq!(a.bloch[&Subsystem::ParityA].y, 0.0);
                assert_eq!(a.bloch[&Subsystem::ParityB].y, 0.0);
                let ss = analytic_boosted_spin_spin(&st, &b).unwrap();
                assert!(ss.max_abs_diff(&spin_spin_reduced(&boosted.rho).unwrap()) < 1e-10);
            }
        }
    }

    #[test]
    fn mixed_slot_momenta_are_unsupported() {
        let st = make_psi1(1.0, 1.0).unwrap();
        assert!(matches!(
            analytic_boosted_bloch(&st, &BoostSpec::identity()),
            Err(Error::UnsupportedState(_))
        ));
    }
}
