//! Two-particle bispinor superpositions and their boosts.
//!
//! A [`TwoParticleState`] is `Σ c_i |u(slotA_i)⟩ ⊗ |u(slotB_i)⟩`, each slot
//! carrying its own momentum and helicity, normalised by the actual norm of
//! the assembled vector. Per-slot momenta are needed because ψ₁ places
//! `u₁(p)` and `u₂(q)` in either slot.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kinematics::{
    bispinor_boost, bispinor_u, chiral_projector, BoostSpec, Chirality, FourMomentum, Helicity,
};
use crate::tensor::{ComplexMatrix, ComplexVector};

/// Dimension of the two-particle space.
pub const DIM: usize = 16;

/// Below this norm a superposition (or its projection) counts as zero.
pub const ZERO_NORM: f64 = 1e-14;

/// One particle's momentum and helicity inside a superposition term.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Slot {
    pub momentum: FourMomentum,
    pub helicity: Helicity,
}

impl Slot {
    pub fn new(momentum: FourMomentum, helicity: Helicity) -> Self {
        Self { momentum, helicity }
    }

    pub fn bispinor(&self) -> ComplexVector {
        bispinor_u(&self.momentum, self.helicity).amplitudes
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuperpositionTerm {
    pub coefficient: Complex64,
    pub a: Slot,
    pub b: Slot,
}

impl SuperpositionTerm {
    pub fn new(coefficient: Complex64, a: Slot, b: Slot) -> Self {
        Self { coefficient, a, b }
    }

    pub fn real(coefficient: f64, a: Slot, b: Slot) -> Self {
        Self::new(Complex64::new(coefficient, 0.0), a, b)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoParticleState {
    terms: Vec<SuperpositionTerm>,
    mass: f64,
}

impl TwoParticleState {
    /// All slot momenta must share one mass.
    pub fn new(terms: Vec<SuperpositionTerm>) -> Result<Self> {
        let first = terms.first().ok_or(Error::ZeroState { norm: 0.0 })?;
        let mass = first.a.momentum.mass();
        for t in &terms {
            for slot in [&t.a, &t.b] {
                let m = slot.momentum.mass();
                if (m - mass).abs() > 1e-12 * mass {
                    return Err(Error::InvalidParameter {
                        field: "mass",
                        reason: format!("slot mass {m} differs from {mass}"),
                    });
                }
            }
        }
        Ok(Self { terms, mass })
    }

    pub fn terms(&self) -> &[SuperpositionTerm] {
        &self.terms
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Unnormalised `Σ c_i u_A ⊗ u_B`.
    fn raw_vector(&self) -> ComplexVector {
        self.terms.iter().fold(ComplexVector::zeros(DIM), |acc, t| {
            acc.add(&t.a.bispinor().kron(&t.b.bispinor()).scale(t.coefficient))
        })
    }

    /// Unit-norm 16-component state vector.
    pub fn assemble_state_vector(&self) -> Result<ComplexVector> {
        let raw = self.raw_vector();
        let norm = raw.norm();
        if norm < ZERO_NORM {
            return Err(Error::ZeroState { norm });
        }
        Ok(raw.scale(Complex64::new(1.0 / norm, 0.0)))
    }

    /// `|Ψ⟩⟨Ψ|`.
    pub fn density_matrix(&self) -> Result<ComplexMatrix> {
        Ok(self.assemble_state_vector()?.projector())
    }

    /// Exchanges the slots of every term and negates the coefficients. For an
    /// exchange-antisymmetric state this is the same state.
    pub fn swapped(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| SuperpositionTerm::new(-t.coefficient, t.b, t.a))
                .collect(),
            mass: self.mass,
        }
    }

    /// `(p, q)` when every term puts the same momentum in slot A and the
    /// same momentum in slot B.
    pub fn shared_momenta(&self) -> Option<(FourMomentum, FourMomentum)> {
        let first = self.terms.first()?;
        let (p, q) = (first.a.momentum, first.b.momentum);
        self.terms
            .iter()
            .all(|t| t.a.momentum == p && t.b.momentum == q)
            .then_some((p, q))
    }
}

/// Which anti-symmetric configuration to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scenario {
    /// `(u₁(p)⊗u₂(q) − u₂(q)⊗u₁(p))/√2`, `p = −q`.
    Psi1,
    /// `(u₁(p)⊗u₁(q) − u₂(p)⊗u₂(q))/√2`, `p = −q`.
    Psi2,
    /// `(u₁(p)⊗u₂(p) − u₂(p)⊗u₁(p))/√2`.
    Psi3,
}

fn centre_of_momentum(omega0: f64, mass: f64) -> Result<(FourMomentum, FourMomentum)> {
    if !(omega0 >= 0.0) || !omega0.is_finite() {
        return Err(Error::InvalidParameter {
            field: "omega0",
            reason: format!("{omega0} is not a finite non-negative rapidity"),
        });
    }
    let p = FourMomentum::from_rapidity(mass, omega0, [0.0, 0.0, 1.0])?;
    Ok((p, p.reversed()))
}

fn antisymmetric_pair(first: (Slot, Slot), second: (Slot, Slot)) -> Result<TwoParticleState> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    TwoParticleState::new(vec![
        SuperpositionTerm::real(h, first.0, first.1),
        SuperpositionTerm::real(-h, second.0, second.1),
    ])
}

/// Spin-spin separable helicity superposition with swapped momenta.
pub fn make_psi1(omega0: f64, mass: f64) -> Result<TwoParticleState> {
    let (p, q) = centre_of_momentum(omega0, mass)?;
    let u1p = Slot::new(p, Helicity::Positive);
    let u2q = Slot::new(q, Helicity::Negative);
    antisymmetric_pair((u1p, u2q), (u2q, u1p))
}

/// Spin-spin entangled state with well-defined momenta `p` in A, `q` in B.
pub fn make_psi2(omega0: f64, mass: f64) -> Result<TwoParticleState> {
    let (p, q) = centre_of_momentum(omega0, mass)?;
    antisymmetric_pair(
        (Slot::new(p, Helicity::Positive), Slot::new(q, Helicity::Positive)),
        (Slot::new(p, Helicity::Negative), Slot::new(q, Helicity::Negative)),
    )
}

/// Helicity superposition of two particles sharing the momentum `p`.
pub fn make_psi3(omega0: f64, mass: f64) -> Result<TwoParticleState> {
    let (p, _) = centre_of_momentum(omega0, mass)?;
    let u1 = Slot::new(p, Helicity::Positive);
    let u2 = Slot::new(p, Helicity::Negative);
    antisymmetric_pair((u1, u2), (u2, u1))
}

pub fn make_scenario(which: Scenario, omega0: f64, mass: f64) -> Result<TwoParticleState> {
    match which {
        Scenario::Psi1 => make_psi1(omega0, mass),
        Scenario::Psi2 => make_psi2(omega0, mass),
        Scenario::Psi3 => make_psi3(omega0, mass),
    }
}

/// Chirality labels `(f, g)` for particles A and B.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChiralLabelPair {
    pub f: Chirality,
    pub g: Chirality,
}

impl ChiralLabelPair {
    pub fn new(f: Chirality, g: Chirality) -> Self {
        Self { f, g }
    }

    pub fn from_labels(f: u8, g: u8) -> Result<Self> {
        Ok(Self::new(Chirality::from_label(f)?, Chirality::from_label(g)?))
    }

    pub fn all() -> [ChiralLabelPair; 4] {
        use Chirality::{Minus, Plus};
        [
            Self::new(Plus, Plus),
            Self::new(Plus, Minus),
            Self::new(Minus, Plus),
            Self::new(Minus, Minus),
        ]
    }
}

/// Pure density matrix of `(P_f ⊗ P_g)|Ψ⟩`, renormalised.
pub fn chiral_project(st: &TwoParticleState, labels: ChiralLabelPair) -> Result<ComplexMatrix> {
    let projector = chiral_projector(labels.f).kron(&chiral_projector(labels.g));
    let projected = projector.mul_vec(&st.assemble_state_vector()?);
    let norm = projected.norm();
    if norm < ZERO_NORM {
        return Err(Error::Annihilated { norm });
    }
    Ok(projected.scale(Complex64::new(1.0 / norm, 0.0)).projector())
}

/// A boosted density matrix and the trace `ν` divided out of it.
#[derive(Clone, Debug)]
pub struct Boosted {
    pub rho: ComplexMatrix,
    pub nu: f64,
}

/// `Ŝ ⊗ Ŝ`.
pub fn two_particle_boost(b: &BoostSpec) -> ComplexMatrix {
    let s = bispinor_boost(b);
    s.kron(&s)
}

pub(crate) fn check_density(rho: &ComplexMatrix) -> Result<()> {
    if rho.rows() != DIM || !rho.is_square() {
        return Err(Error::Dimension(format!(
            "expected a {DIM}x{DIM} density matrix, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    let deviation = rho.hermiticity_error();
    if deviation > crate::tensor::HERMITIAN_TOLERANCE {
        return Err(Error::NotHermitian {
            deviation,
            tolerance: crate::tensor::HERMITIAN_TOLERANCE,
        });
    }
    let trace = rho.trace().re;
    if (trace - 1.0).abs() > 1e-8 {
        return Err(Error::NotNormalized { trace });
    }
    Ok(())
}

/// `ρ' = (Ŝ⊗Ŝ) ρ (Ŝ⊗Ŝ)† / ν` with `ν = Tr[(Ŝ⊗Ŝ) ρ (Ŝ⊗Ŝ)†]`.
pub fn boost_two_particle(rho: &ComplexMatrix, b: &BoostSpec) -> Result<Boosted> {
    check_density(rho)?;
    boost_with(rho, &two_particle_boost(b))
}

/// Same as [`boost_two_particle`] with an explicit 16×16 operator.
pub fn boost_with(rho: &ComplexMatrix, op: &ComplexMatrix) -> Result<Boosted> {
    let raw = rho.conjugate_by(op);
    let nu = raw.trace().re;
    if !(nu > ZERO_NORM) {
        return Err(Error::DegenerateBoost { nu });
    }
    Ok(Boosted {
        rho: raw.scale_real(1.0 / nu).hermitian_part(),
        nu,
    })
}

/// `Tr[(Ŝ⊗Ŝ)² ρ]`, equal to `ν` because `Ŝ` is Hermitian.
pub fn nu_squared_form(rho: &ComplexMatrix, b: &BoostSpec) -> f64 {
    let op = two_particle_boost(b);
    op.matmul(&op).matmul(rho).trace().re
}
