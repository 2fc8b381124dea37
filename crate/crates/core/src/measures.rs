//! Entanglement measures on the 16-dimensional two-particle space.
//!
//! Global entanglement is the Meyer-Wallach average of the four single-qubit
//! linear entropies; spin-spin entanglement is the negativity of the state
//! left after tracing out both parity qubits.

pub mod analytic;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kinematics::BoostSpec;
use crate::states::{boost_two_particle, check_density, Boosted, TwoParticleState};
use crate::tensor::{
    hermitian_eigenvalues, partial_trace, partial_transpose, pauli, ComplexMatrix, Subsystem,
    SubsystemLayout, HERMITIAN_TOLERANCE,
};

/// Allowed deviation of `Tr ρ` from one.
pub const TRACE_TOLERANCE: f64 = 1e-8;

/// A density matrix with `Tr ρ² < 1 − PURITY_TOLERANCE` is mixed.
pub const PURITY_TOLERANCE: f64 = 1e-8;

/// Negativities in `[−NEGATIVITY_CLAMP, 0)` are eigensolver rounding and
/// reported as zero.
pub const NEGATIVITY_CLAMP: f64 = 1e-12;

fn check_normalized(rho: &ComplexMatrix) -> Result<()> {
    if !rho.is_square() {
        return Err(Error::Dimension(format!(
            "density matrix must be square, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    let deviation = rho.hermiticity_error();
    if deviation > HERMITIAN_TOLERANCE {
        return Err(Error::NotHermitian {
            deviation,
            tolerance: HERMITIAN_TOLERANCE,
        });
    }
    let trace = rho.trace().re;
    if (trace - 1.0).abs() > TRACE_TOLERANCE {
        return Err(Error::NotNormalized { trace });
    }
    Ok(())
}

/// `(d/(d−1))(1 − Tr ρ²)`, clamped to `[0, 1]`.
pub fn linear_entropy(rho: &ComplexMatrix) -> Result<f64> {
    check_normalized(rho)?;
    let d = rho.rows() as f64;
    if rho.rows() < 2 {
        return Err(Error::Dimension("linear entropy of a 1x1 matrix".into()));
    }
    Ok((d / (d - 1.0) * (1.0 - rho.purity())).clamp(0.0, 1.0))
}

/// Components `a_n = Tr[σ_n ρ]` of a single-qubit state.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn max_abs_diff(&self, other: &BlochVector) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn bloch_vector(rho: &ComplexMatrix) -> Result<BlochVector> {
    if rho.rows() != 2 || rho.cols() != 2 {
        return Err(Error::Dimension(format!(
            "Bloch vector of a {}x{} matrix",
            rho.rows(),
            rho.cols()
        )));
    }
    check_normalized(rho)?;
    let [sx, sy, sz] = pauli::all();
    let component = |s: &ComplexMatrix| s.matmul(rho).trace().re;
    Ok(BlochVector::new(component(&sx), component(&sy), component(&sz)))
}

/// Single-qubit reduced states of a 16×16 density matrix.
pub fn single_qubit_reductions(rho: &ComplexMatrix) -> Result<BTreeMap<Subsystem, ComplexMatrix>> {
    check_density(rho)?;
    let layout = SubsystemLayout::two_particle();
    Subsystem::ALL
        .iter()
        .map(|&s| Ok((s, partial_trace(rho, &layout, &[s])?)))
        .collect()
}

/// Global entanglement with the per-qubit data it was computed from.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GlobalEntanglement {
    pub value: f64,
    pub entropies: BTreeMap<Subsystem, f64>,
    pub bloch: BTreeMap<Subsystem, BlochVector>,
}

/// `1 − ¼ Σ|a|²` over the four single-qubit Bloch vectors.
pub fn global_from_bloch<'a>(bloch: impl IntoIterator<Item = &'a BlochVector>) -> f64 {
    1.0 - 0.25 * bloch.into_iter().map(BlochVector::norm_sqr).sum::<f64>()
}

/// Mean linear entropy of the four single-qubit reductions of a pure state.
pub fn global_entanglement(rho: &ComplexMatrix) -> Result<GlobalEntanglement> {
    check_density(rho)?;
    let purity = rho.purity();
    if purity < 1.0 - PURITY_TOLERANCE {
        return Err(Error::NotPure { purity });
    }
    let mut entropies = BTreeMap::new();
    let mut bloch = BTreeMap::new();
    for (s, reduced) in single_qubit_reductions(rho)? {
        entropies.insert(s, linear_entropy(&reduced)?);
        bloch.insert(s, bloch_vector(&reduced)?);
    }
    let value = entropies.values().sum::<f64>() / 4.0;
    Ok(GlobalEntanglement {
        value,
        entropies,
        bloch,
    })
}

/// Trace over both parity qubits.
pub fn spin_spin_reduced(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_density(rho)?;
    partial_trace(
        rho,
        &SubsystemLayout::two_particle(),
        &[Subsystem::SpinA, Subsystem::SpinB],
    )
}

/// `Σ|λ_i(ρ^{T_A})| − 1` for a two-qubit state.
pub fn negativity(rho_ss: &ComplexMatrix) -> Result<f64> {
    if rho_ss.rows() != 4 || rho_ss.cols() != 4 {
        return Err(Error::Dimension(format!(
            "negativity of a {}x{} matrix",
            rho_ss.rows(),
            rho_ss.cols()
        )));
    }
    check_normalized(rho_ss)?;
    let pt = partial_transpose(rho_ss, &SubsystemLayout::spin_spin(), Subsystem::SpinA)?;
    let n = hermitian_eigenvalues(&pt)?
        .iter()
        .map(|l| l.abs())
        .sum::<f64>()
        - 1.0;
    Ok(if (-NEGATIVITY_CLAMP..0.0).contains(&n) { 0.0 } else { n })
}

/// Everything measured on one (possibly boosted) pure state.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntanglementReport {
    pub global_eg: f64,
    pub negativity_ss: f64,
    pub bloch: BTreeMap<Subsystem, BlochVector>,
    pub nu: Option<f64>,
}

impl EntanglementReport {
    pub fn of(rho: &ComplexMatrix, nu: Option<f64>) -> Result<Self> {
        let global = global_entanglement(rho)?;
        let negativity_ss = negativity(&spin_spin_reduced(rho)?)?;
        Ok(Self {
            global_eg: global.value,
            negativity_ss,
            bloch: global.bloch,
            nu,
        })
    }

    pub fn of_boosted(boosted: &Boosted) -> Result<Self> {
        Self::of(&boosted.rho, Some(boosted.nu))
    }
}

/// Reports before and after a boost.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoostComparison {
    pub before: EntanglementReport,
    pub after: EntanglementReport,
}

impl BoostComparison {
    pub fn delta_eg(&self) -> f64 {
        self.after.global_eg - self.before.global_eg
    }

    pub fn delta_negativity(&self) -> f64 {
        self.after.negativity_ss - self.before.negativity_ss
    }

    pub fn nu(&self) -> f64 {
        self.after.nu.unwrap_or(1.0)
    }
}

/// Measures `rho` and its boost by `b`.
pub fn compare_boost(rho: &ComplexMatrix, b: &BoostSpec) -> Result<BoostComparison> {
    let before = EntanglementReport::of(rho, None)?;
    let after = EntanglementReport::of_boosted(&boost_two_particle(rho, b)?)?;
    Ok(BoostComparison { before, after })
}

/// `E_G(ρ') − E_G(ρ)`.
pub fn delta_global(st: &TwoParticleState, b: &BoostSpec) -> Result<f64> {
    Ok(compare_boost(&st.density_matrix()?, b)?.delta_eg())
}

/// `N(ρ'_SS) − N(ρ_SS)`.
pub fn delta_negativity(st: &TwoParticleState, b: &BoostSpec) -> Result<f64> {
    Ok(compare_boost(&st.density_matrix()?, b)?.delta_negativity())
}
