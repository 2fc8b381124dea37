use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::ComplexMatrix;
use crate::error::{Error, Result};

/// A two-level factor of the two-particle space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Subsystem {
    ParityA,
    SpinA,
    ParityB,
    SpinB,
}

impl Subsystem {
    pub const ALL: [Subsystem; 4] = [
        Subsystem::ParityA,
        Subsystem::SpinA,
        Subsystem::ParityB,
        Subsystem::SpinB,
    ];

    /// Short lowercase tag used in output column names.
    pub fn tag(self) -> &'static str {
        match self {
            Subsystem::ParityA => "pa",
            Subsystem::SpinA => "sa",
            Subsystem::ParityB => "pb",
            Subsystem::SpinB => "sb",
        }
    }
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Subsystem::ParityA => "(P)A",
            Subsystem::SpinA => "(S)A",
            Subsystem::ParityB => "(P)B",
            Subsystem::SpinB => "(S)B",
        };
        f.write_str(s)
    }
}

impl FromStr for Subsystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "(P)A" | "pa" | "PA" => Ok(Subsystem::ParityA),
            "(S)A" | "sa" | "SA" => Ok(Subsystem::SpinA),
            "(P)B" | "pb" | "PB" => Ok(Subsystem::ParityB),
            "(S)B" | "sb" | "SB" => Ok(Subsystem::SpinB),
            other => Err(Error::UnknownSubsystem(other.to_string())),
        }
    }
}

/// Ordered tensor factors of a density matrix.
///
/// Index convention is big-endian: the first factor is the most
/// significant digit, so for the four-qubit layout the basis index is
/// `8·pA + 4·sA + 2·pB + sB` with parity bit 0 ↔ `|+⟩` and spin bit
/// 0 ↔ `|z+⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemLayout {
    factor_dims: Vec<usize>,
    labels: Vec<Subsystem>,
}

impl SubsystemLayout {
    pub fn new(factor_dims: Vec<usize>, labels: Vec<Subsystem>) -> Result<Self> {
        if factor_dims.len() != labels.len() || factor_dims.is_empty() {
            return Err(Error::Dimension(format!(
                "{} factor dims for {} labels",
                factor_dims.len(),
                labels.len()
            )));
        }
        if factor_dims.contains(&0) {
            return Err(Error::Dimension("zero-dimensional factor".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Dimension(format!("duplicate subsystem {l}")));
            }
        }
        Ok(Self { factor_dims, labels })
    }

    /// `(P)A ⊗ (S)A ⊗ (P)B ⊗ (S)B`, all qubits.
    pub fn two_particle() -> Self {
        Self {
            factor_dims: vec![2; 4],
            labels: Subsystem::ALL.to_vec(),
        }
    }

    /// `(S)A ⊗ (S)B`, what is left after tracing out both parities.
    pub fn spin_spin() -> Self {
        Self {
            factor_dims: vec![2, 2],
            labels: vec![Subsystem::SpinA, Subsystem::SpinB],
        }
    }

    /// `(P)A ⊗ (S)A`, a single bispinor.
    pub fn single_particle() -> Self {
        Self {
            factor_dims: vec![2, 2],
            labels: vec![Subsystem::ParityA, Subsystem::SpinA],
        }
    }

    pub fn dim(&self) -> usize {
        self.factor_dims.iter().product()
    }

    pub fn labels(&self) -> &[Subsystem] {
        &self.labels
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.factor_dims
    }

    fn position(&self, s: Subsystem) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == s)
            .ok_or_else(|| Error::UnknownSubsystem(s.to_string()))
    }

    fn check_square(&self, rho: &ComplexMatrix) -> Result<()> {
        if !rho.is_square() || rho.rows() != self.dim() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix on a layout of dimension {}",
                rho.rows(),
                rho.cols(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// Splits a flat index into per-factor digits.
    fn digits(&self, mut index: usize, out: &mut [usize]) {
        for (slot, &d) in out.iter_mut().zip(&self.factor_dims).rev() {
            *slot = index % d;
            index /= d;
        }
    }

    fn compose(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.factor_dims)
            .fold(0, |acc, (&x, &d)| acc * d + x)
    }
}

/// Reduced matrix on the factors in `keep`, tracing out the rest.
///
/// The kept factors appear in layout order regardless of the order of
/// `keep`. An empty `keep` yields the 1×1 matrix `[Tr ρ]`.
pub fn partial_trace(
    rho: &ComplexMatrix,
    layout: &SubsystemLayout,
    keep: &[Subsystem],
) -> Result<ComplexMatrix> {
    layout.check_square(rho)?;
    let mut kept = vec![false; layout.labels.len()];
    for &s in keep {
        kept[layout.position(s)?] = true;
    }
    let kept_dims: Vec<usize> = layout
        .factor_dims
        .iter()
        .zip(&kept)
        .filter_map(|(&d, &k)| k.then_some(d))
        .collect();
    let traced_dims: Vec<usize> = layout
        .factor_dims
        .iter()
        .zip(&kept)
        .filter_map(|(&d, &k)| (!k).then_some(d))
        .collect();
    let out_dim: usize = kept_dims.iter().product();
    let traced_dim: usize = traced_dims.iter().product();

    let n = layout.labels.len();
    let mut out = ComplexMatrix::zeros(out_dim, out_dim);
    let mut row_digits = vec![0usize; n];
    let mut col_digits = vec![0usize; n];
    let mut kd = vec![0usize; kept_dims.len()];
    let mut td = vec![0usize; traced_dims.len()];

    let split = |mut index: usize, dims: &[usize], out: &mut [usize]| {
        for (slot, &d) in out.iter_mut().zip(dims).rev() {
            *slot = index % d;
            index /= d;
        }
    };
    let fill = |digits: &mut [usize], kd: &[usize], td: &[usize]| {
        let (mut ik, mut it) = (0, 0);
        for (f, slot) in digits.iter_mut().enumerate() {
            if kept[f] {
                *slot = kd[ik];
                ik += 1;
            } else {
                *slot = td[it];
                it += 1;
            }
        }
    };

    for i in 0..out_dim {
        for j in 0..out_dim {
            let mut acc = Complex64::new(0.0, 0.0);
            for t in 0..traced_dim {
                split(t, &traced_dims, &mut td);
                split(i, &kept_dims, &mut kd);
                fill(&mut row_digits, &kd, &td);
                split(j, &kept_dims, &mut kd);
                fill(&mut col_digits, &kd, &td);
                acc += rho[(layout.compose(&row_digits), layout.compose(&col_digits))];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// Transposes the indices of factor `target` only.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    layout: &SubsystemLayout,
    target: Subsystem,
) -> Result<ComplexMatrix> {
    layout.check_square(rho)?;
    let pos = layout.position(target)?;
    let dim = layout.dim();
    let n = layout.labels.len();
    let mut out = ComplexMatrix::zeros(dim, dim);
    let mut rd = vec![0usize; n];
    let mut cd = vec![0usize; n];
    for i in 0..dim {
        for j in 0..dim {
            layout.digits(i, &mut rd);
            layout.digits(j, &mut cd);
            std::mem::swap(&mut rd[pos], &mut cd[pos]);
            out[(i, j)] = rho[(layout.compose(&rd), layout.compose(&cd))];
        }
    }
    Ok(out)
}
