//! Single-particle relativistic kinematics: on-shell momenta, helicity
//! spinors, `u`/`v` bispinors, Lorentz boosts in the vector and bispinor
//! representations, and chiral projectors.
//!
//! Natural units, `c = ħ = 1`. Bispinors are stored in `(P) ⊗ (S)` order,
//! parity `|+⟩` first.
//!
//! # Sign convention
//!
//! [`bispinor_boost`] is `Ŝ(ω, n) = cosh(ω/2) I − sinh(ω/2) σ_x ⊗ n·σ`.
//! Acting on a rest bispinor it produces a bispinor moving along `−n`, so
//! the matching momentum map is the frame change to an observer moving
//! along `+n` with rapidity `ω`:
//!
//! ```text
//! E'  = cosh ω · E − sinh ω · (n·p)
//! p'  = p + [(cosh ω − 1)(n·p) − sinh ω · E] n
//! ```
//!
//! With this pairing a particle with rapidity `ω₀` along `+z` is brought to
//! rest by `ω = ω₀`, `n = +e_z`. [`lorentz_matrix`] is the only place the
//! sign is fixed.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{pauli, ComplexMatrix, ComplexVector};

/// Relative tolerance of the mass-shell condition.
pub const ON_SHELL_TOLERANCE: f64 = 1e-10;

const UNIT_TOLERANCE: f64 = 1e-12;

fn norm3(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// On-shell four-momentum `(E, p)` of a particle of mass `m`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourMomentum {
    mass: f64,
    energy: f64,
    p: [f64; 3],
}

impl FourMomentum {
    /// Checked constructor; `E² − |p|² = m²` to relative 1e-10 and `E ≥ m`.
    pub fn new(mass: f64, energy: f64, p: [f64; 3]) -> Result<Self> {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(Error::InvalidParameter {
                field: "mass",
                reason: format!("{mass} is not a positive finite number"),
            });
        }
        let shell = energy * energy - dot3(p, p);
        let rel = (shell - mass * mass).abs() / (energy * energy).max(mass * mass);
        if !energy.is_finite() || rel > ON_SHELL_TOLERANCE || energy < mass * (1.0 - 1e-12) {
            return Err(Error::InvalidParameter {
                field: "energy",
                reason: format!("(E={energy}, p={p:?}) is not on the m={mass} shell"),
            });
        }
        Ok(Self { mass, energy, p })
    }

    /// Energy from `E = √(|p|² + m²)`.
    pub fn on_shell(mass: f64, p: [f64; 3]) -> Result<Self> {
        Self::new(mass, (dot3(p, p) + mass * mass).sqrt(), p)
    }

    pub fn at_rest(mass: f64) -> Result<Self> {
        Self::on_shell(mass, [0.0; 3])
    }

    /// `E = m cosh ω₀`, `p = m sinh ω₀ · dir` for a unit-normalised `dir`.
    pub fn from_rapidity(mass: f64, rapidity: f64, dir: [f64; 3]) -> Result<Self> {
        let len = norm3(dir);
        if len == 0.0 || !len.is_finite() {
            return Err(Error::InvalidParameter {
                field: "direction",
                reason: "zero or non-finite direction".into(),
            });
        }
        let k = mass * rapidity.sinh() / len;
        Self::new(
            mass,
            mass * rapidity.cosh(),
            [k * dir[0], k * dir[1], k * dir[2]],
        )
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn p3(&self) -> [f64; 3] {
        self.p
    }

    pub fn magnitude(&self) -> f64 {
        norm3(self.p)
    }

    /// `−p`, same energy.
    pub fn reversed(&self) -> Self {
        Self {
            p: [-self.p[0], -self.p[1], -self.p[2]],
            ..*self
        }
    }

    /// `E² − |p|²`.
    pub fn minkowski_norm(&self) -> f64 {
        self.energy * self.energy - dot3(self.p, self.p)
    }

    /// Unit vector along `p`, or `None` at rest.
    pub fn direction(&self) -> Option<[f64; 3]> {
        let len = self.magnitude();
        (len > 0.0).then(|| [self.p[0] / len, self.p[1] / len, self.p[2] / len])
    }
}

/// Helicity label `s`: 1 is positive, 2 negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Helicity {
    Positive,
    Negative,
}

impl Helicity {
    pub fn from_label(s: u8) -> Result<Self> {
        match s {
            1 => Ok(Helicity::Positive),
            2 => Ok(Helicity::Negative),
            _ => Err(Error::InvalidParameter {
                field: "helicity",
                reason: format!("label {s} is not 1 or 2"),
            }),
        }
    }

    pub fn label(self) -> u8 {
        match self {
            Helicity::Positive => 1,
            Helicity::Negative => 2,
        }
    }

    /// Eigenvalue of `e_p·σ`, `3 − 2s`.
    pub fn sign(self) -> f64 {
        match self {
            Helicity::Positive => 1.0,
            Helicity::Negative => -1.0,
        }
    }
}

/// Chirality label `f`; `f = 0` is the `γ₅ = +1` eigenspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub fn from_label(f: u8) -> Result<Self> {
        match f {
            0 => Ok(Chirality::Plus),
            1 => Ok(Chirality::Minus),
            _ => Err(Error::InvalidParameter {
                field: "chirality",
                reason: format!("label {f} is not 0 or 1"),
            }),
        }
    }

    pub fn label(self) -> u8 {
        match self {
            Chirality::Plus => 0,
            Chirality::Minus => 1,
        }
    }

    /// `(−1)^f`.
    pub fn sign(self) -> f64 {
        match self {
            Chirality::Plus => 1.0,
            Chirality::Minus => -1.0,
        }
    }
}

/// Boost of rapidity `ω` along the unit vector `n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoostSpec {
    rapidity: f64,
    direction: [f64; 3],
}

impl BoostSpec {
    /// `direction` must already be a unit vector (to 1e-12).
    pub fn new(rapidity: f64, direction: [f64; 3]) -> Result<Self> {
        if !rapidity.is_finite() {
            return Err(Error::InvalidParameter {
                field: "rapidity",
                reason: format!("{rapidity} is not finite"),
            });
        }
        let len = norm3(direction);
        if (len - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::InvalidParameter {
                field: "direction",
                reason: format!("|n| = {len} is not 1"),
            });
        }
        Ok(Self { rapidity, direction })
    }

    /// Normalises any nonzero `direction`.
    pub fn along(rapidity: f64, direction: [f64; 3]) -> Result<Self> {
        let len = norm3(direction);
        if !(len > 0.0) || !len.is_finite() {
            return Err(Error::InvalidParameter {
                field: "direction",
                reason: "zero or non-finite direction".into(),
            });
        }
        Self::new(
            rapidity,
            [direction[0] / len, direction[1] / len, direction[2] / len],
        )
    }

    /// `n = sin θ e_x + cos θ e_z`.
    pub fn in_xz_plane(rapidity: f64, theta: f64) -> Result<Self> {
        Self::new(rapidity, [theta.sin(), 0.0, theta.cos()])
    }

    pub fn identity() -> Self {
        Self {
            rapidity: 0.0,
            direction: [0.0, 0.0, 1.0],
        }
    }

    pub fn rapidity(&self) -> f64 {
        self.rapidity
    }

    pub fn direction(&self) -> [f64; 3] {
        self.direction
    }

    /// Same axis, rapidity negated.
    pub fn inverse(&self) -> Self {
        Self {
            rapidity: -self.rapidity,
            ..*self
        }
    }

    /// Velocity `tanh ω` of the new frame.
    pub fn velocity(&self) -> f64 {
        self.rapidity.tanh()
    }
}

/// Eigenvector of `e_p·σ` with eigenvalue `+1` (s=1) or `−1` (s=2).
///
/// Built as `(I ± e_p·σ)|z±⟩`, choosing whichever basis column has the
/// larger image, then phase-fixed so the first nonzero component is real
/// and positive. At rest the spinor is `|z+⟩` or `|z−⟩` by label.
pub fn helicity_spinor(p: &FourMomentum, s: Helicity) -> ComplexVector {
    let Some(e) = p.direction() else {
        return match s {
            Helicity::Positive => ComplexVector::basis(2, 0),
            Helicity::Negative => ComplexVector::basis(2, 1),
        };
    };
    let lam = s.sign();
    // columns of I + λ e·σ
    let col_up = [
        Complex64::new(1.0 + lam * e[2], 0.0),
        Complex64::new(lam * e[0], lam * e[1]),
    ];
    let col_down = [
        Complex64::new(lam * e[0], -lam * e[1]),
        Complex64::new(1.0 - lam * e[2], 0.0),
    ];
    let n_up = col_up[0].norm_sqr() + col_up[1].norm_sqr();
    let n_down = col_down[0].norm_sqr() + col_down[1].norm_sqr();
    let (col, n) = if n_up >= n_down {
        (col_up, n_up)
    } else {
        (col_down, n_down)
    };
    let mut v = [col[0] / n.sqrt(), col[1] / n.sqrt()];
    fix_phase(&mut v);
    ComplexVector::new(v.to_vec()).expect("two components")
}

fn fix_phase(v: &mut [Complex64]) {
    if let Some(lead) = v.iter().copied().find(|z| z.norm() > 1e-12) {
        let phase = lead.conj() / lead.norm();
        for z in v.iter_mut() {
            *z *= phase;
        }
    }
}

/// A normalised four-component bispinor with the momentum and helicity it
/// was built from.
#[derive(Clone, Debug, PartialEq)]
pub struct Bispinor {
    pub amplitudes: ComplexVector,
    pub momentum: FourMomentum,
    pub helicity: Helicity,
}

impl Bispinor {
    pub fn projector(&self) -> ComplexMatrix {
        self.amplitudes.projector()
    }
}

/// Shared construction of `u` and `v`: `major` carries `(E+m)χ`, the other
/// parity state carries `p·σ χ`.
fn bispinor(p: &FourMomentum, s: Helicity, major: usize) -> Bispinor {
    let chi = helicity_spinor(p, s);
    let (e, m) = (p.energy(), p.mass());
    let p_sigma_chi = pauli::dot(p.p3()).mul_vec(&chi);
    let norm = 1.0 / (2.0 * e * (e + m)).sqrt();
    let mut amps = ComplexVector::zeros(4);
    for k in 0..2 {
        amps[2 * major + k] = chi[k] * ((e + m) * norm);
        amps[2 * (1 - major) + k] = p_sigma_chi[k] * norm;
    }
    Bispinor {
        amplitudes: amps,
        momentum: *p,
        helicity: s,
    }
}

/// Positive-energy bispinor
/// `[(E+m)|+⟩⊗χ_s + |−⟩⊗(p·σ χ_s)] / √(2E(E+m))`.
///
/// The lower component uses `p·σ χ_s` directly, so its sign is whatever
/// the helicity eigenvalue of `χ_s` makes it.
pub fn bispinor_u(p: &FourMomentum, s: Helicity) -> Bispinor {
    bispinor(p, s, 0)
}

/// Negative-energy bispinor, parity roles swapped relative to [`bispinor_u`].
pub fn bispinor_v(p: &FourMomentum, s: Helicity) -> Bispinor {
    bispinor(p, s, 1)
}

/// The 4×4 vector-representation matrix acting on `(E, p_x, p_y, p_z)`.
///
/// `Λ₀₀ = cosh ω`, `Λ_{0i} = Λ_{i0} = −sinh ω n_i`,
/// `Λ_{ij} = δ_ij + (cosh ω − 1) n_i n_j`. See the module docs for why the
/// off-diagonal sign is negative.
pub fn lorentz_matrix(b: &BoostSpec) -> [[f64; 4]; 4] {
    let (ch, sh) = (b.rapidity.cosh(), b.rapidity.sinh());
    let n = b.direction;
    let mut m = [[0.0; 4]; 4];
    m[0][0] = ch;
    for i in 0..3 {
        m[0][i + 1] = -sh * n[i];
        m[i + 1][0] = -sh * n[i];
        for j in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            m[i + 1][j + 1] = delta + (ch - 1.0) * n[i] * n[j];
        }
    }
    m
}

/// `Λ(ω, n) p`. The result is re-validated on the mass shell.
pub fn boost_four_vector(p: &FourMomentum, b: &BoostSpec) -> Result<FourMomentum> {
    let l = lorentz_matrix(b);
    let x = [p.energy(), p.p3()[0], p.p3()[1], p.p3()[2]];
    let mut y = [0.0; 4];
    for (i, yi) in y.iter_mut().enumerate() {
        *yi = (0..4).map(|j| l[i][j] * x[j]).sum();
    }
    // Restore the exact shell energy; rounding in y[0] is far below tolerance.
    let out = FourMomentum::new(p.mass(), y[0], [y[1], y[2], y[3]])?;
    FourMomentum::on_shell(out.mass(), out.p3())
}

/// `Ŝ(ω, n) = cosh(ω/2) I₄ − sinh(ω/2) σ_x^{(P)} ⊗ n·σ^{(S)}`.
///
/// Hermitian, unit determinant, not unitary for `ω ≠ 0`.
pub fn bispinor_boost(b: &BoostSpec) -> ComplexMatrix {
    let half = 0.5 * b.rapidity;
    let generator = pauli::sigma_x().kron(&pauli::dot(b.direction));
    &ComplexMatrix::identity(4).scale_real(half.cosh()) - &generator.scale_real(half.sinh())
}

/// `γ₅ = σ_x^{(P)} ⊗ I^{(S)}`.
pub fn gamma5() -> ComplexMatrix {
    pauli::sigma_x().kron(&pauli::identity())
}

/// `(I + (−1)^f γ₅) / 2`.
pub fn chiral_projector(f: Chirality) -> ComplexMatrix {
    (&ComplexMatrix::identity(4) + &gamma5().scale_real(f.sign())).scale_real(0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EZ: [f64; 3] = [0.0, 0.0, 1.0];

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn helicity_spinors_along_axes() {
        let pz = FourMomentum::from_rapidity(1.0, 1.0, EZ).unwrap();
        let chi = helicity_spinor(&pz, Helicity::Positive);
        assert!(chi.max_abs_diff(&ComplexVector::basis(2, 0)) < 1e-15);

        let pmz = pz.reversed();
        let chi = helicity_spinor(&pmz, Helicity::Positive);
        assert!(chi.max_abs_diff(&ComplexVector::basis(2, 1)) < 1e-15);

        let px = FourMomentum::from_rapidity(1.0, 0.5, [1.0, 0.0, 0.0]).unwrap();
        let chi = helicity_spinor(&px, Helicity::Positive);
        let s = 1.0 / 2f64.sqrt();
        assert!(chi.max_abs_diff(&ComplexVector::from_real(&[s, s])) < 1e-15);
    }

    #[test]
    fn helicity_spinor_at_rest_follows_label() {
        let rest = FourMomentum::at_rest(1.0).unwrap();
        assert_eq!(helicity_spinor(&rest, Helicity::Positive), ComplexVector::basis(2, 0));
        assert_eq!(helicity_spinor(&rest, Helicity::Negative), ComplexVector::basis(2, 1));
    }

    #[test]
    fn helicity_eigen_relation_for_oblique_momentum() {
        let p = FourMomentum::on_shell(1.3, [0.3, -0.7, 0.2]).unwrap();
        let e = p.direction().unwrap();
        for s in [Helicity::Positive, Helicity::Negative] {
            let chi = helicity_spinor(&p, s);
            let lhs = pauli::dot(e).mul_vec(&chi);
            assert!(lhs.max_abs_diff(&chi.scale(c(s.sign()))) < 1e-14);
            assert!(chi[0].im.abs() < 1e-15 && chi[0].re >= 0.0);
        }
    }

    #[test]
    fn rest_bispinors_are_parity_eigenstates() {
        let rest = FourMomentum::at_rest(2.0).unwrap();
        for s in [Helicity::Positive, Helicity::Negative] {
            let chi = helicity_spinor(&rest, s);
            let u = bispinor_u(&rest, s).amplitudes;
            let v = bispinor_v(&rest, s).amplitudes;
            assert!(u.max_abs_diff(&ComplexVector::basis(2, 0).kron(&chi)) < 1e-15);
            assert!(v.max_abs_diff(&ComplexVector::basis(2, 1).kron(&chi)) < 1e-15);
        }
    }

    #[test]
    fn u_is_orthonormal_at_unit_rapidity() {
        let p = FourMomentum::from_rapidity(1.0, 1.0, EZ).unwrap();
        let u = [
            bispinor_u(&p, Helicity::Positive).amplitudes,
            bispinor_u(&p, Helicity::Negative).amplitudes,
        ];
        for (i, a) in u.iter().enumerate() {
            for (j, b) in u.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((a.inner(b) - c(expected)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn u_and_v_at_opposite_momenta_are_orthogonal() {
        let p = FourMomentum::on_shell(1.0, [0.4, 0.1, -0.9]).unwrap();
        for s in [Helicity::Positive, Helicity::Negative] {
            for r in [Helicity::Positive, Helicity::Negative] {
                let u = bispinor_u(&p, s).amplitudes;
                let v = bispinor_v(&p.reversed(), r).amplitudes;
                assert!(u.inner(&v).norm() < 1e-14);
                assert!((bispinor_v(&p, s).amplitudes.norm() - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn completeness_pairs_u_at_p_with_v_at_minus_p() {
        let p = FourMomentum::on_shell(0.7, [0.4, 0.1, -0.9]).unwrap();
        let mut sum = ComplexMatrix::zeros(4, 4);
        for s in [Helicity::Positive, Helicity::Negative] {
            sum = &sum + &bispinor_u(&p, s).projector();
            sum = &sum + &bispinor_v(&p.reversed(), s).projector();
        }
        assert!(sum.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-12);

        // With v at the same momentum the cross terms σ_x ⊗ p·σ / E survive.
        let mut same = ComplexMatrix::zeros(4, 4);
        for s in [Helicity::Positive, Helicity::Negative] {
            same = &same + &bispinor_u(&p, s).projector();
            same = &same + &bispinor_v(&p, s).projector();
        }
        let cross = pauli::sigma_x()
            .kron(&pauli::dot(p.p3()))
            .scale_real(1.0 / p.energy());
        assert!((&same - &ComplexMatrix::identity(4)).max_abs_diff(&cross) < 1e-12);
    }

    #[test]
    fn identity_boost_leaves_momentum() {
        let p = FourMomentum::on_shell(1.0, [0.2, 0.3, 0.4]).unwrap();
        let q = boost_four_vector(&p, &BoostSpec::identity()).unwrap();
        assert!((q.energy() - p.energy()).abs() < 1e-15);
        assert_eq!(q.p3(), p.p3());
    }

    #[test]
    fn rest_particle_gains_rapidity_against_boost_axis() {
        let rest = FourMomentum::at_rest(1.0).unwrap();
        for w in [0.3, 1.0, 2.5] {
            let q = boost_four_vector(&rest, &BoostSpec::new(w, EZ).unwrap()).unwrap();
            assert!((q.energy() - w.cosh()).abs() < 1e-12);
            assert!((q.p3()[2] + w.sinh()).abs() < 1e-12);
            assert!(q.p3()[2].abs() - w.sinh() < 1e-12);
        }
    }

    #[test]
    fn boost_with_omega0_reaches_rest_frame() {
        let p = FourMomentum::from_rapidity(1.0, 1.0, EZ).unwrap();
        let q = boost_four_vector(&p, &BoostSpec::new(1.0, EZ).unwrap()).unwrap();
        assert!((q.energy() - 1.0).abs() < 1e-12);
        assert!(q.magnitude() < 1e-12);
    }

    #[test]
    fn boost_is_inverted_by_rapidity_negation() {
        let p = FourMomentum::on_shell(1.5, [0.2, -1.1, 0.7]).unwrap();
        let b = BoostSpec::along(1.7, [1.0, 2.0, -0.5]).unwrap();
        let back = boost_four_vector(&boost_four_vector(&p, &b).unwrap(), &b.inverse()).unwrap();
        for k in 0..3 {
            assert!((back.p3()[k] - p.p3()[k]).abs() < 1e-10);
        }
    }

    #[test]
    fn bispinor_boost_basic_identities() {
        assert!(bispinor_boost(&BoostSpec::identity()).max_abs_diff(&ComplexMatrix::identity(4)) < 1e-15);
        let b = BoostSpec::along(0.9, [0.3, 0.4, 0.5]).unwrap();
        let s = bispinor_boost(&b);
        let prod = s.matmul(&bispinor_boost(&b.inverse()));
        assert!(prod.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-14);
        assert!(s.is_hermitian(1e-15));
        let sts = s.adjoint().matmul(&s);
        assert!(sts.max_abs_diff(&ComplexMatrix::identity(4)) > 0.1);
    }

    #[test]
    fn boosted_rest_bispinor_matches_moving_bispinor() {
        let rest = FourMomentum::at_rest(1.0).unwrap();
        for (w, n) in [(1.0, EZ), (0.4, [1.0, 0.0, 0.0]), (2.2, [0.6, 0.0, 0.8])] {
            let b = BoostSpec::new(w, n).unwrap();
            let moved = boost_four_vector(&rest, &b).unwrap();
            for s in [Helicity::Positive, Helicity::Negative] {
                let boosted = bispinor_boost(&b)
                    .mul_vec(&bispinor_u(&rest, s).amplitudes)
                    .normalized()
                    .unwrap();
                // χ_s(0) is a helicity state of the boosted momentum only for
                // n = ±e_z; otherwise compare against the direct formula.
                let chi = helicity_spinor(&rest, s);
                let (e, m) = (moved.energy(), moved.mass());
                let lower = pauli::dot(moved.p3()).mul_vec(&chi);
                let norm = 1.0 / (2.0 * e * (e + m)).sqrt();
                let mut expected = ComplexVector::zeros(4);
                for k in 0..2 {
                    expected[k] = chi[k] * ((e + m) * norm);
                    expected[2 + k] = lower[k] * norm;
                }
                assert!(boosted.max_abs_diff(&expected) < 1e-12);
                if n == EZ {
                    // moved is along −z, where |z±⟩ has helicity ∓1
                    let relabelled = match s {
                        Helicity::Positive => Helicity::Negative,
                        Helicity::Negative => Helicity::Positive,
                    };
                    let u = bispinor_u(&moved, relabelled).amplitudes;
                    assert!(boosted.max_abs_diff(&u) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn chiral_projectors() {
        let p0 = chiral_projector(Chirality::Plus);
        let p1 = chiral_projector(Chirality::Minus);
        assert!((&p0 + &p1).max_abs_diff(&ComplexMatrix::identity(4)) < 1e-15);
        for p in [&p0, &p1] {
            assert!(p.matmul(p).max_abs_diff(p) < 1e-15);
            assert!((p.trace().re - 2.0).abs() < 1e-15);
        }
        let b = BoostSpec::along(3.1, [0.2, -0.4, 0.9]).unwrap();
        assert!(gamma5().commutator(&bispinor_boost(&b)).max_abs() < 1e-14);
    }

    #[test]
    fn projected_bispinor_is_gamma5_eigenstate() {
        let p = FourMomentum::on_shell(1.0, [0.3, 0.0, 0.8]).unwrap();
        let u = bispinor_u(&p, Helicity::Positive).amplitudes;
        for f in [Chirality::Plus, Chirality::Minus] {
            let pu = chiral_projector(f).mul_vec(&u);
            let g = gamma5().mul_vec(&pu);
            assert!(g.max_abs_diff(&pu.scale(c(f.sign()))) < 1e-15);
        }
        let sum = chiral_projector(Chirality::Plus)
            .mul_vec(&u)
            .add(&chiral_projector(Chirality::Minus).mul_vec(&u));
        assert!(sum.max_abs_diff(&u) < 1e-15);
    }

    #[test]
    fn constructors_validate() {
        assert!(FourMomentum::new(1.0, 1.0, [0.5, 0.0, 0.0]).is_err());
        assert!(FourMomentum::new(-1.0, 1.0, [0.0; 3]).is_err());
        assert!(BoostSpec::new(1.0, [1.0, 1.0, 0.0]).is_err());
        assert!(BoostSpec::along(1.0, [0.0; 3]).is_err());
        assert!(Helicity::from_label(3).is_err());
        assert!(Chirality::from_label(2).is_err());
    }
}
