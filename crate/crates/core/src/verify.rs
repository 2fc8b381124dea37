//! The acceptance checks run by `bispinor verify` and the `acceptance` test
//! target.
//!
//! Each check records what was measured, what was expected and the
//! tolerance it was judged against. The two-particle boost is injectable so
//! that a deliberately broken operator can be shown to trip the checks.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI};
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::kinematics::{
    bispinor_boost, bispinor_u, bispinor_v, gamma5, lorentz_matrix, BoostSpec, FourMomentum,
    Helicity,
};
use crate::measures::analytic::analytic_boosted_bloch;
use crate::measures::{
    bloch_vector, global_entanglement, global_from_bloch, negativity, spin_spin_reduced,
    EntanglementReport,
};
use crate::states::{
    boost_with, chiral_project, make_psi1, make_psi2, make_psi3, two_particle_boost, Boosted,
    ChiralLabelPair, TwoParticleState,
};
use crate::sweep::Grid;
use crate::tensor::{partial_trace, ComplexMatrix, ComplexVector, Subsystem, SubsystemLayout};

/// Seed for every randomised sample in the suite.
pub const SEED: u64 = 0x5eed_b15b;

/// How `measured` is judged against `expected` and `tolerance`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// `|measured − expected| ≤ tolerance`.
    Within,
    /// `measured < expected`.
    Below,
    /// `measured > expected`.
    Above,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub criterion: u8,
    pub name: String,
    pub measured: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub comparison: Comparison,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(
        criterion: u8,
        id: impl Into<String>,
        name: impl Into<String>,
        measured: f64,
        expected: f64,
        tolerance: f64,
        comparison: Comparison,
    ) -> Self {
        let passed = measured.is_finite()
            && match comparison {
                Comparison::Within => (measured - expected).abs() <= tolerance,
                Comparison::Below => measured < expected,
                Comparison::Above => measured > expected,
            };
        Self {
            id: id.into(),
            criterion,
            name: name.into(),
            measured,
            expected,
            tolerance,
            comparison,
            passed,
            detail: String::new(),
        }
    }

    /// A "max error below tolerance" check.
    fn error_below(criterion: u8, id: &str, name: &str, error: f64, tolerance: f64) -> Self {
        Self::new(criterion, id, name, error, 0.0, tolerance, Comparison::Within)
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    fn errored(criterion: u8, id: &str, name: &str, err: impl fmt::Display) -> Self {
        Self::new(criterion, id, name, f64::NAN, 0.0, 0.0, Comparison::Within)
            .with_detail(format!("error: {err}"))
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let rule = match self.comparison {
            Comparison::Within => format!("expected {:e} ± {:e}", self.expected, self.tolerance),
            Comparison::Below => format!("expected < {:e}", self.expected),
            Comparison::Above => format!("expected > {:e}", self.expected),
        };
        write!(
            f,
            "{status} [{}] {} ({}): measured {:e}, {rule}",
            self.criterion, self.id, self.name, self.measured
        )?;
        if !self.detail.is_empty() {
            write!(f, "; {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    fn new(checks: Vec<CheckResult>) -> Self {
        Self {
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn criterion(&self, n: u8) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(move |c| c.criterion == n)
    }

    pub fn criterion_passed(&self, n: u8) -> bool {
        self.criterion(n).all(|c| c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Builds the 16×16 two-particle boost operator for a boost.
pub type TwoParticleBoost = fn(&BoostSpec) -> ComplexMatrix;

/// `Ŝ(ω, n) ⊗ Ŝ(−ω, n)`: particle B boosted the wrong way. Only useful to
/// show that the checks notice.
pub fn corrupted_boost(b: &BoostSpec) -> ComplexMatrix {
    bispinor_boost(b).kron(&bispinor_boost(&b.inverse()))
}

const MASS: f64 = 1.0;
const OMEGA0: f64 = 1.0;

pub struct Verifier {
    boost: TwoParticleBoost,
}

impl Default for Verifier {
    fn default() -> Self {
        Self {
            boost: two_particle_boost,
        }
    }
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |m, v| if v.is_nan() || m.is_nan() { f64::NAN } else { m.max(v) })
}

fn random_direction(rng: &mut ChaCha8Rng) -> [f64; 3] {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..2.0 * PI);
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

fn random_momentum(rng: &mut ChaCha8Rng) -> FourMomentum {
    let mass = rng.gen_range(0.5..2.0);
    let rapidity = rng.gen_range(0.0..3.0);
    FourMomentum::from_rapidity(mass, rapidity, random_direction(rng)).expect("valid momentum")
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Runs every check with `boost` in place of `Ŝ ⊗ Ŝ`.
    pub fn with_boost(boost: TwoParticleBoost) -> Self {
        Self { boost }
    }

    fn boost(&self, rho: &ComplexMatrix, b: &BoostSpec) -> Result<Boosted> {
        boost_with(rho, &(self.boost)(b))
    }

    fn boosted_report(&self, rho: &ComplexMatrix, b: &BoostSpec) -> Result<EntanglementReport> {
        EntanglementReport::of_boosted(&self.boost(rho, b)?)
    }

    /// `(E_G, N)` along an ω grid at fixed θ.
    fn omega_scan(
        &self,
        st: &TwoParticleState,
        omegas: &[f64],
        theta: f64,
    ) -> Result<(Vec<f64>, Vec<f64>)> {
        let rho = st.density_matrix()?;
        let mut eg = Vec::with_capacity(omegas.len());
        let mut n = Vec::with_capacity(omegas.len());
        for &w in omegas {
            let r = self.boosted_report(&rho, &BoostSpec::in_xz_plane(w, theta)?)?;
            eg.push(r.global_eg);
            n.push(r.negativity_ss);
        }
        Ok((eg, n))
    }

    pub fn run(&self) -> VerificationReport {
        let mut checks = Vec::new();
        checks.extend(self.psi1_baseline());
        checks.extend(self.psi1_separability());
        checks.extend(self.psi1_parallel_invariance());
        checks.extend(self.psi1_saturation());
        checks.extend(self.psi2_angle_independence());
        checks.extend(self.psi2_degradation());
        checks.extend(self.psi3_rest_frame());
        checks.extend(self.chiral_invariance());
        checks.extend(self.analytic_oracle());
        checks.extend(self.algebra());
        VerificationReport::new(checks)
    }

    /// Criterion 1.
    pub fn psi1_baseline(&self) -> Vec<CheckResult> {
        let (id, name) = ("psi1-baseline", "unboosted psi1 global entanglement");
        let run = || -> Result<f64> {
            Ok(global_entanglement(&make_psi1(OMEGA0, MASS)?.density_matrix()?)?.value)
        };
        vec![match run() {
            Ok(v) => CheckResult::new(1, id, name, v, 0.5, 1e-10, Comparison::Within),
            Err(e) => CheckResult::errored(1, id, name, e),
        }]
    }

    /// Criterion 2.
    pub fn psi1_separability(&self) -> Vec<CheckResult> {
        let (id, name) = ("psi1-spin-separability", "max |N| of psi1 over 20x10 grid");
        let run = || -> Result<f64> {
            let rho = make_psi1(OMEGA0, MASS)?.density_matrix()?;
            let mut worst: f64 = 0.0;
            for w in Grid::new(0.0, 5.0, 20).points() {
                for t in Grid::new(0.0, FRAC_PI_2, 10).points() {
                    let n = self.boosted_report(&rho, &BoostSpec::in_xz_plane(w, t)?)?.negativity_ss;
                    worst = worst.max(n.abs());
                }
            }
            Ok(worst)
        };
        vec![match run() {
            Ok(v) => CheckResult::error_below(2, id, name, v, 1e-10),
            Err(e) => CheckResult::errored(2, id, name, e),
        }]
    }

    /// Criterion 3.
    pub fn psi1_parallel_invariance(&self) -> Vec<CheckResult> {
        let (id, name) = ("psi1-parallel-invariance", "max |dE_G| of psi1 for theta = 0");
        let run = || -> Result<f64> {
            let st = make_psi1(OMEGA0, MASS)?;
            let base = global_entanglement(&st.density_matrix()?)?.value;
            let (eg, _) = self.omega_scan(&st, &Grid::new(0.0, 5.0, 21).points(), 0.0)?;
            Ok(max_of(eg.iter().map(|e| (e - base).abs())))
        };
        vec![match run() {
            Ok(v) => CheckResult::error_below(3, id, name, v, 1e-10),
            Err(e) => CheckResult::errored(3, id, name, e),
        }]
    }

    /// Criterion 4.
    pub fn psi1_saturation(&self) -> Vec<CheckResult> {
        let run = || -> Result<(f64, f64)> {
            let st = make_psi1(OMEGA0, MASS)?;
            let rho = st.density_matrix()?;
            let top = self
                .boosted_report(&rho, &BoostSpec::in_xz_plane(10.0, FRAC_PI_2)?)?
                .global_eg;
            let omegas = Grid::new(0.0, 10.0, 41).points();
            let mut worst_drop: f64 = 0.0;
            for t in Grid::new(0.0, FRAC_PI_2, 10).points() {
                let (eg, _) = self.omega_scan(&st, &omegas, t)?;
                for w in eg.windows(2) {
                    worst_drop = worst_drop.max(w[0] - w[1]);
                }
            }
            Ok((top, worst_drop))
        };
        match run() {
            Ok((top, drop)) => vec![
                CheckResult::new(
                    4,
                    "psi1-saturation",
                    "psi1 E_G at omega = 10, theta = pi/2",
                    top,
                    0.99,
                    0.0,
                    Comparison::Above,
                ),
                CheckResult::error_below(
                    4,
                    "psi1-monotone",
                    "largest decrease of psi1 E_G between adjacent omega grid points",
                    drop,
                    1e-10,
                )
                .with_detail("omega 0:10:41 at 10 angles in [0, pi/2]; decreases count, increases are 0"),
            ],
            Err(e) => vec![CheckResult::errored(4, "psi1-saturation", "psi1 saturation", e)],
        }
    }

    /// Criterion 5.
    pub fn psi2_angle_independence(&self) -> Vec<CheckResult> {
        let run = || -> Result<(f64, f64)> {
            let st = make_psi2(OMEGA0, MASS)?;
            let omegas = Grid::new(0.0, 5.0, 21).points();
            let (eg, n): (Vec<_>, Vec<_>) = [0.0, FRAC_PI_8, FRAC_PI_4, FRAC_PI_2]
                .iter()
                .map(|&t| self.omega_scan(&st, &omegas, t))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .unzip();
            let spread = |curves: &[Vec<f64>]| {
                max_of((0..omegas.len()).map(|i| {
                    let hi = curves.iter().map(|c| c[i]).fold(f64::NEG_INFINITY, f64::max);
                    let lo = curves.iter().map(|c| c[i]).fold(f64::INFINITY, f64::min);
                    hi - lo
                }))
            };
            Ok((spread(&eg), spread(&n)))
        };
        match run() {
            Ok((eg, n)) => vec![
                CheckResult::error_below(5, "psi2-angle-independence-eg", "max spread of psi2 E_G across theta", eg, 1e-10),
                CheckResult::error_below(5, "psi2-angle-independence-negativity", "max spread of psi2 N across theta", n, 1e-10),
            ],
            Err(e) => vec![CheckResult::errored(5, "psi2-angle-independence", "psi2 angle independence", e)],
        }
    }

    /// Criterion 6.
    pub fn psi2_degradation(&self) -> Vec<CheckResult> {
        let run = || -> Result<(f64, f64, f64)> {
            let st = make_psi2(OMEGA0, MASS)?;
            let omegas = Grid::new(0.0, 10.0, 41).points();
            let (_, n) = self.omega_scan(&st, &omegas, FRAC_PI_4)?;
            let rise = max_of(n.windows(2).map(|w| w[1] - w[0]));
            Ok((n[0], rise, *n.last().unwrap()))
        };
        let sech2 = 1.0 / OMEGA0.cosh().powi(2);
        match run() {
            Ok((n0, rise, n10)) => vec![
                CheckResult::new(6, "psi2-initial-negativity", "psi2 N at omega = 0 vs sech^2(1)", n0, sech2, 1e-9, Comparison::Within),
                CheckResult::error_below(6, "psi2-nonincreasing", "largest increase of psi2 N between adjacent omega grid points", rise.max(0.0), 1e-10)
                    .with_detail("omega 0:10:41, theta = pi/4"),
                CheckResult::new(6, "psi2-degraded", "psi2 N at omega = 10", n10, 0.01, 0.0, Comparison::Below),
            ],
            Err(e) => vec![CheckResult::errored(6, "psi2-degradation", "psi2 degradation", e)],
        }
    }

    /// Criterion 7.
    pub fn psi3_rest_frame(&self) -> Vec<CheckResult> {
        let run = || -> Result<(f64, f64, f64, f64)> {
            let st = make_psi3(OMEGA0, MASS)?;
            let omegas = Grid::new(0.0, 3.0, 61).points();
            let (eg, n) = self.omega_scan(&st, &omegas, 0.0)?;
            let argmin = (0..eg.len())
                .min_by(|&i, &j| eg[i].total_cmp(&eg[j]))
                .expect("nonempty grid");
            let at = 20; // ω = 1.00
            let neighbours = n[at - 1].max(n[at + 1]);
            Ok((omegas[argmin], eg[at], n[at], neighbours - n[at]))
        };
        match run() {
            Ok((w, eg, n, excess)) => vec![
                CheckResult::new(7, "psi3-eg-argmin", "grid argmin of psi3 E_G over omega 0:3 step 0.05", w, 1.0, 1e-12, Comparison::Within),
                CheckResult::new(7, "psi3-rest-eg", "psi3 E_G at omega = 1", eg, 0.5, 1e-9, Comparison::Within),
                CheckResult::new(7, "psi3-rest-negativity", "psi3 N at omega = 1", n, 1.0, 1e-9, Comparison::Within),
                CheckResult::new(7, "psi3-negativity-local-max", "max neighbour N minus N at omega = 1", excess, 0.0, 0.0, Comparison::Below),
            ],
            Err(e) => vec![CheckResult::errored(7, "psi3-rest-frame", "psi3 rest frame", e)],
        }
    }

    /// Criterion 8, one check per (state, f, g).
    pub fn chiral_invariance(&self) -> Vec<CheckResult> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let samples: Vec<(f64, f64)> = (0..25)
            .map(|_| (rng.gen_range(0.0..=5.0), rng.gen_range(0.0..=PI)))
            .collect();
        let mut out = Vec::new();
        for (label, make) in [("psi2", make_psi2 as fn(f64, f64) -> Result<TwoParticleState>), ("psi3", make_psi3)] {
            for labels in ChiralLabelPair::all() {
                let id = format!(
                    "chiral-invariance/{label}/f{}g{}",
                    labels.f.label(),
                    labels.g.label()
                );
                let name = format!("max ||rho' - rho||_F for chiral-projected {label}");
                let run = || -> Result<(f64, (f64, f64))> {
                    let rho = chiral_project(&make(OMEGA0, MASS)?, labels)?;
                    let mut worst = (0.0, (0.0, 0.0));
                    for &(w, t) in &samples {
                        let d = self.boost(&rho, &BoostSpec::in_xz_plane(w, t)?)?.rho.distance(&rho);
                        if !(d <= worst.0) {
                            worst = (d, (w, t));
                        }
                    }
                    Ok(worst)
                };
                out.push(match run() {
                    Ok((d, (w, t))) => CheckResult::error_below(8, &id, &name, d, 1e-12)
                        .with_detail(format!("25 samples, worst at omega = {w:.4}, theta = {t:.4}")),
                    Err(e) => CheckResult::errored(8, &id, &name, e),
                });
            }
        }
        out
    }

    /// Criterion 9.
    pub fn analytic_oracle(&self) -> Vec<CheckResult> {
        let layout = SubsystemLayout::two_particle();
        let mut out = Vec::new();
        for (label, make) in [("psi2", make_psi2 as fn(f64, f64) -> Result<TwoParticleState>), ("psi3", make_psi3)] {
            let id = format!("analytic-oracle/{label}");
            let name = format!("max Bloch component error, closed form vs numeric, {label}");
            let run = || -> Result<f64> {
                let st = make(OMEGA0, MASS)?;
                let rho = st.density_matrix()?;
                let mut worst: f64 = 0.0;
                for w in Grid::new(0.0, 5.0, 20).points() {
                    for t in Grid::new(0.0, PI, 10).points() {
                        let b = BoostSpec::in_xz_plane(w, t)?;
                        let boosted = self.boost(&rho, &b)?;
                        let analytic = analytic_boosted_bloch(&st, &b)?;
                        for s in Subsystem::ALL {
                            let numeric = bloch_vector(&partial_trace(&boosted.rho, &layout, &[s])?)?;
                            worst = worst.max(analytic.bloch[&s].max_abs_diff(&numeric));
                        }
                    }
                }
                Ok(worst)
            };
            out.push(match run() {
                Ok(v) => CheckResult::error_below(9, &id, &name, v, 1e-9)
                    .with_detail("omega 0:5:20 x theta 0:pi:10"),
                Err(e) => CheckResult::errored(9, &id, &name, e),
            });
        }
        out
    }

    /// Criterion 10.
    pub fn algebra(&self) -> Vec<CheckResult> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
        let hs = [Helicity::Positive, Helicity::Negative];
        let kron_delta = |r: Helicity, s: Helicity| if r == s { 1.0 } else { 0.0 };

        let mut ortho: f64 = 0.0;
        let mut complete: f64 = 0.0;
        for _ in 0..50 {
            let p = random_momentum(&mut rng);
            let mp = p.reversed();
            let mut sum = ComplexMatrix::zeros(4, 4);
            for r in hs {
                for s in hs {
                    let ur = bispinor_u(&p, r).amplitudes;
                    let us = bispinor_u(&p, s).amplitudes;
                    let vr = bispinor_v(&p, r).amplitudes;
                    let vs = bispinor_v(&p, s).amplitudes;
                    let d = Complex64::new(kron_delta(r, s), 0.0);
                    ortho = ortho
                        .max((ur.inner(&us) - d).norm())
                        .max((vr.inner(&vs) - d).norm())
                        .max(ur.inner(&bispinor_v(&mp, s).amplitudes).norm())
                        .max(vr.inner(&bispinor_u(&mp, s).amplitudes).norm());
                }
                sum = &(&sum + &bispinor_u(&p, r).projector()) + &bispinor_v(&mp, r).projector();
            }
            complete = complete.max(sum.max_abs_diff(&ComplexMatrix::identity(4)));
        }

        let mut inverse: f64 = 0.0;
        let mut compose: f64 = 0.0;
        let mut chiral: f64 = 0.0;
        let mut minkowski: f64 = 0.0;
        for _ in 0..50 {
            let n = random_direction(&mut rng);
            let (w1, w2) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let b1 = BoostSpec::along(w1, n).expect("unit direction");
            let b2 = BoostSpec::along(w2, n).expect("unit direction");
            let s1 = bispinor_boost(&b1);
            inverse = inverse.max(
                s1.matmul(&bispinor_boost(&b1.inverse()))
                    .max_abs_diff(&ComplexMatrix::identity(4)),
            );
            let sum = BoostSpec::along(w1 + w2, n).expect("unit direction");
            compose = compose.max(s1.matmul(&bispinor_boost(&b2)).max_abs_diff(&bispinor_boost(&sum)));
            chiral = chiral.max(gamma5().commutator(&s1).max_abs());

            let k = random_momentum(&mut rng);
            let lam = lorentz_matrix(&b1);
            let x = [k.energy(), k.p3()[0], k.p3()[1], k.p3()[2]];
            let y: Vec<f64> = (0..4).map(|i| (0..4).map(|j| lam[i][j] * x[j]).sum()).collect();
            let norm = y[0] * y[0] - y[1] * y[1] - y[2] * y[2] - y[3] * y[3];
            let m2 = k.mass() * k.mass();
            minkowski = minkowski.max(((norm - m2) / m2).abs());
        }

        let mut dual: f64 = 0.0;
        for _ in 0..50 {
            let amps: Vec<Complex64> = (0..16)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let psi = ComplexVector::new(amps)
                .and_then(|v| v.normalized())
                .expect("nonzero random vector");
            match global_entanglement(&psi.projector()) {
                Ok(g) => dual = dual.max((g.value - global_from_bloch(g.bloch.values())).abs()),
                Err(_) => dual = f64::NAN,
            }
        }

        vec![
            CheckResult::error_below(10, "algebra/orthonormality", "bispinor orthonormality at 50 random momenta", ortho, 1e-12),
            CheckResult::error_below(10, "algebra/completeness", "sum u(p)u(p)^+ + v(-p)v(-p)^+ = I at 50 random momenta", complete, 1e-12),
            CheckResult::error_below(10, "algebra/boost-inverse", "S(w)S(-w) = I", inverse, 1e-12),
            CheckResult::error_below(10, "algebra/collinear-composition", "S(w1)S(w2) = S(w1 + w2)", compose, 1e-12),
            CheckResult::error_below(10, "algebra/gamma5-commutation", "[gamma5, S] = 0", chiral, 1e-14),
            CheckResult::error_below(10, "algebra/minkowski-norm", "relative change of p.p under the boost", minkowski, 1e-10),
            CheckResult::error_below(10, "algebra/dual-path-eg", "E_G from entropies vs from Bloch vectors, 50 random pure states", dual, 1e-12),
        ]
    }
}

/// Negativity of the spin-spin reduction of a two-particle density matrix.
pub fn spin_negativity(rho: &ComplexMatrix) -> Result<f64> {
    negativity(&spin_spin_reduced(rho)?)
}
