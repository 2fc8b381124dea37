//! Dense complex linear algebra at the small fixed sizes used here
//! (2, 4 and 16).

mod eigen;
mod layout;
mod matrix;

pub use eigen::{
    hermitian_eigen, hermitian_eigenvalues, HermitianEigen, HERMITIAN_TOLERANCE,
    JACOBI_THRESHOLD,
};
pub use layout::{partial_trace, partial_transpose, Subsystem, SubsystemLayout};
pub use matrix::{pauli, ComplexMatrix, ComplexVector};

pub use num_complex::Complex64;

/// `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}
