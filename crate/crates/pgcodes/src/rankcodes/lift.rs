use crate::algebra::{Field, Matrix};
use crate::error::{Error, Result};
use crate::geometry::Subspace;

fn square(a: &Matrix) -> Result<usize> {
    if a.rows() != a.cols() {
        return Err(Error::Shape("lifting needs a square matrix".into()));
    }
    Ok(a.rows())
}

/// Row space of `(I_n | A)`.
pub fn lift_left(a: &Matrix) -> Result<Subspace> {
    let n = square(a)?;
    Subspace::from_canonical(&Matrix::identity(a.field_order(), n).hstack(a)?)
}

/// Row space of `(A | I_n)`.
pub fn lift_right(a: &Matrix, f: &Field) -> Result<Subspace> {
    let n = square(a)?;
    Subspace::from_rows(&a.hstack(&Matrix::identity(a.field_order(), n))?, f)
}

/// `A` with `U = rowspace(I | A)`, when `U` is such a lift.
pub fn matrix_of_left_lift(u: &Subspace) -> Option<Matrix> {
    let n = u.dim();
    if u.ambient() != 2 * n || u.pivots().iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(u.basis().submatrix(0..n, n..2 * n))
}

/// `A` with `U = rowspace(A | I)`, when `U` is such a lift.
pub fn matrix_of_right_lift(u: &Subspace, f: &Field) -> Option<Matrix> {
    let n = u.dim();
    if u.ambient() != 2 * n {
        return None;
    }
    let b = u.basis();
    let right = b.submatrix(0..n, n..2 * n);
    let inv = right.inverse(f).ok()?;
    let full = inv.mul(&b, f).ok()?;
    Some(full.submatrix(0..n, 0..n))
}
