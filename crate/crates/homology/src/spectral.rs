use crate::{build_d, HomologyError, RationalMatrix};

/// The induced action on `∧²K^n` in the basis `e_i ∧ e_j`, `i < j`, ordered
/// lexicographically.
pub fn wedge2(j: &RationalMatrix) -> Result<RationalMatrix, HomologyError> {
    if !j.is_square() {
        return Err(HomologyError::NotSquare(j.rows(), j.cols()));
    }
    let n = j.rows();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |k| (i, k))).collect();
    Ok(RationalMatrix::from_fn(pairs.len(), pairs.len(), |a, b| {
        let ((i, k), (r, s)) = (pairs[a], pairs[b]);
        &j[(i, r)] * &j[(k, s)] - &j[(i, s)] * &j[(k, r)]
    }))
}

/// `χ_{D_J}(x) = χ_J(x) · χ_{∧²J}(x²)`, compared exactly.
pub fn charpoly_identity_check(j: &RationalMatrix) -> Result<bool, HomologyError> {
    let lhs = build_d(j)?.charpoly()?;
    let rhs = &j.charpoly()? * &wedge2(j)?.charpoly()?.in_square();
    Ok(lhs == rhs)
}

/// `D_M (X ⊗ X) = (X ⊗ X) D_N`, given `M X = X N`.
pub fn intertwine_check(m: &RationalMatrix, n: &RationalMatrix, x: &RationalMatrix) -> Result<bool, HomologyError> {
    if !m.mul(x)?.sub(&x.mul(n)?)?.is_zero() {
        return Err(HomologyError::PreconditionViolated("M X != X N".into()));
    }
    let xx = x.kron(x);
    let diff = build_d(m)?.mul(&xx)?.sub(&xx.mul(&build_d(n)?)?)?;
    Ok(diff.is_zero())
}
