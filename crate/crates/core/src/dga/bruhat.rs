use crate::algebra::{Gf, Mat};
use crate::error::{Error, Result};

/// The permutation `w` (as images `w[j]`, 0-based) with `M ∈ B·P_w·B`, where
/// `B` is the upper triangular Borel and `P_w` has ones at `(w[j], j)`.
///
/// Ranks of the lower-left submatrices are invariant under both Borel
/// actions, so `w[j] = i` exactly when the rank of rows `i..` jumps at
/// column `j` while that of rows `i+1..` does not.
pub fn bruhat_cell(gf: &Gf, m: &Mat) -> Result<Vec<usize>> {
    let n = m.n();
    if !gf.is_invertible(m) {
        return Err(Error::SingularMatrix);
    }
    let r = |i: usize, j: usize| {
        if i >= n || j == 0 {
            0
        } else {
            gf.rank(m, i..n, 0..j)
        }
    };
    let mut w = vec![usize::MAX; n];
    for (j, wj) in w.iter_mut().enumerate() {
        for i in 0..n {
            if r(i, j + 1) + r(i + 1, j) == r(i, j) + r(i + 1, j + 1) + 1 {
                *wj = i;
                break;
            }
        }
    }
    debug_assert!(w.iter().all(|&x| x < n));
    Ok(w)
}
