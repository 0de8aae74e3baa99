//! Exact linear algebra on small matrices of expressions.
//!
//! Determinants and adjugates are computed by cofactor expansion, which is
//! perfectly adequate at size 4 and keeps every step exact.

use symkernel::Expr;

/// Determinant of a square matrix of expressions (any size ≥ 1).
pub fn determinant(m: &[Vec<Expr>]) -> Expr {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Expr::zero();
    for (col, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let sub = minor(m, 0, col);
        let cof = entry * &determinant(&sub);
        if col % 2 == 0 {
            acc += cof;
        } else {
            acc -= cof;
        }
    }
    acc
}

/// The matrix with row `i` and column `j` removed.
fn minor(m: &[Vec<Expr>], i: usize, j: usize) -> Vec<Vec<Expr>> {
    m.iter()
        .enumerate()
        .filter(|(r, _)| *r != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != j)
                .map(|(_, e)| e.clone())
                .collect()
        })
        .collect()
}

/// Adjugate (transposed cofactor matrix), so that `m · adj = det · identity`.
pub fn adjugate(m: &[Vec<Expr>]) -> Vec<Vec<Expr>> {
    let n = m.len();
    let mut adj = vec![vec![Expr::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let cof = determinant(&minor(m, i, j));
            let signed = if (i + j) % 2 == 0 { cof } else { -cof };
            adj[j][i] = signed;
        }
    }
    adj
}
