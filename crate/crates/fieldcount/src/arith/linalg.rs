//! Small dense linear algebra over a finite field: row reduction, solving,
//! null spaces. Matrices are `Vec<Vec<F>>` in row-major order; everything
//! here is intended for tiny systems (dimension at most a dozen).

use super::field::Field;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut Vec<Vec<F>>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv().expect("pivot entry invertible");
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let sub = factor.mul(&m[r][j]);
                    m[i][j] = m[i][j].sub(&sub);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of a matrix.
pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Basis of the right null space of `m` (vectors `x` with `m x = 0`).
pub fn null_space<F: Field>(m: &[Vec<F>], sample: &F) -> Vec<Vec<F>> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    for &fc in &free {
        let mut v = vec![sample.zero(); cols];
        v[fc] = sample.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = work[r][fc].neg();
        }
        basis.push(v);
    }
    basis
}

/// Whether `v` lies in the span of `basis` (all over the same field).
pub fn in_span<F: Field>(basis: &[Vec<F>], v: &[F]) -> bool {
    let mut m: Vec<Vec<F>> = basis.to_vec();
    let before = rank(&m);
    m.push(v.to_vec());
    rank(&m) == before
}

/// Matrix-vector product.
pub fn mat_vec<F: Field>(m: &[Vec<F>], v: &[F]) -> Vec<F> {
    m.iter()
        .map(|row| {
            let mut acc = row[0].zero();
            for (a, b) in row.iter().zip(v) {
                acc = acc.add(&a.mul(b));
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::fp::Fp;
    use super::*;

    fn mat(p: u64, rows: &[&[i64]]) -> Vec<Vec<Fp>> {
        let s = Fp::new(p, 0);
        rows.iter()
            .map(|r| r.iter().map(|&v| s.from_int(v)).collect())
            .collect()
    }

    #[test]
    fn rank_and_nullspace_dimensions() {
        let m = mat(5, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&m), 2);
        let ns = null_space(&m, &Fp::new(5, 0));
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(mat_vec(&m, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn span_membership() {
        let s = Fp::new(7, 0);
        let b1: Vec<Fp> = [1, 0, 2].iter().map(|&v| s.from_int(v)).collect();
        let b2: Vec<Fp> = [0, 1, 3].iter().map(|&v| s.from_int(v)).collect();
        let combo: Vec<Fp> = [2, 3, 6].iter().map(|&v| s.from_int(v)).collect(); // 2*b1 + 3*b2
        let outside: Vec<Fp> = [0, 0, 1].iter().map(|&v| s.from_int(v)).collect();
        assert!(in_span(&[b1.clone(), b2.clone()], &combo));
        assert!(!in_span(&[b1, b2], &outside));
    }
}
