//! Small dense linear algebra over cyclotomic fields.

use super::CycNum;

/// Basis of the right kernel of a matrix given by rows, each row of length `ncols`.
pub fn kernel(mut rows: Vec<Vec<CycNum>>, ncols: usize) -> Vec<Vec<CycNum>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row[c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![CycNum::zero(); ncols];
            v[f] = CycNum::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[i][f];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one_matrix() {
        let rows = vec![vec![CycNum::one(), CycNum::i(), CycNum::zero()]];
        let k = kernel(rows.clone(), 3);
        assert_eq!(k.len(), 2);
        for v in k {
            let dot: CycNum = rows[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let rows = vec![
            vec![CycNum::one(), CycNum::zero()],
            vec![CycNum::zero(), CycNum::sqrt5()],
        ];
        assert!(kernel(rows, 2).is_empty());
    }
}
