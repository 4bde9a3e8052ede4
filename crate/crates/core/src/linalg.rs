//! Internal exact linear-algebra helpers for the tensor-product solves.

use crate::exact::Rat;

/// Exact inverse by Gauss-Jordan elimination; panics on a singular matrix.
pub(crate) fn invert_matrix(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("matrix is singular");
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for v in &mut aug[col] {
            *v *= &inv;
        }
        for row in 0..n {
            if row == col || aug[row][col].is_zero() {
                continue;
            }
            let factor = aug[row][col].clone();
            for j in 0..2 * n {
                let t = &factor * &aug[col][j];
                aug[row][j] -= t;
            }
        }
    }
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Replaces a rank-`n` tensor of shape `size^n` (row-major, axis 0 slowest)
/// by `matrix . tensor` along `axis`.
pub(crate) fn apply_axis(
    tensor: &mut [Rat],
    n: usize,
    size: usize,
    axis: usize,
    matrix: &[Vec<Rat>],
) {
    let stride = size.pow((n - 1 - axis) as u32);
    let block = stride * size;
    let mut line = vec![Rat::zero(); size];
    let mut base = 0;
    while base < tensor.len() {
        for off in 0..stride {
            let start = base + off;
            for (t, slot) in line.iter_mut().enumerate() {
                *slot = tensor[start + t * stride].clone();
            }
            for (k, row) in matrix.iter().enumerate() {
                let mut acc = Rat::zero();
                for (t, v) in line.iter().enumerate() {
                    if !v.is_zero() {
                        acc += &row[t] * v;
                    }
                }
                tensor[start + k * stride] = acc;
            }
        }
        base += block;
    }
}

/// Writes the digits of `idx` in base `size` into `out`, most significant
/// first.
pub(crate) fn decode_index(mut idx: usize, size: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = idx % size;
        idx /= size;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rat {
        Rat::from(v)
    }

    #[test]
    fn inverse_of_small_matrix() {
        let m = vec![vec![r(2), r(1)], vec![r(1), r(1)]];
        let inv = invert_matrix(&m);
        assert_eq!(inv, vec![vec![r(1), r(-1)], vec![r(-1), r(2)]]);
    }

    #[test]
    fn axis_application_is_per_slice() {
        // 2x2 tensor, apply swap matrix along axis 1
        let swap = vec![vec![r(0), r(1)], vec![r(1), r(0)]];
        let mut t = vec![r(1), r(2), r(3), r(4)];
        apply_axis(&mut t, 2, 2, 1, &swap);
        assert_eq!(t, vec![r(2), r(1), r(4), r(3)]);
        apply_axis(&mut t, 2, 2, 0, &swap);
        assert_eq!(t, vec![r(4), r(3), r(2), r(1)]);
    }
}
