//! Smith normal form over the integers.
//!
//! Pivoting always picks the nonzero entry of least absolute value in the
//! active submatrix, then clears its row and column by Euclidean division.
//! A nonzero remainder promotes that remainder to the new pivot, so the pivot
//! strictly shrinks until it divides its row and column. Divisibility of the
//! rest of the submatrix is forced the same way, by folding an offending row
//! into the pivot row, so the diagonal comes out as a divisor chain without a
//! separate clean-up pass.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Result of [`smith_normal_form`]: `left · m · right` is the `rows`×`cols`
/// matrix carrying `d` on its diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Positive invariant factors, each dividing the next.
    pub d: Vec<BigInt>,
    pub rank: usize,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut r = Reducer::new(m, true);
    let d = r.run();
    let rank = d.len();
    let (left, right) = r.into_transforms();
    SnfResult {
        d,
        rank,
        left,
        right,
    }
}

/// Invariant factors only; skips transform bookkeeping.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    Reducer::new(m, false).run()
}

type Rows = Vec<Vec<BigInt>>;

struct Reducer {
    a: Rows,
    rows: usize,
    cols: usize,
    left: Option<Rows>,
    right: Option<Rows>,
}

fn identity_rows(n: usize) -> Rows {
    (0..n)
        .map(|i| {
            let mut row = vec![BigInt::zero(); n];
            row[i] = BigInt::from(1);
            row
        })
        .collect()
}

fn to_matrix(rows: Rows, n: usize) -> IntMatrix {
    IntMatrix::new(n, n, rows.into_iter().flatten().collect()).expect("square transform")
}

impl Reducer {
    fn new(m: &IntMatrix, track: bool) -> Self {
        let (rows, cols) = m.shape();
        Reducer {
            a: (0..rows).map(|i| m.row(i).to_vec()).collect(),
            rows,
            cols,
            left: track.then(|| identity_rows(rows)),
            right: track.then(|| identity_rows(cols)),
        }
    }

    fn into_transforms(self) -> (IntMatrix, IntMatrix) {
        let left = self.left.expect("transforms were tracked");
        let right = self.right.expect("transforms were tracked");
        (to_matrix(left, self.rows), to_matrix(right, self.cols))
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(l) = self.left.as_mut() {
                l.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            if let Some(r) = self.right.as_mut() {
                for row in r {
                    row.swap(i, j);
                }
            }
        }
    }

    /// row[target] += k * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        fn apply(m: &mut Rows, target: usize, source: usize, k: &BigInt) {
            let src = m[source].clone();
            for (t, s) in m[target].iter_mut().zip(src.iter()) {
                if !s.is_zero() {
                    *t += k * s;
                }
            }
        }
        apply(&mut self.a, target, source, k);
        if let Some(l) = self.left.as_mut() {
            apply(l, target, source, k);
        }
    }

    /// col[target] += k * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        fn apply(m: &mut Rows, target: usize, source: usize, k: &BigInt) {
            for row in m.iter_mut() {
                if !row[source].is_zero() {
                    let delta = k * &row[source];
                    row[target] += delta;
                }
            }
        }
        apply(&mut self.a, target, source, k);
        if let Some(r) = self.right.as_mut() {
            apply(r, target, source, k);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if let Some(l) = self.left.as_mut() {
            for x in &mut l[i] {
                *x = -std::mem::take(x);
            }
        }
    }

    fn min_abs_in_submatrix(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &BigInt)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = &self.a[i][j];
                if v.is_zero() {
                    continue;
                }
                match best {
                    Some((_, _, b)) if b.magnitude() <= v.magnitude() => {}
                    _ => best = Some((i, j, v)),
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Smallest nonzero entry on row `t` or column `t` of the active block.
    fn min_abs_on_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_mag = self.a[t][t].magnitude().clone();
        for i in t + 1..self.rows {
            let v = &self.a[i][t];
            if !v.is_zero() && v.magnitude() < &best_mag {
                best = (i, t);
                best_mag = v.magnitude().clone();
            }
        }
        for j in t + 1..self.cols {
            let v = &self.a[t][j];
            if !v.is_zero() && v.magnitude() < &best_mag {
                best = (t, j);
                best_mag = v.magnitude().clone();
            }
        }
        best
    }

    fn run(&mut self) -> Vec<BigInt> {
        let mut d = Vec::new();
        let mut t = 0;
        while t < self.rows.min(self.cols) {
            let Some((pi, pj)) = self.min_abs_in_submatrix(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);

            loop {
                let mut remainder = false;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = &self.a[i][t] / &self.a[t][t];
                    if !q.is_zero() {
                        self.add_row_multiple(i, t, &-q);
                    }
                    remainder |= !self.a[i][t].is_zero();
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = &self.a[t][j] / &self.a[t][t];
                    if !q.is_zero() {
                        self.add_col_multiple(j, t, &-q);
                    }
                    remainder |= !self.a[t][j].is_zero();
                }
                if remainder {
                    let (pi, pj) = self.min_abs_on_cross(t);
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }

                // Row and column are clear; enforce divisibility on the rest.
                let offender = (t + 1..self.rows).find(|&i| {
                    (t + 1..self.cols).any(|j| !(&self.a[i][j] % &self.a[t][t]).is_zero())
                });
                match offender {
                    Some(i) => self.add_row_multiple(t, i, &BigInt::from(1)),
                    None => break,
                }
            }

            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            d.push(self.a[t][t].clone());
            t += 1;
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check_round_trip(m: &IntMatrix) -> SnfResult {
        let snf = smith_normal_form(m);
        let lhs = snf.left.product(m).unwrap().product(&snf.right).unwrap();
        assert_eq!(lhs, IntMatrix::padded_diagonal(m.rows(), m.cols(), &snf.d));
        assert!(snf.left.determinant().unwrap().abs().is_one());
        assert!(snf.right.determinant().unwrap().abs().is_one());
        snf
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_has_unit_factors() {
        let snf = check_round_trip(&IntMatrix::identity(2));
        assert_eq!(snf.d, ints(&[1, 1]));
        assert_eq!(snf.rank, 2);
    }

    #[test]
    fn two_by_two_example() {
        // gcd of entries is 2 and |det| = 8, so the chain is [2, 4].
        let m = IntMatrix::from_rows(2, &[vec![2, 4], vec![6, 8]]).unwrap();
        assert_eq!(check_round_trip(&m).d, ints(&[2, 4]));
    }

    #[test]
    fn zero_map_has_no_factors() {
        let snf = check_round_trip(&IntMatrix::zeros(3, 2));
        assert!(snf.d.is_empty());
        assert_eq!(snf.left.shape(), (3, 3));
        assert_eq!(snf.right.shape(), (2, 2));
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (4, 0)] {
            let snf = check_round_trip(&IntMatrix::zeros(r, c));
            assert!(snf.d.is_empty());
        }
    }

    #[test]
    fn divisibility_needs_row_folding() {
        // diag(2, 3) is diagonal but not a divisor chain; SNF is diag(1, 6).
        let m = IntMatrix::from_rows(2, &[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(check_round_trip(&m).d, ints(&[1, 6]));
        let m = IntMatrix::from_rows(3, &[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]).unwrap();
        assert_eq!(check_round_trip(&m).d, ints(&[2, 2, 60]));
    }

    #[test]
    fn negative_pivots_become_positive() {
        let m = IntMatrix::from_rows(2, &[vec![-3, 0], vec![0, -6]]).unwrap();
        assert_eq!(check_round_trip(&m).d, ints(&[3, 6]));
    }

    #[test]
    fn invariant_factors_match_full_form() {
        let m = IntMatrix::from_rows(
            4,
            &[vec![1, 2, 3, 4], vec![5, 6, 7, 8], vec![9, 10, 11, 12]],
        )
        .unwrap();
        assert_eq!(invariant_factors(&m), check_round_trip(&m).d);
    }
}
