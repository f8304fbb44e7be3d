use num::{BigInt, BigRational, One, Zero};

use crate::error::Error;
use crate::subset::Subset;

/// Coefficient field of a represented matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    /// GF(p) for a prime `p < 2^31`.
    Prime(u32),
    Rationals,
}

/// A matrix whose columns are the matroid elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    /// Row-major entries, already reduced mod p for prime fields.
    entries: Vec<i64>,
}

impl LinearMatrix {
    pub fn new(field: Field, rows: Vec<Vec<i64>>) -> Result<Self, Error> {
        if let Field::Prime(p) = field {
            if !is_prime(p) || p >= 1 << 31 {
                return Err(Error::InvalidArgument(format!(
                    "field size {p} is not a prime below 2^31"
                )));
            }
        }
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::InvalidArgument(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        let n_rows = rows.len();
        let entries = rows
            .into_iter()
            .flatten()
            .map(|a| match field {
                Field::Prime(p) => a.rem_euclid(p as i64),
                Field::Rationals => a,
            })
            .collect();
        Ok(LinearMatrix {
            field,
            rows: n_rows,
            cols,
            entries,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.cols + col]
    }

    pub(crate) fn is_zero_column(&self, col: usize) -> bool {
        (0..self.rows).all(|r| self.entry(r, col) == 0)
    }

    /// Rank of the chosen columns by exact elimination.
    pub(crate) fn column_rank(&self, cols: Subset) -> usize {
        let picked: Vec<usize> = cols.iter().collect();
        match self.field {
            Field::Prime(p) => {
                let mut m: Vec<Vec<i64>> = (0..self.rows)
                    .map(|r| picked.iter().map(|&c| self.entry(r, c)).collect())
                    .collect();
                rank_mod_p(&mut m, p as i64)
            }
            Field::Rationals => {
                let mut m: Vec<Vec<BigRational>> = (0..self.rows)
                    .map(|r| {
                        picked
                            .iter()
                            .map(|&c| BigRational::from_integer(BigInt::from(self.entry(r, c))))
                            .collect()
                    })
                    .collect();
                rank_rational(&mut m)
            }
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn pow_mod(mut base: i64, mut exp: i64, p: i64) -> i64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_mod_p(m: &mut [Vec<i64>], p: i64) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in c..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_rational(m: &mut [Vec<BigRational>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = BigRational::one() / m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for k in c..cols {
                    row[k] = &row[k] - &f * &pivot_row[k];
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_rank_detects_sum_dependency() {
        // columns e1, e2, e1+e2
        let m = LinearMatrix::new(Field::Prime(2), vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(m.column_rank(Subset::full(3)), 2);
        assert_eq!(m.column_rank(Subset::from_ids([0, 2])), 2);
        assert_eq!(m.column_rank(Subset::empty()), 0);
    }

    #[test]
    fn field_matters() {
        // over GF(3) the columns (1,1) and (1,-2) coincide; over Q they do not
        let rows = vec![vec![1, 1], vec![1, -2]];
        let gf3 = LinearMatrix::new(Field::Prime(3), rows.clone()).unwrap();
        let q = LinearMatrix::new(Field::Rationals, rows).unwrap();
        assert_eq!(gf3.column_rank(Subset::full(2)), 1);
        assert_eq!(q.column_rank(Subset::full(2)), 2);
    }

    #[test]
    fn rejects_composite_fields_and_ragged_rows() {
        assert!(LinearMatrix::new(Field::Prime(4), vec![vec![1]]).is_err());
        assert!(LinearMatrix::new(Field::Rationals, vec![vec![1, 2], vec![3]]).is_err());
    }
}
