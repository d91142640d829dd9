//! Exact linear algebra on small dense integer and rational matrices.
//!
//! Everything here targets desk-scale problems (n <= 4, a handful of rows),
//! so the algorithms are the simple exact ones: cofactor determinants,
//! adjugate inverses, Gaussian elimination over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for a small integer literal.
pub fn int(value: i64) -> Int {
    Int::from(value)
}

/// Shorthand for a small rational literal.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(Int::from(numer), Int::from(denom))
}

pub fn rat_int(value: i64) -> Rat {
    Rat::from_integer(Int::from(value))
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Determinant by cofactor expansion along the first row.
pub fn det(rows: &[Vec<Int>]) -> Int {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    match n {
        0 => Int::one(),
        1 => rows[0][0].clone(),
        2 => &rows[0][0] * &rows[1][1] - &rows[0][1] * &rows[1][0],
        _ => {
            let mut acc = Int::zero();
            for (col, pivot) in rows[0].iter().enumerate() {
                if pivot.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Int>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = pivot * det(&minor);
                if col % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Rank of a set of integer row vectors (Gaussian elimination over Q).
pub fn rank(rows: &[Vec<Int>]) -> usize {
    let mut work: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|v| Rat::from_integer(v.clone())).collect())
        .collect();
    let cols = work.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..work.len()).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, pivot_row);
        let pivot = work[rank][col].clone();
        for r in 0..work.len() {
            if r != rank && !work[r][col].is_zero() {
                let factor = &work[r][col] / &pivot;
                for c in col..cols {
                    let delta = &factor * &work[rank][c];
                    work[r][c] = &work[r][c] - delta;
                }
            }
        }
        rank += 1;
        if rank == work.len() {
            break;
        }
    }
    rank
}

/// Gcd of the absolute values of a slice; zero for an all-zero slice.
pub fn gcd_all(values: &[Int]) -> Int {
    values
        .iter()
        .fold(Int::zero(), |acc, v| acc.gcd(&v.abs()))
}

/// Divide a vector by the gcd of its entries (no-op on the zero vector).
pub fn make_primitive(v: &mut [Int]) {
    let g = gcd_all(v);
    if g > Int::one() {
        for entry in v.iter_mut() {
            *entry /= &g;
        }
    }
}

/// Solve a square rational system `a * x = b`. `None` when `a` is singular.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut work: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot_row);
        let pivot = work[col][col].clone();
        for c in col..=n {
            work[col][c] = &work[col][c] / &pivot;
        }
        for r in 0..n {
            if r != col && !work[r][col].is_zero() {
                let factor = work[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &work[col][c];
                    work[r][c] = &work[r][c] - delta;
                }
            }
        }
    }
    Some(work.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// Inverse of an integer matrix with determinant +-1, as integer rows.
/// `None` when the matrix is not unimodular.
pub fn inverse_unimodular(rows: &[Vec<Int>]) -> Option<Vec<Vec<Int>>> {
    let n = rows.len();
    let d = det(rows);
    if d.abs() != Int::one() {
        return None;
    }
    // adjugate transpose scaled by 1/det; n <= 4 keeps the cofactors cheap
    let mut inverse = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<Int>> = rows
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let mut cof = det(&minor);
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            inverse[j][i] = if d.is_negative() { -cof } else { cof };
        }
    }
    Some(inverse)
}

/// Primitive integer vector in the kernel of a system of integer rows in
/// Z^n (the solution with the first free column set to 1). `None` when the
/// rows have full column rank.
pub fn kernel_vector(rows: &[Vec<Int>], n: usize) -> Option<Vec<Int>> {
    let mut work: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|v| Rat::from_integer(v.clone())).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row_at = 0;
    for col in 0..n {
        let Some(pivot_row) = (row_at..work.len()).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(row_at, pivot_row);
        let pivot = work[row_at][col].clone();
        for c in col..n {
            work[row_at][c] = &work[row_at][c] / &pivot;
        }
        for r in 0..work.len() {
            if r != row_at && !work[r][col].is_zero() {
                let factor = work[r][col].clone();
                for c in col..n {
                    let delta = &factor * &work[row_at][c];
                    work[r][c] = &work[r][c] - delta;
                }
            }
        }
        pivots.push(col);
        row_at += 1;
        if row_at == work.len() {
            break;
        }
    }
    if pivots.len() == n {
        return None;
    }
    let free_col = (0..n).find(|c| !pivots.contains(c))?;
    let mut solution = vec![Rat::zero(); n];
    solution[free_col] = Rat::one();
    for (row, &col) in pivots.iter().enumerate() {
        solution[col] = -work[row][free_col].clone();
    }
    // clear denominators, then reduce to a primitive lattice vector
    let lcm = solution
        .iter()
        .fold(Int::one(), |acc, v| acc.lcm(v.denom()));
    let mut integral: Vec<Int> = solution
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    make_primitive(&mut integral);
    Some(integral)
}
