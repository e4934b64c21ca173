//! Minimal solutions of linear Diophantine systems over ℕ.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Homogeneous system `A·x = 0` over `x ∈ ℕ^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSystem {
    rows: Vec<Vec<i64>>,
    dim: usize,
}

impl HomSystem {
    pub fn new(dim: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: r.len(),
            });
        }
        Ok(HomSystem { rows, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn is_solution(&self, x: &[u64]) -> bool {
        self.rows.iter().all(|r| {
            r.iter()
                .zip(x)
                .map(|(&a, &v)| a as i128 * v as i128)
                .sum::<i128>()
                == 0
        })
    }
}

/// The ≤-minimal nonzero solutions of `s`.
pub fn hilbert_basis(s: &HomSystem, limits: &Limits) -> Result<Vec<Vec<u64>>> {
    bounded_basis(s, &vec![None; s.dim], limits)
}

/// Contejean–Devie completion with optional per-coordinate upper bounds.
///
/// Returns the minimal solutions whose coordinates respect the bounds,
/// sorted lexicographically.
fn bounded_basis(s: &HomSystem, bounds: &[Option<u64>], limits: &Limits) -> Result<Vec<Vec<u64>>> {
    let d = s.dim;
    let r = s.rows.len();
    // column images A·e_j
    let cols: Vec<Vec<i128>> = (0..d)
        .map(|j| s.rows.iter().map(|row| row[j] as i128).collect())
        .collect();

    let mut basis: Vec<Vec<u64>> = Vec::new();
    // frontier entries: (x, A·x)
    let mut frontier: Vec<(Vec<u64>, Vec<i128>)> = (0..d)
        .filter(|&j| bounds[j].is_none_or(|b| b >= 1))
        .map(|j| {
            let mut x = vec![0u64; d];
            x[j] = 1;
            (x, cols[j].clone())
        })
        .collect();

    while !frontier.is_empty() {
        let mut next: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut images = std::collections::HashMap::new();
        let mut pending = Vec::new();
        for (x, ax) in frontier {
            if ax.iter().all(|&v| v == 0) {
                basis.push(x);
            } else {
                pending.push((x, ax));
            }
        }
        for (x, ax) in pending {
            for j in 0..d {
                if bounds[j].is_some_and(|b| x[j] >= b) {
                    continue;
                }
                let dot: i128 = (0..r).map(|i| ax[i] * cols[j][i]).sum();
                if dot >= 0 {
                    continue;
                }
                let mut y = x.clone();
                y[j] += 1;
                if basis.iter().any(|b| dominates(&y, b)) || next.contains(&y) {
                    continue;
                }
                let ay: Vec<i128> = (0..r)
                    .map(|i| ax[i].checked_add(cols[j][i]))
                    .collect::<Option<_>>()
                    .ok_or(Error::ResourceCap {
                        what: "hilbert basis coefficient range",
                        cap: limits.hilbert_frontier,
                    })?;
                images.insert(y.clone(), ay);
                next.insert(y);
                if next.len() > limits.hilbert_frontier {
                    return Err(Error::ResourceCap {
                        what: "hilbert basis frontier",
                        cap: limits.hilbert_frontier,
                    });
                }
            }
        }
        frontier = next
            .into_iter()
            .map(|y| {
                let ay = images.remove(&y).expect("image recorded");
                (y, ay)
            })
            .collect();
    }
    basis.sort();
    basis.dedup();
    Ok(basis)
}

fn dominates(y: &[u64], b: &[u64]) -> bool {
    y.iter().zip(b).all(|(a, c)| a >= c)
}

/// Solution vectors of a linear system.
pub type Basis = Vec<Vec<u64>>;

/// Nonnegative solutions of `A·x = rhs`, as a finite set of minimal
/// particular solutions plus the Hilbert basis of `A·x = 0`.
///
/// Every solution is one particular solution plus an ℕ-combination of the
/// homogeneous basis. With no particular solutions the system is infeasible.
pub fn solve_nonneg(
    dim: usize,
    rows: &[Vec<i64>],
    rhs: &[i64],
    limits: &Limits,
) -> Result<(Basis, Basis)> {
    if rows.len() != rhs.len() {
        return Err(Error::DimensionMismatch {
            expected: rows.len(),
            found: rhs.len(),
        });
    }
    let extended: Vec<Vec<i64>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, &c)| {
            let mut r = row.clone();
            r.push(c.checked_neg().unwrap_or(i64::MAX));
            r
        })
        .collect();
    let sys = HomSystem::new(dim + 1, extended)?;
    let mut bounds = vec![None; dim + 1];
    bounds[dim] = Some(1);
    let mut particular = Vec::new();
    let mut homogeneous = Vec::new();
    for mut v in bounded_basis(&sys, &bounds, limits)? {
        let t = v.pop().expect("homogenizing coordinate");
        if t == 1 {
            particular.push(v);
        } else {
            homogeneous.push(v);
        }
    }
    Ok((particular, homogeneous))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(dim: usize, rows: Vec<Vec<i64>>) -> Vec<Vec<u64>> {
        hilbert_basis(&HomSystem::new(dim, rows).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn small_systems() {
        assert_eq!(basis(2, vec![vec![1, -1]]), vec![vec![1, 1]]);
        assert_eq!(basis(2, vec![vec![2, -1]]), vec![vec![1, 2]]);
        assert_eq!(basis(1, vec![]), vec![vec![1]]);
        assert_eq!(basis(2, vec![vec![1, 1]]), Vec::<Vec<u64>>::new());
    }

    #[test]
    fn three_variable_equation() {
        // x + y = 2z
        let b = basis(3, vec![vec![1, 1, -2]]);
        assert_eq!(b, vec![vec![0, 2, 1], vec![1, 1, 1], vec![2, 0, 1]]);
    }

    #[test]
    fn inhomogeneous() {
        // 2x + 3y = 7 over ℕ: (2,1) only
        let (p, h) = solve_nonneg(2, &[vec![2, 3]], &[7], &Limits::default()).unwrap();
        assert_eq!(p, vec![vec![2, 1]]);
        assert!(h.is_empty());
        // x - y = 1: particular (1,0), homogeneous (1,1)
        let (p, h) = solve_nonneg(2, &[vec![1, -1]], &[1], &Limits::default()).unwrap();
        assert_eq!(p, vec![vec![1, 0]]);
        assert_eq!(h, vec![vec![1, 1]]);
    }

    #[test]
    fn frontier_cap() {
        let s = HomSystem::new(3, vec![vec![17, 13, -29]]).unwrap();
        let err = hilbert_basis(&s, &Limits::uniform(3)).unwrap_err();
        assert!(err.is_resource_cap());
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(HomSystem::new(2, vec![vec![1]]).is_err());
        assert!(HomSystem::new(0, vec![]).is_err());
    }
}
