//! Exact linear programming over the rationals: two-phase tableau simplex with
//! Bland's anti-cycling rule.
//!
//! Problems are in standard equality form: maximize `c·x` subject to
//! `A x = b`, `x >= 0`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: BigRational, x: Vec<BigRational> },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

struct Tableau {
    /// `rows x (cols + 1)`, last entry of each row is the right-hand side.
    t: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    cols: usize,
}

enum Phase {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &BigRational {
        &self.t[r][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.t[r][c].recip();
        for x in self.t[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    fn reduced_cost(&self, obj: &[BigRational], j: usize) -> BigRational {
        let mut z = obj[j].clone();
        for (i, &b) in self.basis.iter().enumerate() {
            if !obj[b].is_zero() && !self.t[i][j].is_zero() {
                z -= &obj[b] * &self.t[i][j];
            }
        }
        z
    }

    /// Maximize `obj` using only columns `< allowed` as entering candidates.
    fn run(&mut self, obj: &[BigRational], allowed: usize) -> Phase {
        loop {
            // Bland: lowest-index improving column enters.
            let entering =
                (0..allowed).filter(|j| !self.basis.contains(j)).find(|&j| self.reduced_cost(obj, j).is_positive());
            let Some(c) = entering else {
                return Phase::Optimal;
            };
            let mut best: Option<(usize, BigRational)> = None;
            for r in 0..self.t.len() {
                if !self.t[r][c].is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / &self.t[r][c];
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return Phase::Unbounded,
            }
        }
    }

    fn objective(&self, obj: &[BigRational]) -> BigRational {
        self.basis.iter().enumerate().fold(BigRational::zero(), |acc, (i, &b)| acc + &obj[b] * self.rhs(i))
    }
}

/// Maximize `c·x` subject to `A x = b`, `x >= 0`.
pub fn maximize(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    assert_eq!(b.len(), m);
    assert!(a.iter().all(|r| r.len() == n));

    // Phase one with one artificial per row.
    let cols = n + m;
    let mut t = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut r: Vec<BigRational> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { BigRational::from_integer(1.into()) } else { BigRational::zero() }));
        r.push(if flip { -rhs } else { rhs.clone() });
        t.push(r);
    }
    let mut tab = Tableau { t, basis: (n..n + m).collect(), cols };
    let mut phase1 = vec![BigRational::zero(); cols];
    for x in phase1[n..].iter_mut() {
        *x = BigRational::from_integer((-1).into());
    }
    tab.run(&phase1, cols);
    if tab.objective(&phase1).is_negative() {
        return LpOutcome::Infeasible;
    }

    // Drive remaining (zero-valued) artificials out of the basis, dropping
    // redundant rows.
    let mut r = 0;
    while r < tab.t.len() {
        if tab.basis[r] >= n {
            match (0..n).find(|&j| !tab.t[r][j].is_zero()) {
                Some(j) => tab.pivot(r, j),
                None => {
                    tab.t.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    let mut obj = c.to_vec();
    obj.extend((0..m).map(|_| BigRational::zero()));
    match tab.run(&obj, n) {
        Phase::Unbounded => LpOutcome::Unbounded,
        Phase::Optimal => {
            let mut x = vec![BigRational::zero(); n];
            for (i, &bcol) in tab.basis.iter().enumerate() {
                if bcol < n {
                    x[bcol] = tab.rhs(i).clone();
                }
            }
            LpOutcome::Optimal { value: tab.objective(&obj), x }
        }
    }
}

/// Whether `A x = b` has a solution with `x >= 0`.
pub fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let n = a.first().map_or(0, |r| r.len());
    maximize(a, b, &vec![BigRational::zero(); n]).is_feasible()
}
