use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactalg::IntMatrix;

/// `U M W = D` with `D` diagonal, `d_1 | d_2 | ...`, and `U`, `W` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// The nonnegative diagonal entries `d_1, ..., d_min(rows, cols)`.
    pub fn invariants(&self) -> Vec<BigInt> {
        let k = self.diagonal.rows().min(self.diagonal.cols());
        (0..k).map(|i| self.diagonal[(i, i)].clone()).collect()
    }
}

struct Reducer {
    a: IntMatrix,
    left: Option<IntMatrix>,
    right: Option<IntMatrix>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap_rows(i, j);
            if let Some(u) = &mut self.left {
                u.swap_rows(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap_cols(i, j);
            if let Some(w) = &mut self.right {
                w.swap_cols(i, j);
            }
        }
    }

    fn add_row(&mut self, target: usize, source: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        self.a.add_row_multiple(target, source, c);
        if let Some(u) = &mut self.left {
            u.add_row_multiple(target, source, c);
        }
    }

    fn add_col(&mut self, target: usize, source: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        self.a.add_col_multiple(target, source, c);
        if let Some(w) = &mut self.right {
            w.add_col_multiple(target, source, c);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.a.cols() {
            self.a[(i, j)] = -self.a[(i, j)].clone();
        }
        if let Some(u) = &mut self.left {
            for j in 0..u.cols() {
                u[(i, j)] = -u[(i, j)].clone();
            }
        }
    }

    fn run(&mut self) {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        let mut k = 0;
        while k < rows.min(cols) {
            let mut pivot: Option<(BigInt, usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    let v = self.a[(i, j)].abs();
                    if !v.is_zero() && pivot.as_ref().is_none_or(|(b, _, _)| v < *b) {
                        pivot = Some((v, i, j));
                        if pivot.as_ref().unwrap().0.is_one() {
                            break;
                        }
                    }
                }
                if pivot.as_ref().is_some_and(|(b, _, _)| b.is_one()) {
                    break;
                }
            }
            let Some((_, pi, pj)) = pivot else { break };
            self.swap_rows(k, pi);
            self.swap_cols(k, pj);
            let p = self.a[(k, k)].clone();
            let mut clean = true;
            for i in k + 1..rows {
                if self.a[(i, k)].is_zero() {
                    continue;
                }
                let q = self.a[(i, k)].div_floor(&p);
                self.add_row(i, k, &-q);
                clean &= self.a[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                if self.a[(k, j)].is_zero() {
                    continue;
                }
                let q = self.a[(k, j)].div_floor(&p);
                self.add_col(j, k, &-q);
                clean &= self.a[(k, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (k + 1..rows).find(|&i| (k + 1..cols).any(|j| !self.a[(i, j)].is_multiple_of(&p)));
            if let Some(i) = offender {
                self.add_row(k, i, &BigInt::one());
                continue;
            }
            if p.is_negative() {
                self.negate_row(k);
            }
            k += 1;
        }
    }
}

/// Smith normal form with transforming matrices.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut r = Reducer {
        a: m.clone(),
        left: Some(IntMatrix::identity(m.rows())),
        right: Some(IntMatrix::identity(m.cols())),
    };
    r.run();
    SmithForm { diagonal: r.a, left: r.left.unwrap(), right: r.right.unwrap() }
}

/// Diagonal of the Smith normal form, without the transforming matrices.
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let mut r = Reducer { a: m.clone(), left: None, right: None };
    r.run();
    let k = m.rows().min(m.cols());
    (0..k).map(|i| r.a[(i, i)].clone()).collect()
}

/// Finitely generated abelian group `Z^free_rank + Z/d_1 + ... + Z/d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    torsion: Vec<BigInt>,
    free_rank: usize,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    /// The cokernel of a square or rectangular presentation matrix (relations as columns).
    pub fn cokernel(presentation: &IntMatrix) -> Self {
        let d = smith_invariants(presentation);
        let zero_rows = presentation.rows() - d.len();
        AbelianGroup::from_diagonal(&d, zero_rows)
    }

    /// `Z^extra_free + sum Z/d` for arbitrary nonnegative `d`'s.
    pub fn from_diagonal(entries: &[BigInt], extra_free: usize) -> Self {
        let n = entries.len();
        let diag = IntMatrix::from_fn(n, n, |i, j| if i == j { entries[i].abs() } else { BigInt::zero() });
        let mut torsion = Vec::new();
        let mut free_rank = extra_free;
        for d in smith_invariants(&diag) {
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                torsion.push(d);
            }
        }
        AbelianGroup { torsion, free_rank }
    }

    pub fn cyclic(d: i64) -> Self {
        AbelianGroup::from_diagonal(&[BigInt::from(d)], 0)
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn min_generators(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    /// Order of the group, or `None` when it is infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.min_generators() == 0
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let entries: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        AbelianGroup::from_diagonal(&entries, self.free_rank + other.free_rank)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            if run == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("(Z/{d})^{run}"));
            }
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn check(a: &IntMatrix) -> SmithForm {
        let f = smith_normal_form(a);
        assert_eq!(f.left.mul(a).mul(&f.right), f.diagonal);
        assert!(f.left.is_unimodular() && f.right.is_unimodular());
        for i in 0..f.diagonal.rows() {
            for j in 0..f.diagonal.cols() {
                if i != j {
                    assert!(f.diagonal[(i, j)].is_zero());
                }
            }
        }
        let d = f.invariants();
        for w in d.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]) || w[1].is_zero());
        }
        f
    }

    #[test]
    fn examples() {
        assert_eq!(check(&IntMatrix::identity(3)).diagonal, IntMatrix::identity(3));
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(check(&m(&[vec![2, 4], vec![6, 8]])).invariants(), ints(&[2, 4]));
        assert_eq!(check(&m(&[vec![-2, 1], vec![1, -2]])).invariants(), ints(&[1, 3]));
        assert_eq!(check(&m(&[vec![2, 0], vec![0, 3]])).invariants(), ints(&[1, 6]));
        assert_eq!(check(&m(&[vec![0, 0, 0], vec![0, 4, 6]])).invariants(), ints(&[2, 0]));
    }

    #[test]
    fn groups() {
        let g = AbelianGroup::cokernel(&m(&[vec![-2, 1], vec![1, -2]]));
        assert_eq!(g, AbelianGroup::cyclic(3));
        assert_eq!(g.to_string(), "Z/3");
        let h = g.direct_sum(&AbelianGroup::cyclic(2));
        assert_eq!(h, AbelianGroup::cyclic(6));
        assert_eq!(h.min_generators(), 1);
        let k = AbelianGroup::cyclic(2).direct_sum(&AbelianGroup::cyclic(2));
        assert_eq!(k.to_string(), "(Z/2)^2");
        assert_eq!(k.order(), Some(BigInt::from(4)));
        assert_eq!(AbelianGroup::cokernel(&IntMatrix::zeros(1, 1)).order(), None);
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
    }
}
