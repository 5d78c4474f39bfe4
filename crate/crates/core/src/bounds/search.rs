use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::exactalg::IntMatrix;
use crate::seifert::{is_alexander_trivial, SeifertMatrix, TrivialBlockCertificate};

/// Limits for [`search_trivial_block`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Maximal number of elementary congruences composed.
    pub max_depth: usize,
    /// Largest `|c|` in a move `e_i -> e_i + c e_j`.
    pub max_coeff: i64,
    /// Cap on the number of distinct matrices visited.
    pub max_states: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_depth: 3, max_coeff: 1, max_states: 20_000 }
    }
}

#[derive(Clone, Copy, Debug)]
enum Move {
    Add(usize, usize, i64),
    Swap(usize, usize),
}

fn moves(m: usize, max_coeff: i64) -> Vec<Move> {
    let mut out = Vec::new();
    for c in 1..=max_coeff {
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    out.push(Move::Add(i, j, c));
                    out.push(Move::Add(i, j, -c));
                }
            }
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            out.push(Move::Swap(i, j));
        }
    }
    out
}

fn apply(v: &IntMatrix, u: &IntMatrix, mv: Move) -> (IntMatrix, IntMatrix) {
    let (mut v, mut u) = (v.clone(), u.clone());
    match mv {
        Move::Add(i, j, c) => {
            let c = BigInt::from(c);
            v.add_row_multiple(i, j, &c);
            v.add_col_multiple(i, j, &c);
            u.add_row_multiple(i, j, &c);
        }
        Move::Swap(i, j) => {
            v.swap_rows(i, j);
            v.swap_cols(i, j);
            u.swap_rows(i, j);
        }
    }
    (v, u)
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Above this many index subsets of one size only the leading block is tried.
const SUBSET_LIMIT: u128 = 4096;

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Largest Alexander-trivial principal submatrix of `v` with `size >= min`,
/// as the index subset, trying sizes from the largest down.
fn best_subset(v: &IntMatrix, max: usize, min: usize) -> Option<Vec<usize>> {
    let mut k = max;
    while k >= min.max(2) {
        let candidates = if binomial(v.rows(), k) <= SUBSET_LIMIT {
            subsets(v.rows(), k)
        } else {
            vec![(0..k).collect()]
        };
        for s in candidates {
            let b = IntMatrix::from_fn(k, k, |i, j| v[(s[i], s[j])].clone());
            // cheap necessary conditions before the polynomial determinant
            if !b.sub(&b.transpose()).det().is_one() {
                continue;
            }
            if !b.add(&b.transpose()).det().abs().is_one() {
                continue;
            }
            if is_alexander_trivial(&b).unwrap_or(false) {
                return Some(s);
            }
        }
        k -= 2;
    }
    None
}

fn certificate_for(u: &IntMatrix, subset: &[usize]) -> TrivialBlockCertificate {
    let m = u.rows();
    let mut order = subset.to_vec();
    order.extend((0..m).filter(|i| !subset.contains(i)));
    TrivialBlockCertificate { basis_change: IntMatrix::permutation(&order).mul(u), block_size: subset.len() }
}

/// Breadth-first search over elementary congruences of `V` for a large
/// Alexander-trivial block.
///
/// Every visited matrix is tested on all even principal submatrices. The
/// result always verifies; ties between blocks of equal size go to the
/// lexicographically smallest basis change. Memoization is keyed by the exact
/// transformed matrix.
pub fn search_trivial_block(v: &SeifertMatrix, budget: &SearchBudget) -> TrivialBlockCertificate {
    let m = v.size();
    // a block of size 2n forces (m - 2n - r + 1) >= deg Delta
    let span = v.alexander().span() as usize;
    let cap = (m + 1).saturating_sub(v.components() + span) & !1;
    let mut best = TrivialBlockCertificate::empty(m);
    if cap == 0 {
        return best;
    }
    let all_moves = moves(m, budget.max_coeff);
    let mut seen: HashSet<IntMatrix> = HashSet::new();
    let mut queue: VecDeque<(IntMatrix, IntMatrix, usize)> = VecDeque::new();
    seen.insert(v.matrix().clone());
    queue.push_back((v.matrix().clone(), IntMatrix::identity(m), 0));
    while let Some((w, u, depth)) = queue.pop_front() {
        if let Some(s) = best_subset(&w, cap, best.block_size.max(2)) {
            let cand = certificate_for(&u, &s);
            let better = cand.block_size > best.block_size
                || (cand.block_size == best.block_size
                    && cand.basis_change.to_rows() < best.basis_change.to_rows());
            if better {
                best = cand;
            }
        }
        if depth == budget.max_depth {
            continue;
        }
        for &mv in &all_moves {
            if seen.len() >= budget.max_states {
                break;
            }
            let (w2, u2) = apply(&w, &u, mv);
            if seen.insert(w2.clone()) {
                queue.push_back((w2, u2, depth + 1));
            }
        }
    }
    debug_assert!(best.verify(v).is_ok());
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::StabilizationKind;

    #[test]
    fn small_cases() {
        let st = SeifertMatrix::stabilized_unknot();
        let c = search_trivial_block(&st, &SearchBudget::default());
        assert_eq!(c.block_size, 2);
        let tre = SeifertMatrix::torus_2(3).unwrap();
        assert_eq!(search_trivial_block(&tre, &SearchBudget::default()).block_size, 0);
    }

    #[test]
    fn recovers_scrambled_stabilization() {
        let fig = SeifertMatrix::figure_eight();
        let z = BigInt::from(0);
        let v = fig.stabilize(&[z.clone(), z.clone()], &z, StabilizationKind::Upper).unwrap();
        let s = IntMatrix::from_i64_rows(&[vec![1, 0, 1, 0], vec![0, 1, 0, 0], vec![0, 1, 1, 0], vec![1, 0, 0, 1]])
            .unwrap();
        let scrambled = v.congruence(&s).unwrap();
        let budget = SearchBudget { max_depth: 2, max_coeff: 1, max_states: 50_000 };
        let c = search_trivial_block(&scrambled, &budget);
        assert_eq!(c.block_size, 2);
        c.verify(&scrambled).unwrap();
    }

    #[test]
    fn monotone_in_depth() {
        let fig = SeifertMatrix::figure_eight();
        let z = BigInt::from(0);
        let v = fig.stabilize(&[BigInt::from(1), z.clone()], &BigInt::from(2), StabilizationKind::Lower).unwrap();
        let mut last = 0;
        for d in 0..3 {
            let c = search_trivial_block(&v, &SearchBudget { max_depth: d, max_coeff: 1, max_states: 10_000 });
            assert!(c.block_size >= last);
            last = c.block_size;
        }
    }
}
