use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{IntMatrix, IntPoly};
use crate::seifert::{AbelianGroup, SeifertMatrix};

/// Presentation of `H_1(Sigma_n)` as a module over `Z[t]/(1 + t + ... + t^(n-1))`,
/// written out over `Z` in the basis `t^j e_k`, `0 <= j <= n - 2`.
///
/// The relations are `(tV - V^T) t^j e_k`; `t^(n-1)` is rewritten as
/// `-(1 + ... + t^(n-2))`. For `n = 2` this is `-(V + V^T)`.
pub fn branched_cover_presentation(v: &SeifertMatrix, n: u64) -> Result<IntMatrix> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("branched cover order {n} < 2")));
    }
    let m = v.size();
    let powers = (n - 1) as usize;
    let a = v.matrix();
    let size = powers * m;
    let mut out = IntMatrix::zeros(size, size);
    // adds c * t^power * e_row to column col
    let put = |out: &mut IntMatrix, power: usize, row: usize, col: usize, c: &BigInt| {
        if power < powers {
            out[(power * m + row, col)] += c;
        } else {
            for p in 0..powers {
                out[(p * m + row, col)] -= c;
            }
        }
    };
    for j in 0..powers {
        for k in 0..m {
            let col = j * m + k;
            for i in 0..m {
                put(&mut out, j + 1, i, col, &a[(i, k)]);
                put(&mut out, j, i, col, &-a[(k, i)].clone());
            }
        }
    }
    Ok(out)
}

/// `H_1` of the `n`-fold cyclic branched cover of the knot with Seifert matrix `V`.
pub fn branched_cover_homology(v: &SeifertMatrix, n: u64) -> Result<AbelianGroup> {
    if !v.is_knot() {
        return Err(Error::MultiComponent(v.components()));
    }
    Ok(AbelianGroup::cokernel(&branched_cover_presentation(v, n)?))
}

fn sylvester(f: &IntPoly, g: &IntPoly) -> IntMatrix {
    let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    let size = df + dg;
    IntMatrix::from_fn(size, size, |i, j| {
        // rows 0..dg carry shifts of f, rows dg.. carry shifts of g; highest coefficient first
        let (p, d, shift) = if i < dg { (f, df, i) } else { (g, dg, i - dg) };
        if j < shift || j > shift + d {
            BigInt::zero()
        } else {
            p.coeff(d - (j - shift))
        }
    })
}

/// `|Res((t^n - 1)/(t - 1), Delta_V)|`, the order of `H_1(Sigma_n)`; zero when
/// the group is infinite.
pub fn homology_order_oracle(v: &SeifertMatrix, n: u64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("branched cover order {n} < 2")));
    }
    let delta = v
        .alexander()
        .normalize_alexander()
        .to_intpoly()
        .expect("normalized Alexander polynomial has no negative powers");
    if delta.degree().unwrap_or(0) == 0 {
        return Ok(delta.coeff(0).abs());
    }
    let phi = IntPoly::new(vec![BigInt::from(1); n as usize]);
    Ok(sylvester(&phi, &delta).det().abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_covers() {
        let tre = SeifertMatrix::torus_2(3).unwrap();
        assert_eq!(branched_cover_homology(&tre, 2).unwrap(), AbelianGroup::cyclic(3));
        let z22 = AbelianGroup::cyclic(2).direct_sum(&AbelianGroup::cyclic(2));
        assert_eq!(branched_cover_homology(&tre, 3).unwrap(), z22);
        assert_eq!(homology_order_oracle(&tre, 3).unwrap(), BigInt::from(4));
        assert_eq!(homology_order_oracle(&tre, 2).unwrap(), BigInt::from(3));
        // the 6-fold cover of the trefoil has infinite homology
        assert_eq!(homology_order_oracle(&tre, 6).unwrap(), BigInt::zero());
        assert_eq!(branched_cover_homology(&tre, 6).unwrap().order(), None);
        let fig = SeifertMatrix::figure_eight();
        assert_eq!(branched_cover_homology(&fig, 2).unwrap(), AbelianGroup::cyclic(5));
        assert_eq!(homology_order_oracle(&fig, 2).unwrap(), BigInt::from(5));
        let u = SeifertMatrix::unknot();
        assert!(branched_cover_homology(&u, 5).unwrap().is_trivial());
        assert_eq!(homology_order_oracle(&u, 5).unwrap(), BigInt::from(1));
    }

    #[test]
    fn order_matches_oracle() {
        let knots = [
            SeifertMatrix::torus_2(3).unwrap(),
            SeifertMatrix::torus_2(5).unwrap(),
            SeifertMatrix::torus_2(7).unwrap(),
            SeifertMatrix::figure_eight(),
            SeifertMatrix::stabilized_unknot(),
        ];
        for k in &knots {
            for n in [2, 3, 4, 5, 7, 8, 9] {
                let g = branched_cover_homology(k, n).unwrap();
                assert_eq!(g.order().unwrap_or_default(), homology_order_oracle(k, n).unwrap(), "n={n}");
            }
        }
    }
}
