//! Seifert matrices of satellites `P(K)` and trivial-block certificates for them.
//!
//! For a pattern with Seifert matrix `V1` and winding number `w >= 0` and a
//! companion with Seifert matrix `V2`, the satellite has Seifert matrix
//! `V1 + wV2`, where `wV2` is the cable block matrix with `V2` on and above
//! the block diagonal and `V2^T` below it. Given trivial blocks for `V1` and
//! `V2`, [`satellite_certificate`] produces one for the satellite with
//! `g1 + g2` as the implied bound.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;
use crate::seifert::{skew_normalize, SeifertMatrix, TrivialBlockCertificate};

/// A pattern `P` in the solid torus: a Seifert matrix of `P(U)`, the winding
/// number and optionally a trivial-block certificate for the matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    matrix: SeifertMatrix,
    winding: u64,
    certificate: Option<TrivialBlockCertificate>,
}

impl Pattern {
    /// Rejects negative winding numbers; see [`Pattern::from_signed`].
    pub fn new(matrix: SeifertMatrix, winding: i64, certificate: Option<TrivialBlockCertificate>) -> Result<Self> {
        if winding < 0 {
            return Err(Error::NegativeWinding(winding));
        }
        if let Some(c) = &certificate {
            c.verify(&matrix)?;
        }
        Ok(Pattern { matrix, winding: winding as u64, certificate })
    }

    /// Accepts any winding number. A negative one is made positive by
    /// reversing the pattern, whose Seifert matrix is `V1^T`; a certificate
    /// for `V1` remains valid for `V1^T`. The flag reports whether this happened.
    pub fn from_signed(
        matrix: SeifertMatrix,
        winding: i64,
        certificate: Option<TrivialBlockCertificate>,
    ) -> Result<(Self, bool)> {
        if winding >= 0 {
            return Ok((Pattern::new(matrix, winding, certificate)?, false));
        }
        let mut reversed = SeifertMatrix::new_unchecked(matrix.matrix().transpose(), matrix.components());
        if let Some(n) = matrix.name() {
            reversed = reversed.with_name(format!("{n} (reversed)"));
        }
        Ok((Pattern::new(reversed, -winding, certificate)?, true))
    }

    /// The cable pattern `C_{w,1}`: an unknotted closure with empty Seifert matrix.
    pub fn cable(w: u64) -> Self {
        Pattern {
            matrix: SeifertMatrix::unknot(),
            winding: w,
            certificate: Some(TrivialBlockCertificate::empty(0)),
        }
    }

    pub fn matrix(&self) -> &SeifertMatrix {
        &self.matrix
    }

    pub fn winding(&self) -> u64 {
        self.winding
    }

    pub fn components(&self) -> usize {
        self.matrix.components()
    }

    pub fn certificate(&self) -> Option<&TrivialBlockCertificate> {
        self.certificate.as_ref()
    }

    pub fn with_certificate(mut self, certificate: TrivialBlockCertificate) -> Result<Self> {
        certificate.verify(&self.matrix)?;
        self.certificate = Some(certificate);
        Ok(self)
    }
}

/// The `w x w` block matrix with `V2` in blocks `(i, j)`, `i <= j`, and `V2^T`
/// below the diagonal: a Seifert matrix of the `(w, 1)`-cable of `V2`'s knot.
pub fn cable_matrix(w: i64, v2: &SeifertMatrix) -> Result<SeifertMatrix> {
    if w < 0 {
        return Err(Error::NegativeWinding(w));
    }
    if !v2.is_knot() {
        return Err(Error::MultiComponentCompanion(v2.components()));
    }
    let w = w as usize;
    let n = v2.size();
    let v = v2.matrix();
    let m = IntMatrix::from_fn(w * n, w * n, |i, j| {
        let (bi, bj) = (i / n, j / n);
        let (a, b) = (i % n, j % n);
        if bi <= bj {
            v[(a, b)].clone()
        } else {
            v[(b, a)].clone()
        }
    });
    Ok(SeifertMatrix::new_unchecked(m, 1))
}

/// `V1 + |w| V2`, a Seifert matrix of `P(K)`.
pub fn satellite_matrix(p: &Pattern, k: &SeifertMatrix) -> Result<SeifertMatrix> {
    let c = cable_matrix(p.winding as i64, k)?;
    Ok(SeifertMatrix::new_unchecked(
        p.matrix.matrix().block_diag(c.matrix()),
        p.components(),
    ))
}

/// The block matrix with `I` on the diagonal and `-I` just below it; it takes
/// the cable matrix of `V2` to the lower bidiagonal form with `V2` in the
/// corner, `V2 - V2^T` on the rest of the diagonal and `V2^T - V2` below it.
pub fn cable_congruence(w: usize, n: usize) -> IntMatrix {
    IntMatrix::from_fn(w * n, w * n, |i, j| {
        if i == j {
            BigInt::one()
        } else if i % n == j % n && i / n == j / n + 1 {
            -BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// `I_w (x) u`.
fn repeat_block(w: usize, u: &IntMatrix) -> IntMatrix {
    let n = u.rows();
    IntMatrix::from_fn(w * n, w * n, |i, j| {
        if i / n == j / n {
            u[(i % n, j % n)].clone()
        } else {
            BigInt::zero()
        }
    })
}

/// Basis change on the companion: keep the certified block `A` in front,
/// split the skew form as `(A - A^T) + J`, and put the complement in the
/// order where `D - D^T = [[0, I], [-I, 0]]`.
fn normalize_companion(k: &SeifertMatrix, cert: &TrivialBlockCertificate) -> Result<IntMatrix> {
    let n = k.size();
    let a = cert.block_size;
    let w0 = cert.transformed(k);
    let s = w0.sub(&w0.transpose());
    let sa = s.leading(a);
    let sa_inv = sa
        .unimodular_inverse()
        .map_err(|_| Error::VerificationFailed("certified block has non-unimodular skew part".into()))?;
    let rest: Vec<usize> = (a..n).collect();
    let front: Vec<usize> = (0..a).collect();
    let x = s.submatrix(&rest, &front).mul(&sa_inv);
    let mut e1 = IntMatrix::identity(n);
    for i in 0..n - a {
        for j in 0..a {
            e1[(a + i, j)] = -x[(i, j)].clone();
        }
    }
    let u1 = e1.mul(&cert.basis_change);
    let s1 = k.matrix().congruent(&u1);
    let s1 = s1.sub(&s1.transpose());
    let form = skew_normalize(&s1.principal(&rest))?;
    if form.nullity != 0 || !form.is_unimodular_part() {
        return Err(Error::VerificationFailed("complement skew form is not unimodular".into()));
    }
    let g = form.blocks.len();
    let order: Vec<usize> = (0..g).map(|i| 2 * i).chain((0..g).map(|i| 2 * i + 1)).collect();
    let d = IntMatrix::permutation(&order).mul(&form.basis_change);
    let e2 = IntMatrix::identity(a).block_diag(&d);
    Ok(e2.mul(&u1))
}

/// Checks the bidiagonal block shape of `P C P^T` entrywise.
fn check_bidiagonal(x: &IntMatrix, w: usize, v: &IntMatrix) -> Result<()> {
    let n = v.rows();
    let skew = v.sub(&v.transpose());
    let neg_skew = skew.neg();
    let zero = IntMatrix::zeros(n, n);
    for bi in 0..w {
        for bj in 0..w {
            let expected = if bi == 0 && bj == 0 {
                v
            } else if bi == bj {
                &skew
            } else if bi == bj + 1 {
                &neg_skew
            } else {
                &zero
            };
            let rows: Vec<usize> = (bi * n..(bi + 1) * n).collect();
            let cols: Vec<usize> = (bj * n..(bj + 1) * n).collect();
            if x.submatrix(&rows, &cols) != *expected {
                return Err(Error::VerificationFailed(format!("block ({bi},{bj}) of the bidiagonal form")));
            }
        }
    }
    Ok(())
}

/// Indices of the Alexander-trivial submatrix of the bidiagonal form.
///
/// Each copy `c` of the companion basis splits as `A_c` (the certified block),
/// `f_c` and `s_c` (the two halves of the symplectic complement). Kept are all
/// `A_c`, then `s_0`, then `f_c, s_c` for `c >= 1`, leaving out `f_0` and
/// `s_{w-1}`.
fn trivial_indices(w: usize, n: usize, a: usize) -> Vec<usize> {
    let g = (n - a) / 2;
    let f = |c: usize| c * n + a..c * n + a + g;
    let s = |c: usize| c * n + a + g..(c + 1) * n;
    let mut idx: Vec<usize> = (0..w).flat_map(|c| c * n..c * n + a).collect();
    if w >= 2 {
        idx.extend(s(0));
        for c in 1..w {
            idx.extend(f(c));
            if c + 1 < w {
                idx.extend(s(c));
            }
        }
    }
    idx
}

/// A trivial-block certificate for `satellite_matrix(p, k)` of size
/// `2(m1 - g1) + 2(|w| m2 - g2)`, built from certificates for the pattern and
/// the companion and re-verified before it is returned.
pub fn satellite_certificate(
    p: &Pattern,
    k: &SeifertMatrix,
    cert_k: &TrivialBlockCertificate,
) -> Result<TrivialBlockCertificate> {
    let cert_p = p.certificate.as_ref().ok_or(Error::MissingCertificate)?;
    cert_p.verify(&p.matrix)?;
    if !k.is_knot() {
        return Err(Error::MultiComponentCompanion(k.components()));
    }
    cert_k.verify(k)?;
    let sat = satellite_matrix(p, k)?;
    let w = p.winding as usize;
    if w == 0 {
        return Ok(cert_p.clone());
    }
    let (m1, n2) = (p.matrix.size(), k.size());
    let a2 = cert_k.block_size;

    let uc = normalize_companion(k, cert_k)?;
    let wk = k.matrix().congruent(&uc);
    let pb = cable_congruence(w, n2);
    let uk = pb.mul(&repeat_block(w, &uc));
    let cable = cable_matrix(w as i64, k)?;
    check_bidiagonal(&cable.matrix().congruent(&uk), w, &wk)?;

    let a1 = cert_p.block_size;
    let keep: Vec<usize> = trivial_indices(w, n2, a2).into_iter().map(|i| m1 + i).collect();
    let mut order: Vec<usize> = (0..a1).collect();
    order.extend(&keep);
    let mut used = vec![false; m1 + w * n2];
    for &i in &order {
        used[i] = true;
    }
    order.extend((0..m1 + w * n2).filter(|&i| !used[i]));
    let u = IntMatrix::permutation(&order).mul(&cert_p.basis_change.block_diag(&uk));
    let cert = TrivialBlockCertificate { basis_change: u, block_size: a1 + keep.len() };
    cert.verify(&sat)
        .map_err(|e| Error::VerificationFailed(format!("assembled satellite certificate: {e}")))?;
    let expected = 2 * (cert_p.twice_bound(&p.matrix) / 2 + (n2 as i64 - a2 as i64) / 2);
    if cert.twice_bound(&sat) != expected {
        return Err(Error::VerificationFailed("implied bound differs from g1 + g2".into()));
    }
    Ok(cert)
}

/// Direct sum of two knot matrices (connected sum), combining certificates
/// when both are present.
pub fn connected_sum(
    v1: &SeifertMatrix,
    v2: &SeifertMatrix,
    cert1: Option<&TrivialBlockCertificate>,
    cert2: Option<&TrivialBlockCertificate>,
) -> Result<(SeifertMatrix, Option<TrivialBlockCertificate>)> {
    for v in [v1, v2] {
        if !v.is_knot() {
            return Err(Error::MultiComponent(v.components()));
        }
    }
    let sum = v1.direct_sum(v2);
    let cert = match (cert1, cert2) {
        (Some(c1), Some(c2)) => {
            c1.verify(v1)?;
            c2.verify(v2)?;
            let c = c1.direct_sum(v1.size(), c2, v2.size());
            c.verify(&sum)?;
            Some(c)
        }
        _ => None,
    };
    Ok((sum, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::LaurentPoly;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::torus_2(3).unwrap()
    }

    #[test]
    fn cable_shapes() {
        assert_eq!(cable_matrix(1, &trefoil()).unwrap().matrix(), trefoil().matrix());
        assert_eq!(cable_matrix(0, &trefoil()).unwrap().size(), 0);
        let fig = SeifertMatrix::figure_eight();
        assert_eq!(
            cable_matrix(2, &fig).unwrap().alexander(),
            LaurentPoly::from_i64(0, &[1, 0, -3, 0, 1])
        );
        assert_eq!(cable_matrix(-1, &fig), Err(Error::NegativeWinding(-1)));
        let link = SeifertMatrix::from_i64(&[vec![1]], 2).unwrap();
        assert_eq!(cable_matrix(2, &link), Err(Error::MultiComponentCompanion(2)));
    }

    #[test]
    fn satellites_of_the_trefoil() {
        let k = trefoil();
        let s = satellite_matrix(&Pattern::cable(2), &k).unwrap();
        assert_eq!(s.alexander(), LaurentPoly::from_i64(0, &[1, 0, -1, 0, 1]));
        let p = Pattern::new(SeifertMatrix::figure_eight(), 0, None).unwrap();
        assert_eq!(satellite_matrix(&p, &k).unwrap().matrix(), p.matrix().matrix());
    }

    #[test]
    fn cable_certificates() {
        let k = trefoil();
        let ck = TrivialBlockCertificate::empty(2);
        for w in 1..=5u64 {
            let p = Pattern::cable(w);
            let c = satellite_certificate(&p, &k, &ck).unwrap();
            let sat = satellite_matrix(&p, &k).unwrap();
            assert_eq!(c.block_size, 2 * w as usize - 2);
            assert_eq!(c.twice_bound(&sat), 2);
        }
    }

    #[test]
    fn full_certificates_give_zero() {
        let st = SeifertMatrix::stabilized_unknot();
        let full = TrivialBlockCertificate::leading(2, 2);
        let p = Pattern::new(st.clone(), 1, Some(full.clone())).unwrap();
        let c = satellite_certificate(&p, &st, &full).unwrap();
        assert_eq!(c.block_size, 4);
        let sat = satellite_matrix(&p, &st).unwrap();
        assert_eq!(c.twice_bound(&sat), 0);
    }

    #[test]
    fn negative_winding_is_reversed() {
        let (p, flipped) = Pattern::from_signed(trefoil(), -2, Some(TrivialBlockCertificate::empty(2))).unwrap();
        assert!(flipped);
        assert_eq!(p.winding(), 2);
        assert_eq!(p.matrix().matrix(), &trefoil().matrix().transpose());
        assert_eq!(Pattern::new(trefoil(), -1, None), Err(Error::NegativeWinding(-1)));
    }

    #[test]
    fn connected_sums() {
        let (s, _) = connected_sum(&SeifertMatrix::unknot(), &trefoil(), None, None).unwrap();
        assert_eq!(s.alexander(), trefoil().alexander());
        let st = SeifertMatrix::stabilized_unknot();
        let full = TrivialBlockCertificate::leading(2, 2);
        let (s, c) = connected_sum(&st, &st, Some(&full), Some(&full)).unwrap();
        assert_eq!(c.unwrap().twice_bound(&s), 0);
    }
}
