//! Seifert matrices, S-equivalence moves, Alexander-trivial blocks and their
//! certificates, and the integral normal forms they rely on.

mod skew;
mod smith;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{seifert_det, IntMatrix, LaurentPoly};

pub use skew::{skew_normalize, SkewNormalForm};
pub use smith::{smith_invariants, smith_normal_form, AbelianGroup, SmithForm};

/// Placement of the two new basis vectors in [`SeifertMatrix::stabilize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilizationKind {
    /// `[[V, xi, 0], [0, x, 1], [0, 0, 0]]`.
    Upper,
    /// `[[V, 0, 0], [xi^T, x, 0], [0, 1, 0]]`.
    Lower,
}

/// Integer Seifert matrix of an oriented link with `components` components.
///
/// Construction checks the skew-form conditions of a connected surface with
/// `r` boundary components: `V - V^T` has corank `r - 1` and its nonsingular
/// part is unimodular. Whether the matrix is realized by an embedded surface
/// is not (and cannot be) checked here.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SeifertMatrix {
    entries: IntMatrix,
    components: usize,
    name: Option<String>,
}

impl SeifertMatrix {
    pub fn new(entries: IntMatrix, components: usize) -> Result<Self> {
        let v = SeifertMatrix { entries, components, name: None };
        v.validate()?;
        Ok(v)
    }

    pub fn knot(entries: IntMatrix) -> Result<Self> {
        SeifertMatrix::new(entries, 1)
    }

    pub fn from_i64(rows: &[Vec<i64>], components: usize) -> Result<Self> {
        SeifertMatrix::new(IntMatrix::from_i64_rows(rows)?, components)
    }

    /// Skips validation; for matrices known to be valid by construction.
    pub(crate) fn new_unchecked(entries: IntMatrix, components: usize) -> Self {
        debug_assert!(entries.is_square());
        SeifertMatrix { entries, components, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.rows()
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    /// `V - V^T`.
    pub fn skew_part(&self) -> IntMatrix {
        self.entries.sub(&self.entries.transpose())
    }

    /// `V + V^T`.
    pub fn symmetrized(&self) -> IntMatrix {
        self.entries.add(&self.entries.transpose())
    }

    pub fn validate(&self) -> Result<()> {
        let (rows, cols) = (self.entries.rows(), self.entries.cols());
        if rows != cols {
            return Err(Error::NonSquare { rows, cols });
        }
        if self.components == 0 {
            return Err(Error::InvalidParameter("component count must be positive".into()));
        }
        let form = skew_normalize(&self.skew_part())?;
        if form.nullity != self.components - 1 {
            return Err(Error::CorankMismatch { expected: self.components - 1, found: form.nullity });
        }
        if let Some(d) = form.blocks.iter().find(|d| !d.is_one()) {
            return Err(Error::NotUnimodularSkew(d.to_string()));
        }
        Ok(())
    }

    /// `det(tV - V^T)` up to units; `1` for the empty matrix.
    pub fn alexander(&self) -> LaurentPoly {
        LaurentPoly::from_intpoly(&seifert_det(&self.entries), 0).normalize_alexander()
    }

    /// `U V U^T`.
    pub fn congruence(&self, u: &IntMatrix) -> Result<SeifertMatrix> {
        if !u.is_square() || u.rows() != self.size() {
            return Err(Error::SizeMismatch { expected: self.size(), found: u.rows() });
        }
        let d = u.det();
        if !(d.is_one() || d == -BigInt::one()) {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        Ok(SeifertMatrix::new_unchecked(self.entries.congruent(u), self.components))
    }

    /// Enlarges `V` by two rows and columns, the matrix form of a stabilization
    /// of the surface. `row` couples the first new vector to the old basis.
    pub fn stabilize(&self, row: &[BigInt], x: &BigInt, kind: StabilizationKind) -> Result<SeifertMatrix> {
        let m = self.size();
        if row.len() != m {
            return Err(Error::SizeMismatch { expected: m, found: row.len() });
        }
        let mut out = IntMatrix::zeros(m + 2, m + 2);
        for i in 0..m {
            for j in 0..m {
                out[(i, j)] = self.entries[(i, j)].clone();
            }
        }
        out[(m, m)] = x.clone();
        match kind {
            StabilizationKind::Upper => {
                for (i, c) in row.iter().enumerate() {
                    out[(i, m)] = c.clone();
                }
                out[(m, m + 1)] = BigInt::one();
            }
            StabilizationKind::Lower => {
                for (i, c) in row.iter().enumerate() {
                    out[(m, i)] = c.clone();
                }
                out[(m + 1, m)] = BigInt::one();
            }
        }
        Ok(SeifertMatrix::new_unchecked(out, self.components))
    }

    /// Block sum of two surfaces joined along a band; component counts add
    /// as for the split union of boundaries minus one.
    pub fn direct_sum(&self, other: &SeifertMatrix) -> SeifertMatrix {
        SeifertMatrix::new_unchecked(
            self.entries.block_diag(&other.entries),
            self.components + other.components - 1,
        )
    }

    /// `-V`, a Seifert matrix of the reversed mirror image (the concordance inverse).
    pub fn mirror_reverse(&self) -> SeifertMatrix {
        let mut out = SeifertMatrix::new_unchecked(self.entries.neg(), self.components);
        out.name = self.name.as_ref().map(|n| format!("-{n}"));
        out
    }

    pub fn unknot() -> SeifertMatrix {
        SeifertMatrix::new_unchecked(IntMatrix::zeros(0, 0), 1).with_name("unknot")
    }

    /// The torus knot `T(2, n)`, `n` odd and positive: the `(n-1) x (n-1)`
    /// bidiagonal matrix with `-1` on the diagonal and `1` above it.
    pub fn torus_2(n: u32) -> Result<SeifertMatrix> {
        if n % 2 == 0 {
            return Err(Error::EvenParameter(n as i64));
        }
        let m = (n - 1) as usize;
        let v = IntMatrix::from_fn(m, m, |i, j| {
            if i == j {
                -BigInt::one()
            } else if j == i + 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        Ok(SeifertMatrix::new_unchecked(v, 1).with_name(format!("T(2,{n})")))
    }

    pub fn figure_eight() -> SeifertMatrix {
        let v = IntMatrix::from_i64_rows(&[vec![1, 1], vec![0, -1]]).unwrap();
        SeifertMatrix::new_unchecked(v, 1).with_name("4_1")
    }

    /// The stabilized unknot `[[0, 1], [0, 0]]`.
    pub fn stabilized_unknot() -> SeifertMatrix {
        let v = IntMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        SeifertMatrix::new_unchecked(v, 1).with_name("unknot (stabilized)")
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = &self.name {
            write!(f, "{n}: ")?;
        }
        write!(f, "{}", self.entries)
    }
}

/// True iff `det(tB - B^T) = t^n` for the `2n x 2n` matrix `B`; tested as
/// "normalized determinant is 1 and `det(B - B^T) = 1`", a form that does not
/// depend on the transposition convention.
pub fn is_alexander_trivial(b: &IntMatrix) -> Result<bool> {
    if !b.is_square() {
        return Err(Error::NonSquare { rows: b.rows(), cols: b.cols() });
    }
    let n = b.rows();
    if n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    if n == 0 {
        return Ok(true);
    }
    if !b.sub(&b.transpose()).det().is_one() {
        return Ok(false);
    }
    let delta = LaurentPoly::from_intpoly(&seifert_det(b), 0).normalize_alexander();
    Ok(delta.is_one())
}

/// A unimodular basis change whose leading `block_size` principal block of
/// `U V U^T` is Alexander-trivial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrivialBlockCertificate {
    pub basis_change: IntMatrix,
    pub block_size: usize,
}

impl TrivialBlockCertificate {
    /// The certificate with no trivial block.
    pub fn empty(m: usize) -> Self {
        TrivialBlockCertificate { basis_change: IntMatrix::identity(m), block_size: 0 }
    }

    /// The leading block is trivial in the given basis.
    pub fn leading(m: usize, block_size: usize) -> Self {
        TrivialBlockCertificate { basis_change: IntMatrix::identity(m), block_size }
    }

    /// `U V U^T`.
    pub fn transformed(&self, v: &SeifertMatrix) -> IntMatrix {
        v.matrix().congruent(&self.basis_change)
    }

    pub fn block(&self, v: &SeifertMatrix) -> IntMatrix {
        self.transformed(v).leading(self.block_size)
    }

    pub fn verify(&self, v: &SeifertMatrix) -> Result<()> {
        let m = v.size();
        let u = &self.basis_change;
        if !u.is_square() || u.rows() != m {
            return Err(Error::CertificateInvalid(format!("basis change is {}x{}, matrix is {m}x{m}", u.rows(), u.cols())));
        }
        if self.block_size % 2 == 1 || self.block_size > m {
            return Err(Error::CertificateInvalid(format!("block size {} on a {m}x{m} matrix", self.block_size)));
        }
        if !u.is_unimodular() {
            return Err(Error::CertificateInvalid(format!("basis change has det {}", u.det())));
        }
        if !is_alexander_trivial(&self.block(v))? {
            return Err(Error::CertificateInvalid(format!(
                "leading {0}x{0} block is not Alexander-trivial",
                self.block_size
            )));
        }
        Ok(())
    }

    /// `2 * (m - 2n - r + 1) / 2`, i.e. twice the implied algebraic-genus bound.
    pub fn twice_bound(&self, v: &SeifertMatrix) -> i64 {
        v.size() as i64 - self.block_size as i64 - v.components() as i64 + 1
    }

    /// Block sum of certificates for `V1 + V2`: the two trivial blocks are
    /// brought to the front, followed by the two complements.
    pub fn direct_sum(&self, m1: usize, other: &TrivialBlockCertificate, m2: usize) -> TrivialBlockCertificate {
        let u = self.basis_change.block_diag(&other.basis_change);
        let (a1, a2) = (self.block_size, other.block_size);
        let order: Vec<usize> = (0..a1)
            .chain(m1..m1 + a2)
            .chain(a1..m1)
            .chain(m1 + a2..m1 + m2)
            .collect();
        TrivialBlockCertificate {
            basis_change: IntMatrix::permutation(&order).mul(&u),
            block_size: a1 + a2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(rows: &[Vec<i64>]) -> LaurentPoly {
        SeifertMatrix::from_i64(rows, 1).unwrap().alexander()
    }

    #[test]
    fn validation() {
        assert!(SeifertMatrix::from_i64(&[vec![-1, 1], vec![0, -1]], 1).is_ok());
        assert!(SeifertMatrix::from_i64(&[], 1).is_ok());
        assert!(matches!(
            SeifertMatrix::from_i64(&[vec![0, 2], vec![0, 0]], 1),
            Err(Error::NotUnimodularSkew(_))
        ));
        assert!(matches!(
            SeifertMatrix::from_i64(&[vec![1]], 1),
            Err(Error::CorankMismatch { expected: 0, found: 1 })
        ));
        assert!(SeifertMatrix::from_i64(&[vec![1]], 2).is_ok());
        assert!(matches!(
            SeifertMatrix::new(IntMatrix::zeros(2, 3), 1),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn alexander_polynomials() {
        assert_eq!(tp(&[vec![-1, 1], vec![0, -1]]), LaurentPoly::from_i64(0, &[1, -1, 1]));
        assert_eq!(tp(&[vec![1, 1], vec![0, -1]]), LaurentPoly::from_i64(0, &[1, -3, 1]));
        assert_eq!(SeifertMatrix::unknot().alexander(), LaurentPoly::one());
        assert_eq!(
            SeifertMatrix::torus_2(5).unwrap().alexander(),
            LaurentPoly::from_i64(0, &[1, -1, 1, -1, 1])
        );
    }

    #[test]
    fn triviality() {
        let b = IntMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(is_alexander_trivial(&b).unwrap());
        let t = IntMatrix::from_i64_rows(&[vec![-1, 1], vec![0, -1]]).unwrap();
        assert!(!is_alexander_trivial(&t).unwrap());
        assert!(is_alexander_trivial(&IntMatrix::zeros(0, 0)).unwrap());
        assert_eq!(is_alexander_trivial(&IntMatrix::zeros(1, 1)), Err(Error::OddSize(1)));
        // either transposition convention
        assert!(is_alexander_trivial(&b.transpose()).unwrap());
    }

    #[test]
    fn congruence_preserves_alexander() {
        let v = SeifertMatrix::torus_2(3).unwrap();
        let u = IntMatrix::from_i64_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let w = v.congruence(&u).unwrap();
        assert_eq!(w.matrix(), &IntMatrix::from_i64_rows(&[vec![-1, 0], vec![-1, -1]]).unwrap());
        assert_eq!(w.alexander(), v.alexander());
        let bad = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 1]]).unwrap();
        assert!(matches!(v.congruence(&bad), Err(Error::NotUnimodular(_))));
        assert!(matches!(v.congruence(&IntMatrix::identity(3)), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn stabilization() {
        let s = SeifertMatrix::unknot().stabilize(&[], &BigInt::zero(), StabilizationKind::Upper).unwrap();
        assert_eq!(s.matrix(), &IntMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]).unwrap());
        let tre = SeifertMatrix::torus_2(3).unwrap();
        let row = [BigInt::from(1), BigInt::from(0)];
        let st = tre.stabilize(&row, &BigInt::from(2), StabilizationKind::Lower).unwrap();
        st.validate().unwrap();
        assert_eq!(st.alexander(), tre.alexander());
        assert!(matches!(
            tre.stabilize(&[], &BigInt::zero(), StabilizationKind::Upper),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn certificates() {
        let tre = SeifertMatrix::torus_2(3).unwrap();
        let c = TrivialBlockCertificate::empty(2);
        c.verify(&tre).unwrap();
        assert_eq!(c.twice_bound(&tre), 2);
        assert!(TrivialBlockCertificate::leading(2, 2).verify(&tre).is_err());
        let st = SeifertMatrix::stabilized_unknot();
        let full = TrivialBlockCertificate::leading(2, 2);
        full.verify(&st).unwrap();
        assert_eq!(full.twice_bound(&st), 0);
        let sum = c.direct_sum(2, &full, 2);
        sum.verify(&tre.direct_sum(&st)).unwrap();
        assert_eq!(sum.block_size, 2);
    }
}
