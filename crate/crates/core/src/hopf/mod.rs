//! Candidate Hopf structures on `k↻_N`, stored as structure constants.
//!
//! A [`MultTable`] fixes the product of every pair of basis paths. The
//! coalgebra side is always deconcatenation, so whether a table defines a
//! Hopf algebra is a finite check on basis tuples; see [`verify`].

mod classify;
mod enumerate;
mod structure;
mod verify;

pub use classify::{classify, frobenius_rank, normalize_dim_p, Classification, Normalized};
pub use enumerate::enumerate_bialgebras;
pub use structure::{frobenius, integral, is_local, is_semisimple, verify_uniserial, IntegralData};
pub use verify::{antipode, verify, verify_bialgebra, Antipode, BialgebraChecks, Check, HopfReport};

use crate::endo::LambdaSeq;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::loop_coalgebra::LoopElement;
use crate::scalars::{Field, FieldElement};

/// Provenance carried into table files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTag {
    pub name: String,
    pub n: usize,
    pub d: Option<usize>,
}

/// `entries[a][b] = a_a · a_b` on `k↻_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultTable {
    field: Field,
    bound: usize,
    entries: Vec<LoopElement>,
    family: Option<FamilyTag>,
}

impl MultTable {
    /// Checks shape, fields and bounds only. The unit law and the Hopf
    /// axioms are the verifier's business.
    pub fn new(field: &Field, entries: Vec<Vec<LoopElement>>) -> Result<MultTable> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in entries.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {a} has {} cells, expected {n}", row.len())));
            }
            for (b, e) in row.into_iter().enumerate() {
                if e.field() != field {
                    return Err(Error::IncompatibleFields);
                }
                if e.bound() != n {
                    return Err(Error::InvalidTable(format!("cell ({a},{b}) has bound {}", e.bound())));
                }
                flat.push(e);
            }
        }
        Ok(MultTable { field: field.clone(), bound: n, entries: flat, family: None })
    }

    pub fn from_fn(
        field: &Field,
        bound: usize,
        mut f: impl FnMut(usize, usize) -> Result<LoopElement>,
    ) -> Result<MultTable> {
        let rows = (0..bound)
            .map(|a| (0..bound).map(|b| f(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        MultTable::new(field, rows)
    }

    pub fn with_family(mut self, tag: FamilyTag) -> MultTable {
        self.family = Some(tag);
        self
    }

    pub fn family(&self) -> Option<&FamilyTag> {
        self.family.as_ref()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The truncation bound `N`, i.e. the dimension.
    pub fn bound(&self) -> usize {
        self.bound
    }

    #[inline]
    pub fn entry(&self, a: usize, b: usize) -> &LoopElement {
        &self.entries[a * self.bound + b]
    }

    pub fn basis(&self, m: usize) -> LoopElement {
        LoopElement::basis(&self.field, self.bound, m).expect("index below bound")
    }

    pub fn unit(&self) -> LoopElement {
        LoopElement::unit(&self.field, self.bound)
    }

    fn check(&self, x: &LoopElement) -> Result<()> {
        if x.field() != &self.field {
            return Err(Error::IncompatibleFields);
        }
        if x.bound() != self.bound {
            return Err(Error::BoundMismatch(x.bound(), self.bound));
        }
        Ok(())
    }

    /// Bilinear extension of the table.
    pub fn multiply(&self, x: &LoopElement, y: &LoopElement) -> Result<LoopElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &LoopElement, y: &LoopElement) -> LoopElement {
        let mut out = LoopElement::zero(&self.field, self.bound);
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                out.axpy(self.field.mul(ca, cb), self.entry(a, b));
            }
        }
        out
    }

    /// `x^e` by repeated multiplication on the right.
    pub fn power(&self, x: &LoopElement, e: usize) -> Result<LoopElement> {
        self.check(x)?;
        let mut acc = self.unit();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        Ok(acc)
    }

    /// The same structure constants over a larger field.
    pub fn embed_into(&self, to: &Field) -> Result<MultTable> {
        if to == &self.field {
            return Ok(self.clone());
        }
        let emb = self.field.embedding_into(to)?;
        let entries = self
            .entries
            .iter()
            .map(|e| {
                LoopElement::from_terms(to, self.bound, e.terms().map(|(m, c)| (m, emb[c.value() as usize])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MultTable { field: to.clone(), bound: self.bound, entries, family: self.family.clone() })
    }

    /// Structure constants in the basis `f(a_0), ..., f(a_{N-1})` for a
    /// coalgebra automorphism `f`. The result is isomorphic to `self` as a
    /// Hopf algebra on the same coalgebra.
    pub fn transport(&self, f: &LambdaSeq) -> Result<MultTable> {
        if f.field() != &self.field {
            return Err(Error::IncompatibleFields);
        }
        if !f.is_automorphism() {
            return Err(Error::NotInvertible);
        }
        let n = self.bound;
        let m = f.matrix(n);
        let inv = m.inverse()?;
        let images: Vec<LoopElement> =
            (0..n).map(|c| LoopElement::from_dense(&self.field, &m.column(c))).collect();
        let table = MultTable::from_fn(&self.field, n, |a, b| {
            let prod = self.mul(&images[a], &images[b]);
            Ok(LoopElement::from_dense(&self.field, &inv.mul_vec(&prod.to_dense())))
        })?;
        Ok(MultTable { family: self.family.clone(), ..table })
    }

    /// Left multiplication by `a_a` as a matrix.
    pub(crate) fn left_mult_matrix(&self, a: usize) -> Matrix {
        let n = self.bound;
        let mut m = Matrix::zeros(&self.field, n, n);
        for b in 0..n {
            for (r, c) in self.entry(a, b).terms() {
                m.set(r, b, c);
            }
        }
        m
    }

    pub(crate) fn neg_one(&self) -> FieldElement {
        self.field.neg(FieldElement::ONE)
    }
}
