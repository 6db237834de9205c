//! The truncated loop path coalgebra `k↻_N`.
//!
//! Basis `a0, a1, ..., a(N-1)` where `a_m` is the unique path of length `m`
//! around the loop and `a0` is the trivial path. The comultiplication is
//! deconcatenation, `Δ(a_n) = Σ_{i+j=n} a_i ⊗ a_j`, and the counit picks out
//! the `a0` coefficient.

use crate::error::{Error, Result};
use crate::scalars::{Field, FieldElement};
use std::collections::BTreeMap;
use std::fmt;

/// An element of `k↻_N`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LoopElement {
    field: Field,
    bound: usize,
    coeffs: BTreeMap<usize, FieldElement>,
}

impl fmt::Debug for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LoopElement[N={}]({})", self.bound, self)
    }
}

/// `1*a0 + 2*a3`; the zero element renders as `0`.
impl fmt::Display for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.coeffs.iter().map(|(m, c)| format!("{c}*a{m}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl LoopElement {
    pub fn zero(field: &Field, bound: usize) -> LoopElement {
        LoopElement { field: field.clone(), bound, coeffs: BTreeMap::new() }
    }

    /// The path `a_m`.
    pub fn basis(field: &Field, bound: usize, m: usize) -> Result<LoopElement> {
        LoopElement::from_terms(field, bound, [(m, FieldElement::ONE)])
    }

    /// The trivial path `a0`, the unit of every Hopf structure here.
    pub fn unit(field: &Field, bound: usize) -> LoopElement {
        let mut e = LoopElement::zero(field, bound);
        if bound > 0 {
            e.coeffs.insert(0, FieldElement::ONE);
        }
        e
    }

    /// Sums repeated indices; rejects indices `>= bound` and foreign scalars.
    pub fn from_terms(
        field: &Field,
        bound: usize,
        terms: impl IntoIterator<Item = (usize, FieldElement)>,
    ) -> Result<LoopElement> {
        let mut e = LoopElement::zero(field, bound);
        for (m, c) in terms {
            if m >= bound {
                return Err(Error::IndexOutOfRange { index: m, bound });
            }
            if !field.contains(c) {
                return Err(Error::InvalidElement(format!("{c} not in {field}")));
            }
            e.add_term(m, c);
        }
        Ok(e)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn coeff(&self, m: usize) -> FieldElement {
        self.coeffs.get(&m).copied().unwrap_or(FieldElement::ZERO)
    }

    /// Nonzero terms in increasing index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, FieldElement)> + '_ {
        self.coeffs.iter().map(|(&m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest index with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub(crate) fn add_term(&mut self, m: usize, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m < self.bound);
        let cur = self.coeff(m);
        let next = self.field.add(cur, c);
        if next.is_zero() {
            self.coeffs.remove(&m);
        } else {
            self.coeffs.insert(m, next);
        }
    }

    /// `self += c * other`, assuming a compatible `other`.
    pub(crate) fn axpy(&mut self, c: FieldElement, other: &LoopElement) {
        if c.is_zero() {
            return;
        }
        for (m, v) in other.terms() {
            self.add_term(m, self.field.mul(c, v));
        }
    }

    pub fn check_compatible(&self, other: &LoopElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::IncompatibleFields);
        }
        if self.bound != other.bound {
            return Err(Error::BoundMismatch(self.bound, other.bound));
        }
        Ok(())
    }

    pub fn add(&self, other: &LoopElement) -> Result<LoopElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.axpy(FieldElement::ONE, other);
        Ok(out)
    }

    pub fn sub(&self, other: &LoopElement) -> Result<LoopElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.axpy(self.field.neg(FieldElement::ONE), other);
        Ok(out)
    }

    pub fn scale(&self, c: FieldElement) -> LoopElement {
        let mut out = LoopElement::zero(&self.field, self.bound);
        out.axpy(c, self);
        out
    }

    pub fn neg(&self) -> LoopElement {
        self.scale(self.field.neg(FieldElement::ONE))
    }

    /// Deconcatenation, extended linearly.
    pub fn comult(&self) -> TensorElement {
        let mut t = TensorElement::zero(&self.field, self.bound);
        for (n, c) in self.terms() {
            for i in 0..=n {
                t.add_term(i, n - i, c);
            }
        }
        t
    }

    pub fn counit(&self) -> FieldElement {
        self.coeff(0)
    }

    /// `Δx = x ⊗ a0 + a0 ⊗ x`.
    pub fn is_primitive(&self) -> bool {
        let mut expected = TensorElement::zero(&self.field, self.bound);
        for (m, c) in self.terms() {
            expected.add_term(m, 0, c);
            expected.add_term(0, m, c);
        }
        self.comult() == expected
    }

    /// The `p_(i)` in `Δx = Σ_i a_i ⊗ p_(i)`.
    pub fn component(&self, i: usize) -> LoopElement {
        let mut out = LoopElement::zero(&self.field, self.bound);
        for (m, c) in self.coeffs.range(i..) {
            out.add_term(m - i, *c);
        }
        out
    }

    /// Dual of `x ↦ x^p` on `k[x]/(x^N)`: `a_m ↦ a_{m/p}` when `p | m`, else 0.
    pub fn verschiebung(&self) -> LoopElement {
        let p = self.field.characteristic() as usize;
        let mut out = LoopElement::zero(&self.field, self.bound);
        for (m, c) in self.terms() {
            if m % p == 0 {
                out.add_term(m / p, c);
            }
        }
        out
    }

    /// Drops every coefficient with index `>= m`, giving an element of `k↻_m`.
    pub fn truncate(&self, m: usize) -> Result<LoopElement> {
        if m > self.bound {
            return Err(Error::Precondition(format!("cannot truncate k↻_{} to {m}", self.bound)));
        }
        Ok(LoopElement {
            field: self.field.clone(),
            bound: m,
            coeffs: self.coeffs.range(..m).map(|(&k, &v)| (k, v)).collect(),
        })
    }

    /// The same element viewed inside `k↻_m` for `m >= bound`.
    pub fn widen(&self, m: usize) -> Result<LoopElement> {
        if m < self.bound {
            return Err(Error::Precondition(format!("cannot widen k↻_{} to {m}", self.bound)));
        }
        Ok(LoopElement { field: self.field.clone(), bound: m, coeffs: self.coeffs.clone() })
    }

    /// Dense coefficient vector of length `bound`.
    pub fn to_dense(&self) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::ZERO; self.bound];
        for (m, c) in self.terms() {
            v[m] = c;
        }
        v
    }

    pub fn from_dense(field: &Field, coeffs: &[FieldElement]) -> LoopElement {
        let mut e = LoopElement::zero(field, coeffs.len());
        for (m, &c) in coeffs.iter().enumerate() {
            e.add_term(m, c);
        }
        e
    }
}

/// An element of `k↻_N ⊗ k↻_N`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    field: Field,
    bound: usize,
    coeffs: BTreeMap<(usize, usize), FieldElement>,
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement[N={}]({})", self.bound, self)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> =
            self.coeffs.iter().map(|((a, b), c)| format!("{c}*a{a}⊗a{b}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl TensorElement {
    pub fn zero(field: &Field, bound: usize) -> TensorElement {
        TensorElement { field: field.clone(), bound, coeffs: BTreeMap::new() }
    }

    /// `x ⊗ y`.
    pub fn tensor(x: &LoopElement, y: &LoopElement) -> Result<TensorElement> {
        x.check_compatible(y)?;
        let f = &x.field;
        let mut t = TensorElement::zero(f, x.bound);
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                t.add_term(a, b, f.mul(ca, cb));
            }
        }
        Ok(t)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn coeff(&self, a: usize, b: usize) -> FieldElement {
        self.coeffs.get(&(a, b)).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), FieldElement)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_term(&mut self, a: usize, b: usize, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let cur = self.coeff(a, b);
        let next = self.field.add(cur, c);
        if next.is_zero() {
            self.coeffs.remove(&(a, b));
        } else {
            self.coeffs.insert((a, b), next);
        }
    }

    pub(crate) fn axpy(&mut self, c: FieldElement, other: &TensorElement) {
        if c.is_zero() {
            return;
        }
        for ((a, b), v) in other.terms() {
            self.add_term(a, b, self.field.mul(c, v));
        }
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.field != other.field {
            return Err(Error::IncompatibleFields);
        }
        if self.bound != other.bound {
            return Err(Error::BoundMismatch(self.bound, other.bound));
        }
        let mut out = self.clone();
        out.axpy(FieldElement::ONE, other);
        Ok(out)
    }

    /// `(φ ⊗ id)` for a functional `φ` given on the basis.
    pub fn contract_left(&self, phi: impl Fn(usize) -> FieldElement) -> LoopElement {
        let mut out = LoopElement::zero(&self.field, self.bound);
        for ((a, b), c) in self.terms() {
            out.add_term(b, self.field.mul(phi(a), c));
        }
        out
    }

    /// `(id ⊗ φ)` for a functional `φ` given on the basis.
    pub fn contract_right(&self, phi: impl Fn(usize) -> FieldElement) -> LoopElement {
        let mut out = LoopElement::zero(&self.field, self.bound);
        for ((a, b), c) in self.terms() {
            out.add_term(a, self.field.mul(phi(b), c));
        }
        out
    }
}
