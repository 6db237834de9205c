//! Coalgebra endomorphisms of `k↻` as λ-sequences.
//!
//! Every coalgebra endomorphism is determined by scalars `λ_1, λ_2, ...`
//! through the series `Λ(t) = Σ_i λ_i t^i`: the coefficient of `a_r` in
//! `f(a_n)` is the coefficient of `t^n` in `Λ(t)^r`, and `f(a0) = a0`.
//! Composition of maps is substitution of series.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::loop_coalgebra::{LoopElement, TensorElement};
use crate::scalars::{Field, FieldElement};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct LambdaSeq {
    field: Field,
    // lambdas[i] is λ_{i+1}
    lambdas: Vec<FieldElement>,
}

impl fmt::Debug for LambdaSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaSeq({self})")
    }
}

/// Comma-separated, the format `--lambda` accepts.
impl fmt::Display for LambdaSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lambdas.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl LambdaSeq {
    pub fn new(field: &Field, lambdas: Vec<FieldElement>) -> Result<LambdaSeq> {
        if let Some(bad) = lambdas.iter().find(|&&l| !field.contains(l)) {
            return Err(Error::InvalidElement(format!("{bad} not in {field}")));
        }
        Ok(LambdaSeq { field: field.clone(), lambdas })
    }

    pub fn identity(field: &Field) -> LambdaSeq {
        LambdaSeq { field: field.clone(), lambdas: vec![FieldElement::ONE] }
    }

    /// `a_m ↦ c^m a_m`.
    pub fn scaling(field: &Field, c: FieldElement) -> LambdaSeq {
        LambdaSeq { field: field.clone(), lambdas: vec![c] }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lambdas(&self) -> &[FieldElement] {
        &self.lambdas
    }

    /// `λ_i` for `i >= 1`; zero past the stored length.
    pub fn lambda(&self, i: usize) -> FieldElement {
        assert!(i >= 1, "λ-sequences are indexed from 1");
        self.lambdas.get(i - 1).copied().unwrap_or(FieldElement::ZERO)
    }

    /// Whether both sequences define the same endomorphism of `k↻_n`.
    pub fn agrees_with(&self, other: &LambdaSeq, n: usize) -> bool {
        self.field == other.field && (1..n).all(|i| self.lambda(i) == other.lambda(i))
    }

    /// `powers[r][m]` = coefficient of `t^m` in `Λ(t)^r`, for `r, m < n`.
    fn series_powers(&self, n: usize) -> Vec<Vec<FieldElement>> {
        let f = &self.field;
        let mut powers = Vec::with_capacity(n);
        let mut cur = vec![FieldElement::ZERO; n];
        if n > 0 {
            cur[0] = FieldElement::ONE;
        }
        for _ in 0..n {
            let mut next = vec![FieldElement::ZERO; n];
            for (m, &c) in cur.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for i in 1..n - m {
                    let l = self.lambda(i);
                    if !l.is_zero() {
                        next[m + i] = f.add(next[m + i], f.mul(c, l));
                    }
                }
            }
            powers.push(std::mem::replace(&mut cur, next));
        }
        powers
    }

    /// `f(a_n)` as an element of `k↻_bound`.
    pub fn evaluate(&self, n: usize, bound: usize) -> Result<LoopElement> {
        if n >= bound {
            return Err(Error::IndexOutOfRange { index: n, bound });
        }
        let powers = self.series_powers(n + 1);
        LoopElement::from_terms(&self.field, bound, (0..=n).map(|r| (r, powers[r][n])))
    }

    /// Matrix on `k↻_n` whose column `m` holds the coefficients of `f(a_m)`.
    pub fn matrix(&self, n: usize) -> Matrix {
        let powers = self.series_powers(n);
        Matrix::from_fn(&self.field, n, n, |r, m| powers[r][m])
    }

    pub fn apply(&self, x: &LoopElement) -> LoopElement {
        let n = x.bound();
        let powers = self.series_powers(n);
        let mut out = LoopElement::zero(&self.field, n);
        for (m, c) in x.terms() {
            for (r, row) in powers.iter().enumerate().take(m + 1) {
                out.add_term(r, self.field.mul(c, row[m]));
            }
        }
        out
    }

    /// The λ-sequence of `f ∘ g`, i.e. the series `Λ_f(Λ_g(t))`, exactly.
    pub fn compose(&self, g: &LambdaSeq) -> Result<LambdaSeq> {
        if self.field != g.field {
            return Err(Error::IncompatibleFields);
        }
        let f = &self.field;
        let deg_f = self.lambdas.len();
        let deg_g = g.lambdas.len();
        let len = deg_f * deg_g + 1;
        let inner: Vec<FieldElement> =
            std::iter::once(FieldElement::ZERO).chain(g.lambdas.iter().copied()).collect();
        let mut acc = vec![FieldElement::ZERO; len];
        // Horner: Σ_r λ_r G^r = G (λ_1 + G (λ_2 + ...))
        for r in (1..=deg_f).rev() {
            acc[0] = f.add(acc[0], self.lambda(r));
            let mut next = vec![FieldElement::ZERO; len];
            for (i, &a) in acc.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, &b) in inner.iter().enumerate() {
                    if !b.is_zero() && i + j < len {
                        next[i + j] = f.add(next[i + j], f.mul(a, b));
                    }
                }
            }
            acc = next;
        }
        let mut lambdas = acc[1..].to_vec();
        while lambdas.last().is_some_and(|l| l.is_zero()) {
            lambdas.pop();
        }
        Ok(LambdaSeq { field: f.clone(), lambdas })
    }

    /// `λ_1 ≠ 0`.
    pub fn is_automorphism(&self) -> bool {
        !self.lambda(1).is_zero()
    }

    /// The inverse on `k↻_n`, read off the first row of the inverse matrix,
    /// which is found by back substitution one column at a time.
    pub fn invert(&self, n: usize) -> Result<LambdaSeq> {
        if !self.is_automorphism() {
            return Err(Error::NotInvertible);
        }
        let f = &self.field;
        let m = self.matrix(n);
        let mut inv = Matrix::zeros(f, n, n);
        for col in 0..n {
            for row in (0..=col).rev() {
                let mut acc = if row == col { FieldElement::ONE } else { FieldElement::ZERO };
                for k in row + 1..=col {
                    acc = f.sub(acc, f.mul(m.get(row, k), inv.get(k, col)));
                }
                inv.set(row, col, f.div(acc, m.get(row, row))?);
            }
        }
        let lambdas = if n > 1 { (1..n).map(|c| inv.get(1, c)).collect() } else { Vec::new() };
        Ok(LambdaSeq { field: f.clone(), lambdas })
    }

    /// Extension to `k↻_m` by setting `λ_j = 0` for every missing `j < m`.
    pub fn extend(&self, m: usize) -> LambdaSeq {
        let mut lambdas = self.lambdas.clone();
        if lambdas.len() < m.saturating_sub(1) {
            lambdas.resize(m - 1, FieldElement::ZERO);
        }
        LambdaSeq { field: self.field.clone(), lambdas }
    }
}

/// Whether the linear map with the given matrix (column `m` = image of `a_m`)
/// respects the counit and satisfies `(f ⊗ f)Δ = Δ f` on every basis path.
pub fn is_coalgebra_map(m: &Matrix) -> bool {
    let n = m.rows();
    if m.cols() != n {
        return false;
    }
    let f = m.field();
    let images: Vec<LoopElement> =
        (0..n).map(|c| LoopElement::from_dense(f, &m.column(c))).collect();
    for (idx, img) in images.iter().enumerate() {
        let expected_counit = if idx == 0 { FieldElement::ONE } else { FieldElement::ZERO };
        if img.counit() != expected_counit {
            return false;
        }
        let mut lhs = TensorElement::zero(f, n);
        for i in 0..=idx {
            let t = TensorElement::tensor(&images[i], &images[idx - i]).expect("same field and bound");
            lhs.axpy(FieldElement::ONE, &t);
        }
        if lhs != img.comult() {
            return false;
        }
    }
    true
}
