use super::MultTable;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::loop_coalgebra::LoopElement;
use crate::scalars::FieldElement;

/// `x^p` through the table.
pub fn frobenius(t: &MultTable, x: &LoopElement) -> Result<LoopElement> {
    t.power(x, t.field().characteristic() as usize)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralData {
    /// `Π_{0<l<N} (a_0 - a_l^{p-1})`, multiplied left to right.
    pub explicit: LoopElement,
    pub explicit_counit: FieldElement,
    pub explicit_is_integral: bool,
    /// Basis of the left integrals `{x : a x = ε(a) x}`.
    pub space: Vec<LoopElement>,
}

impl IntegralData {
    pub fn dim(&self) -> usize {
        self.space.len()
    }

    pub fn has_nonzero_counit(&self) -> bool {
        self.space.iter().any(|x| !x.counit().is_zero())
    }
}

fn is_left_integral(t: &MultTable, x: &LoopElement) -> bool {
    (1..t.bound()).all(|a| t.mul(&t.basis(a), x).is_zero())
}

fn integral_space(t: &MultTable) -> Vec<LoopElement> {
    let n = t.bound();
    let f = t.field();
    // stacked left multiplications by a_1, ..., a_{N-1}
    let mut stacked = Matrix::zeros(f, n * (n - 1), n);
    for a in 1..n {
        let block = t.left_mult_matrix(a);
        for r in 0..n {
            for c in 0..n {
                stacked.set((a - 1) * n + r, c, block.get(r, c));
            }
        }
    }
    stacked.nullspace().iter().map(|v| LoopElement::from_dense(f, v)).collect()
}

pub fn integral(t: &MultTable) -> IntegralData {
    let p = t.field().characteristic() as usize;
    let mut prod = t.unit();
    for l in 1..t.bound() {
        let power = t.power(&t.basis(l), p - 1).expect("basis element of the table");
        let factor = t.unit().sub(&power).expect("same space");
        prod = t.mul(&prod, &factor);
    }
    IntegralData {
        explicit_counit: prod.counit(),
        explicit_is_integral: is_left_integral(t, &prod),
        explicit: prod,
        space: integral_space(t),
    }
}

/// Decided by the solved integral space: some integral has nonzero counit.
pub fn is_semisimple(t: &MultTable) -> bool {
    integral_space(t).iter().any(|x| !x.counit().is_zero())
}

/// Every `a_m`, `m >= 1`, is nilpotent. Repeated `p`-th powers reach zero
/// within `N` rounds for a nilpotent element.
pub fn is_local(t: &MultTable) -> bool {
    let p = t.field().characteristic() as usize;
    (1..t.bound()).all(|m| {
        let mut x = t.basis(m);
        for _ in 0..t.bound() {
            if x.is_zero() {
                return true;
            }
            let next = t.power(&x, p).expect("element of the table");
            if next == x {
                return false;
            }
            x = next;
        }
        x.is_zero()
    })
}

/// `Ok(None)` when every truncation `k↻_{p^i}` is closed under the
/// product, otherwise the smallest offending pair.
pub fn verify_uniserial(t: &MultTable) -> Result<Option<(usize, usize)>> {
    let n = t.bound();
    let p = t.field().characteristic() as usize;
    let mut q = 1;
    while q < n {
        q *= p;
    }
    if q != n {
        return Err(Error::NotPowerOfP(n, p as u32));
    }
    // the smallest power of p above max(a, b) gives the tightest constraint
    let level = |m: usize| {
        let mut q = 1;
        while q <= m {
            q *= p;
        }
        q
    };
    for a in 0..n {
        for b in 0..n {
            let cap = level(a.max(b));
            if t.entry(a, b).degree().is_some_and(|d| d >= cap) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}
