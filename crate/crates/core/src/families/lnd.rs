//! `L(n,d)` on the path basis.
//!
//! The algebra is `F_p[w_0..w_{n-1}]` modulo `w_i^p = 0` (`i < d`) and
//! `w_i^p = w_{i-d}` (`i >= d`), with the coproduct of Witt vector
//! addition. Paths are lifted degree by degree: `a_1 = w_0`, and `a_m`
//! is the unique solution of
//! `Δ(y) - y⊗1 - 1⊗y = Σ_{0<i<m} a_i ⊗ a_{m-i}`
//! with no `w_0` term.

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::hopf::MultTable;
use crate::linalg::{ColumnSolver, Matrix};
use crate::loop_coalgebra::LoopElement;
use crate::scalars::{Field, FieldElement, Prime};
use std::collections::BTreeMap;

/// Integer polynomial in `x_0..x_{n-1}, y_0..y_{n-1}`.
type Poly = BTreeMap<Vec<u32>, i128>;

fn poly_mul(a: &Poly, b: &Poly) -> Result<Poly> {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = ca.checked_mul(*cb).ok_or(Error::Overflow)?;
            let slot = out.entry(e).or_insert(0);
            *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

fn poly_pow(a: &Poly, e: u32, vars: usize) -> Result<Poly> {
    let mut acc = Poly::from([(vec![0; vars], 1)]);
    for _ in 0..e {
        acc = poly_mul(&acc, a)?;
    }
    Ok(acc)
}

fn poly_axpy(acc: &mut Poly, c: i128, a: &Poly) -> Result<()> {
    for (e, v) in a {
        let t = v.checked_mul(c).ok_or(Error::Overflow)?;
        let slot = acc.entry(e.clone()).or_insert(0);
        *slot = slot.checked_add(t).ok_or(Error::Overflow)?;
    }
    acc.retain(|_, c| *c != 0);
    Ok(())
}

fn variable(i: usize, vars: usize) -> Poly {
    let mut e = vec![0; vars];
    e[i] = 1;
    Poly::from([(e, 1)])
}

/// Witt addition polynomials `S_0, ..., S_{n-1}` over the integers.
pub(crate) fn witt_sums(p: u32, n: usize) -> Result<Vec<Poly>> {
    let vars = 2 * n;
    let pi = p as i128;
    let mut sums: Vec<Poly> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = Poly::new();
        for i in 0..=k {
            let e = p.checked_pow((k - i) as u32).ok_or(Error::Overflow)?;
            let w = pi.checked_pow(i as u32).ok_or(Error::Overflow)?;
            poly_axpy(&mut acc, w, &poly_pow(&variable(i, vars), e, vars)?)?;
            poly_axpy(&mut acc, w, &poly_pow(&variable(n + i, vars), e, vars)?)?;
            if i < k {
                poly_axpy(&mut acc, -w, &poly_pow(&sums[i], e, vars)?)?;
            }
        }
        let scale = pi.checked_pow(k as u32).ok_or(Error::Overflow)?;
        for c in acc.values_mut() {
            if *c % scale != 0 {
                return Err(Error::InvalidParams(format!("Witt sum {k} is not integral")));
            }
            *c /= scale;
        }
        sums.push(acc);
    }
    Ok(sums)
}

struct Presentation {
    field: Field,
    p: Prime,
    n: usize,
    d: usize,
    bound: usize,
}

impl Presentation {
    fn reduce(&self, e: &[u32]) -> Option<usize> {
        Monomial::new(e.to_vec()).reduce(self.p, self.d).map(|m| m.index(self.p))
    }

    fn mono_mul(&self, a: usize, b: usize) -> Option<usize> {
        let ma = Monomial::from_index(a, self.p, self.n);
        let mb = Monomial::from_index(b, self.p, self.n);
        ma.mul(&mb, self.p, self.d).map(|m| m.index(self.p))
    }

    /// Dense `N x N` tensor indexed `u * N + v`.
    fn tensor_mul(&self, x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
        let n = self.bound;
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; n * n];
        let nz = |t: &[FieldElement]| -> Vec<(usize, usize, FieldElement)> {
            t.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, &c)| (i / n, i % n, c)).collect()
        };
        let (xs, ys) = (nz(x), nz(y));
        for &(a1, a2, c1) in &xs {
            for &(b1, b2, c2) in &ys {
                if let (Some(u), Some(v)) = (self.mono_mul(a1, b1), self.mono_mul(a2, b2)) {
                    out[u * n + v] = f.add(out[u * n + v], f.mul(c1, c2));
                }
            }
        }
        out
    }

    /// Coproducts of all normalized monomials.
    fn coproducts(&self) -> Result<Vec<Vec<FieldElement>>> {
        let n = self.bound;
        let f = &self.field;
        let sums = witt_sums(self.p.get(), self.n)?;
        let generators: Vec<Vec<FieldElement>> = sums
            .iter()
            .map(|s| {
                let mut t = vec![FieldElement::ZERO; n * n];
                for (e, &c) in s {
                    let (Some(u), Some(v)) = (self.reduce(&e[..self.n]), self.reduce(&e[self.n..])) else {
                        continue;
                    };
                    let c = f.from_int((c % self.p.get() as i128) as i64);
                    t[u * n + v] = f.add(t[u * n + v], c);
                }
                t
            })
            .collect();
        let mut cop: Vec<Vec<FieldElement>> = Vec::with_capacity(n);
        let mut one = vec![FieldElement::ZERO; n * n];
        one[0] = FieldElement::ONE;
        cop.push(one);
        let p = self.p.get() as usize;
        for m in 1..n {
            let i = (0..self.n).find(|&i| !(m / p.pow(i as u32)).is_multiple_of(p)).expect("m > 0");
            cop.push(self.tensor_mul(&cop[m - p.pow(i as u32)], &generators[i]));
        }
        Ok(cop)
    }
}

/// Structure constants of `L(n,d)` over `GF(p)`, before verification.
pub(crate) fn lnd_table(p: Prime, n: usize, d: usize) -> Result<MultTable> {
    let field = Field::prime(p)?;
    let bound = (p.get() as usize).checked_pow(n as u32).ok_or(Error::Overflow)?;
    let pres = Presentation { field: field.clone(), p, n, d, bound };
    let f = &field;
    let cop = pres.coproducts()?;
    let zero = vec![FieldElement::ZERO; bound];
    let unit_vec = |m: usize| {
        let mut v = zero.clone();
        v[m] = FieldElement::ONE;
        v
    };
    let mut alphas: Vec<Vec<FieldElement>> = vec![unit_vec(0)];
    if bound > 1 {
        alphas.push(unit_vec(1));
    }
    if bound > 2 {
        // unknowns: every monomial except w_0
        let unknowns: Vec<usize> = (0..bound).filter(|&u| u != 1).collect();
        let mut a = Matrix::zeros(f, bound * bound, unknowns.len());
        for (col, &u) in unknowns.iter().enumerate() {
            let mut reduced = cop[u].clone();
            reduced[u * bound] = f.sub(reduced[u * bound], FieldElement::ONE);
            reduced[u] = f.sub(reduced[u], FieldElement::ONE);
            for (row, &c) in reduced.iter().enumerate() {
                a.set(row, col, c);
            }
        }
        let solver = ColumnSolver::new(&a)?;
        for m in 2..bound {
            let mut rhs = vec![FieldElement::ZERO; bound * bound];
            for i in 1..m {
                for (u, &cu) in alphas[i].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (v, &cv) in alphas[m - i].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        rhs[u * bound + v] = f.add(rhs[u * bound + v], f.mul(cu, cv));
                    }
                }
            }
            let y = solver.solve(|r| rhs[r]);
            if a.mul_vec(&y) != rhs {
                return Err(Error::VerificationFailed(format!("no path a_{m} lifts in L({n},{d})")));
            }
            let mut alpha = zero.clone();
            for (&u, &c) in unknowns.iter().zip(&y) {
                alpha[u] = c;
            }
            alphas.push(alpha);
        }
    }
    let basis = Matrix::from_fn(f, bound, bound, |r, c| alphas[c][r]);
    let to_paths = basis.inverse()?;
    MultTable::from_fn(f, bound, |a, b| {
        let mut prod = zero.clone();
        for (u, &cu) in alphas[a].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (v, &cv) in alphas[b].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if let Some(w) = pres.mono_mul(u, v) {
                    prod[w] = f.add(prod[w], f.mul(cu, cv));
                }
            }
        }
        Ok(LoopElement::from_dense(f, &to_paths.mul_vec(&prod)))
    })
}
