use crate::error::Result;
use crate::hopf::MultTable;
use crate::loop_coalgebra::LoopElement;
use crate::scalars::{base_p_digits, Field, Prime};

/// Exponent vector of `w_0^{e_0} ... w_{n-1}^{e_{n-1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    /// Base-`p` digits of `m`, padded to `n` generators.
    pub fn from_index(m: usize, p: Prime, n: usize) -> Monomial {
        let digits = base_p_digits(m as u64, p);
        Monomial((0..n).map(|i| digits.digit(i)).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Path index of a normalized monomial.
    pub fn index(&self, p: Prime) -> usize {
        self.0.iter().rev().fold(0, |acc, &e| acc * p.get() as usize + e as usize)
    }

    pub fn is_normalized(&self, p: Prime) -> bool {
        self.0.iter().all(|&e| e < p.get())
    }

    /// Normal form under `w_i^p = 0` (`i < d`) and `w_i^p = w_{i-d}`
    /// (`i >= d`); `None` when the monomial vanishes. The largest
    /// over-limit index is reduced first.
    pub fn reduce(&self, p: Prime, d: usize) -> Option<Monomial> {
        let p = p.get();
        let mut e = self.0.clone();
        while let Some(i) = (0..e.len()).rev().find(|&i| e[i] >= p) {
            e[i] -= p;
            if i < d {
                return None;
            }
            e[i - d] += 1;
        }
        Some(Monomial(e))
    }

    pub fn mul(&self, other: &Monomial, p: Prime, d: usize) -> Option<Monomial> {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()).reduce(p, d)
    }
}

/// `c_m = (Π m_i!)^{-1} mod p` over the base-`p` digits of `m`.
pub fn monomial_coefficient(m: usize, p: Prime) -> u32 {
    let p64 = p.get() as u64;
    let fact: u64 = base_p_digits(m as u64, p)
        .digits()
        .iter()
        .flat_map(|&d| 1..=d as u64)
        .fold(1, |acc, x| acc * x % p64);
    crate::scalars::pow_mod(fact, p64 - 2, p64) as u32
}

/// The naive identification `a_m = c_m Π g_i^{m_i}` of paths with
/// monomials in the generators. Not verified: for several parameter sets
/// this table is not multiplicative for `Δ`.
pub fn monomial_table(p: Prime, n: usize, d: usize) -> Result<MultTable> {
    let field = Field::prime(p)?;
    let bound = (p.get() as usize).pow(n as u32);
    let monos: Vec<Monomial> = (0..bound).map(|m| Monomial::from_index(m, p, n)).collect();
    MultTable::from_fn(&field, bound, |a, b| {
        let Some(prod) = monos[a].mul(&monos[b], p, d) else {
            return Ok(LoopElement::zero(&field, bound));
        };
        let m = prod.index(p);
        let c = field.div(
            field.mul(
                field.from_int(monomial_coefficient(a, p) as i64),
                field.from_int(monomial_coefficient(b, p) as i64),
            ),
            field.from_int(monomial_coefficient(m, p) as i64),
        )?;
        LoopElement::from_terms(&field, bound, [(m, c)])
    })
}
