use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

use super::Prime;

/// Largest field order supported by the log/antilog tables.
const MAX_ORDER: u64 = 1 << 20;

/// Conway polynomials, little-endian, monic.
const BUILTIN_MODULI: &[(u32, &[u32])] = &[
    (2, &[1, 1, 1]),
    (2, &[1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 1]),
    (3, &[2, 2, 1]),
    (3, &[1, 2, 0, 1]),
    (3, &[2, 0, 0, 2, 1]),
    (5, &[2, 4, 1]),
    (5, &[3, 3, 0, 1]),
    (5, &[2, 4, 4, 0, 1]),
    (7, &[3, 6, 1]),
    (7, &[4, 0, 6, 1]),
    (7, &[3, 4, 5, 0, 1]),
];

/// An element of some `GF(p^k)`, packed as `sum_i c_i p^i` where `c_i` is
/// the coordinate of `theta^i` in the polynomial basis.
///
/// Elements do not carry their field; every operation goes through the
/// owning [`Field`]. Containers ([`crate::LoopElement`], tables) carry the
/// field and reject mixing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    k: usize,
    modulus: Vec<u32>,
    q: u32,
    // exp has length 2(q-1) so that log a + log b never needs reducing
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The finite field `GF(p^k) = GF(p)[theta] / (modulus)`.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{}; {:?})", self.0.p, self.0.k, self.0.modulus)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Field {
    /// The prime field `GF(p)`.
    pub fn prime(p: Prime) -> Result<Field> {
        Field::new(p, vec![0, 1])
    }

    /// `GF(p^k)` with the built-in Conway modulus (`p` in {2,3,5,7}, `k <= 4`).
    pub fn builtin(p: Prime, k: usize) -> Result<Field> {
        if k == 1 {
            return Field::prime(p);
        }
        BUILTIN_MODULI
            .iter()
            .find(|(q, m)| *q == p.get() && m.len() == k + 1)
            .ok_or(Error::NoBuiltinModulus { p: p.get(), k })
            .and_then(|(_, m)| Field::new(p, m.to_vec()))
    }

    /// `GF(p^k)` for a user-supplied monic irreducible modulus of degree `k`,
    /// coefficients little-endian.
    pub fn new(p: Prime, modulus: Vec<u32>) -> Result<Field> {
        let pv = p.get();
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c >= pv) {
            return Err(Error::InvalidModulus(format!("coefficients must lie in [0, {pv})")));
        }
        let k = modulus.len() - 1;
        let q = (pv as u64).checked_pow(k as u32).filter(|&q| q <= MAX_ORDER);
        let q = q.ok_or(Error::FieldTooLarge { p: pv, k })? as u32;
        if !is_irreducible(pv, &modulus) {
            return Err(Error::InvalidModulus(format!("{modulus:?} is reducible over GF({pv})")));
        }

        let raw = RawArith { p: pv, k, modulus: &modulus };
        let generator = (1..q)
            .find(|&g| raw.multiplicative_order(g) == q - 1)
            .ok_or_else(|| Error::InvalidModulus("no primitive element".into()))?;
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u32;
        for i in 0..n {
            exp[i] = acc;
            exp[i + n] = acc;
            log[acc as usize] = i as u32;
            acc = raw.mul(acc, generator);
        }
        Ok(Field(Arc::new(Inner { p: pv, k, modulus, q, exp, log })))
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn prime_char(&self) -> Prime {
        Prime(self.0.p)
    }

    /// Extension degree `k` over the prime field.
    #[inline]
    pub fn degree(&self) -> usize {
        self.0.k
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Checked conversion from a packed value.
    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.0.q {
            Ok(FieldElement(value))
        } else {
            Err(Error::InvalidElement(format!("{value} is not below the field order {}", self.0.q)))
        }
    }

    pub fn contains(&self, e: FieldElement) -> bool {
        e.0 < self.0.q
    }

    /// Polynomial-basis coordinates, length `k`.
    pub fn coords(&self, e: FieldElement) -> Vec<u32> {
        let mut v = e.0;
        (0..self.0.k)
            .map(|_| {
                let c = v % self.0.p;
                v /= self.0.p;
                c
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FieldElement> {
        if coords.len() != self.0.k {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates, got {}",
                self.0.k,
                coords.len()
            )));
        }
        if let Some(c) = coords.iter().find(|&&c| c >= self.0.p) {
            return Err(Error::InvalidElement(format!("coordinate {c} not below {}", self.0.p)));
        }
        Ok(FieldElement(coords.iter().rev().fold(0, |acc, &c| acc * self.0.p + c)))
    }

    /// All elements in scan order (by packed value).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.q).map(FieldElement)
    }

    /// The class of `theta`, a root of the modulus.
    pub fn generator(&self) -> FieldElement {
        if self.0.k == 1 {
            // theta is a root of x, i.e. zero; the useful generator is 1
            FieldElement::ONE
        } else {
            FieldElement(self.0.p)
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.0.p;
        if self.0.k == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= p { s - p } else { s });
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            let d = (x % p + y % p) % p;
            out += d * place;
            place *= p;
            x /= p;
            y /= p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.0.p;
        if self.0.k == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            place *= p;
            x /= p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        if self.0.k == 1 {
            return FieldElement(((a.0 as u64 * b.0 as u64) % self.0.p as u64) as u32);
        }
        let l = self.0.log[a.0 as usize] + self.0.log[b.0 as usize];
        FieldElement(self.0.exp[l as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.0.q - 1;
        let l = self.0.log[a.0 as usize];
        Ok(FieldElement(self.0.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let n = (self.0.q - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64 * (e % n) % n;
        FieldElement(self.0.exp[l as usize])
    }

    /// `sum_i coeffs[i] x^i` by Horner.
    pub fn eval_poly(&self, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
        coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Smallest root (in scan order) of a polynomial with little-endian
    /// coefficients, or `None` when it has no root in this field.
    pub fn find_root(&self, coeffs: &[FieldElement]) -> Result<Option<FieldElement>> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.elements().find(|&x| self.eval_poly(coeffs, x).is_zero()))
    }

    /// Lookup table realising an embedding `self -> to`, indexed by packed
    /// value. Sends `theta` to the smallest root of the modulus in `to`.
    pub fn embedding_into(&self, to: &Field) -> Result<Vec<FieldElement>> {
        let err = Error::NoEmbedding { p: self.0.p, from: self.0.k, to: to.0.k };
        if self.0.p != to.0.p || !to.0.k.is_multiple_of(self.0.k) {
            return Err(err);
        }
        if self.0.k == 1 {
            return Ok((0..self.0.q).map(FieldElement).collect());
        }
        let modulus: Vec<FieldElement> = self.0.modulus.iter().map(|&c| FieldElement(c)).collect();
        let theta = to.find_root(&modulus)?.ok_or(err)?;
        let powers: Vec<FieldElement> = (0..self.0.k).map(|i| to.pow(theta, i as u64)).collect();
        Ok(self
            .elements()
            .map(|e| {
                self.coords(e)
                    .iter()
                    .zip(&powers)
                    .fold(FieldElement::ZERO, |acc, (&c, &t)| to.add(acc, to.mul(to.from_int(c as i64), t)))
            })
            .collect())
    }
}

/// Schoolbook arithmetic on packed values; used only to build the tables.
struct RawArith<'a> {
    p: u32,
    k: usize,
    modulus: &'a [u32],
}

impl RawArith<'_> {
    fn unpack(&self, mut v: u32) -> Vec<u64> {
        (0..self.k)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c as u64
            })
            .collect()
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let (x, y) = (self.unpack(a), self.unpack(b));
        let mut prod = vec![0u64; 2 * self.k];
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        for i in (self.k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus[..self.k].iter().enumerate() {
                let t = i - self.k + j;
                prod[t] = (prod[t] + (p - c) * m as u64) % p;
            }
        }
        prod[..self.k].iter().rev().fold(0u32, |acc, &c| acc * self.p + c as u32)
    }

    fn multiplicative_order(&self, g: u32) -> u32 {
        let mut acc = g;
        let mut order = 1;
        while acc != 1 {
            acc = self.mul(acc, g);
            order += 1;
            if acc == 0 || order > u32::MAX - 1 {
                return 0;
            }
            if order > self.p.pow(self.k as u32) {
                return 0;
            }
        }
        order
    }
}

/// No monic factor of degree `1..=k/2` divides the modulus.
fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
    let k = modulus.len() - 1;
    for deg in 1..=k / 2 {
        let count = p.pow(deg as u32);
        for tail in 0..count {
            let mut divisor: Vec<u32> = (0..deg)
                .scan(tail, |v, _| {
                    let c = *v % p;
                    *v /= p;
                    Some(c)
                })
                .collect();
            divisor.push(1);
            if poly_rem_is_zero(p, modulus, &divisor) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(p: u32, num: &[u32], monic: &[u32]) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let d = monic.len() - 1;
    for i in (d..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        for (j, &m) in monic.iter().enumerate() {
            let t = i - d + j;
            r[t] = (r[t] + (p - c) * m as u64 % p) % p;
        }
    }
    r[..d].iter().all(|&c| c == 0)
}
