use super::classify::{classify, Classification};
use super::structure::{is_local, is_semisimple, verify_uniserial};
use super::MultTable;
use crate::linalg::Matrix;
use crate::loop_coalgebra::{LoopElement, TensorElement};
use rayon::prelude::*;
use std::fmt;

/// Outcome of one axiom. A failure carries the lexicographically smallest
/// failing tuple of path indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(Vec<usize>),
    NotApplicable,
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass)
    }

    pub fn counterexample(&self) -> Option<&[usize]> {
        match self {
            Check::Fail(w) => Some(w),
            _ => None,
        }
    }

    fn from_witness(w: Option<Vec<usize>>) -> Check {
        w.map_or(Check::Pass, Check::Fail)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Pass => write!(f, "PASS"),
            Check::NotApplicable => write!(f, "n/a"),
            Check::Fail(w) => {
                let parts: Vec<String> = w.iter().map(|i| i.to_string()).collect();
                write!(f, "FAIL at ({})", parts.join(","))
            }
        }
    }
}

/// Smallest failing tuple; the search over the first index runs in
/// parallel, and `find_map_first` keeps the merged answer deterministic.
fn first_failure(n: usize, scan: impl Fn(usize) -> Option<Vec<usize>> + Sync + Send) -> Option<Vec<usize>> {
    (0..n).into_par_iter().find_map_first(scan)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BialgebraChecks {
    pub associativity: Check,
    pub unit: Check,
    pub comult_multiplicative: Check,
    pub counit_multiplicative: Check,
}

impl BialgebraChecks {
    pub fn passed(&self) -> bool {
        self.associativity.passed()
            && self.unit.passed()
            && self.comult_multiplicative.passed()
            && self.counit_multiplicative.passed()
    }
}

impl MultTable {
    /// `x · a_c`
    fn mul_basis_right(&self, x: &LoopElement, c: usize) -> LoopElement {
        let mut out = LoopElement::zero(self.field(), self.bound());
        for (m, k) in x.terms() {
            out.axpy(k, self.entry(m, c));
        }
        out
    }

    /// `a_a · x`
    fn mul_basis_left(&self, a: usize, x: &LoopElement) -> LoopElement {
        let mut out = LoopElement::zero(self.field(), self.bound());
        for (m, k) in x.terms() {
            out.axpy(k, self.entry(a, m));
        }
        out
    }

    /// `Δ(a_a) Δ(a_b)` computed in the tensor square of the table.
    fn comult_product(&self, a: usize, b: usize) -> TensorElement {
        let f = self.field();
        let mut out = TensorElement::zero(f, self.bound());
        for i in 0..=a {
            for j in 0..=b {
                let left = self.entry(i, j);
                let right = self.entry(a - i, b - j);
                for (u, cu) in left.terms() {
                    for (v, cv) in right.terms() {
                        out.add_term(u, v, f.mul(cu, cv));
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn check_associativity(t: &MultTable) -> Check {
    let n = t.bound();
    Check::from_witness(first_failure(n, |a| {
        for b in 0..n {
            let ab = t.entry(a, b);
            for c in 0..n {
                if t.mul_basis_right(ab, c) != t.mul_basis_left(a, t.entry(b, c)) {
                    return Some(vec![a, b, c]);
                }
            }
        }
        None
    }))
}

pub(crate) fn check_unit(t: &MultTable) -> Check {
    let n = t.bound();
    // pairs with a zero coordinate, in lexicographic order
    let first_row = (0..n).find(|&b| t.entry(0, b) != &t.basis(b)).map(|b| vec![0, b]);
    let first_col = (1..n).find(|&a| t.entry(a, 0) != &t.basis(a)).map(|a| vec![a, 0]);
    Check::from_witness(first_row.or(first_col))
}

pub(crate) fn check_counit_multiplicative(t: &MultTable) -> Check {
    let n = t.bound();
    let f = t.field();
    Check::from_witness(first_failure(n, |a| {
        (0..n)
            .find(|&b| {
                let want = if a == 0 && b == 0 { f.one() } else { f.zero() };
                t.entry(a, b).counit() != want
            })
            .map(|b| vec![a, b])
    }))
}

pub(crate) fn check_comult_multiplicative(t: &MultTable) -> Check {
    let n = t.bound();
    Check::from_witness(first_failure(n, |a| {
        (0..n).find(|&b| t.entry(a, b).comult() != t.comult_product(a, b)).map(|b| vec![a, b])
    }))
}

pub(crate) fn check_commutative(t: &MultTable) -> Check {
    let n = t.bound();
    Check::from_witness(first_failure(n, |a| {
        (a + 1..n).find(|&b| t.entry(a, b) != t.entry(b, a)).map(|b| vec![a, b])
    }))
}

/// Associativity, unit, and multiplicativity of `Δ` and `ε`, each on all
/// basis tuples.
pub fn verify_bialgebra(t: &MultTable) -> BialgebraChecks {
    BialgebraChecks {
        associativity: check_associativity(t),
        unit: check_unit(t),
        comult_multiplicative: check_comult_multiplicative(t),
        counit_multiplicative: check_counit_multiplicative(t),
    }
}

/// The candidate antipode together with both convolution identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Antipode {
    images: Vec<LoopElement>,
    pub left: Check,
    pub right: Check,
}

impl Antipode {
    /// `S(a_m)`
    pub fn image(&self, m: usize) -> &LoopElement {
        &self.images[m]
    }

    pub fn images(&self) -> &[LoopElement] {
        &self.images
    }

    pub fn is_two_sided(&self) -> bool {
        self.left.passed() && self.right.passed()
    }

    /// Column `m` holds the coefficients of `S(a_m)`.
    pub fn matrix(&self) -> Matrix {
        let field = self.images[0].field();
        let n = self.images.len();
        let mut m = Matrix::zeros(field, n, n);
        for (c, img) in self.images.iter().enumerate() {
            for (r, v) in img.terms() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn apply(&self, x: &LoopElement) -> LoopElement {
        let mut out = LoopElement::zero(x.field(), self.images.len());
        for (m, c) in x.terms() {
            out.axpy(c, &self.images[m]);
        }
        out
    }

    pub fn is_involutive(&self) -> bool {
        self.images.iter().enumerate().all(|(m, img)| {
            let back = self.apply(img);
            back.num_terms() == 1 && back.coeff(m) == img.field().one()
        })
    }
}

/// `S(a_m) = -a_m - Σ_{0<l<m} S(a_l) a_{m-l}`, then both
/// `Σ S(a_i) a_{m-i} = ε(a_m)` and `Σ a_i S(a_{m-i}) = ε(a_m)` are checked.
pub fn antipode(t: &MultTable) -> Antipode {
    let n = t.bound();
    let f = t.field();
    let minus = t.neg_one();
    let mut images: Vec<LoopElement> = Vec::with_capacity(n);
    images.push(t.unit());
    for m in 1..n {
        let mut s = t.basis(m).scale(minus);
        for l in 1..m {
            s.axpy(minus, &t.mul_basis_right(&images[l], m - l));
        }
        images.push(s);
    }
    let target = |m: usize| if m == 0 { t.unit() } else { LoopElement::zero(f, n) };
    let left = (0..n).find(|&m| {
        let mut acc = LoopElement::zero(f, n);
        for i in 0..=m {
            acc.axpy(f.one(), &t.mul_basis_right(&images[i], m - i));
        }
        acc != target(m)
    });
    let right = (0..n).find(|&m| {
        let mut acc = LoopElement::zero(f, n);
        for i in 0..=m {
            acc.axpy(f.one(), &t.mul_basis_left(i, &images[m - i]));
        }
        acc != target(m)
    });
    Antipode {
        images,
        left: Check::from_witness(left.map(|m| vec![m])),
        right: Check::from_witness(right.map(|m| vec![m])),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfReport {
    pub bialgebra: BialgebraChecks,
    pub antipode_left: Check,
    pub antipode_right: Check,
    pub commutative: Check,
    pub uniserial: Check,
    /// Only computed once the Hopf axioms hold.
    pub semisimple: Option<bool>,
    pub local: Option<bool>,
    pub classification: Option<Classification>,
}

impl HopfReport {
    /// Every Hopf axiom holds. Commutativity and uniseriality are reported
    /// properties, not requirements.
    pub fn is_hopf(&self) -> bool {
        self.bialgebra.passed() && self.antipode_left.passed() && self.antipode_right.passed()
    }

    /// The Hopf axioms plus commutativity and uniseriality.
    pub fn all_passed(&self) -> bool {
        self.is_hopf() && self.commutative.passed() && self.uniserial.passed()
    }
}

fn flag(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "associativity: {}", self.bialgebra.associativity)?;
        writeln!(f, "unit: {}", self.bialgebra.unit)?;
        writeln!(f, "comult-multiplicative: {}", self.bialgebra.comult_multiplicative)?;
        writeln!(f, "counit-multiplicative: {}", self.bialgebra.counit_multiplicative)?;
        writeln!(f, "antipode-left: {}", self.antipode_left)?;
        writeln!(f, "antipode-right: {}", self.antipode_right)?;
        writeln!(f, "commutative: {}", self.commutative)?;
        writeln!(f, "uniserial: {}", self.uniserial)?;
        writeln!(f, "semisimple: {}", flag(self.semisimple))?;
        writeln!(f, "local: {}", flag(self.local))?;
        match &self.classification {
            Some(c) => writeln!(f, "classification: {c}"),
            None => writeln!(f, "classification: n/a"),
        }
    }
}

/// Runs every check. Derived flags and the classification are filled in
/// only for tables that pass the Hopf axioms.
pub fn verify(t: &MultTable) -> HopfReport {
    let bialgebra = verify_bialgebra(t);
    let s = antipode(t);
    let uniserial = match verify_uniserial(t) {
        Ok(None) => Check::Pass,
        Ok(Some((a, b))) => Check::Fail(vec![a, b]),
        Err(_) => Check::NotApplicable,
    };
    let mut report = HopfReport {
        bialgebra,
        antipode_left: s.left,
        antipode_right: s.right,
        commutative: check_commutative(t),
        uniserial,
        semisimple: None,
        local: None,
        classification: None,
    };
    if report.is_hopf() {
        report.semisimple = Some(is_semisimple(t));
        report.local = Some(is_local(t));
        report.classification = Some(classify(t));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_graded, build_lnd, FamilyParams};
    use crate::scalars::{Field, Prime};

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn graded_p2_passes() {
        let t = build_graded(&Field::prime(prime(2)).unwrap(), 2).unwrap();
        let r = verify(&t);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn counit_failure_witness() {
        let t = build_graded(&Field::prime(prime(2)).unwrap(), 2).unwrap();
        let f = t.field().clone();
        let t = MultTable::from_fn(&f, 4, |a, b| {
            Ok(if (a, b) == (1, 1) { LoopElement::unit(&f, 4) } else { t.entry(a, b).clone() })
        })
        .unwrap();
        let r = verify_bialgebra(&t);
        assert_eq!(r.counit_multiplicative, Check::Fail(vec![1, 1]));
        assert_eq!(r.counit_multiplicative.to_string(), "FAIL at (1,1)");
    }

    #[test]
    fn graded_antipode_small_cases() {
        let t = build_graded(&Field::prime(prime(2)).unwrap(), 2).unwrap();
        let s = antipode(&t);
        assert!(s.is_two_sided());
        assert_eq!(s.image(0), &t.unit());
        assert_eq!(s.image(1), &t.basis(1));
        assert_eq!(s.image(2), &t.basis(2));
        assert!(s.is_involutive());
    }

    #[test]
    fn lnd_21_passes() {
        let t = build_lnd(&FamilyParams::new(prime(2), 2, 1, 1).unwrap()).unwrap();
        assert!(verify(&t).all_passed());
    }

    #[test]
    fn uniserial_witness() {
        let f = Field::prime(prime(2)).unwrap();
        let g = build_graded(&Field::prime(prime(2)).unwrap(), 2).unwrap();
        let t = MultTable::from_fn(&f, 4, |a, b| {
            Ok(if (a, b) == (1, 1) { LoopElement::basis(&f, 4, 2)? } else { g.entry(a, b).clone() })
        })
        .unwrap();
        assert_eq!(verify(&t).uniserial, Check::Fail(vec![1, 1]));
    }

    #[test]
    fn report_rendering() {
        let t = build_lnd(&FamilyParams::new(prime(2), 2, 1, 1).unwrap()).unwrap();
        let text = verify(&t).to_string();
        assert!(text.starts_with("associativity: PASS\n"));
        assert!(text.contains("semisimple: no\nlocal: yes\nclassification: L(2,1)\n"));
    }

    #[test]
    fn trivial_table() {
        let f = Field::prime(prime(3)).unwrap();
        let t = MultTable::new(&f, vec![vec![LoopElement::unit(&f, 1)]]).unwrap();
        let r = verify(&t);
        assert!(r.all_passed());
        assert_eq!(r.semisimple, Some(true));
        assert_eq!(r.classification, Some(Classification::Lnd { n: 0, d: 0 }));
    }
}
