use super::structure::frobenius;
use super::verify::check_commutative;
use super::MultTable;
use crate::endo::LambdaSeq;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{Field, FieldElement};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Lnd { n: usize, d: usize },
    NonCommutative,
    Unclassified(String),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Lnd { n, d } => write!(f, "L({n},{d})"),
            Classification::NonCommutative => write!(f, "non-commutative"),
            Classification::Unclassified(why) => write!(f, "unclassified: {why}"),
        }
    }
}

/// Rank of the span of `a_m^p` over all `m < N`.
pub fn frobenius_rank(t: &MultTable) -> usize {
    let n = t.bound();
    let mut m = Matrix::zeros(t.field(), n, n);
    for c in 0..n {
        let img = frobenius(t, &t.basis(c)).expect("basis element of the table");
        for (r, v) in img.terms() {
            m.set(r, c, v);
        }
    }
    m.rank()
}

fn log_p(x: usize, p: usize) -> Option<usize> {
    let (mut q, mut e) = (1, 0);
    while q < x {
        q *= p;
        e += 1;
    }
    (q == x).then_some(e)
}

/// `d = n - log_p(rank F)` for a commutative table of dimension `p^n`.
/// The caller is expected to have verified the Hopf axioms.
pub fn classify(t: &MultTable) -> Classification {
    if !check_commutative(t).passed() {
        return Classification::NonCommutative;
    }
    let p = t.field().characteristic() as usize;
    let Some(n) = log_p(t.bound(), p) else {
        return Classification::Unclassified(format!("dimension {} is not a power of {p}", t.bound()));
    };
    let rank = frobenius_rank(t);
    match log_p(rank, p) {
        Some(j) if j <= n => Classification::Lnd { n, d: n - j },
        _ => Classification::Unclassified(format!("Frobenius rank {rank} is not a power of {p}")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub table: MultTable,
    /// 0 when `a_1^p = 0`, 1 when `a_1^p = a_1`.
    pub tag: u8,
    /// The original `λ` in `a_1^p = λ a_1`.
    pub lambda: FieldElement,
    /// `a_1` of the new table is `scale · a_1` of the old one.
    pub scale: FieldElement,
    /// Degree of the extension of the input field that holds `scale`.
    pub extension_degree: usize,
}

/// Rescales `a_1` so that `a_1^p` becomes `0` or `a_1`. When `λ ≠ 0` this
/// needs `c` with `λ c^{p-1} = 1`, which may only exist in an extension;
/// the smallest builtin extension holding a root is used.
pub fn normalize_dim_p(t: &MultTable) -> Result<Normalized> {
    let field = t.field();
    let p = field.characteristic() as usize;
    if t.bound() != p {
        return Err(Error::Precondition(format!("normalization needs N = p, got N = {}", t.bound())));
    }
    let x = frobenius(t, &t.basis(1))?;
    if x.terms().any(|(m, _)| m != 1) {
        return Err(Error::Precondition(format!("a_1^p = {x} is not a multiple of a_1")));
    }
    let lambda = x.coeff(1);
    if lambda.is_zero() {
        return Ok(Normalized {
            table: t.clone(),
            tag: 0,
            lambda,
            scale: field.one(),
            extension_degree: 1,
        });
    }
    let mut j = 1;
    loop {
        let target = if j == 1 { field.clone() } else { Field::builtin(field.prime_char(), field.degree() * j)? };
        let table = t.embed_into(&target)?;
        let emb = field.embedding_into(&target)?;
        let lam = emb[lambda.value() as usize];
        // nonzero roots of λ x^p - x
        let mut poly = vec![target.zero(); p];
        poly[0] = target.neg(target.one());
        poly[p - 1] = lam;
        if let Some(c) = target.find_root(&poly)? {
            let table = table.transport(&LambdaSeq::scaling(&target, c))?;
            let check = frobenius(&table, &table.basis(1))?;
            if check != table.basis(1) {
                return Err(Error::VerificationFailed(format!("normalized a_1^p = {check}")));
            }
            return Ok(Normalized { table, tag: 1, lambda, scale: c, extension_degree: j });
        }
        j += 1;
    }
}
