//! Constructors for the named Hopf structures on `k↻_N`.

mod lnd;
mod monomial;

pub use monomial::{monomial_coefficient, monomial_table, Monomial};

use crate::error::{Error, Result};
use crate::hopf::{frobenius, verify, FamilyTag, MultTable};
use crate::loop_coalgebra::LoopElement;
use crate::scalars::{lucas_binom, Field, FieldElement, Prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub p: Prime,
    pub n: usize,
    pub d: usize,
    /// Degree of the coefficient field over `GF(p)`.
    pub ext: usize,
}

impl FamilyParams {
    pub fn new(p: Prime, n: usize, d: usize, ext: usize) -> Result<FamilyParams> {
        if n == 0 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        if d > n {
            return Err(Error::InvalidParams(format!("d = {d} exceeds n = {n}")));
        }
        if ext == 0 {
            return Err(Error::InvalidParams("extension degree must be at least 1".into()));
        }
        Ok(FamilyParams { p, n, d, ext })
    }

    pub fn field(&self) -> Result<Field> {
        Field::builtin(self.p, self.ext)
    }

    pub fn bound(&self) -> usize {
        (self.p.get() as usize).pow(self.n as u32)
    }
}

fn dimension(field: &Field, n: usize) -> Result<usize> {
    (field.characteristic() as usize).checked_pow(n as u32).ok_or(Error::Overflow)
}

fn tag(name: &str, n: usize, d: Option<usize>) -> FamilyTag {
    FamilyTag { name: name.into(), n, d }
}

/// `L(n,d)` on `k↻_{p^n}`. The table is run through the full verifier and
/// rejected unless every check passes.
pub fn build_lnd(params: &FamilyParams) -> Result<MultTable> {
    let FamilyParams { p, n, d, .. } = *params;
    let table = lnd::lnd_table(p, n, d)?.embed_into(&params.field()?)?.with_family(tag("ld", n, Some(d)));
    let report = verify(&table);
    if !report.all_passed() {
        return Err(Error::VerificationFailed(format!("L({n},{d}) over GF({p}):\n{report}")));
    }
    Ok(table)
}

/// `a_a a_b = C(a+b, a) a_{a+b}`, truncated at `p^n`.
pub fn build_graded(field: &Field, n: usize) -> Result<MultTable> {
    let bound = dimension(field, n)?;
    let p = field.prime_char();
    MultTable::from_fn(field, bound, |a, b| {
        if a + b >= bound {
            return Ok(LoopElement::zero(field, bound));
        }
        let c = lucas_binom((a + b) as u64, a as u64, p)?;
        LoopElement::from_terms(field, bound, [(a + b, field.from_int(c as i64))])
    })
    .map(|t| t.with_family(tag("graded", n, Some(n))))
}

/// Coefficient of `u^a ⊗ u^b` in `Δ(u)^m` for `Δ(u) = u⊗1 + 1⊗u + u⊗u`,
/// i.e. `Σ_j (-1)^{m-j} C(m,j) C(j,a) C(j,b)`.
fn dual_cyclic_coefficient(field: &Field, a: usize, b: usize, m: usize) -> Result<FieldElement> {
    let p = field.prime_char();
    let mut acc = field.zero();
    for j in a.max(b)..=m {
        let term = lucas_binom(m as u64, j as u64, p)? as i64
            * lucas_binom(j as u64, a as u64, p)? as i64
            * lucas_binom(j as u64, b as u64, p)? as i64;
        let term = field.from_int(term);
        acc = if (m - j).is_multiple_of(2) { field.add(acc, term) } else { field.sub(acc, term) };
    }
    Ok(acc)
}

/// The dual of the group algebra of `Z_{p^n}`, with `a_m` dual to `u^m`
/// for `u = g - 1`.
pub fn build_dual_cyclic(field: &Field, n: usize) -> Result<MultTable> {
    let bound = dimension(field, n)?;
    MultTable::from_fn(field, bound, |a, b| {
        let terms = (a.max(b)..bound.min(a + b + 1))
            .map(|m| Ok((m, dual_cyclic_coefficient(field, a, b, m)?)))
            .collect::<Result<Vec<_>>>()?;
        LoopElement::from_terms(field, bound, terms)
    })
    .map(|t| t.with_family(tag("dual-cyclic", n, Some(0))))
}

/// The algebra `<x, y | x^2 = y^2 = 0, xy - yx = x>` on the basis
/// `1, x, y, yx`, as structure constants.
fn nc2_algebra() -> [[[FieldElement; 4]; 4]; 4] {
    let z = FieldElement::ZERO;
    let o = FieldElement::ONE;
    let mut m = [[[z; 4]; 4]; 4];
    for b in 0..4 {
        m[0][b][b] = o;
        m[b][0][b] = o;
    }
    // x y = yx + x
    m[1][2] = [z, o, z, o];
    // y x = yx
    m[2][1] = [z, z, z, o];
    // yx y = y (yx + x) = yx
    m[3][2] = [z, z, z, o];
    m
}

type Vec4 = [FieldElement; 4];
type Tensor4 = [[FieldElement; 4]; 4];

fn alg_mul(field: &Field, m: &[[Vec4; 4]; 4], x: &Vec4, y: &Vec4) -> Vec4 {
    let mut out = [FieldElement::ZERO; 4];
    for a in 0..4 {
        for b in 0..4 {
            let c = field.mul(x[a], y[b]);
            if c.is_zero() {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                *slot = field.add(*slot, field.mul(c, m[a][b][r]));
            }
        }
    }
    out
}

fn tensor_mul(field: &Field, m: &[[Vec4; 4]; 4], s: &Tensor4, t: &Tensor4) -> Tensor4 {
    let mut out = [[FieldElement::ZERO; 4]; 4];
    for (a1, row) in s.iter().enumerate() {
        for (a2, &c1) in row.iter().enumerate() {
            for (b1, row2) in t.iter().enumerate() {
                for (b2, &c2) in row2.iter().enumerate() {
                    let c = field.mul(c1, c2);
                    if c.is_zero() {
                        continue;
                    }
                    for u in 0..4 {
                        for v in 0..4 {
                            let k = field.mul(c, field.mul(m[a1][b1][u], m[a2][b2][v]));
                            out[u][v] = field.add(out[u][v], k);
                        }
                    }
                }
            }
        }
    }
    out
}

fn basis4(i: usize) -> Vec4 {
    let mut v = [FieldElement::ZERO; 4];
    v[i] = FieldElement::ONE;
    v
}

fn outer(field: &Field, x: &Vec4, y: &Vec4) -> Tensor4 {
    let mut t = [[FieldElement::ZERO; 4]; 4];
    for u in 0..4 {
        for v in 0..4 {
            t[u][v] = field.mul(x[u], y[v]);
        }
    }
    t
}

fn tensor_add(field: &Field, s: &Tensor4, t: &Tensor4) -> Tensor4 {
    let mut out = *s;
    for u in 0..4 {
        for v in 0..4 {
            out[u][v] = field.add(s[u][v], t[u][v]);
        }
    }
    out
}

/// Candidate non-commutative structure in characteristic 2 from the
/// presentation `xy - yx = x`, `x^2 = y^2 = 0`, `Δ(y) = y⊗1 + 1⊗y + x⊗x`,
/// with `x = a_1` and `y = a_2`. Products are rewritten to the words
/// `1, x, y, yx`, and `a_3` is the first vector in `span{yx, x, y}`
/// (coefficients read as bits, `yx` lowest) whose coproduct is
/// deconcatenation.
///
/// The table is returned unverified. The presentation is inconsistent:
/// `(xy)y = x` while `x y^2 = 0`, so the verifier reports an
/// associativity failure at `(1,2,2)`.
pub fn build_nc2(field: &Field) -> Result<MultTable> {
    if field.characteristic() != 2 {
        return Err(Error::InvalidParams("nc2 exists in characteristic 2 only".into()));
    }
    let m = nc2_algebra();
    let e = basis4;
    let dx = tensor_add(field, &outer(field, &e(1), &e(0)), &outer(field, &e(0), &e(1)));
    let dy = tensor_add(
        field,
        &tensor_add(field, &outer(field, &e(2), &e(0)), &outer(field, &e(0), &e(2))),
        &outer(field, &e(1), &e(1)),
    );
    let dyx = tensor_mul(field, &m, &dy, &dx);
    let images = [outer(field, &e(0), &e(0)), dx, dy, dyx];
    let comult = |v: &Vec4| -> Tensor4 {
        let mut out = [[FieldElement::ZERO; 4]; 4];
        for (c, d) in v.iter().zip(&images) {
            for u in 0..4 {
                for w in 0..4 {
                    out[u][w] = field.add(out[u][w], field.mul(*c, d[u][w]));
                }
            }
        }
        out
    };
    let candidate = (0u8..8).map(|mask| {
        let bit = |k: u8| if mask >> k & 1 == 1 { FieldElement::ONE } else { FieldElement::ZERO };
        [FieldElement::ZERO, bit(1), bit(2), bit(0)]
    });
    let mut chosen = None;
    for a3 in candidate {
        let (x, y) = (e(1), e(2));
        let mut want = tensor_add(field, &outer(field, &a3, &e(0)), &outer(field, &e(0), &a3));
        want = tensor_add(field, &want, &outer(field, &x, &y));
        want = tensor_add(field, &want, &outer(field, &y, &x));
        if comult(&a3) == want && !a3[3].is_zero() {
            chosen = Some(a3);
            break;
        }
    }
    let a3 = chosen.ok_or_else(|| Error::VerificationFailed("no admissible a_3".into()))?;
    let paths = [e(0), e(1), e(2), a3];
    // express algebra vectors in the path basis; only the yx coordinate mixes
    let to_paths = |v: &Vec4| -> Vec4 {
        let k = field.div(v[3], a3[3]).expect("a_3 has a yx component");
        let mut out = [v[0], v[1], v[2], k];
        for i in 1..3 {
            out[i] = field.sub(out[i], field.mul(k, a3[i]));
        }
        out
    };
    MultTable::from_fn(field, 4, |a, b| {
        let prod = to_paths(&alg_mul(field, &m, &paths[a], &paths[b]));
        Ok(LoopElement::from_dense(field, &prod))
    })
    .map(|t| t.with_family(tag("nc2", 2, None)))
}

/// Results of the defining relations of `L(n,d)` on a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub generators_commute: bool,
    /// `a_{p^i}^p = 0` for `i < d`.
    pub nilpotent_generators: bool,
    /// `a_{p^i}^p = a_{p^{i-d}}` for `i >= d`.
    pub generator_powers: bool,
    /// First `m` with `a_m^p != V^d(a_m)`, if any.
    pub frobenius_mismatch: Option<usize>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.generators_commute
            && self.nilpotent_generators
            && self.generator_powers
            && self.frobenius_mismatch.is_none()
    }
}

fn verschiebung_power(x: &LoopElement, d: usize) -> LoopElement {
    (0..d).fold(x.clone(), |acc, _| acc.verschiebung())
}

pub fn relation_suite(t: &MultTable, params: &FamilyParams) -> Result<RelationReport> {
    if t.bound() != params.bound() {
        return Err(Error::BoundMismatch(t.bound(), params.bound()));
    }
    let p = params.p.get() as usize;
    let gens: Vec<usize> = (0..params.n).map(|i| p.pow(i as u32)).collect();
    let generators_commute = gens.iter().all(|&a| gens.iter().all(|&b| t.entry(a, b) == t.entry(b, a)));
    let gen_power = |i: usize| frobenius(t, &t.basis(gens[i]));
    let mut nilpotent_generators = true;
    let mut generator_powers = true;
    for i in 0..params.n {
        let x = gen_power(i)?;
        if i < params.d {
            nilpotent_generators &= x.is_zero();
        } else {
            generator_powers &= x == t.basis(gens[i - params.d]);
        }
    }
    let mut frobenius_mismatch = None;
    for m in 0..t.bound() {
        let x = t.basis(m);
        if frobenius(t, &x)? != verschiebung_power(&x, params.d) {
            frobenius_mismatch = Some(m);
            break;
        }
    }
    Ok(RelationReport { generators_commute, nilpotent_generators, generator_powers, frobenius_mismatch })
}
