use super::verify::check_associativity;
use super::MultTable;
use crate::error::Result;
use crate::loop_coalgebra::{LoopElement, TensorElement};
use crate::scalars::{Field, FieldElement};

/// Every bialgebra structure on `k↻_N` with `a_0` as unit, over a finite
/// field, in lexicographic order of the choices made.
///
/// Entries are fixed in order of `a + b`. Multiplicativity of `Δ` at
/// `(a,b)` reads `Δ(y) - y⊗1 - 1⊗y = R` for `y = a_a a_b` and a tensor `R`
/// built from earlier entries, and `ε` forces `ε(y) = 0`. Such `y` is
/// unique up to the primitives `k a_1`, so each entry branches `|k|` ways.
/// Associativity is checked on complete tables.
pub fn enumerate_bialgebras(field: &Field, bound: usize) -> Result<Vec<MultTable>> {
    let mut pairs: Vec<(usize, usize)> = (1..bound).flat_map(|a| (1..bound).map(move |b| (a, b))).collect();
    pairs.sort_by_key(|&(a, b)| (a + b, a));
    let mut cells: Vec<Option<LoopElement>> = vec![None; bound * bound];
    for m in 0..bound {
        let e = LoopElement::basis(field, bound, m)?;
        cells[m] = Some(e.clone());
        cells[m * bound] = Some(e);
    }
    let mut out = Vec::new();
    search(field, bound, &pairs, 0, &mut cells, &mut out)?;
    Ok(out)
}

fn search(
    field: &Field,
    bound: usize,
    pairs: &[(usize, usize)],
    k: usize,
    cells: &mut Vec<Option<LoopElement>>,
    out: &mut Vec<MultTable>,
) -> Result<()> {
    if k == pairs.len() {
        let table = MultTable::from_fn(field, bound, |a, b| Ok(cells[a * bound + b].clone().expect("filled")))?;
        if check_associativity(&table).passed() {
            out.push(table);
        }
        return Ok(());
    }
    let (a, b) = pairs[k];
    let cell = |i: usize, j: usize| cells[i * bound + j].as_ref().expect("earlier entry");
    let mut rest = TensorElement::zero(field, bound);
    for i in 0..=a {
        for j in 0..=b {
            if (i, j) == (0, 0) || (i, j) == (a, b) {
                continue;
            }
            for (u, cu) in cell(i, j).terms() {
                for (v, cv) in cell(a - i, b - j).terms() {
                    rest.add_term(u, v, field.mul(cu, cv));
                }
            }
        }
    }
    // the a_1 ⊗ a_{m-1} coefficient of Δ(y) is y_m
    let forced: Vec<(usize, FieldElement)> = (2..bound).map(|m| (m, rest.coeff(1, m - 1))).collect();
    for c in field.elements() {
        let y = LoopElement::from_terms(field, bound, forced.iter().copied().chain([(1, c)]))?;
        let mut reduced = y.comult();
        for (m, w) in y.terms() {
            reduced.add_term(m, 0, field.neg(w));
            reduced.add_term(0, m, field.neg(w));
        }
        if reduced != rest {
            continue;
        }
        cells[a * bound + b] = Some(y);
        search(field, bound, pairs, k + 1, cells, out)?;
        cells[a * bound + b] = None;
    }
    Ok(())
}
