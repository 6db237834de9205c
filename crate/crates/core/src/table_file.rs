//! JSON table files.
//!
//! Canonical form: keys in the order `p`, `ext_degree`, `modulus` (only
//! when `ext_degree > 1`), `N`, `family` (optional), `table`; no
//! whitespace; each cell is a list of `[index, coords]` pairs sorted by
//! index with no zero coefficients.

use crate::error::{Error, Result};
use crate::hopf::{FamilyTag, MultTable};
use crate::loop_coalgebra::LoopElement;
use crate::scalars::{Field, Prime};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyJson {
    name: String,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
}

type Cell = Vec<(usize, Vec<u32>)>;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableJson {
    p: u64,
    ext_degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<Vec<u32>>,
    #[serde(rename = "N")]
    bound: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<FamilyJson>,
    table: Vec<Vec<Cell>>,
}

const FAMILIES: [&str; 4] = ["ld", "graded", "dual-cyclic", "nc2"];

pub fn to_json(t: &MultTable) -> String {
    let f = t.field();
    let n = t.bound();
    let doc = TableJson {
        p: f.characteristic() as u64,
        ext_degree: f.degree(),
        modulus: (f.degree() > 1).then(|| f.modulus().to_vec()),
        bound: n,
        family: t.family().map(|tag| FamilyJson { name: tag.name.clone(), n: tag.n, d: tag.d }),
        table: (0..n)
            .map(|a| (0..n).map(|b| t.entry(a, b).terms().map(|(m, c)| (m, f.coords(c))).collect()).collect())
            .collect(),
    };
    serde_json::to_string(&doc).expect("table serializes")
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

pub fn from_json(text: &str) -> Result<MultTable> {
    let doc: TableJson = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let p = Prime::new(doc.p)?;
    if doc.ext_degree == 0 {
        return Err(bad("ext_degree must be at least 1"));
    }
    let field = match (doc.ext_degree, doc.modulus) {
        (1, None) => Field::prime(p)?,
        (1, Some(_)) => return Err(bad("modulus must be omitted when ext_degree is 1")),
        (_, None) => return Err(bad("modulus is required when ext_degree exceeds 1")),
        (k, Some(m)) => {
            if m.len() != k + 1 {
                return Err(bad(format!("modulus needs {} coefficients, got {}", k + 1, m.len())));
            }
            Field::new(p, m)?
        }
    };
    let n = doc.bound;
    if n == 0 || doc.table.len() != n {
        return Err(bad(format!("table has {} rows, N is {n}", doc.table.len())));
    }
    let mut rows = Vec::with_capacity(n);
    for (a, row) in doc.table.into_iter().enumerate() {
        if row.len() != n {
            return Err(bad(format!("row {a} has {} cells, N is {n}", row.len())));
        }
        let mut out = Vec::with_capacity(n);
        for (b, cell) in row.into_iter().enumerate() {
            if cell.windows(2).any(|w| w[0].0 >= w[1].0) {
                return Err(bad(format!("cell ({a},{b}) is not sorted by index")));
            }
            let mut terms = Vec::with_capacity(cell.len());
            for (m, coords) in cell {
                let c = field.from_coords(&coords)?;
                if c.is_zero() {
                    return Err(bad(format!("cell ({a},{b}) stores a zero coefficient")));
                }
                terms.push((m, c));
            }
            out.push(LoopElement::from_terms(&field, n, terms)?);
        }
        rows.push(out);
    }
    let mut table = MultTable::new(&field, rows)?;
    if let Some(fam) = doc.family {
        if !FAMILIES.contains(&fam.name.as_str()) {
            return Err(bad(format!("unknown family {:?}", fam.name)));
        }
        table = table.with_family(FamilyTag { name: fam.name, n: fam.n, d: fam.d });
    }
    Ok(table)
}
