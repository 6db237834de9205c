//! Hopf quivers `Q(G, r)` of finite groups and thin splits.

use crate::error::{Error, Result};
use crate::scalars::{lucas_binom, Prime};
use std::collections::BTreeMap;
use std::fmt;

/// A finite group as a validated Cayley table on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<GroupTable> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty Cayley table".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table is not a square array on 0..n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x][y] == identity && table[y][x] == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("{x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupTable { table, identity, inverse })
    }

    pub fn trivial() -> GroupTable {
        GroupTable::new(vec![vec![0]]).expect("trivial group")
    }

    pub fn cyclic(n: usize) -> Result<GroupTable> {
        GroupTable::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
    }

    /// Permutations of three points in lexicographic order, composed as
    /// functions: `(ab)(i) = a(b(i))`.
    pub fn symmetric3() -> GroupTable {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |q: [usize; 3]| perms.iter().position(|&x| x == q).expect("permutation");
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        GroupTable::new(table).expect("S3")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

/// Conjugacy classes, each sorted, ordered by smallest element. The
/// smallest element serves as the class representative.
pub fn conjugacy_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..n).map(|h| g.mul(g.mul(h, x), g.inv(h))).collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            seen[y] = true;
        }
        classes.push(class);
    }
    classes
}

/// Multiplicities `r_C` keyed by class representative.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RamificationData(BTreeMap<usize, usize>);

impl RamificationData {
    /// Negative multiplicities are rejected; zero entries are dropped.
    pub fn new(entries: impl IntoIterator<Item = (usize, i64)>) -> Result<RamificationData> {
        let mut map = BTreeMap::new();
        for (rep, r) in entries {
            let r = usize::try_from(r).map_err(|_| Error::InvalidParams(format!("negative multiplicity {r}")))?;
            if r > 0 {
                *map.entry(rep).or_insert(0) += r;
            }
        }
        Ok(RamificationData(map))
    }

    pub fn get(&self, rep: usize) -> usize {
        self.0.get(&rep).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: usize,
    /// `(source, target) -> multiplicity`, multiplicities at least 1.
    pub arrows: BTreeMap<(usize, usize), usize>,
}

impl Quiver {
    pub fn arrow_count(&self) -> usize {
        self.arrows.values().sum()
    }
}

/// `v -> w (xk)` per arrow bundle, sorted.
impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((v, w), k) in &self.arrows {
            writeln!(f, "{v} -> {w} (x{k})")?;
        }
        Ok(())
    }
}

/// `r_C` arrows `x -> cx` for every `x` and every `c` in each class `C`.
pub fn build_hopf_quiver(g: &GroupTable, r: &RamificationData) -> Result<Quiver> {
    let classes = conjugacy_classes(g);
    for &rep in r.0.keys() {
        if !classes.iter().any(|c| c[0] == rep) {
            return Err(Error::InvalidParams(format!("{rep} is not a class representative")));
        }
    }
    let mut arrows = BTreeMap::new();
    for class in &classes {
        let mult = r.get(class[0]);
        if mult == 0 {
            continue;
        }
        for x in 0..g.order() {
            for &c in class {
                *arrows.entry((x, g.mul(c, x))).or_insert(0) += mult;
            }
        }
    }
    Ok(Quiver { vertices: g.order(), arrows })
}

/// 0/1 sequences of length `m + n` with exactly `m` ones, in
/// lexicographic order.
pub fn thin_splits(m: usize, n: usize) -> Vec<Vec<u8>> {
    fn go(ones: usize, zeros: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if ones == 0 && zeros == 0 {
            out.push(cur.clone());
            return;
        }
        if zeros > 0 {
            cur.push(0);
            go(ones, zeros - 1, cur, out);
            cur.pop();
        }
        if ones > 0 {
            cur.push(1);
            go(ones - 1, zeros, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, n, &mut Vec::with_capacity(m + n), &mut out);
    out
}

pub fn thin_split_count(m: usize, n: usize) -> usize {
    thin_splits(m, n).len()
}

/// The loop product with trivial bimodule actions: each split contributes
/// `a_{a+b}` once, so the coefficient is the number of splits mod `p`.
pub fn thin_split_product_loop(a: usize, b: usize, p: Prime) -> u32 {
    (thin_split_count(a, b) % p.get() as usize) as u32
}

/// Closed form of [`thin_split_product_loop`].
pub fn loop_product_coefficient(a: usize, b: usize, p: Prime) -> u32 {
    lucas_binom((a + b) as u64, a as u64, p).expect("a <= a + b")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes() {
        assert_eq!(conjugacy_classes(&GroupTable::trivial()), vec![vec![0]]);
        assert_eq!(conjugacy_classes(&GroupTable::cyclic(2).unwrap()), vec![vec![0], vec![1]]);
        let mut sizes: Vec<usize> = conjugacy_classes(&GroupTable::symmetric3()).iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn invalid_groups() {
        assert!(GroupTable::new(vec![vec![0, 0], vec![0, 1]]).is_err());
        assert!(GroupTable::new(vec![vec![0, 1], vec![1]]).is_err());
        assert!(GroupTable::new(vec![]).is_err());
    }

    #[test]
    fn quivers() {
        let q = build_hopf_quiver(&GroupTable::trivial(), &RamificationData::new([(0, 1)]).unwrap()).unwrap();
        assert_eq!(q.to_string(), "0 -> 0 (x1)\n");
        let z2 = GroupTable::cyclic(2).unwrap();
        let q = build_hopf_quiver(&z2, &RamificationData::new([(1, 1)]).unwrap()).unwrap();
        assert_eq!(q.to_string(), "0 -> 1 (x1)\n1 -> 0 (x1)\n");
        let q = build_hopf_quiver(&z2, &RamificationData::default()).unwrap();
        assert_eq!(q.arrow_count(), 0);
        assert!(RamificationData::new([(0, -1)]).is_err());
        assert!(build_hopf_quiver(&GroupTable::symmetric3(), &RamificationData::new([(2, 1)]).unwrap()).is_err());
    }

    #[test]
    fn splits() {
        assert_eq!(thin_split_count(0, 5), 1);
        assert_eq!(thin_splits(2, 1), vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(thin_split_count(3, 3), 20);
        let p = |v| Prime::new(v).unwrap();
        assert_eq!(thin_split_product_loop(4, 0, p(3)), 1);
        assert_eq!(thin_split_product_loop(1, 1, p(2)), 0);
        assert_eq!(thin_split_product_loop(2, 1, p(3)), 0);
    }
}
