use loop_hopf::{is_coalgebra_map, Field, FieldElement, LambdaSeq, LoopElement, Matrix, Prime, TensorElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gf(p: u64) -> Field {
    Field::prime(Prime::new(p).unwrap()).unwrap()
}

fn element(f: &Field, coeffs: &[u32]) -> LoopElement {
    LoopElement::from_dense(f, &coeffs.iter().map(|&c| f.from_int(c as i64)).collect::<Vec<_>>())
}

/// `(Δ ⊗ id)Δ` and `(id ⊗ Δ)Δ` as maps to index triples.
fn iterated(x: &LoopElement, left: bool) -> Vec<((usize, usize, usize), FieldElement)> {
    let f = x.field();
    let mut out = std::collections::BTreeMap::new();
    for ((a, b), c) in x.comult().terms() {
        let split = if left { a } else { b };
        let d = LoopElement::basis(f, x.bound(), split).unwrap().comult();
        for ((u, v), k) in d.terms() {
            let key = if left { (u, v, b) } else { (a, u, v) };
            let cur = out.entry(key).or_insert(f.zero());
            *cur = f.add(*cur, f.mul(c, k));
        }
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

proptest! {
    #[test]
    fn coassociative(coeffs in proptest::collection::vec(0u32..5, 1..12)) {
        let x = element(&gf(5), &coeffs);
        prop_assert_eq!(iterated(&x, true), iterated(&x, false));
    }

    #[test]
    fn counit_axioms(coeffs in proptest::collection::vec(0u32..3, 1..12)) {
        let f = gf(3);
        let x = element(&f, &coeffs);
        let d = x.comult();
        prop_assert_eq!(d.contract_left(|i| if i == 0 { f.one() } else { f.zero() }), x.clone());
        prop_assert_eq!(d.contract_right(|i| if i == 0 { f.one() } else { f.zero() }), x);
    }

    #[test]
    fn primitives_lie_in_degree_one(coeffs in proptest::collection::vec(0u32..2, 2..10)) {
        let x = element(&gf(2), &coeffs);
        if x.is_primitive() {
            prop_assert!(x.terms().all(|(m, _)| m == 1));
        }
    }

    #[test]
    fn components_reconstruct(coeffs in proptest::collection::vec(0u32..5, 1..10)) {
        let f = gf(5);
        let x = element(&f, &coeffs);
        let mut back = TensorElement::zero(&f, x.bound());
        for i in 0..x.bound() {
            let t = TensorElement::tensor(&LoopElement::basis(&f, x.bound(), i).unwrap(), &x.component(i)).unwrap();
            back = back.add(&t).unwrap();
        }
        prop_assert_eq!(back, x.comult());
    }

    #[test]
    fn graded_truncation(coeffs in proptest::collection::vec(0u32..5, 1..10), cut in 1usize..10) {
        let f = gf(5);
        let x = element(&f, &coeffs);
        let cut = cut.min(x.bound());
        let y = x.truncate(cut).unwrap();
        prop_assert!(y.comult().terms().all(|((a, b), _)| a < cut && b < cut));
    }

    #[test]
    fn lambda_matrices_are_coalgebra_maps(ls in proptest::collection::vec(0u32..5, 0..8)) {
        let f = gf(5);
        let seq = LambdaSeq::new(&f, ls.iter().map(|&l| f.from_int(l as i64)).collect()).unwrap();
        prop_assert!(is_coalgebra_map(&seq.matrix(8)));
    }
}

#[test]
fn verschiebung_is_a_coalgebra_map() {
    for p in [2u64, 3, 5] {
        let f = gf(p);
        let n = 30;
        let m = Matrix::from_fn(&f, n, n, |r, c| {
            LoopElement::basis(&f, n, c).unwrap().verschiebung().coeff(r)
        });
        assert!(is_coalgebra_map(&m), "p={p}");
    }
}

#[test]
fn basis_examples() {
    let f = gf(5);
    let a = |m| LoopElement::basis(&f, 6, m).unwrap();
    assert_eq!(a(2).comult().to_string(), "1*a0⊗a2 + 1*a1⊗a1 + 1*a2⊗a0");
    assert_eq!(a(3).comult().terms().count(), 4);
    assert_eq!(a(5).counit(), f.zero());
    assert_eq!(a(5).verschiebung(), a(1));
    assert!(a(1).verschiebung().is_zero());
    assert_eq!(a(3).component(1), a(2));
    let x = LoopElement::from_terms(&f, 6, [(0, f.from_int(3)), (2, f.one())]).unwrap();
    assert_eq!(x.counit(), f.from_int(3));
}

/// Sum over compositions `n = n_1 + ... + n_r` of `λ_{n_1} ... λ_{n_r}`.
fn composition_sum(seq: &LambdaSeq, n: usize, r: usize) -> FieldElement {
    let f = seq.field();
    if r == 0 {
        return if n == 0 { f.one() } else { f.zero() };
    }
    (1..=n).fold(f.zero(), |acc, first| {
        if n - first < r - 1 {
            return acc;
        }
        f.add(acc, f.mul(seq.lambda(first), composition_sum(seq, n - first, r - 1)))
    })
}

#[test]
fn evaluation_matches_composition_sums() {
    let f = gf(5);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let ls: Vec<FieldElement> = (0..10).map(|_| f.from_int(rng.gen_range(0..5))).collect();
        let seq = LambdaSeq::new(&f, ls).unwrap();
        for n in 0..=10 {
            let img = seq.evaluate(n, 11).unwrap();
            for r in 0..=n {
                assert_eq!(img.coeff(r), composition_sum(&seq, n, r), "n={n} r={r}");
            }
        }
    }
}

fn random_seq(f: &Field, rng: &mut ChaCha8Rng, len: usize) -> LambdaSeq {
    LambdaSeq::new(f, (0..len).map(|_| f.from_int(rng.gen_range(0..5))).collect()).unwrap()
}

#[test]
fn seeded_monoid_and_inverse_laws() {
    let f = gf(5);
    let n = 12;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let a = random_seq(&f, &mut rng, n - 1);
        let b = random_seq(&f, &mut rng, n - 1);
        assert!(is_coalgebra_map(&a.matrix(n)));
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.matrix(n), a.matrix(n).mul(&b.matrix(n)).unwrap());
        let invertible = a.matrix(n).inverse().is_ok();
        assert_eq!(a.is_automorphism(), invertible);
        if a.is_automorphism() {
            let inv = a.invert(n).unwrap();
            assert!(a.compose(&inv).unwrap().agrees_with(&LambdaSeq::identity(&f), n));
            assert!(inv.compose(&a).unwrap().agrees_with(&LambdaSeq::identity(&f), n));
        } else {
            assert!(a.invert(n).is_err());
        }
    }
}

#[test]
fn extension_restricts() {
    let f = gf(7);
    let seq = LambdaSeq::new(&f, vec![f.from_int(3), f.from_int(5)]).unwrap();
    let ext = seq.extend(6);
    assert_eq!(ext.lambdas().len(), 5);
    assert_eq!(ext.matrix(9).leading_block(3), seq.matrix(3));
    assert!(ext.agrees_with(&seq, 20));
}
