use loop_hopf::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn gf(p: u64) -> Field {
    Field::prime(prime(p)).unwrap()
}

fn lnd(p: u64, n: usize, d: usize) -> MultTable {
    build_lnd(&FamilyParams::new(prime(p), n, d, 1).unwrap()).unwrap()
}

#[test]
fn integral_examples() {
    let t = lnd(2, 1, 0);
    assert_eq!(t.entry(1, 1), &t.basis(1));
    let data = integral(&t);
    assert_eq!(data.explicit.to_string(), "1*a0 + 1*a1");
    assert_eq!(data.explicit_counit, t.field().one());
    assert!(data.explicit_is_integral);
    assert_eq!(data.dim(), 1);
    assert!(is_semisimple(&t));

    let t = lnd(2, 1, 1);
    let data = integral(&t);
    assert_eq!(data.explicit.to_string(), "1*a0 + 1*a1");
    assert!(!data.explicit_is_integral);
    assert!(!data.has_nonzero_counit());
    assert!(!is_semisimple(&t));
}

#[test]
fn explicit_product_has_counit_one() {
    for t in [lnd(3, 2, 1), lnd(2, 3, 2), build_graded(&gf(5), 1).unwrap()] {
        assert_eq!(integral(&t).explicit_counit, t.field().one());
    }
}

#[test]
fn integral_space_is_one_dimensional() {
    for (p, n) in [(2u64, 2usize), (3, 2)] {
        for d in 0..=n {
            assert_eq!(integral(&lnd(p, n, d)).dim(), 1, "p={p} n={n} d={d}");
        }
    }
}

#[test]
fn semisimple_local_dichotomy() {
    for (p, n) in [(2u64, 3usize), (3, 2), (5, 1)] {
        for d in 0..=n {
            let t = lnd(p, n, d);
            assert_eq!(is_semisimple(&t), d == 0, "p={p} n={n} d={d}");
            assert_eq!(is_local(&t), d >= 1, "p={p} n={n} d={d}");
        }
    }
    assert!(is_local(&build_graded(&gf(3), 2).unwrap()));
    let trivial = MultTable::new(&gf(2), vec![vec![LoopElement::unit(&gf(2), 1)]]).unwrap();
    assert!(is_semisimple(&trivial));
}

#[test]
fn frobenius_examples() {
    let t = lnd(2, 2, 1);
    assert_eq!(frobenius(&t, &t.unit()).unwrap(), t.unit());
    assert_eq!(frobenius(&t, &t.basis(2)).unwrap(), t.basis(1));
    let t = lnd(2, 2, 2);
    assert!(frobenius(&t, &t.basis(1)).unwrap().is_zero());
}

#[test]
fn frobenius_commutes_with_comultiplication() {
    for t in [lnd(2, 3, 1), lnd(3, 2, 0), lnd(3, 2, 1), lnd(5, 1, 0)] {
        for m in 0..t.bound() {
            let x = t.basis(m);
            let fx = frobenius(&t, &x).unwrap();
            let mut rhs = TensorElement::zero(t.field(), t.bound());
            for ((a, b), c) in x.comult().terms() {
                let fa = frobenius(&t, &t.basis(a)).unwrap().scale(c);
                let fb = frobenius(&t, &t.basis(b)).unwrap();
                rhs = rhs.add(&TensorElement::tensor(&fa, &fb).unwrap()).unwrap();
            }
            assert_eq!(fx.comult(), rhs);
        }
    }
}

#[test]
fn antipode_involutive_on_commutative_tables() {
    let tables = vec![lnd(2, 3, 1), lnd(3, 2, 0), lnd(5, 1, 1), build_dual_cyclic(&gf(3), 2).unwrap()];
    for t in tables {
        let s = antipode(&t);
        assert!(s.is_two_sided());
        assert!(s.is_involutive());
        let sq = s.matrix().mul(&s.matrix()).unwrap();
        assert_eq!(sq, Matrix::identity(t.field(), t.bound()));
    }
}

#[test]
fn classification_is_invariant_under_coalgebra_automorphisms() {
    let f = gf(3);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 0..=2 {
        let t = lnd(3, 2, d);
        for _ in 0..5 {
            let mut ls: Vec<FieldElement> = (0..8).map(|_| f.from_int(rng.gen_range(0..3))).collect();
            ls[0] = f.from_int(rng.gen_range(1..3));
            let g = LambdaSeq::new(&f, ls).unwrap();
            let moved = t.transport(&g).unwrap();
            assert!(verify(&moved).all_passed());
            assert_eq!(hopf::frobenius_rank(&moved), hopf::frobenius_rank(&t));
            assert_eq!(classify(&moved), Classification::Lnd { n: 2, d });
        }
    }
    assert!(t_non_auto(&f).is_err());
}

fn t_non_auto(f: &Field) -> Result<MultTable> {
    lnd(3, 1, 0).transport(&LambdaSeq::new(f, vec![f.zero(), f.one()]).unwrap())
}

#[test]
fn uniserial_checks() {
    let t = build_graded(&gf(3), 2).unwrap();
    assert_eq!(verify_uniserial(&t).unwrap(), None);
    let f = gf(2);
    let odd = MultTable::from_fn(&f, 3, |a, b| {
        Ok(if a == 0 || b == 0 { LoopElement::basis(&f, 3, a + b)? } else { LoopElement::zero(&f, 3) })
    })
    .unwrap();
    assert!(matches!(verify_uniserial(&odd), Err(Error::NotPowerOfP(3, 2))));
    assert_eq!(verify(&odd).uniserial, Check::NotApplicable);
}

#[test]
fn classify_rejects_bad_dimensions() {
    let f = gf(2);
    let t = build_graded(&f, 1).unwrap();
    let t3 = MultTable::from_fn(&f, 3, |a, b| {
        Ok(if a + b < 3 { LoopElement::basis(&f, 3, a + b)? } else { LoopElement::zero(&f, 3) })
    })
    .unwrap();
    assert!(matches!(classify(&t3), Classification::Unclassified(_)));
    assert_eq!(classify(&t), Classification::Lnd { n: 1, d: 1 });
}

#[test]
fn normalize_cases() {
    let zero = lnd(3, 1, 1);
    let n = normalize_dim_p(&zero).unwrap();
    assert_eq!((n.tag, n.extension_degree), (0, 1));
    assert_eq!(n.table, zero);
    let one = lnd(3, 1, 0);
    let n = normalize_dim_p(&one).unwrap();
    assert_eq!((n.tag, n.extension_degree), (1, 1));
    assert!(normalize_dim_p(&lnd(2, 2, 1)).is_err());
}

#[test]
fn exhaustive_dimension_p() {
    for (p, expected) in [(2u64, 2usize), (3, 9)] {
        let all = enumerate_bialgebras(&gf(p), p as usize).unwrap();
        assert_eq!(all.len(), expected);
        let mut tags: Vec<u8> = all.iter().map(|t| normalize_dim_p(t).unwrap().tag).collect();
        tags.sort_unstable();
        tags.dedup();
        assert_eq!(tags, vec![0, 1]);
    }
}

#[test]
fn multiply_rejects_mismatches() {
    let t = lnd(2, 1, 0);
    let other = LoopElement::unit(&gf(3), 2);
    assert_eq!(t.multiply(&other, &t.unit()), Err(Error::IncompatibleFields));
}
