use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::Polynomial;
use crate::rewriting::OracleLimits;

fn p(res: &Resolution, text: &str) -> Polynomial {
    Polynomial::parse(text, res.alphabet()).unwrap()
}

fn e(n: usize, i: usize, j: usize) -> ModuleVector {
    ModuleVector::basis(n * n, slot(n, i, j))
}

#[test]
fn map_examples() {
    let res = Resolution::new(2, 3).unwrap();
    let maps = res.maps();
    assert_eq!(res.apply(&maps.phi3, &e(2, 1, 2)).unwrap().component(0), &p(&res, "u12"));
    assert_eq!(maps.phi1.entry(0, slot(2, 1, 1)), &p(&res, "u11 - 1"));
    let g = ModuleVector::from_components(vec![p(&res, "u11")]);
    assert_eq!(res.apply(&maps.epsilon, &g).unwrap().component(0), &Polynomial::one());
    let twice = res.apply(&maps.phi3, &res.apply(&maps.phi2, &e(2, 1, 1)).unwrap()).unwrap();
    assert!(twice.is_zero());

    let one = Resolution::new(1, 3).unwrap();
    let image = one.apply(&one.maps().phi2, &e(1, 1, 1)).unwrap();
    assert_eq!(image.component(0), &p(&one, "u11 + 1"));
}

#[test]
fn apply_rejects_uncertified_degree() {
    let res = Resolution::new(2, 3).unwrap();
    let v = ModuleVector::from_components(vec![p(&res, "u11*u12*u21"), Polynomial::zero(), Polynomial::zero(), Polynomial::zero()]);
    assert!(matches!(res.apply(&res.maps().phi3, &v), Err(crate::Error::CertificationExceeded { .. })));
}

#[test]
fn complex_property_and_negative_control() {
    for n in [1, 2, 3] {
        let res = Resolution::new(n, 3).unwrap();
        let check = verify_complex(&res).unwrap();
        assert!(check.passed, "{check:?}");
        assert_eq!(check.checked, 2 * n * n + 1);
    }
    let res = Resolution::new(2, 3).unwrap();
    let mut maps = res.maps().clone();
    maps.phi3.images[slot(2, 1, 1)] = ModuleVector::from_components(vec![p(&res, "u11")]);
    let check = verify_complex_with(&res, &maps).unwrap();
    assert!(!check.passed);
    let first = &check.failures[0];
    assert_eq!(first.stage, Some(2));
    assert_eq!(first.item, "epsilon.phi3(e11)");
    assert_eq!(first.residue, "(1)*1");
}

#[test]
fn comput1_and_free_images() {
    for n in 1..=3 {
        let res = Resolution::new(n, 3).unwrap();
        let check = verify_comput1(&res).unwrap();
        assert!(check.passed, "{check:?}");
        assert_eq!(check.checked, 2 * n * n);
        assert!(verify_phi3tilde_images(&res).passed);
    }
    let res = Resolution::new(2, 3).unwrap();
    let image = res.maps().phi3_tilde(res.maps().elements.r(1, 1));
    assert_eq!(image, p(&res, "u11*u11 + u12*u12 - 1"));
}

#[test]
fn injectivity_examples() {
    let limits = OracleLimits::default();
    assert_eq!(phi3tilde_injectivity(2, 0, limits).unwrap().kernel_dim, 0);
    assert_eq!(phi3tilde_injectivity(2, 2, limits).unwrap().kernel_dim, 0);
    assert_eq!(phi3tilde_injectivity(1, 3, limits).unwrap().kernel_dim, 0);
    assert!(phi3tilde_injectivity(3, 3, OracleLimits { max_words: 100 }).is_err());
}

#[test]
fn counit_preimage_examples() {
    let res = Resolution::new(2, 4).unwrap();
    assert_eq!(res.counit_preimage(&p(&res, "u12")).unwrap(), e(2, 1, 2));
    let b = res.counit_preimage(&p(&res, "u11*u12")).unwrap();
    assert_eq!(b, e(2, 1, 2).left_mul(&p(&res, "u11")));
    assert!(res.counit_preimage(&Polynomial::one()).unwrap().is_zero());
    let b = res.counit_preimage(&p(&res, "u11*u22 + 3*u21")).unwrap();
    assert!(!b.is_zero());
}

#[test]
fn phi2_preimage_examples() {
    let res = Resolution::new(2, 4).unwrap();
    let a = res.apply(&res.maps().phi2, &e(2, 1, 1)).unwrap();
    res.phi2_preimage(&a).unwrap();

    let l11 = res.reduce_vector(res.maps().elements.l(1, 1));
    res.phi2_preimage(&l11).unwrap();
    let mut b = ModuleVector::zero(4);
    for i in 1..=2 {
        *b.component_mut(slot(2, i, 1)) = res.u(i, 1);
    }
    assert_eq!(res.apply(&res.maps().phi2, &b).unwrap(), l11);

    let not_in_kernel = e(2, 1, 1);
    assert!(matches!(res.phi2_preimage(&not_in_kernel), Err(crate::Error::Precondition(_))));
}

#[test]
fn phi2_preimage_random_round_trips() {
    let res = Resolution::new(2, 5).unwrap();
    let words = res.basis().normal_words(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let v = random_vector(&mut rng, 4, &words, 3);
        let a = res.apply(&res.maps().phi2, &v).unwrap();
        res.phi2_preimage(&a).unwrap();
    }
}

#[test]
fn duality() {
    for n in 1..=3 {
        let res = Resolution::new(n, 3).unwrap();
        let check = verify_duality(&res).unwrap();
        assert!(check.passed, "{check:?}");
    }
}

#[test]
fn scalar_complex() {
    let c = trivialize(2).unwrap();
    assert!(c.phi3.is_zero() && c.phi1.is_zero());
    let c = trivialize(3).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            let col = c.phi2.column(i * 3 + j);
            let mut expected = crate::linalg::SparseVector::new();
            *expected.entry(i * 3 + j).or_default() += crate::algebra::Rational::from_integer(1.into());
            *expected.entry(j * 3 + i).or_default() += crate::algebra::Rational::from_integer(1.into());
            assert_eq!(col, expected);
        }
    }
    assert_eq!(trivialize(1).unwrap().phi2.get(0, 0), crate::algebra::Rational::from_integer(2.into()));
    for (n, dims) in [(1, [1, 0, 0, 1]), (2, [1, 1, 1, 1]), (3, [1, 3, 3, 1])] {
        let h = scalar_homology(n).unwrap();
        assert_eq!(h.dims, dims);
        assert_eq!(h.euler, 0);
        assert!(h.compositions_vanish && h.kernel_phi2_is_skew && h.image_phi2_is_symmetric);
    }
}

#[test]
fn hopf_suite() {
    for n in [2, 3] {
        let res = Resolution::new(n, 3).unwrap();
        let check = verify_hopf(&res, 1, 100).unwrap();
        assert!(check.passed, "{:?}", check.failures);
    }
}

#[test]
fn exactness_small() {
    let res = Resolution::new(2, 4).unwrap();
    let report = res.exactness_report(3, 1).unwrap();
    let eps = &report.positions[0];
    assert_eq!(eps.position, "epsilon");
    assert!(eps.passed());
    assert_eq!(eps.cross_validated, Some(true));
    assert_eq!(report.positions[3].kernel_dim, 0);
}

#[test]
fn dual_complex_n1_is_reversed_original() {
    let res = Resolution::new(1, 5).unwrap();
    let report = res.dual_complex_report(4, 2).unwrap();
    assert!(report.matches_reversed_original);
    // A_o(1) is the group algebra of Z/2: u + 1 is invariant
    assert_eq!(report.dims, [1, 0, 0, 1]);
}
