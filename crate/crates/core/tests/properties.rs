use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;

use common::random_unimodular;
use k3pencil::checks::MODEL_SPECS;
use k3pencil::exactmath::ops::substitute;
use k3pencil::exactmath::{gcd_poly, rat, squarefree_decomposition, vars, Field, FieldElem, MPoly, Rat, RatFun, UPoly};
use k3pencil::lattice::{
    a_chain, determinant, e8_cartan, fingerprint, fingerprints_match, rank_signature, standard_lattice, GramLattice,
};
use k3pencil::picard::{build_divisor_config, enumerate_and_filter, reflect_chain, Fiber};
use k3pencil::series::{apery, apery_operator, domb, domb_corrected, operator_to_recurrence, theta_apply, PowerSeries};
use k3pencil::singular::intersection_multiplicity;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn upoly(max_deg: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(small_rat(), 1..=max_deg + 1)
}

fn t_poly(c: &[Rat]) -> MPoly<Rat> {
    let v = vars(&["t"]);
    MPoly::from_terms(&v, c.iter().enumerate().map(|(i, x)| (vec![i as u32], x.clone())))
}

fn ratfun() -> impl Strategy<Value = FieldElem> {
    (upoly(2), upoly(1)).prop_filter_map("nonzero denominator", |(n, d)| {
        let den = UPoly::from_coeffs(d);
        (!den.is_zero()).then(|| FieldElem::from_ratfun(RatFun::new(UPoly::from_coeffs(n), den)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_divides_both(a in upoly(4), b in upoly(4), c in upoly(2)) {
        let (a, b, c) = (t_poly(&a), t_poly(&b), t_poly(&c));
        prop_assume!(!c.is_zero());
        let (p, q) = (a.mul(&c), b.mul(&c));
        prop_assume!(!p.is_zero() || !q.is_zero());
        let g = gcd_poly(&p, &q).unwrap();
        prop_assert!(p.div_exact(&g).is_some());
        prop_assert!(q.div_exact(&g).is_some());
        // the planted common factor divides the gcd
        if !p.is_zero() && !q.is_zero() {
            prop_assert!(g.div_exact(&c.monic()).is_some());
        }
    }

    #[test]
    fn squarefree_reconstructs(a in upoly(3), b in upoly(2)) {
        let (a, b) = (t_poly(&a), t_poly(&b));
        let p = a.mul(&b).mul(&b);
        prop_assume!(!p.is_zero());
        let d = squarefree_decomposition(&p).unwrap();
        prop_assert_eq!(d.reconstruct(p.vars()), p);
    }

    #[test]
    fn substitute_commutes_with_eval(c in prop::collection::vec(small_rat(), 6), x in small_rat(), y in small_rat()) {
        // p(u, v) with u = x + y, v = x·y
        let uv = vars(&["u", "v"]);
        let p = MPoly::from_terms(&uv, [
            (vec![0, 0], c[0].clone()), (vec![1, 0], c[1].clone()), (vec![0, 1], c[2].clone()),
            (vec![2, 0], c[3].clone()), (vec![1, 1], c[4].clone()), (vec![0, 3], c[5].clone()),
        ]);
        let xy = vars(&["x", "y"]);
        let one = MPoly::one(&xy);
        let xv = MPoly::var(&xy, 0);
        let yv = MPoly::var(&xy, 1);
        let mut b = BTreeMap::new();
        b.insert("u".to_string(), (xv.add(&yv), one.clone()));
        b.insert("v".to_string(), (xv.mul(&yv), one));
        let (num, den) = substitute(&p, &b, &xy).unwrap();
        let direct = p.eval(&[&x + &y, &x * &y]);
        prop_assert_eq!(num.eval(&[x.clone(), y.clone()]) / den.eval(&[x, y]), direct);
    }

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv()).is_one());
        }
    }

    #[test]
    fn intersection_symmetric(c in prop::collection::vec(-3i64..=3, 8)) {
        // two plane curves through (0:0:1)
        let v = vars(&["x", "y", "z"]);
        let f = MPoly::from_terms(&v, [
            (vec![1, 0, 1], rat(c[0], 1)), (vec![0, 1, 1], rat(c[1], 1)),
            (vec![2, 0, 0], rat(c[2], 1)), (vec![0, 2, 0], rat(c[3], 1)),
        ]);
        let g = MPoly::from_terms(&v, [
            (vec![1, 1, 0], rat(c[4], 1)), (vec![0, 1, 1], rat(c[5], 1)),
            (vec![2, 0, 0], rat(c[6], 1)), (vec![1, 0, 1], rat(c[7], 1)),
        ]);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let p = [Rat::from_int(0), Rat::from_int(0), Rat::from_int(1)];
        let a = intersection_multiplicity(&f, &g, &p);
        let b = intersection_multiplicity(&g, &f, &p);
        match (a, b) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "asymmetric failure"),
        }
    }

    #[test]
    fn recurrence_extends_to_a_solution(u0 in -5i64..=5) {
        // c_0(0) = 0, so u_0 alone fixes the solution, a multiple of the Domb numbers
        let op = domb_corrected();
        let rec = operator_to_recurrence(&op);
        let u = rec.extend(&[Rat::from_int(u0)], 12).unwrap();
        let r = theta_apply(&op, &PowerSeries::new("mu", u.clone())).unwrap();
        prop_assert!(r.is_zero());
        let scaled: Vec<Rat> = (0..12).map(|n| Rat::from_integer(domb(n)) * Rat::from_int(u0)).collect();
        prop_assert_eq!(u, scaled);
    }
}

#[test]
fn invariants_survive_unimodular_conjugation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for spec in MODEL_SPECS {
        let l = standard_lattice(spec).unwrap();
        let base = fingerprint(&l).unwrap();
        for _ in 0..100 {
            let p = random_unimodular(l.dim(), &mut rng);
            let t = l.transform(&p);
            assert!(fingerprints_match(&base, &fingerprint(&t).unwrap()), "{spec}");
        }
    }
}

#[test]
fn q_and_b_agree_on_the_diagonal() {
    for spec in MODEL_SPECS {
        let d = fingerprint(&standard_lattice(spec).unwrap()).unwrap().disc_form;
        for i in 0..d.q.len() {
            // b(x, x) = q(x) mod 1
            let diff = &d.q[i] - &d.b[i][i];
            assert!(diff.is_integer(), "{spec}: q={} b={}", d.q[i], d.b[i][i]);
        }
    }
}

#[test]
fn cartan_blocks() {
    let e8 = GramLattice::unlabeled(e8_cartan());
    assert_eq!(determinant(&e8), BigInt::from(1));
    let rs = rank_signature(&e8);
    assert_eq!((rs.rank, rs.positive), (8, 8));
    for k in 1..=6 {
        let a = GramLattice::unlabeled(a_chain(k));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        assert_eq!(determinant(&a), BigInt::from(sign * (k as i64 + 1)));
        assert_eq!(rank_signature(&a).negative, k);
    }
}

#[test]
fn generic_relations_count() {
    let cfg = build_divisor_config(Fiber::Generic).unwrap();
    let r = enumerate_and_filter(&cfg, 20).unwrap();
    assert_eq!(cfg.labels.len(), 23);
    for g in &r.grams {
        let rs = rank_signature(&GramLattice::unlabeled(g.clone()));
        assert_eq!(rs.rank, 19);
        assert_eq!(cfg.labels.len() - rs.rank, 4);
    }
}

#[test]
fn chain_swap_preserves_fingerprint() {
    for fiber in [Fiber::Generic, Fiber::SMinus1] {
        let cfg = build_divisor_config(fiber).unwrap();
        let r = enumerate_and_filter(&cfg, 20).unwrap();
        let g = &r.grams[0];
        let n_points = cfg
            .labels
            .iter()
            .filter_map(|l| l.strip_prefix('E')?.split(',').next()?.parse::<usize>().ok())
            .max()
            .unwrap();
        for p in 0..n_points {
            let h = reflect_chain(&cfg, g, p);
            let a = fingerprint(&GramLattice::new(cfg.labels.clone(), g.clone())).unwrap();
            let b = fingerprint(&GramLattice::new(cfg.labels.clone(), h)).unwrap();
            assert!(fingerprints_match(&a, &b));
        }
    }
}

#[test]
fn apery_recurrence_to_100() {
    let rec = operator_to_recurrence(&apery_operator());
    let u: Vec<Rat> = (0..=100).map(|n| Rat::from_integer(apery(n))).collect();
    for n in 1..=100 {
        assert!(rec.residual(&u, n).is_zero(), "n = {n}");
    }
}

#[test]
fn domb_is_binomial_times_sum() {
    use num_integer::binomial;
    for n in 0..=50u64 {
        let b = binomial(BigInt::from(2 * n), BigInt::from(n)) * k3pencil::series::sum_a(n);
        assert_eq!(domb(n), b);
    }
}
