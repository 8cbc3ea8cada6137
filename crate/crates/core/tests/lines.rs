use k3pencil::cover::*;
use k3pencil::exactmath::parse::parse_poly;
use k3pencil::exactmath::Ext;
use k3pencil::pencil::{xyz, SValue};
use k3pencil::singular::ProjPoint;

fn expected_line_matrix() -> Vec<Vec<i64>> {
    vec![
        vec![-2, 0, 0, 0, 0, 0, 0, 0],
        vec![0, -2, 0, 0, 0, 0, 0, 0],
        vec![0, 0, -2, 0, 0, 0, 0, 0],
        vec![0, 0, 0, -2, 0, 1, 0, 1],
        vec![0, 0, 0, 0, -2, 0, 1, 0],
        vec![0, 0, 0, 1, 0, -2, 0, 1],
        vec![0, 0, 0, 0, 1, 0, -2, 0],
        vec![0, 0, 0, 1, 0, 1, 0, -2],
    ]
}

fn p1_to_p4() -> Vec<ProjPoint> {
    BranchConfig::branch_points().into_iter().map(|(p, _)| p).collect()
}

#[test]
fn generic_lifts_hold() {
    let cfg = BranchConfig::generic();
    for l in generic_lines() {
        let c = verify_component_lift(&l, &cfg).unwrap();
        assert!(c.pass, "{}: {}", l.label, c.residual);
        assert!(even_contact_test(&l.line, &cfg).unwrap().even, "{}", l.label);
    }
}

#[test]
fn generic_matrix() {
    let m = line_matrix(&generic_lines(), &p1_to_p4()).unwrap();
    assert_eq!(m, expected_line_matrix());
}

#[test]
fn printed_order_is_a_relabelling() {
    let m = line_matrix(&printed_lines(), &p1_to_p4()).unwrap();
    let perm = [0, 1, 2, 3, 4, 6, 5, 7];
    let lm = expected_line_matrix();
    for i in 0..8 {
        for j in 0..8 {
            assert_eq!(m[i][j], lm[perm[i]][perm[j]]);
        }
    }
    assert_ne!(m, lm);
}

#[test]
fn special_fibre_lifts_hold() {
    for s in [SValue::at(1), SValue::at(-1), SValue::at(2)] {
        let cfg = BranchConfig::new(&s);
        for l in lines_for(&s).unwrap() {
            let c = verify_component_lift(&l, &cfg).unwrap();
            assert!(c.pass, "s={} {}: {}", s.label(), l.label, c.residual);
        }
    }
}

#[test]
fn skew_line_has_odd_contact() {
    let cfg = BranchConfig::generic();
    let l = parse_poly("z-x-2*y", &xyz(), Ext::None).unwrap();
    let r = even_contact_test(&l, &cfg).unwrap();
    assert!(!r.even);
    assert!(r.exponents.iter().any(|e| e % 2 == 1));
}

#[test]
fn l5_even_over_extension() {
    let cfg = BranchConfig::generic();
    let l5 = &generic_lines()[4];
    let r = even_contact_test(&l5.line, &cfg).unwrap();
    assert!(r.even);
    assert!(r.square_root.is_some());
}

#[test]
fn cremona_gives_printed_cubics() {
    for i in [0, 1] {
        let r = cremona_pullback_check(i).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.pullback_degree, 8);
        let mut e: Vec<u32> = r.exceptional.iter().map(|x| x.1).collect();
        e.sort();
        assert_eq!(e, vec![1, 2, 2]);
        assert_eq!(r.base_point_multiplicities, vec![2, 2, 1]);
    }
}

#[test]
fn chain_identities() {
    let r = chain_model_check().unwrap();
    assert!(r.pass, "{r:?}");
    assert_ne!(r.printed_rescaling_residual, "0");
}
