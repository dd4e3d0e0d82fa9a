use ncreflect_core::hopf::HopfData;
use ncreflect_core::input::Problem;
use ncreflect_core::invariants::*;
use ncreflect_core::linalg::SparseVec;
use ncreflect_core::ncalg::{Elem, GradedSubspace, Side};
use ncreflect_core::presets;
use ncreflect_core::smash::*;
use ncreflect_core::Scalar;

fn load(name: &str, d: u32) -> Problem {
    presets::load(name).unwrap().load(Some(d)).unwrap()
}

fn jacobian_of(p: &Problem) -> Elem {
    let table = components(&p.action, &p.chars);
    let r = fixed_ring(&p.action, &p.integral, &table);
    let h = hdet(&p.action, &p.chars, &table, &r, p.hdet).unwrap();
    jacobian(p.alg(), &p.chars, &table, &r, &h).unwrap().j
}

fn h_elem(h: &HopfData, terms: &[(&str, i64, i64)]) -> SparseVec {
    SparseVec::from_entries(
        terms
            .iter()
            .map(|(l, n, d)| (h.index_of(l).unwrap(), Scalar::from_ratio(*n, *d)))
            .collect(),
    )
}

#[test]
fn kac_palyutkin_radical_is_principal() {
    let p = load("e42-kacpalyutkin", 12);
    let alg = p.alg();
    let rad = radical_ideal(&p.action, &p.integral);
    let w = alg.parse("u*v*(u^4 - v^4)").unwrap();
    let expected = alg.ideal_slices(std::slice::from_ref(&w), Side::Left);
    for d in 6..=12u32 {
        assert_eq!(rad.slices.slice(d), expected.slice(d), "degree {d}");
        assert_eq!(rad.slices.slice(d).dim(), d as usize - 5);
    }
    assert!((0..6).all(|d| rad.slices.slice(d).is_zero()));
    match principal_radical(alg, &rad.slices) {
        PrincipalRadical::Principal(g) => assert!(g.proportional(&w)),
        other => panic!("{other:?}"),
    }
    let j = jacobian_of(&p);
    let jr = alg.mul(&j, &alg.parse("u^2 + v^2").unwrap()).unwrap();
    assert!(jr.proportional(&w));
}

#[test]
fn kac_palyutkin_dis_radical() {
    let p = load("e42-kacpalyutkin", 12);
    let alg = p.alg();
    let table = components(&p.action, &p.chars);
    let r = fixed_ring(&p.action, &p.integral, &table);
    let rad = radical_ideal(&p.action, &p.integral);
    let dr = dis_radical(alg, &rad.slices, &r.slices);
    let expected = alg.parse("u^2*v^2*(u^2 - v^2)^2*(u^2 + v^2)").unwrap();
    assert!(dr.generator().unwrap().proportional(&expected));
}

#[test]
fn kac_palyutkin_rife_verdicts() {
    let p = load("e42-kacpalyutkin", 10);
    let hr = hopf_rife(p.hopf(), &p.integral, &p.chars, &p.character_idempotents());
    assert!(hr);
    let rad = radical_ideal(&p.action, &p.integral);
    let rep = rife_action_check(p.alg(), hr, &jacobian_of(&p), &rad.slices);
    assert!(!rep.j_normal);
    assert!(!rep.action_rife());
    assert!(rep.radical_in_aj);
}

#[test]
fn kac_palyutkin_radical_from_constraint_systems() {
    let p = load("e42-kacpalyutkin", 10);
    let h = p.hopf();
    let f3 = h_elem(h, &[("e", 1, 4), ("x", -1, 4), ("y", 1, 4), ("xy", -1, 4)]);
    let f4 = h_elem(h, &[("e", 1, 4), ("x", 1, 4), ("y", -1, 4), ("xy", -1, 4)]);
    let z = SparseVec::unit(h.index_of("z").unwrap());
    let m12 = h.mul(&f3, &z);
    let m21 = h.mul(&f4, &z);
    // Oracle relations among the matrix units of EH.
    assert_eq!(h.mul(&m12, &m21), f3);
    assert_eq!(h.mul(&m21, &m12), f4);
    assert!(h.mul(&m12, &m12).is_zero());
    let l = paired_left_ideal(
        &p.action,
        &[(f3.clone(), m21.clone()), (m12.clone(), f4.clone())],
    );
    let l2 = paired_left_ideal(&p.action, &[(f4, m12), (m21, f3)]);
    let alg = p.alg();
    let aj = alg.ideal_slices(&[jacobian_of(&p)], Side::Left);
    let rad = radical_ideal(&p.action, &p.integral);
    assert_eq!(aj.intersect(&l).intersect(&l2), rad.slices);
}

#[test]
fn dual_d8_radical_is_generated_by_j() {
    let p = load("e22-dualD8", 9);
    let alg = p.alg();
    let rad = radical_ideal(&p.action, &p.integral);
    let zxy = alg.parse("z*x*y").unwrap();
    assert_eq!(rad.slices, alg.ideal_slices(&[zxy], Side::TwoSided));
    let table = components(&p.action, &p.chars);
    assert_eq!(radical_shortcut(&p.action, &table).unwrap(), rad.slices);
    let r = fixed_ring(&p.action, &p.integral, &table);
    let dr = dis_radical(alg, &rad.slices, &r.slices);
    assert!(dr
        .generator()
        .unwrap()
        .proportional(&alg.parse("x^2*y^2*z^2").unwrap()));
    let hr = hopf_rife(p.hopf(), &p.integral, &p.chars, &p.character_idempotents());
    assert!(rife_action_check(alg, hr, &jacobian_of(&p), &rad.slices).action_rife());
}

#[test]
fn down_up_radical_is_strictly_inside_u_squared() {
    let p = load("e23-downup-dualD8", 10);
    let alg = p.alg();
    let rad = radical_ideal(&p.action, &p.integral);
    let u2 = alg.ideal_slices(&[alg.parse("u^2").unwrap()], Side::TwoSided);
    assert!(rad.slices.is_subspace_of(&u2));
    let differing: Vec<u32> = (2..=10)
        .filter(|&d| rad.slices.slice(d) != u2.slice(d))
        .collect();
    assert!(!differing.is_empty());
    for d in differing {
        assert!(rad.slices.slice(d).dim() < u2.slice(d).dim());
    }
}

#[test]
fn shortcut_matches_general_computation_on_dual_group_presets() {
    for name in ["trivial", "e22-dualD8", "e23-downup-dualD8"] {
        let p = load(name, 8);
        let table = components(&p.action, &p.chars);
        let rad = radical_ideal(&p.action, &p.integral);
        assert_eq!(
            radical_shortcut(&p.action, &table).unwrap(),
            rad.slices,
            "{name}"
        );
    }
}

#[test]
fn radical_is_two_sided_ideal() {
    for name in presets::CATALOGUE {
        let p = load(name, 7);
        let rad = radical_ideal(&p.action, &p.integral);
        assert_eq!(
            p.alg().ideal_closure(&rad.slices, Side::TwoSided),
            rad.slices,
            "{name}"
        );
    }
}

#[test]
fn trivial_action_has_whole_radical() {
    let p = load("trivial", 6);
    let alg = p.alg();
    let rad = radical_ideal(&p.action, &p.integral);
    assert_eq!(rad.slices, alg.full_subspace(false));
    assert_eq!(
        principal_radical(alg, &rad.slices),
        PrincipalRadical::Principal(Elem::one())
    );
}

#[test]
fn non_principal_ideal_is_undetermined() {
    let p = load("trivial", 6);
    let alg = p.alg();
    let u = alg.ideal_slices(&[alg.parse("u").unwrap()], Side::TwoSided);
    let v2 = alg.ideal_slices(&[alg.parse("v^2").unwrap()], Side::TwoSided);
    let sum: GradedSubspace = u.sum(&v2);
    assert!(matches!(
        principal_radical(alg, &sum),
        PrincipalRadical::Undetermined {
            lowest_degree: Some(1),
            lowest_dim: 1
        }
    ));
    let square = alg.ideal_closure(&alg.full_subspace(true), Side::TwoSided);
    let deg2: GradedSubspace = GradedSubspace {
        slices: square
            .slices
            .iter()
            .enumerate()
            .map(|(d, s)| {
                if d < 2 {
                    ncreflect_core::linalg::Subspace::new(s.ambient())
                } else {
                    s.clone()
                }
            })
            .collect(),
    };
    assert!(matches!(
        principal_radical(alg, &deg2),
        PrincipalRadical::Undetermined {
            lowest_degree: Some(2),
            lowest_dim: 3
        }
    ));
}
