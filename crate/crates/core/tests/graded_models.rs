use ncreflect_core::ncalg::{brute_force_hilbert, Elem, GradedAlgebra, Presentation};
use ncreflect_core::Scalar;
use proptest::prelude::*;

fn qplane() -> Presentation {
    Presentation::parse(&[("u", 1), ("v", 1)], &["v*u - i*u*v"]).unwrap()
}

fn three_generator() -> Presentation {
    Presentation::parse(
        &[("x", 1), ("y", 1), ("z", 1)],
        &["z*x + x*z", "y*x - z*y", "y*z - x*y"],
    )
    .unwrap()
}

fn down_up() -> Presentation {
    Presentation::parse(&[("u", 1), ("d", 1)], &["u*u*d - d*u*u", "u*d*d - d*d*u"]).unwrap()
}

#[test]
fn quantum_plane_matches_oracle() {
    let oracle = brute_force_hilbert(&qplane(), 6);
    assert_eq!(oracle, (1..=7).collect::<Vec<_>>());
    assert_eq!(GradedAlgebra::build(qplane(), 6).unwrap().hilbert(), oracle);
}

#[test]
fn three_generator_matches_oracle() {
    let oracle = brute_force_hilbert(&three_generator(), 6);
    let expected: Vec<usize> = (0..=6).map(|d| (d + 1) * (d + 2) / 2).collect();
    assert_eq!(oracle, expected);
    assert_eq!(
        GradedAlgebra::build(three_generator(), 6)
            .unwrap()
            .hilbert(),
        oracle
    );
}

#[test]
fn down_up_matches_oracle() {
    let oracle = brute_force_hilbert(&down_up(), 8);
    assert_eq!(oracle, vec![1, 2, 4, 6, 9, 12, 16, 20, 25]);
    assert_eq!(
        GradedAlgebra::build(down_up(), 8).unwrap().hilbert(),
        oracle
    );
}

#[test]
fn mixed_degree_generators() {
    let p = Presentation::parse(&[("a", 1), ("b", 2)], &["b*a - a*b"]).unwrap();
    let oracle = brute_force_hilbert(&p, 7);
    assert_eq!(oracle, vec![1, 1, 2, 2, 3, 3, 4, 4]);
    assert_eq!(GradedAlgebra::build(p, 7).unwrap().hilbert(), oracle);
}

#[test]
fn hilbert_invariant_under_relation_edits() {
    let p = three_generator();
    let mut rels = p.relations.clone();
    rels.reverse();
    rels[0] = rels[0].scale(&Scalar::from_ratio(-3, 7));
    let q = Presentation::new(p.names.clone(), p.degrees.clone(), rels).unwrap();
    assert_eq!(
        GradedAlgebra::build(p, 7).unwrap().hilbert(),
        GradedAlgebra::build(q, 7).unwrap().hilbert()
    );
}

fn random_elem(a: &GradedAlgebra, d: u32, coeffs: &[i64]) -> Elem {
    let mut e = Elem::zero(d);
    for (k, c) in coeffs.iter().take(a.dim(d)).enumerate() {
        e = e.add(&a.basis_elem(d, k).scale(&Scalar::from_int(*c)));
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn associativity(d1 in 0u32..3, d2 in 0u32..3, d3 in 0u32..3,
                     c1 in prop::collection::vec(-2i64..=2, 10),
                     c2 in prop::collection::vec(-2i64..=2, 10),
                     c3 in prop::collection::vec(-2i64..=2, 10)) {
        for pres in [qplane(), three_generator(), down_up()] {
            let a = GradedAlgebra::build(pres, 8).unwrap();
            let (x, y, z) = (random_elem(&a, d1, &c1), random_elem(&a, d2, &c2), random_elem(&a, d3, &c3));
            let left = a.mul(&a.mul(&x, &y).unwrap(), &z).unwrap();
            let right = a.mul(&x, &a.mul(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
