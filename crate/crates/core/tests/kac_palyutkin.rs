use ncreflect_core::hopf::{HopfData, WindingSide};
use ncreflect_core::input::{ActionSpec, LoadError, Problem};
use ncreflect_core::linalg::{Matrix, SparseVec};
use ncreflect_core::presets;
use ncreflect_core::Scalar;

fn problem() -> Problem {
    presets::e42_kac_palyutkin().load(Some(6)).unwrap()
}

fn label(h: &HopfData, s: &str) -> SparseVec {
    SparseVec::unit(h.index_of(s).unwrap())
}

#[test]
fn structure_constants_pass_every_axiom() {
    let p = problem();
    let report = p.hopf().verify();
    assert!(report.passed(), "{:?}", report.failures());
    assert!(report.checks.len() >= 6);
}

#[test]
fn integral_is_the_average() {
    let p = problem();
    let expected = SparseVec::from_entries((0..8).map(|k| (k, Scalar::from_ratio(1, 8))).collect());
    assert_eq!(p.integral, expected);
    assert!(p.hopf().is_central(&p.integral));
}

#[test]
fn characters_form_klein_four() {
    let p = problem();
    assert_eq!(p.chars.len(), 4);
    let g = &p.chars.group;
    assert!(g.is_abelian());
    for a in 0..4 {
        assert_eq!(
            g.mul(a, a),
            g.identity,
            "every element squares to the identity"
        );
    }
    let h = p.hopf();
    let z = h.index_of("z").unwrap();
    let x = h.index_of("x").unwrap();
    let values: Vec<(String, Scalar, Scalar)> = p
        .chars
        .chars
        .iter()
        .map(|c| (c.name.clone(), c.values[x].clone(), c.values[z].clone()))
        .collect();
    let i = Scalar::i();
    assert!(values.contains(&("g".into(), Scalar::one(), Scalar::from_int(-1))));
    assert!(values.contains(&("g'".into(), Scalar::from_int(-1), -i.clone())));
    assert!(values.contains(&("gg'".into(), Scalar::from_int(-1), i)));
}

#[test]
fn character_values_match_idempotent_eigenvalues() {
    let p = problem();
    let h = p.hopf();
    for (name, e, ch) in &p.idempotents {
        let Some(g) = ch else { continue };
        for k in 0..8 {
            let lhs = h.mul(&label(h, &h.labels[k]), e);
            assert_eq!(
                lhs,
                e.scale(&p.chars.chars[*g].values[k]),
                "{name} on {}",
                h.labels[k]
            );
        }
    }
}

#[test]
fn windings_invert_each_other() {
    let p = problem();
    let h = p.hopf();
    for c in &p.chars.chars {
        let w = h.winding(&c.values, WindingSide::Right).unwrap();
        let inv = h
            .winding(&h.compose_antipode(&c.values), WindingSide::Right)
            .unwrap();
        assert_eq!(w.mul(&inv), Matrix::identity(8), "{}", c.name);
    }
}

#[test]
fn corrupted_coproduct_is_rejected_with_witness() {
    let mut spec = presets::e42_kac_palyutkin();
    let ActionSpec::Table(t) = &mut spec.action else {
        unreachable!()
    };
    for row in t.comult.iter_mut().filter(|r| r[0] == "z") {
        row[3] = if row[3].starts_with('-') {
            "-1".into()
        } else {
            "1".into()
        };
    }
    match spec.load(Some(4)) {
        Err(LoadError::Verification(msg)) => assert!(msg.contains("fails at"), "{msg}"),
        other => panic!(
            "expected a verification failure, got {:?}",
            other.map(|_| ())
        ),
    }
}

#[test]
fn action_on_small_degrees() {
    let p = problem();
    let alg = p.alg();
    let z = label(p.hopf(), "z");
    let uv = alg.parse("u*v").unwrap();
    assert_eq!(p.action.act(&z, &uv), uv.scale(&-Scalar::i()));
    let u2 = alg.parse("u^2").unwrap();
    assert_eq!(p.action.act(&z, &u2), alg.parse("v^2").unwrap());
    let one = p.hopf().unit.clone();
    let w = alg.parse("u^3 + 2*u*v^2").unwrap();
    assert_eq!(p.action.act(&one, &w), w);
}

#[test]
fn relation_is_stable() {
    let p = problem();
    let report = p.action.check_module_algebra();
    assert!(report.passed(), "{:?}", report.failures());
}
