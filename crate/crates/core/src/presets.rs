//! Built-in catalogue of worked examples, each expressed as an [`InputSpec`].

use std::collections::BTreeMap;

use num_integer::Integer;
use thiserror::Error;

use crate::input::{
    ActionSpec, AlgebraSpec, CharacterSpec, FieldSpec, GeneratorSpec, GroupGeneratorSpec,
    IdempotentSpec, InputSpec, OptionsSpec, TableSpec,
};
use crate::poly::parse_poly;
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresetError {
    #[error("unknown preset `{0}`")]
    Unknown(String),
    #[error("bad parameters for `{name}`: {message}")]
    Parameters { name: String, message: String },
}

/// Catalogue entries with their default parameters.
pub const CATALOGUE: &[&str] = &[
    "trivial",
    "e22-dualD8",
    "e23-downup-dualD8",
    "l41-cyclic-n-m(z3,2,3)",
    "l41-mystic(1,2)",
    "l41-mystic(2,4)",
    "e42-kacpalyutkin",
];

pub fn list() -> Vec<&'static str> {
    CATALOGUE.to_vec()
}

/// File-name friendly identifier of a catalogue entry.
pub fn slug(name: &str) -> String {
    let mut out = String::new();
    for ch in name.chars() {
        match ch {
            '(' | ',' => out.push('-'),
            ')' | ' ' => {}
            '=' => out.push('_'),
            c => out.push(c),
        }
    }
    out
}

fn bad(name: &str, message: impl Into<String>) -> PresetError {
    PresetError::Parameters {
        name: name.into(),
        message: message.into(),
    }
}

/// Load a preset by name. Parameterized families accept `family(p1,p2,...)`;
/// the cyclic family also accepts `q=`, `n=`, `m=` keys.
pub fn load(name: &str) -> Result<InputSpec, PresetError> {
    let name = name.trim();
    let (base, args) = match name.find('(') {
        Some(k) => {
            let inner = name[k + 1..]
                .strip_suffix(')')
                .ok_or_else(|| bad(name, "missing `)`"))?;
            (
                &name[..k],
                inner
                    .split(',')
                    .map(|s| s.trim().to_string())
                    .collect::<Vec<_>>(),
            )
        }
        None => (name, Vec::new()),
    };
    let no_args = |spec: InputSpec| {
        if args.is_empty() {
            Ok(spec)
        } else {
            Err(bad(name, "takes no parameters"))
        }
    };
    match base {
        "trivial" => no_args(trivial()),
        "e22-dualD8" => no_args(e22_dual_d8()),
        "e23-downup-dualD8" => no_args(e23_downup_dual_d8()),
        "e42-kacpalyutkin" => no_args(e42_kac_palyutkin()),
        "l41-cyclic-n-m" | "l41-cyclic" => {
            let mut vals: [Option<String>; 3] = [None, None, None];
            for (k, a) in args.iter().enumerate() {
                let (slot, v) = match a.split_once('=') {
                    Some(("q", v)) => (0, v),
                    Some(("n", v)) => (1, v),
                    Some(("m", v)) => (2, v),
                    Some((key, _)) => return Err(bad(name, format!("unknown parameter `{key}`"))),
                    None if k < 3 => (k, a.as_str()),
                    None => return Err(bad(name, "expected three parameters q, n, m")),
                };
                vals[slot] = Some(v.trim().to_string());
            }
            let [q, n, m] = vals;
            let (q, n, m) = match (q, n, m) {
                (Some(q), Some(n), Some(m)) => (q, n, m),
                _ => return Err(bad(name, "expected three parameters q, n, m")),
            };
            let n: u32 = n
                .parse()
                .map_err(|_| bad(name, "n must be a positive integer"))?;
            let m: u32 = m
                .parse()
                .map_err(|_| bad(name, "m must be a positive integer"))?;
            let q = parse_poly(&q, &[]).map_err(|e| bad(name, format!("q: {e}")))?;
            let q = match q.terms().next() {
                Some((w, c)) if q.len() == 1 && w.is_empty() => c.clone(),
                _ => return Err(bad(name, "q must be a nonzero scalar")),
            };
            l41_cyclic(&q, n, m).map_err(|e| bad(name, e))
        }
        "l41-mystic" => {
            if args.len() != 2 {
                return Err(bad(name, "expected parameters (alpha,beta)"));
            }
            let alpha: u32 = args[0]
                .parse()
                .map_err(|_| bad(name, "alpha must be a positive integer"))?;
            let beta: u32 = args[1]
                .parse()
                .map_err(|_| bad(name, "beta must be a positive integer"))?;
            l41_mystic(alpha, beta).map_err(|e| bad(name, e))
        }
        _ => Err(PresetError::Unknown(name.to_string())),
    }
}

fn gens(list: &[(&str, u32)]) -> Vec<GeneratorSpec> {
    list.iter()
        .map(|&(n, d)| GeneratorSpec {
            name: n.into(),
            degree: d,
        })
        .collect()
}

fn strings(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn lit(s: &Scalar) -> String {
    s.to_string()
}

fn matrix_strings(m: &[[Scalar; 2]; 2]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(lit).collect()).collect()
}

/// The quantum plane `k_i[u,v]` with the trivial Hopf algebra acting.
pub fn trivial() -> InputSpec {
    InputSpec {
        field: FieldSpec { conductor: 4 },
        algebra: AlgebraSpec {
            generators: gens(&[("u", 1), ("v", 1)]),
            relations: strings(&["v*u - i*u*v"]),
        },
        action: ActionSpec::DualGroup {
            elements: strings(&["e"]),
            table: vec![strings(&["e"])],
            degrees: BTreeMap::from([("u".into(), "e".into()), ("v".into(), "e".into())]),
        },
        options: OptionsSpec::default(),
    }
}

/// The dihedral group of order 8 as `r^b p^a` with `p` the rotation.
fn d8() -> (Vec<String>, Vec<Vec<String>>) {
    let name = |b: u32, a: u32| -> String {
        match (b, a) {
            (0, 0) => "e".into(),
            (0, 1) => "p".into(),
            (0, a) => format!("p{a}"),
            (1, 0) => "r".into(),
            (1, 1) => "rp".into(),
            (_, a) => format!("rp{a}"),
        }
    };
    let elems: Vec<(u32, u32)> = (0..2).flat_map(|b| (0..4).map(move |a| (b, a))).collect();
    let names = elems.iter().map(|&(b, a)| name(b, a)).collect();
    let table = elems
        .iter()
        .map(|&(b, a)| {
            elems
                .iter()
                .map(|&(d, c)| {
                    let a2 = if d == 0 { a + c } else { 4 - a + c };
                    name((b + d) % 2, a2 % 4)
                })
                .collect()
        })
        .collect();
    (names, table)
}

/// Three generators graded by reflections of the dihedral group of order 8.
pub fn e22_dual_d8() -> InputSpec {
    let (elements, table) = d8();
    InputSpec {
        field: FieldSpec { conductor: 4 },
        algebra: AlgebraSpec {
            generators: gens(&[("x", 1), ("y", 1), ("z", 1)]),
            relations: strings(&["z*x + x*z", "y*x - z*y", "y*z - x*y"]),
        },
        action: ActionSpec::DualGroup {
            elements,
            table,
            degrees: BTreeMap::from([
                ("x".into(), "r".into()),
                ("y".into(), "rp".into()),
                ("z".into(), "rp2".into()),
            ]),
        },
        options: OptionsSpec::default(),
    }
}

/// The down-up algebra with relations `u^2 d = d u^2`, `u d^2 = d^2 u`, graded by the dihedral group.
pub fn e23_downup_dual_d8() -> InputSpec {
    let (elements, table) = d8();
    InputSpec {
        field: FieldSpec { conductor: 4 },
        algebra: AlgebraSpec {
            generators: gens(&[("u", 1), ("d", 1)]),
            relations: strings(&["u*u*d - d*u*u", "u*d*d - d*d*u"]),
        },
        action: ActionSpec::DualGroup {
            elements,
            table,
            degrees: BTreeMap::from([("u".into(), "p".into()), ("d".into(), "r".into())]),
        },
        options: OptionsSpec::default(),
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// `C_n × C_m` acting diagonally on `k_q[x,y]`.
pub fn l41_cyclic(q: &Scalar, n: u32, m: u32) -> Result<InputSpec, String> {
    if n == 0 || m == 0 {
        return Err("n and m must be positive".into());
    }
    if q.is_zero() {
        return Err("q must be nonzero".into());
    }
    let q = q.simplify();
    let conductor = lcm(lcm(lcm(4, n), m), q.conductor());
    let zero = Scalar::zero();
    let one = Scalar::one();
    let mut generators = Vec::new();
    if n > 1 {
        generators.push(GroupGeneratorSpec {
            name: "s".into(),
            matrix: matrix_strings(&[
                [Scalar::root_of_unity(n, 1), zero.clone()],
                [zero.clone(), one.clone()],
            ]),
        });
    }
    if m > 1 || generators.is_empty() {
        generators.push(GroupGeneratorSpec {
            name: "t".into(),
            matrix: matrix_strings(&[
                [one.clone(), zero.clone()],
                [zero, Scalar::root_of_unity(m, 1)],
            ]),
        });
    }
    Ok(InputSpec {
        field: FieldSpec { conductor },
        algebra: AlgebraSpec {
            generators: gens(&[("x", 1), ("y", 1)]),
            relations: vec![format!("y*x - ({})*x*y", lit(&q))],
        },
        action: ActionSpec::Group { generators },
        options: OptionsSpec::default(),
    })
}

/// The group `M(2, alpha, beta)` acting on `k_{-1}[x,y]` by `σ_a = diag(a,1)`
/// and the anti-diagonal maps `τ_λ: x ↦ λy, y ↦ -λ⁻¹x` for `λ = 1, ζ_β`.
pub fn l41_mystic(alpha: u32, beta: u32) -> Result<InputSpec, String> {
    if alpha == 0 || beta == 0 {
        return Err("alpha and beta must be positive".into());
    }
    if !beta.is_multiple_of(2) || !beta.is_multiple_of(alpha) {
        return Err("beta must be divisible by 2 and by alpha".into());
    }
    let conductor = lcm(lcm(4, alpha), beta);
    let zero = Scalar::zero();
    let one = Scalar::one();
    let tau = |lambda: Scalar| -> [[Scalar; 2]; 2] {
        let inv = -lambda.inv().expect("root of unity");
        [[zero.clone(), inv], [lambda, zero.clone()]]
    };
    let mut generators = Vec::new();
    if alpha > 1 {
        generators.push(GroupGeneratorSpec {
            name: "s".into(),
            matrix: matrix_strings(&[
                [Scalar::root_of_unity(alpha, 1), zero.clone()],
                [zero.clone(), one.clone()],
            ]),
        });
    }
    generators.push(GroupGeneratorSpec {
        name: "t".into(),
        matrix: matrix_strings(&tau(one.clone())),
    });
    generators.push(GroupGeneratorSpec {
        name: "w".into(),
        matrix: matrix_strings(&tau(Scalar::root_of_unity(beta, 1))),
    });
    Ok(InputSpec {
        field: FieldSpec { conductor },
        algebra: AlgebraSpec {
            generators: gens(&[("x", 1), ("y", 1)]),
            relations: strings(&["y*x + x*y"]),
        },
        action: ActionSpec::Group { generators },
        options: OptionsSpec::default(),
    })
}

/// Basis labels of the eight-dimensional Kac–Palyutkin algebra, `x^a y^b z^c` in order.
pub const H8_LABELS: [&str; 8] = ["e", "x", "y", "xy", "z", "xz", "yz", "xyz"];

fn h8_index(a: usize, b: usize, c: usize) -> usize {
    4 * c + 2 * b + a
}

/// Product of two basis elements as a dense coefficient vector.
fn h8_mul_basis(i: usize, j: usize) -> [Scalar; 8] {
    let (a, b, c) = (i % 2, (i / 2) % 2, i / 4);
    let (a2, b2, c2) = (j % 2, (j / 2) % 2, j / 4);
    let mut out: [Scalar; 8] = Default::default();
    // z x^a2 y^b2 = x^b2 y^a2 z
    let (p, q) = if c == 1 {
        ((a + b2) % 2, (b + a2) % 2)
    } else {
        ((a + a2) % 2, (b + b2) % 2)
    };
    if c + c2 < 2 {
        out[h8_index(p, q, c + c2)] = Scalar::one();
    } else {
        // z^2 = (1 + x + y - xy)/2
        let half = Scalar::from_ratio(1, 2);
        for (da, db, s) in [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, -1)] {
            out[h8_index((p + da) % 2, (q + db) % 2, 0)] += &(&half * &Scalar::from_int(s));
        }
    }
    out
}

fn h8_mul(x: &[Scalar; 8], y: &[Scalar; 8]) -> [Scalar; 8] {
    let mut out: [Scalar; 8] = Default::default();
    for i in 0..8 {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..8 {
            if y[j].is_zero() {
                continue;
            }
            let c = &x[i] * &y[j];
            for (k, v) in h8_mul_basis(i, j).iter().enumerate() {
                if !v.is_zero() {
                    out[k] += &(&c * v);
                }
            }
        }
    }
    out
}

type Tensor = BTreeMap<(usize, usize), Scalar>;

fn tensor_mul(x: &Tensor, y: &Tensor) -> Tensor {
    let mut out = Tensor::new();
    for ((a, b), c) in x {
        for ((a2, b2), c2) in y {
            let l = h8_mul_basis(*a, *a2);
            let r = h8_mul_basis(*b, *b2);
            let c = c * c2;
            for (i, li) in l.iter().enumerate().filter(|p| !p.1.is_zero()) {
                for (j, rj) in r.iter().enumerate().filter(|p| !p.1.is_zero()) {
                    *out.entry((i, j)).or_insert_with(Scalar::zero) += &(&c * &(li * rj));
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Structure constants of the Kac–Palyutkin algebra as a table spec (without matrices).
pub fn h8_table() -> TableSpec {
    let labels: Vec<String> = H8_LABELS.iter().map(|s| s.to_string()).collect();
    let mut mult = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            for (k, c) in h8_mul_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    mult.push(vec![
                        labels[i].clone(),
                        labels[j].clone(),
                        labels[k].clone(),
                        lit(c),
                    ]);
                }
            }
        }
    }
    let one = Scalar::one();
    let grouplike = |k: usize| Tensor::from([((k, k), one.clone())]);
    let half = Scalar::from_ratio(1, 2);
    let x = h8_index(1, 0, 0);
    let y = h8_index(0, 1, 0);
    let z = h8_index(0, 0, 1);
    let e = 0;
    // Δ(z) = ½(1⊗1 + 1⊗x + y⊗1 − y⊗x)(z⊗z)
    let delta_z = {
        let mut pre = Tensor::new();
        pre.insert((e, e), half.clone());
        pre.insert((e, x), half.clone());
        pre.insert((y, e), half.clone());
        pre.insert((y, x), -half.clone());
        tensor_mul(&pre, &grouplike(z))
    };
    let mut comult = Vec::new();
    for k in 0..8 {
        let (a, b, c) = (k % 2, (k / 2) % 2, k / 4);
        let mut t = grouplike(e);
        if a == 1 {
            t = tensor_mul(&t, &grouplike(x));
        }
        if b == 1 {
            t = tensor_mul(&t, &grouplike(y));
        }
        if c == 1 {
            t = tensor_mul(&t, &delta_z);
        }
        for ((i, j), v) in t {
            comult.push(vec![
                labels[k].clone(),
                labels[i].clone(),
                labels[j].clone(),
                lit(&v),
            ]);
        }
    }
    // S(x^a y^b z^c) = z^c y^b x^a
    let mut antipode = Vec::new();
    for k in 0..8 {
        let (a, b, c) = (k % 2, (k / 2) % 2, k / 4);
        let unit = |i: usize| {
            let mut v: [Scalar; 8] = Default::default();
            v[i] = Scalar::one();
            v
        };
        let s = h8_mul(
            &h8_mul(&unit(h8_index(0, 0, c)), &unit(h8_index(0, b, 0))),
            &unit(h8_index(a, 0, 0)),
        );
        for (i, v) in s.iter().enumerate() {
            if !v.is_zero() {
                antipode.push(vec![labels[k].clone(), labels[i].clone(), lit(v)]);
            }
        }
    }
    let char_values = |vx: Scalar, vy: Scalar, vz: Scalar| -> BTreeMap<String, String> {
        (0..8)
            .map(|k| {
                let (a, b, c) = (k % 2, (k / 2) % 2, k / 4);
                let v = &(&vx.pow(a as i64) * &vy.pow(b as i64)) * &vz.pow(c as i64);
                (labels[k].clone(), lit(&v))
            })
            .collect()
    };
    let i = Scalar::i();
    let m1 = Scalar::from_int(-1);
    let characters = vec![
        CharacterSpec {
            name: "g".into(),
            values: char_values(one.clone(), one.clone(), m1.clone()),
        },
        CharacterSpec {
            name: "g'".into(),
            values: char_values(m1.clone(), m1.clone(), -i.clone()),
        },
        CharacterSpec {
            name: "gg'".into(),
            values: char_values(m1.clone(), m1, i),
        },
    ];
    let f1 = "(e + x + y + xy)";
    let f2 = "(e - x - y + xy)";
    let idempotents = vec![
        IdempotentSpec {
            name: "p1".into(),
            element: format!("1/8*{f1} + 1/8*z*{f1}"),
            character: Some("eps".into()),
        },
        IdempotentSpec {
            name: "pg".into(),
            element: format!("1/8*{f1} - 1/8*z*{f1}"),
            character: Some("g".into()),
        },
        IdempotentSpec {
            name: "pg'".into(),
            element: format!("1/8*{f2} + 1/8*i*z*{f2}"),
            character: Some("g'".into()),
        },
        IdempotentSpec {
            name: "pgg'".into(),
            element: format!("1/8*{f2} - 1/8*i*z*{f2}"),
            character: Some("gg'".into()),
        },
        IdempotentSpec {
            name: "E".into(),
            element: "1/2*e - 1/2*xy".into(),
            character: None,
        },
    ];
    TableSpec {
        basis: labels,
        unit: vec![vec!["e".into(), "1".into()]],
        mult,
        comult,
        counit: H8_LABELS
            .iter()
            .map(|l| vec![l.to_string(), "1".into()])
            .collect(),
        antipode,
        matrices: BTreeMap::new(),
        characters,
        idempotents,
        integral: Some("1/8*(e + x + y + xy + z + xz + yz + xyz)".into()),
    }
}

/// Matrices of the basis `x^a y^b z^c` on `(u, v)`: `x = diag(-1,1)`, `y = diag(1,-1)`, `z` swaps.
fn h8_matrices() -> BTreeMap<String, Vec<Vec<String>>> {
    let mul = |p: [[i64; 2]; 2], q: [[i64; 2]; 2]| -> [[i64; 2]; 2] {
        let mut r = [[0; 2]; 2];
        for a in 0..2 {
            for b in 0..2 {
                r[a][b] = (0..2).map(|k| p[a][k] * q[k][b]).sum();
            }
        }
        r
    };
    let id = [[1, 0], [0, 1]];
    let mx = [[-1, 0], [0, 1]];
    let my = [[1, 0], [0, -1]];
    let mz = [[0, 1], [1, 0]];
    (0..8)
        .map(|k| {
            let (a, b, c) = (k % 2, (k / 2) % 2, k / 4);
            let mut m = id;
            if a == 1 {
                m = mul(m, mx);
            }
            if b == 1 {
                m = mul(m, my);
            }
            if c == 1 {
                m = mul(m, mz);
            }
            (
                H8_LABELS[k].to_string(),
                m.iter()
                    .map(|r| r.iter().map(|v| v.to_string()).collect())
                    .collect(),
            )
        })
        .collect()
}

/// The Kac–Palyutkin algebra acting on `k_i[u,v]`.
pub fn e42_kac_palyutkin() -> InputSpec {
    let mut table = h8_table();
    table.matrices = h8_matrices();
    InputSpec {
        field: FieldSpec { conductor: 8 },
        algebra: AlgebraSpec {
            generators: gens(&[("u", 1), ("v", 1)]),
            relations: strings(&["v*u - i*u*v"]),
        },
        action: ActionSpec::Table(table),
        options: OptionsSpec {
            nakayama: Some(BTreeMap::from([
                ("u".into(), "-i*u".into()),
                ("v".into(), "i*v".into()),
            ])),
            ..OptionsSpec::default()
        },
    }
}
