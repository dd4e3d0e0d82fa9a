//! The analysis pipeline behind `analyze` and `preset run`.

use ncreflect_core::divisors::{self, DivisorSide, Mode};
use ncreflect_core::hopf::ActionKind;
use ncreflect_core::input::{InputSpec, LoadError, Problem};
use ncreflect_core::invariants::{self as inv, Cocycle, InvariantError};
use ncreflect_core::ncalg::{Elem, GradedAlgebra};
use ncreflect_core::poly::{format_term, format_word, word_degree};
use ncreflect_core::series;
use ncreflect_core::smash::{self, PrincipalRadical};
use ncreflect_core::Scalar;

use crate::report::*;

/// Failure before a report can be produced.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Load(#[from] LoadError),
}

impl AnalyzeError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AnalyzeError::Load(LoadError::Schema { .. }) => 2,
            AnalyzeError::Load(LoadError::Verification(_)) => 3,
        }
    }
}

/// Polynomial normalized to leading coefficient 1, terms in graded-lex order
/// with the first generator largest.
pub fn poly(alg: &GradedAlgebra, e: &Elem) -> String {
    let p = alg.to_poly(e);
    let mut terms: Vec<(&Vec<u8>, &Scalar)> = p.terms().collect();
    terms.sort_by(|a, b| {
        word_degree(b.0, alg.degrees())
            .cmp(&word_degree(a.0, alg.degrees()))
            .then_with(|| a.0.cmp(b.0))
    });
    let Some(lead) = terms.first().and_then(|(_, c)| c.inv()) else {
        return "0".into();
    };
    let mut out = String::new();
    for (k, (w, c)) in terms.iter().enumerate() {
        let body = (!w.is_empty()).then(|| format_word(w, alg.names()));
        out.push_str(&format_term(&(*c * &lead), body, k == 0));
    }
    out
}

/// Degree-one divisor mode: the certificate when `A` has two generators of degree one.
pub fn auto_mode(alg: &GradedAlgebra) -> Mode {
    if alg.ngens() == 2 && alg.degrees().iter().all(|&d| d == 1) {
        Mode::Certificate
    } else {
        Mode::Candidates
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &str, kind: CheckKind, status: Status, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.into(),
            kind,
            status,
            detail: detail.into(),
        });
    }

    fn flag(&mut self, name: &str, kind: CheckKind, ok: bool) {
        self.push(name, kind, Status::from_bool(ok), "");
    }

    fn opt(&mut self, name: &str, kind: CheckKind, ok: Option<bool>, skip_reason: &str) {
        match ok {
            Some(b) => self.flag(name, kind, b),
            None => self.push(name, kind, Status::Skip, skip_reason),
        }
    }
}

const BEYOND: &str = "beyond the truncation degree";

pub fn analyze(
    spec: &InputSpec,
    input: &str,
    max_degree: Option<u32>,
) -> Result<Report, AnalyzeError> {
    let p = spec.load(max_degree)?;
    Ok(analyze_problem(&p, input))
}

pub fn analyze_problem(p: &Problem, input: &str) -> Report {
    use CheckKind::*;
    let alg = p.alg();
    let dmax = alg.max_degree();
    let chars = &p.chars;
    let dual = matches!(p.action.kind, ActionKind::DualGroup { .. });
    let mut checks = Checks(Vec::new());
    checks.flag("hopf-axioms", Verification, true);
    checks.flag("module-algebra", Verification, true);

    let hopf_rife = smash::hopf_rife(p.hopf(), &p.integral, chars, &p.character_idempotents());
    let verification = crate::report::Verification {
        hopf_dimension: p.hopf().dim(),
        hopf_basis: p.hopf().labels.clone(),
        integral: p.hopf().format_elem(&p.integral),
        characters: chars
            .chars
            .iter()
            .map(|c| CharacterEntry {
                name: c.name.clone(),
                values: c.values.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
        hopf_rife,
    };

    let domain = alg.domain_spot_check();
    match &domain.violation {
        None => checks.flag(
            "domain-spot-check",
            Hypothesis,
            p.assertions.domain != Some(false),
        ),
        Some((x, d)) => checks.push(
            "domain-spot-check",
            Hypothesis,
            Status::Fail,
            format!("left multiplication by {x} is not injective on degree {d}"),
        ),
    }

    let table = inv::components(&p.action, chars);
    let r = inv::fixed_ring(&p.action, &p.integral, &table);
    let regular = r.polynomial_certificate && p.assertions.as_regular_fixed_ring != Some(false);
    checks.push(
        "fixed-ring-regular",
        Hypothesis,
        Status::from_bool(regular),
        if r.polynomial_certificate {
            ""
        } else {
            "Hilbert series is not that of a polynomial ring on the generators"
        },
    );
    checks.flag(
        "fixed-ring-integral-image",
        Theorem,
        r.integral_image_agrees,
    );
    checks.flag("components-rank-one", Hypothesis, table.rank_one());
    checks.flag(
        "characters-of-components-form-subgroup",
        Observation,
        table.g0_is_subgroup(chars),
    );
    match inv::check_component_products(alg, chars, &table) {
        Ok(()) => checks.flag("component-products", Theorem, true),
        Err(w) => checks.push("component-products", Theorem, Status::Fail, w),
    }

    let iso = inv::isotypic(&p.action, &table, &r, &p.idempotents);
    checks.flag(
        "idempotent-images-match-components",
        Theorem,
        iso.idempotents_match_components,
    );
    checks.flag(
        "isotypic-dimension-identity",
        Theorem,
        iso.dimension_identity,
    );
    let names = r.generator_names();
    let hilbert = Hilbert {
        algebra: alg.hilbert(),
        algebra_series: series::format(&series::from_dims(&alg.hilbert())),
        fixed_ring: r.slices.dims(),
        fixed_ring_generators: r
            .generators
            .iter()
            .zip(&names)
            .map(|(g, n)| crate::report::Generator {
                name: n.clone(),
                degree: g.deg,
                element: poly(alg, g),
            })
            .collect(),
        polynomial_certificate: r.polynomial_certificate,
        fixed_ring_commutative: r.commutative,
        isotypic: Isotypic {
            a_g: iso.a_g.clone(),
            a_g_complement: iso.a_gc.clone(),
            rank_a_g: iso.rank_a_g,
            rank_a_g_complement: iso.rank_a_gc,
            idempotents: iso
                .idempotents
                .iter()
                .map(|(n, d)| IdempotentImage {
                    name: n.clone(),
                    dims: d.clone(),
                })
                .collect(),
        },
    };
    let components = table
        .components
        .iter()
        .map(|c| ComponentEntry {
            character: chars.name(c.character).to_string(),
            degree: c.degree(),
            generator: c.generator.as_ref().map(|g| poly(alg, g)),
            lowest_dim: c.lowest_dim,
            dims: c.slices.dims(),
            freeness: match (c.is_zero(), c.freeness_gap) {
                (true, _) => "zero".into(),
                (false, None) => format!("verified to degree {dmax}"),
                (false, Some((d, side))) => format!("fails in degree {d} ({side:?} module)"),
            },
        })
        .collect();

    let xi_coeffs = inv::xi_series(alg, &r);
    let xi_deg = series::degree(&xi_coeffs).filter(|&d| d + 1 < xi_coeffs.len());
    let xi = XiSection {
        series: series::format(&xi_coeffs),
        coefficients: xi_coeffs.clone(),
        degree: xi_deg,
    };

    let cov = inv::covariant(alg, &r);
    let mut covariant = CovariantSection {
        left_series: series::format(&cov.left_series),
        right_series: series::format(&cov.right_series),
        algebra_series: series::format(&cov.algebra_series),
        tepid: cov.tepid,
        frobenius: None,
        pairing_nondegenerate: None,
    };
    checks.flag("tepid", Observation, cov.tepid);
    if r.polynomial_certificate {
        checks.flag(
            "covariant-series-equals-xi",
            Theorem,
            cov.left_series == xi_coeffs && cov.right_series == xi_coeffs,
        );
    }

    let hres = inv::hdet(&p.action, chars, &table, &r, p.hdet);
    let mut hdet_section = None;
    let mut jac = None;
    match &hres {
        Ok(h) => {
            checks.flag("hdet-methods-agree", Theorem, true);
            checks.flag("hdet-central", Observation, chars.group.is_central(h.hdet));
            let names_a = alg.names().to_vec();
            hdet_section = Some(HdetSection {
                character: chars.name(h.hdet).into(),
                inverse: chars.name(h.inverse).into(),
                koszul_degree: h.koszul_degree(),
                koszul_top: h.top.as_ref().map(|t| {
                    let (n, _) = t.element.normalized(alg.degrees());
                    n.display(&names_a, alg.degrees()).to_string()
                }),
                methods: h
                    .outcomes
                    .iter()
                    .map(|o| HdetMethodEntry {
                        method: o.method.name().into(),
                        result: o.result.map(|g| chars.name(g).to_string()),
                        note: o.note.clone(),
                    })
                    .collect(),
            });
            match inv::jacobian(alg, chars, &table, &r, h) {
                Ok(j) => jac = Some(j),
                Err(e) => checks.push("jacobian-exists", kind_of(&e), Status::Fail, e.to_string()),
            }
        }
        Err(e) => checks.push(
            "hdet-methods-agree",
            kind_of(e),
            Status::Fail,
            e.to_string(),
        ),
    }

    let mut jacobian = None;
    let mut arrangement = None;
    let mut discriminant = None;
    let mut nakayama = None;
    if let (Ok(h), Some(jc)) = (&hres, &jac) {
        checks.flag("jacobian-exists", Hypothesis, true);
        let steinberg =
            dual.then(|| inv::steinberg_factorization(alg, chars, &table, &jc.j, h.inverse));
        if let Some(f) = &steinberg {
            checks.flag("steinberg-factorization", Theorem, f.is_some());
        }
        jacobian = Some(JacobianSection {
            j: poly(alg, &jc.j),
            scalar_class: UP_TO_SCALAR.into(),
            degree: jc.j.deg,
            character: chars.name(h.inverse).into(),
            steinberg_factorization: steinberg
                .flatten()
                .map(|f| f.iter().map(|&g| chars.name(g).to_string()).collect()),
        });
        arrangement = Some(ArrangementSection {
            a: poly(alg, &jc.a),
            scalar_class: UP_TO_SCALAR.into(),
            degree: jc.a.deg,
            character: chars.name(h.hdet).into(),
            equals_jacobian: jc.j_equals_a(),
            left_divides_jacobian: jc.a_left_divides_j,
            right_divides_jacobian: jc.a_right_divides_j,
        });
        checks.flag("jacobian-eq-arrangement", Observation, jc.j_equals_a());
        checks.flag(
            "arrangement-divides-jacobian",
            Theorem,
            jc.a_left_divides_j && jc.a_right_divides_j,
        );
        checks.opt(
            "discriminant-sides-agree",
            Theorem,
            jc.deltas_proportional,
            BEYOND,
        );
        checks.opt(
            "discriminant-in-fixed-ring",
            Theorem,
            jc.deltas_in_r,
            BEYOND,
        );
        if let Some(d) = xi_deg {
            checks.flag(
                "xi-degree-equals-jacobian-degree",
                Theorem,
                d as u32 == jc.j.deg,
            );
        }
        let transfer = inv::jacobian_transfer(&table, &r, jc, dual);
        checks.flag("jacobian-transfer", Theorem, transfer.agrees);

        let mut all_normal = true;
        let mut beyond = false;
        for g in table.g0() {
            for k in table.g0() {
                match inv::cocycle(alg, chars, &table, g, k) {
                    Some(Cocycle::Found(c)) => {
                        all_normal &= inv::is_normal_in(alg, table.fixed(), &c)
                    }
                    Some(Cocycle::Missing) => all_normal = false,
                    Some(Cocycle::Beyond) => beyond = true,
                    None => {}
                }
            }
        }
        checks.push(
            "cocycles-normal",
            Theorem,
            Status::from_bool(all_normal),
            if beyond {
                "products beyond the truncation degree not checked"
            } else {
                ""
            },
        );

        let fr = inv::frobenius(alg, chars, &table, h, &cov);
        covariant.frobenius = fr.covariant_frobenius;
        covariant.pairing_nondegenerate = Some(fr.nondegenerate);
        checks.flag("frobenius-pairing-nondegenerate", Theorem, fr.nondegenerate);
        checks.flag(
            "frobenius-factorizations",
            Theorem,
            fr.factorizations.iter().all(|(_, ok)| *ok),
        );

        let delta = jc.delta_left.as_ref();
        let in_generators = delta
            .and_then(|d| r.to_cpoly(alg, d))
            .map(|c| c.monic().format(&names));
        let trace = if dual && r.commutative && r.polynomial_certificate {
            inv::trace_discriminant(&p.action, chars, &table, &r, h, jc).ok()
        } else {
            None
        };
        if let Some(t) = &trace {
            let kind = if t.r_central { Theorem } else { Observation };
            checks.flag("trace-discriminant-product-formula", kind, t.proportional);
            if let Some(c) = &t.chain {
                checks.flag("discriminant-radicals-agree", kind, c.radical_equal());
            }
            checks.flag("fixed-ring-central", Observation, t.r_central);
        }
        discriminant = Some(DiscriminantSection {
            delta: delta.map(|d| poly(alg, d)),
            scalar_class: UP_TO_SCALAR.into(),
            in_generators,
            sides_proportional: jc.deltas_proportional,
            in_fixed_ring: jc.deltas_in_r,
            trace: trace.map(|t| TraceSection {
                determinant: t.determinant.monic().format(&names),
                closed_form: t.closed_form.monic().format(&names),
                proportional: t.proportional,
                r_central: t.r_central,
                radical_equal: t.chain.as_ref().map(|c| c.radical_equal()),
            }),
        });

        if let Some(mu) = &p.nakayama {
            match inv::nakayama_checks(&p.action, mu, chars, &r, h, jc) {
                Ok(n) => {
                    checks.flag("nakayama-automorphism", Verification, n.automorphism);
                    match &n.winding_identity {
                        Ok(()) => checks.flag("nakayama-winding-identity", Theorem, true),
                        Err(w) => checks.push(
                            "nakayama-winding-identity",
                            Theorem,
                            Status::Fail,
                            w.clone(),
                        ),
                    }
                    checks.flag("nakayama-preserves-fixed-ring", Theorem, n.preserves_r);
                    checks.flag("nakayama-jacobian", Theorem, n.mu_j_proportional);
                    checks.flag("nakayama-arrangement", Theorem, n.mu_a_proportional);
                    checks.flag("nakayama-fixed-ring-identity", Observation, n.mu_r_identity);
                    checks.opt(
                        "nakayama-index",
                        Theorem,
                        n.index_holds(),
                        "degrees unknown",
                    );
                    nakayama = Some(NakayamaSection {
                        automorphism: n.automorphism,
                        winding_identity: n.winding_identity.is_ok(),
                        preserves_fixed_ring: n.preserves_r,
                        mu_j_proportional: n.mu_j_proportional,
                        mu_a_proportional: n.mu_a_proportional,
                        mu_r: n
                            .mu_r
                            .iter()
                            .map(|m| m.as_ref().map_or("?".into(), |e| alg.format(e)))
                            .collect(),
                        mu_r_identity: n.mu_r_identity,
                        index: n.index.map(|(a, b, c)| vec![a, b, c]),
                    });
                }
                Err(e) => checks.push(
                    "nakayama-automorphism",
                    Verification,
                    Status::Fail,
                    e.to_string(),
                ),
            }
        }
    }

    let rad = smash::radical_ideal(&p.action, &p.integral);
    let shortcut = smash::radical_shortcut(&p.action, &table);
    if let Some(s) = &shortcut {
        checks.flag("radical-shortcut", Theorem, *s == rad.slices);
    }
    let principal = smash::principal_radical(alg, &rad.slices);
    let rife = jac
        .as_ref()
        .map(|jc| smash::rife_action_check(alg, hopf_rife, &jc.j, &rad.slices));
    if let Some(rf) = &rife {
        checks.flag("action-rife", Observation, rf.action_rife());
        checks.flag(
            "radical-inside-left-ideal-of-j",
            Observation,
            rf.radical_in_aj,
        );
    }
    let radical = RadicalSection {
        dims: rad.slices.dims(),
        pertinency_dims: rad.pertinency_dims.clone(),
        quotient_dims: rad.quotient_dims.clone(),
        principal_generator: match &principal {
            PrincipalRadical::Principal(g) => Some(poly(alg, g)),
            PrincipalRadical::Undetermined { .. } => None,
        },
        scalar_class: UP_TO_SCALAR.into(),
        lowest_degree: rad.slices.lowest_degree(),
        inside_left_ideal_of_j: rife.as_ref().map(|r| r.radical_in_aj),
        j_normal: rife.as_ref().map(|r| r.j_normal),
        action_rife: rife.as_ref().map(|r| r.action_rife()),
        shortcut_equal: shortcut.as_ref().map(|s| *s == rad.slices),
    };
    let dr = smash::dis_radical(alg, &rad.slices, &r.slices);
    let dis_radical = DisRadicalSection {
        dims: dr.slices.dims(),
        generator: dr.candidate.as_ref().map(|g| poly(alg, g)),
        scalar_class: UP_TO_SCALAR.into(),
        principal: dr.principal,
    };

    let mut divisor_entries = Vec::new();
    if let Some(jc) = &jac {
        let mode = auto_mode(alg);
        let mut left_j = None;
        let mut right_j = None;
        for (label, f) in [("j", &jc.j), ("a", &jc.a)] {
            if f.deg == 0 || (label == "a" && jc.j_equals_a()) {
                continue;
            }
            for side in [DivisorSide::Left, DivisorSide::Right] {
                match divisors::divisors(alg, f, side, mode, p.conductor, &p.divisor_candidates) {
                    Ok(rep) => {
                        divisor_entries.push(divisor_entry(alg, label, mode, &rep));
                        if label == "j" {
                            if side == DivisorSide::Left {
                                left_j = Some(rep);
                            } else {
                                right_j = Some(rep);
                            }
                        }
                    }
                    Err(e) => checks.push("divisors", Observation, Status::Skip, e.to_string()),
                }
            }
        }
        if let (Some(l), Some(rr)) = (&left_j, &right_j) {
            let lines: Vec<&Elem> = table
                .g0()
                .into_iter()
                .filter_map(|g| table.f(g))
                .filter(|f| f.deg == 1)
                .collect();
            checks.flag(
                "divisors-contain-degree-one-components",
                Theorem,
                lines.iter().all(|f| l.contains(f) && rr.contains(f)),
            );
            let same = l.lines.len() == rr.lines.len() && l.lines.iter().all(|x| rr.contains(x));
            checks.flag("left-divisors-equal-right-divisors", Observation, same);
            checks.flag(
                "divisor-certificate-complete",
                Observation,
                !l.residual_warning() && !rr.residual_warning(),
            );
        } else if jc.j.deg == 0 {
            // A scalar has no divisors of degree one on either side.
            let none_in_degree_one = table
                .g0()
                .into_iter()
                .filter_map(|g| table.f(g))
                .all(|f| f.deg != 1);
            checks.flag(
                "divisors-contain-degree-one-components",
                Theorem,
                none_in_degree_one,
            );
            checks.flag("left-divisors-equal-right-divisors", Observation, true);
        }
    }

    // Theorem checks are meaningful only under the hypotheses; report them as such otherwise.
    let hypotheses_hold = !checks
        .0
        .iter()
        .any(|c| c.kind == Hypothesis && c.status == Status::Fail);
    if !hypotheses_hold {
        for c in checks
            .0
            .iter_mut()
            .filter(|c| c.kind == Theorem && c.status == Status::Fail)
        {
            if c.detail.is_empty() {
                c.detail = "outside the hypotheses".into();
            } else {
                c.detail = format!("outside the hypotheses: {}", c.detail);
            }
        }
    }
    let exit_code = Report::compute_exit_code(&checks.0);
    Report {
        format: FORMAT_VERSION.into(),
        input: input.into(),
        max_degree: dmax,
        conductor: p.conductor,
        exit_code,
        verification,
        hilbert,
        components,
        hdet: hdet_section,
        jacobian,
        arrangement,
        discriminant,
        xi,
        covariant,
        radical,
        dis_radical,
        divisors: divisor_entries,
        nakayama,
        checks: checks.0,
    }
}

fn kind_of(e: &InvariantError) -> CheckKind {
    match e {
        InvariantError::Hypothesis(_) | InvariantError::Precondition(_) => CheckKind::Hypothesis,
        InvariantError::Inconsistent(_) | InvariantError::Algebra(_) => CheckKind::Theorem,
    }
}

pub fn divisor_entry(
    alg: &GradedAlgebra,
    label: &str,
    mode: Mode,
    rep: &divisors::DivisorReport,
) -> DivisorEntry {
    let st = ["s".to_string(), "t".to_string()];
    DivisorEntry {
        element: label.into(),
        side: rep.side.name().into(),
        mode: match mode {
            Mode::Candidates => "candidates".into(),
            Mode::Certificate => "certificate".into(),
        },
        lines: rep.lines.iter().map(|l| poly(alg, l)).collect(),
        certificate: rep.certificate.as_ref().map(|c| c.form.format(&st)),
        residual: rep.certificate.as_ref().map(|c| c.residual.format(&st)),
        residual_warning: rep.residual_warning(),
    }
}
