//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Expected values come from oracles in this file and in `common`, which
//! recompute dimensions and maps from first principles instead of calling
//! the library routine under test.

mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use algebroid::algebra::Algebra;
use algebroid::antipode::{beta_map, compute_antipode, dual_right_comodule, right_dual_comodule};
use algebroid::coalgebroid::{associator, check_morphism, left_unitor, right_unitor, Coalgebroid};
use algebroid::dual::DualData;
use algebroid::error::Error;
use algebroid::field::Field;
use algebroid::fixtures;
use algebroid::io::{output_document, to_json};
use algebroid::linalg::Mat;
use algebroid::par::ExecMode;
use algebroid::report::Report;
use algebroid::tags;
use algebroid::tannaka::{
    reconstruct, roundtrip_check, Presentation, ReconstructOptions, Reconstructed,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `dim L` for the swap fixture, from [`brute_force_coend_dim`], frozen.
const GOLDEN_SWAP_DIM: usize = 8;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok_with(rep: &Report, required: &[&str], what: &str) -> Result<(), String> {
    ensure(rep.ok(), || {
        format!("{what}: failed {:?}", rep.failed_tags())
    })?;
    for t in required {
        ensure(rep.passed(t), || format!("{what}: {t} was not checked"))?;
    }
    Ok(())
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn gf7() -> Field {
    Field::Prime(7)
}

fn rebuild(p: &Presentation) -> Result<Reconstructed, String> {
    reconstruct(p, &ReconstructOptions::default()).map_err(|e| e.to_string())
}

fn trivial_algebras() -> Vec<(&'static str, Arc<Algebra>)> {
    let f = gf7();
    vec![
        ("k", Arc::new(Algebra::ground(f))),
        ("k x k", Arc::new(Algebra::product(f, 2))),
        ("k[x]/x^2", Arc::new(Algebra::truncated_poly(f, 2))),
        ("M2(k)", Arc::new(Algebra::matrix(f, 2))),
    ]
}

/// `dim` of `(+)_x Hom_R(F x, R) (x) F x` modulo `f*phi (x) m - phi (x) f m`,
/// with each hom space solved directly from `phi(m r) = phi(m) r`.
fn brute_force_coend_dim(p: &Presentation) -> usize {
    let alg = &p.algebra;
    let f = alg.field();
    let n = alg.dim();
    // Hom_R(M, R) as columns of flattened n x d matrices Phi, Phi[r][j] = coefficient of b_r in phi(e_j)
    let homs: Vec<Mat> = p
        .objects
        .iter()
        .map(|o| {
            let d = o.module.dim();
            let right = o.module.right().expect("objects carry a right action");
            let mut eqs = Mat::zeros(f, 0, n * d);
            for (s, act) in right.iter().enumerate() {
                // phi(m b_s) - phi(m) b_s, linear in Phi
                let block = Mat::identity(f, n)
                    .kron(&act.transpose())
                    .sub(&alg.rmul(s).kron(&Mat::identity(f, d)));
                eqs = eqs.vcat(&block);
            }
            eqs.kernel_basis().transpose()
        })
        .collect();
    let offsets: Vec<usize> = p
        .objects
        .iter()
        .scan(0, |acc, o| {
            let here = *acc;
            *acc += n * o.module.dim() * o.module.dim();
            Some(here)
        })
        .collect();
    let total: usize = p
        .objects
        .iter()
        .map(|o| n * o.module.dim() * o.module.dim())
        .sum();
    let mut span = Mat::zeros(f, total, 0);
    for (x, o) in p.objects.iter().enumerate() {
        let d = o.module.dim();
        for t in 0..homs[x].cols() {
            for j in 0..d {
                let mut v = vec![f.zero(); total];
                for q in 0..n * d {
                    v[offsets[x] + q * d + j] = homs[x].get(q, t);
                }
                span = span.hcat(&Mat::column_vector(f, &v));
            }
        }
    }
    let mut rels = Mat::zeros(f, total, 0);
    for mor in &p.morphisms {
        let (dx, dy) = (
            p.objects[mor.src].module.dim(),
            p.objects[mor.dst].module.dim(),
        );
        for t in 0..homs[mor.dst].cols() {
            let phi = Mat::from_fn(f, n, dy, |r, j| homs[mor.dst].get(r * dy + j, t));
            let pulled = phi.mul(&mor.matrix);
            for j in 0..dx {
                let mut v = vec![f.zero(); total];
                for r in 0..n {
                    for c in 0..dx {
                        v[offsets[mor.src] + (r * dx + c) * dx + j] = pulled.get(r, c);
                    }
                }
                let image = mor.matrix.col(j);
                for r in 0..n {
                    for c in 0..dy {
                        for (i, m) in image.iter().enumerate() {
                            let idx = offsets[mor.dst] + (r * dy + c) * dy + i;
                            v[idx] = f.sub(&v[idx], &f.mul(&phi.get(r, c), m));
                        }
                    }
                }
                rels = rels.hcat(&Mat::column_vector(f, &v));
            }
        }
    }
    span.rank() - rels.rank()
}

/// The random `(R, M)` shared by the dual-basis and coalgebroid suites.
fn population() -> Vec<common::Summand> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    [Field::Prime(7), Field::Prime(2)]
        .into_iter()
        .flat_map(|f| {
            (0..120)
                .map(|_| common::random_summand(f, 6, &mut rng))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    // the balanced identities need both actions
    let left_tags = [
        "Eq.1.6",
        "Eq.1.9/dual",
        "Eq.1.9/base",
        "Eq.1.10",
        "Eq.1.11/dual",
        "Eq.1.11/base",
    ];
    let right_tags = [
        "Eq.1.6r",
        "Eq.1.9r/dual",
        "Eq.1.9r/base",
        "Eq.1.10r",
        "Eq.1.11r/dual",
        "Eq.1.11r/base",
    ];
    let (mut pairs, mut bimodules) = (0, 0);
    for s in population() {
        {
            let both = s.right_dual_dim.is_some();
            let required = |t: &[&'static str; 6]| if both { t.to_vec() } else { t[..3].to_vec() };
            let dd = DualData::left(&s.module).map_err(|e| format!("{}: {e}", s.label))?;
            ensure(dd.dual().dim() == s.left_dual_dim, || {
                format!(
                    "{}: dual has dimension {}, oracle {}",
                    s.label,
                    dd.dual().dim(),
                    s.left_dual_dim
                )
            })?;
            ok_with(
                &dd.check().map_err(|e| e.to_string())?,
                &required(&left_tags),
                &s.label,
            )?;
            if let Some(expected) = s.right_dual_dim {
                let rd = DualData::right(&s.module).map_err(|e| format!("{}: {e}", s.label))?;
                ensure(rd.dual().dim() == expected, || {
                    format!("{}: right dual dimension", s.label)
                })?;
                ok_with(
                    &rd.check().map_err(|e| e.to_string())?,
                    &right_tags,
                    &s.label,
                )?;
                bimodules += 1;
            }
            pairs += 1;
        }
    }
    ensure(bimodules >= 100, || {
        format!("only {bimodules} bimodule samples")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut not_projective = 0;
    for f in [Field::Prime(7), Field::Prime(2)] {
        for _ in 0..60 {
            let c = common::random_cyclic(f, &mut rng);
            let dd = if c.right_module {
                DualData::left(&c.module)
            } else {
                DualData::right(&c.module)
            };
            match (dd, c.projective) {
                (Err(Error::NotProjective(_)), false) => not_projective += 1,
                (Ok(dd), true) => {
                    let tags = if c.right_module {
                        &left_tags
                    } else {
                        &right_tags
                    };
                    ok_with(
                        &dd.check().map_err(|e| e.to_string())?,
                        &tags[..3],
                        &c.label,
                    )?;
                }
                (got, expected) => {
                    return Err(format!(
                        "{}: projective by oracle = {expected}, got {got:?}",
                        c.label
                    ));
                }
            }
        }
    }
    ensure(not_projective >= 15, || {
        format!("only {not_projective} non-projective samples")
    })?;
    within(start, Duration::from_secs(30), "dual-basis suite")?;
    Ok(format!(
        "{pairs} summands ({bimodules} bimodules, both duals), {not_projective} NotProjective, {:.2?}",
        start.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let coalgebroid_tags = ["Eq.9", "Eq.10", "Eq.11", "Eq.12", "Eq.13"];
    let (mut endos, mut units, mut unitors, mut associators) = (0, 0, 0, 0);
    for s in population() {
        {
            let u = Coalgebroid::unit(&s.alg).map_err(|e| e.to_string())?;
            ensure(u.dim() == s.alg.dim().pow(2), || {
                "unit coalgebroid dimension".into()
            })?;
            ok_with(
                &u.check().map_err(|e| e.to_string())?,
                &coalgebroid_tags,
                &format!("unit of {}", s.label),
            )?;
            units += 1;
            if s.right_dual_dim.is_none() {
                continue;
            }
            let dd = DualData::left(&s.module).map_err(|e| e.to_string())?;
            let l = Coalgebroid::endo(&dd).map_err(|e| format!("{}: {e}", s.label))?;
            ensure(l.dim() == s.left_dual_dim * s.module.dim(), || {
                format!("{}: endo dimension", s.label)
            })?;
            ok_with(
                &l.check().map_err(|e| e.to_string())?,
                &coalgebroid_tags,
                &format!("endo of {}", s.label),
            )?;
            endos += 1;
            if l.dim() <= 16 {
                for (side, (bp, map)) in [("right", right_unitor(&l)), ("left", left_unitor(&l))]
                    .into_iter()
                    .map(|(s, r)| (s, r.map_err(|e| e.to_string())))
                    .map(|(s, r)| r.map(|v| (s, v)))
                    .collect::<Result<Vec<_>, _>>()?
                {
                    ensure(map.invert().is_ok(), || {
                        format!("{}: {side} unitor is singular", s.label)
                    })?;
                    let rep =
                        check_morphism(&bp.coalgebroid, &l, &map).map_err(|e| e.to_string())?;
                    ok_with(
                        &rep,
                        &["Morphism/coproduct"],
                        &format!("{side} unitor of {}", s.label),
                    )?;
                    unitors += 1;
                }
            }
            if l.dim() <= 4 {
                let (a, b, map) = associator(&l, &u, &l).map_err(|e| e.to_string())?;
                ensure(map.invert().is_ok(), || {
                    format!("{}: associator is singular", s.label)
                })?;
                let rep = check_morphism(&a.coalgebroid, &b.coalgebroid, &map)
                    .map_err(|e| e.to_string())?;
                ok_with(
                    &rep,
                    &["Morphism/coproduct"],
                    &format!("associator of {}", s.label),
                )?;
                associators += 1;
            }
        }
    }
    ensure(endos >= 30 && unitors >= 20 && associators >= 5, || {
        format!("too few cases: {endos} endo, {unitors} unitors, {associators} associators")
    })?;
    within(start, Duration::from_secs(30), "coalgebroid suite")?;
    Ok(format!(
        "{units} unit and {endos} endo coalgebroids, {unitors} unitors, {associators} associators, {:.2?}",
        start.elapsed()
    ))
}

/// `[phi (x) m] |-> phi(1) (x) m` from the trivial coend to `R (x)_k R`.
fn trivial_to_unit(r: &Reconstructed) -> Result<Mat, String> {
    let alg = &r.presentation.algebra;
    let f = alg.field();
    let n = alg.dim();
    let dual = &r.coend.duals()[0];
    let (e, d) = (dual.dual().dim(), dual.base().dim());
    let emb = dual.embedding();
    let one = alg.unit();
    let amb = Mat::from_fn(f, n * n, e * d, |row, col| {
        let (a, b) = (row / n, row % n);
        let (t, j) = (col / d, col % d);
        if b != j {
            return f.zero();
        }
        (0..d).fold(f.zero(), |acc, i| {
            f.add(&acc, &f.mul(&one[i], &emb.get(a * d + i, t)))
        })
    });
    let c = r.coend.class_map(0);
    let kt = c
        .transpose()
        .solve_matrix(&amb.transpose())
        .map_err(|e| e.to_string())?
        .ok_or("map does not descend to the coend")?;
    Ok(kt.transpose())
}

fn criterion_3() -> Outcome {
    let mut lines = Vec::new();
    for (name, alg) in trivial_algebras() {
        let start = Instant::now();
        let n = alg.dim();
        let p = fixtures::trivial(&alg);
        let r = rebuild(&p)?;
        ensure(r.report.ok(), || {
            format!("{name}: {:?}", r.report.failed_tags())
        })?;
        let oracle = brute_force_coend_dim(&r.presentation);
        ensure(r.dim() == n * n && oracle == n * n, || {
            format!(
                "{name}: dim L = {}, oracle {oracle}, expected {}",
                r.dim(),
                n * n
            )
        })?;
        let u = Coalgebroid::unit(&alg).map_err(|e| e.to_string())?;
        let k = trivial_to_unit(&r)?;
        let inv = k
            .invert()
            .map_err(|_| format!("{name}: L -> R (x) R is singular"))?;
        ok_with(
            &check_morphism(&r.coalgebroid, &u, &k).map_err(|e| e.to_string())?,
            &[],
            name,
        )?;
        ok_with(
            &check_morphism(&u, &r.coalgebroid, &inv).map_err(|e| e.to_string())?,
            &[],
            name,
        )?;
        within(start, Duration::from_secs(5), name)?;
        lines.push(format!("{name}: {} in {:.2?}", r.dim(), start.elapsed()));
    }
    Ok(format!(
        "dim L = (dim R)^2 and L = R (x) R: {}",
        lines.join(", ")
    ))
}

/// The class `[phi (x) m]` of a one-dimensional object, scaled so `phi(m) = 1`.
fn line_class(r: &Reconstructed, x: usize) -> Vec<algebroid::field::Scalar> {
    let f = r.coalgebroid.field();
    let c = f.inv(&r.coend.duals()[x].pairing().get(0, 0));
    r.coend
        .class_map(x)
        .col(0)
        .iter()
        .map(|v| f.mul(v, &c))
        .collect()
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let f = gf7();
    let r = rebuild(&fixtures::c2(f))?;
    ensure(r.dim() == 2, || format!("dim L = {}", r.dim()))?;
    ensure(brute_force_coend_dim(&r.presentation) == 2, || {
        "oracle disagrees".into()
    })?;
    let l = &r.coalgebroid;
    let classes: Vec<_> = (0..2).map(|x| line_class(&r, x)).collect();
    for (x, g) in classes.iter().enumerate() {
        let gm = Mat::column_vector(f, g);
        ensure(l.delta_ambient().mul(&gm) == gm.kron(&gm), || {
            format!("class {x} is not grouplike")
        })?;
        ensure(l.counit().mul(&gm) == Mat::identity(f, 1), || {
            format!("class {x} has counit != 1")
        })?;
    }
    let b = r.bialgebroid.as_ref().ok_or("no product")?;
    let (_, beta) = beta_map(b).map_err(|e| e.to_string())?;
    ensure(beta.invert().is_ok(), || "beta is singular".into())?;
    let nabla = r.antipode.as_ref().ok_or("no antipode")?;
    ensure(r.opposite_antipode.is_some(), || {
        "no opposite antipode".into()
    })?;
    let lemmas = [
        "Lemma7.1/41b",
        "Lemma7.1/41c",
        "Lemma7.2/i",
        "Lemma7.2/ii",
        "Lemma7.2/iii",
    ];
    ok_with(&r.report, &lemmas, "C2")?;

    // k[g]/(g^2 - 1) with basis (1, g): send the class of object x to g^x
    let h = Arc::new(fixtures::group_algebra(f, 2).map_err(|e| e.to_string())?);
    let cls = Mat::from_cols(f, 2, &classes);
    let k = cls
        .invert()
        .map_err(|_| "classes are dependent".to_string())?;
    let hc = h.coalgebroid();
    ok_with(
        &check_morphism(l, hc, &k).map_err(|e| e.to_string())?,
        &["Morphism/coproduct"],
        "C2 -> kC2",
    )?;
    ensure(
        k.mul(b.mult_ambient()) == h.mult_ambient().mul(&k.kron(&k)),
        || "product differs".into(),
    )?;
    ensure(k.mul(b.unit_map()) == *h.unit_map(), || {
        "unit differs".into()
    })?;
    let sh = compute_antipode(&h).map_err(|e| e.to_string())?;
    ensure(
        k.kron(&k).mul(nabla.nabla_ambient()) == sh.nabla_ambient().mul(&k),
        || "antipode differs".into(),
    )?;
    within(start, Duration::from_secs(5), "C2")?;
    Ok(format!(
        "dim L = 2, grouplike classes, isomorphic to kC2, {:.2?}",
        start.elapsed()
    ))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let p = fixtures::swap(gf7()).map_err(|e| e.to_string())?;
    let r = rebuild(&p)?;
    let oracle = brute_force_coend_dim(&r.presentation);
    ensure(oracle == GOLDEN_SWAP_DIM, || {
        format!("oracle gives {oracle}")
    })?;
    ensure(r.dim() == GOLDEN_SWAP_DIM, || {
        format!("dim L = {}", r.dim())
    })?;
    let required = [
        "Eq.9",
        "Eq.13",
        "Eq.24",
        "Eq.31",
        "Eq.35",
        "Eq.41",
        "OpAntipode/2",
        "Lemma7.2/iii",
        "Roundtrip/iso",
    ];
    ok_with(&r.report, &required, "SWAP")?;
    let unregistered: Vec<&str> = r
        .report
        .entries()
        .map(|e| e.tag.as_str())
        .filter(|t| !tags::is_registered(t))
        .collect();
    ensure(unregistered.is_empty(), || {
        format!("unregistered tags {unregistered:?}")
    })?;
    let b = r.bialgebroid.as_ref().ok_or("no product")?;
    ensure(b.source() != b.target(), || {
        "source and target coincide".into()
    })?;
    let f = r.coalgebroid.field();
    let s_of = |a: usize| Mat::column_vector(f, &b.source().col(a));
    let central = (0..r.presentation.algebra.dim()).all(|a| {
        (0..b.dim()).all(|h| {
            let h = Mat::column_vector(f, &Mat::identity(f, b.dim()).col(h));
            b.product(&s_of(a), &h) == b.product(&h, &s_of(a))
        })
    });
    ensure(!central, || "source lands in the centre".into())?;
    within(start, Duration::from_secs(10), "SWAP")?;
    Ok(format!(
        "dim L = {} (golden), {} tags pass, {:.2?}",
        r.dim(),
        r.report.entries().count(),
        start.elapsed()
    ))
}

fn criterion_6() -> Outcome {
    let f = gf7();
    let mut fixtures_list: Vec<(String, Presentation)> = trivial_algebras()
        .into_iter()
        .map(|(n, a)| (format!("TRIV {n}"), fixtures::trivial(&a)))
        .collect();
    fixtures_list.push(("C2".into(), fixtures::c2(f)));
    fixtures_list.push(("SWAP".into(), fixtures::swap(f).map_err(|e| e.to_string())?));
    for (name, p) in &fixtures_list {
        let r = rebuild(p)?;
        let b = r
            .bialgebroid
            .as_ref()
            .ok_or(format!("{name}: no product"))?;
        let induced = r.antipode.as_ref().ok_or(format!("{name}: no antipode"))?;
        let computed = compute_antipode(b).map_err(|e| e.to_string())?;
        ensure(computed.nabla() == induced.nabla(), || {
            format!("{name}: antipodes differ")
        })?;
        ok_with(&r.report, &["Antipode/unique"], name)?;
    }
    let monoid = Arc::new(fixtures::idempotent_monoid(f).map_err(|e| e.to_string())?);
    match compute_antipode(&monoid) {
        Err(Error::NoAntipode(_)) => {}
        other => {
            return Err(format!(
                "idempotent monoid gave {:?}",
                other.map(|_| "an antipode")
            ))
        }
    }
    Ok(format!(
        "{} fixtures agree, idempotent monoid has no antipode",
        fixtures_list.len()
    ))
}

fn criterion_7() -> Outcome {
    let f = gf7();
    let mut count = 0;
    for (name, p) in [
        ("C2", fixtures::c2(f)),
        ("SWAP", fixtures::swap(f).map_err(|e| e.to_string())?),
    ] {
        let r = rebuild(&p)?;
        let a = r.antipode.as_ref().ok_or("no antipode")?;
        let o = r.opposite_antipode.as_ref().ok_or("no opposite antipode")?;
        for (x, m) in r.coactions.iter().enumerate() {
            let what = format!("{name} object {}", r.presentation.objects[x].name);
            let left = dual_right_comodule(a, m).map_err(|e| format!("{what}: {e}"))?;
            ok_with(
                &left.report,
                &["Comodule/coassoc", "Comodule/counit", "Eq.45", "Eq.47"],
                &what,
            )?;
            let right = right_dual_comodule(o, m).map_err(|e| format!("{what}: {e}"))?;
            ok_with(&right.report, &["Prop7.2/ev", "Prop7.2/db"], &what)?;
            count += 1;
        }
    }
    Ok(format!("both dual comodules of {count} comodules"))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let f = gf7();
    let mut done = Vec::new();
    let mut cases: Vec<(String, Presentation)> = trivial_algebras()
        .into_iter()
        .map(|(n, a)| (format!("TRIV {n}"), fixtures::trivial(&a)))
        .collect();
    cases.push(("C2".into(), fixtures::c2(f)));
    for (name, p) in &cases {
        let r = rebuild(p)?;
        let rt = r.roundtrip.as_ref().ok_or("no round trip")?;
        ensure(rt.is_iso(), || {
            format!("{name}: round trip is not an isomorphism")
        })?;
        done.push(name.clone());
    }
    // C2 without the object g: only the class of 1 survives
    let r = rebuild(&fixtures::c2(f))?;
    let names: Vec<String> = r
        .presentation
        .objects
        .iter()
        .map(|o| o.name.clone())
        .collect();
    let s = names.iter().position(|n| n == "g").ok_or("no object g")?;
    let kept: Vec<usize> = (0..r.coactions.len()).filter(|&x| x != s).take(1).collect();
    let comods: Vec<_> = kept.iter().map(|&x| r.coactions[x].clone()).collect();
    let kept_names: Vec<String> = kept.iter().map(|&x| names[x].clone()).collect();
    let rt = roundtrip_check(&r.coalgebroid, &comods, &kept_names, 2, ExecMode::default())
        .map_err(|e| e.to_string())?;
    ensure(rt.dim_rebuilt < rt.dim_original, || {
        "coend did not shrink".into()
    })?;
    ensure(rt.injective && !rt.surjective, || {
        "expected a proper inclusion L' -> L".into()
    })?;
    ensure(
        !rt.report.passed("Roundtrip/iso") && rt.report.get("Roundtrip/iso").is_some(),
        || "failure was not reported".into(),
    )?;
    // dually the restriction L* -> L'* is onto and not injective
    let restriction = rt.canonical.transpose();
    ensure(
        restriction.rank() == rt.dim_rebuilt && rt.dim_original > rt.dim_rebuilt,
        || "restriction".into(),
    )?;
    within(start, Duration::from_secs(20), "round trips")?;
    Ok(format!(
        "isomorphisms on {}; without g: dim {} -> {}, restriction is a strict surjection, {:.2?}",
        done.join(", "),
        rt.dim_rebuilt,
        rt.dim_original,
        start.elapsed()
    ))
}

fn criterion_9() -> Outcome {
    let f = gf7();
    let cases = [
        ("C2", fixtures::c2(f)),
        ("SWAP", fixtures::swap(f).map_err(|e| e.to_string())?),
        (
            "TRIV k x k",
            fixtures::trivial(&Arc::new(Algebra::product(f, 2))),
        ),
    ];
    for (name, p) in &cases {
        let run = || -> Result<String, String> {
            let opts = ReconstructOptions {
                seed: 2024,
                ..Default::default()
            };
            let r = reconstruct(p, &opts).map_err(|e| e.to_string())?;
            Ok(to_json(&output_document(p, &r)))
        };
        let (a, b) = (run()?, run()?);
        ensure(a.as_bytes() == b.as_bytes(), || {
            format!("{name}: outputs differ")
        })?;
    }
    Ok(format!(
        "{} fixtures byte-identical across runs",
        cases.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("dual bases", criterion_1),
        ("coalgebroids", criterion_2),
        ("trivial fixtures", criterion_3),
        ("C2 fixture", criterion_4),
        ("swap fixture", criterion_5),
        ("antipode agreement", criterion_6),
        ("dual comodules", criterion_7),
        ("round trip", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
