//! The four command drivers.
//!
//! Exit code contract: 0 all checks pass, 1 some check failed, 2 the input
//! could not be parsed or is dimensionally inconsistent, 3 a precondition of
//! the requested computation does not hold (missing structure, inconsistent
//! constraint system, failed theorem hypothesis).

use crate::format::{AlgebroidFile, FileError, LoadedFixture};
use crate::mutate;
use crate::report::Report;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::Path;
use valab_core::commalg::{fmt_subspace, CommAlgebra, IdempotentStatus, Locality};
use valab_core::exactnum::{fmt_combo, fmt_q, Matrix};
use valab_core::forms::GorensteinContext;
use valab_core::report::Status;
use valab_core::semiconformal::{
    heisenberg_search, indecomposability_report, pin_l1, solve_l1, LOneMap, Pinned,
    l1_constraint_residuals,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    File(#[from] FileError),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::File(_) => EXIT_INPUT_ERROR,
            CliError::Precondition(_) => EXIT_PRECONDITION,
        }
    }
}

fn fixture_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn run_axiom_checks(report: &mut Report, fx: &LoadedFixture) {
    report.push_check_report(&fx.algebra.check());
    match &fx.algebroid {
        Some(g) => {
            report.push_check_report(&g.leibniz_of().check());
            report.push_check_report(&g.check_truncated_conformal());
            report.push_check_report(&g.check_vertex_algebroid());
            report.push_check_report(&g.check_compatibility());
        }
        None => {
            for id in ["leib.identity", "tc.suite", "va.suite", "compat.suite"] {
                report.skip(id, "", "fixture has no weight-1 structure");
            }
        }
    }
}

/// `check`: run every axiom suite that applies to the fixture.
pub fn cmd_check(path: &Path) -> Result<(Report, i32), CliError> {
    let fx = AlgebroidFile::load(path)?;
    let mut report = Report::new(&fixture_id(path), "check");
    run_axiom_checks(&mut report, &fx);
    let code = if report.has_failures() {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    Ok((report, code))
}

fn locality_string(l: &Locality, a: &CommAlgebra) -> String {
    match l {
        Locality::Local => "local".to_string(),
        Locality::NotLocal { idempotent } => format!(
            "not local (idempotent {})",
            fmt_combo(idempotent, &a.names)
        ),
        Locality::IndeterminateNonSplit => "indeterminate (no rational idempotent found)".into(),
    }
}

fn fmt_gram(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .row_vecs()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(fmt_q).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Builds the Gorenstein context from the fixture, or explains why it
/// cannot be built.
fn try_context(fx: &LoadedFixture) -> Result<GorensteinContext, String> {
    let g = fx
        .algebroid
        .as_ref()
        .ok_or_else(|| "fixture has no weight-1 structure".to_string())?;
    if fx.t.is_none() && fx.form.is_none() && fx.grading.is_none() {
        return Err("no socle/form block and no grading to synthesize one from".to_string());
    }
    GorensteinContext::new(g.clone(), fx.grading.clone(), fx.t.clone(), fx.form.clone())
        .map_err(|e| e.to_string())
}

/// Obtains an `L(1)` map: the one stored in the file when present,
/// otherwise by solving the constraint system and pinning the gauge.
fn obtain_l1(
    fx: &LoadedFixture,
    ctx: &GorensteinContext,
) -> Result<(LOneMap, String), String> {
    if let Some(l1) = &fx.l1 {
        let residuals = l1_constraint_residuals(&ctx.algebroid, l1);
        if residuals.is_empty() {
            return Ok((l1.clone(), "from file".to_string()));
        }
        return Err(format!("stored l1 is invalid: {}", residuals[0]));
    }
    let family = solve_l1(&ctx.algebroid).map_err(|e| e.to_string())?;
    match pin_l1(&family, ctx).map_err(|e| e.to_string())? {
        Pinned::Unique(map) => Ok((map, "solved and pinned (unique)".to_string())),
        Pinned::NonUnique(fam) => Ok((
            fam.representative(),
            format!("solved and pinned (family of dimension {})", fam.dim()),
        )),
    }
}

fn fmt_l1(map: &LOneMap, g: &valab_core::algebroid::VertexAlgebroid) -> Vec<String> {
    (0..g.b_dim)
        .map(|j| {
            let mut e = valab_core::exactnum::zero_vec(g.b_dim);
            e[j] = valab_core::exactnum::qi(1);
            format!(
                "L(1){} = {}",
                g.b_names[j],
                fmt_combo(&map.apply(&e), &g.algebra.names)
            )
        })
        .collect()
}

/// `invariants`: ring invariants of the base, Leibniz invariants of the
/// weight-1 part, and the form-dependent subspace table when a Gorenstein
/// context can be assembled.
pub fn cmd_invariants(path: &Path) -> Result<(Report, i32), CliError> {
    let fx = AlgebroidFile::load(path)?;
    let mut report = Report::new(&fixture_id(path), "invariants");

    let mut gate = Report::new("", "");
    run_axiom_checks(&mut gate, &fx);
    if gate.has_failures() {
        report.entries = gate.entries;
        return Ok((report, EXIT_CHECK_FAILED));
    }

    let a = &fx.algebra;
    let an = &a.names;
    let radical = a.jacobson_radical();
    report.push_value(
        "inv.jacobson_radical",
        "Jacobson radical = nilradical, via the trace-form criterion",
        vec![fmt_subspace(&radical, an)],
    );
    report.push_value(
        "inv.socle",
        "socle: annihilator of the Jacobson radical",
        vec![fmt_subspace(&a.socle(), an)],
    );
    let locality = a.locality();
    report.push_value(
        "inv.locality",
        "locality of the base algebra over the rationals",
        vec![locality_string(&locality, a)],
    );
    match a.idempotent_status() {
        IdempotentStatus::OnlyTrivial => {
            report.push_value("inv.idempotents", "idempotent search", vec!["only 0 and 1".into()])
        }
        IdempotentStatus::NontrivialFound(e) => report.push_value(
            "inv.idempotents",
            "idempotent search",
            vec![format!("nontrivial: {}", fmt_combo(&e, an))],
        ),
        IdempotentStatus::Indeterminate => report.push_value(
            "inv.idempotents",
            "idempotent search",
            vec!["indeterminate".into()],
        ),
    }
    let ind = indecomposability_note(&fx);
    report.push_value("inv.indecomposability", "structural consequence for a semiconformal ambient algebra", vec![ind]);

    let gorenstein = match a.is_gorenstein() {
        Ok(b) => {
            report.push_value("inv.gorenstein", "socle is one-dimensional", vec![b.to_string()]);
            Some(b)
        }
        Err(e) => {
            report.skip("inv.gorenstein", "socle is one-dimensional", &e.to_string());
            None
        }
    };
    match (&fx.grading, gorenstein) {
        (Some(grading), _) => match a.poincare_check(grading) {
            Ok(rep) => report.push_check_report(&rep),
            Err(e) => report.push_status(
                "poincare.grading",
                Status::Fail,
                "grading invariants",
                Some(e.to_string()),
            ),
        },
        (None, _) => report.skip("poincare", "graded duality check", "no grading block"),
    }
    if gorenstein == Some(true) {
        let t = a.choose_t().expect("gorenstein implies a socle generator");
        report.push_value(
            "inv.socle_generator",
            "socle generator, first nonzero coordinate normalized to 1",
            vec![fmt_combo(&t, an)],
        );
    }

    if fx.algebroid.is_none() {
        for id in [
            "inv.ker_partial",
            "inv.leib",
            "inv.derived_series",
            "inv.solvable_radical",
            "inv.semisimple_leibniz",
            "inv.anchor_ideal",
            "inv.m_subspace",
            "inv.ann_t",
            "inv.double_form",
            "inv.rad_double_form",
            "perp.suite",
            "inv.self_duality_dim",
        ] {
            report.skip(id, "", "fixture has no weight-1 structure");
        }
    }
    if let Some(g) = &fx.algebroid {
        let bn = &g.b_names;
        let (ker, is_unit) = g.ker_partial();
        report.push_value(
            "inv.ker_partial",
            "kernel of partial inside the base",
            vec![fmt_subspace(&ker, an), format!("equals unit line: {is_unit}")],
        );
        let l = g.leibniz_of();
        report.push_value(
            "inv.leib",
            "span of squared brackets, by polarization",
            vec![fmt_subspace(&l.leib_subspace(), bn)],
        );
        let series = l.derived_series();
        let dims: Vec<String> = series.iter().map(|s| s.dim().to_string()).collect();
        report.push_value(
            "inv.derived_series",
            "derived series until stabilization",
            vec![
                format!("dims [{}]", dims.join(", ")),
                format!("solvable: {}", l.is_solvable()),
            ],
        );
        report.push_value(
            "inv.solvable_radical",
            "maximal solvable ideal, via the Killing form of the Lie quotient",
            vec![fmt_subspace(&l.solvable_radical(), bn)],
        );
        report.push_value(
            "inv.semisimple_leibniz",
            "solvable radical equals the squared-bracket span",
            vec![l.is_semisimple().to_string()],
        );

        match try_context(&fx) {
            Err(reason) => {
                for id in [
                    "ctx.validate",
                    "inv.anchor_ideal",
                    "inv.socle_action",
                    "inv.m_subspace",
                    "inv.ann_t",
                    "inv.double_form",
                    "inv.rad_double_form",
                    "perp.suite",
                    "inv.self_duality_dim",
                ] {
                    report.skip(id, "", &format!("no Gorenstein data: {reason}"));
                }
            }
            Ok(ctx) => {
                report.push_check_report(&ctx.validate());
                report.push_value(
                    "inv.socle_generator_gauged",
                    "socle generator after the B(1,t) = 1 gauge",
                    vec![fmt_combo(&ctx.t, an)],
                );
                let ai = ctx.ideal_a();
                report.push_value(
                    "inv.anchor_ideal",
                    "span of anchor images of the maximal ideal",
                    vec![
                        fmt_subspace(&ai.subspace, an),
                        format!("proper: {}", ai.proper),
                    ],
                );
                match ctx.socle_action() {
                    Ok(sa) => report.push_check_report(&sa.report),
                    Err(e) => report.skip("inv.socle_action", "", &e.to_string()),
                }
                report.push_value(
                    "inv.m_subspace",
                    "M: kernel of the action on the socle line",
                    vec![fmt_subspace(&ctx.m_subspace(), bn)],
                );
                report.push_value(
                    "inv.ann_t",
                    "Ann(t(-1)): kernel of the module action of t",
                    vec![fmt_subspace(&ctx.ann_t(), bn)],
                );
                report.push_value(
                    "inv.double_form",
                    "Gram matrix of ((u,v)) = B(u(1)v, t)",
                    vec![fmt_gram(&ctx.double_form())],
                );
                report.push_value(
                    "inv.rad_double_form",
                    "radical of the squared pairing",
                    vec![fmt_subspace(&ctx.rad_double_form(), bn)],
                );
                match obtain_l1(&fx, &ctx) {
                    Err(reason) => {
                        report.skip("perp.suite", "", &reason);
                        report.skip("inv.self_duality_dim", "", &reason);
                    }
                    Ok((l1, how)) => {
                        report.push_value("inv.l1", "the L(1) map in use", {
                            let mut v = fmt_l1(&l1, g);
                            v.push(format!("({how})"));
                            v
                        });
                        match ctx.perp_lemma_suite(&l1) {
                            Ok(rep) => report.push_check_report(&rep),
                            Err(e) => report.skip("perp.suite", "", &e.to_string()),
                        }
                        report.push_value(
                            "inv.self_duality_dim",
                            "dim of base modulo the image of L(1)",
                            vec![ctx.self_duality_dim(&l1).to_string()],
                        );
                    }
                }
            }
        }
    }

    let code = if report.has_failures() {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    Ok((report, code))
}

fn indecomposability_note(fx: &LoadedFixture) -> String {
    match &fx.algebroid {
        Some(g) => indecomposability_report(g).note,
        None => {
            let l = fx.algebra.locality();
            locality_string(&l, &fx.algebra)
        }
    }
}

/// `semiconformal`: the `L(1)` solution family, the gauge-pinned map, and
/// the Heisenberg-element data.
pub fn cmd_semiconformal(path: &Path) -> Result<(Report, i32), CliError> {
    let fx = AlgebroidFile::load(path)?;
    let mut report = Report::new(&fixture_id(path), "semiconformal");

    let mut gate = Report::new("", "");
    run_axiom_checks(&mut gate, &fx);
    if gate.has_failures() {
        report.entries = gate.entries;
        return Ok((report, EXIT_CHECK_FAILED));
    }
    let g = fx
        .algebroid
        .as_ref()
        .ok_or_else(|| CliError::Precondition("fixture has no weight-1 structure".into()))?;

    let family = match solve_l1(g) {
        Ok(f) => f,
        Err(e) => {
            report.push_status(
                "semi.l1_family",
                Status::Fail,
                "affine solution family of the L(1) constraints",
                Some(e.to_string()),
            );
            return Ok((report, EXIT_PRECONDITION));
        }
    };
    let mut vals = vec![format!("family dimension {}", family.dim())];
    vals.extend(fmt_l1(&family.representative(), g));
    report.push_value(
        "semi.l1_family",
        "affine solution family of the L(1) constraints (canonical representative shown)",
        vals,
    );

    match try_context(&fx) {
        Err(reason) => {
            for id in ["semi.l1_pinned", "semi.self_duality_dim", "semi.heisenberg"] {
                report.skip(id, "", &format!("no Gorenstein data: {reason}"));
            }
            Ok((report, EXIT_OK))
        }
        Ok(ctx) => {
            let mut code = EXIT_OK;
            match pin_l1(&family, &ctx) {
                Ok(Pinned::Unique(map)) => {
                    report.push_value(
                        "semi.l1_pinned",
                        "unique member with B(1, L(1)u) = 0",
                        fmt_l1(&map, g),
                    );
                    report.push_value(
                        "semi.self_duality_dim",
                        "dim of base modulo the image of L(1)",
                        vec![ctx.self_duality_dim(&map).to_string()],
                    );
                }
                Ok(Pinned::NonUnique(fam)) => {
                    report.push_status(
                        "semi.l1_pinned",
                        Status::Indeterminate,
                        "gauge did not cut the family to a point",
                        Some(format!("remaining dimension {}", fam.dim())),
                    );
                }
                Err(e) => {
                    report.push_status(
                        "semi.l1_pinned",
                        Status::Fail,
                        "gauge constraints",
                        Some(e.to_string()),
                    );
                    code = EXIT_PRECONDITION;
                }
            }
            match heisenberg_search(&ctx) {
                Ok(w) => {
                    let bn = &g.b_names;
                    let mut vals = vec![
                        format!("g = {}", fmt_combo(&w.generator, bn)),
                        format!("g(1)g = {}*t + {}*1", fmt_q(&w.rho), fmt_q(&w.beta)),
                        format!("h' = {}", fmt_combo(&w.h_prime, bn)),
                        format!("beta = {}", fmt_q(&w.beta)),
                        format!("normalized: {}", w.normalized),
                    ];
                    if let Some(h) = w.normalized_h() {
                        vals.push(format!("h = {}", fmt_combo(&h, bn)));
                    }
                    report.push_value(
                        "semi.heisenberg",
                        "generator fixing t, with h'(0)h' = 0 and h'(1)h' = beta*1",
                        vals,
                    );
                }
                Err(e) => {
                    report.push_status(
                        "semi.heisenberg",
                        Status::Fail,
                        "Heisenberg-element construction",
                        Some(e.to_string()),
                    );
                    code = EXIT_PRECONDITION;
                }
            }
            Ok((report, code))
        }
    }
}

/// `mutate`: seeded single-coefficient perturbations; each case reports
/// whether some axiom checker caught it and which axiom ids failed.
pub fn cmd_mutate(path: &Path, seed: u64, count: usize) -> Result<(Report, i32), CliError> {
    let fx = AlgebroidFile::load(path)?;
    let mut report = Report::new(&fixture_id(path), "mutate");
    let g = fx
        .algebroid
        .as_ref()
        .ok_or_else(|| CliError::Precondition("fixture has no weight-1 structure".into()))?;

    let base = mutate::run_all_checks(g);
    if !base.passed() {
        report.push_check_report(&base);
        return Ok((report, EXIT_CHECK_FAILED));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sites = mutate::sites(g);
    let deltas = mutate::delta_pool();
    let mut caught = 0usize;
    for case in 0..count {
        let (site, delta) = mutate::draw(&mut rng, &sites, &deltas);
        let mut mutant = g.clone();
        mutate::apply(&mut mutant, site, &delta);
        let rep = mutate::run_all_checks(&mutant);
        let failed = rep.failed_ids();
        let desc = mutate::describe(g, site, &delta);
        if failed.is_empty() {
            report.push_status(
                &format!("mutate.case_{case:03}"),
                Status::Indeterminate,
                &desc,
                Some("uncaught-but-consistent: every axiom still holds exactly".into()),
            );
        } else {
            caught += 1;
            report.push_value(
                &format!("mutate.case_{case:03}"),
                &desc,
                vec![format!("caught by [{}]", failed.join(", "))],
            );
        }
    }
    report.push_value(
        "mutate.summary",
        "mutations caught by at least one axiom checker",
        vec![format!("{caught} of {count}")],
    );
    Ok((report, EXIT_OK))
}
