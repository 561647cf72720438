//! Seeded single-coefficient mutation of a fixture's structure constants,
//! and the combined checker run that decides whether a mutation is caught.

use rand::Rng;
use valab_core::algebroid::VertexAlgebroid;
use valab_core::exactnum::{fmt_q, q, Q};
use valab_core::report::CheckReport;

/// One mutable coefficient of the structure data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Site {
    Mul(usize, usize, usize),
    Partial(usize, usize),
    Action(usize, usize, usize),
    Bracket(usize, usize, usize),
    Anchor(usize, usize, usize),
    Pairing(usize, usize, usize),
}

/// Every coefficient site of the fixture, in a fixed deterministic order.
pub fn sites(g: &VertexAlgebroid) -> Vec<Site> {
    let n = g.a_dim();
    let m = g.b_dim;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.push(Site::Mul(i, j, k));
            }
        }
    }
    for i in 0..n {
        for j in 0..m {
            out.push(Site::Partial(i, j));
        }
    }
    for i in 0..n {
        for j in 0..m {
            for k in 0..m {
                out.push(Site::Action(i, j, k));
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                out.push(Site::Bracket(i, j, k));
            }
        }
    }
    for i in 0..m {
        for j in 0..n {
            for k in 0..n {
                out.push(Site::Anchor(i, j, k));
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..n {
                out.push(Site::Pairing(i, j, k));
            }
        }
    }
    out
}

pub fn apply(g: &mut VertexAlgebroid, site: Site, delta: &Q) {
    match site {
        Site::Mul(i, j, k) => {
            let e = g.algebra.mul.entry_mut(i, j, k);
            *e = &*e + delta;
        }
        Site::Partial(i, j) => {
            let v = g.partial.at(i, j) + delta;
            g.partial.set(i, j, v);
        }
        Site::Action(i, j, k) => {
            let e = g.action.entry_mut(i, j, k);
            *e = &*e + delta;
        }
        Site::Bracket(i, j, k) => {
            let e = g.bracket.entry_mut(i, j, k);
            *e = &*e + delta;
        }
        Site::Anchor(i, j, k) => {
            let e = g.anchor.entry_mut(i, j, k);
            *e = &*e + delta;
        }
        Site::Pairing(i, j, k) => {
            let e = g.pairing.entry_mut(i, j, k);
            *e = &*e + delta;
        }
    }
}

pub fn describe(g: &VertexAlgebroid, site: Site, delta: &Q) -> String {
    let an = |i: usize| g.algebra.names[i].clone();
    let bn = |i: usize| g.b_names[i].clone();
    let (tensor, coords) = match site {
        Site::Mul(i, j, k) => ("mul", format!("({}, {}; {})", an(i), an(j), an(k))),
        Site::Partial(i, j) => ("partial", format!("({}; {})", an(i), bn(j))),
        Site::Action(i, j, k) => ("action", format!("({}, {}; {})", an(i), bn(j), bn(k))),
        Site::Bracket(i, j, k) => ("bracket", format!("({}, {}; {})", bn(i), bn(j), bn(k))),
        Site::Anchor(i, j, k) => ("anchor", format!("({}, {}; {})", bn(i), an(j), an(k))),
        Site::Pairing(i, j, k) => ("pairing", format!("({}, {}; {})", bn(i), bn(j), an(k))),
    };
    format!("{tensor}{coords} += {}", fmt_q(delta))
}

/// The full battery: base-algebra laws, the Leibniz identity of the bracket,
/// and all three algebroid suites, merged into one report.
pub fn run_all_checks(g: &VertexAlgebroid) -> CheckReport {
    let mut rep = CheckReport::new();
    rep.merge(g.algebra.check());
    rep.merge(g.leibniz_of().check());
    rep.merge(g.check_truncated_conformal());
    rep.merge(g.check_vertex_algebroid());
    rep.merge(g.check_compatibility());
    rep.finish()
}

/// The nonzero perturbation magnitudes used by the harness.
pub fn delta_pool() -> Vec<Q> {
    vec![q(1, 1), q(-1, 1), q(1, 2), q(-1, 2), q(2, 1), q(-2, 1)]
}

/// Draws one (site, delta) pair.
pub fn draw<R: Rng>(rng: &mut R, sites: &[Site], deltas: &[Q]) -> (Site, Q) {
    let s = sites[rng.gen_range(0..sites.len())];
    let d = deltas[rng.gen_range(0..deltas.len())].clone();
    (s, d)
}
