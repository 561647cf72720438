//! Solving for the raising operator `L(1): B -> A`, the Heisenberg-element
//! construction over a Gorenstein context, and commutation checks for the
//! induced loop-module action of the non-negative half of the Virasoro
//! algebra (spanned by `L(m)`, `m >= -1`).
//!
//! An `L(1)` map is *semiconformal-compatible* when it kills `partial(A)`
//! and satisfies the two derivation conditions
//!
//! ```text
//! L(1)[u, v]  = pi(u)(L(1)v) - pi(v)(L(1)u)
//! L(1)(a . b) = a * L(1)b + pi(b)(a)
//! ```
//!
//! All three families are linear in the matrix entries of `L(1)`, so the
//! full solution set is an affine subspace and is computed exactly.

use crate::algebroid::VertexAlgebroid;
use crate::commalg::Locality;
use crate::exactnum::{
    add_vec, fmt_combo, is_zero_vec, scale_vec, sqrt_q, sub_vec, zero_vec, AffineSpace, Matrix, Q,
};
use crate::forms::GorensteinContext;
use crate::report::CheckReport;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemiconformalError {
    /// The constraint system for `L(1)` is inconsistent.
    #[error("no semiconformal L(1) map exists for this algebroid")]
    NoSolution,
    /// Pinning constraints contradict the solution family.
    #[error("gauge constraints are inconsistent with the L(1) family")]
    Inconsistent,
    /// `M = B`: no vector scales the socle generator to itself.
    #[error("no generator: every weight-1 vector annihilates the socle generator")]
    NoGenerator,
    /// `g_1 g` does not lie in `span{1, t}`.
    #[error("self-pairing leaves span{{1, t}}: {0}")]
    NotInSpan(String),
    /// The unit coefficient of `g_1 g` vanishes, so no normalization exists.
    #[error("unit coefficient of the self-pairing is zero")]
    BetaZero,
    /// A loop-module index left the truncation window.
    #[error("loop index outside the window: {0}")]
    WindowOverflow(String),
}

/// A linear map `L(1): B -> A` stored as an `a_dim x b_dim` matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LOneMap {
    matrix: Matrix,
}

impl LOneMap {
    pub fn new(matrix: Matrix) -> Self {
        LOneMap { matrix }
    }

    pub fn zero(a_dim: usize, b_dim: usize) -> Self {
        LOneMap {
            matrix: Matrix::zero(a_dim, b_dim),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, u: &[Q]) -> Vec<Q> {
        self.matrix.mul_vec(u)
    }
}

/// Residual descriptions of the three constraint families at a concrete map;
/// empty means the map is semiconformal-compatible.
pub fn l1_constraint_residuals(g: &VertexAlgebroid, l1: &LOneMap) -> Vec<String> {
    let n = g.a_dim();
    let m = g.b_dim;
    let mut out = Vec::new();
    for i in 0..n {
        let da = g.par(&g.algebra.basis_vector(i));
        let r = l1.apply(&da);
        if !is_zero_vec(&r) {
            out.push(format!(
                "L(1) partial({}) = {}",
                g.algebra.names[i],
                fmt_combo(&r, &g.algebra.names)
            ));
        }
    }
    let bv = |j: usize| {
        let mut v = zero_vec(m);
        v[j] = Q::one();
        v
    };
    for i in 0..m {
        for j in 0..m {
            let lhs = l1.apply(&g.bra(&bv(i), &bv(j)));
            let rhs = sub_vec(
                &g.anc(&bv(i), &l1.apply(&bv(j))),
                &g.anc(&bv(j), &l1.apply(&bv(i))),
            );
            let r = sub_vec(&lhs, &rhs);
            if !is_zero_vec(&r) {
                out.push(format!(
                    "bracket condition at ({}, {}): residual {}",
                    g.b_names[i],
                    g.b_names[j],
                    fmt_combo(&r, &g.algebra.names)
                ));
            }
        }
    }
    for i in 0..n {
        let a = g.algebra.basis_vector(i);
        for j in 0..m {
            let lhs = l1.apply(&g.act(&a, &bv(j)));
            let rhs = add_vec(
                &g.mul_a(&a, &l1.apply(&bv(j))),
                &g.anc(&bv(j), &a),
            );
            let r = sub_vec(&lhs, &rhs);
            if !is_zero_vec(&r) {
                out.push(format!(
                    "action condition at ({}, {}): residual {}",
                    g.algebra.names[i],
                    g.b_names[j],
                    fmt_combo(&r, &g.algebra.names)
                ));
            }
        }
    }
    out
}

/// The affine family of semiconformal `L(1)` maps, remembering the linear
/// system so further gauge constraints can be appended.
#[derive(Clone, Debug)]
pub struct L1Family {
    a_dim: usize,
    b_dim: usize,
    system: Matrix,
    rhs: Vec<Q>,
    pub space: AffineSpace,
}

impl L1Family {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn unflatten(&self, flat: &[Q]) -> LOneMap {
        let mut m = Matrix::zero(self.a_dim, self.b_dim);
        for i in 0..self.a_dim {
            for j in 0..self.b_dim {
                m.set(i, j, flat[i * self.b_dim + j].clone());
            }
        }
        LOneMap::new(m)
    }

    /// The canonical member: all free parameters zero.
    pub fn representative(&self) -> LOneMap {
        self.unflatten(&self.space.particular)
    }

    /// All members reachable by setting one free parameter to 1.
    pub fn basis_members(&self) -> Vec<LOneMap> {
        self.space
            .homogeneous
            .basis()
            .iter()
            .map(|h| self.unflatten(&add_vec(&self.space.particular, h)))
            .collect()
    }

    pub fn contains(&self, l1: &LOneMap) -> bool {
        let mut flat = Vec::with_capacity(self.a_dim * self.b_dim);
        for i in 0..self.a_dim {
            flat.extend_from_slice(l1.matrix().row(i));
        }
        self.space.contains(&flat)
    }
}

/// Assembles all three constraint families into one linear system over the
/// `a_dim x b_dim` unknown entries and solves it exactly.
pub fn solve_l1(g: &VertexAlgebroid) -> Result<L1Family, SemiconformalError> {
    let n = g.a_dim();
    let m = g.b_dim;
    let unknowns = n * m;
    let idx = |p: usize, j: usize| p * m + j;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();

    // L(1) vanishes on the image of partial.
    for i in 0..n {
        let w = g.par(&g.algebra.basis_vector(i));
        if is_zero_vec(&w) {
            continue;
        }
        for r in 0..n {
            let mut row = zero_vec(unknowns);
            for (s, ws) in w.iter().enumerate() {
                row[idx(r, s)] = ws.clone();
            }
            rows.push(row);
            rhs.push(Q::zero());
        }
    }

    // Bracket condition on all basis pairs.
    for i in 0..m {
        for j in 0..m {
            let w = g.bracket.at(i, j);
            for r in 0..n {
                let mut row = zero_vec(unknowns);
                for (s, ws) in w.iter().enumerate() {
                    row[idx(r, s)] = &row[idx(r, s)] + ws;
                }
                for p in 0..n {
                    // - pi(e_i)(L1 e_j) + pi(e_j)(L1 e_i), component r
                    row[idx(p, j)] = &row[idx(p, j)] - &g.anchor.at(i, p)[r];
                    row[idx(p, i)] = &row[idx(p, i)] + &g.anchor.at(j, p)[r];
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                    rhs.push(Q::zero());
                }
            }
        }
    }

    // Action condition on all (A-basis, B-basis) pairs.
    for i in 0..n {
        for j in 0..m {
            let w = g.action.at(i, j);
            let constant = g.anc(
                &{
                    let mut v = zero_vec(m);
                    v[j] = Q::one();
                    v
                },
                &g.algebra.basis_vector(i),
            );
            for r in 0..n {
                let mut row = zero_vec(unknowns);
                for (s, ws) in w.iter().enumerate() {
                    row[idx(r, s)] = &row[idx(r, s)] + ws;
                }
                for p in 0..n {
                    row[idx(p, j)] = &row[idx(p, j)] - &g.algebra.mul.at(i, p)[r];
                }
                if !is_zero_vec(&row) || !constant[r].is_zero() {
                    rows.push(row);
                    rhs.push(constant[r].clone());
                }
            }
        }
    }

    if rows.is_empty() {
        rows.push(zero_vec(unknowns));
        rhs.push(Q::zero());
    }
    let system = Matrix::from_rows(rows);
    let space = system
        .solve_affine(&rhs)
        .map_err(|_| SemiconformalError::NoSolution)?;
    Ok(L1Family {
        a_dim: n,
        b_dim: m,
        system,
        rhs,
        space,
    })
}

/// Outcome of pinning a family by the gauge `eps(L(1)u) = 0`.
#[derive(Clone, Debug)]
pub enum Pinned {
    Unique(LOneMap),
    /// The gauge did not cut the family to a point.
    NonUnique(L1Family),
}

/// Intersects the family with `eps(L(1)e_j) = 0` for every basis vector of
/// `B`, where `eps = B(1, -)` comes from the context form.
pub fn pin_l1(
    family: &L1Family,
    ctx: &GorensteinContext,
) -> Result<Pinned, SemiconformalError> {
    let n = family.a_dim;
    let m = family.b_dim;
    let eps: Vec<Q> = (0..n)
        .map(|p| ctx.eps(&ctx.base().basis_vector(p)))
        .collect();
    let mut rows = family.system.row_vecs();
    let mut rhs = family.rhs.clone();
    for j in 0..m {
        let mut row = zero_vec(n * m);
        for p in 0..n {
            row[p * m + j] = eps[p].clone();
        }
        rows.push(row);
        rhs.push(Q::zero());
    }
    let system = Matrix::from_rows(rows);
    let space = system
        .solve_affine(&rhs)
        .map_err(|_| SemiconformalError::Inconsistent)?;
    let pinned = L1Family {
        a_dim: n,
        b_dim: m,
        system,
        rhs,
        space,
    };
    if pinned.dim() == 0 {
        Ok(Pinned::Unique(pinned.representative()))
    } else {
        Ok(Pinned::NonUnique(pinned))
    }
}

/// The Heisenberg-element data extracted from a Gorenstein context:
/// a generator `g` with `g_0 t = t`, the decomposition
/// `g_1 g = rho t + beta 1`, and `h' = g - (rho/2) partial(t)` satisfying
/// `h'_0 h' = 0` and `h'_1 h' = beta 1`.
///
/// `normalized` records whether `beta` is a square of a rational, in which
/// case `h = h' / sqrt(beta)` exists over the scalars and satisfies
/// `h_0 h = 0`, `h_1 h = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergWitness {
    pub generator: Vec<Q>,
    pub rho: Q,
    pub beta: Q,
    pub h_prime: Vec<Q>,
    pub normalized: bool,
}

impl HeisenbergWitness {
    /// `h' / sqrt(beta)` when the root is rational.
    pub fn normalized_h(&self) -> Option<Vec<Q>> {
        sqrt_q(&self.beta).map(|r| scale_vec(&r.recip(), &self.h_prime))
    }
}

/// Runs the Heisenberg construction: solve `g_0 t = t` (canonical
/// representative: free coordinates zero), decompose `g_1 g` against
/// `{1, t}`, and form `h'`. When the canonical representative's
/// self-pairing leaves `span{1, t}`, one linear correction step over the
/// solution coset is attempted before giving up.
pub fn heisenberg_search(
    ctx: &GorensteinContext,
) -> Result<HeisenbergWitness, SemiconformalError> {
    let g = &ctx.algebroid;
    let n = g.a_dim();
    let m = g.b_dim;
    let mut psi = Matrix::zero(n, m);
    for j in 0..m {
        let mut e = zero_vec(m);
        e[j] = Q::one();
        let col = g.anc(&e, &ctx.t);
        for i in 0..n {
            psi.set(i, j, col[i].clone());
        }
    }
    let coset = psi
        .solve_affine(&ctx.t)
        .map_err(|_| SemiconformalError::NoGenerator)?;
    let mut gen = coset.particular.clone();

    let span_t1 = |x: &[Q]| -> Option<(Q, Q)> {
        // x = beta * 1 + rho * t
        let mut mat = Matrix::zero(n, 2);
        for i in 0..n {
            mat.set(i, 0, ctx.base().unit[i].clone());
            mat.set(i, 1, ctx.t[i].clone());
        }
        mat.solve_affine(x)
            .ok()
            .map(|s| (s.particular[0].clone(), s.particular[1].clone()))
    };

    if span_t1(&g.pai(&gen, &gen)).is_none() {
        // One linear correction step over the coset: solve
        // [g, m] + [m, g] = -[g, g] for m, then re-verify exactly.
        let dirs = coset.homogeneous.basis();
        if !dirs.is_empty() {
            let gg = g.bra(&gen, &gen);
            let mut mat = Matrix::zero(m, dirs.len());
            for (k, d) in dirs.iter().enumerate() {
                let col = add_vec(&g.bra(&gen, d), &g.bra(d, &gen));
                for i in 0..m {
                    mat.set(i, k, col[i].clone());
                }
            }
            if let Ok(sol) = mat.solve_affine(&gg.iter().map(|c| -c.clone()).collect::<Vec<_>>()) {
                let mut corrected = gen.clone();
                for (k, c) in sol.particular.iter().enumerate() {
                    corrected = add_vec(&corrected, &scale_vec(c, &dirs[k]));
                }
                if span_t1(&g.pai(&corrected, &corrected)).is_some() {
                    gen = corrected;
                }
            }
        }
    }

    let gg = g.pai(&gen, &gen);
    let (beta, rho) = span_t1(&gg).ok_or_else(|| {
        SemiconformalError::NotInSpan(fmt_combo(&gg, &g.algebra.names))
    })?;

    let half_rho = &rho * crate::exactnum::q(1, 2);
    let h_prime = sub_vec(&gen, &scale_vec(&half_rho, &g.par(&ctx.t)));
    assert!(
        is_zero_vec(&g.bra(&h_prime, &h_prime)),
        "h' must bracket to zero with itself"
    );
    let expected = scale_vec(&beta, &ctx.base().unit);
    assert_eq!(
        g.pai(&h_prime, &h_prime),
        expected,
        "h' self-pairing must be beta * 1"
    );
    assert_eq!(
        g.anc(&h_prime, &ctx.t),
        ctx.t,
        "h' must fix the socle generator"
    );
    if beta.is_zero() {
        return Err(SemiconformalError::BetaZero);
    }
    let normalized = sqrt_q(&beta).is_some();
    Ok(HeisenbergWitness {
        generator: gen,
        rho,
        beta,
        h_prime,
        normalized,
    })
}

/// A two-weight module `U = U_0 + U_1` for the subalgebra spanned by
/// `L(0)` and `L(1)`: `L(0)` is 0 on `U_0` and 1 on `U_1`, `L(1)` is the
/// given matrix `U_1 -> U_0` extended by zero. The loop space
/// `U x t-powers` is truncated to a finite window of exponents.
#[derive(Clone, Debug)]
pub struct BModuleLoop {
    pub u0_dim: usize,
    pub u1_dim: usize,
    /// `u0_dim x u1_dim` matrix of `L(1)` on the top component.
    pub l1_action: Matrix,
    /// Inclusive window of allowed `t`-exponents.
    pub window: (i64, i64),
}

/// A finite formal sum of vectors tagged by `t`-exponents; the vector has
/// the `U_0` coordinates first, then the `U_1` coordinates.
pub type LoopElement = BTreeMap<i64, Vec<Q>>;

impl BModuleLoop {
    pub fn dim(&self) -> usize {
        self.u0_dim + self.u1_dim
    }

    pub fn singleton(&self, basis_index: usize, n: i64) -> LoopElement {
        let mut v = zero_vec(self.dim());
        v[basis_index] = Q::one();
        let mut e = LoopElement::new();
        e.insert(n, v);
        e
    }

    fn in_window(&self, n: i64) -> bool {
        self.window.0 <= n && n <= self.window.1
    }
}

/// Applies `L(mode)` to a formal sum:
///
/// ```text
/// L(m)(u x t^n) = -(m+n+1) (u x t^(m+n)) + (m+1) (L(0)u x t^(m+n))
///                 + m(m+1)/2 (L(1)u x t^(m+n-1))
/// ```
///
/// Landing outside the window with a nonzero term is an error; nothing is
/// ever silently truncated.
pub fn loop_virasoro(
    module: &BModuleLoop,
    mode: i64,
    elem: &LoopElement,
) -> Result<LoopElement, SemiconformalError> {
    assert!(mode >= -1, "only modes >= -1 act on the loop module");
    let (d0, d1) = (module.u0_dim, module.u1_dim);
    let mut out = LoopElement::new();
    let mut add_term = |n: i64, v: Vec<Q>| -> Result<(), SemiconformalError> {
        if is_zero_vec(&v) {
            return Ok(());
        }
        if !module.in_window(n) {
            return Err(SemiconformalError::WindowOverflow(format!(
                "exponent {n} outside [{}, {}]",
                module.window.0, module.window.1
            )));
        }
        let slot = out.entry(n).or_insert_with(|| zero_vec(d0 + d1));
        *slot = add_vec(slot, &v);
        Ok(())
    };

    let m = mode;
    for (&n, vec) in elem {
        if is_zero_vec(vec) {
            continue;
        }
        let w0 = &vec[..d0];
        let w1 = &vec[d0..];
        // -(m+n+1) u  +  (m+1) L(0)u, both at exponent m+n.
        let c_all = crate::exactnum::qi(-(m + n + 1));
        let c_l0 = crate::exactnum::qi(m + 1);
        let mut at_mn = zero_vec(d0 + d1);
        for (i, x) in w0.iter().enumerate() {
            at_mn[i] = &c_all * x;
        }
        for (i, x) in w1.iter().enumerate() {
            at_mn[d0 + i] = &c_all * x + &c_l0 * x;
        }
        add_term(m + n, at_mn)?;
        // m(m+1)/2 L(1)u at exponent m+n-1.
        let c_l1 = crate::exactnum::q(m * (m + 1), 2);
        if !c_l1.is_zero() && !is_zero_vec(w1) {
            let image = module.l1_action.mul_vec(w1);
            let mut at_mn1 = zero_vec(d0 + d1);
            for (i, x) in image.iter().enumerate() {
                at_mn1[i] = &c_l1 * x;
            }
            add_term(m + n - 1, at_mn1)?;
        }
    }
    out.retain(|_, v| !is_zero_vec(v));
    Ok(out)
}

fn scale_elem(c: &Q, e: &LoopElement) -> LoopElement {
    if c.is_zero() {
        return LoopElement::new();
    }
    e.iter().map(|(&n, v)| (n, scale_vec(c, v))).collect()
}

fn sub_elem(a: &LoopElement, b: &LoopElement) -> LoopElement {
    let mut out = a.clone();
    for (&n, v) in b {
        let slot = out.entry(n).or_insert_with(|| zero_vec(v.len()));
        *slot = sub_vec(slot, v);
    }
    out.retain(|_, v| !is_zero_vec(v));
    out
}

/// Verifies `[L(p), L(q)] = (p - q) L(p+q)` on every basis vector and every
/// safe exponent, for `-1 <= p, q <= max_mode`. The safe exponent range is
/// chosen so no intermediate term can overflow the window.
pub fn virasoro_commutator_check(
    module: &BModuleLoop,
    max_mode: i64,
) -> Result<CheckReport, SemiconformalError> {
    virasoro_commutator_check_with(module, max_mode, loop_virasoro)
}

/// Same commutator verification, but against an arbitrary action; used to
/// show the check fails (with a witness) on a corrupted action.
pub fn virasoro_commutator_check_with<F>(
    module: &BModuleLoop,
    max_mode: i64,
    apply: F,
) -> Result<CheckReport, SemiconformalError>
where
    F: Fn(&BModuleLoop, i64, &LoopElement) -> Result<LoopElement, SemiconformalError>,
{
    let (lo, hi) = module.window;
    let n_lo = lo + 4;
    let n_hi = hi - 2 * max_mode.max(0);
    if n_lo > n_hi {
        return Err(SemiconformalError::WindowOverflow(format!(
            "window [{lo}, {hi}] too small for modes up to {max_mode}"
        )));
    }
    let mut rep = CheckReport::new();
    let mut ok = true;
    for p in -1..=max_mode {
        for q in -1..=max_mode {
            for b in 0..module.dim() {
                for n in n_lo..=n_hi {
                    let x = module.singleton(b, n);
                    let lq = apply(module, q, &x)?;
                    let lp = apply(module, p, &x)?;
                    let lhs = sub_elem(&apply(module, p, &lq)?, &apply(module, q, &lp)?);
                    let rhs = if p == q {
                        LoopElement::new()
                    } else {
                        scale_elem(&crate::exactnum::qi(p - q), &apply(module, p + q, &x)?)
                    };
                    let diff = sub_elem(&lhs, &rhs);
                    if !diff.is_empty() {
                        ok = false;
                        rep.fail(
                            "virplus.commutator",
                            format!("(p={p}, q={q}, basis {b}, n={n})"),
                            format!("{} nonzero exponents in the residual", diff.len()),
                        );
                    }
                }
            }
        }
    }
    if ok {
        rep.pass("virplus.commutator");
    }
    Ok(rep.finish())
}

/// Locality of the base algebra together with the structural consequence it
/// carries for the ambient graded algebra.
#[derive(Clone, Debug)]
pub struct IndecomposabilityVerdict {
    pub locality: Locality,
    pub note: String,
}

/// Reports whether the base algebra is local, with the standard equivalence
/// note: for a semiconformal ambient algebra, locality of the weight-0 part
/// is equivalent to indecomposability of the whole.
pub fn indecomposability_report(g: &VertexAlgebroid) -> IndecomposabilityVerdict {
    let locality = g.algebra.locality();
    let note = match &locality {
        Locality::Local => {
            "weight-0 algebra is local: a semiconformal ambient algebra is indecomposable"
                .to_string()
        }
        Locality::NotLocal { idempotent } => format!(
            "weight-0 algebra splits at idempotent {}: a semiconformal ambient algebra is decomposable",
            fmt_combo(idempotent, &g.algebra.names)
        ),
        Locality::IndeterminateNonSplit => {
            "weight-0 algebra has a semisimple quotient of dimension > 1 but no rational idempotent was found; locality is indeterminate over the rationals"
                .to_string()
        }
    };
    IndecomposabilityVerdict { locality, note }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::q;
    use crate::exactnum::qi;
    use crate::forms::GorensteinContext;
    use crate::samples::{
        anchor_zero, partial_image_only, split_plane, three_dim_noncyclic_fixture, trivial_over,
        two_dim_cyclic_fixture, SampleFixture,
    };
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn ctx_of(fx: &SampleFixture) -> GorensteinContext {
        GorensteinContext::new(
            fx.algebroid.clone(),
            fx.grading.clone(),
            fx.t.clone(),
            fx.form.clone(),
        )
        .expect("fixture context")
    }

    fn l1_from(rows: Vec<Vec<Q>>) -> LOneMap {
        LOneMap::new(Matrix::from_rows(rows))
    }

    #[test]
    fn family_shape_for_cyclic_fixtures() {
        for alpha in [0i64, 1, 2, 3] {
            let fx = two_dim_cyclic_fixture(&qi(alpha));
            let family = solve_l1(&fx.algebroid).unwrap();
            assert_eq!(family.dim(), 1, "alpha = {alpha}");
            // Every member satisfies L(1)b = (-alpha*s/2 - 1) 1 + s a and
            // L(1)da = 0; probe the parametrization at s = 0, 1, -2.
            for s in [0i64, 1, -2] {
                let s = qi(s);
                let member = l1_from(vec![
                    vec![q(-1, 2) * &qi(alpha) * &s - qi(1), Q::zero()],
                    vec![s.clone(), Q::zero()],
                ]);
                assert!(
                    family.contains(&member),
                    "alpha = {alpha}, s = {s}"
                );
                assert!(l1_constraint_residuals(&fx.algebroid, &member).is_empty());
            }
            // And nothing off the line is a member.
            let off = l1_from(vec![vec![qi(-1), Q::one()], vec![Q::zero(), Q::zero()]]);
            assert!(!family.contains(&off));
        }
    }

    #[test]
    fn family_shape_for_noncyclic_fixtures() {
        for rho in [-1i64, 0, 1] {
            let fx = three_dim_noncyclic_fixture(&qi(rho));
            let family = solve_l1(&fx.algebroid).unwrap();
            assert_eq!(family.dim(), 1, "rho = {rho}");
            // L(1)u = 0, L(1)w = 0, L(1)v = -1 + s a.
            for s in [0i64, 3] {
                let member = l1_from(vec![
                    vec![Q::zero(), qi(-1), Q::zero()],
                    vec![Q::zero(), qi(s), Q::zero()],
                ]);
                assert!(family.contains(&member), "rho = {rho}, s = {s}");
            }
        }
    }

    #[test]
    fn every_family_member_satisfies_the_constraints() {
        let fx = two_dim_cyclic_fixture(&qi(1));
        let family = solve_l1(&fx.algebroid).unwrap();
        assert!(l1_constraint_residuals(&fx.algebroid, &family.representative()).is_empty());
        for member in family.basis_members() {
            assert!(l1_constraint_residuals(&fx.algebroid, &member).is_empty());
        }
    }

    #[test]
    fn forced_zero_map_on_partial_image_fixture() {
        let g = partial_image_only();
        let family = solve_l1(&g).unwrap();
        assert_eq!(family.dim(), 0);
        assert_eq!(family.representative(), LOneMap::zero(2, 1));
    }

    #[test]
    fn pinning_cuts_cyclic_family_to_minus_one() {
        let fx = two_dim_cyclic_fixture(&qi(1));
        let ctx = ctx_of(&fx);
        let family = solve_l1(&fx.algebroid).unwrap();
        match pin_l1(&family, &ctx).unwrap() {
            Pinned::Unique(map) => {
                assert_eq!(
                    map,
                    l1_from(vec![vec![qi(-1), Q::zero()], vec![Q::zero(), Q::zero()]])
                );
            }
            Pinned::NonUnique(f) => panic!("expected unique, dim {}", f.dim()),
        }
    }

    #[test]
    fn pinning_cuts_noncyclic_family_to_minus_one() {
        let fx = three_dim_noncyclic_fixture(&qi(0));
        let ctx = ctx_of(&fx);
        let family = solve_l1(&fx.algebroid).unwrap();
        match pin_l1(&family, &ctx).unwrap() {
            Pinned::Unique(map) => {
                assert_eq!(
                    map,
                    l1_from(vec![
                        vec![Q::zero(), qi(-1), Q::zero()],
                        vec![Q::zero(), Q::zero(), Q::zero()],
                    ])
                );
            }
            Pinned::NonUnique(f) => panic!("expected unique, dim {}", f.dim()),
        }
    }

    #[test]
    fn pinning_a_point_family_returns_it_unchanged() {
        let g = partial_image_only();
        let ctx = GorensteinContext::new(
            g.clone(),
            None,
            Some(vec![Q::zero(), Q::one()]),
            Some(Matrix::from_rows(vec![
                vec![Q::zero(), Q::one()],
                vec![Q::one(), Q::zero()],
            ])),
        )
        .unwrap();
        let family = solve_l1(&g).unwrap();
        match pin_l1(&family, &ctx).unwrap() {
            Pinned::Unique(map) => assert_eq!(map, LOneMap::zero(2, 1)),
            Pinned::NonUnique(_) => panic!("expected unique"),
        }
    }

    #[test]
    fn heisenberg_on_cyclic_alpha_one() {
        let ctx = ctx_of(&two_dim_cyclic_fixture(&qi(1)));
        let w = heisenberg_search(&ctx).unwrap();
        assert_eq!(w.generator, vec![Q::one(), Q::zero()]); // g = b
        assert_eq!(w.rho, qi(1));
        assert_eq!(w.beta, q(1, 2));
        assert_eq!(w.h_prime, vec![Q::one(), q(-1, 2)]); // b - da/2
        assert!(!w.normalized); // 1/2 is not a rational square
        assert_eq!(w.normalized_h(), None);
    }

    #[test]
    fn heisenberg_on_noncyclic_rho_zero_fully_normalizes() {
        let fx = three_dim_noncyclic_fixture(&qi(0));
        let ctx = ctx_of(&fx);
        let w = heisenberg_search(&ctx).unwrap();
        assert_eq!(w.generator, vec![Q::zero(), Q::one(), Q::zero()]); // g = v
        assert_eq!(w.rho, qi(0));
        assert_eq!(w.beta, qi(1));
        assert!(w.normalized);
        let h = w.normalized_h().unwrap();
        assert_eq!(h, w.h_prime);
        // h(0)h = 0 and h(1)h = 1 exactly.
        let g = &fx.algebroid;
        assert!(is_zero_vec(&g.bra(&h, &h)));
        assert_eq!(g.pai(&h, &h), g.algebra.unit);
    }

    #[test]
    fn heisenberg_beta_zero_cases() {
        // alpha = 0: g(1)g = t exactly, no unit part.
        let ctx = ctx_of(&two_dim_cyclic_fixture(&qi(0)));
        assert_eq!(heisenberg_search(&ctx), Err(SemiconformalError::BetaZero));
        // rho = -1: v(1)v = 0.
        let ctx = ctx_of(&three_dim_noncyclic_fixture(&qi(-1)));
        assert_eq!(heisenberg_search(&ctx), Err(SemiconformalError::BetaZero));
    }

    #[test]
    fn heisenberg_requires_a_generator() {
        let ctx = ctx_of(&anchor_zero());
        assert_eq!(heisenberg_search(&ctx), Err(SemiconformalError::NoGenerator));
    }

    #[test]
    fn heisenberg_beta_on_remaining_fixtures() {
        // alpha = 2: beta = 1, normalized, h = b - da/2.
        let ctx = ctx_of(&two_dim_cyclic_fixture(&qi(2)));
        let w = heisenberg_search(&ctx).unwrap();
        assert_eq!(w.beta, qi(1));
        assert!(w.normalized);
        // rho = 1: beta = 2, not a rational square.
        let ctx = ctx_of(&three_dim_noncyclic_fixture(&qi(1)));
        let w = heisenberg_search(&ctx).unwrap();
        assert_eq!(w.beta, qi(2));
        assert!(!w.normalized);
    }

    fn sample_module() -> BModuleLoop {
        // U0 = span{a}, U1 = span{u}, L(1)u = a.
        BModuleLoop {
            u0_dim: 1,
            u1_dim: 1,
            l1_action: Matrix::from_rows(vec![vec![Q::one()]]),
            window: (-12, 12),
        }
    }

    #[test]
    fn loop_action_spec_values() {
        let m = sample_module();
        // L(-1)(u0 x t^0) = 0: all three coefficients vanish.
        let x = m.singleton(0, 0);
        assert_eq!(loop_virasoro(&m, -1, &x).unwrap(), LoopElement::new());
        // L(0)(u1 x t^-1) = u1 x t^-1.
        let x = m.singleton(1, -1);
        assert_eq!(loop_virasoro(&m, 0, &x).unwrap(), x);
        // L(1)(u1 x t^0) = -2(u1 x t) + 2(u1 x t) + (a x t^0) = a x t^0.
        let x = m.singleton(1, 0);
        assert_eq!(loop_virasoro(&m, 1, &x).unwrap(), m.singleton(0, 0));
    }

    #[test]
    fn loop_action_window_overflow_is_an_error() {
        let m = sample_module();
        let x = m.singleton(0, 12);
        assert!(matches!(
            loop_virasoro(&m, 1, &x),
            Err(SemiconformalError::WindowOverflow(_))
        ));
        // A term with zero coefficient never overflows: L(-1) at the bottom
        // edge only writes to m+n = n-1.
        let x = m.singleton(1, -12);
        assert!(loop_virasoro(&m, 0, &x).is_ok());
    }

    #[test]
    fn commutators_hold_on_seeded_random_modules() {
        let mut rng = StdRng::seed_from_u64(4711);
        for case in 0..20 {
            let u0 = rng.gen_range(1usize..=2);
            let u1 = rng.gen_range(1usize..=2);
            let entries: Vec<Q> = (0..u0 * u1)
                .map(|_| q(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2)))
                .collect();
            let m = BModuleLoop {
                u0_dim: u0,
                u1_dim: u1,
                l1_action: Matrix::new(u0, u1, entries),
                window: (-12, 12),
            };
            let rep = virasoro_commutator_check(&m, 4).unwrap();
            assert!(rep.passed(), "case {case}");
        }
    }

    #[test]
    fn commutators_pass_without_a_top_component() {
        let m = BModuleLoop {
            u0_dim: 2,
            u1_dim: 0,
            l1_action: Matrix::zero(2, 0),
            window: (-12, 12),
        };
        assert!(virasoro_commutator_check(&m, 4).unwrap().passed());
    }

    #[test]
    fn corrupted_action_fails_with_witness() {
        let m = sample_module();
        // A uniform rescaling of the L(1) term would still satisfy the
        // commutators (it is a rescaled module), so corrupt a single mode:
        // double the L(1)-term of L(2) only.
        let corrupted = |module: &BModuleLoop,
                         mode: i64,
                         elem: &LoopElement|
         -> Result<LoopElement, SemiconformalError> {
            let mut out = loop_virasoro(module, mode, elem)?;
            if mode == 2 {
                let extra_coeff = q(mode * (mode + 1), 2);
                for (&n, vec) in elem {
                    let w1 = &vec[module.u0_dim..];
                    if is_zero_vec(w1) {
                        continue;
                    }
                    let image = module.l1_action.mul_vec(w1);
                    let slot = out
                        .entry(mode + n - 1)
                        .or_insert_with(|| zero_vec(module.dim()));
                    for (i, x) in image.iter().enumerate() {
                        slot[i] = &slot[i] + &extra_coeff * x;
                    }
                }
            }
            out.retain(|_, v| !is_zero_vec(v));
            Ok(out)
        };
        let rep = virasoro_commutator_check_with(&m, 4, corrupted).unwrap();
        assert!(!rep.passed());
        assert!(rep.failures().next().unwrap().witness.is_some());
    }

    #[test]
    fn indecomposability_notes() {
        let local = two_dim_cyclic_fixture(&qi(1)).algebroid;
        assert!(matches!(
            indecomposability_report(&local).locality,
            Locality::Local
        ));
        let split = trivial_over(split_plane());
        assert!(matches!(
            indecomposability_report(&split).locality,
            Locality::NotLocal { .. }
        ));
        let nonsplit = trivial_over(crate::samples::nonsplit_quadratic());
        assert!(matches!(
            indecomposability_report(&nonsplit).locality,
            Locality::IndeterminateNonSplit
        ));
    }
    #[test]
    fn successful_witness_lies_outside_the_radical() {
        use crate::commalg::gram_apply;
        for fx in [
            two_dim_cyclic_fixture(&qi(1)),
            two_dim_cyclic_fixture(&qi(2)),
            two_dim_cyclic_fixture(&qi(3)),
            three_dim_noncyclic_fixture(&qi(0)),
            three_dim_noncyclic_fixture(&qi(1)),
        ] {
            let ctx = ctx_of(&fx);
            let w = heisenberg_search(&ctx).expect("nonzero beta on these fixtures");
            let rad = ctx.rad_double_form();
            assert!(!rad.contains(&w.generator), "g must leave the radical");
            // When B(t, t) = 0 the squared pairing of g recovers beta.
            if ctx.b(&ctx.t, &ctx.t) == Q::zero() {
                let gram = ctx.double_form();
                assert_eq!(gram_apply(&gram, &w.generator, &w.generator), w.beta);
            }
        }
    }

}
