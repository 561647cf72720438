//! Invariant-form machinery over a Gorenstein base.
//!
//! A [`GorensteinContext`] packages an algebroid whose base algebra is
//! Artinian local with one-dimensional socle, together with a socle
//! generator `t`, the maximal ideal, and a nondegenerate symmetric invariant
//! form `B` on the base, gauge-fixed by `B(1, t) = 1`.
//!
//! On top of it live the derived objects:
//!
//! - the squared pairing `((u, v)) = B(u_1 v, t)` on `B` and its radical,
//!   which always contains `partial(A)` and is a two-sided Leibniz ideal
//!   when the anchor ideal is proper;
//! - `M = { u : u_0 t = 0 }` (codimension at most 1) and
//!   `Ann = { v : t . v = 0 }`;
//! - the weight-1 restriction of the contragredient pairing
//!   `<u|v> = -B(1, u_1 v + (L(1)u)_0 v)`; the defining series stops at the
//!   `i = 1` term because `L(1)^2` lands below weight 0 (see
//!   [`PAIRING_SERIES_TRUNCATION`]).

use crate::algebroid::VertexAlgebroid;
use crate::commalg::{fmt_subspace, gram_apply, Grading};
use crate::exactnum::{
    add_vec, fmt_combo, fmt_q, is_zero_vec, scale_vec, zero_vec, Matrix, Q, Subspace,
};
use crate::leibniz::IdealVerdict;
use crate::report::CheckReport;
use crate::semiconformal::{l1_constraint_residuals, LOneMap};
use num_traits::{One, Zero};

/// Index of the last nonvanishing term of the contragredient series at
/// weight 1: terms with `i > 1` involve `L(1)^i` of a weight-1 vector,
/// which lives below weight 0 and is zero.
pub const PAIRING_SERIES_TRUNCATION: usize = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormsError {
    #[error("base algebra is not Gorenstein local: {0}")]
    NotGorensteinBase(String),
    #[error("no grading available to synthesize an invariant form")]
    MissingGrading,
    #[error("invariant form is not unique: solution family has dimension {0}")]
    NonUniqueForm(usize),
    #[error("no invariant form satisfies the constraints")]
    NoForm,
    #[error("supplied or synthesized form is degenerate")]
    DegenerateForm,
    #[error("B(1, t) = 0: socle generator cannot be gauge-fixed")]
    UnitSoclePairingZero,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("L(1) map fails the semiconformal constraints: {0}")]
    InvalidLOne(String),
}

/// The anchor ideal `span{ pi(v)(a) : v in B, a in m }` with its properness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchorIdeal {
    pub subspace: Subspace,
    /// True when the ideal is strictly smaller than the base algebra.
    pub proper: bool,
}

/// Per-basis scalars of the action of `B` on the socle line.
#[derive(Clone, Debug)]
pub struct SocleAction {
    pub report: CheckReport,
    /// `pi(e_j)(t) = mu_j t`; `None` when the image leaves the line.
    pub scalars: Vec<Option<Q>>,
}

#[derive(Clone, Debug)]
pub struct GorensteinContext {
    pub algebroid: VertexAlgebroid,
    pub grading: Option<Grading>,
    /// Socle generator, gauge-fixed so that `B(1, t) = 1`.
    pub t: Vec<Q>,
    /// Gram matrix of the invariant form on the base algebra.
    pub form: Matrix,
    pub maximal_ideal: Subspace,
}

impl GorensteinContext {
    /// Builds a context, choosing the socle generator and synthesizing the
    /// form from the grading when they are not supplied, and gauge-fixing
    /// `t` so that `B(1, t) = 1`.
    pub fn new(
        algebroid: VertexAlgebroid,
        grading: Option<Grading>,
        t: Option<Vec<Q>>,
        form: Option<Matrix>,
    ) -> Result<Self, FormsError> {
        let a = &algebroid.algebra;
        let maximal_ideal = a.jacobson_radical();
        let t = match t {
            Some(t) => t,
            None => a
                .choose_t()
                .map_err(|e| FormsError::NotGorensteinBase(e.to_string()))?,
        };
        let form = match form {
            Some(f) => {
                assert_eq!((f.rows(), f.cols()), (a.dim, a.dim));
                f
            }
            None => synthesize_form(a, grading.as_ref().ok_or(FormsError::MissingGrading)?, &t)?,
        };
        if form.rank() != a.dim {
            return Err(FormsError::DegenerateForm);
        }
        let gauge = gram_apply(&form, &a.unit, &t);
        if gauge.is_zero() {
            return Err(FormsError::UnitSoclePairingZero);
        }
        let t = scale_vec(&gauge.recip(), &t);
        Ok(GorensteinContext {
            algebroid,
            grading,
            t,
            form,
            maximal_ideal,
        })
    }

    pub fn base(&self) -> &crate::commalg::CommAlgebra {
        &self.algebroid.algebra
    }

    /// `B(x, y)`.
    pub fn b(&self, x: &[Q], y: &[Q]) -> Q {
        gram_apply(&self.form, x, y)
    }

    /// The functional `eps(x) = B(1, x)`.
    pub fn eps(&self, x: &[Q]) -> Q {
        self.b(&self.base().unit, x)
    }

    /// Verifies every context invariant: form symmetry, nondegeneracy and
    /// invariance, the gauge `B(1, t) = 1`, that `t` spans the socle, that
    /// the stored maximal ideal is the Jacobson radical, locality of the
    /// base, and (when a grading is present) that `B` pairs only complementary
    /// degrees.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let a = self.base();
        let n = a.dim;

        if self.form.is_symmetric() {
            rep.pass("ctx.form_symmetric");
        } else {
            rep.fail("ctx.form_symmetric", String::new(), "form matrix is asymmetric".into());
        }
        if self.form.rank() == n {
            rep.pass("ctx.form_nondegenerate");
        } else {
            rep.fail(
                "ctx.form_nondegenerate",
                String::new(),
                format!("rank {} of {}", self.form.rank(), n),
            );
        }

        let mut invariant_ok = true;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.b(a.mul.at(i, j), &a.basis_vector(k));
                    let rhs = self.b(&a.basis_vector(i), a.mul.at(j, k));
                    if lhs != rhs {
                        invariant_ok = false;
                        rep.fail(
                            "ctx.form_invariant",
                            format!("({}, {}, {})", a.names[i], a.names[j], a.names[k]),
                            format!("B(xy,z) = {}, B(x,yz) = {}", fmt_q(&lhs), fmt_q(&rhs)),
                        );
                    }
                }
            }
        }
        if invariant_ok {
            rep.pass("ctx.form_invariant");
        }

        if self.eps(&self.t).is_one() {
            rep.pass("ctx.unit_socle_pairing");
        } else {
            rep.fail(
                "ctx.unit_socle_pairing",
                String::new(),
                format!("B(1,t) = {}", fmt_q(&self.eps(&self.t))),
            );
        }

        let socle = a.socle();
        if socle.dim() == 1 && socle.contains(&self.t) && !is_zero_vec(&self.t) {
            rep.pass("ctx.t_spans_socle");
        } else {
            rep.fail(
                "ctx.t_spans_socle",
                String::new(),
                format!("socle dim {}, t = {}", socle.dim(), fmt_combo(&self.t, &a.names)),
            );
        }

        if self.maximal_ideal == a.jacobson_radical() {
            rep.pass("ctx.maximal_ideal_is_radical");
        } else {
            rep.fail("ctx.maximal_ideal_is_radical", String::new(), "stored ideal differs".into());
        }

        match a.locality() {
            crate::commalg::Locality::Local => rep.pass("ctx.base_local"),
            other => rep.fail("ctx.base_local", String::new(), format!("{other:?}")),
        }

        match &self.grading {
            None => rep.skip("ctx.degree_pairing", "no grading attached".into()),
            Some(g) => {
                if let Err(e) = g.validate(a) {
                    rep.fail("ctx.degree_pairing", String::new(), e.to_string());
                } else {
                    let mut ok = true;
                    for i in 0..n {
                        for j in 0..n {
                            if g.degrees[i] + g.degrees[j] != g.top
                                && !self.form.at(i, j).is_zero()
                            {
                                ok = false;
                                rep.fail(
                                    "ctx.degree_pairing",
                                    format!("({}, {})", a.names[i], a.names[j]),
                                    format!(
                                        "degrees {} + {} != {} but B = {}",
                                        g.degrees[i],
                                        g.degrees[j],
                                        g.top,
                                        fmt_q(self.form.at(i, j))
                                    ),
                                );
                            }
                        }
                    }
                    if ok {
                        rep.pass("ctx.degree_pairing");
                    }
                }
            }
        }
        rep.finish()
    }

    /// `span{ pi(v)(a) : v in B-basis, a in m-basis }`, verified to be an
    /// ideal of the base algebra.
    pub fn ideal_a(&self) -> AnchorIdeal {
        let g = &self.algebroid;
        let n = g.a_dim();
        let mut vs = Vec::new();
        for j in 0..g.b_dim {
            let mut e = zero_vec(g.b_dim);
            e[j] = Q::one();
            for m in self.maximal_ideal.basis() {
                vs.push(g.anc(&e, &m));
            }
        }
        let subspace = Subspace::span(n, &vs);
        for x in 0..n {
            for gen in subspace.basis() {
                let prod = g.mul_a(&g.algebra.basis_vector(x), &gen);
                assert!(
                    subspace.contains(&prod),
                    "anchor image span must be an ideal of the base"
                );
            }
        }
        let proper = subspace.dim() < n;
        AnchorIdeal { subspace, proper }
    }

    /// When the anchor ideal is proper, every `pi(v)` maps the socle line to
    /// itself; the report carries the scalar for each basis vector.
    pub fn socle_action(&self) -> Result<SocleAction, FormsError> {
        if !self.ideal_a().proper {
            return Err(FormsError::PreconditionViolated(
                "anchor ideal equals the whole base algebra".to_string(),
            ));
        }
        let g = &self.algebroid;
        let mut rep = CheckReport::new();
        let mut scalars = Vec::new();
        let mut ok = true;
        for j in 0..g.b_dim {
            let mut e = zero_vec(g.b_dim);
            e[j] = Q::one();
            let image = g.anc(&e, &self.t);
            match scalar_multiple_of(&image, &self.t) {
                Some(mu) => {
                    rep.pass_with(
                        "socle_action.scalar",
                        format!("{} acts on t by {}", g.b_names[j], fmt_q(&mu)),
                    );
                    scalars.push(Some(mu));
                }
                None => {
                    ok = false;
                    rep.fail(
                        "socle_action.scalar",
                        g.b_names[j].clone(),
                        format!("image {} leaves the socle line", fmt_combo(&image, &g.algebra.names)),
                    );
                    scalars.push(None);
                }
            }
        }
        if ok {
            rep.pass("socle_action.preserves_line");
        } else {
            rep.fail(
                "socle_action.preserves_line",
                String::new(),
                "some basis vector moves t off its line".into(),
            );
        }
        Ok(SocleAction {
            report: rep.finish(),
            scalars,
        })
    }

    /// Gram matrix of the squared pairing `((u, v)) = B(u_1 v, t)` on `B`.
    pub fn double_form(&self) -> Matrix {
        let g = &self.algebroid;
        let m = g.b_dim;
        let mut gram = Matrix::zero(m, m);
        for i in 0..m {
            for j in 0..m {
                gram.set(i, j, self.b(g.pairing.at(i, j), &self.t));
            }
        }
        assert!(gram.is_symmetric(), "squared pairing must be symmetric");
        gram
    }

    /// Radical of the squared pairing.
    pub fn rad_double_form(&self) -> Subspace {
        self.double_form()
            .form_radical()
            .expect("double form is symmetric")
    }

    /// `M = { u : u_0 t = 0 }`, the kernel of the socle action.
    pub fn m_subspace(&self) -> Subspace {
        let g = &self.algebroid;
        let mut mat = Matrix::zero(g.a_dim(), g.b_dim);
        for j in 0..g.b_dim {
            let mut e = zero_vec(g.b_dim);
            e[j] = Q::one();
            let col = g.anc(&e, &self.t);
            for i in 0..g.a_dim() {
                mat.set(i, j, col[i].clone());
            }
        }
        mat.kernel()
    }

    /// `Ann(t_{-1}) = { v : t . v = 0 }`, the kernel of the module action of `t`.
    pub fn ann_t(&self) -> Subspace {
        self.action_of_t().kernel()
    }

    /// The module action of `t` on `B` as a matrix.
    fn action_of_t(&self) -> Matrix {
        let g = &self.algebroid;
        let mut mat = Matrix::zero(g.b_dim, g.b_dim);
        for j in 0..g.b_dim {
            let mut e = zero_vec(g.b_dim);
            e[j] = Q::one();
            let col = g.act(&self.t, &e);
            for i in 0..g.b_dim {
                mat.set(i, j, col[i].clone());
            }
        }
        mat
    }

    /// The matrix of `u -> u_{-1} t = t . u + partial(u_0 t)`.
    fn skew_transport_of_t(&self) -> Matrix {
        let g = &self.algebroid;
        let mut mat = Matrix::zero(g.b_dim, g.b_dim);
        for j in 0..g.b_dim {
            let mut e = zero_vec(g.b_dim);
            e[j] = Q::one();
            let col = add_vec(&g.act(&self.t, &e), &g.par(&g.anc(&e, &self.t)));
            for i in 0..g.b_dim {
                mat.set(i, j, col[i].clone());
            }
        }
        mat
    }

    /// Gram matrix of the weight-1 contragredient pairing
    /// `<u|v> = -B(1, u_1 v) + B(1, pi(v)(L(1)u))`.
    ///
    /// The supplied `L(1)` map is re-checked against its defining
    /// constraints first.
    pub fn pairing_v1(&self, l1: &LOneMap) -> Result<Matrix, FormsError> {
        let g = &self.algebroid;
        let residuals = l1_constraint_residuals(g, l1);
        if !residuals.is_empty() {
            return Err(FormsError::InvalidLOne(residuals[0].clone()));
        }
        let m = g.b_dim;
        let mut gram = Matrix::zero(m, m);
        for i in 0..m {
            let mut u = zero_vec(m);
            u[i] = Q::one();
            let l1u = l1.apply(&u);
            for j in 0..m {
                let mut v = zero_vec(m);
                v[j] = Q::one();
                let val = -self.eps(&g.pai(&u, &v)) + self.eps(&g.anc(&v, &l1u));
                gram.set(i, j, val);
            }
        }
        Ok(gram)
    }

    /// Dimension of `A / image(L(1))`, plus the check that the functional
    /// `eps` kills the image.
    pub fn self_duality_dim(&self, l1: &LOneMap) -> usize {
        let d = self_duality_dim(&self.algebroid, l1);
        for j in 0..self.algebroid.b_dim {
            let mut e = zero_vec(self.algebroid.b_dim);
            e[j] = Q::one();
            assert!(
                self.eps(&l1.apply(&e)).is_zero(),
                "eps must vanish on the image of L(1)"
            );
        }
        d
    }

    /// The orthogonality lemma suite for the weight-1 pairing. Checks, with
    /// witnesses:
    ///
    /// 1. `partial(A)` lies in the radical of the squared pairing, and that
    ///    radical is a two-sided Leibniz ideal;
    /// 2. `M` has codimension at most 1 and contains `partial(A)`;
    /// 3. `t_{-2} m` is orthogonal to all of `B` under `<.|.>`;
    /// 4. `M` is exactly the `<.|.>`-orthogonal complement of `partial(t)`;
    /// 5. the radical equals `{ u : u_{-1} t` orthogonal to `B }`;
    /// 6. when `L(1)B` lies in the maximal ideal, the radical equals
    ///    `W = { w : t.w` orthogonal to `B }` (vacuously true otherwise);
    /// 7. `Ann(t_{-1})` is a left Leibniz ideal;
    /// 8. `eps` kills the image of `L(1)`.
    pub fn perp_lemma_suite(&self, l1: &LOneMap) -> Result<CheckReport, FormsError> {
        let anchor_ideal = self.ideal_a();
        if !anchor_ideal.proper {
            return Err(FormsError::PreconditionViolated(
                "anchor ideal equals the whole base algebra".to_string(),
            ));
        }
        let g = &self.algebroid;
        let m = g.b_dim;
        let names = &g.b_names;
        let pairing = self.pairing_v1(l1)?;
        let mut rep = CheckReport::new();

        if pairing.is_symmetric() {
            rep.pass("perp.pairing_v1_symmetric");
        } else {
            rep.fail("perp.pairing_v1_symmetric", String::new(), "asymmetric Gram".into());
        }

        let rad = self.rad_double_form();
        let partial_image = g.partial_image();
        if rad.contains_subspace(&partial_image) {
            rep.pass("perp.rad_contains_partial_image");
        } else {
            rep.fail(
                "perp.rad_contains_partial_image",
                String::new(),
                format!(
                    "partial image {} not inside {}",
                    fmt_subspace(&partial_image, names),
                    fmt_subspace(&rad, names)
                ),
            );
        }
        match g.leibniz_of().ideal_check(&rad) {
            IdealVerdict::TwoSided => rep.pass("perp.rad_two_sided_ideal"),
            v => rep.fail("perp.rad_two_sided_ideal", String::new(), format!("{v:?}")),
        }

        let msub = self.m_subspace();
        if m - msub.dim() <= 1 {
            rep.pass_with("perp.m_codim_le_1", format!("codim {}", m - msub.dim()));
        } else {
            rep.fail("perp.m_codim_le_1", String::new(), format!("codim {}", m - msub.dim()));
        }
        if msub.contains_subspace(&partial_image) {
            rep.pass("perp.m_contains_partial_image");
        } else {
            rep.fail("perp.m_contains_partial_image", String::new(), String::new());
        }

        // 3. t(-2)a for a in the maximal ideal, against every basis vector.
        let v1_perp = pairing.kernel();
        let mut t2_ok = true;
        for a in self.maximal_ideal.basis() {
            let x = g.act(&a, &g.par(&self.t));
            if !v1_perp.contains(&x) {
                t2_ok = false;
                rep.fail(
                    "perp.socle_transport_orthogonal",
                    fmt_combo(&a, &g.algebra.names),
                    format!("t(-2)a = {} not orthogonal to B", fmt_combo(&x, names)),
                );
            }
        }
        if t2_ok {
            rep.pass("perp.socle_transport_orthogonal");
        }

        // 4. M = orthogonal complement of partial(t).
        let dt = g.par(&self.t);
        let mut row = Matrix::zero(1, m);
        for j in 0..m {
            let mut v = zero_vec(m);
            v[j] = Q::one();
            row.set(0, j, gram_apply(&pairing, &dt, &v));
        }
        let dt_perp = row.kernel();
        if dt_perp == msub {
            rep.pass("perp.m_equals_partial_t_perp");
        } else {
            rep.fail(
                "perp.m_equals_partial_t_perp",
                String::new(),
                format!(
                    "M = {}, perp = {}",
                    fmt_subspace(&msub, names),
                    fmt_subspace(&dt_perp, names)
                ),
            );
        }

        // 5. rad = { u : u(-1)t orthogonal to B }.
        let transported = pairing.mul(&self.skew_transport_of_t()).kernel();
        if transported == rad {
            rep.pass("perp.rad_equals_skew_transport_kernel");
        } else {
            rep.fail(
                "perp.rad_equals_skew_transport_kernel",
                String::new(),
                format!(
                    "rad = {}, kernel = {}",
                    fmt_subspace(&rad, names),
                    fmt_subspace(&transported, names)
                ),
            );
        }

        // 6. rad = W under the hypothesis L(1)B inside m.
        let l1_in_m = (0..m).all(|j| {
            let mut e = zero_vec(m);
            e[j] = Q::one();
            self.maximal_ideal.contains(&l1.apply(&e))
        });
        if l1_in_m {
            let w = pairing.mul(&self.action_of_t()).kernel();
            if w == rad {
                rep.pass("perp.rad_equals_w");
            } else {
                rep.fail(
                    "perp.rad_equals_w",
                    String::new(),
                    format!("rad = {}, W = {}", fmt_subspace(&rad, names), fmt_subspace(&w, names)),
                );
            }
        } else {
            rep.pass_with(
                "perp.rad_equals_w",
                "hypothesis L(1)B inside the maximal ideal does not hold; nothing asserted".into(),
            );
        }

        // 7. Ann(t_{-1}) is a left ideal.
        let ann = self.ann_t();
        match g.leibniz_of().ideal_check(&ann) {
            IdealVerdict::TwoSided | IdealVerdict::LeftOnly => rep.pass("perp.ann_t_left_ideal"),
            v => rep.fail("perp.ann_t_left_ideal", String::new(), format!("{v:?}")),
        }

        // 8. eps kills the image of L(1).
        let mut eps_ok = true;
        for j in 0..m {
            let mut e = zero_vec(m);
            e[j] = Q::one();
            let val = self.eps(&l1.apply(&e));
            if !val.is_zero() {
                eps_ok = false;
                rep.fail(
                    "perp.eps_kills_l1_image",
                    names[j].clone(),
                    format!("eps(L(1){}) = {}", names[j], fmt_q(&val)),
                );
            }
        }
        if eps_ok {
            rep.pass("perp.eps_kills_l1_image");
        }

        Ok(rep.finish())
    }
}

/// The scalar `s` with `x = s * base`, if one exists exactly.
fn scalar_multiple_of(x: &[Q], base: &[Q]) -> Option<Q> {
    if is_zero_vec(x) {
        return Some(Q::zero());
    }
    let lead = base.iter().position(|c| !c.is_zero())?;
    let s = &x[lead] / &base[lead];
    let diff: Vec<Q> = x
        .iter()
        .zip(base)
        .map(|(xi, bi)| xi - &s * bi)
        .collect();
    if is_zero_vec(&diff) {
        Some(s)
    } else {
        None
    }
}

/// `dim(A / image(L(1)))`.
pub fn self_duality_dim(algebroid: &VertexAlgebroid, l1: &LOneMap) -> usize {
    algebroid.a_dim() - l1.matrix().rank()
}

/// Solves for the invariant form of a graded Gorenstein base: symmetric,
/// invariant, `B(1, t) = 1`, and pairing only complementary degrees. Fails
/// unless the solution is unique.
pub fn synthesize_form(
    a: &crate::commalg::CommAlgebra,
    grading: &Grading,
    t: &[Q],
) -> Result<Matrix, FormsError> {
    grading
        .validate(a)
        .map_err(|e| FormsError::NotGorensteinBase(e.to_string()))?;
    let n = a.dim;
    let unknowns = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();

    // Symmetry.
    for i in 0..n {
        for j in 0..i {
            let mut row = zero_vec(unknowns);
            row[idx(i, j)] = Q::one();
            row[idx(j, i)] = -Q::one();
            rows.push(row);
            rhs.push(Q::zero());
        }
    }
    // Invariance: B(e_i e_j, e_l) = B(e_i, e_j e_l).
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut row = zero_vec(unknowns);
                for (k, c) in a.mul.at(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        row[idx(k, l)] = &row[idx(k, l)] + c;
                    }
                }
                for (k, c) in a.mul.at(j, l).iter().enumerate() {
                    if !c.is_zero() {
                        row[idx(i, k)] = &row[idx(i, k)] - c;
                    }
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                    rhs.push(Q::zero());
                }
            }
        }
    }
    // Degree pairing.
    for i in 0..n {
        for j in 0..n {
            if grading.degrees[i] + grading.degrees[j] != grading.top {
                let mut row = zero_vec(unknowns);
                row[idx(i, j)] = Q::one();
                rows.push(row);
                rhs.push(Q::zero());
            }
        }
    }
    // Gauge: B(1, t) = 1.
    {
        let mut row = zero_vec(unknowns);
        for (i, ui) in a.unit.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, tj) in t.iter().enumerate() {
                if !tj.is_zero() {
                    row[idx(i, j)] = &row[idx(i, j)] + ui * tj;
                }
            }
        }
        rows.push(row);
        rhs.push(Q::one());
    }

    let system = Matrix::from_rows(rows);
    let sol = system.solve_affine(&rhs).map_err(|_| FormsError::NoForm)?;
    if sol.dim() != 0 {
        return Err(FormsError::NonUniqueForm(sol.dim()));
    }
    let mut form = Matrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            form.set(i, j, sol.particular[idx(i, j)].clone());
        }
    }
    if form.rank() != n {
        return Err(FormsError::DegenerateForm);
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{q, qi};
    use crate::report::Status;
    use crate::samples::{
        anchor_zero, semisimple_l1_fixture, three_dim_noncyclic_fixture, trunc_poly,
        two_dim_cyclic_fixture, two_var_nilsquare, SampleFixture,
    };
    use crate::semiconformal::{pin_l1, solve_l1, Pinned};

    fn ctx_of(fx: &SampleFixture) -> GorensteinContext {
        GorensteinContext::new(
            fx.algebroid.clone(),
            fx.grading.clone(),
            fx.t.clone(),
            fx.form.clone(),
        )
        .expect("fixture context")
    }

    fn cyclic_ctx(alpha: i64) -> GorensteinContext {
        ctx_of(&two_dim_cyclic_fixture(&qi(alpha)))
    }

    fn noncyclic_ctx(rho: i64) -> GorensteinContext {
        ctx_of(&three_dim_noncyclic_fixture(&qi(rho)))
    }

    fn pinned_l1(ctx: &GorensteinContext) -> LOneMap {
        let family = solve_l1(&ctx.algebroid).expect("solvable");
        match pin_l1(&family, ctx).expect("pinnable") {
            Pinned::Unique(map) => map,
            Pinned::NonUnique(f) => panic!("expected a unique map, family dim {}", f.dim()),
        }
    }

    fn vq(xs: Vec<i64>) -> Vec<Q> {
        xs.into_iter().map(qi).collect()
    }

    #[test]
    fn contexts_validate_on_all_gorenstein_fixtures() {
        for alpha in [0i64, 1, 2, 3] {
            assert!(cyclic_ctx(alpha).validate().passed(), "alpha = {alpha}");
        }
        for rho in [-1i64, 0, 1] {
            assert!(noncyclic_ctx(rho).validate().passed(), "rho = {rho}");
        }
        assert!(ctx_of(&anchor_zero()).validate().passed());
    }

    #[test]
    fn gauge_fix_recovers_shifted_socle_generator() {
        // t = a - (alpha/2) 1 after the B(1,t) = 1 gauge, even when the
        // stored generator is scaled differently.
        let mut fx = two_dim_cyclic_fixture(&qi(1));
        fx.t = Some(vec![qi(1), qi(-2)]); // -2 (a - 1/2)
        let ctx = ctx_of(&fx);
        assert_eq!(ctx.t, vec![q(-1, 2), qi(1)]);
        assert!(ctx.validate().passed());
    }

    #[test]
    fn invariance_failure_is_reported() {
        // B(t,t) = 1 forces B(a,a) = 2, which breaks B(a*a, 1) = B(a, a*1).
        let mut fx = two_dim_cyclic_fixture(&qi(1));
        fx.form = Some(Matrix::from_rows(vec![
            vec![Q::zero(), Q::one()],
            vec![Q::one(), qi(2)],
        ]));
        let ctx = ctx_of(&fx);
        let rep = ctx.validate();
        assert_eq!(rep.status_of("ctx.form_invariant"), Some(Status::Fail));
    }

    #[test]
    fn anchor_ideal_of_cyclic_fixture_is_the_socle_line() {
        let ctx = cyclic_ctx(1);
        let ai = ctx.ideal_a();
        assert!(ai.proper);
        assert_eq!(ai.subspace, Subspace::span(2, &[ctx.t.clone()]));
    }

    #[test]
    fn anchor_ideal_of_noncyclic_fixture() {
        let ctx = noncyclic_ctx(1);
        let ai = ctx.ideal_a();
        assert!(ai.proper);
        assert_eq!(ai.subspace, Subspace::span(2, &[vq(vec![0, 1])]));
    }

    #[test]
    fn anchor_ideal_of_degenerate_fixture_is_zero() {
        let ctx = ctx_of(&anchor_zero());
        let ai = ctx.ideal_a();
        assert!(ai.proper);
        assert_eq!(ai.subspace.dim(), 0);
    }

    #[test]
    fn socle_action_scalars_cyclic() {
        let ctx = cyclic_ctx(1);
        let sa = ctx.socle_action().unwrap();
        assert!(sa.report.passed());
        assert_eq!(sa.scalars, vec![Some(qi(1)), Some(qi(0))]);
    }

    #[test]
    fn socle_action_scalars_noncyclic() {
        let ctx = noncyclic_ctx(1);
        let sa = ctx.socle_action().unwrap();
        assert!(sa.report.passed());
        assert_eq!(sa.scalars, vec![Some(qi(0)), Some(qi(1)), Some(qi(0))]);
    }

    #[test]
    fn double_form_gram_cyclic() {
        // ((b,b)) = alpha/2, all other entries zero.
        let ctx = cyclic_ctx(1);
        let gram = ctx.double_form();
        assert_eq!(
            gram,
            Matrix::from_rows(vec![
                vec![q(1, 2), Q::zero()],
                vec![Q::zero(), Q::zero()],
            ])
        );
    }

    #[test]
    fn double_form_gram_noncyclic() {
        // ((v,v)) = (1+rho) B(1,t); every pairing against u and w dies on t.
        let ctx = noncyclic_ctx(1);
        let gram = ctx.double_form();
        let mut expected = Matrix::zero(3, 3);
        expected.set(1, 1, qi(2));
        assert_eq!(gram, expected);
    }

    #[test]
    fn double_form_vanishes_on_partial_images_only_fixture() {
        let fx = crate::samples::partial_image_only();
        // Synthesize nothing: supply the hyperbolic form directly.
        let ctx = GorensteinContext::new(
            fx,
            None,
            Some(vq(vec![0, 1])),
            Some(Matrix::from_rows(vec![
                vec![Q::zero(), Q::one()],
                vec![Q::one(), Q::zero()],
            ])),
        )
        .unwrap();
        assert_eq!(ctx.double_form(), Matrix::zero(1, 1));
        assert_eq!(ctx.rad_double_form(), Subspace::full(1));
    }

    #[test]
    fn radical_table_cyclic_family() {
        // alpha != 0: the partial(t) line; alpha = 0: everything.
        for alpha in [1i64, 2, 3] {
            let ctx = cyclic_ctx(alpha);
            assert_eq!(
                ctx.rad_double_form(),
                Subspace::span(2, &[vq(vec![0, 1])]),
                "alpha = {alpha}"
            );
        }
        assert_eq!(cyclic_ctx(0).rad_double_form(), Subspace::full(2));
    }

    #[test]
    fn radical_table_noncyclic_family() {
        // 1 + rho != 0: span{u, w}; 1 + rho = 0: everything.
        let uw = Subspace::span(3, &[vq(vec![1, 0, 0]), vq(vec![0, 0, 1])]);
        assert_eq!(noncyclic_ctx(0).rad_double_form(), uw);
        assert_eq!(noncyclic_ctx(1).rad_double_form(), uw);
        assert_eq!(noncyclic_ctx(-1).rad_double_form(), Subspace::full(3));
    }

    #[test]
    fn m_subspace_tables() {
        for alpha in [0i64, 1, 2, 3] {
            assert_eq!(
                cyclic_ctx(alpha).m_subspace(),
                Subspace::span(2, &[vq(vec![0, 1])]),
                "alpha = {alpha}"
            );
        }
        let uw = Subspace::span(3, &[vq(vec![1, 0, 0]), vq(vec![0, 0, 1])]);
        for rho in [-1i64, 0, 1] {
            assert_eq!(noncyclic_ctx(rho).m_subspace(), uw, "rho = {rho}");
        }
        assert_eq!(ctx_of(&anchor_zero()).m_subspace(), Subspace::full(1));
    }

    #[test]
    fn annihilator_tables() {
        // t acts on b by (alpha/2 - 1) da, so Ann = everything iff alpha = 2.
        assert_eq!(
            cyclic_ctx(1).ann_t(),
            Subspace::span(2, &[vq(vec![0, 1])])
        );
        assert_eq!(cyclic_ctx(2).ann_t(), Subspace::full(2));
        assert_eq!(
            cyclic_ctx(0).ann_t(),
            Subspace::span(2, &[vq(vec![0, 1])])
        );
        // t = a acts only on v, by rho*w: the kernel is span{u, w} unless
        // rho = 0, in which case t kills everything.
        let uw = Subspace::span(3, &[vq(vec![1, 0, 0]), vq(vec![0, 0, 1])]);
        assert_eq!(noncyclic_ctx(1).ann_t(), uw);
        assert_eq!(noncyclic_ctx(-1).ann_t(), uw);
        assert_eq!(noncyclic_ctx(0).ann_t(), Subspace::full(3));
    }

    #[test]
    fn pairing_v1_gram_cyclic() {
        let ctx = cyclic_ctx(1);
        let l1 = pinned_l1(&ctx);
        let gram = ctx.pairing_v1(&l1).unwrap();
        assert_eq!(
            gram,
            Matrix::from_rows(vec![vec![qi(-1), qi(-1)], vec![qi(-1), qi(0)]])
        );
    }

    #[test]
    fn pairing_v1_gram_noncyclic() {
        let ctx = noncyclic_ctx(1);
        let l1 = pinned_l1(&ctx);
        let gram = ctx.pairing_v1(&l1).unwrap();
        assert_eq!(
            gram,
            Matrix::from_rows(vec![
                vec![qi(0), qi(-1), qi(0)],
                vec![qi(-1), qi(0), qi(-1)],
                vec![qi(0), qi(-1), qi(0)],
            ])
        );
    }

    #[test]
    fn pairing_v1_rejects_bad_l1() {
        let ctx = cyclic_ctx(1);
        let bad = LOneMap::new(Matrix::from_rows(vec![
            vec![Q::one(), Q::one()],
            vec![Q::zero(), Q::zero()],
        ]));
        assert!(matches!(
            ctx.pairing_v1(&bad),
            Err(FormsError::InvalidLOne(_))
        ));
    }

    #[test]
    fn perp_suite_passes_on_every_gorenstein_fixture() {
        for alpha in [0i64, 1, 2, 3] {
            let ctx = cyclic_ctx(alpha);
            let rep = ctx.perp_lemma_suite(&pinned_l1(&ctx)).unwrap();
            assert!(rep.passed(), "alpha = {alpha}:\n{rep}");
        }
        for rho in [-1i64, 0, 1] {
            let ctx = noncyclic_ctx(rho);
            let rep = ctx.perp_lemma_suite(&pinned_l1(&ctx)).unwrap();
            assert!(rep.passed(), "rho = {rho}:\n{rep}");
        }
        let ctx = ctx_of(&anchor_zero());
        let rep = ctx.perp_lemma_suite(&pinned_l1(&ctx)).unwrap();
        assert!(rep.passed(), "anchor zero:\n{rep}");
    }

    #[test]
    fn self_duality_dimensions() {
        let ctx = cyclic_ctx(1);
        assert_eq!(ctx.self_duality_dim(&pinned_l1(&ctx)), 1);
        let ctx = noncyclic_ctx(0);
        assert_eq!(ctx.self_duality_dim(&pinned_l1(&ctx)), 1);
        // The zero map leaves everything: dim A.
        assert_eq!(
            self_duality_dim(&ctx.algebroid, &LOneMap::zero(2, 3)),
            2
        );
    }

    #[test]
    fn synthesized_form_on_truncated_polynomials() {
        let (a, grading) = trunc_poly(3);
        let t = a.choose_t().unwrap();
        let form = synthesize_form(&a, &grading, &t).unwrap();
        // Antidiagonal: B(x^i, x^j) = 1 iff i + j = 3.
        for i in 0..4 {
            for j in 0..4 {
                let want = if i + j == 3 { Q::one() } else { Q::zero() };
                assert_eq!(form.at(i, j), &want, "({i}, {j})");
            }
        }
    }

    #[test]
    fn synthesized_form_matches_stored_noncyclic_form() {
        let fx = three_dim_noncyclic_fixture(&qi(1));
        let a = &fx.algebroid.algebra;
        let form = synthesize_form(
            a,
            fx.grading.as_ref().unwrap(),
            fx.t.as_ref().unwrap(),
        )
        .unwrap();
        assert_eq!(&form, fx.form.as_ref().unwrap());
    }

    #[test]
    fn synthesis_fails_off_gorenstein() {
        // Two socle directions leave B(1, -) underdetermined.
        let (a, grading) = two_var_nilsquare();
        let t = vq(vec![0, 1, 0]);
        assert!(matches!(
            synthesize_form(&a, &grading, &t),
            Err(FormsError::NonUniqueForm(_))
        ));
    }

    #[test]
    fn context_requires_gorenstein_base_when_t_missing() {
        let fx = semisimple_l1_fixture();
        let err = GorensteinContext::new(fx.algebroid, fx.grading, None, None);
        assert!(matches!(err, Err(FormsError::NotGorensteinBase(_))));
    }

    #[test]
    fn context_rejects_unpaired_socle_generator() {
        let mut fx = two_dim_cyclic_fixture(&qi(1));
        // A symmetric invariant nondegenerate form with B(1, t) = 0 does not
        // exist here; force the gauge error with a degenerate-free matrix
        // pairing t to nothing.
        fx.form = Some(Matrix::from_rows(vec![
            vec![Q::one(), q(1, 2)],
            vec![q(1, 2), q(1, 4)],
        ]));
        // That matrix is rank 1, so the degenerate error fires first.
        assert!(matches!(
            GorensteinContext::new(fx.algebroid, None, fx.t, fx.form),
            Err(FormsError::DegenerateForm)
        ));
    }
    #[test]
    fn double_form_is_invariant_under_the_bracket() {
        // ((u(0)v, w)) = ((u, v(0)w)) on all basis triples.
        for ctx in [cyclic_ctx(1), cyclic_ctx(3), noncyclic_ctx(0), noncyclic_ctx(1)] {
            let g = &ctx.algebroid;
            let gram = ctx.double_form();
            let m = g.b_dim;
            for i in 0..m {
                for j in 0..m {
                    for k in 0..m {
                        let mut eu = zero_vec(m);
                        eu[i] = Q::one();
                        let mut ev = zero_vec(m);
                        ev[j] = Q::one();
                        let mut ew = zero_vec(m);
                        ew[k] = Q::one();
                        let lhs = gram_apply(&gram, &g.bra(&eu, &ev), &ew);
                        let rhs = gram_apply(&gram, &eu, &g.bra(&ev, &ew));
                        assert_eq!(lhs, rhs, "triple ({i}, {j}, {k})");
                    }
                }
            }
        }
    }

}
