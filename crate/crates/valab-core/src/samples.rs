//! Constructors for the regression corpus: the algebras and algebroids the
//! test suite and the shipped fixture files are built from.
//!
//! The two parametric families:
//!
//! - [`two_dim_cyclic`]: base `A = span{1, a}` with `a*a = alpha*a - (alpha^2/4)*1`
//!   and `B = span{b, da}` generated by a single element `b` with
//!   `[b,b] = da/2`; the parameter `alpha` is the linear coefficient of `a*a`.
//! - [`three_dim_noncyclic`]: base `A = span{1, a}` with `a*a = 0` and
//!   `B = span{u, v, w}` with `[v,u] = [v,w] = w`, `w = da`; the parameter
//!   `rho` scales the action `a.v = rho*da` and enters `<v,v> = (1+rho)*1`.
//!
//! Both carry the invariant form `B(1,a) = 1`, `B(1,1) = 0` on the base
//! (extended invariantly), under which the socle generator is `t = a - c*1`
//! for the appropriate constant `c`.

use crate::algebroid::VertexAlgebroid;
use crate::commalg::{CommAlgebra, Grading, Tensor3};
use crate::exactnum::{q, qi, zero_vec, Matrix, Q};
use num_traits::{One, Zero};

/// Sparse tensor literal: dimensions plus `((i, j, k), value)` entries.
fn t3(d0: usize, d1: usize, d2: usize, entries: &[((usize, usize, usize), Q)]) -> Tensor3 {
    let mut t = Tensor3::zero(d0, d1, d2);
    for ((i, j, k), v) in entries {
        t.set(*i, *j, *k, v.clone());
    }
    t
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// A fixture bundle: an algebroid plus the optional grading, socle generator
/// and invariant form that the file format also carries.
#[derive(Clone, Debug)]
pub struct SampleFixture {
    pub algebroid: VertexAlgebroid,
    pub grading: Option<Grading>,
    pub t: Option<Vec<Q>>,
    pub form: Option<Matrix>,
}

/// Truncated polynomial algebra `Q[x]/(x^(k+1))` with its natural grading.
pub fn trunc_poly(k: usize) -> (CommAlgebra, Grading) {
    let n = k + 1;
    let mut mul = Tensor3::zero(n, n, n);
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                mul.set(i, j, i + j, Q::one());
            }
        }
    }
    let mut unit = zero_vec(n);
    unit[0] = Q::one();
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let algebra = CommAlgebra::new(n, mul, unit, names);
    let grading = Grading {
        degrees: (0..n).collect(),
        top: k,
    };
    (algebra, grading)
}

/// `Q[X,Y]/(X^2, Y^2)` on the basis `1, x, y, xy`.
pub fn xy_square_zero() -> (CommAlgebra, Grading) {
    let mul = t3(
        4,
        4,
        4,
        &[
            ((0, 0, 0), Q::one()),
            ((0, 1, 1), Q::one()),
            ((0, 2, 2), Q::one()),
            ((0, 3, 3), Q::one()),
            ((1, 0, 1), Q::one()),
            ((2, 0, 2), Q::one()),
            ((3, 0, 3), Q::one()),
            ((1, 2, 3), Q::one()),
            ((2, 1, 3), Q::one()),
        ],
    );
    let algebra = CommAlgebra::new(
        4,
        mul,
        vec![Q::one(), Q::zero(), Q::zero(), Q::zero()],
        names(&["1", "x", "y", "xy"]),
    );
    let grading = Grading {
        degrees: vec![0, 1, 1, 2],
        top: 2,
    };
    (algebra, grading)
}

/// `Q[x,y]/(x^2, xy, y^2)`: local with a two-dimensional socle.
pub fn two_var_nilsquare() -> (CommAlgebra, Grading) {
    let mul = t3(
        3,
        3,
        3,
        &[
            ((0, 0, 0), Q::one()),
            ((0, 1, 1), Q::one()),
            ((0, 2, 2), Q::one()),
            ((1, 0, 1), Q::one()),
            ((2, 0, 2), Q::one()),
        ],
    );
    let algebra = CommAlgebra::new(
        3,
        mul,
        vec![Q::one(), Q::zero(), Q::zero()],
        names(&["1", "x", "y"]),
    );
    let grading = Grading {
        degrees: vec![0, 1, 1],
        top: 1,
    };
    (algebra, grading)
}

/// `Q x Q` on the idempotent basis.
pub fn split_plane() -> CommAlgebra {
    let mul = t3(
        2,
        2,
        2,
        &[((0, 0, 0), Q::one()), ((1, 1, 1), Q::one())],
    );
    CommAlgebra::new(2, mul, vec![Q::one(), Q::one()], names(&["e1", "e2"]))
}

/// `Q[x]/(x^2 - 2)`: a field over the rationals that splits only after
/// extending scalars.
pub fn nonsplit_quadratic() -> CommAlgebra {
    let mul = t3(
        2,
        2,
        2,
        &[
            ((0, 0, 0), Q::one()),
            ((0, 1, 1), Q::one()),
            ((1, 0, 1), Q::one()),
            ((1, 1, 0), qi(2)),
        ],
    );
    CommAlgebra::new(2, mul, vec![Q::one(), Q::zero()], names(&["1", "r"]))
}

/// The two-dimensional cyclic algebroid family at parameter `alpha`.
///
/// Base `A = span{1, a}`, `a*a = alpha*a - (alpha^2/4) 1`; module
/// `B = span{b, da}` with `da = partial(a)` and
///
/// ```text
/// [b,b] = da/2          [b,da] = da        pi(b)(a) = a - (alpha/2) 1
/// a.b   = (alpha/2) b + (alpha/2 - 1) da   a.da    = (alpha/2) da
/// <b,b> = a             <b,da> = a - (alpha/2) 1   <da,da> = 0
/// ```
pub fn two_dim_cyclic(alpha: &Q) -> VertexAlgebroid {
    let half = q(1, 2);
    let ha = &half * alpha; // alpha/2
    let quarter_sq = -(&ha * &ha); // -alpha^2/4
    let mul = t3(
        2,
        2,
        2,
        &[
            ((0, 0, 0), Q::one()),
            ((0, 1, 1), Q::one()),
            ((1, 0, 1), Q::one()),
            ((1, 1, 0), quarter_sq.clone()),
            ((1, 1, 1), alpha.clone()),
        ],
    );
    let algebra = CommAlgebra::new(2, mul, vec![Q::one(), Q::zero()], names(&["1", "a"]));

    let partial = Matrix::from_rows(vec![
        vec![Q::zero(), Q::zero()],
        vec![Q::zero(), Q::one()],
    ]);
    let action = t3(
        2,
        2,
        2,
        &[
            ((0, 0, 0), Q::one()),
            ((0, 1, 1), Q::one()),
            ((1, 0, 0), ha.clone()),
            ((1, 0, 1), &ha - &Q::one()),
            ((1, 1, 1), ha.clone()),
        ],
    );
    let bracket = t3(
        2,
        2,
        2,
        &[((0, 0, 1), half.clone()), ((0, 1, 1), Q::one())],
    );
    let anchor = t3(
        2,
        2,
        2,
        &[((0, 1, 0), -ha.clone()), ((0, 1, 1), Q::one())],
    );
    let pairing = t3(
        2,
        2,
        2,
        &[
            ((0, 0, 1), Q::one()),
            ((0, 1, 0), -ha.clone()),
            ((0, 1, 1), Q::one()),
            ((1, 0, 0), -ha.clone()),
            ((1, 0, 1), Q::one()),
        ],
    );
    VertexAlgebroid::new(
        algebra,
        2,
        names(&["b", "da"]),
        partial,
        action,
        bracket,
        anchor,
        pairing,
    )
}

/// [`two_dim_cyclic`] bundled with its socle generator `t = a - (alpha/2) 1`
/// and invariant form `B(1,a) = 1`, `B(a,a) = alpha`. A grading exists on
/// this basis only when `alpha = 0` (then `a` itself is homogeneous).
pub fn two_dim_cyclic_fixture(alpha: &Q) -> SampleFixture {
    let ha = q(1, 2) * alpha;
    let t = vec![-ha, Q::one()];
    let form = Matrix::from_rows(vec![
        vec![Q::zero(), Q::one()],
        vec![Q::one(), alpha.clone()],
    ]);
    let grading = if alpha.is_zero() {
        Some(Grading {
            degrees: vec![0, 1],
            top: 1,
        })
    } else {
        None
    };
    SampleFixture {
        algebroid: two_dim_cyclic(alpha),
        grading,
        t: Some(t),
        form: Some(form),
    }
}

/// The three-dimensional non-cyclic algebroid family at parameter `rho`.
///
/// Base `A = span{1, a}`, `a*a = 0`; module `B = span{u, v, w}` with
/// `w = partial(a)` and
///
/// ```text
/// [v,u] = w      [v,w] = w      pi(v)(a) = a     pi(u) = pi(w) = 0
/// a.v = rho*w    a.u = a.w = 0
/// <u,v> = a      <v,w> = a      <v,v> = (1+rho) 1
/// ```
pub fn three_dim_noncyclic(rho: &Q) -> VertexAlgebroid {
    let mul = t3(
        2,
        2,
        2,
        &[
            ((0, 0, 0), Q::one()),
            ((0, 1, 1), Q::one()),
            ((1, 0, 1), Q::one()),
        ],
    );
    let algebra = CommAlgebra::new(2, mul, vec![Q::one(), Q::zero()], names(&["1", "a"]));

    let partial = Matrix::from_rows(vec![
        vec![Q::zero(), Q::zero(), Q::zero()],
        vec![Q::zero(), Q::zero(), Q::one()],
    ]);
    let action = t3(
        2,
        3,
        3,
        &[
            ((0, 0, 0), Q::one()),
            ((0, 1, 1), Q::one()),
            ((0, 2, 2), Q::one()),
            ((1, 1, 2), rho.clone()),
        ],
    );
    let bracket = t3(
        3,
        3,
        3,
        &[((1, 0, 2), Q::one()), ((1, 2, 2), Q::one())],
    );
    let anchor = t3(3, 2, 2, &[((1, 1, 1), Q::one())]);
    let one_plus = Q::one() + rho;
    let pairing = t3(
        3,
        3,
        2,
        &[
            ((0, 1, 1), Q::one()),
            ((1, 0, 1), Q::one()),
            ((1, 1, 0), one_plus),
            ((1, 2, 1), Q::one()),
            ((2, 1, 1), Q::one()),
        ],
    );
    VertexAlgebroid::new(
        algebra,
        3,
        names(&["u", "v", "w"]),
        partial,
        action,
        bracket,
        anchor,
        pairing,
    )
}

/// [`three_dim_noncyclic`] bundled with `t = a`, the form `B(1,a) = 1`,
/// and the grading `deg a = 1`.
pub fn three_dim_noncyclic_fixture(rho: &Q) -> SampleFixture {
    SampleFixture {
        algebroid: three_dim_noncyclic(rho),
        grading: Some(Grading {
            degrees: vec![0, 1],
            top: 1,
        }),
        t: Some(vec![Q::zero(), Q::one()]),
        form: Some(Matrix::from_rows(vec![
            vec![Q::zero(), Q::one()],
            vec![Q::one(), Q::zero()],
        ])),
    }
}

/// The semisimple-Leibniz fixture with one two-dimensional module piece:
/// `B = sl2 + span{dx, dy}` over the square-zero base `A = span{1, x, y}`.
///
/// `B`-basis order: `e, f, h, dx, dy`; `A`-basis order: `1, x, y`.
pub fn semisimple_l1() -> VertexAlgebroid {
    let mul = t3(
        3,
        3,
        3,
        &[
            ((0, 0, 0), Q::one()),
            ((0, 1, 1), Q::one()),
            ((0, 2, 2), Q::one()),
            ((1, 0, 1), Q::one()),
            ((2, 0, 2), Q::one()),
        ],
    );
    let algebra = CommAlgebra::new(
        3,
        mul,
        vec![Q::one(), Q::zero(), Q::zero()],
        names(&["1", "x", "y"]),
    );
    let partial = Matrix::from_rows(vec![
        zero_vec(5),
        vec![Q::zero(), Q::zero(), Q::zero(), Q::one(), Q::zero()],
        vec![Q::zero(), Q::zero(), Q::zero(), Q::zero(), Q::one()],
    ]);
    let mut action_entries = vec![
        // x.f = dy, x.h = dx
        ((1, 1, 4), Q::one()),
        ((1, 2, 3), Q::one()),
        // y.e = dx, y.h = -dy
        ((2, 0, 3), Q::one()),
        ((2, 2, 4), -Q::one()),
    ];
    for j in 0..5 {
        action_entries.push(((0, j, j), Q::one())); // unit acts as identity
    }
    let action = t3(3, 5, 5, &action_entries);
    let two = qi(2);
    let bracket = t3(
        5,
        5,
        5,
        &[
            ((0, 1, 2), Q::one()),   // [e,f] = h
            ((1, 0, 2), -Q::one()),  // [f,e] = -h
            ((2, 0, 0), two.clone()),  // [h,e] = 2e
            ((0, 2, 0), -two.clone()), // [e,h] = -2e
            ((2, 1, 1), -two.clone()), // [h,f] = -2f
            ((1, 2, 1), two.clone()),  // [f,h] = 2f
            ((0, 4, 3), Q::one()),   // [e,dy] = dx
            ((1, 3, 4), Q::one()),   // [f,dx] = dy
            ((2, 3, 3), Q::one()),   // [h,dx] = dx
            ((2, 4, 4), -Q::one()),  // [h,dy] = -dy
        ],
    );
    let anchor = t3(
        5,
        3,
        3,
        &[
            ((0, 2, 1), Q::one()),  // e.y = x
            ((1, 1, 2), Q::one()),  // f.x = y
            ((2, 1, 1), Q::one()),  // h.x = x
            ((2, 2, 2), -Q::one()), // h.y = -y
        ],
    );
    let pairing = t3(
        5,
        5,
        3,
        &[
            ((0, 1, 0), Q::one()),  // <e,f> = 1
            ((1, 0, 0), Q::one()),
            ((2, 2, 0), two),       // <h,h> = 2
            ((0, 4, 1), Q::one()),  // <e,dy> = x
            ((4, 0, 1), Q::one()),
            ((1, 3, 2), Q::one()),  // <f,dx> = y
            ((3, 1, 2), Q::one()),
            ((2, 3, 1), Q::one()),  // <h,dx> = x
            ((3, 2, 1), Q::one()),
            ((2, 4, 2), -Q::one()), // <h,dy> = -y
            ((4, 2, 2), -Q::one()),
        ],
    );
    VertexAlgebroid::new(
        algebra,
        5,
        names(&["e", "f", "h", "dx", "dy"]),
        partial,
        action,
        bracket,
        anchor,
        pairing,
    )
}

pub fn semisimple_l1_fixture() -> SampleFixture {
    SampleFixture {
        algebroid: semisimple_l1(),
        grading: Some(Grading {
            degrees: vec![0, 1, 1],
            top: 1,
        }),
        t: None,
        form: None,
    }
}

/// The trivial algebroid with zero weight-1 part over an arbitrary base.
pub fn trivial_over(algebra: CommAlgebra) -> VertexAlgebroid {
    let n = algebra.dim;
    VertexAlgebroid::new(
        algebra,
        0,
        Vec::new(),
        Matrix::zero(n, 0),
        Tensor3::zero(n, 0, 0),
        Tensor3::zero(0, 0, 0),
        Tensor3::zero(0, n, n),
        Tensor3::zero(0, 0, n),
    )
}

/// An algebroid whose weight-1 part is exactly the image of `partial`:
/// `B = span{w}` with `w = partial(a)` over `Q[x]/(x^2)`, all other maps
/// zero. The only semiconformal `L(1)` map on it is zero.
pub fn partial_image_only() -> VertexAlgebroid {
    let mul = t3(
        2,
        2,
        2,
        &[
            ((0, 0, 0), Q::one()),
            ((0, 1, 1), Q::one()),
            ((1, 0, 1), Q::one()),
        ],
    );
    let algebra = CommAlgebra::new(2, mul, vec![Q::one(), Q::zero()], names(&["1", "a"]));
    let partial = Matrix::from_rows(vec![vec![Q::zero()], vec![Q::one()]]);
    let action = t3(2, 1, 1, &[((0, 0, 0), Q::one())]);
    VertexAlgebroid::new(
        algebra,
        1,
        names(&["w"]),
        partial,
        action,
        Tensor3::zero(1, 1, 1),
        Tensor3::zero(1, 2, 2),
        Tensor3::zero(1, 1, 2),
    )
}

/// A degenerate algebroid over `Q[x]/(x^2)` with zero bracket, anchor,
/// pairing and partial: every vector of `B` kills the socle generator, so
/// no Heisenberg generator exists.
pub fn anchor_zero() -> SampleFixture {
    let mul = t3(
        2,
        2,
        2,
        &[
            ((0, 0, 0), Q::one()),
            ((0, 1, 1), Q::one()),
            ((1, 0, 1), Q::one()),
        ],
    );
    let algebra = CommAlgebra::new(2, mul, vec![Q::one(), Q::zero()], names(&["1", "a"]));
    let action = t3(2, 1, 1, &[((0, 0, 0), Q::one())]);
    let algebroid = VertexAlgebroid::new(
        algebra,
        1,
        names(&["z"]),
        Matrix::zero(2, 1),
        action,
        Tensor3::zero(1, 1, 1),
        Tensor3::zero(1, 2, 2),
        Tensor3::zero(1, 1, 2),
    );
    SampleFixture {
        algebroid,
        grading: Some(Grading {
            degrees: vec![0, 1],
            top: 1,
        }),
        t: Some(vec![Q::zero(), Q::one()]),
        form: Some(Matrix::from_rows(vec![
            vec![Q::zero(), Q::one()],
            vec![Q::one(), Q::zero()],
        ])),
    }
}
