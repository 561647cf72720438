//! Finite-dimensional left Leibniz algebras by structure constants.
//!
//! A left Leibniz algebra satisfies `[a,[b,c]] = [[a,b],c] + [b,[a,c]]`;
//! equivalently, every left multiplication is a derivation of the bracket.
//! `Leib = span{[x,x]}` is always an abelian two-sided ideal, and the
//! quotient by it is a Lie algebra, which is how the solvable radical is
//! computed: Killing-form criterion on the Lie quotient, then preimage.

use crate::commalg::{fmt_subspace, Tensor3};
use crate::exactnum::{add_vec, fmt_combo, is_zero_vec, sub_vec, zero_vec, Matrix, Q, Subspace};
use crate::report::CheckReport;
use num_traits::{One, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealVerdict {
    TwoSided,
    LeftOnly,
    RightOnly,
    NotIdeal,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeibnizAlgebra {
    pub dim: usize,
    /// `bracket.at(i, j)` = `[e_i, e_j]`.
    pub bracket: Tensor3,
    pub names: Vec<String>,
}

impl LeibnizAlgebra {
    pub fn new(dim: usize, bracket: Tensor3, names: Vec<String>) -> Self {
        assert_eq!(bracket.dims(), (dim, dim, dim));
        assert_eq!(names.len(), dim);
        LeibnizAlgebra { dim, bracket, names }
    }

    pub fn bracket_vec(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.bracket.apply(x, y)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        let mut e = zero_vec(self.dim);
        e[i] = Q::one();
        e
    }

    /// Left multiplication `ad_x = [x, -]` as a matrix.
    pub fn left_mult(&self, x: &[Q]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket_vec(x, &self.basis_vector(j));
            for i in 0..self.dim {
                m.set(i, j, col[i].clone());
            }
        }
        m
    }

    /// Evaluates the left Leibniz identity on all basis triples.
    pub fn check(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let mut ok = true;
        for a in 0..self.dim {
            let ea = self.basis_vector(a);
            for b in 0..self.dim {
                let eb = self.basis_vector(b);
                let ab = self.bracket_vec(&ea, &eb);
                for c in 0..self.dim {
                    let ec = self.basis_vector(c);
                    let lhs = self.bracket_vec(&ea, &self.bracket_vec(&eb, &ec));
                    let rhs = add_vec(
                        &self.bracket_vec(&ab, &ec),
                        &self.bracket_vec(&eb, &self.bracket_vec(&ea, &ec)),
                    );
                    let d = sub_vec(&lhs, &rhs);
                    if !is_zero_vec(&d) {
                        ok = false;
                        rep.fail(
                            "leib.identity",
                            format!("({}, {}, {})", self.names[a], self.names[b], self.names[c]),
                            format!("residual {}", fmt_combo(&d, &self.names)),
                        );
                    }
                }
            }
        }
        if ok {
            rep.pass("leib.identity");
        }
        rep.finish()
    }

    /// `Leib = span{[x,x]}`, computed by polarization:
    /// `span{[e_i,e_j] + [e_j,e_i] : i <= j}`.
    pub fn leib_subspace(&self) -> Subspace {
        let mut vs = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                vs.push(add_vec(self.bracket.at(i, j), self.bracket.at(j, i)));
            }
        }
        Subspace::span(self.dim, &vs)
    }

    /// Span of all brackets between two subspaces.
    pub fn bracket_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in s.basis() {
            for y in t.basis() {
                vs.push(self.bracket_vec(&x, &y));
            }
        }
        Subspace::span(self.dim, &vs)
    }

    /// Derived series until stabilization, starting from `[L, L]`.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = Vec::new();
        let mut current = self.bracket_span(&Subspace::full(self.dim), &Subspace::full(self.dim));
        loop {
            let next = self.bracket_span(&current, &current);
            series.push(current.clone());
            if next == current || current.dim() == 0 {
                break;
            }
            current = next;
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().map_or(true, |s| s.dim() == 0)
    }

    pub fn ideal_check(&self, s: &Subspace) -> IdealVerdict {
        assert_eq!(s.ambient_dim(), self.dim);
        let full = Subspace::full(self.dim);
        let left = s.contains_subspace(&self.bracket_span(&full, s));
        let right = s.contains_subspace(&self.bracket_span(s, &full));
        match (left, right) {
            (true, true) => IdealVerdict::TwoSided,
            (true, false) => IdealVerdict::LeftOnly,
            (false, true) => IdealVerdict::RightOnly,
            (false, false) => IdealVerdict::NotIdeal,
        }
    }

    /// Lie quotient `L / Leib(L)` with lifts of the quotient basis.
    fn lie_quotient(&self) -> (LeibnizAlgebra, Vec<Vec<Q>>) {
        let leib = self.leib_subspace();
        let n = self.dim;
        let basis = leib.basis_matrix();
        let pivots: Vec<usize> = basis
            .row_vecs()
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let project = |x: &[Q]| -> Vec<Q> {
            let mut v = x.to_vec();
            for (row, &p) in pivots.iter().enumerate() {
                if !v[p].is_zero() {
                    let f = v[p].clone();
                    for j in 0..n {
                        v[j] = &v[j] - &f * basis.at(row, j);
                    }
                }
            }
            free.iter().map(|&c| v[c].clone()).collect()
        };
        let lifts: Vec<Vec<Q>> = free
            .iter()
            .map(|&c| {
                let mut e = zero_vec(n);
                e[c] = Q::one();
                e
            })
            .collect();
        let q_dim = free.len();
        let mut bracket = Tensor3::zero(q_dim, q_dim, q_dim);
        for i in 0..q_dim {
            for j in 0..q_dim {
                let prod = project(&self.bracket_vec(&lifts[i], &lifts[j]));
                for (k, v) in prod.into_iter().enumerate() {
                    bracket.set(i, j, k, v);
                }
            }
        }
        let names = free.iter().map(|&c| self.names[c].clone()).collect();
        (LeibnizAlgebra::new(q_dim, bracket, names), lifts)
    }

    /// The unique maximal solvable ideal.
    ///
    /// `Leib` is abelian, hence solvable, so `rad` is the full preimage of
    /// the radical of the Lie quotient, and the latter is the Killing-form
    /// orthogonal complement of the derived subalgebra (characteristic zero).
    /// The result is verified to be a solvable two-sided ideal containing
    /// `Leib` before it is returned.
    pub fn solvable_radical(&self) -> Subspace {
        let leib = self.leib_subspace();
        let (quot, lifts) = self.lie_quotient();
        let qn = quot.dim;

        let rad_q = if qn == 0 {
            Subspace::zero(0)
        } else {
            let mut killing = Matrix::zero(qn, qn);
            for i in 0..qn {
                let adi = quot.left_mult(&quot.basis_vector(i));
                for j in 0..qn {
                    let adj = quot.left_mult(&quot.basis_vector(j));
                    killing.set(i, j, adi.mul(&adj).trace());
                }
            }
            let derived = quot.bracket_span(&Subspace::full(qn), &Subspace::full(qn));
            if derived.dim() == 0 {
                Subspace::full(qn)
            } else {
                // x in rad  <=>  kappa(x, d) = 0 for all d in [L, L].
                let mut constraints = Matrix::zero(derived.dim(), qn);
                for (r, d) in derived.basis().iter().enumerate() {
                    let row = killing.mul_vec(d);
                    for c in 0..qn {
                        constraints.set(r, c, row[c].clone());
                    }
                }
                constraints.kernel()
            }
        };

        let mut vs = leib.basis();
        for v in rad_q.basis() {
            let mut lifted = zero_vec(self.dim);
            for (c, l) in v.iter().zip(&lifts) {
                for k in 0..self.dim {
                    lifted[k] = &lifted[k] + c * &l[k];
                }
            }
            vs.push(lifted);
        }
        let rad = Subspace::span(self.dim, &vs);

        assert_eq!(
            self.ideal_check(&rad),
            IdealVerdict::TwoSided,
            "solvable radical must be a two-sided ideal"
        );
        assert!(
            self.restrict(&rad).is_solvable(),
            "solvable radical must be solvable"
        );
        assert!(
            rad.contains_subspace(&leib),
            "solvable radical must contain Leib"
        );
        rad
    }

    /// The bracket restricted to a subspace that is closed under it.
    pub fn restrict(&self, s: &Subspace) -> LeibnizAlgebra {
        let d = s.dim();
        let basis = s.basis();
        let mut bracket = Tensor3::zero(d, d, d);
        for i in 0..d {
            for j in 0..d {
                let prod = self.bracket_vec(&basis[i], &basis[j]);
                let coords = coords_in(s, &prod);
                for (k, v) in coords.into_iter().enumerate() {
                    bracket.set(i, j, k, v);
                }
            }
        }
        let names = (0..d).map(|i| fmt_combo(&basis[i], &self.names)).collect();
        LeibnizAlgebra::new(d, bracket, names)
    }

    pub fn is_semisimple(&self) -> bool {
        self.solvable_radical() == self.leib_subspace()
    }

    pub fn fmt_subspace(&self, s: &Subspace) -> String {
        fmt_subspace(s, &self.names)
    }
}

/// Coordinates of `x` against the RREF basis of `s`; panics when `x` is not
/// a member.
pub fn coords_in(s: &Subspace, x: &[Q]) -> Vec<Q> {
    let mut v = x.to_vec();
    let mut coords = zero_vec(s.dim());
    let basis = s.basis_matrix();
    for i in 0..s.dim() {
        let pivot = basis
            .row(i)
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero basis row");
        if !v[pivot].is_zero() {
            let f = v[pivot].clone();
            coords[i] = f.clone();
            for j in 0..v.len() {
                v[j] = &v[j] - &f * basis.at(i, j);
            }
        }
    }
    assert!(is_zero_vec(&v), "vector is not a member of the subspace");
    coords
}
