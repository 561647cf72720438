//! Exact rational scalars and dense linear algebra.
//!
//! The scalar type [`Q`] is an arbitrary-precision rational kept in lowest
//! terms with positive denominator. Matrices are dense and row-major.
//! Subspaces are stored through their reduced row echelon basis, which is a
//! canonical form: two subspaces are equal iff their stored bases are equal
//! componentwise. Pivot selection is always "first nonzero entry in column
//! order", so identical inputs produce identical output on every platform.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational scalar.
pub type Q = num_rational::BigRational;

/// `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics when `d = 0`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with optional sign; denominator must be nonzero.
pub fn parse_q(s: &str) -> Result<Q, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid numerator in rational {s:?}"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("invalid denominator in rational {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in rational {s:?}"));
    }
    Ok(Q::new(n, d))
}

/// Formats a rational as `"p"` or `"p/q"` in lowest terms.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// True iff the rational is a square of a rational, returning the nonnegative root.
pub fn sqrt_q(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

pub fn zero_vec(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| c * x).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Renders a vector as a combination of named basis elements, e.g. `a - 1/2*1`.
pub fn fmt_combo(coords: &[Q], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coords.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if mag.is_one() {
            out.push_str(name);
        } else {
            out.push_str(&format!("{}*{}", fmt_q(&mag), name));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Errors from the linear solvers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearError {
    /// `solve_affine`: `rank([m|rhs]) > rank(m)`, the system has no solution.
    #[error("linear system is inconsistent")]
    NoSolution,
    /// `form_radical`: the Gram matrix is not symmetric.
    #[error("matrix is not symmetric")]
    NotSymmetric,
}

/// Dense row-major matrix over [`Q`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(fmt_q).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Q>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![Q::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Q {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn trace(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.at(i, i).clone()).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix::new(self.rows + other.rows, self.cols, entries)
    }

    /// The unique reduced row echelon form together with the pivot columns.
    ///
    /// Elimination picks the first row (from the current one down) with a
    /// nonzero entry in the current column, so the computation is fully
    /// deterministic.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(r, j).clone();
                    let b = m.at(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.at(r, c).recip();
            for j in 0..m.cols {
                let v = m.at(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in 0..m.cols {
                    let v = m.at(i, j) - &f * m.at(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The null space `{v : m v = 0}`, canonicalized.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = zero_vec(self.cols);
            v[f] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(row, f).clone();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, &basis)
    }

    /// Full solution set of `m x = rhs`.
    ///
    /// The particular solution sets all free variables to zero; the
    /// homogeneous part is `kernel(m)`.
    pub fn solve_affine(&self, rhs: &[Q]) -> Result<AffineSpace, LinearError> {
        assert_eq!(rhs.len(), self.rows, "rhs length must equal row count");
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(LinearError::NoSolution);
        }
        let mut particular = zero_vec(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            particular[p] = r.at(row, self.cols).clone();
        }
        Ok(AffineSpace {
            particular,
            homogeneous: self.kernel(),
        })
    }

    /// Null space of a symmetric Gram matrix: the vectors pairing to zero
    /// with everything. Rejects non-symmetric input.
    pub fn form_radical(&self) -> Result<Subspace, LinearError> {
        if !self.is_symmetric() {
            return Err(LinearError::NotSymmetric);
        }
        Ok(self.kernel())
    }
}

/// A linear subspace of `Q^ambient`, stored by its RREF basis.
///
/// The representation is canonical: equality of subspaces is equality of the
/// stored bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the given vectors, canonicalized through RREF.
    pub fn span(ambient: usize, vectors: &[Vec<Q>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length must equal ambient dim");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        let basis = Matrix::from_rows((0..pivots.len()).map(|i| r.row(i).to_vec()).collect());
        Subspace {
            ambient,
            basis: if pivots.is_empty() {
                Matrix::zero(0, ambient)
            } else {
                basis
            },
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> Vec<Vec<Q>> {
        self.basis.row_vecs()
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    /// Exact membership test by reduction against the RREF basis.
    pub fn contains(&self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for i in 0..self.basis.rows() {
            let pivot = self
                .basis
                .row(i)
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            if !v[pivot].is_zero() {
                let f = v[pivot].clone();
                for j in 0..self.ambient {
                    v[j] = &v[j] - &f * self.basis.at(i, j);
                }
            }
        }
        is_zero_vec(&v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis();
        vs.extend(other.basis());
        Subspace::span(self.ambient, &vs)
    }
}

/// The solution set `particular + span(homogeneous)` of a consistent linear system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineSpace {
    pub particular: Vec<Q>,
    pub homogeneous: Subspace,
}

impl AffineSpace {
    pub fn dim(&self) -> usize {
        self.homogeneous.dim()
    }

    /// A member of the set: the particular solution (all free parameters zero).
    pub fn representative(&self) -> &[Q] {
        &self.particular
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.homogeneous.contains(&sub_vec(v, &self.particular))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(qi).collect())
                .collect(),
        )
    }

    fn v(xs: Vec<i64>) -> Vec<Q> {
        xs.into_iter().map(qi).collect()
    }

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_q("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_q("-5").unwrap(), qi(-5));
        assert_eq!(parse_q("6/-4").unwrap(), q(-3, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert_eq!(fmt_q(&q(-3, 2)), "-3/2");
        assert_eq!(fmt_q(&qi(7)), "7");
        assert_eq!(parse_q(&fmt_q(&q(22, -8))).unwrap(), q(-11, 4));
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(sqrt_q(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(sqrt_q(&qi(1)), Some(qi(1)));
        assert_eq!(sqrt_q(&q(1, 2)), None);
        assert_eq!(sqrt_q(&qi(2)), None);
        assert_eq!(sqrt_q(&qi(-4)), None);
        assert_eq!(sqrt_q(&Q::zero()), Some(Q::zero()));
    }

    #[test]
    fn rref_proportional_rows_collapse() {
        let (r, pivots) = m(vec![vec![2, 4], vec![1, 2]]).rref();
        assert_eq!(r, m(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_identity_is_fixed() {
        let (r, pivots) = Matrix::identity(3).rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_swaps_rows_to_echelon() {
        // Hand elimination: swap the two rows, both pivots become 1.
        let (r, _) = m(vec![vec![0, 1], vec![1, 0]]).rref();
        assert_eq!(r, Matrix::identity(2));
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        assert_eq!(Matrix::zero(2, 2).kernel(), Subspace::full(2));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(Matrix::identity(3).kernel(), Subspace::zero(3));
    }

    #[test]
    fn kernel_of_sum_functional() {
        let mat = m(vec![vec![1, 1]]);
        let k = mat.kernel();
        assert_eq!(k, Subspace::span(2, &[v(vec![1, -1])]));
        for b in k.basis() {
            assert!(is_zero_vec(&mat.mul_vec(&b)));
        }
    }

    #[test]
    fn solve_unique_system() {
        let sol = Matrix::identity(2).solve_affine(&v(vec![3, 5])).unwrap();
        assert_eq!(sol.particular, v(vec![3, 5]));
        assert_eq!(sol.dim(), 0);
    }

    #[test]
    fn solve_underdetermined_system() {
        let mat = m(vec![vec![1, 1]]);
        let sol = mat.solve_affine(&v(vec![2])).unwrap();
        assert_eq!(sol.particular, v(vec![2, 0]));
        assert_eq!(sol.homogeneous, Subspace::span(2, &[v(vec![1, -1])]));
        // substitution oracle
        assert_eq!(mat.mul_vec(&sol.particular), v(vec![2]));
        assert!(sol.contains(&v(vec![0, 2])));
        assert!(!sol.contains(&v(vec![0, 1])));
    }

    #[test]
    fn solve_inconsistent_system() {
        let mat = m(vec![vec![1], vec![1]]);
        assert_eq!(
            mat.solve_affine(&v(vec![0, 1])),
            Err(LinearError::NoSolution)
        );
    }

    #[test]
    fn form_radical_nondegenerate_is_zero() {
        assert_eq!(Matrix::identity(2).form_radical().unwrap(), Subspace::zero(2));
    }

    #[test]
    fn form_radical_zero_form_is_everything() {
        assert_eq!(Matrix::zero(3, 3).form_radical().unwrap(), Subspace::full(3));
    }

    #[test]
    fn form_radical_hyperbolic_plane_plus_null_line() {
        let gram = m(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]);
        assert_eq!(
            gram.form_radical().unwrap(),
            Subspace::span(3, &[v(vec![0, 0, 1])])
        );
    }

    #[test]
    fn form_radical_rejects_asymmetric_input() {
        let gram = m(vec![vec![0, 1], vec![2, 0]]);
        assert_eq!(gram.form_radical(), Err(LinearError::NotSymmetric));
    }

    #[test]
    fn subspace_membership_and_sum() {
        let s = Subspace::span(3, &[v(vec![1, 1, 0]), v(vec![0, 0, 1])]);
        assert!(s.contains(&v(vec![2, 2, 5])));
        assert!(!s.contains(&v(vec![1, 0, 0])));
        let t = Subspace::span(3, &[v(vec![1, 0, 0])]);
        assert_eq!(s.sum(&t), Subspace::full(3));
    }

    fn arb_q() -> impl Strategy<Value = Q> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(arb_q(), r * c).prop_map(move |e| Matrix::new(r, c, e))
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(mat in arb_matrix()) {
            let (r1, p1) = mat.rref();
            let (r2, p2) = r1.rref();
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn kernel_vectors_are_annihilated(mat in arb_matrix()) {
            let k = mat.kernel();
            prop_assert_eq!(k.dim(), mat.cols() - mat.rank());
            for b in k.basis() {
                prop_assert!(is_zero_vec(&mat.mul_vec(&b)));
            }
        }

        #[test]
        fn solve_affine_substitutes_exactly(mat in arb_matrix(), xs in proptest::collection::vec(arb_q(), 1..=4)) {
            // Build a guaranteed-consistent system by hitting a known vector.
            let mut x = xs;
            x.resize(mat.cols(), Q::zero());
            let rhs = mat.mul_vec(&x);
            let sol = mat.solve_affine(&rhs).expect("consistent by construction");
            prop_assert_eq!(mat.mul_vec(&sol.particular), rhs);
            prop_assert_eq!(sol.dim(), mat.cols() - mat.rank());
            prop_assert!(sol.contains(&x));
        }
    }
}
