//! Exponent matrices of tiled orders and the small integer types built on them.
//!
//! A tiled order over `R = k[x]` is described by an `n x n` integer matrix
//! `m` with `m(i,i) = 0` and `m(i,k) + m(k,j) >= m(i,j)`; its `(i,j)` entry is
//! the lowest degree appearing in `e_i A e_j = R x^{m(i,j)}`. Indices are
//! 0-based throughout.

use std::fmt;
use std::ops::{Deref, Index};

use crate::error::{add, sub, Error, Result};
use crate::gorenstein::GorensteinData;

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut data = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NonSquare { row, len: r.len(), n });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix { n, data })
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        IntMatrix { n, data }
    }

    pub(crate) fn try_from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> Result<i64>,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j)?);
            }
        }
        Ok(IntMatrix { n, data })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub fn min_entry(&self) -> i64 {
        self.data.iter().copied().min().unwrap_or(0)
    }

    /// The conjugate `(sm)(i,j) = m(i,j) + s(i) - s(j)`.
    pub fn conjugate(&self, s: &ShiftVector) -> Result<IntMatrix> {
        check_len(self.n, s.len())?;
        IntMatrix::try_from_fn(self.n, |i, j| add(self.get(i, j), sub(s[i], s[j])?))
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.n + j]
    }
}

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

/// Exponent matrix of a tiled order: a square integer matrix with zero diagonal.
///
/// The triangle inequality is not enforced on construction so that
/// [`validate_order`] can report on arbitrary input; operations that need it
/// check it themselves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentMatrix(IntMatrix);

impl ExponentMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if let Some(i) = (0..m.n()).find(|&i| m.get(i, i) != 0) {
            return Err(Error::NonzeroDiagonal(i));
        }
        Ok(ExponentMatrix(m))
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    /// Exponent vector of the projective `e_i A`.
    pub fn row_vector(&self, i: usize) -> ExponentVector {
        ExponentVector(self.0.row(i).to_vec())
    }

    pub fn report(&self) -> Result<OrderReport> {
        let n = self.n();
        let mut first_violation = None;
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if add(self.get(i, k), self.get(k, j))? < self.get(i, j) {
                        first_violation = Some(TriangleViolation { i, k, j });
                        break 'outer;
                    }
                }
            }
        }
        let mut basic = true;
        for i in 0..n {
            for j in i + 1..n {
                if add(self.get(i, j), self.get(j, i))? <= 0 {
                    basic = false;
                }
            }
        }
        Ok(OrderReport {
            triangle_ok: first_violation.is_none(),
            basic,
            n_graded: self.0.min_entry() >= 0,
            first_violation,
        })
    }

    /// Errors unless the matrix satisfies the triangle inequality and is basic.
    pub(crate) fn require_basic_order(&self) -> Result<()> {
        let report = self.report()?;
        if let Some(TriangleViolation { i, k, j }) = report.first_violation {
            return Err(Error::NotTiledOrder { i, k, j });
        }
        let n = self.n();
        for i in 0..n {
            for j in i + 1..n {
                if self.get(i, j) + self.get(j, i) <= 0 {
                    return Err(Error::NotBasic(i, j));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn require_n_graded(&self) -> Result<()> {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) < 0 {
                    return Err(Error::NotNGraded(i, j));
                }
            }
        }
        Ok(())
    }
}

impl Deref for ExponentMatrix {
    type Target = IntMatrix;

    fn deref(&self) -> &IntMatrix {
        &self.0
    }
}

/// A path `i -> k -> j` that is shorter than the direct entry `m(i,j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleViolation {
    pub i: usize,
    pub k: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderReport {
    pub triangle_ok: bool,
    pub basic: bool,
    pub n_graded: bool,
    pub first_violation: Option<TriangleViolation>,
}

impl OrderReport {
    pub fn is_valid(&self) -> bool {
        self.triangle_ok && self.basic
    }
}

/// Checks the tiled-order axioms on a raw matrix.
///
/// Structural problems (non-square, nonzero diagonal) are errors; failures of
/// the triangle inequality or basicness are reported.
pub fn validate_order(rows: &[Vec<i64>]) -> Result<OrderReport> {
    ExponentMatrix::from_rows(rows)?.report()
}

/// A bijection of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotBijective(n));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The cycle `i -> i + 1 mod n`.
    pub fn rotation(n: usize) -> Self {
        Permutation((0..n).map(|i| (i + 1) % n).collect())
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn apply_pow(&self, mut i: usize, k: usize) -> usize {
        for _ in 0..k {
            i = self.0[i];
        }
        i
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// Cycles of the permutation. Each cycle starts at its smallest element and
    /// follows the permutation forward; cycles are sorted by that element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for base in 0..n {
            if seen[base] {
                continue;
            }
            let mut orbit = vec![base];
            seen[base] = true;
            let mut i = self.0[base];
            while i != base {
                seen[i] = true;
                orbit.push(i);
                i = self.0[i];
            }
            out.push(orbit);
        }
        out
    }
}

macro_rules! int_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zeros(n: usize) -> Self {
                $name(vec![0; n])
            }

            pub fn as_slice(&self) -> &[i64] {
                &self.0
            }

            pub fn into_inner(self) -> Vec<i64> {
                self.0
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                $name(v)
            }
        }

        impl Deref for $name {
            type Target = [i64];

            fn deref(&self) -> &[i64] {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (k, x) in self.0.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    };
}

int_vector!(
    /// Exponent vector `v` of the rank-one lattice `L(v) = [R x^{v_0} ... R x^{v_{n-1}}]`.
    ExponentVector
);

int_vector!(
    /// Integer shift `s` used for conjugation `m(i,j) + s(i) - s(j)`.
    ShiftVector
);

impl ExponentVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl ShiftVector {
    pub fn constant(n: usize, c: i64) -> Self {
        ShiftVector(vec![c; n])
    }

    pub fn negated(&self) -> Result<ShiftVector> {
        self.0
            .iter()
            .map(|&x| x.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ShiftVector)
    }

    /// Pointwise sum; conjugating by `s` then `t` equals conjugating by `s + t`.
    pub fn compose(&self, other: &ShiftVector) -> Result<ShiftVector> {
        check_len(self.len(), other.len())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| add(a, b))
            .collect::<Result<Vec<_>>>()
            .map(ShiftVector)
    }
}

/// Graded Morita shift `m'(i,j) = m(i,j) + s(i) - s(j)`.
pub fn morita_shift(m: &ExponentMatrix, s: &ShiftVector) -> Result<ExponentMatrix> {
    let shifted = ExponentMatrix(m.as_matrix().conjugate(s)?);
    debug_assert!((0..m.n()).all(|i| shifted.get(i, i) == 0));
    Ok(shifted)
}

/// The cyclic Gorenstein tiled order attached to non-negative weights
/// `w_0, ..., w_{n-1}`.
///
/// `m(i,j)` is the sum of the weights met walking forward from `i` to `j`
/// around the cycle. The Nakayama permutation is `i -> i + 1` and
/// `p_i = 1 + w_i - sum(w)`.
pub fn cyclic_order(weights: &[i64]) -> Result<(ExponentMatrix, GorensteinData)> {
    let n = weights.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if let Some(k) = weights.iter().position(|&w| w < 0) {
        return Err(Error::NegativeWeight(k));
    }
    let total = weights.iter().try_fold(0i64, |acc, &w| add(acc, w))?;
    if total == 0 {
        return Err(Error::ZeroWeights);
    }
    let m = IntMatrix::try_from_fn(n, |i, j| {
        let mut acc = 0i64;
        let mut k = i;
        while k != j {
            acc = add(acc, weights[k])?;
            k = (k + 1) % n;
        }
        Ok(acc)
    })?;
    let p = weights
        .iter()
        .map(|&w| sub(add(1, w)?, total))
        .collect::<Result<Vec<_>>>()?;
    let ell = p.iter().map(|&pi| sub(1, pi)).collect::<Result<Vec<_>>>()?;
    let g = GorensteinData::from_parts(Permutation::rotation(n), ell, p)?;
    Ok((ExponentMatrix(m), g))
}
