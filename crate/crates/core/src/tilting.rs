//! Rank-one lattices, the tilting poset `V_A` and its Hasse quiver.
//!
//! A lattice `L(v)` is given by its exponent vector `v`. Shifting by `j` and
//! truncating to degrees `>= 0` sends `v` to `max(v - j, 0)`. For an
//! N-graded Gorenstein tiled order with all `p_i <= 0`, the truncations
//! `v(e_{nu i} A(j)_{>=0})`, `1 <= j <= -p_i`, together with `0` form `V_A`.
//!
//! Arrow orientation: Hasse arrows run from the larger lattice to the smaller
//! one, so `0` is the unique sink.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::exponent::{check_len, cyclic_order, ExponentMatrix, ExponentVector};
use crate::gorenstein::GorensteinData;

/// `(i, j)` names the truncation `v(e_{nu(i)} A(j)_{>=0})`.
pub type SummandLabel = (usize, i64);

/// Closure under right multiplication: `v(j) <= v(i) + m(i,j)` for all `i, j`.
pub fn lattice_validate(m: &ExponentMatrix, v: &ExponentVector) -> Result<bool> {
    let n = m.n();
    check_len(n, v.len())?;
    Ok((0..n).all(|j| (0..n).all(|i| v[j] as i128 <= v[i] as i128 + m.get(i, j) as i128)))
}

/// `max(v - j, 0)` componentwise.
pub fn truncate_shift(v: &ExponentVector, j: i64) -> ExponentVector {
    ExponentVector(v.iter().map(|&x| x.saturating_sub(j).max(0)).collect())
}

/// Dimension of the degree-`t` part of `Hom(L(v), L(w))`: 1 iff
/// `t >= max_i (w(i) - v(i))`.
pub fn hom_dim(m: &ExponentMatrix, v: &ExponentVector, w: &ExponentVector, t: i64) -> Result<u8> {
    if !lattice_validate(m, v)? || !lattice_validate(m, w)? {
        return Err(Error::InvalidLattice);
    }
    let ell = v.iter().zip(w.iter()).map(|(&a, &b)| b as i128 - a as i128).max();
    Ok(u8::from(ell.is_none_or(|ell| t as i128 >= ell)))
}

fn require_tilting_hypotheses(m: &ExponentMatrix, g: &GorensteinData) -> Result<()> {
    m.require_basic_order()?;
    g.verify(m)?;
    if let Some(i) = g.p.iter().position(|&p| p > 0) {
        return Err(Error::PositiveParameter(i));
    }
    m.require_n_graded()
}

/// One summand of the basic tilting object, with every label producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub labels: Vec<SummandLabel>,
    pub vector: ExponentVector,
}

/// Summands `v(e_{nu i} A(j)_{>=0})` for `1 <= j <= -p_i`, plus the zero
/// vector listed once (labelled by every `(i, 1 - p_i)`, where the
/// truncations collapse).
pub fn tilting_summands(m: &ExponentMatrix, g: &GorensteinData) -> Result<Vec<Summand>> {
    require_tilting_hypotheses(m, g)?;
    let n = m.n();
    let mut out = vec![Summand {
        labels: Vec::with_capacity(n),
        vector: ExponentVector::zeros(n),
    }];
    let mut seen: HashMap<ExponentVector, usize> = HashMap::new();
    for i in 0..n {
        let row = m.row_vector(g.nu.apply(i));
        let last = -g.p[i];
        for j in 1..=last {
            let vector = truncate_shift(&row, j);
            if vector.is_zero() {
                return Err(Error::Postcondition("truncation below 1 - p_i is zero"));
            }
            if let Some(&k) = seen.get(&vector) {
                return Err(Error::DuplicateSummand(out[k].labels[0], (i, j)));
            }
            seen.insert(vector.clone(), out.len());
            out.push(Summand { labels: vec![(i, j)], vector });
        }
        if !truncate_shift(&row, last + 1).is_zero() {
            return Err(Error::Postcondition("truncation at 1 - p_i is nonzero"));
        }
        out[0].labels.push((i, last + 1));
    }
    Ok(out)
}

/// The finite poset `V_A` under the componentwise order. Elements are sorted
/// lexicographically, so the zero vector comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiltingPoset {
    elements: Vec<ExponentVector>,
    labels: Vec<Vec<SummandLabel>>,
}

impl TiltingPoset {
    pub fn from_summands(mut summands: Vec<Summand>) -> Self {
        summands.sort_by(|a, b| a.vector.cmp(&b.vector));
        let (elements, labels) = summands.into_iter().map(|s| (s.vector, s.labels)).unzip();
        TiltingPoset { elements, labels }
    }

    pub fn elements(&self) -> &[ExponentVector] {
        &self.elements
    }

    pub fn labels(&self) -> &[Vec<SummandLabel>] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.elements[x].le(&self.elements[y])
    }

    pub fn index_of(&self, v: &ExponentVector) -> Option<usize> {
        self.elements.binary_search(v).ok()
    }

    /// Index of the unique minimum, if there is one.
    pub fn minimum(&self) -> Option<usize> {
        let mut mins = (0..self.len()).filter(|&x| (0..self.len()).all(|y| self.le(x, y)));
        let first = mins.next();
        first.filter(|_| mins.next().is_none())
    }
}

pub fn build_va(m: &ExponentMatrix, g: &GorensteinData) -> Result<TiltingPoset> {
    let poset = TiltingPoset::from_summands(tilting_summands(m, g)?);
    match poset.minimum() {
        Some(x) if poset.elements[x].is_zero() => Ok(poset),
        _ => Err(Error::Postcondition("zero is not the unique minimum of V_A")),
    }
}

/// A quiver whose vertices are exponent vectors; arrows are index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<ExponentVector>,
    pub arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Arrows as pairs of vertex labels.
    pub fn labeled_arrows(&self) -> BTreeSet<(&ExponentVector, &ExponentVector)> {
        self.arrows.iter().map(|&(s, t)| (&self.vertices[s], &self.vertices[t])).collect()
    }

    fn has_distinct_labels(&self) -> bool {
        self.vertices.iter().collect::<BTreeSet<_>>().len() == self.vertices.len()
    }

    /// Equality after identifying vertices by their labels.
    pub fn is_isomorphic_labeled(&self, other: &Quiver) -> bool {
        self.has_distinct_labels()
            && other.has_distinct_labels()
            && self.arrows.len() == self.labeled_arrows().len()
            && other.arrows.len() == other.labeled_arrows().len()
            && self.vertices.iter().collect::<BTreeSet<_>>()
                == other.vertices.iter().collect::<BTreeSet<_>>()
            && self.labeled_arrows() == other.labeled_arrows()
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for &(_, t) in &self.arrows {
            indegree[t] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut visited = 0;
        while let Some(v) = stack.pop() {
            visited += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    indegree[t] -= 1;
                    if indegree[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        visited == n
    }
}

/// Cover relations of the poset, drawn from the larger element to the smaller.
pub fn hasse_quiver(p: &TiltingPoset) -> Quiver {
    let n = p.len();
    let lt = |x: usize, y: usize| x != y && p.le(x, y);
    let mut arrows = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if lt(y, x) && !(0..n).any(|z| lt(y, z) && lt(z, x)) {
                arrows.push((x, y));
            }
        }
    }
    Quiver { vertices: p.elements.clone(), arrows }
}

/// `1 - sum p_i`, the rank of the Grothendieck group.
pub fn grothendieck_rank(g: &GorensteinData) -> Result<i64> {
    if let Some(i) = g.p.iter().position(|&p| p > 0) {
        return Err(Error::PositiveParameter(i));
    }
    g.p.iter()
        .try_fold(1i64, |acc, &p| acc.checked_sub(p))
        .ok_or(Error::Overflow)
}

/// Degree-0 Hom dimension between the summands labelled `(s,i)` and `(t,j)`,
/// from the order's entries alone.
///
/// Labels range over `(s, i)` with `1 <= i <= -p_s` and `(s, 1 - p_s)`; the
/// latter all name the zero lattice. Blocks landing in a zero-lattice label
/// have dimension 1: for a tiled order each graded piece of `e_u K e_w` is
/// one-dimensional.
pub fn endo_block_dim(
    m: &ExponentMatrix,
    g: &GorensteinData,
    source: SummandLabel,
    target: SummandLabel,
) -> Result<u8> {
    require_tilting_hypotheses(m, g)?;
    let n = m.n();
    let classify = |(s, i): SummandLabel| -> Result<bool> {
        if s >= n {
            return Err(Error::IndexOutOfRange { index: s, n });
        }
        let top = -g.p[s];
        if (1..=top).contains(&i) {
            Ok(true)
        } else if i == top + 1 {
            Ok(false)
        } else {
            Err(Error::Postcondition("label outside the summand index set"))
        }
    };
    let (s, i) = source;
    let (t, j) = target;
    let dim = match (classify(source)?, classify(target)?) {
        (_, false) => 1,
        (false, true) => 0,
        (true, true) => u8::from(j - i >= m.get(g.nu.apply(t), g.nu.apply(s))),
    };
    let v = truncate_shift(&m.row_vector(g.nu.apply(s)), i);
    let w = truncate_shift(&m.row_vector(g.nu.apply(t)), j);
    if hom_dim(m, &v, &w, 0)? != dim {
        return Err(Error::Postcondition("block dimension disagrees with lattice Hom"));
    }
    Ok(dim)
}

/// Which rule produced an arrow of [`cyclic_hasse_oracle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArrowRule {
    /// `(r, j) -> (r, j + 1)` along one row.
    Along,
    /// `(r + 1, j) -> (r, j + w_r)` between neighbouring rows.
    Across,
    /// The last vertex of a row to `0`.
    ToZero,
}

/// Closed-form Hasse quiver of `V_A` for a cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicHasse {
    pub quiver: Quiver,
    /// `(row, j)` for the truncation of `e_row A` at `j`; `None` for zero.
    pub vertex_labels: Vec<Option<(usize, i64)>>,
    pub rules: Vec<ArrowRule>,
}

impl CyclicHasse {
    pub fn count(&self, rule: ArrowRule) -> usize {
        self.rules.iter().filter(|&&r| r == rule).count()
    }

    /// Number of nonzero vertices on each row.
    pub fn row_lengths(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for &(r, _) in self.vertex_labels.iter().flatten() {
            out[r] += 1;
        }
        out
    }
}

/// Builds the Hasse quiver of `V_A` for `cyclic_order(weights)` from the
/// weights alone. Row `r` holds `1 <= j <= -p_{r-1}`; vertex `(r, j)` is
/// labelled by `max(m(r, .) - j, 0)`.
pub fn cyclic_hasse_oracle(weights: &[i64]) -> Result<CyclicHasse> {
    let (m, g) = cyclic_order(weights)?;
    if let Some(i) = g.p.iter().position(|&p| p > 0) {
        return Err(Error::PositiveParameter(i));
    }
    let n = weights.len();
    let bound = |r: usize| -g.p[(r + n - 1) % n];

    let mut vertex_labels = vec![None];
    let mut vertices = vec![ExponentVector::zeros(n)];
    let mut index = HashMap::new();
    for r in 0..n {
        let row = m.row_vector(r);
        for j in 1..=bound(r) {
            index.insert((r, j), vertices.len());
            vertex_labels.push(Some((r, j)));
            vertices.push(truncate_shift(&row, j));
        }
    }

    let mut arrows = Vec::new();
    let mut rules = Vec::new();
    for r in 0..n {
        for j in 1..bound(r) {
            arrows.push((index[&(r, j)], index[&(r, j + 1)]));
            rules.push(ArrowRule::Along);
        }
    }
    for k in 0..n {
        let src = (k + 1) % n;
        for j in 1..=bound(k) - weights[k] {
            arrows.push((index[&(src, j)], index[&(k, j + weights[k])]));
            rules.push(ArrowRule::Across);
        }
    }
    for r in 0..n {
        // A row end already covered by an `Across` arrow (possible when
        // `w_{r-2} = 0`) lies strictly above a nonzero vertex, so it does not
        // cover 0.
        let below = (r + n - 1) % n;
        if bound(r) >= 1 && bound(r) > bound(below) - weights[below] {
            arrows.push((index[&(r, bound(r))], 0));
            rules.push(ArrowRule::ToZero);
        }
    }
    Ok(CyclicHasse { quiver: Quiver { vertices, arrows }, vertex_labels, rules })
}
