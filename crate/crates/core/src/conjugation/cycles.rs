//! Cycle sums and non-negative conjugates of integer matrices.
//!
//! A square matrix `m` is Σ-non-negative when every cyclic sum
//! `m(i_1,i_2) + ... + m(i_k,i_1)` is non-negative. Such a matrix has a
//! conjugate `m(i,j) + s(i) - s(j)` with no negative entries; the production
//! route finds `s` as shortest-path potentials.

use std::fmt;

use itertools::Itertools;

use crate::error::{add, Error, Result};
use crate::exponent::{IntMatrix, ShiftVector};

/// A cyclically closed index sequence `(i_1, ..., i_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleSeq(Vec<usize>);

impl CycleSeq {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::CycleTooShort);
        }
        Ok(CycleSeq(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive pairs, including the closing pair `(i_k, i_1)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.0.len();
        (0..k).map(move |t| (self.0[t], self.0[(t + 1) % k]))
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.0.iter().all_unique()
    }

    /// Rotates so that the smallest index comes first.
    fn rotated_to_min(mut self) -> Self {
        if let Some(pos) = self.0.iter().position_min() {
            self.0.rotate_left(pos);
        }
        self
    }
}

impl fmt::Display for CycleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

fn check_indices(m: &IntMatrix, s: &CycleSeq) -> Result<()> {
    let n = m.n();
    match s.0.iter().find(|&&i| i >= n) {
        Some(&index) => Err(Error::IndexOutOfRange { index, n }),
        None => Ok(()),
    }
}

pub fn cycle_sum(m: &IntMatrix, s: &CycleSeq) -> Result<i64> {
    check_indices(m, s)?;
    s.edges().try_fold(0i64, |acc, (i, j)| add(acc, m.get(i, j)))
}

const BRUTE_FORCE_MAX: usize = 8;
const MIN_CYCLE_MAX: usize = 10;

/// Permutation test: `sum_i m(i, sigma(i)) >= 0` for every permutation `sigma`.
pub fn is_sigma_nonneg_bruteforce(m: &IntMatrix) -> Result<bool> {
    let n = m.n();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::TooLarge { n, max: BRUTE_FORCE_MAX });
    }
    Ok((0..n).permutations(n).all(|sigma| {
        sigma
            .iter()
            .enumerate()
            .map(|(i, &j)| m.get(i, j) as i128)
            .sum::<i128>()
            >= 0
    }))
}

/// Shortest-path potentials from a virtual source joined to every vertex by a
/// zero-weight edge. Off-diagonal entries are the edge weights. Returns a
/// negative cycle instead when one exists.
fn potentials(m: &IntMatrix) -> std::result::Result<Vec<i128>, CycleSeq> {
    let n = m.n();
    let mut dist = vec![0i128; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut last_relaxed = None;
    for _ in 0..n {
        last_relaxed = None;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let d = dist[i] + m.get(i, j) as i128;
                if d < dist[j] {
                    dist[j] = d;
                    pred[j] = Some(i);
                    last_relaxed = Some(j);
                }
            }
        }
        if last_relaxed.is_none() {
            return Ok(dist);
        }
    }
    let Some(mut x) = last_relaxed else {
        return Ok(dist);
    };
    // Walking back n steps lands inside the cycle of the predecessor graph.
    for _ in 0..n {
        x = pred[x].expect("relaxed vertex has a predecessor");
    }
    let mut cycle = vec![x];
    let mut y = pred[x].expect("cycle vertex has a predecessor");
    while y != x {
        cycle.push(y);
        y = pred[y].expect("cycle vertex has a predecessor");
    }
    cycle.reverse();
    Err(CycleSeq(cycle).rotated_to_min())
}

/// Cycle test via negative-cycle detection; polynomial in `n`.
pub fn is_sigma_nonneg(m: &IntMatrix) -> bool {
    (0..m.n()).all(|i| m.get(i, i) >= 0) && potentials(m).is_ok()
}

/// A multiplicity-free cycle of length at least 2 with the least cycle sum.
///
/// Ties go to the shortest cycle, then to the lexicographically smallest
/// sequence starting at its least index.
pub fn min_cycle(m: &IntMatrix) -> Result<(CycleSeq, i64)> {
    let n = m.n();
    if n > MIN_CYCLE_MAX {
        return Err(Error::TooLarge { n, max: MIN_CYCLE_MAX });
    }
    if n < 2 {
        return Err(Error::CycleTooShort);
    }

    struct Search<'a> {
        m: &'a IntMatrix,
        path: Vec<usize>,
        used: Vec<bool>,
        best: Option<(i128, usize, Vec<usize>)>,
    }

    impl Search<'_> {
        fn extend(&mut self, partial: i128) {
            let start = self.path[0];
            let last = *self.path.last().unwrap();
            if self.path.len() >= 2 {
                let total = partial + self.m.get(last, start) as i128;
                let key = (total, self.path.len());
                let better = match &self.best {
                    None => true,
                    Some((v, l, seq)) => key < (*v, *l) || (key == (*v, *l) && self.path < *seq),
                };
                if better {
                    self.best = Some((total, self.path.len(), self.path.clone()));
                }
            }
            for next in start + 1..self.m.n() {
                if self.used[next] {
                    continue;
                }
                self.used[next] = true;
                self.path.push(next);
                self.extend(partial + self.m.get(last, next) as i128);
                self.path.pop();
                self.used[next] = false;
            }
        }
    }

    let mut search = Search { m, path: Vec::with_capacity(n), used: vec![false; n], best: None };
    for start in 0..n - 1 {
        search.path.push(start);
        search.used[start] = true;
        search.extend(0);
        search.used[start] = false;
        search.path.pop();
    }
    let (value, _, seq) = search.best.expect("n >= 2 has a 2-cycle");
    let value = i64::try_from(value).map_err(|_| Error::Overflow)?;
    Ok((CycleSeq(seq), value))
}

/// Returns `s` with `m(i,j) + s(i) - s(j) >= 0` for all `i, j`.
///
/// Any valid potential is returned; it is not normalised.
pub fn nonneg_conjugate(m: &IntMatrix) -> Result<ShiftVector> {
    if let Some(i) = (0..m.n()).find(|&i| m.get(i, i) < 0) {
        return Err(Error::NegativeDiagonal(i));
    }
    let dist = match potentials(m) {
        Ok(d) => d,
        Err(cycle) => {
            if cycle_sum(m, &cycle)? >= 0 {
                return Err(Error::Postcondition("negative-cycle witness has non-negative sum"));
            }
            return Err(Error::NegativeCycle(cycle));
        }
    };
    let s = ShiftVector(
        dist.into_iter()
            .map(|d| i64::try_from(d).map_err(|_| Error::Overflow))
            .collect::<Result<Vec<_>>>()?,
    );
    if m.conjugate(&s)?.min_entry() < 0 {
        return Err(Error::Postcondition("potential conjugate has a negative entry"));
    }
    Ok(s)
}

/// Conjugation normalising a minimal cycle `(c_0, ..., c_{l-1})`:
/// `s(c_k) = m(c_0,c_1) + ... + m(c_{k-1},c_k)`, zero off the cycle.
///
/// Afterwards the cycle's edges read `0, ..., 0, m_min` and the restriction of
/// the conjugate to the cycle's indices is non-negative.
pub fn normalized_cycle_conjugate(m: &IntMatrix, cycle: &CycleSeq) -> Result<ShiftVector> {
    check_indices(m, cycle)?;
    if cycle.len() < 2 {
        return Err(Error::CycleTooShort);
    }
    if let Some(&dup) = cycle.0.iter().duplicates().next() {
        return Err(Error::CycleNotMultiplicityFree(dup));
    }
    let c = cycle.indices();
    let mut s = vec![0i64; m.n()];
    for k in 1..c.len() {
        s[c[k]] = add(s[c[k - 1]], m.get(c[k - 1], c[k]))?;
    }
    let s = ShiftVector(s);
    let total = cycle_sum(m, cycle)?;
    let sm = m.conjugate(&s)?;
    let last = c.len() - 1;
    let normalized = (0..last).all(|k| sm.get(c[k], c[k + 1]) == 0) && sm.get(c[last], c[0]) == total;
    let nonneg = c.iter().all(|&i| c.iter().all(|&j| sm.get(i, j) >= 0));
    if !(normalized && nonneg) {
        return Err(Error::NotMinCycle);
    }
    Ok(s)
}

/// Non-negative conjugate by repeated minimal-cycle normalisation and
/// contraction. Exponential; limited to `n <= 10`.
pub fn contraction_conjugate(m: &IntMatrix) -> Result<ShiftVector> {
    let n = m.n();
    if n > MIN_CYCLE_MAX {
        return Err(Error::TooLarge { n, max: MIN_CYCLE_MAX });
    }
    if let Some(i) = (0..n).find(|&i| m.get(i, i) < 0) {
        return Err(Error::NegativeDiagonal(i));
    }
    if let Err(cycle) = potentials(m) {
        return Err(Error::NegativeCycle(cycle));
    }
    let s = contract(m)?;
    if m.conjugate(&s)?.min_entry() < 0 {
        return Err(Error::Postcondition("contraction conjugate has a negative entry"));
    }
    Ok(s)
}

fn contract(m: &IntMatrix) -> Result<ShiftVector> {
    let n = m.n();
    if n == 1 {
        return Ok(ShiftVector::zeros(1));
    }
    let (cycle, value) = min_cycle(m)?;
    if value < 0 {
        return Err(Error::NegativeCycle(cycle));
    }
    let s1 = normalized_cycle_conjugate(m, &cycle)?;
    let m1 = m.conjugate(&s1)?;

    let on_cycle: Vec<bool> = (0..n).map(|i| cycle.0.contains(&i)).collect();
    let rest: Vec<usize> = (0..n).filter(|&i| !on_cycle[i]).collect();
    let t = rest.len();
    let contracted = IntMatrix::from_fn(t + 1, |x, y| match (x == t, y == t) {
        (false, false) => m1.get(rest[x], rest[y]),
        (false, true) => cycle.0.iter().map(|&j| m1.get(rest[x], j)).min().unwrap(),
        (true, false) => cycle.0.iter().map(|&i| m1.get(i, rest[y])).min().unwrap(),
        (true, true) => 0,
    });
    let s_bar = contract(&contracted)?;

    let mut s = s1.into_inner();
    let mut next = 0;
    for (i, si) in s.iter_mut().enumerate() {
        let lift = if on_cycle[i] {
            s_bar[t]
        } else {
            next += 1;
            s_bar[next - 1]
        };
        *si = add(*si, lift)?;
    }
    Ok(ShiftVector(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn cyc(v: &[usize]) -> CycleSeq {
        CycleSeq::new(v.to_vec()).unwrap()
    }

    fn uniform4() -> IntMatrix {
        mat(&[&[0, 1, 2, 3], &[3, 0, 1, 2], &[2, 3, 0, 1], &[1, 2, 3, 0]])
    }

    #[test]
    fn cycle_sums() {
        let m = uniform4();
        assert_eq!(cycle_sum(&m, &cyc(&[0, 1, 2, 3])).unwrap(), 4);
        assert_eq!(cycle_sum(&m, &cyc(&[2])).unwrap(), 0);
        assert_eq!(cycle_sum(&m, &cyc(&[0, 1])).unwrap(), 4);
        assert!(matches!(
            cycle_sum(&m, &cyc(&[0, 4])),
            Err(Error::IndexOutOfRange { index: 4, n: 4 })
        ));
        assert_eq!(CycleSeq::new(vec![]), Err(Error::CycleTooShort));
    }

    #[test]
    fn brute_force_examples() {
        assert!(is_sigma_nonneg_bruteforce(&IntMatrix::zeros(3)).unwrap());
        assert!(!is_sigma_nonneg_bruteforce(&mat(&[&[0, 1], &[-2, 0]])).unwrap());
        assert!(is_sigma_nonneg_bruteforce(&uniform4()).unwrap());
        assert_eq!(
            is_sigma_nonneg_bruteforce(&IntMatrix::zeros(9)),
            Err(Error::TooLarge { n: 9, max: 8 })
        );
    }

    #[test]
    fn cycle_test_examples() {
        assert!(is_sigma_nonneg(&mat(&[&[0, 3], &[-1, 0]])));
        assert!(!is_sigma_nonneg(&mat(&[&[0, 1], &[-2, 0]])));
        assert!(!is_sigma_nonneg(&mat(&[&[-1, 5], &[5, 0]])));
        assert!(is_sigma_nonneg(&IntMatrix::zeros(40)));
    }

    #[test]
    fn min_cycle_examples() {
        assert_eq!(min_cycle(&mat(&[&[0, 3], &[-1, 0]])).unwrap(), (cyc(&[0, 1]), 2));
        let (c, v) = min_cycle(&IntMatrix::zeros(3)).unwrap();
        assert_eq!((c, v), (cyc(&[0, 1]), 0));
        let m = mat(&[&[0, 1, 5], &[2, 0, 1], &[1, 4, 0]]);
        assert_eq!(min_cycle(&m).unwrap(), (cyc(&[0, 1]), 3));
        assert_eq!(cycle_sum(&m, &cyc(&[0, 1, 2])).unwrap(), 3);
        assert_eq!(min_cycle(&IntMatrix::zeros(1)), Err(Error::CycleTooShort));
        assert!(matches!(min_cycle(&IntMatrix::zeros(11)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn nonneg_conjugate_examples() {
        let m = mat(&[&[0, 3], &[-1, 0]]);
        let s = nonneg_conjugate(&m).unwrap();
        assert_eq!(s.as_slice(), &[-1, 0]);
        assert_eq!(m.conjugate(&s).unwrap().to_rows(), vec![vec![0, 2], vec![0, 0]]);

        let z = IntMatrix::zeros(3);
        assert_eq!(nonneg_conjugate(&z).unwrap(), ShiftVector::zeros(3));

        assert_eq!(
            nonneg_conjugate(&mat(&[&[0, 1], &[-2, 0]])),
            Err(Error::NegativeCycle(cyc(&[0, 1])))
        );
        assert_eq!(
            nonneg_conjugate(&mat(&[&[0, 1], &[1, -1]])),
            Err(Error::NegativeDiagonal(1))
        );
    }

    #[test]
    fn negative_cycle_witness_direction() {
        // Only the cycle 0 -> 2 -> 1 -> 0 is negative.
        let m = mat(&[&[0, 5, -1], &[-1, 0, 5], &[5, -1, 0]]);
        match nonneg_conjugate(&m) {
            Err(Error::NegativeCycle(c)) => {
                assert_eq!(c, cyc(&[0, 2, 1]));
                assert_eq!(cycle_sum(&m, &c).unwrap(), -3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn normalized_cycle_examples() {
        let m = mat(&[&[0, 3], &[-1, 0]]);
        let s = normalized_cycle_conjugate(&m, &cyc(&[0, 1])).unwrap();
        assert_eq!(s.as_slice(), &[0, 3]);
        let sm = m.conjugate(&s).unwrap();
        assert_eq!((sm.get(0, 1), sm.get(1, 0)), (0, 2));

        let one = mat(&[&[0]]);
        assert_eq!(normalized_cycle_conjugate(&one, &cyc(&[0])), Err(Error::CycleTooShort));

        let m = mat(&[&[0, 1, 5], &[2, 0, 1], &[1, 4, 0]]);
        let s = normalized_cycle_conjugate(&m, &cyc(&[0, 1, 2])).unwrap();
        assert_eq!(s.as_slice(), &[0, 1, 2]);
        assert_eq!(
            m.conjugate(&s).unwrap().to_rows(),
            vec![vec![0, 0, 3], vec![3, 0, 0], vec![3, 5, 0]]
        );
    }

    #[test]
    fn normalized_cycle_rejects_non_minimal() {
        // (0,1) sums to 6 but (0,2) sums to 0.
        let m = mat(&[&[0, 3, 0], &[3, 0, 9], &[0, 9, 0]]);
        let m3 = mat(&[&[0, 1, 0], &[1, 0, 1], &[-1, 1, 0]]);
        assert!(normalized_cycle_conjugate(&m, &cyc(&[0, 1])).is_ok());
        assert_eq!(
            normalized_cycle_conjugate(&m3, &cyc(&[0, 1, 2])),
            Err(Error::NotMinCycle)
        );
        assert_eq!(
            normalized_cycle_conjugate(&m, &cyc(&[0, 1, 0])),
            Err(Error::CycleNotMultiplicityFree(0))
        );
    }

    #[test]
    fn contraction_route_examples() {
        for m in [
            mat(&[&[0, 3], &[-1, 0]]),
            mat(&[&[0, 1, 5], &[2, 0, 1], &[1, 4, 0]]),
            mat(&[&[0, 1, 4, 2], &[3, 0, 1, 2], &[1, 2, 0, 0], &[0, 1, 1, 0]])
                .conjugate(&ShiftVector(vec![0, 3, -2, 1]))
                .unwrap(),
            uniform4(),
        ] {
            let s = contraction_conjugate(&m).unwrap();
            assert!(m.conjugate(&s).unwrap().min_entry() >= 0);
        }
        assert!(matches!(
            contraction_conjugate(&mat(&[&[0, 1], &[-2, 0]])),
            Err(Error::NegativeCycle(_))
        ));
    }
}
