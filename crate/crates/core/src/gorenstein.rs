//! Gorenstein condition, Nakayama permutation and Gorenstein parameters.
//!
//! A tiled order is Gorenstein when every `i` has a partner `nu(i)` such that
//! `m(nu(i), j) + m(j, i)` does not depend on `j`. That constant is `ell_i`
//! and the Gorenstein parameter is `p_i = 1 - ell_i`.

use num_rational::Ratio;

use crate::error::{add, check_sum, mul, sub, Error, Result};
use crate::exponent::{check_len, ExponentMatrix, Permutation, ShiftVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinData {
    pub nu: Permutation,
    pub ell: Vec<i64>,
    pub p: Vec<i64>,
    /// Mean of `p`, in lowest terms with positive denominator.
    pub p_av: Ratio<i64>,
}

impl GorensteinData {
    pub fn from_parts(nu: Permutation, ell: Vec<i64>, p: Vec<i64>) -> Result<Self> {
        let n = nu.len();
        check_len(n, ell.len())?;
        check_len(n, p.len())?;
        let total = check_sum(&p)?;
        let p_av = Ratio::new(total, n as i64);
        Ok(GorensteinData { nu, ell, p, p_av })
    }

    pub fn n(&self) -> usize {
        self.nu.len()
    }

    /// Checks every defining identity of the data against `m`:
    /// the Gorenstein condition, `p_i = 1 - ell_i`, equivariance
    /// `m(nu i, nu j) = m(i,j) - p_i + p_j`, and the orbit averages.
    pub fn verify(&self, m: &ExponentMatrix) -> Result<()> {
        let n = self.n();
        check_len(n, m.n())?;
        for i in 0..n {
            let u = self.nu.apply(i);
            if m.get(u, i) != self.ell[i] {
                return Err(Error::Postcondition("ell_i != m(nu i, i)"));
            }
            if sub(1, self.ell[i])? != self.p[i] {
                return Err(Error::Postcondition("p_i != 1 - ell_i"));
            }
            for j in 0..n {
                if add(m.get(u, j), m.get(j, i))? != self.ell[i] {
                    return Err(Error::NotGorenstein(i));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = m.get(self.nu.apply(i), self.nu.apply(j));
                if lhs != add(m.get(i, j), sub(self.p[j], self.p[i])?)? {
                    return Err(Error::EquivarianceViolation(i, j));
                }
            }
        }
        self.check_orbit_averages()
    }

    /// Every `nu`-orbit must carry the same average parameter as the whole.
    pub fn check_orbit_averages(&self) -> Result<()> {
        let n = self.n() as i64;
        let total = check_sum(&self.p)?;
        for (x, orbit) in self.nu.orbits().iter().enumerate() {
            let orbit_sum = orbit.iter().try_fold(0i64, |acc, &i| add(acc, self.p[i]))?;
            if mul(orbit_sum, n)? != mul(total, orbit.len() as i64)? {
                return Err(Error::NonConstantOrbitAverage(x));
            }
        }
        Ok(())
    }
}

/// Finds the Nakayama permutation and parameters of a basic tiled order.
///
/// Exhaustive: for each `i` every candidate `u` is tried, O(n^3) overall.
pub fn detect_gorenstein(m: &ExponentMatrix) -> Result<GorensteinData> {
    m.require_basic_order()?;
    let n = m.n();
    let mut images = Vec::with_capacity(n);
    let mut ell = Vec::with_capacity(n);
    for i in 0..n {
        let mut found: Option<(usize, i64)> = None;
        for u in 0..n {
            let c = add(m.get(u, 0), m.get(0, i))?;
            let mut constant = true;
            for j in 1..n {
                if add(m.get(u, j), m.get(j, i))? != c {
                    constant = false;
                    break;
                }
            }
            if constant {
                if found.is_some() {
                    return Err(Error::AmbiguousNakayama(i));
                }
                found = Some((u, c));
            }
        }
        let (u, c) = found.ok_or(Error::NotGorenstein(i))?;
        images.push(u);
        ell.push(c);
    }
    let nu = Permutation::new(images)?;
    let p = ell.iter().map(|&l| sub(1, l)).collect::<Result<Vec<_>>>()?;
    let g = GorensteinData::from_parts(nu, ell, p)?;
    g.verify(m)?;
    Ok(g)
}

/// Parameters of the graded Morita equivalent order `End(⊕ e_i A(s_i))`:
/// `p'_i = p_i - s(i) + s(nu(i))`.
///
/// That order's exponent matrix is `morita_shift(m, -s)`.
pub fn shifted_parameters(g: &GorensteinData, s: &ShiftVector) -> Result<Vec<i64>> {
    check_len(g.n(), s.len())?;
    (0..g.n())
        .map(|i| add(sub(g.p[i], s[i])?, s[g.nu.apply(i)]))
        .collect()
}
