//! m-data and their normalisation to almost constant, non-negative form.
//!
//! An m-data `(m, a, nu)` satisfies `m(nu i, nu j) = m(i,j) - a(i) + a(j)` and
//! every `nu`-orbit has the same average `a_av` of `a`. Conjugating by `s`
//! gives `(m(i,j) + s(i) - s(j), a(i) + s(i) - s(nu i), nu)`.
//!
//! Within an orbit, positions are counted along `nu` from the orbit's smallest
//! index. All floors round toward negative infinity.

use num_rational::Ratio;

use super::cycles::nonneg_conjugate;
use crate::error::{add, check_sum, mul, sub, Error, Result};
use crate::exponent::{check_len, ExponentMatrix, IntMatrix, Permutation, ShiftVector};
use crate::gorenstein::GorensteinData;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MData {
    m: IntMatrix,
    a: Vec<i64>,
    nu: Permutation,
    a_av: Ratio<i64>,
    orbits: Vec<Vec<usize>>,
}

/// Checks both m-data conditions and derives `a_av` and the orbits.
pub fn validate_mdata(m: &IntMatrix, a: &[i64], nu: &Permutation) -> Result<MData> {
    MData::new(m.clone(), a.to_vec(), nu.clone())
}

impl MData {
    pub fn new(m: IntMatrix, a: Vec<i64>, nu: Permutation) -> Result<Self> {
        let n = m.n();
        check_len(n, a.len())?;
        check_len(n, nu.len())?;
        let orbits = nu.orbits();
        let sums = orbits
            .iter()
            .map(|o| o.iter().try_fold(0i64, |acc, &i| add(acc, a[i])))
            .collect::<Result<Vec<_>>>()?;
        for y in 1..orbits.len() {
            if mul(sums[0], orbits[y].len() as i64)? != mul(sums[y], orbits[0].len() as i64)? {
                return Err(Error::OrbitAverageMismatch(0, y));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let expected = add(sub(m.get(i, j), a[i])?, a[j])?;
                if m.get(nu.apply(i), nu.apply(j)) != expected {
                    return Err(Error::EquivarianceViolation(i, j));
                }
            }
        }
        let a_av = Ratio::new(sums[0], orbits[0].len() as i64);
        Ok(MData { m, a, nu, a_av, orbits })
    }

    /// The m-data `(m^T, -p, nu)` of a Gorenstein tiled order.
    ///
    /// The m-data matrix at `(i,j)` is the lowest degree of `e_j A e_i`, i.e.
    /// the transpose of the exponent matrix. Conjugating it by `s` corresponds
    /// to `morita_shift(m, -s)` on the order.
    pub fn from_order(m: &ExponentMatrix, g: &GorensteinData) -> Result<Self> {
        let a = g
            .p
            .iter()
            .map(|&p| p.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        MData::new(m.as_matrix().transpose(), a, g.nu.clone())
    }

    pub fn m(&self) -> &IntMatrix {
        &self.m
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn nu(&self) -> &Permutation {
        &self.nu
    }

    pub fn a_av(&self) -> Ratio<i64> {
        self.a_av
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn n(&self) -> usize {
        self.m.n()
    }

    /// `orbit_of[i]` is the index of the orbit containing `i`.
    pub fn orbit_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (x, orbit) in self.orbits.iter().enumerate() {
            for &i in orbit {
                out[i] = x;
            }
        }
        out
    }

    /// Position of each index along its orbit, counted from the base point.
    fn positions(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for orbit in &self.orbits {
            for (k, &i) in orbit.iter().enumerate() {
                out[i] = k;
            }
        }
        out
    }

    pub fn is_non_negative(&self) -> bool {
        self.m.min_entry() >= 0
    }

    /// `|a(i) - a_av| < 1` for every `i`.
    pub fn is_almost_constant(&self) -> bool {
        let (r, g) = (*self.a_av.numer() as i128, *self.a_av.denom() as i128);
        self.a.iter().all(|&x| (g * x as i128 - r).abs() < g)
    }

    /// Whether each orbit, read from a suitable starting point, carries the
    /// floor profile of `a_av`.
    pub fn is_floor_type(&self) -> bool {
        let (r, g) = (*self.a_av.numer(), *self.a_av.denom());
        self.orbits.iter().all(|orbit| {
            let len = orbit.len();
            let Ok(profile) = floor_profile(r, g, len) else {
                return false;
            };
            (0..len).any(|start| (0..len).all(|k| self.a[orbit[(start + k) % len]] == profile[k]))
        })
    }

    /// Whether each orbit carries the floor profile starting at its base point.
    fn is_canonical_floor_type(&self) -> bool {
        let (r, g) = (*self.a_av.numer(), *self.a_av.denom());
        self.orbits.iter().all(|orbit| {
            floor_profile(r, g, orbit.len())
                .map(|profile| orbit.iter().zip(&profile).all(|(&i, &f)| self.a[i] == f))
                .unwrap_or(false)
        })
    }
}

pub fn conjugate_mdata(md: &MData, s: &ShiftVector) -> Result<MData> {
    check_len(md.n(), s.len())?;
    let m = md.m.conjugate(s)?;
    let a = (0..md.n())
        .map(|i| add(md.a[i], sub(s[i], s[md.nu.apply(i)])?))
        .collect::<Result<Vec<_>>>()?;
    let out = MData::new(m, a, md.nu.clone())?;
    if out.a_av != md.a_av {
        return Err(Error::Postcondition("conjugation changed a_av"));
    }
    Ok(out)
}

/// `f(i) = floor((i+1) r/g) - floor(i r/g)` for `i` in `0..n`.
///
/// Requires `(r/g) n` to be an integer; the result then takes only the values
/// `floor(r/g)` and `floor(r/g) + 1` and sums to `r n / g`.
pub fn floor_profile(r: i64, g: i64, n: usize) -> Result<Vec<i64>> {
    if g <= 0 {
        return Err(Error::NonPositiveDenominator(g));
    }
    if n == 0 || mul(r, n as i64)? % g != 0 {
        return Err(Error::NotIntegralSum { r, g, n });
    }
    (0..n as i64)
        .map(|i| Ok(mul(i + 1, r)?.div_euclid(g) - mul(i, r)?.div_euclid(g)))
        .collect()
}

/// Shift taking `md` to floor type: on each orbit, at position `k`,
/// `s = a(pos 0) + ... + a(pos k-1) - floor(k a_av)`.
pub fn floor_type_conjugate(md: &MData) -> Result<ShiftVector> {
    let (r, g) = (*md.a_av.numer(), *md.a_av.denom());
    let mut s = vec![0i64; md.n()];
    for orbit in &md.orbits {
        let mut prefix = 0i64;
        for (k, &i) in orbit.iter().enumerate() {
            s[i] = sub(prefix, mul(k as i64, r)?.div_euclid(g))?;
            prefix = add(prefix, md.a[i])?;
        }
    }
    Ok(ShiftVector(s))
}

/// The `g`-fold orbit sums of a floor-type m-data and their blockwise minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedMData {
    /// Denominator of `a_av` in lowest terms.
    pub g: i64,
    /// `m_prime(i,j) = sum_{k<g} m(nu^k i, nu^k j)`.
    pub m_prime: IntMatrix,
    /// `m_bar(x,y)` is the least `m_prime(i,j)` over `i` in orbit `x`, `j` in orbit `y`.
    pub m_bar: IntMatrix,
    pub orbit_of: Vec<usize>,
}

pub fn fold_mdata(md: &MData) -> Result<FoldedMData> {
    if !md.is_floor_type() {
        return Err(Error::NotFloorType);
    }
    let g = *md.a_av.denom();
    let steps = g as usize;
    if md.orbits.iter().any(|o| o.len() % steps != 0) {
        return Err(Error::Postcondition("orbit length not divisible by g"));
    }
    let n = md.n();
    let nu = &md.nu;
    for i in 0..n {
        for j in 0..n {
            if md.m.get(nu.apply_pow(i, steps), nu.apply_pow(j, steps)) != md.m.get(i, j) {
                return Err(Error::PeriodicityViolation(i, j));
            }
        }
    }
    let m_prime = IntMatrix::try_from_fn(n, |i, j| {
        let (mut x, mut y, mut acc) = (i, j, 0i64);
        for _ in 0..steps {
            acc = add(acc, md.m.get(x, y))?;
            x = nu.apply(x);
            y = nu.apply(y);
        }
        Ok(acc)
    })?;
    let orbits = &md.orbits;
    let m_bar = IntMatrix::from_fn(orbits.len(), |x, y| {
        orbits[x]
            .iter()
            .flat_map(|&i| orbits[y].iter().map(move |&j| (i, j)))
            .map(|(i, j)| m_prime.get(i, j))
            .min()
            .expect("orbits are nonempty")
    });
    Ok(FoldedMData { g, m_prime, m_bar, orbit_of: md.orbit_of() })
}

fn check_sigma_nonneg(m: &IntMatrix) -> Result<()> {
    nonneg_conjugate(m).map(|_| ())
}

/// Total shift taking a Σ-non-negative m-data to a non-negative, almost
/// constant m-data of floor type.
///
/// Pipeline: floor-type conjugate, fold by `g`, non-negative conjugate `s_bar`
/// of the folded orbit matrix, then lift `s_bar` to
/// `s(i) = floor(k r/g) - floor((k r - s_bar(x))/g)` at position `k` of orbit `x`.
pub fn normalize_mdata(md: &MData) -> Result<ShiftVector> {
    check_sigma_nonneg(&md.m)?;

    let to_floor = floor_type_conjugate(md)?;
    let floored = conjugate_mdata(md, &to_floor)?;
    if !floored.is_canonical_floor_type() {
        return Err(Error::Postcondition("floor-type conjugate is not of floor type"));
    }
    let folded = fold_mdata(&floored)?;
    let s_bar = nonneg_conjugate(&folded.m_bar)?;

    let (r, g) = (*md.a_av.numer(), *md.a_av.denom());
    let positions = floored.positions();
    let lift = (0..md.n())
        .map(|i| {
            let kr = mul(positions[i] as i64, r)?;
            let shifted = sub(kr, s_bar[folded.orbit_of[i]])?;
            sub(kr.div_euclid(g), shifted.div_euclid(g))
        })
        .collect::<Result<Vec<_>>>()?;
    let total = to_floor.compose(&ShiftVector(lift))?;

    let out = conjugate_mdata(md, &total)?;
    if !out.is_floor_type() {
        return Err(Error::Postcondition("normalized m-data is not of floor type"));
    }
    if !out.is_almost_constant() {
        return Err(Error::Postcondition("normalized m-data is not almost constant"));
    }
    if !out.is_non_negative() {
        return Err(Error::Postcondition("normalized m-data has a negative entry"));
    }
    Ok(total)
}

/// Mean of `a`; equals `a_av` for any m-data.
pub fn mean_of(a: &[i64]) -> Result<Ratio<i64>> {
    if a.is_empty() {
        return Err(Error::Empty);
    }
    Ok(Ratio::new(check_sum(a)?, a.len() as i64))
}
