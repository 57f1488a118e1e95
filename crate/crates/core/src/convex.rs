//! Set functions `r: 2^[n] → ℚ`, their homogeneous Tutte polynomials
//! `Z_{p,r} = Σ_S p^{-r(S)} w_0^{n-|S|} Π_{i∈S} w_i`, the grid probe for the
//! class of functions whose `Z_{p,r}` is Lorentzian for all `0 < p <= 1`,
//! submodularity and M♮-concavity.

use num_traits::{One, Signed, Zero};

use crate::config;
use crate::lorentzian::{is_lorentzian, LorentzianVerdict};
use crate::poly::{HomogeneousPolynomial, ParametricPolynomial, Polynomial};
use crate::rational::{self, Rational};
use crate::{Error, Matroid, Result, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunction {
    n: usize,
    values: Vec<Rational>,
}

impl SetFunction {
    /// `values` is indexed by subset bitmask.
    pub fn new(n: usize, values: Vec<Rational>) -> Result<SetFunction> {
        config::check_enumerable(n)?;
        if values.len() != 1usize << n {
            return Err(Error::DimensionMismatch(format!(
                "{} values for 2^{n} subsets",
                values.len()
            )));
        }
        Ok(SetFunction { n, values })
    }

    pub fn from_fn<F: FnMut(Subset) -> Rational>(n: usize, f: F) -> Result<SetFunction> {
        config::check_enumerable(n)?;
        Ok(SetFunction {
            n,
            values: Subset::all(n).map(f).collect(),
        })
    }

    pub fn zero(n: usize) -> Result<SetFunction> {
        SetFunction::from_fn(n, |_| Rational::zero())
    }

    pub fn rank_function(m: &Matroid) -> Result<SetFunction> {
        let table = m.rank_table()?;
        SetFunction::from_fn(m.ground_size(), |s| {
            rational::int(i64::from(table[s.bits() as usize]))
        })
    }

    /// `c_0 + Σ_k c_k rk_{M_k}`.
    pub fn rank_combination(c0: &Rational, terms: &[(Rational, Matroid)]) -> Result<SetFunction> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::InvalidParameter(
                "a rank combination needs at least one matroid".into(),
            ));
        };
        let n = first.ground_size();
        let mut tables = Vec::with_capacity(terms.len());
        for (_, m) in terms {
            if m.ground_size() != n {
                return Err(Error::GroundSetMismatch {
                    left: n,
                    right: m.ground_size(),
                });
            }
            tables.push(m.rank_table()?);
        }
        SetFunction::from_fn(n, |s| {
            let mut v = c0.clone();
            for ((c, _), t) in terms.iter().zip(&tables) {
                v += c * rational::int(i64::from(t[s.bits() as usize]));
            }
            v
        })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, s: Subset) -> &Rational {
        &self.values[s.bits() as usize]
    }

    pub fn add_constant(&self, c: &Rational) -> SetFunction {
        SetFunction {
            n: self.n,
            values: self.values.iter().map(|v| v + c).collect(),
        }
    }

    fn integer_values(&self) -> Result<Vec<i64>> {
        Subset::all(self.n)
            .map(|s| {
                let v = self.value(s);
                if !rational::is_integer(v) {
                    return Err(Error::NonIntegerValue { subset: s });
                }
                i64::try_from(v.numer()).map_err(|_| {
                    Error::InvalidParameter(format!("value at {s} does not fit in 64 bits"))
                })
            })
            .collect()
    }
}

fn homogeneous_exps(n: usize, s: Subset) -> Vec<u32> {
    let mut e = Vec::with_capacity(n + 1);
    e.push((n - s.len()) as u32);
    e.extend((0..n).map(|i| u32::from(s.contains(i))));
    e
}

/// `Z_{p,r}` at a positive rational `p`. Exact mode needs integer values.
pub fn z_of_setfunction(r: &SetFunction, p: &Rational) -> Result<HomogeneousPolynomial> {
    if !p.is_positive() {
        return Err(Error::InvalidParameter(format!("p = {p} must be positive")));
    }
    let values = r.integer_values()?;
    let n = r.ground_size();
    let mut z = Polynomial::zero(n + 1);
    for s in Subset::all(n) {
        z.add_term(
            homogeneous_exps(n, s),
            rational::pow(p, -values[s.bits() as usize]),
        );
    }
    HomogeneousPolynomial::new(z, n as u32)
}

/// `Z_{p,r}` with `p` symbolic.
pub fn z_parametric(r: &SetFunction) -> Result<ParametricPolynomial> {
    let values = r.integer_values()?;
    let n = r.ground_size();
    let mut z = ParametricPolynomial::zero(1, n + 1);
    for s in Subset::all(n) {
        z.add_term(
            vec![-values[s.bits() as usize]],
            homogeneous_exps(n, s),
            Rational::one(),
        );
    }
    Ok(z)
}

/// Lowest-order part in `p` of `Z_{p,r}(1, p^{e_1} w_1, .., p^{e_n} w_n)`,
/// as a polynomial in `w_1..w_n`.
pub fn limit_extraction(r: &SetFunction, exponents: &[i64]) -> Result<Polynomial> {
    let n = r.ground_size();
    if exponents.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} scaling exponents for {n} variables",
            exponents.len()
        )));
    }
    let mut z = z_parametric(r)?;
    for (i, &e) in exponents.iter().enumerate() {
        z = z.scale_variable(i + 1, 0, e);
    }
    Ok(z.lowest_order(0).into_polynomial()?.dehomogenize(0))
}

/// Default grid `1/8, 2/8, .., 1`.
pub fn default_grid() -> Vec<Rational> {
    (1..=8).map(|k| rational::ratio(k, 8)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub points: Vec<(Rational, LorentzianVerdict)>,
}

impl ProbeReport {
    /// First grid value at which `Z_{p,r}` is not Lorentzian. Such a value
    /// proves that `r` is outside the class.
    pub fn failing(&self) -> Option<&(Rational, LorentzianVerdict)> {
        self.points.iter().find(|(_, v)| !v.is_lorentzian())
    }

    /// `true` when every grid point passed. This is evidence only.
    pub fn consistent_with_membership(&self) -> bool {
        self.failing().is_none()
    }
}

/// Certifies `Z_{p,r}` at each grid value in `(0, 1]`.
pub fn probe_ln(r: &SetFunction, grid: &[Rational]) -> Result<ProbeReport> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("grid is empty".into()));
    }
    if let Some(bad) = grid
        .iter()
        .find(|p| !p.is_positive() || **p > Rational::one())
    {
        return Err(Error::InvalidParameter(format!(
            "grid value {bad} is outside (0, 1]"
        )));
    }
    let mut points = Vec::with_capacity(grid.len());
    for p in grid {
        let verdict = is_lorentzian(&z_of_setfunction(r, p)?)?;
        points.push((p.clone(), verdict));
    }
    Ok(ProbeReport { points })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubmodularVerdict {
    Submodular,
    /// `r(S1 ∪ S2) + r(S1 ∩ S2) > r(S1) + r(S2)`.
    Fails {
        first: Subset,
        second: Subset,
    },
}

impl SubmodularVerdict {
    pub fn is_submodular(&self) -> bool {
        matches!(self, SubmodularVerdict::Submodular)
    }
}

/// Submodularity over all pairs of subsets.
pub fn is_submodular(r: &SetFunction) -> SubmodularVerdict {
    let n = r.ground_size();
    for a in Subset::all(n) {
        for b in Subset::all(n) {
            if b.bits() <= a.bits() {
                continue;
            }
            if r.value(a | b) + r.value(a & b) > r.value(a) + r.value(b) {
                return SubmodularVerdict::Fails {
                    first: a,
                    second: b,
                };
            }
        }
    }
    SubmodularVerdict::Submodular
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MnatVerdict {
    MNatConcave,
    /// `r(S+i+j) + r(S) > r(S+i) + r(S+j)`.
    LocalExchange {
        set: Subset,
        i: usize,
        j: usize,
    },
    /// The maximum of the three pair sums at `(S; i, j, k)` is attained once.
    UniqueMaximum {
        set: Subset,
        i: usize,
        j: usize,
        k: usize,
    },
}

impl MnatVerdict {
    pub fn is_mnat_concave(&self) -> bool {
        matches!(self, MnatVerdict::MNatConcave)
    }
}

/// M♮-concavity via the two local conditions: pairwise local exchange, and
/// for distinct `i, j, k` outside `S` the maximum of
/// `r(S+j+k) + r(S+i)`, `r(S+i+k) + r(S+j)`, `r(S+i+j) + r(S+k)` attained at
/// least twice. Elements already in `S` make both conditions trivial.
pub fn is_mnat_concave(r: &SetFunction) -> MnatVerdict {
    let n = r.ground_size();
    for s in Subset::all(n) {
        let out: Vec<usize> = s.complement(n).iter().collect();
        for (a, &i) in out.iter().enumerate() {
            for &j in &out[a + 1..] {
                if r.value(s.with(i).with(j)) + r.value(s) > r.value(s.with(i)) + r.value(s.with(j))
                {
                    return MnatVerdict::LocalExchange { set: s, i, j };
                }
            }
        }
    }
    for s in Subset::all(n) {
        let out: Vec<usize> = s.complement(n).iter().collect();
        for (a, &i) in out.iter().enumerate() {
            for (b, &j) in out.iter().enumerate().skip(a + 1) {
                for &k in &out[b + 1..] {
                    let v = [
                        r.value(s.with(j).with(k)) + r.value(s.with(i)),
                        r.value(s.with(i).with(k)) + r.value(s.with(j)),
                        r.value(s.with(i).with(j)) + r.value(s.with(k)),
                    ];
                    let max = v.iter().max().unwrap();
                    if v.iter().filter(|x| *x == max).count() < 2 {
                        return MnatVerdict::UniqueMaximum { set: s, i, j, k };
                    }
                }
            }
        }
    }
    MnatVerdict::MNatConcave
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub probe: ProbeReport,
    pub mnat: MnatVerdict,
}

impl ConsistencyReport {
    /// Every member of the class is M♮-concave, so a clean grid together
    /// with a failed M♮ check means the grid is too coarse (or a bug).
    pub fn contradiction_candidate(&self) -> bool {
        self.probe.consistent_with_membership() && !self.mnat.is_mnat_concave()
    }
}

pub fn mnat_consistency(r: &SetFunction, grid: &[Rational]) -> Result<ConsistencyReport> {
    Ok(ConsistencyReport {
        probe: probe_ln(r, grid)?,
        mnat: is_mnat_concave(r),
    })
}
