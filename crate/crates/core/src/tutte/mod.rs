//! Flag matroids and Tutte-type polynomials.
//!
//! All polynomials are built by enumerating subsets against cached rank
//! tables, so construction is bounded by [`crate::config::max_n`]. Variables
//! of the multivariate forms are `w_1..w_n` (indices `0..n`); homogeneous forms
//! put `w_0` first, so element `i` is variable `i + 1`.

mod flag;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use flag::FlagMatroid;

use crate::poly::{Exponents, HomogeneousPolynomial, ParametricPolynomial, Polynomial};
use crate::rational::{self, Rational};
use crate::{Error, Matroid, MatroidMorphism, Result, Subset};

fn multi_affine_exps(n: usize, s: Subset) -> Exponents {
    (0..n).map(|i| u32::from(s.contains(i))).collect()
}

fn homogeneous_exps(n: usize, s: Subset) -> Exponents {
    let mut e = Vec::with_capacity(n + 1);
    e.push((n - s.len()) as u32);
    e.extend((0..n).map(|i| u32::from(s.contains(i))));
    e
}

fn nonzero(q: &Rational, name: &str) -> Result<()> {
    if q.is_zero() {
        return Err(Error::InvalidParameter(format!("{name} must be nonzero")));
    }
    Ok(())
}

/// `q^{-k}` for `k = 0..=max`.
fn inverse_powers(q: &Rational, max: usize) -> Vec<Rational> {
    rational::powers(&q.recip(), max)
}

/// `Z_{q,M}(w) = Σ_S q^{-rk(S)} Π_{i∈S} w_i`.
pub fn multivariate_tutte(m: &Matroid, q: &Rational) -> Result<Polynomial> {
    nonzero(q, "q")?;
    let table = m.rank_table()?;
    let n = m.ground_size();
    let inv = inverse_powers(q, m.full_rank());
    let mut z = Polynomial::zero(n);
    for s in Subset::all(n) {
        z.add_term(
            multi_affine_exps(n, s),
            inv[table[s.bits() as usize] as usize].clone(),
        );
    }
    Ok(z)
}

/// `Z_{q,M}` with `q` kept symbolic (parameter 0).
pub fn multivariate_tutte_parametric(m: &Matroid) -> Result<ParametricPolynomial> {
    let table = m.rank_table()?;
    let n = m.ground_size();
    let mut z = ParametricPolynomial::zero(1, n);
    for s in Subset::all(n) {
        let r = i64::from(table[s.bits() as usize]);
        z.add_term(vec![-r], multi_affine_exps(n, s), Rational::one());
    }
    Ok(z)
}

/// `Z_{p,q,M↠N}(w) = Σ_S p^{-rk_M(S)} q^{-rk_N(S)} Π_{i∈S} w_i`.
pub fn quotient_multivariate_tutte(
    m: &Matroid,
    n: &Matroid,
    p: &Rational,
    q: &Rational,
) -> Result<Polynomial> {
    same_ground(m, n)?;
    nonzero(p, "p")?;
    nonzero(q, "q")?;
    let tm = m.rank_table()?;
    let tn = n.rank_table()?;
    let size = m.ground_size();
    let ip = inverse_powers(p, m.full_rank());
    let iq = inverse_powers(q, n.full_rank());
    let mut z = Polynomial::zero(size);
    for s in Subset::all(size) {
        let b = s.bits() as usize;
        z.add_term(
            multi_affine_exps(size, s),
            &ip[tm[b] as usize] * &iq[tn[b] as usize],
        );
    }
    Ok(z)
}

fn same_ground(m: &Matroid, n: &Matroid) -> Result<()> {
    if m.ground_size() != n.ground_size() {
        return Err(Error::GroundSetMismatch {
            left: m.ground_size(),
            right: n.ground_size(),
        });
    }
    Ok(())
}

/// A polynomial in `x, y, z` (variables 0, 1, 2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TrivariatePolynomial(Polynomial);

impl TrivariatePolynomial {
    pub fn coefficient(&self, x: u32, y: u32, z: u32) -> Rational {
        self.0.coefficient(&[x, y, z])
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        self.0.evaluate(&[x.clone(), y.clone(), z.clone()])
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn z_degree(&self) -> u32 {
        self.0.terms().map(|(e, _)| e[2]).max().unwrap_or(0)
    }
}

impl fmt::Display for TrivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_with(|i| ["x", "y", "z"][i].to_string()))
    }
}

/// Las Vergnas polynomial of a quotient `M ↠ N`:
/// `Σ_S (x-1)^{crk_N(S)} (y-1)^{|S|-rk_M(S)} z^{crk_M(S)-crk_N(S)}`.
pub fn lasvergnas_tutte(m: &Matroid, n: &Matroid) -> Result<TrivariatePolynomial> {
    same_ground(m, n)?;
    if let Err(crate::morphism::MorphismFailure::RankInequality(witness)) =
        crate::morphism::is_quotient(m, n)?
    {
        return Err(Error::NotAMorphism { witness });
    }
    let tm = m.rank_table()?;
    let tn = n.rank_table()?;
    let (rm, rn) = (m.full_rank() as u32, n.full_rank() as u32);
    let mut counts: BTreeMap<(u32, u32, u32), u64> = BTreeMap::new();
    for s in Subset::all(m.ground_size()) {
        let b = s.bits() as usize;
        let crk_n = rn - u32::from(tn[b]);
        let crk_m = rm - u32::from(tm[b]);
        let nullity = s.len() as u32 - u32::from(tm[b]);
        *counts.entry((crk_n, nullity, crk_m - crk_n)).or_default() += 1;
    }
    let mut t = Polynomial::zero(3);
    for ((a, b, c), count) in counts {
        let count = BigInt::from(count);
        for i in 0..=a {
            let ci = rational::binomial(a.into(), i.into()) * alternating(a - i);
            for j in 0..=b {
                let cj = rational::binomial(b.into(), j.into()) * alternating(b - j);
                t.add_term(vec![i, j, c], Rational::from_integer(&count * &ci * cj));
            }
        }
    }
    Ok(TrivariatePolynomial(t))
}

fn alternating(k: u32) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// The usual Tutte polynomial `T_M(x, y)`, the `M = N` case of
/// [`lasvergnas_tutte`].
pub fn tutte_polynomial(m: &Matroid) -> Result<Polynomial> {
    let t = lasvergnas_tutte(m, m)?;
    let mut out = Polynomial::zero(2);
    for (e, c) in t.as_polynomial().terms() {
        out.add_term(vec![e[0], e[1]], c.clone());
    }
    Ok(out)
}

/// `Z_{q,𝓜}(w_0..w_n) = Σ_S Π_k q_k^{-rk_{M_k}(S)} w_0^{n-|S|} Π_{i∈S} w_i`.
pub fn homogeneous_tutte(flag: &FlagMatroid, q: &[Rational]) -> Result<HomogeneousPolynomial> {
    if q.len() != flag.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} parameters for {} constituents",
            q.len(),
            flag.len()
        )));
    }
    for qk in q {
        nonzero(qk, "every q_k")?;
    }
    let n = flag.ground_size();
    let mut tables = Vec::with_capacity(flag.len());
    let mut inv = Vec::with_capacity(flag.len());
    for (m, qk) in flag.constituents().iter().zip(q) {
        tables.push(m.rank_table()?);
        inv.push(inverse_powers(qk, m.full_rank()));
    }
    let mut z = Polynomial::zero(n + 1);
    for s in Subset::all(n) {
        let b = s.bits() as usize;
        let mut c = Rational::one();
        for (t, pw) in tables.iter().zip(&inv) {
            c *= &pw[t[b] as usize];
        }
        z.add_term(homogeneous_exps(n, s), c);
    }
    HomogeneousPolynomial::new(z, n as u32)
}

/// Homogeneous `Z_{p,q,f}` of a morphism with `p` (parameter 0) and `q`
/// (parameter 1) symbolic: `Σ_S p^{-rk_M(S)} q^{-rk_N(f(S))} w_0^{n-|S|} w^S`.
pub fn morphism_tutte_parametric(f: &MatroidMorphism) -> Result<ParametricPolynomial> {
    let tm = f.source().rank_table()?;
    f.target().rank_table()?;
    let n = f.source().ground_size();
    let mut z = ParametricPolynomial::zero(2, n + 1);
    for s in Subset::all(n) {
        let rm = i64::from(tm[s.bits() as usize]);
        let rn = f.target().rank(f.image(s)) as i64;
        z.add_term(vec![-rm, -rn], homogeneous_exps(n, s), Rational::one());
    }
    Ok(z)
}

/// `B_f = Σ_{S ∈ B(f)} w_0^{n-|S|} Π_{i∈S} w_i`.
pub fn basis_generating(f: &MatroidMorphism) -> Result<HomogeneousPolynomial> {
    let n = f.source().ground_size();
    let mut b = Polynomial::zero(n + 1);
    for s in f.bases()? {
        b.add_term(homogeneous_exps(n, s), Rational::one());
    }
    HomogeneousPolynomial::new(b, n as u32)
}

/// `B_f(1, w_1, .., w_n)`.
pub fn basis_generating_dehomogenized(f: &MatroidMorphism) -> Result<Polynomial> {
    Ok(basis_generating(f)?.dehomogenize(0))
}

/// `lim_{p→0} lim_{q→0} q^{rk_N f(E)} Z_{p,q,f}(w_0, p w_1, .., p w_n)`,
/// computed by exact selection of the order-zero terms.
pub fn basis_limit(f: &MatroidMorphism) -> Result<HomogeneousPolynomial> {
    let n = f.source().ground_size();
    let mut z = morphism_tutte_parametric(f)?;
    for i in 1..=n {
        z = z.scale_variable(i, 0, 1);
    }
    let image_rank = f.target().rank(f.image(f.source().ground())) as i64;
    let z = z.shift(1, image_rank).limit(1)?.limit(0)?;
    HomogeneousPolynomial::new(z.into_polynomial()?, n as u32)
}

/// `lim_{q→0} q^{rk(E)} Z_{q,M}(w)`: the spanning-set generating polynomial.
pub fn spanning_limit(m: &Matroid) -> Result<Polynomial> {
    multivariate_tutte_parametric(m)?
        .shift(0, m.full_rank() as i64)
        .limit(0)?
        .into_polynomial()
}

/// `lim_{q→0} Z_{q,M}(q w)`: the independent-set generating polynomial.
pub fn independent_limit(m: &Matroid) -> Result<Polynomial> {
    let mut z = multivariate_tutte_parametric(m)?;
    for i in 0..m.ground_size() {
        z = z.scale_variable(i, 0, 1);
    }
    z.limit(0)?.into_polynomial()
}

/// `P_𝓜(q, w) = Σ_{i<j} Π_k q_k^{d_k(i,j)} w_i w_j`, `d_k` the parallel
/// indicator of `M_k`.
pub fn pairing_polynomial(flag: &FlagMatroid, q: &[Rational]) -> Result<Polynomial> {
    let n = flag.ground_size();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "pairing polynomial needs at least two elements".into(),
        ));
    }
    if q.len() != flag.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} parameters for {} constituents",
            q.len(),
            flag.len()
        )));
    }
    let mut p = Polynomial::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut c = Rational::one();
            for (m, qk) in flag.constituents().iter().zip(q) {
                c *= rational::pow(qk, i64::from(m.parallel_indicator(i, j)?));
            }
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = 1;
            p.add_term(e, c);
        }
    }
    Ok(p)
}

/// Both sides of `½(1 - 1/n)(w_1 + .. + w_n)² >= P_𝓜(q, w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingBound {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl PairingBound {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

/// Evaluates the pairing inequality exactly; requires `q_k ∈ [0, 1]`.
pub fn pairing_bound(flag: &FlagMatroid, q: &[Rational], w: &[Rational]) -> Result<PairingBound> {
    let n = flag.ground_size();
    if w.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} values for {n} variables",
            w.len()
        )));
    }
    if let Some(bad) = q
        .iter()
        .find(|qk| qk.is_negative() || **qk > Rational::one())
    {
        return Err(Error::InvalidParameter(format!(
            "q_k = {bad} is outside [0, 1]"
        )));
    }
    let p = pairing_polynomial(flag, q)?;
    let total: Rational = w.iter().sum();
    let nn = rational::int(n as i64);
    let lhs = rational::ratio(1, 2) * (Rational::one() - nn.recip()) * &total * &total;
    Ok(PairingBound {
        lhs,
        rhs: p.evaluate(w),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn single_coloop() {
        let m = Matroid::uniform(1, 1).unwrap();
        let z = multivariate_tutte(&m, &int(3)).unwrap();
        assert_eq!(z.coefficient(&[0]), int(1));
        assert_eq!(z.coefficient(&[1]), ratio(1, 3));
    }

    #[test]
    fn lasvergnas_of_truncated_coloop() {
        let m = Matroid::uniform(1, 1).unwrap();
        let n = Matroid::uniform(1, 0).unwrap();
        let t = lasvergnas_tutte(&m, &n).unwrap();
        assert_eq!(t.as_polynomial().len(), 2);
        assert_eq!(t.coefficient(0, 0, 1), int(1));
        assert_eq!(t.coefficient(0, 0, 0), int(1));
        assert!(lasvergnas_tutte(&n, &m).is_err());
    }

    #[test]
    fn tutte_of_triangle() {
        // T_{U_{2,3}} = x^2 + x + y
        let t = tutte_polynomial(&Matroid::uniform(3, 2).unwrap()).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.coefficient(&[2, 0]), int(1));
        assert_eq!(t.coefficient(&[1, 0]), int(1));
        assert_eq!(t.coefficient(&[0, 1]), int(1));
    }

    #[test]
    fn unit_parameters_give_product_of_linear_forms() {
        let flag = FlagMatroid::new(vec![
            Matroid::uniform(3, 1).unwrap(),
            Matroid::uniform(3, 2).unwrap(),
        ])
        .unwrap();
        let q = vec![int(1); flag.len()];
        let z = homogeneous_tutte(&flag, &q).unwrap();
        let mut prod = Polynomial::constant(4, int(1));
        for i in 1..=3 {
            prod = &prod * &(&Polynomial::variable(4, 0) + &Polynomial::variable(4, i));
        }
        assert_eq!(z.as_polynomial(), &prod);
    }

    #[test]
    fn identity_of_u23_basis_polynomial_and_limit() {
        let m = Matroid::uniform(3, 2).unwrap();
        let f = MatroidMorphism::identity(m.clone(), m).unwrap();
        let b = basis_generating(&f).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.coefficient(&[1, 1, 1, 0]), int(1));
        assert_eq!(basis_limit(&f).unwrap(), b);
    }

    #[test]
    fn notable_limits_of_u12() {
        let m = Matroid::uniform(2, 1).unwrap();
        let span = spanning_limit(&m).unwrap();
        assert_eq!(span.support(), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        let ind = independent_limit(&m).unwrap();
        assert_eq!(ind.support(), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn pairing_bound_two_parallel_elements() {
        let flag = FlagMatroid::single(Matroid::uniform(2, 1).unwrap());
        let b = pairing_bound(&flag, &[ratio(1, 2)], &[int(1), int(1)]).unwrap();
        assert_eq!(b.lhs, int(1));
        assert_eq!(b.rhs, ratio(1, 2));
        assert!(b.holds());
        assert!(pairing_bound(&flag, &[int(2)], &[int(1), int(1)]).is_err());
    }
}
