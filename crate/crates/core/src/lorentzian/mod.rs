//! Lorentzian polynomials.
//!
//! A homogeneous polynomial of degree `d >= 2` is Lorentzian iff its
//! coefficients are nonnegative, its support is M-convex, and every quadratic
//! form `∂_{i_1} .. ∂_{i_{d-2}} h` has at most one positive eigenvalue.
//! [`is_lorentzian`] checks exactly these three clauses in exact arithmetic.
//! In degree 0 and 1 only nonnegativity is required.

mod eigen;
mod sample;

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use eigen::{characteristic_polynomial, positive_eigenvalue_count, sign_changes};
pub use sample::{sampled_log_concavity, SampleOptions, SampleRegion, SampleReport};

use crate::poly::{Exponents, HomogeneousPolynomial};
use crate::rational::{self, Rational};
use crate::{Error, Result};

/// Outcome of the exchange check on a set of exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MConvexVerdict {
    MConvex,
    /// `alpha_i > beta_i`, and no `j` with `alpha_j < beta_j` has both
    /// `alpha - e_i + e_j` and `beta - e_j + e_i` in the set.
    Fails {
        alpha: Exponents,
        beta: Exponents,
        i: usize,
    },
}

impl MConvexVerdict {
    pub fn is_m_convex(&self) -> bool {
        matches!(self, MConvexVerdict::MConvex)
    }
}

/// Exhaustive exchange check over all ordered pairs in lexicographic order.
pub fn is_m_convex(support: &[Exponents]) -> Result<MConvexVerdict> {
    let set: BTreeSet<&Exponents> = support.iter().collect();
    if let Some(first) = set.first() {
        let (len, deg) = (first.len(), first.iter().sum::<u32>());
        if let Some(bad) = set
            .iter()
            .find(|e| e.len() != len || e.iter().sum::<u32>() != deg)
        {
            return Err(Error::DimensionMismatch(format!(
                "support vector {bad:?} differs in length or degree from {first:?}"
            )));
        }
    }
    for &alpha in &set {
        for &beta in &set {
            for i in 0..alpha.len() {
                if alpha[i] <= beta[i] {
                    continue;
                }
                let exchange = (0..alpha.len()).any(|j| {
                    if alpha[j] >= beta[j] {
                        return false;
                    }
                    let mut a = alpha.clone();
                    a[i] -= 1;
                    a[j] += 1;
                    let mut b = beta.clone();
                    b[j] -= 1;
                    b[i] += 1;
                    set.contains(&a) && set.contains(&b)
                });
                if !exchange {
                    return Ok(MConvexVerdict::Fails {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        i,
                    });
                }
            }
        }
    }
    Ok(MConvexVerdict::MConvex)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LorentzianVerdict {
    Lorentzian,
    NegativeCoefficient {
        exponents: Exponents,
    },
    NotMConvex {
        alpha: Exponents,
        beta: Exponents,
        i: usize,
    },
    /// The quadratic form `∂^derivatives h` has more than one positive
    /// eigenvalue. `derivatives` is a sorted multiset of variable indices.
    Signature {
        derivatives: Vec<usize>,
        positive_eigenvalues: usize,
    },
}

impl LorentzianVerdict {
    pub fn is_lorentzian(&self) -> bool {
        matches!(self, LorentzianVerdict::Lorentzian)
    }

    /// Name of the failing clause, `None` on success.
    pub fn clause(&self) -> Option<&'static str> {
        match self {
            LorentzianVerdict::Lorentzian => None,
            LorentzianVerdict::NegativeCoefficient { .. } => Some("nonnegative_coefficients"),
            LorentzianVerdict::NotMConvex { .. } => Some("m_convex_support"),
            LorentzianVerdict::Signature { .. } => Some("hessian_signature"),
        }
    }
}

impl fmt::Display for LorentzianVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LorentzianVerdict::Lorentzian => f.write_str("Lorentzian"),
            LorentzianVerdict::NegativeCoefficient { exponents } => {
                write!(f, "negative coefficient at exponent {exponents:?}")
            }
            LorentzianVerdict::NotMConvex { alpha, beta, i } => write!(
                f,
                "support is not M-convex: alpha = {alpha:?}, beta = {beta:?}, i = {i}"
            ),
            LorentzianVerdict::Signature {
                derivatives,
                positive_eigenvalues,
            } => write!(
                f,
                "derivative {derivatives:?} has {positive_eigenvalues} positive eigenvalues"
            ),
        }
    }
}

fn factorial_product(e: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    for &k in e {
        for f in 2..=k {
            acc *= f;
        }
    }
    acc
}

/// The (constant) Hessian of `∂^alpha h` where `|alpha| = deg h - 2`:
/// entry `(j, k)` is `c_γ · γ!` with `γ = alpha + e_j + e_k`.
pub fn derivative_hessian(h: &HomogeneousPolynomial, alpha: &[u32]) -> Vec<Vec<Rational>> {
    let m = h.nvars();
    let mut out = vec![vec![Rational::zero(); m]; m];
    for j in 0..m {
        for k in j..m {
            let mut gamma = alpha.to_vec();
            gamma[j] += 1;
            gamma[k] += 1;
            let c = h.coefficient(&gamma);
            if c.is_zero() {
                continue;
            }
            let v = c * Rational::from_integer(factorial_product(&gamma));
            out[k][j] = v.clone();
            out[j][k] = v;
        }
    }
    out
}

/// Exact Lorentzian certificate. Witnesses are the first failing clause in
/// the order nonnegativity, M-convexity, signature; for the signature the
/// lexicographically least failing derivative multiset is reported.
pub fn is_lorentzian(h: &HomogeneousPolynomial) -> Result<LorentzianVerdict> {
    if let Some((e, _)) = h.terms().find(|(_, c)| c.is_negative()) {
        return Ok(LorentzianVerdict::NegativeCoefficient {
            exponents: e.clone(),
        });
    }
    let d = h.degree();
    if d < 2 || h.is_zero() {
        return Ok(LorentzianVerdict::Lorentzian);
    }
    if let MConvexVerdict::Fails { alpha, beta, i } = is_m_convex(&h.support())? {
        return Ok(LorentzianVerdict::NotMConvex { alpha, beta, i });
    }
    let m = h.nvars();
    for multiset in (0..m).combinations_with_replacement((d - 2) as usize) {
        let mut alpha = vec![0u32; m];
        for &i in &multiset {
            alpha[i] += 1;
        }
        let hess = derivative_hessian(h, &alpha);
        if hess.iter().flatten().all(Zero::is_zero) {
            continue;
        }
        let count = positive_eigenvalue_count(&hess)?;
        if count > 1 {
            return Ok(LorentzianVerdict::Signature {
                derivatives: multiset,
                positive_eigenvalues: count,
            });
        }
    }
    Ok(LorentzianVerdict::Lorentzian)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UlcVerdict {
    UltraLogConcave,
    Negative {
        index: usize,
    },
    InternalZero {
        index: usize,
    },
    /// `(a_k / C(d,k))^2 < (a_{k-1} / C(d,k-1)) (a_{k+1} / C(d,k+1))`.
    Fails {
        k: usize,
    },
}

impl UlcVerdict {
    pub fn is_ulc(&self) -> bool {
        matches!(self, UlcVerdict::UltraLogConcave)
    }
}

/// Ultra-log-concavity of `a_0..a_d` with exact comparisons.
pub fn is_ultra_log_concave(a: &[Rational]) -> UlcVerdict {
    if let Some(index) = a.iter().position(Signed::is_negative) {
        return UlcVerdict::Negative { index };
    }
    let nonzero: Vec<usize> = (0..a.len()).filter(|&k| !a[k].is_zero()).collect();
    if let (Some(&lo), Some(&hi)) = (nonzero.first(), nonzero.last()) {
        if let Some(index) = (lo..=hi).find(|&k| a[k].is_zero()) {
            return UlcVerdict::InternalZero { index };
        }
    }
    if a.len() < 3 {
        return UlcVerdict::UltraLogConcave;
    }
    let d = (a.len() - 1) as u64;
    let normalized: Vec<Rational> = a
        .iter()
        .enumerate()
        .map(|(k, x)| x / Rational::from_integer(rational::binomial(d, k as u64)))
        .collect();
    for k in 1..a.len() - 1 {
        if &normalized[k] * &normalized[k] < &normalized[k - 1] * &normalized[k + 1] {
            return UlcVerdict::Fails { k };
        }
    }
    UlcVerdict::UltraLogConcave
}

/// Coefficients `a_k` of `Σ_k a_k w_0^{d-k} w_1^k` for a bivariate form.
pub fn bivariate_coefficients(h: &HomogeneousPolynomial) -> Result<Vec<Rational>> {
    if h.nvars() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "expected 2 variables, found {}",
            h.nvars()
        )));
    }
    let d = h.degree();
    Ok((0..=d).map(|k| h.coefficient(&[d - k, k])).collect())
}

/// `h(Av)` for a matrix with nonnegative entries.
pub fn substitute_linear(
    h: &HomogeneousPolynomial,
    a: &[Vec<Rational>],
) -> Result<HomogeneousPolynomial> {
    if a.iter().flatten().any(Signed::is_negative) {
        return Err(Error::InvalidParameter(
            "substitution matrix must have nonnegative entries".into(),
        ));
    }
    h.substitute_linear(a)
}

/// The 0/1 matrix sending variable `i` to new variable `groups[i]`.
pub fn grouping_matrix(groups: &[usize]) -> Vec<Vec<Rational>> {
    let m = groups.iter().max().map_or(0, |g| g + 1);
    groups
        .iter()
        .map(|&g| {
            (0..m)
                .map(|k| {
                    if k == g {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}
