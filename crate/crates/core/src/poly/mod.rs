//! Sparse polynomials with exact rational coefficients.
//!
//! Terms are keyed by exponent vectors in a `BTreeMap`, so iteration order is
//! the lexicographic order of exponent vectors, which is also the canonical
//! serialisation order. Zero coefficients are never stored.

mod parametric;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

pub use parametric::ParametricPolynomial;

use crate::rational::{self, Rational};
use crate::{Error, Result};

pub type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Polynomial {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Polynomial {
        let mut p = Polynomial::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn variable(nvars: usize, i: usize) -> Polynomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Polynomial::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear_form(coefficients: &[Rational]) -> Polynomial {
        let n = coefficients.len();
        let mut p = Polynomial::zero(n);
        for (i, c) in coefficients.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector of length {} in a polynomial in {nvars} variables",
                    e.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c · x^e`, dropping the term if it cancels.
    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn support(&self) -> Vec<Exponents> {
        self.terms.keys().cloned().collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degrees.next()?;
        degrees.all(|x| x == d).then_some(d)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.nvars, Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c * Rational::from_integer(e[i].into()));
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point dimension");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= rational::pow(x, i64::from(k));
                }
            }
            acc += t;
        }
        acc
    }

    /// Value, gradient and Hessian at a floating-point point.
    pub fn value_gradient_hessian(&self, point: &[f64]) -> (f64, Vec<f64>, Vec<Vec<f64>>) {
        let n = self.nvars;
        let mut value = 0.0;
        let mut grad = vec![0.0; n];
        let mut hess = vec![vec![0.0; n]; n];
        for (e, c) in &self.terms {
            let c = rational::to_f64(c);
            let mono: f64 = point
                .iter()
                .zip(e)
                .map(|(x, &k)| x.powi(k as i32))
                .product();
            value += c * mono;
            for i in 0..n {
                if e[i] == 0 {
                    continue;
                }
                let di = c * mono * f64::from(e[i]) / point[i];
                grad[i] += di;
                for j in 0..n {
                    if e[j] == 0 {
                        continue;
                    }
                    let h = if i == j {
                        if e[i] < 2 {
                            continue;
                        }
                        c * mono * f64::from(e[i]) * f64::from(e[i] - 1) / (point[i] * point[i])
                    } else {
                        di * f64::from(e[j]) / point[j]
                    };
                    hess[i][j] += h;
                }
            }
        }
        (value, grad, hess)
    }

    /// `h(A v)` where `A` has one row per variable of `h` and one column per
    /// new variable.
    pub fn substitute_linear(&self, a: &[Vec<Rational>]) -> Result<Polynomial> {
        if a.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "substitution matrix has {} rows for {} variables",
                a.len(),
                self.nvars
            )));
        }
        let m = a.first().map_or(0, Vec::len);
        if a.iter().any(|row| row.len() != m) {
            return Err(Error::DimensionMismatch(
                "substitution matrix rows differ in length".into(),
            ));
        }
        let forms: Vec<Polynomial> = a.iter().map(|row| Polynomial::linear_form(row)).collect();
        let mut cache: Vec<Vec<Polynomial>> = forms
            .iter()
            .map(|f| vec![Polynomial::constant(m, Rational::one()), f.clone()])
            .collect();
        let mut out = Polynomial::zero(m);
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap() * &forms[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][k as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Sets variable `var` to one and removes it.
    pub fn dehomogenize(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.remove(var);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Renders with the given variable names, e.g. `3/2*w0^2*w1 + w2`.
    pub fn display_with<F: Fn(usize) -> String>(&self, name: F) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            let abs = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        name(i)
                    } else {
                        format!("{}^{p}", name(i))
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|i| format!("w{i}")))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// A polynomial together with its declared total degree; every stored term
/// has exactly that degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousPolynomial {
    poly: Polynomial,
    degree: u32,
}

impl HomogeneousPolynomial {
    pub fn new(poly: Polynomial, degree: u32) -> Result<HomogeneousPolynomial> {
        if let Some(e) = poly.terms.keys().find(|e| e.iter().sum::<u32>() != degree) {
            return Err(Error::DimensionMismatch(format!(
                "term {e:?} does not have degree {degree}"
            )));
        }
        Ok(HomogeneousPolynomial { poly, degree })
    }

    /// Infers the degree; fails for zero or inhomogeneous input.
    pub fn from_polynomial(poly: Polynomial) -> Result<HomogeneousPolynomial> {
        let degree = poly.homogeneous_degree().ok_or_else(|| {
            Error::DimensionMismatch("polynomial is zero or not homogeneous".into())
        })?;
        Ok(HomogeneousPolynomial { poly, degree })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.poly
    }

    pub fn derivative(&self, i: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial {
            poly: self.poly.derivative(i),
            degree: self.degree.saturating_sub(1),
        }
    }

    pub fn product(&self, other: &HomogeneousPolynomial) -> HomogeneousPolynomial {
        HomogeneousPolynomial {
            poly: &self.poly * &other.poly,
            degree: self.degree + other.degree,
        }
    }

    /// `h(A v)`; homogeneity and degree are preserved.
    pub fn substitute_linear(&self, a: &[Vec<Rational>]) -> Result<HomogeneousPolynomial> {
        Ok(HomogeneousPolynomial {
            poly: self.poly.substitute_linear(a)?,
            degree: self.degree,
        })
    }
}

impl Deref for HomogeneousPolynomial {
    type Target = Polynomial;
    fn deref(&self) -> &Polynomial {
        &self.poly
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(n, i)
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let a = &x(2, 0) + &x(2, 1);
        let b = &x(2, 0) - &x(2, 1);
        let prod = &a * &b;
        assert_eq!(prod.len(), 2);
        assert_eq!(prod.coefficient(&[2, 0]), int(1));
        assert_eq!(prod.coefficient(&[0, 2]), int(-1));
        assert_eq!(prod.coefficient(&[1, 1]), int(0));
        assert_eq!(prod.homogeneous_degree(), Some(2));
    }

    #[test]
    fn derivative_and_evaluate() {
        let p = (&x(2, 0) + &x(2, 1)).pow(3);
        let d = p.derivative(0);
        assert_eq!(d.evaluate(&[int(1), int(1)]), int(12));
        assert_eq!(p.evaluate(&[ratio(1, 2), ratio(1, 2)]), int(1));
    }

    #[test]
    fn linear_substitution_collapses_variables() {
        let p = &x(3, 0) * &(&x(3, 1) + &x(3, 2));
        let a = vec![
            vec![int(1), int(0)],
            vec![int(0), int(1)],
            vec![int(0), int(1)],
        ];
        let q = p.substitute_linear(&a).unwrap();
        assert_eq!(q.coefficient(&[1, 1]), int(2));
        assert_eq!(q.len(), 1);
    }

    #[test]
    fn gradient_and_hessian_match_exact_derivatives() {
        let p = &(&x(2, 0) * &x(2, 0)) * &x(2, 1);
        let (v, g, h) = p.value_gradient_hessian(&[2.0, 3.0]);
        assert!((v - 12.0).abs() < 1e-12);
        assert!((g[0] - 12.0).abs() < 1e-12 && (g[1] - 4.0).abs() < 1e-12);
        assert!((h[0][0] - 6.0).abs() < 1e-12);
        assert!((h[0][1] - 4.0).abs() < 1e-12 && (h[1][0] - 4.0).abs() < 1e-12);
        assert!(h[1][1].abs() < 1e-12);
    }

    #[test]
    fn homogeneous_wrapper_validates_degree() {
        let p = &x(2, 0) + &Polynomial::constant(2, int(1));
        assert!(HomogeneousPolynomial::from_polynomial(p.clone()).is_err());
        assert!(HomogeneousPolynomial::new(p, 1).is_err());
        let z = HomogeneousPolynomial::new(Polynomial::zero(3), 4).unwrap();
        assert_eq!(z.degree(), 4);
    }

    #[test]
    fn display() {
        let p = &(&x(2, 0) * &x(2, 0)).scale(&ratio(3, 2)) - &x(2, 1);
        assert_eq!(p.to_string(), "3/2*w0^2 - w1");
    }
}
