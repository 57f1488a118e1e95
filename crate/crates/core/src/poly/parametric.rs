//! Polynomials in variables `w` whose coefficients are Laurent monomials in a
//! few scalar parameters (`p`, `q`, ...). Used to take the parameter limits
//! exactly: substitute `w_i ↦ p^k w_i`, then keep the terms of lowest order
//! in `p`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Exponents, Polynomial};
use crate::rational::{self, Rational};
use crate::{Error, Result};

type Key = (Vec<i64>, Exponents);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParametricPolynomial {
    nparams: usize,
    nvars: usize,
    terms: BTreeMap<Key, Rational>,
}

impl ParametricPolynomial {
    pub fn zero(nparams: usize, nvars: usize) -> ParametricPolynomial {
        ParametricPolynomial {
            nparams,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nparams(&self) -> usize {
        self.nparams
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Exponents, &Rational)> {
        self.terms.iter().map(|((p, w), c)| (p, w, c))
    }

    pub fn add_term(&mut self, params: Vec<i64>, exps: Exponents, c: Rational) {
        debug_assert_eq!(params.len(), self.nparams);
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((params, exps)) {
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

    /// `w_var ↦ param^power · w_var`.
    pub fn scale_variable(&self, var: usize, param: usize, power: i64) -> ParametricPolynomial {
        let mut out = ParametricPolynomial::zero(self.nparams, self.nvars);
        for ((p, w), c) in &self.terms {
            let mut p = p.clone();
            p[param] += power * i64::from(w[var]);
            out.terms.insert((p, w.clone()), c.clone());
        }
        out
    }

    /// Multiplies by `param^power`.
    pub fn shift(&self, param: usize, power: i64) -> ParametricPolynomial {
        ParametricPolynomial {
            nparams: self.nparams,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|((p, w), c)| {
                    let mut p = p.clone();
                    p[param] += power;
                    ((p, w.clone()), c.clone())
                })
                .collect(),
        }
    }

    pub fn min_order(&self, param: usize) -> Option<i64> {
        self.terms.keys().map(|(p, _)| p[param]).min()
    }

    /// Terms of minimal order in `param`, with `param` removed.
    pub fn lowest_order(&self, param: usize) -> ParametricPolynomial {
        let Some(min) = self.min_order(param) else {
            return ParametricPolynomial::zero(self.nparams - 1, self.nvars);
        };
        self.coefficient_of(param, min)
    }

    /// `lim_{param → 0}`: fails if some term has negative order.
    pub fn limit(&self, param: usize) -> Result<ParametricPolynomial> {
        match self.min_order(param) {
            Some(k) if k < 0 => Err(Error::InvalidParameter(format!(
                "limit diverges: parameter {param} occurs with exponent {k}"
            ))),
            _ => Ok(self.coefficient_of(param, 0)),
        }
    }

    fn coefficient_of(&self, param: usize, order: i64) -> ParametricPolynomial {
        let mut out = ParametricPolynomial::zero(self.nparams - 1, self.nvars);
        for ((p, w), c) in &self.terms {
            if p[param] == order {
                let mut p = p.clone();
                p.remove(param);
                out.add_term(p, w.clone(), c.clone());
            }
        }
        out
    }

    /// Substitutes numeric values for every parameter.
    pub fn evaluate_params(&self, values: &[Rational]) -> Result<Polynomial> {
        if values.len() != self.nparams {
            return Err(Error::DimensionMismatch(format!(
                "{} parameter values for {} parameters",
                values.len(),
                self.nparams
            )));
        }
        let mut out = Polynomial::zero(self.nvars);
        for ((p, w), c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in values.iter().zip(p) {
                if k < 0 && v.is_zero() {
                    return Err(Error::InvalidParameter(
                        "zero parameter value with a negative exponent".into(),
                    ));
                }
                t *= rational::pow(v, k);
            }
            out.add_term(w.clone(), t);
        }
        Ok(out)
    }

    /// The underlying polynomial once every parameter has been eliminated.
    pub fn into_polynomial(self) -> Result<Polynomial> {
        if self.nparams != 0 {
            return Err(Error::DimensionMismatch(format!(
                "{} parameters remain",
                self.nparams
            )));
        }
        let mut out = Polynomial::zero(self.nvars);
        for ((_, w), c) in self.terms {
            out.add_term(w, c);
        }
        Ok(out)
    }
}
