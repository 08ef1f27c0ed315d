//! Sparse multivariate polynomials with integer coefficients.
//!
//! Exponent vectors have a fixed length per polynomial and are kept in a
//! sorted map, so iteration (and the line serialization used by golden
//! tests) is lexicographic by exponent. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;

/// A sparse polynomial in `nvars` variables over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, i64>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, value: i64) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if value != 0 {
            p.terms.insert(vec![0; nvars], value);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, 1)
    }

    /// The monomial `coeff * x^exps`.
    pub fn monomial(nvars: usize, exps: &[usize], coeff: i64) -> Self {
        debug_assert!(exps.len() <= nvars);
        let mut p = MultiPoly::zero(nvars);
        if coeff != 0 {
            let mut e = vec![0u16; nvars];
            for (i, &x) in exps.iter().enumerate() {
                e[i] = x as u16;
            }
            p.terms.insert(e, coeff);
        }
        p
    }

    /// The variable `x_i` (1-based).
    pub fn variable(nvars: usize, i: usize) -> Self {
        debug_assert!(i >= 1 && i <= nvars);
        let mut e = vec![0usize; i];
        e[i - 1] = 1;
        MultiPoly::monomial(nvars, &e, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    /// Coefficient of `x^exps`; exponents beyond `nvars` must be zero for a
    /// nonzero answer.
    pub fn coefficient(&self, exps: &[usize]) -> i64 {
        if exps.iter().skip(self.nvars).any(|&e| e > 0) {
            return 0;
        }
        let mut key = vec![0u16; self.nvars];
        for (i, &e) in exps.iter().take(self.nvars).enumerate() {
            key[i] = e as u16;
        }
        self.terms.get(&key).copied().unwrap_or(0)
    }

    /// Exponent vectors with nonzero coefficient, in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = &[u16]> + '_ {
        self.terms.keys().map(|e| e.as_slice())
    }

    /// Value at `x_1 = ... = x_n = 1`, i.e. the sum of the coefficients.
    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Same polynomial viewed in at least `nvars` variables.
    pub fn padded(&self, nvars: usize) -> MultiPoly {
        debug_assert!(nvars >= self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| {
                let mut e2 = e.clone();
                e2.resize(nvars, 0);
                (e2, c)
            })
            .collect();
        MultiPoly { nvars, terms }
    }

    fn insert_term(&mut self, exps: Vec<u16>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut result = self.clone();
        for (e, &c) in &other.terms {
            result.insert_term(e.clone(), c);
        }
        result
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut result = self.clone();
        for (e, &c) in &other.terms {
            result.insert_term(e.clone(), -c);
        }
        result
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut result = MultiPoly::zero(self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                result.insert_term(e, c1 * c2);
            }
        }
        result
    }

    /// Multiplication by the monomial `x^exps`.
    pub fn mul_monomial(&self, exps: &[usize]) -> MultiPoly {
        debug_assert!(exps.iter().skip(self.nvars).all(|&e| e == 0));
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| {
                let shifted: Vec<u16> = e
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| x + exps.get(i).copied().unwrap_or(0) as u16)
                    .collect();
                (shifted, c)
            })
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// The action of the simple transposition `s_i` on variables: swaps
    /// `x_i` and `x_{i+1}` (1-based).
    pub fn swap_vars(&self, i: usize) -> MultiPoly {
        debug_assert!(i >= 1 && i < self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| {
                let mut e2 = e.clone();
                e2.swap(i - 1, i);
                (e2, c)
            })
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// The divided difference `(f - s_i f) / (x_i - x_{i+1})`, computed as
    /// exact long division after antisymmetrizing. The division is always
    /// exact here; a nonzero remainder trips an assertion because it can
    /// only come from an implementation bug.
    pub fn divided_difference(&self, i: usize) -> MultiPoly {
        debug_assert!(i >= 1 && i < self.nvars);
        let mut g = self.sub(&self.swap_vars(i));
        let mut quotient = MultiPoly::zero(self.nvars);
        // Term order: exponent of x_i first, then full lex. The divisor
        // x_i - x_{i+1} leads with x_i under this order.
        while let Some((e, c)) = g
            .terms
            .iter()
            .max_by(|(e1, _), (e2, _)| (e1[i - 1], *e1).cmp(&(e2[i - 1], *e2)))
            .map(|(e, &c)| (e.clone(), c))
        {
            assert!(
                e[i - 1] > 0,
                "divided difference left a remainder; antisymmetrization is broken"
            );
            let mut q = e.clone();
            q[i - 1] -= 1;
            quotient.insert_term(q.clone(), c);
            // g -= c * x^q * (x_i - x_{i+1})
            g.insert_term(e, -c);
            let mut lower = q;
            lower[i] += 1;
            g.insert_term(lower, c);
        }
        quotient
    }

    /// One term per line: `coeff e1,e2,...,en`, lexicographic by exponent.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (e, c) in &self.terms {
            let exps: Vec<String> = e.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("{} {}\n", c, exps.join(",")));
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in &self.terms {
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            }
            let mag = c.unsigned_abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, x)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
