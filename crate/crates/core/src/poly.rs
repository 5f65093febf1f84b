//! Sparse multivariate polynomials (optionally Laurent) over exact rationals.
//!
//! Terms live in a `BTreeMap` keyed by the exponent vector, so the term order
//! is canonical lexicographic and polynomial equality is structural equality.
//! Negative exponents are admitted only when the `laurent` flag is set.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::ratio::{pow_rat, rat_str, Rational};
use crate::weylgrp::SignedPerm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    laurent: bool,
    terms: BTreeMap<Vec<i64>, Rational>,
}

/// Value substituted for a variable: an exact scalar or an ordinary polynomial.
#[derive(Debug, Clone)]
pub enum SubstValue {
    Const(Rational),
    Poly(SparsePoly),
}

impl From<Rational> for SubstValue {
    fn from(r: Rational) -> Self {
        SubstValue::Const(r)
    }
}

impl From<SparsePoly> for SubstValue {
    fn from(p: SparsePoly) -> Self {
        SubstValue::Poly(p)
    }
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            laurent: false,
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_laurent(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            laurent: true,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `x_i` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0i64; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<i64>, coeff: Rational) -> Self {
        assert_eq!(exps.len(), nvars);
        let laurent = exps.iter().any(|&e| e < 0);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        SparsePoly {
            nvars,
            laurent,
            terms,
        }
    }

    /// Build from raw term pairs; zero coefficients are dropped, duplicates summed.
    pub fn from_terms(
        nvars: usize,
        laurent: bool,
        terms: impl IntoIterator<Item = (Vec<i64>, Rational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch(e.len(), nvars));
            }
            if !laurent && e.iter().any(|&x| x < 0) {
                return Err(Error::LaurentMismatch);
            }
            let entry = map.entry(e).or_insert_with(Rational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(SparsePoly {
            nvars,
            laurent,
            terms: map,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    /// Reinterpret as a Laurent polynomial (no term change).
    pub fn into_laurent(mut self) -> Self {
        self.laurent = true;
        self
    }

    /// Drop the Laurent flag; fails if any exponent is negative.
    pub fn try_into_ordinary(mut self) -> Result<Self> {
        if self.terms.keys().any(|e| e.iter().any(|&x| x < 0)) {
            return Err(Error::LaurentMismatch);
        }
        self.laurent = false;
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree (max over terms of the exponent sum); zero polynomial gives `None`.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Leading term in the lexicographic order.
    pub fn leading(&self) -> Option<(&Vec<i64>, &Rational)> {
        self.terms.iter().next_back()
    }

    fn check_compat(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch(self.nvars, other.nvars));
        }
        if self.laurent != other.laurent {
            return Err(Error::LaurentMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SparsePoly {
            nvars: self.nvars,
            laurent: self.laurent,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        SparsePoly {
            nvars: self.nvars,
            laurent: self.laurent,
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            let mut p = Self::zero(self.nvars);
            p.laurent = self.laurent;
            return p;
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        SparsePoly {
            nvars: self.nvars,
            laurent: self.laurent,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let mut terms: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SparsePoly {
            nvars: self.nvars,
            laurent: self.laurent,
            terms,
        })
    }

    pub fn pow(&self, n: u64) -> Result<Self> {
        let mut acc = Self::one(self.nvars);
        acc.laurent = self.laurent;
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Substitute values for some variables; unsubstituted variables pass
    /// through. Polynomial values must be ordinary polynomials in the same
    /// variable set. Substituting zero (or any polynomial) into a negative
    /// exponent is a pole error.
    pub fn substitute(&self, assignment: &BTreeMap<usize, SubstValue>) -> Result<Self> {
        for (&i, v) in assignment {
            if i >= self.nvars {
                return Err(Error::DimensionMismatch(i, self.nvars));
            }
            if let SubstValue::Poly(p) = v {
                if p.nvars != self.nvars {
                    return Err(Error::DimensionMismatch(p.nvars, self.nvars));
                }
                if p.laurent {
                    return Err(Error::LaurentMismatch);
                }
            }
        }
        let mut result = SparsePoly {
            nvars: self.nvars,
            laurent: self.laurent,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut kept = vec![0i64; self.nvars];
            let mut scalar = c.clone();
            let mut poly_factor: Option<SparsePoly> = None;
            let mut pole = false;
            for i in 0..self.nvars {
                let exp = e[i];
                if exp == 0 {
                    continue;
                }
                match assignment.get(&i) {
                    None => kept[i] = exp,
                    Some(SubstValue::Const(v)) => match pow_rat(v, exp) {
                        Some(p) => scalar *= p,
                        None => {
                            if exp < 0 {
                                return Err(Error::Pole);
                            }
                            pole = true;
                            break;
                        }
                    },
                    Some(SubstValue::Poly(p)) => {
                        if exp < 0 {
                            return Err(Error::Pole);
                        }
                        let f = p.pow(exp as u64)?;
                        poly_factor = Some(match poly_factor {
                            None => f,
                            Some(acc) => acc.mul(&f)?,
                        });
                    }
                }
            }
            if pole || scalar.is_zero() {
                // `pole` here means 0^positive: the term vanishes.
                continue;
            }
            let mut term = SparsePoly {
                nvars: self.nvars,
                laurent: self.laurent,
                terms: BTreeMap::from([(kept, scalar)]),
            };
            if let Some(f) = poly_factor {
                let f = if self.laurent { f.into_laurent() } else { f };
                term = term.mul(&f)?;
            }
            result = result.add(&term)?;
        }
        Ok(result)
    }

    /// Translation `p(x + shift)`, expanded variable by variable through the
    /// binomial rows. Much cheaper than generic substitution for the
    /// rho-shifts that dominate the transform pipeline. Ordinary polynomials
    /// only (a shifted Laurent monomial is no longer a monomial).
    pub fn translate(&self, shift: &[Rational]) -> Result<Self> {
        if shift.len() != self.nvars {
            return Err(Error::DimensionMismatch(shift.len(), self.nvars));
        }
        let mut current = self.clone();
        for (i, d) in shift.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            current = current.translate_var(i, d)?;
        }
        Ok(current)
    }

    fn translate_var(&self, var: usize, d: &Rational) -> Result<Self> {
        let mut terms: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let deg = e[var];
            if deg < 0 {
                return Err(Error::LaurentMismatch);
            }
            if deg == 0 {
                let entry = terms.entry(e.clone()).or_insert_with(Rational::zero);
                *entry += c;
                continue;
            }
            // (x + d)^deg: walk the binomial row accumulating C(deg, j) d^{deg-j}.
            let mut coeff = c.clone();
            for _ in 0..deg {
                coeff *= d;
            }
            // j = 0 term uses c * d^deg; each step multiplies by (deg-j)/(j+1) / d.
            let mut j: i64 = 0;
            loop {
                if !coeff.is_zero() {
                    let mut e2 = e.clone();
                    e2[var] = j;
                    let entry = terms.entry(e2).or_insert_with(Rational::zero);
                    *entry += &coeff;
                }
                if j == deg {
                    break;
                }
                coeff = coeff * Rational::from_integer((deg - j).into())
                    / Rational::from_integer((j + 1).into())
                    / d;
                j += 1;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SparsePoly {
            nvars: self.nvars,
            laurent: self.laurent,
            terms,
        })
    }

    /// Substitute every variable with a scalar.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch(point.len(), self.nvars));
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                if exp != 0 {
                    match pow_rat(&point[i], exp) {
                        Some(p) => t *= p,
                        None => return Err(Error::Pole),
                    }
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Per-variable minimum exponent over all terms (0 for the zero polynomial).
    fn min_exponents(&self) -> Vec<i64> {
        let mut m = vec![0i64; self.nvars];
        let mut first = true;
        for e in self.terms.keys() {
            if first {
                m.copy_from_slice(e);
                first = false;
            } else {
                for (mi, &ei) in m.iter_mut().zip(e) {
                    *mi = (*mi).min(ei);
                }
            }
        }
        m
    }

    fn shift_exponents(&self, shift: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let e2: Vec<i64> = e.iter().zip(shift).map(|(a, s)| a + s).collect();
                (e2, c.clone())
            })
            .collect();
        SparsePoly {
            nvars: self.nvars,
            laurent: self.laurent,
            terms,
        }
    }

    /// Exact division: returns `q` with `q * den == self`, or a
    /// `NotDivisible` error carrying the offending leading term. For Laurent
    /// operands the monomial content of both sides is divided out first
    /// (monomials are units in the Laurent ring).
    pub fn exact_divide(&self, den: &Self) -> Result<Self> {
        self.check_compat(den)?;
        if den.is_zero() {
            return Err(Error::internal("division by the zero polynomial"));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        if self.laurent {
            let mn = self.min_exponents();
            let md = den.min_exponents();
            let num0 = self
                .shift_exponents(&mn.iter().map(|x| -x).collect::<Vec<_>>())
                .with_laurent(false);
            let den0 = den
                .shift_exponents(&md.iter().map(|x| -x).collect::<Vec<_>>())
                .with_laurent(false);
            let q0 = num0.exact_divide(&den0)?;
            let shift: Vec<i64> = mn.iter().zip(&md).map(|(a, b)| a - b).collect();
            return Ok(q0.into_laurent().shift_exponents(&shift));
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        let (dlead_e, dlead_c) = den.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        while let Some((rlead_e, rlead_c)) = rem.leading() {
            let qe: Vec<i64> = rlead_e.iter().zip(&dlead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return Err(Error::NotDivisible {
                    remainder_terms: rem.num_terms(),
                    leading: format!(
                        "{}",
                        Self::monomial(self.nvars, rlead_e.clone(), rlead_c.clone())
                    ),
                });
            }
            let qc = rlead_c / &dlead_c;
            let qterm = Self::monomial(self.nvars, qe, qc);
            rem = rem.sub(&qterm.mul(den)?)?;
            quot = quot.add(&qterm)?;
        }
        Ok(quot)
    }

    fn with_laurent(mut self, laurent: bool) -> Self {
        self.laurent = laurent;
        self
    }

    /// Left translation by a signed permutation: `(w . p)(x) = p(w^{-1} x)`.
    pub fn act_signed_perm(&self, w: &SignedPerm) -> Result<Self> {
        if w.dim() != self.nvars {
            return Err(Error::DimensionMismatch(w.dim(), self.nvars));
        }
        let mut terms: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            // x^e composed with w^{-1}: variable i contributes (eps_{s(i)} x_{s(i)})^{e_i}.
            let mut e2 = vec![0i64; self.nvars];
            let mut sign_neg = false;
            for i in 0..self.nvars {
                if e[i] != 0 {
                    let j = w.image(i);
                    e2[j] = e[i];
                    if w.sign(j) < 0 && e[i] % 2 != 0 {
                        sign_neg = !sign_neg;
                    }
                }
            }
            let coeff = if sign_neg { -c.clone() } else { c.clone() };
            let entry = terms.entry(e2).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SparsePoly {
            nvars: self.nvars,
            laurent: self.laurent,
            terms,
        })
    }

    /// Weyl action on the exponent lattice: each monomial `a^e` maps to
    /// `a^{w(e)}` with coefficients unchanged. This is the torus-character
    /// action (for formal exponentials), as opposed to [`act_signed_perm`],
    /// which is the coordinate-substitution action on polynomials.
    ///
    /// [`act_signed_perm`]: SparsePoly::act_signed_perm
    pub fn act_on_exponents(&self, w: &SignedPerm) -> Result<Self> {
        if w.dim() != self.nvars {
            return Err(Error::DimensionMismatch(w.dim(), self.nvars));
        }
        let terms: BTreeMap<Vec<i64>, Rational> = self
            .terms
            .iter()
            .map(|(e, c)| (w.apply_i64(e), c.clone()))
            .collect();
        Ok(SparsePoly {
            nvars: self.nvars,
            laurent: true,
            terms,
        })
    }

    /// Left translation by an invertible rational matrix: `p(M^{-1} x)`.
    /// Only for ordinary polynomials.
    pub fn act_matrix(&self, m: &[Vec<Rational>]) -> Result<Self> {
        if m.len() != self.nvars {
            return Err(Error::DimensionMismatch(m.len(), self.nvars));
        }
        if self.laurent {
            return Err(Error::LaurentMismatch);
        }
        let inv = crate::linalg::invert(m)?;
        // Row i of the inverse gives (M^{-1} x)_i as a linear form.
        let mut assignment = BTreeMap::new();
        for (i, row) in inv.iter().enumerate() {
            let lin = Self::from_terms(
                self.nvars,
                false,
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| {
                        let mut e = vec![0i64; self.nvars];
                        e[j] = 1;
                        (e, c.clone())
                    }),
            )?;
            assignment.insert(i, SubstValue::Poly(lin));
        }
        self.substitute(&assignment)
    }

    /// Canonical JSON form: `[[exponent-vector, "num/den"], ...]` in
    /// lexicographic term order.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "nvars": self.nvars,
            "laurent": self.laurent,
            "terms": self
                .terms
                .iter()
                .map(|(e, c)| json!([e, rat_str(c)]))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SparsePoly {
    /// Canonical text form: `coeff * x1^e1 ... xN^eN`, terms sorted
    /// lexicographically, zero exponents omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, &exp) in e.iter().enumerate() {
                if exp != 0 {
                    write!(f, " * x{}^{}", i + 1, exp)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{frac, rat};

    fn x(n: usize, i: usize) -> SparsePoly {
        SparsePoly::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let a = x(2, 0).add(&x(2, 1)).unwrap();
        let b = x(2, 0).sub(&x(2, 1)).unwrap();
        let prod = a.mul(&b).unwrap();
        let expect = x(2, 0)
            .pow(2)
            .unwrap()
            .sub(&x(2, 1).pow(2).unwrap())
            .unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn additive_identity() {
        let p = x(3, 0)
            .mul(&x(3, 2))
            .unwrap()
            .add(&SparsePoly::constant(3, frac(2, 3)))
            .unwrap();
        assert_eq!(p.add(&SparsePoly::zero(3)).unwrap(), p);
    }

    #[test]
    fn substitute_zero_kills_term() {
        let p = x(2, 0).mul(&x(2, 1)).unwrap();
        let assignment = BTreeMap::from([(1, SubstValue::Const(rat(0)))]);
        assert!(p.substitute(&assignment).unwrap().is_zero());
    }

    #[test]
    fn substitute_shift_binomial() {
        // x1^2 + x2^2 with x1 -> x1 + 1.
        let p = x(2, 0)
            .pow(2)
            .unwrap()
            .add(&x(2, 1).pow(2).unwrap())
            .unwrap();
        let shift = x(2, 0).add(&SparsePoly::one(2)).unwrap();
        let assignment = BTreeMap::from([(0, SubstValue::Poly(shift))]);
        let q = p.substitute(&assignment).unwrap();
        let expect = SparsePoly::from_terms(
            2,
            false,
            vec![
                (vec![2, 0], rat(1)),
                (vec![1, 0], rat(2)),
                (vec![0, 0], rat(1)),
                (vec![0, 2], rat(1)),
            ],
        )
        .unwrap();
        assert_eq!(q, expect);
    }

    #[test]
    fn exact_divide_linear() {
        let num = x(2, 0)
            .pow(2)
            .unwrap()
            .sub(&x(2, 1).pow(2).unwrap())
            .unwrap();
        let den = x(2, 0).sub(&x(2, 1)).unwrap();
        let q = num.exact_divide(&den).unwrap();
        assert_eq!(q, x(2, 0).add(&x(2, 1)).unwrap());
        assert_eq!(q.mul(&den).unwrap(), num);
        assert!(matches!(
            x(2, 0).exact_divide(&x(2, 1)),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn laurent_divide_units() {
        // (x1^2 - x1^-2) / (x1 - x1^-1) = x1 + x1^-1
        let num =
            SparsePoly::from_terms(1, true, vec![(vec![2], rat(1)), (vec![-2], rat(-1))]).unwrap();
        let den =
            SparsePoly::from_terms(1, true, vec![(vec![1], rat(1)), (vec![-1], rat(-1))]).unwrap();
        let q = num.exact_divide(&den).unwrap();
        let expect =
            SparsePoly::from_terms(1, true, vec![(vec![1], rat(1)), (vec![-1], rat(1))]).unwrap();
        assert_eq!(q, expect);
    }

    #[test]
    fn mismatched_operands_rejected() {
        let a = x(2, 0);
        let b = SparsePoly::var(3, 0);
        assert!(matches!(a.add(&b), Err(Error::DimensionMismatch(_, _))));
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch(_, _))));
        let l = SparsePoly::from_terms(2, true, vec![(vec![-1, 0], rat(1))]).unwrap();
        assert!(matches!(a.add(&l), Err(Error::LaurentMismatch)));
    }

    #[test]
    fn pole_detection() {
        let p = SparsePoly::from_terms(1, true, vec![(vec![-1], rat(1))]).unwrap();
        let assignment = BTreeMap::from([(0, SubstValue::Const(rat(0)))]);
        assert!(matches!(p.substitute(&assignment), Err(Error::Pole)));
    }

    #[test]
    fn act_swap_and_sign() {
        let swap = SignedPerm::transposition(2, 0, 1);
        let p = x(2, 0).sub(&x(2, 1)).unwrap();
        assert_eq!(p.act_signed_perm(&swap).unwrap(), p.neg());

        let flip = SignedPerm::sign_change(2, 0);
        let q = x(2, 0).mul(&x(2, 1)).unwrap();
        assert_eq!(q.act_signed_perm(&flip).unwrap(), q.neg());
    }

    #[test]
    fn mul_matches_naive_distribution() {
        // Independent oracle: distribute term pairs into a plain vector,
        // then sort and merge. Pins the canonical term-map normalization.
        fn naive_mul(a: &SparsePoly, b: &SparsePoly) -> Vec<(Vec<i64>, Rational)> {
            let mut raw: Vec<(Vec<i64>, Rational)> = Vec::new();
            for (ea, ca) in a.terms() {
                for (eb, cb) in b.terms() {
                    let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                    raw.push((e, ca * cb));
                }
            }
            raw.sort_by(|(e1, _), (e2, _)| e1.cmp(e2));
            let mut merged: Vec<(Vec<i64>, Rational)> = Vec::new();
            for (e, c) in raw {
                match merged.last_mut() {
                    Some((le, lc)) if *le == e => *lc += c,
                    _ => merged.push((e, c)),
                }
            }
            merged.retain(|(_, c)| !c.is_zero());
            merged
        }

        // e_1 * e_2 in three variables.
        let e1 = SparsePoly::from_terms(
            3,
            false,
            vec![
                (vec![1, 0, 0], rat(1)),
                (vec![0, 1, 0], rat(1)),
                (vec![0, 0, 1], rat(1)),
            ],
        )
        .unwrap();
        let e2 = SparsePoly::from_terms(
            3,
            false,
            vec![
                (vec![1, 1, 0], rat(1)),
                (vec![1, 0, 1], rat(1)),
                (vec![0, 1, 1], rat(1)),
            ],
        )
        .unwrap();
        let product = e1.mul(&e2).unwrap();
        let oracle = naive_mul(&e1, &e2);
        let got: Vec<(Vec<i64>, Rational)> = product
            .terms()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        assert_eq!(got, oracle);
    }

    #[test]
    fn act_matrix_inverse_composition() {
        // p(M^{-1} x) for the shear M = [[1, 1], [0, 1]]: inverse sends
        // x1 -> x1 - x2, so x1^2 becomes (x1 - x2)^2.
        let m = vec![vec![rat(1), rat(1)], vec![rat(0), rat(1)]];
        let p = x(2, 0).pow(2).unwrap();
        let q = p.act_matrix(&m).unwrap();
        let expect = x(2, 0).sub(&x(2, 1)).unwrap().pow(2).unwrap();
        assert_eq!(q, expect);
        let singular = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert!(matches!(p.act_matrix(&singular), Err(Error::Singular)));
        // Signed permutations agree with their matrix form.
        let w = SignedPerm::neg_transposition(2, 0, 1);
        let p = x(2, 0).pow(2).unwrap().mul(&x(2, 1)).unwrap();
        assert_eq!(
            p.act_signed_perm(&w).unwrap(),
            p.act_matrix(&w.matrix()).unwrap()
        );
    }

    #[test]
    fn translate_matches_substitution() {
        let p = x(3, 0)
            .pow(3)
            .unwrap()
            .mul(&x(3, 2))
            .unwrap()
            .add(&x(3, 1).pow(2).unwrap())
            .unwrap();
        let shift = [frac(1, 2), rat(-2), rat(3)];
        let translated = p.translate(&shift).unwrap();
        let mut assignment = BTreeMap::new();
        for (i, d) in shift.iter().enumerate() {
            let lin = x(3, i).add(&SparsePoly::constant(3, d.clone())).unwrap();
            assignment.insert(i, SubstValue::Poly(lin));
        }
        assert_eq!(translated, p.substitute(&assignment).unwrap());
    }

    #[test]
    fn display_and_json_canonical() {
        let p = SparsePoly::from_terms(
            2,
            false,
            vec![(vec![1, 1], rat(3)), (vec![0, 0], frac(-1, 2))],
        )
        .unwrap();
        assert_eq!(format!("{}", p), "-1/2 + 3 * x1^1 * x2^1");
        assert_eq!(
            p.to_json()["terms"],
            json!([[[0, 0], "-1/2"], [[1, 1], "3/1"]])
        );
    }
}
