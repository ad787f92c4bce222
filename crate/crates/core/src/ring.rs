//! Exact multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are kept in a canonical map from [`Monomial`] to a nonzero
//! coefficient, so structural equality is ring equality. Monomials are
//! ordered lexicographically with variables compared by name (byte order)
//! and a larger exponent of an earlier variable ranking higher; printing
//! walks the terms from the largest monomial down, e.g. `A^2*d + 2*A*B + B^2*d`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

mod parse;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("invalid variable name {0:?}")]
    InvalidVariable(String),
    #[error("cannot substitute a non-monomial for {0}, which occurs with a negative exponent")]
    NonInvertibleSubstitution(VarSym),
    #[error("negative power of a non-unit")]
    NonInvertiblePower,
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// A variable name: `[A-Za-z][A-Za-z0-9_]*`, compared case-sensitively.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarSym(String);

impl VarSym {
    pub fn new(name: &str) -> Result<Self, RingError> {
        if is_identifier(name) {
            Ok(VarSym(name.to_string()))
        } else {
            Err(RingError::InvalidVariable(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VarSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A Laurent monomial: variables sorted by name, exponents nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarSym, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarSym, exp: i32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(alloc::vec![(v, exp)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&VarSym, i32)> {
        self.0.iter().map(|(v, e)| (v, *e))
    }

    pub fn exponent(&self, v: &VarSym) -> i32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    /// Componentwise combination of exponent vectors, dropping zeros.
    fn zip_with(&self, other: &Monomial, f: impl Fn(i32, i32) -> i32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (v, e) = match (a.get(i), b.get(j)) {
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, f(*ea, *eb))
                    }
                    Ordering::Less => {
                        i += 1;
                        (va, f(*ea, 0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, f(0, *eb))
                    }
                },
                (Some((va, ea)), None) => {
                    i += 1;
                    (va, f(*ea, 0))
                }
                (None, Some((vb, eb))) => {
                    j += 1;
                    (vb, f(0, *eb))
                }
                (None, None) => unreachable!(),
            };
            if e != 0 {
                out.push((v.clone(), e));
            }
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        self.zip_with(other, |x, y| x + y)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |x, y| x - y)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), e * k)).collect())
    }

    fn min_with(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |x, y| x.min(y))
    }

    /// True when every exponent of `self` is at most the matching exponent of `other`.
    fn divides(&self, other: &Monomial) -> bool {
        other.div(self).0.iter().all(|(_, e)| *e > 0)
    }

    /// Split off the exponent of `v`.
    fn remove(&self, v: &VarSym) -> (i32, Monomial) {
        match self.0.binary_search_by(|(w, _)| w.cmp(v)) {
            Ok(i) => {
                let mut rest = self.0.clone();
                let (_, e) = rest.remove(i);
                (e, Monomial(rest))
            }
            Err(_) => (0, self.clone()),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, ea)), None) => return ea.cmp(&0),
                (None, Some((_, eb))) => return 0.cmp(eb),
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(eb),
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Element of `Z[x_1^{±1}, ..., x_k^{±1}]` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn var(v: &VarSym) -> Self {
        LaurentPoly::term(1, Monomial::var(v.clone(), 1))
    }

    /// The polynomial consisting of the single variable `name`.
    ///
    /// Panics if `name` is not a valid identifier; meant for literal names.
    #[track_caller]
    pub fn symbol(name: &str) -> Self {
        LaurentPoly::var(&VarSym::new(name).expect("valid variable name"))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the largest monomial to the smallest.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> BTreeSet<VarSym> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v.clone()))
            .collect()
    }

    /// Single term with coefficient ±1.
    pub fn as_unit_monomial(&self) -> Option<(bool, &Monomial)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((false, m))
        } else if (-c).is_one() {
            Some((true, m))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, c: BigInt, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn mul_monomial(&self, c: &BigInt, m: &Monomial) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> LaurentPoly {
        self.mul_monomial(&c.into(), &Monomial::one())
    }

    /// Nonnegative power.
    pub fn pow(&self, mut k: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative powers need a unit monomial.
    pub fn powi(&self, k: i32) -> Result<LaurentPoly, RingError> {
        if k >= 0 {
            return Ok(self.pow(k as u32));
        }
        let (neg, m) = self
            .as_unit_monomial()
            .ok_or(RingError::NonInvertiblePower)?;
        let sign = if neg && k % 2 != 0 { -1 } else { 1 };
        Ok(LaurentPoly::term(sign, m.pow(k)))
    }

    /// Replace every occurrence of `var` by `value`.
    pub fn substitute(&self, var: &VarSym, value: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        let mut powers: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.remove(var);
            if e == 0 {
                out.add_term(c.clone(), rest);
                continue;
            }
            if let alloc::collections::btree_map::Entry::Vacant(slot) = powers.entry(e) {
                let p = value
                    .powi(e)
                    .map_err(|_| RingError::NonInvertibleSubstitution(var.clone()))?;
                slot.insert(p);
            }
            for (pm, pc) in &powers[&e].terms {
                out.add_term(c * pc, rest.mul(pm));
            }
        }
        Ok(out)
    }

    /// Largest monomial dividing every term (exponents may be negative).
    fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        let mut acc = first.clone();
        for m in it {
            acc = acc.min_with(m);
        }
        acc
    }

    /// Exact quotient `self / q` in the Laurent ring.
    ///
    /// Both operands are shifted by their monomial content so the long division
    /// runs on genuine polynomials, where the lex order is a well-order.
    pub fn exact_div(&self, q: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        if q.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if q.terms.len() == 1 {
            let (m, c) = q.terms.iter().next().unwrap();
            let inv = m.inverse();
            let mut terms = BTreeMap::new();
            for (pm, pc) in &self.terms {
                let (quot, rem) = pc.div_rem(c);
                if !rem.is_zero() {
                    return Err(RingError::NotDivisible);
                }
                terms.insert(pm.mul(&inv), quot);
            }
            return Ok(LaurentPoly { terms });
        }

        let p_shift = self.monomial_content();
        let q_shift = q.monomial_content();
        let one = BigInt::one();
        let mut rem = self.mul_monomial(&one, &p_shift.inverse());
        let divisor = q.mul_monomial(&one, &q_shift.inverse());
        let (lead_m, lead_c) = divisor
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();

        let mut quot = LaurentPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            if !lead_m.divides(rm) {
                return Err(RingError::NotDivisible);
            }
            let (c, r) = rc.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(RingError::NotDivisible);
            }
            let m = rm.div(&lead_m);
            for (dm, dc) in &divisor.terms {
                rem.add_term(-(dc * &c), dm.mul(&m));
            }
            quot.add_term(c, m);
        }
        Ok(quot.mul_monomial(&one, &p_shift.div(&q_shift)))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), m.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = core::mem::replace(self, rhs);
            for (m, c) in lhs.terms {
                self.add_term(c, m);
            }
        } else {
            for (m, c) in rhs.terms {
                self.add_term(c, m);
            }
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(-c, m.clone());
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = small.terms.iter().next().unwrap();
            return large.mul_monomial(c, m);
        }
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Add<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: &LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Sub<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: &LaurentPoly) -> LaurentPoly {
        self -= rhs;
        self
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        &self * rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_poly(s)
    }
}
