//! Multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients. No zero coefficient is ever stored; equality is
//! coefficient-wise. Division never happens here — it is tracked in
//! [`super::RationalFn`] or certified by [`super::exact_div`].

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::vars::{VarId, VarTable};

/// Sparse Laurent polynomial: monomial → nonzero coefficient, keyed by the
/// graded-lexicographic order (the leading term is the last key).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        LaurentPoly { terms }
    }

    pub fn constant_i64(c: i64) -> Self {
        LaurentPoly::constant(BigInt::from(c))
    }

    pub fn monomial(m: Monomial) -> Self {
        LaurentPoly::term(m, BigInt::one())
    }

    pub fn var(id: VarId) -> Self {
        LaurentPoly::monomial(Monomial::var(id))
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// `1 - m`, the ubiquitous kernel factor.
    pub fn one_minus(m: &Monomial) -> Self {
        let mut p = LaurentPoly::one();
        p.add_term(m.clone(), -BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, BigInt)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading (grlex-maximal) term.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Trailing (grlex-minimal) term.
    pub fn trailing(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        // Iterate the smaller operand on the outside.
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = LaurentPoly::zero();
        for (ms, cs) in &small.terms {
            for (mb, cb) in &big.terms {
                out.add_term(ms.mul(mb), cs * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u64) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Renames variables through `map`.
    pub fn relabel(&self, map: &impl Fn(VarId) -> VarId) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.relabel(map), c.clone());
        }
        out
    }

    /// Substitutes a variable by a monomial (exact in the Laurent ring).
    pub fn substitute(&self, var: VarId, replacement: &Monomial) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.substitute(var, replacement), c.clone());
        }
        out
    }

    /// Applies several variable → monomial substitutions simultaneously.
    pub fn substitute_all(&self, subs: &[(VarId, Monomial)]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = Monomial::one();
            let mut rest: Vec<(VarId, i64)> = Vec::new();
            'outer: for &(v, e) in m.exps() {
                for (sv, rep) in subs {
                    if *sv == v {
                        acc = acc.mul(&rep.pow(e));
                        continue 'outer;
                    }
                }
                rest.push((v, e));
            }
            out.add_term(Monomial::from_exps(rest).mul(&acc), c.clone());
        }
        out
    }

    /// GCD of all coefficients (positive), 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = gcd_big(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d`; panics if not exactly divisible.
    pub fn div_scalar_exact(&self, d: &BigInt) -> LaurentPoly {
        assert!(!d.is_zero(), "division by zero scalar");
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let (q, r) = num_integer_div_rem(c, d);
                    assert!(r.is_zero(), "inexact scalar division");
                    (m.clone(), q)
                })
                .collect(),
        }
    }

    /// Per-variable minimum exponent over the support, counting implicit
    /// zeros for terms missing a variable (used to shift into the ordinary
    /// polynomial ring).
    pub fn min_exponents(&self) -> BTreeMap<VarId, i64> {
        let mut vars: alloc::collections::BTreeSet<VarId> = alloc::collections::BTreeSet::new();
        for m in self.terms.keys() {
            for &(v, _) in m.exps() {
                vars.insert(v);
            }
        }
        vars.into_iter()
            .map(|v| {
                let mn = self
                    .terms
                    .keys()
                    .map(|m| m.exponent(v))
                    .min()
                    .unwrap_or(0);
                (v, mn)
            })
            .collect()
    }

    /// Renders the polynomial with variable names, leading term first.
    pub fn display(&self, table: &VarTable) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = !abs.is_one() || m.is_one();
            if show_coeff {
                let _ = write!(s, "{abs}");
            }
            for (j, &(v, e)) in m.exps().iter().enumerate() {
                if show_coeff || j > 0 {
                    s.push('*');
                }
                let _ = write!(s, "{}", table.name(v));
                if e != 1 {
                    let _ = write!(s, "^{e}");
                }
            }
        }
        s
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<poly with {} terms>", self.terms.len())
    }
}

pub(crate) fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(id: u32) -> LaurentPoly {
        LaurentPoly::var(id)
    }

    #[test]
    fn arithmetic_basics() {
        let p = v(0).add(&v(1));
        let q = v(0).sub(&v(1));
        let prod = p.mul(&q);
        // (x+y)(x-y) = x^2 - y^2
        let expect = LaurentPoly::monomial(Monomial::var_pow(0, 2))
            .sub(&LaurentPoly::monomial(Monomial::var_pow(1, 2)));
        assert_eq!(prod, expect);
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let p = v(0).sub(&v(0));
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn content_and_scalar_division() {
        let p = v(0).mul_scalar(&BigInt::from(6)).add(&LaurentPoly::constant_i64(9));
        assert_eq!(p.content(), BigInt::from(3));
        let q = p.div_scalar_exact(&BigInt::from(3));
        assert_eq!(q.coefficient(&Monomial::one()), BigInt::from(3));
    }
}
