//! Rational functions as reduced numerator/denominator pairs.
//!
//! Equality is decided by cross-multiplication, which is sound in the
//! integral domain ℤ[s±]; reduction (integer content, common monomial factor,
//! opportunistic exact division) only keeps operands small and normalizes the
//! leading sign of the denominator under the grlex order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::divide::exact_div;
use super::monomial::Monomial;
use super::poly::{gcd_big, LaurentPoly};

#[derive(Clone, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> super::Result<RationalFn> {
        if den.is_zero() {
            return Err(super::err("rational function with zero denominator"));
        }
        let mut r = RationalFn { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_poly(p: LaurentPoly) -> RationalFn {
        RationalFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> RationalFn {
        RationalFn::from_poly(LaurentPoly::one())
    }

    pub fn zero() -> RationalFn {
        RationalFn::from_poly(LaurentPoly::zero())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // Common integer content.
        let g = gcd_big(&self.num.content(), &self.den.content());
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.div_scalar_exact(&g);
            self.den = self.den.div_scalar_exact(&g);
        }
        // Common monomial factor: shift both supports toward the origin.
        let shift = |p: &LaurentPoly| {
            Monomial::from_exps(
                p.min_exponents()
                    .into_iter()
                    .map(|(v, e)| (v, -e))
                    .collect(),
            )
        };
        self.num = self.num.mul_monomial(&shift(&self.num));
        self.den = self.den.mul_monomial(&shift(&self.den));
        // Opportunistic full cancellation.
        if let Ok(q) = exact_div(&self.num, &self.den) {
            self.num = q;
            self.den = LaurentPoly::one();
        }
        // Leading sign of the denominator is positive.
        if self
            .den
            .leading()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        let mut r = RationalFn {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        };
        r.normalize();
        r
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> RationalFn {
        let mut r = RationalFn {
            num: self.num.mul(p),
            den: self.den.clone(),
        };
        r.normalize();
        r
    }

    pub fn inv(&self) -> super::Result<RationalFn> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        let mut r = RationalFn {
            num: self
                .num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        };
        r.normalize();
        r
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Cross-multiplication equality, sound without any reduction.
    pub fn eq_cross(&self, other: &RationalFn) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// The constant value, when the function reduces to an integer.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.num.is_zero() {
            return Some(BigInt::zero());
        }
        if self.den.is_one() && self.num.num_terms() == 1 {
            let (m, c) = self.num.leading().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        self.eq_cross(other)
    }
}

impl Eq for RationalFn {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Tag, VarTable};

    #[test]
    fn cross_multiplication_agrees_with_reduction() {
        let t = VarTable::new(&[], &["1"], 2).unwrap();
        let x = LaurentPoly::var(t.slot(Tag::A, 0, 1).unwrap());
        let y = LaurentPoly::var(t.slot(Tag::A, 0, 2).unwrap());
        // (x^2 - y^2)/(x - y) == (x + y)/1
        let a = RationalFn::new(x.mul(&x).sub(&y.mul(&y)), x.sub(&y)).unwrap();
        let b = RationalFn::from_poly(x.add(&y));
        assert!(a.eq_cross(&b));
        assert_eq!(a.den(), &LaurentPoly::one());
    }

    #[test]
    fn telescoping_sum_is_one() {
        // 1/(1-x) + 1/(1-1/x) = 1
        let t = VarTable::new(&[], &["1"], 1).unwrap();
        let x = Monomial::var(t.slot(Tag::A, 0, 1).unwrap());
        let a = RationalFn::new(LaurentPoly::one(), LaurentPoly::one_minus(&x)).unwrap();
        let b = RationalFn::new(LaurentPoly::one(), LaurentPoly::one_minus(&x.inv())).unwrap();
        assert!(a.add(&b).is_one());
    }
}
