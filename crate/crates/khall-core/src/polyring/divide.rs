//! Certified exact division in the Laurent ring.
//!
//! Shuffle products are computed as a symmetrized rational sum followed by a
//! single division; the paper guarantees the quotient is a genuine Laurent
//! polynomial, and a nonzero remainder here is an invariant violation, never
//! a silent rational result.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::monomial::Monomial;
use super::poly::LaurentPoly;

/// Divides `num` by `den`, certifying exactness.
///
/// Both operands are shifted by monomials into the ordinary polynomial ring,
/// where grlex long division terminates; divisibility is unchanged by the
/// shift because per-variable minimal exponents are additive on products.
pub fn exact_div(num: &LaurentPoly, den: &LaurentPoly) -> super::Result<LaurentPoly> {
    if den.is_zero() {
        return Err(super::err("division by zero polynomial"));
    }
    if num.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let shift_of = |p: &LaurentPoly| {
        Monomial::from_exps(
            p.min_exponents()
                .into_iter()
                .filter(|&(_, e)| e < 0)
                .map(|(v, e)| (v, -e))
                .collect::<Vec<_>>(),
        )
    };
    let num_shift = shift_of(num);
    let den_shift = shift_of(den);
    let n = num.mul_monomial(&num_shift);
    let d = den.mul_monomial(&den_shift);

    let mut rem = n;
    let mut quot = LaurentPoly::zero();
    let (dlm, dlc) = {
        let (m, c) = d.leading().expect("nonzero divisor");
        (m.clone(), c.clone())
    };
    while let Some((rlm, rlc)) = rem.leading() {
        let qm = rlm.mul(&dlm.inv());
        // In the shifted polynomial ring the quotient term must itself be a
        // genuine monomial, or the division cannot be exact.
        if qm.exps().iter().any(|&(_, e)| e < 0) {
            return Err(super::err(format!(
                "inexact division: leading term not divisible (remainder has {} terms)",
                rem.num_terms()
            )));
        }
        let (qc, rr) = (rlc / &dlc, rlc % &dlc);
        if !rr.is_zero() {
            return Err(super::err(
                "inexact division: leading coefficient not divisible",
            ));
        }
        quot.add_term(qm.clone(), qc.clone());
        rem = rem.sub(&d.mul(&LaurentPoly::term(qm, qc)));
    }
    // Undo the shifts: num/den = (n / m_n) / (d / m_d) = (n/d) * m_d / m_n.
    Ok(quot.mul_monomial(&den_shift.mul(&num_shift.inv())))
}

/// Divides sequentially by each factor, certifying exactness of every step.
/// Valid because ℤ[s±] is a UFD: any factor of an exact divisor divides.
pub fn exact_div_factors<'a>(
    num: &LaurentPoly,
    factors: impl Iterator<Item = &'a LaurentPoly>,
) -> super::Result<LaurentPoly> {
    let mut acc = num.clone();
    for f in factors {
        acc = exact_div(&acc, f)?;
    }
    Ok(acc)
}

/// True when the divisor's leading coefficient is ±1, which guarantees the
/// integer long-division steps stay exact whenever the quotient exists.
pub fn has_unit_leading_coeff(p: &LaurentPoly) -> bool {
    p.leading()
        .map(|(_, c)| c.abs() == BigInt::from(1))
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::vars::VarTable;

    fn vars() -> VarTable {
        VarTable::new(&["h", "t"], &["1"], 2).unwrap()
    }

    #[test]
    fn divides_product_of_binomials() {
        let t = vars();
        let x = t.slot(crate::polyring::Tag::A, 0, 1).unwrap();
        let y = t.slot(crate::polyring::Tag::A, 0, 2).unwrap();
        let f1 = LaurentPoly::one_minus(&Monomial::from_exps(alloc::vec![(x, 1), (y, -1)]));
        let f2 = LaurentPoly::one_minus(&Monomial::from_exps(alloc::vec![(x, -2), (y, 1)]));
        let prod = f1.mul(&f2);
        assert_eq!(exact_div(&prod, &f1).unwrap(), f2);
        assert_eq!(exact_div(&prod, &f2).unwrap(), f1);
        assert_eq!(
            exact_div_factors(&prod, [&f1, &f2].into_iter()).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn rejects_inexact_division() {
        let t = vars();
        let x = t.slot(crate::polyring::Tag::A, 0, 1).unwrap();
        let y = t.slot(crate::polyring::Tag::A, 0, 2).unwrap();
        let f1 = LaurentPoly::one_minus(&Monomial::var(x));
        let f2 = LaurentPoly::one_minus(&Monomial::var(y));
        assert!(exact_div(&f1, &f2).is_err());
        let sum = f1.add(&f2);
        assert!(exact_div(&sum, &f1).is_err());
    }
}
