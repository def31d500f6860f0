//! The multiplicative expansion identities for ι± : both expansions of
//! (1 − x/y)^{-1} are uniquely specified by multiplying back to 1, and the
//! truncation at order N leaves exactly one telescoping tail term of order
//! N + 1. The check runs in a formal symbol ring whose basis elements are
//! (1−y)^a (1−x)^{-b} (mirrored symbols for ι⁻) with coefficients that are
//! Laurent polynomials in x and y, so telescoping is verified without any
//! rewriting ambiguity.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::monomial::Monomial;
use super::poly::LaurentPoly;
use super::vars::VarTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IotaSign {
    Plus,
    Minus,
}

/// Result of the telescoping check.
#[derive(Clone, Debug)]
pub struct IotaReport {
    pub sign: IotaSign,
    pub order: i64,
    /// True iff (1 − x/y)·ι(1 − x/y)^{-1} = 1 − tail(N+1) exactly.
    pub pass: bool,
    pub detail: String,
}

/// Element of the symbol ring: (a, b) ↦ coefficient on (1−y)^a (1−x)^{-b}
/// (or the mirrored symbols), coefficients in ℤ[x^{±}, y^{±}].
type SymbolRing = BTreeMap<(i64, i64), LaurentPoly>;

fn add_sym(r: &mut SymbolRing, key: (i64, i64), p: LaurentPoly) {
    if p.is_zero() {
        return;
    }
    let e = r.entry(key).or_insert_with(LaurentPoly::zero);
    e.add_assign(&p);
    if e.is_zero() {
        r.remove(&key);
    }
}

/// Verifies the defining identity of ι^{sign} at truncation order N.
///
/// For ι⁺: S_N = y Σ_{k=0..N} (1−y)^k (1−x)^{-k-1} and
/// (1 − x/y)·S_N = 1 − (1−y)^{N+1}(1−x)^{-(N+1)}.
/// For ι⁻ the mirrored symbols (1−y^{-1})^a (1−x^{-1})^{-b} appear, with
/// prefactor −x^{-1} and the same telescoping shape.
pub fn iota_check(sign: IotaSign, order: i64) -> super::Result<IotaReport> {
    if order < 0 {
        return Err(super::err("iota_check order must be nonnegative"));
    }
    // A private two-variable table; x and y are ordinary parameters here.
    let table = VarTable::new(&["x", "y"], &[], 0)?;
    let x = table.lookup("x").unwrap();
    let y = table.lookup("y").unwrap();

    // The truncated sum as a symbol-ring element. The scalar prefactor is a
    // Laurent monomial in x or y.
    let prefactor = match sign {
        IotaSign::Plus => LaurentPoly::monomial(Monomial::var(y)),
        IotaSign::Minus => LaurentPoly::term(Monomial::var_pow(x, -1), -BigInt::one()),
    };
    let mut sum: SymbolRing = BTreeMap::new();
    for k in 0..=order {
        add_sym(&mut sum, (k, k + 1), prefactor.clone());
    }

    // (1 − x/y) written in the ring's own symbols:
    //   ι⁺: y^{-1}(1−x) − y^{-1}(1−y)
    //   ι⁻: −x(1−x^{-1}) + x(1−y^{-1})
    // The (1−x)-type factor lowers b by one, the (1−y)-type raises a by one.
    let (mul_b, mul_a) = match sign {
        IotaSign::Plus => (
            LaurentPoly::monomial(Monomial::var_pow(y, -1)),
            LaurentPoly::term(Monomial::var_pow(y, -1), -BigInt::one()),
        ),
        IotaSign::Minus => (
            LaurentPoly::term(Monomial::var(x), -BigInt::one()),
            LaurentPoly::monomial(Monomial::var(x)),
        ),
    };

    let mut product: SymbolRing = BTreeMap::new();
    for (&(a, b), coeff) in &sum {
        add_sym(&mut product, (a, b - 1), coeff.mul(&mul_b));
        add_sym(&mut product, (a + 1, b), coeff.mul(&mul_a));
    }

    // Expected: exactly 1·(0,0) − 1·(N+1, N+1).
    let mut expected: SymbolRing = BTreeMap::new();
    add_sym(&mut expected, (0, 0), LaurentPoly::one());
    add_sym(&mut expected, (order + 1, order + 1), LaurentPoly::one().neg());

    let pass = product == expected;
    let residual: Vec<String> = product
        .iter()
        .filter(|(k, _)| **k != (0, 0))
        .map(|((a, b), c)| format!("({a},{b}): {}", c.display(&table)))
        .collect();
    Ok(IotaReport {
        sign,
        order,
        pass,
        detail: if pass {
            format!(
                "product = 1 - tail(a={0}, b={0}); residual is the single order-{0} term",
                order + 1
            )
        } else {
            format!("unexpected residual terms: {}", residual.join("; "))
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn telescoping_plus() {
        for n in [0, 1, 3, 7] {
            let r = iota_check(IotaSign::Plus, n).unwrap();
            assert!(r.pass, "order {n}: {}", r.detail);
        }
    }

    #[test]
    fn telescoping_minus() {
        for n in [0, 2, 5] {
            let r = iota_check(IotaSign::Minus, n).unwrap();
            assert!(r.pass, "order {n}: {}", r.detail);
        }
    }
}
