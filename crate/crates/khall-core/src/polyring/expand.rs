//! Multiplicative expansion of kernel factors around z → ∞ (equivalently
//! w → ∞).
//!
//! For a Laurent monomial root L and formal monomial v = z^a w^b:
//!
//! - `(1 − v·L)^{e}` with `e ≥ 0` is an exact polynomial;
//! - `(1 − v·L)^{-1}` with v → ∞ in the regime (a, b ≥ 0, not both 0)
//!   expands as `−Σ_{k≥1} v^{-k} L^{-k}`;
//! - `(1 − v·L)^{-1}` with v → 0 (a, b ≤ 0, not both 0) expands as
//!   `Σ_{k≥0} v^{k} L^{k}`.
//!
//! Mixed slots such as w/z admit no expansion bounded above in both
//! variables; such factors are handled at the rational level only.

use num_bigint::BigInt;
use num_traits::One;

use super::monomial::Monomial;
use super::poly::LaurentPoly;
use super::series::{slot_neg, FormalSeries, FormalVar, SlotVec, Window};

/// Sign of a factor exponent as named by the artifact's operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpandSign {
    Plus,
    Minus,
}

/// Expands `(1 − v·root)^{exponent}` where `v = z^{slot[0]} w^{slot[1]}`.
///
/// `lo` bounds the requested window per formal variable (ignored for exact
/// outcomes). Roots must be free of formal variables by construction; the
/// degenerate factor `(1 − 1)^{-1}` is rejected.
pub fn expand_factor(
    root: &Monomial,
    slot: SlotVec,
    exponent: i64,
    lo: [i64; 2],
) -> super::Result<FormalSeries> {
    if exponent >= 0 {
        let base = one_minus_slot(root, slot);
        return Ok(base.pow(exponent as u64));
    }
    if slot == [0, 0] && root.is_one() {
        return Err(super::err("degenerate factor (1 - 1) cannot be inverted"));
    }
    let inv_pow = (-exponent) as u64;
    let single = if slot != [0, 0] && slot.iter().all(|&c| c >= 0) {
        // v → ∞: (1 − vL)^{-1} = −Σ_{k≥1} v^{-k} L^{-k}
        let depth = depth_for(slot, lo, inv_pow);
        let mut s = FormalSeries::zero();
        for k in 1..=depth {
            s.add_term(
                [-slot[0] * k, -slot[1] * k],
                LaurentPoly::term(root.pow(-k), -BigInt::one()),
            );
        }
        with_window(s, slot, [0, 0])
    } else if slot != [0, 0] && slot.iter().all(|&c| c <= 0) {
        // v → 0: (1 − vL)^{-1} = Σ_{k≥0} v^{k} L^{k}
        let depth = depth_for(slot, lo, inv_pow);
        let mut s = FormalSeries::zero();
        for k in 0..=depth {
            s.add_term(
                [slot[0] * k, slot[1] * k],
                LaurentPoly::term(root.pow(k), BigInt::one()),
            );
        }
        with_window(s, slot, [0, 0])
    } else if slot == [0, 0] {
        return Err(super::err(
            "factor carries no formal variable; expansion undefined (use rational arithmetic)",
        ));
    } else {
        return Err(super::err(
            "mixed formal slot (e.g. w/z) has no expansion around infinity; use rational arithmetic",
        ));
    };
    Ok(single.pow(inv_pow))
}

fn one_minus_slot(root: &Monomial, slot: SlotVec) -> FormalSeries {
    let mut s = FormalSeries::from_poly(LaurentPoly::one());
    s.add_term(slot, LaurentPoly::term(root.clone(), -BigInt::one()));
    s
}

/// Expansion depth so every requested exponent window is covered even after
/// raising to `inv_pow`.
fn depth_for(slot: SlotVec, lo: [i64; 2], inv_pow: u64) -> i64 {
    let mut depth: i64 = 1;
    for v in 0..2 {
        if slot[v] != 0 {
            let span = lo[v].abs() + 1;
            depth = depth.max(span / slot[v].abs() + 1);
        }
    }
    depth + inv_pow as i64
}

fn with_window(mut s: FormalSeries, slot: SlotVec, top: [i64; 2]) -> FormalSeries {
    let lo_key = [
        s.coeffs().map(|(k, _)| k[0]).min().unwrap_or(0),
        s.coeffs().map(|(k, _)| k[1]).min().unwrap_or(0),
    ];
    let mut w = [Window::EXACT; 2];
    for v in 0..2 {
        if slot[v] != 0 {
            w[v] = Window {
                lo: Some(lo_key[v]),
                top: top[v],
            };
        }
    }
    s.set_window(w);
    s
}

/// The spec-facing form: expand `(1 − attach·root)^{sign}` in one variable,
/// with `attach` the variable or its inverse, on the window `[lo, 0]`
/// (positive powers of an exact factor extend above 0 unharmed).
pub fn expand_factor_spec(
    root: &Monomial,
    sign: ExpandSign,
    var: FormalVar,
    attach_inverse: bool,
    lo: i64,
) -> super::Result<FormalSeries> {
    let mut slot = [0i64; 2];
    slot[var as usize] = if attach_inverse { -1 } else { 1 };
    let e = match sign {
        ExpandSign::Plus => 1,
        ExpandSign::Minus => -1,
    };
    let mut lo2 = [0i64; 2];
    lo2[var as usize] = lo;
    let s = expand_factor(root, slot, e, lo2)?;
    let trunc = [
        (var == FormalVar::Z).then_some(lo),
        (var == FormalVar::W).then_some(lo),
    ];
    Ok(match sign {
        ExpandSign::Plus => s,
        ExpandSign::Minus => s.truncate(trunc),
    })
}

/// Multiplies the expansions of many factors, pre-expanding each one deep
/// enough that the product is exact on `lo` (per variable) wherever the
/// factors admit expansions at all.
pub fn expand_product<'a>(
    factors: impl Iterator<Item = (&'a Monomial, SlotVec, i64)> + Clone,
    lo: [i64; 2],
    body_top: [i64; 2],
) -> super::Result<FormalSeries> {
    // Total support top per variable over all factors.
    let mut tops = [0i64; 2];
    for (_, slot, e) in factors.clone() {
        if e > 0 {
            for v in 0..2 {
                if slot[v] > 0 {
                    tops[v] += slot[v] * e;
                }
            }
        }
    }
    let mut out = FormalSeries::one();
    for (root, slot, e) in factors {
        // Depth request: everything the final window can see through the
        // other factors' positive reach plus the body's.
        let need = [
            lo[0] - tops[0] - body_top[0].max(0),
            lo[1] - tops[1] - body_top[1].max(0),
        ];
        let f = expand_factor(root, slot, e, need)?;
        out = out.mul(&f);
    }
    // Keep enough depth for a subsequent multiplication by the exact body.
    Ok(out.truncate([
        Some(lo[0] - body_top[0].max(0)),
        Some(lo[1] - body_top[1].max(0)),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::series::SLOT_Z;
    use crate::polyring::{Tag, VarTable};

    fn root() -> (VarTable, Monomial) {
        let t = VarTable::new(&["h"], &["1"], 1).unwrap();
        let l = t.slot(Tag::A, 0, 1).unwrap();
        (t, Monomial::var(l))
    }

    #[test]
    fn plus_sign_is_exact() {
        let (_, l) = root();
        let s = expand_factor(&l, SLOT_Z, 1, [0, 0]).unwrap();
        assert!(s.is_exact());
        assert_eq!(s.coefficient([0, 0]), LaurentPoly::one());
        assert_eq!(
            s.coefficient([1, 0]),
            LaurentPoly::term(l.clone(), BigInt::from(-1))
        );
    }

    #[test]
    fn z_to_infinity_convention() {
        // (1 - zL)^{-1} = -sum_{k>=1} z^{-k} L^{-k}
        let (_, l) = root();
        let s = expand_factor(&l, SLOT_Z, -1, [-8, 0]).unwrap();
        for k in 1..=8 {
            assert_eq!(
                s.coefficient([-k, 0]),
                LaurentPoly::term(l.pow(-k), BigInt::from(-1)),
                "coefficient at z^-{k}"
            );
        }
        assert!(s.coefficient([0, 0]).is_zero());
        assert!(s.window()[0].lo.unwrap() <= -8);
    }

    #[test]
    fn z_inverse_geometric_series() {
        // (1 - z^{-1}L)^{-1} = sum_{k>=0} z^{-k} L^{k}
        let (_, l) = root();
        let s = expand_factor(&l, [-1, 0], -1, [-8, 0]).unwrap();
        for k in 0..=8 {
            assert_eq!(s.coefficient([-k, 0]), LaurentPoly::monomial(l.pow(k)));
        }
    }

    #[test]
    fn multiply_back_gives_one_on_window() {
        let (_, l) = root();
        for slot in [SLOT_Z, [-1, 0]] {
            let s = expand_factor(&l, slot, -1, [-8, 0]).unwrap();
            let f = expand_factor(&l, slot, 1, [0, 0]).unwrap();
            let prod = s.mul(&f);
            let cmp = prod.compare(&FormalSeries::one());
            assert!(cmp.is_equal(), "multiply-back failed for slot {slot:?}: {cmp:?}");
        }
    }

    #[test]
    fn mixed_slot_rejected() {
        let (_, l) = root();
        assert!(expand_factor(&l, [-1, 1], -1, [-4, -4]).is_err());
    }
}
