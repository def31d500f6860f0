//! Truncated Laurent series in the formal variables z and w with
//! [`LaurentPoly`] coefficients and explicit valid windows.
//!
//! Window semantics, per formal variable:
//! - `lo = Some(n)`: coefficients at exponents ≥ n are exact, below n
//!   nothing is asserted;
//! - `lo = None`: the series is exact (its support is finite and fully
//!   stored);
//! - `top`: exponents strictly above `top` are known to vanish.
//!
//! Products shrink windows conservatively: a convolution coefficient is only
//! kept where every contributing term of the untruncated factors is
//! determined. Comparisons examine only the intersection of valid windows.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::poly::LaurentPoly;

/// Formal series variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FormalVar {
    Z = 0,
    W = 1,
}

/// Formal monomial z^a w^b attached to an expansion factor or key shift.
pub type SlotVec = [i64; 2];

pub const SLOT_NONE: SlotVec = [0, 0];
pub const SLOT_Z: SlotVec = [1, 0];
pub const SLOT_W: SlotVec = [0, 1];
pub const SLOT_ZW: SlotVec = [1, 1];

pub fn slot_neg(s: SlotVec) -> SlotVec {
    [-s[0], -s[1]]
}

pub fn slot_add(a: SlotVec, b: SlotVec) -> SlotVec {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn slot_scale(a: SlotVec, k: i64) -> SlotVec {
    [a[0] * k, a[1] * k]
}

/// Exponent key (z, w).
pub type FKey = [i64; 2];

/// Valid window of one formal variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    /// Exact from this exponent upward; `None` means exact everywhere.
    pub lo: Option<i64>,
    /// Known zero strictly above this exponent.
    pub top: i64,
}

impl Window {
    pub const EXACT: Window = Window { lo: None, top: 0 };

    fn mul(self, other: Window) -> Window {
        let lo = match (self.lo, other.lo) {
            (None, None) => None,
            (Some(a), None) => Some(a + other.top),
            (None, Some(b)) => Some(b + self.top),
            (Some(a), Some(b)) => Some((a + other.top).max(b + self.top)),
        };
        Window {
            lo,
            top: self.top + other.top,
        }
    }

    fn add(self, other: Window) -> Window {
        let lo = match (self.lo, other.lo) {
            (None, x) => x,
            (x, None) => x,
            (Some(a), Some(b)) => Some(a.max(b)),
        };
        Window {
            lo,
            top: self.top.max(other.top),
        }
    }

    fn contains(self, e: i64) -> bool {
        self.lo.map(|l| e >= l).unwrap_or(true)
    }
}

/// Outcome of comparing two series on the intersection of their windows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesCmp {
    /// Coefficients agree on the (nonempty) common window.
    Equal { window: [Window; 2] },
    /// First differing coefficient.
    Mismatch { key: FKey, diff: LaurentPoly },
    /// The common window is empty; nothing was compared.
    EmptyWindow,
}

impl SeriesCmp {
    pub fn is_equal(&self) -> bool {
        matches!(self, SeriesCmp::Equal { .. })
    }
}

/// Truncated two-variable Laurent series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    coeffs: BTreeMap<FKey, LaurentPoly>,
    window: [Window; 2],
}

impl FormalSeries {
    pub fn zero() -> FormalSeries {
        FormalSeries {
            coeffs: BTreeMap::new(),
            window: [Window::EXACT; 2],
        }
    }

    pub fn one() -> FormalSeries {
        FormalSeries::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> FormalSeries {
        let mut s = FormalSeries::zero();
        s.insert([0, 0], p);
        s
    }

    pub fn from_terms(terms: Vec<(FKey, LaurentPoly)>) -> FormalSeries {
        let mut s = FormalSeries::zero();
        for (k, p) in terms {
            s.insert(k, p);
        }
        for v in 0..2 {
            s.window[v].top = s.support_top(v);
        }
        s
    }

    pub fn window(&self) -> &[Window; 2] {
        &self.window
    }

    pub fn set_window(&mut self, window: [Window; 2]) {
        self.window = window;
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&FKey, &LaurentPoly)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, key: FKey) -> LaurentPoly {
        self.coeffs.get(&key).cloned().unwrap_or_default()
    }

    pub fn num_keys(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_exact(&self) -> bool {
        self.window.iter().all(|w| w.lo.is_none())
    }

    /// Largest exponent of `var` present in the support (0 if none).
    fn support_top(&self, var: usize) -> i64 {
        self.coeffs.keys().map(|k| k[var]).max().unwrap_or(0).max(0)
    }

    fn insert(&mut self, key: FKey, p: LaurentPoly) {
        if p.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.coeffs.entry(key) {
            Entry::Vacant(e) => {
                e.insert(p);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&p);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_term(&mut self, key: FKey, p: LaurentPoly) {
        self.insert(key, p);
        for v in 0..2 {
            self.window[v].top = self.window[v].top.max(key[v]);
        }
    }

    pub fn add(&self, other: &FormalSeries) -> FormalSeries {
        let mut out = self.clone();
        for (k, p) in &other.coeffs {
            out.insert(*k, p.clone());
        }
        out.window = [
            self.window[0].add(other.window[0]),
            self.window[1].add(other.window[1]),
        ];
        out.prune();
        out
    }

    pub fn sub(&self, other: &FormalSeries) -> FormalSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FormalSeries {
        FormalSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, p)| (*k, p.neg()))
                .collect(),
            window: self.window,
        }
    }

    pub fn mul(&self, other: &FormalSeries) -> FormalSeries {
        let window = [
            self.window[0].mul(other.window[0]),
            self.window[1].mul(other.window[1]),
        ];
        let mut out = FormalSeries {
            coeffs: BTreeMap::new(),
            window,
        };
        for (ka, pa) in &self.coeffs {
            for (kb, pb) in &other.coeffs {
                let key = [ka[0] + kb[0], ka[1] + kb[1]];
                if window[0].contains(key[0]) && window[1].contains(key[1]) {
                    out.insert(key, pa.mul(pb));
                }
            }
        }
        out
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> FormalSeries {
        FormalSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter_map(|(k, c)| {
                    let q = c.mul(p);
                    (!q.is_zero()).then_some((*k, q))
                })
                .collect(),
            window: self.window,
        }
    }

    pub fn pow(&self, n: u64) -> FormalSeries {
        let mut out = FormalSeries::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Multiplies by the formal monomial z^{d[0]} w^{d[1]}.
    pub fn shift(&self, d: FKey) -> FormalSeries {
        FormalSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, p)| ([k[0] + d[0], k[1] + d[1]], p.clone()))
                .collect(),
            window: [
                Window {
                    lo: self.window[0].lo.map(|l| l + d[0]),
                    top: self.window[0].top + d[0],
                },
                Window {
                    lo: self.window[1].lo.map(|l| l + d[1]),
                    top: self.window[1].top + d[1],
                },
            ],
        }
    }

    /// Applies an exact coefficient transform that cannot change keys.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> FormalSeries {
        FormalSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter_map(|(k, p)| {
                    let q = f(p);
                    (!q.is_zero()).then_some((*k, q))
                })
                .collect(),
            window: self.window,
        }
    }

    /// Re-keys every coefficient term; only valid on exact series (a
    /// windowed series has no sound per-term key transform).
    pub fn transform_terms(
        &self,
        f: impl Fn(&super::Monomial) -> FKey,
    ) -> super::Result<FormalSeries> {
        if !self.is_exact() {
            return Err(super::err(
                "per-term key transform on a truncated series is unsound",
            ));
        }
        let mut out = FormalSeries::zero();
        for (k, p) in &self.coeffs {
            for (m, c) in p.terms() {
                let d = f(m);
                out.insert(
                    [k[0] + d[0], k[1] + d[1]],
                    LaurentPoly::term(m.clone(), c.clone()),
                );
            }
        }
        for v in 0..2 {
            out.window[v].top = out.support_top(v);
        }
        Ok(out)
    }

    /// Drops coefficients below the window (they are not asserted anyway).
    pub fn prune(&mut self) {
        let w = self.window;
        self.coeffs
            .retain(|k, _| w[0].contains(k[0]) && w[1].contains(k[1]));
    }

    /// Raises the window floors to `lo` and drops everything below.
    pub fn truncate(&self, lo: [Option<i64>; 2]) -> FormalSeries {
        let mut out = self.clone();
        for v in 0..2 {
            out.window[v].lo = match (out.window[v].lo, lo[v]) {
                (None, x) => x,
                (x, None) => x,
                (Some(a), Some(b)) => Some(a.max(b)),
            };
        }
        out.prune();
        out
    }

    /// Sums all coefficients after substituting both formal variables by 1.
    /// Only meaningful (and only allowed) on exact series.
    pub fn eval_at_one(&self) -> super::Result<LaurentPoly> {
        if !self.is_exact() {
            return Err(super::err("eval_at_one on a truncated series"));
        }
        let mut out = LaurentPoly::zero();
        for p in self.coeffs.values() {
            out.add_assign(p);
        }
        Ok(out)
    }

    /// The unique coefficient of an exact single-key series, if so.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.coeffs.len() == 1 {
            self.coeffs.get(&[0, 0])
        } else {
            None
        }
    }

    /// Compares on the intersection of valid windows.
    pub fn compare(&self, other: &FormalSeries) -> SeriesCmp {
        let mut box_lo = [i64::MIN; 2];
        let mut box_hi = [i64::MAX; 2];
        let mut bounded = [false; 2];
        for v in 0..2 {
            let lo = match (self.window[v].lo, other.window[v].lo) {
                (None, None) => None,
                (Some(a), None) => Some(a),
                (None, Some(b)) => Some(b),
                (Some(a), Some(b)) => Some(a.max(b)),
            };
            if let Some(l) = lo {
                box_lo[v] = l;
                bounded[v] = true;
                box_hi[v] = self.window[v].top.max(other.window[v].top);
                if box_lo[v] > box_hi[v] {
                    return SeriesCmp::EmptyWindow;
                }
            }
        }
        let in_box = |k: &FKey| (0..2).all(|v| k[v] >= box_lo[v] && (!bounded[v] || k[v] <= box_hi[v]));
        let mut keys: Vec<FKey> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .filter(|k| in_box(k))
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        for k in keys {
            let diff = self.coefficient(k).sub(&other.coefficient(k));
            if !diff.is_zero() {
                return SeriesCmp::Mismatch { key: k, diff };
            }
        }
        SeriesCmp::Equal {
            window: [
                Window {
                    lo: bounded[0].then_some(box_lo[0]),
                    top: box_hi[0].min(self.window[0].top.max(other.window[0].top)),
                },
                Window {
                    lo: bounded[1].then_some(box_lo[1]),
                    top: box_hi[1].min(self.window[1].top.max(other.window[1].top)),
                },
            ],
        }
    }

    pub fn describe_window(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (v, name) in ["z", "w"].iter().enumerate() {
            if v > 0 {
                s.push_str(", ");
            }
            match self.window[v].lo {
                None => {
                    let _ = write!(s, "{name}: exact");
                }
                Some(l) => {
                    let _ = write!(s, "{name}: [{l}, {}]", self.window[v].top);
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::constant_i64(n)
    }

    #[test]
    fn product_window_is_conservative() {
        // A = 1/(1-z^{-1}) known to z^{-3}; B = exact polynomial z + 2.
        let mut a = FormalSeries::zero();
        for k in 0..=3 {
            a.add_term([-k, 0], c(1));
        }
        a.set_window([Window { lo: Some(-3), top: 0 }, Window::EXACT]);
        let mut b = FormalSeries::zero();
        b.add_term([1, 0], c(1));
        b.add_term([0, 0], c(2));
        let prod = a.mul(&b);
        // lo = lo_a + top_b = -3 + 1 = -2
        assert_eq!(prod.window()[0].lo, Some(-2));
        assert_eq!(prod.window()[0].top, 1);
        assert_eq!(prod.coefficient([1, 0]), c(1));
        assert_eq!(prod.coefficient([0, 0]), c(3));
        assert_eq!(prod.coefficient([-2, 0]), c(3));
        // Below the window nothing is stored.
        assert!(prod.coefficient([-3, 0]).is_zero());
    }

    #[test]
    fn compare_uses_window_intersection() {
        let mut a = FormalSeries::from_poly(c(1));
        a.set_window([Window { lo: Some(-2), top: 0 }, Window::EXACT]);
        let mut b = FormalSeries::from_poly(c(1));
        b.add_term([-3, 0], c(7)); // outside a's window once truncated
        b.set_window([Window { lo: Some(-3), top: 0 }, Window::EXACT]);
        assert!(a.compare(&b).is_equal());
        let mut bad = b.clone();
        bad.add_term([-1, 0], c(5));
        assert!(matches!(
            a.compare(&bad),
            SeriesCmp::Mismatch { key: [-1, 0], .. }
        ));
    }

    #[test]
    fn empty_window_detected() {
        let mut a = FormalSeries::from_poly(c(1));
        a.set_window([Window { lo: Some(5), top: 0 }, Window::EXACT]);
        let b = FormalSeries::from_poly(c(1));
        assert_eq!(a.compare(&b), SeriesCmp::EmptyWindow);
    }
}
