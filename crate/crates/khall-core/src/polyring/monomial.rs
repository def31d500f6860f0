//! Sparse Laurent monomials with the graded-lexicographic order.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::vars::{Tag, VarId, VarTable};

/// A Laurent monomial: sparse map from variable id to nonzero integer
/// exponent, kept sorted by variable id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, i64)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(id: VarId) -> Self {
        Monomial {
            exps: alloc::vec![(id, 1)],
        }
    }

    pub fn var_pow(id: VarId, e: i64) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial {
                exps: alloc::vec![(id, e)],
            }
        }
    }

    pub fn from_exps(mut exps: Vec<(VarId, i64)>) -> Self {
        exps.retain(|&(_, e)| e != 0);
        exps.sort_unstable_by_key(|&(v, _)| v);
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self) -> &[(VarId, i64)] {
        &self.exps
    }

    pub fn exponent(&self, id: VarId) -> i64 {
        self.exps
            .binary_search_by_key(&id, |&(v, _)| v)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    /// Merge-multiply two sorted exponent lists.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { exps: out }
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * n)).collect(),
        }
    }

    /// Renames variables through `map`; the result is re-sorted.
    pub fn relabel(&self, map: &impl Fn(VarId) -> VarId) -> Monomial {
        Monomial::from_exps(self.exps.iter().map(|&(v, e)| (map(v), e)).collect())
    }

    /// Substitutes `var ↦ replacement` (a monomial), raising the replacement
    /// to the variable's exponent.
    pub fn substitute(&self, var: VarId, replacement: &Monomial) -> Monomial {
        let e = self.exponent(var);
        if e == 0 {
            return self.clone();
        }
        let rest = Monomial {
            exps: self
                .exps
                .iter()
                .filter(|&&(v, _)| v != var)
                .copied()
                .collect(),
        };
        rest.mul(&replacement.pow(e))
    }

    /// Sum of exponents of slot variables whose tag lies in `tags`.
    pub fn tag_degree(&self, table: &VarTable, tags: &[Tag]) -> i64 {
        self.exps
            .iter()
            .filter_map(|&(v, e)| {
                table
                    .slot_info(v)
                    .filter(|s| tags.contains(&s.tag))
                    .map(|_| e)
            })
            .sum()
    }

    /// Graded-lexicographic comparison: total degree first, then the first
    /// differing exponent (in variable order) decides, larger exponent wins.
    pub fn cmp_grlex(&self, other: &Monomial) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (va, ea) = a.get(i).copied().unwrap_or((u32::MAX, 0));
            let (vb, eb) = b.get(j).copied().unwrap_or((u32::MAX, 0));
            match va.cmp(&vb) {
                Ordering::Less => {
                    // other has exponent 0 here
                    match ea.cmp(&0) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                    i += 1;
                }
                Ordering::Greater => {
                    match 0.cmp(&eb) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    match ea.cmp(&eb) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grlex(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[(u32, i64)]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn mul_inv_cancel() {
        let a = m(&[(0, 2), (3, -1)]);
        let b = m(&[(0, -2), (3, 1)]);
        assert!(a.mul(&b).is_one());
        assert_eq!(a.inv(), b);
    }

    #[test]
    fn grlex_is_multiplicative() {
        let a = m(&[(0, 1)]);
        let b = m(&[(1, 1)]);
        let c = m(&[(2, -3), (1, 2)]);
        assert_eq!(a.cmp_grlex(&b), Ordering::Greater); // same degree, var 0 wins
        assert_eq!(a.mul(&c).cmp_grlex(&b.mul(&c)), Ordering::Greater);
    }

    #[test]
    fn substitution_handles_negative_exponents() {
        // s^{-2} with s -> h*t gives h^{-2} t^{-2}
        let s = m(&[(5, -2)]);
        let rep = m(&[(0, 1), (1, 1)]);
        assert_eq!(s.substitute(5, &rep), m(&[(0, -2), (1, -2)]));
    }
}
