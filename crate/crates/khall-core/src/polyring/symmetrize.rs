//! Symmetrization over products of symmetric groups permuting slot
//! variables within (tag, vertex) blocks, plus shuffle (coset) enumeration.

use alloc::vec::Vec;

use super::poly::LaurentPoly;
use super::vars::{Tag, VarId, VarTable};

/// A permutation of variables, as a total map on the table's ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<VarId>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            map: (0..n as u32).collect(),
        }
    }

    pub fn image(&self, v: VarId) -> VarId {
        self.map[v as usize]
    }

    pub fn set(&mut self, from: VarId, to: VarId) {
        self.map[from as usize] = to;
    }

    pub fn apply(&self, p: &LaurentPoly) -> LaurentPoly {
        p.relabel(&|v| self.image(v))
    }
}

/// How [`symmetrize`] sums: over the whole group, or over supplied coset
/// representatives.
#[derive(Clone, Debug)]
pub enum SymmetrizeMode {
    OrbitSum,
    CosetSum(Vec<Permutation>),
}

/// The acting group: a product of symmetric groups, one per listed
/// (tag, vertex, slot-count) block.
#[derive(Clone, Debug)]
pub struct SymGroupAction {
    blocks: Vec<Vec<VarId>>,
    table_len: usize,
}

impl SymGroupAction {
    pub fn new(table: &VarTable, blocks: &[(Tag, usize, usize)]) -> super::Result<SymGroupAction> {
        let mut seen: Vec<VarId> = Vec::new();
        let mut out = Vec::new();
        for &(tag, vertex, count) in blocks {
            let ids = table.block(tag, vertex, count)?;
            for id in &ids {
                if seen.contains(id) {
                    return Err(super::err("overlapping blocks in group action"));
                }
                seen.push(*id);
            }
            out.push(ids);
        }
        Ok(SymGroupAction {
            blocks: out,
            table_len: table.len(),
        })
    }

    pub fn order(&self) -> u64 {
        self.blocks
            .iter()
            .map(|b| factorial(b.len() as u64))
            .product()
    }

    /// All group elements as variable permutations.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut elems = alloc::vec![Permutation::identity(self.table_len)];
        for block in &self.blocks {
            let perms = index_permutations(block.len());
            let mut next = Vec::with_capacity(elems.len() * perms.len());
            for e in &elems {
                for p in &perms {
                    let mut e2 = e.clone();
                    for (i, &pi) in p.iter().enumerate() {
                        e2.set(block[i], block[pi]);
                    }
                    next.push(e2);
                }
            }
            elems = next;
        }
        elems
    }

    /// Minimal coset representatives of S(γ)/S(α)×S(β) as slot shuffles:
    /// per block, all order-preserving interleavings of the first
    /// `first[i]` slots into the block.
    pub fn shuffle_reps(&self, first: &[usize]) -> Vec<Permutation> {
        assert_eq!(first.len(), self.blocks.len());
        let mut reps = alloc::vec![Permutation::identity(self.table_len)];
        for (block, &a) in self.blocks.iter().zip(first) {
            let n = block.len();
            let choices = subsets(n, a);
            let mut next = Vec::with_capacity(reps.len() * choices.len());
            for r in &reps {
                for s in &choices {
                    let mut r2 = r.clone();
                    let mut rest = (0..n).filter(|i| !s.contains(i));
                    for (k, &target) in s.iter().enumerate() {
                        r2.set(block[k], block[target]);
                    }
                    for l in a..n {
                        let target = rest.next().expect("complement size");
                        r2.set(block[l], block[target]);
                    }
                    next.push(r2);
                }
            }
            reps = next;
        }
        reps
    }
}

/// Σ_w w·p over the group, or over supplied coset representatives.
pub fn symmetrize(p: &LaurentPoly, g: &SymGroupAction, mode: &SymmetrizeMode) -> LaurentPoly {
    let perms: Vec<Permutation> = match mode {
        SymmetrizeMode::OrbitSum => g.elements(),
        SymmetrizeMode::CosetSum(reps) => reps.clone(),
    };
    let mut out = LaurentPoly::zero();
    for w in &perms {
        out.add_assign(&w.apply(p));
    }
    out
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

fn index_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    let smaller = index_permutations(n - 1);
    for p in smaller {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// All increasing k-subsets of {0..n}.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn setup() -> (VarTable, SymGroupAction) {
        let t = VarTable::new(&[], &["1"], 3).unwrap();
        let g = SymGroupAction::new(&t, &[(Tag::A, 0, 3)]).unwrap();
        (t, g)
    }

    #[test]
    fn orbit_of_single_variable() {
        let t = VarTable::new(&[], &["1"], 2).unwrap();
        let g = SymGroupAction::new(&t, &[(Tag::A, 0, 2)]).unwrap();
        let s1 = LaurentPoly::var(t.slot(Tag::A, 0, 1).unwrap());
        let s2 = LaurentPoly::var(t.slot(Tag::A, 0, 2).unwrap());
        assert_eq!(
            symmetrize(&s1, &g, &SymmetrizeMode::OrbitSum),
            s1.add(&s2)
        );
    }

    #[test]
    fn stabilizing_group_multiplies_by_order() {
        let t = VarTable::new(&[], &["1"], 2).unwrap();
        let g = SymGroupAction::new(&t, &[(Tag::A, 0, 2)]).unwrap();
        let s1 = LaurentPoly::var(t.slot(Tag::A, 0, 1).unwrap());
        let s2 = LaurentPoly::var(t.slot(Tag::A, 0, 2).unwrap());
        let sym = s1.add(&s2);
        assert_eq!(
            symmetrize(&sym, &g, &SymmetrizeMode::OrbitSum),
            sym.mul_scalar(&BigInt::from(2))
        );
    }

    #[test]
    fn s3_brute_force_oracle() {
        // p = s1 * s2^2 summed over all 6 permutations of 3 slots.
        let (t, g) = setup();
        let ids: Vec<_> = (1..=3).map(|k| t.slot(Tag::A, 0, k).unwrap()).collect();
        let p = LaurentPoly::var(ids[0]).mul(&LaurentPoly::var(ids[1]).pow(2));
        let got = symmetrize(&p, &g, &SymmetrizeMode::OrbitSum);
        // Independent brute force: enumerate images of (0,1) over ordered pairs.
        let mut expect = LaurentPoly::zero();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    expect.add_assign(
                        &LaurentPoly::var(ids[i]).mul(&LaurentPoly::var(ids[j]).pow(2)),
                    );
                }
            }
        }
        assert_eq!(got, expect);
        assert_eq!(g.order(), 6);
        assert_eq!(g.elements().len(), 6);
    }

    #[test]
    fn shuffles_enumerate_cosets_once() {
        let (t, g) = setup();
        let reps = g.shuffle_reps(&[1]);
        assert_eq!(reps.len(), 3); // C(3,1)
        // Applying the reps to s_1 hits each slot exactly once.
        let s1 = LaurentPoly::var(t.slot(Tag::A, 0, 1).unwrap());
        let mut sum = LaurentPoly::zero();
        for r in &reps {
            sum.add_assign(&r.apply(&s1));
        }
        let expect: LaurentPoly = (1..=3)
            .map(|k| LaurentPoly::var(t.slot(Tag::A, 0, k).unwrap()))
            .fold(LaurentPoly::zero(), |a, b| a.add(&b));
        assert_eq!(sum, expect);
    }
}
