//! Variable registry.
//!
//! A [`VarTable`] is an ordered registry of variable names: equivariant
//! parameters (ℏ as `hbar`, one symbol per base edge) followed by slot
//! variables `s(tag, vertex, slot)` for up to four tensor-factor tags.
//! The registration order fixes the monomial order used for canonical forms.
//!
//! The formal series variables `z` and `w` are reserved names and are never
//! registered: they live only in [`super::FormalSeries`] exponents, so no
//! Laurent coefficient can ever contain them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// Index of a variable in its [`VarTable`].
pub type VarId = u32;

/// Tensor-factor tag carried by slot variables.
///
/// Binary operations (Hall kernels, Θ-classes) use `A`/`B`; three- and
/// four-factor computations (coassociativity, the bialgebra square) also use
/// `C`/`D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    A,
    B,
    C,
    D,
}

impl Tag {
    pub const ALL: [Tag; 4] = [Tag::A, Tag::B, Tag::C, Tag::D];

    pub fn index(self) -> usize {
        match self {
            Tag::A => 0,
            Tag::B => 1,
            Tag::C => 2,
            Tag::D => 3,
        }
    }

    pub fn from_index(i: usize) -> Tag {
        Tag::ALL[i]
    }

    pub fn letter(self) -> char {
        match self {
            Tag::A => 'a',
            Tag::B => 'b',
            Tag::C => 'c',
            Tag::D => 'd',
        }
    }
}

/// Coordinates of a slot variable, recoverable from its name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlotVar {
    pub tag: Tag,
    /// Vertex index in the quiver's vertex order.
    pub vertex: usize,
    /// 1-based slot within the vertex block.
    pub slot: usize,
}

/// What a registered variable is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarKind {
    /// Equivariant parameter (ℏ or an edge weight symbol).
    Param,
    /// Slot variable of a tensor factor.
    Slot(SlotVar),
}

/// Structural error: malformed input, unknown variable, slot overflow, failed
/// cancellation certificate and the like.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralError {
    msg: String,
}

impl StructuralError {
    pub fn new(msg: String) -> Self {
        StructuralError { msg }
    }

    pub fn message(&self) -> &str {
        &self.msg
    }
}

impl core::fmt::Display for StructuralError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.msg)
    }
}

const RESERVED: [&str; 2] = ["z", "w"];

/// Ordered registry of variables.
///
/// Layout: parameters first (in registration order), then slot variables,
/// dense over (tag, vertex, slot) so lookups are O(1).
#[derive(Clone, Debug)]
pub struct VarTable {
    names: Vec<String>,
    kinds: Vec<VarKind>,
    by_name: BTreeMap<String, VarId>,
    vertex_names: Vec<String>,
    /// First slot-variable id; slot vars are dense after it.
    slot_base: u32,
    max_slots: usize,
}

impl VarTable {
    /// Builds a table with the given parameters followed by slot variables
    /// for all four tags, every vertex, and slots `1..=max_slots`.
    pub fn new(
        params: &[&str],
        vertex_names: &[&str],
        max_slots: usize,
    ) -> super::Result<VarTable> {
        let mut t = VarTable {
            names: Vec::new(),
            kinds: Vec::new(),
            by_name: BTreeMap::new(),
            vertex_names: vertex_names.iter().map(|s| s.to_string()).collect(),
            slot_base: 0,
            max_slots,
        };
        for p in params {
            t.register(p.to_string(), VarKind::Param)?;
        }
        t.slot_base = t.names.len() as u32;
        for tag in Tag::ALL {
            for (v, vname) in t.vertex_names.clone().iter().enumerate() {
                for slot in 1..=max_slots {
                    let name = format!("s_{}_{}_{}", tag.letter(), vname, slot);
                    t.register(
                        name,
                        VarKind::Slot(SlotVar {
                            tag,
                            vertex: v,
                            slot,
                        }),
                    )?;
                }
            }
        }
        Ok(t)
    }

    fn register(&mut self, name: String, kind: VarKind) -> super::Result<VarId> {
        if RESERVED.contains(&name.as_str()) {
            return Err(super::err(format!("variable name `{name}` is reserved")));
        }
        if self.by_name.contains_key(&name) {
            return Err(super::err(format!("duplicate variable name `{name}`")));
        }
        let id = self.names.len() as VarId;
        self.by_name.insert(name.clone(), id);
        self.names.push(name);
        self.kinds.push(kind);
        Ok(id)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: VarId) -> &str {
        &self.names[id as usize]
    }

    pub fn kind(&self, id: VarId) -> &VarKind {
        &self.kinds[id as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.by_name.get(name).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn max_slots(&self) -> usize {
        self.max_slots
    }

    /// Id of the slot variable `s(tag, vertex, slot)`; `slot` is 1-based.
    pub fn slot(&self, tag: Tag, vertex: usize, slot: usize) -> super::Result<VarId> {
        if vertex >= self.vertex_names.len() || slot == 0 || slot > self.max_slots {
            return Err(super::err(format!(
                "slot variable out of range: tag {:?}, vertex {vertex}, slot {slot}",
                tag
            )));
        }
        Ok(self.slot_base
            + ((tag.index() * self.vertex_names.len() + vertex) * self.max_slots + slot - 1)
                as u32)
    }

    /// Slot coordinates of `id`, if it is a slot variable.
    pub fn slot_info(&self, id: VarId) -> Option<SlotVar> {
        match self.kinds.get(id as usize)? {
            VarKind::Slot(s) => Some(*s),
            VarKind::Param => None,
        }
    }

    pub fn is_param(&self, id: VarId) -> bool {
        matches!(self.kinds.get(id as usize), Some(VarKind::Param))
    }

    /// All slot ids of a `(tag, vertex)` block, slots `1..=count`.
    pub fn block(&self, tag: Tag, vertex: usize, count: usize) -> super::Result<Vec<VarId>> {
        (1..=count).map(|k| self.slot(tag, vertex, k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_and_lookup() {
        let t = VarTable::new(&["hbar", "a"], &["1", "2"], 3).unwrap();
        assert_eq!(t.lookup("hbar"), Some(0));
        assert_eq!(t.lookup("a"), Some(1));
        let id = t.slot(Tag::B, 1, 2).unwrap();
        assert_eq!(t.name(id), "s_b_2_2");
        assert_eq!(
            t.slot_info(id),
            Some(SlotVar {
                tag: Tag::B,
                vertex: 1,
                slot: 2
            })
        );
        assert_eq!(t.lookup("s_b_2_2"), Some(id));
    }

    #[test]
    fn reserved_names_rejected() {
        assert!(VarTable::new(&["z"], &["1"], 1).is_err());
        assert!(VarTable::new(&["a", "a"], &["1"], 1).is_err());
    }
}
