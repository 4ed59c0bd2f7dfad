//! Finite length-truncations of homogeneous presented monoids.
//!
//! Because every defining relation preserves word length, the words of a
//! fixed length are closed under rewriting, so the quotient monoid can be
//! materialized one length level at a time. Level `n` is interned from
//! candidate pairs `(atom, element at level n-1)`: a single rewrite applied
//! to a word either happens strictly inside its tail (and then the pair is
//! unchanged, because the tails are already identified at the previous
//! level), or it happens at position zero, and those moves are exactly the
//! ones enumerated from the relation sides against every suffix class. The
//! union-find closure of these moves is therefore the exact congruence.
//!
//! Candidate indices `(atom, tail)` are ordered lexicographically, element
//! ids are assigned in candidate order, and union-find roots are kept at the
//! least index of their class; together these guarantee that the id order of
//! every level equals the lexicographic order of canonical words, and that
//! the canonical word of a class (its least word under the declared
//! generator order) is `atom · canonical(tail)` of its least candidate.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::presentation::{Presentation, Word};

/// Default ceiling on the number of element classes per length level.
pub const DEFAULT_LEVEL_LIMIT: usize = 1_000_000;

/// An interned monoid element: its length and its id within that length
/// level. Ids are ordered lexicographically by canonical word, so the derived
/// `Ord` is length-then-lexicographic. Handles are only meaningful for the
/// table that produced them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    len: u32,
    id: u32,
}

impl Element {
    pub(crate) fn new(len: usize, id: usize) -> Self {
        Element {
            len: len as u32,
            id: id as u32,
        }
    }

    pub fn length(&self) -> usize {
        self.len as usize
    }

    pub fn id(&self) -> usize {
        self.id as usize
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }
}

/// A word length exceeded the table bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundExceeded {
    pub needed: usize,
    pub bound: usize,
}

impl fmt::Display for BoundExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "length {} exceeds the table bound {}",
            self.needed, self.bound
        )
    }
}

impl core::error::Error for BoundExceeded {}

/// Errors from table construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    /// The bound must be at least 1.
    InvalidBound { bound: usize },
    /// A length level produced more element classes than the configured
    /// ceiling allows.
    LevelLimit {
        level: usize,
        classes: usize,
        limit: usize,
    },
    /// The candidate space of a level does not fit in 32-bit ids.
    LevelTooWide { level: usize },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::InvalidBound { bound } => {
                write!(f, "table bound must be at least 1, got {bound}")
            }
            BuildError::LevelLimit {
                level,
                classes,
                limit,
            } => write!(
                f,
                "length level {level} holds {classes} element classes, above the limit {limit}"
            ),
            BuildError::LevelTooWide { level } => {
                write!(f, "length level {level} exceeds 32-bit id capacity")
            }
        }
    }
}

impl core::error::Error for BuildError {}

/// Preimage count of one element under multiplication by one atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Quot {
    None,
    /// The unique complementary element.
    One(Element),
    /// Several complements exist: the monoid is not cancellative.
    Many,
}

/// For a fixed level, preimages of its elements under (left or right)
/// multiplication by each atom. Slot `atom * count + id` holds `0` for no
/// preimage, `y + 1` for the unique preimage `y`, or `u32::MAX` for several.
struct InverseTable {
    entries: Vec<u32>,
}

struct Level {
    count: usize,
    /// Atom id of the first letter of each canonical word (empty at level 0).
    first: Vec<u16>,
    /// Id, one level down, of the canonical word minus its first letter.
    tail: Vec<u32>,
    /// `left_mult[a * prev_count + e]`: id at this level of `atom_a * e`.
    left_mult: Vec<u32>,
    /// Lazily built: `right_mult[e * atoms + a]`: id at the NEXT level of
    /// `e * atom_a`.
    right_mult: OnceBox<Vec<u32>>,
    inv_left: OnceBox<InverseTable>,
    inv_right: OnceBox<InverseTable>,
}

impl Level {
    fn new(count: usize, first: Vec<u16>, tail: Vec<u32>, left_mult: Vec<u32>) -> Self {
        Level {
            count,
            first,
            tail,
            left_mult,
            right_mult: OnceBox::new(),
            inv_left: OnceBox::new(),
            inv_right: OnceBox::new(),
        }
    }
}

/// Minimum-index-rooted union-find with path halving. Keeping the least
/// member as root is what makes id assignment lexicographic.
struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        loop {
            let p = self.parent[x as usize];
            if p == x {
                return x;
            }
            let gp = self.parent[p as usize];
            self.parent[x as usize] = gp;
            x = gp;
        }
    }

    fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        if ra < rb {
            self.parent[rb as usize] = ra;
        } else {
            self.parent[ra as usize] = rb;
        }
    }
}

/// A monoid truncated at a length bound, with exact equality: two words of
/// length at most the bound intern to the same element precisely when the
/// relations prove them equal.
///
/// The table is immutable after construction; every query takes `&self` and
/// the lazily materialized inverse tables are published through atomic
/// once-cells, so concurrent reads are safe.
pub struct MonoidTable {
    pres: Presentation,
    bound: usize,
    /// Generator index -> atom id (level-1 class). Distinct generators can
    /// share an atom if a length-1 relation identifies them.
    gen_atom: Vec<u32>,
    /// Atom id -> least generator index mapping to it.
    atom_gen: Vec<u16>,
    /// Relation chains with letters translated to atom ids; length-1 chains
    /// are dropped (they are absorbed into the generator-to-atom map).
    rel_atoms: Vec<Vec<Vec<u16>>>,
    levels: Vec<Level>,
}

impl MonoidTable {
    /// Build the truncation at `bound` with the default per-level class
    /// ceiling of [`DEFAULT_LEVEL_LIMIT`].
    pub fn build(pres: &Presentation, bound: usize) -> Result<Self, BuildError> {
        Self::build_with_limit(pres, bound, DEFAULT_LEVEL_LIMIT)
    }

    /// Build the truncation at `bound`, refusing any length level that would
    /// intern more than `level_limit` element classes.
    pub fn build_with_limit(
        pres: &Presentation,
        bound: usize,
        level_limit: usize,
    ) -> Result<Self, BuildError> {
        if bound < 1 {
            return Err(BuildError::InvalidBound { bound });
        }
        let gens = pres.generator_count();

        // Level 1: classes of generators under length-1 chains.
        let mut uf = UnionFind::new(gens);
        for chain in pres.relations() {
            if chain[0].len() == 1 {
                let base = chain[0].letters()[0] as u32;
                for side in &chain[1..] {
                    uf.union(base, side.letters()[0] as u32);
                }
            }
        }
        let mut gen_atom = vec![0u32; gens];
        let mut atom_gen: Vec<u16> = Vec::new();
        let mut next = 0u32;
        for g in 0..gens {
            let root = uf.find(g as u32);
            if root == g as u32 {
                gen_atom[g] = next;
                atom_gen.push(g as u16);
                next += 1;
            } else {
                gen_atom[g] = gen_atom[root as usize];
            }
        }
        let atoms = next as usize;
        if atoms > level_limit {
            return Err(BuildError::LevelLimit {
                level: 1,
                classes: atoms,
                limit: level_limit,
            });
        }

        let rel_atoms: Vec<Vec<Vec<u16>>> = pres
            .relations()
            .iter()
            .filter(|chain| chain[0].len() >= 2)
            .map(|chain| {
                chain
                    .iter()
                    .map(|side| {
                        side.letters()
                            .iter()
                            .map(|&g| gen_atom[g as usize] as u16)
                            .collect()
                    })
                    .collect()
            })
            .collect();

        let level0 = Level::new(1, Vec::new(), Vec::new(), Vec::new());
        let level1 = Level::new(
            atoms,
            (0..atoms as u16).collect(),
            vec![0u32; atoms],
            (0..atoms as u32).collect(),
        );
        let mut table = MonoidTable {
            pres: pres.clone(),
            bound,
            gen_atom,
            atom_gen,
            rel_atoms,
            levels: vec![level0, level1],
        };
        for n in 2..=bound {
            table.build_level(n, level_limit)?;
        }
        Ok(table)
    }

    fn build_level(&mut self, n: usize, level_limit: usize) -> Result<(), BuildError> {
        let atoms = self.atom_count();
        let prev = self.levels[n - 1].count;
        let candidates = atoms
            .checked_mul(prev)
            .filter(|&c| c <= u32::MAX as usize)
            .ok_or(BuildError::LevelTooWide { level: n })?;

        let mut uf = UnionFind::new(candidates);
        for chain in &self.rel_atoms {
            let k = chain[0].len();
            if k > n {
                continue;
            }
            let suffix_level = n - k;
            for suffix in 0..self.levels[suffix_level].count as u32 {
                let base = self.fold_candidate(&chain[0], suffix, suffix_level, prev);
                for side in &chain[1..] {
                    let c = self.fold_candidate(side, suffix, suffix_level, prev);
                    uf.union(base, c);
                }
            }
        }

        // Assign ids in candidate order. Roots are class minima and precede
        // their members, so a non-root can copy the id stored at its root.
        let mut left_mult = vec![0u32; candidates];
        let mut first: Vec<u16> = Vec::new();
        let mut tail: Vec<u32> = Vec::new();
        let mut next = 0u32;
        for i in 0..candidates as u32 {
            let root = uf.find(i);
            let id = if root == i {
                let id = next;
                next += 1;
                first.push((i as usize / prev) as u16);
                tail.push((i as usize % prev) as u32);
                id
            } else {
                left_mult[root as usize]
            };
            left_mult[i as usize] = id;
        }
        let count = next as usize;
        if count > level_limit {
            return Err(BuildError::LevelLimit {
                level: n,
                classes: count,
                limit: level_limit,
            });
        }
        self.levels.push(Level::new(count, first, tail, left_mult));
        Ok(())
    }

    /// Candidate index at the level under construction for `side * suffix`,
    /// folding all letters but the first through the existing tables.
    #[inline]
    fn fold_candidate(&self, side: &[u16], suffix: u32, suffix_level: usize, prev: usize) -> u32 {
        let mut e = suffix;
        let mut lvl = suffix_level;
        for &a in side[1..].iter().rev() {
            let below = self.levels[lvl].count;
            e = self.levels[lvl + 1].left_mult[a as usize * below + e as usize];
            lvl += 1;
        }
        (side[0] as usize * prev + e as usize) as u32
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Number of atoms (length-1 elements).
    pub fn atom_count(&self) -> usize {
        self.levels[1].count
    }

    /// Number of elements of the given length (0 above the bound).
    pub fn level_count(&self, len: usize) -> usize {
        if len <= self.bound {
            self.levels[len].count
        } else {
            0
        }
    }

    /// Element counts for lengths `0..=bound`.
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.count).collect()
    }

    pub fn identity(&self) -> Element {
        Element::new(0, 0)
    }

    pub fn atom(&self, atom_id: usize) -> Element {
        debug_assert!(atom_id < self.atom_count());
        Element::new(1, atom_id)
    }

    pub fn atoms(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.atom_count()).map(|i| Element::new(1, i))
    }

    pub fn elements_of_length(&self, len: usize) -> impl Iterator<Item = Element> + '_ {
        (0..self.level_count(len)).map(move |i| Element::new(len, i))
    }

    /// All elements of length at most `max_len`, in length-then-lex order.
    pub fn elements_up_to(&self, max_len: usize) -> impl Iterator<Item = Element> + '_ {
        (0..=max_len.min(self.bound)).flat_map(move |len| self.elements_of_length(len))
    }

    /// Atom id of the class of a generator.
    pub fn atom_of_generator(&self, generator: u16) -> usize {
        self.gen_atom[generator as usize] as usize
    }

    /// Least generator index whose class is this atom.
    pub fn generator_of_atom(&self, atom_id: usize) -> u16 {
        self.atom_gen[atom_id]
    }

    /// First letter (as an atom id) and remainder of the canonical word.
    pub fn head_tail(&self, e: Element) -> Option<(usize, Element)> {
        if e.is_identity() {
            return None;
        }
        let level = &self.levels[e.length()];
        Some((
            level.first[e.id()] as usize,
            Element::new(e.length() - 1, level.tail[e.id()] as usize),
        ))
    }

    /// Canonical word of an element, as atom ids.
    pub fn word_atoms(&self, e: Element) -> Vec<u16> {
        let mut out = Vec::with_capacity(e.length());
        let mut cur = e;
        while let Some((a, rest)) = self.head_tail(cur) {
            out.push(a as u16);
            cur = rest;
        }
        out
    }

    /// Canonical word of an element, as generator indices.
    pub fn word_of(&self, e: Element) -> Word {
        Word(
            self.word_atoms(e)
                .into_iter()
                .map(|a| self.atom_gen[a as usize])
                .collect(),
        )
    }

    /// Canonical word rendered as whitespace-separated generator names.
    pub fn render(&self, e: Element) -> String {
        self.pres.render_word(&self.word_of(e))
    }

    /// Left-multiply an element by an atom (result one level up).
    pub fn left_mult_atom(&self, atom_id: usize, e: Element) -> Result<Element, BoundExceeded> {
        let len = e.length() + 1;
        if len > self.bound {
            return Err(BoundExceeded {
                needed: len,
                bound: self.bound,
            });
        }
        let below = self.levels[e.length()].count;
        let id = self.levels[len].left_mult[atom_id * below + e.id()];
        Ok(Element::new(len, id as usize))
    }

    /// Right-multiply an element by an atom (result one level up).
    pub fn right_mult_atom(&self, e: Element, atom_id: usize) -> Result<Element, BoundExceeded> {
        let len = e.length() + 1;
        if len > self.bound {
            return Err(BoundExceeded {
                needed: len,
                bound: self.bound,
            });
        }
        let rm = self.right_mult_table(e.length());
        Ok(Element::new(
            len,
            rm[e.id() * self.atom_count() + atom_id] as usize,
        ))
    }

    /// Intern a word.
    pub fn element_of(&self, word: &Word) -> Result<Element, BoundExceeded> {
        if word.len() > self.bound {
            return Err(BoundExceeded {
                needed: word.len(),
                bound: self.bound,
            });
        }
        let mut e = self.identity();
        for &g in word.letters().iter().rev() {
            e = self.left_mult_atom(self.gen_atom[g as usize] as usize, e)?;
        }
        Ok(e)
    }

    /// Product of two elements.
    pub fn mul(&self, x: Element, y: Element) -> Result<Element, BoundExceeded> {
        let len = x.length() + y.length();
        if len > self.bound {
            return Err(BoundExceeded {
                needed: len,
                bound: self.bound,
            });
        }
        let mut e = y;
        for &a in self.word_atoms(x).iter().rev() {
            e = self.left_mult_atom(a as usize, e)?;
        }
        Ok(e)
    }

    /// `x` raised to the `k`-th power.
    pub fn pow(&self, x: Element, k: usize) -> Result<Element, BoundExceeded> {
        let len = x.length().checked_mul(k).unwrap_or(usize::MAX);
        if len > self.bound {
            return Err(BoundExceeded {
                needed: len,
                bound: self.bound,
            });
        }
        let mut e = self.identity();
        for _ in 0..k {
            e = self.mul(x, e)?;
        }
        Ok(e)
    }

    /// Product of a slice of elements.
    pub fn product(&self, xs: &[Element]) -> Result<Element, BoundExceeded> {
        let mut e = self.identity();
        for &x in xs.iter().rev() {
            e = self.mul(x, e)?;
        }
        Ok(e)
    }

    fn right_mult_table(&self, level: usize) -> &[u32] {
        debug_assert!(level < self.bound);
        for l in 0..=level {
            if self.levels[l].right_mult.get().is_none() {
                let built = self.build_right_mult(l);
                let _ = self.levels[l].right_mult.set(Box::new(built));
            }
        }
        self.levels[level].right_mult.get().unwrap()
    }

    fn build_right_mult(&self, level: usize) -> Vec<u32> {
        let atoms = self.atom_count();
        if level == 0 {
            return (0..atoms as u32).collect();
        }
        let lvl = &self.levels[level];
        let below = self.levels[level - 1].count;
        let prev_rm = self.levels[level - 1].right_mult.get().unwrap();
        let next_lm = &self.levels[level + 1].left_mult;
        let mut rm = vec![0u32; lvl.count * atoms];
        for e in 0..lvl.count {
            let f = lvl.first[e] as usize;
            let t = lvl.tail[e] as usize;
            for a in 0..atoms {
                let ta = prev_rm[t * atoms + a] as usize;
                rm[e * atoms + a] = next_lm[f * lvl.count + ta];
            }
        }
        rm
    }

    fn inv_left_table(&self, level: usize) -> &InverseTable {
        debug_assert!(level >= 1);
        self.levels[level].inv_left.get_or_init(|| {
            let atoms = self.atom_count();
            let prev = self.levels[level - 1].count;
            let count = self.levels[level].count;
            let lm = &self.levels[level].left_mult;
            let mut entries = vec![0u32; atoms * count];
            for a in 0..atoms {
                for y in 0..prev {
                    let x = lm[a * prev + y] as usize;
                    let slot = &mut entries[a * count + x];
                    *slot = if *slot == 0 { y as u32 + 1 } else { u32::MAX };
                }
            }
            Box::new(InverseTable { entries })
        })
    }

    fn inv_right_table(&self, level: usize) -> &InverseTable {
        debug_assert!(level >= 1);
        // Ensure the right-multiplication table into this level exists.
        self.right_mult_table(level - 1);
        self.levels[level].inv_right.get_or_init(|| {
            let atoms = self.atom_count();
            let prev = self.levels[level - 1].count;
            let count = self.levels[level].count;
            let rm = self.levels[level - 1].right_mult.get().unwrap();
            let mut entries = vec![0u32; atoms * count];
            for y in 0..prev {
                for a in 0..atoms {
                    let x = rm[y * atoms + a] as usize;
                    let slot = &mut entries[a * count + x];
                    *slot = if *slot == 0 { y as u32 + 1 } else { u32::MAX };
                }
            }
            Box::new(InverseTable { entries })
        })
    }

    /// Quotient on the left by one atom: the `y` with `atom * y = x`.
    pub(crate) fn left_quot_atom(&self, atom_id: usize, x: Element) -> Quot {
        if x.is_identity() {
            return Quot::None;
        }
        let inv = self.inv_left_table(x.length());
        let count = self.levels[x.length()].count;
        match inv.entries[atom_id * count + x.id()] {
            0 => Quot::None,
            u32::MAX => Quot::Many,
            y => Quot::One(Element::new(x.length() - 1, (y - 1) as usize)),
        }
    }

    /// Quotient on the right by one atom: the `y` with `y * atom = x`.
    pub(crate) fn right_quot_atom(&self, x: Element, atom_id: usize) -> Quot {
        if x.is_identity() {
            return Quot::None;
        }
        let inv = self.inv_right_table(x.length());
        let count = self.levels[x.length()].count;
        match inv.entries[atom_id * count + x.id()] {
            0 => Quot::None,
            u32::MAX => Quot::Many,
            y => Quot::One(Element::new(x.length() - 1, (y - 1) as usize)),
        }
    }

    /// All `y` at the level below `x` with `atom * y = x`. The scan path only
    /// runs when the unique-preimage fast path reports a collision.
    pub(crate) fn left_preimages(&self, atom_id: usize, x: Element) -> Vec<Element> {
        match self.left_quot_atom(atom_id, x) {
            Quot::None => Vec::new(),
            Quot::One(y) => vec![y],
            Quot::Many => {
                let prev = self.levels[x.length() - 1].count;
                let lm = &self.levels[x.length()].left_mult;
                (0..prev)
                    .filter(|&y| lm[atom_id * prev + y] == x.id() as u32)
                    .map(|y| Element::new(x.length() - 1, y))
                    .collect()
            }
        }
    }

    /// All `y` with `y * atom = x`.
    pub(crate) fn right_preimages(&self, x: Element, atom_id: usize) -> Vec<Element> {
        match self.right_quot_atom(x, atom_id) {
            Quot::None => Vec::new(),
            Quot::One(y) => vec![y],
            Quot::Many => {
                let atoms = self.atom_count();
                let prev = self.levels[x.length() - 1].count;
                let rm = self.levels[x.length() - 1].right_mult.get().unwrap();
                (0..prev)
                    .filter(|&y| rm[y * atoms + atom_id] == x.id() as u32)
                    .map(|y| Element::new(x.length() - 1, y))
                    .collect()
            }
        }
    }

    /// Exhaustive cancellativity check at atom granularity: left and right
    /// multiplication by every atom must be injective on every level it maps
    /// into. Injectivity for arbitrary factors follows by composition. A
    /// witness means the presentation is not left- or right-cancellative
    /// within the bound and the lattice queries' answers are not trustworthy.
    pub fn check_cancellativity(&self) -> Result<(), CancellationWitness> {
        for level in 1..=self.bound {
            let atoms = self.atom_count();
            let count = self.levels[level].count;
            let inv = self.inv_left_table(level);
            for a in 0..atoms {
                for x in 0..count {
                    if inv.entries[a * count + x] == u32::MAX {
                        let pair = self.left_preimages(a, Element::new(level, x));
                        return Err(CancellationWitness {
                            side: CancelSide::Left,
                            atom: self.atom(a),
                            first: pair[0],
                            second: pair[1],
                        });
                    }
                }
            }
            let inv = self.inv_right_table(level);
            for a in 0..atoms {
                for x in 0..count {
                    if inv.entries[a * count + x] == u32::MAX {
                        let pair = self.right_preimages(Element::new(level, x), a);
                        return Err(CancellationWitness {
                            side: CancelSide::Right,
                            atom: self.atom(a),
                            first: pair[0],
                            second: pair[1],
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CancelSide {
    Left,
    Right,
}

/// Two distinct elements with equal product against the same atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CancellationWitness {
    pub side: CancelSide,
    pub atom: Element,
    pub first: Element,
    pub second: Element,
}

impl fmt::Display for CancellationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (side, order) = match self.side {
            CancelSide::Left => ("left", "a*x = a*y"),
            CancelSide::Right => ("right", "x*a = y*a"),
        };
        write!(
            f,
            "{side} cancellation fails: {order} for distinct x, y (atom id {}, ids {} and {} at length {})",
            self.atom.id(),
            self.first.id(),
            self.second.id(),
            self.first.length()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;

    fn a2() -> Presentation {
        Presentation::parse("gens: s t\nrel: s t s = t s t\n").unwrap()
    }

    fn godelle() -> Presentation {
        Presentation::parse("gens: a b\nrel: a a = b b\n").unwrap()
    }

    #[test]
    fn a2_level_counts() {
        let t = MonoidTable::build(&a2(), 3).unwrap();
        assert_eq!(t.counts(), vec![1, 2, 4, 7]);
    }

    #[test]
    fn one_letter_levels_are_free() {
        let p = Presentation::parse("gens: x y z\nrel: x y = y x\n").unwrap();
        let t = MonoidTable::build(&p, 1).unwrap();
        assert_eq!(t.counts(), vec![1, 3]);
    }

    #[test]
    fn godelle_level_counts() {
        let t = MonoidTable::build(&godelle(), 2).unwrap();
        assert_eq!(t.counts(), vec![1, 2, 3]);
    }

    #[test]
    fn braid_words_intern_equal() {
        let p = a2();
        let t = MonoidTable::build(&p, 4).unwrap();
        let sts = t.element_of(&p.word_from_str("s t s").unwrap()).unwrap();
        let tst = t.element_of(&p.word_from_str("t s t").unwrap()).unwrap();
        assert_eq!(sts, tst);
        let ss = t.element_of(&p.word_from_str("s s").unwrap()).unwrap();
        let st = t.element_of(&p.word_from_str("s t").unwrap()).unwrap();
        assert_ne!(ss, st);
        assert_eq!(
            t.element_of(&p.word_from_str("").unwrap()).unwrap(),
            t.identity()
        );
    }

    #[test]
    fn canonical_word_is_lex_least() {
        let p = a2();
        let t = MonoidTable::build(&p, 4).unwrap();
        let tst = t.element_of(&p.word_from_str("t s t").unwrap()).unwrap();
        assert_eq!(t.render(tst), "s t s");
        // Id order within a level is lexicographic on canonical words.
        let words: Vec<String> = t.elements_of_length(3).map(|e| t.render(e)).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn multiplication_agrees_with_interning() {
        let p = a2();
        let t = MonoidTable::build(&p, 6).unwrap();
        let st = t.element_of(&p.word_from_str("s t").unwrap()).unwrap();
        let ts = t.element_of(&p.word_from_str("t s").unwrap()).unwrap();
        let prod = t.mul(st, ts).unwrap();
        assert_eq!(
            prod,
            t.element_of(&p.word_from_str("s t t s").unwrap()).unwrap()
        );
        assert_eq!(t.pow(st, 3).unwrap().length(), 6);
        assert!(t.pow(st, 4).is_err());
    }

    #[test]
    fn bound_is_enforced() {
        let p = a2();
        let t = MonoidTable::build(&p, 2).unwrap();
        let err = t.element_of(&p.word_from_str("s t s").unwrap()).unwrap_err();
        assert_eq!(
            err,
            BoundExceeded {
                needed: 3,
                bound: 2
            }
        );
    }

    #[test]
    fn level_limit_is_reported() {
        let p = Presentation::parse("gens: a b c\n").unwrap();
        let err = MonoidTable::build_with_limit(&p, 4, 20).unwrap_err();
        assert_eq!(
            err,
            BuildError::LevelLimit {
                level: 3,
                classes: 27,
                limit: 20
            }
        );
    }

    #[test]
    fn length_one_relations_merge_generators() {
        let p = Presentation::parse("gens: a b\nrel: a = b\n").unwrap();
        let t = MonoidTable::build(&p, 3).unwrap();
        assert_eq!(t.counts(), vec![1, 1, 1, 1]);
        assert_eq!(t.render(t.atom(0)), "a");
    }

    #[test]
    fn quotients_and_cancellativity() {
        let p = a2();
        let t = MonoidTable::build(&p, 6).unwrap();
        let sts = t.element_of(&p.word_from_str("s t s").unwrap()).unwrap();
        let s_atom = t.atom_of_generator(0);
        match t.left_quot_atom(s_atom, sts) {
            Quot::One(y) => assert_eq!(t.render(y), "t s"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(t.check_cancellativity().is_ok());
    }
}
