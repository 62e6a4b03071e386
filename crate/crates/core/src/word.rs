//! Words over a signed generator alphabet.
//!
//! Generators are referred to by their index in a [`Presentation`]'s
//! generator list; names only matter for parsing and display.
//!
//! [`Presentation`]: crate::presentation::Presentation

use std::fmt;
use std::ops::{Index, Mul};

use serde::{Deserialize, Serialize};

/// A generator or its inverse.
///
/// The derived order (generator index first, positive before negative) is
/// the letter order used for canonical rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: u32,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(gen: u32, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub const fn pos(gen: u32) -> Self {
        Letter { gen, inverse: false }
    }

    pub const fn neg(gen: u32) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    /// +1 or -1.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Dense code in `0..2n`, used by canonical forms.
    pub fn code(self) -> u32 {
        2 * self.gen + self.inverse as u32
    }
}

/// A (possibly unreduced) word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inv())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && match (self.0.first(), self.0.last()) {
                (Some(f), Some(l)) if self.len() > 1 => *f != l.inv(),
                _ => true,
            }
    }

    /// Rotation starting at position `i` (taken mod length).
    pub fn rotated(&self, i: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let i = i % self.len();
        let mut v = Vec::with_capacity(self.len());
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&self.0[..i]);
        Word(v)
    }

    /// Cyclic subword of length `len` starting at `start`.
    pub fn cyclic_subword(&self, start: usize, len: usize) -> Word {
        let n = self.len();
        Word((0..len).map(|k| self.0[(start + k) % n]).collect())
    }

    pub fn exponent_sum(&self, gen: u32) -> i64 {
        self.0.iter().filter(|l| l.gen == gen).map(|l| l.sign()).sum()
    }
}

impl Index<usize> for Word {
    type Output = Letter;
    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&rhs.0);
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Freely reduce a word (stack-based cancellation).
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

/// Split `w` as `x u x^-1` (freely) with `u` cyclically reduced.
///
/// Returns the canonical cyclic form of `u` together with the conjugator
/// `x` such that `x * u' * x^-1` freely reduces to `free_reduce(w)`, where
/// `u'` is the uncanonicalised core (see [`cyclic_core`]).
pub fn cyclic_reduce(w: &Word) -> (CyclicWord, Word) {
    let (core, x) = cyclic_core(w);
    (CyclicWord::new(&core), x)
}

/// Cyclically reduced core `u` and conjugator `x` with `w = x u x^-1` freely.
pub fn cyclic_core(w: &Word) -> (Word, Word) {
    let r = free_reduce(w);
    let l = &r.0;
    let mut k = 0;
    while 2 * k + 1 < l.len() && l[k] == l[l.len() - 1 - k].inv() {
        k += 1;
    }
    let core = Word(l[k..l.len() - k].to_vec());
    let x = Word(l[..k].to_vec());
    (core, x)
}

/// A word considered up to rotation. Stores the lexicographically least
/// rotation; inversion is *not* quotiented (see [`CyclicWord::unoriented`]).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CyclicWord(Word);

impl CyclicWord {
    pub fn new(w: &Word) -> Self {
        CyclicWord(least_rotation(w))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::new(&self.0.inverse())
    }

    /// Canonical form up to rotation *and* inversion.
    pub fn unoriented(&self) -> CyclicWord {
        let inv = self.inverse();
        if inv < *self {
            inv
        } else {
            self.clone()
        }
    }

    /// All rotations, in order of starting position of the canonical word.
    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len().max(1)).map(move |i| self.0.rotated(i))
    }

    /// Every rotation of the word and of its inverse, deduplicated.
    pub fn variants(&self) -> Vec<Word> {
        let mut out: Vec<Word> = Vec::new();
        for w in [self.0.clone(), self.0.inverse()] {
            for i in 0..w.len() {
                let r = w.rotated(i);
                if !out.contains(&r) {
                    out.push(r);
                }
            }
        }
        out
    }
}

fn least_rotation(w: &Word) -> Word {
    (0..w.len().max(1))
        .map(|i| w.rotated(i))
        .min()
        .unwrap_or_default()
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "g{}^-1", self.gen)
        } else {
            write!(f, "g{}", self.gen)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Letter = Letter::pos(0);
    const B: Letter = Letter::pos(1);
    const C: Letter = Letter::pos(2);

    fn w(ls: &[Letter]) -> Word {
        Word(ls.to_vec())
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(free_reduce(&w(&[A, B, B.inv()])), w(&[A]));
        assert_eq!(free_reduce(&Word::empty()), Word::empty());
        assert_eq!(free_reduce(&w(&[A, B, A.inv()])), w(&[A, B, A.inv()]));
        assert_eq!(free_reduce(&w(&[A, B, C, C.inv(), B.inv(), A])), w(&[A, A]));
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (u, x) = cyclic_core(&w(&[A, B, A.inv()]));
        assert_eq!(u, w(&[B]));
        assert_eq!(x, w(&[A]));

        // A^-1 B^-1 A B C is already cyclically reduced.
        let comm = w(&[A.inv(), B.inv(), A, B, C]);
        let (u, x) = cyclic_core(&comm);
        assert_eq!(u, comm);
        assert!(x.is_empty());

        // b^-1 a b c b^-1 has no cancelling ends, so it is its own core.
        let input = w(&[B.inv(), A, B, C, B.inv()]);
        let (u, x) = cyclic_core(&input);
        assert_eq!((u, x), (input.clone(), Word::empty()));

        let input = w(&[B.inv(), A, B, C, B]);
        let (u, x) = cyclic_core(&input);
        assert_eq!(x, w(&[B.inv()]));
        assert_eq!(u, w(&[A, B, C]));
        let rebuilt = free_reduce(&(&(&x * &u) * &x.inverse()));
        assert_eq!(rebuilt, free_reduce(&input));
    }

    #[test]
    fn canonical_rotation_uses_letter_order() {
        let c1 = CyclicWord::new(&w(&[B, A.inv(), A.inv()]));
        let c2 = CyclicWord::new(&w(&[A.inv(), B, A.inv()]));
        assert_eq!(c1, c2);
        // a^-1 sorts after every positive letter of the same generator.
        assert_eq!(c1.word(), &w(&[A.inv(), A.inv(), B]));
    }

    #[test]
    fn variants_of_monogon() {
        let c = CyclicWord::new(&w(&[C]));
        assert_eq!(c.variants().len(), 2);
        let p = CyclicWord::new(&w(&[A.inv(), B.inv(), A, B, C]));
        assert_eq!(p.variants().len(), 10);
    }
}
