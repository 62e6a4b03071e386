//! Exact word problem in free products `Z^d * F_k`.
//!
//! Elements are kept in syllable normal form: an alternating sequence of
//! nonzero lattice vectors and nonempty freely reduced free-group words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::word::{free_reduce, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Syllable {
    /// Element of the lattice factor `Z^d`; never the zero vector.
    Lattice(Vec<i64>),
    /// Freely reduced word over `f1..fk` (letter `gen` indexes the free
    /// basis); never empty.
    Free(Vec<Letter>),
}

/// Normal form in `Z^d * F_k`. The identity has no syllables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    syllables: Vec<Syllable>,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement::default()
    }

    pub fn lattice(v: Vec<i64>) -> Self {
        let mut g = GroupElement::identity();
        g.push(Syllable::Lattice(v));
        g
    }

    pub fn free(letters: Vec<Letter>) -> Self {
        let mut g = GroupElement::identity();
        g.push(Syllable::Free(letters));
        g
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Append one syllable, merging with the tail and collapsing trivial
    /// results so the normal form is maintained.
    fn push(&mut self, s: Syllable) {
        let mut pending = Some(s);
        while let Some(s) = pending.take() {
            match (self.syllables.pop(), s) {
                (None, s) => {
                    if !syllable_trivial(&s) {
                        self.syllables.push(s);
                    }
                }
                (Some(Syllable::Lattice(mut u)), Syllable::Lattice(v)) => {
                    if u.len() < v.len() {
                        u.resize(v.len(), 0);
                    }
                    for (a, b) in u.iter_mut().zip(v) {
                        *a += b;
                    }
                    if !u.iter().all(|&x| x == 0) {
                        self.syllables.push(Syllable::Lattice(u));
                    }
                }
                (Some(Syllable::Free(mut u)), Syllable::Free(v)) => {
                    u.extend(v);
                    let r = free_reduce(&Word(u)).0;
                    if !r.is_empty() {
                        self.syllables.push(Syllable::Free(r));
                    }
                }
                (Some(prev), s) => {
                    self.syllables.push(prev);
                    if !syllable_trivial(&s) {
                        self.syllables.push(s);
                    }
                }
            }
            // A collapsed syllable may expose two mergeable neighbours.
            let n = self.syllables.len();
            if n >= 2 && same_kind(&self.syllables[n - 2], &self.syllables[n - 1]) {
                pending = self.syllables.pop();
            }
        }
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(s.clone());
        }
        out
    }

    pub fn inverse(&self) -> GroupElement {
        let mut out = GroupElement::identity();
        for s in self.syllables.iter().rev() {
            out.push(match s {
                Syllable::Lattice(v) => Syllable::Lattice(v.iter().map(|x| -x).collect()),
                Syllable::Free(w) => Syllable::Free(Word(w.clone()).inverse().0),
            });
        }
        out
    }

    /// Image under the projection killing the free factor.
    pub fn lattice_part(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0; rank];
        for s in &self.syllables {
            if let Syllable::Lattice(u) = s {
                for (a, b) in v.iter_mut().zip(u) {
                    *a += b;
                }
            }
        }
        v
    }
}

fn syllable_trivial(s: &Syllable) -> bool {
    match s {
        Syllable::Lattice(v) => v.iter().all(|&x| x == 0),
        Syllable::Free(w) => w.is_empty(),
    }
}

fn same_kind(a: &Syllable, b: &Syllable) -> bool {
    matches!(
        (a, b),
        (Syllable::Lattice(_), Syllable::Lattice(_)) | (Syllable::Free(_), Syllable::Free(_))
    )
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|s| match s {
                Syllable::Lattice(v) => format!("{v:?}"),
                Syllable::Free(w) => w
                    .iter()
                    .map(|l| if l.inverse { format!("F{}", l.gen + 1) } else { format!("f{}", l.gen + 1) })
                    .collect::<String>(),
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Point of `Z^2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector {
    pub x: i64,
    pub y: i64,
}

impl LatticeVector {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticeVector { x, y }
    }
}

impl std::ops::Add for LatticeVector {
    type Output = LatticeVector;
    fn add(self, o: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.x + o.x, self.y + o.y)
    }
}

/// A homomorphism from the free group on the presentation's generators
/// into `Z^d * F_k` that kills every relator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeProductModel {
    abelian_rank: usize,
    free_rank: usize,
    images: Vec<GroupElement>,
}

impl FreeProductModel {
    /// `images[i]` is the image of generator `i`; every relator of `p`
    /// must map to the identity.
    pub fn new(
        p: &Presentation,
        abelian_rank: usize,
        free_rank: usize,
        images: Vec<GroupElement>,
    ) -> Result<Self> {
        if images.len() != p.generators().len() {
            return Err(Error::InvalidModel(format!(
                "{} images for {} generators",
                images.len(),
                p.generators().len()
            )));
        }
        for img in &images {
            for s in img.syllables() {
                match s {
                    Syllable::Lattice(v) if v.len() > abelian_rank => {
                        return Err(Error::InvalidModel("lattice vector exceeds rank".into()))
                    }
                    Syllable::Free(w) if w.iter().any(|l| l.gen as usize >= free_rank) => {
                        return Err(Error::InvalidModel("free letter exceeds rank".into()))
                    }
                    _ => {}
                }
            }
        }
        let m = FreeProductModel { abelian_rank, free_rank, images };
        for (i, r) in p.relators().iter().enumerate() {
            let e = m.normal_form(r)?;
            if !e.is_identity() {
                return Err(Error::InvalidModel(format!(
                    "relator {i} ({}) maps to {e}, not the identity",
                    p.format_word(r)
                )));
            }
        }
        Ok(m)
    }

    pub fn abelian_rank(&self) -> usize {
        self.abelian_rank
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn image(&self, gen: u32) -> Option<&GroupElement> {
        self.images.get(gen as usize)
    }

    pub fn letter_image(&self, l: Letter) -> Result<GroupElement> {
        let g = self
            .image(l.gen)
            .ok_or_else(|| Error::UnknownGenerator(format!("index {}", l.gen)))?;
        Ok(if l.inverse { g.inverse() } else { g.clone() })
    }

    pub fn normal_form(&self, w: &Word) -> Result<GroupElement> {
        let mut acc = GroupElement::identity();
        for &l in w.letters() {
            acc = acc.mul(&self.letter_image(l)?);
        }
        Ok(acc)
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        Ok(self.normal_form(w)?.is_identity())
    }

    /// Lattice image of a word (abelian, so just a sum over letters).
    pub fn lattice_image(&self, w: &Word) -> Result<Vec<i64>> {
        let mut v = vec![0; self.abelian_rank];
        for &l in w.letters() {
            let img = self
                .image(l.gen)
                .ok_or_else(|| Error::UnknownGenerator(format!("index {}", l.gen)))?
                .lattice_part(self.abelian_rank);
            for (a, b) in v.iter_mut().zip(img) {
                *a += l.sign() * b;
            }
        }
        Ok(v)
    }

    pub fn project_z2(&self, w: &Word) -> Result<LatticeVector> {
        if self.abelian_rank != 2 {
            return Err(Error::WrongRank(self.abelian_rank));
        }
        let v = self.lattice_image(w)?;
        Ok(LatticeVector::new(v[0], v[1]))
    }

    /// Twice the signed area enclosed by the lattice path of `w`, summed over
    /// each coordinate plane `(i, j)`, `i < j`. Returned as one entry per
    /// plane. For closed paths these values are invariant under rotation,
    /// free reduction and insertion of closed subpaths elsewhere, and they
    /// add under insertion of a relator (see `area` lower bounds).
    pub fn doubled_areas(&self, w: &Word) -> Result<Vec<i64>> {
        let d = self.abelian_rank;
        let mut pos = vec![0i64; d];
        let mut acc = vec![0i64; d * d.saturating_sub(1) / 2];
        for &l in w.letters() {
            let step: Vec<i64> = self
                .image(l.gen)
                .ok_or_else(|| Error::UnknownGenerator(format!("index {}", l.gen)))?
                .lattice_part(d)
                .into_iter()
                .map(|x| x * l.sign())
                .collect();
            let mut k = 0;
            for i in 0..d {
                for j in i + 1..d {
                    // shoelace: x dy - y dx over the segment
                    acc[k] += pos[i] * step[j] - pos[j] * step[i];
                    k += 1;
                }
            }
            for (p, s) in pos.iter_mut().zip(&step) {
                *p += s;
            }
        }
        Ok(acc)
    }
}

/// True iff every proper nonempty cyclic subword of `r` is nontrivial, i.e.
/// the boundary circuit of the cell lifts to a simple circuit.
pub fn cell_embeds(r: &Word, m: &FreeProductModel) -> Result<bool> {
    let k = r.len();
    for start in 0..k {
        for len in 1..k {
            if m.is_trivial(&r.cyclic_subword(start, len))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Parsed model file: `abelian_rank d`, `free_rank k`, `image <gen> = <expr>`.
///
/// Expressions are products of `e1..ed` (lattice basis) and `f1..fk` (free
/// basis) with optional `^n` exponents; upper case `E`/`F` marks an inverse
/// and `1` is the identity.
pub fn parse_model(text: &str, p: &Presentation) -> Result<Option<FreeProductModel>> {
    let mut rank: Option<usize> = None;
    let mut free: Option<usize> = None;
    let mut images: Vec<Option<GroupElement>> = vec![None; p.generators().len()];
    let mut seen_any = false;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("abelian_rank") => {
                seen_any = true;
                rank = Some(parse_usize(parts.next())?);
            }
            Some("free_rank") => {
                seen_any = true;
                free = Some(parse_usize(parts.next())?);
            }
            Some("image") => {
                seen_any = true;
                let rest = line["image".len()..].trim();
                let (name, expr) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("bad image line `{line}`")))?;
                let name = name.trim();
                let gen = p
                    .generator_index(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
                images[gen as usize] = Some(parse_expression(expr, rank.unwrap_or(0))?);
            }
            _ => {}
        }
    }
    if !seen_any {
        return Ok(None);
    }
    let rank = rank.ok_or_else(|| Error::Parse("missing abelian_rank".into()))?;
    let free = free.ok_or_else(|| Error::Parse("missing free_rank".into()))?;
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.ok_or_else(|| Error::InvalidModel(format!("no image for {}", p.generators()[i]))))
        .collect::<Result<Vec<_>>>()?;
    FreeProductModel::new(p, rank, free, images).map(Some)
}

fn parse_usize(s: Option<&str>) -> Result<usize> {
    s.and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("expected a non-negative integer".into()))
}

fn parse_expression(expr: &str, rank: usize) -> Result<GroupElement> {
    let mut acc = GroupElement::identity();
    let t = expr.trim();
    if t == "1" {
        return Ok(acc);
    }
    let chars: Vec<char> = t.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == '*' || c == '.' {
            i += 1;
            continue;
        }
        let kind = c.to_ascii_lowercase();
        if kind != 'e' && kind != 'f' {
            return Err(Error::Parse(format!("unexpected `{c}` in `{t}`")));
        }
        i += 1;
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let idx: usize = chars[start..i]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::Parse(format!("missing index in `{t}`")))?;
        if idx == 0 {
            return Err(Error::Parse("basis indices start at 1".into()));
        }
        let mut power: i64 = 1;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let s = i;
            if i < chars.len() && chars[i] == '-' {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            power = chars[s..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{t}`")))?;
        }
        if c.is_ascii_uppercase() {
            power = -power;
        }
        let g = if kind == 'e' {
            if idx > rank {
                return Err(Error::Parse(format!("e{idx} exceeds abelian rank {rank}")));
            }
            let mut v = vec![0; rank];
            v[idx - 1] = power;
            GroupElement::lattice(v)
        } else {
            let l = Letter::new(idx as u32 - 1, power < 0);
            GroupElement::free(vec![l; power.unsigned_abs() as usize])
        };
        acc = acc.mul(&g);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> (Presentation, FreeProductModel) {
        let p = Presentation::from_strs(&["a", "b", "c"], &["ABabc", "c"]).unwrap();
        let m = FreeProductModel::new(
            &p,
            2,
            0,
            vec![
                GroupElement::lattice(vec![1, 0]),
                GroupElement::lattice(vec![0, 1]),
                GroupElement::identity(),
            ],
        )
        .unwrap();
        (p, m)
    }

    #[test]
    fn syllables_merge_and_collapse() {
        let f = GroupElement::free(vec![Letter::pos(0)]);
        let e = GroupElement::lattice(vec![1, 0]);
        // f e f^-1 * f e^-1 f^-1 = 1
        let x = f.mul(&e).mul(&f.inverse());
        let y = f.mul(&e.inverse()).mul(&f.inverse());
        assert!(x.mul(&y).is_identity());
        // e f e^-1: three syllables
        assert_eq!(e.mul(&f).mul(&e.inverse()).syllables().len(), 3);
        // e * e^-1 f -> f
        assert_eq!(e.mul(&e.inverse().mul(&f)), f);
    }

    #[test]
    fn z2_model_word_problem() {
        let (p, m) = z2();
        assert!(m.is_trivial(&p.parse_word("c").unwrap()).unwrap());
        assert!(m.is_trivial(&p.parse_word("ABab").unwrap()).unwrap());
        assert!(!m.is_trivial(&p.parse_word("a").unwrap()).unwrap());
        assert_eq!(m.doubled_areas(&p.parse_word("ABab").unwrap()).unwrap(), vec![2]);
        assert_eq!(m.doubled_areas(&p.parse_word("abAB").unwrap()).unwrap(), vec![2]);
        assert_eq!(m.doubled_areas(&p.parse_word("baBA").unwrap()).unwrap(), vec![-2]);
    }

    #[test]
    fn pentagon_does_not_embed_in_z2() {
        let (p, m) = z2();
        assert!(!cell_embeds(&p.relators()[0], &m).unwrap());
        assert!(cell_embeds(&p.relators()[1], &m).unwrap());
    }

    #[test]
    fn model_must_kill_relators() {
        let p = Presentation::from_strs(&["a", "b"], &["abAB"]).unwrap();
        let bad = FreeProductModel::new(
            &p,
            0,
            2,
            vec![GroupElement::free(vec![Letter::pos(0)]), GroupElement::free(vec![Letter::pos(1)])],
        );
        assert!(matches!(bad, Err(Error::InvalidModel(_))));
    }

    #[test]
    fn model_file_parses() {
        let p = Presentation::from_strs(&["a", "b", "t"], &["abAB"]).unwrap();
        let text = "abelian_rank 2\nfree_rank 1\nimage a = e1\nimage b = e2\nimage t = e1 f1^2 E1\n";
        let m = parse_model(text, &p).unwrap().unwrap();
        let t = m.image(2).unwrap();
        assert_eq!(t.syllables().len(), 3);
        assert_eq!(m.project_z2(&p.parse_word("t").unwrap()).unwrap(), LatticeVector::new(0, 0));
        assert!(parse_model("gens: a\n", &p).unwrap().is_none());
    }
}
