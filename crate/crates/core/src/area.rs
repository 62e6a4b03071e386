//! Minimal-area oracles.
//!
//! `RelatorBfs` searches the word graph: a move replaces a cyclic subword
//! equal to a prefix of a relator variant by the inverse of the remaining
//! suffix, then cyclically reduces. Every minimal filling peels one cell at
//! a time this way, so the shortest move sequence to the empty word is the
//! area. The search is A* with an admissible, consistent lower bound from
//! abelian invariants (exponent sums and lattice areas).
//!
//! `DiagramSearch` looks boundary words up in an enumerated corpus of
//! topological disks and composes pieces at repeated boundary vertices.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, VecDeque};

use serde::Serialize;

use crate::diagram::DiskDiagram;
use crate::enumerate::Enumeration;
use crate::error::{Error, Result};
use crate::group::FreeProductModel;
use crate::presentation::Presentation;
use crate::word::{cyclic_core, free_reduce, CyclicWord, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AreaMethod {
    DiagramSearch,
    RelatorBfs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AreaResult {
    /// Least area found, if any filling was found within the bound.
    pub value: Option<usize>,
    /// `value` is the exact minimal area (or, with `value` absent, the
    /// search proved there is no filling within the bound).
    pub certified_exact: bool,
    pub method: AreaMethod,
    pub explored: usize,
}

/// Abelian invariants of a word: exponent sums, then doubled lattice areas
/// when the lattice path closes.
fn invariants(w: &Word, gens: usize, model: Option<&FreeProductModel>) -> Result<Vec<i64>> {
    let mut v: Vec<i64> = (0..gens as u32).map(|g| w.exponent_sum(g)).collect();
    if let Some(m) = model {
        if m.lattice_image(w)?.iter().all(|&x| x == 0) {
            v.extend(m.doubled_areas(w)?);
        } else {
            v.extend(std::iter::repeat_n(i64::MIN, m.abelian_rank() * m.abelian_rank().saturating_sub(1) / 2));
        }
    }
    Ok(v)
}

pub struct RelatorBfs {
    variants: Vec<Word>,
    gens: usize,
    model: Option<FreeProductModel>,
    bound: usize,
    /// Least number of relator terms realising each invariant vector.
    lower: HashMap<Vec<i64>, usize>,
    pub max_states: usize,
}

impl RelatorBfs {
    pub fn new(p: &Presentation, model: Option<&FreeProductModel>, bound: usize) -> Result<Self> {
        let mut variants: Vec<Word> = p.cyclic_relators().iter().flat_map(CyclicWord::variants).collect();
        variants.sort();
        variants.dedup();
        let gens = p.generators().len();
        let steps: Vec<Vec<i64>> = p
            .relators()
            .iter()
            .map(|r| invariants(r, gens, model))
            .collect::<Result<_>>()?;
        let steps: Vec<Vec<i64>> = steps
            .iter()
            .flat_map(|s| [s.clone(), s.iter().map(|x| -x).collect()])
            .collect();
        let origin = vec![0i64; steps.first().map_or(gens, Vec::len)];
        let mut lower = HashMap::from([(origin.clone(), 0usize)]);
        let mut queue = VecDeque::from([origin]);
        while let Some(v) = queue.pop_front() {
            let dv = lower[&v];
            if dv == bound {
                continue;
            }
            for s in &steps {
                let u: Vec<i64> = v.iter().zip(s).map(|(a, b)| a + b).collect();
                if !lower.contains_key(&u) {
                    lower.insert(u.clone(), dv + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(RelatorBfs {
            variants,
            gens,
            model: model.cloned(),
            bound,
            lower,
            max_states: 20_000_000,
        })
    }

    fn heuristic(&self, w: &Word) -> Option<usize> {
        let v = invariants(w, self.gens, self.model.as_ref()).ok()?;
        self.lower.get(&v).copied()
    }

    /// Successor words of the cyclically reduced word `w`.
    fn moves(&self, w: &Word) -> Vec<Word> {
        let n = w.len();
        let mut out = Vec::new();
        for i in 0..n {
            for rho in &self.variants {
                let k = rho.len();
                let mut s = 0;
                while s < n.min(k) && w[(i + s) % n] == rho[s] {
                    s += 1;
                    let mut next: Vec<Letter> = rho.letters()[s..].iter().rev().map(|l| l.inv()).collect();
                    next.extend((s..n).map(|t| w[(i + t) % n]));
                    out.push(cyclic_core(&Word(next)).0);
                }
            }
        }
        out
    }

    pub fn area(&self, w: &Word) -> Result<AreaResult> {
        let start = cyclic_core(w).0;
        let done = |value, certified, explored| AreaResult {
            value,
            certified_exact: certified,
            method: AreaMethod::RelatorBfs,
            explored,
        };
        if start.is_empty() {
            return Ok(done(Some(0), true, 1));
        }
        if let Some(m) = &self.model {
            if !m.is_trivial(&start)? {
                return Ok(done(None, true, 0));
            }
        }
        let Some(h0) = self.heuristic(&start) else {
            return Ok(done(None, true, 0));
        };
        let key = |u: &Word| CyclicWord::new(u).unoriented();
        let mut best: HashMap<CyclicWord, usize> = HashMap::from([(key(&start), 0)]);
        let mut words = vec![start];
        let mut heap = BinaryHeap::from([(Reverse(h0), 0usize, 0usize)]);
        while let Some((Reverse(f), g, idx)) = heap.pop() {
            if f > self.bound {
                break;
            }
            let w = words[idx].clone();
            if best.get(&key(&w)).is_some_and(|&bg| bg < g) {
                continue;
            }
            if w.is_empty() {
                return Ok(done(Some(g), true, words.len()));
            }
            // a move lengthens a word by at most (relator length - 2), so
            // words stay bounded along paths within the bound
            for u in self.moves(&w) {
                let Some(h) = self.heuristic(&u) else { continue };
                let gu = g + 1;
                if gu + h > self.bound {
                    continue;
                }
                let k = key(&u);
                if best.get(&k).is_some_and(|&bg| bg <= gu) {
                    continue;
                }
                best.insert(k, gu);
                words.push(u);
                if words.len() > self.max_states {
                    return Err(Error::ResourceCap(format!("{} words explored", words.len())));
                }
                heap.push((Reverse(gu + h), gu, words.len() - 1));
            }
        }
        Ok(done(None, true, words.len()))
    }
}

/// Corpus lookup with composition at repeated boundary vertices.
pub struct DiagramSearch {
    corpus: HashMap<CyclicWord, usize>,
    corpus_max: usize,
    model: FreeProductModel,
    memo: HashMap<CyclicWord, Option<usize>>,
}

impl DiagramSearch {
    /// `corpus` must contain every reduced topological disk of area up to
    /// its top level.
    pub fn new(corpus: &Enumeration, model: &FreeProductModel) -> Self {
        let mut map: HashMap<CyclicWord, usize> = HashMap::new();
        for d in corpus.iter() {
            let k = CyclicWord::new(&cyclic_core(&d.boundary_word()).0).unoriented();
            let e = map.entry(k).or_insert(d.area());
            *e = (*e).min(d.area());
        }
        DiagramSearch {
            corpus: map,
            corpus_max: corpus.by_area.len().saturating_sub(1),
            model: model.clone(),
            memo: HashMap::new(),
        }
    }

    pub fn corpus_max(&self) -> usize {
        self.corpus_max
    }

    fn search(&mut self, w: &Word) -> Result<Option<usize>> {
        let w = cyclic_core(w).0;
        if w.is_empty() {
            return Ok(Some(0));
        }
        let key = CyclicWord::new(&w).unoriented();
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let mut best = self.corpus.get(&key).copied();
        let n = w.len();
        let mut prefix = vec![self.model.normal_form(&Word::empty())?];
        for &l in w.letters() {
            let next = prefix.last().unwrap().mul(&self.model.letter_image(l)?);
            prefix.push(next);
        }
        for i in 0..n {
            for j in i + 1..n {
                if prefix[i] != prefix[j] {
                    continue;
                }
                let u: Word = w.letters()[i..j].iter().copied().collect();
                let v: Word = w.letters()[j..].iter().chain(&w.letters()[..i]).copied().collect();
                let (Some(a), Some(b)) = (self.search(&u)?, self.search(&v)?) else { continue };
                best = Some(best.map_or(a + b, |x| x.min(a + b)));
            }
        }
        self.memo.insert(key, best);
        Ok(best)
    }

    pub fn area(&mut self, w: &Word) -> Result<AreaResult> {
        let before = self.memo.len();
        let value = if self.model.is_trivial(w)? { self.search(w)? } else { None };
        Ok(AreaResult {
            value,
            certified_exact: value.is_some_and(|v| v <= self.corpus_max),
            method: AreaMethod::DiagramSearch,
            explored: self.memo.len() - before,
        })
    }

    /// `Some(true)` if `d` has minimal area for its boundary word, `None`
    /// when the corpus is too small to decide.
    pub fn is_minimal(&mut self, d: &DiskDiagram) -> Result<Option<bool>> {
        let r = self.area(&d.boundary_word())?;
        if r.value.is_some_and(|v| v < d.area()) {
            return Ok(Some(false));
        }
        // a smaller filling would have area <= corpus_max and been found
        Ok((d.area() <= self.corpus_max + 1).then_some(true))
    }
}

/// One-shot area query.
pub fn area_oracle(
    w: &Word,
    p: &Presentation,
    m: &FreeProductModel,
    bound: usize,
    method: AreaMethod,
    corpus: Option<&Enumeration>,
) -> Result<AreaResult> {
    match method {
        AreaMethod::RelatorBfs => RelatorBfs::new(p, Some(m), bound)?.area(w),
        AreaMethod::DiagramSearch => {
            let owned;
            let e = match corpus {
                Some(e) => e,
                None => {
                    let cfg = crate::enumerate::EnumerationConfig::with_max_area(bound.max(1));
                    owned = crate::enumerate::enumerate_diagrams(p, &cfg)?;
                    &owned
                }
            };
            DiagramSearch::new(e, m).area(w)
        }
    }
}

/// Minimality of `d` decided with the word-graph search (bound `area - 1`).
pub fn is_minimal(d: &DiskDiagram, p: &Presentation, m: &FreeProductModel) -> Result<Option<bool>> {
    if d.area() == 0 {
        return Ok(Some(true));
    }
    let r = RelatorBfs::new(p, Some(m), d.area() - 1)?.area(&d.boundary_word())?;
    Ok(match (r.value, r.certified_exact) {
        (Some(_), _) => Some(false),
        (None, true) => Some(true),
        (None, false) => None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DehnRow {
    pub n: usize,
    pub length: usize,
    pub area: Option<usize>,
    pub certified: bool,
}

/// Areas of a word family `n -> w_n` by the word-graph search.
pub fn dehn_table(
    p: &Presentation,
    m: &FreeProductModel,
    family: impl Fn(usize) -> Word,
    ns: impl IntoIterator<Item = usize>,
    bound: usize,
) -> Result<Vec<DehnRow>> {
    let oracle = RelatorBfs::new(p, Some(m), bound)?;
    ns.into_iter()
        .map(|n| {
            let w = family(n);
            let r = oracle.area(&w)?;
            Ok(DehnRow { n, length: free_reduce(&w).len(), area: r.value, certified: r.certified_exact && r.value.is_some() })
        })
        .collect()
}

/// `[x^n, y^n] = x^-n y^-n x^n y^n`.
pub fn commutator_power(x: Letter, y: Letter, n: usize) -> Word {
    let rep = |l: Letter, k: usize| std::iter::repeat_n(l, k);
    rep(x.inv(), n).chain(rep(y.inv(), n)).chain(rep(x, n)).chain(rep(y, n)).collect()
}
