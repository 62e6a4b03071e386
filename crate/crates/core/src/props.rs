//! Whole-complex property checks and the linear-bound recursion.

use serde::Serialize;

use crate::area::DiagramSearch;
use crate::diagram::{DiagramJson, DiskDiagram};
use crate::enumerate::{enumerate_diagrams, Enumeration, EnumerationConfig};
use crate::error::{Error, Result};
use crate::group::{cell_embeds, FreeProductModel};
use crate::presentation::Presentation;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Property {
    Dehn,
    /// Spurs, shells or cutcells in the given sense.
    GeneralizedDehn(u8),
    NoBigPieces,
    CellsEmbed,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub reason: String,
    pub area: usize,
    pub boundary: String,
    pub diagram: Option<DiagramJson>,
    #[serde(skip)]
    pub source: Option<DiskDiagram>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub property: Property,
    pub max_area: usize,
    /// Diagrams (or relators, pieces) examined.
    pub scanned: usize,
    /// Single-cell diagrams, exempt by definition.
    pub exempt: usize,
    /// Scanned diagrams that are not of minimal area.
    pub not_minimal: usize,
    /// Diagrams whose minimality could not be certified.
    pub unknown: usize,
    pub violations: Vec<Violation>,
}

impl PropertyReport {
    fn new(property: Property, max_area: usize) -> Self {
        PropertyReport { property, max_area, scanned: 0, exempt: 0, not_minimal: 0, unknown: 0, violations: Vec::new() }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

fn has_escape(d: &DiskDiagram, def: Option<u8>) -> bool {
    !d.find_spurs().is_empty()
        || !d.find_shells().is_empty()
        || def.is_some_and(|k| !d.find_cutcells(k).is_empty())
}

/// Scan the minimal diagrams of a disk corpus for the property with
/// cutcells in sense `def` (none for the plain Dehn property).
pub fn scan_corpus(
    p: &Presentation,
    m: &FreeProductModel,
    corpus: &Enumeration,
    def: Option<u8>,
) -> Result<PropertyReport> {
    let property = def.map_or(Property::Dehn, Property::GeneralizedDehn);
    let mut report = PropertyReport::new(property, corpus.by_area.len().saturating_sub(1));
    let mut oracle = DiagramSearch::new(corpus, m);
    let mut found: Vec<(crate::diagram::CanonicalCode, Violation)> = Vec::new();
    for d in corpus.iter() {
        report.scanned += 1;
        if d.area() <= 1 {
            report.exempt += 1;
            continue;
        }
        match oracle.is_minimal(d)? {
            Some(false) => {
                report.not_minimal += 1;
                continue;
            }
            None => {
                report.unknown += 1;
                continue;
            }
            Some(true) => {}
        }
        if !has_escape(d, def) {
            let reason = match def {
                Some(k) => format!("no spur, shell or cutcell({k})"),
                None => "no spur or shell".to_string(),
            };
            found.push((
                d.canonical_code(),
                Violation {
                    reason,
                    area: d.area(),
                    boundary: p.format_word(&d.boundary_word()),
                    diagram: Some(d.to_json(p.generators())),
                    source: Some(d.clone()),
                },
            ));
        }
    }
    found.sort_by(|a, b| (a.1.area, &a.0).cmp(&(b.1.area, &b.0)));
    report.violations = found.into_iter().map(|(_, v)| v).collect();
    Ok(report)
}

pub fn check_dehn(p: &Presentation, m: &FreeProductModel, bound: usize) -> Result<PropertyReport> {
    let corpus = enumerate_diagrams(p, &EnumerationConfig::with_max_area(bound))?;
    scan_corpus(p, m, &corpus, None)
}

pub fn check_generalized_dehn(p: &Presentation, m: &FreeProductModel, def: u8, bound: usize) -> Result<PropertyReport> {
    if !(1..=3).contains(&def) {
        return Err(Error::Precondition(format!("cutcell definition must be 1, 2 or 3, not {def}")));
    }
    let corpus = enumerate_diagrams(p, &EnumerationConfig::with_max_area(bound))?;
    scan_corpus(p, m, &corpus, Some(def))
}

/// Where a piece occurs: relator `relator` (inverted or not) read from
/// cyclic position `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PieceSite {
    pub relator: usize,
    pub inverted: bool,
    pub start: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub word: Word,
    pub sites: (PieceSite, PieceSite),
    /// Length at least half the shorter of the two perimeters.
    pub big: bool,
}

/// Maximal common arcs between relator sites, including a relator against
/// itself at another position and against its inverse.
pub fn pieces(p: &Presentation) -> Vec<Piece> {
    let mut sites: Vec<(PieceSite, Word)> = Vec::new();
    for (i, r) in p.relators().iter().enumerate() {
        for inverted in [false, true] {
            let w = if inverted { r.inverse() } else { r.clone() };
            for start in 0..w.len() {
                sites.push((PieceSite { relator: i, inverted, start }, w.rotated(start)));
            }
        }
    }
    let mut out = Vec::new();
    for a in 0..sites.len() {
        for b in a + 1..sites.len() {
            let (sa, wa) = &sites[a];
            let (sb, wb) = &sites[b];
            let cap = wa.len().min(wb.len());
            let mut len = 0;
            while len < cap && wa[len] == wb[len] {
                len += 1;
            }
            if len == 0 {
                continue;
            }
            // left-maximal unless the arc already covers a whole relator
            let (ka, kb) = (wa.len(), wb.len());
            if len < cap && wa[ka - 1] == wb[kb - 1] {
                continue;
            }
            out.push(Piece {
                word: wa.letters()[..len].iter().copied().collect(),
                sites: (*sa, *sb),
                big: 2 * len >= cap,
            });
        }
    }
    out
}

pub fn has_big_pieces(p: &Presentation) -> bool {
    pieces(p).iter().any(|q| q.big)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FSequence {
    pub c: usize,
    pub values: Vec<u64>,
}

/// `f(0) = 0`, `f(n) = 1 + max sum f(n_i)` over parts `1 <= n_i < n` with
/// `sum n_i <= n + c`, by unbounded knapsack for each `n`.
pub fn f_values(c: usize, n_max: usize) -> Result<FSequence> {
    if c == 0 {
        return Err(Error::Precondition("c must be at least 1".into()));
    }
    let mut f = vec![0u64; n_max + 1];
    for n in 1..=n_max {
        let cap = n + c;
        let mut best = vec![0u64; cap + 1];
        for budget in 1..=cap {
            let mut b = best[budget - 1];
            for part in 1..n.min(budget + 1) {
                b = b.max(best[budget - part] + f[part]);
            }
            best[budget] = b;
        }
        f[n] = 1 + best[cap];
    }
    Ok(FSequence { c, values: f })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub c: usize,
    pub n_max: usize,
    pub values: Vec<u64>,
    pub increments_nondecreasing: bool,
    /// `f(n) - f(n-1) = f(c+2) - f(c+1)` for every `n >= c + 2`.
    pub arithmetic_tail: bool,
    pub slope: u64,
    /// `K = f(c+2) - f(c+1) - 1`, so `slope = 1 + K`.
    pub k: u64,
}

impl PropositionReport {
    pub fn holds(&self) -> bool {
        self.increments_nondecreasing && self.arithmetic_tail && self.values[0] == 0 && self.values.get(1) == Some(&1)
    }
}

pub fn verify_proposition_bound(c: usize, n_max: usize) -> Result<PropositionReport> {
    if n_max < c + 2 {
        return Err(Error::Precondition(format!("need N >= c + 2 = {}", c + 2)));
    }
    let f = f_values(c, n_max)?.values;
    let inc: Vec<u64> = (1..=n_max).map(|n| f[n] - f[n - 1]).collect();
    let slope = f[c + 2] - f[c + 1];
    Ok(PropositionReport {
        c,
        n_max,
        increments_nondecreasing: inc.windows(2).all(|w| w[0] <= w[1]),
        arithmetic_tail: (c + 2..=n_max).all(|n| f[n] - f[n - 1] == slope),
        slope,
        k: slope - 1,
        values: f,
    })
}

pub fn check_cells_embed(p: &Presentation, m: &FreeProductModel) -> Result<PropertyReport> {
    let mut report = PropertyReport::new(Property::CellsEmbed, 0);
    for r in p.relators() {
        report.scanned += 1;
        if !cell_embeds(r, m)? {
            report.violations.push(Violation {
                reason: "a proper cyclic subword is trivial".into(),
                area: 1,
                boundary: p.format_word(r),
                diagram: None,
                source: None,
            });
        }
    }
    Ok(report)
}

pub fn check_pieces(p: &Presentation) -> PropertyReport {
    let mut report = PropertyReport::new(Property::NoBigPieces, 0);
    let all = pieces(p);
    report.scanned = all.len();
    for q in all.into_iter().filter(|q| q.big) {
        report.violations.push(Violation {
            reason: format!(
                "piece of length {} between relator {} and relator {}",
                q.word.len(),
                q.sites.0.relator,
                q.sites.1.relator
            ),
            area: 0,
            boundary: p.format_word(&q.word),
            diagram: None,
            source: None,
        });
    }
    report
}
