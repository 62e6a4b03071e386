//! Exhaustive generation of reduced topological-disk diagrams.
//!
//! A diagram of area `n` is grown from a disk of smaller area by gluing a
//! *unit* along one boundary arc. A unit is a single cell, or a cell whose
//! boundary loops (pockets) have been filled by disks glued along their
//! whole perimeter. Units are needed because a non-embedded cell such as
//! `[a,b]c` only closes up into a disk once its `c` loop is plugged.
//!
//! Every reduced topological disk of area at least two has a unit meeting
//! the boundary in a single arc whose removal leaves a topological disk, so
//! the recursion reaches every such diagram.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::diagram::{CanonicalCode, DiagramBuilder, DiskDiagram};
use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    pub max_area: usize,
    /// Only report diagrams with at most this perimeter (growth is not
    /// pruned, since gluing can shorten the boundary).
    pub max_perimeter: Option<usize>,
    pub require_reduced: bool,
    /// Report one diagram per isomorphism class (mirror images identified);
    /// otherwise both orientations of chiral classes are reported.
    pub up_to_iso: bool,
    /// Upper bound on diagrams held at once, across all areas.
    pub max_diagrams: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            max_area: 4,
            max_perimeter: None,
            require_reduced: true,
            up_to_iso: true,
            max_diagrams: 5_000_000,
        }
    }
}

impl EnumerationConfig {
    pub fn with_max_area(max_area: usize) -> Self {
        EnumerationConfig { max_area, ..Default::default() }
    }
}

/// Diagrams grouped by area; `by_area[0]` is always empty.
#[derive(Clone, Debug, Default)]
pub struct Enumeration {
    pub by_area: Vec<Vec<DiskDiagram>>,
}

impl Enumeration {
    pub fn iter(&self) -> impl Iterator<Item = &DiskDiagram> {
        self.by_area.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_area.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn counts(&self) -> Vec<usize> {
        self.by_area.iter().map(Vec::len).collect()
    }

    pub fn at_area(&self, n: usize) -> &[DiskDiagram] {
        self.by_area.get(n).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// The diagram of a single cell reading `r` counterclockwise.
pub fn cell_diagram(r: &Word) -> DiskDiagram {
    let k = r.len();
    let mut b = DiagramBuilder::new();
    let vs = b.vertices(k);
    let steps = (0..k).map(|i| (b.edge(vs[i], vs[(i + 1) % k], r[i]), true)).collect();
    b.face(steps);
    b.build().expect("a polygon is a disk diagram")
}

/// All valid gluings of `unit` onto `base` along arcs of length at least
/// one (or exactly `only_len`).
fn gluings(base: &DiskDiagram, unit: &DiskDiagram, only_len: Option<usize>) -> Vec<DiskDiagram> {
    let o1 = base.outer_cycle();
    let o2 = unit.outer_cycle();
    let (p1, p2) = (o1.len(), o2.len());
    let mut out = Vec::new();
    if p1 == 0 || p2 == 0 {
        return out;
    }
    let max_len = p1.min(p2);
    // unit dart o2[s2 + j] pairs with base dart o1[t - j]
    for t in 0..p1 {
        for s2 in 0..p2 {
            let mut run = 0;
            while run < max_len
                && base.label(o1[(t + p1 - run) % p1]) == unit.label(o2[(s2 + run) % p2]).inv()
            {
                run += 1;
            }
            for len in 1..=run {
                if only_len.is_some_and(|l| l != len) {
                    continue;
                }
                let s1 = (t + p1 + 1 - len) % p1;
                if let Ok(d) = base.glue(s1, unit, s2, len) {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// Merge candidate batches (in order) into `level`, deduplicating by code.
fn merge(
    batches: Vec<Vec<(CanonicalCode, DiskDiagram)>>,
    seen: &mut HashSet<CanonicalCode>,
    level: &mut Vec<DiskDiagram>,
) {
    for (code, d) in batches.into_iter().flatten() {
        if seen.insert(code) {
            level.push(d);
        }
    }
}

pub fn enumerate_diagrams(p: &Presentation, cfg: &EnumerationConfig) -> Result<Enumeration> {
    if p.relators().is_empty() {
        return Err(Error::Precondition("the complex has no 2-cells".into()));
    }
    if cfg.max_area == 0 {
        return Err(Error::Precondition("max_area must be at least 1".into()));
    }
    let reduced_ok = |d: &DiskDiagram| !cfg.require_reduced || d.is_reduced().is_ok();
    // levels[n]: disks up to isomorphism; units[n]: oriented units
    let mut levels: Vec<Vec<DiskDiagram>> = vec![Vec::new(); cfg.max_area + 1];
    let mut units: Vec<Vec<DiskDiagram>> = vec![Vec::new(); cfg.max_area + 1];
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut unit_seen: HashSet<CanonicalCode> = HashSet::new();
    for r in p.relators() {
        for w in [r.clone(), r.inverse()] {
            let d = cell_diagram(&w);
            if unit_seen.insert(d.oriented_code()) {
                units[1].push(d.clone());
            }
            if seen.insert(d.canonical_code()) {
                levels[1].push(d);
            }
        }
    }
    let mut total = levels[1].len() + units[1].len();
    for n in 2..=cfg.max_area {
        // units of area n: a unit of area n - a with a pocket filled by a disk of area a
        let jobs: Vec<(usize, usize)> = (1..n)
            .flat_map(|a| (0..levels[a].len()).map(move |i| (a, i)))
            .collect();
        let batches: Vec<Vec<(CanonicalCode, DiskDiagram)>> = jobs
            .par_iter()
            .map(|&(a, i)| {
                let pocket = &levels[a][i];
                let mut out = Vec::new();
                for u in &units[n - a] {
                    for g in gluings(u, pocket, Some(pocket.perimeter())) {
                        if g.is_reduced().is_ok() {
                            let m = g.mirror();
                            out.push((g.oriented_code(), g));
                            out.push((m.oriented_code(), m));
                        }
                    }
                }
                out
            })
            .collect();
        let mut new_units = Vec::new();
        merge(batches, &mut unit_seen, &mut new_units);
        units[n] = new_units;

        let jobs: Vec<(usize, usize)> = (1..n)
            .flat_map(|b| (0..levels[n - b].len()).map(move |i| (b, i)))
            .collect();
        let batches: Vec<Vec<(CanonicalCode, DiskDiagram)>> = jobs
            .par_iter()
            .map(|&(b, i)| {
                let base = &levels[n - b][i];
                let mut out = Vec::new();
                let mut local = HashSet::new();
                for u in &units[b] {
                    for g in gluings(base, u, None) {
                        if g.is_topological_disk() && reduced_ok(&g) {
                            let code = g.canonical_code();
                            if local.insert(code.clone()) {
                                out.push((code, g));
                            }
                        }
                    }
                }
                out
            })
            .collect();
        let mut level = Vec::new();
        merge(batches, &mut seen, &mut level);
        // units that are already disks are disks of area n too
        for u in &units[n] {
            if u.is_topological_disk() && reduced_ok(u) && seen.insert(u.canonical_code()) {
                level.push(u.clone());
            }
        }
        total += level.len() + units[n].len();
        if total > cfg.max_diagrams {
            return Err(Error::ResourceCap(format!(
                "{total} diagrams held at area {n} (cap {})",
                cfg.max_diagrams
            )));
        }
        levels[n] = level;
    }
    let mut by_area = levels;
    for level in by_area.iter_mut() {
        if let Some(maxp) = cfg.max_perimeter {
            level.retain(|d| d.perimeter() <= maxp);
        }
        if !cfg.up_to_iso {
            let extra: Vec<DiskDiagram> = level
                .iter()
                .map(DiskDiagram::mirror)
                .filter(|m| m.oriented_code() != m.mirror().oriented_code())
                .collect();
            level.extend(extra);
        }
    }
    Ok(Enumeration { by_area })
}
