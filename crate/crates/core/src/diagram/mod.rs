//! Disk diagrams as combinatorial maps.
//!
//! A diagram is a set of darts (half-edges) with a fixed-point-free
//! involution `opposite` and a partition of the darts into face cycles.
//! Each face cycle lists darts with the face on their left, so an inner face
//! reads its relator (or the inverse) along its cycle and the outer face
//! `R_inf` runs around the diagram the other way. The rotation system is
//! derived from the cycles: `sigma[opposite[d]] = next[d]`, and vertices are
//! the orbits of `sigma`.
//!
//! The single-vertex diagram has no darts and an empty outer cycle.

mod builder;
mod canon;
mod features;
mod io;
mod lift;
mod moves;

pub use builder::DiagramBuilder;
pub use canon::CanonicalCode;
pub use features::{FeatureKind, FeatureWitness, ReducibleWitness, Site};
pub use io::{DiagramJson, DotOptions};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::TwoComplex;
use crate::word::{CyclicWord, Letter, Word};

pub type Dart = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskDiagram {
    opposite: Vec<Dart>,
    labels: Vec<Letter>,
    faces: Vec<Vec<Dart>>,
    outer: usize,
    // derived
    next: Vec<Dart>,
    sigma: Vec<Dart>,
    face_of: Vec<u32>,
    origin: Vec<u32>,
    num_vertices: usize,
}

/// Which cell of the target complex an inner face maps to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FaceTag {
    Outer,
    Inner {
        relator: usize,
        /// The face reads the inverse relator.
        inverted: bool,
        /// Position in the face cycle where the relator starts.
        offset: usize,
    },
}

/// Boundary circuit `∂_p D`, read with the inner faces' orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryPath {
    /// Darts traversed along the boundary; consecutive darts meet head to
    /// origin. These are the opposites of the outer cycle, in reverse.
    pub darts: Vec<Dart>,
    pub word: Word,
}

impl BoundaryPath {
    pub fn perimeter(&self) -> usize {
        self.darts.len()
    }

    pub fn cyclic_word(&self) -> CyclicWord {
        CyclicWord::new(&self.word)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub issues: Vec<String>,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

impl DiskDiagram {
    /// The diagram consisting of one vertex.
    pub fn single_vertex() -> Self {
        DiskDiagram::from_cycles(Vec::new(), Vec::new(), vec![Vec::new()], 0)
            .expect("single vertex is well formed")
    }

    /// Assemble from face cycles. Checks only the combinatorial-map
    /// structure (involution, labels, partition); planarity and relator
    /// matching are left to [`DiskDiagram::validate`].
    pub fn from_cycles(
        opposite: Vec<Dart>,
        labels: Vec<Letter>,
        faces: Vec<Vec<Dart>>,
        outer: usize,
    ) -> Result<Self> {
        let n = opposite.len();
        if labels.len() != n {
            return Err(Error::InvalidDiagram("label count differs from dart count".into()));
        }
        if outer >= faces.len() {
            return Err(Error::InvalidDiagram("outer face index out of range".into()));
        }
        for (d, &o) in opposite.iter().enumerate() {
            if o as usize >= n || o as usize == d || opposite[o as usize] as usize != d {
                return Err(Error::InvalidDiagram(format!("opposite is not an involution at {d}")));
            }
            if labels[o as usize] != labels[d].inv() {
                return Err(Error::InvalidDiagram(format!("dart {d} and its opposite are not inverse labels")));
            }
        }
        let mut next = vec![u32::MAX; n];
        let mut face_of = vec![u32::MAX; n];
        for (f, cyc) in faces.iter().enumerate() {
            if cyc.is_empty() && n > 0 {
                return Err(Error::InvalidDiagram(format!("face {f} has an empty cycle")));
            }
            for (i, &d) in cyc.iter().enumerate() {
                let d = d as usize;
                if d >= n || face_of[d] != u32::MAX {
                    return Err(Error::InvalidDiagram(format!("dart {d} repeated or out of range")));
                }
                face_of[d] = f as u32;
                next[d] = cyc[(i + 1) % cyc.len()];
            }
        }
        if face_of.contains(&u32::MAX) {
            return Err(Error::InvalidDiagram("some dart lies in no face".into()));
        }
        let mut sigma = vec![0; n];
        for d in 0..n {
            sigma[opposite[d] as usize] = next[d];
        }
        let mut origin = vec![u32::MAX; n];
        let mut nv = 0u32;
        for d in 0..n {
            if origin[d] != u32::MAX {
                continue;
            }
            let mut x = d;
            while origin[x] == u32::MAX {
                origin[x] = nv;
                x = sigma[x] as usize;
            }
            nv += 1;
        }
        let num_vertices = if n == 0 { 1 } else { nv as usize };
        Ok(DiskDiagram { opposite, labels, faces, outer, next, sigma, face_of, origin, num_vertices })
    }

    /// Rebuild from a rotation system (`next[d] = sigma[opposite[d]]`).
    pub fn from_rotation(
        opposite: Vec<Dart>,
        sigma: Vec<Dart>,
        labels: Vec<Letter>,
        outer_dart: Option<Dart>,
    ) -> Result<Self> {
        let n = opposite.len();
        if sigma.len() != n {
            return Err(Error::InvalidDiagram("sigma length differs from dart count".into()));
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s as usize >= n || std::mem::replace(&mut seen[s as usize], true) {
                return Err(Error::InvalidDiagram("sigma is not a permutation".into()));
            }
        }
        if opposite.iter().any(|&o| o as usize >= n) {
            return Err(Error::InvalidDiagram("opposite out of range".into()));
        }
        if n == 0 {
            return Ok(DiskDiagram::single_vertex());
        }
        let outer_dart = outer_dart
            .filter(|&d| (d as usize) < n)
            .ok_or_else(|| Error::InvalidDiagram("missing outer face dart".into()))?;
        let next: Vec<Dart> = (0..n).map(|d| sigma[opposite[d] as usize]).collect();
        let mut faces = Vec::new();
        let mut assigned = vec![false; n];
        let mut outer = 0;
        for d in 0..n {
            if assigned[d] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = d;
            while !assigned[x] {
                assigned[x] = true;
                cyc.push(x as Dart);
                x = next[x] as usize;
            }
            if cyc.contains(&outer_dart) {
                outer = faces.len();
            }
            faces.push(cyc);
        }
        DiskDiagram::from_cycles(opposite, labels, faces, outer)
    }

    pub fn num_darts(&self) -> usize {
        self.opposite.len()
    }

    pub fn num_edges(&self) -> usize {
        self.opposite.len() / 2
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Faces including the outer one.
    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Number of 2-cells (inner faces).
    pub fn area(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn perimeter(&self) -> usize {
        self.faces[self.outer].len()
    }

    pub fn outer_face(&self) -> usize {
        self.outer
    }

    pub fn inner_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(move |&f| f != self.outer)
    }

    pub fn face_cycle(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    pub fn face_cycles(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn outer_cycle(&self) -> &[Dart] {
        &self.faces[self.outer]
    }

    pub fn opposite(&self, d: Dart) -> Dart {
        self.opposite[d as usize]
    }

    pub fn opposites(&self) -> &[Dart] {
        &self.opposite
    }

    pub fn next(&self, d: Dart) -> Dart {
        self.next[d as usize]
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d as usize]
    }

    pub fn sigmas(&self) -> &[Dart] {
        &self.sigma
    }

    pub fn label(&self, d: Dart) -> Letter {
        self.labels[d as usize]
    }

    pub fn labels(&self) -> &[Letter] {
        &self.labels
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d as usize] as usize
    }

    pub fn is_outer_dart(&self, d: Dart) -> bool {
        self.face_of(d) == self.outer
    }

    pub fn origin(&self, d: Dart) -> usize {
        self.origin[d as usize] as usize
    }

    pub fn head(&self, d: Dart) -> usize {
        self.origin(self.opposite(d))
    }

    /// Darts leaving vertex `v`, in rotation order.
    pub fn darts_at(&self, v: usize) -> Vec<Dart> {
        let Some(start) = (0..self.num_darts()).find(|&d| self.origin[d] as usize == v) else {
            return Vec::new();
        };
        let mut out = vec![start as Dart];
        let mut x = self.sigma[start];
        while x as usize != start {
            out.push(x);
            x = self.sigma[x as usize];
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.origin.iter().filter(|&&o| o as usize == v).count()
    }

    pub fn face_word(&self, f: usize) -> Word {
        self.faces[f].iter().map(|&d| self.labels[d as usize]).collect()
    }

    /// Vertices visited by face `f`, in cycle order (with repeats).
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&d| self.origin(d)).collect()
    }

    pub fn boundary_path(&self) -> BoundaryPath {
        let darts: Vec<Dart> = self.faces[self.outer]
            .iter()
            .rev()
            .map(|&d| self.opposite(d))
            .collect();
        let word = darts.iter().map(|&d| self.labels[d as usize]).collect();
        BoundaryPath { darts, word }
    }

    pub fn boundary_word(&self) -> Word {
        self.boundary_path().word
    }

    fn connected(&self) -> bool {
        let n = self.num_darts();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for e in [self.next[d] as usize, self.opposite[d] as usize] {
                if !seen[e] {
                    seen[e] = true;
                    count += 1;
                    stack.push(e);
                }
            }
        }
        count == n
    }

    /// Match each inner face against the complex's face words (up to
    /// rotation and inversion).
    pub fn face_tags(&self, x: &TwoComplex) -> Vec<Option<FaceTag>> {
        let relators: Vec<Word> = (0..x.faces.len()).map(|f| x.face_word(f)).collect();
        (0..self.faces.len())
            .map(|f| {
                if f == self.outer {
                    return Some(FaceTag::Outer);
                }
                let w = self.face_word(f);
                for (i, r) in relators.iter().enumerate() {
                    if r.len() != w.len() {
                        continue;
                    }
                    let rinv = r.inverse();
                    for off in 0..w.len() {
                        let rot = w.rotated(off);
                        if rot == *r {
                            return Some(FaceTag::Inner { relator: i, inverted: false, offset: off });
                        }
                        if rot == rinv {
                            return Some(FaceTag::Inner { relator: i, inverted: true, offset: off });
                        }
                    }
                }
                None
            })
            .collect()
    }

    /// Check every defining condition of a disk diagram over `x`.
    pub fn validate(&self, x: &TwoComplex) -> ValidationReport {
        let mut report = self.validate_structure();
        for (f, tag) in self.face_tags(x).iter().enumerate() {
            if tag.is_none() {
                report.issues.push(format!("face {f} does not read a relator"));
            }
        }
        report
    }

    /// Structural checks that do not need the target complex.
    pub fn validate_structure(&self) -> ValidationReport {
        let mut issues = Vec::new();
        let n = self.num_darts();
        for d in 0..n {
            let o = self.opposite[d] as usize;
            if o == d || self.opposite[o] as usize != d {
                issues.push(format!("opposite is not a fixed-point-free involution at {d}"));
                break;
            }
            if self.labels[o] != self.labels[d].inv() {
                issues.push(format!("dart {d} and its opposite carry non-inverse labels"));
                break;
            }
        }
        if !self.connected() {
            issues.push("underlying graph is disconnected".into());
        }
        let report = ValidationReport {
            issues: Vec::new(),
            vertices: self.num_vertices,
            edges: self.num_edges(),
            faces: self.faces.len(),
        };
        if report.euler_characteristic() != 2 {
            issues.push(format!(
                "Euler count V-E+F = {} (expected 2)",
                report.euler_characteristic()
            ));
        }
        ValidationReport { issues, ..report }
    }

    pub fn is_valid(&self, x: &TwoComplex) -> bool {
        self.validate(x).is_valid()
    }

    /// Same map with every face cycle reversed (orientation reversal).
    pub fn mirror(&self) -> DiskDiagram {
        let faces = self
            .faces
            .iter()
            .map(|c| c.iter().rev().map(|&d| self.opposite(d)).collect())
            .collect();
        DiskDiagram::from_cycles(self.opposite.clone(), self.labels.clone(), faces, self.outer)
            .expect("mirror of a well-formed map is well formed")
    }
}

#[cfg(test)]
mod tests;
