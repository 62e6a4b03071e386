//! Local feature detectors: spurs, shells, cutcells, reducibility.

use serde::Serialize;

use super::{Dart, DiskDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FeatureKind {
    Spur,
    Shell,
    /// Cutcell in the sense of definition 1, 2 or 3.
    Cutcell(u8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Site {
    Vertex(usize),
    Edge(Dart),
    Face(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeatureWitness {
    pub kind: FeatureKind,
    pub site: Site,
    /// Shell: the darts of the free arc of `∂R`, in face order.
    /// Spur: the single dart leaving the valence-1 vertex.
    /// Cutcell 1: one entry per component of `D - closure(R)` (its darts).
    /// Cutcell 2/3: one entry per component of the preimage of `∂R` on the
    /// boundary circle, as positions `2j` (corner before outer dart `j`) and
    /// `2j + 1` (outer dart `j`).
    pub detail: Vec<Vec<u32>>,
}

/// Two faces glued back to back across the edge of `dart`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReducibleWitness {
    pub faces: (usize, usize),
    pub dart: Dart,
}

/// A maximal run of consecutive darts of an inner face whose edges lie on
/// `∂_p D` and which `∂_p D` traverses contiguously.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FreeArc {
    /// Positions in the face cycle, in order.
    pub positions: Vec<usize>,
    /// The whole face boundary is one closed run.
    pub cyclic: bool,
}

impl DiskDiagram {
    /// `Ok(())` when no two adjacent faces are mirror copies of the same
    /// cell across a shared edge.
    pub fn is_reduced(&self) -> Result<(), ReducibleWitness> {
        for f in self.inner_faces() {
            let cyc = self.face_cycle(f);
            let k = cyc.len();
            for (i, &d) in cyc.iter().enumerate() {
                let o = self.opposite(d);
                let g = self.face_of(o);
                if g == self.outer_face() || g <= f {
                    continue;
                }
                let other = self.face_cycle(g);
                if other.len() != k {
                    continue;
                }
                let j = other.iter().position(|&x| x == o).expect("dart in its face");
                // g read from o must be f read backwards from d, inverted.
                let mirror = (0..k).all(|t| {
                    let a = self.label(other[(j + t) % k]);
                    let b = self.label(cyc[(i + k - t) % k]);
                    a == b.inv()
                });
                if mirror {
                    return Err(ReducibleWitness { faces: (f, g), dart: d });
                }
            }
        }
        Ok(())
    }

    pub fn find_spurs(&self) -> Vec<FeatureWitness> {
        let mut deg = vec![0usize; self.num_vertices()];
        let mut some_dart = vec![0 as Dart; self.num_vertices()];
        for d in 0..self.num_darts() as Dart {
            deg[self.origin(d)] += 1;
            some_dart[self.origin(d)] = d;
        }
        (0..self.num_vertices())
            .filter(|&v| deg[v] == 1)
            .map(|v| FeatureWitness {
                kind: FeatureKind::Spur,
                site: Site::Vertex(v),
                detail: vec![vec![some_dart[v]]],
            })
            .collect()
    }

    pub(crate) fn free_arcs(&self, f: usize) -> Vec<FreeArc> {
        let cyc = self.face_cycle(f);
        let k = cyc.len();
        let on_boundary: Vec<bool> = cyc.iter().map(|&d| self.is_outer_dart(self.opposite(d))).collect();
        // link[i]: the outer walk passes from the edge of cyc[i+1] directly
        // to the edge of cyc[i].
        let link: Vec<bool> = (0..k)
            .map(|i| {
                let j = (i + 1) % k;
                on_boundary[i]
                    && on_boundary[j]
                    && self.next(self.opposite(cyc[j])) == self.opposite(cyc[i])
            })
            .collect();
        if link.iter().all(|&l| l) {
            return vec![FreeArc { positions: (0..k).collect(), cyclic: true }];
        }
        let mut arcs = Vec::new();
        // start runs right after a broken link
        for s in 0..k {
            let prev = (s + k - 1) % k;
            if !on_boundary[s] || link[prev] {
                continue;
            }
            let mut positions = vec![s];
            let mut i = s;
            while link[i] {
                i = (i + 1) % k;
                positions.push(i);
            }
            arcs.push(FreeArc { positions, cyclic: false });
        }
        arcs
    }

    /// Faces with a free arc longer than half their perimeter.
    pub fn find_shells(&self) -> Vec<FeatureWitness> {
        let mut out = Vec::new();
        for f in self.inner_faces() {
            let k = self.face_cycle(f).len();
            if let Some(arc) = self
                .free_arcs(f)
                .into_iter()
                .filter(|a| 2 * a.positions.len() > k)
                .max_by_key(|a| a.positions.len())
            {
                let darts = arc.positions.iter().map(|&i| self.face_cycle(f)[i]).collect();
                out.push(FeatureWitness { kind: FeatureKind::Shell, site: Site::Face(f), detail: vec![darts] });
            }
        }
        out
    }

    pub fn is_shell(&self, f: usize) -> bool {
        self.find_shells().iter().any(|w| w.site == Site::Face(f))
    }

    /// Components of `D - closure(R)`, each given by the darts of its open
    /// edges (an open face or lone vertex contributes no darts of its own).
    pub fn complement_components(&self, f: usize) -> Vec<Vec<u32>> {
        let nv = self.num_vertices();
        let nd = self.num_darts();
        let nf = self.num_faces();
        let mut in_closure_v = vec![false; nv];
        let mut in_closure_e = vec![false; nd];
        for &d in self.face_cycle(f) {
            in_closure_v[self.origin(d)] = true;
            in_closure_e[d as usize] = true;
            in_closure_e[self.opposite(d) as usize] = true;
        }
        // element ids: vertices 0..nv, edges (by dart) nv..nv+nd, faces after
        let total = nv + nd + nf;
        let mut uf = UnionFind::new(total);
        let mut present = vec![false; total];
        for v in 0..nv {
            present[v] = !in_closure_v[v];
        }
        for d in 0..nd {
            present[nv + d] = !in_closure_e[d];
        }
        for g in self.inner_faces() {
            present[nv + nd + g] = g != f;
        }
        for d in 0..nd as Dart {
            let e = nv + d as usize;
            if !present[e] {
                continue;
            }
            uf.union(e, nv + self.opposite(d) as usize);
            if present[self.origin(d)] {
                uf.union(e, self.origin(d));
            }
            let g = self.face_of(d);
            if present[nv + nd + g] {
                uf.union(e, nv + nd + g);
            }
        }
        for g in self.inner_faces().filter(|&g| g != f) {
            for &d in self.face_cycle(g) {
                if present[self.origin(d)] {
                    uf.union(nv + nd + g, self.origin(d));
                }
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut comps: Vec<Vec<u32>> = Vec::new();
        for x in 0..total {
            if !present[x] {
                continue;
            }
            let r = uf.find(x);
            let idx = match roots.iter().position(|&y| y == r) {
                Some(i) => i,
                None => {
                    roots.push(r);
                    comps.push(Vec::new());
                    roots.len() - 1
                }
            };
            if (nv..nv + nd).contains(&x) {
                comps[idx].push((x - nv) as u32);
            }
        }
        comps
    }

    /// Components of the preimage of `∂R` on the boundary circle.
    pub fn boundary_preimage_components(&self, f: usize) -> Vec<Vec<u32>> {
        let outer = self.outer_cycle();
        let p = outer.len();
        if p == 0 {
            return Vec::new();
        }
        let face_verts: Vec<usize> = self.face_vertices(f);
        // circle positions: 2j = corner at origin of outer[j], 2j+1 = edge of outer[j]
        let member: Vec<bool> = (0..2 * p)
            .map(|pos| {
                let d = outer[pos / 2];
                if pos % 2 == 0 {
                    face_verts.contains(&self.origin(d))
                } else {
                    self.face_of(self.opposite(d)) == f
                }
            })
            .collect();
        if member.iter().all(|&m| m) {
            return vec![(0..2 * p as u32).collect()];
        }
        let n = 2 * p;
        let mut comps = Vec::new();
        for s in 0..n {
            if !member[s] || member[(s + n - 1) % n] {
                continue;
            }
            let mut comp = Vec::new();
            let mut i = s;
            while member[i] {
                comp.push(i as u32);
                i = (i + 1) % n;
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_cutcell(&self, f: usize, def: u8) -> bool {
        self.cutcell_witness(f, def).is_some()
    }

    fn cutcell_witness(&self, f: usize, def: u8) -> Option<FeatureWitness> {
        let detail = match def {
            1 => {
                let comps = self.complement_components(f);
                (comps.len() > 1).then_some(comps)?
            }
            2 | 3 => {
                let comps = self.boundary_preimage_components(f);
                let ok = comps.len() > 1 && (def == 2 || comps.iter().all(|c| c.iter().any(|&x| x % 2 == 1)));
                ok.then_some(comps)?
            }
            _ => return None,
        };
        Some(FeatureWitness { kind: FeatureKind::Cutcell(def), site: Site::Face(f), detail })
    }

    pub fn find_cutcells(&self, def: u8) -> Vec<FeatureWitness> {
        self.inner_faces().filter_map(|f| self.cutcell_witness(f, def)).collect()
    }

    /// A closed 2-cell: at least one face, no 1-dimensional parts and a
    /// simple boundary circuit.
    pub fn is_topological_disk(&self) -> bool {
        if self.area() == 0 {
            return false;
        }
        let outer = self.outer_cycle();
        if outer.iter().any(|&d| self.is_outer_dart(self.opposite(d))) {
            return false;
        }
        let mut seen = vec![false; self.num_vertices()];
        outer.iter().all(|&d| !std::mem::replace(&mut seen[self.origin(d)], true))
    }

    /// Face classes joined across interior edges: the maximal
    /// topological-disk subdiagrams.
    pub(crate) fn disk_piece_classes(&self) -> Vec<Vec<usize>> {
        let nf = self.num_faces();
        let mut uf = UnionFind::new(nf);
        for f in self.inner_faces() {
            for &d in self.face_cycle(f) {
                let g = self.face_of(self.opposite(d));
                if g != self.outer_face() {
                    uf.union(f, g);
                }
            }
        }
        let mut classes: Vec<(usize, Vec<usize>)> = Vec::new();
        for f in self.inner_faces() {
            let r = uf.find(f);
            match classes.iter_mut().find(|(root, _)| *root == r) {
                Some((_, v)) => v.push(f),
                None => classes.push((r, vec![f])),
            }
        }
        classes.into_iter().map(|(_, v)| v).collect()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let n = self.parent[y];
            self.parent[y] = r;
            y = n;
        }
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
