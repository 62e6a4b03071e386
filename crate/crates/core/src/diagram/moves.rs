use crate::error::{Error, Result};

use super::{Dart, DiskDiagram};

impl DiskDiagram {
    /// Sub-map on the darts marked in `keep` (closed under `opposite`),
    /// with `inner` as its inner faces (cycles kept whole). The rotation is
    /// restricted to the kept darts and whatever is left over must form a
    /// single outer cycle.
    pub(crate) fn restrict(&self, keep: &[bool], inner: &[usize]) -> Result<DiskDiagram> {
        let n = self.num_darts();
        if !keep.iter().any(|&k| k) {
            return Ok(DiskDiagram::single_vertex());
        }
        let mut new_id = vec![u32::MAX; n];
        let mut old_id = Vec::new();
        for d in 0..n {
            if keep[d] {
                if !keep[self.opposite(d as Dart) as usize] {
                    return Err(Error::InvalidDiagram("kept dart set is not closed under opposite".into()));
                }
                new_id[d] = old_id.len() as u32;
                old_id.push(d as Dart);
            }
        }
        let sigma_r = |d: Dart| {
            let mut x = self.sigma(d);
            while !keep[x as usize] {
                x = self.sigma(x);
            }
            x
        };
        let mut in_inner = vec![false; n];
        let mut faces: Vec<Vec<Dart>> = Vec::new();
        for &f in inner {
            let cyc = self.face_cycle(f);
            if cyc.iter().any(|&d| !keep[d as usize]) {
                return Err(Error::InvalidDiagram(format!("face {f} is only partly kept")));
            }
            for &d in cyc {
                in_inner[d as usize] = true;
            }
            faces.push(cyc.iter().map(|&d| new_id[d as usize]).collect());
        }
        let mut seen = in_inner.clone();
        let mut outer_cycles = Vec::new();
        for &d in &old_id {
            if seen[d as usize] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = d;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cyc.push(new_id[x as usize]);
                x = sigma_r(self.opposite(x));
            }
            if x != d {
                return Err(Error::InvalidDiagram("restricted boundary is not a cycle".into()));
            }
            outer_cycles.push(cyc);
        }
        if outer_cycles.len() != 1 {
            return Err(Error::InvalidDiagram(format!("multiple outer faces ({})", outer_cycles.len())));
        }
        let outer = faces.len();
        faces.push(outer_cycles.pop().unwrap());
        let opposite = old_id.iter().map(|&d| new_id[self.opposite(d) as usize]).collect();
        let labels = old_id.iter().map(|&d| self.label(d)).collect();
        DiskDiagram::from_cycles(opposite, labels, faces, outer)
    }

    /// Delete the free arc of shell `f` together with its open cell.
    pub fn remove_shell(&self, f: usize) -> Result<DiskDiagram> {
        if f == self.outer_face() || f >= self.num_faces() {
            return Err(Error::NotAShell(f));
        }
        let k = self.face_cycle(f).len();
        let arc = self
            .free_arcs(f)
            .into_iter()
            .filter(|a| 2 * a.positions.len() > k)
            .max_by_key(|a| a.positions.len())
            .ok_or(Error::NotAShell(f))?;
        let mut positions = arc.positions;
        if arc.cyclic && k > 1 {
            positions.pop();
        }
        let mut keep = vec![true; self.num_darts()];
        for &i in &positions {
            let d = self.face_cycle(f)[i];
            keep[d as usize] = false;
            keep[self.opposite(d) as usize] = false;
        }
        let inner: Vec<usize> = self.inner_faces().filter(|&g| g != f).collect();
        self.restrict(&keep, &inner)
    }

    /// Delete the valence-1 vertex `v` and its edge.
    pub fn remove_spur(&self, v: usize) -> Result<DiskDiagram> {
        if v >= self.num_vertices() || self.degree(v) != 1 {
            return Err(Error::NotASpur(v));
        }
        let d = (0..self.num_darts() as Dart).find(|&d| self.origin(d) == v).ok_or(Error::NotASpur(v))?;
        let mut keep = vec![true; self.num_darts()];
        keep[d as usize] = false;
        keep[self.opposite(d) as usize] = false;
        let inner: Vec<usize> = self.inner_faces().collect();
        self.restrict(&keep, &inner)
    }

    /// The topological-disk subdiagram spanned by `faces` (a class of
    /// [`DiskDiagram::disk_pieces`]).
    pub fn subdiagram(&self, faces: &[usize]) -> Result<DiskDiagram> {
        let mut keep = vec![false; self.num_darts()];
        for &f in faces {
            for &d in self.face_cycle(f) {
                keep[d as usize] = true;
                keep[self.opposite(d) as usize] = true;
            }
        }
        self.restrict(&keep, faces)
    }

    /// Maximal subdiagrams that are topological disks.
    pub fn disk_pieces(&self) -> Vec<DiskDiagram> {
        self.disk_piece_classes()
            .iter()
            .filter_map(|c| self.subdiagram(c).ok())
            .collect()
    }

    /// Glue `other` to `self` along `len` boundary edges: outer dart
    /// `other.outer[s2 + j]` is identified with `self.outer[s1 + len - 1 - j]`
    /// (indices cyclic). The labels along the arc must cancel.
    pub fn glue(&self, s1: usize, other: &DiskDiagram, s2: usize, len: usize) -> Result<DiskDiagram> {
        let o1 = self.outer_cycle();
        let o2 = other.outer_cycle();
        let (p1, p2) = (o1.len(), o2.len());
        if len == 0 || len > p1 || len > p2 {
            return Err(Error::Precondition(format!("glue length {len} out of range")));
        }
        if p1 == len && p2 == len {
            return Err(Error::Precondition("gluing the whole boundaries closes a sphere".into()));
        }
        let n1 = self.num_darts() as Dart;
        let mut drop = vec![false; (n1 as usize) + other.num_darts()];
        let mut opposite: Vec<Dart> = self
            .opposites()
            .iter()
            .copied()
            .chain(other.opposites().iter().map(|&o| o + n1))
            .collect();
        for j in 0..len {
            let x1 = o1[(s1 + len - 1 - j) % p1];
            let x2 = o2[(s2 + j) % p2];
            if self.label(x1) != other.label(x2).inv() {
                return Err(Error::Precondition("arc labels do not cancel".into()));
            }
            let (y1, y2) = (self.opposite(x1), other.opposite(x2) + n1);
            opposite[y1 as usize] = y2;
            opposite[y2 as usize] = y1;
            drop[x1 as usize] = true;
            drop[(x2 + n1) as usize] = true;
        }
        let mut new_id = vec![u32::MAX; drop.len()];
        let mut count = 0u32;
        for (d, &dr) in drop.iter().enumerate() {
            if !dr {
                new_id[d] = count;
                count += 1;
            }
        }
        let remap = |d: Dart| new_id[d as usize];
        let labels = self
            .labels()
            .iter()
            .chain(other.labels().iter())
            .zip(&drop)
            .filter(|(_, &dr)| !dr)
            .map(|(&l, _)| l)
            .collect();
        let opposite = (0..drop.len())
            .filter(|&d| !drop[d])
            .map(|d| remap(opposite[d]))
            .collect();
        let mut faces: Vec<Vec<Dart>> = Vec::new();
        for f in self.inner_faces() {
            faces.push(self.face_cycle(f).iter().map(|&d| remap(d)).collect());
        }
        for f in other.inner_faces() {
            faces.push(other.face_cycle(f).iter().map(|&d| remap(d + n1)).collect());
        }
        let mut outer = Vec::with_capacity(p1 + p2 - 2 * len);
        outer.extend((len..p1).map(|i| remap(o1[(s1 + i) % p1])));
        outer.extend((len..p2).map(|i| remap(o2[(s2 + i) % p2] + n1)));
        let outer_idx = faces.len();
        faces.push(outer);
        let d = DiskDiagram::from_cycles(opposite, labels, faces, outer_idx)?;
        let report = d.validate_structure();
        if !report.is_valid() {
            return Err(Error::InvalidDiagram(report.issues.join("; ")));
        }
        Ok(d)
    }
}
