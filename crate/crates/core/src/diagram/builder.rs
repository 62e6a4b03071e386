use crate::error::{Error, Result};
use crate::word::Letter;

use super::{Dart, DiskDiagram};

/// Assemble a diagram from labelled edges and counterclockwise face
/// boundaries; the outer face is whatever is left over.
///
/// Edge `e` owns darts `2e` (tail to head, carrying the edge label) and
/// `2e + 1`. Where a vertex meets several fans of faces (or bare edges), the
/// fans are arranged around it in edge insertion order.
#[derive(Clone, Debug, Default)]
pub struct DiagramBuilder {
    vertices: usize,
    edges: Vec<(usize, usize, Letter)>,
    faces: Vec<Vec<(usize, bool)>>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self) -> usize {
        self.vertices += 1;
        self.vertices - 1
    }

    pub fn vertices(&mut self, n: usize) -> Vec<usize> {
        (0..n).map(|_| self.vertex()).collect()
    }

    pub fn edge(&mut self, tail: usize, head: usize, label: Letter) -> usize {
        self.vertices = self.vertices.max(tail + 1).max(head + 1);
        self.edges.push((tail, head, label));
        self.edges.len() - 1
    }

    /// Face boundary as `(edge, forward)` steps with the face on the left.
    pub fn face(&mut self, steps: Vec<(usize, bool)>) -> usize {
        self.faces.push(steps);
        self.faces.len() - 1
    }

    /// Add a face whose boundary visits `verts` in order, reusing an edge
    /// between consecutive vertices when one with a matching label exists.
    pub fn polygon(&mut self, verts: &[usize], word: &[Letter]) -> usize {
        assert_eq!(verts.len(), word.len());
        let k = verts.len();
        let mut steps = Vec::with_capacity(k);
        for i in 0..k {
            let (u, v, l) = (verts[i], verts[(i + 1) % k], word[i]);
            let existing = self.edges.iter().position(|&(t, h, lab)| {
                (t, h, lab) == (u, v, l) || (t, h, lab.inv()) == (v, u, l)
            });
            let step = match existing {
                Some(e) if self.edges[e].0 == u && self.edges[e].2 == l => (e, true),
                Some(e) => (e, false),
                None => (self.edge(u, v, l), true),
            };
            steps.push(step);
        }
        self.face(steps)
    }

    pub fn build(&self) -> Result<DiskDiagram> {
        let nd = 2 * self.edges.len();
        if nd == 0 {
            return Ok(DiskDiagram::single_vertex());
        }
        let mut opposite = vec![0 as Dart; nd];
        let mut labels = Vec::with_capacity(nd);
        let mut origin = vec![0usize; nd];
        for (e, &(t, h, l)) in self.edges.iter().enumerate() {
            opposite[2 * e] = (2 * e + 1) as Dart;
            opposite[2 * e + 1] = (2 * e) as Dart;
            labels.push(l);
            labels.push(l.inv());
            origin[2 * e] = t;
            origin[2 * e + 1] = h;
        }
        let dart = |(e, fwd): (usize, bool)| (2 * e + usize::from(!fwd)) as Dart;
        let mut used = vec![false; nd];
        let mut cycles: Vec<Vec<Dart>> = Vec::new();
        let mut sigma: Vec<Option<Dart>> = vec![None; nd];
        for steps in &self.faces {
            let cyc: Vec<Dart> = steps.iter().map(|&s| dart(s)).collect();
            for (i, &d) in cyc.iter().enumerate() {
                if std::mem::replace(&mut used[d as usize], true) {
                    return Err(Error::InvalidDiagram(format!("dart {d} used by two faces")));
                }
                let nx = cyc[(i + 1) % cyc.len()];
                if origin[nx as usize] != origin[opposite[d as usize] as usize] {
                    return Err(Error::InvalidDiagram("face boundary is not a closed path".into()));
                }
                sigma[opposite[d as usize] as usize] = Some(nx);
            }
            cycles.push(cyc);
        }
        // Close the rotation at each vertex by chaining the open fans.
        let mut has_pred = vec![false; nd];
        for s in sigma.iter().flatten() {
            has_pred[*s as usize] = true;
        }
        for v in 0..self.vertices {
            let at_v: Vec<usize> = (0..nd).filter(|&d| origin[d] == v).collect();
            let starts: Vec<usize> = at_v.iter().copied().filter(|&d| !has_pred[d]).collect();
            let mut chains: Vec<(usize, usize)> = Vec::new();
            for &s in &starts {
                let mut end = s;
                while let Some(n) = sigma[end] {
                    end = n as usize;
                }
                chains.push((s, end));
            }
            for i in 0..chains.len() {
                let (_, end) = chains[i];
                let (start_next, _) = chains[(i + 1) % chains.len()];
                sigma[end] = Some(start_next as Dart);
            }
        }
        let sigma: Vec<Dart> = sigma
            .into_iter()
            .map(|s| s.ok_or_else(|| Error::InvalidDiagram("rotation has a closed fan with a gap".into())))
            .collect::<Result<_>>()?;
        let mut outer_cycles = Vec::new();
        let mut seen = used.clone();
        for d in 0..nd {
            if seen[d] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as Dart);
                x = sigma[opposite[x] as usize] as usize;
            }
            outer_cycles.push(cyc);
        }
        match outer_cycles.len() {
            0 => return Err(Error::InvalidDiagram("no outer face (closed surface)".into())),
            1 => {}
            k => return Err(Error::InvalidDiagram(format!("multiple outer faces ({k})"))),
        }
        let outer = cycles.len();
        cycles.push(outer_cycles.pop().unwrap());
        DiskDiagram::from_cycles(opposite, labels, cycles, outer)
    }
}
