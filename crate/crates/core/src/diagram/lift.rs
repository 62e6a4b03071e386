use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::{FreeProductModel, GroupElement};

use super::DiskDiagram;

impl DiskDiagram {
    /// Group element at every vertex, with vertex `base` (default: origin
    /// of the first outer dart) at the identity and each dart multiplying
    /// by the image of its label. Fails if two paths disagree.
    pub fn vertex_lift(&self, m: &FreeProductModel, base: Option<usize>) -> Result<Vec<GroupElement>> {
        let nv = self.num_vertices();
        let mut lift: Vec<Option<GroupElement>> = vec![None; nv];
        if self.num_darts() == 0 {
            return Ok(vec![GroupElement::identity()]);
        }
        let base = base.unwrap_or_else(|| self.origin(self.outer_cycle()[0]));
        if base >= nv {
            return Err(Error::Precondition(format!("base vertex {base} out of range")));
        }
        let mut out_darts: Vec<Vec<u32>> = vec![Vec::new(); nv];
        for d in 0..self.num_darts() as u32 {
            out_darts[self.origin(d)].push(d);
        }
        lift[base] = Some(GroupElement::identity());
        let mut queue = VecDeque::from([base]);
        while let Some(v) = queue.pop_front() {
            let here = lift[v].clone().expect("queued vertices are lifted");
            for &d in &out_darts[v] {
                let there = here.mul(&m.letter_image(self.label(d))?);
                let h = self.head(d);
                match &lift[h] {
                    None => {
                        lift[h] = Some(there);
                        queue.push_back(h);
                    }
                    Some(existing) if *existing != there => {
                        return Err(Error::InconsistentLift(format!(
                            "vertex {h} reached as {existing} and as {there}"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        lift.into_iter()
            .enumerate()
            .map(|(v, g)| g.ok_or_else(|| Error::InvalidDiagram(format!("vertex {v} unreachable"))))
            .collect()
    }
}
