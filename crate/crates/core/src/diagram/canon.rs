use super::{Dart, DiskDiagram};

/// Isomorphism invariant of a diagram (complete for connected maps):
/// the lexicographically least traversal code over every outer starting
/// dart and both orientations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u32>);

impl DiskDiagram {
    pub fn canonical_code(&self) -> CanonicalCode {
        let a = self.oriented_code();
        let b = self.mirror().oriented_code();
        a.min(b)
    }

    /// Least code over starting darts without quotienting by mirror image.
    pub fn oriented_code(&self) -> CanonicalCode {
        let mut best: Option<Vec<u32>> = None;
        for &s in self.outer_cycle() {
            let code = self.code_from(s, best.as_deref());
            if let Some(c) = code {
                best = Some(c);
            }
        }
        CanonicalCode(best.unwrap_or_default())
    }

    /// Traversal code from `start`; returns `None` as soon as the code is
    /// known to exceed `bound`.
    fn code_from(&self, start: Dart, bound: Option<&[u32]>) -> Option<Vec<u32>> {
        let n = self.num_darts();
        let mut index = vec![u32::MAX; n];
        let mut order: Vec<Dart> = Vec::with_capacity(n);
        index[start as usize] = 0;
        order.push(start);
        let mut code = Vec::with_capacity(4 * n);
        let mut less = false;
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            let visit = |e: Dart, index: &mut Vec<u32>, order: &mut Vec<Dart>| -> u32 {
                if index[e as usize] == u32::MAX {
                    index[e as usize] = order.len() as u32;
                    order.push(e);
                }
                index[e as usize]
            };
            let nx = visit(self.next(d), &mut index, &mut order);
            let op = visit(self.opposite(d), &mut index, &mut order);
            let entry = [nx, op, self.label(d).code(), u32::from(self.is_outer_dart(d))];
            for v in entry {
                if !less {
                    if let Some(b) = bound {
                        let pos = code.len();
                        match v.cmp(&b[pos]) {
                            std::cmp::Ordering::Less => less = true,
                            std::cmp::Ordering::Greater => return None,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
                code.push(v);
            }
            i += 1;
        }
        if bound.is_some() && !less {
            return None;
        }
        Some(code)
    }

    pub fn is_isomorphic(&self, other: &DiskDiagram) -> bool {
        self.num_darts() == other.num_darts()
            && self.area() == other.area()
            && self.canonical_code() == other.canonical_code()
    }
}
