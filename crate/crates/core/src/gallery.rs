//! Built-in presentations, their word-problem models, the figure diagram
//! families and the torus projection used by the corner-cell argument.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagram::{Dart, DiagramBuilder, DiskDiagram, FaceTag};
use crate::error::{Error, Result};
use crate::group::{FreeProductModel, GroupElement};
use crate::presentation::{presentation_complex, Presentation};
use crate::word::Letter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GalleryId {
    Thm1,
    Thm2,
    Eq1,
    Eq2,
    TorusT,
}

impl GalleryId {
    pub const ALL: [GalleryId; 5] =
        [GalleryId::Thm1, GalleryId::Thm2, GalleryId::Eq1, GalleryId::Eq2, GalleryId::TorusT];

    pub fn name(self) -> &'static str {
        match self {
            GalleryId::Thm1 => "thm1",
            GalleryId::Thm2 => "thm2",
            GalleryId::Eq1 => "eq1",
            GalleryId::Eq2 => "eq2",
            GalleryId::TorusT => "torusT",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            GalleryId::Thm1 => "Z^2 * F_4 with a pentagon (9) and a triangle (5); generalized Dehn with def-3 cutcells",
            GalleryId::Thm2 => "<a,b | [a,b]c, c> for Z^2; generalized Dehn with def-1 cutcells",
            GalleryId::Eq1 => "Z^2 * F_2 with two perimeter-5 cells; embedded cells",
            GalleryId::Eq2 => "Z^2 * F_4 with no big pieces",
            GalleryId::TorusT => "torus T, the quotient of thm1 collapsing a2 b2 c2 c3",
        }
    }
}

impl fmt::Display for GalleryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GalleryId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GalleryId::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown gallery id `{s}`")))
    }
}

fn lat(x: i64, y: i64) -> GroupElement {
    GroupElement::lattice(vec![x, y])
}

fn fr(letters: &[(u32, bool)]) -> GroupElement {
    GroupElement::free(letters.iter().map(|&(g, inv)| Letter::new(g, inv)).collect())
}

/// Commutators are `[x,y] = x^-1 y^-1 x y`.
pub fn presentation(id: GalleryId) -> (Presentation, FreeProductModel) {
    let (p, d, k, images) = match id {
        GalleryId::Thm2 => {
            let p = Presentation::from_strs(&["a", "b", "c"], &["ABabc", "c"]);
            (p, 2, 0, vec![lat(1, 0), lat(0, 1), GroupElement::identity()])
        }
        GalleryId::Thm1 | GalleryId::Eq2 => {
            let gens: &[&str] = if id == GalleryId::Thm1 {
                &["a1", "a2", "b1", "b2", "c1", "c2", "c3"]
            } else {
                &["a1", "a2", "b1", "b2", "c1", "c2", "c3", "d1", "d2"]
            };
            let rels: &[&str] = if id == GalleryId::Thm1 {
                &["a2b1b2A2A1B2c1c2c3", "A1b1c1c2c3"]
            } else {
                &["a2b1b2A2A1B2c1c2c3", "b1c1D1", "d1c2D2", "d2c3A1"]
            };
            // free basis f1..f4 = a2, b2, c2, c3; a = a1 a2 = e1, b = b1 b2 = e2
            let a1 = lat(1, 0).mul(&fr(&[(0, true)]));
            let b1 = lat(0, 1).mul(&fr(&[(1, true)]));
            let c1 = b1.inverse().mul(&a1).mul(&fr(&[(3, true), (2, true)]));
            let mut images = vec![a1, fr(&[(0, false)]), b1.clone(), fr(&[(1, false)]), c1.clone(), fr(&[(2, false)]), fr(&[(3, false)])];
            if id == GalleryId::Eq2 {
                let d1 = b1.mul(&c1);
                let d2 = d1.mul(&fr(&[(2, false)]));
                images.push(d1);
                images.push(d2);
            }
            (Presentation::from_strs(gens, rels), 2, 4, images)
        }
        GalleryId::Eq1 => {
            let p = Presentation::from_strs(&["a1", "b1", "c1", "c2", "c3"], &["b1A1c1c2c3", "A1b1c1c2c3"]);
            let c1 = lat(1, -1).mul(&fr(&[(1, true), (0, true)]));
            (p, 2, 2, vec![lat(1, 0), lat(0, 1), c1, fr(&[(0, false)]), fr(&[(1, false)])])
        }
        GalleryId::TorusT => {
            let p = Presentation::from_strs(&["a1", "b1", "c1"], &["b1A1c1", "A1b1c1"]);
            (p, 2, 0, vec![lat(1, 0), lat(0, 1), lat(1, -1)])
        }
    };
    let p = p.expect("gallery presentation parses");
    let m = FreeProductModel::new(&p, d, k, images).expect("gallery model kills every relator");
    (p, m)
}

/// Figure 1 (`fig = 1`, over thm2) or Figure 3 (`fig = 3`, over eq1) as an
/// `n` by `n` grid. Boundary `[x^n, y^n]` and area `2n^2` in both cases.
pub fn figure_diagram(fig: u8, n: usize) -> Result<DiskDiagram> {
    if n == 0 {
        return Err(Error::Precondition("grid size must be at least 1".into()));
    }
    let mut b = DiagramBuilder::new();
    let g = b.vertices((n + 1) * (n + 1));
    let at = |i: usize, j: usize| g[j * (n + 1) + i];
    let (a, bb) = (Letter::pos(0), Letter::pos(1));
    let mut horiz = vec![vec![0; n + 1]; n];
    let mut vert = vec![vec![0; n + 1]; n];
    for j in 0..=n {
        for i in 0..n {
            horiz[i][j] = b.edge(at(i, j), at(i + 1, j), a);
        }
    }
    for i in 0..=n {
        for j in 0..n {
            vert[j][i] = b.edge(at(i, j), at(i, j + 1), bb);
        }
    }
    for j in 0..n {
        for i in 0..n {
            let top = (horiz[i][j + 1], false);
            let left = (vert[j][i], false);
            let bottom = (horiz[i][j], true);
            let right = (vert[j][i + 1], true);
            match fig {
                1 => {
                    let v = at(i + 1, j + 1);
                    let c = b.edge(v, v, Letter::pos(2));
                    // ccw from the top-right corner: A B a b, then the loop
                    b.face(vec![top, left, bottom, right, (c, true)]);
                    b.face(vec![(c, false)]);
                }
                3 => {
                    let (m1, m2) = (b.vertex(), b.vertex());
                    let c1 = b.edge(at(i, j + 1), m1, Letter::pos(2));
                    let c2 = b.edge(m1, m2, Letter::pos(3));
                    let c3 = b.edge(m2, at(i + 1, j), Letter::pos(4));
                    b.face(vec![right, top, (c1, true), (c2, true), (c3, true)]);
                    b.face(vec![(c3, false), (c2, false), (c1, false), left, bottom]);
                }
                _ => return Err(Error::Precondition(format!("no figure {fig}"))),
            }
        }
    }
    b.build()
}

/// Face `R` of Figure 3: the upper-right triangle of the bottom-left square.
pub fn figure3_face_r() -> usize {
    0
}

/// Vertex images in `T~ = R^2` under the lattice projection of the model.
pub fn torus_coordinates(d: &DiskDiagram, m: &FreeProductModel) -> Result<Vec<(i64, i64)>> {
    if m.abelian_rank() != 2 {
        return Err(Error::WrongRank(m.abelian_rank()));
    }
    let base = d.outer_cycle().first().map(|&x| d.origin(x));
    let lift = d.vertex_lift(m, base)?;
    Ok(lift
        .iter()
        .map(|g| {
            let v = g.lattice_part(2);
            (v[0], v[1])
        })
        .collect())
}

/// Which lattice triangle a face of a thm1 diagram covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaceSquare {
    /// Bottom-left corner of the unit square.
    pub square: (i64, i64),
    /// Upper-right triangle (pentagon) or lower-left (triangle cell).
    pub upper_right: bool,
}

/// The local witness the corner-cell argument predicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CornerWitness {
    ShellAt(usize),
    StrongCutcellAt(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CornerClassification {
    pub corner: (i64, i64),
    pub face: usize,
    pub witness: CornerWitness,
}

impl CornerClassification {
    /// Confirm the prediction with the diagram's own detectors.
    pub fn confirmed(&self, d: &DiskDiagram) -> bool {
        match self.witness {
            CornerWitness::ShellAt(f) => d.is_shell(f),
            CornerWitness::StrongCutcellAt(f) => d.is_cutcell(f, 3),
        }
    }
}

/// Lattice triangles of the faces of a diagram over thm1.
pub fn face_squares(d: &DiskDiagram, p: &Presentation, m: &FreeProductModel) -> Result<Vec<Option<FaceSquare>>> {
    let coords = torus_coordinates(d, m)?;
    let tags = d.face_tags(&presentation_complex(p));
    Ok((0..d.num_faces())
        .map(|f| match tags[f] {
            Some(FaceTag::Inner { relator, .. }) => {
                let vs = d.face_vertices(f);
                let x = vs.iter().map(|&v| coords[v].0).min().unwrap_or(0);
                let y = vs.iter().map(|&v| coords[v].1).min().unwrap_or(0);
                Some(FaceSquare { square: (x, y), upper_right: relator == 0 })
            }
            _ => None,
        })
        .collect())
}

/// Locate the lowest-then-leftmost point `p` of the image in `T~`, pick a
/// face whose triangle contains it (pentagons first) and predict a shell at
/// a pentagon or a strong cutcell at the pentagon across a triangle's
/// `c1 c2 c3` side.
pub fn corner_classification(d: &DiskDiagram) -> Result<CornerClassification> {
    let (p, m) = presentation(GalleryId::Thm1);
    if d.area() < 2 {
        return Err(Error::Precondition("corner classification needs at least two cells".into()));
    }
    if !d.is_topological_disk() || d.is_reduced().is_err() {
        return Err(Error::Precondition("diagram must be a reduced topological disk".into()));
    }
    let report = d.validate(&presentation_complex(&p));
    if !report.is_valid() {
        return Err(Error::Precondition(report.issues.join("; ")));
    }
    let squares = face_squares(d, &p, &m)?;
    let bottom = |s: &FaceSquare| if s.upper_right { (s.square.0 + 1, s.square.1) } else { s.square };
    let corner = squares
        .iter()
        .flatten()
        .map(|s| {
            let (x, y) = bottom(s);
            (y, x)
        })
        .min()
        .map(|(y, x)| (x, y))
        .expect("area at least two");
    let pick = |upper_right: bool| {
        squares.iter().enumerate().find_map(|(f, s)| {
            s.filter(|s| s.upper_right == upper_right && bottom(s) == corner).map(|_| f)
        })
    };
    if let Some(f) = pick(true) {
        return Ok(CornerClassification { corner, face: f, witness: CornerWitness::ShellAt(f) });
    }
    let f = pick(false).expect("the corner is the bottom of some triangle");
    // Left and bottom sides of the corner triangle are free; a free c1 or
    // c3 side extends that run to three of five edges.
    let side = |name: &str| -> Dart {
        let g = p.generator_index(name).expect("thm1 generator");
        *d.face_cycle(f).iter().find(|&&x| d.label(x).gen == g).expect("triangle side")
    };
    let (c1, c3) = (side("c1"), side("c3"));
    let free = |x: Dart| d.is_outer_dart(d.opposite(x));
    let witness = if free(c1) || free(c3) {
        CornerWitness::ShellAt(f)
    } else {
        CornerWitness::StrongCutcellAt(d.face_of(d.opposite(c1)))
    };
    Ok(CornerClassification { corner, face: f, witness })
}
