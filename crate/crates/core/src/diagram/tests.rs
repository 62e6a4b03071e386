use super::*;
use crate::enumerate::cell_diagram;
use crate::error::Error;
use crate::gallery::{figure_diagram, presentation, GalleryId};
use crate::presentation::{presentation_complex, Presentation};

fn thm2() -> Presentation {
    presentation(GalleryId::Thm2).0
}

fn word(p: &Presentation, s: &str) -> Word {
    p.parse_word(s).unwrap()
}

/// `[a,b]c` with its `c` loop filled by the monogon: boundary `[a,b]`.
fn pentagon_with_monogon() -> DiskDiagram {
    let p = thm2();
    let pent = cell_diagram(&word(&p, "ABabc"));
    let mono = cell_diagram(&word(&p, "C"));
    let o = pent.outer_cycle();
    let s = (0..o.len()).find(|&i| pent.label(o[i]).gen == 2).unwrap();
    pent.glue(s, &mono, 0, 1).unwrap()
}

fn single_edge() -> DiskDiagram {
    let mut b = DiagramBuilder::new();
    b.edge(0, 1, Letter::pos(0));
    b.build().unwrap()
}

#[test]
fn single_pentagon_counts() {
    let p = thm2();
    let d = cell_diagram(&word(&p, "ABabc"));
    let r = d.validate(&presentation_complex(&p));
    assert!(r.is_valid(), "{:?}", r.issues);
    assert_eq!((r.vertices, r.edges, r.faces), (5, 5, 2));
    assert_eq!(d.boundary_path().cyclic_word(), CyclicWord::new(&word(&p, "ABabc")));
    assert_eq!(d.perimeter(), 5);
    assert!(d.is_reduced().is_ok());
    assert!(d.is_topological_disk());
}

#[test]
fn figure_one_boundary_and_faces() {
    let p = thm2();
    let d = figure_diagram(1, 2).unwrap();
    assert!(d.is_valid(&presentation_complex(&p)));
    assert_eq!(d.area(), 8);
    let target = CyclicWord::new(&word(&p, "aabbAABB"));
    assert_eq!(d.boundary_path().cyclic_word(), target);
    assert!(d.is_reduced().is_ok());
    assert!(d.is_topological_disk());
    assert!(d.find_spurs().is_empty());
}

#[test]
fn disconnected_faces_have_multiple_outer_faces() {
    let mut b = DiagramBuilder::new();
    let v = b.vertices(2);
    let x = b.edge(v[0], v[0], Letter::pos(2));
    let y = b.edge(v[1], v[1], Letter::pos(2));
    b.face(vec![(x, true)]);
    b.face(vec![(y, true)]);
    let err = b.build().unwrap_err();
    assert!(err.to_string().contains("multiple outer faces"), "{err}");
}

#[test]
fn back_to_back_pentagons_are_not_reduced() {
    let p = thm2();
    let r = word(&p, "ABabc");
    let pent = cell_diagram(&r);
    let mirror = cell_diagram(&r.inverse());
    let o1 = pent.outer_cycle();
    let s1 = (0..o1.len()).find(|&i| pent.label(o1[i]) == Letter::pos(0)).unwrap();
    let o2 = mirror.outer_cycle();
    let s2 = (0..o2.len()).find(|&i| mirror.label(o2[i]) == Letter::neg(0)).unwrap();
    let d = pent.glue(s1, &mirror, s2, 1).unwrap();
    let w = d.is_reduced().unwrap_err();
    assert_ne!(w.faces.0, w.faces.1);
    assert_eq!(d.label(w.dart).gen, 0);
}

#[test]
fn single_edge_has_two_spurs() {
    let d = single_edge();
    assert_eq!(d.find_spurs().len(), 2);
    let s = d.remove_spur(0).unwrap();
    assert_eq!(s.num_darts(), 0);
    assert_eq!(s.num_vertices(), 1);
}

#[test]
fn path_of_two_edges_loses_one() {
    let mut b = DiagramBuilder::new();
    b.edge(0, 1, Letter::pos(0));
    b.edge(1, 2, Letter::pos(1));
    let d = b.build().unwrap();
    assert_eq!(d.perimeter(), 4);
    let end = (0..d.num_vertices()).find(|&v| d.degree(v) == 1).unwrap();
    let s = d.remove_spur(end).unwrap();
    assert_eq!(s.num_edges(), 1);
    assert_eq!(s.perimeter(), 2);
    assert!(matches!(d.remove_spur(1), Err(Error::NotASpur(1))));
}

#[test]
fn pentagon_around_monogon_is_a_shell() {
    let d = pentagon_with_monogon();
    let p = thm2();
    assert_eq!(d.area(), 2);
    assert_eq!(d.boundary_path().cyclic_word(), CyclicWord::new(&word(&p, "ABab")));
    let shells = d.find_shells();
    assert_eq!(shells.len(), 1);
    let pent = shells[0].site;
    let Site::Face(f) = pent else { panic!("shell site is a face") };
    assert_eq!(d.face_word(f).len(), 5);
    assert_eq!(shells[0].detail[0].len(), 4);
    let rest = d.remove_shell(f).unwrap();
    assert_eq!(rest.area(), 1);
    assert_eq!(rest.perimeter(), 1);
    assert!(rest.is_valid(&presentation_complex(&p)));
}

#[test]
fn single_cell_shell_leaves_an_arc() {
    let p = thm2();
    let d = cell_diagram(&word(&p, "ABabc"));
    let rest = d.remove_shell(0).unwrap();
    assert_eq!(rest.area(), 0);
    assert_eq!(rest.num_edges(), 1);
    assert!(rest.validate_structure().is_valid());
}

#[test]
fn figure_one_has_no_shell_to_remove() {
    let d = figure_diagram(1, 2).unwrap();
    assert!(d.find_shells().is_empty());
    assert!(matches!(d.remove_shell(0), Err(Error::NotAShell(0))));
}

#[test]
fn figure_three_has_no_spur_to_remove() {
    let d = figure_diagram(3, 2).unwrap();
    assert!(d.find_spurs().is_empty());
    assert!(d.find_shells().is_empty());
    assert!((0..d.num_vertices()).all(|v| d.remove_spur(v).is_err()));
}

#[test]
fn figure_one_cutcells() {
    let d = figure_diagram(1, 2).unwrap();
    let mut def1: Vec<usize> = d
        .find_cutcells(1)
        .iter()
        .map(|w| match w.site {
            Site::Face(f) => f,
            _ => unreachable!(),
        })
        .collect();
    def1.sort_unstable();
    assert_eq!(def1.len(), 4);
    assert!(def1.iter().all(|&f| d.face_word(f).len() == 5));
    assert!(d.find_cutcells(2).is_empty());
    assert!(d.find_cutcells(3).is_empty());
}

#[test]
fn figure_three_face_r() {
    let d = figure_diagram(3, 2).unwrap();
    let r = crate::gallery::figure3_face_r();
    assert!(d.is_cutcell(r, 1));
    assert!(d.is_cutcell(r, 2));
    assert!(!d.is_cutcell(r, 3));
    assert!(d.find_cutcells(3).is_empty());
}

#[test]
fn two_pentagons_at_a_vertex() {
    let p = thm2();
    let pent = cell_diagram(&word(&p, "ABabc"));
    let mut b = DiagramBuilder::new();
    let hub = b.vertex();
    for _ in 0..2 {
        let vs = [hub, b.vertex(), b.vertex(), b.vertex(), b.vertex()];
        b.polygon(&vs, pent.face_word(0).letters());
    }
    let d = b.build().unwrap();
    assert!(d.validate(&presentation_complex(&p)).is_valid());
    assert!(!d.is_topological_disk());
    let pieces = d.disk_pieces();
    assert_eq!(pieces.len(), 2);
    assert!(pieces.iter().all(|q| q.is_topological_disk() && q.area() == 1));
}

#[test]
fn disk_is_its_own_piece_and_trees_have_none() {
    let d = figure_diagram(1, 2).unwrap();
    let pieces = d.disk_pieces();
    assert_eq!(pieces.len(), 1);
    assert!(pieces[0].is_isomorphic(&d));
    assert!(single_edge().disk_pieces().is_empty());
}

#[test]
fn lift_of_a_pentagon() {
    let (p, m) = presentation(GalleryId::Thm2);
    let d = cell_diagram(&word(&p, "ABabc"));
    let path = d.boundary_path();
    let base = d.origin(path.darts[0]);
    let lift = d.vertex_lift(&m, Some(base)).unwrap();
    assert!(lift[base].is_identity());
    for &x in &path.darts {
        let step = m.letter_image(d.label(x)).unwrap();
        assert_eq!(lift[d.head(x)], lift[d.origin(x)].mul(&step));
    }
}

#[test]
fn figure_three_outer_corners() {
    let (_, m) = presentation(GalleryId::Eq1);
    let d = figure_diagram(3, 2).unwrap();
    let coords = crate::gallery::torus_coordinates(&d, &m).unwrap();
    let mut xs: Vec<(i64, i64)> = d.outer_cycle().iter().map(|&x| coords[d.origin(x)]).collect();
    let (minx, miny) = (xs.iter().map(|c| c.0).min().unwrap(), xs.iter().map(|c| c.1).min().unwrap());
    for c in &mut xs {
        *c = (c.0 - minx, c.1 - miny);
    }
    for corner in [(0, 0), (2, 0), (2, 2), (0, 2)] {
        assert!(xs.contains(&corner), "{corner:?} missing from {xs:?}");
    }
}

#[test]
fn mislabelled_face_fails_to_lift() {
    let (p, m) = presentation(GalleryId::Thm2);
    let d = cell_diagram(&word(&p, "ABabb"));
    assert!(!d.is_valid(&presentation_complex(&p)));
    assert!(d.vertex_lift(&m, None).is_err());
}

#[test]
fn mirror_and_canonical_code() {
    let d = pentagon_with_monogon();
    let m = d.mirror();
    assert!(m.validate_structure().is_valid());
    assert_eq!(d.canonical_code(), m.canonical_code());
    assert_eq!(m.boundary_path().cyclic_word(), d.boundary_path().cyclic_word().inverse());
    assert!(d.is_isomorphic(&m));
}

#[test]
fn json_round_trip() {
    let p = thm2();
    let d = figure_diagram(1, 2).unwrap();
    let j = d.to_json(p.generators());
    let text = serde_json::to_string(&j).unwrap();
    let back: DiagramJson = serde_json::from_str(&text).unwrap();
    let e = DiskDiagram::from_json(&back, p.generators()).unwrap();
    assert!(e.is_isomorphic(&d));
}

#[test]
fn dot_marks_cutcells() {
    let p = thm2();
    let d = figure_diagram(1, 2).unwrap();
    let dot = d.to_dot(p.generators(), &DotOptions::default());
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("color=blue, fontcolor=blue").count(), 4);
}
