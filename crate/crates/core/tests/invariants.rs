use proptest::prelude::*;

use dehn_core::area::{DiagramSearch, RelatorBfs};
use dehn_core::enumerate::{enumerate_diagrams, Enumeration, EnumerationConfig};
use dehn_core::gallery::{presentation, torus_coordinates, GalleryId};
use dehn_core::presentation::presentation_complex;
use dehn_core::word::{cyclic_core, free_reduce};
use dehn_core::{CyclicWord, DiskDiagram, Letter, Word};

fn corpus(id: GalleryId, n: usize) -> Enumeration {
    let (p, _) = presentation(id);
    enumerate_diagrams(&p, &EnumerationConfig::with_max_area(n)).unwrap()
}

const SCAN: [(GalleryId, usize); 5] = [
    (GalleryId::Thm2, 5),
    (GalleryId::Thm1, 4),
    (GalleryId::Eq1, 4),
    (GalleryId::Eq2, 3),
    (GalleryId::TorusT, 5),
];

fn letters(gens: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, any::<bool>()), 0..max_len)
        .prop_map(|v| v.into_iter().map(|(g, inv)| if inv { Letter::neg(g) } else { Letter::pos(g) }).collect())
}

fn concat(u: &Word, v: &Word) -> Word {
    u.letters().iter().chain(v.letters()).copied().collect()
}

proptest! {
    #[test]
    fn free_reduce_is_idempotent(w in letters(3, 24)) {
        let r = free_reduce(&w);
        prop_assert!(r.is_freely_reduced());
        prop_assert_eq!(free_reduce(&r), r);
    }

    #[test]
    fn cyclic_core_conjugates_back(w in letters(3, 24)) {
        let (core, x) = cyclic_core(&w);
        prop_assert!(core.is_cyclically_reduced());
        let back = concat(&concat(&x, &core), &x.inverse());
        prop_assert_eq!(free_reduce(&back), free_reduce(&w));
    }

    #[test]
    fn cyclic_word_forgets_rotation(w in letters(3, 16), k in 0usize..16) {
        prop_assume!(!w.is_empty());
        let k = k % w.len();
        prop_assert_eq!(CyclicWord::new(&w.rotated(k)), CyclicWord::new(&w));
    }

    #[test]
    fn normal_form_is_a_homomorphism(u in letters(7, 14), v in letters(7, 14)) {
        let (_, m) = presentation(GalleryId::Thm1);
        let nu = m.normal_form(&u).unwrap();
        let nv = m.normal_form(&v).unwrap();
        prop_assert_eq!(m.normal_form(&concat(&u, &v)).unwrap(), nu.mul(&nv));
        prop_assert_eq!(m.normal_form(&u.inverse()).unwrap(), nu.inverse());
        prop_assert_eq!(m.normal_form(&free_reduce(&u)).unwrap(), nu);
    }

    #[test]
    fn relator_conjugates_are_trivial(x in letters(7, 10), i in 0usize..2, k in 0usize..9) {
        let (p, m) = presentation(GalleryId::Thm1);
        let r = &p.relators()[i];
        let w = concat(&concat(&x, &r.rotated(k % r.len())), &x.inverse());
        prop_assert!(m.is_trivial(&w).unwrap());
        prop_assert_eq!(m.doubled_areas(&r.rotated(k % r.len())).unwrap(), m.doubled_areas(r).unwrap());
    }
}

#[test]
fn euler_and_boundary_parity() {
    for (id, n) in SCAN {
        let (p, m) = presentation(id);
        let x = presentation_complex(&p);
        for d in corpus(id, n).iter() {
            let r = d.validate(&x);
            assert!(r.is_valid(), "{id}: {:?}", r.issues);
            assert_eq!(r.vertices as i64 - r.edges as i64 + r.faces as i64, 2);
            let cells: usize = d.inner_faces().map(|f| d.face_cycle(f).len()).sum();
            assert_eq!(d.perimeter() % 2, cells % 2, "{id}");
            assert!(m.is_trivial(&d.boundary_word()).unwrap());
        }
    }
}

#[test]
fn cutcell_definitions_are_nested() {
    for (id, n) in SCAN {
        for d in corpus(id, n).iter() {
            for f in d.inner_faces() {
                if d.is_cutcell(f, 3) {
                    assert!(d.is_cutcell(f, 2), "{id}: def 3 without def 2");
                }
                if d.is_topological_disk() && d.is_cutcell(f, 2) {
                    assert!(d.is_cutcell(f, 1), "{id}: def 2 without def 1 on a disk");
                }
            }
        }
    }
}

#[test]
fn torus_coordinates_follow_labels() {
    for id in [GalleryId::Thm1, GalleryId::Eq1, GalleryId::TorusT] {
        let (_, m) = presentation(id);
        for d in corpus(id, 3).iter() {
            let c = torus_coordinates(d, &m).unwrap();
            for x in 0..d.num_darts() as u32 {
                let v = m.project_z2(&Word::from_iter([d.label(x)])).unwrap();
                let (a, b) = (c[d.origin(x)], c[d.head(x)]);
                assert_eq!((b.0 - a.0, b.1 - a.1), (v.x, v.y), "{id}");
            }
        }
    }
}

#[test]
fn json_round_trip_over_corpus() {
    for (id, n) in [(GalleryId::Thm2, 4), (GalleryId::Thm1, 3)] {
        let (p, _) = presentation(id);
        for d in corpus(id, n).iter() {
            let back = DiskDiagram::from_json(&d.to_json(p.generators()), p.generators()).unwrap();
            assert!(back.is_isomorphic(d));
        }
    }
}

#[test]
fn area_oracles_agree_on_corpus_boundaries() {
    for (id, n) in [(GalleryId::Thm2, 4), (GalleryId::Thm1, 3), (GalleryId::Eq1, 3), (GalleryId::Eq2, 3), (GalleryId::TorusT, 4)] {
        let (p, m) = presentation(id);
        let e = corpus(id, n);
        let mut ds = DiagramSearch::new(&e, &m);
        let bfs = RelatorBfs::new(&p, Some(&m), n).unwrap();
        for d in e.iter() {
            let w = d.boundary_word();
            let a = ds.area(&w).unwrap();
            let b = bfs.area(&w).unwrap();
            assert!(a.certified_exact && b.certified_exact, "{id} {} {a:?} {b:?}", p.format_word(&w));
            assert_eq!(a.value, b.value, "{id} {}", p.format_word(&w));
            assert!(a.value.unwrap() <= d.area());
        }
    }
}
