//! Brute-force cross-check of the diagram enumerator.
//!
//! The oracle picks a multiset of oriented cells, pairs up inner darts with
//! inverse labels in every possible way, rebuilds the outer cycle by walking
//! vertex fans and keeps the reduced topological disks. Its isomorphism
//! classes must equal the enumerator's, area by area.

use std::collections::BTreeSet;

use dehn_core::diagram::{CanonicalCode, Dart};
use dehn_core::enumerate::{enumerate_diagrams, EnumerationConfig};
use dehn_core::gallery::{presentation, GalleryId};
use dehn_core::{DiskDiagram, Letter, Word};

/// Multisets of size `n` drawn from `0..k`, as nondecreasing sequences.
fn multisets(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, n: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in from..k {
            cur.push(i);
            go(k, n, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, n, 0, &mut Vec::new(), &mut out);
    out
}

/// Outer cycle for free inner darts: from free dart `x`, step backwards
/// around `origin(x)` through the faces until the next free dart appears.
fn outer_cycles(
    faces: &[Vec<Dart>],
    face_of: &[usize],
    pos: &[usize],
    partner: &[Option<Dart>],
) -> Option<Vec<Vec<Dart>>> {
    let n = partner.len();
    let prev = |d: Dart| {
        let f = &faces[face_of[d as usize]];
        f[(pos[d as usize] + f.len() - 1) % f.len()]
    };
    // outer dart opposite to free dart x is numbered n + rank(x)
    let free: Vec<Dart> = (0..n as Dart).filter(|&d| partner[d as usize].is_none()).collect();
    let mut rank = vec![usize::MAX; n];
    for (i, &d) in free.iter().enumerate() {
        rank[d as usize] = i;
    }
    let mut next_free = vec![0 as Dart; n];
    for &x in &free {
        let mut u = x;
        let mut steps = 0;
        loop {
            let p = prev(u);
            match partner[p as usize] {
                None => {
                    next_free[x as usize] = p;
                    break;
                }
                Some(o) => u = o,
            }
            steps += 1;
            if steps > n {
                return None;
            }
        }
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for &x in &free {
        if seen[x as usize] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut y = x;
        while !seen[y as usize] {
            seen[y as usize] = true;
            cyc.push((n + rank[y as usize]) as Dart);
            y = next_free[y as usize];
        }
        cycles.push(cyc);
    }
    Some(cycles)
}

fn oracle(cells: &[Word], area: usize) -> BTreeSet<CanonicalCode> {
    let mut found = BTreeSet::new();
    for pick in multisets(cells.len(), area) {
        let mut faces: Vec<Vec<Dart>> = Vec::new();
        let mut labels: Vec<Letter> = Vec::new();
        let mut face_of = Vec::new();
        let mut pos = Vec::new();
        for &c in &pick {
            let start = labels.len() as Dart;
            faces.push((0..cells[c].len() as Dart).map(|i| start + i).collect());
            for (i, &l) in cells[c].letters().iter().enumerate() {
                labels.push(l);
                face_of.push(faces.len() - 1);
                pos.push(i);
            }
        }
        let n = labels.len();
        let mut partner: Vec<Option<Dart>> = vec![None; n];
        let mut decided = vec![false; n];
        match_darts(0, &labels, &mut partner, &mut decided, &mut |partner| {
            let Some(outer) = outer_cycles(&faces, &face_of, &pos, partner) else { return };
            if outer.len() != 1 {
                return;
            }
            let free: Vec<Dart> = (0..n as Dart).filter(|&d| partner[d as usize].is_none()).collect();
            let mut opposite: Vec<Dart> = (0..n).map(|d| partner[d].unwrap_or(0)).collect();
            let mut all_labels = labels.clone();
            for (i, &x) in free.iter().enumerate() {
                opposite[x as usize] = (n + i) as Dart;
            }
            for &x in &free {
                opposite.push(x);
                all_labels.push(labels[x as usize].inv());
            }
            let mut all_faces = faces.clone();
            all_faces.push(outer[0].clone());
            let Ok(d) = DiskDiagram::from_cycles(opposite, all_labels, all_faces, faces.len()) else { return };
            if d.validate_structure().is_valid() && d.is_topological_disk() && d.is_reduced().is_ok() {
                found.insert(d.canonical_code());
            }
        });
    }
    found
}

/// Every partial matching of darts with inverse labels.
fn match_darts(
    i: usize,
    labels: &[Letter],
    partner: &mut Vec<Option<Dart>>,
    decided: &mut Vec<bool>,
    visit: &mut dyn FnMut(&[Option<Dart>]),
) {
    if i == labels.len() {
        visit(partner);
        return;
    }
    if decided[i] {
        match_darts(i + 1, labels, partner, decided, visit);
        return;
    }
    decided[i] = true;
    match_darts(i + 1, labels, partner, decided, visit);
    for j in i + 1..labels.len() {
        if !decided[j] && labels[j] == labels[i].inv() {
            decided[j] = true;
            partner[i] = Some(j as Dart);
            partner[j] = Some(i as Dart);
            match_darts(i + 1, labels, partner, decided, visit);
            partner[i] = None;
            partner[j] = None;
            decided[j] = false;
        }
    }
    decided[i] = false;
}

fn check(id: GalleryId, max_area: usize) {
    let (p, _) = presentation(id);
    let cells: Vec<Word> = p.relators().iter().flat_map(|r| [r.clone(), r.inverse()]).collect();
    let e = enumerate_diagrams(&p, &EnumerationConfig::with_max_area(max_area)).unwrap();
    for n in 1..=max_area {
        let ours: BTreeSet<CanonicalCode> = e.at_area(n).iter().map(DiskDiagram::canonical_code).collect();
        assert_eq!(ours.len(), e.at_area(n).len(), "{id} area {n}: duplicate classes");
        let theirs = oracle(&cells, n);
        assert_eq!(ours, theirs, "{id} area {n}: {} enumerated vs {} by brute force", ours.len(), theirs.len());
    }
}

#[test]
fn thm2_up_to_area_4() {
    check(GalleryId::Thm2, 4);
}

#[test]
fn eq1_up_to_area_4() {
    check(GalleryId::Eq1, 4);
}

#[test]
fn torus_up_to_area_4() {
    check(GalleryId::TorusT, 4);
}

#[test]
fn thm1_up_to_area_3() {
    check(GalleryId::Thm1, 3);
}

#[test]
fn eq2_up_to_area_3() {
    check(GalleryId::Eq2, 3);
}
