use dehn_core::gallery::{presentation, GalleryId};
use dehn_core::group::cell_embeds;
use dehn_core::props::{
    check_cells_embed, check_pieces, f_values, has_big_pieces, pieces, verify_proposition_bound,
};

/// `f(n)` straight from the recursion: try every multiset of parts
/// `1 <= n_i < n` with `sum n_i <= n + c`.
fn f_brute(c: usize, n: usize, memo: &mut Vec<Option<u64>>) -> u64 {
    if n == 0 {
        return 0;
    }
    if let Some(v) = memo[n] {
        return v;
    }
    fn best(part_max: usize, budget: usize, fs: &[u64]) -> u64 {
        let mut b = 0;
        for part in 1..=part_max.min(budget) {
            b = b.max(fs[part] + best(part, budget - part, fs));
        }
        b
    }
    let fs: Vec<u64> = (0..n).map(|k| f_brute(c, k, memo)).collect();
    let v = 1 + best(n - 1, n + c, &fs);
    memo[n] = Some(v);
    v
}

#[test]
fn dp_matches_brute_force_recursion() {
    for c in 1..=6 {
        let dp = f_values(c, 12).unwrap().values;
        let mut memo = vec![None; 13];
        let brute: Vec<u64> = (0..=12).map(|n| f_brute(c, n, &mut memo)).collect();
        assert_eq!(dp, brute, "c = {c}");
    }
}

#[test]
fn small_values_by_hand() {
    // c = 1: f(2) = 1 + 3 f(1), f(3) = 1 + max(4 f(1), 2 f(2))
    let f = f_values(1, 3).unwrap().values;
    assert_eq!(f, vec![0, 1, 4, 9]);
}

#[test]
fn f_tail_is_arithmetic_for_small_c() {
    for c in 1..=6 {
        let r = verify_proposition_bound(c, 30).unwrap();
        assert!(r.holds(), "c = {c}: {r:?}");
        assert_eq!(r.slope, r.values[c + 2] - r.values[c + 1]);
        assert_eq!(r.k + 1, r.slope);
    }
    assert!(verify_proposition_bound(3, 4).is_err());
    assert!(f_values(0, 5).is_err());
}

#[test]
fn embedding_of_gallery_cells() {
    for id in [GalleryId::Thm1, GalleryId::Eq1] {
        let (p, m) = presentation(id);
        for r in p.relators() {
            assert!(cell_embeds(r, &m).unwrap(), "{id}: {}", p.format_word(r));
        }
        assert!(check_cells_embed(&p, &m).unwrap().holds());
    }
    let (p, m) = presentation(GalleryId::Thm2);
    assert!(!cell_embeds(&p.relators()[0], &m).unwrap());
    assert!(cell_embeds(&p.relators()[1], &m).unwrap());
    assert_eq!(check_cells_embed(&p, &m).unwrap().violations.len(), 1);
}

#[test]
fn pieces_of_gallery_presentations() {
    let (p, _) = presentation(GalleryId::Eq2);
    assert!(!has_big_pieces(&p));
    assert!(check_pieces(&p).holds());

    let (p, _) = presentation(GalleryId::Thm1);
    assert!(has_big_pieces(&p));
    let c123 = p.parse_word("c1c2c3").unwrap();
    let witness = pieces(&p).into_iter().find(|q| q.big && q.word == c123).expect("c1c2c3 is a big piece");
    assert_ne!(witness.sites.0.relator, witness.sites.1.relator);
}
