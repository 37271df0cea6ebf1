use std::collections::HashSet;

use linksgould::hecke::words::b4_4;

fn parse(line: &str) -> Vec<i32> {
    let inner = line.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.is_empty() {
        return vec![];
    }
    inner.split(',').map(|x| x.trim().parse().unwrap()).collect()
}

#[test]
fn free_family_matches_listing() {
    let listing: Vec<Vec<i32>> = include_str!("data/lmots.txt").lines().map(parse).collect();
    assert_eq!(listing.len(), 145);
    // the listing carries four extra five-letter words appended after the free family
    let extra: HashSet<Vec<i32>> =
        [vec![3, -2, 1, -2, 3], vec![3, -2, 1, -2, -3], vec![-3, -2, 1, -2, 3], vec![-3, -2, 1, -2, -3]].into_iter().collect();
    let listed: HashSet<Vec<i32>> = listing.into_iter().filter(|w| !extra.contains(w)).collect();
    let ours: HashSet<Vec<i32>> = b4_4().into_iter().collect();
    assert_eq!(ours.len(), 141);
    assert_eq!(listed, ours);
}
