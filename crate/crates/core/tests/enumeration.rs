use std::collections::BTreeSet;

use real_schemes::classify::{
    classify_cubic_degree2, classify_ellipsoid, enumerate_forests, forest_counts, forest_levels, levels_text,
    sphere_coloring, Filter,
};
use real_schemes::model::{Carrier, SurfaceModel};
use real_schemes::parallel::Execution;
use real_schemes::scheme::{parse_scheme, regions, two_coloring};

/// Rooted unlabeled trees on `n` nodes, by the Euler transform recurrence
/// `a(n+1) = (1/n) Σ_{k=1..n} (Σ_{d|k} d a(d)) a(n−k+1)`.
fn rooted_trees(max: usize) -> Vec<u64> {
    let mut a = vec![0u64; max + 1];
    a[1] = 1;
    for n in 1..max {
        let mut total = 0u64;
        for k in 1..=n {
            let s: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * a[d]).sum();
            total += s * a[n - k + 1];
        }
        a[n + 1] = total / n as u64;
    }
    a
}

#[test]
fn forest_counts_match_recurrence() {
    let trees = rooted_trees(13);
    let counts = forest_counts(12).unwrap();
    for n in 0..=12 {
        // a forest of n ovals is a rooted tree on n + 1 nodes
        assert_eq!(counts[&n] as u64, trees[n + 1], "n = {n}");
    }
    assert_eq!(trees[13], 12486);
}

#[test]
fn enumeration_is_canonical_and_complete() {
    for n in 0..=8 {
        let texts: Vec<String> = enumerate_forests(n, Carrier::Sphere).unwrap().iter().map(|s| s.to_string()).collect();
        let unique: BTreeSet<&String> = texts.iter().collect();
        assert_eq!(unique.len(), texts.len());
        for t in &texts {
            let s = parse_scheme(t).unwrap();
            assert_eq!(s.oval_count(), n);
            assert_eq!(&s.to_string(), t);
        }
    }
}

#[test]
fn region_sums_up_to_ten_ovals() {
    let model = SurfaceModel::ellipsoid(5).unwrap();
    for n in 0..=10 {
        for l in forest_levels(n).unwrap() {
            let text = levels_text(&l);
            let s = parse_scheme(&text).unwrap();
            let d = regions(&s, &model).unwrap();
            assert_eq!(d.regions.iter().map(|r| r.chi).sum::<i64>(), 2);
            let c = two_coloring(&s, &model).unwrap();
            assert_eq!(c.chi1 + c.chi2, 2);
            assert_eq!(sphere_coloring(&l), (c.chi1, c.chi2), "{text}");
        }
    }
}

#[test]
fn adding_filters_never_grows_the_survivors() {
    let survivors = |filters: &[Filter]| -> BTreeSet<String> {
        classify_ellipsoid(3, None, Some(filters), Execution::Sequential)
            .unwrap()
            .admissible()
            .map(|r| r.scheme.clone())
            .collect()
    };
    let chain = [vec![Filter::Harnack], vec![Filter::Harnack, Filter::Ellipsoid]];
    assert!(survivors(&chain[1]).is_subset(&survivors(&chain[0])));

    let cubic = |filters: &[Filter]| -> BTreeSet<String> {
        classify_cubic_degree2(Some(filters), Execution::Sequential)
            .unwrap()
            .admissible()
            .map(|r| r.scheme.clone())
            .collect()
    };
    let a = cubic(&[Filter::Harnack]);
    let b = cubic(&[Filter::Harnack, Filter::Theorem1]);
    let c = cubic(&[Filter::Harnack, Filter::Theorem1, Filter::Projective]);
    assert!(b.is_subset(&a) && c.is_subset(&b));
    assert!(c.len() < a.len());
}

#[test]
fn runs_are_deterministic() {
    let a = serde_json::to_string(&classify_cubic_degree2(None, Execution::Parallel).unwrap()).unwrap();
    let b = serde_json::to_string(&classify_cubic_degree2(None, Execution::Sequential).unwrap()).unwrap();
    assert_eq!(a, b);
}
