//! Generation of nesting forests of `n` ovals.
//!
//! A forest of `n` ovals is a rooted tree on `n + 1` nodes with the root
//! removed. Trees are produced as canonical level sequences in the order of
//! Beyer and Hedetniemi, each isomorphism class exactly once.

use std::collections::BTreeMap;

use crate::model::Carrier;
use crate::scheme::{Forest, Oval, RealScheme};

use super::ClassifyError;

/// Largest oval count accepted by the generator.
pub const MAX_OVALS: usize = 20;

/// Level sequences of rooted trees on `nodes` nodes, root at level 1.
#[derive(Debug, Clone)]
pub struct LevelSequences {
    current: Option<Vec<u8>>,
}

impl LevelSequences {
    pub fn new(nodes: usize) -> Self {
        let current = (nodes > 0).then(|| (1..=nodes as u8).collect());
        LevelSequences { current }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let out = self.current.take()?;
        if let Some(p) = out.iter().rposition(|&l| l > 2) {
            let q = out[..p].iter().rposition(|&l| l == out[p] - 1).expect("parent precedes node");
            let mut next = out.clone();
            for i in p..next.len() {
                next[i] = next[i - (p - q)];
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Forests of `n` unsigned ovals, as level sequences of the ovals (depth 1
/// for outermost ovals) in preorder.
pub fn forest_levels(n: usize) -> Result<impl Iterator<Item = Vec<u8>>, ClassifyError> {
    if n > MAX_OVALS {
        return Err(ClassifyError::Guard { n, max: MAX_OVALS });
    }
    Ok(LevelSequences::new(n + 1).map(|seq| seq[1..].iter().map(|l| l - 1).collect()))
}

/// Builds the forest described by a preorder depth sequence.
pub fn forest_from_levels(levels: &[u8]) -> Forest {
    fn build(levels: &[u8], pos: &mut usize, depth: u8) -> Forest {
        let mut ovals = Vec::new();
        while *pos < levels.len() && levels[*pos] == depth {
            *pos += 1;
            let interior = build(levels, pos, depth + 1);
            ovals.push(Oval::with_interior(None, interior));
        }
        Forest::new(ovals)
    }
    let mut pos = 0;
    build(levels, &mut pos, 1)
}

/// Canonical text of the forest with the given depth sequence.
pub fn levels_text(levels: &[u8]) -> String {
    forest_from_levels(levels).canonicalize()
}

/// Euler characteristics `(χ₁, χ₂)` of the checkerboard coloring on the
/// sphere, color 1 containing the outer region: `χ₂` counts ovals of odd
/// depth minus ovals of even depth.
pub fn sphere_coloring(levels: &[u8]) -> (i64, i64) {
    let odd = levels.iter().filter(|&&l| l % 2 == 1).count() as i64;
    let even = levels.len() as i64 - odd;
    (2 - (odd - even), odd - even)
}

/// All schemes of `n` ovals on one surface component of the given carrier.
/// Ovals bound disks, so the forests are the same for every carrier.
pub fn enumerate_forests(n: usize, carrier: Carrier) -> Result<Vec<RealScheme>, ClassifyError> {
    let _ = carrier;
    let mut out: Vec<RealScheme> = forest_levels(n)?
        .map(|l| RealScheme::from_forest(forest_from_levels(&l)).expect("unsigned forests are valid"))
        .collect();
    out.sort_by_cached_key(|s| s.to_string());
    Ok(out)
}

/// Canonical code of the region tree of a forest on the sphere. Two
/// forests are equivalent on the sphere, where there is no distinguished
/// outer region, iff their codes agree.
pub fn sphere_class(levels: &[u8]) -> String {
    // node 0 is the outer region, node i + 1 the inside of oval i
    let n = levels.len() + 1;
    let mut adj = vec![Vec::new(); n];
    let mut stack = vec![0usize];
    for (i, &l) in levels.iter().enumerate() {
        stack.truncate(l as usize);
        let parent = *stack.last().expect("root on stack");
        adj[parent].push(i + 1);
        adj[i + 1].push(parent);
        stack.push(i + 1);
    }
    centers(&adj).into_iter().map(|c| rooted_code(&adj, c, usize::MAX)).min().expect("a tree has a center")
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= leaves.len();
        let mut next = Vec::new();
        for &leaf in &leaves {
            for &w in &adj[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        leaves = next;
    }
    leaves.sort_unstable();
    leaves
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| rooted_code(adj, w, v)).collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// Number of forests per oval count, `0..=n`, read off the generator.
pub fn forest_counts(n: usize) -> Result<BTreeMap<usize, usize>, ClassifyError> {
    (0..=n).map(|k| Ok((k, forest_levels(k)?.count()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::SurfaceModel;
    use crate::scheme::{parse_scheme, two_coloring};

    fn texts(n: usize) -> Vec<String> {
        enumerate_forests(n, Carrier::Sphere).unwrap().iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(texts(0), vec!["0"]);
        assert_eq!(texts(1), vec!["1"]);
        assert_eq!(texts(3), vec!["1<1<1>>", "1<2>", "1u1<1>", "3"]);
        assert!(matches!(enumerate_forests(21, Carrier::Sphere), Err(ClassifyError::Guard { .. })));
    }

    #[test]
    fn no_duplicates() {
        for n in 0..=8 {
            let t = texts(n);
            let set: std::collections::BTreeSet<_> = t.iter().collect();
            assert_eq!(set.len(), t.len());
            assert!(t.iter().all(|s| parse_scheme(s).unwrap().oval_count() == n));
        }
    }

    #[test]
    fn coloring_shortcut_matches_regions() {
        let model = SurfaceModel::ellipsoid(5).unwrap();
        for n in 0..=7 {
            for l in forest_levels(n).unwrap() {
                let s = RealScheme::from_forest(forest_from_levels(&l)).unwrap();
                let c = two_coloring(&s, &model).unwrap();
                assert_eq!(sphere_coloring(&l), (c.chi1, c.chi2));
            }
        }
    }

    #[test]
    fn sphere_classes() {
        let code = |s: &str| {
            let n = parse_scheme(s).unwrap().oval_count();
            forest_levels(n).unwrap().find(|l| levels_text(l) == s).map(|l| sphere_class(&l)).unwrap()
        };
        // re-rooting at an inner disk
        assert_eq!(code("3u1<1>"), code("1<1<3>>"));
        assert_eq!(code("1u1<1>"), code("1<1<1>>"));
        assert_eq!(code("3"), code("1<2>"));
        assert_ne!(code("3"), code("1u1<1>"));
        // unrooted trees on 4, 5 and 6 nodes
        for (n, classes) in [(3, 2), (4, 3), (5, 6)] {
            let set: std::collections::BTreeSet<_> = forest_levels(n).unwrap().map(|l| sphere_class(&l)).collect();
            assert_eq!(set.len(), classes);
        }
    }
}
